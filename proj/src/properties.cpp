#include "veronormal/properties.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "veronormal/curves.hpp"
#include "veronormal/p1split.hpp"
#include "veronormal/veronese.hpp"

namespace veronormal {

HomPoly random_poly(SplitMix64& rng, int num_vars, int degree, int max_terms) {
  const auto basis = monomials(num_vars, degree);
  HomPoly p(num_vars, degree);
  const long terms = rng.uniform(1, max_terms);
  for (long k = 0; k < terms; ++k) {
    const auto& m = basis[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(basis.size()) - 1))];
    p.add_term(m, rng.uniform(-5, 5));
  }
  return p;
}

GradedMap random_graded_map(SplitMix64& rng, int num_vars, const std::vector<int>& source,
                            const std::vector<int>& target) {
  GradedMap f(num_vars, source, target);
  for (std::size_t i = 0; i < target.size(); ++i) {
    for (std::size_t j = 0; j < source.size(); ++j) {
      const int deg = target[i] - source[j];
      if (deg < 0 || rng.uniform(0, 3) == 0) continue;
      f.set_entry(i, j, random_poly(rng, num_vars, deg, 4));
    }
  }
  return f;
}

namespace {

std::vector<int> random_twists(SplitMix64& rng, int count) {
  std::vector<int> t;
  for (int k = 0; k < count; ++k) t.push_back(static_cast<int>(rng.uniform(-2, 2)));
  return t;
}

void record_failure(PropertyResult& r, const std::string& what) {
  if (r.failures == 0) r.first_failure = what;
  ++r.failures;
}

}  // namespace

GradedMap random_bundle_presentation(SplitMix64& rng, std::string& label) {
  std::ostringstream os;
  const long kind = rng.uniform(0, 2);
  const std::uint64_t curve_seed = rng.next() % 1000 + 1;
  const bool use_rnc = rng.uniform(0, 2) == 0;
  GradedMap pres;
  int n = 1;
  if (kind == 0) {
    n = static_cast<int>(rng.uniform(1, 3));
    const int d = static_cast<int>(rng.uniform(2, 3));
    pres = normal_presentation(VeroneseContext(n, d));
    os << "normal(" << n << "," << d << ")";
  } else if (kind == 1) {
    n = static_cast<int>(rng.uniform(1, 4));
    pres = tangent_presentation(n);
    os << "tangent(" << n << ")";
  } else {
    n = static_cast<int>(rng.uniform(1, 3));
    const int d = static_cast<int>(rng.uniform(2, 3));
    const int i = static_cast<int>(rng.uniform(1, d));
    pres = dual(delta_matrix(VeroneseContext(n, d), i));
    os << "dual_delta(" << n << "," << d << "," << i << ")";
  }
  const bool rnc_ok = use_rnc && n <= 3 && kind != 0;
  const CurveParam c = rnc_ok ? rnc(n, curve_seed) : random_line(n, curve_seed);
  os << (rnc_ok ? " on rnc seed " : " on line seed ") << curve_seed;
  label = os.str();
  return pullback(pres, c);
}

PropertyResult check_euler_identity(int count, std::uint64_t seed) {
  PropertyResult r{"euler identity", 0, 0, {}};
  SplitMix64 rng(seed);
  for (int k = 0; k < count; ++k, ++r.instances) {
    const int vars = static_cast<int>(rng.uniform(1, 4));
    const int deg = static_cast<int>(rng.uniform(0, 5));
    const HomPoly p = random_poly(rng, vars, deg);
    HomPoly lhs(vars, deg);
    for (int i = 0; i < vars; ++i) lhs += multiply(HomPoly::variable(vars, i), differentiate(p, i));
    if (!(lhs == p * Rat(deg))) record_failure(r, to_string(p));
  }
  return r;
}

PropertyResult check_substitution_homomorphism(int count, std::uint64_t seed) {
  PropertyResult r{"substitution homomorphism", 0, 0, {}};
  SplitMix64 rng(seed);
  for (int k = 0; k < count; ++k, ++r.instances) {
    const int vars = static_cast<int>(rng.uniform(1, 4));
    const HomPoly p = random_poly(rng, vars, static_cast<int>(rng.uniform(0, 3)));
    const HomPoly q = random_poly(rng, vars, static_cast<int>(rng.uniform(0, 3)));
    const int e = static_cast<int>(rng.uniform(1, 3));
    std::vector<HomPoly> forms;
    for (int i = 0; i < vars; ++i) forms.push_back(random_poly(rng, 2, e, 3));
    for (auto& f : forms)
      if (f.is_zero()) f = HomPoly(2, e);
    const HomPoly lhs = substitute(multiply(p, q), forms);
    const HomPoly rhs = multiply(substitute(p, forms), substitute(q, forms));
    if (!(lhs == rhs)) record_failure(r, to_string(p) + " ; " + to_string(q));
  }
  return r;
}

PropertyResult check_stratum_functoriality(int count, std::uint64_t seed) {
  PropertyResult r{"stratum functoriality", 0, 0, {}};
  SplitMix64 rng(seed);
  for (int k = 0; k < count; ++k, ++r.instances) {
    const int vars = static_cast<int>(rng.uniform(2, 3));
    const auto s = random_twists(rng, static_cast<int>(rng.uniform(1, 3)));
    const auto mid = random_twists(rng, static_cast<int>(rng.uniform(1, 3)));
    const auto t = random_twists(rng, static_cast<int>(rng.uniform(1, 3)));
    const GradedMap f = random_graded_map(rng, vars, s, mid);
    const GradedMap g = random_graded_map(rng, vars, mid, t);
    const int m = static_cast<int>(rng.uniform(-2, 4));
    if (!(stratum(compose(g, f), m) == stratum(g, m) * stratum(f, m))) {
      record_failure(r, "instance " + std::to_string(k) + " at m = " + std::to_string(m));
    }
  }
  return r;
}

PropertyResult check_pullback_compose(int count, std::uint64_t seed) {
  PropertyResult r{"pullback commutes with compose", 0, 0, {}};
  SplitMix64 rng(seed);
  for (int k = 0; k < count; ++k, ++r.instances) {
    const int n = static_cast<int>(rng.uniform(1, 3));
    const auto s = random_twists(rng, static_cast<int>(rng.uniform(1, 3)));
    const auto mid = random_twists(rng, static_cast<int>(rng.uniform(1, 3)));
    const auto t = random_twists(rng, static_cast<int>(rng.uniform(1, 3)));
    const GradedMap f = random_graded_map(rng, n + 1, s, mid);
    const GradedMap g = random_graded_map(rng, n + 1, mid, t);
    const std::uint64_t cs = rng.next() % 1000;
    const CurveParam c = rng.uniform(0, 1) == 0 ? random_line(n, cs) : rnc(n, cs);
    if (!(pullback(compose(g, f), c) == compose(pullback(g, c), pullback(f, c)))) {
      record_failure(r, "instance " + std::to_string(k));
    }
  }
  return r;
}

PropertyResult check_h0_oracle(int count, std::uint64_t seed) {
  PropertyResult r{"h0 oracle equivalence", 0, 0, {}};
  SplitMix64 rng(seed);
  for (int k = 0; k < count; ++k, ++r.instances) {
    std::string label;
    const GradedMap pres = random_bundle_presentation(rng, label);
    SplittingType st;
    try {
      st = splitting_type(pres);
    } catch (const std::exception& e) {
      record_failure(r, label + ": " + e.what());
      continue;
    }
    const int top = st.degrees.empty() ? 0 : st.degrees.front();
    const int lo = -top - 2;
    const int hi = top + 2;
    const auto predicted = h0_profile(st, lo, hi);
    const int min_source = pres.source_twists().empty()
                               ? 0
                               : *std::min_element(pres.source_twists().begin(), pres.source_twists().end());
    for (int m = lo; m <= hi; ++m) {
      // H^1(F1(m)) = 0 once every source summand has degree >= -1.
      if (m + min_source < -1) continue;
      const QMatrix a = stratum(pres, m);
      const long direct = static_cast<long>(a.rows()) - static_cast<long>(rank(a));
      if (direct != predicted[static_cast<std::size_t>(m - lo)]) {
        record_failure(r, label + " at m = " + std::to_string(m));
        break;
      }
    }
  }
  return r;
}

PropertyResult check_degree_conservation(int count, std::uint64_t seed) {
  PropertyResult r{"degree conservation", 0, 0, {}};
  SplitMix64 rng(seed);
  for (int k = 0; k < count; ++k, ++r.instances) {
    std::string label;
    const GradedMap pres = random_bundle_presentation(rng, label);
    SplittingType st;
    try {
      st = splitting_type(pres);
    } catch (const std::exception& e) {
      record_failure(r, label + ": " + e.what());
      continue;
    }
    const long expected = std::accumulate(pres.target_twists().begin(), pres.target_twists().end(), 0L) -
                          std::accumulate(pres.source_twists().begin(), pres.source_twists().end(), 0L);
    if (st.degree() != expected || st.rank() != pres.rows() - pres.cols()) record_failure(r, label);
  }
  return r;
}

}  // namespace veronormal

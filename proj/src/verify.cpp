#include "veronormal/verify.hpp"

#include <chrono>
#include <filesystem>
#include <sstream>

#include "veronormal/chow.hpp"
#include "veronormal/commands.hpp"
#include "veronormal/curves.hpp"
#include "veronormal/errors.hpp"
#include "veronormal/p1split.hpp"
#include "veronormal/properties.hpp"
#include "veronormal/restrict.hpp"
#include "veronormal/serialize.hpp"
#include "veronormal/splitmix.hpp"
#include "veronormal/symlin.hpp"
#include "veronormal/veronese.hpp"

namespace veronormal {

const char* const kSemistabilityNote =
    "Slope semistability of the Veronese normal bundle for general (n, d) is not decided by this engine. "
    "Criteria C4 (Grauert-Mulich spread and first Chern class on lines), C5 (dual identity identifying the "
    "twisted dual normal bundle with K^{d-1}_d) and C7 (strict slope ordering of the K^i_d tower) are "
    "necessary conditions only.";

Scope parse_scope(const std::string& s) {
  if (s == "fast") return Scope::Fast;
  if (s == "full") return Scope::Full;
  throw MathError("unknown verify scope '" + s + "' (expected fast or full)");
}

namespace {

std::string show(const SplittingType& st) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < st.degrees.size(); ++i) os << (i ? "," : "") << st.degrees[i];
  os << "}";
  return os.str();
}

// Accumulates a pass/fail verdict with the first failure as detail.
struct Tally {
  int checked = 0;
  int failed = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failed++ == 0) first = what;
  }
  CheckResult finish(std::string summary) const {
    CheckResult r;
    r.passed = failed == 0 && checked > 0;
    r.detail = failed == 0 ? std::move(summary) + " (" + std::to_string(checked) + " checks)"
                           : std::to_string(failed) + "/" + std::to_string(checked) + " failed; first: " + first;
    return r;
  }
};

std::vector<CurveParam> degenerate_lines(int n) {
  // Lines through coordinate points and with repeated coefficients.
  std::vector<CurveParam> out;
  const HomPoly s = HomPoly::variable(2, 0);
  const HomPoly t = HomPoly::variable(2, 1);
  const HomPoly zero(2, 1);
  CurveParam last;
  last.degree = 1;
  for (int i = 0; i <= n; ++i) last.forms.push_back(i == n - 1 ? s : i == n ? t : zero);
  out.push_back(last);
  CurveParam sums;
  sums.degree = 1;
  for (int i = 0; i <= n; ++i) sums.forms.push_back(i == 0 ? s : i == 1 ? t : i % 2 == 0 ? s + t : s - t);
  out.push_back(sums);
  CurveParam repeated;
  repeated.degree = 1;
  for (int i = 0; i <= n; ++i) repeated.forms.push_back(i <= n / 2 ? s : t);
  out.push_back(repeated);
  return out;
}

CheckResult c1_rnc_well_balanced(Scope) {
  Tally tally;
  for (int d = 2; d <= 8; ++d) {
    const VeroneseContext ctx(1, d);
    const SplittingType got = restrict_normal(ctx, standard_line(1));
    const SplittingType want(std::vector<int>(static_cast<std::size_t>(d - 1), d + 2));
    tally.expect(got == want, "d=" + std::to_string(d) + " got " + show(got));
  }
  return tally.finish("n=1, d=2..8: normal bundle = O(d+2)^(d-1)");
}

CheckResult c2_quadric_lines(Scope scope) {
  Tally tally;
  for (int n = 2; n <= 5; ++n) {
    const VeroneseContext ctx(n, 2);
    const SplittingType want = expected_quadric_on_line(n);
    std::vector<std::pair<std::string, CurveParam>> lines{{"standard", standard_line(n)}};
    for (std::uint64_t seed = 0; seed < 10; ++seed) lines.emplace_back("seed " + std::to_string(seed), random_line(n, seed));
    if (scope == Scope::Full) {
      int k = 0;
      for (auto& c : degenerate_lines(n)) lines.emplace_back("degenerate " + std::to_string(k++), c);
    }
    for (const auto& [label, line] : lines) {
      const SplittingType got = restrict_normal(ctx, line);
      tally.expect(got == want, "n=" + std::to_string(n) + " " + label + " got " + show(got));
    }
  }
  return tally.finish("d=2, n=2..5: standard + 10 random lines give 4, 3^(n-1), 2^(n(n-1)/2)");
}

CheckResult c3_quadric_rnc(Scope scope) {
  Tally tally;
  const int top = scope == Scope::Full ? 5 : 4;
  for (int n = 2; n <= top; ++n) {
    const VeroneseContext ctx(n, 2);
    const SplittingType want = expected_quadric_on_rnc(n);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const SplittingType got = restrict_normal(ctx, rnc(n, seed));
      tally.expect(got == want, "n=" + std::to_string(n) + " seed " + std::to_string(seed) + " got " + show(got));
    }
  }
  return tally.finish("d=2, n=2.." + std::to_string(top) + ": 5 random rational normal curves give (2n+2)^(n(n+1)/2)");
}

CheckResult c4_grauert_mulich(Scope scope) {
  Tally tally;
  std::vector<std::pair<int, int>> cases{{2, 3}, {2, 4}, {3, 3}};
  if (scope == Scope::Full) {
    cases.emplace_back(2, 5);
    cases.emplace_back(3, 4);
    cases.emplace_back(4, 3);
  }
  for (auto [n, d] : cases) {
    const VeroneseContext ctx(n, d);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const SplittingType got = restrict_normal(ctx, random_line(n, seed));
      const auto rep = gm_check(got, ctx);
      std::ostringstream what;
      what << "(n,d)=(" << n << "," << d << ") seed " << seed << " got " << show(got) << " spread_ok="
           << rep.spread_ok << " sum_ok=" << rep.sum_ok << " rank_ok=" << rep.rank_ok;
      tally.expect(rep.all_ok(), what.str());
    }
  }
  return tally.finish("spread <= 1, sum = C(n+d,d)d-(n+1), rank = C(n+d,d)-n-1 on 10 random lines each");
}

CheckResult c5_dual_identity(Scope scope) {
  Tally tally;
  const int top_n = scope == Scope::Full ? 5 : 4;
  const int top_d = scope == Scope::Full ? 5 : 4;
  std::ostringstream factors;
  for (int n = 1; n <= top_n; ++n) {
    for (int d = 2; d <= top_d; ++d) {
      const auto rep = verify_dual_identity(VeroneseContext(n, d));
      tally.expect(rep.holds, "(n,d)=(" + std::to_string(n) + "," + std::to_string(d) + "): " + rep.diagnostic);
      if (n == 1) factors << " d=" << d << ": " << rep.diagnostic << ";";
    }
  }
  return tally.finish("dual(Theta) vs delta^{d-1}_d for n<=" + std::to_string(top_n) + ", d<=" +
                      std::to_string(top_d) + "; observed rescaling (same for every n):" + factors.str());
}

CheckResult c6_sym_dual_commute(Scope) {
  Tally tally;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SplitMix64 rng(seed);
    const int n = static_cast<int>(rng.uniform(2, 5));
    const int m = static_cast<int>(rng.uniform(1, n - 1));
    const int i = static_cast<int>(rng.uniform(1, 3));
    const auto ses = symlin::random_ses(m, n, seed);
    const auto rep = symlin::check_commute(ses, i);
    std::ostringstream what;
    what << "seed " << seed << " dims (" << m << "," << n << "," << n - m << ") i=" << i
         << " injection_equal=" << rep.injection_equal << " quotient_equal=" << rep.quotient_equal;
    tally.expect(rep.holds(), what.str());
  }
  return tally.finish("100 seeded exact sequences, middle dimension <= 5, i <= 3");
}

CheckResult c7_k_tower(Scope scope) {
  Tally tally;
  for (int n = 1; n <= 8; ++n) {
    for (int d = 2; d <= 8; ++d) {
      const VeroneseContext ctx(n, d);
      Rat prev;
      for (int i = 1; i <= d + 1; ++i) {
        const auto k = k_bundle_stats(ctx, i);
        if (i > 1) tally.expect(prev < k.slope, "(n,d)=(" + std::to_string(n) + "," + std::to_string(d) +
                                                    ") slope not increasing at i=" + std::to_string(i));
        prev = k.slope;
      }
      tally.expect(prev == 0, "(n,d)=(" + std::to_string(n) + "," + std::to_string(d) + ") terminal slope nonzero");
    }
  }
  const int top = scope == Scope::Full ? 4 : 3;
  for (int n = 1; n <= top; ++n) {
    for (int d = 2; d <= top; ++d) {
      if (scope == Scope::Full && n == 4 && d == 4) continue;
      const VeroneseContext ctx(n, d);
      const CurveParam line = random_line(n, static_cast<std::uint64_t>(10 * n + d));
      for (int i = 1; i <= d + 1; ++i) {
        const auto k = k_bundle_stats(ctx, i);
        const SplittingType st = restrict_k_bundle(ctx, i, line);
        std::ostringstream what;
        what << "(n,d,i)=(" << n << "," << d << "," << i << ") line degree " << st.degree() << " rank " << st.rank()
             << " vs closed form " << k.degree.get_str() << ", " << k.rank.get_str();
        tally.expect(BigInt(st.degree()) == k.degree && BigInt(static_cast<long>(st.rank())) == k.rank, what.str());
      }
    }
  }
  return tally.finish("strict slope chain ending at 0 for n,d<=8; K^i_d degree/rank cross-checked on lines for n,d<=" +
                      std::to_string(top));
}

CheckResult c8_tangent(Scope scope) {
  Tally tally;
  const int top = scope == Scope::Full ? 5 : 4;
  for (int n = 2; n <= top; ++n) {
    std::vector<int> line_deg{2};
    for (int k = 0; k < n - 1; ++k) line_deg.push_back(1);
    const SplittingType on_line(line_deg);
    const SplittingType on_rnc(std::vector<int>(static_cast<std::size_t>(n), n + 1));
    std::vector<CurveParam> lines{standard_line(n)};
    for (std::uint64_t seed = 0; seed < 3; ++seed) lines.push_back(random_line(n, seed));
    for (const auto& l : lines) {
      const SplittingType got = restrict_tangent(n, l);
      tally.expect(got == on_line, "n=" + std::to_string(n) + " line got " + show(got));
      tally.expect(sym_square(got) == expected_quadric_on_line(n),
                   "n=" + std::to_string(n) + " sym^2 on line got " + show(sym_square(got)));
    }
    for (std::uint64_t seed = 0; seed <= 3; ++seed) {
      const SplittingType got = restrict_tangent(n, rnc(n, seed));
      tally.expect(got == on_rnc, "n=" + std::to_string(n) + " rnc seed " + std::to_string(seed) + " got " + show(got));
      tally.expect(sym_square(got) == expected_quadric_on_rnc(n),
                   "n=" + std::to_string(n) + " sym^2 on rnc got " + show(sym_square(got)));
    }
  }
  return tally.finish("tangent bundle: {2,1^(n-1)} on lines, {(n+1)^n} on rational normal curves, sym^2 matches");
}

CheckResult c9_properties(Scope scope) {
  const int count = scope == Scope::Full ? 200 : 50;
  const std::vector<PropertyResult> results{
      check_euler_identity(count, 901),        check_substitution_homomorphism(count, 902),
      check_stratum_functoriality(count, 903), check_h0_oracle(count, 904),
      check_degree_conservation(count, 905),   check_pullback_compose(count, 906)};
  Tally tally;
  std::ostringstream summary;
  for (const auto& r : results) {
    tally.expect(r.passed() && r.instances >= 50,
                 r.name + ": " + std::to_string(r.failures) + "/" + std::to_string(r.instances) + " failed, " +
                     r.first_failure);
    summary << r.name << " x" << r.instances << "; ";
  }
  return tally.finish(summary.str());
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> criteria{
      {"C1", "rational normal curve normal bundles are balanced", 30, c1_rnc_well_balanced},
      {"C2", "quadric Veronese normal bundle on lines", 300, c2_quadric_lines},
      {"C3", "quadric Veronese normal bundle on rational normal curves", 600, c3_quadric_rnc},
      {"C4", "Grauert-Mulich spread and Chern degree on random lines", 0, c4_grauert_mulich},
      {"C5", "dual of Theta equals delta^{d-1}_d up to diagonal rescaling", 0, c5_dual_identity},
      {"C6", "symmetrize-then-dualize equals dualize-then-symmetrize", 30, c6_sym_dual_commute},
      {"C7", "K-tower slope chain and line cross-check", 0, c7_k_tower},
      {"C8", "tangent bundle restrictions and their symmetric squares", 0, c8_tangent},
      {"C9", "randomized property suites", 0, c9_properties},
  };
  return criteria;
}

CheckResult run_criterion(const Criterion& c, Scope scope) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = c.run(scope);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.id = c.id;
  r.name = c.name;
  r.budget = c.budget;
  if (r.budget > 0 && r.seconds > r.budget) {
    r.passed = false;
    r.detail += " [exceeded budget of " + std::to_string(static_cast<int>(r.budget)) + " s]";
  }
  return r;
}

std::string default_golden_dir() {
#ifdef VERONORMAL_GOLDEN_DIR
  return VERONORMAL_GOLDEN_DIR;
#else
  return "tests/golden";
#endif
}

std::vector<std::string> golden_file_names() {
  return {"monomials.json",          "random_line_n2_seed0.json", "rnc_n3_seed1.json",     "theta_n1_d3.json",
          "normal_n2_d2.json",       "slopes_n2_d2.json",         "restrict_n2_d3_lines.json",
          "dual_identity_factors.json"};
}

nlohmann::json golden_content(const std::string& name) {
  if (name == "monomials.json") {
    json out = json::object();
    for (auto [k, m] : std::vector<std::pair<int, int>>{{2, 1}, {2, 3}, {3, 2}, {4, 2}, {3, 3}}) {
      out[std::to_string(k) + "," + std::to_string(m)] = monomials(k, m);
    }
    return out;
  }
  if (name == "random_line_n2_seed0.json") return to_json(random_line(2, 0));
  if (name == "rnc_n3_seed1.json") return to_json(rnc(3, 1));
  if (name == "theta_n1_d3.json") return to_json(theta_matrix(VeroneseContext(1, 3)));
  if (name == "normal_n2_d2.json") return cmd_normal(2, 2);
  if (name == "slopes_n2_d2.json") return cmd_slopes(2, 2);
  if (name == "restrict_n2_d3_lines.json") return cmd_restrict(2, 3, CurveSpec{"line", 0, ""}, 10);
  if (name == "dual_identity_factors.json") {
    json out = json::array();
    for (int n = 1; n <= 4; ++n)
      for (int d = 2; d <= 4; ++d) {
        json entry = to_json(verify_dual_identity(VeroneseContext(n, d)));
        entry.erase("row_scale");
        entry.erase("col_scale");
        entry["n"] = n;
        entry["d"] = d;
        out.push_back(std::move(entry));
      }
    return out;
  }
  throw FormatError("unknown golden file '" + name + "'");
}

std::vector<CheckResult> check_golden_dir(const std::string& dir) {
  std::vector<CheckResult> out;
  for (const auto& name : golden_file_names()) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    r.id = "golden:" + name;
    r.name = "golden file " + (std::filesystem::path(dir) / name).string();
    try {
      const json pinned = read_json_file((std::filesystem::path(dir) / name).string());
      const json fresh = golden_content(name);
      r.passed = pinned == fresh;
      r.detail = r.passed ? "matches" : "mismatch in " + (std::filesystem::path(dir) / name).string();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

void write_golden_dir(const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& name : golden_file_names()) {
    write_text_file((std::filesystem::path(dir) / name).string(), golden_content(name).dump(2) + "\n");
  }
}

bool VerifyReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

nlohmann::json VerifyReport::to_json(const std::string& scope) const {
  json list = json::array();
  double total = 0;
  for (const auto& c : checks) {
    json item = {{"id", c.id}, {"name", c.name}, {"status", c.passed ? "pass" : "fail"},
                 {"detail", c.detail}, {"seconds", c.seconds}};
    if (c.budget > 0) item["budget_seconds"] = c.budget;
    list.push_back(std::move(item));
    total += c.seconds;
  }
  return {{"schema", "veronormal.verify/1"},
          {"scope", scope},
          {"passed", all_passed()},
          {"total_seconds", total},
          {"note", kSemistabilityNote},
          {"checks", std::move(list)}};
}

VerifyReport run_verify(Scope scope, const std::string& golden_dir,
                        const std::function<void(const CheckResult&)>& on_check) {
  VerifyReport rep;
  for (const auto& c : acceptance_criteria()) {
    rep.checks.push_back(run_criterion(c, scope));
    if (on_check) on_check(rep.checks.back());
  }
  for (auto& g : check_golden_dir(golden_dir)) {
    rep.checks.push_back(std::move(g));
    if (on_check) on_check(rep.checks.back());
  }
  return rep;
}

}  // namespace veronormal

#include "veronormal/gradedmap.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "veronormal/errors.hpp"

namespace veronormal {

namespace {

int nominal_degree(int target, int source) { return target - source < 0 ? 0 : target - source; }

}  // namespace

GradedMap::GradedMap(int num_vars, std::vector<int> source_twists, std::vector<int> target_twists)
    : num_vars_(num_vars), source_(std::move(source_twists)), target_(std::move(target_twists)) {
  entries_.reserve(rows() * cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      entries_.emplace_back(num_vars_, nominal_degree(target_[i], source_[j]));
}

GradedMap GradedMap::identity(int num_vars, const std::vector<int>& twists) {
  GradedMap id(num_vars, twists, twists);
  for (std::size_t i = 0; i < twists.size(); ++i) id.set_entry(i, i, HomPoly::constant(num_vars, 1));
  return id;
}

void GradedMap::set_entry(std::size_t i, std::size_t j, HomPoly p) {
  if (i >= rows() || j >= cols()) throw std::out_of_range("GradedMap::set_entry: index out of range");
  const int want = target_[i] - source_[j];
  if (p.is_zero()) {
    entries_[i * cols() + j] = HomPoly(num_vars_, nominal_degree(target_[i], source_[j]));
    return;
  }
  if (p.num_vars() != num_vars_) throw std::invalid_argument("GradedMap::set_entry: variable count mismatch");
  if (p.degree() != want) {
    throw std::invalid_argument("GradedMap::set_entry: entry (" + std::to_string(i) + "," + std::to_string(j) +
                                ") has degree " + std::to_string(p.degree()) + ", expected " +
                                std::to_string(want));
  }
  entries_[i * cols() + j] = std::move(p);
}

bool operator==(const GradedMap& a, const GradedMap& b) {
  return a.num_vars_ == b.num_vars_ && a.source_ == b.source_ && a.target_ == b.target_ &&
         a.entries_ == b.entries_;
}

void check_base_point_free(const CurveParam& c) {
  if (c.degree < 1) throw MathError("curve degree must be at least 1");
  for (const auto& f : c.forms) {
    if (f.num_vars() != 2) throw MathError("curve forms must be binary forms in (s, t)");
    if (!f.is_zero() && f.degree() != c.degree) throw MathError("inhomogeneous parametrization");
  }
  if (common_zero_degree(c.forms) != 0) throw MathError("parametrization has base point");
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
  if (g.num_vars() != f.num_vars()) throw MathError("compose: variable count mismatch");
  if (g.source_twists() != f.target_twists()) throw MathError("compose: twist mismatch");
  GradedMap out(f.num_vars(), f.source_twists(), g.target_twists());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      HomPoly acc(f.num_vars(), 0);
      for (std::size_t k = 0; k < f.rows(); ++k) {
        const HomPoly& a = g.entry(i, k);
        const HomPoly& b = f.entry(k, j);
        if (a.is_zero() || b.is_zero()) continue;
        acc += multiply(a, b);
      }
      out.set_entry(i, j, std::move(acc));
    }
  }
  return out;
}

GradedMap dual(const GradedMap& f) {
  std::vector<int> src;
  std::vector<int> tgt;
  for (int t : f.target_twists()) src.push_back(-t);
  for (int s : f.source_twists()) tgt.push_back(-s);
  GradedMap out(f.num_vars(), src, tgt);
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) out.set_entry(j, i, f.entry(i, j));
  return out;
}

GradedMap pullback(const GradedMap& f, const CurveParam& c) {
  if (c.ambient_vars() != f.num_vars()) throw MathError("pullback: curve lives in the wrong projective space");
  check_base_point_free(c);
  std::vector<int> src;
  std::vector<int> tgt;
  for (int s : f.source_twists()) src.push_back(c.degree * s);
  for (int t : f.target_twists()) tgt.push_back(c.degree * t);
  GradedMap out(2, src, tgt);
  std::vector<HomPoly> forms = c.forms;
  for (auto& form : forms)
    if (form.is_zero()) form = HomPoly(2, c.degree);
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j)
      if (!f.entry(i, j).is_zero()) out.set_entry(i, j, substitute(f.entry(i, j), forms));
  return out;
}

std::size_t section_dimension(int num_vars, const std::vector<int>& twists, int m) {
  std::size_t total = 0;
  for (int t : twists) total += monomial_count(num_vars, t + m);
  return total;
}

std::vector<std::size_t> block_offsets(int num_vars, const std::vector<int>& twists, int m) {
  std::vector<std::size_t> off;
  std::size_t acc = 0;
  for (int t : twists) {
    off.push_back(acc);
    acc += monomial_count(num_vars, t + m);
  }
  off.push_back(acc);
  return off;
}

QMatrix stratum(const GradedMap& f, int m) {
  const int k = f.num_vars();
  const auto col_off = block_offsets(k, f.source_twists(), m);
  const auto row_off = block_offsets(k, f.target_twists(), m);
  QMatrix out(row_off.back(), col_off.back());
  Monomial prod(k);
  for (std::size_t j = 0; j < f.cols(); ++j) {
    const int src_deg = f.source_twists()[j] + m;
    if (src_deg < 0) continue;
    const auto basis = monomials(k, src_deg);
    for (std::size_t i = 0; i < f.rows(); ++i) {
      const HomPoly& e = f.entry(i, j);
      if (e.is_zero()) continue;
      for (std::size_t b = 0; b < basis.size(); ++b) {
        for (const auto& [mono, c] : e.terms()) {
          for (int v = 0; v < k; ++v) prod[v] = basis[b][v] + mono[v];
          out(row_off[i] + monomial_index(prod), col_off[j] + b) += c;
        }
      }
    }
  }
  return out;
}

}  // namespace veronormal

#include "veronormal/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "veronormal/errors.hpp"

namespace veronormal {

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool GrlexBefore::operator()(const Monomial& a, const Monomial& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void enumerate(int var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  const int k = static_cast<int>(cur.size());
  if (var == k - 1) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (int a = remaining; a >= 0; --a) {
    cur[var] = a;
    enumerate(var + 1, remaining - a, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials(int num_vars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0 || num_vars <= 0) return out;
  Monomial cur(num_vars, 0);
  enumerate(0, degree, cur, out);
  return out;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::size_t monomial_count(int num_vars, int degree) {
  if (degree < 0 || num_vars <= 0) return 0;
  return binomial(num_vars - 1 + degree, degree).get_ui();
}

std::size_t monomial_index(const Monomial& m) {
  const int k = static_cast<int>(m.size());
  int remaining = total_degree(m);
  std::size_t index = 0;
  for (int v = 0; v + 1 < k; ++v) {
    // Monomials whose exponent at v exceeds m[v] come first.
    for (int a = remaining; a > m[v]; --a) index += monomial_count(k - v - 1, remaining - a);
    remaining -= m[v];
  }
  return index;
}

HomPoly::HomPoly(int num_vars, int degree) : num_vars_(num_vars), degree_(degree) {}

HomPoly HomPoly::constant(int num_vars, const Rat& c) {
  HomPoly p(num_vars, 0);
  p.add_term(Monomial(num_vars, 0), c);
  return p;
}

HomPoly HomPoly::variable(int num_vars, int index) {
  if (index < 0 || index >= num_vars) throw std::out_of_range("HomPoly::variable: index out of range");
  Monomial m(num_vars, 0);
  m[index] = 1;
  return monomial(m);
}

HomPoly HomPoly::monomial(const Monomial& m, const Rat& c) {
  HomPoly p(static_cast<int>(m.size()), total_degree(m));
  p.add_term(m, c);
  return p;
}

Rat HomPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void HomPoly::add_term(const Monomial& m, const Rat& c) {
  if (sgn(c) == 0) return;
  if (static_cast<int>(m.size()) != num_vars_) throw std::invalid_argument("HomPoly: monomial has wrong arity");
  if (total_degree(m) != degree_) {
    if (!terms_.empty()) throw std::invalid_argument("HomPoly: inhomogeneous term");
    degree_ = total_degree(m);
  }
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

HomPoly HomPoly::operator-() const {
  HomPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

HomPoly& HomPoly::operator+=(const HomPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    num_vars_ = o.num_vars_;
    degree_ = o.degree_;
  }
  if (o.num_vars_ != num_vars_) throw std::invalid_argument("HomPoly sum: variable count mismatch");
  if (o.degree_ != degree_) throw std::invalid_argument("HomPoly sum: degree mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& o) { return *this += -o; }

HomPoly& HomPoly::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

bool operator==(const HomPoly& a, const HomPoly& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.num_vars_ == b.num_vars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

HomPoly multiply(const HomPoly& p, const HomPoly& q) {
  if (p.num_vars_ != q.num_vars_) throw std::invalid_argument("HomPoly product: variable count mismatch");
  HomPoly out(p.num_vars_, p.degree_ + q.degree_);
  Monomial m(p.num_vars_);
  for (const auto& [mp, cp] : p.terms_) {
    for (const auto& [mq, cq] : q.terms_) {
      for (int i = 0; i < p.num_vars_; ++i) m[i] = mp[i] + mq[i];
      out.add_term(m, cp * cq);
    }
  }
  return out;
}

HomPoly differentiate(const HomPoly& p, int var) {
  if (var < 0 || var >= p.num_vars()) throw std::out_of_range("differentiate: variable index out of range");
  HomPoly out(p.num_vars(), std::max(p.degree() - 1, 0));
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) continue;
    Monomial dm = m;
    dm[var] -= 1;
    out.add_term(dm, c * m[var]);
  }
  return out;
}

HomPoly power(const HomPoly& p, int exponent) {
  if (exponent < 0) throw std::invalid_argument("power: negative exponent");
  HomPoly result = HomPoly::constant(p.num_vars(), 1);
  HomPoly base = p;
  while (exponent > 0) {
    if (exponent & 1) result = multiply(result, base);
    exponent >>= 1;
    if (exponent > 0) base = multiply(base, base);
  }
  return result;
}

HomPoly substitute(const HomPoly& p, const std::vector<HomPoly>& forms) {
  if (static_cast<int>(forms.size()) != p.num_vars()) {
    throw std::invalid_argument("substitute: expected one form per variable");
  }
  if (forms.empty()) throw std::invalid_argument("substitute: no forms");
  const int target_vars = forms.front().num_vars();
  const int e = forms.front().degree();
  for (const auto& f : forms) {
    if (f.num_vars() != target_vars) throw MathError("inhomogeneous parametrization");
    if (!f.is_zero() && f.degree() != e) throw MathError("inhomogeneous parametrization");
  }
  // Cache powers of each form; exponents are bounded by deg p.
  std::vector<std::vector<HomPoly>> powers(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    HomPoly f = forms[i];
    if (f.is_zero()) f = HomPoly(target_vars, e);
    powers[i].push_back(HomPoly::constant(target_vars, 1));
    for (int k = 1; k <= p.degree(); ++k) {
      HomPoly next = multiply(powers[i].back(), f);
      if (next.is_zero()) next = HomPoly(target_vars, e * k);
      powers[i].push_back(std::move(next));
    }
  }
  HomPoly out(target_vars, e * p.degree());
  for (const auto& [m, c] : p.terms()) {
    HomPoly term = HomPoly::constant(target_vars, c);
    for (std::size_t i = 0; i < forms.size() && !term.is_zero(); ++i) {
      if (m[i] > 0) term = multiply(term, powers[i][m[i]]);
    }
    if (!term.is_zero()) out += term;
  }
  return out;
}

std::string to_string(const HomPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    os << to_string(Rat(abs(c)));
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      os << "*Z" << i;
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, int num_vars) : text_(text), num_vars_(num_vars) {}

  HomPoly parse(int zero_degree) {
    HomPoly out(num_vars_, zero_degree);
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [mono, coeff] = parse_term();
      if (sgn(coeff) != 0) {
        if (!out.is_zero() && total_degree(mono) != out.degree()) fail("inhomogeneous polynomial");
        out.add_term(mono, sign * coeff);
      }
      skip_space();
    }
    if (out.is_zero()) return HomPoly(num_vars_, zero_degree);
    return out;
  }

 private:
  std::pair<Monomial, Rat> parse_term() {
    Monomial mono(num_vars_, 0);
    Rat coeff = 1;
    bool need_factor = true;
    while (need_factor) {
      skip_space();
      if (at_end()) fail("unexpected end of input");
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_number();
      } else if (c == 'Z' || c == 's' || c == 't') {
        int var = parse_variable();
        int exp = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          exp = parse_uint();
        }
        mono[var] += exp;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_space();
      need_factor = !at_end() && peek() == '*';
      if (need_factor) ++pos_;
    }
    return {mono, coeff};
  }

  Rat parse_number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      const std::size_t den_start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == den_start) fail("missing denominator");
    }
    return parse_rat(text_.substr(start, pos_ - start));
  }

  int parse_uint() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected exponent");
    return std::stoi(text_.substr(start, pos_ - start));
  }

  int parse_variable() {
    const char c = peek();
    ++pos_;
    int var = 0;
    if (c == 's' || c == 't') {
      if (num_vars_ != 2) fail("variables s and t require a binary form");
      var = c == 's' ? 0 : 1;
    } else {
      var = parse_uint();
    }
    if (var >= num_vars_) fail("variable index out of range");
    return var;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw FormatError("cannot parse polynomial '" + text_ + "' at position " + std::to_string(pos_) + ": " + why);
  }

  const std::string& text_;
  int num_vars_;
  std::size_t pos_ = 0;
};

}  // namespace

HomPoly parse_poly(const std::string& text, int num_vars, int zero_degree) {
  return PolyParser(text, num_vars).parse(zero_degree);
}

int UniPoly::degree() const {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    if (sgn(coeffs[i]) != 0) return i;
  return -1;
}

void UniPoly::trim() { coeffs.resize(static_cast<std::size_t>(degree() + 1)); }

UniPoly uni_rem(const UniPoly& a, const UniPoly& b) {
  const int db = b.degree();
  if (db < 0) throw std::invalid_argument("uni_rem: division by zero polynomial");
  UniPoly r = a;
  r.trim();
  const Rat lead_inv = 1 / b.coeffs[db];
  for (int dr = r.degree(); dr >= db; dr = r.degree()) {
    const Rat f = r.coeffs[dr] * lead_inv;
    for (int k = 0; k <= db; ++k) r.coeffs[dr - db + k] -= f * b.coeffs[k];
    r.trim();
  }
  return r;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  a.trim();
  b.trim();
  while (!b.is_zero()) {
    UniPoly r = uni_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    const Rat lead = a.coeffs.back();
    for (auto& c : a.coeffs) c /= lead;
  }
  return a;
}

UniPoly dehomogenize(const HomPoly& f) {
  if (f.num_vars() != 2) throw std::invalid_argument("dehomogenize: expected a binary form");
  UniPoly u;
  u.coeffs.assign(static_cast<std::size_t>(f.degree() + 1), Rat(0));
  for (const auto& [m, c] : f.terms()) u.coeffs[m[1]] = c;
  u.trim();
  return u;
}

int common_zero_degree(const std::vector<HomPoly>& forms) {
  bool any = false;
  int at_infinity = 0;
  UniPoly g;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    UniPoly u = dehomogenize(f);
    const int inf_mult = f.degree() - u.degree();
    if (!any) {
      g = std::move(u);
      at_infinity = inf_mult;
      any = true;
    } else {
      g = uni_gcd(g, u);
      at_infinity = std::min(at_infinity, inf_mult);
    }
  }
  if (!any) return -1;
  return g.degree() + at_infinity;
}

}  // namespace veronormal

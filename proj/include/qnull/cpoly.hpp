#ifndef QNULL_CPOLY_HPP
#define QNULL_CPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qnull/rational.hpp"

namespace qnull {

// Total degree reported for the zero polynomial.
inline constexpr int deg_minus_infinity = std::numeric_limits<int>::min();

// Exact multivariate commutative polynomial over Q with a declared, ordered
// variable list.  Terms map exponent vectors to nonzero coefficients; the
// map order makes printing and iteration deterministic.
class CPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational>;

  CPoly() = default;
  explicit CPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static CPoly constant(std::vector<std::string> vars, Rational c) {
    CPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_[Exponents(p.vars_.size(), 0)] = std::move(c);
    return p;
  }

  static CPoly variable(std::vector<std::string> vars, const std::string& name) {
    CPoly p(std::move(vars));
    auto it = std::find(p.vars_.begin(), p.vars_.end(), name);
    if (it == p.vars_.end())
      throw std::invalid_argument("unknown variable name: " + name);
    Exponents e(p.vars_.size(), 0);
    e[static_cast<std::size_t>(it - p.vars_.begin())] = 1;
    p.terms_[e] = 1;
    return p;
  }

  static CPoly from_terms(std::vector<std::string> vars, TermMap terms) {
    CPoly p(std::move(vars));
    for (auto& [e, c] : terms) {
      if (e.size() != p.vars_.size())
        throw std::invalid_argument("exponent vector arity mismatch");
      if (!c.is_zero()) p.terms_[e] = c;
    }
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  }

  Rational constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("constant_value of non-constant");
    return terms_.begin()->second;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (e.size() != vars_.size())
      throw std::invalid_argument("exponent vector arity mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend bool operator==(const CPoly& p, const CPoly& q) {
    return p.vars_ == q.vars_ && p.terms_ == q.terms_;
  }
  friend bool operator!=(const CPoly& p, const CPoly& q) { return !(p == q); }

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

inline void require_same_vars(const CPoly& p, const CPoly& q) {
  if (p.vars() != q.vars())
    throw std::invalid_argument("polynomials over different variable lists");
}

inline CPoly add_c(const CPoly& p, const CPoly& q) {
  require_same_vars(p, q);
  CPoly r = p;
  for (const auto& [e, c] : q.terms()) r.add_term(e, c);
  return r;
}

inline CPoly neg_c(const CPoly& p) {
  CPoly r(p.vars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, -c);
  return r;
}

inline CPoly sub_c(const CPoly& p, const CPoly& q) { return add_c(p, neg_c(q)); }

inline CPoly scale_c(const Rational& a, const CPoly& p) {
  CPoly r(p.vars());
  if (a.is_zero()) return r;
  for (const auto& [e, c] : p.terms()) r.add_term(e, a * c);
  return r;
}

inline CPoly mul_c(const CPoly& p, const CPoly& q) {
  require_same_vars(p, q);
  CPoly r(p.vars());
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) {
      CPoly::Exponents e(ep.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ep[k] + eq[k];
      r.add_term(e, cp * cq);
    }
  }
  return r;
}

inline CPoly pow_c(const CPoly& p, int e) {
  if (e < 0) throw std::invalid_argument("negative polynomial exponent");
  CPoly r = CPoly::constant(p.vars(), 1);
  for (int t = 0; t < e; ++t) r = mul_c(r, p);
  return r;
}

inline int total_degree(const CPoly::Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

inline int degree_of(const CPoly& p) {
  if (p.is_zero()) return deg_minus_infinity;
  int d = 0;
  for (const auto& [e, c] : p.terms()) d = std::max(d, total_degree(e));
  return d;
}

inline bool is_homogeneous(const CPoly& p) {
  if (p.is_zero()) return true;
  int d = total_degree(p.terms().begin()->first);
  for (const auto& [e, c] : p.terms())
    if (total_degree(e) != d) return false;
  return true;
}

inline Rational eval_c(const CPoly& p, const std::vector<Rational>& point) {
  if (point.size() != p.vars().size())
    throw std::invalid_argument("evaluation point arity mismatch");
  Rational acc = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      for (int t = 0; t < e[k]; ++t) term *= point[k];
    acc += term;
  }
  return acc;
}

// Polynomial composition: variable k of p is replaced by args[k].  All
// arguments must share one variable list, which becomes the result's.
inline CPoly substitute(const CPoly& p, const std::vector<CPoly>& args) {
  if (args.size() != p.vars().size())
    throw std::invalid_argument("substitution arity mismatch");
  if (args.empty()) throw std::invalid_argument("substitution needs arguments");
  for (const CPoly& g : args) require_same_vars(args.front(), g);
  CPoly r(args.front().vars());
  for (const auto& [e, c] : p.terms()) {
    CPoly term = CPoly::constant(r.vars(), c);
    for (std::size_t k = 0; k < e.size(); ++k)
      for (int t = 0; t < e[k]; ++t) term = mul_c(term, args[k]);
    r = add_c(r, term);
  }
  return r;
}

// One linear combination of new variables per old variable.
using LinearCombo = std::vector<std::pair<Rational, std::string>>;

inline CPoly substitute_linear(const CPoly& p,
                               const std::vector<std::string>& new_vars,
                               const std::map<std::string, LinearCombo>& assign) {
  std::vector<CPoly> args;
  args.reserve(p.vars().size());
  for (const std::string& v : p.vars()) {
    auto it = assign.find(v);
    if (it == assign.end())
      throw std::invalid_argument("no assignment for variable " + v);
    CPoly lin(new_vars);
    for (const auto& [coeff, name] : it->second)
      lin = add_c(lin, scale_c(coeff, CPoly::variable(new_vars, name)));
    args.push_back(std::move(lin));
  }
  if (args.empty()) throw std::invalid_argument("substitute_linear on 0 variables");
  return substitute(p, args);
}

// Embed p into a superset variable list, matching variables by name.
inline CPoly with_vars(const CPoly& p, const std::vector<std::string>& vars) {
  std::vector<std::size_t> pos(p.vars().size());
  for (std::size_t k = 0; k < p.vars().size(); ++k) {
    auto it = std::find(vars.begin(), vars.end(), p.vars()[k]);
    if (it == vars.end())
      throw std::invalid_argument("target variable list misses " + p.vars()[k]);
    pos[k] = static_cast<std::size_t>(it - vars.begin());
  }
  CPoly r(vars);
  for (const auto& [e, c] : p.terms()) {
    CPoly::Exponents ne(vars.size(), 0);
    for (std::size_t k = 0; k < e.size(); ++k) ne[pos[k]] = e[k];
    r.add_term(ne, c);
  }
  return r;
}

// (1/s!) sum over subsets I of {1..s} of (-1)^(s-|I|) (sum_{i in I} t_i)^s.
inline CPoly polarization_rhs(int s, const std::vector<CPoly>& t) {
  if (s < 1) throw std::invalid_argument("polarization needs s >= 1");
  if (t.size() != static_cast<std::size_t>(s))
    throw std::invalid_argument("polarization needs exactly s arguments");
  for (const CPoly& g : t) require_same_vars(t.front(), g);
  CPoly acc(t.front().vars());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
    CPoly subset_sum(t.front().vars());
    int size = 0;
    for (int k = 0; k < s; ++k) {
      if (mask & (std::uint64_t{1} << k)) {
        subset_sum = add_c(subset_sum, t[static_cast<std::size_t>(k)]);
        ++size;
      }
    }
    CPoly powered = pow_c(subset_sum, s);
    if ((s - size) % 2 != 0) powered = neg_c(powered);
    acc = add_c(acc, powered);
  }
  return scale_c(Rational(Int(1), factorial(s)), acc);
}

// Writes f as sum of c_k g_k^s by substituting t_1 = f, t_2 = ... = t_s = 1
// into the polarization identity.  Every coefficient is +-1/s!; every g_k is
// f plus an integer constant or a pure integer constant.  Zero subset sums
// are dropped, and f = 0 decomposes as the empty sum.
inline std::vector<std::pair<Rational, CPoly>> decompose_into_powers(const CPoly& f,
                                                                     int s) {
  if (s < 1) throw std::invalid_argument("decomposition needs s >= 1");
  std::vector<std::pair<Rational, CPoly>> out;
  if (f.is_zero()) return out;
  const Rational unit(Int(1), factorial(s));
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s); ++mask) {
    bool has_f = (mask & 1) != 0;
    int ones = 0;
    for (int k = 1; k < s; ++k)
      if (mask & (std::uint64_t{1} << k)) ++ones;
    CPoly g = CPoly::constant(f.vars(), ones);
    if (has_f) g = add_c(g, f);
    if (g.is_zero()) continue;
    int size = ones + (has_f ? 1 : 0);
    out.emplace_back((s - size) % 2 == 0 ? unit : Rational(-unit), std::move(g));
  }
  return out;
}

// Structural quasi-anisotropy certificates.  PositiveDefiniteDiagonal and
// LastVariablePower are sound accept paths; Asserted always passes and is
// flagged wherever reports are rendered.
enum class CertKind { PositiveDefiniteDiagonal, LastVariablePower, Asserted };

struct FormCertificate {
  CertKind kind = CertKind::Asserted;
};

inline std::string cert_kind_name(CertKind k) {
  switch (k) {
    case CertKind::PositiveDefiniteDiagonal: return "PositiveDefiniteDiagonal";
    case CertKind::LastVariablePower: return "LastVariablePower";
    case CertKind::Asserted: return "Asserted";
  }
  throw std::logic_error("unreachable certificate kind");
}

inline std::optional<CertKind> cert_kind_from_name(const std::string& s) {
  if (s == "PositiveDefiniteDiagonal") return CertKind::PositiveDefiniteDiagonal;
  if (s == "LastVariablePower") return CertKind::LastVariablePower;
  if (s == "Asserted") return CertKind::Asserted;
  return std::nullopt;
}

// p = sum of c_t z_t^(2d) over every declared variable, all c_t > 0.  Such a
// form is anisotropic over R, hence quasi-anisotropic over Q.
inline bool matches_positive_definite_diagonal(const CPoly& p) {
  if (p.is_zero() || p.vars().empty()) return false;
  if (p.terms().size() != p.vars().size()) return false;
  int common = -1;
  std::vector<bool> seen(p.vars().size(), false);
  for (const auto& [e, c] : p.terms()) {
    if (c <= 0) return false;
    int var = -1;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (var >= 0) return false;
      var = static_cast<int>(k);
    }
    if (var < 0) return false;
    int d = e[static_cast<std::size_t>(var)];
    if (d % 2 != 0) return false;
    if (common < 0) common = d;
    if (d != common) return false;
    seen[static_cast<std::size_t>(var)] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// p = z_m^d with d >= 1 (m = last declared variable).
inline bool matches_last_variable_power(const CPoly& p) {
  if (p.is_zero() || p.vars().empty()) return false;
  if (p.terms().size() != 1) return false;
  const auto& [e, c] = *p.terms().begin();
  if (c != 1) return false;
  for (std::size_t k = 0; k + 1 < e.size(); ++k)
    if (e[k] != 0) return false;
  return e.back() >= 1;
}

inline bool check_form_certificate(const CPoly& p, const FormCertificate& cert) {
  if (!is_homogeneous(p))
    throw std::invalid_argument("form certificate requires a homogeneous polynomial");
  switch (cert.kind) {
    case CertKind::PositiveDefiniteDiagonal:
      return matches_positive_definite_diagonal(p);
    case CertKind::LastVariablePower:
      return matches_last_variable_power(p);
    case CertKind::Asserted:
      return true;
  }
  throw std::logic_error("unreachable certificate kind");
}

// Canonical text form: terms in descending lexicographic exponent order,
// '*' between factors, '^' for exponents, unit coefficients dropped.
inline std::string format_cpoly(const CPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::vector<std::string> factors;
    if (mag != 1 || total_degree(e) == 0) factors.push_back(format_rational(mag));
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      std::string f = p.vars()[k];
      if (e[k] > 1) f += "^" + std::to_string(e[k]);
      factors.push_back(std::move(f));
    }
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k > 0) out += "*";
      out += factors[k];
    }
  }
  return out;
}

// Randomized refutation: look for a rational zero of p whose last coordinate
// is nonzero.  Small-integer grid first (last coordinate varying fastest),
// then seeded random small rationals.  Finding nothing proves nothing.
inline std::optional<std::vector<Rational>> falsify_quasi_anisotropy(
    const CPoly& p, std::size_t sample_budget) {
  if (!is_homogeneous(p))
    throw std::invalid_argument("quasi-anisotropy search requires a homogeneous polynomial");
  const std::size_t m = p.vars().size();
  if (m == 0) return std::nullopt;
  static const int grid_values[] = {0, 1, -1, 2, -2};
  constexpr std::size_t n_values = 5;

  std::size_t used = 0;
  std::vector<std::size_t> idx(m, 0);
  bool grid_done = false;
  // Odometer over the grid, skipping points with zero last coordinate.
  while (!grid_done && used < sample_budget) {
    if (grid_values[idx[m - 1]] != 0) {
      std::vector<Rational> point(m);
      for (std::size_t k = 0; k < m; ++k) point[k] = grid_values[idx[k]];
      ++used;
      if (eval_c(p, point).is_zero()) return point;
    }
    std::size_t k = m;
    while (k > 0) {
      --k;
      if (++idx[k] < n_values) break;
      idx[k] = 0;
      if (k == 0) grid_done = true;
    }
  }

  std::mt19937_64 rng(0x51ab5eedULL);
  std::uniform_int_distribution<int> numer(-4, 4);
  std::uniform_int_distribution<int> denom(1, 3);
  while (used < sample_budget) {
    std::vector<Rational> point(m);
    for (std::size_t k = 0; k < m; ++k) point[k] = rat(numer(rng), denom(rng));
    if (point[m - 1].is_zero()) point[m - 1] = rat(denom(rng));
    ++used;
    if (eval_c(p, point).is_zero()) return point;
  }
  return std::nullopt;
}

}  // namespace qnull

#endif  // QNULL_CPOLY_HPP

#ifndef QNULL_GROEBNER_HPP
#define QNULL_GROEBNER_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qnull/cpoly.hpp"
#include "qnull/rational.hpp"

namespace qnull {

class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

struct GroebnerLimits {
  std::size_t max_basis_size = 512;
  int max_degree = 64;
  std::size_t max_reduction_steps = 2'000'000;
};

// Total well-order on monomials, compatible with multiplication.  var_perm
// lists variable indices from most to least significant; empty means the
// declared order.
struct MonomialOrder {
  enum class Kind { lex, grevlex };

  Kind kind = Kind::grevlex;
  std::vector<int> var_perm;

  static MonomialOrder lex() { return {Kind::lex, {}}; }
  static MonomialOrder grevlex() { return {Kind::grevlex, {}}; }

  // Strict a < b.
  bool less(const CPoly::Exponents& a, const CPoly::Exponents& b) const {
    const std::size_t n = a.size();
    auto at = [&](const CPoly::Exponents& e, std::size_t k) {
      return var_perm.empty() ? e[k] : e[static_cast<std::size_t>(var_perm[k])];
    };
    if (kind == Kind::lex) {
      for (std::size_t k = 0; k < n; ++k)
        if (at(a, k) != at(b, k)) return at(a, k) < at(b, k);
      return false;
    }
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // Graded reverse lex: the last position where they differ decides,
    // with the smaller exponent there winning.
    for (std::size_t k = n; k > 0; --k) {
      int ea = at(a, k - 1), eb = at(b, k - 1);
      if (ea != eb) return ea > eb;
    }
    return false;
  }
};

namespace detail {

inline void validate_order(const MonomialOrder& order, std::size_t nvars) {
  if (order.var_perm.empty()) return;
  if (order.var_perm.size() != nvars)
    throw std::invalid_argument("variable permutation arity mismatch");
  std::vector<bool> seen(nvars, false);
  for (int v : order.var_perm) {
    if (v < 0 || static_cast<std::size_t>(v) >= nvars || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("var_perm is not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

inline std::pair<CPoly::Exponents, Rational> leading_term(const CPoly& p,
                                                          const MonomialOrder& order) {
  auto it = p.terms().begin();
  auto best = it;
  for (++it; it != p.terms().end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

inline bool exponents_divide(const CPoly::Exponents& d, const CPoly::Exponents& e) {
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k] > e[k]) return false;
  return true;
}

inline CPoly mul_term(const CPoly& p, const CPoly::Exponents& e, const Rational& c) {
  CPoly r(p.vars());
  for (const auto& [pe, pc] : p.terms()) {
    CPoly::Exponents ne(pe.size());
    for (std::size_t k = 0; k < ne.size(); ++k) ne[k] = pe[k] + e[k];
    r.add_term(ne, pc * c);
  }
  return r;
}

inline CPoly make_monic(const CPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) return p;
  return scale_c(Rational(1) / leading_term(p, order).second, p);
}

// Full multivariate division: the remainder has no monomial divisible by
// any leading monomial of G.  Deterministic: divisors tried in list order.
inline CPoly reduce_full(const CPoly& f, const std::vector<CPoly>& G,
                         const MonomialOrder& order, const GroebnerLimits& limits,
                         std::size_t& steps) {
  CPoly h = f;
  CPoly r(f.vars());
  while (!h.is_zero()) {
    if (++steps > limits.max_reduction_steps)
      throw ResourceError("reduction step limit exceeded");
    auto [lm, lc] = leading_term(h, order);
    bool reduced = false;
    for (const CPoly& g : G) {
      if (g.is_zero()) continue;
      auto [glm, glc] = leading_term(g, order);
      if (!exponents_divide(glm, lm)) continue;
      CPoly::Exponents q(lm.size());
      for (std::size_t k = 0; k < q.size(); ++k) q[k] = lm[k] - glm[k];
      h = sub_c(h, mul_term(g, q, lc / glc));
      reduced = true;
      break;
    }
    if (!reduced) {
      r.add_term(lm, lc);
      CPoly lt(f.vars());
      lt.add_term(lm, lc);
      h = sub_c(h, lt);
    }
  }
  return r;
}

inline CPoly s_polynomial(const CPoly& f, const CPoly& g, const MonomialOrder& order) {
  auto [fl, fc] = leading_term(f, order);
  auto [gl, gc] = leading_term(g, order);
  CPoly::Exponents lcm(fl.size());
  for (std::size_t k = 0; k < lcm.size(); ++k) lcm[k] = std::max(fl[k], gl[k]);
  CPoly::Exponents qf(fl.size()), qg(gl.size());
  for (std::size_t k = 0; k < lcm.size(); ++k) {
    qf[k] = lcm[k] - fl[k];
    qg[k] = lcm[k] - gl[k];
  }
  return sub_c(mul_term(f, qf, Rational(1) / fc), mul_term(g, qg, Rational(1) / gc));
}

}  // namespace detail

// Reduced Groebner basis: monic elements, no leading monomial divides
// another, every element fully reduced against the rest.  Elements are
// sorted by leading monomial, largest first.
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<std::string> vars;
  std::vector<CPoly> elements;

  bool trivial_unit() const {
    return elements.size() == 1 && elements.front().is_constant() &&
           !elements.front().is_zero();
  }
};

// Buchberger with the normal selection strategy (smallest lcm degree first,
// insertion order as tie-break) and the coprime-leading-monomial criterion.
// The reduced basis is unique for a given ideal and order, so the output is
// deterministic by construction.
inline GroebnerBasis buchberger(const std::vector<CPoly>& gens,
                                const MonomialOrder& order,
                                const GroebnerLimits& limits = {}) {
  if (gens.empty()) throw std::invalid_argument("buchberger needs generators");
  for (const CPoly& g : gens) require_same_vars(gens.front(), g);
  detail::validate_order(order, gens.front().vars().size());

  GroebnerBasis basis;
  basis.order = order;
  basis.vars = gens.front().vars();

  std::vector<CPoly> G;
  for (const CPoly& g : gens)
    if (!g.is_zero()) G.push_back(detail::make_monic(g, order));
  if (G.empty()) return basis;  // the zero ideal

  std::size_t steps = 0;
  struct Pair {
    std::size_t i, j;
  };
  std::vector<Pair> pairs;
  for (std::size_t j = 1; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.push_back({i, j});

  while (!pairs.empty()) {
    // Normal strategy: pick the pair with the smallest lcm total degree.
    std::size_t best = 0;
    auto key = [&](const Pair& p) {
      auto [li, ci] = detail::leading_term(G[p.i], order);
      auto [lj, cj] = detail::leading_term(G[p.j], order);
      int deg = 0;
      for (std::size_t k = 0; k < li.size(); ++k) deg += std::max(li[k], lj[k]);
      return deg;
    };
    int best_key = key(pairs[0]);
    for (std::size_t t = 1; t < pairs.size(); ++t) {
      int kt = key(pairs[t]);
      if (kt < best_key) {
        best = t;
        best_key = kt;
      }
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

    auto [li, ci] = detail::leading_term(G[p.i], order);
    auto [lj, cj] = detail::leading_term(G[p.j], order);
    bool coprime = true;
    for (std::size_t k = 0; k < li.size(); ++k)
      if (li[k] > 0 && lj[k] > 0) coprime = false;
    if (coprime) continue;

    CPoly r = detail::reduce_full(detail::s_polynomial(G[p.i], G[p.j], order), G,
                                  order, limits, steps);
    if (r.is_zero()) continue;
    if (degree_of(r) > limits.max_degree)
      throw ResourceError("degree limit exceeded in Buchberger");
    r = detail::make_monic(r, order);
    G.push_back(r);
    if (G.size() > limits.max_basis_size)
      throw ResourceError("basis size limit exceeded in Buchberger");
    for (std::size_t i = 0; i + 1 < G.size(); ++i) pairs.push_back({i, G.size() - 1});
  }

  // Minimalize: drop elements whose leading monomial another divides.
  std::vector<CPoly> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    auto [lm, lc] = detail::leading_term(G[i], order);
    bool redundant = false;
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j) continue;
      auto [olm, olc] = detail::leading_term(G[j], order);
      if (detail::exponents_divide(olm, lm) && olm != lm) {
        redundant = true;
        break;
      }
      // Equal leading monomials: keep the earlier element.
      if (olm == lm && j < i) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(G[i]);
  }

  // Interreduce to the unique reduced basis.
  std::vector<CPoly> reduced = minimal;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    std::vector<CPoly> others;
    for (std::size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = detail::make_monic(
        detail::reduce_full(reduced[i], others, order, limits, steps), order);
  }
  reduced.erase(std::remove_if(reduced.begin(), reduced.end(),
                               [](const CPoly& g) { return g.is_zero(); }),
                reduced.end());

  std::sort(reduced.begin(), reduced.end(), [&](const CPoly& f, const CPoly& g) {
    return order.less(detail::leading_term(g, order).first,
                      detail::leading_term(f, order).first);
  });
  basis.elements = std::move(reduced);
  return basis;
}

// Unique remainder of multivariate division by the reduced basis.
inline CPoly normal_form(const CPoly& f, const GroebnerBasis& basis,
                         const GroebnerLimits& limits = {}) {
  if (!basis.elements.empty()) require_same_vars(f, basis.elements.front());
  std::size_t steps = 0;
  return detail::reduce_full(f, basis.elements, basis.order, limits, steps);
}

inline bool ideal_member(const CPoly& f, const GroebnerBasis& basis,
                         const GroebnerLimits& limits = {}) {
  return normal_form(f, basis, limits).is_zero();
}

}  // namespace qnull

#endif  // QNULL_GROEBNER_HPP

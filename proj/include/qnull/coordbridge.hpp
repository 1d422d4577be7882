#ifndef QNULL_COORDBRIDGE_HPP
#define QNULL_COORDBRIDGE_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "qnull/cpoly.hpp"
#include "qnull/ncpoly.hpp"
#include "qnull/quaternion.hpp"

namespace qnull {

// Coordinate variables y{i}_{j}: i is the 1-based argument index, j the
// 0-based basis slot (1, i, j, k).  This naming is a cross-module contract.
inline std::string coordinate_var(int i, int j) {
  return "y" + std::to_string(i) + "_" + std::to_string(j);
}

inline std::vector<std::string> coordinate_vars(int nvars) {
  std::vector<std::string> v;
  v.reserve(static_cast<std::size_t>(nvars) * 4);
  for (int i = 1; i <= nvars; ++i)
    for (int j = 0; j < 4; ++j) v.push_back(coordinate_var(i, j));
  return v;
}

// The form-(2) view of a polynomial function: four commutative component
// polynomials in the 4n coordinate variables.
struct ComponentVector {
  QuatAlgebra algebra;
  int nvars = 0;
  std::array<CPoly, 4> components;

  ComponentVector(QuatAlgebra alg, int n)
      : algebra(std::move(alg)), nvars(n) {
    CPoly zero(coordinate_vars(n));
    components = {zero, zero, zero, zero};
  }

  friend bool operator==(const ComponentVector& u, const ComponentVector& v) {
    return u.algebra == v.algebra && u.nvars == v.nvars &&
           u.components == v.components;
  }
  friend bool operator!=(const ComponentVector& u, const ComponentVector& v) {
    return !(u == v);
  }
};

namespace detail {

// Quaternion-valued commutative polynomial: the expansion workhorse.
using QPoly = std::array<CPoly, 4>;

inline QPoly qp_constant(const Quaternion& c, const std::vector<std::string>& vars) {
  return {CPoly::constant(vars, c.coord(0)), CPoly::constant(vars, c.coord(1)),
          CPoly::constant(vars, c.coord(2)), CPoly::constant(vars, c.coord(3))};
}

inline QPoly qp_add(const QPoly& u, const QPoly& v) {
  return {add_c(u[0], v[0]), add_c(u[1], v[1]), add_c(u[2], v[2]),
          add_c(u[3], v[3])};
}

// Same structure table as quaternion multiplication, coefficient-wise.
inline QPoly qp_mul(const QPoly& u, const QPoly& v, const Rational& a,
                    const Rational& b) {
  Rational ab = a * b;
  CPoly c0 = add_c(add_c(mul_c(u[0], v[0]), scale_c(a, mul_c(u[1], v[1]))),
                   add_c(scale_c(b, mul_c(u[2], v[2])),
                         scale_c(-ab, mul_c(u[3], v[3]))));
  CPoly c1 = add_c(add_c(mul_c(u[0], v[1]), mul_c(u[1], v[0])),
                   scale_c(b, sub_c(mul_c(u[3], v[2]), mul_c(u[2], v[3]))));
  CPoly c2 = add_c(add_c(mul_c(u[0], v[2]), mul_c(u[2], v[0])),
                   scale_c(a, sub_c(mul_c(u[1], v[3]), mul_c(u[3], v[1]))));
  CPoly c3 = add_c(add_c(mul_c(u[0], v[3]), mul_c(u[3], v[0])),
                   sub_c(mul_c(u[1], v[2]), mul_c(u[2], v[1])));
  return {c0, c1, c2, c3};
}

}  // namespace detail

// Substitute x_i = y_{i0} + y_{i1} i + y_{i2} j + y_{i3} k and multiply out.
// The result is the canonical form behind every equality decision.
inline ComponentVector expand(const NcPoly& f) {
  const std::vector<std::string> vars = coordinate_vars(f.nvars());
  const Rational& a = f.algebra().a();
  const Rational& b = f.algebra().b();
  detail::QPoly acc = detail::qp_constant(Quaternion::zero(f.algebra()), vars);
  for (const NcMonomial& m : f.terms()) {
    detail::QPoly prod = detail::qp_constant(m.coeffs.front(), vars);
    for (std::size_t t = 0; t < m.vars.size(); ++t) {
      detail::QPoly x = {CPoly::variable(vars, coordinate_var(m.vars[t], 0)),
                         CPoly::variable(vars, coordinate_var(m.vars[t], 1)),
                         CPoly::variable(vars, coordinate_var(m.vars[t], 2)),
                         CPoly::variable(vars, coordinate_var(m.vars[t], 3))};
      prod = detail::qp_mul(prod, x, a, b);
      prod = detail::qp_mul(prod, detail::qp_constant(m.coeffs[t + 1], vars), a, b);
    }
    acc = detail::qp_add(acc, prod);
  }
  ComponentVector v(f.algebra(), f.nvars());
  v.components = acc;
  return v;
}

// Central NcPoly realization of a single coordinate polynomial: every
// y_{ij} becomes the coordinate function extract_component(x_i, j).
inline NcPoly realize_central(const CPoly& p, const QuatAlgebra& alg, int nvars) {
  const std::vector<std::string> vars = coordinate_vars(nvars);
  if (p.vars() != vars)
    throw std::invalid_argument("polynomial is not over the coordinate variables");
  std::vector<NcPoly> coord_fn;
  coord_fn.reserve(vars.size());
  for (int i = 1; i <= nvars; ++i)
    for (int j = 0; j < 4; ++j)
      coord_fn.push_back(extract_component(NcPoly::variable(alg, nvars, i), j));
  NcPoly acc = NcPoly::zero(alg, nvars);
  for (const auto& [e, c] : p.terms()) {
    NcPoly term = NcPoly::constant(alg, nvars, Quaternion::scalar(alg, c));
    for (std::size_t k = 0; k < e.size(); ++k)
      for (int t = 0; t < e[k]; ++t) term = mul_poly(term, coord_fn[k]);
    acc = add(acc, term);
  }
  return acc;
}

// Constructive direction of the form-(1)/form-(2) equivalence:
// expand(realize(v)) == v exactly.
inline NcPoly realize(const ComponentVector& v) {
  NcPoly acc = NcPoly::zero(v.algebra, v.nvars);
  for (int k = 0; k < 4; ++k) {
    if (v.components[static_cast<std::size_t>(k)].is_zero()) continue;
    NcPoly part = realize_central(v.components[static_cast<std::size_t>(k)],
                                  v.algebra, v.nvars);
    acc = add(acc, scale_right(part, Quaternion::basis_unit(v.algebra, k)));
  }
  return acc;
}

// N_D(f) as a commutative polynomial: f0^2 - a f1^2 - b f2^2 + ab f3^2 on
// the expansion components.
inline CPoly reduced_norm_poly(const NcPoly& f) {
  ComponentVector v = expand(f);
  const Rational& a = f.algebra().a();
  const Rational& b = f.algebra().b();
  CPoly n = mul_c(v.components[0], v.components[0]);
  n = sub_c(n, scale_c(a, mul_c(v.components[1], v.components[1])));
  n = sub_c(n, scale_c(b, mul_c(v.components[2], v.components[2])));
  n = add_c(n, scale_c(a * b, mul_c(v.components[3], v.components[3])));
  return n;
}

inline CPoly reduced_trace_poly(const NcPoly& f) {
  return scale_c(2, expand(f).components[0]);
}

// Symbolic zero test: f is the zero map on D^n iff every expansion
// component vanishes identically.
inline bool is_zero_function(const NcPoly& f) {
  ComponentVector v = expand(f);
  for (const CPoly& c : v.components)
    if (!c.is_zero()) return false;
  return true;
}

inline bool equals_fn(const NcPoly& f, const NcPoly& g) {
  return is_zero_function(sub(f, g));
}

inline bool is_central_function(const NcPoly& f) {
  ComponentVector v = expand(f);
  return v.components[1].is_zero() && v.components[2].is_zero() &&
         v.components[3].is_zero();
}

// Flatten a point of D^n into the 4n coordinate values.
inline std::vector<Rational> coords_of_point(const std::vector<Quaternion>& point) {
  std::vector<Rational> out;
  out.reserve(point.size() * 4);
  for (const Quaternion& x : point)
    for (int j = 0; j < 4; ++j) out.push_back(x.coord(j));
  return out;
}

}  // namespace qnull

#endif  // QNULL_COORDBRIDGE_HPP

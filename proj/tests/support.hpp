// Shared deterministic generators for the test suites.
#ifndef QNULL_TESTS_SUPPORT_HPP
#define QNULL_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "qnull/qnull.hpp"

namespace qtest {

using Rng = std::mt19937_64;

inline qnull::Rational rand_rational(Rng& rng, int lo = -3, int hi = 3,
                                     int max_den = 3) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, max_den);
  return qnull::rat(num(rng), den(rng));
}

inline qnull::Rational rand_nonzero_rational(Rng& rng, int lo = -3, int hi = 3,
                                             int max_den = 3) {
  while (true) {
    qnull::Rational r = rand_rational(rng, lo, hi, max_den);
    if (!r.is_zero()) return r;
  }
}

inline qnull::Quaternion rand_quaternion(Rng& rng, const qnull::QuatAlgebra& alg,
                                         int lo = -2, int hi = 2, int max_den = 2) {
  return qnull::Quaternion(alg, rand_rational(rng, lo, hi, max_den),
                           rand_rational(rng, lo, hi, max_den),
                           rand_rational(rng, lo, hi, max_den),
                           rand_rational(rng, lo, hi, max_den));
}

inline qnull::Quaternion rand_nonzero_quaternion(Rng& rng,
                                                 const qnull::QuatAlgebra& alg) {
  while (true) {
    qnull::Quaternion q = rand_quaternion(rng, alg);
    if (!q.is_zero()) return q;
  }
}

inline std::vector<qnull::Quaternion> rand_point(Rng& rng, const qnull::QuatAlgebra& alg,
                                                 int nvars) {
  std::vector<qnull::Quaternion> pt;
  for (int i = 0; i < nvars; ++i) pt.push_back(rand_quaternion(rng, alg));
  return pt;
}

inline qnull::NcPoly rand_ncpoly(Rng& rng, const qnull::QuatAlgebra& alg, int nvars,
                                 int max_terms = 3, int max_deg = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> var(1, nvars);
  qnull::NcPoly f(alg, nvars);
  int t = nterms(rng);
  for (int s = 0; s < t; ++s) {
    qnull::NcMonomial m;
    int r = deg(rng);
    for (int u = 0; u < r; ++u) m.vars.push_back(var(rng));
    for (int u = 0; u <= r; ++u) m.coeffs.push_back(rand_quaternion(rng, alg));
    f.push_term(std::move(m));
  }
  return f;
}

inline qnull::CPoly rand_cpoly(Rng& rng, const std::vector<std::string>& vars,
                               int max_terms = 4, int max_deg = 4) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<std::size_t> var(0, vars.empty() ? 0 : vars.size() - 1);
  qnull::CPoly f(vars);
  int t = nterms(rng);
  for (int s = 0; s < t; ++s) {
    qnull::CPoly::Exponents e(vars.size(), 0);
    int d = deg(rng);
    for (int u = 0; u < d && !vars.empty(); ++u) ++e[var(rng)];
    f.add_term(e, rand_rational(rng));
  }
  return f;
}

}  // namespace qtest

#endif  // QNULL_TESTS_SUPPORT_HPP

#ifndef QNULL_NULLSATZ_HPP
#define QNULL_NULLSATZ_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qnull/coordbridge.hpp"
#include "qnull/cpoly.hpp"
#include "qnull/groebner.hpp"
#include "qnull/ncpoly.hpp"
#include "qnull/quaternion.hpp"

namespace qnull {

// Two-sided ideal of P_{D,n}, given by generators.  The zero ideal is the
// single zero generator.
struct TwoSidedIdeal {
  QuatAlgebra algebra;
  int nvars;
  std::vector<NcPoly> generators;

  TwoSidedIdeal(QuatAlgebra alg, int n, std::vector<NcPoly> gens)
      : algebra(std::move(alg)), nvars(n), generators(std::move(gens)) {
    if (generators.empty())
      throw std::invalid_argument("ideal needs at least one generator");
    for (const NcPoly& g : generators)
      if (g.algebra() != algebra || g.nvars() != nvars)
        throw std::invalid_argument("generator incompatible with ideal");
  }
};

// Ideal of the center C_{D,n} = Q[y_ij].  The Groebner basis is computed
// once on first use (single-writer contract; values are otherwise
// immutable).
class CentralIdeal {
 public:
  CentralIdeal(std::vector<std::string> vars, std::vector<CPoly> gens)
      : vars_(std::move(vars)), generators_(std::move(gens)) {
    if (generators_.empty()) generators_.push_back(CPoly(vars_));
    for (const CPoly& g : generators_)
      if (g.vars() != vars_)
        throw std::invalid_argument("central generator over wrong variables");
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<CPoly>& generators() const { return generators_; }

  const GroebnerBasis& basis(const GroebnerLimits& limits = {}) const {
    if (!basis_) basis_ = buchberger(generators_, MonomialOrder::grevlex(), limits);
    return *basis_;
  }

 private:
  std::vector<std::string> vars_;
  std::vector<CPoly> generators_;
  mutable std::optional<GroebnerBasis> basis_;
};

// Component polynomials of every generator.  Each lies in J: the component
// maps are two-sided combinations of the generator through the
// conjugation-averaging operators, and together they generate J_c.
inline CentralIdeal central_part(const TwoSidedIdeal& J) {
  std::vector<std::string> vars = coordinate_vars(J.nvars);
  std::vector<CPoly> gens;
  for (const NcPoly& g : J.generators) {
    ComponentVector v = expand(g);
    for (int k = 0; k < 4; ++k)
      if (!v.components[static_cast<std::size_t>(k)].is_zero())
        gens.push_back(v.components[static_cast<std::size_t>(k)]);
  }
  return CentralIdeal(std::move(vars), std::move(gens));
}

// Rad_D witness: homogeneous quasi-anisotropic p in z_1..z_m plus central
// companions f_1..f_{m-1}; the claim is p(f_1,..,f_{m-1}, N_D(f)) in J.
struct RadDWitness {
  CPoly p;
  FormCertificate cert;
  std::vector<CPoly> centrals;
};

// Rad'_D witness: companions are arbitrary polynomial maps; their reduced
// norms are plugged into q.
struct RadDPrimeWitness {
  CPoly q;
  FormCertificate cert;
  std::vector<NcPoly> companions;
};

// Quaternionic sum-of-norms certificate:
// N(f_1) + ... + N(f_{m-1}) + N(f)^k in J.
struct ApCertificate {
  std::vector<NcPoly> companions;
  int k = 1;
};

struct VerdictReport {
  std::string check;
  bool accepted = false;
  std::string certificate_class;
  bool certificate_ok = false;
  bool asserted = false;
  std::string membership_poly;
  std::string normal_form;
  std::vector<std::string> notes;

  std::string verdict() const { return accepted ? "accept" : "reject"; }
};

namespace detail {

inline void require_point_of(const TwoSidedIdeal& J, const NcPoly& f) {
  if (f.algebra() != J.algebra || f.nvars() != J.nvars)
    throw std::invalid_argument("polynomial incompatible with ideal");
}

inline void require_centrals(const std::vector<CPoly>& centrals, int nvars) {
  const std::vector<std::string> cv = coordinate_vars(nvars);
  for (const CPoly& c : centrals)
    if (c.vars() != cv)
      throw std::invalid_argument("central companion over wrong variables");
}

inline VerdictReport membership_report(std::string check, const CPoly& poly,
                                       const TwoSidedIdeal& J, bool cert_ok,
                                       std::string cert_class, bool asserted,
                                       const GroebnerLimits& limits) {
  VerdictReport rep;
  rep.check = std::move(check);
  rep.certificate_class = std::move(cert_class);
  rep.certificate_ok = cert_ok;
  rep.asserted = asserted;
  rep.membership_poly = format_cpoly(poly);
  CPoly nf = normal_form(poly, central_part(J).basis(limits), limits);
  rep.normal_form = format_cpoly(nf);
  rep.accepted = cert_ok && nf.is_zero();
  if (!cert_ok)
    rep.notes.push_back("form does not match certificate class " +
                        rep.certificate_class);
  if (asserted)
    rep.notes.push_back("certificate is Asserted: quasi-anisotropy not verified");
  if (!nf.is_zero())
    rep.notes.push_back("composed polynomial is not in the central part");
  return rep;
}

}  // namespace detail

inline VerdictReport check_radd_witness(const TwoSidedIdeal& J, const NcPoly& f,
                                        const RadDWitness& w,
                                        const GroebnerLimits& limits = {}) {
  detail::require_point_of(J, f);
  detail::require_centrals(w.centrals, J.nvars);
  if (w.p.vars().size() != w.centrals.size() + 1)
    throw std::invalid_argument("form arity does not match companion count");
  bool cert_ok = check_form_certificate(w.p, w.cert);
  std::vector<CPoly> args = w.centrals;
  args.push_back(reduced_norm_poly(f));
  return detail::membership_report("radd", substitute(w.p, args), J, cert_ok,
                                   cert_kind_name(w.cert.kind),
                                   w.cert.kind == CertKind::Asserted, limits);
}

inline VerdictReport check_raddprime_witness(const TwoSidedIdeal& J, const NcPoly& f,
                                             const RadDPrimeWitness& w,
                                             const GroebnerLimits& limits = {}) {
  detail::require_point_of(J, f);
  for (const NcPoly& g : w.companions) detail::require_point_of(J, g);
  if (w.q.vars().size() != w.companions.size() + 1)
    throw std::invalid_argument("form arity does not match companion count");
  bool cert_ok = check_form_certificate(w.q, w.cert);
  std::vector<CPoly> args;
  args.reserve(w.companions.size() + 1);
  for (const NcPoly& g : w.companions) args.push_back(reduced_norm_poly(g));
  args.push_back(reduced_norm_poly(f));
  return detail::membership_report("raddprime", substitute(w.q, args), J, cert_ok,
                                   cert_kind_name(w.cert.kind),
                                   w.cert.kind == CertKind::Asserted, limits);
}

inline VerdictReport check_ap_certificate(const TwoSidedIdeal& J, const NcPoly& f,
                                          const ApCertificate& cert,
                                          const GroebnerLimits& limits = {}) {
  detail::require_point_of(J, f);
  for (const NcPoly& g : cert.companions) detail::require_point_of(J, g);
  if (cert.k < 1) throw std::invalid_argument("AP exponent must be >= 1");
  CPoly acc(coordinate_vars(J.nvars));
  for (const NcPoly& g : cert.companions) acc = add_c(acc, reduced_norm_poly(g));
  acc = add_c(acc, pow_c(reduced_norm_poly(f), cert.k));
  VerdictReport rep = detail::membership_report("ap", acc, J, true, "SumOfNorms",
                                                false, limits);
  if (J.algebra.a() != -1 || J.algebra.b() != -1)
    rep.notes.push_back(
        "algebra is not (-1,-1/Q); norm definiteness still holds for a<0, b<0");
  return rep;
}

// Result of the radd -> raddprime rewrite: the new form q, the shared
// central power arguments g_1..g_l, and the witness with the g's realized
// as central polynomial maps (so N_D(g_t) = g_t^2 when s = 2).
struct TransformResult {
  RadDPrimeWitness witness;
  std::vector<CPoly> power_args;
};

// Exact check of q(g_1^s,..,g_l^s, Z) == p(f_1,..,f_{m-1}, Z) over the
// coordinate ring extended by one indeterminate Z.
inline bool verify_transform_identity(const CPoly& p, const std::vector<CPoly>& centrals,
                                      const CPoly& q, const std::vector<CPoly>& power_args,
                                      int s) {
  if (centrals.empty() && power_args.empty()) {
    // Pass-through: both sides are p and q of one variable.
    std::vector<std::string> ring = {"z1"};
    std::vector<CPoly> zz = {CPoly::variable(ring, "z1")};
    return substitute(p, zz) == substitute(q, zz);
  }
  std::vector<std::string> ring = centrals.front().vars();
  ring.push_back("z1");
  std::vector<CPoly> args_p, args_q;
  for (const CPoly& c : centrals) args_p.push_back(with_vars(c, ring));
  args_p.push_back(CPoly::variable(ring, "z1"));
  for (const CPoly& g : power_args) args_q.push_back(with_vars(pow_c(g, s), ring));
  args_q.push_back(CPoly::variable(ring, "z1"));
  return substitute(p, args_p) == substitute(q, args_q);
}

// Decompose each central companion into s-th powers, pool the power
// arguments, and rewrite p by the induced linear substitution.  The last
// variable passes through, so quasi-anisotropy is preserved by
// construction; the returned certificate is Asserted and flagged as such.
inline TransformResult transform_witness(const RadDWitness& w, const QuatAlgebra& alg,
                                         int nvars, int s = 2) {
  detail::require_centrals(w.centrals, nvars);
  if (w.p.vars().size() != w.centrals.size() + 1)
    throw std::invalid_argument("form arity does not match companion count");
  if (s < 1) throw std::invalid_argument("transform needs s >= 1");

  std::vector<CPoly> pool;
  // coeffs[t] maps pool index -> coefficient of g^s in f_t.
  std::vector<std::vector<Rational>> coeffs(w.centrals.size());
  for (std::size_t t = 0; t < w.centrals.size(); ++t) {
    coeffs[t].assign(pool.size(), Rational(0));
    for (auto& [c, g] : decompose_into_powers(w.centrals[t], s)) {
      auto it = std::find(pool.begin(), pool.end(), g);
      std::size_t idx;
      if (it == pool.end()) {
        pool.push_back(g);
        idx = pool.size() - 1;
        for (auto& row : coeffs) row.resize(pool.size(), Rational(0));
      } else {
        idx = static_cast<std::size_t>(it - pool.begin());
      }
      coeffs[t][idx] += c;
    }
  }

  const std::size_t l = pool.size();
  std::vector<std::string> new_vars;
  for (std::size_t k = 1; k <= l + 1; ++k) new_vars.push_back("w" + std::to_string(k));
  std::map<std::string, LinearCombo> assign;
  for (std::size_t t = 0; t < w.centrals.size(); ++t) {
    LinearCombo combo;
    for (std::size_t k = 0; k < l; ++k)
      if (!coeffs[t][k].is_zero())
        combo.emplace_back(coeffs[t][k], new_vars[k]);
    assign[w.p.vars()[t]] = std::move(combo);
  }
  assign[w.p.vars().back()] = {{Rational(1), new_vars.back()}};
  CPoly q = substitute_linear(w.p, new_vars, assign);

  if (!verify_transform_identity(w.p, w.centrals, q, pool, s))
    throw std::logic_error("transform identity failed to re-expand");

  TransformResult out{RadDPrimeWitness{q, FormCertificate{CertKind::Asserted}, {}},
                      pool};
  out.witness.companions.reserve(l);
  for (const CPoly& g : pool)
    out.witness.companions.push_back(realize_central(g, alg, nvars));
  return out;
}

// Sum-of-norms bridge: an accepted AP certificate induces a Rad_D witness
// with the diagonal form sum alpha_j z_(t,j)^2 + z_m^2, alpha = (1,-a,-b,ab).
// The pattern stays homogeneous only while 2*ceil(k/2) == 2, i.e. k <= 2;
// for odd k the companions are first multiplied by f.
inline RadDWitness induce_radd_from_ap(const TwoSidedIdeal& J, const NcPoly& f,
                                       const ApCertificate& cert) {
  detail::require_point_of(J, f);
  if (cert.k < 1 || cert.k > 2)
    throw std::invalid_argument("AP bridge requires exponent k <= 2");
  const Rational alpha[4] = {Rational(1), -J.algebra.a(), -J.algebra.b(),
                             J.algebra.a() * J.algebra.b()};
  std::vector<CPoly> centrals;
  for (const NcPoly& g : cert.companions) {
    NcPoly h = cert.k == 1 ? mul_poly(g, f) : g;
    ComponentVector v = expand(h);
    for (int j = 0; j < 4; ++j)
      centrals.push_back(v.components[static_cast<std::size_t>(j)]);
  }
  const std::size_t m = centrals.size() + 1;
  std::vector<std::string> zvars;
  for (std::size_t t = 1; t <= m; ++t) zvars.push_back("z" + std::to_string(t));
  CPoly p(zvars);
  for (std::size_t t = 0; t + 1 < m; ++t) {
    CPoly::Exponents e(m, 0);
    e[t] = 2;
    p.add_term(e, alpha[t % 4]);
  }
  CPoly::Exponents last(m, 0);
  last.back() = 2;
  p.add_term(last, 1);
  return RadDWitness{p, FormCertificate{CertKind::PositiveDefiniteDiagonal},
                     std::move(centrals)};
}

// ---- sampled zero-locus machinery ----

using Box = std::vector<std::pair<Rational, Rational>>;

namespace detail {

inline std::vector<std::vector<Rational>> grid_axes(const Box& box,
                                                    const Rational& step,
                                                    std::size_t ncoords) {
  if (step <= 0) throw std::invalid_argument("grid step must be positive");
  if (box.size() != ncoords)
    throw std::invalid_argument("box arity must match coordinate count");
  std::vector<std::vector<Rational>> axes(ncoords);
  std::size_t total = 1;
  for (std::size_t k = 0; k < ncoords; ++k) {
    if (box[k].first > box[k].second)
      throw std::invalid_argument("empty interval in grid box");
    for (Rational v = box[k].first; v <= box[k].second; v += step)
      axes[k].push_back(v);
    total *= axes[k].size();
    if (total > 5'000'000) throw ResourceError("grid too large");
  }
  return axes;
}

template <typename Fn>
void for_each_grid_point(const std::vector<std::vector<Rational>>& axes, Fn&& fn) {
  std::vector<std::size_t> idx(axes.size(), 0);
  std::vector<Rational> coords(axes.size());
  while (true) {
    for (std::size_t k = 0; k < axes.size(); ++k) coords[k] = axes[k][idx[k]];
    fn(coords);
    std::size_t k = axes.size();
    while (k > 0) {
      --k;
      if (++idx[k] < axes[k].size()) break;
      idx[k] = 0;
      if (k == 0) return;
    }
  }
}

inline std::vector<Quaternion> point_from_coords(const QuatAlgebra& alg, int nvars,
                                                 const std::vector<Rational>& coords) {
  std::vector<Quaternion> point;
  point.reserve(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) {
    std::size_t base = static_cast<std::size_t>(i) * 4;
    point.emplace_back(alg, coords[base], coords[base + 1], coords[base + 2],
                       coords[base + 3]);
  }
  return point;
}

}  // namespace detail

// All grid points of D^n (exact rational steps) where every generator of J
// evaluates to zero.  The grid is the product of per-coordinate ranges over
// the 4n basis coordinates, last coordinate varying fastest.
inline std::vector<std::vector<Quaternion>> zero_locus_grid(const TwoSidedIdeal& J,
                                                            const Box& box,
                                                            const Rational& step) {
  auto axes = detail::grid_axes(box, step, static_cast<std::size_t>(J.nvars) * 4);
  std::vector<std::vector<Quaternion>> locus;
  detail::for_each_grid_point(axes, [&](const std::vector<Rational>& coords) {
    std::vector<Quaternion> point = detail::point_from_coords(J.algebra, J.nvars, coords);
    for (const NcPoly& g : J.generators)
      if (!eval(g, point).is_zero()) return;
    locus.push_back(std::move(point));
  });
  return locus;
}

// Grid zero set of a central ideal, over the same coordinate grid.
inline std::vector<std::vector<Rational>> central_zero_set_grid(const CentralIdeal& jc,
                                                                const Box& box,
                                                                const Rational& step) {
  auto axes = detail::grid_axes(box, step, jc.vars().size());
  std::vector<std::vector<Rational>> zeros;
  detail::for_each_grid_point(axes, [&](const std::vector<Rational>& coords) {
    for (const CPoly& g : jc.generators())
      if (!eval_c(g, coords).is_zero()) return;
    zeros.push_back(coords);
  });
  return zeros;
}

struct SampleReport {
  bool success = false;
  std::size_t locus_size = 0;
  std::string failure_point;
  std::string failure_value;
  std::string note = "sampled check on a finite grid, not a proof";
};

inline std::string format_point(const std::vector<Quaternion>& point) {
  std::string out;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i > 0) out += ", ";
    out += "x" + std::to_string(i + 1) + "=" + format_quaternion(point[i]);
  }
  return out;
}

// Evaluates f at every sampled zero of J; reports the first failure.
inline SampleReport vanishes_on_zero_locus(const TwoSidedIdeal& J, const NcPoly& f,
                                           const Box& box, const Rational& step) {
  detail::require_point_of(J, f);
  SampleReport rep;
  auto locus = zero_locus_grid(J, box, step);
  rep.locus_size = locus.size();
  rep.success = true;
  for (const auto& point : locus) {
    Quaternion v = eval(f, point);
    if (!v.is_zero()) {
      rep.success = false;
      rep.failure_point = format_point(point);
      rep.failure_value = format_quaternion(v);
      break;
    }
  }
  return rep;
}

struct ProbeResult {
  std::string status;  // "consistent" | "consistent-vacuous" | "violation"
  std::string detail;
};

struct DRadicalSampleReport {
  std::vector<ProbeResult> probes;
  bool all_consistent = true;
};

// Decidable direction of the D-radical characterization: a probe whose four
// components all lie in J_c must vanish on the sampled zero locus.  A
// violation would contradict Z_D(J) = Z_K(J_c) and is reported as an engine
// bug.
inline DRadicalSampleReport check_d_radical_on_samples(const TwoSidedIdeal& J,
                                                       const std::vector<NcPoly>& probes,
                                                       const Box& box,
                                                       const Rational& step,
                                                       const GroebnerLimits& limits = {}) {
  CentralIdeal jc = central_part(J);
  const GroebnerBasis& basis = jc.basis(limits);
  auto locus = zero_locus_grid(J, box, step);
  DRadicalSampleReport rep;
  for (const NcPoly& probe : probes) {
    detail::require_point_of(J, probe);
    ComponentVector v = expand(probe);
    bool all_in = true;
    for (const CPoly& c : v.components)
      if (!ideal_member(c, basis, limits)) {
        all_in = false;
        break;
      }
    if (!all_in) {
      rep.probes.push_back({"consistent-vacuous",
                            "components not all in the central part; no claim"});
      continue;
    }
    bool vanished = true;
    std::string where;
    for (const auto& point : locus) {
      if (!eval(probe, point).is_zero()) {
        vanished = false;
        where = format_point(point);
        break;
      }
    }
    if (vanished) {
      rep.probes.push_back({"consistent", "components in central part; vanishes on grid"});
    } else {
      rep.probes.push_back({"violation", "engine bug: nonzero at " + where});
      rep.all_consistent = false;
    }
  }
  return rep;
}

}  // namespace qnull

#endif  // QNULL_NULLSATZ_HPP

// qnull: exact quaternion-algebra polynomial maps and Nullstellensatz
// certificate checking from the command line.
//
// Exit codes: 0 success/accept, 1 reject/mismatch, 2 usage or parse error,
// 3 resource cap exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qnull/qnull.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace qnull;

struct Context {
  std::string a_text = "-1";
  std::string b_text = "-1";
  int nvars = 1;
  bool json_out = false;
  std::string session_path;
  std::optional<Session> session;
  bool a_set = false, b_set = false, n_set = false;

  void load() {
    if (session_path.empty()) return;
    session = load_session(session_path);
    if (!a_set) a_text = format_rational(session->a);
    if (!b_set) b_text = format_rational(session->b);
    if (!n_set) nvars = session->nvars;
  }

  QuatAlgebra algebra() const {
    detail::Scanner sa(a_text), sb(b_text);
    Rational a = detail::parse_signed_rational(sa);
    Rational b = detail::parse_signed_rational(sb);
    if (!sa.eof() || !sb.eof())
      throw std::invalid_argument("bad algebra parameter");
    return QuatAlgebra(a, b);
  }

  NcPoly nc(const std::string& text) const {
    if (session) {
      if (const NcPoly* bound = session->find_nc(text)) return *bound;
    }
    return parse_ncpoly(text, algebra(), nvars);
  }
};

void attach_common(CLI::App* cmd, Context& ctx) {
  cmd->add_option("-a", ctx.a_text, "algebra parameter a (rational, < 0)")
      ->each([&](const std::string&) { ctx.a_set = true; });
  cmd->add_option("-b", ctx.b_text, "algebra parameter b (rational, < 0)")
      ->each([&](const std::string&) { ctx.b_set = true; });
  cmd->add_option("-n", ctx.nvars, "number of variables")
      ->each([&](const std::string&) { ctx.n_set = true; });
  cmd->add_flag("--json", ctx.json_out, "machine-readable output");
  cmd->add_option("--session", ctx.session_path,
                  "session file; bare names resolve to its bindings");
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<std::string> gather_generators(const std::vector<std::string>& args,
                                           const std::string& file) {
  std::vector<std::string> gens = args;
  if (!file.empty()) {
    std::istringstream in(read_text_file(file));
    std::string line;
    while (std::getline(in, line)) {
      std::size_t b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      std::size_t e = line.find_last_not_of(" \t\r");
      line = line.substr(b, e - b + 1);
      if (line.empty() || line[0] == '#') continue;
      gens.push_back(line);
    }
  }
  if (gens.empty()) throw std::invalid_argument("no generators given");
  return gens;
}

std::vector<std::string> inferred_vars_of_all(const std::vector<std::string>& texts) {
  std::string joined;
  for (const std::string& t : texts) joined += t + " + ";
  return infer_cpoly_vars(joined.empty() ? "0" : joined + "0");
}

Box parse_box(const std::string& text, std::size_t ncoords) {
  std::vector<std::pair<Rational, Rational>> intervals;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
    std::size_t colon = part.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("box interval must be lo:hi");
    detail::Scanner lo(std::string_view(part).substr(0, colon));
    detail::Scanner hi(std::string_view(part).substr(colon + 1));
    Rational l = detail::parse_signed_rational(lo);
    Rational h = detail::parse_signed_rational(hi);
    if (!lo.eof() || !hi.eof()) throw std::invalid_argument("bad box interval");
    intervals.emplace_back(l, h);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (intervals.size() == 1) return Box(ncoords, intervals.front());
  if (intervals.size() != ncoords)
    throw std::invalid_argument("box needs one interval or one per coordinate");
  return intervals;
}

json report_to_json(const VerdictReport& rep, const CertificateFile& file) {
  json j;
  j["check"] = rep.check;
  j["verdict"] = rep.verdict();
  j["certificate_class"] = rep.certificate_class;
  j["certificate_ok"] = rep.certificate_ok;
  j["asserted"] = rep.asserted;
  j["membership_poly"] = rep.membership_poly;
  j["normal_form"] = rep.normal_form;
  j["notes"] = rep.notes;
  json echo;
  echo["algebra"] = {format_rational(file.a), format_rational(file.b)};
  echo["nvars"] = file.nvars;
  echo["ideal"] = file.ideal;
  echo["f"] = file.f;
  if (file.kind != "ap") {
    echo["form"] = file.form;
    echo["cert"] = cert_kind_name(file.cert);
  }
  if (file.kind == "radd") echo["centrals"] = file.centrals;
  if (file.kind != "radd") echo["companions"] = file.companions;
  if (file.kind == "ap") echo["k"] = file.k;
  j["witness"] = echo;
  return j;
}

std::string report_to_text(const VerdictReport& rep) {
  std::string out;
  out += "check: " + rep.check + "\n";
  out += "verdict: " + rep.verdict() + "\n";
  out += "certificate: " + rep.certificate_class +
         (rep.certificate_ok ? " (ok)" : " (mismatch)") + "\n";
  out += "membership polynomial: " + rep.membership_poly + "\n";
  out += "normal form: " + rep.normal_form + "\n";
  for (const std::string& n : rep.notes) out += "note: " + n + "\n";
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"exact quaternion-algebra polynomial maps and Nullstellensatz certificates"};
  app.require_subcommand(1);

  Context ctx;

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a polynomial map at a point");
  std::string eval_poly;
  std::vector<std::string> eval_at;
  attach_common(eval_cmd, ctx);
  eval_cmd->add_option("poly", eval_poly, "nc-polynomial")->required();
  eval_cmd->add_option("--at", eval_at, "assignment x<i>=<quaternion>")->required();

  // expand / norm / trace
  auto* expand_cmd = app.add_subcommand("expand", "coordinate components of a map");
  std::string expand_poly;
  attach_common(expand_cmd, ctx);
  expand_cmd->add_option("poly", expand_poly, "nc-polynomial")->required();

  auto* norm_cmd = app.add_subcommand("norm", "reduced-norm polynomial");
  std::string norm_poly;
  attach_common(norm_cmd, ctx);
  norm_cmd->add_option("poly", norm_poly, "nc-polynomial")->required();

  auto* trace_cmd = app.add_subcommand("trace", "reduced-trace polynomial");
  std::string trace_poly;
  attach_common(trace_cmd, ctx);
  trace_cmd->add_option("poly", trace_poly, "nc-polynomial")->required();

  // polarize / decompose
  auto* polarize_cmd = app.add_subcommand("polarize", "print and verify the s-power identity");
  int polarize_s = 2;
  attach_common(polarize_cmd, ctx);
  polarize_cmd->add_option("-s", polarize_s, "number of factors")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "write a polynomial as a sum of s-th powers");
  int decompose_s = 2;
  std::string decompose_poly;
  attach_common(decompose_cmd, ctx);
  decompose_cmd->add_option("-s", decompose_s, "power")->required();
  decompose_cmd->add_option("poly", decompose_poly, "commutative polynomial")->required();

  // groebner / nf
  auto* groebner_cmd = app.add_subcommand("groebner", "reduced Groebner basis");
  std::vector<std::string> groebner_gens;
  std::string groebner_file, groebner_order = "grevlex";
  attach_common(groebner_cmd, ctx);
  groebner_cmd->add_option("gens", groebner_gens, "generators");
  groebner_cmd->add_option("--file", groebner_file, "read generators from file");
  groebner_cmd->add_option("--order", groebner_order, "lex | grevlex");

  auto* nf_cmd = app.add_subcommand("nf", "normal form modulo an ideal");
  std::vector<std::string> nf_gens;
  std::string nf_file, nf_order = "grevlex", nf_poly;
  attach_common(nf_cmd, ctx);
  nf_cmd->add_option("poly", nf_poly, "polynomial to reduce")->required();
  nf_cmd->add_option("--gen", nf_gens, "ideal generator");
  nf_cmd->add_option("--file", nf_file, "read generators from file");
  nf_cmd->add_option("--order", nf_order, "lex | grevlex");

  // central-part
  auto* central_cmd = app.add_subcommand("central-part", "central generators of a two-sided ideal");
  std::vector<std::string> central_gens;
  std::string central_file;
  attach_common(central_cmd, ctx);
  central_cmd->add_option("gens", central_gens, "nc-polynomial generators");
  central_cmd->add_option("--file", central_file, "read generators from file");

  // zeros
  auto* zeros_cmd = app.add_subcommand("zeros", "grid zero locus of a two-sided ideal");
  std::vector<std::string> zeros_gens;
  std::string zeros_file, zeros_box = "-1:1", zeros_step = "1";
  attach_common(zeros_cmd, ctx);
  zeros_cmd->add_option("gens", zeros_gens, "nc-polynomial generators");
  zeros_cmd->add_option("--file", zeros_file, "read generators from file");
  zeros_cmd->add_option("--box", zeros_box, "lo:hi or comma list per coordinate");
  zeros_cmd->add_option("--step", zeros_step, "rational grid step");

  // vanishes / dradical
  auto* vanishes_cmd = app.add_subcommand(
      "vanishes", "sampled check: does f vanish on the grid zero locus of an ideal");
  std::vector<std::string> vanishes_gens;
  std::string vanishes_file, vanishes_poly, vanishes_box = "-1:1", vanishes_step = "1";
  attach_common(vanishes_cmd, ctx);
  vanishes_cmd->add_option("poly", vanishes_poly, "nc-polynomial to test")->required();
  vanishes_cmd->add_option("--gen", vanishes_gens, "ideal generator");
  vanishes_cmd->add_option("--file", vanishes_file, "read generators from file");
  vanishes_cmd->add_option("--box", vanishes_box, "lo:hi or comma list per coordinate");
  vanishes_cmd->add_option("--step", vanishes_step, "rational grid step");

  auto* dradical_cmd = app.add_subcommand(
      "dradical", "sampled D-radical consistency check for probe polynomials");
  std::vector<std::string> dradical_gens, dradical_probes;
  std::string dradical_file, dradical_box = "-1:1", dradical_step = "1";
  attach_common(dradical_cmd, ctx);
  // Each occurrence of --probe/--gen takes exactly one value.
  dradical_cmd->add_option("--probe", dradical_probes, "probe nc-polynomial")
      ->required()
      ->type_size(1)
      ->expected(1, 1 << 20);
  dradical_cmd->add_option("--gen", dradical_gens, "ideal generator")
      ->type_size(1)
      ->expected(1, 1 << 20);
  dradical_cmd->add_option("--file", dradical_file, "read generators from file");
  dradical_cmd->add_option("--box", dradical_box, "lo:hi or comma list per coordinate");
  dradical_cmd->add_option("--step", dradical_step, "rational grid step");

  // check-cert / transform-cert
  auto* check_cmd = app.add_subcommand("check-cert", "check a certificate file");
  std::string check_kind, check_path, check_out;
  attach_common(check_cmd, ctx);
  check_cmd->add_option("kind", check_kind, "radd | raddprime | ap")->required();
  check_cmd->add_option("file", check_path, "certificate file")->required();
  check_cmd->add_option("--out", check_out, "also save the report to a file");

  auto* transform_cmd = app.add_subcommand(
      "transform-cert", "rewrite a radd certificate into a raddprime certificate");
  std::string transform_path, transform_out;
  int transform_s = 2;
  attach_common(transform_cmd, ctx);
  transform_cmd->add_option("file", transform_path, "radd certificate file")->required();
  transform_cmd->add_option("-s", transform_s, "power (quaternion degree is 2)");
  transform_cmd->add_option("--out", transform_out, "write the new certificate here");

  // session
  auto* session_cmd = app.add_subcommand("session", "echo a session file canonically");
  std::string session_file;
  attach_common(session_cmd, ctx);
  session_cmd->add_option("file", session_file, "session file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  ctx.load();

  if (eval_cmd->parsed()) {
    QuatAlgebra alg = ctx.algebra();
    NcPoly f = ctx.nc(eval_poly);
    std::vector<std::optional<Quaternion>> point(static_cast<std::size_t>(ctx.nvars));
    for (const std::string& assign : eval_at) {
      std::size_t eq = assign.find('=');
      if (eq == std::string::npos || assign[0] != 'x')
        throw std::invalid_argument("assignment must be x<i>=<quaternion>");
      int idx = std::stoi(assign.substr(1, eq - 1));
      if (idx < 1 || idx > ctx.nvars)
        throw std::invalid_argument("assignment variable out of range");
      point[static_cast<std::size_t>(idx - 1)] =
          parse_quaternion(assign.substr(eq + 1), alg);
    }
    std::vector<Quaternion> pt;
    for (int i = 0; i < ctx.nvars; ++i) {
      if (!point[static_cast<std::size_t>(i)])
        throw std::invalid_argument("missing assignment for x" + std::to_string(i + 1));
      pt.push_back(*point[static_cast<std::size_t>(i)]);
    }
    Quaternion v = eval(f, pt);
    if (ctx.json_out) {
      emit(json{{"value", format_quaternion(v)}});
    } else {
      std::cout << format_quaternion(v) << "\n";
    }
    return 0;
  }

  if (expand_cmd->parsed()) {
    ComponentVector v = expand(ctx.nc(expand_poly));
    if (ctx.json_out) {
      json j;
      j["components"] = {format_cpoly(v.components[0]), format_cpoly(v.components[1]),
                         format_cpoly(v.components[2]), format_cpoly(v.components[3])};
      emit(j);
    } else {
      for (const CPoly& c : v.components) std::cout << format_cpoly(c) << "\n";
    }
    return 0;
  }

  if (norm_cmd->parsed() || trace_cmd->parsed()) {
    bool is_norm = norm_cmd->parsed();
    NcPoly f = ctx.nc(is_norm ? norm_poly : trace_poly);
    CPoly out = is_norm ? reduced_norm_poly(f) : reduced_trace_poly(f);
    if (ctx.json_out) {
      emit(json{{is_norm ? "norm" : "trace", format_cpoly(out)}});
    } else {
      std::cout << format_cpoly(out) << "\n";
    }
    return 0;
  }

  if (polarize_cmd->parsed()) {
    if (polarize_s < 1 || polarize_s > 12)
      throw std::invalid_argument("polarize needs 1 <= s <= 12");
    std::vector<std::string> tvars;
    for (int t = 1; t <= polarize_s; ++t) tvars.push_back("t" + std::to_string(t));
    std::vector<CPoly> ts;
    for (const std::string& name : tvars) ts.push_back(CPoly::variable(tvars, name));
    CPoly rhs = polarization_rhs(polarize_s, ts);
    CPoly product = CPoly::constant(tvars, 1);
    for (const CPoly& t : ts) product = mul_c(product, t);
    bool ok = rhs == product;
    if (ctx.json_out) {
      emit(json{{"s", polarize_s},
                {"rhs", format_cpoly(rhs)},
                {"product", format_cpoly(product)},
                {"verdict", ok ? "OK" : "MISMATCH"}});
    } else {
      std::cout << "s = " << polarize_s << "\n";
      std::cout << "rhs = " << format_cpoly(rhs) << "\n";
      std::cout << "product = " << format_cpoly(product) << "\n";
      std::cout << (ok ? "OK" : "MISMATCH") << "\n";
    }
    return ok ? 0 : 1;
  }

  if (decompose_cmd->parsed()) {
    if (decompose_s < 1 || decompose_s > 12)
      throw std::invalid_argument("decompose needs 1 <= s <= 12");
    CPoly f = parse_cpoly(decompose_poly, infer_cpoly_vars(decompose_poly));
    auto parts = decompose_into_powers(f, decompose_s);
    CPoly sum(f.vars());
    for (const auto& [c, g] : parts)
      sum = add_c(sum, scale_c(c, pow_c(g, decompose_s)));
    bool ok = sum == f;
    if (ctx.json_out) {
      json terms = json::array();
      for (const auto& [c, g] : parts)
        terms.push_back({{"coefficient", format_rational(c)}, {"base", format_cpoly(g)}});
      emit(json{{"s", decompose_s},
                {"input", format_cpoly(f)},
                {"terms", terms},
                {"verdict", ok ? "OK" : "MISMATCH"}});
    } else {
      for (const auto& [c, g] : parts)
        std::cout << format_rational(c) << " : " << format_cpoly(g) << "\n";
      std::cout << (ok ? "OK" : "MISMATCH") << "\n";
    }
    return ok ? 0 : 1;
  }

  if (groebner_cmd->parsed() || nf_cmd->parsed()) {
    bool is_nf = nf_cmd->parsed();
    std::vector<std::string> texts =
        gather_generators(is_nf ? nf_gens : groebner_gens, is_nf ? nf_file : groebner_file);
    std::vector<std::string> all = texts;
    if (is_nf) all.push_back(nf_poly);
    std::vector<std::string> vars = inferred_vars_of_all(all);
    if (vars.empty()) vars.push_back("z1");
    std::vector<CPoly> gens;
    for (const std::string& t : texts) gens.push_back(parse_cpoly(t, vars));
    std::string order_name = is_nf ? nf_order : groebner_order;
    MonomialOrder order =
        order_name == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
    if (order_name != "lex" && order_name != "grevlex")
      throw std::invalid_argument("order must be lex or grevlex");
    GroebnerBasis basis = buchberger(gens, order);
    if (is_nf) {
      CPoly r = normal_form(parse_cpoly(nf_poly, vars), basis);
      if (ctx.json_out) {
        emit(json{{"normal_form", format_cpoly(r)},
                  {"member", r.is_zero()}});
      } else {
        std::cout << format_cpoly(r) << "\n";
      }
      return 0;
    }
    if (ctx.json_out) {
      json elems = json::array();
      for (const CPoly& g : basis.elements) elems.push_back(format_cpoly(g));
      emit(json{{"order", order_name}, {"basis", elems}});
    } else {
      for (const CPoly& g : basis.elements) std::cout << format_cpoly(g) << "\n";
    }
    return 0;
  }

  if (central_cmd->parsed()) {
    QuatAlgebra alg = ctx.algebra();
    std::vector<NcPoly> gens;
    for (const std::string& t : gather_generators(central_gens, central_file))
      gens.push_back(ctx.nc(t));
    CentralIdeal jc = central_part(TwoSidedIdeal(alg, ctx.nvars, std::move(gens)));
    if (ctx.json_out) {
      json out = json::array();
      for (const CPoly& g : jc.generators()) out.push_back(format_cpoly(g));
      emit(json{{"central_generators", out}});
    } else {
      for (const CPoly& g : jc.generators()) std::cout << format_cpoly(g) << "\n";
    }
    return 0;
  }

  if (zeros_cmd->parsed()) {
    QuatAlgebra alg = ctx.algebra();
    std::vector<NcPoly> gens;
    for (const std::string& t : gather_generators(zeros_gens, zeros_file))
      gens.push_back(ctx.nc(t));
    TwoSidedIdeal J(alg, ctx.nvars, std::move(gens));
    Box box = parse_box(zeros_box, static_cast<std::size_t>(ctx.nvars) * 4);
    detail::Scanner sc(zeros_step);
    Rational step = detail::parse_signed_rational(sc);
    if (!sc.eof()) throw std::invalid_argument("bad step");
    auto locus = zero_locus_grid(J, box, step);
    if (ctx.json_out) {
      json pts = json::array();
      for (const auto& pt : locus) {
        json p = json::array();
        for (const Quaternion& x : pt) p.push_back(format_quaternion(x));
        pts.push_back(p);
      }
      emit(json{{"count", locus.size()}, {"points", pts}});
    } else {
      for (const auto& pt : locus) std::cout << format_point(pt) << "\n";
      std::cout << locus.size() << " point(s)\n";
    }
    return 0;
  }

  if (vanishes_cmd->parsed()) {
    QuatAlgebra alg = ctx.algebra();
    std::vector<NcPoly> gens;
    for (const std::string& t : gather_generators(vanishes_gens, vanishes_file))
      gens.push_back(ctx.nc(t));
    TwoSidedIdeal J(alg, ctx.nvars, std::move(gens));
    Box box = parse_box(vanishes_box, static_cast<std::size_t>(ctx.nvars) * 4);
    detail::Scanner sc(vanishes_step);
    Rational step = detail::parse_signed_rational(sc);
    if (!sc.eof()) throw std::invalid_argument("bad step");
    SampleReport rep = vanishes_on_zero_locus(J, ctx.nc(vanishes_poly), box, step);
    if (ctx.json_out) {
      json j;
      j["success"] = rep.success;
      j["locus_size"] = rep.locus_size;
      if (!rep.success) {
        j["failure_point"] = rep.failure_point;
        j["failure_value"] = rep.failure_value;
      }
      j["note"] = rep.note;
      emit(j);
    } else {
      if (rep.success) {
        std::cout << "vanishes on all " << rep.locus_size << " sampled zero(s)\n";
      } else {
        std::cout << "fails at " << rep.failure_point << " with value "
                  << rep.failure_value << "\n";
      }
      std::cout << "note: " << rep.note << "\n";
    }
    return rep.success ? 0 : 1;
  }

  if (dradical_cmd->parsed()) {
    QuatAlgebra alg = ctx.algebra();
    std::vector<NcPoly> gens;
    for (const std::string& t : gather_generators(dradical_gens, dradical_file))
      gens.push_back(ctx.nc(t));
    TwoSidedIdeal J(alg, ctx.nvars, std::move(gens));
    Box box = parse_box(dradical_box, static_cast<std::size_t>(ctx.nvars) * 4);
    detail::Scanner sc(dradical_step);
    Rational step = detail::parse_signed_rational(sc);
    if (!sc.eof()) throw std::invalid_argument("bad step");
    std::vector<NcPoly> probes;
    for (const std::string& t : dradical_probes) probes.push_back(ctx.nc(t));
    DRadicalSampleReport rep = check_d_radical_on_samples(J, probes, box, step);
    if (ctx.json_out) {
      json entries = json::array();
      for (std::size_t t = 0; t < probes.size(); ++t)
        entries.push_back({{"probe", dradical_probes[t]},
                           {"status", rep.probes[t].status},
                           {"detail", rep.probes[t].detail}});
      emit(json{{"probes", entries}, {"all_consistent", rep.all_consistent}});
    } else {
      for (std::size_t t = 0; t < probes.size(); ++t)
        std::cout << rep.probes[t].status << ": " << dradical_probes[t] << " ("
                  << rep.probes[t].detail << ")\n";
    }
    return rep.all_consistent ? 0 : 1;
  }

  if (check_cmd->parsed()) {
    CertificateFile file = parse_certificate_file(read_text_file(check_path), check_kind);
    LoadedCertificate cert = elaborate_certificate(file);
    VerdictReport rep;
    if (cert.radd) {
      rep = check_radd_witness(cert.J, cert.f, *cert.radd);
    } else if (cert.raddprime) {
      rep = check_raddprime_witness(cert.J, cert.f, *cert.raddprime);
    } else {
      rep = check_ap_certificate(cert.J, cert.f, *cert.ap);
    }
    std::string rendered =
        ctx.json_out ? report_to_json(rep, file).dump(2) + "\n" : report_to_text(rep);
    std::cout << rendered;
    if (!check_out.empty()) write_text_file(check_out, rendered);
    return rep.accepted ? 0 : 1;
  }

  if (transform_cmd->parsed()) {
    CertificateFile file = parse_certificate_file(read_text_file(transform_path), "radd");
    LoadedCertificate cert = elaborate_certificate(file);
    TransformResult result =
        transform_witness(*cert.radd, cert.J.algebra, cert.J.nvars, transform_s);
    CertificateFile out = make_raddprime_file(cert.J, cert.f, result.witness);
    std::string rendered = serialize_certificate_file(out);
    if (ctx.json_out) {
      json power_args = json::array();
      for (const CPoly& g : result.power_args) power_args.push_back(format_cpoly(g));
      emit(json{{"certificate", rendered}, {"power_args", power_args}});
    } else {
      std::cout << rendered;
    }
    if (!transform_out.empty()) write_text_file(transform_out, rendered);
    return 0;
  }

  if (session_cmd->parsed()) {
    Session s = load_session(session_file);
    std::cout << serialize_session(s);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qnull::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const qnull::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

#ifndef QNULL_CERTIO_HPP
#define QNULL_CERTIO_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qnull/coordbridge.hpp"
#include "qnull/cpoly.hpp"
#include "qnull/ncpoly.hpp"
#include "qnull/nullsatz.hpp"
#include "qnull/parse.hpp"
#include "qnull/quaternion.hpp"

namespace qnull {

// Line-oriented certificate file.  Polynomials are stored as text so that
// serialize(parse(s)) reproduces a canonical file byte for byte.
struct CertificateFile {
  std::string kind;  // "radd" | "raddprime" | "ap"
  Rational a = -1, b = -1;
  int nvars = 1;
  std::vector<std::string> ideal;
  std::string f;
  std::string form;                    // radd / raddprime
  CertKind cert = CertKind::Asserted;  // radd / raddprime
  std::vector<std::string> centrals;   // radd
  std::vector<std::string> companions; // raddprime / ap
  int k = 1;                           // ap

  friend bool operator==(const CertificateFile& x, const CertificateFile& y) {
    return x.kind == y.kind && x.a == y.a && x.b == y.b && x.nvars == y.nvars &&
           x.ideal == y.ideal && x.f == y.f && x.form == y.form && x.cert == y.cert &&
           x.centrals == y.centrals && x.companions == y.companions && x.k == y.k;
  }
};

struct LoadedCertificate {
  TwoSidedIdeal J;
  NcPoly f;
  std::optional<RadDWitness> radd;
  std::optional<RadDPrimeWitness> raddprime;
  std::optional<ApCertificate> ap;
};

namespace detail {

inline std::vector<std::string> z_names(std::size_t m, char cls) {
  std::vector<std::string> v;
  for (std::size_t t = 1; t <= m; ++t) v.push_back(cls + std::to_string(t));
  return v;
}

// Rethrow parse failures with the certificate file's own line number.
template <typename Fn>
auto at_file_line(int line, const std::string& what, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw ParseError("malformed " + what + " (" + e.what() + ")", line, 1);
  }
}

inline Rational parse_signed_rational(detail::Scanner& sc) {
  bool negative = sc.accept('-');
  Rational v = sc.read_rational();
  return negative ? Rational(-v) : v;
}

}  // namespace detail

inline CertificateFile parse_certificate_file(const std::string& text,
                                              const std::string& kind) {
  if (kind != "radd" && kind != "raddprime" && kind != "ap")
    throw std::invalid_argument("unknown certificate kind: " + kind);
  CertificateFile file;
  file.kind = kind;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool saw_algebra = false, saw_nvars = false, saw_f = false, saw_form = false,
       saw_cert = false, saw_k = false;
  std::vector<std::pair<std::string, int>> ideal_lines, central_lines,
      companion_lines;
  std::pair<std::string, int> f_line, form_line;
  std::vector<std::pair<std::string, int>>* section_lines = nullptr;

  auto strip = [](std::string s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    std::size_t e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (line.empty() || line[0] == '#') continue;
    auto starts = [&](const char* prefix) {
      return line.rfind(prefix, 0) == 0;
    };
    if (starts("algebra ")) {
      detail::Scanner sc(std::string_view(line).substr(8));
      file.a = detail::parse_signed_rational(sc);
      file.b = detail::parse_signed_rational(sc);
      if (!sc.eof()) throw ParseError("trailing input after algebra parameters", lineno, 1);
      saw_algebra = true;
      section_lines = nullptr;
    } else if (starts("nvars ")) {
      detail::Scanner sc(std::string_view(line).substr(6));
      Int n = sc.read_integer();
      if (!sc.eof() || n < 1 || n > 64) throw ParseError("bad nvars", lineno, 1);
      file.nvars = static_cast<int>(n);
      saw_nvars = true;
      section_lines = nullptr;
    } else if (line == "ideal:") {
      section_lines = &ideal_lines;
    } else if (line == "centrals:") {
      section_lines = &central_lines;
    } else if (line == "companions:") {
      section_lines = &companion_lines;
    } else if (starts("f:")) {
      f_line = {strip(line.substr(2)), lineno};
      saw_f = true;
      section_lines = nullptr;
    } else if (starts("form:")) {
      form_line = {strip(line.substr(5)), lineno};
      saw_form = true;
      section_lines = nullptr;
    } else if (starts("cert:")) {
      std::string name = strip(line.substr(5));
      std::optional<CertKind> ck = cert_kind_from_name(name);
      if (!ck) throw ParseError("unknown certificate class " + name, lineno, 1);
      file.cert = *ck;
      saw_cert = true;
      section_lines = nullptr;
    } else if (starts("k:")) {
      detail::Scanner sc(std::string_view(line).substr(2));
      Int kk = sc.read_integer();
      if (!sc.eof() || kk < 1 || kk > 1024) throw ParseError("bad exponent k", lineno, 1);
      file.k = static_cast<int>(kk);
      saw_k = true;
      section_lines = nullptr;
    } else if (section_lines != nullptr) {
      section_lines->push_back({line, lineno});
    } else {
      throw ParseError("unexpected line: " + line, lineno, 1);
    }
  }

  if (!saw_algebra) throw ParseError("missing algebra header", lineno, 1);
  if (!saw_nvars) throw ParseError("missing nvars header", lineno, 1);
  if (ideal_lines.empty()) throw ParseError("missing ideal section", lineno, 1);
  if (!saw_f) throw ParseError("missing f: line", lineno, 1);
  if (kind != "ap" && (!saw_form || !saw_cert))
    throw ParseError("missing form:/cert: lines", lineno, 1);
  if (kind == "ap" && !saw_k) throw ParseError("missing k: line", lineno, 1);

  // Validate every polynomial now so diagnostics carry file line numbers.
  QuatAlgebra alg(file.a, file.b);
  for (auto& [t, ln] : ideal_lines) {
    detail::at_file_line(ln, "ideal generator",
                         [&] { return parse_ncpoly(t, alg, file.nvars); });
    file.ideal.push_back(t);
  }
  detail::at_file_line(f_line.second, "f: line",
                       [&] { return parse_ncpoly(f_line.first, alg, file.nvars); });
  file.f = f_line.first;
  const std::vector<std::string> cv = coordinate_vars(file.nvars);
  for (auto& [t, ln] : central_lines) {
    detail::at_file_line(ln, "central companion", [&] { return parse_cpoly(t, cv); });
    file.centrals.push_back(t);
  }
  for (auto& [t, ln] : companion_lines) {
    detail::at_file_line(ln, "companion",
                         [&] { return parse_ncpoly(t, alg, file.nvars); });
    file.companions.push_back(t);
  }
  if (kind == "radd") {
    auto zv = detail::z_names(file.centrals.size() + 1, 'z');
    detail::at_file_line(form_line.second, "form: line",
                         [&] { return parse_cpoly(form_line.first, zv); });
    file.form = form_line.first;
  } else if (kind == "raddprime") {
    auto wv = detail::z_names(file.companions.size() + 1, 'w');
    detail::at_file_line(form_line.second, "form: line",
                         [&] { return parse_cpoly(form_line.first, wv); });
    file.form = form_line.first;
  }
  return file;
}

inline std::string serialize_certificate_file(const CertificateFile& file) {
  std::string out;
  out += "algebra " + format_rational(file.a) + " " + format_rational(file.b) + "\n";
  out += "nvars " + std::to_string(file.nvars) + "\n";
  out += "ideal:\n";
  for (const std::string& g : file.ideal) out += g + "\n";
  out += "f: " + file.f + "\n";
  if (file.kind != "ap") {
    out += "form: " + file.form + "\n";
    out += "cert: " + cert_kind_name(file.cert) + "\n";
  }
  if (file.kind == "radd") {
    out += "centrals:\n";
    for (const std::string& c : file.centrals) out += c + "\n";
  }
  if (file.kind != "radd") {
    out += "companions:\n";
    for (const std::string& g : file.companions) out += g + "\n";
  }
  if (file.kind == "ap") out += "k: " + std::to_string(file.k) + "\n";
  return out;
}

inline LoadedCertificate elaborate_certificate(const CertificateFile& file) {
  QuatAlgebra alg(file.a, file.b);
  std::vector<NcPoly> gens;
  for (const std::string& t : file.ideal)
    gens.push_back(parse_ncpoly(t, alg, file.nvars));
  TwoSidedIdeal J(alg, file.nvars, std::move(gens));
  NcPoly f = parse_ncpoly(file.f, alg, file.nvars);
  LoadedCertificate loaded{std::move(J), std::move(f), {}, {}, {}};
  const std::vector<std::string> cv = coordinate_vars(file.nvars);
  if (file.kind == "radd") {
    RadDWitness w;
    w.cert.kind = file.cert;
    for (const std::string& t : file.centrals) w.centrals.push_back(parse_cpoly(t, cv));
    w.p = parse_cpoly(file.form, detail::z_names(w.centrals.size() + 1, 'z'));
    loaded.radd = std::move(w);
  } else if (file.kind == "raddprime") {
    RadDPrimeWitness w;
    w.cert.kind = file.cert;
    for (const std::string& t : file.companions)
      w.companions.push_back(parse_ncpoly(t, alg, file.nvars));
    w.q = parse_cpoly(file.form, detail::z_names(w.companions.size() + 1, 'w'));
    loaded.raddprime = std::move(w);
  } else {
    ApCertificate c;
    c.k = file.k;
    for (const std::string& t : file.companions)
      c.companions.push_back(parse_ncpoly(t, alg, file.nvars));
    loaded.ap = std::move(c);
  }
  return loaded;
}

// Canonical files from typed objects; polynomial texts come from the
// printers, so round trips are stable.
inline CertificateFile make_radd_file(const TwoSidedIdeal& J, const NcPoly& f,
                                      const RadDWitness& w) {
  CertificateFile file;
  file.kind = "radd";
  file.a = J.algebra.a();
  file.b = J.algebra.b();
  file.nvars = J.nvars;
  for (const NcPoly& g : J.generators) file.ideal.push_back(format_ncpoly(g));
  file.f = format_ncpoly(f);
  file.form = format_cpoly(w.p);
  file.cert = w.cert.kind;
  for (const CPoly& c : w.centrals) file.centrals.push_back(format_cpoly(c));
  return file;
}

inline CertificateFile make_raddprime_file(const TwoSidedIdeal& J, const NcPoly& f,
                                           const RadDPrimeWitness& w) {
  CertificateFile file;
  file.kind = "raddprime";
  file.a = J.algebra.a();
  file.b = J.algebra.b();
  file.nvars = J.nvars;
  for (const NcPoly& g : J.generators) file.ideal.push_back(format_ncpoly(g));
  file.f = format_ncpoly(f);
  file.form = format_cpoly(w.q);
  file.cert = w.cert.kind;
  for (const NcPoly& g : w.companions) file.companions.push_back(format_ncpoly(g));
  return file;
}

inline CertificateFile make_ap_file(const TwoSidedIdeal& J, const NcPoly& f,
                                    const ApCertificate& c) {
  CertificateFile file;
  file.kind = "ap";
  file.a = J.algebra.a();
  file.b = J.algebra.b();
  file.nvars = J.nvars;
  for (const NcPoly& g : J.generators) file.ideal.push_back(format_ncpoly(g));
  file.f = format_ncpoly(f);
  for (const NcPoly& g : c.companions) file.companions.push_back(format_ncpoly(g));
  file.k = c.k;
  return file;
}

// ---- named-binding sessions ----

struct Session {
  Rational a = -1, b = -1;
  int nvars = 1;
  std::vector<std::pair<std::string, NcPoly>> nc_bindings;
  std::vector<std::pair<std::string, CPoly>> c_bindings;

  QuatAlgebra algebra() const { return QuatAlgebra(a, b); }

  const NcPoly* find_nc(const std::string& name) const {
    for (const auto& [n, p] : nc_bindings)
      if (n == name) return &p;
    return nullptr;
  }
  const CPoly* find_c(const std::string& name) const {
    for (const auto& [n, p] : c_bindings)
      if (n == name) return &p;
    return nullptr;
  }
};

inline Session parse_session(const std::string& text) {
  Session session;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool saw_algebra = false, saw_nvars = false;
  auto strip = [](std::string s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    std::size_t e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("algebra ", 0) == 0) {
      detail::Scanner sc(std::string_view(line).substr(8));
      session.a = detail::parse_signed_rational(sc);
      session.b = detail::parse_signed_rational(sc);
      if (!sc.eof()) throw ParseError("trailing input after algebra parameters", lineno, 1);
      saw_algebra = true;
      continue;
    }
    if (line.rfind("nvars ", 0) == 0) {
      detail::Scanner sc(std::string_view(line).substr(6));
      Int n = sc.read_integer();
      if (!sc.eof() || n < 1 || n > 64) throw ParseError("bad nvars", lineno, 1);
      session.nvars = static_cast<int>(n);
      saw_nvars = true;
      continue;
    }
    bool is_nc = line.rfind("nc ", 0) == 0;
    bool is_cp = line.rfind("cp ", 0) == 0;
    if (!is_nc && !is_cp) throw ParseError("unexpected line: " + line, lineno, 1);
    if (!saw_algebra || !saw_nvars)
      throw ParseError("bindings must follow algebra and nvars headers", lineno, 1);
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("binding needs '='", lineno, 1);
    std::string name = strip(line.substr(3, eq - 3));
    std::string body = strip(line.substr(eq + 1));
    if (name.empty()) throw ParseError("binding needs a name", lineno, 1);
    if (session.find_nc(name) || session.find_c(name))
      throw ParseError("duplicate binding " + name, lineno, 1);
    if (is_nc) {
      NcPoly p = detail::at_file_line(lineno, "binding " + name, [&] {
        return parse_ncpoly(body, session.algebra(), session.nvars);
      });
      session.nc_bindings.emplace_back(name, std::move(p));
    } else {
      CPoly p = detail::at_file_line(lineno, "binding " + name, [&] {
        return parse_cpoly(body, coordinate_vars(session.nvars));
      });
      session.c_bindings.emplace_back(name, std::move(p));
    }
  }
  return session;
}

inline std::string serialize_session(const Session& session) {
  std::string out;
  out += "algebra " + format_rational(session.a) + " " + format_rational(session.b) + "\n";
  out += "nvars " + std::to_string(session.nvars) + "\n";
  for (const auto& [name, p] : session.nc_bindings)
    out += "nc " + name + " = " + format_ncpoly(p) + "\n";
  for (const auto& [name, p] : session.c_bindings)
    out += "cp " + name + " = " + format_cpoly(p) + "\n";
  return out;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

inline Session load_session(const std::string& path) {
  return parse_session(read_text_file(path));
}

inline void save_session(const Session& session, const std::string& path) {
  write_text_file(path, serialize_session(session));
}

}  // namespace qnull

#endif  // QNULL_CERTIO_HPP

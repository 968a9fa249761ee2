#include "seifsec/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "seifsec/quotient.hpp"
#include "seifsec/sections.hpp"
#include "seifsec/seifert.hpp"
#include "seifsec/sphere.hpp"
#include "seifsec/surgery.hpp"
#include "seifsec/wps.hpp"

namespace seifsec::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json pairs_json(const std::vector<ExceptionalPair>& pairs) {
  Json arr = Json::array();
  for (const auto& p : pairs) arr.push_back(Json::array({p.alpha, p.beta}));
  return arr;
}

Json normal_form_json(const NormalForm& nf) {
  return Json{{"g", nf.base_genus}, {"b", nf.b}, {"pairs", pairs_json(nf.singular_pairs)}};
}

std::string signs_text(const BoundarySigns& s) {
  if (s.positive && s.negative) return "+/-";
  return s.positive ? "+" : "-";
}

std::string signed_text(Int v) { return (v > 0 ? "+" : "") + std::to_string(v); }

std::string sphere_text(const SphereFibration& f) {
  if (f.alpha1 == 1 && f.alpha2 == 1) return "S^3, Hopf fibration";
  return "S^3, weights (" + std::to_string(f.alpha1) + "," + std::to_string(f.alpha2) + ")";
}

// ---------------------------------------------------------------------------
// info

struct InfoOptions {
  std::string spec;
  bool json = false;
};

void cmd_info(const InfoOptions& o, std::ostream& out) {
  const SeifertData m = parse_seifert(o.spec);
  const NormalForm nf = normalize(m);
  const Rational e = euler_number(m);
  const OneSectionResult one = classify_one_section(m);
  const auto sphere = recognize_sphere(m);

  if (o.json) {
    Json signs = Json::array();
    for (const auto& s : one.singular_signs) signs.push_back(Json{{"pair", s.pair_index + 1}, {"signs", signs_text(s)}});
    Json j;
    j["schema"] = kSchemaVersion;
    j["input"] = to_string(m);
    j["normal_form"] = normal_form_json(nf);
    j["euler"] = e.to_string();
    j["one_section"] = Json{{"exists", one.exists},
                            {"genus", one.exists ? Json(one.genus) : Json(nullptr)},
                            {"net_regular_boundary", one.exists ? Json(one.net_regular_boundary) : Json(nullptr)},
                            {"signs", signs},
                            {"obstructing_pair", one.obstructing_pair ? Json(*one.obstructing_pair + 1) : Json(nullptr)}};
    j["sphere"] = sphere ? Json{{"alpha1", sphere->alpha1}, {"alpha2", sphere->alpha2}} : Json(nullptr);
    out << dump(j);
    return;
  }

  out << "input         " << to_string(m) << "\n";
  out << "normal form   " << to_string(nf) << "\n";
  out << "euler number  " << e << "\n";
  if (sphere) out << "recognised    " << sphere_text(*sphere) << "\n";
  if (!one.exists) {
    const auto& p = m.pairs()[*one.obstructing_pair];
    out << "1-section     none: pair " << *one.obstructing_pair + 1 << " " << p << " has beta != +-1 mod alpha\n";
    return;
  }
  out << "1-section     exists, genus " << one.genus << ", b+ - b- = " << one.net_regular_boundary;
  if (one.free_sign_fibres() > 0) out << " (+1 per alpha=2 fibre taken negative)";
  out << "\n";
  for (const auto& s : one.singular_signs) {
    out << "  pair " << s.pair_index + 1 << " " << m.pairs()[s.pair_index] << "  boundary sign " << signs_text(s) << "\n";
  }
}

// ---------------------------------------------------------------------------
// sections

struct SectionsOptions {
  std::string spec;
  Int d = 0;
  Int scan = 0;
  bool json = false;
};

std::string obstruction_text(const SectionObstruction& ob) { return to_string(ob.kind) + ": " + ob.message; }

Json section_json(const SeifertData& m, Int d, const PositiveSectionResult& res) {
  Json j;
  j["d"] = d;
  if (const auto* r = std::get_if<SectionReport>(&res)) {
    Json roles = Json::array();
    for (const auto& role : r->fiber_roles) roles.push_back(to_string(role));
    j["exists"] = true;
    j["genus"] = r->genus() ? Json(*r->genus()) : Json(nullptr);
    j["boundary"] = r->boundary_count;
    j["roles"] = roles;
    j["b_bar"] = r->b_bar;
    j["chi"] = rh_quotient_chi(m, d, *r);
    j["obstruction"] = nullptr;
  } else {
    const auto& ob = std::get<SectionObstruction>(res);
    j["exists"] = false;
    j["genus"] = nullptr;
    j["boundary"] = nullptr;
    j["roles"] = nullptr;
    j["b_bar"] = ob.kind == SectionObstruction::Kind::NegativeBBar ? Json(ob.b_bar) : Json(nullptr);
    j["chi"] = nullptr;
    j["obstruction"] = Json{{"kind", to_string(ob.kind)},
                            {"pair", ob.pair_index ? Json(*ob.pair_index + 1) : Json(nullptr)},
                            {"message", ob.message}};
  }
  return j;
}

std::string roles_text(const SectionReport& r) {
  std::string s;
  for (std::size_t i = 0; i < r.fiber_roles.size(); ++i) s += (i ? " " : "") + to_string(r.fiber_roles[i]);
  return s.empty() ? "-" : s;
}

std::string topology_text(const SectionReport& r) {
  if (auto g = r.genus()) return std::to_string(*g);
  return "closed(chi=" + std::to_string(std::get<ClosedUndeterminedComponents>(r.topology).euler_characteristic) + ")";
}

void print_single_section(const SeifertData& m, Int d, const PositiveSectionResult& res, std::ostream& out) {
  if (const auto* ob = std::get_if<SectionObstruction>(&res)) {
    out << "d = " << d << ": no positive " << d << "-section (" << obstruction_text(*ob) << ")\n";
    return;
  }
  const auto& r = std::get<SectionReport>(res);
  out << "d = " << d << ": positive " << d << "-section\n";
  out << "  roles          " << roles_text(r) << "\n";
  out << "  b_bar          " << r.b_bar << "\n";
  out << "  k (singular)   " << r.singular_boundary_count() << "\n";
  if (!r.boundary_pairs.empty()) {
    out << "  boundary pairs";
    for (std::size_t i = 0; i < r.boundary_pairs.size(); ++i) {
      out << (i ? ", " : " ") << "#" << r.boundary_pairs[i] + 1 << " eps=" << signed_text(r.epsilons[i])
          << " a=" << r.a_coeffs[i];
    }
    out << "\n";
  }
  out << "  boundary       " << r.boundary_count << "\n";
  if (auto g = r.genus()) {
    out << "  genus          " << *g << "\n";
  } else {
    out << "  closed         chi = " << rh_quotient_chi(m, d, r) << ", components undetermined\n";
  }
  out << "  chi (capped)   " << rh_quotient_chi(m, d, r) << "\n";
}

void cmd_sections(const SectionsOptions& o, std::ostream& out) {
  const SeifertData m = parse_seifert(o.spec);
  const Rational e = euler_number(m);
  const bool scan = o.scan > 0;
  const Int lo = scan ? 1 : o.d;
  const Int hi = scan ? o.scan : o.d;
  if (lo < 1) throw std::invalid_argument("d must be positive");

  std::vector<PositiveSectionResult> results;
  for (Int d = lo; d <= hi; ++d) results.push_back(classify_positive_d_section(m, d));

  if (o.json) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["input"] = to_string(m);
    j["normal_form"] = normal_form_json(normalize(m));
    j["euler"] = e.to_string();
    Json sections = Json::array();
    for (Int d = lo; d <= hi; ++d) sections.push_back(section_json(m, d, results[static_cast<std::size_t>(d - lo)]));
    j["sections"] = sections;
    out << dump(j);
    return;
  }

  out << "input         " << to_string(m) << "\n";
  out << "euler number  " << e << "\n";
  if (!scan) {
    print_single_section(m, o.d, results.front(), out);
    return;
  }
  out << "scan          d = 1.." << hi << "\n";
  out << std::setw(6) << "d" << std::setw(8) << "genus" << std::setw(10) << "boundary" << std::setw(8) << "b_bar"
      << "  roles\n";
  int found = 0;
  for (Int d = lo; d <= hi; ++d) {
    const auto* r = std::get_if<SectionReport>(&results[static_cast<std::size_t>(d - lo)]);
    if (!r) continue;
    ++found;
    out << std::setw(6) << d << std::setw(8) << topology_text(*r) << std::setw(10) << r->boundary_count
        << std::setw(8) << r->b_bar << "  " << roles_text(*r) << "\n";
  }
  if (found == 0) {
    out << "none: no positive d-section for d <= " << hi;
    if (e.sign() > 0) out << " (euler number " << e << " > 0)";
    out << "\n";
  }
}

// ---------------------------------------------------------------------------
// s3

struct S3Options {
  std::vector<Int> alphas;
  Int k_max = 3;
  bool verify = false;
  bool json = false;
};

struct RowCheck {
  std::optional<Int> general;       // genus from the d-section classification
  bool general_boundary_ok = false;
  Int rh_hopf = 0;
  Rational degree_genus;
  bool agree = false;
};

RowCheck verify_row(const SphereFibration& f, const TableRow& row) {
  RowCheck c;
  const auto res = classify_positive_d_section(f.seifert(), row.d);
  if (const auto* r = std::get_if<SectionReport>(&res)) {
    c.general = r->genus();
    c.general_boundary_ok =
        r->boundary_count == row.boundary_count && r->singular_boundary_count() == row.singular_boundary_count();
  }
  c.rh_hopf = rh_hopf_lift_genus(f, row);
  c.degree_genus = degree_genus({1, f.alpha1, f.alpha2}, row.d);
  c.agree = c.general && *c.general == row.genus && c.general_boundary_ok && c.rh_hopf == row.genus &&
            c.degree_genus.is_integer() && c.degree_genus == Rational(row.genus);
  return c;
}

int cmd_s3(const S3Options& o, std::ostream& out) {
  if (o.alphas.size() != 2) throw std::invalid_argument("--alphas takes two weights");
  if (o.k_max < 0) throw std::invalid_argument("--k-max must be non-negative");
  const SphereFibration f = sphere_from_weights(o.alphas[0], o.alphas[1]);
  const auto rows = table_rows(f, o.k_max);
  const Rational e = euler_number(f.seifert());

  std::vector<RowCheck> checks;
  int disagreements = 0;
  if (o.verify) {
    for (const auto& row : rows) {
      checks.push_back(verify_row(f, row));
      if (!checks.back().agree) ++disagreements;
    }
  }

  if (o.json) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["input"] = Json{{"alpha1", f.alpha1}, {"alpha2", f.alpha2}, {"k_max", o.k_max}};
    j["fibration"] = Json{{"seifert", to_string(f.seifert())}, {"beta1", f.beta1}, {"beta2", f.beta2}};
    j["euler"] = e.to_string();
    Json arr = Json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& row = rows[i];
      Json r{{"family", to_string(row.family)}, {"k", row.k_param},           {"d", row.d},
             {"boundary", row.boundary_count},  {"c1_boundary", row.c1_in_boundary},
             {"c2_boundary", row.c2_in_boundary}, {"genus", row.genus}};
      if (o.verify) {
        const auto& c = checks[i];
        r["verify"] = Json{{"general", c.general ? Json(*c.general) : Json(nullptr)},
                           {"table", row.genus},
                           {"rh_hopf", c.rh_hopf},
                           {"degree_genus", c.degree_genus.to_string()},
                           {"agree", c.agree}};
      }
      arr.push_back(r);
    }
    j["rows"] = arr;
    if (o.verify) j["disagreements"] = disagreements;
    out << dump(j);
    return disagreements == 0 ? kExitOk : kExitDisagreement;
  }

  out << "fibration     " << to_string(f.seifert()) << "  (alpha1, alpha2) = (" << f.alpha1 << "," << f.alpha2
      << ")\n";
  out << "euler number  " << e << "\n";
  out << std::left << std::setw(15) << "family" << std::right << std::setw(4) << "k" << std::setw(6) << "d"
      << std::setw(5) << "#bd" << std::setw(4) << "C1" << std::setw(4) << "C2" << std::setw(7) << "genus";
  if (o.verify) {
    out << std::setw(7) << "k_sing" << std::setw(9) << "general" << std::setw(9) << "rh_hopf" << std::setw(8)
        << "deg_gen" << "  status";
  }
  out << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    out << std::left << std::setw(15) << to_string(row.family) << std::right << std::setw(4) << row.k_param
        << std::setw(6) << row.d << std::setw(5) << row.boundary_count << std::setw(4)
        << (row.c1_in_boundary ? "bd" : "-") << std::setw(4) << (row.c2_in_boundary ? "bd" : "-") << std::setw(7)
        << row.genus;
    if (o.verify) {
      const auto& c = checks[i];
      out << std::setw(7) << row.singular_boundary_count() << std::setw(9)
          << (c.general ? std::to_string(*c.general) : std::string("none")) << std::setw(9) << c.rh_hopf
          << std::setw(8) << c.degree_genus.to_string() << "  " << (c.agree ? "agree" : "DISAGREE");
    }
    out << "\n";
  }
  if (o.verify) {
    out << "verification  " << rows.size() - static_cast<std::size_t>(disagreements) << "/" << rows.size()
        << " rows agree\n";
  }
  return disagreements == 0 ? kExitOk : kExitDisagreement;
}

// ---------------------------------------------------------------------------
// quotient, surgery, wps

struct QuotientOptions {
  std::string spec;
  Int d = 1;
  bool json = false;
};

void cmd_quotient(const QuotientOptions& o, std::ostream& out) {
  const SeifertData m = parse_seifert(o.spec);
  const SeifertData q = zd_quotient(m, o.d);
  const Rational e = euler_number(m);
  const Rational eq = euler_number(q);
  const bool ok = eq == Rational(o.d) * e;
  if (o.json) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["input"] = to_string(m);
    j["d"] = o.d;
    j["quotient"] = to_string(q);
    j["normal_form"] = normal_form_json(normalize(q));
    j["euler"] = e.to_string();
    j["quotient_euler"] = eq.to_string();
    j["euler_check"] = ok;
    out << dump(j);
    return;
  }
  out << "input           " << to_string(m) << "\n";
  out << "d               " << o.d << "\n";
  out << "quotient        " << to_string(q) << "\n";
  out << "normal form     " << to_string(normalize(q)) << "\n";
  out << "euler number    " << e << "\n";
  out << "quotient euler  " << eq << "\n";
  out << "euler check     " << o.d << " * (" << e << ") = " << Rational(o.d) * e << "  " << (ok ? "ok" : "MISMATCH")
      << "\n";
}

struct SurgeryOptions {
  std::string spec;
  bool json = false;
};

void cmd_surgery(const SurgeryOptions& o, std::ostream& out) {
  const SeifertData m = parse_seifert(o.spec);
  const SurgeryDiagram diag = surgery_presentation(m);
  if (o.json) {
    Json coeffs = Json::array();
    for (const auto& c : diag.meridians) coeffs.push_back(c.to_string());
    Json j;
    j["schema"] = kSchemaVersion;
    j["input"] = to_string(m);
    j["k0_framing"] = diag.k0_framing;
    j["meridians"] = coeffs;
    j["text"] = export_text(diag);
    out << dump(j);
    return;
  }
  out << export_text(diag) << "\n";
}

struct WpsOptions {
  std::vector<Int> weights;
  Int d = 1;
  bool json = false;
};

void cmd_wps(const WpsOptions& o, std::ostream& out) {
  if (o.weights.size() != 3) throw std::invalid_argument("--weights takes three weights");
  const WeightedPlane p{o.weights[0], o.weights[1], o.weights[2]};
  const Rational g = degree_genus(p, o.d);
  const bool realizable = g.is_integer() && g.sign() >= 0;
  std::vector<DegreeRepresentation> reps;
  if (p.a0 == 1) {
    for (const auto& r : admissible_degrees(p.a1, p.a2, o.d)) {
      if (r.d == o.d) reps.push_back(r);
    }
  }
  const std::string plane =
      "P(" + std::to_string(p.a0) + "," + std::to_string(p.a1) + "," + std::to_string(p.a2) + ")";
  if (o.json) {
    Json arr = Json::array();
    for (const auto& r : reps) arr.push_back(Json{{"k", r.k}, {"eps1", r.eps1}, {"eps2", r.eps2}});
    Json j;
    j["schema"] = kSchemaVersion;
    j["weights"] = Json::array({p.a0, p.a1, p.a2});
    j["d"] = o.d;
    j["genus"] = g.to_string();
    j["integral"] = realizable;
    j["representations"] = p.a0 == 1 ? arr : Json(nullptr);
    out << dump(j);
    return;
  }
  out << "plane    " << plane << "\n";
  out << "degree   " << o.d << "\n";
  out << "genus    " << g;
  if (!realizable) out << "  (not a non-negative integer: no non-singular curve of this degree)";
  out << "\n";
  if (p.a0 == 1) {
    if (reps.empty()) out << "degree " << o.d << " is not k*a1*a2 + e1*a1 + e2*a2\n";
    for (const auto& r : reps) {
      out << "  d = " << r.k << "*" << p.a1 * p.a2 << " + " << r.eps1 << "*" << p.a1 << " + " << r.eps2 << "*" << p.a2
          << "\n";
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Surfaces of section for Seifert fibrations", "seifsec"};
  app.require_subcommand(1);
  std::string out_file;
  app.add_option("--out", out_file, "Write output to FILE instead of standard output");

  InfoOptions info;
  auto* info_cmd = app.add_subcommand("info", "Normal form, Euler number and 1-section classification");
  info_cmd->add_option("spec", info.spec, "Seifert invariants, e.g. \"M(0; (2,1), (3,-1))\"")->required();
  info_cmd->add_flag("--json", info.json, "Emit JSON");

  SectionsOptions sections;
  auto* sections_cmd = app.add_subcommand("sections", "Positive d-sections");
  sections_cmd->add_option("spec", sections.spec, "Seifert invariants")->required();
  auto* d_opt = sections_cmd->add_option("--d", sections.d, "Classify a single d")->check(CLI::PositiveNumber);
  auto* scan_opt = sections_cmd->add_option("--scan", sections.scan, "Scan d = 1..D_MAX")->check(CLI::PositiveNumber);
  d_opt->excludes(scan_opt);
  sections_cmd->add_flag("--json", sections.json, "Emit JSON");

  S3Options s3;
  auto* s3_cmd = app.add_subcommand("s3", "Positive d-sections of the Seifert fibrations of S^3");
  s3_cmd->add_option("--alphas", s3.alphas, "Coprime weights A1 A2")->required()->expected(2);
  s3_cmd->add_option("--k-max", s3.k_max, "Largest family parameter k");
  s3_cmd->add_flag("--verify", s3.verify, "Cross-check every row against the independent genus computations");
  s3_cmd->add_flag("--json", s3.json, "Emit JSON");

  QuotientOptions quotient;
  auto* quotient_cmd = app.add_subcommand("quotient", "Z_d-quotient of a Seifert fibration");
  quotient_cmd->add_option("spec", quotient.spec, "Seifert invariants")->required();
  quotient_cmd->add_option("--d", quotient.d, "Order of the cyclic subgroup")->required()->check(CLI::PositiveNumber);
  quotient_cmd->add_flag("--json", quotient.json, "Emit JSON");

  SurgeryOptions surgery;
  auto* surgery_cmd = app.add_subcommand("surgery", "Surgery diagram of a genus-0 Seifert fibration");
  surgery_cmd->add_option("spec", surgery.spec, "Seifert invariants")->required();
  surgery_cmd->add_flag("--json", surgery.json, "Emit JSON");

  WpsOptions wps;
  auto* wps_cmd = app.add_subcommand("wps", "Genus of a degree-d curve in a weighted projective plane");
  wps_cmd->add_option("--weights", wps.weights, "Pairwise coprime weights A0 A1 A2")->required()->expected(3);
  wps_cmd->add_option("--d", wps.d, "Degree")->required()->check(CLI::PositiveNumber);
  wps_cmd->add_flag("--json", wps.json, "Emit JSON");

  std::vector<const char*> argv{"seifsec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  if (sections_cmd->parsed() && d_opt->count() == 0 && scan_opt->count() == 0) {
    err << "error: sections needs --d N or --scan D_MAX\n";
    return kExitError;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (info_cmd->parsed()) cmd_info(info, buffer);
    if (sections_cmd->parsed()) cmd_sections(sections, buffer);
    if (s3_cmd->parsed()) code = cmd_s3(s3, buffer);
    if (quotient_cmd->parsed()) cmd_quotient(quotient, buffer);
    if (surgery_cmd->parsed()) cmd_surgery(surgery, buffer);
    if (wps_cmd->parsed()) cmd_wps(wps, buffer);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  if (out_file.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(out_file, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << out_file << " for writing\n";
      return kExitError;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace seifsec::cli

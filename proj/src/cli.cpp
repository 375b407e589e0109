#include "orbitkit/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "orbitkit/error.hpp"
#include "orbitkit/oracle.hpp"
#include "orbitkit/orbit.hpp"
#include "orbitkit/weyl.hpp"

namespace orbitkit::cli {

using nlohmann::json;

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

json to_json(const Vec& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

json roots_json(const RootSet& s, const RootSystem& rs) {
  json a = json::array();
  for (const auto i : s) a.push_back(to_json(rs.root(i)));
  return a;
}

std::size_t weyl_cap() {
  const char* env = std::getenv("ORBITKIT_WEYL_CAP");
  if (env == nullptr || *env == '\0') return kDefaultWeylCap;
  const std::string text(env);
  if (!std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw UsageError("ORBITKIT_WEYL_CAP must be a positive integer, got '" + text + "'");
  try {
    const auto cap = std::stoull(text);
    if (cap == 0) throw UsageError("ORBITKIT_WEYL_CAP must be positive");
    return cap;
  } catch (const std::out_of_range&) {
    throw UsageError("ORBITKIT_WEYL_CAP is out of range");
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

LatticeSpec read_lattice(const std::string& flag, const RootSystem& rs) {
  if (flag == "sc") return LatticeSpec::simply_connected();
  if (flag == "adjoint") return LatticeSpec::adjoint();
  if (flag.rfind("custom:", 0) != 0) throw UsageError("--lattice must be sc, adjoint or custom:FILE");
  const std::string path = flag.substr(7);
  auto in = open_input(path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  if (!doc.is_array() || doc.empty()) throw InputError(path + ": expected a nonempty array of generators");
  std::vector<Vec> gens;
  for (const auto& row : doc) {
    if (!row.is_array()) throw InputError(path + ": each generator must be an array of \"p/q\" strings");
    Vec g;
    for (const auto& entry : row) {
      if (!entry.is_string()) throw InputError(path + ": coordinates must be strings like \"1/2\"");
      g.push_back(parse_rational(entry.get<std::string>()));
    }
    gens.push_back(std::move(g));
  }
  return LatticeSpec::custom(std::move(gens), rs);
}

std::string text_vec(const json& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + a[i].get<std::string>();
  return s + ")";
}

std::string text_list(const json& a) {
  if (a.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? " " : "") + text_vec(a[i]);
  return s;
}

void print_orbit_text(const json& r, std::ostream& out) {
  const auto& v = r["verdict"];
  out << "series: " << r["series"].get<std::string>() << '\n'
      << "lambda: " << text_vec(r["lambda"]) << '\n'
      << "regular: " << (r["regular"].get<bool>() ? "yes" : "no") << '\n'
      << "singular roots: " << text_list(r["singular_roots"]) << '\n'
      << "dim orbit: " << r["dim_orbit"].get<std::size_t>() << '\n'
      << "dim stabilizer: " << r["dim_stabilizer"].get<std::size_t>() << '\n'
      << "weyl group order: " << r["weyl_group_order"].get<std::size_t>() << '\n'
      << "weyl orbit size: " << r["weyl_orbit_size"].get<std::size_t>() << '\n'
      << "chamber seed: " << text_vec(r["positive_system"]["seed"]) << '\n'
      << "simple roots: " << text_list(r["positive_system"]["simple"]) << '\n'
      << "b roots: " << text_list(r["b_roots"]) << '\n';
  out << "kks blocks:";
  if (r["kks_blocks"].empty()) out << " none";
  for (const auto& b : r["kks_blocks"]) out << ' ' << text_vec(b["root"]) << "->" << b["value"].get<std::string>();
  out << '\n';
  const auto& c = r["certificates"];
  out << "certificates: admissibility=" << (c["admissibility"]["ok"].get<bool>() ? "ok" : "FAIL")
      << " polarization=" << (c["polarization"]["ok"].get<bool>() ? "ok" : "FAIL")
      << " lagrangian=" << (c["lagrangian"]["ok"].get<bool>() ? "ok" : "FAIL")
      << " extendability=" << (c["extendability"]["holds"].get<bool>() ? "ok" : "FAIL") << '\n';
  out << "lattice: " << v["lattice"].get<std::string>() << '\n'
      << "integral: " << (v["integral"].get<bool>() ? "yes" : "no") << '\n'
      << "dominant representative: " << text_vec(v["dominant_rep"]) << '\n'
      << "borel-weil: " << v["borel_weil"].get<std::string>() << '\n';
  for (const auto& w : r["warnings"]) out << "warning: " << w.get<std::string>() << '\n';
}

void emit(const json& doc, const std::string& output, std::ostream& out, void (*text)(const json&, std::ostream&)) {
  if (output == "json")
    out << doc.dump(2) << '\n';
  else
    text(doc, out);
}

}  // namespace

json orbit_report(const OrbitRequest& request) {
  const SeriesSpec spec = SeriesSpec::parse(request.series);
  spec.validate();
  const RootSystem rs = build_root_system(spec);
  const auto ambient = to_ambient(Weight{request.coords, request.basis}, rs);
  const Vec& lambda = ambient.coords;
  const LatticeSpec lattice = read_lattice(request.lattice, rs);
  const WeylGroup w = generate_weyl_group(rs, weyl_cap());

  const auto stab = stabilizer_report(lambda, rs);
  const auto adm = admissible_positive_system(lambda, rs);
  const auto pol = polarization(lambda, adm.order);
  const auto kks = kks_matrix(lambda, adm.order);
  const auto lag = lagrangian_check(pol, kks, lambda);
  if (!lag.ok) throw TheoremViolation("Lagrangian check failed: " + lag.reason);
  const auto ext = extendability_certificate(lambda, rs);
  const auto rep = orbit_to_rep(lambda, lattice, rs, w);

  json r;
  r["series"] = spec.to_string();
  r["lambda"] = to_json(lambda);
  r["singular_roots"] = roots_json(stab.singular, rs);
  r["regular"] = stab.regular;
  r["dim_orbit"] = orbit_dimension(lambda, rs);
  r["dim_stabilizer"] = stab.dim_g_lambda;
  r["weyl_group_order"] = w.size();
  r["weyl_orbit_size"] = weyl_orbit(lambda, w).points.size();

  json ps;
  ps["seed"] = to_json(adm.order.seed);
  ps["positive"] = roots_json(adm.order.positive, rs);
  ps["simple"] = roots_json(adm.order.simple, rs);
  r["positive_system"] = ps;
  r["b_roots"] = roots_json(pol.b_roots, rs);

  json blocks = json::array();
  for (std::size_t i = 0; i < kks.basis_labels.size(); ++i)
    blocks.push_back({{"root", to_json(rs.root(kks.basis_labels[i]))}, {"value", to_string(kks.block_values[i])}});
  r["kks_blocks"] = blocks;

  json cert;
  cert["stabilizer"] = {{"closed", stab.closed},
                        {"dim_g", stab.dim_g},
                        {"t1_equations", roots_json(stab.t1_equations, rs)}};
  const auto& a = adm.certificate;
  cert["admissibility"] = {{"condition_i", a.condition_i},
                           {"condition_ii", a.condition_ii},
                           {"lambda_dominant", a.lambda_dominant},
                           {"pairs_checked", a.pairs_checked},
                           {"perturbation_step", a.perturbation_step},
                           {"ok", a.ok()}};
  const auto& p = pol.certificate;
  cert["polarization"] = {{"contains_stabilizer", p.contains_stabilizer},
                          {"stabilizer_invariant", p.stabilizer_invariant},
                          {"conjugate_intersection", p.conjugate_intersection},
                          {"half_dimension", p.half_dimension},
                          {"subalgebra", p.subalgebra},
                          {"ok", p.ok()}};
  cert["lagrangian"] = {{"ok", lag.ok}, {"rank_omega", kks.entries.rows()}};
  json records = json::array();
  for (const auto& e : ext.records)
    records.push_back({{"root", to_json(rs.root(e.root))}, {"value", to_string(e.value)}});
  cert["extendability"] = {{"holds", ext.holds}, {"records", records}};
  r["certificates"] = cert;

  json word = json::array();
  for (const auto g : rep.word) word.push_back(g);
  r["verdict"] = {{"lattice", lattice.name()},
                  {"integral", rep.integral},
                  {"dominant_rep", to_json(rep.dominant_rep)},
                  {"is_dominant_input", rep.is_dominant_input},
                  {"word", word},
                  {"borel_weil", to_string(rep.borel_weil)}};

  json warnings = json::array();
  if (ambient.projected) warnings.push_back("lambda was projected onto the sum-zero hyperplane of an A factor");
  r["warnings"] = warnings;
  return r;
}

json cohomology_json(const cech::CohomologyGroup& h) {
  json torsion = json::array();
  for (const auto& t : h.torsion) torsion.push_back(t.get_str());
  return {{"degree", h.degree},
          {"ring", h.ring == cech::Ring::integer ? "Z" : "Q"},
          {"free_rank", h.free_rank},
          {"torsion", torsion},
          {"group", h.to_string()}};
}

json chern_json(const cech::ChernClass& c) {
  json out;
  out["valid"] = c.valid;
  if (c.witness) {
    json w = json::array();
    for (const auto v : *c.witness) w.push_back(v);
    out["witness"] = w;
    return out;
  }
  json free = json::array();
  for (const auto& z : c.free) free.push_back(z.get_str());
  json torsion = json::array();
  for (const auto& t : c.torsion) torsion.push_back({{"residue", t.residue.get_str()}, {"modulus", t.modulus.get_str()}});
  out["free"] = free;
  out["torsion"] = torsion;
  out["zero"] = c.is_zero();
  return out;
}

namespace {

void print_cohomology_text(const json& h, std::ostream& out) {
  out << "H^" << h["degree"].get<std::size_t>() << "(nerve; " << h["ring"].get<std::string>()
      << ") = " << h["group"].get<std::string>() << '\n';
}

void print_chern_text(const json& c, std::ostream& out) {
  if (!c["valid"].get<bool>()) {
    out << "not a cocycle: delta a is nonzero on";
    for (const auto& v : c["witness"]) out << ' ' << v.get<std::size_t>();
    out << '\n';
    return;
  }
  if (c["zero"].get<bool>()) {
    out << "class: 0\n";
    return;
  }
  out << "class: free (";
  for (std::size_t i = 0; i < c["free"].size(); ++i) out << (i ? ", " : "") << c["free"][i].get<std::string>();
  out << ")";
  for (const auto& t : c["torsion"])
    out << " + " << t["residue"].get<std::string>() << " mod " << t["modulus"].get<std::string>();
  out << '\n';
}

void print_audit_text(const json& a, std::ostream& out) {
  for (const auto& [key, value] : a.items()) {
    if (value.is_array() && !value.empty() && value[0].is_object()) {
      out << key << ": " << value.size() << " entries\n";
      continue;
    }
    out << key << ": " << value.dump() << '\n';
  }
}

cech::Nerve load_nerve(const std::string& path) {
  auto in = open_input(path);
  try {
    return cech::read_nerve(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

int audit_algebra(int n, std::uint64_t seed, json& out) {
  const auto alg = oracle::special_unitary_basis(n);
  const double invariance = oracle::form_invariance_residual(alg, 100, seed);
  const auto& r = alg.residuals;
  out = {{"n", n},
         {"dim", alg.dim()},
         {"cartan_dim", alg.cartan_indices.size()},
         {"anti_hermitian", r.anti_hermitian},
         {"trace", r.trace},
         {"closure", r.closure},
         {"jacobi", r.jacobi},
         {"form_invariance", invariance}};
  const bool ok = invariance < 1e-10;
  out["ok"] = ok;
  return ok ? kOk : kTheoremViolation;
}

int audit_roots(int n, json& out) {
  const auto alg = oracle::special_unitary_basis(n);
  const auto roots = oracle::numeric_root_decomposition(alg);
  const auto rs = build_root_system(SeriesSpec::parse("A" + std::to_string(n - 1)));
  const auto match = oracle::match_roots(roots, rs);
  const auto audit = oracle::root_property_audit(alg);
  json failures = json::array();
  for (const auto& e : audit.entries)
    if (!e.passed)
      failures.push_back({{"kind", e.kind}, {"alpha", e.alpha}, {"beta", e.beta}, {"residual", e.residual}});
  out = {{"n", n},
         {"roots", roots.size()},
         {"matching_perfect", match.perfect},
         {"matching_residual", match.max_residual},
         {"checks", audit.entries.size()},
         {"audit_residual", audit.max_residual},
         {"failures", failures}};
  const bool ok = match.perfect && match.max_residual < oracle::kMatchTol && audit.passed;
  out["ok"] = ok;
  return ok ? kOk : kTheoremViolation;
}

int audit_kks(int n, const Vec& coords, Basis basis, std::size_t samples, std::uint64_t seed, json& out) {
  const auto alg = oracle::special_unitary_basis(n);
  const auto rs = build_root_system(SeriesSpec::parse("A" + std::to_string(n - 1)));
  const Vec lambda = to_ambient(Weight{coords, basis}, rs).coords;
  const auto rep = oracle::numeric_kks_check(lambda, alg, samples, seed);
  out = {{"n", n},
         {"lambda", to_json(lambda)},
         {"blocks_checked", rep.blocks_checked},
         {"kks_residual", rep.kks_residual},
         {"samples", rep.samples},
         {"equivariance_residual", rep.equivariance_residual},
         {"ok", rep.ok()}};
  if (rep.worst_root) out["worst_root"] = to_json(rs.root(*rep.worst_root));
  if (rep.worst_pair) out["worst_pair"] = {rep.worst_pair->first, rep.worst_pair->second};
  return rep.ok() ? kOk : kTheoremViolation;
}

int audit_calibrate(json& out) {
  const double fitted = oracle::calibrate_kks_constant();
  const double frozen = kKksConvention.get_d();
  const bool ok = std::abs(fitted - frozen) < 1e-12;
  out = {{"fitted", fitted}, {"frozen", to_string(kKksConvention)}, {"ok", ok}};
  return ok ? kOk : kTheoremViolation;
}

void report_error(const std::string& kind, const std::string& message, int code, const std::string& output,
                  std::ostream& err) {
  if (output == "json")
    err << json{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}}.dump() << '\n';
  else
    err << "orbitkit: " << kind << ": " << message << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact coadjoint orbit, quantization and Cech cohomology toolkit", "orbitkit"};
  app.require_subcommand(1);
  std::string output = "json";
  const auto formats = CLI::IsMember({"json", "text"});

  OrbitRequest req;
  std::string lambda_text;
  std::string basis_text = "ambient";
  const auto bases = CLI::IsMember({"ambient", "fundamental"});
  auto* orbit = app.add_subcommand("orbit", "Analyse the coadjoint orbit of a weight");
  orbit->add_option("--series", req.series, "Group type, e.g. A2, B3, A1xT1")->required();
  orbit->add_option("--lambda", lambda_text, "Comma-separated rationals, e.g. 1/2,-1/2")->required();
  orbit->add_option("--lattice", req.lattice, "sc, adjoint or custom:FILE");
  orbit->add_option("--basis", basis_text, "Coordinates of --lambda")->check(bases);
  orbit->add_option("--output", output)->check(formats);

  auto* cech_cmd = app.add_subcommand("cech", "Cech cohomology of a nerve");
  cech_cmd->require_subcommand(1);
  std::string nerve_path, cocycle_path, ring = "z";
  std::size_t degree = 0;
  auto* h_cmd = cech_cmd->add_subcommand("h", "Cohomology group H^k");
  h_cmd->add_option("--nerve", nerve_path)->required();
  h_cmd->add_option("--k", degree)->required();
  h_cmd->add_option("--ring", ring)->check(CLI::IsMember({"z", "q"}));
  h_cmd->add_option("--output", output)->check(formats);
  auto* chern_cmd = cech_cmd->add_subcommand("chern", "Class of an integer 2-cocycle");
  chern_cmd->add_option("--nerve", nerve_path)->required();
  chern_cmd->add_option("--cocycle", cocycle_path)->required();
  chern_cmd->add_option("--output", output)->check(formats);

  auto* audit = app.add_subcommand("audit", "Numeric cross-checks against the su(n) matrix model");
  audit->require_subcommand(1);
  int n = 3;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  const auto n_range = CLI::Range(2, 5);
  auto* a_alg = audit->add_subcommand("algebra", "Basis construction and form invariance");
  a_alg->add_option("--n", n)->check(n_range);
  a_alg->add_option("--seed", seed);
  auto* a_roots = audit->add_subcommand("roots", "Numeric root decomposition and root-space properties");
  a_roots->add_option("--n", n)->check(n_range);
  auto* a_kks = audit->add_subcommand("kks", "KKS blocks and moment-map equivariance");
  a_kks->add_option("--n", n)->check(n_range);
  a_kks->add_option("--lambda", lambda_text)->required();
  a_kks->add_option("--basis", basis_text)->check(bases);
  a_kks->add_option("--samples", samples);
  a_kks->add_option("--seed", seed);
  auto* a_cal = audit->add_subcommand("calibrate", "Refit the KKS convention constant on su(2)");
  for (auto* sub : {a_alg, a_roots, a_kks, a_cal}) sub->add_option("--output", output)->check(formats);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (orbit->parsed()) {
      req.coords = parse_rational_list(lambda_text);
      req.basis = basis_text == "fundamental" ? Basis::fundamental : Basis::ambient;
      emit(orbit_report(req), output, out, print_orbit_text);
      return kOk;
    }
    if (h_cmd->parsed()) {
      const auto nerve = load_nerve(nerve_path);
      const auto h = cech::cohomology(nerve, degree, ring == "z" ? cech::Ring::integer : cech::Ring::rational);
      emit(cohomology_json(h), output, out, print_cohomology_text);
      return kOk;
    }
    if (chern_cmd->parsed()) {
      const auto nerve = load_nerve(nerve_path);
      auto in = open_input(cocycle_path);
      cech::Cochain a;
      try {
        a = cech::read_cochain(in, nerve, 2);
      } catch (const InputError& e) {
        throw InputError(cocycle_path + ": " + e.what());
      }
      const auto c = cech::chern_class(nerve, a);
      emit(chern_json(c), output, out, print_chern_text);
      return c.valid ? kOk : kInputError;
    }
    json report;
    int code = kOk;
    if (a_alg->parsed()) code = audit_algebra(n, seed, report);
    if (a_roots->parsed()) code = audit_roots(n, report);
    if (a_kks->parsed())
      code = audit_kks(n, parse_rational_list(lambda_text),
                       basis_text == "fundamental" ? Basis::fundamental : Basis::ambient, samples, seed, report);
    if (a_cal->parsed()) code = audit_calibrate(report);
    emit(report, output, out, print_audit_text);
    return code;
  } catch (const UsageError& e) {
    report_error("usage", e.what(), kUsage, output, err);
    return kUsage;
  } catch (const DimensionMismatch& e) {
    report_error("dimension_mismatch", e.what(), kUsage, output, err);
    return kUsage;
  } catch (const InputError& e) {
    report_error("input", e.what(), kInputError, output, err);
    return kInputError;
  } catch (const CapExceeded& e) {
    report_error("cap_exceeded", e.what(), kCapExceeded, output, err);
    return kCapExceeded;
  } catch (const TheoremViolation& e) {
    report_error("theorem_violation", e.what(), kTheoremViolation, output, err);
    return kTheoremViolation;
  } catch (const std::exception& e) {
    report_error("internal", e.what(), kTheoremViolation, output, err);
    return kTheoremViolation;
  }
}

}  // namespace orbitkit::cli

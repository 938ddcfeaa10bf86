// cotensor: command-line front end for the cotensor library.
//
// Exit codes: 0 yes/pass, 1 a well-posed no/fail, 2 bad input or usage,
// 3 an internal consistency check failed.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cotensor/io.hpp"

namespace fs = std::filesystem;
using namespace cotensor;
using io::Json;
using io::to_json;

namespace {

enum Exit { kYes = 0, kNo = 1, kBadInput = 2, kInternal = 3 };

struct Report {
  Json body = Json::object();
  int code = kYes;

  void status(const char* s) { body["status"] = s; }
};

Json checks_to_json(const ValidationReport& r) {
  Json out = Json::array();
  for (const auto& c : r.checks) {
    Json j = {{"axiom", c.axiom}, {"passed", c.passed}};
    if (c.entry) {
      j["entry"] = {c.entry->row, c.entry->col};
      j["lhs"] = to_json(c.lhs);
      j["rhs"] = to_json(c.rhs);
    }
    out.push_back(std::move(j));
  }
  return out;
}

Coalgebra load_coalgebra(const std::string& path) {
  return io::coalgebra_from_json(io::read_json_file(path));
}

Bicomodule load_bicomodule(const std::string& path) {
  return io::bicomodule_from_json(io::read_json_file(path), fs::path(path).parent_path());
}

Matrix load_matrix(const std::string& path) { return io::matrix_from_json(io::read_json_file(path)); }

// ---- text rendering ------------------------------------------------------

bool is_matrix(const Json& j) {
  return j.is_object() && j.size() == 3 && j.contains("rows") && j.contains("cols") &&
         j.contains("entries");
}

// Writes the value after "key:"; nested values go on the following lines.
void render(std::ostream& out, const Json& j, const std::string& indent) {
  if (is_matrix(j)) {
    out << " " << j["rows"] << " x " << j["cols"] << "\n";
    for (const auto& row : j["entries"]) {
      out << indent << " ";
      for (const auto& e : row) out << " " << (e.is_string() ? e.get<std::string>() : e.dump());
      out << "\n";
    }
  } else if (j.is_object()) {
    out << "\n";
    for (const auto& [key, value] : j.items()) {
      out << indent << "  " << key << ":";
      render(out, value, indent + "  ");
    }
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    out << "\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << indent << "  [" << i << "]";
      render(out, j[i], indent + "  ");
    }
  } else {
    out << " " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void print(const Report& r, const std::string& format) {
  if (format == "json") {
    std::cout << io::dump(r.body);
    return;
  }
  for (const auto& [key, value] : r.body.items()) {
    std::cout << key << ":";
    render(std::cout, value, "");
  }
}

// ---- commands ------------------------------------------------------------

Report cmd_validate(const std::string& file) {
  Report r;
  const Json j = io::read_json_file(file);
  ValidationReport v;
  if (j.is_object() && j.contains("rho_l")) {
    const Bicomodule m = io::bicomodule_from_json(j, fs::path(file).parent_path());
    v = validate_coalgebra(m.left());
    if (!(m.left() == m.right())) {
      const auto right = validate_coalgebra(m.right());
      v.checks.insert(v.checks.end(), right.checks.begin(), right.checks.end());
    }
    const auto own = validate_bicomodule(m);
    v.checks.insert(v.checks.end(), own.checks.begin(), own.checks.end());
    r.body["kind"] = "bicomodule";
  } else {
    v = validate_coalgebra(io::coalgebra_from_json(j));
    r.body["kind"] = "coalgebra";
  }
  r.body["checks"] = checks_to_json(v);
  r.status(v.ok() ? "pass" : "fail");
  r.code = v.ok() ? kYes : kNo;
  return r;
}

Report cmd_coradical(const std::string& file) {
  Report r;
  const Subspace corad = coradical(load_coalgebra(file));
  r.status("value");
  r.body["coradical"] = to_json(corad);
  return r;
}

Report cmd_cotensor(const std::string& left, const std::string& right, const std::string& over) {
  Report r;
  const Bicomodule v = load_bicomodule(left);
  const Bicomodule w = load_bicomodule(right);
  const Coalgebra c = load_coalgebra(over);
  if (!(v.right() == c)) throw CoalgebraMismatch("--left is not a right comodule over --over");
  if (!(w.left() == c)) throw CoalgebraMismatch("--right is not a left comodule over --over");
  const Cotensor vw = cotensor::cotensor(v, w);
  r.status("value");
  r.body["cotensor"] = to_json(vw.object);
  r.body["inclusion"] = to_json(vw.inclusion);
  return r;
}

Report cmd_wedge_filtration(const std::string& sub, const std::string& amb) {
  Report r;
  const Coalgebra c = load_coalgebra(amb);
  const Subspace d = io::subspace_from_json(io::read_json_file(sub));
  if (d.ambient_dim() != c.dim()) throw DimensionMismatch("--sub does not live in --amb");
  const WedgeFiltration w = wedge_filtration(c, d);
  Json chain = Json::array();
  for (const auto& s : w.chain) chain.push_back(to_json(s));
  r.status("value");
  r.body["chain"] = std::move(chain);
  r.body["loewy_length"] = w.loewy_length;
  r.body["stabilized"] = to_json(w.stabilized);
  return r;
}

Report check_T(const TruncatedCotensorCoalgebra& t) {
  Report r;
  const bool iterative = build_iterative(t.base, t.input, t.trunc).total == t.total;
  bool wedges = true;
  Json per_n = Json::array();
  for (int n = 0; n <= t.trunc + 1; ++n) {
    const bool ok = wedge_recovery_check(t, n);
    per_n.push_back(ok);
    wedges = wedges && ok;
  }
  const bool limit = graded_limit_check(t);
  r.body["checks"] = {{"build_iterative", iterative},
                      {"wedge_recovery", per_n},
                      {"graded_limit", limit}};
  r.code = iterative && wedges && limit ? kYes : kNo;
  return r;
}

Report cmd_build_T(const std::string& coalgebra, const std::string& bicomodule, int trunc,
                   const std::string& out, bool check, bool with_maps) {
  const Coalgebra c = load_coalgebra(coalgebra);
  const Bicomodule m = load_bicomodule(bicomodule);
  if (!(m.left() == c) || !(m.right() == c)) {
    throw CoalgebraMismatch("--bicomodule is not over --coalgebra");
  }
  if (trunc < 0) throw DimensionMismatch("--trunc must be non-negative");
  const TruncatedCotensorCoalgebra t = build_truncated(c, m, trunc);
  Report r = check ? check_T(t) : Report{};
  r.status(r.code == kYes ? (check ? "pass" : "value") : "fail");
  r.body["dim"] = t.total.dim();
  r.body["grading"] = t.grading;
  if (out.empty()) {
    r.body["T"] = to_json(t, with_maps);
  } else {
    io::write_json_file(out, to_json(t, with_maps));
    r.body["written"] = out;
  }
  return r;
}

std::string path_name(const Quiver& q, const Path& p) {
  if (p.length() == 0) return q.vertices[static_cast<std::size_t>(p.source)];
  std::string s;
  for (int a : p.arrows) s += (s.empty() ? "" : "*") + q.arrows[static_cast<std::size_t>(a)].name;
  return s;
}

Report cmd_quiver(const std::string& file, int trunc, bool oracle, const std::string& out) {
  Report r;
  if (trunc < 0) throw DimensionMismatch("--trunc must be non-negative");
  const Quiver q = io::read_quiver_file(file);
  const TruncatedCotensorCoalgebra t =
      build_truncated(vertex_coalgebra(q), arrow_bicomodule(q), trunc);
  Json paths = Json::array();
  for (const Path& p : enumerate_paths(q, trunc).paths) paths.push_back(path_name(q, p));
  r.body["paths"] = std::move(paths);
  r.body["path_counts"] = path_counts(q, trunc);
  r.body["grading"] = t.grading;
  r.body["dim"] = t.total.dim();
  if (out.empty()) {
    r.body["T"] = to_json(t);
  } else {
    io::write_json_file(out, to_json(t));
    r.body["written"] = out;
  }
  r.status("value");
  if (oracle) {
    try {
      r.body["isomorphism"] = to_json(oracle_compare(q, trunc, t));
      r.status("pass");
    } catch (const OracleMismatch& e) {
      r.body["mismatch"] = e.what();
      r.status("fail");
      r.code = kNo;
    }
  }
  return r;
}

Report cmd_cohomology(const std::string& coalgebra, const std::string& bicomodule, int degree) {
  Report r;
  const Coalgebra c = load_coalgebra(coalgebra);
  const Bicomodule l = load_bicomodule(bicomodule);
  if (!(l.left() == c) || !(l.right() == c)) {
    throw CoalgebraMismatch("--bicomodule is not over --coalgebra");
  }
  if (degree < 0) throw DimensionMismatch("--degree must be non-negative");
  const CohomologyResult h = cohomology(c, l, degree);
  Json reps = Json::array();
  for (const auto& f : h.representatives) reps.push_back(to_json(f));
  r.status("value");
  r.body["degree"] = h.degree;
  r.body["dimension"] = h.dimension;
  r.body["cocycle_dim"] = h.cocycle_dim;
  r.body["coboundary_dim"] = h.coboundary_dim;
  r.body["representatives"] = std::move(reps);
  return r;
}

Cochain load_cocycle(const std::string& path) {
  const Json j = io::read_json_file(path);
  if (j.is_object() && j.contains("value")) return io::cochain_from_json(j);
  return {2, io::matrix_from_json(j)};
}

Report cmd_extension(const std::string& coalgebra, const std::string& bicomodule,
                     const std::string& cocycle, bool trivialize) {
  Report r;
  const Coalgebra c = load_coalgebra(coalgebra);
  const Bicomodule l = load_bicomodule(bicomodule);
  if (!(l.left() == c) || !(l.right() == c)) {
    throw CoalgebraMismatch("--bicomodule is not over --coalgebra");
  }
  const Cochain zeta = load_cocycle(cocycle);
  if (zeta.degree != 2) throw DimensionMismatch("--cocycle must have degree 2");
  try {
    const HochschildExtensionData e = hochschild_extension(c, l, zeta);
    const ValidationReport v = validate_extension(e);
    r.body["extension"] = to_json(e.total);
    r.body["sigma"] = to_json(e.sigma.map());
    r.body["projection"] = to_json(e.proj);
    r.body["checks"] = checks_to_json(v);
    if (!v.ok()) throw InternalCheckFailed("extension axioms failed: " + v.summary());
    r.status("pass");
    if (trivialize) {
      if (const auto ret = trivialize_extension(e)) {
        r.body["retraction"] = to_json(ret->map());
      } else {
        r.body["retraction"] = nullptr;
        r.status("fail");
        r.code = kNo;
      }
    }
  } catch (const NotACocycle& e) {
    r.body["error"] = e.what();
    r.body["witness"] = to_json(e.witness());
    r.status("fail");
    r.code = kNo;
  }
  return r;
}

Report cmd_coseparable(const std::string& file) {
  Report r;
  const auto retraction = is_coseparable(load_coalgebra(file));
  r.body["coseparable"] = retraction.has_value();
  r.body["witness"] = retraction ? to_json(*retraction) : Json(nullptr);
  r.status(retraction ? "pass" : "fail");
  r.code = retraction ? kYes : kNo;
  return r;
}

Report cmd_formally_smooth(const std::string& file) {
  Report r;
  const SmoothnessReport s = is_formally_smooth(load_coalgebra(file));
  r.body["formally_smooth"] = s.smooth;
  r.body["cokernel_dim"] = s.cokernel.dim();
  r.body["h2_dimension"] = s.h2_dimension;
  r.body["witness"] = s.splitting ? to_json(*s.splitting) : Json(nullptr);
  r.status(s.smooth ? "pass" : "fail");
  r.code = s.smooth ? kYes : kNo;
  return r;
}

Report cmd_universal_map(const std::string& e_file, const std::string& fc_file,
                         const std::string& fm_file, const std::string& t_file) {
  Report r;
  const Coalgebra e = load_coalgebra(e_file);
  const Matrix fc = load_matrix(fc_file);
  const Matrix fm = load_matrix(fm_file);
  const TruncatedCotensorCoalgebra t =
      io::truncated_from_json(io::read_json_file(t_file), fs::path(t_file).parent_path());
  if (fc.rows() != t.base.dim() || fc.cols() != e.dim()) {
    throw DimensionMismatch("--fC must be dim(C) x dim(E)");
  }
  if (fm.rows() != t.input.dim() || fm.cols() != e.dim()) {
    throw DimensionMismatch("--fM must be dim(M) x dim(E)");
  }
  const auto fail = [&](const char* kind, const std::string& what) {
    r.body["precondition"] = kind;
    r.body["error"] = what;
    r.status("fail");
    r.code = kNo;
  };
  try {
    const CoalgebraMap f = universal_map(e, CoalgebraMap(e, t.base, fc), fm, t);
    r.body["map"] = to_json(f.map());
    r.status("value");
  } catch (const NotCoalgebraMap& x) {
    fail("fC_not_coalgebra_map", x.what());
  } catch (const NotBicomoduleMap& x) {
    fail("fM_not_bicomodule_map", x.what());
  } catch (const NicholsViolated& x) {
    fail("nichols", x.what());
  } catch (const TruncationTooSmall& x) {
    fail("truncation_too_small", x.what());
    r.body["minimal_trunc"] = x.minimal_trunc();
  }
  return r;
}

Report cmd_example(const std::string& name, int n, const std::string& source) {
  Report r;
  if (name == "grouplike") {
    r.body = to_json(grouplike(n));
  } else if (name == "comatrix") {
    r.body = to_json(comatrix(n));
  } else if (name == "divided-power") {
    r.body = to_json(divided_power(n));
  } else if (name == "regular") {
    r.body = to_json(regular(load_coalgebra(source)));
  } else if (name == "cofree") {
    r.body = to_json(cofree(load_coalgebra(source), n));
  } else if (name == "quiver-vertices") {
    r.body = to_json(vertex_coalgebra(io::read_quiver_file(source)));
  } else if (name == "quiver-arrows") {
    r.body = to_json(arrow_bicomodule(io::read_quiver_file(source)));
  } else {
    throw io::FormatError("unknown example `" + name + "`");
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cotensor coalgebras, Hochschild cohomology and smoothness tests"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  bool timing = false;
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("--timing", timing, "Add wall-clock time to the report");

  std::function<Report()> run;

  std::string file;
  auto* validate = app.add_subcommand("validate", "Check the coalgebra or bicomodule axioms");
  validate->add_option("file", file)->required();
  validate->callback([&] { run = [&] { return cmd_validate(file); }; });

  auto* corad = app.add_subcommand("coradical", "Print a basis of the coradical");
  corad->add_option("coalgebra", file)->required();
  corad->callback([&] { run = [&] { return cmd_coradical(file); }; });

  std::string left, right, over;
  auto* cot = app.add_subcommand("cotensor", "Cotensor product of two bicomodules");
  cot->add_option("--left", left)->required();
  cot->add_option("--right", right)->required();
  cot->add_option("--over", over)->required();
  cot->callback([&] { run = [&] { return cmd_cotensor(left, right, over); }; });

  std::string sub, amb;
  auto* wf = app.add_subcommand("wedge-filtration", "Wedge powers of a subcoalgebra");
  wf->add_option("--sub", sub)->required();
  wf->add_option("--amb", amb)->required();
  wf->callback([&] { run = [&] { return cmd_wedge_filtration(sub, amb); }; });

  std::string coalgebra, bicomodule, out;
  int trunc = 0;
  bool check = false, with_maps = false;
  auto* bt = app.add_subcommand("build-T", "Truncated cotensor coalgebra");
  bt->add_option("--coalgebra", coalgebra)->required();
  bt->add_option("--bicomodule", bicomodule)->required();
  bt->add_option("--trunc", trunc)->required();
  bt->add_option("-o,--output", out, "Write T to this file");
  bt->add_flag("--check", check, "Cross-check against the iterative construction and wedges");
  bt->add_flag("--with-maps", with_maps, "Include block inclusions and projections");
  bt->callback([&] {
    run = [&] { return cmd_build_T(coalgebra, bicomodule, trunc, out, check, with_maps); };
  });

  bool oracle = false;
  auto* qv = app.add_subcommand("quiver", "Path coalgebra of a quiver as a cotensor coalgebra");
  qv->add_option("--file", file)->required();
  qv->add_option("--trunc", trunc)->required();
  qv->add_option("-o,--output", out, "Write T to this file");
  qv->add_flag("--oracle-compare", oracle, "Compare with deconcatenation on paths");
  qv->callback([&] { run = [&] { return cmd_quiver(file, trunc, oracle, out); }; });

  int degree = 0;
  auto* coh = app.add_subcommand("cohomology", "Hochschild cohomology H^n(L, C)");
  coh->add_option("--coalgebra", coalgebra)->required();
  coh->add_option("--bicomodule", bicomodule)->required();
  coh->add_option("--degree", degree)->required();
  coh->callback([&] { run = [&] { return cmd_cohomology(coalgebra, bicomodule, degree); }; });

  std::string cocycle;
  bool trivialize = false;
  auto* ext = app.add_subcommand("extension", "Hochschild extension along a 2-cocycle");
  ext->add_option("--coalgebra", coalgebra)->required();
  ext->add_option("--bicomodule", bicomodule)->required();
  ext->add_option("--cocycle", cocycle)->required();
  ext->add_flag("--trivialize", trivialize, "Look for a coalgebra retraction");
  ext->callback([&] {
    run = [&] { return cmd_extension(coalgebra, bicomodule, cocycle, trivialize); };
  });

  auto* cosep = app.add_subcommand("coseparable", "Is Delta split as a bicomodule map?");
  cosep->add_option("coalgebra", file)->required();
  cosep->callback([&] { run = [&] { return cmd_coseparable(file); }; });

  auto* smooth = app.add_subcommand("formally-smooth", "Is every Hochschild extension trivial?");
  smooth->add_option("coalgebra", file)->required();
  smooth->callback([&] { run = [&] { return cmd_formally_smooth(file); }; });

  std::string e_file, fc_file, fm_file, t_file;
  auto* um = app.add_subcommand("universal-map", "The coalgebra map E -> T given f_C and f_M");
  um->add_option("--E", e_file)->required();
  um->add_option("--fC", fc_file)->required();
  um->add_option("--fM", fm_file)->required();
  um->add_option("--T", t_file)->required();
  um->callback([&] { run = [&] { return cmd_universal_map(e_file, fc_file, fm_file, t_file); }; });

  std::string name, source;
  int n = 1;
  auto* ex = app.add_subcommand("example", "Emit a standard coalgebra or bicomodule");
  ex->add_option("name", name,
                 "grouplike, comatrix, divided-power, regular, cofree, quiver-vertices, "
                 "quiver-arrows")
      ->required();
  ex->add_option("--n", n, "Size parameter")->capture_default_str();
  ex->add_option("--from", source, "Coalgebra or quiver file for the derived examples");
  ex->callback([&] { run = [&] { return cmd_example(name, n, source); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kBadInput;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    report = run();
  } catch (const InternalCheckFailed& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  // `example` emits a bare data file, everything else a report.
  if (!ex->parsed()) {
    report.body["command"] = app.get_subcommands().front()->get_name();
  }
  if (timing) {
    report.body["timing_ms"] = std::chrono::duration<double, std::milli>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
  }
  print(report, format);
  return report.code;
}

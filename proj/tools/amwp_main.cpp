// amwp: command-line front door for the exact Kaehler-cone toolkit.
//
// Subcommands: metric, scalar, verify, perturb, polytope, catalog.
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "amwp/catalog.hpp"
#include "amwp/curvature.hpp"
#include "amwp/identities.hpp"
#include "amwp/json_io.hpp"
#include "amwp/metric.hpp"
#include "amwp/prepotential.hpp"
#include "amwp/toric.hpp"
#include "amwp/verify.hpp"
#include "amwp/version.hpp"

namespace {

using namespace amwp;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

std::string meta_comment(std::uint64_t seed) {
  std::ostringstream os;
  os << "# amwp " << kToolVersion << " seed=" << seed
     << " kappa=" << scalar_kappa()
     << " s_normalization=" << s_invariant_normalization().to_string();
  return os.str();
}

Json meta_json(std::uint64_t seed) {
  Json m;
  m["tool_version"] = kToolVersion;
  m["seed"] = seed;
  m["kappa"] = scalar_kappa();
  m["s_normalization"] = s_invariant_normalization().to_string();
  return m;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw std::invalid_argument("cannot write " + output_path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::vector<BigRat> parse_point(const std::string& s) {
  std::vector<BigRat> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(BigRat::from_string(tok));
  if (out.empty()) throw std::invalid_argument("empty point");
  return out;
}

// One ray component: rational coefficient, optional, times optional s^k.
MPoly parse_ray_component(std::string tok) {
  std::string cleaned;
  for (char c : tok)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') cleaned += c;
  BigRat coeff(1);
  unsigned power = 0;
  auto spos = cleaned.find('s');
  if (spos == std::string::npos) {
    coeff = BigRat::from_string(cleaned);
  } else {
    std::string pre = cleaned.substr(0, spos);
    if (!pre.empty()) coeff = BigRat::from_string(pre);
    std::string post = cleaned.substr(spos + 1);
    if (post.empty())
      power = 1;
    else if (post[0] == '^')
      power = static_cast<unsigned>(std::stoul(post.substr(1)));
    else
      throw std::invalid_argument("cannot parse ray component '" + tok + "'");
  }
  return MPoly::monomial({power}, coeff);
}

std::vector<MPoly> parse_ray(const std::string& s) {
  std::vector<MPoly> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_ray_component(tok));
  return out;
}

CubicForm resolve_cubic(const std::string& catalog_name, const std::string& input) {
  if (!catalog_name.empty()) {
    CatalogEntry e = catalog_get(catalog_name);
    if (!e.cubic)
      throw std::invalid_argument("catalog entry '" + catalog_name +
                                  "' is not a concrete cubic");
    return *e.cubic;
  }
  if (!input.empty()) return cubic_from_json(load_json_file(input));
  throw std::invalid_argument("need --catalog or --input");
}

LatticeSimplex resolve_polytope(const std::string& catalog_name,
                                const std::string& input) {
  if (!catalog_name.empty()) {
    CatalogEntry e = catalog_get(catalog_name);
    if (!e.polytope)
      throw std::invalid_argument("catalog entry '" + catalog_name +
                                  "' is not a polytope");
    return *e.polytope;
  }
  if (!input.empty()) return polytope_from_json(load_json_file(input));
  throw std::invalid_argument("need --catalog or --input");
}

const std::vector<std::string> kVarNames = {"y1", "y2", "y3", "y4", "y5", "y6"};

// Known closed form of the STU scalar curvature (degree-6 numerator over the
// cubed quadric), used as the golden reference by `scalar --symbolic`.
RatFn stu_scalar_golden() {
  MPoly y1 = MPoly::variable(3, 0), y2 = MPoly::variable(3, 1),
        y3 = MPoly::variable(3, 2);
  MPoly two_y3 = y3.scaled(BigRat(2));
  MPoly P6 =
      y1.pow(6).scaled(BigRat(16)) -
      (y3.pow(3) * (y2 + y3).pow(3)).scaled(BigRat(9)) +
      (y1.pow(5) * (y2 + two_y3)).scaled(BigRat(24)) -
      (y1 * y3.pow(2) * (y2 + y3).pow(2) * (y2 + two_y3)).scaled(BigRat(27)) +
      (y1.pow(4) *
       (y2 * y2 + (y2 * y3).scaled(BigRat(6)) + (y3 * y3).scaled(BigRat(6))))
          .scaled(BigRat(12)) -
      (y1.pow(3) *
       (y2.pow(3).scaled(BigRat(3)) + (y2.pow(2) * y3).scaled(BigRat(10)) +
        (y2 * y3.pow(2)).scaled(BigRat(12)) + y3.pow(3).scaled(BigRat(8))))
          .scaled(BigRat(3)) -
      (y1.pow(2) * y3 *
       (y2.pow(3).scaled(BigRat(9)) + (y2.pow(2) * y3).scaled(BigRat(41)) +
        (y2 * y3.pow(2)).scaled(BigRat(64)) + y3.pow(3).scaled(BigRat(32))))
          .scaled(BigRat(3));
  MPoly W = y3 * (y2 + y3) + y1 * (y2 + two_y3);
  return RatFn::make(P6.scaled(BigRat(2)), W.pow(3).scaled(BigRat(3)));
}

int cmd_metric(const std::string& catalog_name, const std::string& input,
               const std::string& at, const std::string& format,
               const std::string& output, std::uint64_t seed) {
  CubicForm f = resolve_cubic(catalog_name, input);
  MetricField m = amwp_metric(f);
  std::ostringstream os;
  if (format == "json") {
    Json j;
    j["meta"] = meta_json(seed);
    j["det_g"] = m.detg.to_string(kVarNames);
    if (!at.empty()) {
      std::vector<BigRat> y = parse_point(at);
      Json entries = Json::array();
      for (int i = 0; i < m.r; ++i) {
        Json row = Json::array();
        for (int jj = 0; jj < m.r; ++jj)
          row.push_back(m.g[i][jj].evaluate(y).to_string());
        entries.push_back(std::move(row));
      }
      j["g_at"] = std::move(entries);
      j["positive_definite"] = metric_positive_at(m, y);
    }
    os << j.dump(2) << "\n";
  } else {
    os << meta_comment(seed) << "\n";
    os << "det(g) = " << m.detg.to_string(kVarNames) << "\n";
    if (!at.empty()) {
      std::vector<BigRat> y = parse_point(at);
      for (int i = 0; i < m.r; ++i)
        for (int jj = i; jj < m.r; ++jj)
          os << "g[" << i + 1 << "][" << jj + 1
             << "] = " << m.g[i][jj].evaluate(y).to_string() << "\n";
      os << "positive_definite = "
         << (metric_positive_at(m, y) ? "true" : "false") << "\n";
    }
  }
  emit(os.str(), output);
  return kExitOk;
}

int cmd_scalar(const std::string& catalog_name, const std::string& input,
               bool symbolic, const std::string& at, const std::string& ray,
               const std::string& samples, const std::string& format,
               const std::string& output, std::uint64_t seed) {
  CubicForm f = resolve_cubic(catalog_name, input);
  std::ostringstream os;
  int exit_code = kExitOk;
  if (symbolic) {
    MetricField m = amwp_metric(f);
    CurvatureField c = curvature_field(m);
    os << meta_comment(seed) << "\n";
    os << "scalar = " << c.scalar.to_string(kVarNames) << "\n";
    if (catalog_name == "STU") {
      bool match = c.scalar == stu_scalar_golden();
      os << "golden_match = " << (match ? "true" : "false")
         << " (kappa=" << c.kappa << ")\n";
      if (!match) exit_code = kExitVerifyFailed;
    }
  } else if (!ray.empty()) {
    std::vector<MPoly> path = parse_ray(ray);
    std::vector<BigRat> ss;
    for (const auto& tok : parse_point(samples)) ss.push_back(tok);
    auto rows = blow_up_scan(f, path, ss);
    os << meta_comment(seed) << "\n";
    os << "s,y1,y2,y3,f,scalar,scalar_float\n";
    for (const auto& row : rows) {
      os << row.s.to_string();
      for (const auto& yi : row.y) os << "," << yi.to_string();
      os << "," << row.f_value.to_string() << ",";
      if (row.scalar) {
        std::ostringstream fo;
        fo.precision(17);
        fo << row.scalar->to_double();
        os << row.scalar->to_string() << "," << fo.str();
      } else {
        os << "pole,pole";
      }
      if (!row.in_index_cone) os << ",outside_index_cone";
      os << "\n";
    }
  } else if (!at.empty()) {
    std::vector<BigRat> y = parse_point(at);
    BigRat value = scalar_curvature_at(f, y);
    if (format == "json") {
      Json j;
      j["meta"] = meta_json(seed);
      j["scalar"] = value.to_string();
      j["scalar_float"] = value.to_double();
      os << j.dump(2) << "\n";
    } else {
      os << meta_comment(seed) << "\n";
      os << "scalar = " << value.to_string() << " (" << value.to_double()
         << ")\n";
    }
  } else {
    throw std::invalid_argument("scalar: need --symbolic, --at or --ray");
  }
  emit(os.str(), output);
  return exit_code;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int n,
               const std::string& catalog_name, const std::string& output) {
  auto results = run_suites(suite, seed, n, catalog_name);
  std::ostringstream os;
  os << meta_comment(seed) << "\n";
  bool all_ok = true;
  for (const auto& r : results) {
    os << r.suite << ": " << r.passed << "/" << (r.passed + r.failed)
       << (r.ok() ? " pass" : " FAIL") << "\n";
    for (const auto& f : r.failures) os << "  failed: " << f << "\n";
    all_ok = all_ok && r.ok();
  }
  emit(os.str(), output);
  return all_ok ? kExitOk : kExitVerifyFailed;
}

int cmd_perturb(const std::string& input, const std::string& experiment,
                const std::string& at, const std::string& scales,
                const std::string& output, std::uint64_t seed) {
  Prepotential P = prepotential_from_json(load_json_file(input));
  const int r = P.r();
  std::ostringstream os;
  os << meta_comment(seed) << "\n";
  if (experiment == "periodicity") {
    std::vector<Cplx> t(r, Cplx(0.0, 2.0));
    if (!at.empty()) {
      auto parts = parse_point(at);
      if (static_cast<int>(parts.size()) != 2 * r)
        throw std::invalid_argument("perturb --at needs x1..xr,y1..yr");
      for (int j = 0; j < r; ++j)
        t[j] = Cplx(parts[j].to_double(), parts[r + j].to_double());
    }
    std::vector<std::vector<long>> shifts;
    for (int j = 0; j < r; ++j) {
      std::vector<long> e(r, 0);
      e[j] = 1;
      shifts.push_back(e);
    }
    shifts.push_back(std::vector<long>(r, 1));
    double dev = periodicity_deviation(P, t, shifts);
    os << "shift_set,unit vectors + all-ones\n";
    os << "max_deviation," << dev << "\n";
    for (long n : {10L, 100L}) {
      std::vector<long> big(r, 0);
      big[0] = n;
      os << "entry_norm_at_x_shift_" << n << ","
         << metric_entry_norm_at_shift(P, t, big) << "\n";
    }
  } else if (experiment == "asymptotic") {
    std::vector<double> x0(r, 0.0);
    std::vector<BigRat> y0(r, BigRat(1));
    std::vector<BigRat> sc = {BigRat(1), BigRat(2)};
    if (!scales.empty()) sc = parse_point(scales);
    auto rows = asymptotic_deviation(P, x0, y0, sc);
    os << "s,metric_deviation,curvature_deviation\n";
    os.precision(12);
    for (const auto& row : rows)
      os << row.s << "," << row.metric_deviation << ","
         << row.curvature_deviation << "\n";
  } else {
    throw std::invalid_argument("perturb: experiment must be periodicity or asymptotic");
  }
  emit(os.str(), output);
  return kExitOk;
}

int cmd_polytope(const std::string& catalog_name, const std::string& input,
                 const std::string& action, const std::string& output,
                 std::uint64_t seed) {
  LatticeSimplex P = resolve_polytope(catalog_name, input);
  Json j;
  j["meta"] = meta_json(seed);
  j["vertices"] = polytope_to_json(P)["vertices"];
  if (action == "dual") {
    j["dual_vertices"] = polytope_to_json(polar_dual(P))["vertices"];
  } else if (action == "points") {
    j["lattice_points"] = lattice_points(P);
  } else if (action == "faces") {
    Json faces = Json::array();
    for (const auto& pt : lattice_points(P)) {
      std::vector<BigRat> u;
      for (long c : pt) u.push_back(BigRat(c));
      FaceInfo info = face_interiority(P, u);
      Json entry;
      entry["point"] = pt;
      entry["support"] = info.support;
      entry["codimension"] = info.codimension;
      entry["interior_of_face"] = info.interior;
      faces.push_back(std::move(entry));
    }
    j["faces"] = std::move(faces);
  } else {
    throw std::invalid_argument("polytope: action must be dual, points or faces");
  }
  emit(j.dump(2) + "\n", output);
  return kExitOk;
}

int cmd_catalog(const std::string& action, const std::string& name,
                const std::string& output, std::uint64_t seed) {
  std::ostringstream os;
  if (action == "list") {
    os << meta_comment(seed) << "\n";
    for (const auto& n : catalog_names()) os << n << "\n";
  } else if (action == "show") {
    CatalogEntry e = catalog_get(name);
    Json j;
    j["meta"] = meta_json(seed);
    j["name"] = e.name;
    j["notes"] = e.notes;
    if (e.cubic) j["cubic"] = cubic_to_json(*e.cubic);
    if (e.family) {
      j["family"] = e.family->f.to_string(e.family->var_names);
      j["active_variables"] = e.family->r;
    }
    if (e.polytope) j["polytope"] = polytope_to_json(*e.polytope);
    if (e.expected_s) j["expected_s"] = e.expected_s->to_string();
    if (e.type2_wall) j["type2_wall_variable"] = *e.type2_wall + 1;
    if (!e.kahler_cone.empty()) {
      Json cone = Json::array();
      for (const auto& row : e.kahler_cone) {
        Json jr = Json::array();
        for (const auto& c : row) jr.push_back(c.to_string());
        cone.push_back(std::move(jr));
      }
      j["kahler_cone"] = std::move(cone);
    }
    os << j.dump(2) << "\n";
    emit(os.str(), output);
    return kExitOk;
  } else {
    throw std::invalid_argument("catalog: action must be list or show");
  }
  emit(os.str(), output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Kaehler-cone metric and curvature toolkit"};
  app.set_version_flag("--version", std::string(amwp::kToolVersion));
  app.require_subcommand(1);

  std::string catalog_name, input, at, ray, samples, format = "text", output;
  std::string suite = "all", experiment, action, show_name;
  std::uint64_t seed = 42;
  int n = 0;
  bool symbolic = false;

  auto add_io = [&](CLI::App* cmd, bool with_cubic) {
    if (with_cubic) {
      cmd->add_option("--catalog", catalog_name, "catalog entry name");
      cmd->add_option("--input", input, "input JSON file");
    }
    cmd->add_option("--format", format, "text|csv|json");
    cmd->add_option("--output", output, "output path (default stdout)");
    cmd->add_option("--seed", seed, "seed recorded in outputs");
  };

  CLI::App* metric = app.add_subcommand("metric", "exact AMWP metric data");
  add_io(metric, true);
  metric->add_option("--at", at, "evaluation point y1,y2,...");

  CLI::App* scalar = app.add_subcommand("scalar", "scalar curvature");
  add_io(scalar, true);
  scalar->add_flag("--symbolic", symbolic, "full symbolic scalar");
  scalar->add_option("--at", at, "evaluation point");
  scalar->add_option("--ray", ray, "path components in s, e.g. s^2,s,s");
  scalar->add_option("--samples", samples, "comma-separated s values");

  CLI::App* verify = app.add_subcommand("verify", "verification batteries");
  add_io(verify, true);
  verify->add_option("--suite", suite,
                     "lemma2_9|lemma3_5|thm3_7|conj2_8|slice_formula|bounds|all");
  verify->add_option("--n", n, "battery size (0 = suite default)");

  CLI::App* perturb = app.add_subcommand("perturb", "prepotential experiments");
  add_io(perturb, true);
  perturb->add_option("--experiment", experiment, "periodicity|asymptotic")
      ->required();
  perturb->add_option("--at", at, "base point x1..xr,y1..yr");
  perturb->add_option("--scales", samples, "asymptotic scales, e.g. 1,2");

  CLI::App* polytope = app.add_subcommand("polytope", "lattice simplex reports");
  add_io(polytope, true);
  polytope->add_option("--action", action, "dual|points|faces")->required();

  CLI::App* catalog = app.add_subcommand("catalog", "built-in data");
  catalog->add_option("action", action, "list|show")->required();
  catalog->add_option("name", show_name, "entry name for show");
  catalog->add_option("--output", output, "output path");
  catalog->add_option("--seed", seed, "seed recorded in outputs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(metric))
      return cmd_metric(catalog_name, input, at, format, output, seed);
    if (app.got_subcommand(scalar))
      return cmd_scalar(catalog_name, input, symbolic, at, ray, samples, format,
                        output, seed);
    if (app.got_subcommand(verify))
      return cmd_verify(suite, seed, n, catalog_name, output);
    if (app.got_subcommand(perturb))
      return cmd_perturb(input, experiment, at, samples, output, seed);
    if (app.got_subcommand(polytope))
      return cmd_polytope(catalog_name, input, action, output, seed);
    if (app.got_subcommand(catalog))
      return cmd_catalog(action, show_name, output, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

// Command-line front end for the quadmap library: orbits, region verdicts,
// Green estimates, growth classification, the planar model, randomized
// verification suites, slice rendering, and (a,b) parameter sweeps.
//
// Exit codes: 0 success, 1 usage error, 2 invalid constants, 3 verify failure.

#include <cmath>
#include <complex>
#include <fstream>
#include <random>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadmap/classify.hpp"
#include "quadmap/errors.hpp"
#include "quadmap/green.hpp"
#include "quadmap/maps.hpp"
#include "quadmap/model2d.hpp"
#include "quadmap/parallel.hpp"
#include "quadmap/raster.hpp"
#include "quadmap/regions.hpp"
#include "quadmap/verify.hpp"

namespace {

using quadmap::Direction;
using quadmap::Params;
using quadmap::Point3;
using quadmap::RegionConstants;

std::complex<double> parse_complex(const std::string& s) {
  std::istringstream in(s);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(in >> re)) throw CLI::ValidationError("complex", "expected re,im: " + s);
  if (in >> comma) {
    if (comma != ',' || !(in >> im)) {
      throw CLI::ValidationError("complex", "expected re,im: " + s);
    }
  }
  return {re, im};
}

struct CommonOpts {
  std::string a = "1,0";
  std::string b = "1,0";
  std::optional<double> r_plus, delta, alpha, r_minus, epsilon;
  std::uint64_t seed = 7;
  std::size_t horizon = 100;
  double tol = 1e-8;
  int threads = quadmap::default_worker_count();
  std::string config_path;

  Params params() const { return {parse_complex(a), parse_complex(b)}; }
  quadmap::ConstantOverrides overrides() const {
    return {r_plus, delta, alpha, r_minus, epsilon};
  }
  RegionConstants constants() const {
    return quadmap::choose_constants(params(), overrides());
  }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--a", o.a, "coefficient a as re,im")->capture_default_str();
  cmd->add_option("--b", o.b, "coefficient b as re,im")->capture_default_str();
  cmd->add_option("--r-plus", o.r_plus, "override R+ of V+");
  cmd->add_option("--delta", o.delta, "override delta of V+");
  cmd->add_option("--alpha", o.alpha, "override alpha");
  cmd->add_option("--r-minus", o.r_minus, "override R- of V-");
  cmd->add_option("--epsilon", o.epsilon, "override epsilon of V-");
  cmd->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--horizon", o.horizon, "iteration horizon")->capture_default_str();
  cmd->add_option("--tol", o.tol, "convergence tolerance")->capture_default_str();
  cmd->add_option("--threads", o.threads, "worker count (default QUADMAP_THREADS)");
  cmd->add_option("--config", o.config_path, "JSON config mirroring flags; flags win");
}

// Config file: a JSON object whose keys are the long flag names without the
// leading dashes.  The tokens are injected right after the subcommand name,
// before any explicit flags; with last-occurrence-wins parsing the command
// line always takes precedence.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty() || args.empty()) return args;

  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  nlohmann::json j;
  in >> j;

  std::vector<std::string> injected;
  for (auto& [key, value] : j.items()) {
    injected.push_back("--" + key);
    auto token = [](const nlohmann::json& v) {
      if (v.is_string()) return v.get<std::string>();
      std::ostringstream ss;
      ss << v;
      return ss.str();
    };
    if (value.is_array()) {
      for (const auto& el : value) injected.push_back(token(el));
    } else if (value.is_boolean()) {
      if (!value.get<bool>()) injected.pop_back();
    } else {
      injected.push_back(token(value));
    }
  }

  std::vector<std::string> out;
  out.push_back(args.front());  // subcommand name
  out.insert(out.end(), injected.begin(), injected.end());
  out.insert(out.end(), args.begin() + 1, args.end());
  return out;
}

Point3 parse_point3(const std::vector<std::string>& coords) {
  return Point3::from_complex(parse_complex(coords.at(0)), parse_complex(coords.at(1)),
                              parse_complex(coords.at(2)));
}

Direction parse_direction(const std::string& d) {
  if (d == "forward") return Direction::Forward;
  if (d == "backward") return Direction::Backward;
  throw CLI::ValidationError("--direction", "must be forward or backward");
}

void echo_common(std::ostream& out, const CommonOpts& o, const char* prefix) {
  out << prefix << "a=" << o.a << "\n" << prefix << "b=" << o.b << "\n";
  out << prefix << "seed=" << o.seed << "\n";
  out << prefix << "horizon=" << o.horizon << "\n";
  out << prefix << "tol=" << o.tol << "\n";
}

std::ostream& open_or_stdout(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  return file;
}

int cmd_constants(const CommonOpts& o) {
  const RegionConstants c = o.constants();
  std::cout.precision(10);
  std::cout << "a=" << o.a << " b=" << o.b << "\n"
            << "delta=" << c.delta << "\n"
            << "alpha=" << c.alpha << "\n"
            << "r_plus=" << c.r_plus << "\n"
            << "epsilon=" << c.epsilon << "\n"
            << "r_minus=" << c.r_minus << "\n"
            << "theta=" << c.theta << "\n"
            << "c1=" << c.c1 << "\n"
            << "c2=" << c.c2 << "\n"
            << "kminus_bound_applies=" << (c.kminus_bound_applies ? "true" : "false")
            << "\n";
  return 0;
}

int cmd_iterate(const CommonOpts& o, const std::vector<std::string>& point,
                std::size_t n, const std::string& dir, std::size_t stride,
                const std::string& out_path) {
  const Params p = o.params();
  const quadmap::OrbitSeries s = quadmap::orbit(p, parse_point3(point), n,
                                                parse_direction(dir), stride);
  std::ofstream file;
  std::ostream& out = open_or_stdout(file, out_path);
  echo_common(out, o, "# ");
  out << "# n=" << n << " direction=" << dir << " stride=" << stride << "\n";
  out << "n,ln_abs_x,arg_x,ln_abs_y,arg_y,ln_abs_z,arg_z,ln_sup\n";
  out.precision(17);
  for (std::size_t i = 0; i < s.checkpoints.size(); ++i) {
    const Point3& w = s.checkpoints[i];
    const std::size_t step = std::min(i * s.stride, s.steps_taken);
    out << step << "," << quadmap::ext_log_mag(w.x).as_double() << ","
        << quadmap::ext_arg(w.x) << "," << quadmap::ext_log_mag(w.y).as_double() << ","
        << quadmap::ext_arg(w.y) << "," << quadmap::ext_log_mag(w.z).as_double() << ","
        << quadmap::ext_arg(w.z) << "," << w.log_sup().as_double() << "\n";
  }
  return 0;
}

int cmd_verdict(const CommonOpts& o, const std::vector<std::string>& point,
                const std::string& dir) {
  const RegionConstants c = o.constants();
  const quadmap::RegionVerdict v = quadmap::region_verdict(
      o.params(), c, parse_point3(point), o.horizon, parse_direction(dir));
  static const char* names[] = {"InUPlus", "InUMinus", "KPlusUpToHorizon",
                                "KMinusUpToHorizon"};
  std::cout << names[static_cast<int>(v.kind)] << " n=" << v.n << "\n";
  return 0;
}

int cmd_green(const CommonOpts& o, const std::vector<std::string>& point,
              const std::string& dir) {
  const RegionConstants c = o.constants();
  const Point3 w = parse_point3(point);
  auto print = [&](const char* name, const quadmap::GreenEstimate& g) {
    std::cout << name << " value=" << g.value
              << (g.horizon_limited ? " (unresolved)" : "")
              << " converged=" << (g.converged ? "true" : "false")
              << " iterations=" << g.iterations_used << " residual=" << g.residual
              << "\n";
  };
  std::cout.precision(12);
  if (dir.empty() || dir == "forward") {
    print("G+", quadmap::green_plus(o.params(), c, w, o.tol, o.horizon));
  }
  if (dir.empty() || dir == "backward") {
    print("G-", quadmap::green_minus(o.params(), c, w, o.tol, o.horizon));
  }
  return 0;
}

int cmd_classify(const CommonOpts& o, const std::vector<std::string>& point,
                 const std::string& dir, double merge_tol) {
  const RegionConstants c = o.constants();
  const Point3 w = parse_point3(point);
  const Direction d = parse_direction(dir);
  const quadmap::OrbitClass oc = quadmap::classify_orbit(o.params(), c, w, o.horizon, d);
  std::cout.precision(12);
  switch (oc.kind) {
    case quadmap::OrbitClass::Kind::Bounded:
      std::cout << "Bounded sup_norm=" << oc.sup_norm << "\n";
      break;
    case quadmap::OrbitClass::Kind::LinearExponential:
      std::cout << "LinearExponential rate=" << oc.rate << " r2=" << oc.confidence
                << "\n";
      break;
    case quadmap::OrbitClass::Kind::SuperExponential:
      std::cout << "SuperExponential base=" << oc.base << " r2=" << oc.confidence << "\n";
      break;
    case quadmap::OrbitClass::Kind::HorizonLimited:
      std::cout << "HorizonLimited\n";
      break;
  }
  const quadmap::ClusterReport cr =
      quadmap::cluster_points(o.params(), w, o.horizon, merge_tol, d);
  for (const auto& cl : cr.clusters) {
    std::cout << "cluster fraction=" << cl.visit_fraction << " rep=[";
    for (int i = 0; i < 4; ++i) {
      std::cout << cl.representative[i].real() << "+" << cl.representative[i].imag()
                << "i" << (i < 3 ? " : " : "]");
    }
    for (int i = 0; i < quadmap::SpecialLoci::kCount; ++i) {
      std::cout << " d(" << quadmap::SpecialLoci::name(i) << ")=" << cl.loci_distance[i];
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_verify(const CommonOpts& o, int samples, const std::string& out_path) {
  const Params p = o.params();
  const RegionConstants c = o.constants();
  std::vector<quadmap::VerifyReport> reports;
  reports.push_back(quadmap::verify_trap_forward(p, c, samples, o.seed, o.threads));
  reports.push_back(quadmap::verify_trap_backward(p, c, samples, o.seed, o.threads));
  if (c.kminus_bound_applies) {
    reports.push_back(
        quadmap::verify_kminus_bounded(p, c, samples / 10 + 1, o.horizon, o.seed,
                                       o.threads));
  }
  reports.push_back(
      quadmap::verify_green_functional(p, c, samples / 5 + 1, o.tol, o.seed, o.threads));
  reports.push_back(
      quadmap::verify_growth_envelope(p, c, samples / 10 + 1, o.horizon, o.seed,
                                      o.threads));

  nlohmann::ordered_json j;
  j["config"] = {{"a", o.a},           {"b", o.b},   {"samples", samples},
                 {"seed", o.seed},     {"tol", o.tol}, {"horizon", o.horizon}};
  j["reports"] = nlohmann::ordered_json::parse(quadmap::reports_to_json(reports));
  std::ofstream file;
  std::ostream& out = open_or_stdout(file, out_path);
  out << j.dump(2) << "\n";

  for (const auto& r : reports) {
    if (r.failed > 0) return 3;
  }
  return 0;
}

int cmd_render(const CommonOpts& o, const std::string& mode,
               const std::vector<std::string>& base, const std::vector<std::string>& dir1,
               const std::vector<std::string>& dir2, const std::vector<double>& center,
               double width, double height, const std::vector<int>& pixels,
               const std::string& out_prefix, bool csv) {
  quadmap::SliceSpec spec;
  spec.params = o.params();
  spec.constants = o.constants();
  spec.horizon = o.horizon;
  spec.tol = o.tol;
  spec.workers = o.threads;
  for (int i = 0; i < 3; ++i) {
    spec.base[i] = parse_complex(base.at(i));
    spec.dir1[i] = parse_complex(dir1.at(i));
    spec.dir2[i] = parse_complex(dir2.at(i));
  }
  spec.center_s = center.at(0);
  spec.center_t = center.at(1);
  spec.width = width;
  spec.height = height;
  spec.pixels_w = pixels.at(0);
  spec.pixels_h = pixels.at(1);
  if (mode == "escape-time-forward") spec.mode = quadmap::RasterMode::EscapeTimeForward;
  else if (mode == "escape-time-backward") spec.mode = quadmap::RasterMode::EscapeTimeBackward;
  else if (mode == "green-plus") spec.mode = quadmap::RasterMode::GreenPlus;
  else if (mode == "green-minus") spec.mode = quadmap::RasterMode::GreenMinus;
  else if (mode == "class") spec.mode = quadmap::RasterMode::Class;
  else throw CLI::ValidationError("--mode", "unknown mode " + mode);

  const quadmap::RasterGrid grid = quadmap::render_slice(spec);
  quadmap::write_pgm16(grid, out_prefix + ".pgm");
  quadmap::write_sidecar_json(grid, out_prefix + ".json");
  if (csv) quadmap::write_csv(grid, out_prefix + ".csv");
  std::cout << "wrote " << out_prefix << ".pgm (" << grid.pixels_w << "x"
            << grid.pixels_h << "), unresolved " << grid.unresolved_fraction << "\n";
  return 0;
}

int cmd_sweep(const CommonOpts& o, const std::string& a_from, const std::string& a_to,
              int a_steps, const std::string& b_from, const std::string& b_to,
              int b_steps, int samples, const std::string& out_path) {
  const std::complex<double> a0 = parse_complex(a_from), a1 = parse_complex(a_to);
  const std::complex<double> b0 = parse_complex(b_from), b1 = parse_complex(b_to);
  struct Row {
    std::complex<double> a, b;
    bool feasible = false;
    double epsilon = 0, r_minus = 0;
    double frac_fwd = 0, frac_bwd = 0, mean_green = 0;
  };
  const std::size_t cells = static_cast<std::size_t>(a_steps) * b_steps;
  std::vector<Row> rows(cells);

  quadmap::parallel_for(cells, o.threads, [&](std::size_t idx) {
    const int ia = static_cast<int>(idx) / b_steps;
    const int ib = static_cast<int>(idx) % b_steps;
    Row& row = rows[idx];
    const double ta = a_steps > 1 ? static_cast<double>(ia) / (a_steps - 1) : 0.0;
    const double tb = b_steps > 1 ? static_cast<double>(ib) / (b_steps - 1) : 0.0;
    row.a = a0 + ta * (a1 - a0);
    row.b = b0 + tb * (b1 - b0);
    Params p{row.a, row.b};
    RegionConstants c;
    try {
      c = quadmap::choose_constants(p, o.overrides());
    } catch (const std::exception&) {
      return;  // infeasible cell
    }
    row.feasible = true;
    row.epsilon = c.epsilon;
    row.r_minus = c.r_minus;
    std::mt19937_64 rng(o.seed + idx);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    int fwd = 0, bwd = 0, greens = 0;
    double green_sum = 0.0;
    for (int s = 0; s < samples; ++s) {
      auto coord = [&] {
        return quadmap::ComplexExt::from_complex(std::polar(2.0 * unit(rng), phase(rng)));
      };
      const Point3 w{coord(), coord(), coord()};
      const auto vf = quadmap::region_verdict(p, c, w, o.horizon, Direction::Forward);
      const auto vb = quadmap::region_verdict(p, c, w, o.horizon, Direction::Backward);
      if (vf.escaped()) {
        ++fwd;
        const auto g = quadmap::green_plus(p, c, w, o.tol, o.horizon);
        if (g.converged) {
          green_sum += g.value;
          ++greens;
        }
      }
      if (vb.escaped()) ++bwd;
    }
    row.frac_fwd = samples > 0 ? static_cast<double>(fwd) / samples : 0.0;
    row.frac_bwd = samples > 0 ? static_cast<double>(bwd) / samples : 0.0;
    row.mean_green = greens > 0 ? green_sum / greens : 0.0;
  });

  std::ofstream file;
  std::ostream& out = open_or_stdout(file, out_path);
  echo_common(out, o, "# ");
  out << "# samples=" << samples << "\n";
  out << "a_re,a_im,b_re,b_im,feasible,epsilon,r_minus,frac_escaped_fwd,"
         "frac_escaped_bwd,mean_green_plus\n";
  out.precision(12);
  for (const Row& r : rows) {
    out << r.a.real() << "," << r.a.imag() << "," << r.b.real() << "," << r.b.imag()
        << "," << (r.feasible ? 1 : 0) << "," << r.epsilon << "," << r.r_minus << ","
        << r.frac_fwd << "," << r.frac_bwd << "," << r.mean_green << "\n";
  }
  return 0;
}

int cmd_model2d(const std::string& sub, const std::string& b_str,
                const std::vector<std::string>& point, const std::string& x0_str,
                int n_pairs) {
  const std::complex<double> b = parse_complex(b_str);
  std::cout.precision(15);
  if (sub == "step" || sub == "closed") {
    quadmap::Point2 w{quadmap::ComplexExt::from_complex(parse_complex(point.at(0))),
                      quadmap::ComplexExt::from_complex(parse_complex(point.at(1)))};
    const quadmap::Point2 r = sub == "step" ? quadmap::step2d(b, w)
                                            : quadmap::step2_closed(b, w);
    auto show = [](const char* n, const quadmap::ComplexExt& v) {
      std::cout << n << ": ln|.|=" << quadmap::ext_log_mag(v).as_double()
                << " arg=" << quadmap::ext_arg(v) << "\n";
    };
    show("x", r.x);
    show("y", r.y);
    return 0;
  }
  if (sub == "lines") {
    const auto lines = quadmap::invariant_lines(b);
    if (!lines) {
      std::cout << "no invariant lines (b^4 != 1)\n";
      return 0;
    }
    for (const auto& s : lines->lines) {
      std::cout << "y = " << s.real() << (s.imag() < 0 ? "" : "+") << s.imag() << "i\n";
    }
    return 0;
  }
  if (sub == "sharp-rate") {
    const auto seq =
        quadmap::sharp_growth_exponent(b, parse_complex(x0_str), n_pairs);
    std::cout << "n,rate\n";
    for (std::size_t i = 0; i < seq.size(); ++i) std::cout << i << "," << seq[i] << "\n";
    return 0;
  }
  throw CLI::ValidationError("model2d", "unknown subcommand " + sub);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for H(x,y,z) = (xy+az, x^2+by, x) on C^3"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  struct SubState {
    CommonOpts common;
    std::vector<std::string> point{"0,0", "0,0", "0,0"};
    std::vector<std::string> base{"0,0", "0,0", "0,0"};
    std::vector<std::string> dir1{"1,0", "0,0", "0,0"};
    std::vector<std::string> dir2{"0,0", "1,0", "0,0"};
    std::vector<double> center{0.0, 0.0};
    std::vector<int> pixels{64, 64};
    std::string direction = "forward";
    std::string mode = "escape-time-forward";
    std::string out;
    std::string a_from = "1,0", a_to = "1,0", b_from = "1,0", b_to = "2,0";
    std::string x0 = "2,0";
    std::string model_sub = "sharp-rate";
    std::size_t n = 10;
    std::size_t stride = 1;
    int samples = 1000;
    int a_steps = 1, b_steps = 5, n_pairs = 8;
    double merge_tol = 0.05;
    double win_w = 2.0, win_h = 2.0;
    bool csv = false;
  };
  SubState st;

  CLI::App* constants = app.add_subcommand("constants", "print derived region constants");
  add_common(constants, st.common);

  CLI::App* iterate = app.add_subcommand("iterate", "dump an orbit as CSV");
  add_common(iterate, st.common);
  iterate->add_option("--point", st.point, "x y z as re,im triples")->expected(3);
  iterate->add_option("--n", st.n, "steps");
  iterate->add_option("--stride", st.stride, "checkpoint stride");
  iterate->add_option("--direction", st.direction, "forward|backward");
  iterate->add_option("--out", st.out, "output file (default stdout)");

  CLI::App* verdict = app.add_subcommand("verdict", "region verdict for a point");
  add_common(verdict, st.common);
  verdict->add_option("--point", st.point)->expected(3);
  verdict->add_option("--direction", st.direction);

  CLI::App* green = app.add_subcommand("green", "Green function estimates");
  add_common(green, st.common);
  green->add_option("--point", st.point)->expected(3);
  std::string green_dir;
  green->add_option("--direction", green_dir, "forward|backward (default both)");

  CLI::App* classify = app.add_subcommand("classify", "orbit class and cluster points");
  add_common(classify, st.common);
  classify->add_option("--point", st.point)->expected(3);
  classify->add_option("--direction", st.direction);
  classify->add_option("--merge-tol", st.merge_tol, "cluster merge tolerance");

  CLI::App* model2d = app.add_subcommand("model2d", "the a=0 planar model");
  std::string model_b = "1,0";
  model2d->add_option("sub", st.model_sub, "step|closed|lines|sharp-rate")->required();
  model2d->add_option("--b", model_b);
  std::vector<std::string> model_point{"1,0", "0,1"};
  model2d->add_option("--point", model_point, "x y as re,im")->expected(2);
  model2d->add_option("--x0", st.x0, "start on the invariant line");
  model2d->add_option("--n", st.n_pairs, "number of H^2 pairs");

  CLI::App* verify = app.add_subcommand("verify", "run the randomized property suites");
  add_common(verify, st.common);
  verify->add_option("--samples", st.samples, "samples per trap suite");
  verify->add_option("--out", st.out, "report path (default stdout)");

  CLI::App* render = app.add_subcommand("render", "render a 2D slice");
  add_common(render, st.common);
  render->add_option("--mode", st.mode,
                     "escape-time-forward|escape-time-backward|green-plus|green-minus|class");
  render->add_option("--base", st.base)->expected(3);
  render->add_option("--dir1", st.dir1)->expected(3);
  render->add_option("--dir2", st.dir2)->expected(3);
  render->add_option("--center", st.center)->expected(2);
  render->add_option("--width", st.win_w);
  render->add_option("--height", st.win_h);
  render->add_option("--pixels", st.pixels)->expected(2);
  render->add_option("--out", st.out, "output prefix")->required();
  render->add_flag("--csv", st.csv, "also dump row,col,value CSV");

  CLI::App* sweep = app.add_subcommand("sweep", "grid sweep over (a,b)");
  add_common(sweep, st.common);
  sweep->add_option("--a-from", st.a_from);
  sweep->add_option("--a-to", st.a_to);
  sweep->add_option("--a-steps", st.a_steps);
  sweep->add_option("--b-from", st.b_from);
  sweep->add_option("--b-to", st.b_to);
  sweep->add_option("--b-steps", st.b_steps);
  sweep->add_option("--samples", st.samples, "sample points per cell");
  sweep->add_option("--out", st.out, "CSV path (default stdout)");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config(args);
    std::string joined;
    for (const auto& t : args) {
      if (!joined.empty()) joined += ' ';
      joined += t;
    }
    app.parse(joined, false);

    if (constants->parsed()) return cmd_constants(st.common);
    if (iterate->parsed()) {
      return cmd_iterate(st.common, st.point, st.n, st.direction, st.stride, st.out);
    }
    if (verdict->parsed()) return cmd_verdict(st.common, st.point, st.direction);
    if (green->parsed()) return cmd_green(st.common, st.point, green_dir);
    if (classify->parsed()) {
      return cmd_classify(st.common, st.point, st.direction, st.merge_tol);
    }
    if (model2d->parsed()) {
      return cmd_model2d(st.model_sub, model_b, model_point, st.x0, st.n_pairs);
    }
    if (verify->parsed()) return cmd_verify(st.common, st.samples, st.out);
    if (render->parsed()) {
      return cmd_render(st.common, st.mode, st.base, st.dir1, st.dir2, st.center,
                        st.win_w, st.win_h, st.pixels, st.out, st.csv);
    }
    if (sweep->parsed()) {
      return cmd_sweep(st.common, st.a_from, st.a_to, st.a_steps, st.b_from, st.b_to,
                       st.b_steps, st.samples, st.out);
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 1;
  } catch (const quadmap::InvalidConstants& e) {
    std::cerr << "invalid constants: " << e.what() << "\n";
    return 2;
  } catch (const quadmap::NoFeasibleEpsilon& e) {
    std::cerr << "no feasible epsilon: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

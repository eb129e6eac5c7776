#include "quadmap/raster.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "quadmap/errors.hpp"
#include "quadmap/green.hpp"
#include "quadmap/parallel.hpp"

namespace quadmap {

namespace {

Point3 slice_point(const SliceSpec& spec, double s, double t) {
  std::array<std::complex<double>, 3> w;
  for (int i = 0; i < 3; ++i) {
    w[i] = spec.base[i] + s * spec.dir1[i] + t * spec.dir2[i];
  }
  return Point3::from_complex(w[0], w[1], w[2]);
}

double eval_pixel(const SliceSpec& spec, const Point3& w) {
  switch (spec.mode) {
    case RasterMode::EscapeTimeForward: {
      const RegionVerdict v =
          region_verdict(spec.params, spec.constants, w, spec.horizon, Direction::Forward);
      return v.escaped() ? static_cast<double>(v.n) : RasterGrid::kUnresolved;
    }
    case RasterMode::EscapeTimeBackward: {
      const RegionVerdict v = region_verdict(spec.params, spec.constants, w, spec.horizon,
                                             Direction::Backward);
      return v.escaped() ? static_cast<double>(v.n) : RasterGrid::kUnresolved;
    }
    case RasterMode::GreenPlus: {
      const GreenEstimate g =
          green_plus(spec.params, spec.constants, w, spec.tol, spec.horizon);
      return g.horizon_limited ? RasterGrid::kUnresolved : g.value;
    }
    case RasterMode::GreenMinus: {
      const GreenEstimate g =
          green_minus(spec.params, spec.constants, w, spec.tol, spec.horizon);
      return g.horizon_limited ? RasterGrid::kUnresolved : g.value;
    }
    case RasterMode::Class: {
      const RegionVerdict v =
          region_verdict(spec.params, spec.constants, w, spec.horizon, Direction::Forward);
      return v.escaped() ? 1.0 : 0.0;
    }
  }
  return RasterGrid::kUnresolved;
}

}  // namespace

RasterGrid render_slice(const SliceSpec& spec) {
  if (spec.pixels_w < 1 || spec.pixels_h < 1) {
    throw std::invalid_argument("raster dimensions must be >= 1");
  }
  if (auto err = validate_constants(spec.constants)) throw InvalidConstants(*err);

  RasterGrid grid;
  grid.pixels_w = spec.pixels_w;
  grid.pixels_h = spec.pixels_h;
  grid.spec = spec;
  grid.values.assign(static_cast<std::size_t>(spec.pixels_w) * spec.pixels_h, 0.0);

  const int w = spec.pixels_w, h = spec.pixels_h;
  auto coord = [](double center, double extent, int i, int n) {
    if (n == 1) return center;
    return center + (static_cast<double>(i) / (n - 1) - 0.5) * extent;
  };

  parallel_for(grid.values.size(), spec.workers, [&](std::size_t idx) {
    const int row = static_cast<int>(idx) / w;
    const int col = static_cast<int>(idx) % w;
    const double s = coord(spec.center_s, spec.width, col, w);
    const double t = coord(spec.center_t, spec.height, row, h);
    grid.values[idx] = eval_pixel(spec, slice_point(spec, s, t));
  });

  double vmin = std::numeric_limits<double>::infinity();
  double vmax = -vmin;
  std::size_t unresolved = 0;
  for (double v : grid.values) {
    if (v == RasterGrid::kUnresolved) {
      ++unresolved;
      continue;
    }
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
  }
  grid.unresolved_fraction = static_cast<double>(unresolved) / grid.values.size();
  if (unresolved == grid.values.size()) {
    vmin = vmax = 0.0;
  }
  grid.vmin = vmin;
  grid.vmax = vmax;
  return grid;
}

void write_pgm16(const RasterGrid& grid, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "P5\n" << grid.pixels_w << " " << grid.pixels_h << "\n65535\n";
  const bool class_mode = grid.spec.mode == RasterMode::Class;
  const double span = grid.vmax > grid.vmin ? grid.vmax - grid.vmin : 1.0;
  for (double v : grid.values) {
    std::uint16_t pix;
    if (v == RasterGrid::kUnresolved) {
      pix = 65535;
    } else if (class_mode) {
      pix = static_cast<std::uint16_t>(v);
    } else {
      pix = static_cast<std::uint16_t>(
          std::lround((v - grid.vmin) / span * 65534.0));
    }
    const unsigned char bytes[2] = {static_cast<unsigned char>(pix >> 8),
                                    static_cast<unsigned char>(pix & 0xff)};
    out.write(reinterpret_cast<const char*>(bytes), 2);
  }
}

void write_csv(const RasterGrid& grid, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "row,col,value\n";
  out.precision(17);
  for (int r = 0; r < grid.pixels_h; ++r) {
    for (int c = 0; c < grid.pixels_w; ++c) {
      out << r << "," << c << "," << grid.at(r, c) << "\n";
    }
  }
}

void write_sidecar_json(const RasterGrid& grid, const std::string& path) {
  nlohmann::ordered_json j;
  const SliceSpec& s = grid.spec;
  auto cvec = [](const std::array<std::complex<double>, 3>& v) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& c : v) a.push_back({c.real(), c.imag()});
    return a;
  };
  static const char* mode_names[] = {"escape-time-forward", "escape-time-backward",
                                     "green-plus", "green-minus", "class"};
  j["mode"] = mode_names[static_cast<int>(s.mode)];
  j["base"] = cvec(s.base);
  j["dir1"] = cvec(s.dir1);
  j["dir2"] = cvec(s.dir2);
  j["center"] = {s.center_s, s.center_t};
  j["window"] = {s.width, s.height};
  j["pixels"] = {s.pixels_w, s.pixels_h};
  j["horizon"] = s.horizon;
  j["tol"] = s.tol;
  j["params"] = {{"a", {s.params.a.real(), s.params.a.imag()}},
                 {"b", {s.params.b.real(), s.params.b.imag()}}};
  j["constants"] = {{"r_plus", s.constants.r_plus},
                    {"delta", s.constants.delta},
                    {"alpha", s.constants.alpha},
                    {"r_minus", s.constants.r_minus},
                    {"epsilon", s.constants.epsilon}};
  j["stats"] = {{"vmin", grid.vmin},
                {"vmax", grid.vmax},
                {"unresolved_fraction", grid.unresolved_fraction}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << j.dump(2) << "\n";
}

}  // namespace quadmap

#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "quadmap/maps.hpp"
#include "quadmap/regions.hpp"

namespace quadmap {

enum class RasterMode {
  EscapeTimeForward,
  EscapeTimeBackward,
  GreenPlus,
  GreenMinus,
  Class,
};

/// A 2D complex slice base + s*dir1 + t*dir2 with real (s,t) over a window,
/// sampled on an endpoint grid so that refining W -> 2W-1 revisits the same
/// points.
struct SliceSpec {
  std::array<std::complex<double>, 3> base{};
  std::array<std::complex<double>, 3> dir1{{1.0, 0.0, 0.0}};
  std::array<std::complex<double>, 3> dir2{{0.0, 1.0, 0.0}};
  double center_s = 0.0;
  double center_t = 0.0;
  double width = 2.0;
  double height = 2.0;
  int pixels_w = 64;
  int pixels_h = 64;
  RasterMode mode = RasterMode::EscapeTimeForward;
  std::size_t horizon = 100;
  double tol = 1e-8;
  Params params;
  RegionConstants constants;
  int workers = 1;
};

struct RasterGrid {
  /// Unresolved (K-side at horizon) pixels carry this sentinel, never 0.
  static constexpr double kUnresolved = -1.0;

  int pixels_w = 0;
  int pixels_h = 0;
  std::vector<double> values;  // row-major, pixels_w * pixels_h
  SliceSpec spec;
  double vmin = 0.0;  // over resolved pixels
  double vmax = 0.0;
  double unresolved_fraction = 0.0;

  double at(int row, int col) const {
    return values[static_cast<std::size_t>(row) * pixels_w + col];
  }
};

RasterGrid render_slice(const SliceSpec& spec);

/// 16-bit big-endian binary PGM (P5).  Value modes scale resolved values to
/// [0, 65534] and map unresolved pixels to 65535; class mode writes the
/// class codes directly.
void write_pgm16(const RasterGrid& grid, const std::string& path);
void write_csv(const RasterGrid& grid, const std::string& path);
/// Sidecar metadata: full spec echo plus statistics, deterministic bytes.
void write_sidecar_json(const RasterGrid& grid, const std::string& path);

}  // namespace quadmap

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "replab/basins.hpp"

namespace replab {

/// CSV cell: reals print with 17 significant digits, text is quoted when it
/// contains a comma, quote or line break.
using CsvCell = std::variant<double, std::int64_t, std::string>;

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<CsvCell>> rows;
};

/// Header row plus data rows, LF line endings. Throws ValidationError for
/// rows whose width differs from the header.
std::string render_csv(const CsvTable& table);
void write_csv(const CsvTable& table, const std::string& path);

struct Rgb {
  std::uint8_t r, g, b;
};

Rgb basin_color(OutcomeCode code);

/// Binary P6 image, one pixel per cell. Image row 0 is the top of the box
/// (eta2 near 1); image column k is eta1 index k.
std::string render_basin_ppm(const BasinRaster& raster);
void write_basin_ppm(const BasinRaster& raster, const std::string& path);

/// Writes bytes to path, throwing IoError with the path on failure.
void write_file(const std::string& path, const std::string& bytes);

}  // namespace replab

#include "replab/io.hpp"

#include <cstdio>
#include <fstream>

#include "replab/errors.hpp"

namespace replab {

namespace {

void put_text(std::string& out, const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) {
    out += s;
    return;
  }
  out += '"';
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
}

void put_cell(std::string& out, const CsvCell& cell) {
  if (const double* v = std::get_if<double>(&cell)) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", *v);
    out += buf;
  } else if (const std::int64_t* n = std::get_if<std::int64_t>(&cell)) {
    out += std::to_string(*n);
  } else {
    put_text(out, std::get<std::string>(cell));
  }
}

}  // namespace

std::string render_csv(const CsvTable& table) {
  std::string out;
  for (std::size_t k = 0; k < table.columns.size(); ++k) {
    if (k) out += ',';
    put_text(out, table.columns[k]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) {
      throw ValidationError("csv row has " + std::to_string(row.size()) + " cells, header has " +
                            std::to_string(table.columns.size()));
    }
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ',';
      put_cell(out, row[k]);
    }
    out += '\n';
  }
  return out;
}

void write_csv(const CsvTable& table, const std::string& path) {
  write_file(path, render_csv(table));
}

Rgb basin_color(OutcomeCode code) {
  switch (code) {
    case OutcomeCode::ToGG: return {0, 160, 0};
    case OutcomeCode::ToBB: return {139, 69, 19};
    case OutcomeCode::ToGB: return {230, 200, 0};
    case OutcomeCode::ToBG: return {40, 90, 200};
    case OutcomeCode::NonConvergent: break;
  }
  return {128, 128, 128};
}

std::string render_basin_ppm(const BasinRaster& raster) {
  const int res = raster.resolution;
  if (res <= 0 || raster.cells.size() != static_cast<std::size_t>(res) * res) {
    throw ValidationError("malformed basin raster");
  }
  std::string out = "P6\n" + std::to_string(res) + " " + std::to_string(res) + "\n255\n";
  const std::size_t header = out.size();
  out.resize(header + 3 * raster.cells.size());
  char* px = out.data() + header;
  for (int row = 0; row < res; ++row) {
    const int j = res - 1 - row;
    for (int i = 0; i < res; ++i) {
      const Rgb c = basin_color(raster.at(i, j));
      *px++ = static_cast<char>(c.r);
      *px++ = static_cast<char>(c.g);
      *px++ = static_cast<char>(c.b);
    }
  }
  return out;
}

void write_basin_ppm(const BasinRaster& raster, const std::string& path) {
  write_file(path, render_basin_ppm(raster));
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace replab

// Grid file emitters and readers (gnuplot scanline convention).
#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hartree/field_vector.hpp"
#include "hartree/lattice.hpp"

namespace hartree {

class IoError : public std::runtime_error {
 public:
  IoError(const std::string& msg, std::string file_path)
      : std::runtime_error(msg + ": " + file_path), path(std::move(file_path)) {}

  std::string path;
};

namespace detail {

class OutputFile {
 public:
  explicit OutputFile(const std::string& path)
      : path_(path), file_(std::fopen(path.c_str(), "wb")) {
    if (file_ == nullptr) throw IoError("cannot open output file", path);
  }
  OutputFile(const OutputFile&) = delete;
  OutputFile& operator=(const OutputFile&) = delete;
  ~OutputFile() {
    if (file_ != nullptr) std::fclose(file_);
  }

  std::FILE* get() { return file_; }

  void close() {
    const bool bad = std::ferror(file_) != 0;
    const bool closed_ok = std::fclose(file_) == 0;
    file_ = nullptr;
    if (bad || !closed_ok) throw IoError("write failed", path_);
  }

 private:
  std::string path_;
  std::FILE* file_;
};

}  // namespace detail

// Writes "x y |z|^2" rows, one block of constant x per scanline, blocks
// separated by a single blank line. 17 significant digits round-trip
// doubles exactly; output is byte-deterministic for identical input.
inline void write_density(const FieldVector& z, const std::string& path) {
  const LatticeSpec& lat = z.lattice();
  const int n = lat.interior_per_side;
  detail::OutputFile out(path);
  for (int ix = 0; ix < n; ++ix) {
    if (ix > 0) std::fputc('\n', out.get());
    const double x = (ix + 1) * lat.spacing;
    for (int iy = 0; iy < n; ++iy) {
      const double y = (iy + 1) * lat.spacing;
      const double v = z[ix + iy * n];
      std::fprintf(out.get(), "%.17g %.17g %.17g\n", x, y, v * v);
    }
  }
  out.close();
}

// Coefficient pair snapshot "x y z1 z2", same scanline layout; used for
// warm starts across runs.
inline void write_state(const FieldVector& z1, const FieldVector& z2,
                        const std::string& path) {
  check_same_lattice(z1, z2, "write state");
  const LatticeSpec& lat = z1.lattice();
  const int n = lat.interior_per_side;
  detail::OutputFile out(path);
  for (int ix = 0; ix < n; ++ix) {
    if (ix > 0) std::fputc('\n', out.get());
    const double x = (ix + 1) * lat.spacing;
    for (int iy = 0; iy < n; ++iy) {
      const double y = (iy + 1) * lat.spacing;
      const int j = ix + iy * n;
      std::fprintf(out.get(), "%.17g %.17g %.17g %.17g\n", x, y, z1[j], z2[j]);
    }
  }
  out.close();
}

inline std::pair<FieldVector, FieldVector> read_state(const LatticeSpec& lat,
                                                      const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open state file", path);
  FieldVector z1(lat), z2(lat);
  const int n = lat.interior_per_side;
  int rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    double x = 0.0, y = 0.0, a = 0.0, b = 0.0;
    if (!(ls >> x >> y >> a >> b))
      throw IoError("malformed state row '" + line + "'", path);
    if (rows >= lat.interior_count)
      throw IoError("state file has more rows than lattice nodes", path);
    const int ix = rows / n;
    const int iy = rows % n;
    const int j = ix + iy * n;
    z1[j] = a;
    z2[j] = b;
    ++rows;
  }
  if (rows != lat.interior_count)
    throw IoError("state file row count " + std::to_string(rows) +
                      " does not match lattice with " +
                      std::to_string(lat.interior_count) + " nodes",
                  path);
  return {std::move(z1), std::move(z2)};
}

}  // namespace hartree

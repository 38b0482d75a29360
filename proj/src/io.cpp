// Copyright 2026 The mts Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mts/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace mts::io {

namespace {

using Complex = std::complex<double>;
namespace fs = std::filesystem;

constexpr char kMagic[8] = {'M', 'T', 'S', 'F', 'L', 'D', '0', '1'};

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::ofstream open_out(const std::string& path, bool binary = false) {
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

std::ifstream open_in(const std::string& path, bool binary = false) {
  std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  return in;
}

void write_csv(const std::string& path, const Grid2D& grid,
               const std::function<Complex(Index, Index)>& value) {
  std::ofstream out = open_out(path);
  out << "u,v,re,im\n";
  for (Index j = 0; j < grid.n_v(); ++j) {
    for (Index i = 0; i < grid.n_u(); ++i) {
      const Complex z = value(i, j);
      out << fmt17(grid.u(i)) << ',' << fmt17(grid.v(j)) << ',' << fmt17(z.real())
          << ',' << fmt17(z.imag()) << '\n';
    }
  }
}

// strtod keeps subnormals (std::stod throws on them).
double parse_double(const std::string& cell, const std::string& path) {
  const char* begin = cell.c_str();
  char* end = nullptr;
  const double x = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw std::runtime_error("'" + path + "': not a number: '" + cell + "'");
  }
  return x;
}

// Uniform axis from the sorted distinct coordinates.
void infer_axis(std::vector<double> values, double& lo, double& hi, Index& n) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.size() < 3) throw std::runtime_error("field CSV needs >= 3 nodes per axis");
  lo = values.front();
  hi = values.back();
  n = static_cast<Index>(values.size());
}

// Little-endian encoding regardless of host order.
template <class T>
using Bits = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;

template <class T>
void put(std::ostream& out, T x) {
  static_assert(sizeof(T) == 4 || sizeof(T) == 8);
  unsigned char b[sizeof(T)];
  Bits<T> bits;
  std::memcpy(&bits, &x, sizeof(T));
  for (std::size_t k = 0; k < sizeof(T); ++k) b[k] = static_cast<unsigned char>(bits >> (8 * k));
  out.write(reinterpret_cast<const char*>(b), sizeof(T));
}

template <class T>
T get(std::istream& in) {
  unsigned char b[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(b), sizeof(T))) {
    throw std::runtime_error("binary field truncated");
  }
  Bits<T> bits = 0;
  for (std::size_t k = 0; k < sizeof(T); ++k) bits |= Bits<T>(b[k]) << (8 * k);
  T x;
  std::memcpy(&x, &bits, sizeof(T));
  return x;
}

void write_binary(const std::string& path, const Grid2D& grid, bool complex,
                  const std::function<Complex(Index, Index)>& value) {
  std::ofstream out = open_out(path, true);
  out.write(kMagic, sizeof(kMagic));
  put<std::uint32_t>(out, complex ? 2u : 1u);
  put<std::uint32_t>(out, 0u);
  put<std::int64_t>(out, grid.n_u());
  put<std::int64_t>(out, grid.n_v());
  put<double>(out, grid.u_min());
  put<double>(out, grid.u_max());
  put<double>(out, grid.v_min());
  put<double>(out, grid.v_max());
  for (Index j = 0; j < grid.n_v(); ++j) {
    for (Index i = 0; i < grid.n_u(); ++i) {
      const Complex z = value(i, j);
      put<double>(out, z.real());
      if (complex) put<double>(out, z.imag());
    }
  }
}

ComplexField read_binary(const std::string& path, bool require_real) {
  std::ifstream in = open_in(path, true);
  char magic[8];
  if (!in.read(magic, 8) || std::memcmp(magic, kMagic, 8) != 0) {
    throw std::runtime_error("'" + path + "' is not a binary field");
  }
  const auto kind = get<std::uint32_t>(in);
  (void)get<std::uint32_t>(in);
  if (kind != 1 && kind != 2) throw std::runtime_error("unknown scalar kind");
  if (require_real && kind != 1) {
    throw std::runtime_error("'" + path + "' holds a complex field");
  }
  const auto nu = get<std::int64_t>(in);
  const auto nv = get<std::int64_t>(in);
  const double u0 = get<double>(in), u1 = get<double>(in);
  const double v0 = get<double>(in), v1 = get<double>(in);
  const Grid2D grid(u0, u1, v0, v1, nu, nv);
  ComplexField::Array values(nu, nv);
  for (Index j = 0; j < nv; ++j) {
    for (Index i = 0; i < nu; ++i) {
      const double re = get<double>(in);
      const double im = kind == 2 ? get<double>(in) : 0.0;
      values(i, j) = Complex(re, im);
    }
  }
  return ComplexField(grid, std::move(values));
}

RealField real_part(const ComplexField& f, const std::string& path) {
  if ((f.values().imag() != 0.0).any()) {
    throw std::runtime_error("'" + path + "' holds a complex field");
  }
  return RealField(f.grid(), f.values().real());
}

void write_any(const std::string& path, FieldFormat format, const RealField& f) {
  format == FieldFormat::kCsv ? write_field_csv(path, f) : write_field_binary(path, f);
}
void write_any(const std::string& path, FieldFormat format, const ComplexField& f) {
  format == FieldFormat::kCsv ? write_field_csv(path, f) : write_field_binary(path, f);
}

}  // namespace

void write_field_csv(const std::string& path, const RealField& f) {
  write_csv(path, f.grid(), [&](Index i, Index j) { return Complex(f(i, j), 0.0); });
}

void write_field_csv(const std::string& path, const ComplexField& f) {
  write_csv(path, f.grid(), [&](Index i, Index j) { return f(i, j); });
}

ComplexField read_complex_field_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("u,v,re,im", 0) != 0) {
    throw std::runtime_error("'" + path + "' lacks the u,v,re,im header");
  }
  std::vector<std::array<double, 4>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::array<double, 4> r{};
    std::stringstream ss(line);
    std::string cell;
    for (int k = 0; k < 4; ++k) {
      if (!std::getline(ss, cell, ',')) {
        throw std::runtime_error("short row in '" + path + "'");
      }
      r[k] = parse_double(cell, path);
    }
    rows.push_back(r);
  }
  std::vector<double> us, vs;
  for (const auto& r : rows) {
    us.push_back(r[0]);
    vs.push_back(r[1]);
  }
  double u0, u1, v0, v1;
  Index nu, nv;
  infer_axis(us, u0, u1, nu);
  infer_axis(vs, v0, v1, nv);
  if (static_cast<Index>(rows.size()) != nu * nv) {
    throw std::runtime_error("'" + path + "' is not a full rectangular grid");
  }
  const Grid2D grid(u0, u1, v0, v1, nu, nv);
  ComplexField::Array values(nu, nv);
  for (Index k = 0; k < nu * nv; ++k) {
    values(k % nu, k / nu) = Complex(rows[k][2], rows[k][3]);
  }
  return ComplexField(grid, std::move(values));
}

RealField read_real_field_csv(const std::string& path) {
  return real_part(read_complex_field_csv(path), path);
}

void write_field_binary(const std::string& path, const RealField& f) {
  write_binary(path, f.grid(), false,
               [&](Index i, Index j) { return Complex(f(i, j), 0.0); });
}

void write_field_binary(const std::string& path, const ComplexField& f) {
  write_binary(path, f.grid(), true, [&](Index i, Index j) { return f(i, j); });
}

ComplexField read_complex_field_binary(const std::string& path) {
  return read_binary(path, false);
}

RealField read_real_field_binary(const std::string& path) {
  return real_part(read_binary(path, true), path);
}

void write_obj(const std::string& path, const std::string& x4_path,
               const SurfacePatch& patch) {
  const Grid2D& g = patch.grid;
  std::ofstream out = open_out(path);
  std::ofstream x4 = open_out(x4_path);
  out << "# grid " << g.spec() << "\n";
  x4 << "vertex,x4\n";
  for (Index j = 0; j < g.n_v(); ++j) {
    for (Index i = 0; i < g.n_u(); ++i) {
      out << "v " << fmt17(patch.X[0](i, j)) << ' ' << fmt17(patch.X[1](i, j)) << ' '
          << fmt17(patch.X[2](i, j)) << '\n';
      x4 << (i + g.n_u() * j + 1) << ',' << fmt17(patch.X[3](i, j)) << '\n';
    }
  }
  for (Index j = 0; j + 1 < g.n_v(); ++j) {
    for (Index i = 0; i + 1 < g.n_u(); ++i) {
      const Index a = i + g.n_u() * j + 1;
      const Index b = a + 1;
      const Index c = b + g.n_u();
      const Index d = a + g.n_u();
      out << "f " << a << ' ' << b << ' ' << c << '\n';
      out << "f " << a << ' ' << c << ' ' << d << '\n';
    }
  }
}

void write_ply(const std::string& path, const SurfacePatch& patch) {
  const Grid2D& g = patch.grid;
  std::ofstream out = open_out(path);
  out << "ply\nformat ascii 1.0\n";
  out << "comment grid " << g.spec() << "\n";
  out << "element vertex " << g.size() << "\n";
  for (const char* p : {"x1", "x2", "x3", "x4"}) out << "property double " << p << "\n";
  out << "element face " << 2 * (g.n_u() - 1) * (g.n_v() - 1) << "\n";
  out << "property list uchar int vertex_indices\nend_header\n";
  for (Index j = 0; j < g.n_v(); ++j) {
    for (Index i = 0; i < g.n_u(); ++i) {
      out << fmt17(patch.X[0](i, j)) << ' ' << fmt17(patch.X[1](i, j)) << ' '
          << fmt17(patch.X[2](i, j)) << ' ' << fmt17(patch.X[3](i, j)) << '\n';
    }
  }
  for (Index j = 0; j + 1 < g.n_v(); ++j) {
    for (Index i = 0; i + 1 < g.n_u(); ++i) {
      const Index a = i + g.n_u() * j;
      const Index b = a + 1;
      const Index c = b + g.n_u();
      const Index d = a + g.n_u();
      out << "3 " << a << ' ' << b << ' ' << c << '\n';
      out << "3 " << a << ' ' << c << ' ' << d << '\n';
    }
  }
}

RealField4 read_ply(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string line;
  std::string grid_spec;
  Index vertices = -1;
  while (std::getline(in, line)) {
    if (line.rfind("comment grid ", 0) == 0) grid_spec = line.substr(13);
    if (line.rfind("element vertex ", 0) == 0) vertices = std::stol(line.substr(15));
    if (line == "end_header") break;
  }
  if (grid_spec.empty()) throw std::runtime_error("'" + path + "' has no grid comment");
  const Grid2D grid = Grid2D::parse(grid_spec);
  if (vertices != grid.size()) throw std::runtime_error("vertex count does not match grid");
  std::array<Eigen::ArrayXXd, 4> x;
  for (auto& a : x) a.resize(grid.n_u(), grid.n_v());
  for (Index k = 0; k < grid.size(); ++k) {
    for (int c = 0; c < 4; ++c) {
      if (!(in >> x[c](k % grid.n_u(), k / grid.n_u()))) {
        throw std::runtime_error("'" + path + "' truncated");
      }
    }
  }
  return {RealField(grid, x[0]), RealField(grid, x[1]), RealField(grid, x[2]),
          RealField(grid, x[3])};
}

std::vector<std::string> write_data(const std::string& path, const AnyData& data,
                                    FieldFormat format) {
  const fs::path base(path);
  const fs::path dir = base.parent_path();
  const std::string stem = base.stem().string();
  const std::string ext = format == FieldFormat::kCsv ? ".csv" : ".bin";
  std::vector<std::string> written;
  nlohmann::json j;
  nlohmann::json fields;
  auto emit = [&](const std::string& name, const auto& f) {
    const std::string file = stem + "_" + name + ext;
    write_any((dir / file).string(), format, f);
    fields[name] = file;
    written.push_back((dir / file).string());
  };
  const Provenance* prov = nullptr;
  const Grid2D* grid = nullptr;
  if (const auto* first = std::get_if<WeierstrassFirst>(&data)) {
    j["kind"] = "first";
    emit("g", first->g);
    emit("P", first->P);
    emit("Q", first->Q);
    prov = &first->provenance;
    grid = &first->grid();
  } else {
    const auto& second = std::get<WeierstrassSecond>(data);
    j["kind"] = "second";
    emit("h", second.h);
    emit("M", second.M);
    emit("N", second.N);
    prov = &second.provenance;
    grid = &second.grid();
  }
  j["grid"] = grid->spec();
  j["format"] = format == FieldFormat::kCsv ? "csv" : "binary";
  j["fields"] = fields;
  j["provenance"] = to_json(*prov);
  write_text(path, dump(j));
  written.push_back(path);
  return written;
}

AnyData read_data(const std::string& path) {
  std::ifstream in = open_in(path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("'" + path + "': " + e.what());
  }
  const fs::path dir = fs::path(path).parent_path();
  const bool binary = j.value("format", "csv") == "binary";
  auto load_c = [&](const std::string& name) {
    const std::string file = (dir / j.at("fields").at(name).get<std::string>()).string();
    return binary ? read_complex_field_binary(file) : read_complex_field_csv(file);
  };
  auto load_r = [&](const std::string& name) {
    const std::string file = (dir / j.at("fields").at(name).get<std::string>()).string();
    return binary ? read_real_field_binary(file) : read_real_field_csv(file);
  };
  Provenance prov;
  if (j.contains("provenance")) {
    const auto& p = j["provenance"];
    prov.source = p.value("source", "");
    prov.family = p.value("family", "");
    prov.parameter = p.value("parameter", 0.0);
  }
  if (prov.source.empty()) prov.source = path;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "first") return WeierstrassFirst{load_c("g"), load_r("P"), load_r("Q"), prov};
  if (kind == "second") return WeierstrassSecond{load_c("h"), load_r("M"), load_r("N"), prov};
  throw std::runtime_error("'" + path + "': kind must be first or second");
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json out = nlohmann::json::array();
  for (const Check& c : report.checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["value"] = std::isfinite(c.value) ? nlohmann::json(c.value) : nlohmann::json(nullptr);
    e["threshold"] = c.threshold;
    e["bound"] = c.bound == Check::Bound::kUpper ? "upper" : "lower";
    e["passed"] = c.passed;
    e["at"] = {c.u, c.v};
    out.push_back(e);
  }
  return out;
}

nlohmann::json to_json(const Provenance& p) {
  return {{"source", p.source}, {"family", p.family}, {"parameter", p.parameter}};
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out = open_out(path);
  out << text;
}

}  // namespace mts::io

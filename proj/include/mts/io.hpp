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

// File formats: field CSV and binary, OBJ/PLY meshes, JSON descriptors.
//
// Binary field layout (all little-endian):
//   bytes 0-7   magic "MTSFLD01"
//   uint32      scalar kind (1 real, 2 complex)
//   uint32      reserved, 0
//   int64       n_u, n_v
//   double      u_min, u_max, v_min, v_max
//   double      values, i fastest; complex values as (re, im) pairs

#ifndef MTS_IO_HPP_
#define MTS_IO_HPP_

#include <string>
#include <variant>

#include "json.hpp"

#include "mts/field.hpp"
#include "mts/report.hpp"
#include "mts/representation.hpp"
#include "mts/weierstrass.hpp"

namespace mts::io {

/// Header "u,v,re,im", one row per node with i fastest, 17 significant
/// digits. Real fields write im = 0.
void write_field_csv(const std::string& path, const RealField& f);
void write_field_csv(const std::string& path, const ComplexField& f);
/// The grid is inferred from the u and v columns. Real readers reject
/// payloads with imaginary parts.
ComplexField read_complex_field_csv(const std::string& path);
RealField read_real_field_csv(const std::string& path);

void write_field_binary(const std::string& path, const RealField& f);
void write_field_binary(const std::string& path, const ComplexField& f);
ComplexField read_complex_field_binary(const std::string& path);
RealField read_real_field_binary(const std::string& path);

/// Vertices (x1, x2, x3), quads split into triangles; x4 goes to
/// `x4_path` as "vertex,x4" (1-based vertex index).
void write_obj(const std::string& path, const std::string& x4_path,
               const SurfacePatch& patch);
/// ASCII PLY with double properties x1..x4 and the grid spec in a comment.
void write_ply(const std::string& path, const SurfacePatch& patch);
/// Reads write_ply output back as sampled coordinate fields.
RealField4 read_ply(const std::string& path);

enum class FieldFormat { kCsv, kBinary };

using AnyData = std::variant<WeierstrassFirst, WeierstrassSecond>;

/// Writes the three field payloads next to `path` and a descriptor
/// {"kind", "grid", "format", "fields", "provenance"} at `path`. Returns
/// the list of files written.
std::vector<std::string> write_data(const std::string& path, const AnyData& data,
                                    FieldFormat format);
/// Reads a descriptor; payload paths are relative to the descriptor.
/// Fields come back sampled-only.
AnyData read_data(const std::string& path);

nlohmann::json to_json(const Report& report);
nlohmann::json to_json(const Provenance& p);

/// Deterministic text for a json document (2-space indent, newline).
std::string dump(const nlohmann::json& j);
void write_text(const std::string& path, const std::string& text);

}  // namespace mts::io

#endif  // MTS_IO_HPP_

// Copyright 2026 The RAHT-RLGR Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#include "raht/cloud_io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>

#include "raht/error.hpp"
#include "raht/morton.hpp"

namespace raht {
namespace {

using Matrix3 = std::array<std::array<double, 3>, 3>;

constexpr Matrix3 kRgbToYuv = {{
    {0.299, 0.587, 0.114},
    {-0.168736, -0.331264, 0.5},
    {0.5, -0.418688, -0.081312},
}};

constexpr Matrix3 invert(const Matrix3& m) {
  const double c00 = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  const double c01 = m[1][2] * m[2][0] - m[1][0] * m[2][2];
  const double c02 = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  const double det = m[0][0] * c00 + m[0][1] * c01 + m[0][2] * c02;
  Matrix3 r{};
  r[0][0] = c00 / det;
  r[1][0] = c01 / det;
  r[2][0] = c02 / det;
  r[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det;
  r[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det;
  r[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det;
  r[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det;
  r[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det;
  r[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det;
  return r;
}

constexpr Matrix3 kYuvToRgb = invert(kRgbToYuv);

double clamp255(double v) { return std::clamp(v, 0.0, 255.0); }

// ---------------------------------------------------------------------------
// PLY header model

enum class ScalarType { kInt8, kUint8, kInt16, kUint16, kInt32, kUint32, kFloat32, kFloat64 };

std::optional<ScalarType> parse_scalar_type(std::string_view name) {
  if (name == "char" || name == "int8") return ScalarType::kInt8;
  if (name == "uchar" || name == "uint8") return ScalarType::kUint8;
  if (name == "short" || name == "int16") return ScalarType::kInt16;
  if (name == "ushort" || name == "uint16") return ScalarType::kUint16;
  if (name == "int" || name == "int32") return ScalarType::kInt32;
  if (name == "uint" || name == "uint32") return ScalarType::kUint32;
  if (name == "float" || name == "float32") return ScalarType::kFloat32;
  if (name == "double" || name == "float64") return ScalarType::kFloat64;
  return std::nullopt;
}

std::size_t scalar_size(ScalarType t) {
  switch (t) {
    case ScalarType::kInt8:
    case ScalarType::kUint8: return 1;
    case ScalarType::kInt16:
    case ScalarType::kUint16: return 2;
    case ScalarType::kInt32:
    case ScalarType::kUint32:
    case ScalarType::kFloat32: return 4;
    case ScalarType::kFloat64: return 8;
  }
  return 0;
}

struct PlyProperty {
  std::string name;
  ScalarType type;
  bool is_list = false;
};

struct PlyElement {
  std::string name;
  std::size_t count = 0;
  std::vector<PlyProperty> properties;
};

struct PlyHeader {
  bool ascii = false;
  std::vector<PlyElement> elements;
  std::size_t body_offset = 0;
};

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void header_error(const std::string& msg) {
  throw Error(ErrorKind::kMalformedHeader, "PLY header: " + msg);
}

PlyHeader parse_header(std::span<const std::uint8_t> bytes) {
  const std::string_view text(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  PlyHeader header;
  std::size_t pos = 0;
  bool first = true;
  bool have_format = false;
  while (true) {
    const std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) header_error("missing end_header");
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (first) {
      if (line != "ply") header_error("missing 'ply' magic");
      first = false;
      continue;
    }
    const auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok[0] == "end_header") break;
    if (tok[0] == "comment" || tok[0] == "obj_info") continue;
    if (tok[0] == "format") {
      if (tok.size() < 3) header_error("bad format line");
      if (tok[1] == "ascii") {
        header.ascii = true;
      } else if (tok[1] == "binary_little_endian") {
        header.ascii = false;
      } else if (tok[1] == "binary_big_endian") {
        throw Error(ErrorKind::kUnsupportedFormat, "PLY: big-endian bodies are not supported");
      } else {
        header_error("unknown format '" + std::string(tok[1]) + "'");
      }
      if (tok[2] != "1.0") header_error("unsupported version " + std::string(tok[2]));
      have_format = true;
    } else if (tok[0] == "element") {
      if (tok.size() != 3) header_error("bad element line");
      PlyElement el;
      el.name = std::string(tok[1]);
      auto [p, ec] = std::from_chars(tok[2].data(), tok[2].data() + tok[2].size(), el.count);
      if (ec != std::errc() || p != tok[2].data() + tok[2].size()) {
        header_error("bad element count '" + std::string(tok[2]) + "'");
      }
      header.elements.push_back(std::move(el));
    } else if (tok[0] == "property") {
      if (header.elements.empty()) header_error("property before element");
      PlyProperty prop;
      if (tok.size() == 5 && tok[1] == "list") {
        auto count_type = parse_scalar_type(tok[2]);
        auto item_type = parse_scalar_type(tok[3]);
        if (!count_type || !item_type) header_error("bad list property types");
        prop.is_list = true;
        prop.type = *item_type;
        prop.name = std::string(tok[4]);
      } else if (tok.size() == 3) {
        auto type = parse_scalar_type(tok[1]);
        if (!type) header_error("unknown property type '" + std::string(tok[1]) + "'");
        prop.type = *type;
        prop.name = std::string(tok[2]);
      } else {
        header_error("bad property line");
      }
      header.elements.back().properties.push_back(std::move(prop));
    } else {
      header_error("unexpected keyword '" + std::string(tok[0]) + "'");
    }
  }
  if (!have_format) header_error("missing format line");
  header.body_offset = pos;
  return header;
}

double read_binary_scalar(const std::uint8_t* p, ScalarType t) {
  std::uint64_t raw = 0;
  const std::size_t n = scalar_size(t);
  for (std::size_t i = 0; i < n; ++i) raw |= std::uint64_t{p[i]} << (8 * i);
  switch (t) {
    case ScalarType::kInt8: return static_cast<std::int8_t>(raw);
    case ScalarType::kUint8: return static_cast<std::uint8_t>(raw);
    case ScalarType::kInt16: return static_cast<std::int16_t>(raw);
    case ScalarType::kUint16: return static_cast<std::uint16_t>(raw);
    case ScalarType::kInt32: return static_cast<std::int32_t>(raw);
    case ScalarType::kUint32: return static_cast<std::uint32_t>(raw);
    case ScalarType::kFloat32: return std::bit_cast<float>(static_cast<std::uint32_t>(raw));
    case ScalarType::kFloat64: return std::bit_cast<double>(raw);
  }
  return 0.0;
}

struct VertexLayout {
  std::size_t vertex_element = 0;
  std::array<std::size_t, 6> index{};  // x y z red green blue
};

VertexLayout locate_vertex(const PlyHeader& header) {
  VertexLayout layout;
  bool found = false;
  for (std::size_t e = 0; e < header.elements.size(); ++e) {
    if (header.elements[e].name == "vertex") {
      layout.vertex_element = e;
      found = true;
      break;
    }
  }
  if (!found) header_error("no vertex element");
  const PlyElement& el = header.elements[layout.vertex_element];
  static constexpr std::array<std::string_view, 6> kNames = {"x", "y", "z", "red", "green", "blue"};
  for (std::size_t k = 0; k < kNames.size(); ++k) {
    bool have = false;
    for (std::size_t i = 0; i < el.properties.size(); ++i) {
      if (el.properties[i].name == kNames[k]) {
        layout.index[k] = i;
        have = true;
        break;
      }
    }
    if (!have) {
      if (k < 3) header_error("vertex lacks property '" + std::string(kNames[k]) + "'");
      throw Error(ErrorKind::kUnsupportedFormat,
                  "PLY: vertex lacks color property '" + std::string(kNames[k]) + "'");
    }
    const PlyProperty& prop = el.properties[layout.index[k]];
    if (prop.is_list) header_error("property '" + prop.name + "' must be scalar");
    if (k >= 3 && prop.type != ScalarType::kUint8) {
      throw Error(ErrorKind::kUnsupportedFormat, "PLY: color property '" + prop.name +
                                                     "' must be uchar");
    }
  }
  for (const PlyProperty& prop : el.properties) {
    if (prop.is_list) {
      throw Error(ErrorKind::kUnsupportedFormat, "PLY: list properties on vertices unsupported");
    }
  }
  return layout;
}

std::uint8_t color_from(double v) {
  if (!(v >= 0.0 && v <= 255.0) || v != std::floor(v)) {
    throw Error(ErrorKind::kMalformedBody, "PLY: color value out of uint8 range");
  }
  return static_cast<std::uint8_t>(v);
}

RawPoint make_point(const std::vector<double>& values, const VertexLayout& layout) {
  RawPoint p;
  p.x = values[layout.index[0]];
  p.y = values[layout.index[1]];
  p.z = values[layout.index[2]];
  p.color.r = color_from(values[layout.index[3]]);
  p.color.g = color_from(values[layout.index[4]]);
  p.color.b = color_from(values[layout.index[5]]);
  if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
    throw Error(ErrorKind::kMalformedBody, "PLY: non-finite coordinate");
  }
  return p;
}

[[noreturn]] void truncated(std::size_t got, std::size_t want) {
  throw Error(ErrorKind::kTruncatedBody, "PLY: body holds " + std::to_string(got) +
                                             " vertices, header declares " + std::to_string(want));
}

RawPointCloud parse_ascii_body(std::string_view body, const PlyHeader& header,
                               const VertexLayout& layout) {
  std::size_t pos = 0;
  auto next_token = [&]() -> std::optional<std::string_view> {
    while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
    if (pos >= body.size()) return std::nullopt;
    std::size_t end = pos;
    while (end < body.size() && !std::isspace(static_cast<unsigned char>(body[end]))) ++end;
    std::string_view tok = body.substr(pos, end - pos);
    pos = end;
    return tok;
  };
  auto parse_number = [](std::string_view tok) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
      throw Error(ErrorKind::kMalformedBody, "PLY: bad number '" + std::string(tok) + "'");
    }
    return v;
  };

  // Elements preceding the vertices are skipped line by line.
  for (std::size_t e = 0; e < layout.vertex_element; ++e) {
    for (std::size_t i = 0; i < header.elements[e].count; ++i) {
      const std::size_t eol = body.find('\n', pos);
      if (eol == std::string_view::npos) truncated(0, header.elements[layout.vertex_element].count);
      pos = eol + 1;
    }
  }

  const PlyElement& el = header.elements[layout.vertex_element];
  RawPointCloud cloud;
  cloud.points.reserve(el.count);
  std::vector<double> values(el.properties.size());
  for (std::size_t v = 0; v < el.count; ++v) {
    for (std::size_t k = 0; k < values.size(); ++k) {
      auto tok = next_token();
      if (!tok) truncated(v, el.count);
      values[k] = parse_number(*tok);
      if (el.properties[k].type == ScalarType::kFloat32) {
        values[k] = static_cast<float>(values[k]);
      }
    }
    cloud.points.push_back(make_point(values, layout));
  }
  return cloud;
}

RawPointCloud parse_binary_body(std::span<const std::uint8_t> body, const PlyHeader& header,
                                const VertexLayout& layout) {
  std::size_t pos = 0;
  for (std::size_t e = 0; e < layout.vertex_element; ++e) {
    std::size_t stride = 0;
    for (const PlyProperty& prop : header.elements[e].properties) {
      if (prop.is_list) {
        throw Error(ErrorKind::kUnsupportedFormat,
                    "PLY: list properties ahead of the vertex element");
      }
      stride += scalar_size(prop.type);
    }
    pos += stride * header.elements[e].count;
  }
  const PlyElement& el = header.elements[layout.vertex_element];
  std::vector<std::size_t> offsets;
  std::size_t stride = 0;
  for (const PlyProperty& prop : el.properties) {
    offsets.push_back(stride);
    stride += scalar_size(prop.type);
  }
  RawPointCloud cloud;
  const std::size_t available = pos <= body.size() ? (body.size() - pos) / stride : 0;
  if (available < el.count) truncated(available, el.count);
  cloud.points.reserve(el.count);
  std::vector<double> values(el.properties.size());
  for (std::size_t v = 0; v < el.count; ++v) {
    const std::uint8_t* row = body.data() + pos + v * stride;
    for (std::size_t k = 0; k < values.size(); ++k) {
      values[k] = read_binary_scalar(row + offsets[k], el.properties[k].type);
    }
    cloud.points.push_back(make_point(values, layout));
  }
  return cloud;
}

// ---------------------------------------------------------------------------
// PLY writer

struct WriterRow {
  float x, y, z;
  Rgb8 color;
};

void append(std::vector<std::uint8_t>& out, std::string_view s) {
  out.insert(out.end(), s.begin(), s.end());
}

void append_float_text(std::vector<std::uint8_t>& out, float v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.insert(out.end(), buf, p);
}

std::vector<std::uint8_t> emit_ply(const std::vector<WriterRow>& rows, PlyFormat format) {
  std::vector<std::uint8_t> out;
  append(out, "ply\n");
  append(out, format == PlyFormat::kAscii ? "format ascii 1.0\n"
                                          : "format binary_little_endian 1.0\n");
  append(out, "element vertex " + std::to_string(rows.size()) + "\n");
  append(out,
         "property float x\nproperty float y\nproperty float z\n"
         "property uchar red\nproperty uchar green\nproperty uchar blue\n"
         "end_header\n");
  if (format == PlyFormat::kAscii) {
    for (const WriterRow& r : rows) {
      append_float_text(out, r.x);
      out.push_back(' ');
      append_float_text(out, r.y);
      out.push_back(' ');
      append_float_text(out, r.z);
      append(out, " " + std::to_string(r.color.r) + " " + std::to_string(r.color.g) + " " +
                      std::to_string(r.color.b) + "\n");
    }
  } else {
    out.reserve(out.size() + rows.size() * 15);
    for (const WriterRow& r : rows) {
      for (float f : {r.x, r.y, r.z}) {
        const auto bits = std::bit_cast<std::uint32_t>(f);
        for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
      }
      out.push_back(r.color.r);
      out.push_back(r.color.g);
      out.push_back(r.color.b);
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// VoxelCloud

VoxelCloud::VoxelCloud(int depth, std::vector<Voxel> voxels)
    : depth_(depth), voxels_(std::move(voxels)) {
  if (depth_ < kMinDepth || depth_ > kMaxDepth) {
    throw Error(ErrorKind::kDepthOutOfRange,
                "depth " + std::to_string(depth_) + " outside [1, 21]");
  }
  if (voxels_.empty()) throw Error(ErrorKind::kEmptyCloud, "voxel cloud must be nonempty");
  for (std::size_t i = 0; i < voxels_.size(); ++i) {
    if (voxels_[i].morton >> (3 * depth_) != 0) {
      throw Error(ErrorKind::kInvalidCloud, "morton code exceeds grid");
    }
    if (i > 0 && voxels_[i].morton <= voxels_[i - 1].morton) {
      throw Error(ErrorKind::kInvalidCloud, "voxels not strictly ascending by morton code");
    }
  }
}

std::vector<std::uint64_t> VoxelCloud::mortons() const {
  std::vector<std::uint64_t> out;
  out.reserve(voxels_.size());
  for (const Voxel& v : voxels_) out.push_back(v.morton);
  return out;
}

std::vector<double> VoxelCloud::channel(int c) const {
  std::vector<double> out;
  out.reserve(voxels_.size());
  for (const Voxel& v : voxels_) out.push_back(v.yuv[static_cast<std::size_t>(c)]);
  return out;
}

VoxelCloud VoxelCloud::with_channels(const std::array<std::vector<double>, 3>& channels) const {
  for (const auto& ch : channels) {
    if (ch.size() != voxels_.size()) {
      throw Error(ErrorKind::kLengthMismatch, "channel length differs from voxel count");
    }
  }
  std::vector<Voxel> out = voxels_;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t c = 0; c < 3; ++c) out[i].yuv[c] = channels[c][i];
  }
  return VoxelCloud(depth_, std::move(out));
}

// ---------------------------------------------------------------------------
// Color

Yuv rgb_to_yuv(double r, double g, double b) {
  const std::array<double, 3> rgb = {clamp255(r), clamp255(g), clamp255(b)};
  Yuv out{};
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = kRgbToYuv[i][0] * rgb[0] + kRgbToYuv[i][1] * rgb[1] + kRgbToYuv[i][2] * rgb[2];
  }
  out[1] += 128.0;
  out[2] += 128.0;
  return out;
}

RgbReal yuv_to_rgb_unclamped(double y, double u, double v) {
  const std::array<double, 3> yuv = {y, u - 128.0, v - 128.0};
  RgbReal out{};
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = kYuvToRgb[i][0] * yuv[0] + kYuvToRgb[i][1] * yuv[1] + kYuvToRgb[i][2] * yuv[2];
  }
  return out;
}

RgbReal yuv_to_rgb(double y, double u, double v) {
  RgbReal out = yuv_to_rgb_unclamped(y, u, v);
  for (double& c : out) c = clamp255(c);
  return out;
}

std::uint8_t to_uint8(double value) {
  if (std::isnan(value)) return 0;
  return static_cast<std::uint8_t>(std::floor(clamp255(value) + 0.5));
}

// ---------------------------------------------------------------------------
// PLY

RawPointCloud parse_ply(std::span<const std::uint8_t> bytes) {
  const PlyHeader header = parse_header(bytes);
  const VertexLayout layout = locate_vertex(header);
  const auto body = bytes.subspan(header.body_offset);
  if (header.ascii) {
    return parse_ascii_body(
        std::string_view(reinterpret_cast<const char*>(body.data()), body.size()), header, layout);
  }
  return parse_binary_body(body, header, layout);
}

std::vector<std::uint8_t> write_ply(const VoxelCloud& cloud, PlyFormat format) {
  std::vector<WriterRow> rows;
  rows.reserve(cloud.size());
  for (const Voxel& v : cloud.voxels()) {
    const GridPoint p = morton_decode(v.morton, cloud.depth());
    const RgbReal rgb = yuv_to_rgb(v.yuv[0], v.yuv[1], v.yuv[2]);
    rows.push_back({static_cast<float>(p[0]), static_cast<float>(p[1]), static_cast<float>(p[2]),
                    Rgb8{to_uint8(rgb[0]), to_uint8(rgb[1]), to_uint8(rgb[2])}});
  }
  return emit_ply(rows, format);
}

std::vector<std::uint8_t> write_ply(const RawPointCloud& cloud, PlyFormat format) {
  std::vector<WriterRow> rows;
  rows.reserve(cloud.points.size());
  for (const RawPoint& p : cloud.points) {
    rows.push_back({static_cast<float>(p.x), static_cast<float>(p.y), static_cast<float>(p.z),
                    p.color});
  }
  return emit_ply(rows, format);
}

// ---------------------------------------------------------------------------
// Voxelization

VoxelCloud voxelize(const RawPointCloud& cloud, int depth, VoxelizeWarnings* warnings) {
  if (depth < kMinDepth || depth > kMaxDepth) {
    throw Error(ErrorKind::kDepthOutOfRange,
                "depth " + std::to_string(depth) + " outside [1, 21]");
  }
  if (cloud.points.empty()) throw Error(ErrorKind::kEmptyCloud, "cannot voxelize an empty cloud");

  std::array<double, 3> lo{}, hi{};
  for (std::size_t a = 0; a < 3; ++a) {
    lo[a] = hi[a] = (a == 0 ? cloud.points[0].x : a == 1 ? cloud.points[0].y : cloud.points[0].z);
  }
  for (const RawPoint& p : cloud.points) {
    const std::array<double, 3> c = {p.x, p.y, p.z};
    for (std::size_t a = 0; a < 3; ++a) {
      lo[a] = std::min(lo[a], c[a]);
      hi[a] = std::max(hi[a], c[a]);
    }
  }
  VoxelizeWarnings local;
  const double cells = std::ldexp(1.0, depth);
  const auto max_index = static_cast<std::uint32_t>((std::uint64_t{1} << depth) - 1);
  std::array<double, 3> scale{};
  for (std::size_t a = 0; a < 3; ++a) {
    local.degenerate_axis[a] = !(hi[a] > lo[a]);
    scale[a] = local.degenerate_axis[a] ? 0.0 : cells / (hi[a] - lo[a]);
  }
  if (warnings != nullptr) *warnings = local;

  struct Keyed {
    std::uint64_t morton;
    std::size_t point;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(cloud.points.size());
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    const RawPoint& p = cloud.points[i];
    const std::array<double, 3> c = {p.x, p.y, p.z};
    std::array<std::uint32_t, 3> g{};
    for (std::size_t a = 0; a < 3; ++a) {
      const double f = std::floor((c[a] - lo[a]) * scale[a]);
      g[a] = f <= 0.0 ? 0u : std::min(max_index, static_cast<std::uint32_t>(std::min(f, cells)));
    }
    keyed.push_back({morton_encode(g[0], g[1], g[2], depth), i});
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const Keyed& a, const Keyed& b) { return a.morton < b.morton; });

  std::vector<Voxel> voxels;
  for (std::size_t i = 0; i < keyed.size();) {
    std::size_t j = i;
    std::array<double, 3> sum{};
    while (j < keyed.size() && keyed[j].morton == keyed[i].morton) {
      const Rgb8& c = cloud.points[keyed[j].point].color;
      sum[0] += c.r;
      sum[1] += c.g;
      sum[2] += c.b;
      ++j;
    }
    const auto n = static_cast<double>(j - i);
    voxels.push_back({keyed[i].morton, rgb_to_yuv(sum[0] / n, sum[1] / n, sum[2] / n)});
    i = j;
  }
  return VoxelCloud(depth, std::move(voxels));
}

// ---------------------------------------------------------------------------
// Files

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path + "' for reading");
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorKind::kIo, "error reading '" + path + "'");
  return data;
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot open '" + path + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::kIo, "error writing '" + path + "'");
}

}  // namespace raht

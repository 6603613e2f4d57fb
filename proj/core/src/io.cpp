// Copyright 2026 The remeshx Authors.
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

#include "remeshx/io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string_view>

#include "remeshx/error.hpp"

namespace remeshx {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

bool parse_float(std::string_view tok, float& out) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, out);
  return ec == std::errc() && ptr == end;
}

bool parse_int(std::string_view tok, long long& out) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::ifstream open_in(const std::filesystem::path& path, std::ios::openmode mode) {
  std::ifstream in(path, mode);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode) {
  std::ofstream out(path, mode);
  if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for writing");
  return out;
}

}  // namespace

MeshFormat format_from_path(const std::filesystem::path& path) {
  const std::string ext = lower(path.extension().string());
  if (ext == ".obj") return MeshFormat::kObj;
  if (ext == ".rmx") return MeshFormat::kBin;
  throw Error(ErrorCode::kInvalidArgument,
              "cannot infer mesh format from '" + path.string() + "' (expected .obj or .rmx)");
}

std::optional<MeshFormat> parse_format(std::string_view name) {
  if (name == "obj") return MeshFormat::kObj;
  if (name == "bin" || name == "rmx") return MeshFormat::kBin;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// OBJ

MeshDocument parse_obj(std::istream& in, const ObjReadOptions& options) {
  if (options.dim && *options.dim != 2 && *options.dim != 3) {
    throw Error(ErrorCode::kInvalidArgument, "OBJ dimension must be 2 or 3");
  }

  std::vector<std::array<float, 3>> positions;
  bool any_z = false;
  std::vector<std::uint32_t> indices;
  std::vector<std::pair<long long, std::size_t>> forward_refs;  // (index, line)
  std::uint32_t arity = 0;
  std::size_t face_count = 0;
  std::vector<ElementGroup> groups;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    const std::string_view key = tokens.front();

    if (key == "v") {
      if (tokens.size() < 3 || tokens.size() > 5) {
        parse_error(line_no, "vertex needs 2 to 4 components");
      }
      std::array<float, 3> p{0.0f, 0.0f, 0.0f};
      for (std::size_t c = 0; c + 1 < tokens.size() && c < 3; ++c) {
        if (!parse_float(tokens[c + 1], p[c])) {
          parse_error(line_no, "bad coordinate '" + std::string(tokens[c + 1]) + "'");
        }
      }
      if (tokens.size() == 5) {
        float w = 0.0f;
        if (!parse_float(tokens[4], w)) parse_error(line_no, "bad vertex weight");
      }
      any_z = any_z || tokens.size() >= 4;
      positions.push_back(p);
    } else if (key == "f") {
      const auto k = static_cast<std::uint32_t>(tokens.size() - 1);
      if (k < 3 || k > 4) {
        parse_error(line_no, "faces must have 3 or 4 corners, got " + std::to_string(k));
      }
      if (arity == 0) arity = k;
      if (k != arity) {
        throw Error(ErrorCode::kArityMismatch,
                    "line " + std::to_string(line_no) + ": face with " + std::to_string(k) +
                        " corners in a mesh of arity " + std::to_string(arity));
      }
      for (std::size_t c = 1; c < tokens.size(); ++c) {
        const std::string_view corner = tokens[c].substr(0, tokens[c].find('/'));
        long long v = 0;
        if (!parse_int(corner, v) || v == 0) {
          parse_error(line_no, "bad face index '" + std::string(tokens[c]) + "'");
        }
        long long resolved = v > 0 ? v - 1 : static_cast<long long>(positions.size()) + v;
        if (resolved < 0) {
          throw Error(ErrorCode::kIndexOutOfRange,
                      "line " + std::to_string(line_no) + ": relative index " +
                          std::to_string(v) + " before the first vertex");
        }
        if (resolved >= static_cast<long long>(kMaxVertices)) {
          throw Error(ErrorCode::kIndexOutOfRange,
                      "line " + std::to_string(line_no) + ": index exceeds 32 bits");
        }
        if (static_cast<std::size_t>(resolved) >= positions.size()) {
          forward_refs.emplace_back(resolved, line_no);
        }
        indices.push_back(static_cast<std::uint32_t>(resolved));
      }
      ++face_count;
    } else if (key == "g" || key == "o" || key == "usemtl") {
      std::string name;
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        if (!name.empty()) name += ' ';
        name += tokens[t];
      }
      groups.push_back({std::string(key), name, face_count, 0});
    }
    // Remaining directives (vn, vt, s, mtllib, ...) carry no geometry.
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read error while parsing OBJ");

  for (const auto& [index, line] : forward_refs) {
    if (static_cast<std::size_t>(index) >= positions.size()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "line " + std::to_string(line) + ": face references vertex " +
                      std::to_string(index + 1) + " but only " +
                      std::to_string(positions.size()) + " vertices exist");
    }
  }
  // A group runs until the next group of the same kind, or to the end.
  for (std::size_t i = 0; i < groups.size(); ++i) {
    std::size_t end = face_count;
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      if (groups[j].kind == groups[i].kind) {
        end = groups[j].first;
        break;
      }
    }
    groups[i].count = end - groups[i].first;
  }

  const std::uint32_t dim = options.dim.value_or(any_z ? 3u : 2u);
  std::vector<float> coords;
  coords.reserve(positions.size() * dim);
  for (const auto& p : positions) coords.insert(coords.end(), p.begin(), p.begin() + dim);
  return {Mesh(VertexArray(dim, std::move(coords)), arity == 0 ? 3 : arity, std::move(indices)),
          std::move(groups)};
}

MeshDocument read_obj(const std::filesystem::path& path, const ObjReadOptions& options) {
  auto in = open_in(path, std::ios::in);
  try {
    return parse_obj(in, options);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void write_obj(const Mesh& mesh, std::ostream& out) {
  if (mesh.dim() != 2 && mesh.dim() != 3) {
    throw Error(ErrorCode::kDimensionMismatch, "OBJ output needs 2 or 3 dimensional vertices");
  }
  if (mesh.num_elements() > 0 && mesh.arity() != 3 && mesh.arity() != 4) {
    throw Error(ErrorCode::kArityMismatch, "OBJ output needs triangles or quads");
  }
  if (!is_valid(mesh)) throw Error(ErrorCode::kInvalidMesh, "refusing to write an invalid mesh");

  std::string buf;
  buf.reserve(64);
  char num[32];
  for (std::size_t v = 0; v < mesh.num_vertices(); ++v) {
    buf = "v";
    for (const float c : mesh.vertex(v)) {
      auto [ptr, ec] = std::to_chars(num, num + sizeof num, c);
      buf += ' ';
      buf.append(num, ptr);
    }
    buf += '\n';
    out << buf;
  }
  for (std::size_t e = 0; e < mesh.num_elements(); ++e) {
    buf = "f";
    for (const std::uint32_t i : mesh.element(e)) {
      auto [ptr, ec] = std::to_chars(num, num + sizeof num, std::uint64_t{i} + 1);
      buf += ' ';
      buf.append(num, ptr);
    }
    buf += '\n';
    out << buf;
  }
  if (!out) throw Error(ErrorCode::kIo, "write error while emitting OBJ");
}

void write_obj(const Mesh& mesh, const std::filesystem::path& path) {
  auto out = open_out(path, std::ios::out | std::ios::trunc);
  write_obj(mesh, out);
}

// ---------------------------------------------------------------------------
// Binary

namespace {

constexpr std::array<char, 4> kMagic = {'R', 'M', 'X', '1'};

template <typename T>
void put_le(std::vector<std::byte>& out, T value) {
  using U = std::make_unsigned_t<T>;
  auto u = static_cast<U>(value);
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    out.push_back(static_cast<std::byte>(u & 0xffu));
    u = static_cast<U>(u >> 8);
  }
}

template <typename T>
T get_le(const std::byte* p) {
  T value = 0;
  for (std::size_t i = sizeof(T); i-- > 0;) {
    value = static_cast<T>((value << 8) | static_cast<T>(std::to_integer<std::uint8_t>(p[i])));
  }
  return value;
}

}  // namespace

std::vector<std::byte> encode_bin(const Mesh& mesh) {
  if (!is_valid(mesh)) throw Error(ErrorCode::kInvalidMesh, "refusing to write an invalid mesh");
  std::vector<std::byte> out;
  out.reserve(kBinHeaderSize + mesh.vertices().coords().size() * 4 + mesh.indices().size() * 4);
  for (const char c : kMagic) out.push_back(static_cast<std::byte>(c));
  put_le<std::uint32_t>(out, mesh.dim());
  put_le<std::uint32_t>(out, mesh.arity());
  put_le<std::uint64_t>(out, mesh.num_vertices());
  put_le<std::uint64_t>(out, mesh.num_elements());
  for (const float c : mesh.vertices().coords()) put_le<std::uint32_t>(out, float_bits(c));
  for (const std::uint32_t i : mesh.indices()) put_le<std::uint32_t>(out, i);
  return out;
}

Mesh decode_bin(std::span<const std::byte> bytes) {
  if (bytes.size() < kBinHeaderSize) {
    if (bytes.size() >= 4 &&
        std::memcmp(bytes.data(), kMagic.data(), kMagic.size()) != 0) {
      throw Error(ErrorCode::kBadMagic, "not an .rmx file (bad magic)");
    }
    throw Error(ErrorCode::kTruncated,
                "truncated .rmx header: " + std::to_string(bytes.size()) + " bytes");
  }
  if (std::memcmp(bytes.data(), kMagic.data(), kMagic.size()) != 0) {
    throw Error(ErrorCode::kBadMagic, "not an .rmx file (bad magic)");
  }
  const std::byte* p = bytes.data() + 4;
  const auto dim = get_le<std::uint32_t>(p);
  const auto arity = get_le<std::uint32_t>(p + 4);
  const auto nv = get_le<std::uint64_t>(p + 8);
  const auto ne = get_le<std::uint64_t>(p + 16);
  if (dim == 0 || arity == 0) {
    throw Error(ErrorCode::kParse, ".rmx header has zero dimension or arity");
  }
  if (nv > kMaxVertices) {
    throw Error(ErrorCode::kIndexOverflow, ".rmx vertex count exceeds the 32-bit index range");
  }
  const std::size_t payload = bytes.size() - kBinHeaderSize;
  // Guard the products against overflow before comparing with the payload.
  const std::uint64_t limit = payload / 4;
  if (nv > limit / dim || ne > limit / arity) {
    throw Error(ErrorCode::kTruncated, "truncated .rmx payload");
  }
  const std::uint64_t n_coords = nv * dim;
  const std::uint64_t n_indices = ne * arity;
  const std::uint64_t want = (n_coords + n_indices) * 4;
  if (payload < want) throw Error(ErrorCode::kTruncated, "truncated .rmx payload");
  if (payload > want) {
    throw Error(ErrorCode::kParse,
                ".rmx file has " + std::to_string(payload - want) + " trailing bytes");
  }

  std::vector<float> coords(n_coords);
  std::vector<std::uint32_t> indices(n_indices);
  p = bytes.data() + kBinHeaderSize;
  if constexpr (std::endian::native == std::endian::little) {
    std::memcpy(coords.data(), p, n_coords * 4);
    std::memcpy(indices.data(), p + n_coords * 4, n_indices * 4);
  } else {
    for (std::size_t i = 0; i < coords.size(); ++i) {
      coords[i] = std::bit_cast<float>(get_le<std::uint32_t>(p + 4 * i));
    }
    p += n_coords * 4;
    for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = get_le<std::uint32_t>(p + 4 * i);
  }
  return Mesh(VertexArray(dim, std::move(coords)), arity, std::move(indices));
}

Mesh read_bin(const std::filesystem::path& path) {
  auto in = open_in(path, std::ios::in | std::ios::binary);
  std::vector<char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::kIo, "read error on '" + path.string() + "'");
  try {
    return decode_bin(std::as_bytes(std::span<const char>(raw)));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void write_bin(const Mesh& mesh, const std::filesystem::path& path) {
  const auto bytes = encode_bin(mesh);
  auto out = open_out(path, std::ios::out | std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIo, "write error on '" + path.string() + "'");
}

// ---------------------------------------------------------------------------

MeshDocument read_mesh(const std::filesystem::path& path, std::optional<MeshFormat> format,
                       const ObjReadOptions& options) {
  if (!std::filesystem::exists(path)) {
    throw Error(ErrorCode::kIo, "file not found: '" + path.string() + "'");
  }
  switch (format ? *format : format_from_path(path)) {
    case MeshFormat::kObj: return read_obj(path, options);
    case MeshFormat::kBin: return {read_bin(path), {}};
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown mesh format");
}

void write_mesh(const Mesh& mesh, const std::filesystem::path& path,
                std::optional<MeshFormat> format) {
  switch (format ? *format : format_from_path(path)) {
    case MeshFormat::kObj: write_obj(mesh, path); return;
    case MeshFormat::kBin: write_bin(mesh, path); return;
  }
}

}  // namespace remeshx

// Copyright 2026 The cesna Authors.
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

#include "cesna/io.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>

namespace cesna {
namespace {

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == '\t' || line[i] == ' ' ||
                               line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != '\t' && line[j] != ' ' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

template <typename Int>
Int ParseId(std::string_view field, std::int64_t line_no) {
  Int value{};
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || value < 0) {
    throw InputError("line " + std::to_string(line_no) +
                         ": expected a nonnegative integer, got '" +
                         std::string(field) + "'",
                     line_no);
  }
  return value;
}

double ParseReal(std::string_view field, std::int64_t line_no) {
  const std::string s(field);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) {
    throw InputError("line " + std::to_string(line_no) +
                         ": expected a number, got '" + s + "'",
                     line_no);
  }
  return value;
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

std::string FormatReal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

std::ifstream OpenForRead(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

}  // namespace

EdgeList ParseEdges(std::istream& in) {
  EdgeList out;
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line) || line[0] == '#') continue;
    auto fields = SplitFields(line);
    if (fields.size() != 2) {
      throw InputError("line " + std::to_string(line_no) +
                           ": expected 'u<TAB>v'",
                       line_no);
    }
    const auto u = ParseId<NodeId>(fields[0], line_no);
    const auto v = ParseId<NodeId>(fields[1], line_no);
    out.edges.emplace_back(u, v);
    out.max_id = std::max({out.max_id, u, v});
  }
  return out;
}

AttrList ParseAttrs(std::istream& in) {
  AttrList out;
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    if (line[0] == '#') {
      if (line_no == 1) {
        auto fields = SplitFields(std::string_view(line).substr(1));
        if (fields.size() == 2) {
          out.dims.emplace(ParseId<NodeId>(fields[0], line_no),
                           ParseId<AttrId>(fields[1], line_no));
        }
      }
      continue;
    }
    auto fields = SplitFields(line);
    if (fields.size() != 2) {
      throw InputError("line " + std::to_string(line_no) +
                           ": expected 'u<TAB>k'",
                       line_no);
    }
    const auto u = ParseId<NodeId>(fields[0], line_no);
    const auto k = ParseId<AttrId>(fields[1], line_no);
    if (out.dims && (u >= out.dims->first || k >= out.dims->second)) {
      throw InputError("line " + std::to_string(line_no) +
                           ": pair outside the declared N x K header",
                       line_no);
    }
    out.pairs.emplace_back(u, k);
    out.max_node = std::max(out.max_node, u);
    out.max_attr = std::max(out.max_attr, k);
  }
  return out;
}

CommunityCover ParseCommunities(std::istream& in) {
  std::vector<std::vector<NodeId>> communities;
  NodeId max_id = -1;
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line) || line[0] == '#') continue;
    std::vector<NodeId> members;
    for (auto field : SplitFields(line)) {
      members.push_back(ParseId<NodeId>(field, line_no));
      max_id = std::max(max_id, members.back());
    }
    communities.push_back(std::move(members));
  }
  return CommunityCover(max_id + 1, std::move(communities));
}

AttributeWeights ParseWeights(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line) || line[0] == '#') continue;
    auto fields = SplitFields(line);
    if (fields.size() < 2) {
      throw InputError("line " + std::to_string(line_no) +
                           ": expected 'k<TAB>w...<TAB>bias'",
                       line_no);
    }
    const auto k = ParseId<AttrId>(fields[0], line_no);
    if (k != static_cast<AttrId>(rows.size())) {
      throw InputError("line " + std::to_string(line_no) +
                           ": attribute ids must be consecutive from 0",
                       line_no);
    }
    std::vector<double> row;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      row.push_back(ParseReal(fields[i], line_no));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw InputError("line " + std::to_string(line_no) +
                           ": inconsistent number of weights",
                       line_no);
    }
    rows.push_back(std::move(row));
  }
  const int c_count = rows.empty() ? 0 : static_cast<int>(rows[0].size()) - 1;
  AttributeWeights w(static_cast<AttrId>(rows.size()), c_count);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (int c = 0; c <= c_count; ++c) {
      w.Set(static_cast<AttrId>(k), c, rows[k][c]);
    }
  }
  return w;
}

void WriteEdges(std::ostream& out, const AttributedGraph& g) {
  for (const auto& [u, v] : g.Edges()) out << u << '\t' << v << '\n';
}

void WriteAttrs(std::ostream& out, const AttributedGraph& g) {
  out << '#' << g.num_nodes() << '\t' << g.num_attrs() << '\n';
  for (const auto& [u, k] : g.AttrPairs()) out << u << '\t' << k << '\n';
}

void WriteCommunities(std::ostream& out, const CommunityCover& cover) {
  const CommunityCover canonical = cover.Canonical();
  for (const auto& members : canonical.communities()) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i > 0) out << '\t';
      out << members[i];
    }
    out << '\n';
  }
}

void WriteWeights(std::ostream& out, const AttributeWeights& w) {
  for (AttrId k = 0; k < w.num_attrs(); ++k) {
    out << k;
    for (double x : w.row(k)) out << '\t' << FormatReal(x);
    out << '\n';
  }
}

AttributedGraph LoadGraph(const std::filesystem::path& edges_path,
                          const std::optional<std::filesystem::path>& attrs_path,
                          BuildDiagnostics* diagnostics) {
  auto edge_in = OpenForRead(edges_path);
  const EdgeList edges = ParseEdges(edge_in);
  AttrList attrs;
  if (attrs_path) {
    auto attr_in = OpenForRead(*attrs_path);
    attrs = ParseAttrs(attr_in);
  }
  NodeId n = std::max(edges.max_id, attrs.max_node) + 1;
  AttrId k = attrs.max_attr + 1;
  if (attrs.dims) {
    if (attrs.dims->first < n) {
      throw InputError("edge file uses node ids beyond the declared N");
    }
    n = attrs.dims->first;
    k = attrs.dims->second;
  }
  if (n == 0) throw InputError("input graph has no nodes");
  return AttributedGraph::Build(n, k, edges.edges, attrs.pairs, diagnostics);
}

CommunityCover ReadCommunities(const std::filesystem::path& path) {
  auto in = OpenForRead(path);
  return ParseCommunities(in);
}

std::ofstream OpenForWrite(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

std::string FileDigest(const std::filesystem::path& path) {
  auto in = OpenForRead(path);
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char buf[1 << 16];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      hash ^= static_cast<unsigned char>(buf[i]);
      hash *= 0x100000001b3ULL;
    }
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(hash));
  return hex;
}

void RunManifest::Set(const std::string& key, const std::string& value) {
  for (auto& entry : entries_) {
    if (entry.first == key) {
      entry.second = value;
      return;
    }
  }
  entries_.emplace_back(key, value);
}

void RunManifest::Set(const std::string& key, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  Set(key, std::string(buf));
}

void RunManifest::Set(const std::string& key, std::int64_t value) {
  Set(key, std::to_string(value));
}

std::optional<std::string> RunManifest::Get(const std::string& key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

void RunManifest::Write(std::ostream& out) const {
  for (const auto& [k, v] : entries_) out << k << '=' << v << '\n';
}

RunManifest RunManifest::Parse(std::istream& in) {
  RunManifest m;
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line) || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw InputError("line " + std::to_string(line_no) +
                           ": expected key=value",
                       line_no);
    }
    m.Set(line.substr(0, eq), line.substr(eq + 1));
  }
  return m;
}

}  // namespace cesna

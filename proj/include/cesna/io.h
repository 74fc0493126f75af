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

#ifndef CESNA_IO_H_
#define CESNA_IO_H_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cesna/affiliation.h"
#include "cesna/graph.h"

namespace cesna {

// Text formats (UTF-8, one record per line, '#' lines are comments):
//   edges        u<TAB>v
//   attributes   u<TAB>k, optionally preceded by a first line "#N<TAB>K"
//   communities  one community per line, ids separated by tabs, lines in
//                descending size order, ids ascending
//   weights      k<TAB>w_0<TAB>...<TAB>w_{C-1}<TAB>bias, 9 significant digits
//
// Parse failures throw InputError whose index() is the 1-based line number.

struct EdgeList {
  std::vector<Edge> edges;
  NodeId max_id = -1;
};

struct AttrList {
  std::vector<AttrPair> pairs;
  std::optional<std::pair<NodeId, AttrId>> dims;  // from the "#N\tK" header
  NodeId max_node = -1;
  AttrId max_attr = -1;
};

EdgeList ParseEdges(std::istream& in);
AttrList ParseAttrs(std::istream& in);
CommunityCover ParseCommunities(std::istream& in);
AttributeWeights ParseWeights(std::istream& in);

void WriteEdges(std::ostream& out, const AttributedGraph& g);
// Always writes the "#N\tK" header so isolated trailing nodes survive.
void WriteAttrs(std::ostream& out, const AttributedGraph& g);
void WriteCommunities(std::ostream& out, const CommunityCover& cover);
void WriteWeights(std::ostream& out, const AttributeWeights& w);

// N and K come from the attribute header when present, otherwise from the
// largest ids seen in either file.
AttributedGraph LoadGraph(const std::filesystem::path& edges,
                          const std::optional<std::filesystem::path>& attrs,
                          BuildDiagnostics* diagnostics = nullptr);

CommunityCover ReadCommunities(const std::filesystem::path& path);

// Opens `path` for writing or throws std::runtime_error.
std::ofstream OpenForWrite(const std::filesystem::path& path);

// 64-bit FNV-1a of the file's bytes, as 16 hex digits.
std::string FileDigest(const std::filesystem::path& path);

// Flat key=value record of one CLI run. Keys keep insertion order.
class RunManifest {
 public:
  void Set(const std::string& key, const std::string& value);
  void Set(const std::string& key, const char* value) {
    Set(key, std::string(value));
  }
  void Set(const std::string& key, double value);
  void Set(const std::string& key, std::int64_t value);
  void Set(const std::string& key, int value) {
    Set(key, static_cast<std::int64_t>(value));
  }
  void Set(const std::string& key, bool value) {
    Set(key, std::string(value ? "true" : "false"));
  }

  std::optional<std::string> Get(const std::string& key) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }

  void Write(std::ostream& out) const;
  static RunManifest Parse(std::istream& in);

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace cesna

#endif  // CESNA_IO_H_

// Copyright 2026 The ArabKit Authors.
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

#ifndef ARABKIT_SYNONYMY_H_
#define ARABKIT_SYNONYMY_H_

#include <compare>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace arabkit::syn {

struct TermNode {
  std::string surface;
  std::string language;

  auto operator<=>(const TermNode &) const = default;
};

// Directed term graph built from synonymy and translation pairs. Parallel
// edges collapse into one edge carrying every source lexicon id; self-loops
// are never stored.
class SynonymyGraph {
 public:
  using NodeId = uint32_t;

  struct BuildReport {
    size_t rows = 0;
    size_t self_loops_skipped = 0;
  };

  // Reads `source_surface<TAB>source_lang<TAB>target_surface<TAB>target_lang
  // <TAB>lexicon_id<TAB>symmetric{0|1}` rows; symmetric rows add both
  // directions. Throws Error(kMalformedRow | kUnknownLanguageCode).
  static SynonymyGraph Parse(std::istream &in, BuildReport *report = nullptr);

  NodeId AddNode(const TermNode &node);
  // Returns false for self-loops, which are ignored.
  bool AddEdge(const TermNode &from, const TermNode &to, std::string_view lexicon);

  std::optional<NodeId> Find(std::string_view surface, std::string_view language) const;
  const TermNode &node(NodeId id) const { return nodes_[id]; }
  // Sorted, duplicate-free.
  const std::vector<NodeId> &successors(NodeId id) const { return successors_[id]; }
  const std::set<std::string> &lexicons(NodeId from, NodeId to) const;

  size_t node_count() const { return nodes_.size(); }
  size_t edge_count() const { return labels_.size(); }

 private:
  std::vector<TermNode> nodes_;
  std::map<TermNode, NodeId> index_;
  std::vector<std::vector<NodeId>> successors_;
  std::map<std::pair<NodeId, NodeId>, std::set<std::string>> labels_;
};

// 2 to 3 lowercase ASCII letters.
bool IsLanguageCode(std::string_view code);

// k / n with n the number of seeds; kept unreduced so scores compare exactly.
struct Fraction {
  uint64_t numerator = 0;
  uint64_t denominator = 1;

  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
  bool operator==(const Fraction &other) const {
    return numerator * other.denominator == other.numerator * denominator;
  }
  std::strong_ordering operator<=>(const Fraction &other) const {
    return numerator * other.denominator <=> other.numerator * denominator;
  }
};

struct FuzzyResult {
  TermNode term;
  Fraction score;
};

struct SynResult {
  std::vector<FuzzyResult> results;  // score descending, then surface
  std::vector<std::string> missing;  // seeds not present in the graph
};

// Nodes lying on at least one simple directed cycle through `seed` whose
// length (in edges) is at most `max_length`. Includes the seed itself when
// such a cycle exists.
std::set<SynonymyGraph::NodeId> CycleMembers(const SynonymyGraph &graph,
                                             SynonymyGraph::NodeId seed, size_t max_length);

// A candidate's score is the share of seeds with a simple cycle of length at
// most 2 * level passing through both. Only candidates in `language` that
// are not seeds are returned, and only with a non-zero score.
// Throws Error(kEmptyInput | kDuplicateSeed | kInvalidArgument).
SynResult SynExtract(const std::vector<std::string> &seeds, std::string_view language,
                     int level, const SynonymyGraph &graph);

// Scores every term against the others as seeds. Terms with score 0 are kept.
// Throws Error(kInvalidArgument) for fewer than two terms and
// Error(kDuplicateSeed) for repeated terms.
SynResult SynEval(const std::vector<std::string> &terms, std::string_view language, int level,
                  const SynonymyGraph &graph);

// `surface<TAB>score%` with two decimals.
std::string FormatResult(const FuzzyResult &result);

}  // namespace arabkit::syn

#endif  // ARABKIT_SYNONYMY_H_

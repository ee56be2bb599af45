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

#include "arabkit/synonymy.h"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <limits>

#include "arabkit/error.h"
#include "arabkit/script.h"
#include "arabkit/utf8.h"

namespace arabkit::syn {

namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

}  // namespace

bool IsLanguageCode(std::string_view code) {
  if (code.size() < 2 || code.size() > 3) return false;
  return std::all_of(code.begin(), code.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

SynonymyGraph SynonymyGraph::Parse(std::istream &in, BuildReport *report) {
  SynonymyGraph graph;
  BuildReport local;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (utf8::Trim(line).empty() || line.front() == '#') continue;
    auto where = "pair file line " + std::to_string(line_no) + ": ";
    auto fields = SplitTabs(line);
    if (fields.size() != 6) {
      throw Error(ErrorCode::kMalformedRow, where + "expected 6 tab-separated fields");
    }
    for (size_t i : {0u, 2u, 4u}) {
      if (utf8::Trim(fields[i]).empty()) {
        throw Error(ErrorCode::kMalformedRow, where + "empty surface or lexicon id");
      }
    }
    for (size_t i : {1u, 3u}) {
      if (!IsLanguageCode(fields[i])) {
        throw Error(ErrorCode::kUnknownLanguageCode,
                    where + "'" + std::string(fields[i]) + "' is not a language code");
      }
    }
    if (fields[5] != "0" && fields[5] != "1") {
      throw Error(ErrorCode::kMalformedRow, where + "symmetric flag must be 0 or 1");
    }
    TermNode from{script::Normalize(utf8::Trim(fields[0])), std::string(fields[1])};
    TermNode to{script::Normalize(utf8::Trim(fields[2])), std::string(fields[3])};
    ++local.rows;
    if (!graph.AddEdge(from, to, fields[4])) {
      ++local.self_loops_skipped;
      continue;
    }
    if (fields[5] == "1") graph.AddEdge(to, from, fields[4]);
  }
  if (report != nullptr) *report = local;
  return graph;
}

SynonymyGraph::NodeId SynonymyGraph::AddNode(const TermNode &node) {
  auto [it, inserted] = index_.emplace(node, static_cast<NodeId>(nodes_.size()));
  if (inserted) {
    nodes_.push_back(node);
    successors_.emplace_back();
  }
  return it->second;
}

bool SynonymyGraph::AddEdge(const TermNode &from, const TermNode &to, std::string_view lexicon) {
  if (from == to) return false;
  NodeId a = AddNode(from);
  NodeId b = AddNode(to);
  auto &labels = labels_[{a, b}];
  if (labels.empty()) {
    auto &succ = successors_[a];
    succ.insert(std::lower_bound(succ.begin(), succ.end(), b), b);
  }
  labels.emplace(lexicon);
  return true;
}

std::optional<SynonymyGraph::NodeId> SynonymyGraph::Find(std::string_view surface,
                                                         std::string_view language) const {
  auto it = index_.find(TermNode{script::Normalize(surface), std::string(language)});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::set<std::string> &SynonymyGraph::lexicons(NodeId from, NodeId to) const {
  static const std::set<std::string> kNone;
  auto it = labels_.find({from, to});
  return it == labels_.end() ? kNone : it->second;
}

std::set<SynonymyGraph::NodeId> CycleMembers(const SynonymyGraph &graph,
                                             SynonymyGraph::NodeId seed, size_t max_length) {
  using NodeId = SynonymyGraph::NodeId;
  const size_t n = graph.node_count();
  constexpr size_t kFar = std::numeric_limits<size_t>::max() / 2;

  // Shortest distance from every node back to the seed, for pruning.
  std::vector<std::vector<NodeId>> predecessors(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : graph.successors(u)) predecessors[v].push_back(u);
  }
  std::vector<size_t> to_seed(n, kFar);
  std::deque<NodeId> queue{seed};
  to_seed[seed] = 0;
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    for (NodeId u : predecessors[v]) {
      if (to_seed[u] == kFar) {
        to_seed[u] = to_seed[v] + 1;
        queue.push_back(u);
      }
    }
  }

  std::set<NodeId> members;
  std::vector<NodeId> path{seed};
  std::vector<bool> on_path(n, false);
  on_path[seed] = true;

  // Iterative DFS over simple paths starting at the seed.
  struct Frame {
    NodeId node;
    size_t next = 0;
  };
  std::vector<Frame> stack{{seed}};
  while (!stack.empty()) {
    Frame &frame = stack.back();
    const auto &succ = graph.successors(frame.node);
    if (frame.next == succ.size()) {
      on_path[frame.node] = false;
      path.pop_back();
      stack.pop_back();
      continue;
    }
    NodeId w = succ[frame.next++];
    size_t length = path.size();  // edges used once w is appended
    if (w == seed) {
      members.insert(path.begin(), path.end());
      continue;
    }
    if (on_path[w] || length + to_seed[w] > max_length) continue;
    on_path[w] = true;
    path.push_back(w);
    stack.push_back({w});
  }
  return members;
}

namespace {

struct SeedSet {
  std::vector<std::optional<SynonymyGraph::NodeId>> ids;
  std::vector<std::string> missing;
};

SeedSet ResolveSeeds(const std::vector<std::string> &seeds, std::string_view language,
                     const SynonymyGraph &graph) {
  std::set<std::string> seen;
  SeedSet out;
  for (const auto &seed : seeds) {
    std::string normalized = script::Normalize(utf8::Trim(seed));
    if (!seen.insert(normalized).second) {
      throw Error(ErrorCode::kDuplicateSeed, "term '" + seed + "' given twice");
    }
    auto id = graph.Find(normalized, language);
    if (!id) out.missing.push_back(seed);
    out.ids.push_back(id);
  }
  return out;
}

void CheckLevel(int level, std::string_view language) {
  if (level < 1) throw Error(ErrorCode::kInvalidArgument, "level must be a positive integer");
  if (!IsLanguageCode(language)) {
    throw Error(ErrorCode::kUnknownLanguageCode,
                "'" + std::string(language) + "' is not a language code");
  }
}

void SortResults(std::vector<FuzzyResult> *results) {
  std::sort(results->begin(), results->end(), [](const FuzzyResult &a, const FuzzyResult &b) {
    if (a.score != b.score) return a.score > b.score;
    return a.term.surface < b.term.surface;
  });
}

}  // namespace

SynResult SynExtract(const std::vector<std::string> &seeds, std::string_view language, int level,
                     const SynonymyGraph &graph) {
  if (seeds.empty()) throw Error(ErrorCode::kEmptyInput, "no seed terms");
  CheckLevel(level, language);
  SeedSet resolved = ResolveSeeds(seeds, language, graph);
  const size_t max_length = 2 * static_cast<size_t>(level);

  std::set<SynonymyGraph::NodeId> seed_ids;
  for (const auto &id : resolved.ids) {
    if (id) seed_ids.insert(*id);
  }
  std::map<SynonymyGraph::NodeId, uint64_t> support;
  for (SynonymyGraph::NodeId seed : seed_ids) {
    for (SynonymyGraph::NodeId member : CycleMembers(graph, seed, max_length)) {
      if (seed_ids.count(member) || graph.node(member).language != language) continue;
      ++support[member];
    }
  }
  SynResult result;
  result.missing = std::move(resolved.missing);
  for (const auto &[id, count] : support) {
    result.results.push_back({graph.node(id), {count, seeds.size()}});
  }
  SortResults(&result.results);
  return result;
}

SynResult SynEval(const std::vector<std::string> &terms, std::string_view language, int level,
                  const SynonymyGraph &graph) {
  if (terms.size() < 2) throw Error(ErrorCode::kInvalidArgument, "need at least two terms");
  CheckLevel(level, language);
  SeedSet resolved = ResolveSeeds(terms, language, graph);
  const size_t max_length = 2 * static_cast<size_t>(level);

  std::vector<std::set<SynonymyGraph::NodeId>> members(terms.size());
  for (size_t i = 0; i < terms.size(); ++i) {
    if (resolved.ids[i]) members[i] = CycleMembers(graph, *resolved.ids[i], max_length);
  }
  SynResult result;
  result.missing = std::move(resolved.missing);
  for (size_t t = 0; t < terms.size(); ++t) {
    uint64_t count = 0;
    if (resolved.ids[t]) {
      for (size_t s = 0; s < terms.size(); ++s) {
        if (s != t && members[s].count(*resolved.ids[t])) ++count;
      }
    }
    TermNode term{script::Normalize(utf8::Trim(terms[t])), std::string(language)};
    result.results.push_back({std::move(term), {count, terms.size() - 1}});
  }
  SortResults(&result.results);
  return result;
}

std::string FormatResult(const FuzzyResult &result) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f%%", result.score.value() * 100.0);
  return result.term.surface + '\t' + buf;
}

}  // namespace arabkit::syn

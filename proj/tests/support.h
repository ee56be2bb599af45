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

// Independent reference implementations used as test oracles, plus shared
// random generators. Nothing here calls into the code under test except for
// plain data types.
#ifndef ARABKIT_TESTS_SUPPORT_H_
#define ARABKIT_TESTS_SUPPORT_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#ifndef ARABKIT_FIXTURES_DIR
#define ARABKIT_FIXTURES_DIR "data/fixtures"
#endif

namespace arabkit::testing {

inline std::filesystem::path FixturePath(const std::string &relative) {
  return std::filesystem::path(ARABKIT_FIXTURES_DIR) / relative;
}

inline std::string Utf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return out;
}

// Letters of the basic alphabet that need no composition handling.
inline const std::vector<char32_t> &PlainLetters() {
  static const std::vector<char32_t> letters = [] {
    std::vector<char32_t> v;
    for (char32_t cp = 0x0627; cp <= 0x063A; ++cp) v.push_back(cp);
    for (char32_t cp = 0x0641; cp <= 0x064A; ++cp) v.push_back(cp);
    return v;
  }();
  return letters;
}

// fatha, damma, kasra, sukun, fathatan, dammatan, kasratan
inline const std::vector<char32_t> &VowelMarks() {
  static const std::vector<char32_t> marks = {0x064E, 0x064F, 0x0650, 0x0652,
                                              0x064B, 0x064C, 0x064D};
  return marks;
}

inline constexpr char32_t kShaddahCp = 0x0651;

// A random word whose letters each carry nothing, a vowel, shaddah, or both.
// Text() emits marks in canonical combining-class order.
struct RandomWord {
  std::vector<char32_t> bases;
  std::vector<std::optional<char32_t>> vowels;
  std::vector<bool> shaddah;

  std::string Text() const {
    std::string out;
    for (size_t i = 0; i < bases.size(); ++i) {
      out += Utf8(bases[i]);
      // Canonical combining classes: fathatan..kasra 27..32, shaddah 33,
      // sukun 34. Emit in ascending class order.
      std::vector<std::pair<int, char32_t>> marks;
      if (vowels[i]) marks.push_back({CombiningClass(*vowels[i]), *vowels[i]});
      if (shaddah[i]) marks.push_back({33, kShaddahCp});
      std::sort(marks.begin(), marks.end());
      for (const auto &m : marks) out += Utf8(m.second);
    }
    return out;
  }

  static int CombiningClass(char32_t cp) {
    switch (cp) {
      case 0x064B: return 27;
      case 0x064C: return 28;
      case 0x064D: return 29;
      case 0x064E: return 30;
      case 0x064F: return 31;
      case 0x0650: return 32;
      case 0x0651: return 33;
      case 0x0652: return 34;
    }
    return 0;
  }
};

inline RandomWord MakeRandomWord(std::mt19937_64 &rng, size_t min_len, size_t max_len,
                                 const std::vector<char32_t> &alphabet, double mark_rate) {
  std::uniform_int_distribution<size_t> len(min_len, max_len);
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<size_t> vowel(0, VowelMarks().size() - 1);
  std::bernoulli_distribution marked(mark_rate);
  RandomWord w;
  size_t n = len(rng);
  for (size_t i = 0; i < n; ++i) {
    w.bases.push_back(alphabet[pick(rng)]);
    w.vowels.push_back(marked(rng) ? std::optional<char32_t>(VowelMarks()[vowel(rng)])
                                   : std::nullopt);
    w.shaddah.push_back(marked(rng) && marked(rng));
  }
  return w;
}

// IOB: 0 = B, 1 = I, 2 = O. A span [s, e) is decoded iff position s opens a
// span (B, or I right after O or at the start), every position inside is I,
// and the position after the span is not I.
inline std::vector<std::pair<size_t, size_t>> BruteForceIob(const std::vector<int> &labels) {
  const size_t n = labels.size();
  std::vector<std::pair<size_t, size_t>> spans;
  for (size_t s = 0; s < n; ++s) {
    for (size_t e = s + 1; e <= n; ++e) {
      bool opens = labels[s] == 0 || (labels[s] == 1 && (s == 0 || labels[s - 1] == 2));
      if (!opens) continue;
      bool inside = true;
      for (size_t t = s + 1; t < e; ++t) inside = inside && labels[t] == 1;
      if (!inside) continue;
      if (e < n && labels[e] == 1) continue;
      spans.emplace_back(s, e);
    }
  }
  return spans;
}

// Ranks by counting: 1 + #smaller + (#equal - 1) / 2.
inline std::vector<double> CountingRanks(const std::vector<double> &v) {
  std::vector<double> ranks(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    size_t less = 0, equal = 0;
    for (size_t j = 0; j < v.size(); ++j) {
      if (v[j] < v[i]) ++less;
      if (v[j] == v[i]) ++equal;
    }
    ranks[i] = 1.0 + static_cast<double>(less) + (static_cast<double>(equal) - 1.0) / 2.0;
  }
  return ranks;
}

// Pearson correlation expressed through pairwise differences, computed in
// long double.
inline double PairwiseSpearman(const std::vector<double> &a, const std::vector<double> &b) {
  std::vector<double> ra = CountingRanks(a), rb = CountingRanks(b);
  long double sab = 0, saa = 0, sbb = 0;
  for (size_t i = 0; i < ra.size(); ++i) {
    for (size_t j = i + 1; j < ra.size(); ++j) {
      long double da = static_cast<long double>(ra[i]) - ra[j];
      long double db = static_cast<long double>(rb[i]) - rb[j];
      sab += da * db;
      saa += da * da;
      sbb += db * db;
    }
  }
  return static_cast<double>(sab / std::sqrt(saa * sbb));
}

// Adjacency-matrix graph for cycle enumeration.
struct SmallGraph {
  size_t n = 0;
  std::vector<std::vector<bool>> edge;
};

// Every simple cycle through `seed` as the list of its vertices, found by
// trying every sequence of distinct vertices that starts at the seed.
inline std::vector<std::vector<size_t>> EnumerateCycles(const SmallGraph &g, size_t seed,
                                                        size_t max_length) {
  std::vector<std::vector<size_t>> cycles;
  std::vector<size_t> path{seed};
  std::vector<bool> used(g.n, false);
  used[seed] = true;
  std::function<void()> extend = [&] {
    size_t last = path.back();
    if (path.size() >= 2 && g.edge[last][seed] && path.size() <= max_length) {
      cycles.push_back(path);
    }
    if (path.size() >= max_length) return;
    for (size_t v = 0; v < g.n; ++v) {
      if (used[v] || !g.edge[last][v]) continue;
      used[v] = true;
      path.push_back(v);
      extend();
      path.pop_back();
      used[v] = false;
    }
  };
  extend();
  return cycles;
}

inline std::set<size_t> CycleVertexSet(const SmallGraph &g, size_t seed, size_t max_length) {
  std::set<size_t> out;
  for (const auto &c : EnumerateCycles(g, seed, max_length)) out.insert(c.begin(), c.end());
  return out;
}

// A greedy selection under a strict priority order is the unique independent
// set in which every rejected candidate conflicts with a chosen candidate of
// higher priority. Enumerates independent sets and returns the one with that
// property. `before(a, b)` says a has priority over b.
template <typename T, typename Conflict, typename Before>
std::vector<T> GreedyCharacterization(const std::vector<T> &candidates, Conflict conflict,
                                      Before before) {
  std::vector<std::vector<size_t>> matches;
  std::vector<size_t> chosen;
  std::function<void(size_t)> search = [&](size_t i) {
    if (i == candidates.size()) {
      for (size_t r = 0; r < candidates.size(); ++r) {
        if (std::find(chosen.begin(), chosen.end(), r) != chosen.end()) continue;
        bool blocked = std::any_of(chosen.begin(), chosen.end(), [&](size_t c) {
          return conflict(candidates[c], candidates[r]) && before(candidates[c], candidates[r]);
        });
        if (!blocked) return;
      }
      matches.push_back(chosen);
      return;
    }
    search(i + 1);
    bool ok = std::none_of(chosen.begin(), chosen.end(),
                           [&](size_t c) { return conflict(candidates[c], candidates[i]); });
    if (ok) {
      chosen.push_back(i);
      search(i + 1);
      chosen.pop_back();
    }
  };
  search(0);
  if (matches.size() != 1) return {};  // signals a broken characterization
  std::vector<T> out;
  for (size_t i : matches.front()) out.push_back(candidates[i]);
  return out;
}

// Term-frequency cosine over whitespace-separated tokens, from scratch.
inline double TfCosine(const std::vector<std::string> &a, const std::vector<std::string> &b) {
  std::map<std::string, long double> ca, cb;
  for (const auto &t : a) ca[t] += 1;
  for (const auto &t : b) cb[t] += 1;
  long double dot = 0, na = 0, nb = 0;
  for (const auto &[t, c] : ca) {
    na += c * c;
    auto it = cb.find(t);
    if (it != cb.end()) dot += c * it->second;
  }
  for (const auto &[t, c] : cb) nb += c * c;
  if (na == 0 || nb == 0) return 0.0;
  return static_cast<double>(dot / std::sqrt(na * nb));
}

}  // namespace arabkit::testing

#endif  // ARABKIT_TESTS_SUPPORT_H_

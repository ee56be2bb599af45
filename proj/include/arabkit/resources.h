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

#ifndef ARABKIT_RESOURCES_H_
#define ARABKIT_RESOURCES_H_

#include <atomic>
#include <filesystem>
#include <functional>
#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "arabkit/morphology.h"
#include "arabkit/ner.h"
#include "arabkit/synonymy.h"
#include "arabkit/wsd.h"

namespace arabkit::resources {

inline constexpr const char *kRootEnvVar = "ARABKIT_RESOURCES";
inline constexpr const char *kDefaultRoot = "resources";

// Relative locations inside the resource root.
inline constexpr std::string_view kDictionaryPath = "morph/dictionary.tsv";
inline constexpr std::string_view kTagSetPath = "morph/pos_tags.tsv";
inline constexpr std::string_view kGazetteerPath = "ner/gazetteer.tsv";
inline constexpr std::string_view kEntityTypesPath = "ner/types.tsv";
inline constexpr std::string_view kInventoryPath = "wsd/inventory.tsv";
inline constexpr std::string_view kSynonymPairsPath = "syn/pairs.tsv";

// $ARABKIT_RESOURCES when set and non-empty, otherwise ./resources.
std::filesystem::path DefaultRoot();

// A value built on first access. Concurrent first callers block until the one
// running loader finishes; a loader that throws leaves the slot empty so a
// later call can retry.
template <typename T>
class Lazy {
 public:
  explicit Lazy(std::function<T()> loader) : loader_(std::move(loader)) {}

  const T &Get() {
    std::call_once(once_, [this] {
      ++load_count_;
      value_.emplace(loader_());
    });
    return *value_;
  }

  bool loaded() const { return load_count_ > 0 && value_.has_value(); }
  int load_count() const { return load_count_; }

 private:
  std::function<T()> loader_;
  std::once_flag once_;
  std::optional<T> value_;
  std::atomic<int> load_count_{0};
};

// Lazily loaded resources under one root directory. Missing files produce
// Error(kResourceNotFound) naming the expected path. The tag set and entity
// type list fall back to the compiled-in defaults when absent.
class ResourceRegistry {
 public:
  explicit ResourceRegistry(std::filesystem::path root = DefaultRoot());

  const std::filesystem::path &root() const { return root_; }
  std::filesystem::path PathOf(std::string_view relative) const { return root_ / relative; }
  // PathOf, or Error(kResourceNotFound) when the file does not exist.
  std::filesystem::path Locate(std::string_view relative) const;

  const morph::TagSet &TagSet() { return tags_.Get(); }
  const morph::MorphDictionary &Dictionary() { return dictionary_.Get(); }
  const ner::EntityTypeSet &EntityTypes() { return entity_types_.Get(); }
  const ner::Gazetteer &Gazetteer() { return gazetteer_.Get(); }
  const wsd::SenseInventory &Inventory() { return inventory_.Get(); }
  const syn::SynonymyGraph &SynonymGraph() { return graph_.Get(); }

  int dictionary_load_count() const { return dictionary_.load_count(); }
  bool dictionary_loaded() const { return dictionary_.loaded(); }

 private:
  std::filesystem::path root_;
  Lazy<morph::TagSet> tags_;
  Lazy<morph::MorphDictionary> dictionary_;
  Lazy<ner::EntityTypeSet> entity_types_;
  Lazy<ner::Gazetteer> gazetteer_;
  Lazy<wsd::SenseInventory> inventory_;
  Lazy<syn::SynonymyGraph> graph_;
};

// Archives.

struct ArchiveEntry {
  std::string path;
  std::string data;
  bool directory = false;
};

// Reads an uncompressed ustar/GNU/pax tar stream. Only regular files and
// directories are accepted. Throws Error(kBadArchive).
std::vector<ArchiveEntry> ReadTar(std::istream &in);
void WriteTar(std::ostream &out, const std::vector<ArchiveEntry> &entries);

// Throws Error(kPathEscape) for absolute paths or paths with "..".
std::filesystem::path SafeRelativePath(std::string_view path);

struct InstallSummary {
  std::vector<std::string> added;
  std::vector<std::string> updated;
  std::vector<std::string> unchanged;
};

// Unpacks `archive` under `root`, overwriting existing files. Every entry is
// validated before anything is written.
InstallSummary InstallArchive(const std::filesystem::path &archive,
                              const std::filesystem::path &root);

// Packs the regular files under `directory` (paths relative to it, sorted).
std::vector<ArchiveEntry> CollectDirectory(const std::filesystem::path &directory);

}  // namespace arabkit::resources

#endif  // ARABKIT_RESOURCES_H_

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

#include "arabkit/resources.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

#include "arabkit/error.h"

namespace arabkit::resources {

namespace fs = std::filesystem;

namespace {

std::string ReadFile(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read '" + path.string() + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::ifstream OpenOrThrow(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read '" + path.string() + "'");
  return in;
}

}  // namespace

fs::path DefaultRoot() {
  const char *env = std::getenv(kRootEnvVar);
  if (env != nullptr && *env != '\0') return fs::path(env);
  return fs::path(kDefaultRoot);
}

ResourceRegistry::ResourceRegistry(fs::path root)
    : root_(std::move(root)),
      tags_([this] {
        fs::path p = PathOf(kTagSetPath);
        if (!fs::exists(p)) return morph::TagSet::Default();
        return morph::TagSet::Parse(ReadFile(p));
      }),
      dictionary_([this] {
        return morph::MorphDictionary::Load(Locate(kDictionaryPath), &TagSet());
      }),
      entity_types_([this] {
        fs::path p = PathOf(kEntityTypesPath);
        if (!fs::exists(p)) return ner::EntityTypeSet::Default();
        return ner::EntityTypeSet::Parse(ReadFile(p));
      }),
      gazetteer_([this] {
        std::ifstream in = OpenOrThrow(Locate(kGazetteerPath));
        return ner::Gazetteer::Parse(in, &EntityTypes());
      }),
      inventory_([this] { return wsd::SenseInventory::Load(Locate(kInventoryPath)); }),
      graph_([this] {
        std::ifstream in = OpenOrThrow(Locate(kSynonymPairsPath));
        return syn::SynonymyGraph::Parse(in);
      }) {}

fs::path ResourceRegistry::Locate(std::string_view relative) const {
  fs::path path = PathOf(relative);
  if (!fs::is_regular_file(path)) {
    throw Error(ErrorCode::kResourceNotFound,
                "expected '" + path.string() + "'; install a resource pack with `arabkit " +
                    "resources install PACK.tar` or set " + kRootEnvVar);
  }
  return path;
}

// Tar format.

namespace {

constexpr size_t kBlock = 512;

struct Header {
  char bytes[kBlock];
};

uint64_t ParseOctal(const char *field, size_t width) {
  uint64_t value = 0;
  size_t i = 0;
  while (i < width && (field[i] == ' ' || field[i] == '\0')) ++i;
  bool any = false;
  for (; i < width && field[i] >= '0' && field[i] <= '7'; ++i) {
    value = value * 8 + static_cast<uint64_t>(field[i] - '0');
    any = true;
  }
  for (; i < width; ++i) {
    if (field[i] != ' ' && field[i] != '\0') {
      throw Error(ErrorCode::kBadArchive, "bad octal field in tar header");
    }
  }
  if (!any) throw Error(ErrorCode::kBadArchive, "empty octal field in tar header");
  return value;
}

std::string Field(const char *field, size_t width) {
  return std::string(field, strnlen(field, width));
}

bool IsZeroBlock(const Header &h) {
  return std::all_of(std::begin(h.bytes), std::end(h.bytes), [](char c) { return c == 0; });
}

bool ReadBlock(std::istream &in, Header *h) {
  in.read(h->bytes, kBlock);
  if (in.gcount() == 0) return false;
  if (static_cast<size_t>(in.gcount()) != kBlock) {
    throw Error(ErrorCode::kBadArchive, "truncated tar header");
  }
  return true;
}

std::string ReadPayload(std::istream &in, uint64_t size) {
  std::string data(size, '\0');
  in.read(data.data(), static_cast<std::streamsize>(size));
  if (static_cast<uint64_t>(in.gcount()) != size) {
    throw Error(ErrorCode::kBadArchive, "truncated tar entry");
  }
  uint64_t pad = (kBlock - size % kBlock) % kBlock;
  in.ignore(static_cast<std::streamsize>(pad));
  if (static_cast<uint64_t>(in.gcount()) != pad) {
    throw Error(ErrorCode::kBadArchive, "truncated tar padding");
  }
  return data;
}

// Extracts "path" from a pax extended header payload.
std::optional<std::string> PaxPath(const std::string &payload) {
  size_t pos = 0;
  while (pos < payload.size()) {
    size_t space = payload.find(' ', pos);
    if (space == std::string::npos) break;
    size_t length = std::strtoul(payload.c_str() + pos, nullptr, 10);
    if (length == 0 || pos + length > payload.size()) break;
    std::string record = payload.substr(space + 1, pos + length - space - 2);
    if (record.rfind("path=", 0) == 0) return record.substr(5);
    pos += length;
  }
  return std::nullopt;
}

void WriteOctal(char *field, size_t width, uint64_t value) {
  std::snprintf(field, width, "%0*llo", static_cast<int>(width - 1),
                static_cast<unsigned long long>(value));
}

}  // namespace

std::vector<ArchiveEntry> ReadTar(std::istream &in) {
  std::vector<ArchiveEntry> entries;
  std::optional<std::string> long_name;
  Header h;
  bool saw_end = false;
  while (ReadBlock(in, &h)) {
    if (IsZeroBlock(h)) {
      saw_end = true;
      break;
    }
    uint64_t stored = ParseOctal(h.bytes + 148, 8);
    uint64_t sum = 0;
    for (size_t i = 0; i < kBlock; ++i) {
      sum += (i >= 148 && i < 156) ? static_cast<uint64_t>(' ')
                                   : static_cast<unsigned char>(h.bytes[i]);
    }
    if (sum != stored) throw Error(ErrorCode::kBadArchive, "tar header checksum mismatch");
    if (std::strncmp(h.bytes + 257, "ustar", 5) != 0) {
      throw Error(ErrorCode::kBadArchive, "not a ustar archive");
    }
    uint64_t size = ParseOctal(h.bytes + 124, 12);
    char type = h.bytes[156];
    std::string name = Field(h.bytes, 100);
    std::string prefix = Field(h.bytes + 345, 155);
    if (!prefix.empty()) name = prefix + "/" + name;

    if (type == 'x' || type == 'L') {
      std::string payload = ReadPayload(in, size);
      long_name = type == 'x' ? PaxPath(payload)
                              : std::optional<std::string>(payload.c_str());
      continue;
    }
    if (type == 'g') {
      ReadPayload(in, size);
      continue;
    }
    if (long_name) name = *long_name;
    long_name.reset();
    if (type == '5') {
      entries.push_back({name, "", true});
      if (size) ReadPayload(in, size);
    } else if (type == '0' || type == '\0') {
      entries.push_back({name, ReadPayload(in, size), false});
    } else {
      throw Error(ErrorCode::kBadArchive,
                  "unsupported tar entry type '" + std::string(1, type) + "' for " + name);
    }
  }
  if (!saw_end) throw Error(ErrorCode::kBadArchive, "missing tar end-of-archive marker");
  return entries;
}

namespace {

void WriteHeader(std::ostream &out, std::string_view name, std::string_view prefix,
                 uint64_t size, char type) {
  Header h{};
  std::memcpy(h.bytes, name.data(), name.size());
  std::memcpy(h.bytes + 345, prefix.data(), prefix.size());
  WriteOctal(h.bytes + 100, 8, type == '5' ? 0755 : 0644);
  WriteOctal(h.bytes + 108, 8, 0);
  WriteOctal(h.bytes + 116, 8, 0);
  WriteOctal(h.bytes + 124, 12, size);
  WriteOctal(h.bytes + 136, 12, 0);
  h.bytes[156] = type;
  std::memcpy(h.bytes + 257, "ustar", 6);
  std::memcpy(h.bytes + 263, "00", 2);
  std::memset(h.bytes + 148, ' ', 8);
  uint64_t sum = 0;
  for (char c : h.bytes) sum += static_cast<unsigned char>(c);
  std::snprintf(h.bytes + 148, 8, "%06llo", static_cast<unsigned long long>(sum));
  h.bytes[155] = ' ';
  out.write(h.bytes, kBlock);
}

void WritePadded(std::ostream &out, std::string_view data) {
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  std::string pad((kBlock - data.size() % kBlock) % kBlock, '\0');
  out.write(pad.data(), static_cast<std::streamsize>(pad.size()));
}

// Splits a long path at a '/' so it fits the ustar prefix and name fields.
std::optional<size_t> UstarSplit(const std::string &path) {
  for (size_t slash = path.find('/'); slash != std::string::npos;
       slash = path.find('/', slash + 1)) {
    if (slash <= 155 && path.size() - slash - 1 <= 100 && slash + 1 < path.size()) return slash;
  }
  return std::nullopt;
}

}  // namespace

void WriteTar(std::ostream &out, const std::vector<ArchiveEntry> &entries) {
  for (const auto &entry : entries) {
    std::string name = entry.path;
    if (entry.directory && (name.empty() || name.back() != '/')) name += '/';
    const char type = entry.directory ? '5' : '0';
    const uint64_t size = entry.directory ? 0 : entry.data.size();
    if (name.size() <= 100) {
      WriteHeader(out, name, "", size, type);
    } else if (auto slash = UstarSplit(name)) {
      WriteHeader(out, std::string_view(name).substr(*slash + 1),
                  std::string_view(name).substr(0, *slash), size, type);
    } else {
      // GNU long-name record ahead of a header carrying a truncated name.
      std::string payload = name + '\0';
      WriteHeader(out, "././@LongLink", "", payload.size(), 'L');
      WritePadded(out, payload);
      WriteHeader(out, std::string_view(name).substr(0, 100), "", size, type);
    }
    if (!entry.directory) WritePadded(out, entry.data);
  }
  std::string end(2 * kBlock, '\0');
  out.write(end.data(), static_cast<std::streamsize>(end.size()));
}

fs::path SafeRelativePath(std::string_view path) {
  fs::path p(path);
  if (path.empty() || p.is_absolute() || p.has_root_name() || p.has_root_directory()) {
    throw Error(ErrorCode::kPathEscape, "archive entry '" + std::string(path) +
                                            "' is not a relative path");
  }
  fs::path clean;
  for (const auto &part : p) {
    if (part == "..") {
      throw Error(ErrorCode::kPathEscape,
                  "archive entry '" + std::string(path) + "' escapes the resource root");
    }
    if (part == "." || part.empty()) continue;
    clean /= part;
  }
  if (clean.empty()) {
    throw Error(ErrorCode::kPathEscape, "archive entry '" + std::string(path) + "' is empty");
  }
  return clean;
}

InstallSummary InstallArchive(const fs::path &archive, const fs::path &root) {
  std::ifstream in(archive, std::ios::binary);
  if (!in) throw Error(ErrorCode::kBadArchive, "cannot open '" + archive.string() + "'");
  std::vector<ArchiveEntry> entries = ReadTar(in);
  std::vector<fs::path> targets;
  for (const auto &entry : entries) targets.push_back(SafeRelativePath(entry.path));

  InstallSummary summary;
  fs::create_directories(root);
  for (size_t i = 0; i < entries.size(); ++i) {
    fs::path dest = root / targets[i];
    if (entries[i].directory) {
      fs::create_directories(dest);
      continue;
    }
    std::string label = targets[i].generic_string();
    if (fs::is_regular_file(dest)) {
      (ReadFile(dest) == entries[i].data ? summary.unchanged : summary.updated).push_back(label);
    } else {
      summary.added.push_back(label);
    }
    fs::create_directories(dest.parent_path());
    std::ofstream out(dest, std::ios::binary | std::ios::trunc);
    out.write(entries[i].data.data(), static_cast<std::streamsize>(entries[i].data.size()));
    if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + dest.string() + "'");
  }
  for (auto *list : {&summary.added, &summary.updated, &summary.unchanged}) {
    std::sort(list->begin(), list->end());
  }
  return summary;
}

std::vector<ArchiveEntry> CollectDirectory(const fs::path &directory) {
  if (!fs::is_directory(directory)) {
    throw Error(ErrorCode::kIoError, "'" + directory.string() + "' is not a directory");
  }
  std::vector<ArchiveEntry> entries;
  for (const auto &item : fs::recursive_directory_iterator(directory)) {
    if (!item.is_regular_file()) continue;
    entries.push_back({fs::relative(item.path(), directory).generic_string(),
                       ReadFile(item.path()), false});
  }
  std::sort(entries.begin(), entries.end(),
            [](const ArchiveEntry &a, const ArchiveEntry &b) { return a.path < b.path; });
  return entries;
}

}  // namespace arabkit::resources

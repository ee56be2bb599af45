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

#ifndef ARABKIT_UTF8_H_
#define ARABKIT_UTF8_H_

#include <string>
#include <string_view>
#include <vector>

namespace arabkit::utf8 {

// Decodes UTF-8. Malformed sequences decode to U+FFFD, one per bad byte.
std::u32string Decode(std::string_view text);

std::string Encode(std::u32string_view text);
void Append(std::string *out, char32_t cp);

bool IsSpace(char32_t cp);

// Splits on Unicode whitespace, dropping empty pieces.
std::vector<std::string> SplitWhitespace(std::string_view text);

std::string Trim(std::string_view text);

}  // namespace arabkit::utf8

#endif  // ARABKIT_UTF8_H_

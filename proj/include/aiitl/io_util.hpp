// Copyright 2026 The aiitl authors
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

#pragma once

#include <cstdint>
#include <string>

namespace aiitl {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// FNV-1a over the bytes; stable across platforms, used for config hashes and
// state digests.
std::uint64_t fnv1a64(const std::string& bytes);
std::string to_hex(std::uint64_t value);

// Shortest decimal representation that parses back to the same double
// (<= 17 significant digits).
std::string format_double(double value);
double parse_double(const std::string& text);

// Fixed two decimals, for reported tables.
std::string format_fixed2(double value);

}  // namespace aiitl

/*
Copyright 2026 The MetisForge Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef METISFORGE_COMMON_TEXT_HPP
#define METISFORGE_COMMON_TEXT_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace metisforge {

/// Shortest decimal string that round-trips the double exactly.
/// Every serialized coordinate, gene and score goes through this so that
/// write -> read -> write is byte-stable.
std::string format_double(double v);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

std::vector<unsigned char> read_binary_file(const std::filesystem::path& path);
void write_binary_file(const std::filesystem::path& path, const void* data, std::size_t len);

} // namespace metisforge

#endif

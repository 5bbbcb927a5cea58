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

#ifndef METISFORGE_DIGIT_SVG_HPP_
#define METISFORGE_DIGIT_SVG_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "metisforge/digit/path_model.hpp"

namespace metisforge::digit {

// Serializes the model to the SVG-subset text format: a metadata comment
// carrying id and label, then one <path> element per subpath whose data uses
// only absolute M/C/Z commands. Numbers round-trip exactly through parse.
std::string to_svg(const PathModel& model, const std::string& id, int label);

// Parses the SVG subset. Malformed content raises std::runtime_error naming
// `filename` and the byte offset of the problem; an unclosed subpath is
// reported with its index.
SeedRecord parse_svg(const std::string& content, const std::string& filename);

SeedRecord load_svg_file(const std::filesystem::path& path);
void write_svg_file(const std::filesystem::path& path, const PathModel& model,
                    const std::string& id, int label);

// Loads records in the given file order; duplicate ids are rejected.
std::vector<SeedRecord> load_seed_corpus(const std::vector<std::filesystem::path>& files);

// Convenience: all *.svg files in the directory, sorted by filename.
std::vector<SeedRecord> load_seed_corpus_dir(const std::filesystem::path& dir);

// Binary PGM (P5, 28x28, maxval 255) encoding of a digit grid.
std::string to_pgm(const std::array<std::uint8_t, kGridPixels>& grid);
void write_pgm_file(const std::filesystem::path& path,
                    const std::array<std::uint8_t, kGridPixels>& grid);

} // namespace metisforge::digit

#endif // METISFORGE_DIGIT_SVG_HPP_

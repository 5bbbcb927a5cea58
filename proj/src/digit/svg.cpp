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

#include "metisforge/digit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#include "metisforge/common/text.hpp"

namespace metisforge::digit {

namespace {

[[noreturn]] void fail_at(const std::string& filename, std::size_t offset,
                          const std::string& message) {
    throw std::runtime_error(filename + ": offset " + std::to_string(offset) + ": " + message);
}

// Extracts the value of `key="value"` starting the search at `from`.
std::string attribute_value(const std::string& content, const std::string& key, std::size_t from,
                            const std::string& filename) {
    const std::string needle = key + "=\"";
    const std::size_t at = content.find(needle, from);
    if (at == std::string::npos) {
        fail_at(filename, from, "missing attribute " + key);
    }
    const std::size_t begin = at + needle.size();
    const std::size_t end = content.find('"', begin);
    if (end == std::string::npos) {
        fail_at(filename, begin, "unterminated attribute " + key);
    }
    return content.substr(begin, end - begin);
}

struct PathDataParser {
    const std::string& data;
    const std::string& filename;
    std::size_t base_offset; // of the d-attribute within the file
    std::size_t pos = 0;

    void skip_spaces() {
        while (pos < data.size() && (data[pos] == ' ' || data[pos] == ',' || data[pos] == '\n' ||
                                     data[pos] == '\t' || data[pos] == '\r')) {
            ++pos;
        }
    }

    bool at_end() {
        skip_spaces();
        return pos >= data.size();
    }

    char peek_command() {
        skip_spaces();
        if (pos >= data.size()) {
            fail_at(filename, base_offset + pos, "unexpected end of path data");
        }
        return data[pos];
    }

    char take_command() {
        const char c = peek_command();
        ++pos;
        return c;
    }

    double take_number() {
        skip_spaces();
        const char* begin = data.c_str() + pos;
        char* end = nullptr;
        const double value = std::strtod(begin, &end);
        if (end == begin) {
            fail_at(filename, base_offset + pos, "expected a number in path data");
        }
        if (!std::isfinite(value)) {
            fail_at(filename, base_offset + pos, "non-finite coordinate");
        }
        pos += static_cast<std::size_t>(end - begin);
        return value;
    }
};

Subpath parse_path_data(const std::string& data, const std::string& filename,
                        std::size_t base_offset, std::size_t subpath_index) {
    PathDataParser p{data, filename, base_offset};
    if (p.take_command() != 'M') {
        fail_at(filename, base_offset, "path data must start with M");
    }
    Point start;
    start.x = p.take_number();
    start.y = p.take_number();

    Subpath sub;
    Point current = start;
    while (true) {
        const char cmd = p.take_command();
        if (cmd == 'C') {
            CubicSegment seg;
            seg.start = current;
            seg.c1.x = p.take_number();
            seg.c1.y = p.take_number();
            seg.c2.x = p.take_number();
            seg.c2.y = p.take_number();
            seg.end.x = p.take_number();
            seg.end.y = p.take_number();
            current = seg.end;
            sub.segments.push_back(seg);
        } else if (cmd == 'Z') {
            break;
        } else {
            fail_at(filename, base_offset + p.pos - 1,
                    std::string("unsupported path command '") + cmd + "'");
        }
    }
    if (!p.at_end()) {
        fail_at(filename, base_offset + p.pos, "trailing content after Z");
    }
    if (sub.segments.empty()) {
        fail_at(filename, base_offset, "subpath " + std::to_string(subpath_index) +
                                           " has no curve segments");
    }
    const Point& last = sub.segments.back().end;
    if (std::abs(last.x - start.x) > 1e-6 || std::abs(last.y - start.y) > 1e-6) {
        fail_at(filename, base_offset,
                "unclosed subpath " + std::to_string(subpath_index) +
                    ": final segment does not return to the M point");
    }
    // Snap the closure junction exactly; shared doubles keep validate happy.
    sub.segments.back().end = start;
    return sub;
}

} // namespace

std::string to_svg(const PathModel& model, const std::string& id, int label) {
    validate(model);
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<!-- metisforge id=\"" << id << "\" label=\"" << label << "\" -->\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"28\" height=\"28\" "
           "viewBox=\"0 0 28 28\">\n";
    for (const Subpath& sub : model.subpaths) {
        out << "  <path d=\"M " << format_double(sub.segments.front().start.x) << ' '
            << format_double(sub.segments.front().start.y);
        for (const CubicSegment& seg : sub.segments) {
            out << " C " << format_double(seg.c1.x) << ' '
                << format_double(seg.c1.y) << ' ' << format_double(seg.c2.x) << ' '
                << format_double(seg.c2.y) << ' ' << format_double(seg.end.x)
                << ' ' << format_double(seg.end.y);
        }
        out << " Z\" fill=\"black\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

SeedRecord parse_svg(const std::string& content, const std::string& filename) {
    const std::size_t meta = content.find("<!-- metisforge");
    if (meta == std::string::npos) {
        fail_at(filename, 0, "missing metisforge metadata comment");
    }
    SeedRecord record;
    record.id = attribute_value(content, "id", meta, filename);
    const std::string label_text = attribute_value(content, "label", meta, filename);
    char* end = nullptr;
    record.label = static_cast<int>(std::strtol(label_text.c_str(), &end, 10));
    if (end == label_text.c_str() || *end != '\0') {
        fail_at(filename, meta, "label is not an integer");
    }

    std::size_t cursor = 0;
    std::size_t subpath_index = 0;
    while (true) {
        const std::size_t path_at = content.find("<path", cursor);
        if (path_at == std::string::npos) {
            break;
        }
        const std::string needle = "d=\"";
        const std::size_t d_at = content.find(needle, path_at);
        if (d_at == std::string::npos) {
            fail_at(filename, path_at, "path element without d attribute");
        }
        const std::size_t d_begin = d_at + needle.size();
        const std::size_t d_end = content.find('"', d_begin);
        if (d_end == std::string::npos) {
            fail_at(filename, d_begin, "unterminated d attribute");
        }
        const std::string data = content.substr(d_begin, d_end - d_begin);
        record.model.subpaths.push_back(
            parse_path_data(data, filename, d_begin, subpath_index));
        ++subpath_index;
        cursor = d_end + 1;
    }
    if (record.model.subpaths.empty()) {
        fail_at(filename, 0, "no path elements");
    }
    validate(record.model);
    return record;
}

SeedRecord load_svg_file(const std::filesystem::path& path) {
    return parse_svg(read_text_file(path), path.string());
}

void write_svg_file(const std::filesystem::path& path, const PathModel& model,
                    const std::string& id, int label) {
    write_text_file(path, to_svg(model, id, label));
}

std::vector<SeedRecord> load_seed_corpus(const std::vector<std::filesystem::path>& files) {
    std::vector<SeedRecord> records;
    std::set<std::string> seen;
    for (const std::filesystem::path& file : files) {
        SeedRecord record = load_svg_file(file);
        if (!seen.insert(record.id).second) {
            throw std::runtime_error(file.string() + ": duplicate seed id '" + record.id + "'");
        }
        records.push_back(std::move(record));
    }
    return records;
}

std::vector<SeedRecord> load_seed_corpus_dir(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    if (std::filesystem::exists(dir)) {
        for (const auto& entry : std::filesystem::directory_iterator(dir)) {
            if (entry.is_regular_file() && entry.path().extension() == ".svg") {
                files.push_back(entry.path());
            }
        }
    }
    std::sort(files.begin(), files.end());
    return load_seed_corpus(files);
}

std::string to_pgm(const std::array<std::uint8_t, kGridPixels>& grid) {
    std::string out = "P5\n28 28\n255\n";
    out.append(reinterpret_cast<const char*>(grid.data()), grid.size());
    return out;
}

void write_pgm_file(const std::filesystem::path& path,
                    const std::array<std::uint8_t, kGridPixels>& grid) {
    const std::string content = to_pgm(grid);
    write_binary_file(path, content.data(), content.size());
}

} // namespace metisforge::digit

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

// Generates the bundled corpus: hand-built digit glyph seeds (SVG curve
// models traced from inked stroke skeletons), a digit classification dataset
// rasterized from those seeds and their mutated variants, a synthetic gaze
// regression dataset, an eye-chromosome seed corpus, the gene schema, and
// ready-to-run example configs. Every artifact is a pure function of fixed
// seeds, so rerunning the tool reproduces identical bytes.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "metisforge/common/rng.hpp"
#include "metisforge/common/text.hpp"
#include "metisforge/digit/mutate.hpp"
#include "metisforge/digit/path_model.hpp"
#include "metisforge/digit/rasterize.hpp"
#include "metisforge/digit/svg.hpp"
#include "metisforge/digit/trace.hpp"
#include "metisforge/gaze/chromosome.hpp"
#include "metisforge/gaze/render.hpp"
#include "metisforge/harness/dataset.hpp"
#include "metisforge/search/digit_domain.hpp"
#include "metisforge/search/gaze_domain.hpp"

namespace {

namespace fs = std::filesystem;
using metisforge::Fnv1a;
using metisforge::Rng;
using metisforge::digit::kGridPixels;
using metisforge::digit::kGridSide;
using metisforge::digit::PathModel;
using metisforge::digit::Point;
using nlohmann::json;

using Stroke = std::vector<Point>;

constexpr double kPi = 3.14159265358979323846;

Stroke line(Point a, Point b, int samples = 24) {
    Stroke out;
    out.reserve(static_cast<std::size_t>(samples) + 1);
    for (int i = 0; i <= samples; ++i) {
        const double t = static_cast<double>(i) / samples;
        out.push_back({a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t});
    }
    return out;
}

// Angles in degrees, measured in image coordinates: 0 points right, 90 points
// down the canvas.
Stroke arc(double cx, double cy, double r, double a0, double a1, int samples = 48) {
    Stroke out;
    out.reserve(static_cast<std::size_t>(samples) + 1);
    for (int i = 0; i <= samples; ++i) {
        const double t = static_cast<double>(i) / samples;
        const double a = (a0 + (a1 - a0) * t) * kPi / 180.0;
        out.push_back({cx + r * std::cos(a), cy + r * std::sin(a)});
    }
    return out;
}

Stroke circle(double cx, double cy, double r) { return arc(cx, cy, r, 0.0, 360.0, 64); }

// Stroke skeleton of each glyph on the 28x28 canvas, centred near (14, 14).
std::vector<Stroke> glyph_skeleton(int label) {
    switch (label) {
    case 0:
        return {arc(14.0, 14.0, 6.0, 0.0, 360.0, 64)};
    case 1:
        return {line({12.0, 8.5}, {14.6, 5.0}, 8), line({14.6, 5.0}, {14.6, 23.0})};
    case 2:
        return {arc(14.0, 9.8, 5.0, 150.0, 360.0), line({18.3, 12.3}, {9.0, 21.5}),
                line({9.0, 21.5}, {19.0, 21.5})};
    case 3:
        return {arc(13.5, 9.6, 4.6, 210.0, 90.0), arc(13.5, 18.4, 5.0, 270.0, 150.0)};
    case 4:
        return {line({16.5, 4.5}, {8.0, 16.0}), line({8.0, 16.0}, {20.0, 16.0}),
                line({16.5, 4.5}, {16.5, 23.0})};
    case 5:
        return {line({18.0, 5.5}, {10.0, 5.5}), line({10.0, 5.5}, {9.6, 13.0}),
                arc(13.4, 17.4, 4.8, 250.0, 430.0)};
    case 6:
        return {arc(13.6, 17.4, 4.9, 0.0, 360.0, 64),
                arc(19.5, 14.0, 9.6, 230.0, 287.0)};
    case 7:
        return {line({9.0, 6.0}, {19.0, 6.0}), line({19.0, 6.0}, {11.5, 23.0})};
    case 8:
        return {circle(14.0, 9.6, 4.1), circle(14.0, 18.3, 4.7)};
    case 9:
        return {arc(14.2, 10.6, 4.9, 0.0, 360.0, 64), line({19.1, 10.6}, {16.2, 23.0})};
    default:
        throw std::invalid_argument("glyph_skeleton: label out of range");
    }
}

struct GlyphJitter {
    double sx = 1.0;
    double sy = 1.0;
    double rot = 0.0;
    double dx = 0.0;
    double dy = 0.0;
    double radius = 1.7;
};

GlyphJitter sample_jitter(Rng& rng) {
    GlyphJitter j;
    j.sx = 0.90 + 0.18 * rng.uniform();
    j.sy = 0.90 + 0.18 * rng.uniform();
    j.rot = (rng.uniform() - 0.5) * 0.16;
    j.dx = (rng.uniform() - 0.5) * 2.0;
    j.dy = (rng.uniform() - 0.5) * 2.0;
    j.radius = 1.5 + 0.4 * rng.uniform();
    return j;
}

Point jitter_point(Point p, const GlyphJitter& j) {
    const double x = (p.x - 14.0) * j.sx;
    const double y = (p.y - 14.0) * j.sy;
    const double xr = x * std::cos(j.rot) - y * std::sin(j.rot);
    const double yr = x * std::sin(j.rot) + y * std::cos(j.rot);
    return {std::clamp(xr + 14.0 + j.dx, 2.0, 26.0), std::clamp(yr + 14.0 + j.dy, 2.0, 26.0)};
}

void stamp_disk(std::array<std::uint8_t, kGridPixels>& grid, Point p, double radius) {
    const int x0 = std::max(0, static_cast<int>(std::floor(p.x - radius)) - 1);
    const int x1 = std::min(kGridSide - 1, static_cast<int>(std::ceil(p.x + radius)) + 1);
    const int y0 = std::max(0, static_cast<int>(std::floor(p.y - radius)) - 1);
    const int y1 = std::min(kGridSide - 1, static_cast<int>(std::ceil(p.y + radius)) + 1);
    for (int py = y0; py <= y1; ++py) {
        for (int px = x0; px <= x1; ++px) {
            const double dx = (px + 0.5) - p.x;
            const double dy = (py + 0.5) - p.y;
            if (dx * dx + dy * dy <= radius * radius) {
                grid[static_cast<std::size_t>(py) * kGridSide + px] = 255;
            }
        }
    }
}

std::array<std::uint8_t, kGridPixels> ink_strokes(const std::vector<Stroke>& strokes,
                                                  const GlyphJitter& j) {
    std::array<std::uint8_t, kGridPixels> grid{};
    for (const Stroke& stroke : strokes) {
        for (std::size_t i = 0; i + 1 < stroke.size(); ++i) {
            const Point a = jitter_point(stroke[i], j);
            const Point b = jitter_point(stroke[i + 1], j);
            const double len = std::hypot(b.x - a.x, b.y - a.y);
            const int steps = std::max(1, static_cast<int>(std::ceil(len / 0.25)));
            for (int s = 0; s <= steps; ++s) {
                const double t = static_cast<double>(s) / steps;
                stamp_disk(grid, {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t}, j.radius);
            }
        }
    }
    return grid;
}

PathModel make_glyph(int label, int variant) {
    Rng rng(Fnv1a().str("digit-seed").u32(static_cast<std::uint32_t>(label))
                .u32(static_cast<std::uint32_t>(variant))
                .value());
    // Variant 0 is the canonical upright glyph; the rest get a mild affine
    // jitter plus a stroke-width change.
    const GlyphJitter j = variant == 0 ? GlyphJitter{} : sample_jitter(rng);
    const auto grid = ink_strokes(glyph_skeleton(label), j);
    PathModel model = metisforge::digit::trace_bitmap(grid, 128);
    if (model.subpaths.empty()) {
        throw std::runtime_error("traced glyph " + std::to_string(label) + "/" +
                                 std::to_string(variant) + " is empty");
    }
    return model;
}

struct DigitSeed {
    std::string id;
    int label = 0;
    PathModel model;
};

std::vector<DigitSeed> write_digit_seeds(const fs::path& dir, int per_class) {
    fs::create_directories(dir);
    std::vector<DigitSeed> seeds;
    for (int label = 0; label <= 9; ++label) {
        for (int variant = 0; variant < per_class; ++variant) {
            DigitSeed seed;
            seed.id = "seed_" + std::to_string(label) + "_" + std::to_string(variant);
            seed.label = label;
            seed.model = make_glyph(label, variant);
            metisforge::digit::write_svg_file(dir / (seed.id + ".svg"), seed.model, seed.id,
                                              seed.label);
            seeds.push_back(std::move(seed));
        }
    }
    return seeds;
}

metisforge::harness::Dataset build_digit_dataset(const std::vector<DigitSeed>& seeds,
                                                 int variants_per_seed) {
    using metisforge::digit::DigitInput;
    // Group rows per class so the train/test split can be stratified: every
    // class keeps the same 4:1 ratio on both sides.
    std::array<std::vector<DigitInput>, 10> by_class;
    const metisforge::digit::MutationExtent extent{};
    for (const DigitSeed& seed : seeds) {
        by_class[static_cast<std::size_t>(seed.label)].push_back(
            metisforge::digit::rasterize_labeled(seed.model, seed.label));
        for (int v = 0; v < variants_per_seed; ++v) {
            Rng rng(Fnv1a().str("digit-variant").str(seed.id)
                        .u32(static_cast<std::uint32_t>(v))
                        .value());
            PathModel mutated = seed.model;
            const int steps = 1 + (v % 4);
            for (int s = 0; s < steps; ++s) {
                mutated = metisforge::digit::mutate_digit(mutated, extent, rng);
            }
            by_class[static_cast<std::size_t>(seed.label)].push_back(
                metisforge::digit::rasterize_labeled(mutated, seed.label));
        }
    }

    metisforge::harness::Dataset ds;
    ds.task = metisforge::harness::Task::classification;
    ds.input_dim = kGridPixels;
    ds.num_classes = 10;
    for (int label = 0; label <= 9; ++label) {
        auto& rows = by_class[static_cast<std::size_t>(label)];
        Rng rng(Fnv1a().str("digit-split").u32(static_cast<std::uint32_t>(label)).value());
        const std::vector<std::size_t> order = rng.permutation(rows.size());
        const std::size_t test_count = rows.size() / 5;
        for (std::size_t i = 0; i < order.size(); ++i) {
            const DigitInput& row = rows[order[i]];
            auto& split = i < test_count ? ds.test : ds.train;
            split.inputs.push_back(
                metisforge::search::DigitSearchDomain::to_model_input(row));
            split.labels.push_back(row.label);
        }
    }
    metisforge::harness::validate(ds);
    return ds;
}

metisforge::harness::Dataset build_gaze_dataset(int total, int test_every) {
    metisforge::harness::Dataset ds;
    ds.task = metisforge::harness::Task::regression;
    ds.input_dim = metisforge::gaze::kFeatureCount + 2;
    ds.num_classes = 0;
    Rng rng(Fnv1a().str("gaze-data").value());
    for (int i = 0; i < total; ++i) {
        const metisforge::gaze::EyeChromosome c = metisforge::gaze::sample_chromosome(rng);
        const metisforge::gaze::FeatureVector fv =
            metisforge::gaze::render_features(c, 5000 + static_cast<std::uint64_t>(i));
        auto& split = (i % test_every) == test_every - 1 ? ds.test : ds.train;
        split.inputs.push_back(metisforge::search::GazeSearchDomain::to_model_input(fv));
        split.targets.emplace_back(fv.truth_pitch, fv.truth_yaw);
    }
    metisforge::harness::validate(ds);
    return ds;
}

void write_pretty_json(const fs::path& path, const json& value) {
    metisforge::write_text_file(path, value.dump(2) + "\n");
}

void write_gaze_seed_corpus(const fs::path& path, int count) {
    Rng rng(Fnv1a().str("gaze-seeds").value());
    json seeds = json::array();
    for (int i = 0; i < count; ++i) {
        char id[16];
        std::snprintf(id, sizeof(id), "eye_%03d", i);
        seeds.push_back(json{
            {"id", id},
            {"chromosome", metisforge::gaze::to_json_record(metisforge::gaze::sample_chromosome(rng))}});
    }
    write_pretty_json(path, json{{"schema_version", 1}, {"seeds", seeds}});
}

json digits_config() {
    return json{
        {"schema_version", 1},
        {"subject", "digits"},
        {"dataset", "data/digits.mfd"},
        {"seeds", "data/seeds/digits"},
        {"output_dir", "out/digits"},
        {"run_count", 3},
        {"harness",
         {{"n", 6},
          {"o", 1},
          {"m", 5},
          {"base_seed", 2026},
          {"train",
           {{"hidden_sizes", {32}},
            {"activations", {"relu"}},
            {"epochs", 30},
            {"learning_rate", 0.05},
            {"batch_size", 32},
            {"weight_init", "he_uniform"}}}}},
        {"search", {{"rng_seed", 7}}},
        {"weakness", {{"confidence_threshold", 0.99}}},
        {"operators",
         {{{"op", "TRD"}},
          {{"op", "TCL"}, {"target_label", 3}},
          {{"op", "HLR"}, {"lo", 0.0}, {"hi", 1.0}, {"epsilon", 0.01}},
          {{"op", "ACH"}, {"values", {"0:sigmoid", "0:tanh"}}}}}};
}

json regression_config() {
    return json{
        {"schema_version", 1},
        {"subject", "regression"},
        {"dataset", "data/gaze.mfd"},
        {"seeds", "data/seeds/eyes.json"},
        {"output_dir", "out/regression"},
        {"run_count", 3},
        {"harness",
         {{"n", 6},
          {"o", 1},
          {"m", 5},
          {"base_seed", 2026},
          {"train",
           {{"hidden_sizes", {24}},
            {"activations", {"relu"}},
            {"epochs", 60},
            {"learning_rate", 0.03},
            {"batch_size", 16},
            {"weight_init", "he_uniform"}}}}},
        {"search", {{"rng_seed", 11}, {"archive_threshold", 0.18}}},
        {"weakness", {{"remove_fraction", 0.5}}},
        {"operators",
         {{{"op", "TRD"}},
          {{"op", "TAN"}},
          {{"op", "HNE"}, {"lo", 0.0}, {"hi", 1.0}, {"epsilon", 0.01}},
          {{"op", "ARM"}, {"values", {"0"}}},
          {{"op", "WCI"}, {"values", {"small_gaussian", "zeros"}}}}}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"metisforge-datagen: regenerates the bundled seed corpora, datasets, "
                 "gene schema, and example configs"};
    std::string out_root = "data";
    app.add_option("--out", out_root, "Output directory root (default: data)");
    CLI11_PARSE(app, argc, argv);

    try {
        const fs::path root(out_root);
        fs::create_directories(root / "seeds");
        fs::create_directories(root / "schema");
        fs::create_directories(root / "configs");

        const std::vector<DigitSeed> seeds = write_digit_seeds(root / "seeds" / "digits", 5);
        std::cout << "datagen: wrote " << seeds.size() << " digit seed curve(s) to "
                  << (root / "seeds" / "digits").string() << "\n";

        const metisforge::harness::Dataset digits = build_digit_dataset(seeds, 9);
        metisforge::harness::save_dataset(root / "digits.mfd", digits);
        std::cout << "datagen: digits.mfd with " << digits.train.size() << " train / "
                  << digits.test.size() << " test rows\n";

        const metisforge::harness::Dataset gaze = build_gaze_dataset(1200, 6);
        metisforge::harness::save_dataset(root / "gaze.mfd", gaze);
        std::cout << "datagen: gaze.mfd with " << gaze.train.size() << " train / "
                  << gaze.test.size() << " test rows\n";

        write_gaze_seed_corpus(root / "seeds" / "eyes.json", 200);
        std::cout << "datagen: wrote 200 eye chromosome seed(s)\n";

        write_pretty_json(root / "schema" / "eye_genes.json", metisforge::gaze::schema_json());
        write_pretty_json(root / "configs" / "digits.json", digits_config());
        write_pretty_json(root / "configs" / "regression.json", regression_config());
        std::cout << "datagen: wrote gene schema and example configs\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "datagen error: " << e.what() << "\n";
        return 1;
    }
}

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

#include "metisforge/common/text.hpp"

#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace metisforge {
namespace {

TEST(FormatDouble, ShortValuesUseShortestForm) {
    EXPECT_EQ(format_double(0.0), "0");
    EXPECT_EQ(format_double(1.0), "1");
    EXPECT_EQ(format_double(-1.0), "-1");
    EXPECT_EQ(format_double(0.5), "0.5");
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(28.0), "28");
}

TEST(FormatDouble, RoundTripsExactly) {
    const std::vector<double> cases = {
        0.0,
        -0.0,
        1.0 / 3.0,
        0.29390624999999998,
        0.1 + 0.2,
        1e-300,
        -1e300,
        std::numeric_limits<double>::denorm_min(),
        std::numeric_limits<double>::max(),
        9.867530241949192e-7,
        123456789.123456789,
    };
    for (double v : cases) {
        const std::string s = format_double(v);
        EXPECT_EQ(std::strtod(s.c_str(), nullptr), v) << "value " << s;
    }
}

TEST(FormatDouble, StableAcrossCalls) {
    const double v = 0.76973946043424246;
    EXPECT_EQ(format_double(v), format_double(v));
}

TEST(TextFiles, WriteThenReadReturnsSameContent) {
    test::TempDir dir("text");
    const auto path = dir.path() / "nested" / "file.txt";
    const std::string content = "line one\nline two\n\tmixed \xc3\xa9 bytes\n";
    write_text_file(path, content);
    EXPECT_EQ(read_text_file(path), content);
}

TEST(TextFiles, ReadMissingFileThrows) {
    test::TempDir dir("text_missing");
    EXPECT_THROW(read_text_file(dir.path() / "absent.txt"), std::runtime_error);
}

TEST(BinaryFiles, RoundTripPreservesBytes) {
    test::TempDir dir("binary");
    const auto path = dir.path() / "blob.bin";
    std::vector<unsigned char> data;
    for (int i = 0; i < 256; ++i) {
        data.push_back(static_cast<unsigned char>(i));
    }
    write_binary_file(path, data.data(), data.size());
    EXPECT_EQ(read_binary_file(path), data);
}

TEST(BinaryFiles, EmptyPayloadAllowed) {
    test::TempDir dir("binary_empty");
    const auto path = dir.path() / "empty.bin";
    write_binary_file(path, nullptr, 0);
    EXPECT_TRUE(read_binary_file(path).empty());
}

} // namespace
} // namespace metisforge

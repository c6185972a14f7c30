// Copyright 2026 The qubomatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "qubomatch/detector.hpp"
#include "qubomatch/errors.hpp"

namespace qubomatch {

namespace {

// Whitespace/comment-aware tokenizer over the PGM header and P2 raster.
class PgmScanner {
  public:
    explicit PgmScanner(std::string_view data) : data_(data) {}

    unsigned long next_number(const char* what) {
        skip_blanks();
        const std::size_t start = pos_;
        while (pos_ < data_.size() && std::isdigit(static_cast<unsigned char>(data_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError(std::string("expected ") + what, line_);
        unsigned long value = 0;
        const auto [ptr, ec] = std::from_chars(data_.data() + start, data_.data() + pos_, value);
        if (ec != std::errc{}) throw ParseError(std::string("invalid ") + what, line_);
        return value;
    }

    std::string_view magic() {
        if (data_.size() < 2) throw ParseError("missing PGM magic number", 1);
        pos_ = 2;
        return data_.substr(0, 2);
    }

    // P5: exactly one whitespace byte separates maxval from the raster
    std::string_view binary_tail() {
        if (pos_ >= data_.size() || !std::isspace(static_cast<unsigned char>(data_[pos_]))) {
            throw ParseError("expected whitespace before binary raster", line_);
        }
        return data_.substr(pos_ + 1);
    }

    std::size_t line() const noexcept { return line_; }

  private:
    void skip_blanks() {
        while (pos_ < data_.size()) {
            const char c = data_[pos_];
            if (c == '#') {
                while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                if (c == '\n') ++line_;
                ++pos_;
            } else {
                break;
            }
        }
    }

    std::string_view data_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

}  // namespace

RasterImage read_pgm(std::string_view data) {
    PgmScanner scan(data);
    const std::string_view magic = scan.magic();
    if (magic != "P2" && magic != "P5") {
        throw ParseError("unsupported magic number '" + std::string(magic) + "'", 1);
    }
    const unsigned long width = scan.next_number("width");
    const unsigned long height = scan.next_number("height");
    const unsigned long maxval = scan.next_number("maxval");
    if (width < 3 || height < 3) throw ParseError("image must be at least 3x3", scan.line());
    if (maxval == 0 || maxval > 65535) {
        throw ParseError("maxval must be in [1, 65535]", scan.line());
    }
    const std::size_t count = width * height;
    std::vector<double> pixels(count);
    const auto scale = static_cast<double>(maxval);

    if (magic == "P2") {
        for (std::size_t k = 0; k < count; ++k) {
            const unsigned long v = scan.next_number("pixel value");
            if (v > maxval) throw ParseError("pixel value exceeds maxval", scan.line());
            pixels[k] = static_cast<double>(v) / scale;
        }
    } else {
        const std::string_view raster = scan.binary_tail();
        const std::size_t bytes_per_sample = maxval < 256 ? 1 : 2;
        if (raster.size() < count * bytes_per_sample) {
            throw ParseError("binary raster truncated: need " +
                             std::to_string(count * bytes_per_sample) + " bytes, have " +
                             std::to_string(raster.size()));
        }
        for (std::size_t k = 0; k < count; ++k) {
            unsigned long v = static_cast<unsigned char>(raster[k * bytes_per_sample]);
            if (bytes_per_sample == 2) {
                v = (v << 8) | static_cast<unsigned char>(raster[k * 2 + 1]);
            }
            if (v > maxval) throw ParseError("pixel value exceeds maxval");
            pixels[k] = static_cast<double>(v) / scale;
        }
    }
    return RasterImage(width, height, std::move(pixels));
}

RasterImage read_pgm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    const std::string data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return read_pgm(data);
}

std::vector<unsigned char> write_pgm(const RasterImage& img, unsigned maxval) {
    if (maxval == 0 || maxval > 65535) throw InvalidArgument("maxval must be in [1, 65535]");
    std::ostringstream header;
    header << "P5\n" << img.width() << ' ' << img.height() << '\n' << maxval << '\n';
    const std::string h = header.str();
    std::vector<unsigned char> out(h.begin(), h.end());
    for (double v : img.pixels()) {
        const auto q = static_cast<unsigned>(std::lround(v * maxval));
        if (maxval >= 256) out.push_back(static_cast<unsigned char>(q >> 8));
        out.push_back(static_cast<unsigned char>(q & 0xff));
    }
    return out;
}

}  // namespace qubomatch

#pragma once

#include <string>
#include <vector>

namespace asepqj {

// 17 significant digits: lossless round trip for 64-bit floats
std::string format_double(double v);

// fixed-width text table plus a CSV twin of the same cells
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string to_text() const;
    std::string to_csv() const;
};

void write_file(const std::string& path, const std::string& content);

}  // namespace asepqj

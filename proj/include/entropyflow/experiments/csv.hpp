// CSV emission and atomic file writes for experiment outputs.
//
// Numbers are printed with 17 significant digits so every double round-trips;
// golden-file diffing relies on the fixed header order, UTF-8 and LF endings.

#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "entropyflow/core/error.hpp"

namespace entropyflow {

inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

class CsvBuilder {
public:
    explicit CsvBuilder(std::vector<std::string> header) : columns_(header.size()) {
        out_ = join(header);
    }

    CsvBuilder& add_row(const std::vector<std::string>& cells) {
        require(cells.size() == columns_, ErrorKind::NumericalFailure,
                "CSV row width does not match the header");
        out_ += join(cells);
        ++rows_;
        return *this;
    }

    std::size_t rows() const noexcept { return rows_; }
    const std::string& str() const noexcept { return out_; }

    static std::string cell(double x) { return format_double(x); }
    static std::string cell(bool b) { return b ? "true" : "false"; }
    static std::string cell(std::size_t n) { return std::to_string(n); }

private:
    static std::string join(const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) line += ',';
            line += cells[i];
        }
        line += '\n';
        return line;
    }

    std::size_t columns_;
    std::size_t rows_ = 0;
    std::string out_;
};

/// Write-temp-then-rename so a crash never leaves a half-written output.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        require(out.good(), ErrorKind::ConfigError, "cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        require(out.good(), ErrorKind::ConfigError, "short write to " + tmp.string());
    }
    fs::rename(tmp, path);
}

} // namespace entropyflow

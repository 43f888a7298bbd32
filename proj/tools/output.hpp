// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 gwpwave contributors

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace gwpcli {

/// Shortest decimal that round-trips to the same binary64.
std::string format_double(double v);
inline std::string format_optional(std::optional<double> v) { return v ? format_double(*v) : std::string(); }

/// CSV text: one '#' comment line, a header row, then data rows.
class CsvWriter {
public:
    CsvWriter(std::string comment, std::vector<std::string> header);
    void row(const std::vector<std::string>& cells);
    void row(const std::vector<double>& cells);
    std::string str() const { return text_; }

private:
    std::size_t columns_;
    std::string text_;
};

/// Writes to a temporary sibling and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// 8-bit binary graymap of `magnitude` (row-major, ny rows of nx), scaled so
/// the peak maps to 255.
std::string pgm_image(const std::vector<double>& magnitude, std::size_t nx, std::size_t ny);

}  // namespace gwpcli

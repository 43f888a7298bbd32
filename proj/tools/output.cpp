// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 gwpwave contributors

#include "output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include <unistd.h>

namespace gwpcli {

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

CsvWriter::CsvWriter(std::string comment, std::vector<std::string> header) : columns_(header.size()) {
    text_ = "# " + comment + "\n";
    row(header);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_) throw std::logic_error("CsvWriter: row width does not match the header");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) text_ += ',';
        text_ += cells[i];
    }
    text_ += '\n';
}

void CsvWriter::row(const std::vector<double>& cells) {
    std::vector<std::string> s;
    s.reserve(cells.size());
    for (double v : cells) s.push_back(format_double(v));
    row(s);
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

std::string pgm_image(const std::vector<double>& magnitude, std::size_t nx, std::size_t ny) {
    if (magnitude.size() != nx * ny) throw std::logic_error("pgm_image: size mismatch");
    const double peak = magnitude.empty() ? 0.0 : *std::max_element(magnitude.begin(), magnitude.end());
    std::string img = "P5\n" + std::to_string(nx) + " " + std::to_string(ny) + "\n255\n";
    img.reserve(img.size() + magnitude.size());
    for (double v : magnitude) {
        const double s = peak > 0.0 && std::isfinite(v) ? std::clamp(v / peak, 0.0, 1.0) : 0.0;
        img.push_back(static_cast<char>(static_cast<unsigned char>(std::lround(255.0 * s))));
    }
    return img;
}

}  // namespace gwpcli

// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 gwpwave contributors

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gwp/metrics.hpp"
#include "gwp/packet.hpp"

namespace gwpcli {

/// Bad config file, bad flag value or inconsistent parameters (exit 2).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Flat dotted-key map, e.g. packet.p=0.5 or grid.nx=256.
using KeyValues = std::map<std::string, std::string>;

/// Reads UTF-8 key=value lines; '#' starts a comment, blank lines are skipped.
KeyValues read_config_file(const std::filesystem::path& path);

/// Every key the tool understands, with its default.
const KeyValues& default_keys();

enum class Command { render, metrics, sweep, cwt_analyze, cwt_roundtrip, verify, sources };

struct GridConfig {
    std::size_t nx = 256;
    std::size_t ny = 256;
    /// Empty means the default window around the packet.
    std::vector<double> extent;
};

struct SweepConfig {
    gwp::SweepMode mode = gwp::SweepMode::fixed_eps_over_gamma;
    std::vector<double> values;
    std::vector<double> sqrt_p;
};

struct CwtConfig {
    std::size_t scales = 32;
    std::optional<double> scale_min;
    std::optional<double> scale_max;
    /// 0 chooses the count from the angular resolving power.
    std::size_t angles = 0;
};

struct RunConfig {
    Command command = Command::render;
    gwp::PacketParams params = gwp::PacketParams::planar(0.5, 0.5, 0.25, 1.0);
    double t = 0.0;
    GridConfig grid;
    SweepConfig sweep;
    CwtConfig cwt;
    std::filesystem::path input;
    std::filesystem::path out = ".";
    bool pgm = false;
    std::vector<int> criteria;
    std::map<std::string, double> tolerances;
};

/// Builds the run configuration from defaults overlaid by `kv`. Unknown keys
/// and malformed values throw ConfigError.
RunConfig build_config(Command command, const KeyValues& kv);

/// Comma list of reals; each entry may be a fraction a/b.
std::vector<double> parse_real_list(const std::string& key, const std::string& text);
double parse_real(const std::string& key, const std::string& text);

}  // namespace gwpcli

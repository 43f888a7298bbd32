// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 gwpwave contributors

#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

namespace gwpcli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& text) {
    const std::string s = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw ConfigError(key + ": not a number: '" + text + "'");
    }
    return v;
}

std::size_t parse_count(const std::string& key, const std::string& text) {
    const double v = parse_real(key, text);
    if (!(v >= 1.0) || v != std::floor(v) || v > 1e8) throw ConfigError(key + ": expected a positive integer");
    return static_cast<std::size_t>(v);
}

bool parse_bool(const std::string& key, const std::string& text) {
    const std::string s = trim(text);
    if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
    if (s == "0" || s == "false" || s == "no" || s == "off") return false;
    throw ConfigError(key + ": expected a boolean");
}

}  // namespace

double parse_real(const std::string& key, const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return parse_number(key, text);
    const double num = parse_number(key, text.substr(0, slash));
    const double den = parse_number(key, text.substr(slash + 1));
    if (den == 0.0) throw ConfigError(key + ": zero denominator");
    return num / den;
}

std::vector<double> parse_real_list(const std::string& key, const std::string& text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!trim(item).empty()) out.push_back(parse_real(key, item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

KeyValues read_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    KeyValues kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected key=value");
        }
        const std::string key = trim(line.substr(0, eq));
        if (key.empty()) throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": empty key");
        kv[key] = trim(line.substr(eq + 1));
    }
    return kv;
}

const KeyValues& default_keys() {
    static const KeyValues keys = {
        {"packet.p", "0.5"},        {"packet.nu", "0.5"},       {"packet.gamma", "0.25"},
        {"packet.eps", "1"},        {"packet.c", "1"},          {"packet.dim", "2"},
        {"packet.t", "0"},          {"grid.nx", "256"},         {"grid.ny", "256"},
        {"grid.extent", ""},        {"sweep.mode", "eps-over-gamma"},
        {"sweep.values", ""},       {"sweep.sqrt_p", "1,1.5,2,2.5,3,3.5,4,4.5,5,5.5,6,6.5,7,7.5,8"},
        {"cwt.scales", "32"},       {"cwt.scale_min", ""},      {"cwt.scale_max", ""},
        {"cwt.angles", "0"},        {"io.input", ""},           {"io.out", "."},
        {"render.pgm", "false"},    {"verify.criteria", ""},    {"tol.quadrature", "1e-12"},
    };
    return keys;
}

RunConfig build_config(Command command, const KeyValues& overrides) {
    KeyValues kv = default_keys();
    for (const auto& [k, v] : overrides) {
        if (!kv.count(k)) throw ConfigError("unknown config key '" + k + "'");
        kv[k] = v;
    }
    RunConfig rc;
    rc.command = command;

    const int dim = static_cast<int>(parse_count("packet.dim", kv["packet.dim"]));
    if (dim < 2) throw ConfigError("packet.dim: must be at least 2");
    std::vector<double> eps = parse_real_list("packet.eps", kv["packet.eps"]);
    if (eps.size() == 1) eps.assign(static_cast<std::size_t>(dim - 1), eps.front());
    if (static_cast<int>(eps.size()) != dim - 1) {
        throw ConfigError("packet.eps: expected 1 or " + std::to_string(dim - 1) + " values for dimension " +
                          std::to_string(dim));
    }
    try {
        rc.params = gwp::PacketParams(parse_real("packet.p", kv["packet.p"]), parse_real("packet.nu", kv["packet.nu"]),
                                      parse_real("packet.gamma", kv["packet.gamma"]), eps,
                                      parse_real("packet.c", kv["packet.c"]));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    rc.t = parse_real("packet.t", kv["packet.t"]);

    rc.grid.nx = parse_count("grid.nx", kv["grid.nx"]);
    rc.grid.ny = parse_count("grid.ny", kv["grid.ny"]);
    rc.grid.extent = parse_real_list("grid.extent", kv["grid.extent"]);
    if (rc.grid.extent.size() == 1) rc.grid.extent.push_back(rc.grid.extent.front());
    if (!rc.grid.extent.empty() && (rc.grid.extent.size() != 2 || !(rc.grid.extent[0] > 0) || !(rc.grid.extent[1] > 0))) {
        throw ConfigError("grid.extent: expected one or two positive values");
    }

    const std::string mode = kv["sweep.mode"];
    if (mode == "eps-over-gamma") {
        rc.sweep.mode = gwp::SweepMode::fixed_eps_over_gamma;
    } else if (mode == "kappa-eps") {
        rc.sweep.mode = gwp::SweepMode::fixed_kappa_eps;
    } else {
        throw ConfigError("sweep.mode: expected eps-over-gamma or kappa-eps");
    }
    rc.sweep.values = parse_real_list("sweep.values", kv["sweep.values"]);
    if (rc.sweep.values.empty()) rc.sweep.values = gwp::figure_family_values(rc.sweep.mode);
    rc.sweep.sqrt_p = parse_real_list("sweep.sqrt_p", kv["sweep.sqrt_p"]);
    for (double v : rc.sweep.values) {
        if (!(v > 0.0)) throw ConfigError("sweep.values: entries must be positive");
    }
    for (double v : rc.sweep.sqrt_p) {
        if (!(v > 0.0)) throw ConfigError("sweep.sqrt_p: entries must be positive");
    }

    rc.cwt.scales = parse_count("cwt.scales", kv["cwt.scales"]);
    if (!kv["cwt.scale_min"].empty()) rc.cwt.scale_min = parse_real("cwt.scale_min", kv["cwt.scale_min"]);
    if (!kv["cwt.scale_max"].empty()) rc.cwt.scale_max = parse_real("cwt.scale_max", kv["cwt.scale_max"]);
    if (rc.cwt.scale_min && !(*rc.cwt.scale_min > 0.0)) throw ConfigError("cwt.scale_min: must be positive");
    if (rc.cwt.scale_max && !(*rc.cwt.scale_max > rc.cwt.scale_min.value_or(0.0))) {
        throw ConfigError("cwt.scale_max: must exceed cwt.scale_min");
    }
    const double angles = parse_real("cwt.angles", kv["cwt.angles"]);
    if (!(angles >= 0.0) || angles != std::floor(angles)) throw ConfigError("cwt.angles: expected a count");
    rc.cwt.angles = static_cast<std::size_t>(angles);

    rc.input = kv["io.input"];
    rc.out = kv["io.out"];
    rc.pgm = parse_bool("render.pgm", kv["render.pgm"]);
    for (double v : parse_real_list("verify.criteria", kv["verify.criteria"])) {
        if (v < 1 || v > 11 || v != std::floor(v)) throw ConfigError("verify.criteria: expected ids 1..11");
        rc.criteria.push_back(static_cast<int>(v));
    }
    const double tq = parse_real("tol.quadrature", kv["tol.quadrature"]);
    if (!(tq > 0.0)) throw ConfigError("tol.quadrature: must be positive");
    rc.tolerances["quadrature"] = tq;
    return rc;
}

}  // namespace gwpcli

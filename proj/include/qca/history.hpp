#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qca/eca.hpp"

namespace qca {

// Space-time history of one ring: row t = configuration after t cycles.
struct SpaceTimeHistory {
    int n = 0;
    std::vector<Config> rows;

    int steps() const { return static_cast<int>(rows.size()) - 1; }
};

// Rows 0..upto_t as ASCII '0'/'1', row-major, no separators.
inline std::string encode_history(const SpaceTimeHistory& h, int upto_t) {
    if (upto_t < 0 || upto_t > h.steps()) throw std::invalid_argument("upto_t outside history");
    std::string s;
    s.reserve(static_cast<std::size_t>(upto_t + 1) * static_cast<std::size_t>(h.n));
    for (int t = 0; t <= upto_t; ++t) s += h.rows[static_cast<std::size_t>(t)].to_string();
    return s;
}

// P1 portable bitmap, one image row per time step. Bit 1 renders black.
inline void write_pbm(const SpaceTimeHistory& h, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << "P1\n" << h.n << " " << h.rows.size() << "\n";
    for (const auto& row : h.rows) {
        for (int i = 0; i < h.n; ++i) {
            f << row.get(i);
            f << (i + 1 == h.n ? '\n' : ' ');
        }
    }
}

} // namespace qca

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qca {

// Lookup table for one elementary CA rule. table[k] is the output bit for the
// 3-site neighborhood whose integer value is k = 4*left + 2*center + 1*right.
struct RuleSet {
    int number = 0;
    std::array<std::uint8_t, 8> table{};
};

inline RuleSet rule_from_number(int number) {
    if (number < 0 || number > 255)
        throw std::invalid_argument("rule number must be in [0,255]");
    RuleSet r;
    r.number = number;
    for (int k = 0; k < 8; ++k) r.table[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>((number >> k) & 1);
    return r;
}

// Bitwise complement of all inputs and outputs; an involution.
inline RuleSet complement_rule(const RuleSet& r) {
    RuleSet c;
    for (int k = 0; k < 8; ++k) c.table[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(1 - r.table[static_cast<std::size_t>(7 - k)]);
    c.number = 0;
    for (int k = 7; k >= 0; --k) c.number = (c.number << 1) | c.table[static_cast<std::size_t>(k)];
    return c;
}

// Ring of up to 64 binary cells, packed. Site 0 is the head; site index
// increases rightward; bit i of `bits` holds site i. Periodic boundary.
struct Config {
    std::uint64_t bits = 0;
    int n = 0;

    Config() = default;
    Config(std::uint64_t b, int sites) : bits(b), n(sites) {
        if (sites < 3 || sites > 64) throw std::invalid_argument("ring size must be in [3,64]");
        bits &= mask();
    }

    std::uint64_t mask() const { return n == 64 ? ~0ULL : ((1ULL << n) - 1); }
    int get(int i) const { return static_cast<int>((bits >> i) & 1); }
    void set(int i, int v) {
        bits = (bits & ~(1ULL << i)) | (static_cast<std::uint64_t>(v & 1) << i);
    }
    Config complemented() const { return Config(~bits & mask(), n); }

    // cyclic shift: site i of the result holds site (i-1) of the input
    Config shifted() const {
        return Config(((bits << 1) | (bits >> (n - 1))) & mask(), n);
    }

    bool operator==(const Config&) const = default;

    std::string to_string() const {
        std::string s(static_cast<std::size_t>(n), '0');
        for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = static_cast<char>('0' + get(i));
        return s;
    }
    static Config from_string(const std::string& s) {
        Config c(0, static_cast<int>(s.size()));
        for (int i = 0; i < c.n; ++i) c.set(i, s[static_cast<std::size_t>(i)] == '1');
        return c;
    }
};

// One synchronous ECA update, word-parallel over the packed ring.
inline Config step(const RuleSet& r, const Config& c) {
    const std::uint64_t m = c.mask();
    const std::uint64_t b = c.bits;
    const int n = c.n;
    // lw bit i = site i-1, rw bit i = site i+1 (periodic)
    const std::uint64_t lw = ((b << 1) | (b >> (n - 1))) & m;
    const std::uint64_t rw = ((b >> 1) | (b << (n - 1))) & m;
    std::uint64_t out = 0;
    for (int k = 0; k < 8; ++k) {
        if (!r.table[static_cast<std::size_t>(k)]) continue;
        const std::uint64_t t = ((k & 4) ? lw : ~lw) & ((k & 2) ? b : ~b) & ((k & 1) ? rw : ~rw);
        out |= t;
    }
    return Config(out & m, n);
}

// j-th reflected-binary Gray code word of width N; LSB of the code sits at
// the ring's tail (site N-1).
inline Config gray_code_config(std::uint64_t j, int n) {
    if (n < 3 || n > 63) throw std::invalid_argument("ring size must be in [3,63]");
    if (j >= (1ULL << n)) throw std::invalid_argument("gray index out of range");
    const std::uint64_t g = j ^ (j >> 1);
    Config c(0, n);
    for (int i = 0; i < n; ++i) c.set(i, static_cast<int>((g >> (n - 1 - i)) & 1));
    return c;
}

// Noise-free orbit: rows 0..steps, row 0 = c0.
inline std::vector<Config> orbit(const RuleSet& r, const Config& c0, int steps) {
    std::vector<Config> rows;
    rows.reserve(static_cast<std::size_t>(steps) + 1);
    rows.push_back(c0);
    Config c = c0;
    for (int t = 0; t < steps; ++t) {
        c = step(r, c);
        rows.push_back(c);
    }
    return rows;
}

} // namespace qca

#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qca {

inline constexpr const char* kVersion = "0.1.0";

// Flat key=value configuration: one pair per line, '#' comments, keys carry
// their units (e.g. gamma_per_time). Chosen over a structured format so runs
// diff cleanly and hash deterministically.
struct RunConfig {
    std::map<std::string, std::string> kv;

    static RunConfig parse_stream(std::istream& in) {
        RunConfig c;
        std::string line;
        while (std::getline(in, line)) {
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            const auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            auto trim = [](std::string s) {
                const auto a = s.find_first_not_of(" \t\r");
                const auto b = s.find_last_not_of(" \t\r");
                return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
            };
            const std::string k = trim(line.substr(0, eq));
            const std::string v = trim(line.substr(eq + 1));
            if (!k.empty()) c.kv[k] = v;
        }
        return c;
    }
    static RunConfig parse_file(const std::string& path) {
        std::ifstream f(path);
        if (!f) throw std::runtime_error("cannot open config " + path);
        return parse_stream(f);
    }

    bool has(const std::string& k) const { return kv.count(k) != 0; }
    std::string str(const std::string& k, const std::string& dflt) const {
        auto it = kv.find(k);
        return it == kv.end() ? dflt : it->second;
    }
    double num(const std::string& k, double dflt) const {
        auto it = kv.find(k);
        return it == kv.end() ? dflt : std::stod(it->second);
    }
    long integer(const std::string& k, long dflt) const {
        auto it = kv.find(k);
        return it == kv.end() ? dflt : std::stol(it->second);
    }
    std::vector<double> num_list(const std::string& k, std::vector<double> dflt) const {
        auto it = kv.find(k);
        if (it == kv.end()) return dflt;
        std::vector<double> out;
        std::stringstream ss(it->second);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
        if (out.empty()) throw std::runtime_error("empty list for key " + k);
        return out;
    }

    // FNV-1a over the sorted normalized key=value lines; identical configs
    // hash identically regardless of comment/whitespace layout.
    std::uint64_t hash() const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        auto mix = [&h](const std::string& s) {
            for (unsigned char ch : s) { h ^= ch; h *= 0x100000001b3ULL; }
        };
        for (const auto& [k, v] : kv) { mix(k); mix("="); mix(v); mix("\n"); }
        return h;
    }
};

// Shortest round-trip decimal representation of a double.
inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    double back = 0;
    std::sscanf(buf, "%lf", &back);
    for (int prec = 15; prec <= 16; ++prec) {
        char shorter[40];
        std::snprintf(shorter, sizeof shorter, "%.*g", prec, v);
        std::sscanf(shorter, "%lf", &back);
        if (back == v) return shorter;
    }
    return buf;
}

// CSV with '#'-prefixed provenance header; no timestamps, so identical runs
// produce byte-identical files.
class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::vector<std::string>& columns,
              const RunConfig& cfg, std::uint64_t seed)
        : f_(path), ncols_(columns.size()) {
        if (!f_) throw std::runtime_error("cannot open " + path);
        f_ << "# version=" << kVersion << "\n";
        char hex[20];
        std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(cfg.hash()));
        f_ << "# config_hash=" << hex << "\n";
        f_ << "# master_seed=" << seed << "\n";
        for (std::size_t i = 0; i < columns.size(); ++i)
            f_ << columns[i] << (i + 1 == columns.size() ? "\n" : ",");
    }

    void row(const std::vector<std::string>& cells) {
        if (cells.size() != ncols_) throw std::runtime_error("csv row width mismatch");
        for (std::size_t i = 0; i < cells.size(); ++i)
            f_ << cells[i] << (i + 1 == cells.size() ? "\n" : ",");
    }

  private:
    std::ofstream f_;
    std::size_t ncols_;
};

} // namespace qca

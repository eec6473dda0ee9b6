#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qca/history.hpp"
#include "qca/io.hpp"

using namespace qca;

TEST_CASE("config parsing") {
    std::stringstream ss(
        "# comment line\n"
        "rule = 137\n"
        "gamma_per_time=1.0   # trailing comment\n"
        "t_c_list = 4,10\n"
        "\n"
        "outdir = out\n");
    const RunConfig c = RunConfig::parse_stream(ss);
    CHECK(c.integer("rule", 0) == 137);
    CHECK(c.num("gamma_per_time", 0) == doctest::Approx(1.0));
    CHECK(c.str("outdir", "") == "out");
    CHECK(c.num_list("t_c_list", {}) == std::vector<double>({4.0, 10.0}));
    CHECK(c.num("missing", 7.5) == doctest::Approx(7.5));
}

TEST_CASE("config hash ignores layout, tracks content") {
    std::stringstream a("x=1\ny=2\n"), b("y = 2  # note\n\nx =1\n"), c("x=1\ny=3\n");
    const auto ha = RunConfig::parse_stream(a).hash();
    const auto hb = RunConfig::parse_stream(b).hash();
    const auto hc = RunConfig::parse_stream(c).hash();
    CHECK(ha == hb);
    CHECK(ha != hc);
}

TEST_CASE("csv writer is deterministic") {
    RunConfig cfg;
    cfg.kv["rule"] = "110";
    auto write_once = [&](const std::string& path) {
        CsvWriter w(path, {"t", "value"}, cfg, 42);
        w.row({"0", fmt_double(0.25)});
        w.row({"1", fmt_double(1.0 / 3.0)});
    };
    write_once("io_test_a.csv");
    write_once("io_test_b.csv");
    auto slurp = [](const std::string& p) {
        std::ifstream f(p);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    const std::string a = slurp("io_test_a.csv");
    CHECK(a == slurp("io_test_b.csv"));
    CHECK(a.find("# master_seed=42") != std::string::npos);
    CHECK(a.find("t,value") != std::string::npos);
    std::remove("io_test_a.csv");
    std::remove("io_test_b.csv");
}

TEST_CASE("fmt_double round-trips") {
    for (double v : {0.1, 1.0 / 3.0, 1e-17, 123456.789, -0.0, 5.0}) {
        const std::string s = fmt_double(v);
        CHECK(std::stod(s) == v);
    }
}

TEST_CASE("pbm export") {
    SpaceTimeHistory h;
    h.n = 3;
    h.rows = {Config::from_string("010"), Config::from_string("101")};
    write_pbm(h, "io_test.pbm");
    std::ifstream f("io_test.pbm");
    std::string magic, w, ht;
    f >> magic >> w >> ht;
    CHECK(magic == "P1");
    CHECK(w == "3");
    CHECK(ht == "2");
    std::remove("io_test.pbm");
}

#include <doctest.h>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qpwalk/io.hpp"

using namespace qpwalk;

namespace {
std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}
}  // namespace

TEST_CASE("doubles round-trip at 17 significant digits") {
    for (double v : {1.0 / 3.0, 0.1, 2.598076211353316, 6.1e-9, -0.0, 1e300}) {
        const std::string s = format_double(v);
        double back = 0.0;
        std::from_chars(s.data(), s.data() + s.size(), back);
        CHECK(back == v);
        CHECK(s.find(',') == std::string::npos);
    }
}

TEST_CASE("exact dp rows print reduced fractions") {
    const AbsorptionTable t = dp_absorption(1, 1, 2, DpMode::exact);
    const auto rows = table_rows(t);
    REQUIRE(rows.size() == 3);  // k = 0, 1, 2
    CHECK(rows[1] == std::vector<std::string>{"1", "1/3", "1/3", "2/3", "1/3"});
    CHECK(rows[2] == std::vector<std::string>{"2", "1/18", "1/18", "1/9", "2/9"});
}

TEST_CASE("csv emission: header-only for empty records, deterministic bytes") {
    const std::filesystem::path dir = std::filesystem::temp_directory_path();
    const std::string p1 = (dir / "qpwalk_io_a.csv").string();
    const std::string p2 = (dir / "qpwalk_io_b.csv").string();
    const size_t n = emit_csv(p1, {"k", "prob"}, {});
    CHECK(slurp(p1) == "k,prob\n");
    CHECK(n == 7);

    const AbsorptionTable t = dp_absorption(2, 1, 40, DpMode::floating);
    emit_csv(p1, {"k", "p_S", "p_T", "p_tau", "survival"}, table_rows(t));
    emit_csv(p2, {"k", "p_S", "p_T", "p_tau", "survival"}, table_rows(t));
    CHECK(slurp(p1) == slurp(p2));
    std::filesystem::remove(p1);
    std::filesystem::remove(p2);
}

TEST_CASE("mc summary json has stable key order and deterministic bytes") {
    McSummary s;
    s.trials = 10;
    s.seed = 3;
    s.cap = 1000;
    s.kmax = 2;
    s.pmf = {0.0, 0.5, 0.2};
    s.mean = 1.75;
    const std::string j1 = mc_summary_json(s);
    const std::string j2 = mc_summary_json(s);
    CHECK(j1 == j2);
    CHECK(j1.find("\"trials\"") < j1.find("\"seed\""));
    CHECK(j1.find("\"seed\"") < j1.find("\"pmf\""));
    CHECK(j1.find("\"pmf\"") < j1.find("\"mean\""));
}

TEST_CASE("site rows carry axis tags and only nonzero masses") {
    const AbsorptionTable t = dp_absorption(1, 1, 2, DpMode::exact, true);
    const auto rows = site_rows(t);
    REQUIRE(!rows.empty());
    for (const auto& r : rows) {
        REQUIRE(r.size() == 4);
        CHECK((r[1] == "x" || r[1] == "y"));
        CHECK(r[3] != "0");
    }
    // k=1: (1,0) and (2,0) at 1/6 each
    bool found = false;
    for (const auto& r : rows)
        if (r[0] == "1" && r[1] == "x" && r[2] == "2") {
            CHECK(r[3] == "1/6");
            found = true;
        }
    CHECK(found);
}

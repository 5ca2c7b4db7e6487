#include <catch2/catch_amalgamated.hpp>

#include <qrac/sweep.hpp>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

using namespace qrac;

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

SweepSpec small_spec() {
    SweepSpec spec;
    spec.channels = {ChannelKind::Depolarizing, ChannelKind::DitFlip};
    spec.dims = {2, 3};
    spec.gamma_t_start = 0.0;
    spec.gamma_t_stop = 0.5;
    spec.gamma_t_step = 0.1;
    return spec;
}

} // namespace

TEST_CASE("sweep record evaluation") {
    SECTION("baseline record fields") {
        const SweepRecord rec = evaluate_record(ChannelKind::Depolarizing, 2, 0.0, false);
        CHECK(rec.channel == "depolarizing");
        CHECK(rec.d == 2);
        CHECK(rec.p == 0.0);
        CHECK(rec.pq == Catch::Approx(0.5 * (1.0 + 1.0 / std::sqrt(2.0))).margin(1e-12));
        CHECK(rec.pc == 0.75);
        CHECK(std::abs(rec.ratio - rec.pq / rec.pc) < 1e-14);
        CHECK(rec.optimized == 0);
        CHECK(rec.iterations == 0);
        CHECK(rec.povm_deviation < 1e-12);
    }

    SECTION("optimized record reports iterations") {
        const SweepRecord rec = evaluate_record(ChannelKind::DitFlip, 2, 0.5, true);
        CHECK(rec.optimized == 1);
        CHECK(rec.iterations >= 1);
        CHECK(rec.pq >= evaluate_record(ChannelKind::DitFlip, 2, 0.5, false).pq - 1e-10);
    }
}

TEST_CASE("sweep ordering and determinism") {
    const SweepSpec spec = small_spec();
    const auto records = run_sweep(spec);
    REQUIRE(records.size() == 2 * 2 * 6);

    SECTION("deterministic (channel, d, gamma_t) order") {
        std::size_t i = 0;
        for (const char* name : {"depolarizing", "ditflip"})
            for (std::size_t d : {2, 3})
                for (int k = 0; k <= 5; ++k, ++i) {
                    CHECK(records[i].channel == name);
                    CHECK(records[i].d == d);
                    CHECK(records[i].gamma_t == Catch::Approx(0.1 * k).margin(1e-12));
                }
    }

    SECTION("thread fan-out does not change results") {
        const auto parallel = run_sweep(spec, 4);
        REQUIRE(parallel.size() == records.size());
        for (std::size_t i = 0; i < records.size(); ++i) {
            CHECK(parallel[i].channel == records[i].channel);
            CHECK(parallel[i].pq == records[i].pq);
            CHECK(parallel[i].ratio == records[i].ratio);
        }
    }

    SECTION("byte-identical CSV across runs") {
        std::ostringstream a, b;
        write_csv(a, run_sweep(spec, 3));
        write_csv(b, run_sweep(spec, 1));
        CHECK(a.str() == b.str());
    }
}

TEST_CASE("csv format") {
    const SweepSpec spec = small_spec();
    std::ostringstream out;
    write_csv(out, run_sweep(spec));
    const std::string text = out.str();
    const auto rows = lines_of(text);

    SECTION("header and shape") {
        REQUIRE(!rows.empty());
        CHECK(rows[0] == "channel,d,gamma_t,p,pq,pc,ratio,optimized,iterations,povm_deviation");
        CHECK(rows.size() == 1 + 24);
        CHECK(text.find('\r') == std::string::npos);
        CHECK(text.back() == '\n');
    }

    SECTION("fields are parseable and self-consistent") {
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const auto f = split(rows[i]);
            REQUIRE(f.size() == 10);
            const double pq = std::strtod(f[4].c_str(), nullptr);
            const double pc = std::strtod(f[5].c_str(), nullptr);
            const double ratio = std::strtod(f[6].c_str(), nullptr);
            // The ratio column is printed from the already-printed pq and pc,
            // so the only re-parse residual is the ratio's own 12-significant-
            // digit rounding: absolute step 1e-11 for ratios in [1, 10), hence
            // at most 5e-12 (and 5e-13 below 1).
            CHECK(std::abs(ratio - pq / pc) <= 5.0e-12);
            CHECK(std::isfinite(pq));
            CHECK(std::isfinite(ratio));
            const int optimized = std::atoi(f[7].c_str());
            CHECK((optimized == 0 || optimized == 1));
        }
    }

    SECTION("12 significant digits in numeric fields") {
        bool found = false;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const auto f = split(rows[i]);
            if (f[0] == "depolarizing" && f[1] == "2" && f[2] == "0") {
                CHECK(f[4] == "0.853553390593");
                CHECK(f[5] == "0.75");
                CHECK(f[6] == "1.13807118746");
                found = true;
            }
        }
        CHECK(found);
    }
}

TEST_CASE("csv file writing") {
    const SweepSpec spec = small_spec();
    const std::string path = "sweep_test_out.csv";
    write_csv_file(path, run_sweep(spec));
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::string first;
    std::getline(in, first);
    CHECK(first == csv_header);
    in.close();
    std::remove(path.c_str());

    CHECK_THROWS_AS(write_csv_file("no/such/dir/out.csv", {}), std::runtime_error);
}

TEST_CASE("sweep spec validation") {
    SweepSpec spec = small_spec();
    spec.channels.clear();
    CHECK_THROWS_AS(run_sweep(spec), std::domain_error);

    spec = small_spec();
    spec.dims = {1};
    CHECK_THROWS_AS(run_sweep(spec), std::domain_error);

    spec = small_spec();
    spec.gamma_t_step = 0.0;
    CHECK_THROWS_AS(run_sweep(spec), std::domain_error);

    spec = small_spec();
    spec.gamma_t_stop = spec.gamma_t_start;
    CHECK_THROWS_AS(run_sweep(spec), std::domain_error);

    spec = small_spec();
    spec.gamma_t_start = -0.5;
    CHECK_THROWS_AS(run_sweep(spec), std::domain_error);
}

TEST_CASE("baseline depolarizing sweep is monotone in the ratio column") {
    SweepSpec spec;
    spec.channels = {ChannelKind::Depolarizing};
    spec.dims = {2};
    spec.gamma_t_start = 0.0;
    spec.gamma_t_stop = 2.0;
    spec.gamma_t_step = 0.01;
    const auto records = run_sweep(spec);
    REQUIRE(records.size() == 201);
    for (std::size_t i = 1; i < records.size(); ++i)
        CHECK(records[i].ratio <= records[i - 1].ratio + 1e-12);
}

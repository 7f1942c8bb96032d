#include <doctest.h>

#include <cstring>

#include "zescat/sweep.hpp"

using namespace zescat;

TEST_CASE("grid enumeration order") {
    const SweepGrid g{{2, 3}, {0.5, 1.0}, {1.0, 4.0}, 1};
    const auto ch = g.channels();
    REQUIRE(ch.size() == 16);
    CHECK(ch[0].first == PotentialParams{2, 0.5, 1.0});
    CHECK(ch[0].second == 0);
    CHECK(ch[1].second == 1);
    CHECK(ch[2].first == PotentialParams{2, 0.5, 4.0});
    CHECK(ch[15].first == PotentialParams{3, 1.0, 4.0});
    CHECK(g.parameter_sets().size() == 8);
}

TEST_CASE("default lemma grid") {
    const SweepGrid g = SweepGrid::lemma_default();
    CHECK(g.dims == std::vector<int>{2, 3, 4, 5});
    CHECK(g.mus == std::vector<double>{0.3, 0.5, 1.0, 1.5, 1.9});
    CHECK(g.alphas == std::vector<double>{0.5, 1.0, 4.0});
    CHECK(g.max_l == 6);
    CHECK(g.channels().size() == 420);
}

TEST_CASE("parallel identity sweep equals the serial reference") {
    const SweepGrid g{{2, 3, 4, 5, 6}, {0.1, 0.3, 0.5, 1.0, 1.5, 1.9}, {1.0}, 100};
    const auto s = identity_sweep_serial(g);
    const auto p = identity_sweep_parallel(g);
    REQUIRE(s.size() == p.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(s[i].params == p[i].params);
        CHECK(std::memcmp(&s[i].max_difference, &p[i].max_difference, sizeof(double)) == 0);
        for (std::size_t j = 0; j < s[i].rows.size(); ++j)
            CHECK(std::memcmp(&s[i].rows[j].via_phase, &p[i].rows[j].via_phase, sizeof(std::complex<double>)) == 0);
    }
}

TEST_CASE("parallel lemma sweep equals the serial reference") {
    const SweepGrid g{{2, 4}, {0.5, 1.5}, {1.0}, 2};
    const auto s = lemma_sweep_serial(g);
    const auto p = lemma_sweep_parallel(g);
    REQUIRE(s.size() == p.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(s[i].ok());
        CHECK(s[i].params == p[i].params);
        CHECK(s[i].l == p[i].l);
        CHECK(std::memcmp(&s[i].numeric, &p[i].numeric, sizeof(PhaseAmplitude)) == 0);
        CHECK(s[i].integrator_steps == p[i].integrator_steps);
        CHECK(passes(s[i], {}));
    }
}

TEST_CASE("pipeline failures are captured per channel") {
    numeric::PipelineOptions opt;
    opt.integrator.max_steps = 5;
    const LemmaCheck c = check_channel({3, 1.0, 1.0}, 0, opt);
    CHECK_FALSE(c.ok());
    CHECK_FALSE(passes(c, {}));
    const LemmaCheck bad = check_channel({1, 1.0, 1.0}, 0, {});
    CHECK_FALSE(bad.ok());
}

TEST_CASE("identity sweep rejects invalid parameters before running") {
    const SweepGrid g{{3}, {1.0, 2.0}, {1.0}, 3};
    CHECK_THROWS(identity_sweep_parallel(g));
}

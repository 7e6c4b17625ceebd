#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <numbers>

#include "circen/closed_form.hpp"
#include "circen/spectrum.hpp"
#include "oracles.hpp"

using namespace circen;
using circen::testing::naive_circulant_energy;

TEST_CASE("energy_c1_2") {
    CHECK(energy_c1_2(5) == 8.0);
    CHECK(energy_c1_2(6) == doctest::Approx(8.0).epsilon(1e-15));
    CHECK(std::fabs(energy_c1_2(100) - 165.4352475537251) < 1e-11);
    CHECK(std::fabs(energy_c1_2(100) - energy_direct(CirculantSpec(100, {1, 2})).energy) < 1e-9);
    CHECK_THROWS_AS(energy_c1_2(4), std::invalid_argument);
}

TEST_CASE("energy_c1_gamma") {
    CHECK(std::fabs(energy_c1_gamma(8, 3) - 8.0) < 1e-12);
    CHECK(std::fabs(energy_c1_gamma(7, 3) - 11.20775094321935) < 1e-12);
    CHECK(std::fabs(energy_c1_gamma(150, 8) - 243.1622004184237) < 1e-11);
    CHECK(std::fabs(energy_c1_gamma(150, 8) - energy_direct(CirculantSpec(150, {1, 8})).energy) < 1e-9);
    CHECK_THROWS_AS(energy_c1_gamma(20, 2), std::invalid_argument);
    CHECK_THROWS_AS(energy_c1_gamma(6, 3), std::invalid_argument);
}

TEST_CASE("energy_c1 dispatch and validity floor") {
    CHECK(energy_c1(5, 2) == energy_c1_2(5));
    CHECK(energy_c1(9, 4) == energy_c1_gamma(9, 4));
    CHECK_THROWS_AS(energy_c1(8, 4), std::invalid_argument);
    CHECK_THROWS_AS(energy_c1(10, 1), std::invalid_argument);
}

TEST_CASE("Theorem matches the naive energy sum") {
    for (std::int64_t gamma = 2; gamma <= 12; ++gamma)
        for (std::int64_t n = 2 * gamma + 1; n <= 160; ++n)
            CHECK(std::fabs(energy_c1(n, gamma) - naive_circulant_energy(n, {1, gamma})) < 1e-9);
}

TEST_CASE("energy_corollary") {
    CHECK(corollary_vertex_count(3, 1) == 16);
    CHECK(corollary_vertex_count(5, 2) == 96);
    CHECK(corollary_vertex_count(4, 1) == 30);
    CHECK(std::fabs(energy_corollary(3, 1) - energy_c1_gamma(16, 3)) < 1e-9);
    CHECK(std::fabs(energy_corollary(3, 1) - 22.78207252018059) < 1e-12);
    CHECK(std::fabs(energy_corollary(5, 2) - energy_c1_gamma(96, 5)) < 1e-9);
    CHECK(std::fabs(energy_corollary(5, 2) - 154.2940446287028) < 1e-11);
    CHECK(std::fabs(energy_corollary(4, 1) - energy_direct(CirculantSpec(30, {1, 4})).energy) < 1e-9);
    CHECK(std::fabs(energy_corollary(4, 1) - 47.21136084402166) < 1e-11);
    CHECK_THROWS_AS(energy_corollary(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(energy_corollary(3, 0), std::invalid_argument);
}

TEST_CASE("energy_knh_closed") {
    CHECK(std::fabs(energy_knh_closed(3)) < 1e-12);
    CHECK(std::fabs(energy_knh_closed(4) - 4.0) < 1e-12);
    CHECK(energy_knh_closed(10) > 18.0);
    CHECK(std::fabs(energy_knh_closed(10) - knh_energy_direct(10).energy) < 1e-9);
    CHECK(std::fabs(energy_knh_closed(9) - 15.51754096628727) < 1e-12);
    CHECK_THROWS_AS(energy_knh_closed(2), std::invalid_argument);
    for (std::int64_t n = 3; n <= 400; ++n)
        CHECK(std::fabs(energy_knh_closed(n) - testing::naive_knh_energy(n)) < 1e-9);
}

TEST_CASE("cos_sum_roots explicit lists") {
    const double pi = std::numbers::pi;
    auto check_list = [](std::int64_t gamma, std::vector<std::pair<int, int>> want) {
        const auto roots = cos_sum_roots(gamma);
        REQUIRE(roots.size() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i) {
            CHECK(roots[i].num == want[i].first);
            CHECK(roots[i].den == want[i].second);
        }
    };
    check_list(2, {{1, 3}, {1, 1}});
    check_list(3, {{1, 4}, {1, 2}, {3, 4}});
    check_list(4, {{1, 5}, {1, 3}, {3, 5}, {1, 1}});
    check_list(5, {{1, 6}, {1, 4}, {1, 2}, {3, 4}, {5, 6}});
    CHECK(cos_sum_roots(2)[0].value == doctest::Approx(pi / 3));
    CHECK(cos_sum_roots(4)[3].fraction() == "1 pi");
    CHECK(cos_sum_roots(4)[2].fraction() == "3/5 pi");
    CHECK_THROWS_AS(cos_sum_roots(1), std::invalid_argument);
}

TEST_CASE("cos_sum_roots: count, ordering, residual and sign alternation") {
    for (std::int64_t gamma = 2; gamma <= 200; ++gamma) {
        const auto roots = cos_sum_roots(gamma);
        REQUIRE(roots.size() == static_cast<std::size_t>(gamma));
        const auto f = [gamma](double x) { return std::cos(x) + std::cos(static_cast<double>(gamma) * x); };
        double prev = 0.0;
        for (const auto& r : roots) {
            CHECK(r.value > prev);
            CHECK(r.value <= std::numbers::pi);
            CHECK(std::fabs(f(r.value)) < 1e-12);
            prev = r.value;
        }
        CHECK(f(roots.front().value / 2) > 0.0);
        for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
            const double mid = 0.5 * (roots[i].value + roots[i + 1].value);
            CHECK((f(mid) > 0.0) == (i % 2 == 1));
        }
    }
}

TEST_CASE("is_hyperenergetic is strict") {
    CHECK_FALSE(is_hyperenergetic(8.0, 5));
    CHECK(is_hyperenergetic(std::nextafter(8.0, 9.0), 5));
    CHECK(is_hyperenergetic(energy_knh_closed(10), 10));
    CHECK_FALSE(is_hyperenergetic(energy_knh_closed(9), 9));
    for (std::int64_t n = 17; n <= 300; ++n) CHECK_FALSE(is_hyperenergetic(energy_c1_gamma(n, 8), n));
}

TEST_CASE("excess energy of K_n - H over K_n") {
    // E(K_n - H) - 2(n - 1) drops at n = 6 and n = 9 (exact values -2 and
    // -0.4824...) and increases strictly at every step from n = 9 on.
    const auto excess = [](std::int64_t n) { return energy_knh_closed(n) - complete_graph_energy(n); };
    CHECK(std::fabs(excess(6) + 2.0) < 1e-12);
    CHECK(std::fabs(excess(9) + 0.482459033712733) < 1e-12);
    for (std::int64_t n = 4; n <= 500; ++n) {
        const bool increases = excess(n) > excess(n - 1);
        CHECK(increases == (n != 6 && n != 9));
    }
}

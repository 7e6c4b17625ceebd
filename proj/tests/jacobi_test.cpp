#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <random>

#include "circen/spectrum.hpp"

using namespace circen;

TEST_CASE("Jacobi on small fixed matrices") {
    SymmetricMatrix id(3);
    for (std::size_t i = 0; i < 3; ++i) id(i, i) = 1.0;
    CHECK(jacobi_eigenvalues(id) == std::vector<double>{1.0, 1.0, 1.0});

    SymmetricMatrix k4(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) k4(i, j) = i == j ? 0.0 : 1.0;
    const auto e = jacobi_eigenvalues(k4);
    REQUIRE(e.size() == 4);
    for (int i = 0; i < 3; ++i) CHECK(e[i] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(e[3] == doctest::Approx(3.0).epsilon(1e-12));

    SymmetricMatrix two(2);
    two(0, 0) = 2.0;
    two(0, 1) = two(1, 0) = 1.0;
    two(1, 1) = 2.0;
    const auto t = jacobi_eigenvalues(two);
    CHECK(t[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(t[1] == doctest::Approx(3.0).epsilon(1e-14));

    CHECK(jacobi_eigenvalues(SymmetricMatrix(0)).empty());
}

TEST_CASE("Jacobi rejects bad input") {
    SymmetricMatrix a(2);
    a(0, 1) = 1.0;
    CHECK_THROWS_AS(jacobi_eigenvalues(a), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_eigenvalues(SymmetricMatrix(5), {.cap = 4}), std::invalid_argument);
}

TEST_CASE("Jacobi reports non-convergence") {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> dist;
    SymmetricMatrix a(12);
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = i; j < 12; ++j) a(i, j) = a(j, i) = dist(rng);
    CHECK_THROWS_AS(jacobi_eigenvalues(a, {.max_sweeps = 1}), ConvergenceError);
}

TEST_CASE("Jacobi preserves trace and Frobenius norm of random symmetric matrices") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> dist;
    for (std::size_t n : {1u, 2u, 5u, 17u, 40u}) {
        SymmetricMatrix a(n);
        double trace = 0.0;
        double frob = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                a(i, j) = a(j, i) = dist(rng);
                frob += (i == j ? 1.0 : 2.0) * a(i, j) * a(i, j);
            }
        for (std::size_t i = 0; i < n; ++i) trace += a(i, i);
        const auto e = jacobi_eigenvalues(a);
        CHECK(std::is_sorted(e.begin(), e.end()));
        double sum = 0.0;
        double sq = 0.0;
        for (double v : e) {
            sum += v;
            sq += v * v;
        }
        CHECK(sum == doctest::Approx(trace).epsilon(1e-10));
        CHECK(sq == doctest::Approx(frob).epsilon(1e-10));
    }
}

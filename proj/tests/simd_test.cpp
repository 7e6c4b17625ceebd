#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>
#include <vector>

#include "circen/simd.hpp"
#include "circen/spectrum.hpp"

using namespace circen;
using simd::Isa;

namespace {

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, 3.0);
    std::vector<double> v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

}  // namespace

TEST_CASE("scalar kernels are always available") {
    CHECK(simd::isa_available(Isa::scalar));
    CHECK(simd::kernels_for(Isa::scalar).isa == Isa::scalar);
    MESSAGE("active kernels: " << simd::isa_name(simd::active_kernels().isa));
}

TEST_CASE("scalar reference kernels") {
    const std::vector<double> v{1.0, -2.0, 3.0, -4.0, 0.5};
    const auto& k = simd::kernels_for(Isa::scalar);
    CHECK(simd::abs_sum(v, k) == 10.5);
    CHECK(simd::sum_squares(v, k) == 30.25);
    std::vector<double> x{1.0, 0.0}, y{0.0, 1.0};
    simd::rotate_pair(x, y, 0.0, 1.0, k);
    CHECK(x == std::vector<double>{0.0, -1.0});
    CHECK(y == std::vector<double>{1.0, 0.0});
}

TEST_CASE("AVX2 kernels match the scalar reference") {
    if (!simd::isa_available(Isa::avx2)) {
        MESSAGE("AVX2 not available; skipping");
        CHECK_THROWS_AS(simd::kernels_for(Isa::avx2), std::runtime_error);
        return;
    }
    const auto& ref = simd::kernels_for(Isa::scalar);
    const auto& vec = simd::kernels_for(Isa::avx2);
    for (std::size_t n = 0; n <= 67; ++n) {
        const auto v = random_vector(n, 100 + n);
        const double a_ref = simd::abs_sum(v, ref);
        const double a_vec = simd::abs_sum(v, vec);
        CHECK(std::fabs(a_ref - a_vec) <= 1e-13 * (1.0 + a_ref));
        const double s_ref = simd::sum_squares(v, ref);
        const double s_vec = simd::sum_squares(v, vec);
        CHECK(std::fabs(s_ref - s_vec) <= 1e-13 * (1.0 + s_ref));

        // rotation is elementwise, so results must be bit-identical
        auto x1 = random_vector(n, 200 + n), y1 = random_vector(n, 300 + n);
        auto x2 = x1, y2 = y1;
        simd::rotate_pair(x1, y1, 0.8, 0.6, ref);
        simd::rotate_pair(x2, y2, 0.8, 0.6, vec);
        CHECK(x1 == x2);
        CHECK(y1 == y2);
    }
}

TEST_CASE("Jacobi spectra agree across kernel variants") {
    if (!simd::isa_available(Isa::avx2)) return;
    for (std::int64_t n : {5, 16, 33, 64}) {
        const auto a = build_adjacency(CirculantSpec(n, {1, 3}));
        const auto e_ref = jacobi_eigenvalues(a, {}, simd::kernels_for(Isa::scalar));
        const auto e_vec = jacobi_eigenvalues(a, {}, simd::kernels_for(Isa::avx2));
        REQUIRE(e_ref.size() == e_vec.size());
        for (std::size_t i = 0; i < e_ref.size(); ++i) CHECK(std::fabs(e_ref[i] - e_vec[i]) < 1e-10);
    }
}

TEST_CASE("spectrum energy agrees across kernel variants") {
    if (!simd::isa_available(Isa::avx2)) return;
    for (std::int64_t n = 5; n <= 300; n += 7) {
        const auto s = circulant_eigenvalues(CirculantSpec(n, {1, 2}));
        const double e_ref = spectrum_energy(s.values, simd::kernels_for(Isa::scalar));
        const double e_vec = spectrum_energy(s.values, simd::kernels_for(Isa::avx2));
        CHECK(std::fabs(e_ref - e_vec) < 1e-12);
    }
}

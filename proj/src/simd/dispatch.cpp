#include "circen/simd.hpp"

#include <stdexcept>
#include <string>

namespace circen::simd {

namespace {

constexpr Kernels kScalar{Isa::scalar, detail::abs_sum_scalar, detail::sum_squares_scalar,
                          detail::rotate_pair_scalar};

#if defined(CIRCEN_HAVE_AVX2)
constexpr Kernels kAvx2{Isa::avx2, detail::abs_sum_avx2, detail::sum_squares_avx2,
                        detail::rotate_pair_avx2};
#endif

bool cpu_has_avx2() {
#if defined(CIRCEN_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
    }
    return "unknown";
}

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2: {
            static const bool has = cpu_has_avx2();
            return has;
        }
    }
    return false;
}

const Kernels& kernels_for(Isa isa) {
    if (!isa_available(isa))
        throw std::runtime_error("SIMD variant not available: " + std::string(isa_name(isa)));
#if defined(CIRCEN_HAVE_AVX2)
    if (isa == Isa::avx2) return kAvx2;
#endif
    return kScalar;
}

const Kernels& active_kernels() {
    static const Kernels& chosen = isa_available(Isa::avx2) ? kernels_for(Isa::avx2) : kScalar;
    return chosen;
}

}  // namespace circen::simd

#include <random>

#include "doctest.h"
#include "fractomo/errors.hpp"
#include "fractomo/fft.hpp"
#include "oracles.hpp"

using namespace fractomo;

namespace {

// brute-force DFT, the oracle for the radix-2 code
std::vector<cplx> dft_direct(const std::vector<cplx>& x) {
    const std::size_t n = x.size();
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            acc += x[j] * std::polar(1.0, -2.0 * oracles::kPi *
                                              static_cast<double>(k * j) /
                                              static_cast<double>(n));
        }
        out[k] = acc;
    }
    return out;
}

}  // namespace

TEST_CASE("pow2 helpers") {
    CHECK(is_pow2(1));
    CHECK(is_pow2(1024));
    CHECK_FALSE(is_pow2(0));
    CHECK_FALSE(is_pow2(768));
    CHECK(next_pow2(511) == 512);
    CHECK(next_pow2(512) == 512);
}

TEST_CASE("fft matches the direct DFT") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (const std::size_t n : {std::size_t{8}, std::size_t{64}, std::size_t{256}}) {
        std::vector<cplx> x(n);
        for (auto& v : x) v = cplx(d(rng), d(rng));
        const std::vector<cplx> expected = dft_direct(x);
        std::vector<cplx> got = x;
        fft_pow2(got, false);
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(std::abs(got[k] - expected[k]) <= 1e-10);
        }
    }
}

TEST_CASE("fft inverse round trip") {
    std::mt19937 rng(78);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<cplx> x(512);
    for (auto& v : x) v = cplx(d(rng), d(rng));
    std::vector<cplx> y = x;
    fft_pow2(y, false);
    fft_pow2(y, true);
    for (std::size_t k = 0; k < x.size(); ++k) {
        CHECK(std::abs(y[k] - x[k]) <= 1e-12);
    }
}

TEST_CASE("fft rejects non-pow2 lengths") {
    std::vector<cplx> x(100, 1.0);
    CHECK_THROWS_AS(fft_pow2(x, false), DomainError);
}

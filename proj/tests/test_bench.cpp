#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "sca/bench.hpp"

using namespace sca::bench;

namespace {

// Direct summation in long double with exactly reduced twiddle angles.
std::vector<std::complex<long double>> extended_dft(const ComplexVec& x) {
    const std::size_t n = x.size();
    std::vector<std::complex<long double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<long double> acc{0.0L, 0.0L};
        for (std::size_t j = 0; j < n; ++j) {
            const long double angle = -2.0L * std::numbers::pi_v<long double> *
                                      static_cast<long double>((k * j) % n) / static_cast<long double>(n);
            acc += std::complex<long double>(x[j].real(), x[j].imag()) *
                   std::complex<long double>(std::cos(angle), std::sin(angle));
        }
        out[k] = acc;
    }
    return out;
}

std::vector<GrowthPoint> points(const std::vector<std::uint64_t>& ns, double (*f)(double)) {
    std::vector<GrowthPoint> out;
    for (auto n : ns) out.push_back({n, f(static_cast<double>(n))});
    return out;
}

}  // namespace

TEST_SUITE("bench") {

TEST_CASE("dft_naive on an impulse and on a constant") {
    const auto imp = dft_naive(ComplexVec{1, 0, 0, 0});
    for (const auto& v : imp) CHECK(std::abs(v - Complex{1, 0}) < 1e-15);
    const auto ones = dft_naive(ComplexVec{1, 1, 1, 1});
    CHECK(std::abs(ones[0] - Complex{4, 0}) < 1e-15);
    for (int k = 1; k < 4; ++k) CHECK(std::abs(ones[k]) < 1e-15);
}

TEST_CASE("dft_naive matches extended-precision summation") {
    for (std::uint64_t seed : {1, 2, 3}) {
        for (std::size_t n : {16, 17, 100}) {
            const auto x = random_vector(n, seed);
            const auto ref = extended_dft(x);
            ComplexVec ref_d(n);
            for (std::size_t k = 0; k < n; ++k)
                ref_d[k] = Complex(static_cast<double>(ref[k].real()), static_cast<double>(ref[k].imag()));
            CHECK(max_relative_deviation(dft_naive(x), ref_d) < 1e-10);
            CHECK(max_relative_deviation(fft_radix2(random_vector(16, seed)),
                                         dft_naive(random_vector(16, seed))) < 1e-12);
        }
    }
}

TEST_CASE("fft_radix2 N=8 impulse counts") {
    ComplexVec x(8, Complex{0, 0});
    x[0] = 1;
    OpCounts ops;
    const auto y = fft_radix2(x, &ops);
    for (const auto& v : y) CHECK(std::abs(v - Complex{1, 0}) < 1e-15);
    CHECK(ops.mul == 12);
    CHECK(ops.add == 24);
}

TEST_CASE("fft_radix2 agrees with dft_naive at N=512") {
    const auto x = random_vector(512, 9);
    CHECK(max_relative_deviation(fft_radix2(x), dft_naive(x)) < 1e-9);
}

TEST_CASE("fft_radix2 rejects non-power-of-two lengths") {
    CHECK_THROWS_WITH_AS(fft_radix2(ComplexVec(6)), doctest::Contains("radix-2 requires power-of-two length"),
                         std::invalid_argument);
    CHECK_THROWS_AS(Radix2Fft(0), std::invalid_argument);
    CHECK_NOTHROW(Radix2Fft(1));
}

TEST_CASE("operation counts follow the closed forms") {
    for (std::size_t n = 1; n <= 2048; n *= 2) {
        OpCounts naive, fast;
        const auto x = random_vector(n, n);
        dft_naive(x, &naive);
        fft_radix2(x, &fast);
        CHECK(naive.mul == n * n);
        CHECK(naive.add == n * n);
        const std::uint64_t lg = static_cast<std::uint64_t>(std::log2(static_cast<double>(n)));
        CHECK(fast.mul == n / 2 * lg);
        CHECK(fast.add == n * lg);
    }
}

TEST_CASE("random_vector is seeded and bounded") {
    const auto a = random_vector(1000, 5);
    CHECK(a == random_vector(1000, 5));
    CHECK(a != random_vector(1000, 6));
    for (const auto& v : a) {
        CHECK(v.real() >= -1.0);
        CHECK(v.real() < 1.0);
        CHECK(v.imag() >= -1.0);
        CHECK(v.imag() < 1.0);
    }
}

TEST_CASE("max_relative_deviation") {
    CHECK(max_relative_deviation(ComplexVec{1, 2}, ComplexVec{1, 2}) == 0.0);
    CHECK(max_relative_deviation(ComplexVec{1.5, 2}, ComplexVec{1, 2}) == 0.25);
    CHECK_THROWS_AS(max_relative_deviation(ComplexVec{1}, ComplexVec{1, 2}), std::invalid_argument);
}

TEST_CASE("measure") {
    const auto naive = measure("dft_naive", 64, 3);
    CHECK(naive.op_mul == 4096);
    CHECK(naive.impl_name == "dft_naive");
    CHECK(naive.reps == 3);
    CHECK(naive.wall_time_s > 0.0);

    const auto fast = measure("fft_radix2", 64, 3);
    CHECK(fast.op_mul == 192);
    CHECK(fast.op_add == 384);

    CHECK(measure("dft_naive", 128, 3).op_count() == 4 * naive.op_count());

    CHECK_THROWS_AS(measure("bluestein", 64, 3), std::invalid_argument);
    CHECK_THROWS_AS(measure("fft_radix2", 100, 3), std::invalid_argument);
    CHECK_THROWS_AS(measure("dft_naive", 64, 2), std::invalid_argument);
}

TEST_CASE("fit_growth recovers exact counts") {
    std::vector<BenchSample> naive, fast;
    for (std::uint64_t n : {64, 128, 256, 512}) {
        naive.push_back(measure("dft_naive", n, 3));
        fast.push_back(measure("fft_radix2", n, 3));
    }
    const auto q = fit_growth(naive, OpField::Mul);
    CHECK(q.best_model == GrowthShape::Quadratic);
    CHECK(std::abs(q.fitted_coeff - 1.0) <= 1e-9);
    CHECK(q.loglog_slope == doctest::Approx(2.0).epsilon(1e-9));

    const auto f = fit_growth(fast, OpField::Mul);
    CHECK(f.best_model == GrowthShape::NLogN);
    CHECK(std::abs(f.fitted_coeff - 0.5) <= 1e-9);
    CHECK(sca::growth::compare(f.as_growth(), sca::growth::GrowthFn::n_log_n(0.5)).is_theta());

    const auto lin = fit_growth(points({10, 20, 40, 80, 160}, [](double n) { return 3 * n; }));
    CHECK(lin.best_model == GrowthShape::Linear);
    CHECK(lin.fitted_coeff == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("fit_growth recovers random coefficients for every shape") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> coeff(0.1, 10.0);
    const std::vector<std::uint64_t> ns{16, 32, 64, 128, 256, 512, 1024};
    for (int i = 0; i < 200; ++i) {
        const double c = coeff(rng);
        for (GrowthShape shape : {GrowthShape::Linear, GrowthShape::NLogN, GrowthShape::Quadratic}) {
            std::vector<GrowthPoint> pts;
            for (auto n : ns) {
                const double x = static_cast<double>(n);
                const double base = shape == GrowthShape::Linear ? x
                                    : shape == GrowthShape::NLogN ? x * std::log2(x)
                                                                  : x * x;
                pts.push_back({n, c * base});
            }
            const auto r = fit_growth(pts);
            CHECK(r.best_model == shape);
            CHECK(std::abs(r.fitted_coeff / c - 1.0) <= 1e-9);
            CHECK(r.residual < 1e-18);
        }
    }
}

TEST_CASE("fit_growth needs spread") {
    CHECK_THROWS_WITH_AS(fit_growth(points({64, 128, 256}, [](double n) { return n; })),
                         "range too narrow to discriminate models", std::invalid_argument);
    CHECK_THROWS_WITH_AS(fit_growth(points({64, 80, 96, 112, 128}, [](double n) { return n; })),
                         "range too narrow to discriminate models", std::invalid_argument);
    CHECK_THROWS_WITH_AS(fit_growth(points({64, 64, 64, 512}, [](double n) { return n; })),
                         "range too narrow to discriminate models", std::invalid_argument);
    CHECK_NOTHROW(fit_growth(points({64, 128, 256, 512}, [](double n) { return n; })));
}

TEST_CASE("calibrate_processor") {
    std::vector<BenchSample> s(3, BenchSample{"synthetic", 64, 500, 500, 1e-6, 3});
    CHECK(calibrate_processor(s) == doctest::Approx(1e9).epsilon(1e-12));
    s[2].wall_time_s = 1.0;  // an outlier does not move the median
    CHECK(calibrate_processor(s) == doctest::Approx(1e9).epsilon(1e-12));
    CHECK_THROWS_AS(calibrate_processor(std::span<const BenchSample>(s.data(), 2)), std::invalid_argument);
}

TEST_CASE("bench csv") {
    CHECK(bench_csv_header() == "impl,n,op_count_mul,op_count_add,wall_time_s,reps");
    const BenchSample s{"fft_radix2", 64, 192, 384, 2.5e-7, 5};
    CHECK(bench_csv_row(s) == "fft_radix2,64,192,384,2.5e-07,5");
}

}  // TEST_SUITE

TEST_CASE("calibrated rate of real fft runs is stable across lengths") {
    // Wall-clock property; a loaded host gets a few attempts.
    bool stable = false;
    for (int attempt = 0; attempt < 3 && !stable; ++attempt) {
        std::vector<BenchSample> s;
        for (std::uint64_t n = 256; n <= 4096; n *= 2) s.push_back(measure("fft_radix2", n, 15));
        const double rate = calibrate_processor(s);
        stable = true;
        for (const auto& x : s) {
            const double r = static_cast<double>(x.op_count()) / x.wall_time_s;
            if (std::abs(r / rate - 1.0) > 0.25) stable = false;
        }
    }
    CHECK(stable);
}

#pragma once

/**
 * @file bench.hpp
 * @brief Instrumented DFT kernels, timing harness and growth-model fitting.
 *
 * An "instruction" here is one counted complex multiplication or complex
 * addition performed by a transform. Twiddle-factor tables are built when a
 * plan is constructed and are neither timed nor counted.
 *
 *   dft_naive:  N^2 multiplications, N^2 additions
 *   fft_radix2: (N/2) log2 N multiplications, N log2 N additions
 */

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sca/growth.hpp"

namespace sca::bench {

using Complex = std::complex<double>;
using ComplexVec = std::vector<Complex>;

struct OpCounts {
    std::uint64_t mul = 0;
    std::uint64_t add = 0;
    std::uint64_t total() const { return mul + add; }
};

/// Direct O(N^2) summation X[k] = sum_n x[n] e^{-2 pi i k n / N}.
class NaiveDft {
public:
    explicit NaiveDft(std::size_t n);

    std::size_t size() const { return roots_.size(); }
    void transform(std::span<const Complex> in, std::span<Complex> out, OpCounts& ops) const;

private:
    ComplexVec roots_;
};

/// Iterative in-place decimation-in-time radix-2 FFT.
class Radix2Fft {
public:
    /// Throws std::invalid_argument unless n is a power of two.
    explicit Radix2Fft(std::size_t n);

    std::size_t size() const { return n_; }
    void transform(std::span<Complex> data, OpCounts& ops) const;

private:
    std::size_t n_;
    unsigned log2n_;
    ComplexVec twiddles_;  // e^{-2 pi i k / N}, k < N/2
    std::vector<std::uint32_t> bitrev_;
};

ComplexVec dft_naive(std::span<const Complex> x, OpCounts* ops = nullptr);
ComplexVec fft_radix2(std::span<const Complex> x, OpCounts* ops = nullptr);

/// Seeded vector with components uniform in [-1, 1); bit-identical across
/// platforms for a given (n, seed).
ComplexVec random_vector(std::size_t n, std::uint64_t seed);

/// max_k |a_k - b_k| / max_k |b_k|
double max_relative_deviation(std::span<const Complex> a, std::span<const Complex> b);

struct BenchSample {
    std::string impl_name;
    std::uint64_t n = 0;
    std::uint64_t op_mul = 0;
    std::uint64_t op_add = 0;
    double wall_time_s = 0.0;
    unsigned reps = 0;

    std::uint64_t op_count() const { return op_mul + op_add; }
};

/// "dft_naive", "fft_radix2".
const std::vector<std::string>& bench_impls();

/// Times `reps` single transforms of a seeded vector and keeps the median.
/// Throws std::invalid_argument for an unknown impl, an invalid n, or reps < 3.
BenchSample measure(const std::string& impl_name, std::uint64_t n, unsigned reps, std::uint64_t seed = 1);

enum class GrowthShape { Linear, NLogN, Quadratic };

std::string_view shape_name(GrowthShape s);

struct FitResult {
    GrowthShape best_model = GrowthShape::Linear;
    double fitted_coeff = 0.0;
    /// Sum of squared log-residuals of the chosen shape.
    double residual = 0.0;
    /// Free least-squares slope of log y against log n; diagnostic only.
    double loglog_slope = 0.0;

    growth::GrowthFn as_growth() const;
};

struct GrowthPoint {
    std::uint64_t n = 0;
    double value = 0.0;
};

enum class OpField { Mul, Add, Total };

/// Needs >= 4 points with distinct n spanning at least 8x.
FitResult fit_growth(std::span<const GrowthPoint> points);
FitResult fit_growth(std::span<const BenchSample> samples, OpField field = OpField::Total);

/// Median of op_count / wall_time_s, in instructions per second.
double calibrate_processor(std::span<const BenchSample> samples);

std::string bench_csv_header();
std::string bench_csv_row(const BenchSample& s);

}  // namespace sca::bench

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "sca/bench.hpp"
#include "sca/waveform.hpp"

namespace sca::bench {

namespace {

// Plain complex product; std::complex operator* goes through the
// NaN-recovering __muldc3 path without -ffast-math.
inline Complex cmul(Complex a, Complex b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

Complex unit_root(std::size_t k, std::size_t n) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

NaiveDft::NaiveDft(std::size_t n) {
    if (n < 1) throw std::invalid_argument("DFT length must be at least 1");
    roots_.resize(n);
    for (std::size_t j = 0; j < n; ++j) roots_[j] = unit_root(j, n);
}

void NaiveDft::transform(std::span<const Complex> in, std::span<Complex> out, OpCounts& ops) const {
    const std::size_t n = roots_.size();
    if (in.size() != n || out.size() != n) throw std::invalid_argument("DFT buffer length mismatch");
    for (std::size_t k = 0; k < n; ++k) {
        double re = 0.0;
        double im = 0.0;
        std::size_t idx = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const Complex p = cmul(in[j], roots_[idx]);
            re += p.real();
            im += p.imag();
            idx += k;
            if (idx >= n) idx -= n;
        }
        out[k] = {re, im};
    }
    ops.mul += static_cast<std::uint64_t>(n) * n;
    ops.add += static_cast<std::uint64_t>(n) * n;
}

Radix2Fft::Radix2Fft(std::size_t n) : n_(n) {
    if (n < 1 || !waveform::is_power_of_two(n)) {
        throw std::invalid_argument("radix-2 requires power-of-two length, got " + std::to_string(n));
    }
    log2n_ = waveform::exact_log2(n);
    twiddles_.resize(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) twiddles_[k] = unit_root(k, n);
    bitrev_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t r = 0;
        for (unsigned b = 0; b < log2n_; ++b) r |= ((i >> b) & 1U) << (log2n_ - 1 - b);
        bitrev_[i] = r;
    }
}

void Radix2Fft::transform(std::span<Complex> data, OpCounts& ops) const {
    if (data.size() != n_) throw std::invalid_argument("FFT buffer length mismatch");
    for (std::size_t i = 0; i < n_; ++i) {
        if (i < bitrev_[i]) std::swap(data[i], data[bitrev_[i]]);
    }
    for (std::size_t len = 2; len <= n_; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t stride = n_ / len;
        for (std::size_t base = 0; base < n_; base += len) {
            for (std::size_t j = 0; j < half; ++j) {
                const Complex u = data[base + j];
                const Complex t = cmul(twiddles_[j * stride], data[base + j + half]);
                data[base + j] = u + t;
                data[base + j + half] = u - t;
            }
        }
        // One multiplication and two additions per butterfly, N/2 butterflies.
        ops.mul += n_ / 2;
        ops.add += n_;
    }
}

ComplexVec dft_naive(std::span<const Complex> x, OpCounts* ops) {
    NaiveDft plan(x.size());
    ComplexVec out(x.size());
    OpCounts local;
    plan.transform(x, out, ops ? *ops : local);
    return out;
}

ComplexVec fft_radix2(std::span<const Complex> x, OpCounts* ops) {
    Radix2Fft plan(x.size());
    ComplexVec out(x.begin(), x.end());
    OpCounts local;
    plan.transform(out, ops ? *ops : local);
    return out;
}

ComplexVec random_vector(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    auto uniform = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-52 - 1.0; };
    ComplexVec v(n);
    for (auto& z : v) {
        const double re = uniform();
        const double im = uniform();
        z = {re, im};
    }
    return v;
}

double max_relative_deviation(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num = std::max(num, std::abs(a[i] - b[i]));
        den = std::max(den, std::abs(b[i]));
    }
    if (den == 0.0) return num;
    return num / den;
}

}  // namespace sca::bench

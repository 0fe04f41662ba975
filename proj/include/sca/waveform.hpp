#pragma once

// Waveform, channel, processor and baseband-complexity models. All
// quantities are SI (seconds, Hz, instructions per second).

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sca/growth.hpp"

namespace sca::waveform {

bool is_power_of_two(std::uint64_t n);

/// log2 of a power of two. Throws std::invalid_argument otherwise.
unsigned exact_log2(std::uint64_t n);

/// Bits carried by one N-subcarrier frame with an M-point constellation.
std::uint64_t ofdm_bits(std::uint64_t n, std::uint64_t m);

/// W = N * delta_f.
double ofdm_bandwidth(std::uint64_t n, double delta_f_hz);

/// Minimum instruction rate keeping the baseband runtime within one symbol.
double min_processor_rate(double instructions, double symbol_period_s);

/// OFDM waveform with T_sym = 1 / delta_f.
class WaveformModel {
public:
    WaveformModel(std::string name, std::uint64_t n_subcarriers, double subcarrier_spacing_hz,
                  std::uint64_t constellation_order);
    /// Explicit symbol period; must equal 1/spacing within 1e-9 relative.
    WaveformModel(std::string name, std::uint64_t n_subcarriers, double subcarrier_spacing_hz,
                  std::uint64_t constellation_order, double symbol_period_s);

    const std::string& name() const { return name_; }
    std::uint64_t n_subcarriers() const { return n_; }
    double subcarrier_spacing_hz() const { return spacing_hz_; }
    std::uint64_t constellation_order() const { return m_; }
    double symbol_period_s() const { return symbol_period_s_; }

    std::uint64_t bits_per_frame() const { return ofdm_bits(n_, m_); }
    double bandwidth_hz() const { return ofdm_bandwidth(n_, spacing_hz_); }

    /// Same numerology with a different subcarrier count.
    WaveformModel with_subcarriers(std::uint64_t n) const;

    friend bool operator==(const WaveformModel&, const WaveformModel&) = default;

private:
    std::string name_;
    std::uint64_t n_;
    double spacing_hz_;
    std::uint64_t m_;
    double symbol_period_s_;
};

class ChannelModel {
public:
    ChannelModel(double bandwidth_hz, double rx_power_w, double noise_psd_w_per_hz);

    double bandwidth_hz() const { return bandwidth_hz_; }
    double rx_power_w() const { return rx_power_w_; }
    double noise_psd_w_per_hz() const { return noise_psd_; }
    double snr() const;

    friend bool operator==(const ChannelModel&, const ChannelModel&) = default;

private:
    double bandwidth_hz_;
    double rx_power_w_;
    double noise_psd_;
};

class BasebandProcessor {
public:
    explicit BasebandProcessor(double instr_per_s);

    double instr_per_s() const { return instr_per_s_; }
    double seconds_per_instruction() const { return 1.0 / instr_per_s_; }

    friend bool operator==(const BasebandProcessor&, const BasebandProcessor&) = default;

private:
    double instr_per_s_;
};

/// Instruction count of a baseband algorithm as a function of N.
class ComplexityModel {
public:
    using ExactFn = std::function<double(std::uint64_t)>;

    ComplexityModel(std::string name, growth::GrowthFn symbolic, ExactFn exact,
                    bool requires_power_of_two = false);

    const std::string& name() const { return name_; }
    const growth::GrowthFn& symbolic() const { return symbolic_; }
    bool requires_power_of_two() const { return pow2_only_; }

    /// Throws std::invalid_argument if n is outside the model's domain.
    void check_domain(std::uint64_t n) const;
    bool accepts(std::uint64_t n) const;

    /// Closed-form instruction count; validates the domain first.
    double instructions(std::uint64_t n) const;

private:
    std::string name_;
    growth::GrowthFn symbolic_;
    ExactFn exact_;
    bool pow2_only_;
};

/// Built-in models: dft_naive, fft_radix2, dft_linear_conjecture
/// (coefficient `linear_c`), ls_detector.
std::vector<ComplexityModel> complexity_catalog(double linear_c = 1.0);

/// Catalog lookup; throws std::invalid_argument for an unknown name.
ComplexityModel find_complexity(const std::string& name, double linear_c = 1.0);

}  // namespace sca::waveform

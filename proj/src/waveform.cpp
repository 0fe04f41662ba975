#include "sca/waveform.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace sca::waveform {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be positive and finite");
    }
}

}  // namespace

bool is_power_of_two(std::uint64_t n) { return std::has_single_bit(n); }

unsigned exact_log2(std::uint64_t n) {
    if (!is_power_of_two(n)) throw std::invalid_argument(std::to_string(n) + " is not a power of two");
    return static_cast<unsigned>(std::countr_zero(n));
}

std::uint64_t ofdm_bits(std::uint64_t n, std::uint64_t m) {
    if (n < 1) throw std::invalid_argument("subcarrier count must be at least 1");
    if (m < 2 || !is_power_of_two(m)) {
        throw std::invalid_argument("constellation order must be a power of two >= 2");
    }
    return n * exact_log2(m);
}

double ofdm_bandwidth(std::uint64_t n, double delta_f_hz) {
    if (n < 1) throw std::invalid_argument("subcarrier count must be at least 1");
    require_positive(delta_f_hz, "subcarrier spacing");
    return static_cast<double>(n) * delta_f_hz;
}

double min_processor_rate(double instructions, double symbol_period_s) {
    require_positive(instructions, "instruction count");
    require_positive(symbol_period_s, "symbol period");
    return instructions / symbol_period_s;
}

WaveformModel::WaveformModel(std::string name, std::uint64_t n_subcarriers, double subcarrier_spacing_hz,
                             std::uint64_t constellation_order)
    : WaveformModel(std::move(name), n_subcarriers, subcarrier_spacing_hz, constellation_order,
                    1.0 / subcarrier_spacing_hz) {}

WaveformModel::WaveformModel(std::string name, std::uint64_t n_subcarriers, double subcarrier_spacing_hz,
                             std::uint64_t constellation_order, double symbol_period_s)
    : name_(std::move(name)),
      n_(n_subcarriers),
      spacing_hz_(subcarrier_spacing_hz),
      m_(constellation_order),
      symbol_period_s_(symbol_period_s) {
    require_positive(spacing_hz_, "subcarrier spacing");
    require_positive(symbol_period_s_, "symbol period");
    (void)ofdm_bits(n_, m_);  // validates N and M
    const double expected = 1.0 / spacing_hz_;
    if (std::abs(symbol_period_s_ - expected) > 1e-9 * expected) {
        throw std::invalid_argument("symbol period must equal 1/subcarrier spacing");
    }
}

WaveformModel WaveformModel::with_subcarriers(std::uint64_t n) const {
    return WaveformModel(name_, n, spacing_hz_, m_, symbol_period_s_);
}

ChannelModel::ChannelModel(double bandwidth_hz, double rx_power_w, double noise_psd_w_per_hz)
    : bandwidth_hz_(bandwidth_hz), rx_power_w_(rx_power_w), noise_psd_(noise_psd_w_per_hz) {
    require_positive(bandwidth_hz_, "channel bandwidth");
    require_positive(rx_power_w_, "received power");
    require_positive(noise_psd_, "noise spectral density");
}

double ChannelModel::snr() const { return rx_power_w_ / (bandwidth_hz_ * noise_psd_); }

BasebandProcessor::BasebandProcessor(double instr_per_s) : instr_per_s_(instr_per_s) {
    require_positive(instr_per_s_, "processor instruction rate");
}

ComplexityModel::ComplexityModel(std::string name, growth::GrowthFn symbolic, ExactFn exact,
                                 bool requires_power_of_two)
    : name_(std::move(name)), symbolic_(std::move(symbolic)), exact_(std::move(exact)), pow2_only_(requires_power_of_two) {}

bool ComplexityModel::accepts(std::uint64_t n) const { return n >= 2 && (!pow2_only_ || is_power_of_two(n)); }

void ComplexityModel::check_domain(std::uint64_t n) const {
    if (n < 2) throw std::invalid_argument(name_ + ": N must be at least 2");
    if (pow2_only_ && !is_power_of_two(n)) {
        throw std::invalid_argument(name_ + ": radix-2 requires power-of-two length, got N=" + std::to_string(n));
    }
}

double ComplexityModel::instructions(std::uint64_t n) const {
    check_domain(n);
    return exact_(n);
}

std::vector<ComplexityModel> complexity_catalog(double linear_c) {
    require_positive(linear_c, "linear conjecture coefficient");
    std::vector<ComplexityModel> out;
    out.emplace_back("dft_naive", growth::GrowthFn::quadratic(),
                     [](std::uint64_t n) { return static_cast<double>(n * n); });
    // N log2 N instructions, one per butterfly operand.
    out.emplace_back(
        "fft_radix2", growth::GrowthFn::n_log_n(),
        [](std::uint64_t n) { return static_cast<double>(n * exact_log2(n)); }, true);
    out.emplace_back("dft_linear_conjecture", growth::GrowthFn::linear(linear_c),
                     [linear_c](std::uint64_t n) { return linear_c * static_cast<double>(n); });
    out.emplace_back("ls_detector", growth::GrowthFn::linear(),
                     [](std::uint64_t n) { return static_cast<double>(n); });
    return out;
}

ComplexityModel find_complexity(const std::string& name, double linear_c) {
    for (auto& m : complexity_catalog(linear_c)) {
        if (m.name() == name) return m;
    }
    throw std::invalid_argument("unknown complexity model '" + name + "'");
}

}  // namespace sca::waveform

#include "sca/scmetrics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sca::metrics {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be positive and finite");
    }
}

void require_non_negative(double v, const char* what) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be non-negative and finite");
    }
}

void require_bits(std::uint64_t bits) {
    if (bits < 1) throw std::invalid_argument("bit count must be at least 1");
}

}  // namespace

double shannon_capacity(double bandwidth_hz, double snr) {
    require_positive(bandwidth_hz, "bandwidth");
    require_non_negative(snr, "snr");
    return bandwidth_hz * std::log2(1.0 + snr);
}

double snr(double power_w, double bandwidth_hz, double noise_psd_w_per_hz) {
    require_positive(power_w, "power");
    require_positive(bandwidth_hz, "bandwidth");
    require_positive(noise_psd_w_per_hz, "noise spectral density");
    return power_w / (bandwidth_hz * noise_psd_w_per_hz);
}

double classic_rate(std::uint64_t bits, double symbol_period_s) {
    require_bits(bits);
    require_positive(symbol_period_s, "symbol period");
    return static_cast<double>(bits) / symbol_period_s;
}

double classic_se(double rate_bps, double bandwidth_hz) {
    require_positive(rate_bps, "rate");
    require_positive(bandwidth_hz, "bandwidth");
    return rate_bps / bandwidth_hz;
}

double t_comp(double instructions, double instr_per_s) {
    require_non_negative(instructions, "instruction count");
    require_positive(instr_per_s, "instruction rate");
    return instructions / instr_per_s;
}

double alg_throughput(std::uint64_t bits, double instructions, double instr_per_s) {
    require_bits(bits);
    require_positive(instructions, "instruction count");
    require_positive(instr_per_s, "instruction rate");
    return instr_per_s * static_cast<double>(bits) / instructions;
}

double sc_throughput(std::uint64_t bits, double instructions, double instr_per_s, double symbol_period_s) {
    require_bits(bits);
    require_non_negative(symbol_period_s, "symbol period");
    const double total = t_comp(instructions, instr_per_s) + symbol_period_s;
    if (!(total > 0.0)) throw std::invalid_argument("runtime and airtime cannot both be zero");
    return static_cast<double>(bits) / total;
}

double r_comp(std::uint64_t bits, double seconds_per_instruction, double instructions, double symbol_period_s) {
    require_bits(bits);
    require_positive(seconds_per_instruction, "seconds per instruction");
    require_non_negative(instructions, "instruction count");
    require_non_negative(symbol_period_s, "symbol period");
    const double total = seconds_per_instruction * instructions + symbol_period_s;
    if (!(total > 0.0)) throw std::invalid_argument("runtime and airtime cannot both be zero");
    return static_cast<double>(bits) / total;
}

double sc_efficiency(double sc_rate_bps, double bandwidth_hz) {
    require_positive(sc_rate_bps, "SC rate");
    require_positive(bandwidth_hz, "bandwidth");
    return sc_rate_bps / bandwidth_hz;
}

ScReport full_report(const waveform::WaveformModel& wf, const std::optional<waveform::ChannelModel>& channel,
                     const waveform::BasebandProcessor& processor, const waveform::ComplexityModel& complexity) {
    const std::uint64_t bits = wf.bits_per_frame();
    const double instr = complexity.instructions(wf.n_subcarriers());
    const double rate = processor.instr_per_s();
    const double tsym = wf.symbol_period_s();
    const double w = wf.bandwidth_hz();

    ScReport r;
    r.t_comp_s = t_comp(instr, rate);
    r.alg_throughput_bps = alg_throughput(bits, instr, rate);
    r.sc_throughput_bps = sc_throughput(bits, instr, rate, tsym);
    r.sc_efficiency_bps_hz = sc_efficiency(r.sc_throughput_bps, w);
    r.classic_rate_bps = classic_rate(bits, tsym);
    r.classic_se_bps_hz = classic_se(r.classic_rate_bps, w);
    r.r_comp_bps = r_comp(bits, processor.seconds_per_instruction(), instr, tsym);
    if (channel) {
        if (std::abs(channel->bandwidth_hz() - w) > 1e-9 * w) {
            throw std::invalid_argument("channel bandwidth does not match the waveform bandwidth N*delta_f");
        }
        r.shannon_capacity_bps = shannon_capacity(channel->bandwidth_hz(), channel->snr());
    }
    return r;
}

std::vector<std::uint64_t> doubling_range(std::uint64_t n_min, std::uint64_t n_max) {
    if (n_min < 1) throw std::invalid_argument("n-min must be at least 1");
    if (n_min > n_max) throw std::invalid_argument("n-min must not exceed n-max");
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = n_min; n <= n_max; n *= 2) {
        out.push_back(n);
        if (n > n_max / 2) break;
    }
    return out;
}

std::vector<SweepRow> sweep_sc_throughput(std::uint64_t constellation_order, double subcarrier_spacing_hz,
                                          double instr_per_s, const waveform::ComplexityModel& complexity,
                                          const std::vector<std::uint64_t>& n_values) {
    require_positive(subcarrier_spacing_hz, "subcarrier spacing");
    const double tsym = 1.0 / subcarrier_spacing_hz;
    for (auto n : n_values) complexity.check_domain(n);

    std::vector<SweepRow> rows;
    rows.reserve(n_values.size());
    for (auto n : n_values) {
        const std::uint64_t bits = waveform::ofdm_bits(n, constellation_order);
        const double sc = sc_throughput(bits, complexity.instructions(n), instr_per_s, tsym);
        rows.push_back({n, sc, sc_efficiency(sc, waveform::ofdm_bandwidth(n, subcarrier_spacing_hz))});
    }
    return rows;
}

std::string format_sig6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string report_csv_header() {
    return "scenario,n,m,delta_f_hz,instr_per_s,model,t_comp_s,alg_throughput_bps,sc_throughput_bps,"
           "sc_efficiency_bps_hz,classic_rate_bps,classic_se_bps_hz,shannon_capacity_bps";
}

std::string report_csv_row(const std::string& scenario_name, const waveform::WaveformModel& wf,
                           const waveform::BasebandProcessor& processor, const std::string& model_name,
                           const ScReport& r) {
    std::string row = scenario_name;
    auto field = [&row](const std::string& s) {
        row += ',';
        row += s;
    };
    field(std::to_string(wf.n_subcarriers()));
    field(std::to_string(wf.constellation_order()));
    field(format_sig6(wf.subcarrier_spacing_hz()));
    field(format_sig6(processor.instr_per_s()));
    field(model_name);
    field(format_sig6(r.t_comp_s));
    field(format_sig6(r.alg_throughput_bps));
    field(format_sig6(r.sc_throughput_bps));
    field(format_sig6(r.sc_efficiency_bps_hz));
    field(format_sig6(r.classic_rate_bps));
    field(format_sig6(r.classic_se_bps_hz));
    field(r.shannon_capacity_bps ? format_sig6(*r.shannon_capacity_bps) : std::string{});
    return row;
}

}  // namespace sca::metrics

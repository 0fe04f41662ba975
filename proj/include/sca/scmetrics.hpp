#pragma once

/**
 * @file scmetrics.hpp
 * @brief Classic and complexity-aware rate metrics.
 *
 * With B bits per symbol, T baseband instructions, a processor running
 * I instructions/s and an airtime of T_sym seconds:
 *
 *   t_comp        = T / I
 *   alg_throughput = B / t_comp           (runtime only)
 *   sc_throughput  = B / (t_comp + T_sym) (runtime plus airtime)
 *   classic_rate   = B / T_sym            (airtime only)
 *
 * Every rate is in bits/s; efficiencies divide by the bandwidth W.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sca/waveform.hpp"

namespace sca::metrics {

/// W log2(1 + snr); snr = 0 is accepted and yields 0.
double shannon_capacity(double bandwidth_hz, double snr);

/// P / (W N0)
double snr(double power_w, double bandwidth_hz, double noise_psd_w_per_hz);

double classic_rate(std::uint64_t bits, double symbol_period_s);
double classic_se(double rate_bps, double bandwidth_hz);

double t_comp(double instructions, double instr_per_s);
double alg_throughput(std::uint64_t bits, double instructions, double instr_per_s);

/// B / (T/I + T_sym). T_sym = 0 is accepted and reduces to alg_throughput.
double sc_throughput(std::uint64_t bits, double instructions, double instr_per_s, double symbol_period_s);

/// B / (t T + T_sym), the same quantity parameterised by seconds per instruction.
double r_comp(std::uint64_t bits, double seconds_per_instruction, double instructions, double symbol_period_s);

double sc_efficiency(double sc_rate_bps, double bandwidth_hz);

struct ScReport {
    double t_comp_s = 0.0;
    double alg_throughput_bps = 0.0;
    double sc_throughput_bps = 0.0;
    double sc_efficiency_bps_hz = 0.0;
    double classic_rate_bps = 0.0;
    double classic_se_bps_hz = 0.0;
    double r_comp_bps = 0.0;
    /// Present only when a channel model is supplied.
    std::optional<double> shannon_capacity_bps;
};

ScReport full_report(const waveform::WaveformModel& wf, const std::optional<waveform::ChannelModel>& channel,
                     const waveform::BasebandProcessor& processor, const waveform::ComplexityModel& complexity);

struct SweepRow {
    std::uint64_t n = 0;
    double sc_throughput_bps = 0.0;
    double sc_efficiency_bps_hz = 0.0;
};

/// One row per N, each exactly `sc_throughput` at that N.
std::vector<SweepRow> sweep_sc_throughput(std::uint64_t constellation_order, double subcarrier_spacing_hz,
                                          double instr_per_s, const waveform::ComplexityModel& complexity,
                                          const std::vector<std::uint64_t>& n_values);

/// N = n_min, 2 n_min, 4 n_min, ... while N <= n_max.
std::vector<std::uint64_t> doubling_range(std::uint64_t n_min, std::uint64_t n_max);

// Flat CSV: scenario,n,m,delta_f_hz,instr_per_s,model,t_comp_s,alg_throughput_bps,
// sc_throughput_bps,sc_efficiency_bps_hz,classic_rate_bps,classic_se_bps_hz,
// shannon_capacity_bps. Numbers use 6 significant digits; an absent channel
// leaves the capacity column empty.
std::string report_csv_header();
std::string report_csv_row(const std::string& scenario_name, const waveform::WaveformModel& wf,
                           const waveform::BasebandProcessor& processor, const std::string& model_name,
                           const ScReport& report);

/// `%.6g` formatting shared by every CSV writer.
std::string format_sig6(double v);

}  // namespace sca::metrics

#pragma once

// Scenario files: one `key = value` per line, `#` starts a comment.
//
//   scenario.name         optional, defaults to the file stem
//   waveform.n            subcarrier count N
//   waveform.delta_f_hz   subcarrier spacing in Hz (T_sym = 1/delta_f)
//   waveform.m            constellation order M
//   processor.instr_per_s baseband instruction rate
//   complexity.model      catalog model name
//   complexity.linear_c   optional coefficient for dft_linear_conjecture
//   channel.power_w       optional, together with channel.n0_w_per_hz
//   channel.n0_w_per_hz
//
// Unknown or repeated keys are errors.

#include <optional>
#include <stdexcept>
#include <string>

#include "sca/waveform.hpp"

namespace sca::scenario {

class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& message)
        : std::runtime_error(key.empty() ? message : key + ": " + message), key_(std::move(key)) {}

    const std::string& key() const { return key_; }

private:
    std::string key_;
};

struct ChannelSpec {
    double power_w = 0.0;
    double n0_w_per_hz = 0.0;

    friend bool operator==(const ChannelSpec&, const ChannelSpec&) = default;
};

struct Scenario {
    std::string name;
    waveform::WaveformModel waveform;
    waveform::BasebandProcessor processor;
    std::string complexity_name;
    double linear_c = 1.0;
    std::optional<ChannelSpec> channel;

    waveform::ComplexityModel complexity() const { return waveform::find_complexity(complexity_name, linear_c); }
    std::optional<waveform::ChannelModel> channel_model() const;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Throws ConfigError naming the offending key.
Scenario parse_scenario(const std::string& text, const std::string& default_name = "scenario");
Scenario load_scenario(const std::string& path);

/// Writes every key; parse_scenario(dump_scenario(s)) == s.
std::string dump_scenario(const Scenario& s);

}  // namespace sca::scenario

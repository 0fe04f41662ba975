#include "sca/scenario.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace sca::scenario {

namespace {

const std::array<std::string_view, 9> kKnownKeys{
    "scenario.name",  "waveform.n",          "waveform.delta_f_hz", "waveform.m",        "processor.instr_per_s",
    "complexity.model", "complexity.linear_c", "channel.power_w",     "channel.n0_w_per_hz"};

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

class Entries {
public:
    explicit Entries(std::map<std::string, std::string> kv) : kv_(std::move(kv)) {}

    bool has(const std::string& key) const { return kv_.count(key) != 0; }

    const std::string& text(const std::string& key) const {
        auto it = kv_.find(key);
        if (it == kv_.end()) throw ConfigError(key, "missing required key");
        return it->second;
    }

    double real(const std::string& key) const {
        const std::string& v = text(key);
        double out = 0.0;
        auto res = std::from_chars(v.data(), v.data() + v.size(), out);
        if (res.ec != std::errc{} || res.ptr != v.data() + v.size()) throw ConfigError(key, "not a number: '" + v + "'");
        return out;
    }

    std::uint64_t integer(const std::string& key) const {
        const std::string& v = text(key);
        std::uint64_t out = 0;
        auto res = std::from_chars(v.data(), v.data() + v.size(), out);
        if (res.ec != std::errc{} || res.ptr != v.data() + v.size()) {
            throw ConfigError(key, "not a non-negative integer: '" + v + "'");
        }
        return out;
    }

private:
    std::map<std::string, std::string> kv_;
};

// Re-raise constructor validation failures against the key that caused them.
template <typename F>
auto with_key(const std::string& key, F&& f) {
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(key, e.what());
    }
}

}  // namespace

std::optional<waveform::ChannelModel> Scenario::channel_model() const {
    if (!channel) return std::nullopt;
    return waveform::ChannelModel(waveform.bandwidth_hz(), channel->power_w, channel->n0_w_per_hz);
}

Scenario parse_scenario(const std::string& text, const std::string& default_name) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) throw ConfigError("", "line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(std::string_view(body).substr(0, eq));
        const std::string value = trim(std::string_view(body).substr(eq + 1));
        if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end()) {
            throw ConfigError(key, "unknown key");
        }
        if (value.empty()) throw ConfigError(key, "empty value");
        if (!kv.emplace(key, value).second) throw ConfigError(key, "duplicate key");
    }
    const Entries e(std::move(kv));

    const std::string name = e.has("scenario.name") ? e.text("scenario.name") : default_name;
    const std::uint64_t n = e.integer("waveform.n");
    const double delta_f = e.real("waveform.delta_f_hz");
    const std::uint64_t m = e.integer("waveform.m");

    auto wf = with_key("waveform.n", [&] {
        if (!(delta_f > 0.0) || !std::isfinite(delta_f)) throw ConfigError("waveform.delta_f_hz", "must be positive");
        if (m < 2 || !waveform::is_power_of_two(m)) throw ConfigError("waveform.m", "must be a power of two >= 2");
        return waveform::WaveformModel(name, n, delta_f, m);
    });
    auto proc = with_key("processor.instr_per_s",
                         [&] { return waveform::BasebandProcessor(e.real("processor.instr_per_s")); });

    const double linear_c = e.has("complexity.linear_c") ? e.real("complexity.linear_c") : 1.0;
    const std::string model_name = e.text("complexity.model");
    const auto model = with_key("complexity.model", [&] {
        if (!(linear_c > 0.0)) throw ConfigError("complexity.linear_c", "must be positive");
        return waveform::find_complexity(model_name, linear_c);
    });
    with_key("waveform.n", [&] {
        model.check_domain(n);
        return 0;
    });

    std::optional<ChannelSpec> channel;
    const bool has_p = e.has("channel.power_w");
    const bool has_n0 = e.has("channel.n0_w_per_hz");
    if (has_p != has_n0) {
        throw ConfigError(has_p ? "channel.n0_w_per_hz" : "channel.power_w",
                          "channel.power_w and channel.n0_w_per_hz must be given together");
    }
    if (has_p) {
        ChannelSpec spec{e.real("channel.power_w"), e.real("channel.n0_w_per_hz")};
        if (!(spec.power_w > 0.0)) throw ConfigError("channel.power_w", "must be positive");
        if (!(spec.n0_w_per_hz > 0.0)) throw ConfigError("channel.n0_w_per_hz", "must be positive");
        channel = spec;
    }

    return Scenario{name, std::move(wf), proc, model_name, linear_c, channel};
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("", "cannot open scenario file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), std::filesystem::path(path).stem().string());
}

std::string dump_scenario(const Scenario& s) {
    std::string out;
    auto put = [&out](std::string_view key, const std::string& value) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    };
    put("scenario.name", s.name);
    put("waveform.n", std::to_string(s.waveform.n_subcarriers()));
    put("waveform.delta_f_hz", format_double(s.waveform.subcarrier_spacing_hz()));
    put("waveform.m", std::to_string(s.waveform.constellation_order()));
    put("processor.instr_per_s", format_double(s.processor.instr_per_s()));
    put("complexity.model", s.complexity_name);
    put("complexity.linear_c", format_double(s.linear_c));
    if (s.channel) {
        put("channel.power_w", format_double(s.channel->power_w));
        put("channel.n0_w_per_hz", format_double(s.channel->n0_w_per_hz));
    }
    return out;
}

}  // namespace sca::scenario

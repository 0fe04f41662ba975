#include "sca/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "sca/bench.hpp"
#include "sca/classifier.hpp"
#include "sca/scenario.hpp"
#include "sca/scmetrics.hpp"

namespace sca::cli {

namespace {

using metrics::format_sig6;

// CLI surface units.
constexpr double kUs = 1e-6;
constexpr double kMHz = 1e6;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string csv_path;
    bool quiet = false;

    std::string scenario_a;
    std::string scenario_b;

    std::string b_expr;
    std::string t_expr;
    bool ofdm = false;
    std::string conjecture;
    bool capacity = false;
    bool record = false;

    std::uint64_t n_min = 64;
    std::uint64_t n_max = 65536;

    std::string impl;
    std::vector<std::uint64_t> n_list;
    unsigned reps = 5;
    std::uint64_t seed = 1;
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << content;
}

void row(std::ostream& out, const std::string& label, const std::string& value, const std::string& unit = "") {
    char buf[128];
    std::snprintf(buf, sizeof buf, "  %-24s %s", label.c_str(), value.c_str());
    out << buf;
    if (!unit.empty()) out << ' ' << unit;
    out << '\n';
}

struct Analysis {
    scenario::Scenario sc;
    metrics::ScReport report;
    double instructions = 0.0;
};

Analysis analyze(const std::string& path) {
    Analysis a{scenario::load_scenario(path), {}, 0.0};
    const auto model = a.sc.complexity();
    a.instructions = model.instructions(a.sc.waveform.n_subcarriers());
    a.report = metrics::full_report(a.sc.waveform, a.sc.channel_model(), a.sc.processor, model);
    return a;
}

void print_analysis(std::ostream& out, const Analysis& a) {
    const auto& wf = a.sc.waveform;
    const auto& r = a.report;
    out << "scenario: " << a.sc.name << '\n';
    row(out, "subcarriers N", std::to_string(wf.n_subcarriers()));
    row(out, "constellation M", std::to_string(wf.constellation_order()));
    row(out, "subcarrier spacing", format_sig6(wf.subcarrier_spacing_hz() / kMHz), "MHz");
    row(out, "symbol period T_sym", format_sig6(wf.symbol_period_s() / kUs), "us");
    row(out, "bandwidth W", format_sig6(wf.bandwidth_hz() / kMHz), "MHz");
    row(out, "bits per symbol B", std::to_string(wf.bits_per_frame()));
    row(out, "complexity model", a.sc.complexity_name + " [" + growth::to_string(a.sc.complexity().symbolic()) + "]");
    row(out, "instructions T", format_sig6(a.instructions));
    row(out, "processor rate I", format_sig6(a.sc.processor.instr_per_s() * kUs), "instr/us");
    row(out, "min processor rate", format_sig6(waveform::min_processor_rate(a.instructions, wf.symbol_period_s()) * kUs),
        "instr/us");
    row(out, "t_comp", format_sig6(r.t_comp_s / kUs), "us");
    row(out, "algorithmic A", format_sig6(r.alg_throughput_bps * kUs), "bits/us");
    row(out, "SC throughput SC_R", format_sig6(r.sc_throughput_bps * kUs), "bits/us");
    row(out, "SC efficiency SC_SE", format_sig6(r.sc_efficiency_bps_hz), "bits/s/Hz");
    row(out, "classic rate R", format_sig6(r.classic_rate_bps * kUs), "bits/us");
    row(out, "classic SE", format_sig6(r.classic_se_bps_hz), "bits/s/Hz");
    if (r.shannon_capacity_bps) {
        row(out, "SNR", format_sig6(a.sc.channel_model()->snr()));
        row(out, "Shannon capacity C", format_sig6(*r.shannon_capacity_bps * kUs), "bits/us");
    }
}

int cmd_analyze(const Options& o, std::ostream& out) {
    const Analysis a = analyze(o.scenario_a);
    if (!o.quiet) print_analysis(out, a);
    if (!o.csv_path.empty()) {
        write_file(o.csv_path, metrics::report_csv_header() + "\n" +
                                   metrics::report_csv_row(a.sc.name, a.sc.waveform, a.sc.processor,
                                                           a.sc.complexity_name, a.report) +
                                   "\n");
    }
    return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
    const Analysis a = analyze(o.scenario_a);
    const Analysis b = analyze(o.scenario_b);
    const double classic_gain = a.report.classic_rate_bps / b.report.classic_rate_bps;
    const double sc_gain = a.report.sc_throughput_bps / b.report.sc_throughput_bps;
    if (!o.quiet) {
        out << "compare: " << a.sc.name << " vs " << b.sc.name << '\n';
        row(out, "classic rate R (a)", format_sig6(a.report.classic_rate_bps * kUs), "bits/us");
        row(out, "classic rate R (b)", format_sig6(b.report.classic_rate_bps * kUs), "bits/us");
        row(out, "SC throughput (a)", format_sig6(a.report.sc_throughput_bps * kUs), "bits/us");
        row(out, "SC throughput (b)", format_sig6(b.report.sc_throughput_bps * kUs), "bits/us");
        row(out, "classic gain", format_sig6(classic_gain));
        row(out, "SC gain", format_sig6(sc_gain));
        row(out, "SC gain / classic gain", format_sig6(sc_gain / classic_gain));
    }
    if (!o.csv_path.empty()) {
        std::string csv = metrics::report_csv_header() + "\n";
        for (const Analysis* x : {&a, &b}) {
            csv += metrics::report_csv_row(x->sc.name, x->sc.waveform, x->sc.processor, x->sc.complexity_name,
                                           x->report) +
                   "\n";
        }
        write_file(o.csv_path, csv);
    }
    return kExitOk;
}

growth::GrowthFn parse_expr(const std::string& text) {
    try {
        return growth::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int cmd_classify(const Options& o, std::ostream& out) {
    classifier::Verdict v;
    if (o.ofdm) {
        if (o.conjecture.empty()) {
            throw UsageError("--ofdm requires --conjecture {nlogn|linear[:c]}; the DFT lower bound is never assumed");
        }
        if (!o.b_expr.empty() || !o.t_expr.empty()) throw UsageError("--ofdm cannot be combined with --b/--t");
        try {
            v = classifier::classify_ofdm(classifier::parse_conjecture(o.conjecture));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    } else {
        if (o.b_expr.empty() || o.t_expr.empty()) throw UsageError("classify needs --b and --t, or --ofdm");
        if (!o.conjecture.empty()) throw UsageError("--conjecture only applies with --ofdm");
        const auto b = parse_expr(o.b_expr);
        const auto t = parse_expr(o.t_expr);
        v = o.capacity ? classifier::comp_limited({b, t}) : classifier::scalability(b, t);
    }
    if (!o.quiet) out << (o.record ? classifier::to_record(v) : classifier::to_human(v));
    if (!o.csv_path.empty()) write_file(o.csv_path, classifier::to_record(v));
    return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
    const auto sc = scenario::load_scenario(o.scenario_a);
    const auto model = sc.complexity();
    const auto ns = metrics::doubling_range(o.n_min, o.n_max);
    const auto rows = metrics::sweep_sc_throughput(sc.waveform.constellation_order(), sc.waveform.subcarrier_spacing_hz(),
                                                   sc.processor.instr_per_s(), model, ns);
    std::string csv = "n,sc_throughput_bps,sc_efficiency_bps_hz\n";
    for (const auto& r : rows) {
        csv += std::to_string(r.n) + "," + format_sig6(r.sc_throughput_bps) + "," + format_sig6(r.sc_efficiency_bps_hz) +
               "\n";
    }
    if (o.csv_path.empty()) {
        out << csv;
        return kExitOk;
    }
    write_file(o.csv_path, csv);
    if (!o.quiet) {
        const auto peak = std::max_element(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
            return x.sc_throughput_bps < y.sc_throughput_bps;
        });
        out << "sweep: " << sc.name << " (" << model.name() << "), " << rows.size() << " rows\n";
        row(out, "peak N", std::to_string(peak->n));
        row(out, "peak SC throughput", format_sig6(peak->sc_throughput_bps * kUs), "bits/us");
    }
    return kExitOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
    const auto& impls = bench::bench_impls();
    if (std::find(impls.begin(), impls.end(), o.impl) == impls.end()) throw UsageError("unknown impl '" + o.impl + "'");
    if (o.n_list.empty()) throw UsageError("--n-list must name at least one length");
    if (o.reps < 3) throw UsageError("--reps must be at least 3");
    for (auto n : o.n_list) {
        if (n < 1) throw UsageError("transform length must be at least 1");
        if (o.impl == "fft_radix2" && !waveform::is_power_of_two(n)) {
            throw UsageError("radix-2 requires power-of-two length, got " + std::to_string(n));
        }
    }

    std::vector<bench::BenchSample> samples;
    std::string csv = bench::bench_csv_header() + "\n";
    for (auto n : o.n_list) {
        samples.push_back(bench::measure(o.impl, n, o.reps, o.seed));
        csv += bench::bench_csv_row(samples.back()) + "\n";
    }
    if (o.csv_path.empty()) {
        out << csv;
        return kExitOk;
    }
    write_file(o.csv_path, csv);
    if (!o.quiet) {
        out << "bench: " << o.impl << ", " << samples.size() << " lengths, " << o.reps << " reps\n";
        if (samples.size() >= 3) {
            row(out, "calibrated rate", format_sig6(bench::calibrate_processor(samples) * kUs), "instr/us");
        }
        try {
            const auto fit = bench::fit_growth(samples);
            row(out, "best fit", std::string(bench::shape_name(fit.best_model)) + " coeff " + format_sig6(fit.fitted_coeff));
            row(out, "log-log slope", format_sig6(fit.loglog_slope));
        } catch (const std::invalid_argument&) {
            // Too few lengths for a fit; the CSV is still complete.
        }
    }
    return kExitOk;
}

int cmd_dump(const Options& o, std::ostream& out) {
    if (!o.csv_path.empty()) throw UsageError("--csv is not supported by dump");
    out << scenario::dump_scenario(scenario::load_scenario(o.scenario_a));
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectro-computational analysis of waveform throughput under baseband complexity", "sca"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--csv", o.csv_path, "Write CSV (or, for classify, the structured record) to this path");
    app.add_flag("--quiet", o.quiet, "Suppress human-readable output");

    auto* analyze_cmd = app.add_subcommand("analyze", "Report all metrics for one scenario");
    analyze_cmd->add_option("scenario", o.scenario_a, "Scenario file")->required();

    auto* compare_cmd = app.add_subcommand("compare", "Classic and SC gain of scenario A over scenario B");
    compare_cmd->add_option("scenario_a", o.scenario_a, "Scenario file A")->required();
    compare_cmd->add_option("scenario_b", o.scenario_b, "Scenario file B")->required();

    auto* classify_cmd = app.add_subcommand("classify", "Scalability / comp-limited verdict");
    classify_cmd->add_option("--b", o.b_expr, "Bit growth B (or B_max with --capacity), e.g. 'N'");
    classify_cmd->add_option("--t", o.t_expr, "Complexity T (or lower bound with --capacity), e.g. 'N*log'");
    classify_cmd->add_flag("--capacity", o.capacity, "Treat --b/--t as B_max and the lower bound L");
    classify_cmd->add_flag("--ofdm", o.ofdm, "Classify uncoded OFDM");
    classify_cmd->add_option("--conjecture", o.conjecture, "DFT lower bound: nlogn | linear[:c]");
    classify_cmd->add_flag("--record", o.record, "Print the key=value record instead of the text block");

    auto* sweep_cmd = app.add_subcommand("sweep", "SC throughput over N = n-min, 2 n-min, ... <= n-max");
    sweep_cmd->add_option("scenario", o.scenario_a, "Scenario file")->required();
    sweep_cmd->add_option("--n-min", o.n_min, "Smallest N")->capture_default_str();
    sweep_cmd->add_option("--n-max", o.n_max, "Largest N")->capture_default_str();

    auto* bench_cmd = app.add_subcommand("bench", "Count and time DFT implementations");
    bench_cmd->add_option("--impl", o.impl, "dft_naive | fft_radix2")->required();
    bench_cmd->add_option("--n-list", o.n_list, "Comma-separated lengths")->delimiter(',')->required();
    bench_cmd->add_option("--reps", o.reps, "Timed repetitions per length (>= 3)")->capture_default_str();
    bench_cmd->add_option("--seed", o.seed, "Input PRNG seed")->capture_default_str();

    auto* dump_cmd = app.add_subcommand("dump", "Print a scenario with every key made explicit");
    dump_cmd->add_option("scenario", o.scenario_a, "Scenario file")->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (analyze_cmd->parsed()) return cmd_analyze(o, out);
        if (compare_cmd->parsed()) return cmd_compare(o, out);
        if (classify_cmd->parsed()) return cmd_classify(o, out);
        if (sweep_cmd->parsed()) return cmd_sweep(o, out);
        if (bench_cmd->parsed()) return cmd_bench(o, out);
        if (dump_cmd->parsed()) return cmd_dump(o, out);
    } catch (const scenario::ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("sca");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace sca::cli

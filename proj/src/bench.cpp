#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <set>
#include <stdexcept>

#include "sca/bench.hpp"
#include "sca/scmetrics.hpp"

namespace sca::bench {

namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

double shape_value(GrowthShape s, double n) {
    switch (s) {
        case GrowthShape::Linear: return n;
        case GrowthShape::NLogN: return n * std::log2(n);
        case GrowthShape::Quadratic: return n * n;
    }
    return n;
}

template <typename Transform>
double time_once(const ComplexVec& input, ComplexVec& work, Transform&& run) {
    std::copy(input.begin(), input.end(), work.begin());
    const auto start = std::chrono::steady_clock::now();
    run();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

const std::vector<std::string>& bench_impls() {
    static const std::vector<std::string> names{"dft_naive", "fft_radix2"};
    return names;
}

BenchSample measure(const std::string& impl_name, std::uint64_t n, unsigned reps, std::uint64_t seed) {
    if (reps < 3) throw std::invalid_argument("at least 3 repetitions are required");
    if (std::find(bench_impls().begin(), bench_impls().end(), impl_name) == bench_impls().end()) {
        throw std::invalid_argument("unknown impl '" + impl_name + "'");
    }

    const ComplexVec input = random_vector(n, seed);
    ComplexVec work(n);
    ComplexVec out(n);
    std::vector<double> times;
    times.reserve(reps);
    OpCounts counts;

    if (impl_name == "dft_naive") {
        const NaiveDft plan(n);
        for (unsigned r = 0; r < reps; ++r) {
            OpCounts ops;
            times.push_back(time_once(input, work, [&] { plan.transform(work, out, ops); }));
            counts = ops;
        }
    } else {
        const Radix2Fft plan(n);
        for (unsigned r = 0; r < reps; ++r) {
            OpCounts ops;
            times.push_back(time_once(input, work, [&] { plan.transform(work, ops); }));
            counts = ops;
        }
    }

    BenchSample s;
    s.impl_name = impl_name;
    s.n = n;
    s.op_mul = counts.mul;
    s.op_add = counts.add;
    // Guard against a zero reading on coarse clocks.
    s.wall_time_s = std::max(median(std::move(times)), 1e-9);
    s.reps = reps;
    return s;
}

std::string_view shape_name(GrowthShape s) {
    switch (s) {
        case GrowthShape::Linear: return "linear";
        case GrowthShape::NLogN: return "nlogn";
        case GrowthShape::Quadratic: return "quadratic";
    }
    return "?";
}

growth::GrowthFn FitResult::as_growth() const {
    switch (best_model) {
        case GrowthShape::Linear: return growth::GrowthFn::linear(fitted_coeff);
        case GrowthShape::NLogN: return growth::GrowthFn::n_log_n(fitted_coeff);
        case GrowthShape::Quadratic: return growth::GrowthFn::quadratic(fitted_coeff);
    }
    return growth::GrowthFn::linear(fitted_coeff);
}

FitResult fit_growth(std::span<const GrowthPoint> points) {
    std::set<std::uint64_t> distinct;
    for (const auto& p : points) {
        if (p.n < 2) throw std::invalid_argument("fit points need n >= 2");
        if (!(p.value > 0.0) || !std::isfinite(p.value)) throw std::invalid_argument("fit values must be positive");
        distinct.insert(p.n);
    }
    if (distinct.size() < 4 || *distinct.rbegin() < 8 * *distinct.begin()) {
        throw std::invalid_argument("range too narrow to discriminate models");
    }

    // Shape fits in log space: ln y = ln c + ln s(n).
    FitResult best;
    bool first = true;
    for (GrowthShape shape : {GrowthShape::Linear, GrowthShape::NLogN, GrowthShape::Quadratic}) {
        double mean = 0.0;
        for (const auto& p : points) mean += std::log(p.value) - std::log(shape_value(shape, static_cast<double>(p.n)));
        mean /= static_cast<double>(points.size());
        double ssr = 0.0;
        for (const auto& p : points) {
            const double r = std::log(p.value) - std::log(shape_value(shape, static_cast<double>(p.n))) - mean;
            ssr += r * r;
        }
        if (first || ssr < best.residual) {
            best.best_model = shape;
            best.fitted_coeff = std::exp(mean);
            best.residual = ssr;
            first = false;
        }
    }

    double mx = 0.0, my = 0.0;
    for (const auto& p : points) {
        mx += std::log(static_cast<double>(p.n));
        my += std::log(p.value);
    }
    mx /= static_cast<double>(points.size());
    my /= static_cast<double>(points.size());
    double sxy = 0.0, sxx = 0.0;
    for (const auto& p : points) {
        const double dx = std::log(static_cast<double>(p.n)) - mx;
        sxy += dx * (std::log(p.value) - my);
        sxx += dx * dx;
    }
    best.loglog_slope = sxy / sxx;
    return best;
}

FitResult fit_growth(std::span<const BenchSample> samples, OpField field) {
    std::vector<GrowthPoint> points;
    points.reserve(samples.size());
    for (const auto& s : samples) {
        std::uint64_t v = s.op_count();
        if (field == OpField::Mul) v = s.op_mul;
        if (field == OpField::Add) v = s.op_add;
        points.push_back({s.n, static_cast<double>(v)});
    }
    return fit_growth(points);
}

double calibrate_processor(std::span<const BenchSample> samples) {
    if (samples.size() < 3) throw std::invalid_argument("calibration needs at least 3 samples");
    std::vector<double> rates;
    rates.reserve(samples.size());
    for (const auto& s : samples) {
        if (!(s.wall_time_s > 0.0)) throw std::invalid_argument("sample wall time must be positive");
        rates.push_back(static_cast<double>(s.op_count()) / s.wall_time_s);
    }
    return median(std::move(rates));
}

std::string bench_csv_header() { return "impl,n,op_count_mul,op_count_add,wall_time_s,reps"; }

std::string bench_csv_row(const BenchSample& s) {
    return s.impl_name + "," + std::to_string(s.n) + "," + std::to_string(s.op_mul) + "," + std::to_string(s.op_add) +
           "," + metrics::format_sig6(s.wall_time_s) + "," + std::to_string(s.reps);
}

}  // namespace sca::bench

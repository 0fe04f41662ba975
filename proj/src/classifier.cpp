#include "sca/classifier.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "sca/scmetrics.hpp"

namespace sca::classifier {

using growth::AsymRelation;
using growth::GrowthFn;

namespace {

std::string limit_text(const AsymRelation& r, bool exact = false) {
    switch (r.kind) {
        case AsymRelation::Kind::Theta: {
            if (!exact) return metrics::format_sig6(r.limit);
            char buf[64];
            auto res = std::to_chars(buf, buf + sizeof buf, r.limit);
            return std::string(buf, res.ptr);
        }
        case AsymRelation::Kind::LittleO: return "0";
        case AsymRelation::Kind::LittleOmega: return "inf";
    }
    return "?";
}

std::string case_text(const AsymRelation& r, const std::string& num, const std::string& den) {
    const std::string ratio = "lim " + num + "/" + den;
    switch (r.kind) {
        case AsymRelation::Kind::Theta:
            return num + " = Theta(" + den + "): " + ratio + " = " + limit_text(r) + " > 0";
        case AsymRelation::Kind::LittleO: return num + " = o(" + den + "): " + ratio + " = 0";
        case AsymRelation::Kind::LittleOmega: return num + " = omega(" + den + "): " + ratio + " = inf";
    }
    return {};
}

}  // namespace

GrowthFn DftConjecture::lower_bound() const {
    return kind == Kind::NLogN ? GrowthFn::n_log_n() : GrowthFn::linear(linear_c);
}

DftConjecture parse_conjecture(const std::string& text) {
    if (text == "nlogn") return DftConjecture::n_log_n();
    if (text == "linear") return DftConjecture::linear(1.0);
    if (text.rfind("linear:", 0) == 0) {
        const char* first = text.data() + 7;
        const char* last = text.data() + text.size();
        double c = 0.0;
        auto res = std::from_chars(first, last, c);
        if (res.ec != std::errc{} || res.ptr != last || !(c > 0.0) || !std::isfinite(c)) {
            throw std::invalid_argument("linear conjecture coefficient must be a positive number: '" + text + "'");
        }
        return DftConjecture::linear(c);
    }
    throw std::invalid_argument("unknown conjecture '" + text + "' (expected nlogn or linear[:c])");
}

Verdict scalability(const GrowthFn& bits, const GrowthFn& complexity) {
    Verdict v;
    v.relation = growth::compare(bits, complexity);
    v.scalable = !v.relation.is_little_o();
    v.rationale = case_text(v.relation, "B", "T") +
                  (v.scalable ? "; B = Omega(T), SC throughput does not vanish"
                              : "; SC throughput vanishes as N grows");
    return v;
}

CapacityLimit sc_capacity_limit(const CapacityQuery& q) {
    const auto r = growth::compare(q.b_max, q.lower_bound);
    switch (r.kind) {
        case AsymRelation::Kind::LittleO: return {CapacityLimit::Kind::Zero, 0.0};
        case AsymRelation::Kind::Theta: return {CapacityLimit::Kind::Positive, r.limit};
        case AsymRelation::Kind::LittleOmega: return {CapacityLimit::Kind::Infinite, 0.0};
    }
    return {};
}

Verdict comp_limited(const CapacityQuery& q) {
    Verdict v;
    v.relation = growth::compare(q.b_max, q.lower_bound);
    v.scalable = !v.relation.is_little_o();
    v.comp_limited = sc_capacity_limit(q).kind == CapacityLimit::Kind::Zero;
    v.rationale = case_text(v.relation, "B_max", "L") +
                  (*v.comp_limited ? "; SC capacity vanishes, comp-limited"
                                   : "; SC capacity stays positive, not comp-limited");
    return v;
}

Verdict classify_ofdm(const DftConjecture& conjecture) {
    Verdict v = comp_limited({GrowthFn::linear(), conjecture.lower_bound()});
    const std::string assumption = conjecture.kind == DftConjecture::Kind::NLogN
                                       ? "DFT lower bound Omega(N log2 N) assumed"
                                       : "DFT lower bound Omega(N) assumed (linear-time DFT, c=" +
                                             metrics::format_sig6(conjecture.linear_c) + ")";
    v.rationale = assumption + "; B_max = N; " + v.rationale;
    return v;
}

std::string to_human(const Verdict& v) {
    std::string out;
    out += "relation: " + std::string(growth::relation_name(v.relation.kind)) + " (limit " + limit_text(v.relation) + ")\n";
    out += std::string("scalable: ") + (v.scalable ? "yes" : "no") + "\n";
    if (v.comp_limited) out += std::string("comp-limited: ") + (*v.comp_limited ? "yes" : "no") + "\n";
    out += "rationale: " + v.rationale + "\n";
    return out;
}

std::string to_record(const Verdict& v) {
    std::string out;
    out += "relation=" + std::string(growth::relation_name(v.relation.kind)) + "\n";
    out += "limit=" + limit_text(v.relation, true) + "\n";
    out += std::string("scalable=") + (v.scalable ? "true" : "false") + "\n";
    out += "comp_limited=" + (v.comp_limited ? std::string(*v.comp_limited ? "true" : "false") : std::string("na")) + "\n";
    out += "rationale=" + v.rationale + "\n";
    return out;
}

}  // namespace sca::classifier

#pragma once

// Scalability and comp-limited decisions over growth functions.
//
// scalability(B, T): the SC throughput B/T survives N -> infinity iff
// B = Omega(T).
// comp_limited({B_max, L}): the SC capacity B_max/L tends to zero, i.e.
// B_max = o(L). The DFT lower bound L is always a caller-supplied
// assumption; nothing here picks one by default.

#include <optional>
#include <string>

#include "sca/growth.hpp"

namespace sca::classifier {

struct CapacityQuery {
    growth::GrowthFn b_max;
    growth::GrowthFn lower_bound;
};

struct Verdict {
    growth::AsymRelation relation;
    bool scalable = false;
    /// Set only for capacity queries.
    std::optional<bool> comp_limited;
    std::string rationale;
};

struct CapacityLimit {
    enum class Kind { Zero, Positive, Infinite };
    Kind kind = Kind::Zero;
    double value = 0.0;  // for Positive

    friend bool operator==(const CapacityLimit&, const CapacityLimit&) = default;
};

/// Assumed lower bound of the N-point DFT.
struct DftConjecture {
    enum class Kind { NLogN, Linear };
    Kind kind = Kind::NLogN;
    double linear_c = 1.0;

    static DftConjecture n_log_n() { return {Kind::NLogN, 1.0}; }
    static DftConjecture linear(double c) { return {Kind::Linear, c}; }

    growth::GrowthFn lower_bound() const;
};

/// Accepts "nlogn", "linear" and "linear:<c>".
DftConjecture parse_conjecture(const std::string& text);

Verdict scalability(const growth::GrowthFn& bits, const growth::GrowthFn& complexity);
CapacityLimit sc_capacity_limit(const CapacityQuery& q);
Verdict comp_limited(const CapacityQuery& q);

/// Uncoded OFDM: B_max = N against the conjectured DFT lower bound.
Verdict classify_ofdm(const DftConjecture& conjecture);

/// Multi-line block for terminals.
std::string to_human(const Verdict& v);

/// key=value lines: relation, limit, scalable, comp_limited, rationale.
std::string to_record(const Verdict& v);

}  // namespace sca::classifier

#include "sca/growth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sca::growth {

namespace {

__extension__ typedef __int128 Wide;

std::int64_t narrow(Wide v) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw std::overflow_error("rational exponent overflow");
    }
    return static_cast<std::int64_t>(v);
}

// (poly_exp, log_exp) ordering; larger pair grows faster.
std::strong_ordering compare_pairs(const GrowthTerm& a, const GrowthTerm& b) {
    if (auto c = a.poly_exp <=> b.poly_exp; c != 0) return c;
    return a.log_exp <=> b.log_exp;
}

void validate(const GrowthTerm& t) {
    if (!(t.coeff > 0.0) || !std::isfinite(t.coeff)) {
        throw std::invalid_argument("growth term coefficient must be positive and finite");
    }
    if (t.poly_exp < Rational{0} || t.log_exp < Rational{0}) {
        throw std::invalid_argument("growth term exponents must be non-negative");
    }
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational operator+(Rational a, Rational b) {
    const Wide num = Wide{a.num_} * b.den_ + Wide{b.num_} * a.den_;
    const Wide den = Wide{a.den_} * b.den_;
    // Reduce in wide arithmetic before narrowing.
    Wide x = num < 0 ? -num : num;
    Wide y = den;
    while (y != 0) {
        Wide r = x % y;
        x = y;
        y = r;
    }
    const Wide g = x == 0 ? 1 : x;
    return Rational{narrow(num / g), narrow(den / g)};
}

std::strong_ordering operator<=>(Rational a, Rational b) {
    const Wide lhs = Wide{a.num_} * b.den_;
    const Wide rhs = Wide{b.num_} * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string to_string(Rational r) {
    if (r.is_integer()) return std::to_string(r.num());
    return std::to_string(r.num()) + "/" + std::to_string(r.den());
}

GrowthFn::GrowthFn() : terms_{GrowthTerm{1.0, Rational{0}, Rational{0}}} {}

GrowthFn GrowthFn::constant(double c) { return normalize({GrowthTerm{c, Rational{0}, Rational{0}}}); }

GrowthFn GrowthFn::monomial(double coeff, Rational poly_exp, Rational log_exp) {
    return normalize({GrowthTerm{coeff, poly_exp, log_exp}});
}

std::string_view relation_name(AsymRelation::Kind kind) {
    switch (kind) {
        case AsymRelation::Kind::Theta: return "theta";
        case AsymRelation::Kind::LittleO: return "o";
        case AsymRelation::Kind::LittleOmega: return "omega";
    }
    return "?";
}

GrowthFn normalize(std::vector<GrowthTerm> terms) {
    if (terms.empty()) throw std::invalid_argument("empty growth function");
    for (const auto& t : terms) validate(t);

    std::sort(terms.begin(), terms.end(),
              [](const GrowthTerm& a, const GrowthTerm& b) { return compare_pairs(a, b) > 0; });

    std::vector<GrowthTerm> merged;
    merged.reserve(terms.size());
    for (const auto& t : terms) {
        if (!merged.empty() && compare_pairs(merged.back(), t) == 0) {
            merged.back().coeff += t.coeff;
        } else {
            merged.push_back(t);
        }
    }
    return GrowthFn{std::move(merged)};
}

double eval(const GrowthFn& f, std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("evaluation below domain");
    const double x = static_cast<double>(n);
    const double lg = std::log2(x);
    double sum = 0.0;
    for (const auto& t : f.terms()) {
        double v = t.coeff;
        if (t.poly_exp != Rational{0}) v *= std::pow(x, t.poly_exp.to_double());
        if (t.log_exp != Rational{0}) v *= std::pow(lg, t.log_exp.to_double());
        sum += v;
    }
    return sum;
}

AsymRelation compare(const GrowthFn& f, const GrowthFn& g) {
    const auto& df = f.dominant();
    const auto& dg = g.dominant();
    const auto order = compare_pairs(df, dg);
    if (order < 0) return AsymRelation::little_o();
    if (order > 0) return AsymRelation::little_omega();
    return AsymRelation::theta(df.coeff / dg.coeff);
}

bool big_o(const GrowthFn& f, const GrowthFn& g) { return !compare(f, g).is_little_omega(); }

bool big_omega(const GrowthFn& f, const GrowthFn& g) { return !compare(f, g).is_little_o(); }

GrowthFn add(const GrowthFn& f, const GrowthFn& g) {
    std::vector<GrowthTerm> all = f.terms();
    all.insert(all.end(), g.terms().begin(), g.terms().end());
    return normalize(std::move(all));
}

GrowthFn mul(const GrowthFn& f, const GrowthFn& g) {
    std::vector<GrowthTerm> out;
    out.reserve(f.terms().size() * g.terms().size());
    for (const auto& a : f.terms()) {
        for (const auto& b : g.terms()) {
            out.push_back({a.coeff * b.coeff, a.poly_exp + b.poly_exp, a.log_exp + b.log_exp});
        }
    }
    return normalize(std::move(out));
}

}  // namespace sca::growth

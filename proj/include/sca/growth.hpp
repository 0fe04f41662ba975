#pragma once

/**
 * @file growth.hpp
 * @brief Exact poly-log growth functions and their asymptotic comparison.
 *
 * A growth function is a finite sum of terms c * N^p * (log2 N)^q with
 * c > 0 and rational p, q >= 0. Inside this family the limit of f(N)/g(N)
 * as N -> infinity always exists, and is decided by the dominant exponent
 * pairs alone:
 *
 *   compare(3N, N)         = Theta(3)
 *   compare(N, N log2 N)   = LittleO
 *   compare(N^2, N log2 N) = LittleOmega
 *
 * Text form (parse/to_string): terms joined by '+', each term a product of
 * factors joined by '*': a positive number, `N[^p]`, or `log[^q]`, where an
 * exponent is an integer, `a/b`, or `(a/b)`. Example: `3*N^2*log^1 + N`.
 */

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sca::growth {

/// Exact rational number with a positive denominator, always reduced.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(Rational a, Rational b);
    friend bool operator==(Rational a, Rational b) = default;
    friend std::strong_ordering operator<=>(Rational a, Rational b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::string to_string(Rational r);

/// One term c * N^p * (log2 N)^q.
struct GrowthTerm {
    double coeff = 1.0;
    Rational poly_exp{};
    Rational log_exp{};

    friend bool operator==(const GrowthTerm&, const GrowthTerm&) = default;
};

/// Sum of GrowthTerms in normal form: exponent pairs strictly decreasing
/// (lexicographically by (poly_exp, log_exp)), no duplicates.
class GrowthFn {
public:
    /// Constant function 1.
    GrowthFn();

    static GrowthFn constant(double c);
    static GrowthFn monomial(double coeff, Rational poly_exp, Rational log_exp = Rational{0});
    /// N
    static GrowthFn linear(double coeff = 1.0) { return monomial(coeff, 1); }
    /// N log2 N
    static GrowthFn n_log_n(double coeff = 1.0) { return monomial(coeff, 1, 1); }
    /// N^2
    static GrowthFn quadratic(double coeff = 1.0) { return monomial(coeff, 2); }

    const std::vector<GrowthTerm>& terms() const { return terms_; }
    const GrowthTerm& dominant() const { return terms_.front(); }

    friend bool operator==(const GrowthFn&, const GrowthFn&) = default;

private:
    friend GrowthFn normalize(std::vector<GrowthTerm> terms);
    explicit GrowthFn(std::vector<GrowthTerm> normal_terms) : terms_(std::move(normal_terms)) {}

    std::vector<GrowthTerm> terms_;
};

/// Outcome of lim f(N)/g(N): a positive constant, zero, or infinity.
struct AsymRelation {
    enum class Kind { Theta, LittleO, LittleOmega };

    Kind kind = Kind::Theta;
    double limit = 1.0;  // only meaningful for Theta

    static AsymRelation theta(double limit) { return {Kind::Theta, limit}; }
    static AsymRelation little_o() { return {Kind::LittleO, 0.0}; }
    static AsymRelation little_omega() { return {Kind::LittleOmega, 0.0}; }

    bool is_theta() const { return kind == Kind::Theta; }
    bool is_little_o() const { return kind == Kind::LittleO; }
    bool is_little_omega() const { return kind == Kind::LittleOmega; }

    friend bool operator==(const AsymRelation&, const AsymRelation&) = default;
};

/// "theta", "o" or "omega".
std::string_view relation_name(AsymRelation::Kind kind);

/// Sorts, merges duplicate exponent pairs and validates every term.
/// Throws std::invalid_argument on an empty list or an invalid term.
GrowthFn normalize(std::vector<GrowthTerm> terms);

/// Sum of c * n^p * (log2 n)^q. Throws std::invalid_argument for n < 2.
double eval(const GrowthFn& f, std::uint64_t n);

AsymRelation compare(const GrowthFn& f, const GrowthFn& g);

/// f = O(g)
bool big_o(const GrowthFn& f, const GrowthFn& g);
/// f = Omega(g)
bool big_omega(const GrowthFn& f, const GrowthFn& g);

GrowthFn add(const GrowthFn& f, const GrowthFn& g);
GrowthFn mul(const GrowthFn& f, const GrowthFn& g);

inline GrowthFn operator+(const GrowthFn& f, const GrowthFn& g) { return add(f, g); }
inline GrowthFn operator*(const GrowthFn& f, const GrowthFn& g) { return mul(f, g); }

/// Canonical text form; parse(to_string(f)) == f.
std::string to_string(const GrowthFn& f);

/// Throws std::invalid_argument with the offending position on bad input.
GrowthFn parse(std::string_view text);

}  // namespace sca::growth

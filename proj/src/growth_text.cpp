#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>

#include "sca/growth.hpp"

namespace sca::growth {

namespace {

std::string format_coeff(double c) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, c);
    return std::string(buf, res.ptr);
}

std::string format_exponent(Rational r) {
    if (r.is_integer()) return std::to_string(r.num());
    return "(" + to_string(r) + ")";
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    GrowthFn run() {
        std::vector<GrowthTerm> terms;
        terms.push_back(term());
        skip_space();
        while (peek() == '+') {
            ++pos_;
            terms.push_back(term());
            skip_space();
        }
        if (pos_ != text_.size()) fail("unexpected character");
        return normalize(std::move(terms));
    }

private:
    GrowthTerm term() {
        GrowthTerm t{1.0, Rational{0}, Rational{0}};
        factor(t);
        skip_space();
        while (peek() == '*') {
            ++pos_;
            factor(t);
            skip_space();
        }
        return t;
    }

    void factor(GrowthTerm& t) {
        skip_space();
        const char c = peek();
        if (c == 'N') {
            ++pos_;
            t.poly_exp = t.poly_exp + optional_exponent();
        } else if (text_.substr(pos_, 3) == "log") {
            pos_ += 3;
            t.log_exp = t.log_exp + optional_exponent();
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            double v = 0.0;
            const char* first = text_.data() + pos_;
            auto res = std::from_chars(first, text_.data() + text_.size(), v);
            if (res.ec != std::errc{}) fail("malformed number");
            pos_ += static_cast<std::size_t>(res.ptr - first);
            if (!(v > 0.0)) fail("coefficient must be positive");
            t.coeff *= v;
        } else {
            fail("expected a number, 'N' or 'log'");
        }
    }

    Rational optional_exponent() {
        skip_space();
        if (peek() != '^') return Rational{1};
        ++pos_;
        skip_space();
        const bool paren = peek() == '(';
        if (paren) ++pos_;
        Rational r = decimal();
        skip_space();
        if (peek() == '/') {
            ++pos_;
            const Rational d = decimal();
            if (d.num() == 0) fail("zero exponent denominator");
            r = Rational{r.num() * d.den(), r.den() * d.num()};
        }
        if (paren) {
            skip_space();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
        }
        return r;
    }

    // Digits with an optional fractional part, read exactly.
    Rational decimal() {
        skip_space();
        std::int64_t num = 0;
        std::int64_t den = 1;
        bool any = false;
        bool frac = false;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                if (num > (INT64_MAX - 9) / 10 || (frac && den > INT64_MAX / 10)) fail("exponent too large");
                num = num * 10 + (c - '0');
                if (frac) den *= 10;
                any = true;
            } else if (c == '.' && !frac) {
                frac = true;
            } else {
                break;
            }
            ++pos_;
        }
        if (!any) fail("expected an exponent");
        return Rational{num, den};
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("growth expression '" + std::string(text_) + "' at column " +
                                    std::to_string(pos_ + 1) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const GrowthFn& f) {
    std::string out;
    for (const auto& t : f.terms()) {
        if (!out.empty()) out += " + ";
        std::string term;
        const bool has_n = t.poly_exp != Rational{0};
        const bool has_log = t.log_exp != Rational{0};
        if (t.coeff != 1.0 || (!has_n && !has_log)) term = format_coeff(t.coeff);
        auto append = [&term](std::string factor) {
            if (!term.empty()) term += '*';
            term += factor;
        };
        if (has_n) append(t.poly_exp == Rational{1} ? "N" : "N^" + format_exponent(t.poly_exp));
        if (has_log) append(t.log_exp == Rational{1} ? "log" : "log^" + format_exponent(t.log_exp));
        out += term;
    }
    return out;
}

GrowthFn parse(std::string_view text) { return Parser{text}.run(); }

}  // namespace sca::growth

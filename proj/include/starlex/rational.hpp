#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace starlex {

/// Exact arbitrary-precision rational, the scalar type for all identity work.
using Rat = mpq_class;

/// Parses "p/q", an integer "p", or a decimal literal such as "0.25".
/// Decimal input is converted digit-exactly (0.25 -> 1/4), never through a
/// floating-point round trip. Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rat parse_rational(std::string_view text);

/// "p/q" with the denominator always spelled out, e.g. "-1/1". This is the
/// form used inside JSON reports and polynomial dumps.
std::string pq_string(const Rat& r);

/// "p" when the denominator is 1, otherwise "p/q". Console-friendly.
std::string pretty_string(const Rat& r);

/// base^exp for nonnegative integer exp.
Rat rat_pow(const Rat& base, unsigned long exp);

/// A scalar of the form coef * sqrt(radicand) with a positive square-free
/// integer radicand. Rational values carry radicand 1; a zero coefficient
/// normalizes to radicand 1, and perfect-square factors of the radicand are
/// folded into the coefficient on construction. Sums are defined only for
/// matching radicands (or when one side is zero); products always are.
class SqrtRat {
public:
    SqrtRat() : coef_(0), radicand_(1) {}
    SqrtRat(const Rat& coef) : coef_(coef), radicand_(1) {}  // NOLINT(google-explicit-constructor)
    SqrtRat(int coef) : coef_(coef), radicand_(1) {}         // NOLINT(google-explicit-constructor)
    SqrtRat(Rat coef, long radicand);

    /// sqrt(s) itself, e.g. sqrt_of(3).
    static SqrtRat sqrt_of(long s) { return SqrtRat(Rat(1), s); }

    const Rat& coef() const { return coef_; }
    long radicand() const { return radicand_; }

    bool is_zero() const { return coef_ == 0; }
    bool is_rational() const { return radicand_ == 1; }

    /// The exact rational value; throws std::domain_error if irrational.
    Rat as_rational() const;

    /// coef^2 * radicand. Rational for any SqrtRat; useful for exact compares.
    Rat squared() const { return coef_ * coef_ * radicand_; }

    double to_double() const;

    /// Report form: "p/q" when rational, "sqrt(s)*p/q" otherwise.
    std::string str() const;
    /// Console form: integers print bare, a unit coefficient prints "sqrt(s)".
    std::string pretty() const;

    SqrtRat& operator+=(const SqrtRat& other);

    friend SqrtRat operator+(SqrtRat a, const SqrtRat& b) { return a += b; }
    friend SqrtRat operator*(const SqrtRat& a, const SqrtRat& b);
    friend SqrtRat operator*(const Rat& c, const SqrtRat& a) { return SqrtRat(c * a.coef_, a.radicand_); }
    friend bool operator==(const SqrtRat& a, const SqrtRat& b) {
        return a.coef_ == b.coef_ && a.radicand_ == b.radicand_;
    }
    friend bool operator!=(const SqrtRat& a, const SqrtRat& b) { return !(a == b); }

private:
    Rat coef_;
    long radicand_;
};

}  // namespace starlex

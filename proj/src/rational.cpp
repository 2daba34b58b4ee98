#include "starlex/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace starlex {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_rational(std::string_view text) {
    std::string s(text);
    // trim
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        s.erase(s.begin());
    }
    if (s.empty()) throw std::invalid_argument("sign without digits in rational literal");

    Rat value;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed rational literal: " + std::string(text));
        // base 10 explicitly: the default auto-detects, turning "025" octal
        mpz_class n(num, 10), d(den, 10);
        if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
        value = Rat(n, d);
        value.canonicalize();
    } else if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (frac.empty()) frac = "0";
        if (!all_digits(whole) || !all_digits(frac))
            throw std::invalid_argument("malformed decimal literal: " + std::string(text));
        mpz_class num(whole + frac, 10);
        mpz_class den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        value = Rat(num, den);
        value.canonicalize();
    } else {
        if (!all_digits(s))
            throw std::invalid_argument("malformed rational literal: " + std::string(text));
        value = Rat(mpz_class(s, 10));
    }
    if (negative) value = -value;
    return value;
}

std::string pq_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string pretty_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return pq_string(r);
}

Rat rat_pow(const Rat& base, unsigned long exp) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exp);
    Rat out(num, den);
    out.canonicalize();
    return out;
}

SqrtRat::SqrtRat(Rat coef, long radicand) : coef_(std::move(coef)), radicand_(radicand) {
    if (radicand_ <= 0) throw std::domain_error("radicand must be positive");
    if (coef_ == 0) {
        radicand_ = 1;
        return;
    }
    // fold perfect-square factors into the coefficient
    for (long d = 2; d * d <= radicand_; ++d) {
        while (radicand_ % (d * d) == 0) {
            radicand_ /= d * d;
            coef_ *= d;
        }
    }
}

Rat SqrtRat::as_rational() const {
    if (radicand_ != 1) throw std::domain_error("irrational value: " + str());
    return coef_;
}

double SqrtRat::to_double() const {
    double c = coef_.get_d();
    return radicand_ == 1 ? c : c * std::sqrt(static_cast<double>(radicand_));
}

std::string SqrtRat::str() const {
    if (radicand_ == 1) return pq_string(coef_);
    return "sqrt(" + std::to_string(radicand_) + ")*" + pq_string(coef_);
}

std::string SqrtRat::pretty() const {
    if (radicand_ == 1) return pretty_string(coef_);
    if (coef_ == 1) return "sqrt(" + std::to_string(radicand_) + ")";
    return "sqrt(" + std::to_string(radicand_) + ")*" + pretty_string(coef_);
}

SqrtRat& SqrtRat::operator+=(const SqrtRat& other) {
    if (other.coef_ == 0) return *this;
    if (coef_ == 0) {
        *this = other;
        return *this;
    }
    if (radicand_ != other.radicand_)
        throw std::domain_error("cannot add " + str() + " and " + other.str() +
                                ": radicands differ");
    coef_ += other.coef_;
    if (coef_ == 0) radicand_ = 1;
    return *this;
}

SqrtRat operator*(const SqrtRat& a, const SqrtRat& b) {
    if (a.coef_ == 0 || b.coef_ == 0) return SqrtRat();
    return SqrtRat(a.coef_ * b.coef_, a.radicand_ * b.radicand_);
}

}  // namespace starlex

#include "starlex/charpoly.hpp"

#include <stdexcept>

namespace starlex {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::x() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

Rat Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[k];
}

Rat Poly::leading() const {
    if (coeffs_.empty()) return Rat(0);
    return coeffs_.back();
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Poly::eval_double(double x) const {
    double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

std::string Poly::str() const {
    if (coeffs_.empty()) return "[0/1]";
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ", ";
        out += pq_string(coeffs_[i]);
    }
    return out + "]";
}

Poly Poly::operator-() const {
    std::vector<Rat> c = coeffs_;
    for (auto& v : c) v = -v;
    return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(c));
}

Poly operator*(const Rat& c, const Poly& p) {
    std::vector<Rat> out = p.coeffs_;
    for (auto& v : out) v *= c;
    return Poly(std::move(out));
}

std::vector<Poly> branch_poly_sequence(int max_n, const Rat& alpha) {
    if (max_n < 0) throw std::invalid_argument("branch_poly_sequence needs max_n >= 0");
    std::vector<Poly> seq;
    seq.reserve(max_n + 1);
    seq.push_back(Poly::constant(Rat(1)));
    if (max_n == 0) return seq;
    seq.push_back(Poly(std::vector<Rat>{-alpha, Rat(1)}));  // x - alpha
    const Poly step(std::vector<Rat>{-2 * alpha, Rat(1)});  // x - 2 alpha
    const Rat off2 = (1 - alpha) * (1 - alpha);
    for (int n = 2; n <= max_n; ++n) seq.push_back(step * seq[n - 1] - off2 * seq[n - 2]);
    return seq;
}

Poly branch_poly(int n, const Rat& alpha) {
    if (n == -1) return Poly();
    if (n < -1) throw std::invalid_argument("branch_poly needs n >= -1");
    return branch_poly_sequence(n, alpha)[n];
}

Poly path_charpoly_split(int a, int b, const Rat& alpha) {
    if (a < 0 || b < 0 || a + b < 1)
        throw std::invalid_argument("path split needs a, b >= 0 with a + b >= 1");
    auto seq = branch_poly_sequence(std::max(a, b), alpha);
    auto at = [&](int k) { return k < 0 ? Poly() : seq[k]; };
    const Rat off2 = (1 - alpha) * (1 - alpha);
    return at(a) * at(b) - off2 * (at(a - 1) * at(b - 1));
}

Poly bridge_charpoly(const Poly& phi_g, const Poly& phi_g_minus_u, const Poly& phi_h,
                     const Poly& phi_h_minus_v, const Rat& w2) {
    if (w2 < 0) throw std::invalid_argument("squared bridge weight must be nonnegative");
    return phi_g * phi_h - w2 * (phi_g_minus_u * phi_h_minus_v);
}

Poly coalescence_charpoly(const Poly& phi_g, const Poly& phi_g_minus_u, const Poly& phi_h,
                          const Poly& phi_h_minus_v) {
    return phi_g * phi_h_minus_v + phi_g_minus_u * phi_h -
           Poly::x() * (phi_g_minus_u * phi_h_minus_v);
}

Poly branch_difference(int a, int b, const Rat& alpha) {
    if (!(a > b && b >= 1)) throw std::invalid_argument("branch_difference needs a > b >= 1");
    const int l = a - b;
    auto seq = branch_poly_sequence(a, alpha);
    Poly direct = seq[a] * seq[b - 1] - seq[a - 1] * seq[b];

    const Rat off2 = (1 - alpha) * (1 - alpha);
    Poly closed = -(rat_pow(1 - alpha, 2UL * (b - 1)) *
                    (alpha * seq[l] + off2 * (l >= 1 ? seq[l - 1] : Poly())));
    if (direct != closed)
        throw std::logic_error("telescoped difference identity failed at a=" + std::to_string(a) +
                               " b=" + std::to_string(b));
    return direct;
}

Poly char_poly(const RatMatrix& m) {
    if (!m.square()) throw std::invalid_argument("char_poly needs a square matrix");
    const int n = m.rows();
    // Faddeev-LeVerrier: c[n]=1; M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    RatMatrix mk = m;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            RatMatrix shifted = mk;
            for (int i = 0; i < n; ++i) shifted(i, i) += c[n - k + 1];
            mk = m * shifted;
        }
        c[n - k] = -mk.trace() / k;
    }
    return Poly(std::move(c));
}

double branch_eval(int n, double alpha, double x) {
    if (n == -1) return 0.0;
    if (n < -1) throw std::invalid_argument("branch_eval needs n >= -1");
    double prev = 1.0;  // p_0
    if (n == 0) return prev;
    double cur = x - alpha;  // p_1
    const double off2 = (1 - alpha) * (1 - alpha);
    for (int k = 2; k <= n; ++k) {
        double next = (x - 2 * alpha) * cur - off2 * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace starlex

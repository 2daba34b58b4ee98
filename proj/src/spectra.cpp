#include "starlex/spectra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "starlex/charpoly.hpp"

namespace starlex {

namespace {

constexpr double kJacobiOffTol = 1e-13;   // off-diagonal target, relative to ||M||_F
constexpr double kAsymmetryTol = 1e-12;   // symmetry admission, relative to max entry
constexpr double kPowerTol = 1e-11;       // residual target, relative to max(1, ||M||_inf)
constexpr long kPowerCap = 1000000;
constexpr int kJacobiSweepCap = 60;
constexpr double kBisectWidth = 1e-13;

double frobenius(const DenseMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s += m(i, j) * m(i, j);
    return std::sqrt(s);
}

double max_abs(const DenseMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s = std::max(s, std::abs(m(i, j)));
    return s;
}

double inf_norm(const DenseMatrix& m) {
    double best = 0.0;
    for (int i = 0; i < m.rows(); ++i) {
        double row = 0.0;
        for (int j = 0; j < m.cols(); ++j) row += std::abs(m(i, j));
        best = std::max(best, row);
    }
    return best;
}

double pair_residual(const DenseMatrix& m, const std::vector<double>& x, double lambda) {
    double worst = 0.0;
    for (int i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (int j = 0; j < m.cols(); ++j) s += m(i, j) * x[j];
        worst = std::max(worst, std::abs(s - lambda * x[i]));
    }
    return worst;
}

}  // namespace

RadiusResult radius_symmetric(const DenseMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("radius_symmetric: matrix not square");
    const int n = m.rows();
    const double scale = std::max(1.0, max_abs(m));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(m(i, j) - m(j, i)) > kAsymmetryTol * scale)
                throw std::invalid_argument("radius_symmetric: matrix is not symmetric at (" + std::to_string(i) +
                                            ", " + std::to_string(j) + ")");
    if (n == 1) return {m(0, 0), 0.0, 0};

    DenseMatrix a = m;
    std::vector<std::vector<double>> vec(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) vec[i][i] = 1.0;
    const double target = kJacobiOffTol * frobenius(m);

    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) s += a(i, j) * a(i, j);
        return std::sqrt(s);
    };

    long sweeps = 0;
    while (off_norm() > target) {
        if (++sweeps > kJacobiSweepCap) throw std::runtime_error("radius_symmetric: Jacobi did not converge");
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - sn * akq;
                    a(k, q) = sn * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - sn * aqk;
                    a(q, k) = sn * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = vec[k][p];
                    const double vkq = vec[k][q];
                    vec[k][p] = c * vkp - sn * vkq;
                    vec[k][q] = sn * vkp + c * vkq;
                }
            }
        }
    }

    int best = 0;
    for (int i = 1; i < n; ++i)
        if (a(i, i) > a(best, best)) best = i;
    std::vector<double> x(n);
    double norm = 0.0;
    for (int k = 0; k < n; ++k) {
        x[k] = vec[k][best];
        norm += x[k] * x[k];
    }
    norm = std::sqrt(norm);
    if (norm > 0.0)
        for (double& e : x) e /= norm;
    return {a(best, best), pair_residual(m, x, a(best, best)), sweeps};
}

RadiusResult radius_power(const DenseMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("radius_power: matrix not square");
    const int n = m.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m(i, j) < 0.0)
                throw std::invalid_argument("radius_power: negative entry at (" + std::to_string(i) + ", " +
                                            std::to_string(j) + ")");
    if (n == 0) return {0.0, 0.0, 0};

    const double tol = kPowerTol * std::max(1.0, inf_norm(m));
    double shift = 0.0;
    for (int i = 0; i < n; ++i) shift = std::max(shift, m(i, i));
    shift += 1.0;

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);
    for (long it = 1; it <= kPowerCap; ++it) {
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += m(i, j) * x[j];
            y[i] = s;
        }
        double lambda = 0.0;
        for (int i = 0; i < n; ++i) lambda += x[i] * y[i];  // Rayleigh quotient, ||x|| = 1
        double res = 0.0;
        for (int i = 0; i < n; ++i) res = std::max(res, std::abs(y[i] - lambda * x[i]));
        if (res <= tol) return {lambda, res, it};

        double norm = 0.0;
        for (int i = 0; i < n; ++i) {
            y[i] += shift * x[i];
            norm += y[i] * y[i];
        }
        norm = std::sqrt(norm);
        if (norm == 0.0) return {0.0, 0.0, it};
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
    }
    throw std::runtime_error("radius_power: iteration cap reached before convergence");
}

double branch_root(int n, const Rat& alpha) { return branch_root_sequence(n, alpha).back(); }

std::vector<double> branch_root_sequence(int max_n, const Rat& alpha) {
    if (max_n < 1) throw std::invalid_argument("branch_root_sequence: need n >= 1");
    if (alpha < 0 || alpha >= 1) throw std::invalid_argument("branch_root_sequence: alpha must lie in [0, 1)");
    const double al = alpha.get_d();
    std::vector<double> roots;
    roots.reserve(max_n);
    roots.push_back(al);  // the root of x - alpha
    for (int k = 2; k <= max_n; ++k) {
        double lo = roots.back();
        double hi = 2.0;
        // The largest root interlaces strictly above the previous one, so
        // the sign is pinned negative at lo and positive at hi.
        if (!(branch_eval(k, al, lo) < 0.0) || !(branch_eval(k, al, hi) > 0.0))
            throw std::logic_error("branch_root_sequence: bracket failed at n = " + std::to_string(k));
        while (hi - lo > kBisectWidth) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;  // hit double resolution
            (branch_eval(k, al, mid) < 0.0 ? lo : hi) = mid;
        }
        roots.push_back(0.5 * (lo + hi));
    }
    return roots;
}

}  // namespace starlex

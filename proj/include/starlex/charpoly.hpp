#pragma once

#include <string>
#include <vector>

#include "starlex/matrix.hpp"
#include "starlex/rational.hpp"

namespace starlex {

/// Univariate polynomial in x with exact rational coefficients, ascending
/// degree order. The zero polynomial has an empty coefficient list.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);

    static Poly constant(const Rat& c);
    static Poly x();

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    /// Coefficient of x^k, zero beyond the degree.
    Rat coeff(int k) const;
    Rat leading() const;

    Rat eval(const Rat& x) const;
    double eval_double(double x) const;

    /// Ascending coefficient list with explicit denominators, e.g.
    /// "[-1/1, 0/1, 1/1]" for x^2 - 1.
    std::string str() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& c, const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim();
    std::vector<Rat> coeffs_;
};

/// Characteristic polynomial of the order-n principal submatrix obtained from
/// the alpha-matrix of a path on n+1 vertices by deleting one end vertex.
/// Satisfies p_0 = 1, p_1 = x - alpha,
/// p_n = (x - 2 alpha) p_{n-1} - (1 - alpha)^2 p_{n-2}; monic of degree n.
/// n = -1 is accepted and returns the zero polynomial (the convention that
/// makes degenerate splits below well-defined).
Poly branch_poly(int n, const Rat& alpha);

/// p_0 .. p_max_n in one pass.
std::vector<Poly> branch_poly_sequence(int max_n, const Rat& alpha);

/// Characteristic polynomial of the alpha-matrix of a path on a+b vertices,
/// assembled from the two branch polynomials of a split:
///   p_a p_b - (1-alpha)^2 p_{a-1} p_{b-1}.
/// Split-independent for a, b >= 1. A zero side is accepted and collapses to
/// p_a by the p_{-1} = 0 convention (an internal extension, not a path
/// characteristic polynomial).
Poly path_charpoly_split(int a, int b, const Rat& alpha);

/// Characteristic polynomial of the graph obtained by joining two disjoint
/// weighted graphs with a bridge uv of squared weight w2:
///   phi(G) phi(H) - w2 phi(G-u) phi(H-v).
Poly bridge_charpoly(const Poly& phi_g, const Poly& phi_g_minus_u, const Poly& phi_h,
                     const Poly& phi_h_minus_v, const Rat& w2);

/// Characteristic polynomial of the coalescence of two rooted weighted
/// graphs at their roots u, v:
///   phi(G) phi(H-v) + phi(G-u) phi(H) - x phi(G-u) phi(H-v).
Poly coalescence_charpoly(const Poly& phi_g, const Poly& phi_g_minus_u, const Poly& phi_h,
                          const Poly& phi_h_minus_v);

/// The cross difference p_a p_{b-1} - p_{a-1} p_b for a > b >= 1. Before
/// returning, checks the telescoped closed form
///   -(1-alpha)^(2(b-1)) (alpha p_l + (1-alpha)^2 p_{l-1}),  l = a - b,
/// against the direct product and throws std::logic_error on any mismatch,
/// so every call re-proves the identity.
Poly branch_difference(int a, int b, const Rat& alpha);

/// Exact characteristic polynomial det(xI - M) of a rational square matrix
/// via the Faddeev-LeVerrier trace recursion. The independent ground truth
/// for every polynomial identity in the test suites.
Poly char_poly(const RatMatrix& m);

/// Pointwise double evaluation of branch_poly(n) at x via the recurrence;
/// used for root bracketing and sign grids where exactness is not needed.
double branch_eval(int n, double alpha, double x);

}  // namespace starlex

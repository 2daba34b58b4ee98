#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "starlex/matrix.hpp"
#include "starlex/partition.hpp"
#include "starlex/rational.hpp"
#include "starlex/wgraph.hpp"

namespace starlex {

/// Numeric thresholds shared by the claim harnesses. The strict/cross values
/// are the user-overridable 1e-9 comparison tolerance; the others are pinned.
struct Tolerances {
    double strict_gap = 1e-9;       // minimum margin for a strict inequality
    double tie_gap = 1e-11;         // maximum spread inside an exact tie
    double quotient_agree = 1e-10;  // direct vs quotient radius agreement
    double cross_solver = 1e-9;     // Jacobi vs power iteration agreement
};

/// One verified fact: a labeled comparison with its numbers. `margin` is the
/// claim's numeric slack (gap to the next radius, inequality margin, ...);
/// `group` carries the tie-class id in ordering sweeps and -1 elsewhere.
struct CheckItem {
    std::string label;
    double primary = 0.0;
    double secondary = 0.0;
    double margin = 0.0;
    int group = -1;
    bool pass = true;
    std::string note;
};

/// A claim's full verification record: parameters, per-item results, overall
/// verdict (pass only if every item passes), and timing.
struct VerificationReport {
    std::string claim;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<CheckItem> items;
    bool pass = true;
    double elapsed_seconds = 0.0;

    void add_param(std::string key, std::string value);
    /// Recomputes the overall verdict from the items.
    void fold();

    nlohmann::json to_json() const;
    /// One row per item: claim,label,primary,secondary,margin,group,pass,note.
    void write_csv(std::ostream& out) const;
};

/// A base graph with a display name for reports.
struct NamedRootedGraph {
    std::string name;
    RootedGraph rooted;
};

/// Builtin base graphs by name: k1, p2..p9, c3..c9, k4e (K_4 minus one
/// edge). Throws std::invalid_argument on unknown names.
WeightedGraph builtin_graph(const std::string& name);

/// The five bases every ordering claim is exercised on: the one-vertex
/// graph, the 3-path rooted at an end and at the center, the triangle, and
/// K_4 minus an edge rooted at a degree-3 vertex.
std::vector<NamedRootedGraph> acceptance_family();

/// The standard alpha grid {0, 1/4, 1/2, 3/4}.
std::vector<Rat> standard_alphas();

/// Detects whether a partition is a multiset of the form {a x s} + {b}: all
/// parts equal (b = 0), or exactly two distinct values with the odd one out
/// occurring once. Such graphs admit the path-cell quotient.
struct PendantShape {
    int a = 0;
    int b = 0;
    int s = 0;
};
std::optional<PendantShape> pendant_shape(const Partition& p);

/// Both eigensolvers on one symmetric matrix; `value` is the Jacobi result
/// and `ok` says the power iteration agreed within tol.cross_solver.
struct CrossRadius {
    double value = 0.0;
    double jacobi = 0.0;
    double power = 0.0;
    double gap = 0.0;
    bool ok = false;
};
CrossRadius cross_radius(const DenseMatrix& m, const Tolerances& tol);

/// The arithmetic margin (q-1)(k-1) + r - ceil(r/k) with n = qk + r, which
/// equals (n-k+1) - ceil(n/k) and is nonnegative for 1 <= k <= n; it is the
/// slack that lets every part of a balanced partition grow to n-k+1.
long rebalance_growth_margin(int n, int k);

/// Orders all partitions of n by radius and checks the shortlex claim:
/// the radius sequence is nondecreasing, consecutive gaps are strict
/// (> tol.strict_gap) except among length <= 2 partitions over the
/// one-vertex base, which must tie (< tol.tie_gap) and be structurally equal
/// paths. Each radius is cross-checked across both solvers, and every
/// partition of pendant shape is recomputed through the quotient graph and
/// must agree within tol.quotient_agree. One item per partition; `group` is
/// the tie-class id and `margin` the gap to the next radius.
VerificationReport verify_shortlex_ordering(const NamedRootedGraph& g, int n, const Rat& alpha,
                                            const Tolerances& tol);

/// Compares attaching {a x s, b} against {c x s, d} for a+b = c+d,
/// a > max(c,d) >= min(c,d) > b >= 0: the first radius never exceeds the
/// second. The margin is an exact tie precisely when the two graphs (or
/// their quotients) are isomorphic: base = K_1 and either s = 1 (both
/// graphs are one path) or alpha = 0 with reversal parameters c = b+1,
/// d = a-1 (the quotient paths are mirror images); strict otherwise.
VerificationReport verify_path_rebalance(const NamedRootedGraph& g, int a, int b, int c, int d, int s,
                                         const Rat& alpha, const Tolerances& tol);

/// Strict two-path comparison: for p >= q >= 1 and a base with at least one
/// edge, attaching {p, q} beats attaching {p+1, q-1} strictly.
VerificationReport verify_pair_rebalance(const NamedRootedGraph& g, int p, int q, const Rat& alpha,
                                         const Tolerances& tol);

/// Replays the comparison chain that orders a consecutive shortlex pair
/// (a, b): classifies the step (same-length pivot or length growth), checks
/// the supporting arithmetic (last-part bound, growth margin), then walks
/// the chain radius by radius: a partwise-dominating rebalanced partition
/// first (subgraph step, strict when proper), then the path rebalance down
/// to b. Throws std::invalid_argument unless (a, b) is consecutive.
VerificationReport verify_successor_chain(const Partition& a, const Partition& b, const NamedRootedGraph& g,
                                          const Rat& alpha, const Tolerances& tol);

/// Reproduces the built-in worked example (triangle base, paths {2,2,2,1},
/// alpha free): the split-path degree and adjacency matrices, the 3x3
/// root-bumped base matrix, the full 6x6 symmetrized quotient entry by
/// entry, the loop and sqrt(3) edge weights, the quotient-graph route, and
/// the radius agreement between the 10-vertex graph and its quotient.
VerificationReport verify_worked_example(const Rat& alpha, const Tolerances& tol);

/// Exact-identity suites (zero tolerance unless stated).
/// Branch polynomials against the determinant oracle, n <= max_n.
VerificationReport check_branch_recurrence(int max_n, const std::vector<Rat>& alphas);
/// Split form of the path characteristic polynomial: equal for all splits,
/// and equal to the determinant oracle for small n.
VerificationReport check_split_independence(int max_n, const std::vector<Rat>& alphas);
/// Telescoped cross-difference closed form, 1 <= b < a <= max_a.
VerificationReport check_telescoped_difference(int max_a, const std::vector<Rat>& alphas);
/// Sign of the cross difference on an exact rational grid above theta_l.
VerificationReport check_difference_sign(int max_a, const std::vector<Rat>& alphas);
/// Bridge and coalescence formulas against the oracle on seeded random
/// weighted graphs (loops allowed), both on `instances` instances.
VerificationReport check_bridge_coalescence(int instances, unsigned seed);
/// Strict radius decrease under principal-submatrix deletion on seeded
/// random connected weighted graphs; margin must exceed 1e-12.
VerificationReport check_submatrix_decrease(int instances, unsigned seed);
/// Entrywise-dominated symmetric nonnegative matrices have pointwise larger
/// characteristic polynomials above the dominating radius; exact rational
/// evaluation on a grid.
VerificationReport check_charpoly_dominance(int instances, unsigned seed);
/// Pure combinatorics over all n <= max_n: adjacent shortlex pairs classify
/// as pivot or length steps with valid supporting arithmetic; non-adjacent
/// pairs never classify.
VerificationReport check_successor_classification(int max_n);

/// The full identity battery at standard sizes, capped by max_n where a size
/// knob applies. Randomized suites use the given seed.
std::vector<VerificationReport> run_identity_suites(int max_n, unsigned seed);

/// The CSV table behind the `order` command:
/// partition,rho_direct,rho_quotient,rank,tie_class,margin_to_next.
void write_order_csv(const VerificationReport& report, std::ostream& out);

}  // namespace starlex

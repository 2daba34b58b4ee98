#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace starlex {

/// An integer partition stored as a nondecreasing sequence of positive parts.
/// Parts count path lengths in edges throughout the project.
class Partition {
public:
    /// Validates: nonempty, every part >= 1, nondecreasing. Throws otherwise.
    explicit Partition(std::vector<int> parts);

    /// Sorts a raw multiset of parts first, then validates.
    static Partition sorted(std::vector<int> parts);

    /// Parses the text form "[1,2,2]".
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int sum() const;
    int operator[](int i) const { return parts_[i]; }
    int last() const { return parts_.back(); }

    /// "[1,2,2]" — the exact form used in CSV/JSON reports.
    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

private:
    std::vector<int> parts_;
};

/// Shortlex: shorter sequences first; equal lengths compare lexicographically.
std::strong_ordering shortlex_cmp(const Partition& a, const Partition& b);

/// All partitions of n, each exactly once, in strictly increasing shortlex
/// order (within a length: lexicographic ascending). Rejects n < 1.
std::vector<Partition> enumerate_partitions(int n);

/// List concatenation and n-fold repetition on raw part sequences. Raw
/// sequences may be empty and need not be sorted; turning one into a
/// Partition re-validates.
std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> repeat(const std::vector<int>& a, int n);

/// How a partition pair can be adjacent in the shortlex enumeration:
/// - pivot_step: equal lengths; parts from a pivot position onward are
///   rebalanced, everything before it fixed (pivot is 1-based).
/// - length_step: the pair straddles a length boundary; the predecessor is
///   the balanced maximum of its length class and the successor is
///   (1,...,1,n-k).
enum class StepKind { pivot_step, length_step, not_consecutive };

struct ConsecutiveClass {
    StepKind kind = StepKind::not_consecutive;
    int pivot = 0;  // 1-based, meaningful for pivot_step only

    friend bool operator==(const ConsecutiveClass&, const ConsecutiveClass&) = default;
};

/// Recognizes the structural shape of adjacent shortlex pairs. Returns
/// not_consecutive for any pair that does not match either shape; the match
/// is exact, so the result is non-trivial precisely for pairs adjacent in
/// enumerate_partitions. Throws if the two partitions have different sums.
ConsecutiveClass classify_consecutive(const Partition& a, const Partition& b);

/// For a pivot_step pair (a,b): whether b's last part plus one bounds a's
/// last part from above. Throws unless classify_consecutive(a,b) is
/// pivot_step at the given pivot.
bool last_part_bound_holds(const Partition& a, const Partition& b, int pivot);

}  // namespace starlex

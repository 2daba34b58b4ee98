#include "starlex/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace starlex {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("partition must be nonempty");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] > parts_[i])
            throw std::invalid_argument("partition parts must be nondecreasing");
    }
}

Partition Partition::sorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end());
    return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
    std::string s(text);
    auto open = s.find('[');
    auto close = s.rfind(']');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw std::invalid_argument("partition text must be bracketed: " + s);
    std::string body = s.substr(open + 1, close - open - 1);
    std::vector<int> parts;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            parts.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition part: '" + tok + "'");
        }
    }
    return Partition(std::move(parts));
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

std::strong_ordering shortlex_cmp(const Partition& a, const Partition& b) {
    if (a.length() != b.length()) return a.length() <=> b.length();
    for (int i = 0; i < a.length(); ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
}

namespace {

void emit_with_parts(int remaining, int parts_left, int min_part, std::vector<int>& acc,
                     std::vector<Partition>& out) {
    if (parts_left == 1) {
        if (remaining >= min_part) {
            acc.push_back(remaining);
            out.emplace_back(acc);
            acc.pop_back();
        }
        return;
    }
    for (int p = min_part; p * parts_left <= remaining; ++p) {
        acc.push_back(p);
        emit_with_parts(remaining - p, parts_left - 1, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_partitions requires n >= 1");
    std::vector<Partition> out;
    std::vector<int> acc;
    for (int k = 1; k <= n; ++k) emit_with_parts(n, k, 1, acc, out);
    return out;
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::vector<int> repeat(const std::vector<int>& a, int n) {
    if (n < 0) throw std::invalid_argument("repeat count must be nonnegative");
    std::vector<int> out;
    out.reserve(a.size() * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.insert(out.end(), a.begin(), a.end());
    return out;
}

ConsecutiveClass classify_consecutive(const Partition& a, const Partition& b) {
    if (a.sum() != b.sum())
        throw std::invalid_argument("cannot classify partitions of different sums");
    const int n = a.sum();
    const int k = a.length();

    if (b.length() == k) {
        int i0 = -1;  // 0-based first differing index
        for (int j = 0; j < k; ++j) {
            if (a[j] != b[j]) {
                i0 = j;
                break;
            }
        }
        if (i0 < 0 || i0 >= k - 1) return {};  // equal, or (impossible) last-part-only difference
        for (int j = i0; j < k - 1; ++j)
            if (b[j] != a[i0] + 1) return {};
        int shift = 0;
        for (int j = i0; j < k - 1; ++j) shift += a[j] - a[i0] - 1;
        if (b[k - 1] != a[k - 1] + shift) return {};
        // The true successor bumps the largest feasible pivot; a later pivot
        // j is feasible when the tail from j can absorb k-j copies of a_j+1.
        int tail = a[k - 1];
        for (int j = k - 2; j > i0; --j) {
            tail += a[j];
            if (tail >= (k - j) * (a[j] + 1)) return {};
        }
        return {StepKind::pivot_step, i0 + 1};
    }

    if (b.length() == k + 1) {
        // predecessor must be the balanced maximum of its length class
        const int q = n / k, r = n % k;
        for (int j = 0; j < k; ++j) {
            int expect = (j < k - r) ? q : q + 1;
            if (a[j] != expect) return {};
        }
        // successor must be the all-ones minimum of the next length class
        if (n - k < 1) return {};
        for (int j = 0; j < k; ++j)
            if (b[j] != 1) return {};
        if (b[k] != n - k) return {};
        return {StepKind::length_step, 0};
    }

    return {};
}

bool last_part_bound_holds(const Partition& a, const Partition& b, int pivot) {
    ConsecutiveClass c = classify_consecutive(a, b);
    if (c.kind != StepKind::pivot_step || c.pivot != pivot)
        throw std::invalid_argument("last_part_bound_holds requires a pivot_step pair at the given pivot");
    return b.last() + 1 >= a.last();
}

}  // namespace starlex

#ifndef CUBICC_INTERVAL_POSET_HPP
#define CUBICC_INTERVAL_POSET_HPP

#include <utility>
#include <vector>

#include "cubicc/diagrams.hpp"

namespace cubicc {

/// Partial order x_j <| x_i on vertices x_1..x_n, stored strict and
/// transitively closed; reflexive pairs are implicit.
class IntervalPoset {
public:
    IntervalPoset() = default;
    explicit IntervalPoset(int n) : n_(n), rel_(n * n, 0) {}

    int size() const { return n_; }

    /// x_a <| x_b, 1-based, strict.
    bool less(int a, int b) const { return rel_[(a - 1) * n_ + (b - 1)] != 0; }
    void set_less(int a, int b) { rel_[(a - 1) * n_ + (b - 1)] = 1; }

    void close_transitively();

    /// Strict pairs [a, b] meaning x_a <| x_b, sorted.
    std::vector<std::pair<int, int>> relation_pairs() const;

    bool operator==(const IntervalPoset& other) const = default;
    bool operator<(const IntervalPoset& other) const {
        return n_ != other.n_ ? n_ < other.n_ : rel_ < other.rel_;
    }

private:
    int n_ = 0;
    std::vector<unsigned char> rel_;
};

enum class PosetFault {
    none,
    out_of_range,      // a pair references a vertex outside [n]
    antisymmetry,      // x_a <| x_b and x_b <| x_a after closure
    decreasing_axiom,  // x_k <| x_i (k > i) without x_j <| x_i for some i<j<k
    increasing_axiom,  // x_i <| x_k (i < k) without x_j <| x_k for some i<j<k
};

/// Failure site: (a, b) the offending relation, j the uncovered middle
/// vertex for axiom faults.
struct PosetVerdict {
    PosetFault fault = PosetFault::none;
    int a = 0;
    int b = 0;
    int j = 0;

    bool ok() const { return fault == PosetFault::none; }
};

std::string to_string(const PosetVerdict& v);

PosetVerdict validate_interval_poset(int n, const std::vector<std::pair<int, int>>& pairs);

/// Checks an already-closed relation against antisymmetry and both axioms.
PosetVerdict validate_closed(const IntervalPoset& p);

// chi: generators x_{i+l} <| x_i for l <= u_i and x_{i-k} <| x_i for
// k <= v_i, then transitive closure. Always a valid interval-poset when
// the input is a valid Tamari interval diagram.
IntervalPoset chi(const Tid& tid);

// Inverse via the counting formulas: u_i = #{j > i : x_j <| x_i},
// v_j = #{i < j : x_i <| x_j}.
Tid chi_inverse(const IntervalPoset& p);

}  // namespace cubicc

#endif

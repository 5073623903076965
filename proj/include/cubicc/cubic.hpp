#ifndef CUBICC_CUBIC_HPP
#define CUBICC_CUBIC_HPP

#include <optional>
#include <vector>

#include "cubicc/diagrams.hpp"

namespace cubicc {

/// Signed (n-1)-tuple encoding a Tamari interval of size n; the size-1
/// coordinate is the empty tuple.
struct Cubic {
    std::vector<int> c;

    int size() const { return static_cast<int>(c.size()) + 1; }
    bool operator==(const Cubic& other) const = default;
    bool operator<(const Cubic& other) const { return c < other.c; }
};

/// The (u, v) pair determined by c: u_i = max(c_i, 0), v_{i+1} = |min(c_i, 0)|.
/// Defined for any tuple; c is a cubic coordinate iff the result is a
/// valid Tamari interval diagram.
Tid phi(const Cubic& c);

bool is_valid_cubic(const Cubic& c);

/// Names the violated diagram condition when phi(c) is not a TID.
std::string describe_invalid_cubic(const Cubic& c);

/// c_i = u_i - v_{i+1}.
Cubic phi_inverse(const Tid& tid);

/// Sets entry i (1-based) to 0; the result is always a valid coordinate.
/// Throws std::out_of_range on a bad index.
Cubic zero_entry(const Cubic& c, int i);

enum class Order { less, greater, equal, incomparable };

/// Componentwise comparison; throws std::invalid_argument on size mismatch.
Order compare_cc(const Cubic& a, const Cubic& b);

bool leq_cc(const Cubic& a, const Cubic& b);

/// Minimal increase: the unique cover of c differing only in entry i,
/// found by ascending search over c_i+1 .. n-i. nullopt when no larger
/// valid value exists.
std::optional<Cubic> min_increase(const Cubic& c, int i);

/// All covers of c, ordered by increased entry index.
std::vector<Cubic> covers(const Cubic& c);

/// No zero entry.
bool is_synchronized(const Cubic& c);
bool is_synchronized(const Tid& tid);

/// The three strict-bound conditions on (u, v).
bool is_new(const Tid& tid);

}  // namespace cubicc

#endif

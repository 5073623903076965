#ifndef CUBICC_LATTICE_HPP
#define CUBICC_LATTICE_HPP

#include <string>
#include <utility>
#include <vector>

#include "cubicc/counting.hpp"
#include "cubicc/cubic.hpp"

namespace cubicc {

inline constexpr int kDefaultSizeCap = 8;

/// Raised when a requested size exceeds the configured cap.
struct SizeCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The fully materialized poset (CC_n, <=cc): elements sorted
/// lexicographically, Hasse edges as (lower index, upper index) pairs.
struct PosetInstance {
    int n = 0;
    std::vector<Cubic> elements;
    std::vector<std::pair<int, int>> hasse;

    /// Index of c in elements, or -1.
    int index_of(const Cubic& c) const;

    /// Indices of the unique minimal / maximal element.
    int minimum() const;
    int maximum() const;
};

enum class Execution { serial, parallel };

/// Materializes CC_n: elements by upward breadth-first search from the
/// minimum coordinate (-1, -2, ..., -(n-1)), Hasse edges from covers().
/// The parallel path distributes the cover computation with OpenMP; the
/// serial path is the reference. Throws SizeCapError above the cap.
PosetInstance enumerate_cc(int n, Execution exec = Execution::parallel,
                           int cap = kDefaultSizeCap);

/// Cover lists per element index, the kernel behind the Hasse diagram.
std::vector<std::vector<int>> cover_lists_serial(const std::vector<Cubic>& elements);
std::vector<std::vector<int>> cover_lists_parallel(const std::vector<Cubic>& elements);

// Generic greatest lower / least upper bound over the materialized order.
// Throws std::logic_error if the bound is not unique, which would
// falsify the lattice property.
int meet(const PosetInstance& p, int a, int b);
int join(const PosetInstance& p, int a, int b);

/// Per-size row of the count cross-check.
struct CountRow {
    int n = 0;
    BigInt formula;
    long long cc_count = -1;
    long long tid_count = -1;
    long long interval_count = -1;  // tree pairs; -1 when skipped
    bool ok = false;
};

/// Compares |CC_n|, |TID_n|, the tree-pair interval count (n <= 5), and
/// the closed formula for each n <= n_max.
std::vector<CountRow> check_counts(int n_max, int cap = kDefaultSizeCap);

std::string to_string(const CountRow& row);

}  // namespace cubicc

#endif

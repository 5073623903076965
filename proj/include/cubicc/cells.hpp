#ifndef CUBICC_CELLS_HPP
#define CUBICC_CELLS_HPP

#include <vector>

#include "cubicc/cubic.hpp"
#include "cubicc/lattice.hpp"

namespace cubicc {

/// A cell of the cubic realization: c_min admits a minimal increase in
/// every coordinate and c_max is reached by applying them from index
/// n-1 inward to 1.
struct Cell {
    Cubic c_min;
    Cubic c_max;

    int size() const { return c_min.size(); }
    bool operator==(const Cell& other) const = default;
    bool operator<(const Cell& other) const { return c_min < other.c_min; }
};

/// True iff every coordinate admits a minimal increase; equivalently c
/// is covered by exactly n-1 elements.
bool is_minimal_cellular(const Cubic& c);

/// Applies the minimal increases innermost-first (index n-1 down to 1).
/// The order matters; other orders need not reach the same element.
/// Throws std::invalid_argument when c is not minimal-cellular.
Cubic maximal_correspondent(const Cubic& c);

Cell make_cell(const Cubic& c_min);

/// All 2^{n-1} mixes with entry i taken from c_min or c_max, sorted and
/// deduplicated. Every mix is a valid cubic coordinate; an invalid mix
/// throws std::logic_error since it would break the cell-vertex theorem.
std::vector<Cubic> cell_vertices(const Cell& cell);

/// Entry i = c_min_i when negative, else c_max_i; always a synchronized
/// coordinate, and a bijection from cells onto them.
Cubic gamma_map(const Cell& cell);

/// One cell per minimal-cellular coordinate of CC_n, keyed by c_min.
std::vector<Cell> enumerate_cells(int n, int cap = kDefaultSizeCap);

}  // namespace cubicc

#endif

#include "cubicc/cells.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubicc {

bool is_minimal_cellular(const Cubic& c) {
    for (int i = 1; i <= c.size() - 1; ++i)
        if (!min_increase(c, i)) return false;
    return true;
}

Cubic maximal_correspondent(const Cubic& c) {
    if (!is_minimal_cellular(c))
        throw std::invalid_argument("maximal_correspondent: not minimal-cellular");
    Cubic out = c;
    for (int i = c.size() - 1; i >= 1; --i) {
        auto up = min_increase(out, i);
        if (!up)
            throw std::logic_error("maximal_correspondent: increase chain broke at " +
                                   std::to_string(i));
        out = std::move(*up);
    }
    return out;
}

Cell make_cell(const Cubic& c_min) {
    return Cell{c_min, maximal_correspondent(c_min)};
}

std::vector<Cubic> cell_vertices(const Cell& cell) {
    const int d = cell.size() - 1;
    std::vector<Cubic> out;
    out.reserve(static_cast<size_t>(1) << d);
    for (unsigned long mask = 0; mask < (1ul << d); ++mask) {
        Cubic mix;
        mix.c.resize(d);
        for (int i = 0; i < d; ++i)
            mix.c[i] = (mask >> i) & 1 ? cell.c_max.c[i] : cell.c_min.c[i];
        if (!is_valid_cubic(mix))
            throw std::logic_error("cell_vertices: invalid mix, cell-vertex property broken");
        out.push_back(std::move(mix));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Cubic gamma_map(const Cell& cell) {
    const int d = cell.size() - 1;
    Cubic out;
    out.c.resize(d);
    for (int i = 0; i < d; ++i)
        out.c[i] = cell.c_min.c[i] < 0 ? cell.c_min.c[i] : cell.c_max.c[i];
    return out;
}

std::vector<Cell> enumerate_cells(int n, int cap) {
    const PosetInstance p = enumerate_cc(n, Execution::parallel, cap);
    std::vector<Cell> out;
    for (const Cubic& c : p.elements)
        if (is_minimal_cellular(c)) out.push_back(make_cell(c));
    return out;
}

}  // namespace cubicc

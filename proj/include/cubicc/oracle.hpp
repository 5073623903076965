#ifndef CUBICC_ORACLE_HPP
#define CUBICC_ORACLE_HPP

#include <vector>

#include "cubicc/cubic.hpp"
#include "cubicc/interval_poset.hpp"
#include "cubicc/trees.hpp"

namespace cubicc {
// Deliberately naive reference implementations, independent of the main
// code paths they cross-check. Shipped in the library so the CLI `check`
// command can run them end to end.
namespace oracle {

/// Reflexive-transitive closure of the one-rotation relation over all
/// trees of size n. order[a][b] is true iff trees[a] <=t trees[b].
struct TamariClosure {
    std::vector<BinaryTree> trees;
    std::vector<std::vector<bool>> order;
};

TamariClosure tamari_order_by_closure(int n);

/// Every tuple in the box prod_i [-i, n-i] that passes validation.
std::vector<Cubic> cc_by_box_filter(int n);

/// Every relation on [n] satisfying antisymmetry and both interval
/// axioms, by exhaustive filtering of closed strict relations.
std::vector<IntervalPoset> interval_posets_by_filter(int n);

}  // namespace oracle
}  // namespace cubicc

#endif

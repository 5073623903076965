#ifndef CUBICC_TREES_HPP
#define CUBICC_TREES_HPP

#include <string>
#include <utility>
#include <vector>

#include "cubicc/cubic.hpp"
#include "cubicc/diagrams.hpp"
#include "cubicc/interval_poset.hpp"

namespace cubicc {

/// Rooted binary tree with nodes addressed by infix (left-root-right)
/// index 1..n. Rotations preserve infix order, so node identities are
/// stable across them.
class BinaryTree {
public:
    static constexpr int kNone = 0;

    BinaryTree() = default;
    explicit BinaryTree(int n) : left_(n + 1, kNone), right_(n + 1, kNone) {}

    int size() const { return static_cast<int>(left_.size()) - 1; }
    int root() const { return root_; }
    int left(int i) const { return left_[i]; }
    int right(int i) const { return right_[i]; }

    void set_root(int i) { root_ = i; }
    void set_left(int i, int child) { left_[i] = child; }
    void set_right(int i, int child) { right_[i] = child; }

    bool operator==(const BinaryTree& other) const = default;
    bool operator<(const BinaryTree& other) const;

    /// Balanced-parenthesis form, e.g. "((.)(.))" style "(L)(R)" nesting.
    std::string to_parens() const;

private:
    int root_ = kNone;
    std::vector<int> left_;
    std::vector<int> right_;
};

/// Left comb: every node is the left child of its successor.
BinaryTree left_comb(int n);
/// Right comb: every node is the right child of its predecessor.
BinaryTree right_comb(int n);

/// u_i = size of the right subtree of infix node i.
Word tree_to_tamari_diagram(const BinaryTree& t);
/// v_i = size of the left subtree of infix node i.
Word tree_to_dual_diagram(const BinaryTree& t);

BinaryTree tree_from_tamari_diagram(const Word& u);
BinaryTree tree_from_dual_diagram(const Word& v);

/// All single Tamari-increasing rotations of t, keyed by the infix index
/// of the node whose right subtree grows.
std::vector<std::pair<int, BinaryTree>> rotations_up(const BinaryTree& t);

/// Tamari order via componentwise comparison of Tamari diagrams.
/// Throws std::invalid_argument on size mismatch.
bool tamari_leq(const BinaryTree& s, const BinaryTree& t);

/// {L, R} word of length n-1: letter i is L iff infix node i has an
/// empty right subtree.
std::string canopy(const BinaryTree& t);

/// Pair [lower, upper] with lower <=t upper.
struct TamariInterval {
    BinaryTree lower;
    BinaryTree upper;

    int size() const { return lower.size(); }
    bool operator==(const TamariInterval& other) const = default;
    bool operator<(const TamariInterval& other) const {
        return lower != other.lower ? lower < other.lower : upper < other.upper;
    }
};

bool is_valid_interval(const TamariInterval& iv);

// rho: interval-poset -> Tamari interval, realized through diagrams
// (lower tree from u, upper tree from v). rho_inverse throws
// std::invalid_argument when lower is not <=t upper.
TamariInterval rho(const IntervalPoset& p);
IntervalPoset rho_inverse(const TamariInterval& iv);

// psi = phi^{-1} o chi^{-1} o rho^{-1}: the order isomorphism between
// Tamari intervals and cubic coordinates.
Cubic psi(const TamariInterval& iv);
TamariInterval psi_inverse(const Cubic& c);

/// All binary trees of size n, ordered by their Tamari diagram.
std::vector<BinaryTree> all_trees(int n);

/// All Tamari intervals of size n, sorted.
std::vector<TamariInterval> all_intervals(int n);

/// Covers of iv in the interval order: rotate the lower tree (staying
/// below upper) or rotate the upper tree.
std::vector<TamariInterval> interval_covers(const TamariInterval& iv);

}  // namespace cubicc

#endif

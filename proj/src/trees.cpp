#include "cubicc/trees.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubicc {

bool BinaryTree::operator<(const BinaryTree& other) const {
    return tree_to_tamari_diagram(*this) < tree_to_tamari_diagram(other);
}

namespace {

std::string parens_rec(const BinaryTree& t, int node) {
    if (node == BinaryTree::kNone) return ".";
    return "(" + parens_rec(t, t.left(node)) + parens_rec(t, t.right(node)) + ")";
}

int subtree_sizes(const BinaryTree& t, int node, std::vector<int>& size) {
    if (node == BinaryTree::kNone) return 0;
    size[node] = 1 + subtree_sizes(t, t.left(node), size) +
                 subtree_sizes(t, t.right(node), size);
    return size[node];
}

// Root of the subtree occupying infix interval [a, b]: the smallest i
// with i + u_i = b; its right subtree then fills [i+1, b].
int build_from_u(const Word& u, int a, int b, BinaryTree& t) {
    if (a > b) return BinaryTree::kNone;
    int root = 0;
    for (int i = a; i <= b; ++i) {
        if (i + u[i - 1] == b) {
            root = i;
            break;
        }
    }
    t.set_left(root, build_from_u(u, a, root - 1, t));
    t.set_right(root, build_from_u(u, root + 1, b, t));
    return root;
}

// Mirror: the largest i with i - v_i = a; its left subtree fills [a, i-1].
int build_from_v(const Word& v, int a, int b, BinaryTree& t) {
    if (a > b) return BinaryTree::kNone;
    int root = 0;
    for (int i = b; i >= a; --i) {
        if (i - v[i - 1] == a) {
            root = i;
            break;
        }
    }
    t.set_left(root, build_from_v(v, a, root - 1, t));
    t.set_right(root, build_from_v(v, root + 1, b, t));
    return root;
}

std::vector<int> parents(const BinaryTree& t) {
    std::vector<int> parent(t.size() + 1, BinaryTree::kNone);
    for (int i = 1; i <= t.size(); ++i) {
        if (t.left(i) != BinaryTree::kNone) parent[t.left(i)] = i;
        if (t.right(i) != BinaryTree::kNone) parent[t.right(i)] = i;
    }
    return parent;
}

}  // namespace

std::string BinaryTree::to_parens() const {
    return parens_rec(*this, root_);
}

BinaryTree left_comb(int n) {
    BinaryTree t(n);
    t.set_root(n);
    for (int i = 2; i <= n; ++i) t.set_left(i, i - 1);
    return t;
}

BinaryTree right_comb(int n) {
    BinaryTree t(n);
    t.set_root(n > 0 ? 1 : BinaryTree::kNone);
    for (int i = 1; i < n; ++i) t.set_right(i, i + 1);
    return t;
}

Word tree_to_tamari_diagram(const BinaryTree& t) {
    const int n = t.size();
    std::vector<int> size(n + 1, 0);
    subtree_sizes(t, t.root(), size);
    Word u(n, 0);
    for (int i = 1; i <= n; ++i) {
        const int r = t.right(i);
        u[i - 1] = r == BinaryTree::kNone ? 0 : size[r];
    }
    return u;
}

Word tree_to_dual_diagram(const BinaryTree& t) {
    const int n = t.size();
    std::vector<int> size(n + 1, 0);
    subtree_sizes(t, t.root(), size);
    Word v(n, 0);
    for (int i = 1; i <= n; ++i) {
        const int l = t.left(i);
        v[i - 1] = l == BinaryTree::kNone ? 0 : size[l];
    }
    return v;
}

BinaryTree tree_from_tamari_diagram(const Word& u) {
    if (auto verdict = validate_tamari(u); !verdict.ok())
        throw std::invalid_argument("tree_from_tamari_diagram: " + to_string(verdict));
    const int n = static_cast<int>(u.size());
    BinaryTree t(n);
    t.set_root(build_from_u(u, 1, n, t));
    return t;
}

BinaryTree tree_from_dual_diagram(const Word& v) {
    if (auto verdict = validate_dual_tamari(v); !verdict.ok())
        throw std::invalid_argument("tree_from_dual_diagram: " + to_string(verdict));
    const int n = static_cast<int>(v.size());
    BinaryTree t(n);
    t.set_root(build_from_v(v, 1, n, t));
    return t;
}

std::vector<std::pair<int, BinaryTree>> rotations_up(const BinaryTree& t) {
    std::vector<std::pair<int, BinaryTree>> out;
    const std::vector<int> parent = parents(t);
    for (int y = 1; y <= t.size(); ++y) {
        const int x = t.left(y);
        if (x == BinaryTree::kNone) continue;
        // Rotate x above y: x keeps its left subtree, y inherits x's
        // right subtree, x's right subtree becomes y.
        BinaryTree rotated = t;
        rotated.set_left(y, t.right(x));
        rotated.set_right(x, y);
        const int p = parent[y];
        if (p == BinaryTree::kNone) {
            rotated.set_root(x);
        } else if (t.left(p) == y) {
            rotated.set_left(p, x);
        } else {
            rotated.set_right(p, x);
        }
        out.emplace_back(x, std::move(rotated));
    }
    return out;
}

bool tamari_leq(const BinaryTree& s, const BinaryTree& t) {
    if (s.size() != t.size())
        throw std::invalid_argument("tamari_leq: size mismatch");
    const Word us = tree_to_tamari_diagram(s);
    const Word ut = tree_to_tamari_diagram(t);
    for (size_t i = 0; i < us.size(); ++i)
        if (us[i] > ut[i]) return false;
    return true;
}

std::string canopy(const BinaryTree& t) {
    std::string out;
    for (int i = 1; i <= t.size() - 1; ++i)
        out += t.right(i) == BinaryTree::kNone ? 'L' : 'R';
    return out;
}

bool is_valid_interval(const TamariInterval& iv) {
    return iv.lower.size() == iv.upper.size() && tamari_leq(iv.lower, iv.upper);
}

TamariInterval rho(const IntervalPoset& p) {
    const Tid tid = chi_inverse(p);
    return TamariInterval{tree_from_tamari_diagram(tid.u),
                          tree_from_dual_diagram(tid.v)};
}

IntervalPoset rho_inverse(const TamariInterval& iv) {
    if (!is_valid_interval(iv))
        throw std::invalid_argument("rho_inverse: lower is not <=t upper");
    return chi(make_tid(tree_to_tamari_diagram(iv.lower),
                        tree_to_dual_diagram(iv.upper)));
}

Cubic psi(const TamariInterval& iv) {
    if (!is_valid_interval(iv))
        throw std::invalid_argument("psi: lower is not <=t upper");
    return phi_inverse(make_tid(tree_to_tamari_diagram(iv.lower),
                                tree_to_dual_diagram(iv.upper)));
}

TamariInterval psi_inverse(const Cubic& c) {
    const Tid tid = phi(c);
    if (!is_valid_tid(tid))
        throw std::invalid_argument("psi_inverse: " + describe_invalid_cubic(c));
    return TamariInterval{tree_from_tamari_diagram(tid.u),
                          tree_from_dual_diagram(tid.v)};
}

std::vector<BinaryTree> all_trees(int n) {
    std::vector<BinaryTree> out;
    for (const Word& u : enumerate_tamari_diagrams(n))
        out.push_back(tree_from_tamari_diagram(u));
    return out;
}

std::vector<TamariInterval> all_intervals(int n) {
    std::vector<TamariInterval> out;
    const std::vector<BinaryTree> trees = all_trees(n);
    for (const BinaryTree& s : trees)
        for (const BinaryTree& t : trees)
            if (tamari_leq(s, t)) out.push_back(TamariInterval{s, t});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TamariInterval> interval_covers(const TamariInterval& iv) {
    std::vector<TamariInterval> out;
    for (const auto& [i, s] : rotations_up(iv.lower)) {
        (void)i;
        if (tamari_leq(s, iv.upper)) out.push_back(TamariInterval{s, iv.upper});
    }
    for (const auto& [i, t] : rotations_up(iv.upper)) {
        (void)i;
        out.push_back(TamariInterval{iv.lower, t});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cubicc

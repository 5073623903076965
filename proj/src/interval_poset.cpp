#include "cubicc/interval_poset.hpp"

#include <algorithm>

namespace cubicc {

void IntervalPoset::close_transitively() {
    for (int k = 1; k <= n_; ++k)
        for (int a = 1; a <= n_; ++a)
            if (less(a, k))
                for (int b = 1; b <= n_; ++b)
                    if (less(k, b)) set_less(a, b);
}

std::vector<std::pair<int, int>> IntervalPoset::relation_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= n_; ++a)
        for (int b = 1; b <= n_; ++b)
            if (less(a, b)) out.emplace_back(a, b);
    return out;
}

std::string to_string(const PosetVerdict& v) {
    switch (v.fault) {
        case PosetFault::none:
            return "ok";
        case PosetFault::out_of_range:
            return "vertex index out of range in pair (" + std::to_string(v.a) +
                   ", " + std::to_string(v.b) + ")";
        case PosetFault::antisymmetry:
            return "antisymmetry violated between x_" + std::to_string(v.a) +
                   " and x_" + std::to_string(v.b);
        case PosetFault::decreasing_axiom:
            return "decreasing axiom: x_" + std::to_string(v.a) + " <| x_" +
                   std::to_string(v.b) + " but not x_" + std::to_string(v.j);
        case PosetFault::increasing_axiom:
            return "increasing axiom: x_" + std::to_string(v.a) + " <| x_" +
                   std::to_string(v.b) + " but not x_" + std::to_string(v.j);
    }
    return "unknown";
}

PosetVerdict validate_closed(const IntervalPoset& p) {
    const int n = p.size();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (p.less(a, b) && p.less(b, a))
                return {PosetFault::antisymmetry, a, b, 0};
    for (int i = 1; i <= n; ++i) {
        for (int k = i + 2; k <= n; ++k) {
            if (p.less(k, i)) {
                for (int j = i + 1; j < k; ++j)
                    if (!p.less(j, i)) return {PosetFault::decreasing_axiom, k, i, j};
            }
            if (p.less(i, k)) {
                for (int j = i + 1; j < k; ++j)
                    if (!p.less(j, k)) return {PosetFault::increasing_axiom, i, k, j};
            }
        }
    }
    return {};
}

PosetVerdict validate_interval_poset(int n, const std::vector<std::pair<int, int>>& pairs) {
    IntervalPoset p(n);
    for (const auto& [a, b] : pairs) {
        if (a < 1 || a > n || b < 1 || b > n)
            return {PosetFault::out_of_range, a, b, 0};
        if (a != b) p.set_less(a, b);
    }
    p.close_transitively();
    return validate_closed(p);
}

IntervalPoset chi(const Tid& tid) {
    const int n = tid.size();
    IntervalPoset p(n);
    for (int i = 1; i <= n; ++i) {
        for (int l = 1; l <= tid.u[i - 1]; ++l) p.set_less(i + l, i);
        for (int k = 1; k <= tid.v[i - 1]; ++k) p.set_less(i - k, i);
    }
    p.close_transitively();
    return p;
}

Tid chi_inverse(const IntervalPoset& p) {
    const int n = p.size();
    Word u(n, 0), v(n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (p.less(j, i)) ++u[i - 1];
            if (p.less(i, j)) ++v[j - 1];
        }
    return Tid{std::move(u), std::move(v)};
}

}  // namespace cubicc

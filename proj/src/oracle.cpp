#include "cubicc/oracle.hpp"

#include <algorithm>
#include <map>

namespace cubicc {
namespace oracle {

TamariClosure tamari_order_by_closure(int n) {
    TamariClosure out;
    out.trees = all_trees(n);
    const int m = static_cast<int>(out.trees.size());
    std::map<BinaryTree, int> index;
    for (int i = 0; i < m; ++i) index[out.trees[i]] = i;

    out.order.assign(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i) {
        out.order[i][i] = true;
        for (const auto& [node, rotated] : rotations_up(out.trees[i])) {
            (void)node;
            out.order[i][index.at(rotated)] = true;
        }
    }
    for (int k = 0; k < m; ++k)
        for (int a = 0; a < m; ++a)
            if (out.order[a][k])
                for (int b = 0; b < m; ++b)
                    if (out.order[k][b]) out.order[a][b] = true;
    return out;
}

std::vector<Cubic> cc_by_box_filter(int n) {
    std::vector<Cubic> out;
    Cubic probe;
    probe.c.assign(n - 1, 0);
    // odometer over the box prod_i [-i, n-i]
    for (int i = 1; i <= n - 1; ++i) probe.c[i - 1] = -i;
    while (true) {
        if (is_valid_cubic(probe)) out.push_back(probe);
        int i = n - 1;
        while (i >= 1 && probe.c[i - 1] == n - i) {
            probe.c[i - 1] = -i;
            --i;
        }
        if (i < 1) break;
        ++probe.c[i - 1];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntervalPoset> interval_posets_by_filter(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (a != b) slots.emplace_back(a, b);

    std::vector<IntervalPoset> out;
    const unsigned long total = 1ul << slots.size();
    for (unsigned long mask = 0; mask < total; ++mask) {
        IntervalPoset p(n);
        for (size_t s = 0; s < slots.size(); ++s)
            if ((mask >> s) & 1) p.set_less(slots[s].first, slots[s].second);
        IntervalPoset closed = p;
        closed.close_transitively();
        // only count relations that are already closed, once each
        if (!(closed == p)) continue;
        if (validate_closed(p).ok()) out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace oracle
}  // namespace cubicc

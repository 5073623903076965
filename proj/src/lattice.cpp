#include "cubicc/lattice.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "cubicc/trees.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cubicc {

namespace {

struct TupleHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = v.size();
        for (int x : v) h = h * 1000003u + static_cast<size_t>(x + 64);
        return h;
    }
};

}  // namespace

int PosetInstance::index_of(const Cubic& c) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), c);
    if (it == elements.end() || !(*it == c)) return -1;
    return static_cast<int>(it - elements.begin());
}

int PosetInstance::minimum() const {
    Cubic bottom;
    for (int i = 1; i <= n - 1; ++i) bottom.c.push_back(-i);
    return index_of(bottom);
}

int PosetInstance::maximum() const {
    Cubic top;
    for (int i = 1; i <= n - 1; ++i) top.c.push_back(n - i);
    return index_of(top);
}

std::vector<std::vector<int>> cover_lists_serial(const std::vector<Cubic>& elements) {
    // index_of by binary search over the sorted element list
    auto find = [&](const Cubic& c) {
        auto it = std::lower_bound(elements.begin(), elements.end(), c);
        return static_cast<int>(it - elements.begin());
    };
    std::vector<std::vector<int>> out(elements.size());
    for (size_t i = 0; i < elements.size(); ++i) {
        for (const Cubic& up : covers(elements[i])) out[i].push_back(find(up));
    }
    return out;
}

std::vector<std::vector<int>> cover_lists_parallel(const std::vector<Cubic>& elements) {
    auto find = [&](const Cubic& c) {
        auto it = std::lower_bound(elements.begin(), elements.end(), c);
        return static_cast<int>(it - elements.begin());
    };
    std::vector<std::vector<int>> out(elements.size());
    const auto count = static_cast<long long>(elements.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < count; ++i) {
        for (const Cubic& up : covers(elements[i])) out[i].push_back(find(up));
    }
    return out;
}

PosetInstance enumerate_cc(int n, Execution exec, int cap) {
    if (n < 1) throw std::invalid_argument("enumerate_cc: n < 1");
    if (n > cap)
        throw SizeCapError("enumerate_cc: size " + std::to_string(n) +
                           " exceeds cap " + std::to_string(cap));
    PosetInstance p;
    p.n = n;

    Cubic bottom;
    for (int i = 1; i <= n - 1; ++i) bottom.c.push_back(-i);

    std::unordered_set<std::vector<int>, TupleHash> seen;
    std::deque<Cubic> frontier{bottom};
    seen.insert(bottom.c);
    while (!frontier.empty()) {
        Cubic c = std::move(frontier.front());
        frontier.pop_front();
        for (Cubic& up : covers(c)) {
            if (seen.insert(up.c).second) frontier.push_back(std::move(up));
        }
        p.elements.push_back(std::move(c));
    }
    std::sort(p.elements.begin(), p.elements.end());

    const std::vector<std::vector<int>> lists = exec == Execution::parallel
                                                    ? cover_lists_parallel(p.elements)
                                                    : cover_lists_serial(p.elements);
    for (size_t i = 0; i < lists.size(); ++i)
        for (int j : lists[i]) p.hasse.emplace_back(static_cast<int>(i), j);
    std::sort(p.hasse.begin(), p.hasse.end());
    return p;
}

namespace {

// Bound b of {a, b} that dominates (resp. is dominated by) every other
// bound; throws if no single element does.
int extremal_bound(const PosetInstance& p, int a, int b, bool lower) {
    std::vector<int> bounds;
    for (size_t i = 0; i < p.elements.size(); ++i) {
        const Order oa = compare_cc(p.elements[i], p.elements[a]);
        const Order ob = compare_cc(p.elements[i], p.elements[b]);
        const bool below_a = oa == Order::less || oa == Order::equal;
        const bool below_b = ob == Order::less || ob == Order::equal;
        const bool above_a = oa == Order::greater || oa == Order::equal;
        const bool above_b = ob == Order::greater || ob == Order::equal;
        if (lower ? (below_a && below_b) : (above_a && above_b))
            bounds.push_back(static_cast<int>(i));
    }
    for (int candidate : bounds) {
        bool extremal = true;
        for (int other : bounds) {
            const Order o = compare_cc(p.elements[other], p.elements[candidate]);
            const bool fits = lower ? (o == Order::less || o == Order::equal)
                                    : (o == Order::greater || o == Order::equal);
            if (!fits) {
                extremal = false;
                break;
            }
        }
        if (extremal) return candidate;
    }
    throw std::logic_error("lattice property violated: no unique bound");
}

}  // namespace

int meet(const PosetInstance& p, int a, int b) {
    return extremal_bound(p, a, b, true);
}

int join(const PosetInstance& p, int a, int b) {
    return extremal_bound(p, a, b, false);
}

std::vector<CountRow> check_counts(int n_max, int cap) {
    std::vector<CountRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        CountRow row;
        row.n = n;
        row.formula = interval_count(n);

        row.cc_count = static_cast<long long>(enumerate_cc(n, Execution::parallel, cap).elements.size());

        long long tids = 0;
        for_each_tid(n, [&](const Tid&) { ++tids; });
        row.tid_count = tids;

        if (n <= 5) row.interval_count = static_cast<long long>(all_intervals(n).size());

        row.ok = BigInt(row.cc_count) == row.formula &&
                 BigInt(row.tid_count) == row.formula &&
                 (row.interval_count < 0 || BigInt(row.interval_count) == row.formula);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string to_string(const CountRow& row) {
    std::string out = "n=" + std::to_string(row.n) +
                      " formula=" + row.formula.str() +
                      " cc=" + std::to_string(row.cc_count) +
                      " tid=" + std::to_string(row.tid_count);
    if (row.interval_count >= 0)
        out += " intervals=" + std::to_string(row.interval_count);
    out += row.ok ? " OK" : " MISMATCH";
    return out;
}

}  // namespace cubicc

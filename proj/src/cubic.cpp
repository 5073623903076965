#include "cubicc/cubic.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubicc {

Tid phi(const Cubic& c) {
    const int n = c.size();
    Word u(n, 0), v(n, 0);
    for (int i = 1; i <= n - 1; ++i) {
        u[i - 1] = std::max(c.c[i - 1], 0);
        v[i] = -std::min(c.c[i - 1], 0);
    }
    return Tid{std::move(u), std::move(v)};
}

bool is_valid_cubic(const Cubic& c) {
    return is_valid_tid(phi(c));
}

std::string describe_invalid_cubic(const Cubic& c) {
    const Tid t = phi(c);
    if (auto verdict = validate_tamari(t.u); !verdict.ok())
        return "u: " + to_string(verdict);
    if (auto verdict = validate_dual_tamari(t.v); !verdict.ok())
        return "v: " + to_string(verdict);
    if (auto compat = check_compatible(t.u, t.v); !compat.ok)
        return "incompatible at (" + std::to_string(compat.i) + ", " +
               std::to_string(compat.j) + ")";
    return "valid";
}

Cubic phi_inverse(const Tid& tid) {
    const int n = tid.size();
    Cubic out;
    out.c.reserve(n - 1);
    for (int i = 1; i <= n - 1; ++i) out.c.push_back(tid.u[i - 1] - tid.v[i]);
    return out;
}

Cubic zero_entry(const Cubic& c, int i) {
    if (i < 1 || i > c.size() - 1)
        throw std::out_of_range("zero_entry: index " + std::to_string(i));
    Cubic out = c;
    out.c[i - 1] = 0;
    return out;
}

Order compare_cc(const Cubic& a, const Cubic& b) {
    if (a.c.size() != b.c.size())
        throw std::invalid_argument("compare_cc: size mismatch");
    bool le = true, ge = true;
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] > b.c[i]) le = false;
        if (a.c[i] < b.c[i]) ge = false;
    }
    if (le && ge) return Order::equal;
    if (le) return Order::less;
    if (ge) return Order::greater;
    return Order::incomparable;
}

bool leq_cc(const Cubic& a, const Cubic& b) {
    const Order o = compare_cc(a, b);
    return o == Order::less || o == Order::equal;
}

std::optional<Cubic> min_increase(const Cubic& c, int i) {
    const int n = c.size();
    if (i < 1 || i > n - 1)
        throw std::out_of_range("min_increase: index " + std::to_string(i));
    Cubic probe = c;
    // Entry i is bounded above by n - i (the letter bound on u_i).
    for (int val = c.c[i - 1] + 1; val <= n - i; ++val) {
        probe.c[i - 1] = val;
        if (is_valid_cubic(probe)) return probe;
    }
    return std::nullopt;
}

std::vector<Cubic> covers(const Cubic& c) {
    std::vector<Cubic> out;
    for (int i = 1; i <= c.size() - 1; ++i) {
        if (auto up = min_increase(c, i)) out.push_back(std::move(*up));
    }
    return out;
}

bool is_synchronized(const Cubic& c) {
    return std::none_of(c.c.begin(), c.c.end(), [](int e) { return e == 0; });
}

bool is_synchronized(const Tid& tid) {
    for (int i = 1; i <= tid.size() - 1; ++i)
        if (tid.u[i - 1] == 0 && tid.v[i] == 0) return false;
    return true;
}

bool is_new(const Tid& tid) {
    const int n = tid.size();
    for (int i = 1; i <= n - 1; ++i)
        if (tid.u[i - 1] > n - i - 1) return false;
    for (int j = 2; j <= n; ++j)
        if (tid.v[j - 1] > j - 2) return false;
    for (int k = 1; k <= n; ++k)
        for (int l = k + 2; l <= n; ++l)
            if (tid.u[k - 1] >= l - k - 1 && tid.v[l - 1] >= l - k - 1) return false;
    return true;
}

}  // namespace cubicc

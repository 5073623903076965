#include "cubicc/diagrams.hpp"

#include <algorithm>

namespace cubicc {

std::string to_string(const WordVerdict& v) {
    switch (v.fault) {
        case WordFault::none:
            return "ok";
        case WordFault::empty:
            return "empty word";
        case WordFault::bound:
            return "letter bound violated at index " + std::to_string(v.index);
        case WordFault::slope:
            return "slope condition violated at index " + std::to_string(v.index) +
                   ", offset " + std::to_string(v.offset);
    }
    return "unknown";
}

WordVerdict validate_tamari(const Word& u) {
    const int n = static_cast<int>(u.size());
    if (n == 0) return {WordFault::empty, 0, 0};
    for (int i = 1; i <= n; ++i) {
        const int ui = u[i - 1];
        if (ui < 0 || ui > n - i) return {WordFault::bound, i, 0};
        for (int j = 1; j <= ui; ++j) {
            if (u[i + j - 1] > ui - j) return {WordFault::slope, i, j};
        }
    }
    return {};
}

WordVerdict validate_dual_tamari(const Word& v) {
    const int n = static_cast<int>(v.size());
    if (n == 0) return {WordFault::empty, 0, 0};
    for (int i = 1; i <= n; ++i) {
        const int vi = v[i - 1];
        if (vi < 0 || vi > i - 1) return {WordFault::bound, i, 0};
        for (int j = 1; j <= vi; ++j) {
            if (v[i - j - 1] > vi - j) return {WordFault::slope, i, j};
        }
    }
    return {};
}

Word reverse_word(const Word& w) {
    return Word(w.rbegin(), w.rend());
}

CompatVerdict check_compatible(const Word& u, const Word& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("check_compatible: size mismatch");
    const int n = static_cast<int>(u.size());
    for (int i = 1; i <= n; ++i) {
        const int reach = std::min(n, i + u[i - 1]);
        for (int j = i + 1; j <= reach; ++j) {
            if (v[j - 1] >= j - i) return {false, i, j};
        }
    }
    return {};
}

bool is_valid_tid(const Tid& t) {
    return t.u.size() == t.v.size() && validate_tamari(t.u).ok() &&
           validate_dual_tamari(t.v).ok() && check_compatible(t.u, t.v).ok;
}

Tid make_tid(Word u, Word v) {
    if (auto verdict = validate_tamari(u); !verdict.ok())
        throw std::invalid_argument("make_tid: u: " + to_string(verdict));
    if (auto verdict = validate_dual_tamari(v); !verdict.ok())
        throw std::invalid_argument("make_tid: v: " + to_string(verdict));
    if (auto compat = check_compatible(u, v); !compat.ok)
        throw std::invalid_argument("make_tid: incompatible at (" +
                                    std::to_string(compat.i) + ", " +
                                    std::to_string(compat.j) + ")");
    return Tid{std::move(u), std::move(v)};
}

namespace {

// Letters are chosen left to right in ascending order, so the DFS emits
// diagrams lexicographically. Filling the suffix with zeros always
// completes a prefix, hence no dead ends.
void emit_diagrams(int n, Word& prefix, const std::function<void(const Word&)>& fn) {
    const int i = static_cast<int>(prefix.size()) + 1;
    if (i > n) {
        fn(prefix);
        return;
    }
    int bound = n - i;
    for (int p = 1; p < i; ++p) {
        const int up = prefix[p - 1];
        if (up >= i - p) bound = std::min(bound, up - (i - p));
    }
    for (int val = 0; val <= bound; ++val) {
        prefix.push_back(val);
        emit_diagrams(n, prefix, fn);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Word> enumerate_tamari_diagrams(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_tamari_diagrams: n < 1");
    std::vector<Word> out;
    Word prefix;
    prefix.reserve(n);
    emit_diagrams(n, prefix, [&](const Word& w) { out.push_back(w); });
    return out;
}

std::vector<Word> enumerate_dual_tamari_diagrams(int n) {
    std::vector<Word> out = enumerate_tamari_diagrams(n);
    for (Word& w : out) std::reverse(w.begin(), w.end());
    std::sort(out.begin(), out.end());
    return out;
}

void for_each_tid(int n, const std::function<void(const Tid&)>& fn) {
    const std::vector<Word> us = enumerate_tamari_diagrams(n);
    const std::vector<Word> vs = enumerate_dual_tamari_diagrams(n);
    for (const Word& u : us) {
        for (const Word& v : vs) {
            if (check_compatible(u, v).ok) fn(Tid{u, v});
        }
    }
}

std::vector<Tid> enumerate_tids(int n) {
    std::vector<Tid> out;
    for_each_tid(n, [&](const Tid& t) { out.push_back(t); });
    return out;
}

}  // namespace cubicc

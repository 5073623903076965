#ifndef CUBICC_DIAGRAMS_HPP
#define CUBICC_DIAGRAMS_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubicc {

/// Integer word, 1-based in the math, 0-based in storage.
using Word = std::vector<int>;

enum class WordFault {
    none,
    empty,  // word has no letters
    bound,  // letter out of its allowed range
    slope,  // the diagonal condition fails
};

/// Outcome of validating a (dual) Tamari diagram. `index` is the 1-based
/// position of the smallest offending letter, `offset` the diagonal step j
/// for slope faults.
struct WordVerdict {
    WordFault fault = WordFault::none;
    int index = 0;
    int offset = 0;

    bool ok() const { return fault == WordFault::none; }
};

std::string to_string(const WordVerdict& v);

// A Tamari diagram of size n is a word u with 0 <= u_i <= n-i and
// u_{i+j} <= u_i - j for 0 <= j <= u_i.
WordVerdict validate_tamari(const Word& u);

// Dual: 0 <= v_i <= i-1 and v_{i-j} <= v_i - j for 0 <= j <= v_i.
WordVerdict validate_dual_tamari(const Word& v);

/// A word is a dual Tamari diagram iff its reversal is a Tamari diagram.
Word reverse_word(const Word& w);

/// Compatibility verdict for a pair (u, v); on failure (i, j) is the
/// first offending pair in lexicographic order.
struct CompatVerdict {
    bool ok = true;
    int i = 0;
    int j = 0;
};

// u, v compatible: for all i < j with j - i <= u_i, v_j < j - i.
// Throws std::invalid_argument on size mismatch.
CompatVerdict check_compatible(const Word& u, const Word& v);

/// A compatible pair (u, v): a Tamari interval diagram.
struct Tid {
    Word u;
    Word v;

    int size() const { return static_cast<int>(u.size()); }
    bool operator==(const Tid& other) const = default;
    bool operator<(const Tid& other) const {
        return u != other.u ? u < other.u : v < other.v;
    }
};

bool is_valid_tid(const Tid& t);

/// Validating constructor; throws std::invalid_argument with the failed
/// condition on invalid input.
Tid make_tid(Word u, Word v);

/// All Tamari diagrams of size n in lexicographic order. |result| = Catalan(n).
std::vector<Word> enumerate_tamari_diagrams(int n);

/// All dual Tamari diagrams of size n in lexicographic order.
std::vector<Word> enumerate_dual_tamari_diagrams(int n);

/// Streams every Tamari interval diagram of size n, lexicographically by
/// (u, v). Throws std::invalid_argument for n < 1.
void for_each_tid(int n, const std::function<void(const Tid&)>& fn);

std::vector<Tid> enumerate_tids(int n);

}  // namespace cubicc

#endif

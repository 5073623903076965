#include "cubicc/counting.hpp"

namespace cubicc {

namespace {

BigInt factorial(int k) {
    BigInt out = 1;
    for (int i = 2; i <= k; ++i) out *= i;
    return out;
}

}  // namespace

BigInt interval_count(int n) {
    return 2 * factorial(4 * n + 1) / (factorial(n + 1) * factorial(3 * n + 2));
}

BigInt catalan(int n) {
    return factorial(2 * n) / (factorial(n) * factorial(n + 1));
}

}  // namespace cubicc

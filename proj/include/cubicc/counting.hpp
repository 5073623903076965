#ifndef CUBICC_COUNTING_HPP
#define CUBICC_COUNTING_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace cubicc {

using BigInt = boost::multiprecision::cpp_int;

/// Number of Tamari intervals of size n: 2(4n+1)! / ((n+1)!(3n+2)!),
/// evaluated exactly.
BigInt interval_count(int n);

/// Catalan number, the count of binary trees (and Tamari diagrams).
BigInt catalan(int n);

}  // namespace cubicc

#endif

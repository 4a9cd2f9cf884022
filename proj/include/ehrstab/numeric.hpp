#pragma once

#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ehrstab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Thrown when an enumeration would exceed the configured cell budget.
/// The limit defaults to 1e8 candidate cells and can be overridden with
/// the CE_CELL_LIMIT environment variable.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Current enumeration cell budget (reads CE_CELL_LIMIT once).
long long cell_limit();

/// Binomial coefficient; zero when k < 0 or k > n. Requires n >= 0.
BigInt binomial(long long n, long long k);

/// Rank of an integer matrix, computed exactly by fraction-free elimination.
int integer_rank(std::vector<std::vector<BigInt>> m);

}  // namespace ehrstab

#ifndef STABRED_NUMERIC_HPP
#define STABRED_NUMERIC_HPP

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stabred {

// All arithmetic in this library is exact. Multiplicities, lcm values and
// intermediate genus sums can exceed machine words, so everything numeric
// goes through these types.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;
using boost::multiprecision::denominator;

/// Least non-negative residue of a mod n (n > 0).
Int positive_mod(const Int& a, const Int& n);

/// Ceiling of a/b for b > 0.
Int ceil_div(const Int& a, const Int& b);

/// Inverse of a mod n via extended Euclid, reduced to [1, n-1].
/// Requires n >= 2 and gcd(a, n) = 1.
Int mod_inverse(const Int& a, const Int& n);

/// Trial-division primality check (inputs here are residue characteristics,
/// which are small).
bool is_prime(const Int& n);

/// Sorted list of the positive divisors of n >= 1.
std::vector<Int> divisors(const Int& n);

}  // namespace stabred

#endif

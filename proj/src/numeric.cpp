#include "stabred/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace stabred {

Int positive_mod(const Int& a, const Int& n) {
    Int m = a % n;
    if (m < 0) m += n;
    return m;
}

Int ceil_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (q * b != a && ((a > 0) == (b > 0))) ++q;
    return q;
}

Int mod_inverse(const Int& a, const Int& n) {
    if (n < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
    Int r0 = n, r1 = positive_mod(a, n);
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    return positive_mod(t0, n);
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<Int> divisors(const Int& n) {
    if (n < 1) throw std::invalid_argument("divisors: argument must be positive");
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    std::reverse(large.begin(), large.end());
    small.insert(small.end(), large.begin(), large.end());
    return small;
}

}  // namespace stabred

#include "stabred/localmodel.hpp"

#include "stabred/errors.hpp"

namespace stabred {

OneBranchLocal one_branch(const Int& b, const Int& n) {
    if (b < 1 || n < 1)
        throw DomainError(Err::InvalidParams, "one_branch requires b >= 1 and n >= 1");
    Int g = gcd(b, n);
    return {b, n, b / g, g};
}

QuotientSingularityParams node_params(const Int& a, const Int& b, const Int& n, const Int& p) {
    if (a < 1 || b < 1 || n < 1)
        throw DomainError(Err::InvalidParams, "node_params requires a, b, n >= 1");
    if (p > 0) {
        if (n % p == 0)
            throw DomainError(Err::WildDegree,
                              "base-change degree " + n.str() + " is divisible by p = " + p.str());
        if (a % p == 0 && b % p == 0)
            throw DomainError(Err::TameAssumptionViolated,
                              "both branch multiplicities (" + a.str() + ", " + b.str() +
                                  ") are divisible by p = " + p.str());
    }

    QuotientSingularityParams out;
    out.a = a;
    out.b = b;
    out.n = n;
    Int ga = gcd(a, n), gb = gcd(b, n), gabn = gcd(gcd(a, b), n);
    out.a_dd = a / ga;
    out.b_dd = b / gb;
    out.n_dd = n * gabn / (ga * gb);
    out.point_count = gabn;
    out.r = 0;
    if (out.n_dd > 1) {
        // r b'' + a'' = 0 mod n''; b'' is a unit mod n''.
        Int inv = mod_inverse(out.b_dd, out.n_dd);
        out.r = positive_mod(-out.a_dd * inv, out.n_dd);
    }
    return out;
}

std::vector<Int> jung_hirzebruch(const Int& n, const Int& r) {
    if (n < 2 || r < 1 || r >= n || gcd(n, r) != 1)
        throw DomainError(Err::InvalidParams,
                          "jung_hirzebruch requires n >= 2, 1 <= r < n, gcd(n, r) = 1; got n = " +
                              n.str() + ", r = " + r.str());
    std::vector<Int> terms;
    Int num = n, den = r;
    while (den > 0) {
        Int b = ceil_div(num, den);
        terms.push_back(b);
        Int next = b * den - num;  // numerator of the tail, 0 <= next < den
        num = den;
        den = next;
    }
    return terms;
}

std::vector<Int> chain_multiplicities(const std::vector<Int>& bs, const Int& m2, const Int& m1) {
    if (m2 < 1 || m1 < 1)
        throw DomainError(Err::InvalidParams, "boundary multiplicities must be positive");
    for (const Int& b : bs)
        if (b < 2) throw DomainError(Err::InvalidParams, "all chain coefficients must be >= 2");
    std::size_t lambda = bs.size();
    if (lambda == 0) return {};

    // Tridiagonal system b_j mu_j - mu_{j-1} - mu_{j+1} = 0 with mu_0 = m2,
    // mu_{lambda+1} = m1. Forward elimination then back substitution, in
    // exact rationals.
    std::vector<Rat> diag(lambda), rhs(lambda);
    for (std::size_t j = 0; j < lambda; ++j) {
        diag[j] = Rat(bs[j]);
        rhs[j] = 0;
    }
    rhs[0] = Rat(m2);
    rhs[lambda - 1] += Rat(m1);
    for (std::size_t j = 1; j < lambda; ++j) {
        // subtract (-1/diag[j-1]) times row j-1 from row j
        Rat factor = Rat(-1) / diag[j - 1];
        diag[j] -= factor * Rat(-1);
        rhs[j] -= factor * rhs[j - 1];
    }
    std::vector<Rat> mu(lambda);
    mu[lambda - 1] = rhs[lambda - 1] / diag[lambda - 1];
    for (std::size_t j = lambda - 1; j-- > 0;)
        mu[j] = (rhs[j] + mu[j + 1]) / diag[j];

    std::vector<Int> out(lambda);
    for (std::size_t j = 0; j < lambda; ++j) {
        if (denominator(mu[j]) != 1)
            throw DomainError(Err::NonIntegralMultiplicity,
                              "mu_" + std::to_string(j + 1) + " = " +
                                  numerator(mu[j]).str() + "/" + denominator(mu[j]).str() +
                                  " is not an integer");
        out[j] = numerator(mu[j]);
        if (out[j] < 1)
            throw DomainError(Err::NonPositiveMultiplicity,
                              "mu_" + std::to_string(j + 1) + " = " + out[j].str() +
                                  " is not positive");
    }
    return out;
}

ResolutionChain resolve_node(const QuotientSingularityParams& params, const Int& mult_a_side,
                             const Int& mult_b_side) {
    if (params.n_dd < 2)
        throw DomainError(Err::InvalidParams,
                          "the point is regular (n'' = 1); there is no chain to insert");
    std::vector<Int> bs = jung_hirzebruch(params.n_dd, params.r);
    std::vector<Int> mus = chain_multiplicities(bs, mult_b_side, mult_a_side);
    ResolutionChain chain;
    chain.m2 = mult_b_side;
    chain.m1 = mult_a_side;
    chain.entries.reserve(bs.size());
    for (std::size_t j = 0; j < bs.size(); ++j) chain.entries.push_back({bs[j], mus[j]});
    return chain;
}

}  // namespace stabred

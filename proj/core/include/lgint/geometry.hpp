#pragma once

// Degrees, Schubert structure constants, degree-1 Gromov-Witten invariants
// and small quantum products for LG(n), all evaluated as LG integrals of
// products of Q-tilde classes.

#include <map>
#include <string>

#include "lgint/combinat.hpp"
#include "lgint/rational.hpp"

namespace lgint {

/// Closed form (N)! / prod_{i=1}^n (2i-1)! * prod_{i<j} (2j - 2i), N = n(n+1)/2.
Integer degree_lg(unsigned n);

/// The integral of sigma_1^N over LG(n); throws IntegralityError when the
/// result is not a nonnegative integer.
Integer degree_lg_via_integral(unsigned n);

/// e_{alpha,beta}^gamma = integral over LG(n) of Q~_alpha Q~_beta Q~_{gamma^vee}.
Integer structure_constant(const StrictPartition& alpha, const StrictPartition& beta,
                           const StrictPartition& gamma, unsigned n);

/// <sigma_alpha, sigma_beta, sigma_delta>_1 = 1/2 of the LG(n+1) integral of
/// Q~_alpha Q~_beta Q~_delta, the classes taken in rank n+1. `delta` is the
/// third class itself (not its dual).
Integer gw1(const StrictPartition& alpha, const StrictPartition& beta, const StrictPartition& delta,
            unsigned n);

struct QuantumProduct {
    unsigned n = 0;
    StrictPartition a;
    StrictPartition b;
    /// gamma -> e_{a,b}^gamma over gamma in D_n with |gamma| = |a| + |b|.
    std::map<StrictPartition, Integer> classical;
    /// gamma -> <sigma_a, sigma_b, sigma_{gamma^vee}>_1 over |gamma| = |a| + |b| - (n+1).
    std::map<StrictPartition, Integer> quantum1;

    /// "2*s[4,3,1] + 2*s[3]*q"; zero coefficients omitted, "0" when empty.
    std::string to_string() const;
};

/// sigma_a * sigma_b in qH*(LG(n)). Throws UnsupportedDegreeError when
/// |a| + |b| >= 2(n+1), where q^2 terms could appear.
QuantumProduct quantum_product(const StrictPartition& a, const StrictPartition& b, unsigned n);

}  // namespace lgint

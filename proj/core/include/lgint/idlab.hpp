#pragma once

// Executable checks of the interpolation lemmas and the signed-weight
// identity behind the LG(n) integral formula.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lgint/polyring.hpp"
#include "lgint/rational.hpp"

namespace lgint {

/// Roots of the monic polynomial Q(x) = prod (x - gamma_i); pairwise distinct.
class MonicRootSet {
  public:
    explicit MonicRootSet(std::vector<Rational> roots);

    const std::vector<Rational>& roots() const { return roots_; }
    /// d, where deg Q = d + 1.
    unsigned degree() const { return static_cast<unsigned>(roots_.size()) - 1; }
    /// Q'(gamma_i) = prod_{j != i} (gamma_i - gamma_j).
    Rational derivative_at(std::size_t i) const;

  private:
    std::vector<Rational> roots_;
};

/// sum_i gamma_i^r / Q'(gamma_i) for 0 <= r <= d.
Rational lemma1_sum(const MonicRootSet& rs, unsigned r);

/// Sum over all root tuples of F(a_1..a_n) / (Q_1'(a_1) .. Q_n'(a_n)).
/// Requires F.nvars() == root_sets.size() and deg F <= sum d_i.
Rational lemma2_sum(const SparsePoly& f, const std::vector<MonicRootSet>& root_sets);

struct IdentityCheck {
    Rational lhs;
    Rational rhs;
    bool equal = false;
};

/// lhs = signed-weight sum of P over lambda_I; rhs = 2^n c(n) / n!.
IdentityCheck theorem1_check(const SparsePoly& p, const std::vector<Rational>& lambdas, unsigned n);

/// The identity multiplied through by prod lambda_{i,I}:
///   sum_I (-1)^{n-|I|} P(lambda_I) / prod_{i<j}(lambda_{i,I}+lambda_{j,I})
///     = (2^n c(n) / n!) prod_i lambda_i.
IdentityCheck remark_check(const SparsePoly& p, const std::vector<Rational>& lambdas, unsigned n);

/// The same sum with sign (-1)^{|I|}; equals (-1)^n times remark_check's lhs.
Rational remark_sum_subset_sign(const SparsePoly& p, const std::vector<Rational>& lambdas);

/// F = P * prod_{i!=j}(x_i - x_j) * prod_{i<j}(x_i + x_j), unpruned.
SparsePoly theorem1_integrand(const SparsePoly& p, unsigned n);

/// Roots lambda_1..lambda_n, -lambda_1..-lambda_n of prod (x^2 - lambda_i^2).
MonicRootSet signed_root_set(const std::vector<Rational>& lambdas);

/// A random rational combination of products of e_1..e_n in n variables,
/// of degree at most max_degree (and exactly max_degree when `top` is set).
SparsePoly random_symmetric_poly(unsigned n, unsigned max_degree, std::mt19937_64& rng, bool top = true);

/// `size` distinct rational roots with small numerators and denominators.
MonicRootSet random_root_set(unsigned size, std::mt19937_64& rng);

struct VerifyReport {
    std::string check;
    unsigned n = 0;
    std::uint64_t seed = 0;
    unsigned trials = 0;
    unsigned passed = 0;
    bool ok() const { return passed == trials; }
};

/// The signed-weight identity and its rewritten form on random symmetric P and
/// random admissible weights.
VerifyReport verify_identity(unsigned n, std::uint64_t seed, unsigned trials);
/// The power-sum interpolation pattern on random root sets with 2..6 roots.
VerifyReport verify_lemma1(std::uint64_t seed, unsigned trials);
/// The multivariate interpolation sum against coeff and under replacement of every root set.
VerifyReport verify_lemma2(unsigned n, std::uint64_t seed, unsigned trials);
/// LG(n) coefficient route against G(n, 2n) localization on random classes.
VerifyReport verify_relation(unsigned n, std::uint64_t seed, unsigned trials);

}  // namespace lgint

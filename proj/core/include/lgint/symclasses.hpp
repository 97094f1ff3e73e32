#pragma once

// Cohomology classes written as polynomials in the special Schubert classes
// sigma_1..sigma_n (deg sigma_i = i), and the Q-tilde classes built from
// them by the two-stage Giambelli formula.

#include <cstddef>
#include <optional>
#include <random>
#include <string>

#include "lgint/combinat.hpp"
#include "lgint/polyring.hpp"
#include "lgint/rational.hpp"

namespace lgint {

/// A polynomial in sigma_1..sigma_n. Variable i of the underlying SparsePoly
/// is sigma_{i+1}; generators above the rank are never stored.
class ClassExpr {
  public:
    /// The zero class in rank n.
    explicit ClassExpr(std::size_t n);
    explicit ClassExpr(SparsePoly sigma_poly);

    static ClassExpr one(std::size_t n);
    static ClassExpr constant(std::size_t n, const Rational& c);
    /// sigma_i, 1 <= i <= n.
    static ClassExpr generator(std::size_t i, std::size_t n);

    std::size_t rank() const { return poly_.nvars(); }
    const SparsePoly& sigma_poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }

    /// Graded degree of a sigma-monomial: sum of i * exponent(sigma_i).
    unsigned weighted_degree(const Exponents& e) const;
    /// The common graded degree, or nullopt when zero or inhomogeneous.
    std::optional<unsigned> degree() const;
    /// Largest graded degree of a term; -1 for the zero class.
    int top_degree() const;
    /// The terms of graded degree exactly d.
    ClassExpr homogeneous_part(unsigned d) const;

    ClassExpr& operator+=(const ClassExpr& o);
    ClassExpr& operator-=(const ClassExpr& o);
    ClassExpr& operator*=(const Rational& c);

    friend ClassExpr operator+(ClassExpr a, const ClassExpr& b) { return a += b; }
    friend ClassExpr operator-(ClassExpr a, const ClassExpr& b) { return a -= b; }
    friend ClassExpr operator-(ClassExpr a) { return a *= Rational(-1); }
    friend ClassExpr operator*(ClassExpr a, const Rational& c) { return a *= c; }
    friend ClassExpr operator*(const Rational& c, ClassExpr a) { return a *= c; }
    friend ClassExpr operator*(const ClassExpr& a, const ClassExpr& b);
    friend bool operator==(const ClassExpr& a, const ClassExpr& b) = default;

    /// Text form, e.g. "s2*s1-2*s3". Terms ordered by graded
    /// degree, then lex with sigma_1 most significant; factors in a term are
    /// written with the highest index first.
    std::string to_string() const;

  private:
    SparsePoly poly_;
};

ClassExpr pow(const ClassExpr& c, unsigned k);

/// Q~_i: 1 for i = 0, sigma_i for 1 <= i <= n, zero otherwise.
ClassExpr special(int i, std::size_t n);

/// Q~_{i,j} = Q~_i Q~_j + 2 sum_{k=1}^{n-i} (-1)^k Q~_{i+k} Q~_{j-k}, i > j > 0.
ClassExpr qtilde2(unsigned i, unsigned j, std::size_t n);

/// Q~_alpha via the Laplace expansion of the Pfaffian [Q~_{alpha_i,alpha_j}],
/// padding a zero part when the length is odd.
ClassExpr qtilde(const StrictPartition& alpha, std::size_t n);

/// Substitutes sigma_i -> (-1)^i e_i(x_1..x_n): the variables are the Chern
/// roots of the tautological sub-bundle, not of its dual.
SparsePoly to_chern_roots(const ClassExpr& c);

/// (-1)^{n(n-1)/2} prod_{i<j} (x_i + x_j), the class of sigma_{delta_n} on
/// G(n, 2n).
SparsePoly schubert_staircase_poly(std::size_t n);

/// Random homogeneous class of graded degree d in rank n with small integer
/// coefficients; at most `max_terms` sigma-monomials.
ClassExpr random_homogeneous_class(std::size_t n, unsigned d, std::mt19937_64& rng,
                                   std::size_t max_terms = 4);

/// Every sigma-monomial exponent vector of graded degree d in rank n.
std::vector<Exponents> sigma_monomials(std::size_t n, unsigned d);

}  // namespace lgint

#pragma once

// Exact sparse multivariate polynomials over Q.
//
// Monomials are packed into a 64-bit key, one byte per variable, so a
// polynomial has at most kMaxVars variables and every exponent is at most
// kMaxExponent. Operations that would exceed either bound throw
// std::overflow_error. Coefficients are GMP rationals and a stored
// coefficient is never zero.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lgint/rational.hpp"

namespace lgint {

using Exponents = std::vector<unsigned>;

inline constexpr std::size_t kMaxVars = 8;
inline constexpr unsigned kMaxExponent = 255;

class SparsePoly {
  public:
    using Key = std::uint64_t;
    using TermMap = std::unordered_map<Key, Rational>;

    /// The zero polynomial in `nvars` variables.
    explicit SparsePoly(std::size_t nvars);

    static SparsePoly constant(std::size_t nvars, const Rational& c);
    /// x_{index+1}; `index` is zero-based.
    static SparsePoly variable(std::size_t nvars, std::size_t index);
    static SparsePoly monomial(std::size_t nvars, const Exponents& e, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Exact coefficient of x^e; zero when absent.
    Rational coeff(const Exponents& e) const;

    /// Terms in graded-lex order (total degree descending, then lex with
    /// x1 > x2 > ...).
    std::vector<std::pair<Exponents, Rational>> terms() const;
    const TermMap& raw_terms() const { return terms_; }

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;
    /// Largest exponent of each variable over all terms.
    Exponents max_exponents() const;

    Rational eval(std::span<const Rational> point) const;

    /// Variable i of the result is variable perm[i] of *this.
    SparsePoly permute(std::span<const std::size_t> perm) const;
    /// Fixed by every adjacent transposition.
    bool is_symmetric() const;

    void add_term(const Exponents& e, const Rational& c);

    SparsePoly& operator+=(const SparsePoly& q);
    SparsePoly& operator-=(const SparsePoly& q);
    SparsePoly& operator*=(const Rational& c);

    friend SparsePoly operator+(SparsePoly p, const SparsePoly& q) { return p += q; }
    friend SparsePoly operator-(SparsePoly p, const SparsePoly& q) { return p -= q; }
    friend SparsePoly operator-(SparsePoly p) { return p *= Rational(-1); }
    friend SparsePoly operator*(SparsePoly p, const Rational& c) { return p *= c; }
    friend SparsePoly operator*(const Rational& c, SparsePoly p) { return p *= c; }
    friend SparsePoly operator*(const SparsePoly& p, const SparsePoly& q);

    friend bool operator==(const SparsePoly& p, const SparsePoly& q) {
        return p.nvars_ == q.nvars_ && p.terms_ == q.terms_;
    }

    /// "3*x1^2*x2-x3+1/2"; terms in graded-lex order, "0" for zero.
    std::string to_string() const;

    Key pack(const Exponents& e) const;
    Exponents unpack(Key k) const;

  private:
    friend SparsePoly mul_pruned(const SparsePoly&, const SparsePoly&, unsigned);
    friend Rational coeff_of_product(const SparsePoly&, const SparsePoly&, const Exponents&);

    void check_same_ring(const SparsePoly& q, const char* op) const;
    void accumulate(Key k, const Rational& c);

    std::size_t nvars_;
    TermMap terms_;
};

/// Product with every term having an exponent above `cap` dropped. Every
/// monomial whose exponents are all <= cap keeps its full coefficient.
SparsePoly mul_pruned(const SparsePoly& p, const SparsePoly& q, unsigned cap);

/// The fold of mul_pruned over `factors` (starting from 1). When every
/// factor has integer coefficients and the product of their coefficient
/// 1-norms stays below 2^126, the fold runs on 128-bit integers; otherwise it
/// falls back to mul_pruned. Both paths give identical results.
SparsePoly product_pruned(std::span<const SparsePoly> factors, unsigned cap);

/// Coefficient of x^e in p*q without forming the product.
Rational coeff_of_product(const SparsePoly& p, const SparsePoly& q, const Exponents& e);

SparsePoly pow(const SparsePoly& p, unsigned k);

/// e_i(x_1..x_n); 1 for i = 0 and 0 for i > n. Throws on negative i.
SparsePoly elem_sym(int i, std::size_t n);

struct StructuredProducts {
    SparsePoly vandermonde;   // prod_{i<j} (x_i - x_j)
    SparsePoly discriminant;  // prod_{i!=j} (x_i - x_j)
    SparsePoly plusprod;      // prod_{i<j} (x_i + x_j)
};

StructuredProducts structured_products(std::size_t n);

/// x_i - x_j and x_i + x_j for the ordered pairs the products above use.
std::vector<SparsePoly> discriminant_factors(std::size_t n);
std::vector<SparsePoly> plusprod_factors(std::size_t n);

}  // namespace lgint

#pragma once

// Integrals of characteristic classes over LG(n) and G(k, m).
//
// Three independent routes compute the same number for LG(n):
//   main-coefficient  (-1)^{N} c(n) / n!, c(n) the coefficient of
//                     x_1^{2n-1}..x_n^{2n-1} in P * prod_{i!=j}(x_i-x_j)
//                     * prod_{i<j}(x_i+x_j), N = n(n+1)/2;
//   dp-coefficient    (-1)^{N} times the coefficient of
//                     x_1^{2n-1} x_2^{2n-2} .. x_n^{n} in
//                     P * prod_{i<j}(x_i-x_j)(x_i+x_j);
//   localization      the fixed-point sum over the 2^n points p_I at
//                     rational torus weights.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lgint/polyring.hpp"
#include "lgint/rational.hpp"
#include "lgint/symclasses.hpp"

namespace lgint {

enum class Route { main_coefficient, dp_coefficient, localization };

std::string_view route_name(Route r);
/// Accepts "main", "dp", "localization" (and the long names).
Route parse_route(std::string_view name);

struct CoefficientCertificate {
    unsigned n = 0;
    Route route = Route::main_coefficient;
    /// The coefficient the route extracts. For the localization route this
    /// is the c(n) implied by the sum, so integral = (-1)^N c_n / n! holds
    /// for both main and localization.
    Rational c_n;
    Rational integral;
};

/// c(n) for a symmetric P in n variables of degree <= n(n+1)/2.
Rational c_coeff(const SparsePoly& p, unsigned n);

/// The raw coefficient of x_1^{2n-1} .. x_n^{n} in P * vandermonde * plusprod.
Rational dp_coeff(const SparsePoly& p, unsigned n);

Rational integrate_lg(const ClassExpr& c, unsigned n);
Rational integrate_lg_dp(const ClassExpr& c, unsigned n);

/// sum_I P(lambda_I) / (prod_{i<j}(lambda_{i,I}+lambda_{j,I}) prod_i lambda_{i,I}).
Rational signed_weight_sum(const SparsePoly& p, const std::vector<Rational>& lambdas);

/// (-1)^N / 2^n times signed_weight_sum at P = to_chern_roots(c).
Rational localization_lg(const ClassExpr& c, const std::vector<Rational>& lambdas, unsigned n);

/// sum over k-subsets J of [m] of P(lambda_J) / prod_{i in J, j not in J}(lambda_j - lambda_i),
/// i.e. the fixed-point formula on G(k, m) with tangent weights Hom(S, Q).
Rational localization_grassmannian(const SparsePoly& p, const std::vector<Rational>& lambdas,
                                   unsigned k, unsigned m);

struct RelationCheck {
    Rational lagrangian;   // integral over LG(n) by the coefficient route
    Rational grassmannian; // integral over G(n, 2n) of P * sigma_{delta_n} by localization
    bool holds = false;
};

/// Compares the two sides of the LG(n) / G(n, 2n) relation; needs 2n
/// distinct weights.
RelationCheck relation1_check(const ClassExpr& c, unsigned n, const std::vector<Rational>& lambdas);

/// Integral by the chosen route. Localization uses `lambdas` when given,
/// otherwise (1, 2, .., n).
CoefficientCertificate certify(const ClassExpr& c, unsigned n, Route route,
                               const std::optional<std::vector<Rational>>& lambdas = std::nullopt);

/// True when c has nonzero terms of graded degree below n(n+1)/2; those
/// terms integrate to zero.
bool has_lower_degree_terms(const ClassExpr& c, unsigned n);

}  // namespace lgint

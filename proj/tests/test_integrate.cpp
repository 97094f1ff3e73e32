#include <random>

#include "doctest.h"
#include "lgint/class_parser.hpp"
#include "lgint/integrate.hpp"
#include "oracles.hpp"

using namespace lgint;

namespace {

std::vector<Rational> weights(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

ClassExpr top_class(unsigned n, std::mt19937_64& rng) {
    return random_homogeneous_class(n, lg_dimension(n), rng);
}

}  // namespace

TEST_SUITE("integrate") {

TEST_CASE("small integrals on every route") {
    const ClassExpr c = parse_class_expr("s1^2*s2^2", 3);
    for (Route r : {Route::main_coefficient, Route::dp_coefficient, Route::localization})
        CHECK(certify(c, 3, r, weights({1, 2, 3})).integral == 4);
    CHECK(c_coeff(to_chern_roots(c), 3) == 24);
    CHECK(integrate_lg(ClassExpr::generator(1, 1), 1) == 1);
    CHECK(integrate_lg(pow(ClassExpr::generator(1, 2), 3), 2) == 2);
    CHECK(integrate_lg(ClassExpr::generator(1, 2) * ClassExpr::generator(2, 2), 2) == 1);
}

TEST_CASE("raw coefficients and their signs") {
    CHECK(c_coeff(to_chern_roots(ClassExpr::generator(1, 1)), 1) == -1);
    CHECK(dp_coeff(to_chern_roots(ClassExpr::generator(1, 1)), 1) == -1);
    CHECK(dp_coeff(to_chern_roots(pow(ClassExpr::generator(1, 2), 3)), 2) == -2);
    CHECK(dp_coeff(to_chern_roots(parse_class_expr("s1^2*s2^2", 3)), 3) == 4);
}

TEST_CASE("coefficient routes validate input") {
    CHECK_THROWS(c_coeff(SparsePoly::variable(2, 0), 2));
    CHECK_THROWS(c_coeff(pow(elem_sym(1, 2), 4), 2));
    CHECK_THROWS(c_coeff(elem_sym(1, 3), 2));
    CHECK_THROWS(localization_lg(ClassExpr::one(2), weights({1, -1}), 2));
    CHECK(parse_route("dp") == Route::dp_coefficient);
    CHECK_THROWS(parse_route("nope"));
}

TEST_CASE("localization agrees with the Euler-class fixed-point sum") {
    std::mt19937_64 rng(51);
    for (unsigned n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            ClassExpr c = top_class(n, rng);
            auto l = random_admissible_lambdas(n, rng);
            CHECK(localization_lg(c, l, n) == oracle::lg_euler_sum(to_chern_roots(c), l));
        }
}

TEST_CASE("routes agree on random top-degree classes") {
    std::mt19937_64 rng(52);
    for (unsigned n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 8; ++trial) {
            ClassExpr c = top_class(n, rng);
            const Rational main = integrate_lg(c, n);
            CHECK(integrate_lg_dp(c, n) == main);
            CHECK(localization_lg(c, random_admissible_lambdas(n, rng), n) == main);
            CHECK(localization_lg(c, random_admissible_lambdas(n, rng), n) == main);
        }
}

TEST_CASE("degree-deficient classes vanish") {
    std::mt19937_64 rng(53);
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned d = 0; d < lg_dimension(n); ++d) {
            ClassExpr c = d == 0 ? ClassExpr::constant(n, Rational(3)) : random_homogeneous_class(n, d, rng);
            CHECK(integrate_lg(c, n) == 0);
            CHECK(integrate_lg_dp(c, n) == 0);
            CHECK(localization_lg(c, random_admissible_lambdas(n, rng), n) == 0);
        }
}

TEST_CASE("lower-degree residue does not change the integral") {
    ClassExpr top = parse_class_expr("s1^2*s2^2", 3);
    ClassExpr mixed = top + parse_class_expr("5*s3-s1", 3);
    CHECK(has_lower_degree_terms(mixed, 3));
    CHECK_FALSE(has_lower_degree_terms(top, 3));
    CHECK(integrate_lg(mixed, 3) == 4);
    CHECK(certify(mixed, 3, Route::localization).integral == 4);
}

TEST_CASE("Poincare duality of Q-tilde classes") {
    for (unsigned n = 1; n <= 4; ++n)
        for (const auto& a : all_strict_partitions(n)) {
            const auto qa = qtilde(a, n);
            const unsigned w = lg_dimension(n) - a.weight();
            for (const auto& b : strict_partitions(n, w))
                CHECK(integrate_lg(qa * qtilde(b, n), n) == (b == dual(a, n) ? 1 : 0));
        }
}

TEST_CASE("Grassmannian fixed-point sums") {
    CHECK(localization_grassmannian(SparsePoly::constant(1, Rational(1)), weights({0, 1}), 1, 2) == 0);
    CHECK(localization_grassmannian(-SparsePoly::variable(1, 0), weights({0, 1}), 1, 2) == 1);
    const std::vector<Rational> pool = weights({2, -3, 5, 7, -11, 13});
    for (auto [k, m] : {std::pair{1u, 3u}, {2u, 4u}, {2u, 5u}, {3u, 6u}}) {
        const std::vector<Rational> l(pool.begin(), pool.begin() + m);
        CHECK(localization_grassmannian(pow(-elem_sym(1, k), k * (m - k)), l, k, m) ==
              Rational(oracle::grassmannian_degree(k, m)));
    }
    SparsePoly p = to_chern_roots(parse_class_expr("s1^2*s2^2", 3)) * schubert_staircase_poly(3);
    CHECK(localization_grassmannian(p, weights({1, 2, 3, 4, 5, 6}), 3, 6) == 4);
    CHECK_THROWS(localization_grassmannian(p, weights({1, 1, 3, 4, 5, 6}), 3, 6));
}

TEST_CASE("LG(n) against G(n, 2n)") {
    auto r = relation1_check(parse_class_expr("s1^2*s2^2", 3), 3, weights({1, 2, 3, 4, 5, 6}));
    CHECK(r.holds);
    CHECK(r.lagrangian == 4);
    CHECK(r.grassmannian == 4);
    auto d = relation1_check(pow(ClassExpr::generator(1, 3), 6), 3, weights({-4, 1, 2, 7, 9, 3}));
    CHECK(d.holds);
    CHECK(d.lagrangian == 16);

    std::mt19937_64 rng(54);
    for (unsigned n = 2; n <= 3; ++n)
        for (int trial = 0; trial < 5; ++trial)
            CHECK(relation1_check(top_class(n, rng), n, random_distinct_weights(2 * n, rng)).holds);
}

TEST_CASE("certificates") {
    const ClassExpr c = parse_class_expr("s1^2*s2^2", 3);
    auto m = certify(c, 3, Route::main_coefficient);
    CHECK(m.c_n == 24);
    auto d = certify(c, 3, Route::dp_coefficient);
    CHECK(d.c_n == 4);
    auto l = certify(c, 3, Route::localization, weights({3, 5, 8}));
    CHECK(l.c_n == 24);
    CHECK(l.integral == 4);
}

}

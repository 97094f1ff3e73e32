#include <random>

#include "doctest.h"
#include "lgint/class_parser.hpp"
#include "lgint/idlab.hpp"
#include "lgint/integrate.hpp"

using namespace lgint;

TEST_SUITE("idlab") {

TEST_CASE("power sums over derivative values") {
    MonicRootSet rs({Rational(0), Rational(1), Rational(3)});
    CHECK(rs.degree() == 2);
    CHECK(lemma1_sum(rs, 0) == 0);
    CHECK(lemma1_sum(rs, 1) == 0);
    CHECK(lemma1_sum(rs, 2) == 1);
    CHECK_THROWS(MonicRootSet({Rational(1), Rational(1)}));
    CHECK_THROWS(lemma1_sum(rs, 3));

    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        auto r = random_root_set(2 + trial % 5, rng);
        for (unsigned k = 0; k <= r.degree(); ++k) CHECK(lemma1_sum(r, k) == (k == r.degree() ? 1 : 0));
    }
}

TEST_CASE("interpolation sums extract one coefficient") {
    SparsePoly x1 = SparsePoly::variable(2, 0), x2 = SparsePoly::variable(2, 1);
    MonicRootSet z({Rational(0), Rational(1)});
    CHECK(lemma2_sum(x1 * x2, {z, z}) == 1);
    CHECK(lemma2_sum(x1 * x1, {z, z}) == 0);
    CHECK_THROWS(lemma2_sum(x1 * x1 * x1, {z, z}));
    CHECK_THROWS(lemma2_sum(x1, {z}));

    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 30; ++trial) {
        SparsePoly f(2);
        std::uniform_int_distribution<int> cd(-5, 5);
        for (unsigned a = 0; a <= 4; ++a)
            for (unsigned b = 0; a + b <= 4; ++b) f.add_term({a, b}, Rational(cd(rng)));
        auto q1 = random_root_set(3, rng), q2 = random_root_set(3, rng);
        const Rational v = lemma2_sum(f, {q1, q2});
        CHECK(v == f.coeff({2, 2}));
        CHECK(lemma2_sum(f, {random_root_set(3, rng), q2}) == v);
        CHECK(lemma2_sum(f, {q1, random_root_set(3, rng)}) == v);
    }
}

TEST_CASE("signed-weight identity examples") {
    SparsePoly p = to_chern_roots(parse_class_expr("s1^2*s2^2", 3));
    std::vector<Rational> l{1, 2, 3};
    auto t = theorem1_check(p, l, 3);
    CHECK(t.equal);
    CHECK(t.lhs == 32);
    CHECK(t.rhs == 32);

    auto zero = theorem1_check(SparsePoly::constant(1, Rational(1)), {Rational(5)}, 1);
    CHECK(zero.equal);
    CHECK(zero.lhs == 0);

    std::mt19937_64 rng(63);
    auto low = theorem1_check(random_symmetric_poly(3, 4, rng), l, 3);
    CHECK(low.lhs == 0);
    CHECK(low.rhs == 0);

    CHECK_THROWS(theorem1_check(SparsePoly::variable(2, 0), {Rational(1), Rational(2)}, 2));
    CHECK_THROWS(theorem1_check(p, {Rational(1), Rational(-1), Rational(2)}, 3));
}

TEST_CASE("rewritten form and the subset-sign variant") {
    std::mt19937_64 rng(64);
    for (unsigned n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 6; ++trial) {
            SparsePoly p = random_symmetric_poly(n, lg_dimension(n), rng);
            auto l = random_admissible_lambdas(n, rng);
            auto r = remark_check(p, l, n);
            CHECK(r.equal);
            CHECK(remark_sum_subset_sign(p, l) == r.lhs * Rational(sign_power(n)));
        }
}

TEST_CASE("the identity as an interpolation sum") {
    std::mt19937_64 rng(65);
    for (unsigned n = 1; n <= 3; ++n)
        for (int trial = 0; trial < 4; ++trial) {
            SparsePoly p = random_symmetric_poly(n, lg_dimension(n), rng);
            auto l = random_admissible_lambdas(n, rng);
            const MonicRootSet roots = signed_root_set(l);
            std::vector<MonicRootSet> sets(n, roots);
            CHECK(lemma2_sum(theorem1_integrand(p, n), sets) == c_coeff(p, n));
        }
}

TEST_CASE("random symmetric polynomials") {
    std::mt19937_64 rng(66);
    for (unsigned n = 1; n <= 4; ++n) {
        auto p = random_symmetric_poly(n, lg_dimension(n), rng, true);
        CHECK(p.is_symmetric());
        CHECK(p.total_degree() == static_cast<int>(lg_dimension(n)));
        auto q = random_symmetric_poly(n, 2, rng, false);
        CHECK(q.total_degree() <= 2);
    }
}

TEST_CASE("verification reports are deterministic") {
    auto a = verify_identity(3, 7, 12);
    auto b = verify_identity(3, 7, 12);
    CHECK(a.ok());
    CHECK(a.passed == b.passed);
    CHECK(a.trials == 12);
    CHECK(verify_lemma1(8, 40).ok());
    CHECK(verify_lemma2(2, 9, 20).ok());
    CHECK(verify_relation(2, 10, 5).ok());
}

}

#include <random>

#include "doctest.h"
#include "lgint/class_parser.hpp"
#include "lgint/symclasses.hpp"
#include "oracles.hpp"

using namespace lgint;

TEST_SUITE("symclasses") {

TEST_CASE("two-index classes") {
    CHECK(qtilde2(2, 1, 3).to_string() == "s2*s1-2*s3");
    CHECK(qtilde2(3, 2, 4).to_string() == "-2*s4*s1+s3*s2");
    CHECK(qtilde2(3, 2, 5).to_string() == "-2*s4*s1+s3*s2+2*s5");
    CHECK(qtilde2(2, 1, 2).to_string() == "s2*s1");
    CHECK_THROWS(qtilde2(1, 2, 3));
    CHECK_THROWS(qtilde2(4, 1, 3));
}

TEST_CASE("two-index classes match the literal expansion") {
    for (std::size_t n = 2; n <= 5; ++n)
        for (unsigned i = 2; i <= n; ++i)
            for (unsigned j = 1; j < i; ++j) CHECK(qtilde2(i, j, n) == oracle::qtilde2_literal(i, j, n));
}

TEST_CASE("Pfaffian classes") {
    CHECK(qtilde(StrictPartition({4, 2, 1}), 5) ==
          parse_class_expr("s4*s2*s1-2*s4*s3+2*s5*s2-2*s5*s1^2", 5));
    CHECK(qtilde(StrictPartition({3}), 4) == ClassExpr::generator(3, 4));
    CHECK(qtilde(StrictPartition(), 3) == ClassExpr::one(3));
    CHECK_THROWS(qtilde(StrictPartition({4}), 3));
}

TEST_CASE("Laplace expansion equals the perfect-matching Pfaffian") {
    for (std::size_t n = 3; n <= 5; ++n)
        for (const auto& a : all_strict_partitions(static_cast<unsigned>(n))) {
            if (a.length() < 3) continue;
            std::vector<unsigned> parts = a.parts();
            if (parts.size() % 2) parts.push_back(0);
            auto entry = [&](std::size_t i, std::size_t j) {
                return parts[j] == 0 ? special(static_cast<int>(parts[i]), n)
                                     : oracle::qtilde2_literal(parts[i], parts[j], n);
            };
            CHECK(qtilde(a, n) == oracle::matching_pfaffian(parts.size(), n, entry));
        }
}

TEST_CASE("Q-tilde classes are homogeneous of weight |alpha|") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& a : all_strict_partitions(static_cast<unsigned>(n))) {
            auto d = qtilde(a, n).degree();
            REQUIRE(d.has_value());
            CHECK(*d == a.weight());
        }
}

TEST_CASE("Chern-root images") {
    CHECK(to_chern_roots(ClassExpr::generator(1, 1)) == -SparsePoly::variable(1, 0));
    CHECK(to_chern_roots(ClassExpr::generator(2, 2)) == SparsePoly::variable(2, 0) * SparsePoly::variable(2, 1));
    auto q = to_chern_roots(qtilde2(2, 1, 3));
    CHECK(q.is_symmetric());
    CHECK(q.is_homogeneous());
    CHECK(q.total_degree() == 3);

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + trial % 3;
        auto c = random_homogeneous_class(n, 1 + trial % 5, rng);
        CHECK(to_chern_roots(c).is_symmetric());
        CHECK(to_chern_roots(c).total_degree() == static_cast<int>(*c.degree()));
    }
}

TEST_CASE("staircase Schubert polynomial on G(n, 2n)") {
    CHECK(schubert_staircase_poly(1) == SparsePoly::constant(1, Rational(1)));
    CHECK(schubert_staircase_poly(2) == -(SparsePoly::variable(2, 0) + SparsePoly::variable(2, 1)));
    SparsePoly x1 = SparsePoly::variable(3, 0), x2 = SparsePoly::variable(3, 1), x3 = SparsePoly::variable(3, 2);
    CHECK(schubert_staircase_poly(3) == -((x1 + x2) * (x1 + x3) * (x2 + x3)));
}

TEST_CASE("class arithmetic and degrees") {
    ClassExpr s1 = ClassExpr::generator(1, 3), s2 = ClassExpr::generator(2, 3);
    ClassExpr c = pow(s1, 2) * pow(s2, 2);
    CHECK(c.degree() == 6u);
    CHECK((c + s1).degree() == std::nullopt);
    CHECK((c + s1).top_degree() == 6);
    CHECK((c + s1).homogeneous_part(6) == c);
    CHECK(special(4, 3).is_zero());
    CHECK(special(-1, 3).is_zero());
    CHECK(sigma_monomials(3, 3).size() == 3);
    CHECK_THROWS(ClassExpr::generator(4, 3));
}

}

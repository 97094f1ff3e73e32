#include <random>

#include "doctest.h"
#include "lgint/class_parser.hpp"
#include "lgint/symclasses.hpp"

using namespace lgint;

TEST_SUITE("class_parser") {

TEST_CASE("reference expressions") {
    CHECK(parse_class_expr("s2*s1-2*s3", 3) == qtilde2(2, 1, 3));
    ClassExpr s1 = ClassExpr::generator(1, 3), s2 = ClassExpr::generator(2, 3);
    CHECK(parse_class_expr("s1^2*s2^2", 3) == pow(s1, 2) * pow(s2, 2));
    CHECK(parse_class_expr("s4*s2*s1-2*s4*s3+2*s5*s2-2*s5*s1^2", 5) == qtilde(StrictPartition({4, 2, 1}), 5));
}

TEST_CASE("precedence, parentheses, whitespace and signs") {
    ClassExpr s1 = ClassExpr::generator(1, 2), s2 = ClassExpr::generator(2, 2);
    CHECK(parse_class_expr(" (s1 + s2) ^ 2 ", 2) == pow(s1 + s2, 2));
    CHECK(parse_class_expr("2*s1^2", 2) == pow(s1, 2) * Rational(2));
    CHECK(parse_class_expr("-s1+3", 2) == ClassExpr::constant(2, Rational(3)) - s1);
    CHECK(parse_class_expr("s2/4", 2) == s2 * Rational(1, 4));
    CHECK(parse_class_expr("1", 2) == ClassExpr::one(2));
}

TEST_CASE("errors carry a position") {
    auto position_of = [](const char* text, std::size_t n) -> std::size_t {
        try {
            parse_class_expr(text, n);
        } catch (const ParseError& e) {
            return e.position();
        }
        return std::string::npos;
    };
    CHECK(position_of("s1*", 3) == 3);
    CHECK(position_of("s1+)", 3) == 3);
    CHECK(position_of("(s1", 3) == 3);
    CHECK(position_of("x1", 3) == 0);
    CHECK(position_of("s2/0", 3) != std::string::npos);
    CHECK_THROWS_AS(parse_class_expr("s4", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_class_expr("", 3), ParseError);
}

TEST_CASE("print and reparse round trip") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 5;
        Rational scale(1 + trial % 3, 2);
        scale.canonicalize();
        ClassExpr c = random_homogeneous_class(n, 1 + trial % 7, rng) * scale;
        CHECK(parse_class_expr(c.to_string(), n) == c);
    }
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& a : all_strict_partitions(static_cast<unsigned>(n)))
            CHECK(parse_class_expr(qtilde(a, n).to_string(), n) == qtilde(a, n));
}

}

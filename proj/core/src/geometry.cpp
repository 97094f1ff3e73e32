#include "lgint/geometry.hpp"

#include <sstream>
#include <stdexcept>

#include "lgint/errors.hpp"
#include "lgint/integrate.hpp"
#include "lgint/symclasses.hpp"

namespace lgint {

namespace {

Integer as_count(const Rational& value, const std::string& what) {
    if (!is_integer(value) || value < 0)
        throw IntegralityError(what + " = " + to_string(value) + " is not a nonnegative integer");
    return value.get_num();
}

void require_member(const StrictPartition& p, unsigned n, const char* name) {
    if (!p.fits(n))
        throw std::invalid_argument(std::string(name) + " = (" + p.to_string() + ") is not in D_" +
                                    std::to_string(n));
}

std::string label(const StrictPartition& p) { return "(" + p.to_string() + ")"; }

}  // namespace

Integer degree_lg(unsigned n) {
    if (n < 1) throw std::invalid_argument("degree_lg: n must be >= 1");
    Integer num = factorial(lg_dimension(n));
    Integer den = 1;
    for (unsigned i = 1; i <= n; ++i) den *= factorial(2 * i - 1);
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i + 1; j <= n; ++j) num *= 2 * (j - i);
    Rational q(num, den);
    q.canonicalize();
    return as_count(q, "deg LG(" + std::to_string(n) + ")");
}

Integer degree_lg_via_integral(unsigned n) {
    if (n < 1) throw std::invalid_argument("degree_lg_via_integral: n must be >= 1");
    ClassExpr c = pow(ClassExpr::generator(1, n), lg_dimension(n));
    return as_count(integrate_lg(c, n), "integral of sigma_1^N over LG(" + std::to_string(n) + ")");
}

Integer structure_constant(const StrictPartition& alpha, const StrictPartition& beta,
                           const StrictPartition& gamma, unsigned n) {
    require_member(alpha, n, "alpha");
    require_member(beta, n, "beta");
    require_member(gamma, n, "gamma");
    if (gamma.weight() != alpha.weight() + beta.weight())
        throw std::invalid_argument("structure_constant: need |gamma| = |alpha| + |beta|");
    ClassExpr c = qtilde(alpha, n) * qtilde(beta, n) * qtilde(dual(gamma, n), n);
    return as_count(integrate_lg(c, n),
                    "e_{" + label(alpha) + "," + label(beta) + "}^" + label(gamma));
}

Integer gw1(const StrictPartition& alpha, const StrictPartition& beta, const StrictPartition& delta,
            unsigned n) {
    require_member(alpha, n, "alpha");
    require_member(beta, n, "beta");
    require_member(delta, n, "delta");
    if (alpha.weight() + beta.weight() + delta.weight() != lg_dimension(n + 1))
        throw std::invalid_argument("gw1: need |alpha| + |beta| + |delta| = (n+1)(n+2)/2");
    const unsigned r = n + 1;
    ClassExpr c = qtilde(alpha, r) * qtilde(beta, r) * qtilde(delta, r);
    Rational half = integrate_lg(c, r) / 2;
    return as_count(half, "<" + label(alpha) + "," + label(beta) + "," + label(delta) + ">_1");
}

QuantumProduct quantum_product(const StrictPartition& a, const StrictPartition& b, unsigned n) {
    require_member(a, n, "a");
    require_member(b, n, "b");
    const unsigned w = a.weight() + b.weight();
    if (w >= 2 * (n + 1))
        throw UnsupportedDegreeError("quantum_product: |a| + |b| = " + std::to_string(w) +
                                     " >= 2(n+1); unsupported degree >= 2 terms");
    QuantumProduct out;
    out.n = n;
    out.a = a;
    out.b = b;
    if (w <= lg_dimension(n))
        for (const auto& gamma : strict_partitions(n, w)) out.classical[gamma] = structure_constant(a, b, gamma, n);
    if (w >= n + 1)
        for (const auto& gamma : strict_partitions(n, w - (n + 1)))
            out.quantum1[gamma] = gw1(a, b, dual(gamma, n), n);
    return out;
}

std::string QuantumProduct::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const StrictPartition& gamma, const Integer& coef, bool quantum) {
        if (coef == 0) return;
        if (!first) os << " + ";
        first = false;
        bool need_star = false;
        if (coef != 1) {
            os << coef.get_str();
            need_star = true;
        }
        if (!gamma.empty()) {
            if (need_star) os << '*';
            os << "s[" << gamma.to_string() << ']';
            need_star = true;
        }
        if (quantum) {
            if (need_star) os << '*';
            os << 'q';
        } else if (!need_star) {
            os << '1';
        }
    };
    // larger partitions first
    for (auto it = classical.rbegin(); it != classical.rend(); ++it) emit(it->first, it->second, false);
    for (auto it = quantum1.rbegin(); it != quantum1.rend(); ++it) emit(it->first, it->second, true);
    return first ? "0" : os.str();
}

}  // namespace lgint

#include "lgint/idlab.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lgint/combinat.hpp"
#include "lgint/integrate.hpp"
#include "lgint/symclasses.hpp"

namespace lgint {

MonicRootSet::MonicRootSet(std::vector<Rational> roots) : roots_(std::move(roots)) {
    if (roots_.empty()) throw std::invalid_argument("MonicRootSet: need at least one root");
    if (std::set<Rational>(roots_.begin(), roots_.end()).size() != roots_.size())
        throw std::invalid_argument("MonicRootSet: roots must be pairwise distinct");
}

Rational MonicRootSet::derivative_at(std::size_t i) const {
    Rational out = 1;
    for (std::size_t j = 0; j < roots_.size(); ++j)
        if (j != i) out *= roots_[i] - roots_[j];
    return out;
}

Rational lemma1_sum(const MonicRootSet& rs, unsigned r) {
    if (r > rs.degree()) throw std::invalid_argument("lemma1_sum: exponent r must be <= d");
    Rational total = 0;
    for (std::size_t i = 0; i < rs.roots().size(); ++i) {
        Rational term;
        mpz_pow_ui(term.get_num_mpz_t(), rs.roots()[i].get_num_mpz_t(), r);
        mpz_pow_ui(term.get_den_mpz_t(), rs.roots()[i].get_den_mpz_t(), r);
        total += term / rs.derivative_at(i);
    }
    return total;
}

Rational lemma2_sum(const SparsePoly& f, const std::vector<MonicRootSet>& root_sets) {
    const std::size_t n = root_sets.size();
    if (f.nvars() != n) throw std::invalid_argument("lemma2_sum: one root set per variable required");
    long long bound = 0;
    for (const auto& rs : root_sets) bound += rs.degree();
    if (f.total_degree() > bound) throw std::invalid_argument("lemma2_sum: deg F exceeds sum of d_i");

    std::vector<std::vector<Rational>> inv_deriv(n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t i = 0; i < root_sets[v].roots().size(); ++i)
            inv_deriv[v].push_back(1 / root_sets[v].derivative_at(i));

    std::vector<std::size_t> idx(n, 0);
    std::vector<Rational> point(n);
    Rational total = 0;
    while (true) {
        Rational weight = 1;
        for (std::size_t v = 0; v < n; ++v) {
            point[v] = root_sets[v].roots()[idx[v]];
            weight *= inv_deriv[v][idx[v]];
        }
        total += f.eval(point) * weight;
        std::size_t v = 0;
        while (v < n && ++idx[v] == root_sets[v].roots().size()) idx[v++] = 0;
        if (v == n) break;
    }
    return total;
}

namespace {

Rational identity_rhs(const SparsePoly& p, unsigned n) {
    return Rational(Integer(1) << n) * c_coeff(p, n) / Rational(factorial(n));
}

void check_identity_inputs(const SparsePoly& p, const std::vector<Rational>& lambdas, unsigned n) {
    if (lambdas.size() != n || p.nvars() != n)
        throw std::invalid_argument("identity check: need n variables and n weights");
    if (!is_admissible(lambdas))
        throw std::invalid_argument("torus weights must be nonzero with pairwise-distinct squares");
    if (!p.is_symmetric()) throw std::invalid_argument("identity check: P is not symmetric");
}

Rational plus_denominator(const std::vector<Rational>& signed_weights) {
    Rational den = 1;
    for (std::size_t i = 0; i < signed_weights.size(); ++i)
        for (std::size_t j = i + 1; j < signed_weights.size(); ++j) den *= signed_weights[i] + signed_weights[j];
    return den;
}

}  // namespace

IdentityCheck theorem1_check(const SparsePoly& p, const std::vector<Rational>& lambdas, unsigned n) {
    check_identity_inputs(p, lambdas, n);
    IdentityCheck out{signed_weight_sum(p, lambdas), identity_rhs(p, n)};
    out.equal = out.lhs == out.rhs;
    return out;
}

IdentityCheck remark_check(const SparsePoly& p, const std::vector<Rational>& lambdas, unsigned n) {
    check_identity_inputs(p, lambdas, n);
    IdentityCheck out;
    for (const auto& sa : signed_assignments(lambdas)) {
        Rational term = p.eval(sa.signed_) / plus_denominator(sa.signed_);
        if ((n - sa.subset_size()) % 2 == 1) term = -term;
        out.lhs += term;
    }
    out.rhs = identity_rhs(p, n);
    for (const auto& l : lambdas) out.rhs *= l;
    out.equal = out.lhs == out.rhs;
    return out;
}

Rational remark_sum_subset_sign(const SparsePoly& p, const std::vector<Rational>& lambdas) {
    Rational total = 0;
    for (const auto& sa : signed_assignments(lambdas)) {
        Rational term = p.eval(sa.signed_) / plus_denominator(sa.signed_);
        if (sa.subset_size() % 2 == 1) term = -term;
        total += term;
    }
    return total;
}

SparsePoly theorem1_integrand(const SparsePoly& p, unsigned n) {
    auto sp = structured_products(n);
    return p * sp.discriminant * sp.plusprod;
}

MonicRootSet signed_root_set(const std::vector<Rational>& lambdas) {
    std::vector<Rational> roots = lambdas;
    for (const auto& l : lambdas) roots.push_back(-l);
    return MonicRootSet(std::move(roots));
}

SparsePoly random_symmetric_poly(unsigned n, unsigned max_degree, std::mt19937_64& rng, bool top) {
    std::uniform_int_distribution<int> num_dist(-5, 5);
    std::uniform_int_distribution<int> den_dist(1, 3);
    std::uniform_int_distribution<unsigned> deg_dist(0, max_degree);
    std::uniform_int_distribution<int> count_dist(1, 4);

    ClassExpr c(n);
    const int count = count_dist(rng);
    for (int t = 0; t < count || c.is_zero(); ++t) {
        const unsigned d = (t == 0 && top) ? max_degree : deg_dist(rng);
        auto monos = sigma_monomials(n, d);
        std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
        int num = 0;
        while (num == 0) num = num_dist(rng);
        Rational coef(num, den_dist(rng));
        coef.canonicalize();
        SparsePoly term(n);
        term.add_term(monos[pick(rng)], coef);
        c += ClassExpr(std::move(term));
    }
    return to_chern_roots(c);
}

MonicRootSet random_root_set(unsigned size, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num_dist(-12, 12);
    std::uniform_int_distribution<int> den_dist(1, 4);
    std::set<Rational> roots;
    while (roots.size() < size) {
        Rational r(num_dist(rng), den_dist(rng));
        r.canonicalize();
        roots.insert(r);
    }
    return MonicRootSet(std::vector<Rational>(roots.begin(), roots.end()));
}

VerifyReport verify_identity(unsigned n, std::uint64_t seed, unsigned trials) {
    VerifyReport report{"identity", n, seed, trials, 0};
    std::mt19937_64 rng(seed);
    const unsigned dim = lg_dimension(n);
    for (unsigned t = 0; t < trials; ++t) {
        // every fourth instance is degree-deficient, where both sides vanish
        const bool deficient = dim > 0 && t % 4 == 3;
        SparsePoly p = random_symmetric_poly(n, deficient ? dim - 1 : dim, rng, true);
        auto lambdas = random_admissible_lambdas(n, rng);
        auto main = theorem1_check(p, lambdas, n);
        auto rewritten = remark_check(p, lambdas, n);
        bool ok = main.equal && rewritten.equal;
        if (deficient) ok = ok && main.lhs == 0;
        if (ok) ++report.passed;
    }
    return report;
}

VerifyReport verify_lemma1(std::uint64_t seed, unsigned trials) {
    VerifyReport report{"lemma1", 1, seed, trials, 0};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> size_dist(2, 6);
    for (unsigned t = 0; t < trials; ++t) {
        auto rs = random_root_set(size_dist(rng), rng);
        bool ok = true;
        for (unsigned r = 0; r <= rs.degree(); ++r)
            ok = ok && lemma1_sum(rs, r) == Rational(r == rs.degree() ? 1 : 0);
        if (ok) ++report.passed;
    }
    return report;
}

VerifyReport verify_lemma2(unsigned n, std::uint64_t seed, unsigned trials) {
    VerifyReport report{"lemma2", n, seed, trials, 0};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> size_dist(1, 3);
    std::uniform_int_distribution<int> coef_dist(-4, 4);
    for (unsigned t = 0; t < trials; ++t) {
        std::vector<MonicRootSet> sets, other;
        Exponents d(n);
        unsigned bound = 0;
        for (unsigned v = 0; v < n; ++v) {
            const unsigned size = size_dist(rng);
            sets.push_back(random_root_set(size, rng));
            other.push_back(random_root_set(size, rng));
            d[v] = size - 1;
            bound += size - 1;
        }
        // random F of degree <= sum d_i
        SparsePoly f(n);
        std::uniform_int_distribution<unsigned> exp_dist(0, bound);
        for (int k = 0; k < 6; ++k) {
            Exponents e(n, 0);
            unsigned left = exp_dist(rng);
            for (unsigned v = 0; v < n && left > 0; ++v) {
                std::uniform_int_distribution<unsigned> part(0, left);
                e[v] = (v + 1 == n) ? left : part(rng);
                left -= e[v];
            }
            f.add_term(e, Rational(coef_dist(rng)));
        }
        f.add_term(d, Rational(coef_dist(rng)));
        const Rational value = lemma2_sum(f, sets);
        if (value == f.coeff(d) && value == lemma2_sum(f, other)) ++report.passed;
    }
    return report;
}

VerifyReport verify_relation(unsigned n, std::uint64_t seed, unsigned trials) {
    VerifyReport report{"relation", n, seed, trials, 0};
    std::mt19937_64 rng(seed);
    for (unsigned t = 0; t < trials; ++t) {
        ClassExpr c = random_homogeneous_class(n, lg_dimension(n), rng);
        auto weights = random_distinct_weights(2 * n, rng);
        if (relation1_check(c, n, weights).holds) ++report.passed;
    }
    return report;
}

}  // namespace lgint

#include "lgint/integrate.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

#include "lgint/combinat.hpp"

namespace lgint {

namespace {

long long lg_dim(unsigned n) { return static_cast<long long>(n) * (n + 1) / 2; }

void check_rank(unsigned n) {
    if (n < 1 || n > kMaxVars) throw std::invalid_argument("rank n must be in 1..8");
}

void check_symmetric_bounded(const SparsePoly& p, unsigned n, long long max_degree, const char* who) {
    if (p.nvars() != n)
        throw std::invalid_argument(std::string(who) + ": polynomial must have n variables");
    if (p.total_degree() > max_degree)
        throw std::invalid_argument(std::string(who) + ": degree exceeds " + std::to_string(max_degree));
    if (!p.is_symmetric()) throw std::invalid_argument(std::string(who) + ": polynomial is not symmetric");
}

void check_class(const ClassExpr& c, unsigned n) {
    check_rank(n);
    if (c.rank() != n) throw std::invalid_argument("class rank does not match n");
    if (c.top_degree() > lg_dim(n))
        throw std::invalid_argument("class degree exceeds dim LG(n) = " + std::to_string(lg_dim(n)));
}

// Product of linear factors, pruned to exponents <= cap. Kernels depend only
// on n and are shared across calls.
using Kernel = std::shared_ptr<const SparsePoly>;

Kernel build_kernel(unsigned n, bool discriminant) {
    const unsigned cap = 2 * n - 1;
    std::vector<SparsePoly> factors;
    if (discriminant) {
        factors = discriminant_factors(n);
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                factors.push_back(SparsePoly::variable(n, i) - SparsePoly::variable(n, j));
    }
    auto plus = plusprod_factors(n);
    factors.insert(factors.end(), plus.begin(), plus.end());
    if (factors.empty()) return std::make_shared<const SparsePoly>(SparsePoly::constant(n, Rational(1)));
    return std::make_shared<const SparsePoly>(product_pruned(factors, cap));
}

Kernel kernel(unsigned n, bool discriminant) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, bool>, Kernel> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find({n, discriminant});
        if (it != cache.end()) return it->second;
    }
    Kernel k = build_kernel(n, discriminant);
    std::lock_guard lock(mu);
    return cache.emplace(std::pair{n, discriminant}, std::move(k)).first->second;
}

}  // namespace

std::string_view route_name(Route r) {
    switch (r) {
        case Route::main_coefficient: return "main-coefficient";
        case Route::dp_coefficient: return "dp-coefficient";
        case Route::localization: return "localization";
    }
    return "unknown";
}

Route parse_route(std::string_view name) {
    if (name == "main" || name == "main-coefficient") return Route::main_coefficient;
    if (name == "dp" || name == "dp-coefficient") return Route::dp_coefficient;
    if (name == "localization") return Route::localization;
    throw std::invalid_argument("unknown route \"" + std::string(name) + "\" (main|dp|localization)");
}

Rational c_coeff(const SparsePoly& p, unsigned n) {
    check_rank(n);
    check_symmetric_bounded(p, n, lg_dim(n), "c_coeff");
    return coeff_of_product(*kernel(n, true), p, Exponents(n, 2 * n - 1));
}

Rational dp_coeff(const SparsePoly& p, unsigned n) {
    check_rank(n);
    check_symmetric_bounded(p, n, lg_dim(n), "dp_coeff");
    Exponents target(n);
    for (unsigned i = 0; i < n; ++i) target[i] = 2 * n - 1 - i;
    return coeff_of_product(*kernel(n, false), p, target);
}

Rational integrate_lg(const ClassExpr& c, unsigned n) {
    check_class(c, n);
    Rational out = c_coeff(to_chern_roots(c), n) / Rational(factorial(n));
    return out * sign_power(lg_dim(n));
}

Rational integrate_lg_dp(const ClassExpr& c, unsigned n) {
    check_class(c, n);
    return dp_coeff(to_chern_roots(c), n) * sign_power(lg_dim(n));
}

Rational signed_weight_sum(const SparsePoly& p, const std::vector<Rational>& lambdas) {
    if (p.nvars() != lambdas.size())
        throw std::invalid_argument("signed_weight_sum: need one weight per variable");
    const std::size_t n = lambdas.size();
    Rational total = 0;
    for (const auto& sa : signed_assignments(lambdas)) {
        Rational den = 1;
        for (std::size_t i = 0; i < n; ++i) {
            den *= sa.signed_[i];
            for (std::size_t j = i + 1; j < n; ++j) den *= sa.signed_[i] + sa.signed_[j];
        }
        total += p.eval(sa.signed_) / den;
    }
    return total;
}

Rational localization_lg(const ClassExpr& c, const std::vector<Rational>& lambdas, unsigned n) {
    check_class(c, n);
    if (lambdas.size() != n) throw std::invalid_argument("localization_lg: need n weights");
    if (!is_admissible(lambdas))
        throw std::invalid_argument("torus weights must be nonzero with pairwise-distinct squares");
    Rational scale(sign_power(lg_dim(n)));
    scale /= Rational(Integer(1) << n);
    return scale * signed_weight_sum(to_chern_roots(c), lambdas);
}

Rational localization_grassmannian(const SparsePoly& p, const std::vector<Rational>& lambdas,
                                   unsigned k, unsigned m) {
    if (k < 1 || k > m) throw std::invalid_argument("localization_grassmannian: need 1 <= k <= m");
    if (lambdas.size() != m) throw std::invalid_argument("localization_grassmannian: need m weights");
    if (std::set<Rational>(lambdas.begin(), lambdas.end()).size() != m)
        throw std::invalid_argument("localization_grassmannian: weights must be pairwise distinct");
    check_symmetric_bounded(p, k, static_cast<long long>(k) * (m - k), "localization_grassmannian");

    std::vector<bool> chosen(m, false);
    std::fill(chosen.begin(), chosen.begin() + k, true);
    std::vector<Rational> point(k);
    Rational total = 0;
    do {
        Rational den = 1;
        std::size_t t = 0;
        for (unsigned i = 0; i < m; ++i) {
            if (!chosen[i]) continue;
            point[t++] = lambdas[i];
            for (unsigned j = 0; j < m; ++j)
                if (!chosen[j]) den *= lambdas[j] - lambdas[i];
        }
        total += p.eval(point) / den;
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
    return total;
}

RelationCheck relation1_check(const ClassExpr& c, unsigned n, const std::vector<Rational>& lambdas) {
    RelationCheck out;
    out.lagrangian = integrate_lg(c, n);
    SparsePoly p = to_chern_roots(c) * schubert_staircase_poly(n);
    out.grassmannian = localization_grassmannian(p, lambdas, n, 2 * n);
    out.holds = out.lagrangian == out.grassmannian;
    return out;
}

CoefficientCertificate certify(const ClassExpr& c, unsigned n, Route route,
                               const std::optional<std::vector<Rational>>& lambdas) {
    CoefficientCertificate cert;
    cert.n = n;
    cert.route = route;
    const Rational sign(sign_power(lg_dim(n)));
    switch (route) {
        case Route::main_coefficient:
            check_class(c, n);
            cert.c_n = c_coeff(to_chern_roots(c), n);
            cert.integral = sign * cert.c_n / Rational(factorial(n));
            break;
        case Route::dp_coefficient:
            check_class(c, n);
            cert.c_n = dp_coeff(to_chern_roots(c), n);
            cert.integral = sign * cert.c_n;
            break;
        case Route::localization: {
            std::vector<Rational> weights;
            if (lambdas) {
                weights = *lambdas;
            } else {
                for (unsigned i = 1; i <= n; ++i) weights.emplace_back(i);
            }
            cert.integral = localization_lg(c, weights, n);
            cert.c_n = sign * cert.integral * Rational(factorial(n));
            break;
        }
    }
    return cert;
}

bool has_lower_degree_terms(const ClassExpr& c, unsigned n) {
    for (const auto& [e, coef] : c.sigma_poly().terms())
        if (c.weighted_degree(e) < lg_dim(n)) return true;
    return false;
}

}  // namespace lgint

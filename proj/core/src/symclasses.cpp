#include "lgint/symclasses.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lgint {

ClassExpr::ClassExpr(std::size_t n) : poly_(n) {}

ClassExpr::ClassExpr(SparsePoly sigma_poly) : poly_(std::move(sigma_poly)) {}

ClassExpr ClassExpr::one(std::size_t n) { return constant(n, Rational(1)); }

ClassExpr ClassExpr::constant(std::size_t n, const Rational& c) {
    return ClassExpr(SparsePoly::constant(n, c));
}

ClassExpr ClassExpr::generator(std::size_t i, std::size_t n) {
    if (i < 1 || i > n)
        throw std::invalid_argument("generator s" + std::to_string(i) + " outside 1.." +
                                    std::to_string(n));
    return ClassExpr(SparsePoly::variable(n, i - 1));
}

unsigned ClassExpr::weighted_degree(const Exponents& e) const {
    unsigned d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<unsigned>(i + 1) * e[i];
    return d;
}

std::optional<unsigned> ClassExpr::degree() const {
    std::optional<unsigned> deg;
    for (const auto& [e, c] : poly_.terms()) {
        unsigned d = weighted_degree(e);
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

int ClassExpr::top_degree() const {
    int top = -1;
    for (const auto& [e, c] : poly_.terms()) top = std::max(top, static_cast<int>(weighted_degree(e)));
    return top;
}

ClassExpr ClassExpr::homogeneous_part(unsigned d) const {
    SparsePoly out(rank());
    for (const auto& [e, c] : poly_.terms())
        if (weighted_degree(e) == d) out.add_term(e, c);
    return ClassExpr(std::move(out));
}

ClassExpr& ClassExpr::operator+=(const ClassExpr& o) {
    poly_ += o.poly_;
    return *this;
}

ClassExpr& ClassExpr::operator-=(const ClassExpr& o) {
    poly_ -= o.poly_;
    return *this;
}

ClassExpr& ClassExpr::operator*=(const Rational& c) {
    poly_ *= c;
    return *this;
}

ClassExpr operator*(const ClassExpr& a, const ClassExpr& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("class product: rank mismatch");
    return ClassExpr(a.poly_ * b.poly_);
}

ClassExpr pow(const ClassExpr& c, unsigned k) { return ClassExpr(pow(c.sigma_poly(), k)); }

std::string ClassExpr::to_string() const {
    if (is_zero()) return "0";
    auto terms = poly_.terms();
    std::stable_sort(terms.begin(), terms.end(), [this](const auto& a, const auto& b) {
        unsigned da = weighted_degree(a.first), db = weighted_degree(b.first);
        if (da != db) return da > db;
        return std::lexicographical_compare(b.first.begin(), b.first.end(), a.first.begin(),
                                            a.first.end());
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        const bool constant_term = std::all_of(e.begin(), e.end(), [](unsigned v) { return v == 0; });
        Rational mag = abs(c);
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        bool need_star = false;
        if (constant_term || mag != 1) {
            os << lgint::to_string(mag);
            need_star = true;
        }
        for (std::size_t i = e.size(); i-- > 0;) {
            if (e[i] == 0) continue;
            if (need_star) os << '*';
            os << 's' << (i + 1);
            if (e[i] > 1) os << '^' << e[i];
            need_star = true;
        }
    }
    return os.str();
}

ClassExpr special(int i, std::size_t n) {
    if (i == 0) return ClassExpr::one(n);
    if (i < 0 || static_cast<std::size_t>(i) > n) return ClassExpr(n);
    return ClassExpr::generator(static_cast<std::size_t>(i), n);
}

ClassExpr qtilde2(unsigned i, unsigned j, std::size_t n) {
    if (!(i > j && j > 0)) throw std::invalid_argument("qtilde2: requires i > j > 0");
    if (i > n) throw std::invalid_argument("qtilde2: i exceeds the rank");
    const int ii = static_cast<int>(i), jj = static_cast<int>(j);
    ClassExpr out = special(ii, n) * special(jj, n);
    for (int k = 1; k <= static_cast<int>(n) - ii; ++k) {
        ClassExpr t = special(ii + k, n) * special(jj - k, n);
        out += t * Rational(2 * sign_power(k));
    }
    return out;
}

namespace {

// Entry (a, b) of the Pfaffian matrix, with a > b >= 0.
ClassExpr pfaffian_entry(unsigned a, unsigned b, std::size_t n) {
    if (b == 0) return special(static_cast<int>(a), n);
    return qtilde2(a, b, n);
}

// Pfaffian of [Q~_{p_i,p_j}] for an even-length decreasing list, expanded
// along the last index.
ClassExpr laplace_pfaffian(const std::vector<unsigned>& parts, std::size_t n) {
    const std::size_t r = parts.size();
    if (r == 0) return ClassExpr::one(n);
    if (r == 2) return pfaffian_entry(parts[0], parts[1], n);
    ClassExpr out(n);
    for (std::size_t k = 0; k + 1 < r; ++k) {
        std::vector<unsigned> rest;
        rest.reserve(r - 2);
        for (std::size_t t = 0; t + 1 < r; ++t)
            if (t != k) rest.push_back(parts[t]);
        ClassExpr term = pfaffian_entry(parts[k], parts[r - 1], n) * laplace_pfaffian(rest, n);
        out += term * Rational(sign_power(static_cast<long long>(k)));
    }
    return out;
}

}  // namespace

ClassExpr qtilde(const StrictPartition& alpha, std::size_t n) {
    if (!alpha.fits(static_cast<unsigned>(n)))
        throw std::invalid_argument("qtilde: partition (" + alpha.to_string() + ") is not in D_" +
                                    std::to_string(n));
    std::vector<unsigned> parts = alpha.parts();
    if (parts.size() % 2 == 1) parts.push_back(0);
    return laplace_pfaffian(parts, n);
}

SparsePoly to_chern_roots(const ClassExpr& c) {
    const std::size_t n = c.rank();
    std::vector<std::vector<SparsePoly>> powers(n);
    for (std::size_t i = 0; i < n; ++i) {
        SparsePoly base = elem_sym(static_cast<int>(i + 1), n) * Rational(sign_power(static_cast<long long>(i + 1)));
        powers[i].push_back(SparsePoly::constant(n, Rational(1)));
        powers[i].push_back(std::move(base));
    }
    auto power = [&](std::size_t i, unsigned e) -> const SparsePoly& {
        while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * powers[i][1]);
        return powers[i][e];
    };

    SparsePoly out(n);
    for (const auto& [e, coef] : c.sigma_poly().terms()) {
        SparsePoly term = SparsePoly::constant(n, coef);
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] > 0) term = term * power(i, e[i]);
        out += term;
    }
    return out;
}

SparsePoly schubert_staircase_poly(std::size_t n) {
    SparsePoly p = structured_products(n).plusprod;
    const long long half = static_cast<long long>(n) * (static_cast<long long>(n) - 1) / 2;
    return p * Rational(sign_power(half));
}

namespace {

void sigma_rec(std::size_t idx, unsigned remaining, Exponents& cur, std::vector<Exponents>& out) {
    if (idx == 0) {
        cur[0] = remaining;
        out.push_back(cur);
        return;
    }
    const unsigned w = static_cast<unsigned>(idx + 1);
    for (unsigned e = 0; e * w <= remaining; ++e) {
        cur[idx] = e;
        sigma_rec(idx - 1, remaining - e * w, cur, out);
    }
    cur[idx] = 0;
}

}  // namespace

std::vector<Exponents> sigma_monomials(std::size_t n, unsigned d) {
    std::vector<Exponents> out;
    Exponents cur(n, 0);
    sigma_rec(n - 1, d, cur, out);
    return out;
}

ClassExpr random_homogeneous_class(std::size_t n, unsigned d, std::mt19937_64& rng,
                                   std::size_t max_terms) {
    auto monos = sigma_monomials(n, d);
    std::shuffle(monos.begin(), monos.end(), rng);
    std::uniform_int_distribution<std::size_t> count_dist(1, std::max<std::size_t>(1, max_terms));
    std::uniform_int_distribution<int> coef_dist(1, 3);
    std::bernoulli_distribution negative(0.5);
    const std::size_t count = std::min(monos.size(), count_dist(rng));
    SparsePoly p(n);
    for (std::size_t t = 0; t < count; ++t) {
        int c = coef_dist(rng);
        if (negative(rng)) c = -c;
        p.add_term(monos[t], Rational(c));
    }
    return ClassExpr(std::move(p));
}

}  // namespace lgint

#include "lgint/combinat.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lgint {

StrictPartition::StrictPartition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw std::invalid_argument("strict partition parts must be positive");
        if (i > 0 && parts_[i] >= parts_[i - 1])
            throw std::invalid_argument("strict partition parts must be strictly decreasing");
    }
}

unsigned StrictPartition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0U); }

std::string StrictPartition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

StrictPartition parse_partition(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty() || text == "0") return {};
    std::vector<unsigned> parts;
    while (true) {
        auto comma = text.find(',');
        auto token = trim(text.substr(0, comma));
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
            throw std::invalid_argument("malformed partition \"" + std::string(text) + "\"");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    return StrictPartition(std::move(parts));
}

StrictPartition dual(const StrictPartition& alpha, unsigned n) {
    if (!alpha.fits(n))
        throw std::invalid_argument("dual: partition (" + alpha.to_string() + ") is not in D_" +
                                    std::to_string(n));
    std::vector<unsigned> parts;
    const auto& a = alpha.parts();
    for (unsigned v = n; v >= 1; --v)
        if (std::find(a.begin(), a.end(), v) == a.end()) parts.push_back(v);
    return StrictPartition(std::move(parts));
}

namespace {

// Descending lexicographic: larger first parts first.
void strict_rec(unsigned max_part, unsigned remaining, std::vector<unsigned>& cur,
                std::vector<StrictPartition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (unsigned p = std::min(max_part, remaining); p >= 1; --p) {
        // parts below p sum to at most p(p-1)/2
        if (p + p * (p - 1) / 2 < remaining) break;
        cur.push_back(p);
        strict_rec(p - 1, remaining - p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<StrictPartition> strict_partitions(unsigned n, unsigned w) {
    if (w > lg_dimension(n))
        throw std::invalid_argument("strict_partitions: weight " + std::to_string(w) +
                                    " exceeds n(n+1)/2");
    std::vector<StrictPartition> out;
    std::vector<unsigned> cur;
    strict_rec(n, w, cur, out);
    return out;
}

std::vector<StrictPartition> all_strict_partitions(unsigned n) {
    std::vector<StrictPartition> out;
    for (unsigned w = 0; w <= lg_dimension(n); ++w) {
        auto level = strict_partitions(n, w);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

StrictPartition staircase(unsigned n) {
    if (n < 1) throw std::invalid_argument("staircase: n must be >= 1");
    std::vector<unsigned> parts;
    for (unsigned v = n - 1; v >= 1; --v) parts.push_back(v);
    return StrictPartition(std::move(parts));
}

StrictPartition full_staircase(unsigned n) { return staircase(n + 1); }

std::size_t SignedAssignment::subset_size() const { return std::popcount(subset); }

bool is_admissible(const std::vector<Rational>& lambdas) {
    std::set<Rational> squares;
    for (const auto& l : lambdas) {
        if (l == 0) return false;
        if (!squares.insert(l * l).second) return false;
    }
    return true;
}

std::vector<SignedAssignment> signed_assignments(const std::vector<Rational>& lambdas) {
    if (!is_admissible(lambdas))
        throw std::invalid_argument("torus weights must be nonzero with pairwise-distinct squares");
    const std::size_t n = lambdas.size();
    if (n > 31) throw std::invalid_argument("signed_assignments: too many weights");
    std::vector<SignedAssignment> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        SignedAssignment sa{mask, std::vector<Rational>(n)};
        for (std::size_t i = 0; i < n; ++i) sa.signed_[i] = sa.contains(i) ? lambdas[i] : -lambdas[i];
        out.push_back(std::move(sa));
    }
    return out;
}

std::vector<Rational> random_admissible_lambdas(unsigned n, std::mt19937_64& rng) {
    std::vector<unsigned> pool(10 * n);
    std::iota(pool.begin(), pool.end(), 1U);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Rational> out;
    for (unsigned i = 0; i < n; ++i) out.emplace_back(pool[i]);
    return out;
}

std::vector<Rational> random_distinct_weights(unsigned m, std::mt19937_64& rng) {
    const int bound = 10 * static_cast<int>(m);
    std::vector<int> pool;
    for (int v = -bound; v <= bound; ++v) pool.push_back(v);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Rational> out;
    for (unsigned i = 0; i < m; ++i) out.emplace_back(pool[i]);
    return out;
}

}  // namespace lgint

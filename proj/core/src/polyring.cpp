#include "lgint/polyring.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lgint {

namespace {

constexpr unsigned kBits = 8;
constexpr SparsePoly::Key kByteMask = 0xFF;

unsigned byte_at(SparsePoly::Key k, std::size_t i) {
    return static_cast<unsigned>((k >> (kBits * i)) & kByteMask);
}

SparsePoly::Key repeat_byte(unsigned value, std::size_t nvars) {
    SparsePoly::Key out = 0;
    for (std::size_t i = 0; i < nvars; ++i) out |= SparsePoly::Key{value} << (kBits * i);
    return out;
}

unsigned max_byte(SparsePoly::Key k, std::size_t nvars) {
    unsigned m = 0;
    for (std::size_t i = 0; i < nvars; ++i) m = std::max(m, byte_at(k, i));
    return m;
}

// Graded-lex "greater than" on exponent vectors.
bool grlex_greater(const Exponents& a, const Exponents& b) {
    unsigned da = 0, db = 0;
    for (unsigned v : a) da += v;
    for (unsigned v : b) db += v;
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

void check_exponent_sum(const SparsePoly& p, const SparsePoly& q) {
    auto mp = p.max_exponents();
    auto mq = q.max_exponents();
    for (std::size_t i = 0; i < mp.size(); ++i) {
        if (mp[i] + mq[i] > kMaxExponent)
            throw std::overflow_error("polynomial product: exponent exceeds 255");
    }
}

}  // namespace

SparsePoly::SparsePoly(std::size_t nvars) : nvars_(nvars) {
    if (nvars == 0 || nvars > kMaxVars)
        throw std::invalid_argument("SparsePoly: variable count must be in 1..8");
}

SparsePoly SparsePoly::constant(std::size_t nvars, const Rational& c) {
    SparsePoly p(nvars);
    p.accumulate(0, c);
    return p;
}

SparsePoly SparsePoly::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw std::invalid_argument("SparsePoly::variable: index out of range");
    SparsePoly p(nvars);
    p.accumulate(Key{1} << (kBits * index), Rational(1));
    return p;
}

SparsePoly SparsePoly::monomial(std::size_t nvars, const Exponents& e, const Rational& c) {
    SparsePoly p(nvars);
    p.add_term(e, c);
    return p;
}

SparsePoly::Key SparsePoly::pack(const Exponents& e) const {
    if (e.size() != nvars_)
        throw std::invalid_argument("exponent vector length does not match variable count");
    Key k = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] > kMaxExponent) throw std::overflow_error("exponent exceeds 255");
        k |= Key{e[i]} << (kBits * i);
    }
    return k;
}

Exponents SparsePoly::unpack(Key k) const {
    Exponents e(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) e[i] = byte_at(k, i);
    return e;
}

void SparsePoly::accumulate(Key k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void SparsePoly::add_term(const Exponents& e, const Rational& c) { accumulate(pack(e), c); }

void SparsePoly::check_same_ring(const SparsePoly& q, const char* op) const {
    if (nvars_ != q.nvars_)
        throw std::invalid_argument(std::string(op) + ": variable count mismatch");
}

Rational SparsePoly::coeff(const Exponents& e) const {
    auto it = terms_.find(pack(e));
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::pair<Exponents, Rational>> SparsePoly::terms() const {
    std::vector<std::pair<Exponents, Rational>> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.emplace_back(unpack(k), c);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return grlex_greater(a.first, b.first); });
    return out;
}

int SparsePoly::total_degree() const {
    int deg = -1;
    for (const auto& [k, c] : terms_) {
        int d = 0;
        for (std::size_t i = 0; i < nvars_; ++i) d += static_cast<int>(byte_at(k, i));
        deg = std::max(deg, d);
    }
    return deg;
}

bool SparsePoly::is_homogeneous() const {
    int deg = -1;
    for (const auto& [k, c] : terms_) {
        int d = 0;
        for (std::size_t i = 0; i < nvars_; ++i) d += static_cast<int>(byte_at(k, i));
        if (deg >= 0 && d != deg) return false;
        deg = d;
    }
    return true;
}

Exponents SparsePoly::max_exponents() const {
    Exponents m(nvars_, 0);
    for (const auto& [k, c] : terms_)
        for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::max(m[i], byte_at(k, i));
    return m;
}

Rational SparsePoly::eval(std::span<const Rational> point) const {
    if (point.size() != nvars_)
        throw std::invalid_argument("eval: point length does not match variable count");
    auto maxe = max_exponents();
    std::vector<std::vector<Rational>> powers(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
        powers[i].resize(maxe[i] + 1);
        powers[i][0] = 1;
        for (unsigned e = 1; e <= maxe[i]; ++e) powers[i][e] = powers[i][e - 1] * point[i];
    }
    Rational total = 0;
    Rational term;
    for (const auto& [k, c] : terms_) {
        term = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            unsigned e = byte_at(k, i);
            if (e != 0) term *= powers[i][e];
        }
        total += term;
    }
    return total;
}

SparsePoly SparsePoly::permute(std::span<const std::size_t> perm) const {
    if (perm.size() != nvars_) throw std::invalid_argument("permute: wrong permutation length");
    SparsePoly out(nvars_);
    for (const auto& [k, c] : terms_) {
        Key nk = 0;
        for (std::size_t i = 0; i < nvars_; ++i) nk |= Key{byte_at(k, perm[i])} << (kBits * i);
        out.terms_.emplace(nk, c);
    }
    return out;
}

bool SparsePoly::is_symmetric() const {
    std::vector<std::size_t> perm(nvars_);
    for (std::size_t i = 0; i + 1 < nvars_; ++i) {
        for (std::size_t j = 0; j < nvars_; ++j) perm[j] = j;
        std::swap(perm[i], perm[i + 1]);
        if (!(permute(perm) == *this)) return false;
    }
    return true;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& q) {
    check_same_ring(q, "add");
    for (const auto& [k, c] : q.terms_) accumulate(k, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& q) {
    check_same_ring(q, "subtract");
    for (const auto& [k, c] : q.terms_) accumulate(k, -c);
    return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

SparsePoly operator*(const SparsePoly& p, const SparsePoly& q) {
    p.check_same_ring(q, "mul");
    check_exponent_sum(p, q);
    SparsePoly out(p.nvars_);
    out.terms_.reserve(std::min<std::size_t>(p.terms_.size() * q.terms_.size(), std::size_t{1} << 16));
    Rational prod;
    for (const auto& [kp, cp] : p.terms_) {
        for (const auto& [kq, cq] : q.terms_) {
            prod = cp * cq;
            out.accumulate(kp + kq, prod);
        }
    }
    return out;
}

SparsePoly mul_pruned(const SparsePoly& p, const SparsePoly& q, unsigned cap) {
    p.check_same_ring(q, "mul_pruned");
    const std::size_t n = p.nvars_;
    cap = std::min(cap, kMaxExponent);

    using Term = std::pair<SparsePoly::Key, const Rational*>;
    auto in_cap = [&](const SparsePoly& s) {
        std::vector<Term> kept;
        kept.reserve(s.terms_.size());
        for (const auto& [k, c] : s.terms_)
            if (max_byte(k, n) <= cap) kept.emplace_back(k, &c);
        return kept;
    };
    const auto lhs = in_cap(p);
    const auto rhs = in_cap(q);

    SparsePoly out(n);
    Rational prod;
    if (cap <= 127) {
        // Byte sums stay below 255, so "some byte > cap" is a high-bit test
        // after adding (127 - cap) to every used byte.
        const SparsePoly::Key bias = repeat_byte(127 - cap, n);
        const SparsePoly::Key high = repeat_byte(0x80, n);
        for (const auto& [kp, cp] : lhs) {
            for (const auto& [kq, cq] : rhs) {
                const SparsePoly::Key k = kp + kq;
                if (((k + bias) & high) != 0) continue;
                prod = *cp * *cq;
                out.accumulate(k, prod);
            }
        }
    } else {
        for (const auto& [kp, cp] : lhs) {
            for (const auto& [kq, cq] : rhs) {
                bool ok = true;
                for (std::size_t i = 0; i < n && ok; ++i) ok = byte_at(kp, i) + byte_at(kq, i) <= cap;
                if (!ok) continue;
                prod = *cp * *cq;
                out.accumulate(kp + kq, prod);
            }
        }
    }
    return out;
}

namespace {

__extension__ using Int128 = __int128;
__extension__ using UInt128 = unsigned __int128;

Integer to_integer(Int128 v) {
    const bool negative = v < 0;
    UInt128 mag = negative ? -static_cast<UInt128>(v) : static_cast<UInt128>(v);
    Integer out(static_cast<unsigned long>(mag >> 64));
    out <<= 64;
    out += Integer(static_cast<unsigned long>(mag & 0xFFFFFFFFFFFFFFFFULL));
    return negative ? Integer(-out) : out;
}

// log2 of the coefficient 1-norm, or -1 when some coefficient is not an
// int64 integer.
double log2_norm_if_small_integer(const SparsePoly& p) {
    double norm = 0;
    for (const auto& [k, c] : p.raw_terms()) {
        if (c.get_den() != 1 || !c.get_num().fits_slong_p()) return -1;
        norm += std::abs(static_cast<double>(c.get_num().get_si()));
    }
    return norm == 0 ? 0 : std::log2(norm);
}

}  // namespace

SparsePoly product_pruned(std::span<const SparsePoly> factors, unsigned cap) {
    if (factors.empty()) throw std::invalid_argument("product_pruned: no factors");
    const std::size_t n = factors.front().nvars();
    for (const auto& f : factors)
        if (f.nvars() != n) throw std::invalid_argument("product_pruned: variable count mismatch");

    double bits = 0;
    bool small = cap <= 127;
    for (const auto& f : factors) {
        double b = log2_norm_if_small_integer(f);
        if (b < 0) small = false;
        bits += b;
    }
    if (!small || bits >= 126) {
        SparsePoly acc = SparsePoly::constant(n, Rational(1));
        for (const auto& f : factors) acc = mul_pruned(acc, f, cap);
        return acc;
    }

    const SparsePoly::Key bias = repeat_byte(127 - cap, n);
    const SparsePoly::Key high = repeat_byte(0x80, n);
    std::unordered_map<SparsePoly::Key, Int128> acc{{SparsePoly::Key{0}, Int128{1}}};
    for (const auto& f : factors) {
        std::vector<std::pair<SparsePoly::Key, Int128>> terms;
        for (const auto& [k, c] : f.raw_terms())
            if (max_byte(k, n) <= cap) terms.emplace_back(k, Int128{c.get_num().get_si()});
        std::unordered_map<SparsePoly::Key, Int128> next;
        next.reserve(acc.size() * 2);
        for (const auto& [ka, ca] : acc) {
            for (const auto& [kf, cf] : terms) {
                const SparsePoly::Key k = ka + kf;
                if (((k + bias) & high) != 0) continue;
                next[k] += ca * cf;
            }
        }
        std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
        acc = std::move(next);
    }
    SparsePoly out(n);
    for (const auto& [k, c] : acc) out.add_term(out.unpack(k), Rational(to_integer(c)));
    return out;
}

Rational coeff_of_product(const SparsePoly& p, const SparsePoly& q, const Exponents& e) {
    p.check_same_ring(q, "coeff_of_product");
    const SparsePoly::Key target = p.pack(e);
    const SparsePoly& small = p.size() <= q.size() ? p : q;
    const SparsePoly& large = p.size() <= q.size() ? q : p;
    const std::size_t n = p.nvars_;

    Rational total = 0;
    for (const auto& [k, c] : small.terms_) {
        bool fits = true;
        for (std::size_t i = 0; i < n && fits; ++i) fits = byte_at(k, i) <= byte_at(target, i);
        if (!fits) continue;
        auto it = large.terms_.find(target - k);
        if (it != large.terms_.end()) total += c * it->second;
    }
    return total;
}

SparsePoly pow(const SparsePoly& p, unsigned k) {
    SparsePoly result = SparsePoly::constant(p.nvars(), Rational(1));
    SparsePoly base = p;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

SparsePoly elem_sym(int i, std::size_t n) {
    if (i < 0) throw std::invalid_argument("elem_sym: negative index");
    SparsePoly out(n);
    if (static_cast<std::size_t>(i) > n) return out;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        if (std::popcount(mask) != i) continue;
        Exponents e(n, 0);
        for (std::size_t v = 0; v < n; ++v) e[v] = (mask >> v) & 1U;
        out.add_term(e, Rational(1));
    }
    return out;
}

std::vector<SparsePoly> discriminant_factors(std::size_t n) {
    std::vector<SparsePoly> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) out.push_back(SparsePoly::variable(n, i) - SparsePoly::variable(n, j));
    return out;
}

std::vector<SparsePoly> plusprod_factors(std::size_t n) {
    std::vector<SparsePoly> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out.push_back(SparsePoly::variable(n, i) + SparsePoly::variable(n, j));
    return out;
}

StructuredProducts structured_products(std::size_t n) {
    if (n < 1) throw std::invalid_argument("structured_products: n must be >= 1");
    const SparsePoly one = SparsePoly::constant(n, Rational(1));
    StructuredProducts out{one, one, one};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out.vandermonde = out.vandermonde * (SparsePoly::variable(n, i) - SparsePoly::variable(n, j));
    for (const auto& f : discriminant_factors(n)) out.discriminant = out.discriminant * f;
    for (const auto& f : plusprod_factors(n)) out.plusprod = out.plusprod * f;
    return out;
}

std::string SparsePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms()) {
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
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << '*';
            os << 'x' << (i + 1);
            if (e[i] > 1) os << '^' << e[i];
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace lgint

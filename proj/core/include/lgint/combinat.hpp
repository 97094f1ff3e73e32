#pragma once

// Strict partitions (the index set D_n of Schubert classes on LG(n)) and
// signed torus weights lambda_I indexing the fixed points of LG(n).

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lgint/rational.hpp"

namespace lgint {

class StrictPartition {
  public:
    StrictPartition() = default;
    /// Throws std::invalid_argument unless parts are positive and strictly
    /// decreasing.
    explicit StrictPartition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    unsigned weight() const;
    bool empty() const { return parts_.empty(); }
    unsigned largest() const { return parts_.empty() ? 0 : parts_.front(); }

    /// Membership in D_n: largest part at most n.
    bool fits(unsigned n) const { return largest() <= n; }

    /// "3,2,1"; the empty partition prints as "".
    std::string to_string() const;

    friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
    friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;

  private:
    std::vector<unsigned> parts_;
};

/// Parses "3,2,1"; "" and "0" give the empty partition.
StrictPartition parse_partition(std::string_view text);

/// Parts complementing alpha's parts in {1..n}.
StrictPartition dual(const StrictPartition& alpha, unsigned n);

/// All members of D_n of weight w, in lexicographically descending order.
std::vector<StrictPartition> strict_partitions(unsigned n, unsigned w);

/// All of D_n, grouped by increasing weight.
std::vector<StrictPartition> all_strict_partitions(unsigned n);

/// (n-1, ..., 1).
StrictPartition staircase(unsigned n);

/// (n, n-1, ..., 1), the top class of D_n.
StrictPartition full_staircase(unsigned n);

inline unsigned lg_dimension(unsigned n) { return n * (n + 1) / 2; }

struct SignedAssignment {
    std::uint32_t subset;          // bit i set iff i+1 is in I
    std::vector<Rational> signed_; // lambda_I

    bool contains(std::size_t i) const { return (subset >> i) & 1U; }
    std::size_t subset_size() const;
};

/// Nonzero entries with pairwise-distinct squares.
bool is_admissible(const std::vector<Rational>& lambdas);

/// All 2^n signed assignments, subsets in binary-counter order. Throws on
/// inadmissible weights.
std::vector<SignedAssignment> signed_assignments(const std::vector<Rational>& lambdas);

/// n distinct integers drawn uniformly from [1, 10n] without replacement.
std::vector<Rational> random_admissible_lambdas(unsigned n, std::mt19937_64& rng);

/// m pairwise-distinct integers from [-10m, 10m].
std::vector<Rational> random_distinct_weights(unsigned m, std::mt19937_64& rng);

}  // namespace lgint

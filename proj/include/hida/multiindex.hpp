#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hida {

using Mode = std::uint32_t;

/// One occupied mode of a multi-index: mode i carries multiplicity r >= 1.
struct ModeCount {
  Mode mode = 0;
  std::uint32_t count = 0;
  auto operator<=>(const ModeCount&) const = default;
};

/// Finite occupation pattern A = ((i1,r1),...,(in,rn)) with i1 < ... < in and
/// every r >= 1. The empty pattern is the vacuum label. Constructors normalize
/// (sort, merge repeated modes, drop zero multiplicities), so equal patterns
/// have equal storage and ordering is plain lexicographic on the pairs.
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(std::initializer_list<std::pair<Mode, std::uint32_t>> pairs);
  explicit MultiIndex(std::vector<std::pair<Mode, std::uint32_t>> pairs);

  static MultiIndex single(Mode mode, std::uint32_t count = 1);

  std::span<const ModeCount> pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }
  std::uint32_t multiplicity(Mode mode) const;
  std::optional<Mode> max_mode() const;

  /// A^i: multiplicity of `mode` raised by one (inserted if absent).
  MultiIndex incremented(Mode mode, std::uint32_t by = 1) const;
  /// A_i: multiplicity of `mode` lowered by one; nullopt if the mode is absent.
  std::optional<MultiIndex> decremented(Mode mode) const;

  auto operator<=>(const MultiIndex&) const = default;

 private:
  std::vector<ModeCount> pairs_;
};

/// |A| = sum of multiplicities.
std::uint32_t degree(const MultiIndex& a);

/// Hida weight ||A|| = prod (2 i + 2)^r.
mpz_class hida_weight(const MultiIndex& a);

/// Concatenation with multiplicities added on shared modes (A u B).
MultiIndex concat(const MultiIndex& a, const MultiIndex& b);

/// All ordered pairs (B, D) with concat(B, D) == A; there are prod (r_j + 1).
/// Ordered lexicographically by the multiplicities of B, first mode slowest.
std::vector<std::pair<MultiIndex, MultiIndex>> decompositions(const MultiIndex& a);

/// |A|!
mpz_class factorial_degree(const MultiIndex& a);

/// A! = prod r_j!, the weight of e_A in the bilinear pairing.
mpz_class pairing_weight(const MultiIndex& a);

/// A - B when B <= A modewise, otherwise nullopt.
std::optional<MultiIndex> difference(const MultiIndex& a, const MultiIndex& b);

/// prod_j r_j(A)! / (r_j(A) - r_j(B))!, the coefficient produced by applying
/// a_B to e_A. Requires B <= A.
mpz_class falling_factorial(const MultiIndex& a, const MultiIndex& b);

/// prod_j C(r_j(A), r_j(B)). Requires B <= A.
mpz_class binomial(const MultiIndex& a, const MultiIndex& b);

/// Every multi-index with modes < `modes` and degree exactly `deg`, sorted.
std::vector<MultiIndex> multi_indices_of_degree(std::uint32_t modes, std::uint32_t deg);

/// Every multi-index with modes < `modes` and degree <= `max_degree`, sorted.
std::vector<MultiIndex> multi_indices_up_to(std::uint32_t modes, std::uint32_t max_degree);

/// Every multi-index supported on `support` (any modes) with degree <= max_degree.
std::vector<MultiIndex> multi_indices_on(std::span<const Mode> support, std::uint32_t max_degree);

}  // namespace hida

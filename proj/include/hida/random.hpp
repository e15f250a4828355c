#pragma once

#include <cstdint>
#include <random>

#include "hida/fock.hpp"
#include "hida/operators.hpp"

namespace hida {

/// splitmix64 step; derives independent per-case seeds from a run seed.
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

/// Seeded source of small exact test data. Rationals have numerators in
/// [-5, 5] and denominators in [1, 4].
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : engine_(seed) {}

  std::uint32_t uniform(std::uint32_t lo, std::uint32_t hi);  // inclusive
  bool chance(std::uint32_t num, std::uint32_t den);

  mpq_class rational();
  mpq_class nonzero_rational();
  Scalar scalar();  // imaginary part nonzero one time in four
  TestVector test_vector(std::uint32_t modes);
  MultiIndex multi_index(std::uint32_t modes, std::uint32_t degree);
  MultiIndex multi_index_up_to(std::uint32_t modes, std::uint32_t max_degree);
  FockVector fock_vector(const TruncationCaps& caps, std::size_t terms);

  /// Entries with l + m <= max_lm; each slot degree is part of a random split of m.
  KernelFamily kernel_family(std::size_t arity, std::uint32_t modes, std::uint32_t max_lm, std::size_t entries);
  BasisActionTable table(std::size_t arity, const TruncationCaps& caps, std::size_t rows);

 private:
  std::mt19937_64 engine_;
};

}  // namespace hida

#include "hida/random.hpp"

namespace hida {

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint32_t Generator::uniform(std::uint32_t lo, std::uint32_t hi) {
  return std::uniform_int_distribution<std::uint32_t>(lo, hi)(engine_);
}

bool Generator::chance(std::uint32_t num, std::uint32_t den) { return uniform(1, den) <= num; }

mpq_class Generator::rational() {
  const int num = static_cast<int>(uniform(0, 10)) - 5;
  const int den = static_cast<int>(uniform(1, 4));
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

mpq_class Generator::nonzero_rational() {
  for (;;) {
    mpq_class q = rational();
    if (q != 0) return q;
  }
}

Scalar Generator::scalar() {
  mpq_class re = rational();
  mpq_class im = chance(1, 4) ? rational() : mpq_class(0);
  return Scalar(std::move(re), std::move(im));
}

TestVector Generator::test_vector(std::uint32_t modes) {
  TestVector v;
  for (Mode i = 0; i < modes; ++i) {
    if (chance(3, 4)) v.add(i, Scalar(rational()));
  }
  return v;
}

MultiIndex Generator::multi_index(std::uint32_t modes, std::uint32_t degree) {
  MultiIndex a;
  for (std::uint32_t n = 0; n < degree; ++n) a = a.incremented(uniform(0, modes - 1));
  return a;
}

MultiIndex Generator::multi_index_up_to(std::uint32_t modes, std::uint32_t max_degree) {
  return multi_index(modes, uniform(0, max_degree));
}

FockVector Generator::fock_vector(const TruncationCaps& caps, std::size_t terms) {
  FockVector v;
  for (std::size_t n = 0; n < terms; ++n) v.add(multi_index_up_to(caps.max_mode, caps.max_degree), scalar());
  return v;
}

KernelFamily Generator::kernel_family(std::size_t arity, std::uint32_t modes, std::uint32_t max_lm,
                                      std::size_t entries) {
  KernelFamily k(arity);
  for (std::size_t n = 0; n < entries; ++n) {
    const std::uint32_t l = uniform(0, max_lm);
    std::uint32_t left = uniform(0, max_lm - l);
    KernelKey key{multi_index(modes, l), {}};
    for (std::size_t s = 0; s < arity; ++s) {
      const std::uint32_t d = s + 1 == arity ? left : uniform(0, left);
      key.annihilation.push_back(multi_index(modes, d));
      left -= d;
    }
    k.add(key, scalar());
  }
  return k;
}

BasisActionTable Generator::table(std::size_t arity, const TruncationCaps& caps, std::size_t rows) {
  BasisActionTable t(arity, caps);
  const auto tuples = window_tuples(arity, caps);
  for (std::size_t n = 0; n < rows; ++n) {
    const auto& tuple = tuples[uniform(0, static_cast<std::uint32_t>(tuples.size() - 1))];
    t.set(tuple, t.at(tuple) + fock_vector(caps, 2));
  }
  return t;
}

}  // namespace hida

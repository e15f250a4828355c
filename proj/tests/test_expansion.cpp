#include <doctest.h>

#include <map>

#include "hida/expansion.hpp"
#include "hida/random.hpp"

using hida::BasisActionTable;
using hida::FockVector;
using hida::KernelFamily;
using hida::KernelKey;
using hida::MultiIndex;
using hida::Scalar;
using hida::TruncationCaps;

namespace {

KernelFamily single(KernelKey key, Scalar c = Scalar(1)) {
  KernelFamily k(key.annihilation.size());
  k.add(key, c);
  return k;
}

// Arity-1 kernels straight from the table, by recursion on |A|:
//   T(e_A)_B = sum_{J <= A} lambda_{B - (A - J), J} A!/(A - J)!
// The J = A term isolates lambda_{B, A}.
KernelFamily recursive_kernels(const BasisActionTable& t) {
  const auto& caps = t.caps();
  std::map<std::pair<MultiIndex, MultiIndex>, Scalar> lambda;
  const auto labels = hida::multi_indices_up_to(caps.max_mode, caps.max_degree);
  KernelFamily out(1);
  for (std::uint32_t deg = 0; deg <= caps.max_degree; ++deg) {
    for (const auto& a : hida::multi_indices_of_degree(caps.max_mode, deg)) {
      const FockVector& image = t.at({a});
      for (const auto& b : labels) {
        Scalar rest = image.coefficient(b);
        for (const auto& [j, removed] : hida::decompositions(a)) {
          if (removed.empty()) continue;
          const auto i = hida::difference(b, removed);
          if (!i) continue;
          auto it = lambda.find({*i, j});
          if (it == lambda.end()) continue;
          rest -= it->second * Scalar(mpq_class(hida::falling_factorial(a, j)));
        }
        if (rest.is_zero()) continue;
        const Scalar value = rest / Scalar(mpq_class(hida::pairing_weight(a)));
        lambda[{b, a}] = value;
        out.add(KernelKey{b, {a}}, value);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("extract_kernels examples") {
  const TruncationCaps caps{2, 3};
  CHECK(hida::extract_kernels(BasisActionTable(1, caps)).empty());
  const auto number = single(KernelKey{MultiIndex{{0, 1}}, {MultiIndex{{0, 1}}}});
  CHECK(hida::extract_kernels(hida::table_from_kernel(number, caps)) == number);
  const auto wick = hida::table_from_kernel(KernelFamily::wick_multiplication(2), caps);
  CHECK(hida::extract_kernels(wick) == single(KernelKey{MultiIndex{}, {MultiIndex{}, MultiIndex{}}}));
}

TEST_CASE("reconstruct examples") {
  const TruncationCaps caps{2, 2};
  CHECK(hida::reconstruct(KernelFamily(1), caps).rows().empty());
  const auto id = hida::reconstruct(single(KernelKey{MultiIndex{}, {MultiIndex{}}}), caps);
  for (const auto& a : hida::multi_indices_up_to(2, 2)) CHECK(id.at({a}) == FockVector::basis(a));
}

TEST_CASE("falling_factorial coefficient is A!/(A-J)!") {
  const MultiIndex a{{0, 3}, {1, 2}};
  const MultiIndex j{{0, 2}, {1, 1}};
  CHECK(hida::falling_factorial(a, j) == hida::pairing_weight(a) / hida::pairing_weight(*hida::difference(a, j)));
}

TEST_CASE("extraction agrees with the triangular recursion") {
  hida::Generator g(59);
  for (int trial = 0; trial < 15; ++trial) {
    const TruncationCaps caps{g.uniform(1, 2), g.uniform(1, 3)};
    const auto t = g.table(1, caps, 4);
    CHECK(hida::extract_kernels(t) == recursive_kernels(t));
  }
}

TEST_CASE("round trips in both directions") {
  hida::Generator g(61);
  const TruncationCaps caps{3, 3};
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t r = g.uniform(1, 2);
    const auto k = g.kernel_family(r, 3, 3, 4);
    CHECK(hida::within_caps(k, caps));
    CHECK(hida::extract_kernels(hida::reconstruct(k, caps)) == k);
    const auto t = g.table(r, caps, 3);
    CHECK(hida::reconstruct(hida::extract_kernels(t), caps) == t);
  }
}

TEST_CASE("extraction is linear and keeps degree bookkeeping") {
  hida::Generator g(67);
  const TruncationCaps caps{2, 3};
  for (int trial = 0; trial < 15; ++trial) {
    const auto t1 = g.table(2, caps, 3), t2 = g.table(2, caps, 3);
    const Scalar c = g.scalar();
    auto scaled = t1;
    scaled *= c;
    auto k1 = hida::extract_kernels(t1);
    k1 *= c;
    CHECK(hida::extract_kernels(scaled + t2) == k1 + hida::extract_kernels(t2));
    for (const auto& [block, entries] : hida::extract_kernels(t1).blocks()) {
      CHECK(hida::block_reliable(block, caps));
      for (const auto& [key, v] : entries) {
        CHECK(hida::degree(key.creation) == block.l);
        for (std::size_t s = 0; s < 2; ++s) CHECK(hida::degree(key.annihilation[s]) == block.M[s]);
      }
    }
  }
}

TEST_CASE("blocks beyond the caps are unreliable") {
  const TruncationCaps caps{2, 2};
  CHECK(hida::block_reliable(KernelFamily::BlockKey{2, {0}}, caps));
  CHECK_FALSE(hida::block_reliable(KernelFamily::BlockKey{3, {0}}, caps));
  CHECK_FALSE(hida::block_reliable(KernelFamily::BlockKey{0, {2, 1}}, caps));
  CHECK_FALSE(hida::within_caps(single(KernelKey{MultiIndex{{2, 1}}, {MultiIndex{}}}), caps));
}

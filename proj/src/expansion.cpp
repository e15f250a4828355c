#include "hida/expansion.hpp"

namespace hida {

KernelFamily extract_kernels(const BasisActionTable& t) {
  const SymbolPolynomial psi = reduced_symbol(symbol_poly(t));
  KernelFamily k(t.arity());
  for (const auto& [m, c] : psi.terms()) k.add(KernelKey{m.eta, m.xi}, c);
  return k;
}

BasisActionTable reconstruct(const KernelFamily& k, const TruncationCaps& caps) {
  return table_from_kernel(k, caps);
}

bool block_reliable(const KernelFamily::BlockKey& block, const TruncationCaps& caps) {
  return block.l <= caps.max_degree && block.m() <= caps.max_degree;
}

bool within_caps(const KernelFamily& k, const TruncationCaps& caps) {
  for (const auto& [key, c] : k.entries()) {
    if (!caps.contains(key.creation)) return false;
    for (const auto& j : key.annihilation) {
      if (!caps.contains(j)) return false;
    }
    if (key.m() > caps.max_degree) return false;
  }
  return true;
}

}  // namespace hida

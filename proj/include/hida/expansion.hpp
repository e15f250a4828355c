#pragma once

#include "hida/operators.hpp"
#include "hida/symbolcalc.hpp"

namespace hida {

/// Fock expansion of a table: reads every monomial prod_j x^{(j)J_j} y^I of the
/// reduced symbol as the kernel entry lambda_{I,J}.
///
/// Tables and kernel families with |I| <= max_degree, sum_j |J_j| <= max_degree
/// and modes < max_mode are in bijection: a kernel entry outside that box
/// either annihilates every window tuple or creates past the degree cap, so it
/// never shows up in a table, and the truncated exponential division is exact
/// on the whole region. Hence extract_kernels(reconstruct(K)) == K for every K
/// inside the box and reconstruct(extract_kernels(T)) == T for every T.
KernelFamily extract_kernels(const BasisActionTable& t);

/// table_from_kernel(K, caps).
BasisActionTable reconstruct(const KernelFamily& k, const TruncationCaps& caps);

/// Whether an (l, M) block is determined exactly by a table with these caps:
/// l <= max_degree and sum M <= max_degree. Every block extract_kernels returns
/// satisfies this; blocks of hand-written families may not.
bool block_reliable(const KernelFamily::BlockKey& block, const TruncationCaps& caps);

/// True when every entry of K lies in the box recovered exactly by extraction.
bool within_caps(const KernelFamily& k, const TruncationCaps& caps);

}  // namespace hida

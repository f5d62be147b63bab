#pragma once

#include <utility>

#include "spindec/numeric.hpp"
#include "spindec/partition.hpp"

namespace spindec {

// deg⟨λ⟩ by the bar-length formula, with exact rational accumulation:
//   2^⌊(n-m)/2⌋ · n!/∏λᵢ! · ∏_{i<j} (λᵢ-λⱼ)/(λᵢ+λⱼ).
BigInt spin_degree(const Partition& lam);

enum class FamilyKind { Base, First, Second, Third, Fourth };

// The partition pairs (λ,μ) used in the degree-comparison arguments; for all
// of them dblreg(λ) = dblreg(μ) while deg⟨λ⟩ > deg⟨μ⟩.
std::pair<Partition, Partition> family(FamilyKind kind, int a, int m);

// Prefix a new first row of length l to both partitions; l must exceed both
// first parts.
std::pair<Partition, Partition> row_extend(const Partition& lam, const Partition& mu,
                                           int l);

} // namespace spindec

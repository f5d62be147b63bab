#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spindec/partition.hpp"
#include "spindec/regdouble.hpp"

namespace spindec {

// λ_r - λ_{r+1} + 1 divisible by a power of 2 greater than λ_{r+1} - λ_{r+2},
// for every r.
bool is_2carter(const Partition& lam);

// [λ] stays irreducible modulo 2: λ or λ' is 2-Carter, or λ = (2²).
bool linear_irreducible(const Partition& lam);

// λ = τ+4α (b = 0) or τ+4α⊔(2b) (b > 0) with τ a 4-bar-core.
struct SepForm {
    Partition tau;
    Partition alpha;
    int b = 0;
    friend bool operator==(const SepForm&, const SepForm&) = default;
};

// Separated decomposition of a 2-regular partition, when one exists: at most
// one even part, all odd parts ≡ i (mod 4) for i ∈ {1,3}, and an even part
// 2b forces every smaller positive integer ≡ i (mod 4) to be a part.
std::optional<SepForm> separated(const Partition& lam);

enum class IrredCase { X3, X1, Y3, Y1, Z, Stair321, None };
const char* to_string(IrredCase c);

struct Verdict {
    bool irreducible = false;
    IrredCase which = IrredCase::None;
    std::optional<SepForm> witness;
};

// Decides whether the 2-modular reduction of ⟨λ⟩ is irreducible and names
// the matched case.
Verdict spin_irreducible(const Partition& lam);

enum class SuiteName { MinimalDegree, StripClosure, SeparatedConsistency };

struct SuiteReport {
    std::string name;
    int max_n = 0;
    long long checked = 0;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

// Exhaustive consistency scans backing the classifier:
//   minimal_degree: classified-irreducible λ minimise deg⟨·⟩ in their
//                   regularised-double class;
//   strip_closure: the classified-irreducible set is closed under λ ↦ λ↓ᵢ;
//   separated_consistency: on separated λ the verdict is b ≤ 1 ∧ α 2-Carter.
SuiteReport verify_suite(SuiteName name, int max_n);

} // namespace spindec

#pragma once

#include <utility>
#include <vector>

#include "spindec/partition.hpp"

namespace spindec {

// Two-runner abacus display: explicit beads at λ_r - r for r = 1..N, with
// every position < -N implicitly beaded. Runner of position p is the
// non-negative residue of p mod 2.
struct AbacusDisplay {
    std::vector<long long> beads; // explicit positions, sorted descending
    int depth = 1;                // N
};

AbacusDisplay display(const Partition& lam);
AbacusDisplay display(const Partition& lam, int depth);
Partition partition_of(const AbacusDisplay& d);

// 2-content: multiset {0^zeros, 1^ones} of node residues.
struct Content {
    int zeros = 0;
    int ones = 0;
    friend bool operator==(const Content&, const Content&) = default;
};

Partition two_core(const Partition& lam);
int two_weight(const Partition& lam);
std::pair<Partition, Partition> two_quotient(const Partition& lam);
// ε(λ) = (-1)^(number of vertical rim 2-hooks removed reaching the core).
int two_sign(const Partition& lam);
Content two_content(const Partition& lam);

// The same invariants computed from an explicit display; unchanged under
// increasing the truncation depth.
Partition two_core(const AbacusDisplay& d);
int two_weight(const AbacusDisplay& d);
std::pair<Partition, Partition> two_quotient(const AbacusDisplay& d);
int two_sign(const AbacusDisplay& d);

bool is_staircase(const Partition& p);

// Inverse of the core/quotient decomposition; core must be a staircase.
Partition from_core_and_quotient(const Partition& core, const Partition& q0,
                                 const Partition& q1);

} // namespace spindec

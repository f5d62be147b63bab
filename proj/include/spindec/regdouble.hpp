#pragma once

#include <vector>

#include "spindec/abacus.hpp"
#include "spindec/partition.hpp"

namespace spindec {

// 2-block of the double cover, identified by its staircase core and weight.
struct BlockId {
    Partition core;
    int weight = 0;
    friend bool operator==(const BlockId&, const BlockId&) = default;
    friend auto operator<=>(const BlockId&, const BlockId&) = default;
};

// 4-bar-core: ∅ or (4l-1,4l-5,…,3) or (4l-3,4l-7,…,1); exactly the
// partitions whose double is a 2-core.
struct BarCore {
    Partition parts;
    friend bool operator==(const BarCore&, const BarCore&) = default;
};

bool is_bar_core(const Partition& p);
// (4l-1,4l-5,…,3) resp. (4l-3,4l-7,…,1).
Partition bar_core_3(int l);
Partition bar_core_1(int l);

// λ^reg: nodes moved as far up their ladders as possible.
Partition regularize(const Partition& lam);

// λ^dbl = (⌈λ₁/2⌉,⌊λ₁/2⌋,⌈λ₂/2⌉,…); requires λ 2-regular.
Partition double_parts(const Partition& lam);
Partition dblreg(const Partition& lam);

// Node counts per ladder l = 0,1,2,…, trailing zeros trimmed.
std::vector<int> ladder_counts(const Partition& lam);
// Node counts per slope; requires λ 2-regular.
std::vector<int> slope_counts(const Partition& lam);

BarCore four_bar_core(const Partition& lam);
int four_bar_weight(const Partition& lam);

// Block of the spin character ⟨λ⟩: core = 2-core of λ^dbl.
BlockId spin_block(const Partition& lam);

// The content common to every partition with this core and weight.
Content block_content(const BlockId& b);

// Every odd-indexed ladder of λ has an even number of nodes.
bool is_s_partition(const Partition& lam);

// w ≤ c+1 where the core is (c,c-1,…,1).
bool is_rouquier(const BlockId& b);

} // namespace spindec

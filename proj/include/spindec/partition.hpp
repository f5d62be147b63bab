#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spindec/error.hpp"

namespace spindec {

// A partition: weakly decreasing positive parts, trailing zeros never stored.
// The empty sequence is the unique partition of 0. Equality is structural.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // 1-based part access; parts beyond the length read as 0.
    int part(int r) const {
        return (r >= 1 && r <= static_cast<int>(parts_.size())) ? parts_[r - 1] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }
    int size() const;               // |λ|
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    bool is_two_regular() const;
    bool contains_part(int v) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    // Total order for use as a map key (ascending lexicographic on parts).
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

struct Node {
    int row = 1; // ≥ 1
    int col = 1; // ≥ 1
    friend bool operator==(const Node&, const Node&) = default;
};

// Text format: comma-separated parts with optional ^k multiplicities;
// "()", "0" and "-" denote the empty partition. Canonical emission has no
// exponents, e.g. "9,6,4,3,1".
Partition parse_partition(const std::string& text);
std::string format_partition(const Partition& p);

Partition conjugate(const Partition& p);

// λ ⊵ μ. Requires |λ| = |μ|.
bool dominates(const Partition& lam, const Partition& mu);
bool strictly_dominates(const Partition& lam, const Partition& mu);

// (aλ₁, aλ₂, …); every aλᵢ must be integral.
Partition scale(int num, int den, const Partition& p);
Partition scale(int a, const Partition& p);
// (λ₁+μ₁, λ₂+μ₂, …).
Partition sum(const Partition& lam, const Partition& mu);
// Multiset union of parts, re-sorted.
Partition disjoint_union(const Partition& lam, const Partition& mu);
// Each part repeated twice: dup(α) = (α₁,α₁,α₂,α₂,…); all its columns have
// even length.
Partition dup(const Partition& alpha);

// residue = (c-r) mod 2, spin residue = ⌊c/2⌋ mod 2, both in {0,1}.
int residue(const Node& p);
int spin_residue(const Node& p);
int ladder(const Node& p); // r + c - 2
int slope(const Node& p);  // 2r + ⌊c/2⌋ - 2

struct NodeData {
    int residue;
    int spin_residue;
    int ladder;
    int slope;
};
NodeData node_data(const Node& p);

enum class BoundaryKind { Removable, Addable };
enum class NodeFilter { None, Residue, SpinResidue };

// Nodes returned top-to-bottom (increasing row).
std::vector<Node> boundary_nodes(const Partition& p, BoundaryKind which,
                                 NodeFilter filter = NodeFilter::None, int i = 0);

struct SpinStrip {
    Partition result;        // λ↓ᵢ
    std::vector<Node> removed; // top-to-bottom
};

// λ↓ᵢ: the smallest 2-regular partition obtained from λ by removing nodes of
// spin residue i. Requires λ 2-regular.
SpinStrip spin_strip(const Partition& lam, int i);

// Number of positive even parts.
int ev(const Partition& p);

enum class SignClass { DPlus, DMinus, NotTwoRegular };
SignClass sign_class(const Partition& p);

enum class PartitionClass { All, TwoRegular };

// All partitions of n in descending lexicographic order.
std::vector<Partition> enumerate_partitions(int n, PartitionClass cls,
                                            int bound = 60);

} // namespace spindec

#pragma once

#include <map>

#include "spindec/numeric.hpp"
#include "spindec/partition.hpp"

namespace spindec {

// A symmetric function written in the Schur basis, with exact integer
// coefficients. Zero coefficients are never stored.
struct SchurPoly {
    std::map<Partition, BigInt> coeffs;

    void add(const Partition& p, const BigInt& c);
    BigInt coeff(const Partition& p) const;
    bool is_zero() const { return coeffs.empty(); }

    static SchurPoly schur(const Partition& p);
    friend bool operator==(const SchurPoly&, const SchurPoly&) = default;
};

// h_r·f by the Pieri rule (add r nodes in distinct columns).
SchurPoly mul_h(int r, const SchurPoly& f);
// e_r·f by the dual Pieri rule (add r nodes in distinct rows).
SchurPoly mul_e(int r, const SchurPoly& f);

SchurPoly h_to_schur(const Partition& mu);
SchurPoly e_to_schur(const Partition& mu);

// ⟨h_μ, s_λ⟩ and ⟨e_μ, s_λ⟩.
BigInt kostka_h(const Partition& mu, const Partition& lam);
BigInt kostka_e(const Partition& mu, const Partition& lam);

// Littlewood–Richardson coefficient a^α_{βγ}: tableaux of shape α/β and
// content γ whose reverse reading word is a lattice word.
BigInt lr_coeff(const Partition& alpha, const Partition& beta, const Partition& gamma);

// κ(α,μ) = a^α_{μ⁽⁰⁾μ⁽¹⁾} if μ has empty 2-core, else 0. Requires |μ|=2|α|.
BigInt kappa(const Partition& alpha, const Partition& mu);

// ♠_{λμ}: transition coefficients h_λ = Σ_μ ♠_{λμ} e_μ, via the recursion
// Σ_{i=0..k} (-1)^i e_i h_{k-i} = 0.
BigInt spade(const Partition& lam, const Partition& mu);

} // namespace spindec

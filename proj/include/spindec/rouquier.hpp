#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spindec/characters.hpp"
#include "spindec/numeric.hpp"
#include "spindec/regdouble.hpp"
#include "spindec/symfun.hpp"

namespace spindec {

// Row labels are partitions or (α|β) pairs (spin rows of weight-w tables).
struct RowLabel {
    Partition first;
    std::optional<Partition> second;
    friend bool operator==(const RowLabel&, const RowLabel&) = default;
};
std::string format_row_label(const RowLabel& l);

// Integer matrix with explicit partition row/column labels.
struct PartMatrix {
    std::vector<RowLabel> row_labels;
    std::vector<Partition> col_labels;
    std::vector<std::vector<BigInt>> entries;

    int rows() const { return static_cast<int>(row_labels.size()); }
    int cols() const { return static_cast<int>(col_labels.size()); }
    const BigInt& at(int r, int c) const { return entries[r][c]; }
    BigInt& at(int r, int c) { return entries[r][c]; }
    int row_index(const RowLabel& l) const;
    int col_index(const Partition& p) const;

    static PartMatrix zero(std::vector<RowLabel> rows, std::vector<Partition> cols);
    friend bool operator==(const PartMatrix&, const PartMatrix&) = default;
};

PartMatrix matmul(const PartMatrix& a, const PartMatrix& b);

// Exact inverse of a matrix that is unitriangular with respect to a
// dominance-compatible label order; verifies M·M⁻¹ = I.
PartMatrix unitri_inverse(const PartMatrix& m);

// Text format: first line "cols: p1; p2; ...", then one line per row
// "rowlabel | e1 e2 ..." with "." meaning 0.
PartMatrix load_matrix(std::istream& in);
PartMatrix load_matrix(const std::string& path);
void save_matrix(const PartMatrix& m, std::ostream& out);
void save_matrix(const PartMatrix& m, const std::string& path);

// A Rouquier block (w ≤ c+1) together with its 4-bar-core τ and the residue
// of the addable nodes of the 2-core (which fixes induction order).
struct RouquierBlock {
    BlockId block;
    Partition tau;
    int addable_residue = 0; // c mod 2

    explicit RouquierBlock(const BlockId& b);
    int weight() const { return block.weight; }
    int level() const { return block.core.size() + 2 * block.weight; }
    // τ+4α (w even) or τ+4α⊔(2) (w odd)
    Partition spin_row_label(const Partition& alpha) const;
};

struct BlockLabels {
    std::vector<Partition> ord;         // all partitions with this core and weight
    std::vector<Partition> ord_regular; // σ+2α, α ∈ P(w)
    std::vector<Partition> spin;        // 2-regular with 4-bar-core τ
};
BlockLabels block_labels(const RouquierBlock& b);

// Projective character ψ^μ, built column-by-column from ψ^∅ = [σ] + ⟨τ⟩.
FormalChar psi(const RouquierBlock& b, const Partition& mu);
// Virtual projective υ^λ = Σ_μ ♠_{λμ} ψ^{μ'}.
FormalChar upsilon(const RouquierBlock& b, const Partition& lam);

// ω^λ: the unique virtual projective with (ω^λ : [σ+2ν]) = δ_{λν}, together
// with its coefficients a_{λμ} over the ψ basis.
struct OmegaFamily {
    std::vector<Partition> labels; // P(w), descending lex
    std::map<Partition, FormalChar> omega;
    PartMatrix coeffs; // a_{λμ}: ω^λ = Σ_μ a_{λμ} ψ^μ
    PartMatrix gram;   // (ψ^μ : [σ+2ν])
};
OmegaFamily omega_family(const RouquierBlock& b);
FormalChar omega(const RouquierBlock& b, const Partition& lam);

// Rows α ∈ P(w/2), columns μ ∈ P(w): (ω^μ : ⟨τ+4α⟩); equals JD̊⁻¹ = ED⁻¹.
PartMatrix omega_spin_table(const RouquierBlock& b);

enum class SteinbergKind { Even, Odd };
enum class SteinbergWhich { DbarInv, DInv };

// Closed forms for rows of D̊⁻¹ and D⁻¹ labelled by dup(α) (even) or
// dup(α)⊔(1) (odd); D_small is the decomposition matrix of the half-size
// Schur algebra, used only for DInv.
BigInt steinberg_row(SteinbergKind kind, SteinbergWhich which, const Partition& alpha,
                     const Partition& mu, const PartMatrix& d_small);

struct Assembled {
    PartMatrix E;
    PartMatrix J;
    PartMatrix A;
};

// A = D̊⁻¹D (must be non-negative); J selects dup(α) (w even) or dup(α)⊔(1)
// (w odd); E = J·A gives the spin rows ⟨τ+4α⟩ resp. ⟨τ+4α⊔(2)⟩.
Assembled assemble_E(const RouquierBlock& b, const PartMatrix& d, const PartMatrix& dbar);

} // namespace spindec

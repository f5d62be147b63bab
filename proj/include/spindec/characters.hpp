#pragma once

#include <map>
#include <string>
#include <vector>

#include "spindec/numeric.hpp"
#include "spindec/partition.hpp"

namespace spindec {

// Label of an irreducible character of the double cover:
//   Ord(λ)          ordinary linear character [λ], λ any partition
//   Spin(λ)         ⟨λ⟩ for λ ∈ D⁺ (ev(λ) even)
//   SpinSigned(λ,±) ⟨λ⟩± for λ ∈ D⁻ (ev(λ) odd)
//   Brauer(μ)       irreducible 2-modular Brauer character φ(μ), μ 2-regular
struct CharLabel {
    enum class Kind { Ord, Spin, SpinSigned, Brauer };

    Kind kind = Kind::Ord;
    Partition part;
    int sign = 0; // ±1 for SpinSigned, 0 otherwise

    static CharLabel ord(Partition p);
    static CharLabel spin(Partition p); // dispatches on ev(λ) with sign +
    static CharLabel spin_signed(Partition p, int sign);
    static CharLabel brauer(Partition p);

    int level() const { return part.size(); }
    bool is_spin() const { return kind == Kind::Spin || kind == Kind::SpinSigned; }

    friend bool operator==(const CharLabel&, const CharLabel&) = default;
    friend auto operator<=>(const CharLabel&, const CharLabel&) = default;
};

// Text forms: [9,1]  <9,1>  <5,4,1>+  <5,4,1>-  phi(7,2,1)
std::string format_label(const CharLabel& l);
CharLabel parse_label(const std::string& text);

// A finite Q-linear combination of character labels, all of one level and
// one family (ordinary+spin, or Brauer). Immutable value semantics.
class FormalChar {
public:
    FormalChar() = default;
    static FormalChar single(const CharLabel& l, const BigRat& c = 1);

    const std::map<CharLabel, BigRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int level() const { return level_; } // meaningful only when non-zero

    void add(const CharLabel& l, const BigRat& c);
    FormalChar& operator+=(const FormalChar& o);
    FormalChar& operator*=(const BigRat& c);
    friend FormalChar operator+(FormalChar a, const FormalChar& b) { return a += b; }
    friend FormalChar operator*(const BigRat& c, FormalChar a) { return a *= c; }
    friend bool operator==(const FormalChar&, const FormalChar&) = default;

private:
    std::map<CharLabel, BigRat> terms_;
    int level_ = -1;
};

std::string format_formal_char(const FormalChar& chi);

// Coefficient extraction (· : label); both sides must be of the same family.
BigRat inner(const FormalChar& chi, const CharLabel& label);

enum class OpDir { E, F };

// One application of the i-restriction (e) or i-induction (f) operator on a
// vector of ordinary/spin labels. i means node residue on ordinary labels
// and spin residue on spin labels.
FormalChar e_step(int i, const FormalChar& chi);
FormalChar f_step(int i, const FormalChar& chi);

// Divided power e_i^(r) = e_i^r / r! (resp. f).
FormalChar divided(int i, int r, OpDir dir, const FormalChar& chi);

// ε_i(χ) = max{r ≥ 0 : e_i^r χ ≠ 0}; requires χ ≠ 0.
int eps(int i, OpDir dir, const FormalChar& chi);
// e_i^max χ = e_i^(ε_i χ) χ (resp. f_i^max).
FormalChar max_op(int i, OpDir dir, const FormalChar& chi);

struct Signature {
    std::vector<std::pair<Node, char>> symbols; // '+' addable, '-' removable
    std::string word() const;
};

struct KleshchevData {
    std::vector<Node> normal;
    std::vector<Node> conormal;
    Signature signature;
    Signature reduced;
};

// i-signature read top to bottom; reduction deletes adjacent "+-" pairs.
KleshchevData kleshchev(const Partition& mu, int i);

// μ⁻ (remove all normal i-nodes) or μ⁺ (add all conormal i-nodes).
Partition brauer_max(const Partition& mu, int i, OpDir dir);

// The two-step restriction e• whose order is determined by the staircase
// core: e₀e₁ for even-length cores, e₁e₀ for odd (rightmost acts first).
FormalChar e_bullet(const Partition& core, const FormalChar& chi);

} // namespace spindec

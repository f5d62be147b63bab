#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "spindec/rouquier.hpp"

using namespace spindec;

namespace {
Partition P(const std::string& s) { return parse_partition(s); }
CharLabel L(const std::string& s) { return parse_label(s); }

std::string fixture(const std::string& name) {
    return std::string(SPINDEC_FIXTURE_DIR) + "/" + name;
}

PartMatrix identity_over(const std::vector<Partition>& labels) {
    std::vector<RowLabel> rl;
    for (const auto& p : labels)
        rl.push_back(RowLabel{p, std::nullopt});
    PartMatrix m = PartMatrix::zero(rl, labels);
    for (int i = 0; i < m.rows(); ++i)
        m.at(i, i) = 1;
    return m;
}

// Doubled induction step in the block's residue order.
FormalChar induce2(const RouquierBlock& b, int r, const FormalChar& chi) {
    return divided(1 - b.addable_residue, r, OpDir::F,
                   divided(b.addable_residue, r, OpDir::F, chi));
}

// All partitions with the given staircase core and weight.
std::vector<Partition> core_weight_class(const Partition& core, int w) {
    std::vector<Partition> out;
    for (int j = 0; j <= w; ++j)
        for (const Partition& q0 : enumerate_partitions(j, PartitionClass::All))
            for (const Partition& q1 : enumerate_partitions(w - j, PartitionClass::All))
                out.push_back(from_core_and_quotient(core, q0, q1));
    return out;
}

Partition staircase(int c) {
    std::vector<int> parts;
    for (int x = c; x >= 1; --x)
        parts.push_back(x);
    return Partition(std::move(parts));
}

// (a - b) / den, rowwise; requires divisibility and non-negativity.
Partition shrink_diff(const Partition& a, const Partition& b, int den) {
    std::vector<int> parts;
    for (int r = 1; r <= a.length(); ++r)
        parts.push_back((a.part(r) - b.part(r)) / den);
    return Partition(std::move(parts));
}

// β with μ = dup(β) (even) or μ = dup(β)⊔(1) (odd), when it exists.
std::optional<Partition> undup(const Partition& mu, bool odd) {
    int half = (mu.size() - (odd ? 1 : 0)) / 2;
    for (const Partition& beta : enumerate_partitions(half, PartitionClass::All)) {
        Partition cand = dup(beta);
        if (odd)
            cand = disjoint_union(cand, Partition(std::vector<int>{1}));
        if (cand == mu)
            return beta;
    }
    return std::nullopt;
}
} // namespace

TEST_CASE("matrix io round trip") {
    PartMatrix d4 = load_matrix(fixture("schur_d_w4.txt"));
    CHECK(d4.rows() == 5);
    CHECK(d4.cols() == 5);
    CHECK(d4.at(4, 0) == 1);
    CHECK(d4.at(0, 1) == 0);
    std::ostringstream os;
    save_matrix(d4, os);
    std::istringstream is(os.str());
    CHECK(load_matrix(is) == d4);
    // pair row labels round-trip too
    PartMatrix e7 = load_matrix(fixture("spin_e_w7.txt"));
    CHECK(e7.cols() == 15);
    CHECK(e7.rows() == 15);
    CHECK(e7.row_labels[0] == RowLabel{P("3"), P("1")});
    CHECK(e7.row_labels[10] == RowLabel{Partition{}, P("7")});
    std::ostringstream os7;
    save_matrix(e7, os7);
    std::istringstream is7(os7.str());
    CHECK(load_matrix(is7) == e7);
}

TEST_CASE("matrix io error paths") {
    auto from_text = [](const std::string& text) {
        std::istringstream is(text);
        return load_matrix(is);
    };
    CHECK_THROWS_AS(from_text("rows first\n"), Error);
    CHECK_THROWS_AS(from_text("cols: 2; 1,1\n2 1 .\n"), Error);      // missing '|'
    CHECK_THROWS_AS(from_text("cols: 2; 1,1\n2 | 1\n"), Error);      // short row
    CHECK_THROWS_AS(from_text("cols: 2; 1,1\n2 | 1 x\n"), Error);    // bad entry
    CHECK_THROWS_AS(from_text("cols: 2; 1,3\n2 | 1 .\n"), Error);    // bad label
    PartMatrix ok = from_text("cols: 2; 1,1\n2 | 1 .\n1,1 | -1 1\n");
    CHECK(ok.at(1, 0) == -1);
}

TEST_CASE("unitri_inverse") {
    auto p2 = enumerate_partitions(2, PartitionClass::All);
    PartMatrix eye = identity_over(p2);
    CHECK(unitri_inverse(eye) == eye);
    PartMatrix lower = eye;
    lower.at(1, 0) = 1;
    PartMatrix inv = unitri_inverse(lower);
    CHECK(inv.at(1, 0) == -1);
    CHECK(inv.at(0, 0) == 1);
    PartMatrix bad = eye;
    bad.at(0, 0) = 2;
    CHECK_THROWS_AS(unitri_inverse(bad), Error);
    PartMatrix full = eye;
    full.at(0, 1) = 1;
    full.at(1, 0) = 1;
    CHECK_THROWS_AS(unitri_inverse(full), Error);
    // inverses of the shipped fixtures verify M·M⁻¹ = I internally
    for (const char* name : {"schur_d_w4.txt", "qschur_dbar_w4.txt", "schur_d_w5.txt",
                             "qschur_dbar_w5.txt"}) {
        PartMatrix m = load_matrix(fixture(name));
        PartMatrix mi = unitri_inverse(m);
        CHECK(matmul(mi, m) == identity_over(m.col_labels));
    }
}

TEST_CASE("steinberg closed forms against the fixtures") {
    PartMatrix empty;
    // even case: rows dup(α) of D̊⁻¹, w = 2 and 4
    for (int w : {2, 4}) {
        PartMatrix dbar = load_matrix(fixture("qschur_dbar_w" + std::to_string(w) + ".txt"));
        PartMatrix inv = unitri_inverse(dbar);
        for (const Partition& alpha : enumerate_partitions(w / 2, PartitionClass::All)) {
            int row = inv.row_index(RowLabel{dup(alpha), std::nullopt});
            for (int j = 0; j < inv.cols(); ++j)
                CHECK(inv.at(row, j) == steinberg_row(SteinbergKind::Even,
                                                      SteinbergWhich::DbarInv, alpha,
                                                      inv.col_labels[j], empty));
        }
        PartMatrix d = load_matrix(fixture("schur_d_w" + std::to_string(w) + ".txt"));
        PartMatrix dinv = unitri_inverse(d);
        PartMatrix d_small = load_matrix(fixture("schur_d_w" + std::to_string(w / 2) + ".txt"));
        for (const Partition& alpha : enumerate_partitions(w / 2, PartitionClass::All)) {
            int row = dinv.row_index(RowLabel{dup(alpha), std::nullopt});
            for (int j = 0; j < dinv.cols(); ++j)
                CHECK(dinv.at(row, j) ==
                      steinberg_row(SteinbergKind::Even, SteinbergWhich::DInv, alpha,
                                    dinv.col_labels[j], d_small));
        }
    }
    // odd case: rows dup(α)⊔(1), w = 3 and 5
    for (int w : {3, 5}) {
        PartMatrix dbar = load_matrix(fixture("qschur_dbar_w" + std::to_string(w) + ".txt"));
        PartMatrix inv = unitri_inverse(dbar);
        for (const Partition& alpha :
             enumerate_partitions((w - 1) / 2, PartitionClass::All)) {
            Partition rowlab = disjoint_union(dup(alpha), P("1"));
            int row = inv.row_index(RowLabel{rowlab, std::nullopt});
            for (int j = 0; j < inv.cols(); ++j)
                CHECK(inv.at(row, j) == steinberg_row(SteinbergKind::Odd,
                                                      SteinbergWhich::DbarInv, alpha,
                                                      inv.col_labels[j], empty));
        }
    }
    // the handworked example: D̊⁻¹ row (1,1) over P(2) is [-1, 1]
    CHECK(steinberg_row(SteinbergKind::Even, SteinbergWhich::DbarInv, P("1"), P("2"),
                        empty) == -1);
    CHECK(steinberg_row(SteinbergKind::Even, SteinbergWhich::DbarInv, P("1"), P("1,1"),
                        empty) == 1);
    CHECK_THROWS_AS(steinberg_row(SteinbergKind::Even, SteinbergWhich::DbarInv, P("1"),
                                  P("3"), empty),
                    Error);
}

TEST_CASE("adjustment-matrix inverse rows against the half-size matrix") {
    // w = 4: A⁻¹ rows dup(α) against D(w=2)⁻¹
    {
        RouquierBlock b(BlockId{P("3,2,1"), 4});
        Assembled asm_ = assemble_E(b, load_matrix(fixture("schur_d_w4.txt")),
                                    load_matrix(fixture("qschur_dbar_w4.txt")));
        PartMatrix ainv = unitri_inverse(asm_.A);
        PartMatrix d_small_inv = unitri_inverse(load_matrix(fixture("schur_d_w2.txt")));
        for (const Partition& alpha : enumerate_partitions(2, PartitionClass::All)) {
            int row = ainv.row_index(RowLabel{dup(alpha), std::nullopt});
            int srow = d_small_inv.row_index(RowLabel{alpha, std::nullopt});
            for (int j = 0; j < ainv.cols(); ++j) {
                auto beta = undup(ainv.col_labels[j], false);
                if (beta)
                    CHECK(ainv.at(row, j) ==
                          d_small_inv.at(srow, d_small_inv.col_index(*beta)));
                else
                    CHECK(ainv.at(row, j) == 0);
            }
        }
    }
    // w = 5: A⁻¹ rows dup(α)⊔(1) against D(w=2)⁻¹
    {
        RouquierBlock b(BlockId{P("4,3,2,1"), 5});
        Assembled asm_ = assemble_E(b, load_matrix(fixture("schur_d_w5.txt")),
                                    load_matrix(fixture("qschur_dbar_w5.txt")));
        PartMatrix ainv = unitri_inverse(asm_.A);
        PartMatrix d_small_inv = unitri_inverse(load_matrix(fixture("schur_d_w2.txt")));
        for (const Partition& alpha : enumerate_partitions(2, PartitionClass::All)) {
            int row =
                ainv.row_index(RowLabel{disjoint_union(dup(alpha), P("1")), std::nullopt});
            int srow = d_small_inv.row_index(RowLabel{alpha, std::nullopt});
            for (int j = 0; j < ainv.cols(); ++j) {
                auto beta = undup(ainv.col_labels[j], true);
                if (beta)
                    CHECK(ainv.at(row, j) ==
                          d_small_inv.at(srow, d_small_inv.col_index(*beta)));
                else
                    CHECK(ainv.at(row, j) == 0);
            }
        }
    }
}

TEST_CASE("assemble_E reproduces the printed tables") {
    // even weight w = 4
    {
        RouquierBlock b(BlockId{P("3,2,1"), 4});
        Assembled asm_ = assemble_E(b, load_matrix(fixture("schur_d_w4.txt")),
                                    load_matrix(fixture("qschur_dbar_w4.txt")));
        CHECK(asm_.E.rows() == 2);
        CHECK(asm_.E.cols() == 5);
        CHECK(asm_.E.entries ==
              std::vector<std::vector<BigInt>>{{0, 0, 1, 0, 0}, {0, 0, 1, 0, 1}});
        CHECK(asm_.J.entries ==
              std::vector<std::vector<BigInt>>{{0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}});
        CHECK(b.spin_row_label(P("2")) == P("13,1"));
        CHECK(b.spin_row_label(P("1,1")) == P("9,5"));
    }
    // odd weight w = 5
    {
        RouquierBlock b(BlockId{P("4,3,2,1"), 5});
        Assembled asm_ = assemble_E(b, load_matrix(fixture("schur_d_w5.txt")),
                                    load_matrix(fixture("qschur_dbar_w5.txt")));
        CHECK(asm_.E.rows() == 2);
        CHECK(asm_.E.cols() == 7);
        CHECK(asm_.E.entries == std::vector<std::vector<BigInt>>{
                                    {0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0, 1}});
        CHECK(b.spin_row_label(P("2")) == P("15,3,2"));
    }
    // negative adjustment data is refused
    {
        RouquierBlock b(BlockId{P("3,2,1"), 4});
        PartMatrix d = load_matrix(fixture("qschur_dbar_w4.txt"));
        PartMatrix dbar = load_matrix(fixture("schur_d_w4.txt"));
        // swapped arguments make A = D⁻¹·D̊ carry a -1
        CHECK_THROWS_AS(assemble_E(b, d, dbar), Error);
    }
}

TEST_CASE("rouquier block structure") {
    RouquierBlock b(BlockId{P("3,2,1"), 2});
    CHECK(b.tau == P("5,1"));
    CHECK(b.addable_residue == 1);
    CHECK(b.level() == 10);
    CHECK_THROWS_AS(RouquierBlock(BlockId{P("3,2,1"), 5}), Error);
    CHECK_THROWS_AS(RouquierBlock(BlockId{P("3,1"), 1}), Error);
    RouquierBlock even(BlockId{P("2,1"), 3});
    CHECK(even.tau == P("3"));
    CHECK(even.addable_residue == 0);
    RouquierBlock trivial(BlockId{P("1"), 0});
    CHECK(trivial.tau == P("1"));
}

TEST_CASE("block labels for the S10 example block") {
    RouquierBlock b(BlockId{P("3,2,1"), 2});
    BlockLabels labels = block_labels(b);
    std::vector<Partition> expected_ord = {P("7,2,1"), P("5,4,1"), P("5,2,1,1,1"),
                                           P("3,2,2,2,1"), P("3,2,1,1,1,1,1")};
    CHECK(labels.ord == expected_ord);
    CHECK(labels.spin == std::vector<Partition>{P("9,1"), P("5,4,1")});
    CHECK(labels.ord_regular == std::vector<Partition>{P("7,2,1"), P("5,4,1")});
    RouquierBlock small(BlockId{P("1"), 0});
    BlockLabels slabels = block_labels(small);
    CHECK(slabels.ord == std::vector<Partition>{P("1")});
    CHECK(slabels.spin == std::vector<Partition>{P("1")});
    RouquierBlock w4(BlockId{P("3,2,1"), 4});
    CHECK(block_labels(w4).ord_regular.size() == 5);
}

TEST_CASE("psi goldens from the worked example block") {
    RouquierBlock b2(BlockId{P("3,2,1"), 2});
    FormalChar psi0 = psi(RouquierBlock(BlockId{P("3,2,1"), 0}), Partition{});
    CHECK(psi0 == FormalChar::single(L("[3,2,1]")) + FormalChar::single(L("<5,1>")));

    FormalChar psi11 = psi(b2, P("1,1"));
    FormalChar expected11;
    for (const char* s : {"[5,4,1]", "[5,2,1,1,1]", "[3,2,2,2,1]", "<9,1>", "<5,4,1>+",
                          "<5,4,1>-"})
        expected11 += FormalChar::single(L(s));
    CHECK(psi11 == expected11);

    CHECK(inner(psi11, L("[5,4,1]")) == 1);
    CHECK(inner(psi11, L("[7,2,1]")) == 0);
}

TEST_CASE("psi pairings with the regular linear labels, all Rouquier blocks with c <= 4") {
    for (int c = 0; c <= 4; ++c) {
        for (int w = 0; w <= c + 1; ++w) {
            RouquierBlock b(BlockId{staircase(c), w});
            for (const Partition& mu : enumerate_partitions(w, PartitionClass::All)) {
                FormalChar chi = psi(b, mu);
                for (const Partition& nu : enumerate_partitions(w, PartitionClass::All)) {
                    BigRat got = inner(chi, CharLabel::ord(sum(b.block.core, scale(2, nu))));
                    CHECK(got == BigRat(kostka_e(conjugate(mu), nu)));
                }
            }
        }
    }
}

TEST_CASE("psi spin pairings, even w <= 6") {
    // cores of both parities, so both induction orders are exercised
    std::vector<RouquierBlock> blocks;
    for (int w : {2, 4, 6}) {
        blocks.emplace_back(BlockId{staircase(w - 1), w});
        blocks.emplace_back(BlockId{staircase(w), w});
    }
    for (const RouquierBlock& b : blocks) {
        int w = b.weight();
        for (const Partition& mu : enumerate_partitions(w, PartitionClass::All)) {
            FormalChar chi = psi(b, mu);
            auto alpha = undup(mu, false);
            for (const Partition& beta : enumerate_partitions(w / 2, PartitionClass::All)) {
                BigRat got = inner(chi, CharLabel::spin(sum(b.tau, scale(4, beta))));
                if (alpha)
                    CHECK(got == BigRat(kostka_e(conjugate(*alpha), beta)));
                else
                    CHECK(got == 0);
            }
        }
    }
}

TEST_CASE("doubled induction on linear labels matches the Pieri pairing, c <= 5") {
    for (int c = 0; c <= 5; ++c) {
        Partition sigma = staircase(c);
        for (int w = 1; w <= c + 1; ++w) {
            RouquierBlock b(BlockId{sigma, w});
            for (int v = 1; v <= w; ++v)
                for (int r = 1; r <= v; ++r) {
                    for (const Partition& xi : core_weight_class(sigma, v - r)) {
                        FormalChar ind =
                            induce2(b, r, FormalChar::single(CharLabel::ord(xi)));
                        for (const Partition& nu :
                             enumerate_partitions(v, PartitionClass::All)) {
                            BigRat got =
                                inner(ind, CharLabel::ord(sum(sigma, scale(2, nu))));
                            if (xi.is_two_regular()) {
                                Partition kappa_part = shrink_diff(xi, sigma, 2);
                                CHECK(got == BigRat(mul_e(r, SchurPoly::schur(kappa_part))
                                                        .coeff(nu)));
                            } else {
                                CHECK(got == 0);
                            }
                        }
                    }
                }
        }
    }
}

TEST_CASE("doubled induction on spin labels, c <= 5") {
    for (int c = 0; c <= 5; ++c) {
        Partition sigma = staircase(c);
        for (int w = 1; w <= c + 1; ++w) {
            RouquierBlock b(BlockId{sigma, w});
            for (int v = 2; v <= w; v += 2)
                for (int r = 1; r <= v; ++r) {
                    // spin labels with bar-core τ and bar-weight v - r
                    int m = b.tau.size() + 2 * (v - r);
                    for (const Partition& xi :
                         enumerate_partitions(m, PartitionClass::TwoRegular)) {
                        if (four_bar_core(xi).parts != b.tau)
                            continue;
                        FormalChar start = FormalChar::single(
                            sign_class(xi) == SignClass::DPlus
                                ? CharLabel::spin(xi)
                                : CharLabel::spin_signed(xi, +1));
                        FormalChar ind = induce2(b, r, start);
                        bool all_odd = true;
                        for (int x : xi.parts())
                            if (x % 2 == 0)
                                all_odd = false;
                        for (const Partition& beta :
                             enumerate_partitions(v / 2, PartitionClass::All)) {
                            BigRat got =
                                inner(ind, CharLabel::spin(sum(b.tau, scale(4, beta))));
                            if (all_odd && r % 2 == 0) {
                                Partition alpha = shrink_diff(xi, b.tau, 4);
                                CHECK(got ==
                                      BigRat(mul_e(r / 2, SchurPoly::schur(alpha))
                                                 .coeff(beta)));
                            } else {
                                CHECK(got == 0);
                            }
                        }
                    }
                }
        }
    }
}

TEST_CASE("upsilon pairings") {
    for (int w : {2, 3, 4}) {
        RouquierBlock b(BlockId{staircase(w - 1), w});
        for (const Partition& lam : enumerate_partitions(w, PartitionClass::All)) {
            FormalChar ups = upsilon(b, lam);
            for (const Partition& nu : enumerate_partitions(w, PartitionClass::All))
                CHECK(inner(ups, CharLabel::ord(sum(b.block.core, scale(2, nu)))) ==
                      BigRat(kostka_h(lam, nu)));
            if (w % 2 != 0)
                continue;
            bool has_odd = false;
            for (int x : lam.parts())
                if (x % 2)
                    has_odd = true;
            for (const Partition& beta : enumerate_partitions(w / 2, PartitionClass::All)) {
                BigRat got = inner(ups, CharLabel::spin(sum(b.tau, scale(4, beta))));
                if (has_odd) {
                    CHECK(got == 0);
                } else {
                    BigRat expected(kostka_h(scale(1, 2, lam), beta));
                    if ((w / 2) % 2 != 0)
                        expected = -expected;
                    CHECK(got == expected);
                }
            }
        }
    }
}

TEST_CASE("omega: defining property, Kostka diagonal and spin table") {
    RouquierBlock b(BlockId{P("3,2,1"), 4});
    OmegaFamily fam = omega_family(b);
    for (const Partition& lam : fam.labels)
        for (const Partition& nu : fam.labels)
            CHECK(inner(fam.omega.at(lam), CharLabel::ord(sum(b.block.core, scale(2, nu)))) ==
                  BigRat(lam == nu ? 1 : 0));
    // (υ^λ : [σ+2λ]) = 1: Kostka diagonal via the ψ expansion
    for (const Partition& lam : fam.labels)
        CHECK(inner(upsilon(b, lam), CharLabel::ord(sum(b.block.core, scale(2, lam)))) == 1);
    // the printed w = 4 table: rows (2), (1²) of (ω^μ : ⟨τ+4α⟩)
    PartMatrix table = omega_spin_table(b);
    CHECK(table.entries == std::vector<std::vector<BigInt>>{{1, -1, 1, 0, 0},
                                                            {0, 0, 1, -1, 1}});
}

TEST_CASE("omega as a transition combination of upsilons, w <= 4") {
    std::vector<RouquierBlock> blocks;
    for (int w : {1, 2, 3, 4}) {
        blocks.emplace_back(BlockId{staircase(w - 1), w});
        blocks.emplace_back(BlockId{staircase(w), w}); // opposite core parity
    }
    for (const RouquierBlock& b : blocks) {
        OmegaFamily fam = omega_family(b);
        for (const Partition& lam : fam.labels) {
            FormalChar rhs;
            int lrow = fam.coeffs.row_index(RowLabel{conjugate(lam), std::nullopt});
            for (const Partition& mu : fam.labels) {
                BigInt a = fam.coeffs.at(lrow, fam.coeffs.col_index(conjugate(mu)));
                if (a != 0)
                    rhs += BigRat(a) * upsilon(b, mu);
            }
            CHECK(fam.omega.at(lam) == rhs);
        }
    }
}

TEST_CASE("omega spin coefficients equal J*Dbar^-1 from the fixtures") {
    // even weight: (ω^μ : ⟨τ+4α⟩) = (J·D̄⁻¹)_{αμ} = D̄⁻¹_{dup(α),μ}
    for (const BlockId& id : {BlockId{P("1"), 2}, BlockId{P("2,1"), 2},
                              BlockId{P("3,2,1"), 4}, BlockId{P("4,3,2,1"), 4}}) {
        RouquierBlock b(id);
        int w = b.weight();
        OmegaFamily fam = omega_family(b);
        PartMatrix dbar_inv =
            unitri_inverse(load_matrix(fixture("qschur_dbar_w" + std::to_string(w) + ".txt")));
        for (const Partition& alpha : enumerate_partitions(w / 2, PartitionClass::All)) {
            int row = dbar_inv.row_index(RowLabel{dup(alpha), std::nullopt});
            CharLabel spin = CharLabel::spin(sum(b.tau, scale(4, alpha)));
            for (const Partition& mu : fam.labels)
                CHECK(inner(fam.omega.at(mu), spin) ==
                      BigRat(dbar_inv.at(row, dbar_inv.col_index(mu))));
        }
    }
    // odd weight: (ω^μ : ⟨τ+4α⊔(2)⟩) = D̄⁻¹_{dup(α)⊔(1),μ}
    for (const BlockId& id : {BlockId{P("2,1"), 3}, BlockId{P("4,3,2,1"), 5}}) {
        RouquierBlock b(id);
        int w = b.weight();
        OmegaFamily fam = omega_family(b);
        PartMatrix dbar_inv =
            unitri_inverse(load_matrix(fixture("qschur_dbar_w" + std::to_string(w) + ".txt")));
        for (const Partition& alpha :
             enumerate_partitions((w - 1) / 2, PartitionClass::All)) {
            int row =
                dbar_inv.row_index(RowLabel{disjoint_union(dup(alpha), P("1")), std::nullopt});
            CharLabel spin = CharLabel::spin_signed(
                disjoint_union(sum(b.tau, scale(4, alpha)), P("2")), +1);
            for (const Partition& mu : fam.labels)
                CHECK(inner(fam.omega.at(mu), spin) ==
                      BigRat(dbar_inv.at(row, dbar_inv.col_index(mu))));
        }
    }
}

TEST_CASE("conjugation symmetry of omega spin coefficients") {
    for (int w : {2, 4}) {
        RouquierBlock b(BlockId{staircase(w - 1), w});
        OmegaFamily fam = omega_family(b);
        int sign = (w / 2) % 2 == 0 ? 1 : -1;
        for (const Partition& lam : fam.labels)
            for (const Partition& beta : enumerate_partitions(w / 2, PartitionClass::All)) {
                BigRat lhs = inner(fam.omega.at(lam),
                                   CharLabel::spin(sum(b.tau, scale(4, beta))));
                BigRat rhs = inner(fam.omega.at(conjugate(lam)),
                                   CharLabel::spin(sum(b.tau, scale(4, conjugate(beta)))));
                CHECK(lhs == BigRat(sign) * rhs);
            }
    }
}

TEST_CASE("e-bullet restriction ladder at core (4,3,2,1), w = 5 -> 4") {
    Partition sigma = P("4,3,2,1");
    RouquierBlock b5(BlockId{sigma, 5});
    RouquierBlock b4(BlockId{sigma, 4});

    SUBCASE("two-step restriction of linear labels") {
        for (const Partition& lam : enumerate_partitions(4, PartitionClass::All)) {
            Partition target = sum(sigma, scale(2, lam));
            for (const Partition& xi : core_weight_class(sigma, 5)) {
                FormalChar res = e_bullet(sigma, FormalChar::single(CharLabel::ord(xi)));
                BigRat got = inner(res, CharLabel::ord(target));
                bool one_more = false;
                if (xi.is_two_regular()) {
                    Partition mu = shrink_diff(xi, sigma, 2);
                    // μ obtained from λ by adding one node?
                    one_more = mu.size() == lam.size() + 1;
                    if (one_more) {
                        bool contains = true;
                        for (int r = 1; r <= lam.length(); ++r)
                            if (mu.part(r) < lam.part(r))
                                contains = false;
                        one_more = contains;
                    }
                }
                bool column_case = xi == disjoint_union(target, P("1,1"));
                CHECK(got == BigRat((one_more || column_case) ? 1 : 0));
            }
        }
    }

    SUBCASE("two-step restriction of omega families and spin halving") {
        OmegaFamily fam5 = omega_family(b5);
        OmegaFamily fam4 = omega_family(b4);
        for (const Partition& mu : fam5.labels) {
            FormalChar lhs = e_bullet(sigma, fam5.omega.at(mu));
            FormalChar rhs;
            for (const Partition& lam : fam4.labels) {
                bool covered = lam.size() + 1 == mu.size();
                if (covered) {
                    bool contains = true;
                    for (int r = 1; r <= lam.length(); ++r)
                        if (mu.part(r) < lam.part(r))
                            contains = false;
                    covered = contains;
                }
                if (covered)
                    rhs += BigRat(2) * fam4.omega.at(lam);
            }
            CHECK(lhs == rhs);
            // (ω : ⟨τ+4α⊔(2)⟩) = ½ (e•ω : ⟨τ+4α⟩)
            for (const Partition& alpha : enumerate_partitions(2, PartitionClass::All)) {
                Partition spin_label = disjoint_union(sum(b5.tau, scale(4, alpha)), P("2"));
                BigRat direct = inner(fam5.omega.at(mu),
                                      CharLabel::spin_signed(spin_label, +1));
                BigRat via = inner(lhs, CharLabel::spin(sum(b5.tau, scale(4, alpha))));
                CHECK(direct == via / 2);
                // virtual projectives weight both signs equally
                CHECK(direct == inner(fam5.omega.at(mu),
                                      CharLabel::spin_signed(spin_label, -1)));
            }
        }
    }
}

TEST_CASE("the full S~5 decomposition matrix from the omega families") {
    // Block with core (1), weight 2: columns (5) and (3,2). By reciprocity
    // and the weight-2 Schur matrix [[1,0],[1,1]], the projective columns are
    // prj(5) = ω^(2) + ω^(1²) and prj(3,2) = ω^(1²).
    RouquierBlock a(BlockId{P("1"), 2});
    OmegaFamily fam = omega_family(a);
    FormalChar prj5 = fam.omega.at(P("2")) + fam.omega.at(P("1,1"));
    FormalChar prj32 = fam.omega.at(P("1,1"));
    // Block with core (2,1), weight 1: column (4,1) is prj(4,1) = ω^(1).
    RouquierBlock b(BlockId{P("2,1"), 1});
    FormalChar prj41 = omega(b, P("1"));

    struct RowCheck {
        const char* label;
        int col5, col41, col32;
    };
    // every entry of the printed matrix, top part then spin part
    std::vector<RowCheck> rows = {
        {"[5]", 1, 0, 0},        {"[4,1]", 0, 1, 0},      {"[3,2]", 1, 0, 1},
        {"[3,1,1]", 2, 0, 1},    {"[2,2,1]", 1, 0, 1},    {"[2,1,1,1]", 0, 1, 0},
        {"[1,1,1,1,1]", 1, 0, 0}, {"<5>", 0, 0, 1},       {"<4,1>+", 2, 0, 1},
        {"<4,1>-", 2, 0, 1},     {"<3,2>+", 0, 1, 0},     {"<3,2>-", 0, 1, 0},
    };
    for (const RowCheck& row : rows) {
        CharLabel l = parse_label(row.label);
        CHECK(inner(prj5, l) == row.col5);
        CHECK(inner(prj41, l) == row.col41);
        CHECK(inner(prj32, l) == row.col32);
    }
}

TEST_CASE("w = 7 fixture self-checks") {
    PartMatrix e7 = load_matrix(fixture("spin_e_w7.txt"));
    PartMatrix eainv7 = load_matrix(fixture("spin_eainv_w7.txt"));
    CHECK(e7.cols() == 15);
    CHECK(eainv7.cols() == 15);
    // the first three rows of EA⁻¹ must form the odd-weight selector matrix J
    for (const Partition& alpha : enumerate_partitions(3, PartitionClass::All)) {
        int row = eainv7.row_index(RowLabel{alpha, P("1")});
        Partition target = disjoint_union(dup(alpha), P("1"));
        for (int j = 0; j < eainv7.cols(); ++j)
            CHECK(eainv7.at(row, j) == (eainv7.col_labels[j] == target ? 1 : 0));
    }
    // the row labelled ((2),(2,1)) is twice a unit vector: a spin character
    // whose reduction has two equal composition factors
    int six = e7.row_index(RowLabel{P("2"), P("2,1")});
    for (int j = 0; j < e7.cols(); ++j)
        CHECK(e7.at(six, j) == (e7.col_labels[j] == P("2,2,2,1") ? 2 : 0));
}

TEST_CASE("triangularity of the spin rows on the w = 4 and w = 5 fixtures") {
    for (int w : {4, 5}) {
        RouquierBlock b(BlockId{staircase(w - 1), w});
        Assembled asm_ = assemble_E(b,
                                    load_matrix(fixture("schur_d_w" + std::to_string(w) + ".txt")),
                                    load_matrix(fixture("qschur_dbar_w" + std::to_string(w) + ".txt")));
        for (int i = 0; i < asm_.E.rows(); ++i) {
            const Partition& beta = asm_.E.row_labels[i].first;
            for (int j = 0; j < asm_.E.cols(); ++j) {
                auto alpha = undup(asm_.E.col_labels[j], w % 2 != 0);
                if (!alpha) {
                    CHECK(asm_.E.at(i, j) == 0);
                } else if (*alpha == beta) {
                    CHECK(asm_.E.at(i, j) == 1);
                } else if (!dominates(*alpha, beta)) {
                    CHECK(asm_.E.at(i, j) == 0);
                }
            }
        }
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "spindec/characters.hpp"
#include "spindec/degrees.hpp"
#include "spindec/regdouble.hpp"

using namespace spindec;

namespace {
Partition P(const std::string& s) { return parse_partition(s); }
CharLabel L(const std::string& s) { return parse_label(s); }
FormalChar C(const std::string& s) { return FormalChar::single(L(s)); }
} // namespace

TEST_CASE("label text round trip") {
    for (const char* s : {"[9,1]", "<9,1>", "<5,4,1>+", "<5,4,1>-", "phi(7,2,1)", "[()]"})
        CHECK(format_label(parse_label(s)) == s);
    CHECK_THROWS_AS(parse_label("<2,2>"), Error);  // not 2-regular
    CHECK_THROWS_AS(parse_label("<9,1>+"), Error); // ev even, no sign allowed
    CHECK_THROWS_AS(parse_label("phi(2,2)"), Error);
    CHECK_THROWS_AS(parse_label("junk"), Error);
}

TEST_CASE("formal char invariants") {
    FormalChar chi = C("[3,2,1]");
    chi += C("<5,1>");
    CHECK(chi.level() == 6);
    CHECK(format_formal_char(chi) == "1*[3,2,1] + 1*<5,1>");
    CHECK_THROWS_AS(chi.add(L("[2,1]"), 1), Error);      // level mismatch
    CHECK_THROWS_AS(chi.add(L("phi(3,2,1)"), 1), Error); // ordinary/Brauer mix
    FormalChar zero;
    zero.add(L("[2]"), 1);
    zero.add(L("[2]"), -1);
    CHECK(zero.is_zero());
    CHECK(format_formal_char(zero) == "0");
}

TEST_CASE("inner product") {
    FormalChar chi = C("<5,4,1>+") + C("<5,4,1>-");
    CHECK(inner(chi, L("<5,4,1>+")) == 1);
    CHECK(inner(chi, L("<9,1>")) == 0);
    CHECK(inner(FormalChar{}, L("[5]")) == 0);
    CHECK_THROWS_AS(inner(chi, L("phi(5,4,1)")), Error);
}

TEST_CASE("ordinary single steps") {
    CHECK(e_step(1, C("[2]")) == C("[1]"));
    CHECK(e_step(0, C("[1]")) == C("[()]"));
    CHECK(e_step(1, C("[1]")).is_zero());
    CHECK(f_step(0, C("[()]")) == C("[1]"));
}

TEST_CASE("spin branching golden: e0 on <11,9,7,5,4,1>") {
    FormalChar res = e_step(0, C("<11,9,7,5,4,1>+"));
    FormalChar expected = C("<11,9,7,5,4>+") + C("<11,9,7,5,3,1>") + C("<11,8,7,5,4,1>");
    CHECK(res == expected);
}

TEST_CASE("divided power golden: e0^(2) on <11,9,7,5,4,1>") {
    FormalChar res = divided(0, 2, OpDir::E, C("<11,9,7,5,4,1>+"));
    FormalChar expected = C("<11,9,7,5,3>") + C("<11,8,7,5,4>");
    expected += BigRat(1, 2) * (C("<11,9,7,4,3,1>+") + C("<11,9,7,4,3,1>-"));
    expected += C("<11,8,7,5,3,1>+") + C("<11,8,7,5,3,1>-");
    CHECK(res == expected);
    CHECK(divided(0, 1, OpDir::E, C("<11,9,7,5,4,1>+")) ==
          e_step(0, C("<11,9,7,5,4,1>+")));
}

TEST_CASE("eps and max operators") {
    CHECK(eps(1, OpDir::E, C("[2]")) == 1);
    CHECK(max_op(1, OpDir::E, C("[2]")) == C("[1]"));
    CHECK_THROWS_AS(eps(0, OpDir::E, FormalChar{}), Error);
    // e_i^max [λ] = [λ⁻], stripping all removable i-nodes
    for (int n = 1; n <= 12; ++n)
        for (const Partition& lam : enumerate_partitions(n, PartitionClass::All))
            for (int i = 0; i < 2; ++i) {
                std::vector<int> parts = lam.parts();
                for (const Node& nd :
                     boundary_nodes(lam, BoundaryKind::Removable, NodeFilter::Residue, i))
                    parts[nd.row - 1] -= 1;
                Partition stripped(std::move(parts));
                if (stripped == lam)
                    continue;
                CHECK(max_op(i, OpDir::E, FormalChar::single(CharLabel::ord(lam))) ==
                      FormalChar::single(CharLabel::ord(stripped)));
            }
}

TEST_CASE("spin max operators land on the spin strip") {
    for (int n = 1; n <= 14; ++n)
        for (const Partition& lam : enumerate_partitions(n, PartitionClass::TwoRegular))
            for (int i = 0; i < 2; ++i) {
                Partition down = spin_strip(lam, i).result;
                if (down == lam)
                    continue;
                FormalChar res =
                    max_op(i, OpDir::E, FormalChar::single(CharLabel::spin(lam)));
                REQUIRE(!res.is_zero());
                for (const auto& [label, c] : res.terms()) {
                    CHECK(label.part == down);
                    CHECK(c > 0);
                }
            }
}

TEST_CASE("restriction completeness on ordinary labels") {
    for (int n = 1; n <= 12; ++n)
        for (const Partition& lam : enumerate_partitions(n, PartitionClass::All)) {
            FormalChar chi = FormalChar::single(CharLabel::ord(lam));
            FormalChar total = e_step(0, chi) + e_step(1, chi);
            BigRat coeff_sum = 0;
            for (const auto& [label, c] : total.terms())
                coeff_sum += c;
            CHECK(coeff_sum ==
                  BigRat(boundary_nodes(lam, BoundaryKind::Removable).size()));
        }
}

TEST_CASE("branching respects block contents") {
    for (int n = 2; n <= 14; ++n)
        for (const Partition& lam : enumerate_partitions(n, PartitionClass::TwoRegular))
            for (int i = 0; i < 2; ++i) {
                Content before = block_content(spin_block(lam));
                FormalChar res = e_step(i, FormalChar::single(CharLabel::spin(lam)));
                for (const auto& [label, c] : res.terms()) {
                    Content after = block_content(spin_block(label.part));
                    CHECK(after.zeros == before.zeros - (i == 0 ? 1 : 0));
                    CHECK(after.ones == before.ones - (i == 1 ? 1 : 0));
                }
            }
}

TEST_CASE("divided-power branching closed forms, n <= 18") {
    for (int n = 2; n <= 18; ++n) {
        for (const Partition& lam : enumerate_partitions(n, PartitionClass::TwoRegular)) {
            bool lam_plus = sign_class(lam) == SignClass::DPlus;
            FormalChar start = FormalChar::single(
                lam_plus ? CharLabel::spin(lam) : CharLabel::spin_signed(lam, +1));
            for (int i = 0; i < 2; ++i) {
                FormalChar power = start;
                for (int r = 1; r <= n; ++r) {
                    power = e_step(i, power);
                    if (power.is_zero())
                        break;
                    FormalChar div = BigRat(1, factorial(r)) * power;
                    std::set<Partition> seen;
                    for (const auto& [label, coeff] : div.terms())
                        seen.insert(label.part);
                    for (const Partition& mu : seen) {
                        // c = #{x : λ∖μ meets both columns x and x+1}
                        std::set<int> cols;
                        for (int row = 1; row <= lam.length(); ++row)
                            for (int col = mu.part(row) + 1; col <= lam.part(row); ++col)
                                cols.insert(col);
                        int c = 0;
                        for (int x : cols)
                            if (cols.count(x + 1))
                                ++c;
                        bool mu_plus = sign_class(mu) == SignClass::DPlus;
                        int exponent;
                        if (lam_plus && mu_plus)
                            exponent = r / 2 - c;
                        else if (lam_plus && !mu_plus)
                            exponent = (r + 1) / 2 - c;
                        else if (!lam_plus && mu_plus)
                            exponent = (r - 1) / 2 - c;
                        else
                            exponent = r / 2 - c;
                        BigRat expected = exponent >= 0 ? BigRat(pow2(exponent))
                                                        : BigRat(1, pow2(-exponent));
                        BigRat got;
                        if (mu_plus) {
                            got = inner(div, CharLabel::spin(mu));
                        } else {
                            got = inner(div, CharLabel::spin_signed(mu, +1)) +
                                  inner(div, CharLabel::spin_signed(mu, -1));
                        }
                        CHECK(got == expected);
                    }
                }
            }
        }
    }
}

TEST_CASE("kleshchev golden: (15,11,8,6,5,2), i = 0") {
    KleshchevData data = kleshchev(P("15,11,8,6,5,2"), 0);
    CHECK(data.signature.word() == "-++---+");
    CHECK(data.reduced.word() == "--+");
    REQUIRE(data.normal.size() == 2);
    CHECK(data.normal[0] == Node{1, 15});
    CHECK(data.normal[1] == Node{6, 2});
    REQUIRE(data.conormal.size() == 1);
    CHECK(data.conormal[0] == Node{7, 1});
    CHECK(brauer_max(P("15,11,8,6,5,2"), 0, OpDir::E) == P("14,11,8,6,5,1"));
    CHECK(brauer_max(P("15,11,8,6,5,2"), 0, OpDir::F) == P("15,11,8,6,5,2,1"));
}

TEST_CASE("kleshchev small cases") {
    // both addable nodes of (1) have residue 1, so both are conormal
    KleshchevData one = kleshchev(P("1"), 1);
    REQUIRE(one.conormal.size() == 2);
    CHECK(one.conormal[0] == Node{1, 2});
    CHECK(one.conormal[1] == Node{2, 1});
    CHECK(brauer_max(P("1"), 1, OpDir::F) == P("2,1"));
    KleshchevData empty = kleshchev(Partition{}, 0);
    REQUIRE(empty.conormal.size() == 1);
    CHECK(empty.conormal[0] == Node{1, 1});
    CHECK(brauer_max(Partition{}, 0, OpDir::F) == P("1"));
    CHECK_THROWS_AS(kleshchev(P("2,2"), 0), Error);
}

TEST_CASE("modular branching crystal identities") {
    for (int n = 1; n <= 16; ++n)
        for (const Partition& mu : enumerate_partitions(n, PartitionClass::TwoRegular))
            for (int i = 0; i < 2; ++i) {
                KleshchevData data = kleshchev(mu, i);
                Partition down = brauer_max(mu, i, OpDir::E);
                CHECK(down.is_two_regular());
                CHECK(brauer_max(mu, i, OpDir::F).is_two_regular());
                KleshchevData after = kleshchev(down, i);
                // removing every normal i-node leaves none, and frees as many
                // conormal slots
                CHECK(after.normal.empty());
                CHECK(after.conormal.size() == data.conormal.size() + data.normal.size());
            }
}

TEST_CASE("operator images of sign-symmetric vectors are sign-symmetric") {
    std::mt19937 rng(20240801u);
    for (int n = 6; n <= 14; n += 2) {
        auto d = enumerate_partitions(n, PartitionClass::TwoRegular);
        for (int trial = 0; trial < 10; ++trial) {
            FormalChar chi;
            for (const Partition& lam : d) {
                int c = static_cast<int>(rng() % 3);
                if (c == 0)
                    continue;
                if (sign_class(lam) == SignClass::DPlus) {
                    chi.add(CharLabel::spin(lam), c);
                } else {
                    chi.add(CharLabel::spin_signed(lam, +1), c);
                    chi.add(CharLabel::spin_signed(lam, -1), c);
                }
            }
            if (chi.is_zero())
                continue;
            for (int i = 0; i < 2; ++i)
                for (OpDir dir : {OpDir::E, OpDir::F}) {
                    FormalChar img = divided(i, 2, dir, chi);
                    for (const auto& [label, c] : img.terms())
                        if (label.kind == CharLabel::Kind::SpinSigned)
                            CHECK(c == inner(img, CharLabel::spin_signed(label.part,
                                                                         -label.sign)));
                }
        }
    }
}

TEST_CASE("e_bullet order from the core") {
    // core (3,2,1): restriction order is e1∘e0 (e0 acts first)
    FormalChar chi = C("[5,4,1]");
    CHECK(e_bullet(P("3,2,1"), chi) == e_step(1, e_step(0, chi)));
    CHECK(e_bullet(P("2,1"), C("[4,3,1]")) == e_step(0, e_step(1, C("[4,3,1]"))));
    CHECK(e_bullet(P("3,2,1"), FormalChar{}).is_zero());
    CHECK_THROWS_AS(e_bullet(P("3,1"), chi), Error);
}

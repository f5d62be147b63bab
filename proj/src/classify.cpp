#include "spindec/classify.hpp"

#include <algorithm>
#include <map>

#include "spindec/degrees.hpp"
#include "spindec/numeric.hpp"

namespace spindec {

bool is_2carter(const Partition& lam) {
    for (int r = 1; r <= lam.length(); ++r) {
        long long d1 = lam.part(r) - lam.part(r + 1) + 1;
        long long d2 = lam.part(r + 1) - lam.part(r + 2);
        if ((1LL << val2(d1)) <= d2)
            return false;
    }
    return true;
}

bool linear_irreducible(const Partition& lam) {
    return is_2carter(lam) || is_2carter(conjugate(lam)) ||
           lam == Partition(std::vector<int>{2, 2});
}

namespace {

struct OddDecomp {
    Partition tau;   // i-form staircase of length k
    Partition alpha; // (odds - τ)/4
};

// Decompose a strictly decreasing list of odd parts, all ≡ res (mod 4), as
// τ+4α with τ = (4(k-1)+res, …, res).
std::optional<OddDecomp> odd_decomp(const std::vector<int>& odds, int res) {
    int k = static_cast<int>(odds.size());
    std::vector<int> tau_parts, alpha_parts;
    for (int r = 1; r <= k; ++r) {
        int t = 4 * (k - r) + res;
        int o = odds[r - 1];
        if (o % 4 != res % 4 || o < t)
            return std::nullopt;
        tau_parts.push_back(t);
        alpha_parts.push_back((o - t) / 4);
    }
    return OddDecomp{Partition(std::move(tau_parts)), Partition(std::move(alpha_parts))};
}

} // namespace

std::optional<SepForm> separated(const Partition& lam) {
    if (!lam.is_two_regular())
        throw Error(ErrorKind::NotTwoRegular, "separated needs a 2-regular partition");
    std::vector<int> odds, evens;
    for (int x : lam.parts())
        (x % 2 ? odds : evens).push_back(x);
    if (evens.size() > 1)
        return std::nullopt;
    int b = evens.empty() ? 0 : evens[0] / 2;
    for (int i : {1, 3}) {
        bool ok = true;
        for (int x : odds)
            if (x % 4 != i)
                ok = false;
        // an even part 2b forces all smaller parts ≡ i (mod 4) to be present
        for (int v = i; ok && v < 2 * b; v += 4)
            if (std::find(odds.begin(), odds.end(), v) == odds.end())
                ok = false;
        if (!ok)
            continue;
        auto dec = odd_decomp(odds, i);
        if (dec)
            return SepForm{dec->tau, dec->alpha, b};
    }
    return std::nullopt;
}

const char* to_string(IrredCase c) {
    switch (c) {
    case IrredCase::X3: return "X3";
    case IrredCase::X1: return "X1";
    case IrredCase::Y3: return "Y3";
    case IrredCase::Y1: return "Y1";
    case IrredCase::Z: return "Z";
    case IrredCase::Stair321: return "(3,2,1)";
    case IrredCase::None: return "none";
    }
    return "none";
}

Verdict spin_irreducible(const Partition& lam) {
    if (!lam.is_two_regular())
        throw Error(ErrorKind::NotTwoRegular, "spin_irreducible needs a 2-regular partition");
    std::vector<int> odds, evens;
    for (int x : lam.parts())
        (x % 2 ? odds : evens).push_back(x);
    int l = static_cast<int>(odds.size());
    // X3/X1: all parts odd, λ = τ+4α with α 2-Carter
    if (evens.empty()) {
        if (auto dec = odd_decomp(odds, 3); dec && is_2carter(dec->alpha))
            return Verdict{true, IrredCase::X3, SepForm{dec->tau, dec->alpha, 0}};
        if (auto dec = odd_decomp(odds, 1); dec && is_2carter(dec->alpha))
            return Verdict{true, IrredCase::X1, SepForm{dec->tau, dec->alpha, 0}};
    }
    // Y3/Y1: a single even part 2, λ = τ+4α⊔(2)
    if (evens == std::vector<int>{2}) {
        if (auto dec = odd_decomp(odds, 3); dec && is_2carter(dec->alpha))
            return Verdict{true, IrredCase::Y3, SepForm{dec->tau, dec->alpha, 1}};
        if (auto dec = odd_decomp(odds, 1);
            dec && dec->alpha.length() <= l - 1 && is_2carter(dec->alpha))
            return Verdict{true, IrredCase::Y1, SepForm{dec->tau, dec->alpha, 1}};
    }
    // Z: (2b) with b ≥ 2, or (4b-2,1) with b ≥ 2
    if (lam.length() == 1 && lam.part(1) % 2 == 0 && lam.part(1) >= 4)
        return Verdict{true, IrredCase::Z, std::nullopt};
    if (lam.length() == 2 && lam.part(2) == 1 && lam.part(1) % 4 == 2 && lam.part(1) >= 6)
        return Verdict{true, IrredCase::Z, std::nullopt};
    if (lam == Partition(std::vector<int>{3, 2, 1}))
        return Verdict{true, IrredCase::Stair321, std::nullopt};
    return Verdict{false, IrredCase::None, std::nullopt};
}

SuiteReport verify_suite(SuiteName name, int max_n) {
    if (max_n > 40)
        throw Error(ErrorKind::BoundExceeded, "verify_suite accepts max_n <= 40");
    SuiteReport report;
    report.max_n = max_n;
    switch (name) {
    case SuiteName::MinimalDegree: {
        report.name = "minimal_degree";
        for (int n = 1; n <= max_n; ++n) {
            std::map<Partition, BigInt> min_degree;
            std::vector<std::pair<Partition, Partition>> items; // (λ, dblreg)
            for (const Partition& lam : enumerate_partitions(n, PartitionClass::TwoRegular)) {
                Partition key = dblreg(lam);
                BigInt deg = spin_degree(lam);
                auto it = min_degree.find(key);
                if (it == min_degree.end() || deg < it->second)
                    min_degree[key] = deg;
                items.emplace_back(lam, key);
            }
            for (const auto& [lam, key] : items) {
                ++report.checked;
                if (spin_irreducible(lam).irreducible &&
                    spin_degree(lam) != min_degree.at(key))
                    report.failures.push_back(format_partition(lam) +
                                              " classified irreducible but not of minimal "
                                              "degree in its regularised-double class");
            }
        }
        break;
    }
    case SuiteName::StripClosure: {
        report.name = "strip_closure";
        for (int n = 1; n <= max_n; ++n) {
            for (const Partition& lam : enumerate_partitions(n, PartitionClass::TwoRegular)) {
                if (!spin_irreducible(lam).irreducible)
                    continue;
                for (int i = 0; i < 2; ++i) {
                    Partition down = spin_strip(lam, i).result;
                    if (down == lam || down.empty())
                        continue;
                    ++report.checked;
                    if (!spin_irreducible(down).irreducible)
                        report.failures.push_back(format_partition(lam) + " irreducible but " +
                                                  format_partition(down) +
                                                  " (spin strip " + std::to_string(i) +
                                                  ") is not");
                }
            }
        }
        break;
    }
    case SuiteName::SeparatedConsistency: {
        report.name = "separated_consistency";
        for (int n = 1; n <= max_n; ++n) {
            for (const Partition& lam : enumerate_partitions(n, PartitionClass::TwoRegular)) {
                auto sep = separated(lam);
                if (!sep)
                    continue;
                ++report.checked;
                bool expected = sep->b <= 1 && is_2carter(sep->alpha);
                if (spin_irreducible(lam).irreducible != expected)
                    report.failures.push_back(format_partition(lam) +
                                              ": classifier disagrees with the separated "
                                              "criterion");
            }
        }
        break;
    }
    }
    return report;
}

} // namespace spindec

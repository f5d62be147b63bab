#include "spindec/degrees.hpp"

#include <algorithm>

namespace spindec {

BigInt spin_degree(const Partition& lam) {
    if (!lam.is_two_regular())
        throw Error(ErrorKind::NotTwoRegular, "spin_degree needs a 2-regular partition");
    int n = lam.size();
    int m = lam.length();
    BigRat deg(pow2((n - m) / 2) * factorial(n));
    for (int x : lam.parts())
        deg /= factorial(x);
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            deg *= BigRat(lam.part(i) - lam.part(j), lam.part(i) + lam.part(j));
    if (denominator(deg) != 1)
        throw Error(ErrorKind::InternalNonIntegral,
                    "bar-length formula gave a non-integer for " + format_partition(lam));
    return numerator(deg);
}

namespace {

// a, a-4, a-8, …, b (inclusive arithmetic run, step -4).
std::vector<int> run4(int a, int b) {
    std::vector<int> out;
    for (int x = a; x >= b; x -= 4)
        out.push_back(x);
    return out;
}

Partition from_runs(std::initializer_list<std::vector<int>> runs) {
    std::vector<int> parts;
    for (const auto& r : runs)
        parts.insert(parts.end(), r.begin(), r.end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

} // namespace

std::pair<Partition, Partition> family(FamilyKind kind, int a, int m) {
    switch (kind) {
    case FamilyKind::Base: {
        if (m < 2)
            throw Error(ErrorKind::ParameterOutOfRange, "base family needs m >= 2");
        Partition lam = from_runs({{4 * m}, run4(4 * m - 3, 5)});
        Partition mu = from_runs({{4 * m + 1}, run4(4 * m - 3, 9), {4}});
        return {lam, mu};
    }
    case FamilyKind::First: {
        if (a < 1 || m < 0)
            throw Error(ErrorKind::ParameterOutOfRange, "need a >= 1 and m >= 0");
        Partition lam = from_runs({run4(4 * a + 4 * m - 3, 1), {4 * a}});
        Partition mu = from_runs({run4(4 * a + 4 * m + 1, 4 * m + 5), run4(4 * m - 3, 1)});
        return {lam, mu};
    }
    case FamilyKind::Second: {
        if (a < 1 || m < 0)
            throw Error(ErrorKind::ParameterOutOfRange, "need a >= 1 and m >= 0");
        Partition lam = from_runs({run4(4 * a + 4 * m + 1, 1), {4 * a + 2}});
        Partition mu =
            from_runs({run4(4 * a + 4 * m + 5, 4 * m + 9), run4(4 * m + 1, 5), {2, 1}});
        return {lam, mu};
    }
    case FamilyKind::Third: {
        if (a < 1 || m < 0)
            throw Error(ErrorKind::ParameterOutOfRange, "need a >= 1 and m >= 0");
        Partition lam = from_runs({run4(4 * a + 4 * m - 1, 3), {4 * a}});
        Partition mu = from_runs({run4(4 * a + 4 * m + 3, 4 * m + 7), run4(4 * m - 1, 3)});
        return {lam, mu};
    }
    case FamilyKind::Fourth: {
        if (a < 1 || m < 0)
            throw Error(ErrorKind::ParameterOutOfRange, "need a >= 1 and m >= 0");
        Partition lam = from_runs({run4(4 * a + 4 * m - 1, 3), {4 * a + 2}});
        Partition mu =
            from_runs({run4(4 * a + 4 * m + 3, 4 * m + 7), run4(4 * m - 1, 3), {2}});
        return {lam, mu};
    }
    }
    throw Error(ErrorKind::ParameterOutOfRange, "unknown family kind");
}

std::pair<Partition, Partition> row_extend(const Partition& lam, const Partition& mu,
                                           int l) {
    if (lam.size() != mu.size())
        throw Error(ErrorKind::SizeMismatch, "row_extend needs |λ| = |μ|");
    if (l <= lam.part(1) || l <= mu.part(1))
        throw Error(ErrorKind::RowTooShort, "new row must exceed both first parts");
    auto prefix = [l](const Partition& p) {
        std::vector<int> parts{l};
        parts.insert(parts.end(), p.parts().begin(), p.parts().end());
        return Partition(std::move(parts));
    };
    return {prefix(lam), prefix(mu)};
}

} // namespace spindec

#include "spindec/regdouble.hpp"

#include <algorithm>

namespace spindec {

bool is_bar_core(const Partition& p) {
    if (p.empty())
        return true;
    int last = p.part(p.length());
    if (last != 1 && last != 3)
        return false;
    for (int r = 1; r <= p.length(); ++r)
        if (p.part(r) != last + 4 * (p.length() - r))
            return false;
    return true;
}

Partition bar_core_3(int l) {
    std::vector<int> parts;
    for (int k = l; k >= 1; --k)
        parts.push_back(4 * k - 1);
    return Partition(std::move(parts));
}

Partition bar_core_1(int l) {
    std::vector<int> parts;
    for (int k = l; k >= 1; --k)
        parts.push_back(4 * k - 3);
    return Partition(std::move(parts));
}

namespace {

std::vector<int> line_counts(const Partition& lam, int (*line)(const Node&)) {
    std::vector<int> counts;
    for (int r = 1; r <= lam.length(); ++r) {
        for (int c = 1; c <= lam.part(r); ++c) {
            int l = line(Node{r, c});
            if (l >= static_cast<int>(counts.size()))
                counts.resize(l + 1, 0);
            ++counts[l];
        }
    }
    while (!counts.empty() && counts.back() == 0)
        counts.pop_back();
    return counts;
}

} // namespace

std::vector<int> ladder_counts(const Partition& lam) { return line_counts(lam, &ladder); }

std::vector<int> slope_counts(const Partition& lam) {
    if (!lam.is_two_regular())
        throw Error(ErrorKind::NotTwoRegular, "slope_counts needs a 2-regular partition");
    return line_counts(lam, &slope);
}

Partition regularize(const Partition& lam) {
    std::vector<int> counts = ladder_counts(lam);
    // Row r of λ^reg collects one node from every ladder holding ≥ r nodes.
    std::vector<int> rows;
    for (int r = 1;; ++r) {
        int len = 0;
        for (int c : counts)
            if (c >= r)
                ++len;
        if (len == 0)
            break;
        rows.push_back(len);
    }
    return Partition(std::move(rows));
}

Partition double_parts(const Partition& lam) {
    if (!lam.is_two_regular())
        throw Error(ErrorKind::NotTwoRegular, "double needs a 2-regular partition");
    std::vector<int> parts;
    for (int x : lam.parts()) {
        parts.push_back((x + 1) / 2);
        parts.push_back(x / 2);
    }
    return Partition(std::move(parts));
}

Partition dblreg(const Partition& lam) { return regularize(double_parts(lam)); }

BarCore four_bar_core(const Partition& lam) {
    if (!lam.is_two_regular())
        throw Error(ErrorKind::NotTwoRegular, "four_bar_core needs a 2-regular partition");
    std::vector<int> parts = lam.parts();
    bool changed = true;
    while (changed) {
        changed = false;
        // even-part removal
        for (std::size_t i = 0; i < parts.size();) {
            if (parts[i] % 2 == 0) {
                parts.erase(parts.begin() + static_cast<long>(i));
                changed = true;
            } else {
                ++i;
            }
        }
        // pair removal: lexicographically first pair with sum ≡ 0 (mod 4)
        bool removed = true;
        while (removed) {
            removed = false;
            for (std::size_t i = 0; i < parts.size() && !removed; ++i) {
                for (std::size_t j = i + 1; j < parts.size() && !removed; ++j) {
                    if ((parts[i] + parts[j]) % 4 == 0) {
                        parts.erase(parts.begin() + static_cast<long>(j));
                        parts.erase(parts.begin() + static_cast<long>(i));
                        removed = true;
                        changed = true;
                    }
                }
            }
        }
        // part reduction by 4
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] >= 5 &&
                std::find(parts.begin(), parts.end(), parts[i] - 4) == parts.end()) {
                parts[i] -= 4;
                std::sort(parts.begin(), parts.end(), std::greater<int>());
                changed = true;
                break;
            }
        }
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return BarCore{Partition(std::move(parts))};
}

int four_bar_weight(const Partition& lam) {
    return (lam.size() - four_bar_core(lam).parts.size()) / 2;
}

BlockId spin_block(const Partition& lam) {
    Partition dbl = double_parts(lam);
    return BlockId{two_core(dbl), two_weight(dbl)};
}

Content block_content(const BlockId& b) {
    Content c = two_content(b.core);
    c.zeros += b.weight;
    c.ones += b.weight;
    return c;
}

bool is_s_partition(const Partition& lam) {
    if (!lam.is_two_regular())
        throw Error(ErrorKind::NotTwoRegular, "is_s_partition needs a 2-regular partition");
    std::vector<int> counts = ladder_counts(lam);
    for (std::size_t l = 1; l < counts.size(); l += 2)
        if (counts[l] % 2 != 0)
            return false;
    return true;
}

bool is_rouquier(const BlockId& b) { return b.weight <= b.core.length() + 1; }

} // namespace spindec

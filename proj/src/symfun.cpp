#include "spindec/symfun.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <vector>

#include "spindec/abacus.hpp"

namespace spindec {

void SchurPoly::add(const Partition& p, const BigInt& c) {
    if (c == 0)
        return;
    auto it = coeffs.find(p);
    if (it == coeffs.end()) {
        coeffs.emplace(p, c);
    } else {
        it->second += c;
        if (it->second == 0)
            coeffs.erase(it);
    }
}

BigInt SchurPoly::coeff(const Partition& p) const {
    auto it = coeffs.find(p);
    return it == coeffs.end() ? BigInt(0) : it->second;
}

SchurPoly SchurPoly::schur(const Partition& p) {
    SchurPoly f;
    f.coeffs.emplace(p, 1);
    return f;
}

namespace {

// All ν ⊇ λ with |ν/λ| = r and at most one added node per column.
void horizontal_strips(const Partition& lam, int r, std::vector<Partition>& out) {
    std::vector<int> nu;
    int rows = lam.length() + 1;
    std::function<void(int, int)> rec = [&](int row, int rem) {
        if (row > rows) {
            if (rem == 0)
                out.push_back(Partition(nu));
            return;
        }
        int lo = lam.part(row);
        int hi = (row == 1) ? lam.part(1) + rem : std::min(lam.part(row - 1), lo + rem);
        for (int v = lo; v <= hi; ++v) {
            if (row > 1 && v > nu[row - 2])
                continue;
            nu.push_back(v);
            rec(row + 1, rem - (v - lo));
            nu.pop_back();
        }
    };
    rec(1, r);
}

// All ν ⊇ λ with |ν/λ| = r and at most one added node per row.
void vertical_strips(const Partition& lam, int r, std::vector<Partition>& out) {
    std::vector<int> nu;
    int rows = lam.length() + r;
    std::function<void(int, int)> rec = [&](int row, int rem) {
        if (rem == 0 && lam.part(row) == 0) {
            out.push_back(Partition(nu));
            return;
        }
        if (row > rows)
            return;
        for (int add = 0; add <= std::min(1, rem); ++add) {
            int v = lam.part(row) + add;
            if (v == 0)
                continue;
            if (row > 1 && v > nu[row - 2])
                continue;
            nu.push_back(v);
            rec(row + 1, rem - add);
            nu.pop_back();
        }
    };
    rec(1, r);
}

} // namespace

SchurPoly mul_h(int r, const SchurPoly& f) {
    if (r == 0)
        return f;
    SchurPoly out;
    for (const auto& [lam, c] : f.coeffs) {
        std::vector<Partition> strips;
        horizontal_strips(lam, r, strips);
        for (const auto& nu : strips)
            out.add(nu, c);
    }
    return out;
}

SchurPoly mul_e(int r, const SchurPoly& f) {
    if (r == 0)
        return f;
    SchurPoly out;
    for (const auto& [lam, c] : f.coeffs) {
        std::vector<Partition> strips;
        vertical_strips(lam, r, strips);
        for (const auto& nu : strips)
            out.add(nu, c);
    }
    return out;
}

SchurPoly h_to_schur(const Partition& mu) {
    SchurPoly f = SchurPoly::schur(Partition{});
    for (int i = mu.length(); i >= 1; --i)
        f = mul_h(mu.part(i), f);
    return f;
}

SchurPoly e_to_schur(const Partition& mu) {
    SchurPoly f = SchurPoly::schur(Partition{});
    for (int i = mu.length(); i >= 1; --i)
        f = mul_e(mu.part(i), f);
    return f;
}

BigInt kostka_h(const Partition& mu, const Partition& lam) {
    return h_to_schur(mu).coeff(lam);
}

BigInt kostka_e(const Partition& mu, const Partition& lam) {
    return e_to_schur(mu).coeff(lam);
}

BigInt lr_coeff(const Partition& alpha, const Partition& beta, const Partition& gamma) {
    if (alpha.size() != beta.size() + gamma.size())
        throw Error(ErrorKind::SizeMismatch, "lr_coeff needs |α| = |β| + |γ|");
    // β must fit inside α
    for (int r = 1; r <= beta.length(); ++r)
        if (beta.part(r) > alpha.part(r))
            return 0;
    int values = gamma.length();
    // Cells of α/β in reading order: rows top to bottom, right to left.
    struct Cell {
        int row, col;
    };
    std::vector<Cell> cells;
    for (int r = 1; r <= alpha.length(); ++r)
        for (int c = alpha.part(r); c > beta.part(r); --c)
            cells.push_back(Cell{r, c});
    std::vector<int> counts(values + 1, 0);
    std::vector<std::vector<int>> fill(alpha.length() + 1,
                                       std::vector<int>(alpha.part(1) + 1, 0));
    BigInt total = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            total += 1;
            return;
        }
        auto [r, c] = cells[idx];
        int lo = 1, hi = values;
        // weak increase along rows: bounded by the right neighbour (already placed)
        if (c < alpha.part(r) && c + 1 > beta.part(r))
            hi = std::min(hi, fill[r][c + 1]);
        // strict increase down columns
        if (r > 1 && c <= alpha.part(r - 1) && c > beta.part(r - 1))
            lo = std::max(lo, fill[r - 1][c] + 1);
        else if (r > 1 && c <= beta.part(r - 1))
            lo = 1; // above cell is in β, no constraint
        for (int v = lo; v <= hi; ++v) {
            if (counts[v] + 1 > gamma.part(v))
                continue;
            // lattice condition on the reverse reading word
            if (v > 1 && counts[v] + 1 > counts[v - 1])
                continue;
            ++counts[v];
            fill[r][c] = v;
            rec(idx + 1);
            fill[r][c] = 0;
            --counts[v];
        }
    };
    rec(0);
    return total;
}

BigInt kappa(const Partition& alpha, const Partition& mu) {
    if (!two_core(mu).empty())
        return 0;
    if (mu.size() != 2 * alpha.size())
        throw Error(ErrorKind::SizeMismatch, "kappa needs |μ| = 2|α|");
    auto [q0, q1] = two_quotient(mu);
    return lr_coeff(alpha, q0, q1);
}

namespace {

// Polynomials in the elementary basis: e_μ ↦ coefficient.
using EPoly = std::map<Partition, BigInt>;

void eadd(EPoly& f, const Partition& p, const BigInt& c) {
    if (c == 0)
        return;
    auto it = f.find(p);
    if (it == f.end()) {
        f.emplace(p, c);
    } else {
        it->second += c;
        if (it->second == 0)
            f.erase(it);
    }
}

// multiply by e_r (index union)
EPoly emul_er(int r, const EPoly& f) {
    if (r == 0)
        return f;
    EPoly out;
    Partition er(std::vector<int>{r});
    for (const auto& [mu, c] : f)
        eadd(out, disjoint_union(mu, er), c);
    return out;
}

EPoly emul(const EPoly& f, const EPoly& g) {
    EPoly out;
    for (const auto& [mu, c] : f)
        for (const auto& [nu, d] : g)
            eadd(out, disjoint_union(mu, nu), c * d);
    return out;
}

// h_k in the elementary basis; the cache is filled under a lock and entries
// are immutable afterwards.
EPoly h_in_e(int k) {
    static std::vector<EPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (cache.empty()) {
        EPoly one;
        one.emplace(Partition{}, 1);
        cache.push_back(one); // h_0 = 1
    }
    while (static_cast<int>(cache.size()) <= k) {
        int m = static_cast<int>(cache.size());
        EPoly hm;
        for (int i = 1; i <= m; ++i) {
            EPoly term = emul_er(i, cache[m - i]);
            BigInt sgn = (i % 2 == 1) ? 1 : -1;
            for (const auto& [mu, c] : term)
                eadd(hm, mu, sgn * c);
        }
        cache.push_back(std::move(hm));
    }
    return cache[k];
}

} // namespace

BigInt spade(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size())
        throw Error(ErrorKind::SizeMismatch, "spade needs |λ| = |μ|");
    EPoly f;
    f.emplace(Partition{}, 1);
    for (int i = 1; i <= lam.length(); ++i)
        f = emul(f, h_in_e(lam.part(i)));
    auto it = f.find(mu);
    return it == f.end() ? BigInt(0) : it->second;
}

} // namespace spindec

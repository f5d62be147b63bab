#include "spindec/abacus.hpp"

#include <algorithm>
#include <set>

namespace spindec {

AbacusDisplay display(const Partition& lam) {
    return display(lam, std::max(lam.length(), 1));
}

AbacusDisplay display(const Partition& lam, int depth) {
    if (depth < std::max(lam.length(), 1))
        throw Error(ErrorKind::ParameterOutOfRange, "display depth below partition length");
    AbacusDisplay d;
    d.depth = depth;
    for (int r = 1; r <= depth; ++r)
        d.beads.push_back(static_cast<long long>(lam.part(r)) - r);
    return d;
}

Partition partition_of(const AbacusDisplay& d) {
    std::vector<long long> beads = d.beads;
    std::sort(beads.begin(), beads.end(), std::greater<long long>());
    std::vector<int> parts;
    for (std::size_t i = 0; i < beads.size(); ++i)
        parts.push_back(static_cast<int>(beads[i] + static_cast<long long>(i) + 1));
    return Partition(std::move(parts));
}

namespace {

struct SlideResult {
    AbacusDisplay core;
    int slides = 0;
    int vertical = 0;
};

// Slide beads down two positions at a time until no bead has an empty
// position directly above it on its runner. A slide p -> p-2 is a vertical
// rim 2-hook exactly when p-1 is occupied.
SlideResult slide_to_core(const AbacusDisplay& d) {
    std::set<long long> occ(d.beads.begin(), d.beads.end());
    auto occupied = [&](long long p) { return p < -d.depth || occ.count(p) > 0; };
    SlideResult res;
    bool moved = true;
    while (moved) {
        moved = false;
        // lowest beads first
        for (long long p : std::vector<long long>(occ.begin(), occ.end())) {
            if (!occupied(p - 2)) {
                if (occupied(p - 1))
                    ++res.vertical;
                occ.erase(p);
                occ.insert(p - 2);
                ++res.slides;
                moved = true;
            }
        }
    }
    res.core.depth = d.depth;
    res.core.beads.assign(occ.rbegin(), occ.rend());
    return res;
}

} // namespace

Partition two_core(const AbacusDisplay& d) {
    return partition_of(slide_to_core(d).core);
}

int two_weight(const AbacusDisplay& d) { return slide_to_core(d).slides; }

int two_sign(const AbacusDisplay& d) {
    return slide_to_core(d).vertical % 2 == 0 ? 1 : -1;
}

Partition two_core(const Partition& lam) { return two_core(display(lam)); }

int two_weight(const Partition& lam) { return two_weight(display(lam)); }

int two_sign(const Partition& lam) { return two_sign(display(lam)); }

std::pair<Partition, Partition> two_quotient(const Partition& lam) {
    return two_quotient(display(lam));
}

std::pair<Partition, Partition> two_quotient(const AbacusDisplay& d) {
    Partition q[2];
    for (int a = 0; a < 2; ++a) {
        std::vector<long long> runner;
        for (long long p : d.beads)
            if (((p % 2) + 2) % 2 == a)
                runner.push_back(p);
        std::sort(runner.begin(), runner.end(), std::greater<long long>());
        std::set<long long> occ(runner.begin(), runner.end());
        // Quotient part i counts the empty positions on the runner strictly
        // below the i-th highest bead; reading upward from the lowest bead is
        // not workable with the infinite tail of occupied positions.
        std::vector<int> parts;
        for (long long b : runner) {
            int gaps = 0;
            for (long long p = b - 2; p >= -d.depth - 1; p -= 2)
                if (p >= -d.depth && occ.count(p) == 0)
                    ++gaps;
            parts.push_back(gaps);
        }
        q[a] = Partition(std::move(parts));
    }
    return {q[0], q[1]};
}

Content two_content(const Partition& lam) {
    Content c;
    for (int r = 1; r <= lam.length(); ++r) {
        for (int col = 1; col <= lam.part(r); ++col) {
            if ((col - r) % 2 == 0)
                ++c.zeros;
            else
                ++c.ones;
        }
    }
    return c;
}

bool is_staircase(const Partition& p) {
    int c = p.length();
    for (int r = 1; r <= c; ++r)
        if (p.part(r) != c - r + 1)
            return false;
    return true;
}

Partition from_core_and_quotient(const Partition& core, const Partition& q0,
                                 const Partition& q1) {
    if (!is_staircase(core))
        throw Error(ErrorKind::NotAStaircase, format_partition(core));
    int w = q0.size() + q1.size();
    int depth = core.length() + 2 * w + 2;
    AbacusDisplay d = display(core, depth);
    std::vector<long long> out;
    for (int a = 0; a < 2; ++a) {
        const Partition& q = (a == 0) ? q0 : q1;
        std::vector<long long> runner;
        for (long long p : d.beads)
            if (((p % 2) + 2) % 2 == a)
                runner.push_back(p);
        std::sort(runner.begin(), runner.end(), std::greater<long long>());
        for (std::size_t j = 0; j < runner.size(); ++j)
            out.push_back(runner[j] + 2 * static_cast<long long>(q.part(static_cast<int>(j) + 1)));
    }
    AbacusDisplay built{out, depth};
    return partition_of(built);
}

} // namespace spindec

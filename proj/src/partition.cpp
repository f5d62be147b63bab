#include "spindec/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace spindec {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw Error(ErrorKind::NotWeaklyDecreasing, "parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw Error(ErrorKind::NotWeaklyDecreasing,
                        "parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::is_two_regular() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] == parts_[i - 1])
            return false;
    return true;
}

bool Partition::contains_part(int v) const {
    return std::binary_search(parts_.begin(), parts_.end(), v, std::greater<int>());
}

Partition parse_partition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s == "()" || s == "0" || s == "-" || s.empty())
        return Partition{};
    std::vector<int> parts;
    std::size_t pos = 0;
    auto read_int = [&]() -> int {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start)
            throw Error(ErrorKind::MalformedText, "expected integer in '" + text + "'");
        return std::stoi(s.substr(start, pos - start));
    };
    while (true) {
        int part = read_int();
        int mult = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            mult = read_int();
        }
        if (part <= 0 || mult <= 0)
            throw Error(ErrorKind::MalformedText, "parts and multiplicities must be positive");
        parts.insert(parts.end(), mult, part);
        if (pos == s.size())
            break;
        if (s[pos] != ',')
            throw Error(ErrorKind::MalformedText, "unexpected character in '" + text + "'");
        ++pos;
    }
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i - 1] < parts[i])
            throw Error(ErrorKind::NotWeaklyDecreasing, "'" + text + "' is not weakly decreasing");
    return Partition(std::move(parts));
}

std::string format_partition(const Partition& p) {
    if (p.empty())
        return "()";
    std::ostringstream out;
    for (int i = 0; i < p.length(); ++i) {
        if (i)
            out << ',';
        out << p.parts()[i];
    }
    return out.str();
}

Partition conjugate(const Partition& p) {
    std::vector<int> out;
    for (int r = 1; r <= p.part(1); ++r) {
        int count = 0;
        for (int x : p.parts())
            if (x >= r)
                ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

bool dominates(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size())
        throw Error(ErrorKind::SizeMismatch, "dominance compares partitions of equal size");
    int a = 0, b = 0;
    int len = std::max(lam.length(), mu.length());
    for (int r = 1; r <= len; ++r) {
        a += lam.part(r);
        b += mu.part(r);
        if (a < b)
            return false;
    }
    return true;
}

bool strictly_dominates(const Partition& lam, const Partition& mu) {
    return lam != mu && dominates(lam, mu);
}

Partition scale(int num, int den, const Partition& p) {
    std::vector<int> out;
    for (int x : p.parts()) {
        long long v = static_cast<long long>(x) * num;
        if (v % den != 0)
            throw Error(ErrorKind::NonIntegralScale,
                        "scaling " + format_partition(p) + " by " + std::to_string(num) + "/" +
                            std::to_string(den));
        out.push_back(static_cast<int>(v / den));
    }
    return Partition(std::move(out));
}

Partition scale(int a, const Partition& p) { return scale(a, 1, p); }

Partition sum(const Partition& lam, const Partition& mu) {
    std::vector<int> out;
    int len = std::max(lam.length(), mu.length());
    for (int r = 1; r <= len; ++r)
        out.push_back(lam.part(r) + mu.part(r));
    return Partition(std::move(out));
}

Partition disjoint_union(const Partition& lam, const Partition& mu) {
    std::vector<int> out = lam.parts();
    out.insert(out.end(), mu.parts().begin(), mu.parts().end());
    std::sort(out.begin(), out.end(), std::greater<int>());
    return Partition(std::move(out));
}

Partition dup(const Partition& alpha) {
    std::vector<int> out;
    for (int x : alpha.parts()) {
        out.push_back(x);
        out.push_back(x);
    }
    return Partition(std::move(out));
}

int residue(const Node& p) {
    int d = (p.col - p.row) % 2;
    return d < 0 ? d + 2 : d;
}

int spin_residue(const Node& p) { return (p.col / 2) % 2; }

int ladder(const Node& p) { return p.row + p.col - 2; }

int slope(const Node& p) { return 2 * p.row + p.col / 2 - 2; }

NodeData node_data(const Node& p) {
    return NodeData{residue(p), spin_residue(p), ladder(p), slope(p)};
}

std::vector<Node> boundary_nodes(const Partition& p, BoundaryKind which,
                                 NodeFilter filter, int i) {
    std::vector<Node> out;
    auto keep = [&](const Node& nd) {
        switch (filter) {
        case NodeFilter::None: return true;
        case NodeFilter::Residue: return residue(nd) == i;
        case NodeFilter::SpinResidue: return spin_residue(nd) == i;
        }
        return true;
    };
    if (which == BoundaryKind::Removable) {
        for (int r = 1; r <= p.length(); ++r) {
            if (p.part(r) > p.part(r + 1)) {
                Node nd{r, p.part(r)};
                if (keep(nd))
                    out.push_back(nd);
            }
        }
    } else {
        for (int r = 1; r <= p.length() + 1; ++r) {
            if (p.part(r) < p.part(r - 1) || r == 1) {
                Node nd{r, p.part(r) + 1};
                if (keep(nd))
                    out.push_back(nd);
            }
        }
    }
    return out;
}

SpinStrip spin_strip(const Partition& lam, int i) {
    if (!lam.is_two_regular())
        throw Error(ErrorKind::NotTwoRegular, "spin_strip needs a 2-regular partition");
    int len = lam.length();
    std::vector<int> kept(len, 0);
    // Rows are stripped bottom-up: each row drops the longest suffix of
    // spin-residue-i columns compatible with 2-regularity below.
    for (int r = len; r >= 1; --r) {
        int lo = lam.part(r);
        while (lo >= 1 && spin_residue(Node{r, lo}) == i)
            --lo;
        int below = (r == len) ? 0 : kept[r];
        int need = below > 0 ? below + 1 : 0;
        kept[r - 1] = std::max(lo, need);
    }
    std::vector<Node> removed;
    for (int r = 1; r <= len; ++r)
        for (int c = kept[r - 1] + 1; c <= lam.part(r); ++c)
            removed.push_back(Node{r, c});
    return SpinStrip{Partition(std::move(kept)), std::move(removed)};
}

int ev(const Partition& p) {
    int count = 0;
    for (int x : p.parts())
        if (x % 2 == 0)
            ++count;
    return count;
}

SignClass sign_class(const Partition& p) {
    if (!p.is_two_regular())
        return SignClass::NotTwoRegular;
    return ev(p) % 2 == 0 ? SignClass::DPlus : SignClass::DMinus;
}

namespace {

void enumerate_rec(int rem, int maxpart, bool distinct, std::vector<int>& acc,
                   std::vector<Partition>& out) {
    if (rem == 0) {
        out.push_back(Partition(acc));
        return;
    }
    int top = std::min(rem, maxpart);
    for (int p = top; p >= 1; --p) {
        if (distinct && !acc.empty() && acc.back() == p)
            continue;
        acc.push_back(p);
        enumerate_rec(rem - p, distinct ? p - 1 : p, distinct, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n, PartitionClass cls, int bound) {
    if (n < 0 || n > bound)
        throw Error(ErrorKind::BoundExceeded,
                    "enumerate_partitions(" + std::to_string(n) + ") exceeds bound " +
                        std::to_string(bound));
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate_rec(n, n, cls == PartitionClass::TwoRegular, acc, out);
    return out;
}

} // namespace spindec

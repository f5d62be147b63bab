#include "spindec/characters.hpp"

#include <algorithm>
#include <sstream>

#include "spindec/abacus.hpp"
#include "spindec/degrees.hpp"
#include "spindec/regdouble.hpp"

namespace spindec {

CharLabel CharLabel::ord(Partition p) { return CharLabel{Kind::Ord, std::move(p), 0}; }

CharLabel CharLabel::spin(Partition p) {
    switch (sign_class(p)) {
    case SignClass::DPlus: return CharLabel{Kind::Spin, std::move(p), 0};
    case SignClass::DMinus: return CharLabel{Kind::SpinSigned, std::move(p), +1};
    case SignClass::NotTwoRegular: break;
    }
    throw Error(ErrorKind::NotTwoRegular, "spin labels need 2-regular partitions");
}

CharLabel CharLabel::spin_signed(Partition p, int sign) {
    if (sign_class(p) != SignClass::DMinus)
        throw Error(ErrorKind::NotTwoRegular,
                    "signed spin labels need ev(λ) odd: " + format_partition(p));
    if (sign != 1 && sign != -1)
        throw Error(ErrorKind::ParameterOutOfRange, "sign must be ±1");
    return CharLabel{Kind::SpinSigned, std::move(p), sign};
}

CharLabel CharLabel::brauer(Partition p) {
    if (!p.is_two_regular())
        throw Error(ErrorKind::NotTwoRegular, "Brauer labels need 2-regular partitions");
    return CharLabel{Kind::Brauer, std::move(p), 0};
}

std::string format_label(const CharLabel& l) {
    switch (l.kind) {
    case CharLabel::Kind::Ord: return "[" + format_partition(l.part) + "]";
    case CharLabel::Kind::Spin: return "<" + format_partition(l.part) + ">";
    case CharLabel::Kind::SpinSigned:
        return "<" + format_partition(l.part) + ">" + (l.sign > 0 ? "+" : "-");
    case CharLabel::Kind::Brauer: return "phi(" + format_partition(l.part) + ")";
    }
    return {};
}

CharLabel parse_label(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.size() >= 2 && s.front() == '[' && s.back() == ']')
        return CharLabel::ord(parse_partition(s.substr(1, s.size() - 2)));
    if (s.size() >= 2 && s.front() == '<') {
        if (s.back() == '>')
            return CharLabel::spin(parse_partition(s.substr(1, s.size() - 2)));
        char sign = s.back();
        if ((sign == '+' || sign == '-') && s[s.size() - 2] == '>')
            return CharLabel::spin_signed(parse_partition(s.substr(1, s.size() - 3)),
                                          sign == '+' ? 1 : -1);
    }
    if (s.rfind("phi(", 0) == 0 && s.back() == ')')
        return CharLabel::brauer(parse_partition(s.substr(4, s.size() - 5)));
    throw Error(ErrorKind::ParseError, "bad character label '" + text + "'");
}

FormalChar FormalChar::single(const CharLabel& l, const BigRat& c) {
    FormalChar chi;
    chi.add(l, c);
    return chi;
}

void FormalChar::add(const CharLabel& l, const BigRat& c) {
    if (c == 0)
        return;
    if (terms_.empty()) {
        level_ = l.level();
    } else {
        if (l.level() != level_)
            throw Error(ErrorKind::MixedLevels, "labels of different n in one vector");
        bool brauer = terms_.begin()->first.kind == CharLabel::Kind::Brauer;
        if (brauer != (l.kind == CharLabel::Kind::Brauer))
            throw Error(ErrorKind::MixedKinds, "ordinary and Brauer labels cannot mix");
    }
    auto it = terms_.find(l);
    if (it == terms_.end()) {
        terms_.emplace(l, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
    if (terms_.empty())
        level_ = -1;
}

FormalChar& FormalChar::operator+=(const FormalChar& o) {
    for (const auto& [l, c] : o.terms_)
        add(l, c);
    return *this;
}

FormalChar& FormalChar::operator*=(const BigRat& c) {
    if (c == 0) {
        terms_.clear();
        level_ = -1;
        return *this;
    }
    for (auto& [l, coeff] : terms_)
        coeff *= c;
    return *this;
}

std::string format_formal_char(const FormalChar& chi) {
    if (chi.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [l, c] : chi.terms()) {
        if (!first)
            out << " + ";
        first = false;
        out << c << "*" << format_label(l);
    }
    return out.str();
}

BigRat inner(const FormalChar& chi, const CharLabel& label) {
    if (!chi.is_zero()) {
        bool brauer = chi.terms().begin()->first.kind == CharLabel::Kind::Brauer;
        if (brauer != (label.kind == CharLabel::Kind::Brauer))
            throw Error(ErrorKind::MixedKinds, "inner product across label kinds");
    }
    auto it = chi.terms().find(label);
    return it == chi.terms().end() ? BigRat(0) : it->second;
}

namespace {

// Spin branching bookkeeping shared by e_step and f_step: contribute the
// image labels for source label `src` moving to 2-regular target `target`.
void add_spin_targets(FormalChar& out, const CharLabel& src, const Partition& target,
                      const BigRat& c) {
    bool target_minus = sign_class(target) == SignClass::DMinus;
    if (src.kind == CharLabel::Kind::Spin) {
        if (target_minus) {
            out.add(CharLabel::spin_signed(target, +1), c);
            out.add(CharLabel::spin_signed(target, -1), c);
        } else {
            out.add(CharLabel::spin(target), c);
        }
    } else { // SpinSigned: D⁻ targets keep the sign, D⁺ targets drop it
        if (target_minus)
            out.add(CharLabel::spin_signed(target, src.sign), c);
        else
            out.add(CharLabel::spin(target), c);
    }
}

FormalChar step(int i, OpDir dir, const FormalChar& chi) {
    FormalChar out;
    BoundaryKind bk = dir == OpDir::E ? BoundaryKind::Removable : BoundaryKind::Addable;
    for (const auto& [label, c] : chi.terms()) {
        if (label.kind == CharLabel::Kind::Brauer)
            throw Error(ErrorKind::MixedKinds,
                        "branching operators act on ordinary/spin labels; use "
                        "brauer_max for Brauer characters");
        const Partition& lam = label.part;
        if (label.kind == CharLabel::Kind::Ord) {
            for (const Node& nd : boundary_nodes(lam, bk, NodeFilter::Residue, i)) {
                std::vector<int> parts = lam.parts();
                if (dir == OpDir::E) {
                    parts[nd.row - 1] -= 1;
                } else {
                    if (nd.row > static_cast<int>(parts.size()))
                        parts.push_back(1);
                    else
                        parts[nd.row - 1] += 1;
                }
                out.add(CharLabel::ord(Partition(std::move(parts))), c);
            }
        } else {
            for (const Node& nd : boundary_nodes(lam, bk, NodeFilter::SpinResidue, i)) {
                std::vector<int> parts = lam.parts();
                if (dir == OpDir::E) {
                    parts[nd.row - 1] -= 1;
                } else {
                    if (nd.row > static_cast<int>(parts.size()))
                        parts.push_back(1);
                    else
                        parts[nd.row - 1] += 1;
                }
                Partition target(std::move(parts));
                if (!target.is_two_regular())
                    continue; // spin labels live on 2-regular partitions
                add_spin_targets(out, label, target, c);
            }
        }
    }
    return out;
}

} // namespace

FormalChar e_step(int i, const FormalChar& chi) { return step(i, OpDir::E, chi); }
FormalChar f_step(int i, const FormalChar& chi) { return step(i, OpDir::F, chi); }

FormalChar divided(int i, int r, OpDir dir, const FormalChar& chi) {
    FormalChar out = chi;
    for (int k = 0; k < r; ++k)
        out = step(i, dir, out);
    out *= BigRat(1, factorial(r));
    return out;
}

int eps(int i, OpDir dir, const FormalChar& chi) {
    if (chi.is_zero())
        throw Error(ErrorKind::ZeroCharacter, "eps of the zero character");
    int r = 0;
    FormalChar cur = chi;
    while (true) {
        FormalChar next = step(i, dir, cur);
        if (next.is_zero())
            return r;
        cur = std::move(next);
        ++r;
    }
}

FormalChar max_op(int i, OpDir dir, const FormalChar& chi) {
    return divided(i, eps(i, dir, chi), dir, chi);
}

std::string Signature::word() const {
    std::string w;
    for (const auto& [node, sym] : symbols)
        w += sym;
    return w;
}

KleshchevData kleshchev(const Partition& mu, int i) {
    if (!mu.is_two_regular())
        throw Error(ErrorKind::NotTwoRegular, "kleshchev needs a 2-regular partition");
    KleshchevData out;
    std::vector<Node> addable = boundary_nodes(mu, BoundaryKind::Addable, NodeFilter::Residue, i);
    std::vector<Node> removable =
        boundary_nodes(mu, BoundaryKind::Removable, NodeFilter::Residue, i);
    std::size_t a = 0, r = 0;
    while (a < addable.size() || r < removable.size()) {
        // removable node (row k, col μ_k) precedes the addable node of row k+1
        bool take_removable =
            r < removable.size() &&
            (a >= addable.size() || removable[r].row <= addable[a].row);
        if (take_removable)
            out.signature.symbols.emplace_back(removable[r++], '-');
        else
            out.signature.symbols.emplace_back(addable[a++], '+');
    }
    for (const auto& entry : out.signature.symbols) {
        if (entry.second == '-' && !out.reduced.symbols.empty() &&
            out.reduced.symbols.back().second == '+')
            out.reduced.symbols.pop_back();
        else
            out.reduced.symbols.push_back(entry);
    }
    for (const auto& [node, sym] : out.reduced.symbols) {
        if (sym == '-')
            out.normal.push_back(node);
        else
            out.conormal.push_back(node);
    }
    return out;
}

Partition brauer_max(const Partition& mu, int i, OpDir dir) {
    KleshchevData data = kleshchev(mu, i);
    std::vector<int> parts = mu.parts();
    if (dir == OpDir::E) {
        for (const Node& nd : data.normal)
            parts[nd.row - 1] -= 1;
    } else {
        for (const Node& nd : data.conormal) {
            if (nd.row > static_cast<int>(parts.size()))
                parts.push_back(1);
            else
                parts[nd.row - 1] += 1;
        }
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    Partition out(std::move(parts));
    if (!out.is_two_regular())
        throw Error(ErrorKind::NotTwoRegular, "modular branching left a 2-singular result");
    return out;
}

FormalChar e_bullet(const Partition& core, const FormalChar& chi) {
    if (!is_staircase(core))
        throw Error(ErrorKind::NotAStaircase, format_partition(core));
    int c = core.length();
    if (c % 2 == 0)
        return e_step(0, e_step(1, chi));
    return e_step(1, e_step(0, chi));
}

} // namespace spindec

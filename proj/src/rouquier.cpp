#include "spindec/rouquier.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "spindec/abacus.hpp"

namespace spindec {

std::string format_row_label(const RowLabel& l) {
    if (!l.second)
        return format_partition(l.first);
    return "(" + format_partition(l.first) + "|" + format_partition(*l.second) + ")";
}

namespace {

RowLabel parse_row_label(const std::string& text) {
    if (!text.empty() && text.front() == '(' && text.back() == ')' &&
        text.find('|') != std::string::npos) {
        std::string inner = text.substr(1, text.size() - 2);
        std::size_t bar = inner.rfind('|');
        return RowLabel{parse_partition(inner.substr(0, bar)),
                        parse_partition(inner.substr(bar + 1))};
    }
    return RowLabel{parse_partition(text), std::nullopt};
}

} // namespace

int PartMatrix::row_index(const RowLabel& l) const {
    for (int i = 0; i < rows(); ++i)
        if (row_labels[i] == l)
            return i;
    throw Error(ErrorKind::LabelMismatch, "no row " + format_row_label(l));
}

int PartMatrix::col_index(const Partition& p) const {
    for (int i = 0; i < cols(); ++i)
        if (col_labels[i] == p)
            return i;
    throw Error(ErrorKind::LabelMismatch, "no column " + format_partition(p));
}

PartMatrix PartMatrix::zero(std::vector<RowLabel> rows, std::vector<Partition> cols) {
    PartMatrix m;
    m.row_labels = std::move(rows);
    m.col_labels = std::move(cols);
    m.entries.assign(m.row_labels.size(), std::vector<BigInt>(m.col_labels.size(), 0));
    return m;
}

PartMatrix matmul(const PartMatrix& a, const PartMatrix& b) {
    if (a.cols() != b.rows())
        throw Error(ErrorKind::SizeMismatch, "matrix product dimension mismatch");
    for (int i = 0; i < a.cols(); ++i)
        if (b.row_labels[i].second || a.col_labels[i] != b.row_labels[i].first)
            throw Error(ErrorKind::LabelMismatch, "inner labels disagree in product");
    PartMatrix out = PartMatrix::zero(a.row_labels, b.col_labels);
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0)
                continue;
            for (int j = 0; j < b.cols(); ++j)
                out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

namespace {

// Labels must be listed so that a strictly dominating partition never comes
// later; the unitriangular inversions below rely on this.
void check_dominance_compatible(const std::vector<Partition>& labels) {
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (labels[j].size() == labels[i].size() &&
                strictly_dominates(labels[j], labels[i]))
                throw Error(ErrorKind::NotUnitriangular,
                            "label order is not dominance-compatible");
}

} // namespace

PartMatrix unitri_inverse(const PartMatrix& m) {
    int n = m.rows();
    if (n != m.cols())
        throw Error(ErrorKind::NotUnitriangular, "inverse of a non-square matrix");
    std::vector<Partition> labels;
    for (const auto& l : m.row_labels) {
        if (l.second || (n && m.col_labels[labels.size()] != l.first))
            throw Error(ErrorKind::LabelMismatch, "rows and columns must carry the same labels");
        labels.push_back(l.first);
    }
    check_dominance_compatible(labels);
    bool lower = true, upper = true;
    for (int i = 0; i < n; ++i) {
        if (m.at(i, i) != 1)
            throw Error(ErrorKind::NotUnitriangular, "diagonal entry differs from 1");
        for (int j = i + 1; j < n; ++j) {
            if (m.at(i, j) != 0)
                lower = false;
            if (m.at(j, i) != 0)
                upper = false;
        }
    }
    if (!lower && !upper)
        throw Error(ErrorKind::NotUnitriangular, "matrix is not triangular");
    PartMatrix inv = PartMatrix::zero(m.row_labels, m.col_labels);
    for (int i = 0; i < n; ++i)
        inv.at(i, i) = 1;
    // forward substitution, row by row
    if (lower) {
        for (int i = 0; i < n; ++i)
            for (int j = i - 1; j >= 0; --j) {
                BigInt s = 0;
                for (int k = j + 1; k <= i; ++k)
                    s += inv.at(i, k) * m.at(k, j);
                inv.at(i, j) = -s;
            }
    } else {
        for (int i = n - 1; i >= 0; --i)
            for (int j = i + 1; j < n; ++j) {
                BigInt s = 0;
                for (int k = i; k < j; ++k)
                    s += inv.at(i, k) * m.at(k, j);
                inv.at(i, j) = -s;
            }
    }
    PartMatrix prod = matmul(m, inv);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (prod.at(i, j) != (i == j ? 1 : 0))
                throw Error(ErrorKind::NotUnitriangular, "inverse verification failed");
    return inv;
}

PartMatrix load_matrix(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw Error(ErrorKind::ParseError, "empty matrix file");
    auto trim = [](std::string s) {
        std::size_t a = s.find_first_not_of(" \t\r");
        std::size_t b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
    };
    line = trim(line);
    if (line.rfind("cols:", 0) != 0)
        throw Error(ErrorKind::ParseError, "matrix file must start with 'cols:'");
    PartMatrix m;
    {
        std::string cols = line.substr(5);
        std::stringstream ss(cols);
        std::string item;
        while (std::getline(ss, item, ';')) {
            item = trim(item);
            if (!item.empty())
                m.col_labels.push_back(parse_partition(item));
        }
    }
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty())
            continue;
        std::size_t bar = line.find('|');
        // a '|' inside a "(α|β)" row label is not the separator
        if (!line.empty() && line.front() == '(') {
            int depth = 0;
            std::size_t close = std::string::npos;
            for (std::size_t i = 0; i < line.size(); ++i) {
                if (line[i] == '(')
                    ++depth;
                else if (line[i] == ')' && --depth == 0) {
                    close = i;
                    break;
                }
            }
            if (close == std::string::npos)
                throw Error(ErrorKind::ParseError, "unterminated row label");
            bar = line.find('|', close);
        }
        if (bar == std::string::npos)
            throw Error(ErrorKind::ParseError, "row without '|': " + line);
        m.row_labels.push_back(parse_row_label(trim(line.substr(0, bar))));
        std::vector<BigInt> row;
        std::stringstream ss(line.substr(bar + 1));
        std::string tok;
        while (ss >> tok) {
            if (tok == ".") {
                row.push_back(0);
            } else {
                try {
                    row.push_back(BigInt(tok));
                } catch (const std::exception&) {
                    throw Error(ErrorKind::ParseError, "bad matrix entry '" + tok + "'");
                }
            }
        }
        if (row.size() != m.col_labels.size())
            throw Error(ErrorKind::ParseError, "row length mismatch: " + line);
        m.entries.push_back(std::move(row));
    }
    return m;
}

PartMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot open " + path);
    return load_matrix(in);
}

void save_matrix(const PartMatrix& m, std::ostream& out) {
    out << "cols:";
    for (int j = 0; j < m.cols(); ++j)
        out << (j ? "; " : " ") << format_partition(m.col_labels[j]);
    out << "\n";
    for (int i = 0; i < m.rows(); ++i) {
        out << format_row_label(m.row_labels[i]) << " |";
        for (int j = 0; j < m.cols(); ++j) {
            if (m.at(i, j) == 0)
                out << " .";
            else
                out << ' ' << m.at(i, j);
        }
        out << "\n";
    }
}

void save_matrix(const PartMatrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorKind::ParseError, "cannot open " + path + " for writing");
    save_matrix(m, out);
}

RouquierBlock::RouquierBlock(const BlockId& b) : block(b) {
    if (!is_staircase(b.core))
        throw Error(ErrorKind::NotAStaircase, format_partition(b.core));
    if (!is_rouquier(b))
        throw Error(ErrorKind::NotRouquier,
                    "weight " + std::to_string(b.weight) + " exceeds c+1 for core " +
                        format_partition(b.core));
    int c = b.core.length();
    addable_residue = c % 2;
    std::vector<int> tau_parts;
    for (int x = 2 * c - 1; x >= 1; x -= 4)
        tau_parts.push_back(x);
    tau = Partition(std::move(tau_parts));
}

Partition RouquierBlock::spin_row_label(const Partition& alpha) const {
    Partition base = sum(tau, scale(4, alpha));
    if (block.weight % 2 == 0)
        return base;
    return disjoint_union(base, Partition(std::vector<int>{2}));
}

BlockLabels block_labels(const RouquierBlock& b) {
    BlockLabels out;
    int w = b.weight();
    int n = b.level();
    for (int j = 0; j <= w; ++j)
        for (const Partition& q0 : enumerate_partitions(j, PartitionClass::All))
            for (const Partition& q1 : enumerate_partitions(w - j, PartitionClass::All))
                out.ord.push_back(from_core_and_quotient(b.block.core, q0, q1));
    std::sort(out.ord.begin(), out.ord.end(),
              [](const Partition& a, const Partition& c) { return c < a; });
    for (const Partition& alpha : enumerate_partitions(w, PartitionClass::All))
        out.ord_regular.push_back(sum(b.block.core, scale(2, alpha)));
    for (const Partition& lam : enumerate_partitions(n, PartitionClass::TwoRegular)) {
        if (four_bar_core(lam).parts != b.tau)
            continue;
        // every spin label in a Rouquier block has the τ+4α⊔2β shape
        std::vector<int> odds, evens;
        for (int x : lam.parts())
            (x % 2 ? odds : evens).push_back(x);
        Partition odd_part((std::vector<int>(odds)));
        int k = odd_part.length();
        int res = b.tau.empty() ? 3 : b.tau.part(b.tau.length());
        bool ok = true;
        for (int x : odds)
            if (x % 4 != res % 4)
                ok = false;
        if (ok) {
            for (int r = 1; r <= k; ++r)
                if ((odd_part.part(r) - (4 * (k - r) + res)) % 4 != 0 ||
                    odd_part.part(r) < 4 * (k - r) + res)
                    ok = false;
        }
        for (std::size_t s = 1; s < evens.size(); ++s)
            if (evens[s] == evens[s - 1])
                ok = false;
        if (!ok)
            throw Error(ErrorKind::ShapeMismatch,
                        format_partition(lam) + " is not of the form τ+4α⊔2β");
        out.spin.push_back(lam);
    }
    return out;
}

FormalChar psi(const RouquierBlock& b, const Partition& mu) {
    if (mu.size() != b.weight())
        throw Error(ErrorKind::SizeMismatch, "psi label must be a partition of w");
    FormalChar chi = FormalChar::single(CharLabel::ord(b.block.core));
    chi += FormalChar::single(CharLabel::spin(b.tau));
    // peel columns left to right; each column of length r contributes the
    // doubled induction step f_{1-a}^(r) f_a^(r)
    Partition cols = conjugate(mu);
    int a = b.addable_residue;
    for (int j = 1; j <= cols.length(); ++j) {
        int r = cols.part(j);
        chi = divided(a, r, OpDir::F, chi);
        chi = divided(1 - a, r, OpDir::F, chi);
    }
    return chi;
}

FormalChar upsilon(const RouquierBlock& b, const Partition& lam) {
    if (lam.size() != b.weight())
        throw Error(ErrorKind::SizeMismatch, "upsilon label must be a partition of w");
    FormalChar out;
    for (const Partition& mu : enumerate_partitions(b.weight(), PartitionClass::All)) {
        BigInt c = spade(lam, mu);
        if (c != 0)
            out += BigRat(c) * psi(b, conjugate(mu));
    }
    return out;
}

OmegaFamily omega_family(const RouquierBlock& b) {
    OmegaFamily fam;
    fam.labels = enumerate_partitions(b.weight(), PartitionClass::All);
    std::vector<RowLabel> rl;
    for (const auto& p : fam.labels)
        rl.push_back(RowLabel{p, std::nullopt});
    std::map<Partition, FormalChar> psis;
    for (const auto& mu : fam.labels)
        psis.emplace(mu, psi(b, mu));
    fam.gram = PartMatrix::zero(rl, fam.labels);
    for (int i = 0; i < fam.gram.rows(); ++i)
        for (int j = 0; j < fam.gram.cols(); ++j) {
            Partition ord_label = sum(b.block.core, scale(2, fam.labels[j]));
            BigRat c = inner(psis.at(fam.labels[i]), CharLabel::ord(ord_label));
            if (denominator(c) != 1)
                throw Error(ErrorKind::InternalNonIntegral, "non-integral Gram entry");
            fam.gram.at(i, j) = numerator(c);
        }
    fam.coeffs = unitri_inverse(fam.gram);
    for (int i = 0; i < fam.coeffs.rows(); ++i) {
        FormalChar om;
        for (int k = 0; k < fam.coeffs.cols(); ++k)
            if (fam.coeffs.at(i, k) != 0)
                om += BigRat(fam.coeffs.at(i, k)) * psis.at(fam.labels[k]);
        fam.omega.emplace(fam.labels[i], std::move(om));
    }
    return fam;
}

FormalChar omega(const RouquierBlock& b, const Partition& lam) {
    if (lam.size() != b.weight())
        throw Error(ErrorKind::SizeMismatch, "omega label must be a partition of w");
    return omega_family(b).omega.at(lam);
}

PartMatrix omega_spin_table(const RouquierBlock& b) {
    int w = b.weight();
    if (w % 2 != 0)
        throw Error(ErrorKind::ShapeMismatch, "omega spin table needs even weight");
    OmegaFamily fam = omega_family(b);
    std::vector<RowLabel> rows;
    for (const auto& alpha : enumerate_partitions(w / 2, PartitionClass::All))
        rows.push_back(RowLabel{alpha, std::nullopt});
    PartMatrix table = PartMatrix::zero(rows, fam.labels);
    for (int i = 0; i < table.rows(); ++i) {
        Partition spin_label = sum(b.tau, scale(4, rows[i].first));
        for (int j = 0; j < table.cols(); ++j) {
            BigRat c = inner(fam.omega.at(fam.labels[j]), CharLabel::spin(spin_label));
            if (denominator(c) != 1)
                throw Error(ErrorKind::InternalNonIntegral, "non-integral spin coefficient");
            table.at(i, j) = numerator(c);
        }
    }
    return table;
}

BigInt steinberg_row(SteinbergKind kind, SteinbergWhich which, const Partition& alpha,
                     const Partition& mu, const PartMatrix& d_small) {
    int n = mu.size();
    if (kind == SteinbergKind::Even && n != 2 * alpha.size())
        throw Error(ErrorKind::ShapeMismatch, "even case needs |μ| = 2|α|");
    if (kind == SteinbergKind::Odd && n != 2 * alpha.size() + 1)
        throw Error(ErrorKind::ShapeMismatch, "odd case needs |μ| = 2|α| + 1");
    auto kappa_sum = [&](const Partition& beta) -> BigInt {
        if (kind == SteinbergKind::Even)
            return BigInt(two_sign(mu)) * kappa(beta, mu);
        BigInt s = 0;
        for (const Node& nd : boundary_nodes(mu, BoundaryKind::Removable)) {
            std::vector<int> parts = mu.parts();
            parts[nd.row - 1] -= 1;
            Partition nu(std::move(parts));
            s += BigInt(two_sign(nu)) * kappa(beta, nu);
        }
        return s;
    };
    int half = (kind == SteinbergKind::Even) ? n / 2 : (n - 1) / 2;
    BigInt sign = ((half % 2 == 0) ? 1 : -1);
    if (which == SteinbergWhich::DbarInv)
        return sign * kappa_sum(alpha);
    PartMatrix inv = unitri_inverse(d_small);
    int row = inv.row_index(RowLabel{alpha, std::nullopt});
    BigInt total = 0;
    for (int j = 0; j < inv.cols(); ++j)
        if (inv.at(row, j) != 0)
            total += inv.at(row, j) * kappa_sum(inv.col_labels[j]);
    return sign * total;
}

Assembled assemble_E(const RouquierBlock& b, const PartMatrix& d, const PartMatrix& dbar) {
    int w = b.weight();
    std::vector<Partition> pw = enumerate_partitions(w, PartitionClass::All);
    auto check_labels = [&](const PartMatrix& m, const char* name) {
        if (m.rows() != static_cast<int>(pw.size()) || m.cols() != m.rows())
            throw Error(ErrorKind::SizeMismatch,
                        std::string(name) + " must be square over P(w)");
        for (std::size_t i = 0; i < pw.size(); ++i)
            if (m.row_labels[i].second || m.row_labels[i].first != pw[i] ||
                m.col_labels[i] != pw[i])
                throw Error(ErrorKind::LabelMismatch,
                            std::string(name) + " must be labelled by P(w) in descending "
                                                "lexicographic order");
    };
    check_labels(d, "D");
    check_labels(dbar, "Dbar");
    Assembled out;
    out.A = matmul(unitri_inverse(dbar), d);
    for (int i = 0; i < out.A.rows(); ++i)
        for (int j = 0; j < out.A.cols(); ++j)
            if (out.A.at(i, j) < 0)
                throw Error(ErrorKind::NegativeAdjustment,
                            "adjustment entry A[" + format_partition(pw[i]) + "][" +
                                format_partition(pw[j]) + "] is negative");
    std::vector<RowLabel> half_rows;
    for (const Partition& alpha : enumerate_partitions(w / 2, PartitionClass::All))
        half_rows.push_back(RowLabel{alpha, std::nullopt});
    out.J = PartMatrix::zero(half_rows, pw);
    for (int i = 0; i < out.J.rows(); ++i) {
        Partition target = dup(out.J.row_labels[i].first);
        if (w % 2 != 0)
            target = disjoint_union(target, Partition(std::vector<int>{1}));
        out.J.at(i, out.J.col_index(target)) = 1;
    }
    out.E = matmul(out.J, out.A);
    return out;
}

} // namespace spindec

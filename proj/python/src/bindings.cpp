#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "spindec/abacus.hpp"
#include "spindec/characters.hpp"
#include "spindec/classify.hpp"
#include "spindec/degrees.hpp"
#include "spindec/regdouble.hpp"
#include "spindec/symfun.hpp"

namespace py = pybind11;
using namespace spindec;

namespace {

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

std::vector<int> from_partition(const Partition& p) { return p.parts(); }

py::int_ big_to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object rat_to_py(const BigRat& v) {
    py::object Fraction = py::module_::import("fractions").attr("Fraction");
    std::ostringstream os;
    os << v;
    return Fraction(os.str());
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact combinatorics of 2-modular spin characters of double covers";

    py::register_exception<Error>(m, "DomainError");

    m.def("parse_partition",
          [](const std::string& s) { return from_partition(parse_partition(s)); });
    m.def("format_partition",
          [](const std::vector<int>& p) { return format_partition(to_partition(p)); });
    m.def("conjugate",
          [](const std::vector<int>& p) { return from_partition(conjugate(to_partition(p))); });
    m.def("dominates", [](const std::vector<int>& a, const std::vector<int>& b) {
        return dominates(to_partition(a), to_partition(b));
    });
    m.def("partitions", [](int n, bool two_regular) {
        std::vector<std::vector<int>> out;
        for (const auto& p : enumerate_partitions(
                 n, two_regular ? PartitionClass::TwoRegular : PartitionClass::All))
            out.push_back(from_partition(p));
        return out;
    }, py::arg("n"), py::arg("two_regular") = false);

    m.def("two_core",
          [](const std::vector<int>& p) { return from_partition(two_core(to_partition(p))); });
    m.def("two_weight", [](const std::vector<int>& p) { return two_weight(to_partition(p)); });
    m.def("two_quotient", [](const std::vector<int>& p) {
        auto [q0, q1] = two_quotient(to_partition(p));
        return py::make_tuple(from_partition(q0), from_partition(q1));
    });
    m.def("two_sign", [](const std::vector<int>& p) { return two_sign(to_partition(p)); });
    m.def("two_content", [](const std::vector<int>& p) {
        Content c = two_content(to_partition(p));
        return py::make_tuple(c.zeros, c.ones);
    });
    m.def("from_core_and_quotient",
          [](const std::vector<int>& core, const std::vector<int>& q0,
             const std::vector<int>& q1) {
              return from_partition(from_core_and_quotient(
                  to_partition(core), to_partition(q0), to_partition(q1)));
          });

    m.def("regularize",
          [](const std::vector<int>& p) { return from_partition(regularize(to_partition(p))); });
    m.def("double_parts",
          [](const std::vector<int>& p) { return from_partition(double_parts(to_partition(p))); });
    m.def("dblreg",
          [](const std::vector<int>& p) { return from_partition(dblreg(to_partition(p))); });
    m.def("four_bar_core", [](const std::vector<int>& p) {
        return from_partition(four_bar_core(to_partition(p)).parts);
    });
    m.def("four_bar_weight",
          [](const std::vector<int>& p) { return four_bar_weight(to_partition(p)); });
    m.def("spin_block", [](const std::vector<int>& p) {
        BlockId b = spin_block(to_partition(p));
        return py::make_tuple(from_partition(b.core), b.weight);
    });
    m.def("is_s_partition",
          [](const std::vector<int>& p) { return is_s_partition(to_partition(p)); });

    m.def("spin_degree",
          [](const std::vector<int>& p) { return big_to_py(spin_degree(to_partition(p))); });

    m.def("lr_coeff", [](const std::vector<int>& a, const std::vector<int>& b,
                         const std::vector<int>& c) {
        return big_to_py(lr_coeff(to_partition(a), to_partition(b), to_partition(c)));
    });
    m.def("kappa", [](const std::vector<int>& a, const std::vector<int>& mu) {
        return big_to_py(kappa(to_partition(a), to_partition(mu)));
    });
    m.def("spade", [](const std::vector<int>& lam, const std::vector<int>& mu) {
        return big_to_py(spade(to_partition(lam), to_partition(mu)));
    });

    m.def("branch", [](const std::string& op, const std::string& label) {
        if (op.size() < 2 || (op[0] != 'e' && op[0] != 'f') || (op[1] != '0' && op[1] != '1'))
            throw Error(ErrorKind::ParseError, "operator must be e0/e1/f0/f1[^r|max]");
        OpDir dir = op[0] == 'e' ? OpDir::E : OpDir::F;
        int i = op[1] - '0';
        FormalChar chi = FormalChar::single(parse_label(label));
        FormalChar res;
        std::string rest = op.substr(2);
        if (rest == "max")
            res = max_op(i, dir, chi);
        else if (rest.empty())
            res = divided(i, 1, dir, chi);
        else if (rest[0] == '^')
            res = divided(i, std::stoi(rest.substr(1)), dir, chi);
        else
            throw Error(ErrorKind::ParseError, "bad operator suffix");
        py::dict out;
        for (const auto& [l, c] : res.terms())
            out[py::str(format_label(l))] = rat_to_py(c);
        return out;
    });
    m.def("kleshchev", [](const std::vector<int>& mu, int i) {
        KleshchevData data = kleshchev(to_partition(mu), i);
        py::dict out;
        out["signature"] = data.signature.word();
        out["reduced"] = data.reduced.word();
        py::list normal, conormal;
        for (const Node& nd : data.normal)
            normal.append(py::make_tuple(nd.row, nd.col));
        for (const Node& nd : data.conormal)
            conormal.append(py::make_tuple(nd.row, nd.col));
        out["normal"] = normal;
        out["conormal"] = conormal;
        return out;
    });
    m.def("brauer_max", [](const std::vector<int>& mu, int i, const std::string& dir) {
        return from_partition(
            brauer_max(to_partition(mu), i, dir == "e" ? OpDir::E : OpDir::F));
    });
    m.def("spin_strip", [](const std::vector<int>& lam, int i) {
        SpinStrip s = spin_strip(to_partition(lam), i);
        py::list removed;
        for (const Node& nd : s.removed)
            removed.append(py::make_tuple(nd.row, nd.col));
        return py::make_tuple(from_partition(s.result), removed);
    });

    m.def("is_2carter", [](const std::vector<int>& p) { return is_2carter(to_partition(p)); });
    m.def("linear_irreducible",
          [](const std::vector<int>& p) { return linear_irreducible(to_partition(p)); });
    m.def("separated", [](const std::vector<int>& p) -> py::object {
        auto sep = separated(to_partition(p));
        if (!sep)
            return py::none();
        py::dict out;
        out["tau"] = from_partition(sep->tau);
        out["alpha"] = from_partition(sep->alpha);
        out["b"] = sep->b;
        return out;
    });
    m.def("spin_irreducible", [](const std::vector<int>& p) {
        Verdict v = spin_irreducible(to_partition(p));
        py::dict out;
        out["irreducible"] = v.irreducible;
        out["case"] = to_string(v.which);
        if (v.witness) {
            out["tau"] = from_partition(v.witness->tau);
            out["alpha"] = from_partition(v.witness->alpha);
            out["b"] = v.witness->b;
        }
        return out;
    });
}

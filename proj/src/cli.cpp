#include "spindec/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spindec/abacus.hpp"
#include "spindec/characters.hpp"
#include "spindec/classify.hpp"
#include "spindec/degrees.hpp"
#include "spindec/rouquier.hpp"

namespace spindec {

namespace {

using nlohmann::json;

json partition_json(const Partition& p) {
    json a = json::array();
    for (int x : p.parts())
        a.push_back(x);
    return a;
}

json formal_char_json(const FormalChar& chi) {
    json obj = json::object();
    for (const auto& [l, c] : chi.terms()) {
        std::ostringstream coeff;
        coeff << c;
        obj[format_label(l)] = coeff.str();
    }
    return obj;
}

json matrix_json(const PartMatrix& m) {
    json out;
    out["cols"] = json::array();
    for (const auto& c : m.col_labels)
        out["cols"].push_back(format_partition(c));
    out["rows"] = json::array();
    out["entries"] = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        out["rows"].push_back(format_row_label(m.row_labels[i]));
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).str());
        out["entries"].push_back(row);
    }
    return out;
}

struct BranchOp {
    OpDir dir;
    int residue;
    int power = 1; // divided power
    bool max = false;
};

BranchOp parse_branch_op(const std::string& s) {
    BranchOp op{};
    if (s.size() < 2 || (s[0] != 'e' && s[0] != 'f') || (s[1] != '0' && s[1] != '1'))
        throw Error(ErrorKind::ParseError,
                    "operator must look like e0, f1, e0^2 or e0max: '" + s + "'");
    op.dir = s[0] == 'e' ? OpDir::E : OpDir::F;
    op.residue = s[1] - '0';
    std::string rest = s.substr(2);
    if (rest == "max") {
        op.max = true;
    } else if (!rest.empty()) {
        if (rest[0] != '^')
            throw Error(ErrorKind::ParseError, "bad operator suffix '" + rest + "'");
        op.power = std::stoi(rest.substr(1));
        if (op.power < 1)
            throw Error(ErrorKind::ParseError, "power must be >= 1");
    }
    return op;
}

std::string fixture_default(const std::string& name) {
    const char* dir = std::getenv("SPINDEC_FIXTURES");
    if (!dir)
        return {};
    return std::string(dir) + "/" + name;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact combinatorics of 2-modular spin characters of double covers"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON");

    std::string part_text;
    auto* classify_cmd = app.add_subcommand("classify", "decide spin irreducibility");
    classify_cmd->add_option("partition", part_text)->required();

    auto* degree_cmd = app.add_subcommand("degree", "exact spin character degree");
    degree_cmd->add_option("partition", part_text)->required();

    auto* core_cmd = app.add_subcommand("core2", "2-core and 2-weight");
    core_cmd->add_option("partition", part_text)->required();

    auto* quot_cmd = app.add_subcommand("quotient", "2-quotient, 2-core and 2-weight");
    quot_cmd->add_option("partition", part_text)->required();

    auto* sign_cmd = app.add_subcommand("sign", "2-sign");
    sign_cmd->add_option("partition", part_text)->required();

    auto* content_cmd = app.add_subcommand("content", "2-content");
    content_cmd->add_option("partition", part_text)->required();

    auto* dblreg_cmd = app.add_subcommand("dblreg", "regularised double");
    dblreg_cmd->add_option("partition", part_text)->required();

    auto* barcore_cmd = app.add_subcommand("barcore", "4-bar-core and 4-bar-weight");
    barcore_cmd->add_option("partition", part_text)->required();

    auto* block_cmd = app.add_subcommand("block", "spin block of <λ>");
    block_cmd->add_option("partition", part_text)->required();

    std::string op_text, label_text;
    auto* branch_cmd = app.add_subcommand("branch", "apply a branching operator");
    branch_cmd->add_option("operator", op_text, "e0, e1, f0, f1, with ^r or max suffix")
        ->required();
    branch_cmd->add_option("label", label_text, "[λ], <λ>, <λ>+/- or phi(λ)")->required();

    int klesh_i = 0;
    auto* klesh_cmd = app.add_subcommand("kleshchev", "i-signature and normal nodes");
    klesh_cmd->add_option("partition", part_text)->required();
    klesh_cmd->add_option("-i,--i", klesh_i, "residue (0 or 1)")->check(CLI::Range(0, 1));

    std::string core_text, d_path, dbar_path, emit = "E", mu_text;
    int weight = 0;
    auto* rouq_cmd = app.add_subcommand("rouquier", "Rouquier block computations");
    rouq_cmd->add_option("--core", core_text, "staircase 2-core, e.g. 3,2,1")->required();
    rouq_cmd->add_option("--weight", weight)->required();
    rouq_cmd->add_option("--d", d_path, "Schur-algebra decomposition matrix file");
    rouq_cmd->add_option("--dbar", dbar_path, "(-1)-Schur decomposition matrix file");
    rouq_cmd->add_option("--emit", emit)->check(CLI::IsMember({"E", "A", "J", "psi", "omega"}));
    rouq_cmd->add_option("--mu", mu_text, "single label for psi/omega (default: all of P(w))");

    std::string suite_name;
    int max_n = 16;
    unsigned long long seed = 20240801ull;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", suite_name, "minimal_degree, strip_closure, "
                                                "separated_consistency or all")
        ->required();
    verify_cmd->add_option("--max-n", max_n);
    verify_cmd->add_option("--seed", seed, "seed for randomised property checks");

    std::vector<std::string> argv_copy = args;
    std::vector<char*> argv_ptrs;
    argv_ptrs.push_back(const_cast<char*>("spindec"));
    for (auto& a : argv_copy)
        argv_ptrs.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv_ptrs.size()), argv_ptrs.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (classify_cmd->parsed()) {
            Partition lam = parse_partition(part_text);
            Verdict v = spin_irreducible(lam);
            if (as_json) {
                json j;
                j["partition"] = partition_json(lam);
                j["irreducible"] = v.irreducible;
                j["case"] = to_string(v.which);
                if (v.witness) {
                    j["tau"] = partition_json(v.witness->tau);
                    j["alpha"] = partition_json(v.witness->alpha);
                    j["b"] = v.witness->b;
                }
                j["dblreg"] = format_partition(dblreg(lam));
                j["degree"] = spin_degree(lam).str();
                out << j.dump() << "\n";
            } else if (v.irreducible) {
                out << "irreducible (case: " << to_string(v.which) << ")\n";
            } else {
                out << "reducible\n";
            }
        } else if (degree_cmd->parsed()) {
            BigInt deg = spin_degree(parse_partition(part_text));
            if (as_json)
                out << json{{"degree", deg.str()}}.dump() << "\n";
            else
                out << deg << "\n";
        } else if (core_cmd->parsed()) {
            Partition lam = parse_partition(part_text);
            if (as_json)
                out << json{{"core", format_partition(two_core(lam))},
                            {"weight", two_weight(lam)}}
                           .dump()
                    << "\n";
            else
                out << format_partition(two_core(lam)) << " weight=" << two_weight(lam)
                    << "\n";
        } else if (quot_cmd->parsed()) {
            Partition lam = parse_partition(part_text);
            auto [q0, q1] = two_quotient(lam);
            if (as_json)
                out << json{{"quotient",
                             {format_partition(q0), format_partition(q1)}},
                            {"core", format_partition(two_core(lam))},
                            {"weight", two_weight(lam)}}
                           .dump()
                    << "\n";
            else
                out << "((" << format_partition(q0) << "),(" << format_partition(q1)
                    << ")) core=(" << format_partition(two_core(lam))
                    << ") weight=" << two_weight(lam) << "\n";
        } else if (sign_cmd->parsed()) {
            int s = two_sign(parse_partition(part_text));
            if (as_json)
                out << json{{"sign", s}}.dump() << "\n";
            else
                out << (s > 0 ? "+1" : "-1") << "\n";
        } else if (content_cmd->parsed()) {
            Content c = two_content(parse_partition(part_text));
            if (as_json)
                out << json{{"zeros", c.zeros}, {"ones", c.ones}}.dump() << "\n";
            else
                out << "{0^" << c.zeros << ",1^" << c.ones << "}\n";
        } else if (dblreg_cmd->parsed()) {
            Partition r = dblreg(parse_partition(part_text));
            if (as_json)
                out << json{{"dblreg", format_partition(r)}}.dump() << "\n";
            else
                out << format_partition(r) << "\n";
        } else if (barcore_cmd->parsed()) {
            Partition lam = parse_partition(part_text);
            BarCore bc = four_bar_core(lam);
            if (as_json)
                out << json{{"barcore", format_partition(bc.parts)},
                            {"weight", four_bar_weight(lam)}}
                           .dump()
                    << "\n";
            else
                out << format_partition(bc.parts) << " weight=" << four_bar_weight(lam)
                    << "\n";
        } else if (block_cmd->parsed()) {
            Partition lam = parse_partition(part_text);
            BlockId b = spin_block(lam);
            if (as_json)
                out << json{{"core", format_partition(b.core)},
                            {"weight", b.weight},
                            {"rouquier", is_rouquier(b)}}
                           .dump()
                    << "\n";
            else
                out << "core=(" << format_partition(b.core) << ") weight=" << b.weight
                    << (is_rouquier(b) ? " rouquier" : "") << "\n";
        } else if (branch_cmd->parsed()) {
            BranchOp op = parse_branch_op(op_text);
            CharLabel label = parse_label(label_text);
            if (label.kind == CharLabel::Kind::Brauer) {
                if (!op.max)
                    throw Error(ErrorKind::ParseError,
                                "Brauer labels support only e0max/e1max/f0max/f1max");
                Partition res = brauer_max(label.part, op.residue, op.dir);
                if (as_json)
                    out << json{{"result", format_label(CharLabel::brauer(res))}}.dump()
                        << "\n";
                else
                    out << format_label(CharLabel::brauer(res)) << "\n";
            } else {
                FormalChar chi = FormalChar::single(label);
                FormalChar res = op.max ? max_op(op.residue, op.dir, chi)
                                        : divided(op.residue, op.power, op.dir, chi);
                if (as_json)
                    out << formal_char_json(res).dump() << "\n";
                else
                    out << format_formal_char(res) << "\n";
            }
        } else if (klesh_cmd->parsed()) {
            KleshchevData data = kleshchev(parse_partition(part_text), klesh_i);
            if (as_json) {
                json j;
                j["signature"] = data.signature.word();
                j["reduced"] = data.reduced.word();
                j["normal"] = json::array();
                for (const Node& nd : data.normal)
                    j["normal"].push_back({nd.row, nd.col});
                j["conormal"] = json::array();
                for (const Node& nd : data.conormal)
                    j["conormal"].push_back({nd.row, nd.col});
                out << j.dump() << "\n";
            } else {
                out << "signature: " << data.signature.word() << "\n";
                out << "reduced:   " << data.reduced.word() << "\n";
                out << "normal:";
                for (const Node& nd : data.normal)
                    out << " (" << nd.row << "," << nd.col << ")";
                out << "\nconormal:";
                for (const Node& nd : data.conormal)
                    out << " (" << nd.row << "," << nd.col << ")";
                out << "\n";
            }
        } else if (rouq_cmd->parsed()) {
            RouquierBlock block(BlockId{parse_partition(core_text), weight});
            if (emit == "psi" || emit == "omega") {
                std::vector<Partition> labels;
                if (!mu_text.empty()) {
                    Partition mu = parse_partition(mu_text);
                    if (mu.size() != weight)
                        throw Error(ErrorKind::SizeMismatch,
                                    "--mu must be a partition of the weight");
                    labels.push_back(std::move(mu));
                } else {
                    labels = enumerate_partitions(weight, PartitionClass::All);
                }
                OmegaFamily family;
                if (emit == "omega")
                    family = omega_family(block);
                json j = json::object();
                for (const Partition& mu : labels) {
                    FormalChar chi =
                        emit == "psi" ? psi(block, mu) : family.omega.at(mu);
                    if (as_json)
                        j[format_partition(mu)] = formal_char_json(chi);
                    else
                        out << (emit == "psi" ? "psi^(" : "omega^(") << format_partition(mu)
                            << ") = " << format_formal_char(chi) << "\n";
                }
                if (as_json)
                    out << j.dump() << "\n";
            } else {
                if (d_path.empty())
                    d_path = fixture_default("schur_d_w" + std::to_string(weight) + ".txt");
                if (dbar_path.empty())
                    dbar_path =
                        fixture_default("qschur_dbar_w" + std::to_string(weight) + ".txt");
                if (d_path.empty() || dbar_path.empty())
                    throw Error(ErrorKind::ParseError,
                                "need --d/--dbar files (or set SPINDEC_FIXTURES)");
                Assembled asm_ = assemble_E(block, load_matrix(d_path), load_matrix(dbar_path));
                const PartMatrix& m = emit == "E" ? asm_.E : emit == "A" ? asm_.A : asm_.J;
                if (as_json)
                    out << matrix_json(m).dump() << "\n";
                else
                    save_matrix(m, out);
            }
        } else if (verify_cmd->parsed()) {
            std::vector<SuiteName> suites;
            if (suite_name == "all")
                suites = {SuiteName::MinimalDegree, SuiteName::StripClosure,
                          SuiteName::SeparatedConsistency};
            else if (suite_name == "minimal_degree")
                suites = {SuiteName::MinimalDegree};
            else if (suite_name == "strip_closure")
                suites = {SuiteName::StripClosure};
            else if (suite_name == "separated_consistency")
                suites = {SuiteName::SeparatedConsistency};
            else
                throw Error(ErrorKind::ParseError, "unknown suite '" + suite_name + "'");
            bool all_passed = true;
            json jreports = json::array();
            for (SuiteName s : suites) {
                SuiteReport report = verify_suite(s, max_n);
                all_passed = all_passed && report.passed();
                if (as_json) {
                    json j;
                    j["suite"] = report.name;
                    j["max_n"] = report.max_n;
                    j["checked"] = report.checked;
                    j["failures"] = report.failures;
                    j["passed"] = report.passed();
                    jreports.push_back(j);
                } else {
                    out << (report.passed() ? "PASS" : "FAIL") << " " << report.name
                        << " (max_n=" << report.max_n << ", checked=" << report.checked
                        << ")\n";
                    for (const auto& f : report.failures)
                        out << "  " << f << "\n";
                }
            }
            if (as_json)
                out << jreports.dump() << "\n";
            if (!all_passed)
                return 1;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace spindec

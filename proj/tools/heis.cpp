#include "heis/expr.hpp"
#include "heis/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace heis;

constexpr int kTableGuard = 10;

int run_eval(const std::string& text, bool as_json) {
    const auto ast = parse(text);
    const Value value = eval(*ast);
    const ResultDoc doc = ResultDoc::from_value(value);
    std::cout << (as_json ? doc.to_json() + "\n" : doc.to_text());
    return 0;
}

struct TableEntry {
    std::vector<int> left, right;
    ResultDoc result;
};

int run_table(const std::string& space, int maxdeg, const std::string& op, bool as_json,
              bool force) {
    if (maxdeg > kTableGuard && !force)
        throw GuardError("table generation beyond maxdeg " + std::to_string(kTableGuard) +
                         " requires --force");

    const char opc = op == "heis" ? '#' : op == "ext" ? '*' : '.';
    auto make_atom = [&](const std::vector<int>& index) {
        Expr e;
        e.kind = Expr::Kind::Atom;
        e.atom_space = space == "h"   ? Space::H
                       : space == "p" ? Space::P
                       : space == "X" ? Space::X
                                      : Space::Perm;
        e.index = index;
        return e;
    };

    std::vector<std::vector<int>> basis;
    if (space == "h" || space == "p") {
        for (int n = 1; n <= maxdeg; ++n)
            for (const Partition& l : partitions_of(n)) basis.push_back(l.parts());
    } else if (space == "X") {
        for (int n = 1; n <= maxdeg; ++n)
            for (const Composition& a : compositions_of(n)) basis.push_back(a.parts());
    } else {
        for (int n = 1; n <= maxdeg; ++n)
            for (const Permutation& s : permutations_of(n)) basis.push_back(s.image());
    }

    auto degree_of = [&](const std::vector<int>& index) {
        if (space == "perm") return static_cast<int>(index.size());
        int d = 0;
        for (int v : index) d += v;
        return d;
    };

    std::vector<TableEntry> entries;
    for (const auto& l : basis) {
        for (const auto& r : basis) {
            if (degree_of(l) + degree_of(r) > maxdeg) continue;
            if (opc == '.' && degree_of(l) != degree_of(r)) continue;
            Expr e;
            e.kind = Expr::Kind::Binary;
            e.op = opc;
            e.lhs = std::make_unique<Expr>(make_atom(l));
            e.rhs = std::make_unique<Expr>(make_atom(r));
            entries.push_back({l, r, ResultDoc::from_value(eval(e))});
        }
    }

    if (as_json) {
        nlohmann::ordered_json j;
        j["space"] = space;
        j["op"] = op;
        j["maxdeg"] = maxdeg;
        j["entries"] = nlohmann::ordered_json::array();
        for (const auto& e : entries) {
            nlohmann::ordered_json je;
            je["left"] = e.left;
            je["right"] = e.right;
            je["result"] = nlohmann::ordered_json::parse(e.result.to_json());
            j["entries"].push_back(std::move(je));
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    auto atom_str = [&](const std::vector<int>& index) {
        if (space == "perm") {
            std::string s = "perm ";
            for (int v : index) s += std::to_string(v);
            return s;
        }
        std::string s = space + "[";
        for (size_t i = 0; i < index.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(index[i]);
        }
        return s + "]";
    };
    for (const auto& e : entries) {
        std::cout << atom_str(e.left) << " " << opc << " " << atom_str(e.right) << " =";
        if (e.result.terms.empty()) std::cout << " 0";
        for (const auto& t : e.result.terms)
            std::cout << " + " << rational_str(t.coeff) << "*" << atom_str(t.index);
        std::cout << "\n";
    }
    return 0;
}

int print_report(const verify::Report& r) {
    std::cout << (r.ok ? "[pass] " : "[FAIL] ") << r.suite << ": " << r.checks
              << " checks";
    if (!r.ok) std::cout << "; first counterexample: " << r.first_failure;
    std::cout << "\n";
    return r.ok ? 0 : 1;
}

int run_verify(const std::string& suite) {
    int rc = 0;
    if (suite == "all") {
        for (const std::string& name : verify::suite_names())
            rc |= print_report(verify::run_suite(name));
    } else {
        rc = print_report(verify::run_suite(suite));
    }
    return rc;
}

int run_oracle(const std::string& which, int max_pq, int alphabet) {
    if (which == "schurweyl") {
        if (max_pq > 4) throw GuardError("oracle schurweyl is limited to --max 4");
        return print_report(verify::schur_weyl(max_pq, std::max(alphabet, 2 * max_pq)));
    }
    if (max_pq > 3) throw GuardError("oracle cosets is limited to --max 3");
    return print_report(verify::cosets(max_pq));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heisenberg product calculator for symmetric functions, descents, "
                 "permutations, and quasi-symmetric functions"};
    app.require_subcommand(1);

    std::string expr_text;
    bool as_json = false;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
    eval_cmd->add_option("expr", expr_text, "expression, e.g. \"h[2,1] # h[3]\"")->required();
    eval_cmd->add_flag("--json", as_json, "emit canonical JSON");

    std::string space = "h", op = "heis";
    int maxdeg = 4;
    bool force = false;
    auto* table_cmd = app.add_subcommand("table", "print a multiplication table");
    table_cmd->add_option("--space", space, "h, p, X, or perm")
        ->check(CLI::IsMember({"h", "p", "X", "perm"}));
    table_cmd->add_option("--maxdeg", maxdeg, "total degree bound")->required();
    table_cmd->add_option("--op", op, "heis, ext, or int")
        ->check(CLI::IsMember({"heis", "ext", "int"}));
    table_cmd->add_flag("--json", as_json, "emit canonical JSON");
    table_cmd->add_flag("--force", force, "allow maxdeg beyond the guard");

    std::string suite;
    auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
    verify_cmd->add_option("--suite", suite, "suite name or 'all'")->required();

    std::string oracle_kind;
    int oracle_max = 3, oracle_alphabet = 6;
    auto* oracle_cmd = app.add_subcommand("oracle", "run a brute-force oracle sweep");
    oracle_cmd->add_option("kind", oracle_kind, "schurweyl or cosets")
        ->required()
        ->check(CLI::IsMember({"schurweyl", "cosets"}));
    oracle_cmd->add_option("--max", oracle_max, "maximum degree p,q");
    oracle_cmd->add_option("--alphabet", oracle_alphabet, "alphabet size for schurweyl");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*eval_cmd) return run_eval(expr_text, as_json);
        if (*table_cmd) return run_table(space, maxdeg, op, as_json, force);
        if (*verify_cmd) return run_verify(suite);
        if (*oracle_cmd) return run_oracle(oracle_kind, oracle_max, oracle_alphabet);
    } catch (const heis::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const heis::TypeError& e) {
        std::cerr << "type error: " << e.what() << "\n";
        return 2;
    } catch (const heis::GuardError& e) {
        std::cerr << "size guard: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

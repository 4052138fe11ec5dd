// Command-line front end: exact Drazin/group/{1}-inverse computations over
// rational matrix files, anti-triangular block dispatch, digraph adjacency
// tools, property-suite runner, and the embedded worked examples.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 input error.

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "drz/antitri.hpp"
#include "drz/digraph.hpp"
#include "drz/geninv.hpp"
#include "drz/polynomial.hpp"
#include "drz/suites.hpp"
#include "drz/textio.hpp"
#include "drz/worked_examples.hpp"

namespace {

using nlohmann::json;

struct Report {
    bool as_json;
    json j;
    std::ostringstream text;
    bool all_pass = true;

    explicit Report(bool as_json_, const std::string& command) : as_json(as_json_) {
        j["command"] = command;
        j["checks"] = json::array();
        text << "command: " << command << '\n';
    }

    void input(const std::string& label, const std::string& value) {
        j["inputs"][label] = value;
        text << "input " << label << ": " << value << '\n';
    }

    void field(const std::string& label, const std::string& value) {
        j["outputs"][label] = value;
        text << label << ": " << value << '\n';
    }

    void matrix(const std::string& label, const drz::Matrix& m) {
        j["outputs"][label] = json::parse(drz::matrix_to_json(m));
        text << label << ":\n" << drz::matrix_to_text(m);
    }

    void check(const std::string& claim, bool pass) {
        j["checks"].push_back({{"claim", claim}, {"pass", pass}});
        text << "check " << claim << ": " << (pass ? "pass" : "FAIL") << '\n';
        if (!pass) all_pass = false;
    }

    int finish() {
        j["pass"] = all_pass;
        if (as_json)
            std::cout << j.dump(2) << '\n';
        else
            std::cout << text.str() << "result: " << (all_pass ? "pass" : "FAIL") << '\n';
        return all_pass ? 0 : 1;
    }
};

drz::Matrix load_square(const std::string& path) {
    drz::Matrix m = drz::parse_matrix_file(path);
    if (!m.is_square())
        throw drz::DimensionMismatch("expected a square matrix, got " +
                                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    return m;
}

int cmd_index(const std::string& path, bool as_json) {
    drz::Matrix a = load_square(path);
    Report rep(as_json, "index");
    rep.input("matrix", drz::digest(a));
    std::size_t idx = drz::drazin_index(a);
    rep.field("index", std::to_string(idx));

    std::ostringstream ranks;
    for (std::size_t k = 0; k <= idx + 1; ++k) {
        if (k) ranks << ' ';
        ranks << drz::rank(drz::mat_pow(a, k));
    }
    rep.field("ranks-of-powers", ranks.str());

    drz::Polynomial psi = drz::min_poly(a);
    rep.field("minpoly", drz::factored_string(psi));
    rep.check("minpoly-lambda-power-equals-index",
              drz::split_lambda_power(psi).first == idx);
    return rep.finish();
}

int cmd_minpoly(const std::string& path, bool as_json) {
    drz::Matrix a = load_square(path);
    Report rep(as_json, "minpoly");
    rep.input("matrix", drz::digest(a));
    drz::Polynomial psi = drz::min_poly(a);
    rep.field("minpoly", drz::factored_string(psi));
    rep.field("expanded", drz::to_string(psi));
    rep.check("annihilates", psi.eval(a).is_zero());
    return rep.finish();
}

int cmd_drazin(const std::string& path, bool as_json) {
    drz::Matrix a = load_square(path);
    Report rep(as_json, "drazin");
    rep.input("matrix", drz::digest(a));
    drz::DrazinResult d = drz::drazin(a);
    rep.field("index", std::to_string(d.index));
    rep.matrix("drazin-inverse", d.inverse);
    drz::Matrix ak = drz::mat_pow(a, d.index);
    rep.check("a^{k+1} d = a^k", ak * a * d.inverse == ak);
    rep.check("d a d = d", d.inverse * a * d.inverse == d.inverse);
    rep.check("a d = d a", a * d.inverse == d.inverse * a);
    return rep.finish();
}

int cmd_group(const std::string& path, bool as_json) {
    drz::Matrix a = load_square(path);
    Report rep(as_json, "group");
    rep.input("matrix", drz::digest(a));
    try {
        drz::Matrix g = drz::group_inverse(a);
        rep.field("index", std::to_string(drz::drazin_index(a)));
        rep.matrix("group-inverse", g);
        rep.check("index-at-most-one", true);
        rep.check("a g a = a", a * g * a == a);
    } catch (const drz::IndexTooLarge& e) {
        rep.field("error", e.what());
        rep.check("index-at-most-one", false);
    }
    return rep.finish();
}

int cmd_oneinv(const std::string& path, bool as_json) {
    drz::Matrix a = drz::parse_matrix_file(path);
    Report rep(as_json, "oneinv");
    rep.input("matrix", drz::digest(a));
    drz::Matrix x = drz::one_inverse(a);
    rep.matrix("one-inverse", x);
    rep.check("a x a = a", a * x * a == a);
    return rep.finish();
}

std::optional<drz::Branch> parse_branch(const std::string& name) {
    if (name.empty()) return std::nullopt;
    if (name == "bc-nonsingular") return drz::Branch::BCNonsingular;
    if (name == "a-nonsingular-bc-zero") return drz::Branch::ANonsingularBCZero;
    if (name == "bc-zero") return drz::Branch::BCZero;
    if (name == "a-zero") return drz::Branch::AZero;
    if (name == "orthogonal") return drz::Branch::OrthogonalCase;
    if (name == "oneside") return drz::Branch::OneSideCase;
    if (name == "generic") return drz::Branch::Generic;
    throw drz::HypothesisViolated(
        "unknown branch '" + name +
        "' (use bc-nonsingular, a-nonsingular-bc-zero, bc-zero, a-zero, orthogonal, "
        "oneside or generic)");
}

void report_branch(Report& rep, const drz::BranchReport& b) {
    rep.field("branch", drz::branch_name(b.branch));
    if (b.index) rep.field("index", std::to_string(*b.index));
    rep.field("bounds",
              "[" + std::to_string(b.lower_bound) + ", " + std::to_string(b.upper_bound) + "]");
    if (b.drazin) {
        rep.matrix("drazin-inverse", *b.drazin);
        rep.check("drazin-triple", true);  // verified inside the branch op
    }
    for (auto& [name, ok] : b.checks) rep.check(name, ok);
}

int cmd_block(const std::string& path, const std::string& branch, bool as_json) {
    drz::AntiTriangularBlocks blocks = drz::parse_blocks_file(path);
    Report rep(as_json, "block");
    rep.input("A", drz::digest(blocks.a));
    rep.input("B", drz::digest(blocks.b));
    rep.input("C", drz::digest(blocks.c));
    drz::BranchReport b = drz::classify_and_solve(blocks, parse_branch(branch));
    report_branch(rep, b);
    return rep.finish();
}

std::vector<std::size_t> parse_id_list(const std::string& s) {
    std::vector<std::size_t> ids;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) ids.push_back(static_cast<std::size_t>(std::stoul(tok)));
    return ids;
}

int cmd_digraph(const std::string& path, const std::string& left, bool auto_bipartite,
                bool as_json) {
    drz::Digraph g = drz::parse_digraph(drz::read_file(path));
    Report rep(as_json, "digraph");
    rep.input("digraph", std::to_string(g.n) + " vertices, " + std::to_string(g.arcs.size()) +
                             " arcs");
    drz::Matrix a = drz::adjacency(g);
    rep.matrix("adjacency", a);
    rep.field("index", std::to_string(drz::drazin_index(a)));
    rep.field("minpoly", drz::factored_string(drz::min_poly(a)));

    if (!left.empty() || auto_bipartite) {
        std::vector<std::size_t> part =
            left.empty() ? drz::discover_bipartition(g) : parse_id_list(left);
        drz::AntiTriangularBlocks blocks = drz::bipartite_blocks(g, part);
        drz::BranchReport b = drz::classify_and_solve(blocks);
        report_branch(rep, b);
    }
    return rep.finish();
}

int cmd_verify(const std::string& suite, std::size_t cases, std::uint64_t seed, bool as_json) {
    std::vector<std::string> to_run;
    if (suite == "all")
        to_run = drz::suite_names();
    else if (drz::is_suite(suite))
        to_run.push_back(suite);
    else
        throw std::invalid_argument("unknown suite '" + suite + "'; use --list to see names");

    Report rep(as_json, "verify");
    rep.input("cases", std::to_string(cases));
    rep.input("seed", std::to_string(seed));
    for (const std::string& name : to_run) {
        drz::SuiteResult r = drz::run_suite(name, cases, seed);
        for (const drz::ClaimResult& c : r.claims) {
            std::string label = name + "/" + c.name;
            rep.check(label + " (" + std::to_string(c.pass) + "/" +
                          std::to_string(c.pass + c.fail) + ")",
                      c.fail == 0);
            for (const std::string& note : c.notes) {
                rep.text << "  note: " << note << '\n';
                rep.j["notes"][label].push_back(note);
            }
        }
    }
    return rep.finish();
}

int cmd_examples(bool tamper, bool as_json) {
    Report rep(as_json, "examples");
    auto results = drz::run_worked_examples(tamper);
    std::size_t passed = 0;
    for (const auto& r : results) {
        rep.check(r.name, r.pass);
        for (const auto& d : r.details) rep.text << "  " << d << '\n';
        rep.j["details"][r.name] = r.details;
        if (r.pass) ++passed;
    }
    rep.field("reproduced", std::to_string(passed) + "/" + std::to_string(results.size()) +
                                " examples reproduced");
    return rep.finish();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact generalized inverses of rational matrices: Drazin and group "
                 "inverses, {1}-inverses, minimal polynomials, anti-triangular block "
                 "solvers and digraph front ends"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "structured JSON output");

    std::string file, branch, left, suite = "all";
    bool auto_bipartite = false, tamper = false;
    std::size_t cases = 100;
    std::uint64_t seed = 0;
    bool list_suites = false;

    auto* c_index = app.add_subcommand("index", "Drazin index, rank chain and minimal polynomial");
    c_index->add_option("file", file, "matrix file")->required();
    auto* c_minpoly = app.add_subcommand("minpoly", "minimal polynomial, factored as l^k * (...)");
    c_minpoly->add_option("file", file, "matrix file")->required();
    auto* c_drazin = app.add_subcommand("drazin", "Drazin inverse with equation checks");
    c_drazin->add_option("file", file, "matrix file")->required();
    auto* c_group = app.add_subcommand("group", "group inverse (index <= 1 required)");
    c_group->add_option("file", file, "matrix file")->required();
    auto* c_oneinv = app.add_subcommand("oneinv", "canonical {1}-inverse");
    c_oneinv->add_option("file", file, "matrix file")->required();
    auto* c_block = app.add_subcommand("block", "anti-triangular [[A,B],[C,0]] solver");
    c_block->add_option("file", file, "blocks file: A, B, C separated by blank lines")->required();
    c_block->add_option("--branch", branch, "force a branch (error if preconditions fail)");
    auto* c_digraph = app.add_subcommand("digraph", "adjacency matrix tools for edge-list files");
    c_digraph->add_option("file", file, "edge-list file")->required();
    c_digraph->add_option("--bipartite-left", left, "comma-separated left part, e.g. 1,3,5");
    c_digraph->add_flag("--auto-bipartite", auto_bipartite, "2-color to find a bipartition");
    auto* c_verify = app.add_subcommand("verify", "run property suites");
    c_verify->add_option("--suite", suite, "suite name or 'all'");
    c_verify->add_option("--cases", cases, "generated instances per suite");
    c_verify->add_option("--seed", seed, "RNG seed");
    c_verify->add_flag("--list", list_suites, "list suite names and exit");
    auto* c_examples = app.add_subcommand("examples", "reproduce the embedded worked examples");
    c_examples->add_flag("--self-test-tamper", tamper,
                         "deliberately corrupt one expected value (harness self-test)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_index->parsed()) return cmd_index(file, as_json);
        if (c_minpoly->parsed()) return cmd_minpoly(file, as_json);
        if (c_drazin->parsed()) return cmd_drazin(file, as_json);
        if (c_group->parsed()) return cmd_group(file, as_json);
        if (c_oneinv->parsed()) return cmd_oneinv(file, as_json);
        if (c_block->parsed()) return cmd_block(file, branch, as_json);
        if (c_digraph->parsed()) return cmd_digraph(file, left, auto_bipartite, as_json);
        if (c_verify->parsed()) {
            if (list_suites) {
                for (const auto& name : drz::suite_names()) std::cout << name << '\n';
                return 0;
            }
            return cmd_verify(suite, cases, seed, as_json);
        }
        if (c_examples->parsed()) return cmd_examples(tamper, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

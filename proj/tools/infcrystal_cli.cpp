#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <infcrystal/acceptance.hpp>
#include <infcrystal/cauchy.hpp>
#include <infcrystal/errors.hpp>
#include <infcrystal/plactic.hpp>
#include <infcrystal/qwedge.hpp>
#include <infcrystal/rs.hpp>
#include <infcrystal/schur_lr.hpp>
#include <infcrystal/tableau.hpp>
#include <infcrystal/word_crystal.hpp>

#include "json_io.hpp"

using namespace infcrystal;
using io::json;

namespace {

struct Globals {
    std::string type = "c";
    int rank = 0;
    bool json_out = false;
    std::size_t budget = 0;
    std::string file;
};

struct Context {
    Globals g;
    std::vector<std::string> args;

    LieType type() const { return parse_type(g.type); }

    std::size_t budget(std::size_t fallback) const { return g.budget ? g.budget : fallback; }

    int rank() const {
        if (g.rank <= 0) throw input_error("this command needs --rank N with N >= 1");
        return g.rank;
    }

    /// k-th input: positional argument, else --file (first input only), else stdin.
    std::string input(std::size_t k, const char* what) const {
        if (k < args.size()) return args[k];
        if (k == 0 && !g.file.empty()) {
            std::ifstream in(g.file);
            if (!in) throw input_error("cannot read '" + g.file + "'");
            return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
        }
        if (k == 0 && args.empty()) {
            std::string s((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
            if (!s.empty()) return s;
        }
        throw input_error(std::string("missing input: ") + what);
    }

    int integer(std::size_t k, const char* what) const {
        std::string s = input(k, what);
        try {
            std::size_t used = 0;
            int v = std::stoi(s, &used);
            if (used != s.size()) throw input_error("");
            return v;
        } catch (const std::exception&) {
            throw input_error(std::string("expected an integer for ") + what + ", got '" + s + "'");
        }
    }
};

void print_bool(const Context& c, bool v) {
    if (c.g.json_out) std::cout << json(v).dump() << "\n";
    else std::cout << (v ? "true" : "false") << "\n";
}

void print_tableau(const Context& c, const Tableau& T) {
    if (c.g.json_out) std::cout << io::tableau_json(T).dump() << "\n";
    else std::cout << to_string(T) << "\n";
}

void print_recording(const Context& c, const RecordingTableau& Q) {
    if (c.g.json_out) std::cout << io::recording_json(Q).dump() << "\n";
    else std::cout << to_string(Q) << "\n";
}

void print_pair(const Context& c, const RSPair& pq) {
    if (c.g.json_out) std::cout << io::pair_json(pq).dump() << "\n";
    else std::cout << "P = " << to_string(pq.P) << "\nQ = " << to_string(pq.Q) << "\n";
}

/// Pair input: {"P": tableau, "Q": recording} as one argument, or P and Q as two.
std::pair<Tableau, RecordingTableau> pair_input(const Context& c) {
    std::string first = c.input(0, "P or {\"P\":...,\"Q\":...}");
    if (c.args.size() < 2 && io::looks_like_json(first)) {
        json j = io::parse_json(first);
        if (j.is_object() && j.contains("P") && j.contains("Q"))
            return {io::tableau_from(j.at("P").dump(), c.type()), io::recording_from_json(j.at("Q"))};
    }
    return {io::tableau_from(first, c.type()), io::recording_from(c.input(1, "Q"))};
}

int run_verify(const Context& c) {
    std::vector<std::string> names = c.args;
    const auto& suites = acceptance_suites();
    if (names.empty() || (names.size() == 1 && names[0] == "all"))
        for (const auto& s : suites) names.push_back(s.first);
    int failed = 0;
    json out = json::array();
    for (const auto& name : names) {
        if (name == "all") continue;
        auto it = std::find_if(suites.begin(), suites.end(), [&](const auto& s) { return s.first == name; });
        if (it == suites.end()) throw input_error("unknown acceptance suite '" + name + "'");
        auto r = it->second();
        if (!r.pass()) ++failed;
        if (c.g.json_out)
            out.push_back(json{{"id", r.id},        {"suite", name},           {"pass", r.pass()},
                               {"seconds", r.seconds}, {"limit_seconds", r.limit_seconds}, {"detail", r.detail}});
        else std::cout << r.line() << std::endl;
    }
    if (c.g.json_out) std::cout << out.dump() << "\n";
    return failed ? 2 : 0;
}

int dispatch(const std::string& cmd, const Context& c) {
    const LieType t = c.type();
    if (cmd == "psym") {
        print_tableau(c, p_symbol(parse_word(c.input(0, "word"), t), t));
    } else if (cmd == "qsym") {
        print_recording(c, q_symbol(io::biword_from(c.input(0, "biword"), t)));
    } else if (cmd == "rs") {
        print_pair(c, rs(io::biword_from(c.input(0, "biword"), t)));
    } else if (cmd == "rs-inv") {
        auto [P, Q] = pair_input(c);
        auto b = rs_inverse(P, Q);
        if (c.g.json_out) std::cout << io::biword_json(b).dump() << "\n";
        else {
            for (std::size_t p = 0; p < b.rows.size(); ++p) std::cout << (p ? " | " : "") << to_string(b.rows[p]);
            std::cout << "\n";
        }
    } else if (cmd == "rs-hat") {
        print_pair(c, rs_hat(io::columns_from(c.input(0, "column sequence"), t)));
    } else if (cmd == "congruent") {
        auto budget = c.budget(default_class_budget);
        print_bool(c, congruent(parse_word(c.input(0, "first word"), t), parse_word(c.input(1, "second word"), t), t,
                                budget));
    } else if (cmd == "class") {
        auto cls = plactic_class(parse_word(c.input(0, "word"), t), t, c.budget(default_class_budget));
        if (c.g.json_out) {
            json a = json::array();
            for (const auto& w : cls) a.push_back(io::word_json(w));
            std::cout << a.dump() << "\n";
        } else {
            for (const auto& w : cls) std::cout << to_string(w) << "\n";
        }
    } else if (cmd == "admissible") {
        print_bool(c, is_admissible_column(parse_word(c.input(0, "column"), t), c.rank(), t));
    } else if (cmd == "tableau-check") {
        print_bool(c, is_tableau(io::tableau_from(c.input(0, "tableau"), t)));
    } else if (cmd == "lr") {
        long v = lr_oracle(io::partition_from(c.input(0, "lambda")), io::partition_from(c.input(1, "mu")),
                           io::partition_from(c.input(2, "nu")));
        std::cout << (c.g.json_out ? json(v).dump() : std::to_string(v)) << "\n";
    } else if (cmd == "tensor") {
        auto d = tensor_decompose(io::partition_from(c.input(0, "lambda")), io::partition_from(c.input(1, "mu")), t,
                                  c.budget(default_component_budget));
        std::cout << (c.g.json_out ? io::decomposition_json(d).dump() : to_string(d)) << "\n";
    } else if (cmd == "syt") {
        long v = count_syt(io::partition_from(c.input(0, "shape")));
        std::cout << (c.g.json_out ? json(v).dump() : std::to_string(v)) << "\n";
    } else if (cmd == "schur") {
        auto p = schur_poly(io::partition_from(c.input(0, "shape")), c.integer(1, "number of variables"));
        if (c.g.json_out) {
            json a = json::array();
            for (const auto& [m, coeff] : p) a.push_back(json{{"exponents", m}, {"coefficient", coeff}});
            std::cout << a.dump() << "\n";
        } else {
            std::cout << to_string(p) << "\n";
        }
    } else if (cmd == "cauchy-check") {
        auto b = io::biword_from(c.input(0, "biword"), t);
        AlgebraCaps caps;
        if (c.g.budget) caps.budget = c.g.budget;
        bool ok = cauchy_biword_check(b, caps);
        auto pq = rs(b);
        std::string lhs = canonical_string(x_of_word(b.concatenation(), b.type), caps);
        std::string rhs = canonical_string(x_of_word(reading(pq.P), b.type), caps);
        if (c.g.json_out)
            std::cout << json{{"holds", ok}, {"x_biword", lhs}, {"x_tableau", rhs}, {"rs", io::pair_json(pq)}}.dump()
                      << "\n";
        else std::cout << (ok ? "true" : "false") << "\n" << lhs << "\n" << rhs << "\n";
        if (!ok) return 2;
    } else if (cmd == "cauchy-a") {
        bool ok = cauchy_truncated_A(c.integer(0, "M"), c.integer(1, "k"), c.integer(2, "D"));
        print_bool(c, ok);
        if (!ok) return 2;
    } else if (cmd == "straighten") {
        if (t == LieType::A) throw input_error("straighten: q-wedge relations are defined for types b, c and d");
        auto e = straighten(parse_wedge(c.input(0, "wedge")), t, StraightenStrategy::LeftmostFirst,
                            c.budget(default_straighten_budget));
        if (c.g.json_out) {
            json a = json::array();
            for (const auto& [k, coeff] : e) {
                json terms = json::array();
                for (auto [exp, v] : coeff.terms()) terms.push_back(json{{"exponent", exp}, {"coefficient", v}});
                a.push_back(json{{"cells", io::word_json(k)}, {"coefficient", terms}});
            }
            std::cout << a.dump() << "\n";
        } else {
            std::cout << to_string(e) << "\n";
        }
    } else if (cmd == "graph") {
        int n = c.rank();
        auto shape = io::partition_from(c.input(0, "shape"));
        auto g = enumerate_component_graph(highest_reading(n, shape, t), n, t, c.budget(default_component_budget));
        std::cout << io::component_dot(g, "B_" + std::to_string(n) + "(" + to_string(shape) + ") type " +
                                              io::type_name(t));
    } else if (cmd == "verify") {
        return run_verify(c);
    } else {
        throw input_error("unknown command '" + cmd + "'");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Infinite-rank crystals of types A, B, C, D: insertion, plactic monoids, RS, LR and q-wedges"};
    app.require_subcommand(1);
    app.fallthrough();
    Context ctx;
    app.add_option("--type,-t", ctx.g.type, "Lie type: a, b, c or d")
        ->check(CLI::IsMember({"a", "b", "c", "d", "A", "B", "C", "D"}));
    app.add_option("--rank,-n", ctx.g.rank, "Finite rank for admissible and graph");
    app.add_flag("--json", ctx.g.json_out, "Emit JSON");
    app.add_option("--budget", ctx.g.budget, "Step / vertex budget for enumerations");
    app.add_option("--file,-f", ctx.g.file, "Read the first input from this file");

    const std::vector<std::pair<std::string, std::string>> commands{
        {"psym", "P-symbol of a word"},
        {"qsym", "Q-symbol of a biword (rows separated by '|', or JSON)"},
        {"rs", "RS correspondence of a biword"},
        {"rs-inv", "Inverse RS: P and Q (or a JSON pair) to a biword"},
        {"rs-hat", "Antisymmetric RS of a column sequence"},
        {"congruent", "Plactic congruence of two words"},
        {"class", "Plactic class of a word"},
        {"admissible", "Admissibility of a column at --rank"},
        {"tableau-check", "Tableau membership of a filling"},
        {"lr", "Littlewood-Richardson coefficient c^nu_{lambda,mu}"},
        {"tensor", "Decomposition of B(lambda) x B(mu)"},
        {"syt", "Number of standard tableaux of a shape"},
        {"schur", "Schur polynomial s_lambda(y_1..y_k)"},
        {"cauchy-check", "Cauchy monomial check for a biword"},
        {"cauchy-a", "Truncated type A Cauchy identity: M k D"},
        {"straighten", "Straighten a q-wedge onto columns"},
        {"graph", "Rank-n component of a shape as DOT"},
        {"verify", "Run acceptance suites (all by default)"},
    };
    std::string chosen;
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("inputs", ctx.args, "Inputs");
        sub->callback([&chosen, name = name] { chosen = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    try {
        return dispatch(chosen, ctx);
    } catch (const budget_exhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const property_violation& e) {
        std::cerr << "property violation: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

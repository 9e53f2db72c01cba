/**
 * @file cluster_cli.cpp
 * @brief Command-line front end for seed mutation, loop verification,
 *        and dilogarithm identity generation and checking.
 *
 * Exit codes: 0 verified or succeeded, 1 refuted or open, 2 usage or
 * malformed input, 3 resource limit reached.
 */
#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cluster/explore.hpp"
#include "cluster/fixtures.hpp"
#include "cluster/identity.hpp"
#include "cluster/json_io.hpp"
#include "cluster/rewrite.hpp"
#include "cluster/rogers.hpp"
#include "cluster/search.hpp"
#include "cluster/series.hpp"

namespace {

using namespace cluster;

/// Bad input discovered after flag parsing; mapped to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalOpts {
    std::uint64_t seed = 20260822;
    bool json = false;
    double tol = 1e-9;
    int degree = 8;
    int depth = 8;
};

std::string known_fixture_names() {
    std::string s;
    for (const Fixture& f : registry()) {
        if (!s.empty()) s += ", ";
        s += f.name;
    }
    return s;
}

/// Accepts registry names plus spoken aliases: a trailing "-loop" is
/// dropped and "pentagon" means the a2 loop.
const Fixture& resolve_fixture(std::string name) {
    if (name == "pentagon") name = "a2";
    if (name.size() > 5 && name.rfind("-loop") == name.size() - 5)
        name = name.substr(0, name.size() - 5);
    const Fixture* fx = find_fixture(name);
    if (!fx)
        throw UsageError("unknown fixture '" + name + "' (known: " + known_fixture_names() + ")");
    return *fx;
}

std::vector<int> parse_sequence(const std::string& s) {
    std::vector<int> seq;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, ',')) {
        std::istringstream part(tok);
        int v;
        while (part >> v) seq.push_back(v);
        if (!part.eof()) throw UsageError("sequence must be comma or space separated integers");
    }
    if (seq.empty()) throw UsageError("empty mutation sequence");
    return seq;
}

ExchangeMatrix matrix_from_file(const std::string& path) {
    ExchangeMatrix B(int_matrix_from_json(load_json_file(path)));
    B.validate();
    return B;
}

std::string pretty_factor(const DilogFactor& f, bool with_sign) {
    std::string s;
    if (static_cast<int>(f.alpha.size()) <= 9) {
        s = "(" + format_shorthand(f.alpha) + ")";
    } else {
        s = "(";
        for (std::size_t i = 0; i < f.alpha.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(f.alpha[i]);
        }
        s += ")";
    }
    if (f.k != 1) s += "_" + std::to_string(f.k);
    if (with_sign && f.sign < 0) s += "^-1";
    return s;
}

std::string pretty_word(const DilogWord& w, bool with_sign) {
    std::string s;
    for (const DilogFactor& f : w) s += pretty_factor(f, with_sign);
    return s;
}

std::string sign_string(const std::vector<StepTrace>& trace) {
    std::string s;
    for (const StepTrace& st : trace) s += st.eps > 0 ? '+' : '-';
    return s;
}

Json perm_json(const std::vector<int>& perm) {
    Json j = Json::array();
    for (int p : perm) j.push_back(p);
    return j;
}

void emit(const GlobalOpts& g, const Json& j, const std::string& text) {
    if (g.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

// ---- verify-loop ----------------------------------------------------

struct LoopArgs {
    std::string fixture, matrix, seq;
};

int run_verify_loop(const GlobalOpts& g, const LoopArgs& a) {
    std::optional<ExchangeMatrix> B;
    std::vector<int> seq;
    std::string label = "matrix";
    if (!a.fixture.empty()) {
        const Fixture& fx = resolve_fixture(a.fixture);
        B = fx.B;
        seq = fx.loop;
        label = fx.name;
    }
    if (!a.matrix.empty()) {
        if (B) throw UsageError("give either --fixture or --matrix, not both");
        B = matrix_from_file(a.matrix);
    }
    if (!B) throw UsageError("verify-loop needs --fixture or --matrix");
    if (!a.seq.empty()) seq = parse_sequence(a.seq);
    if (seq.empty()) throw UsageError("--matrix needs an explicit --seq");

    LoopReport rep = verify_loop(*B, seq, g.seed);

    Json j{{"input", label},
           {"closure", closure_name(rep.closed)},
           {"length", rep.length}};
    std::string text = label + ": " + closure_name(rep.closed) + ", length " +
                       std::to_string(rep.length) + "\n";
    if (rep.closed == Closure::up_to_permutation) {
        j["perm"] = perm_json(rep.perm);
        text += "relabeling images (0-based): " + perm_json(rep.perm).dump() + "\n";
    }
    emit(g, j, text);
    return rep.closed == Closure::strict ? 0 : 1;
}

// ---- explore --------------------------------------------------------

struct ExploreArgs {
    std::string fixture, matrix, mode = "unlabeled", dot;
    int max_vertices = 100000;
};

int run_explore(const GlobalOpts& g, const ExploreArgs& a) {
    std::optional<ExchangeMatrix> B;
    std::string label = "matrix";
    if (!a.fixture.empty()) {
        const Fixture& fx = resolve_fixture(a.fixture);
        B = fx.B;
        label = fx.name;
    }
    if (!a.matrix.empty()) {
        if (B) throw UsageError("give either --fixture or --matrix, not both");
        B = matrix_from_file(a.matrix);
    }
    if (!B) throw UsageError("explore needs --fixture or --matrix");
    KeyMode mode;
    if (a.mode == "labeled")
        mode = KeyMode::labeled;
    else if (a.mode == "unlabeled")
        mode = KeyMode::unlabeled;
    else
        throw UsageError("--mode must be labeled or unlabeled");

    GraphSlice slice = explore(*B, sample_point(B->n, g.seed), g.depth, a.max_vertices, mode);

    if (!a.dot.empty()) {
        std::string dot = export_dot(slice);
        if (a.dot == "-") {
            std::cout << dot;
        } else {
            std::ofstream out(a.dot);
            if (!out) throw UsageError("cannot write " + a.dot);
            out << dot;
        }
    }
    Json j{{"n", slice.n},
           {"mode", a.mode},
           {"truncated", slice.truncated},
           {"vertices", slice.digests.size()},
           {"digests", slice.digests},
           {"depths", slice.depths}};
    Json edges = Json::array();
    for (const auto& e : slice.edges) edges.push_back(Json::array({e[0], e[1], e[2]}));
    j["edges"] = std::move(edges);
    std::string text = label + ": " + std::to_string(slice.digests.size()) + " vertices, " +
                       std::to_string(slice.edges.size()) + " edges within depth " +
                       std::to_string(g.depth) + " (" + a.mode + ", " +
                       (slice.truncated ? "cut by depth bound" : "complete graph") + ")\n";
    if (a.dot.empty() || a.dot != "-") emit(g, j, text);
    return 0;
}

// ---- identity -------------------------------------------------------

struct IdentityArgs {
    std::string fixture;
};

/// Identity pair for a fixture: the shipped file when one exists,
/// otherwise generated from the fixture loop at the given seed.
IdentityFile fixture_identity(const Fixture& fx, std::uint64_t seed) {
    if (!fx.identity_file.empty()) return load_identity_file(fixture_dir() + "/" + fx.identity_file);
    if (fx.loop.empty()) throw UsageError("fixture " + fx.name + " has no loop and no identity file");
    SeedState s = make_seed(fx.B, sample_point(fx.B.n, seed));
    std::vector<StepTrace> trace = apply_sequence(s, fx.loop);
    DilogWord w = identity_from_loop(trace, fx.d);
    auto [lhs, rhs] = split_identity(w);
    IdentityFile f;
    f.n = fx.B.n;
    f.Lambda = pairing_matrix(fx.B, fx.d);
    f.lhs = std::move(lhs);
    f.rhs = std::move(rhs);
    f.B = fx.B.b;
    f.d = fx.d;
    return f;
}

int run_identity(const GlobalOpts& g, const IdentityArgs& a) {
    const Fixture& fx = resolve_fixture(a.fixture);
    if (fx.loop.empty()) throw UsageError("fixture " + fx.name + " has no loop");
    SeedState s = make_seed(fx.B, sample_point(fx.B.n, g.seed));
    std::vector<StepTrace> trace = apply_sequence(s, fx.loop);
    DilogWord w = identity_from_loop(trace, fx.d);
    auto [lhs, rhs] = split_identity(w);

    Json j{{"n", fx.B.n},
           {"Lambda", int_matrix_to_json(pairing_matrix(fx.B, fx.d))},
           {"lhs", word_to_json(lhs)},
           {"rhs", word_to_json(rhs)},
           {"B", int_matrix_to_json(fx.B.b)},
           {"d", fx.d}};
    std::string text = fx.name + ": loop word of " + std::to_string(w.size()) +
                       " factors, signs " + sign_string(trace) + "\n" + pretty_word(w, true) +
                       " = 1\n" + pretty_word(lhs, false) + " = " + pretty_word(rhs, false) + "\n";
    emit(g, j, text);
    return 0;
}

// ---- verify-series --------------------------------------------------

struct SeriesArgs {
    std::string fixture, file;
};

int run_verify_series(const GlobalOpts& g, const SeriesArgs& a) {
    IdentityFile f;
    std::string label;
    if (!a.fixture.empty()) {
        if (!a.file.empty()) throw UsageError("give either --fixture or --file, not both");
        const Fixture& fx = resolve_fixture(a.fixture);
        f = fixture_identity(fx, g.seed);
        label = fx.name;
    } else if (!a.file.empty()) {
        f = load_identity_file(a.file);
        label = a.file;
    } else {
        throw UsageError("verify-series needs --fixture or --file");
    }

    VerifyOutcome out = verify_identity(f.lhs, f.rhs, f.Lambda, g.degree);

    Json j{{"verified", out.verified}, {"degree", g.degree}};
    std::string text;
    if (out.verified) {
        text = label + ": verified, sides agree through total degree " +
               std::to_string(g.degree) + "\n";
    } else {
        Json mono = Json::array();
        std::string ms;
        for (std::size_t i = 0; i < out.monomial.size(); ++i) {
            mono.push_back(out.monomial[i]);
            if (i) ms += ",";
            ms += std::to_string(out.monomial[i]);
        }
        j["monomial"] = std::move(mono);
        j["lhs"] = out.lhs_coeff.str();
        j["rhs"] = out.rhs_coeff.str();
        text = label + ": refuted at monomial (" + ms + "): lhs " + out.lhs_coeff.str() +
               ", rhs " + out.rhs_coeff.str() + "\n";
    }
    emit(g, j, text);
    return out.verified ? 0 : 1;
}

// ---- check-trace ----------------------------------------------------

struct TraceArgs {
    std::string file;
};

int run_check_trace(const GlobalOpts& g, const TraceArgs& a) {
    std::string path = a.file.empty() ? fixture_dir() + "/a3a3_trace.jsonl" : a.file;
    RewriteTrace tr = load_trace_file(path);

    std::size_t swaps = 0, expands = 0, contracts = 0;
    for (const RewriteMove& m : tr.moves) {
        if (m.kind == MoveKind::commute_swap) ++swaps;
        if (m.kind == MoveKind::pentagon_expand) ++expands;
        if (m.kind == MoveKind::pentagon_contract) ++contracts;
    }
    TraceCheck chk = check_trace(tr);

    Json j{{"ok", chk.ok},
           {"words", tr.words.size()},
           {"moves", tr.moves.size()},
           {"commute_swap", swaps},
           {"pentagon_expand", expands},
           {"pentagon_contract", contracts}};
    std::string text;
    if (chk.ok) {
        text = path + ": ok, " + std::to_string(tr.words.size()) + " words, " +
               std::to_string(tr.moves.size()) + " moves (commute_swap " + std::to_string(swaps) +
               ", pentagon_expand " + std::to_string(expands) + ", pentagon_contract " +
               std::to_string(contracts) + ")\n";
    } else {
        j["step"] = chk.step;
        j["reason"] = chk.reason;
        text = path + ": failed at step " + std::to_string(chk.step) + ": " + chk.reason + "\n";
    }
    emit(g, j, text);
    return chk.ok ? 0 : 1;
}

// ---- search ---------------------------------------------------------

struct SearchArgs {
    std::string fixture, file, out;
    std::size_t max_steps = 100000;
    std::size_t max_frontier = 200000;
};

int run_search(const GlobalOpts& g, const SearchArgs& a) {
    IdentityFile f;
    std::string label;
    if (!a.fixture.empty()) {
        if (!a.file.empty()) throw UsageError("give either --fixture or --file, not both");
        const Fixture& fx = resolve_fixture(a.fixture);
        f = fixture_identity(fx, g.seed);
        label = fx.name;
    } else if (!a.file.empty()) {
        f = load_identity_file(a.file);
        label = a.file;
    } else {
        throw UsageError("search needs --fixture or --file");
    }

    SearchResult res = search_rewrite(f.lhs, f.rhs, f.Lambda, a.max_steps, a.max_frontier);

    Json j{{"found", res.found},
           {"limit_hit", res.limit_hit},
           {"pentagon_steps", res.pentagon_steps},
           {"moves", res.trace.moves.size()},
           {"expanded", res.expanded},
           {"frontier_peak", res.frontier_peak}};
    std::string text;
    int rc;
    if (res.found) {
        text = label + ": derived rhs from lhs with " + std::to_string(res.pentagon_steps) +
               " pentagon moves, " + std::to_string(res.trace.moves.size()) +
               " moves total (expanded " + std::to_string(res.expanded) + " states)\n";
        rc = 0;
        if (!a.out.empty()) {
            save_trace_file(a.out, res.trace);
            text += "trace written to " + a.out + "\n";
        }
    } else if (res.limit_hit) {
        text = label + ": search budget exhausted after " + std::to_string(res.expanded) +
               " states, no verdict\n";
        rc = 3;
    } else {
        text = label + ": exhausted all reachable words, no pentagon-commute derivation exists\n";
        rc = 1;
    }
    emit(g, j, text);
    return rc;
}

// ---- rogers ---------------------------------------------------------

struct RogersArgs {
    std::optional<double> x;
    std::string fixture, convention = "pre";
};

int run_rogers(const GlobalOpts& g, const RogersArgs& a) {
    if (a.x && !a.fixture.empty()) throw UsageError("give either --x or --fixture, not both");
    if (a.x) {
        if (*a.x < 0.0 || *a.x > 1.0) throw UsageError("--x must lie in [0, 1]");
        RogersEval ev = rogers_L(*a.x);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.15g", ev.value);
        emit(g,
             Json{{"x", ev.x}, {"value", ev.value}, {"abs_err_bound", ev.abs_err_bound}},
             "L(" + std::to_string(*a.x) + ") = " + buf + "\n");
        return 0;
    }
    if (a.fixture.empty()) throw UsageError("rogers needs --x or --fixture");
    const Fixture& fx = resolve_fixture(a.fixture);
    if (fx.loop.empty()) throw UsageError("fixture " + fx.name + " has no loop");

    YConvention conv;
    if (a.convention == "pre")
        conv = YConvention::pre_mutation;
    else if (a.convention == "post")
        conv = YConvention::post_mutation;
    else
        throw UsageError("--convention must be pre or post");

    std::vector<Rat> y = sample_point(fx.B.n, g.seed);
    double sum = loop_sum_check(fx.B, y, fx.loop, conv);

    // pre-mutation values telescope to zero; post-mutation values to
    // the signed step count times pi^2/6
    double expected = 0.0;
    if (conv == YConvention::post_mutation) {
        SeedState s = make_seed(fx.B, y);
        long total = 0;
        for (const StepTrace& st : apply_sequence(s, fx.loop)) total += st.eps;
        expected = static_cast<double>(total) * (M_PI * M_PI / 6.0);
    }
    double residual = std::abs(sum - expected);
    bool ok = residual <= g.tol;

    char buf[160];
    std::snprintf(buf, sizeof buf, "sum %.15g, expected %.15g, residual %.3g (tol %.3g)",
                  sum, expected, residual, g.tol);
    emit(g,
         Json{{"fixture", fx.name},
              {"convention", a.convention},
              {"sum", sum},
              {"expected", expected},
              {"residual", residual},
              {"tol", g.tol},
              {"ok", ok}},
         fx.name + " (" + a.convention + "-mutation values): " + buf + ": " +
             (ok ? "within tolerance" : "exceeds tolerance") + "\n");
    return ok ? 0 : 1;
}

// ---- akan -----------------------------------------------------------

struct AkanArgs {
    int k = 0, n = 0;
    std::optional<int> rounds;
    bool verify = false;
};

int run_akan(const GlobalOpts& g, const AkanArgs& a) {
    if (a.k < 1 || a.n < 1) throw UsageError("grid sides must be positive");
    int rounds = a.rounds ? *a.rounds : akan_default_rounds(a.k, a.n);
    if (rounds < 1) throw UsageError("--rounds must be positive");
    ExchangeMatrix B = akan_matrix(a.k, a.n);
    std::vector<int> seq = akan_sequence(a.k, a.n, rounds);

    Json j{{"k", a.k},
           {"n", a.n},
           {"rank", B.n},
           {"rounds", rounds},
           {"B", int_matrix_to_json(B.b)},
           {"sequence", seq}};
    std::ostringstream text;
    text << "grid " << a.k << " x " << a.n << ", rank " << B.n << ", " << rounds
         << " rounds (" << seq.size() << " steps)\nB =\n";
    for (const auto& row : B.b) {
        text << " ";
        for (Int v : row) text << " " << v;
        text << "\n";
    }
    text << "sequence:";
    for (int v : seq) text << " " << v;
    text << "\n";

    int rc = 0;
    if (a.verify) {
        LoopReport rep = verify_loop(B, seq, g.seed);
        j["closure"] = closure_name(rep.closed);
        j["length"] = rep.length;
        text << "closure: " << closure_name(rep.closed) << ", length " << rep.length << "\n";
        if (rep.closed == Closure::up_to_permutation) {
            j["perm"] = perm_json(rep.perm);
            text << "relabeling images (0-based): " << perm_json(rep.perm).dump() << "\n";
        }
        rc = rep.closed == Closure::strict ? 0 : 1;
    }
    emit(g, j, text.str());
    return rc;
}

// ---- fixtures -------------------------------------------------------

int run_fixtures(const GlobalOpts& g) {
    Json j = Json::array();
    std::ostringstream text;
    for (const Fixture& f : registry()) {
        Json e{{"name", f.name},
               {"n", f.B.n},
               {"loop_length", f.loop.size()},
               {"expected", closure_name(f.expected)},
               {"identity_file", f.identity_file},
               {"trace_file", f.trace_file}};
        if (!f.expected_perm.empty()) e["perm"] = perm_json(f.expected_perm);
        j.push_back(std::move(e));
        text << f.name << ": n=" << f.B.n << ", loop length " << f.loop.size() << ", expected "
             << closure_name(f.expected);
        if (!f.identity_file.empty()) text << ", identity " << f.identity_file;
        if (!f.trace_file.empty()) text << ", trace " << f.trace_file;
        text << "\n";
    }
    emit(g, j, text.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cluster seed mutation, loop closure, and dilogarithm identities"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "Sample-point seed")->capture_default_str();
    app.add_flag("--json", g.json, "Emit JSON instead of text");
    app.add_option("--tol", g.tol, "Numeric residual tolerance")->capture_default_str();
    app.add_option("--degree,-D", g.degree, "Series truncation degree")->capture_default_str();
    app.add_option("--depth", g.depth, "Exploration depth bound")->capture_default_str();

    int rc = 0;

    LoopArgs loop_args;
    auto* vl = app.add_subcommand("verify-loop", "Classify a mutation sequence as a loop");
    vl->fallthrough();
    vl->add_option("--fixture", loop_args.fixture, "Named fixture");
    vl->add_option("--matrix", loop_args.matrix, "JSON file holding an exchange matrix");
    vl->add_option("--seq", loop_args.seq, "1-based mutation sequence, comma separated");
    vl->callback([&] { rc = run_verify_loop(g, loop_args); });

    ExploreArgs explore_args;
    auto* ex = app.add_subcommand("explore", "Breadth-first slice of the exchange graph");
    ex->fallthrough();
    ex->add_option("--fixture", explore_args.fixture, "Named fixture");
    ex->add_option("--matrix", explore_args.matrix, "JSON file holding an exchange matrix");
    ex->add_option("--max-vertices", explore_args.max_vertices, "Vertex budget")
        ->capture_default_str();
    ex->add_option("--mode", explore_args.mode, "Vertex identity: labeled or unlabeled")
        ->capture_default_str();
    ex->add_option("--dot", explore_args.dot, "Write Graphviz output to a file, - for stdout");
    ex->callback([&] { rc = run_explore(g, explore_args); });

    IdentityArgs identity_args;
    auto* id = app.add_subcommand("identity", "Dilogarithm word induced by a fixture loop");
    id->fallthrough();
    id->add_option("--fixture", identity_args.fixture, "Named fixture")->required();
    id->callback([&] { rc = run_identity(g, identity_args); });

    SeriesArgs series_args;
    auto* vs = app.add_subcommand("verify-series", "Compare identity sides as truncated series");
    vs->fallthrough();
    vs->add_option("--fixture", series_args.fixture, "Named fixture");
    vs->add_option("--file", series_args.file, "Identity JSON file");
    vs->callback([&] { rc = run_verify_series(g, series_args); });

    TraceArgs trace_args;
    auto* ct = app.add_subcommand("check-trace", "Replay a pentagon-commute rewrite trace");
    ct->fallthrough();
    ct->add_option("--file", trace_args.file, "Trace file (default: shipped grid trace)");
    ct->callback([&] { rc = run_check_trace(g, trace_args); });

    SearchArgs search_args;
    auto* se = app.add_subcommand("search", "Search a pentagon-commute derivation lhs -> rhs");
    se->fallthrough();
    se->add_option("--fixture", search_args.fixture, "Named fixture");
    se->add_option("--file", search_args.file, "Identity JSON file");
    se->add_option("--max-steps", search_args.max_steps, "State expansion budget")
        ->capture_default_str();
    se->add_option("--max-frontier", search_args.max_frontier, "Frontier size budget")
        ->capture_default_str();
    se->add_option("--out", search_args.out, "Write the found trace to this file");
    se->callback([&] { rc = run_search(g, search_args); });

    RogersArgs rogers_args;
    double rogers_x = 0.0;
    auto* ro = app.add_subcommand("rogers", "Evaluate L(x) or a signed loop sum");
    ro->fallthrough();
    auto* xopt = ro->add_option("--x", rogers_x, "Evaluation point in [0, 1]");
    ro->add_option("--fixture", rogers_args.fixture, "Named fixture loop");
    ro->add_option("--convention", rogers_args.convention,
                   "Coefficient sampled per step: pre or post")
        ->capture_default_str();
    ro->callback([&] {
        if (*xopt) rogers_args.x = rogers_x;
        rc = run_rogers(g, rogers_args);
    });

    AkanArgs akan_args;
    int akan_rounds = 0;
    auto* ak = app.add_subcommand("akan", "Grid quiver with its bipartite mutation sequence");
    ak->fallthrough();
    ak->add_option("k", akan_args.k, "Grid rows")->required();
    ak->add_option("n", akan_args.n, "Grid columns")->required();
    auto* ropt = ak->add_option("--rounds", akan_rounds, "Bipartite rounds (default: closing count)");
    ak->add_flag("--verify", akan_args.verify, "Classify the sequence as a loop");
    ak->callback([&] {
        if (*ropt) akan_args.rounds = akan_rounds;
        rc = run_akan(g, akan_args);
    });

    auto* fx = app.add_subcommand("fixtures", "List the named fixtures");
    fx->fallthrough();
    fx->callback([&] { rc = run_fixtures(g); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

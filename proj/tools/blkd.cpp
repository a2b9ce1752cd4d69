// blkd: generate, verify, search and sweep blockade instances.
//
// Exit codes: 0 success (including a definitive oracle "none"), 1 usage or
// parse error, 2 finder failure (trace written), 3 indeterminate (budget).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "blkd/finders.hpp"
#include "blkd/generators.hpp"
#include "blkd/io.hpp"
#include "blkd/jsonio.hpp"
#include "blkd/sweep.hpp"

using namespace blkd;

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open '" + out_path + "' for writing");
        f << text;
    }
}

Pattern parse_pattern_spec(const std::string& s) {
    auto num_after = [&](const std::string& prefix) {
        return std::stoi(s.substr(prefix.size()));
    };
    if (s.rfind("file:", 0) == 0) return read_pattern_file(s.substr(5));
    if (s.rfind("path", 0) == 0) return patterns::path(num_after("path"));
    if (s.rfind("opath", 0) == 0) return patterns::path(num_after("opath"), true);
    if (s.rfind("ostar", 0) == 0) return patterns::ordered_star_centre_last(num_after("ostar"));
    if (s.rfind("star", 0) == 0) return patterns::star(num_after("star"));
    if (s.rfind("cycle", 0) == 0) return patterns::cycle(num_after("cycle"));
    if (s.rfind("broom:", 0) == 0) {
        int k, t;
        if (sscanf(s.c_str(), "broom:%d,%d", &k, &t) != 2) throw std::invalid_argument("bad broom spec");
        return patterns::broom(k, t);
    }
    if (s.rfind("dbroom:", 0) == 0) {
        int k, sN, t;
        if (sscanf(s.c_str(), "dbroom:%d,%d,%d", &k, &sN, &t) != 3)
            throw std::invalid_argument("bad dbroom spec");
        return patterns::double_broom(k, sN, t);
    }
    throw std::invalid_argument("unknown pattern spec '" + s +
                                "' (path<k>|star<t>|ostar<t>|cycle<k>|broom:k,t|dbroom:k,s,t|file:p)");
}

std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_rat(tok));
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& s) {
    std::vector<std::uint64_t> out;
    auto dots = s.find("..");
    if (dots != std::string::npos) {
        std::uint64_t lo = std::stoull(s.substr(0, dots));
        std::uint64_t hi = std::stoull(s.substr(dots + 2));
        for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoull(tok));
    return out;
}

std::vector<int> parse_vertex_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    int v;
    while (ss >> v) out.push_back(v);
    return out;
}

// --config <file>: whitespace-separated tokens spliced in place of the flag
std::vector<std::string> splice_config(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--config" && i + 1 < argc) {
            std::ifstream f(argv[++i]);
            if (!f) throw std::runtime_error(std::string("cannot open config '") + argv[i] + "'");
            std::string tok;
            while (f >> tok) args.push_back(tok);
        } else {
            args.push_back(a);
        }
    }
    return args;
}

int finder_exit(const FinderOutcome& fo, const std::string& out_path) {
    emit(to_json(fo).dump(2), out_path);
    return fo.found() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"blockade transversal toolkit"};
    app.require_subcommand(1);

    std::string out_path, audit_path, instance_path;
    std::string eps_s, c_s, tau_s, pattern_s, kind_s = "transversal", theorem_s;
    std::uint64_t seed = 0;
    int n = 0, k = 0, t = 0, W = 0, d = 0, p = 0;
    std::uint64_t budget = 50'000'000;
    int max_attempts = 64;
    bool strict_powers = false, verify_premises = false, timing = false;
    std::string xset_s, c1_s, eps_list_s, c_list_s, W_list_s, seeds_s, experiment;
    std::string cohx_s, cohy_s;

    // gen
    auto* gen = app.add_subcommand("gen", "generate instances with audit sidecars");
    gen->require_subcommand(1);
    auto add_gen_common = [&](CLI::App* g) {
        g->add_option("--seed", seed, "PRNG seed (required)")->required();
        g->add_option("-o,--out", out_path, "instance file (default stdout)");
        g->add_option("--audit", audit_path, "audit sidecar path");
        g->add_option("--max-attempts", max_attempts, "resampling cap");
        g->add_option("--budget", budget, "audit enumeration budget");
    };
    auto* gen_rb = gen->add_subcommand("random-bipartite", "sparse cohesive bipartite pair");
    gen_rb->add_option("--n", n, "side size")->required();
    gen_rb->add_option("--eps", eps_s, "rational eps p/q")->required();
    add_gen_common(gen_rb);
    auto* gen_sf = gen->add_subcommand("star-free", "star-free blockade of length 2^{k-1}");
    gen_sf->add_option("--k", k)->required();
    gen_sf->add_option("--W", W)->required();
    gen_sf->add_option("--eps", eps_s, "rational eps (default 1/8)");
    gen_sf->add_option("--p", p, "host max degree (default 0, edgeless host)");
    add_gen_common(gen_sf);
    auto* gen_db = gen->add_subcommand("double-broom", "double-broom counterexample, k+6 blocks");
    gen_db->add_option("--k", k)->required();
    gen_db->add_option("--W", W)->required();
    gen_db->add_option("--eps", eps_s)->required();
    add_gen_common(gen_db);
    auto* gen_os = gen->add_subcommand("ordered-star", "ordered-star counterexample, t+1 blocks");
    gen_os->add_option("--t", t)->required();
    gen_os->add_option("--c", c_s)->required();
    gen_os->add_option("--eps", eps_s)->required();
    gen_os->add_option("--n", n)->required();
    gen_os->add_flag("--strict-powers", strict_powers, "demand the exact m^L integrality form");
    add_gen_common(gen_os);

    // find
    auto* find = app.add_subcommand("find", "run a constructive finder");
    find->require_subcommand(1);
    auto add_find_common = [&](CLI::App* f) {
        f->add_option("instance", instance_path, "instance file")->required();
        f->add_option("-o,--out", out_path, "document path (default stdout)");
    };
    auto* f_path = find->add_subcommand("path", "transversal path with an end in block 0");
    f_path->add_option("--eps", eps_s, "rational eps")->required();
    add_find_common(f_path);
    auto* f_star = find->add_subcommand("star", "rainbow star S_k");
    f_star->add_option("--k", k)->required();
    f_star->add_option("--eps", eps_s);
    add_find_common(f_star);
    auto* f_broom = find->add_subcommand("broom", "transversal broom B(k,t)");
    f_broom->add_option("--k", k)->required();
    f_broom->add_option("--t", t)->required();
    f_broom->add_option("--tau", tau_s);
    f_broom->add_option("--eps", eps_s);
    f_broom->add_option("--budget", budget, "family search budget");
    add_find_common(f_broom);
    auto* f_c4 = find->add_subcommand("c4", "transversal four-cycle");
    f_c4->add_option("--eps", eps_s);
    f_c4->add_option("--c", c_s);
    add_find_common(f_c4);
    auto* f_cy = find->add_subcommand("cycle", "transversal k-cycle, k >= 5");
    f_cy->add_option("--eps", eps_s);
    add_find_common(f_cy);
    auto* f_cat = find->add_subcommand("caterpillar", "ordered caterpillar");
    f_cat->add_option("--pattern", pattern_s, "pattern spec")->required();
    f_cat->add_option("--d", d, "degree bound")->required();
    f_cat->add_option("--c1", c1_s, "C1 vertex list, default whole block 0");
    f_cat->add_option("--eps", eps_s);
    add_find_common(f_cat);
    auto* f_tree = find->add_subcommand("tree", "ordered tree embedding");
    f_tree->add_option("--pattern", pattern_s, "pattern spec")->required();
    f_tree->add_option("--c", c_s, "exponent for the count bound in the trace");
    f_tree->add_option("--budget", budget);
    add_find_common(f_tree);

    // oracle / count
    auto* orc = app.add_subcommand("oracle", "exhaustive copy search");
    orc->add_option("--kind", kind_s, "rainbow|transversal|ordered");
    orc->add_option("--pattern", pattern_s)->required();
    orc->add_option("--budget", budget);
    orc->add_option("instance", instance_path)->required();
    orc->add_option("-o,--out", out_path);
    auto* cnt = app.add_subcommand("count", "exhaustive copy count");
    cnt->add_option("--kind", kind_s, "rainbow|transversal|ordered");
    cnt->add_option("--pattern", pattern_s)->required();
    cnt->add_option("--budget", budget);
    cnt->add_option("--theorem", theorem_s, "counttree: compare against the counting bound");
    cnt->add_option("--c", c_s, "exponent for the bound");
    cnt->add_option("instance", instance_path)->required();
    cnt->add_option("-o,--out", out_path);

    // audit
    auto* aud = app.add_subcommand("audit", "metrics and regime checks");
    aud->require_subcommand(1);
    auto add_aud_common = [&](CLI::App* a, bool needs_instance = true) {
        if (needs_instance) a->add_option("instance", instance_path)->required();
        a->add_option("-o,--out", out_path);
        a->add_option("--budget", budget);
    };
    auto* a_val = aud->add_subcommand("validate", "blockade well-formedness");
    add_aud_common(a_val);
    auto* a_ld = aud->add_subcommand("local-degree", "max cross-block degree");
    add_aud_common(a_ld);
    auto* a_coh = aud->add_subcommand("cohesion", "(x,y)-cohesion");
    a_coh->add_option("--x", cohx_s)->required();
    a_coh->add_option("--y", cohy_s)->required();
    add_aud_common(a_coh);
    auto* a_co = aud->add_subcommand("coherence", "eps-coherence");
    a_co->add_option("--eps", eps_s)->required();
    add_aud_common(a_co);
    auto* a_me = aud->add_subcommand("manyedges", "low-degree count lemma on k=2");
    a_me->add_option("--eps", eps_s)->required();
    a_me->add_option("--c", c_s)->required();
    a_me->add_option("--X", xset_s, "X vertex list, default whole block 0");
    a_me->add_flag("--verify-premises", verify_premises);
    add_aud_common(a_me);
    auto* a_rg = aud->add_subcommand("regime", "theorem regime card, optionally on an instance");
    a_rg->add_option("--theorem", theorem_s)->required();
    a_rg->add_option("--k", k);
    a_rg->add_option("--t", t);
    a_rg->add_option("--d", d);
    a_rg->add_option("--c", c_s);
    a_rg->add_option("instance", instance_path);
    a_rg->add_option("-o,--out", out_path);
    a_rg->add_option("--budget", budget);

    // sweep
    auto* sw = app.add_subcommand("sweep", "grid experiments, CSV output");
    sw->add_option("--experiment", experiment, "path-success|triangle-probe")->required();
    sw->add_option("--k", k, "blocks (path-success)");
    sw->add_option("--eps", eps_list_s, "comma list of rationals")->required();
    sw->add_option("--c", c_list_s, "comma list of rationals (triangle-probe)");
    sw->add_option("--W", W_list_s, "comma list of widths")->required();
    sw->add_option("--seeds", seeds_s, "comma list or lo..hi")->required();
    sw->add_option("--budget", budget);
    sw->add_flag("--timing", timing, "append a timing column (breaks byte-determinism)");
    sw->add_option("-o,--out", out_path);

    std::vector<std::string> args;
    try {
        args = splice_config(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::vector<const char*> cargs{argv[0]};
    for (auto& a : args) cargs.push_back(a.c_str());
    try {
        app.parse(int(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        GenSpec spec{seed, max_attempts, budget};

        if (gen_rb->parsed()) {
            auto res = gen_sparse_cohesive_bipartite(n, parse_rat(eps_s), spec);
            emit(write_instance(res.instance), out_path);
            Json params{{"n", n}, {"eps", eps_s}, {"seed", seed}};
            if (!audit_path.empty())
                emit(audit_json(res, "random-bipartite", params).dump(2), audit_path);
            return res.ok ? 0 : 3;
        }
        if (gen_sf->parsed()) {
            Rat eps = eps_s.empty() ? Rat(1, 8) : parse_rat(eps_s);
            auto res = gen_star_free_blockade(k, p, W, eps, spec);
            emit(write_instance(res.instance), out_path);
            Json params{{"k", k}, {"W", W}, {"p", p}, {"eps", rat_str(eps)}, {"seed", seed}};
            if (!audit_path.empty()) emit(audit_json(res, "star-free", params).dump(2), audit_path);
            return 0;
        }
        if (gen_db->parsed()) {
            auto res = gen_double_broom_counterexample(k, W, parse_rat(eps_s), spec);
            emit(write_instance(res.instance), out_path);
            Json params{{"k", k}, {"W", W}, {"eps", eps_s}, {"seed", seed}};
            if (!audit_path.empty())
                emit(audit_json(res, "double-broom", params).dump(2), audit_path);
            return 0;
        }
        if (gen_os->parsed()) {
            auto res = gen_ordered_star_counterexample(t, parse_rat(c_s), parse_rat(eps_s), n, spec,
                                                       strict_powers);
            emit(write_instance(res.instance), out_path);
            Json params{{"t", t}, {"c", c_s}, {"eps", eps_s}, {"n", n}, {"seed", seed}};
            if (!audit_path.empty())
                emit(audit_json(res, "ordered-star", params).dump(2), audit_path);
            return 0;
        }

        if (f_path->parsed()) {
            Blockade b = read_instance_file(instance_path);
            return finder_exit(find_transversal_path(b, parse_rat(eps_s)), out_path);
        }
        if (f_star->parsed()) {
            Blockade b = read_instance_file(instance_path);
            std::optional<Rat> eps;
            if (!eps_s.empty()) eps = parse_rat(eps_s);
            return finder_exit(find_rainbow_star(b, k, eps), out_path);
        }
        if (f_broom->parsed()) {
            Blockade b = read_instance_file(instance_path);
            std::optional<Rat> tau, eps;
            if (!tau_s.empty()) tau = parse_rat(tau_s);
            if (!eps_s.empty()) eps = parse_rat(eps_s);
            return finder_exit(find_transversal_broom(b, k, t, tau, eps, SearchBudget{budget}),
                               out_path);
        }
        if (f_c4->parsed()) {
            Blockade b = read_instance_file(instance_path);
            std::optional<Rat> eps, c;
            if (!eps_s.empty()) eps = parse_rat(eps_s);
            if (!c_s.empty()) c = parse_rat(c_s);
            return finder_exit(find_transversal_c4(b, eps, c), out_path);
        }
        if (f_cy->parsed()) {
            Blockade b = read_instance_file(instance_path);
            std::optional<Rat> eps;
            if (!eps_s.empty()) eps = parse_rat(eps_s);
            return finder_exit(find_transversal_cycle(b, eps), out_path);
        }
        if (f_cat->parsed()) {
            Blockade b = read_instance_file(instance_path);
            Pattern pat = parse_pattern_spec(pattern_s);
            std::optional<Rat> eps;
            if (!eps_s.empty()) eps = parse_rat(eps_s);
            return finder_exit(
                find_ordered_caterpillar(b, pat, 0, parse_vertex_list(c1_s), eps, d), out_path);
        }
        if (f_tree->parsed()) {
            Blockade b = read_instance_file(instance_path);
            Pattern pat = parse_pattern_spec(pattern_s);
            std::optional<Rat> c;
            if (!c_s.empty()) c = parse_rat(c_s);
            return finder_exit(embed_ordered_tree(b, pat, c, budget), out_path);
        }

        if (orc->parsed()) {
            Blockade b = read_instance_file(instance_path);
            Pattern pat = parse_pattern_spec(pattern_s);
            auto res = find_copy(b, pat, kind_from_name(kind_s), SearchBudget{budget});
            Json j;
            j["verdict"] = res.status == SearchStatus::found
                               ? "found"
                               : (res.status == SearchStatus::none ? "none" : "indeterminate");
            j["nodes"] = res.nodes;
            if (res.witness) j["witness"] = to_json(*res.witness);
            emit(j.dump(2), out_path);
            return res.status == SearchStatus::indeterminate ? 3 : 0;
        }
        if (cnt->parsed()) {
            Blockade b = read_instance_file(instance_path);
            Pattern pat = parse_pattern_spec(pattern_s);
            auto res = count_copies(b, pat, kind_from_name(kind_s), SearchBudget{budget});
            Json j;
            j["exact"] = res.exact;
            j["count"] = res.count.str();
            j["nodes"] = res.nodes;
            if (res.exact && theorem_s == "counttree") {
                auto card = regime_card("counttree",
                                        {.k = b.length(),
                                         .c = c_s.empty() ? std::optional<Rat>{} : parse_rat(c_s)});
                unsigned cp = unsigned(numerator(*card.c)), cq = unsigned(denominator(*card.c));
                Int W(b.width());
                PowThreshold bound{card.eps, W,
                                   unsigned(b.length()) * cq - unsigned(b.length() - 1) * cp, cq};
                j["bound"] = bound.str();
                j["bound_ceiled"] = bound.ceil().str();
                j["count_meets_bound"] = bound.at_least(res.count);
            }
            emit(j.dump(2), out_path);
            return res.exact ? 0 : 3;
        }

        if (a_val->parsed()) {
            Blockade b = read_instance_file(instance_path);
            auto rep = validate_blockade(b);
            emit(to_json(rep).dump(2), out_path);
            return rep.ok ? 0 : 2;
        }
        if (a_ld->parsed()) {
            Blockade b = read_instance_file(instance_path);
            Json j;
            j["local_degree"] = local_degree(b);
            emit(j.dump(2), out_path);
            return 0;
        }
        if (a_coh->parsed()) {
            Blockade b = read_instance_file(instance_path);
            auto rep = check_cohesion(b, Int(cohx_s), Int(cohy_s), budget);
            emit(to_json(rep).dump(2), out_path);
            return rep.verdict == Verdict::unknown ? 3 : 0;
        }
        if (a_co->parsed()) {
            Blockade b = read_instance_file(instance_path);
            auto rep = check_coherence(b, parse_rat(eps_s), budget);
            emit(to_json(rep).dump(2), out_path);
            return rep.verdict == Verdict::unknown ? 3 : 0;
        }
        if (a_me->parsed()) {
            Blockade b = read_instance_file(instance_path);
            std::vector<int> X = xset_s.empty() ? b.blocks[0] : parse_vertex_list(xset_s);
            auto rep = check_manyedges(b, parse_rat(eps_s), parse_rat(c_s), X, verify_premises,
                                       budget);
            emit(to_json(rep).dump(2), out_path);
            return 0;
        }
        if (a_rg->parsed()) {
            RegimeParams prm{k, t, d, c_s.empty() ? std::optional<Rat>{} : parse_rat(c_s)};
            auto card = regime_card(theorem_s, prm);
            Json j = to_json(card);
            if (!instance_path.empty()) {
                Blockade b = read_instance_file(instance_path);
                auto rv = check_regime(b, card, budget);
                Json v;
                v["verdict"] = verdict_name(rv.verdict);
                v["local_degree"] = rv.local_deg;
                v["degree_ok"] = rv.degree_ok;
                if (rv.coherence) v["coherence"] = to_json(*rv.coherence);
                if (rv.cohesion) v["cohesion"] = to_json(*rv.cohesion);
                j["instance_verdict"] = v;
            }
            emit(j.dump(2), out_path);
            return 0;
        }

        if (sw->parsed()) {
            SweepConfig cfg;
            cfg.experiment = experiment;
            cfg.k = k ? k : 2;
            cfg.eps_list = parse_rat_list(eps_list_s);
            if (!c_list_s.empty()) cfg.c_list = parse_rat_list(c_list_s);
            cfg.W_list = parse_int_list(W_list_s);
            cfg.seeds = parse_seed_list(seeds_s);
            cfg.audit_budget = budget;
            cfg.timing = timing;
            emit(run_sweep(cfg), out_path);
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

#include "hurwitz/cli.hpp"

#include "hurwitz/dyck_mobile.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/poly_lab.hpp"
#include "hurwitz/pruned_recursion.hpp"
#include "hurwitz/trop_classical.hpp"
#include "hurwitz/trop_pruned.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>

namespace hurwitz::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

const std::vector<std::string>& engine_names() {
    static const std::vector<std::string> names{"oracle", "tropical", "recursion", "pruned-tropical", "dyck"};
    return names;
}

namespace {

PrunedSide side_of(const RunConfig& cfg) {
    if (!cfg.pruned && cfg.engine != "recursion" && cfg.engine != "pruned-tropical") return PrunedSide::none;
    if (cfg.pruned_side == "right") return PrunedSide::right;
    if (cfg.pruned_side == "left") return PrunedSide::left;
    return cfg.engine == "dyck" ? PrunedSide::right : PrunedSide::left;
}

bool is_pruned(const RunConfig& cfg) { return side_of(cfg) != PrunedSide::none; }

OracleConfig oracle_config(const RunConfig& cfg) {
    OracleConfig o;
    if (cfg.budget) o.max_steps = *cfg.budget;
    return o;
}

// Values of the oracle are memoized in the cache file under a prefixed key;
// recursion entries use the bare type key.
std::string oracle_key(const HurwitzType& t) {
    const char* side = t.pruned_side == PrunedSide::none ? "H" : t.pruned_side == PrunedSide::right ? "PHR" : "PH";
    return std::string("oracle:") + side + ":" + to_string(t);
}

ComputeResult compute_with(const RunConfig& cfg, MemoCache& cache) {
    if (std::find(engine_names().begin(), engine_names().end(), cfg.engine) == engine_names().end())
        throw ParseError("unknown engine '" + cfg.engine + "'");
    if (cfg.budget && *cfg.budget == 0) throw ParseError("budgets must be positive");
    HurwitzType t = parse_type(cfg.type);
    t.pruned_side = side_of(cfg);

    ComputeResult r;
    r.type = t;
    r.engine = cfg.engine;
    auto t0 = std::chrono::steady_clock::now();

    if (cfg.engine == "oracle") {
        const std::string key = oracle_key(t);
        if (auto hit = cache.get(key)) {
            r.value = *hit;
        } else {
            std::uint64_t steps = 0;
            r.value = is_pruned(cfg) ? pruned_double_hurwitz_oracle(t, oracle_config(cfg), &steps)
                                     : double_hurwitz(t, oracle_config(cfg), &steps);
            r.budget_used = steps;
            cache.put(key, r.value);
        }
    } else if (cfg.engine == "tropical") {
        if (is_pruned(cfg)) throw Inapplicable("the tropical engine counts classical numbers; use pruned-tropical");
        TropConfig tc;
        if (cfg.budget) tc.max_states = *cfg.budget;
        auto graphs = enumerate_monodromy_graphs(t, tc);
        r.value = 0;
        for (auto& G : graphs) r.value += graph_weight(G);
        r.objects = graphs.size();
        r.budget_used = graphs.size();
    } else if (cfg.engine == "recursion") {
        RecursionConfig rc{oracle_config(cfg)};
        r.value = pruned_recursion(t, cache, rc);
        r.budget_used = cache.size();
    } else if (cfg.engine == "pruned-tropical") {
        PrunedTropConfig pc;
        if (cfg.budget) pc.max_states = *cfg.budget;
        pc.recursion.oracle = oracle_config(cfg);
        HurwitzType u = t;
        if (u.pruned_side == PrunedSide::right) u = HurwitzType(t.genus, t.nu, t.mu, PrunedSide::left);
        const int b = branch_count(u);
        if (b <= 0 || (u.genus == 0 && u.nu.length() <= 2)) {
            r.value = pruned_recursion(u, cache, pc.recursion);  // base cases have no graphs
        } else {
            auto graphs = enumerate_pruned_monodromy_graphs(u, pc);
            r.value = 0;
            for (auto& G : graphs) r.value += G.weight;
            r.objects = graphs.size();
            r.budget_used = graphs.size();
        }
    } else {  // dyck
        const int d = t.degree();
        if (t.genus != 0 || t.nu != Partition::ones(d))
            throw Inapplicable("Dyck paths count genus-0 types (mu, 1^d) only");
        if (t.pruned_side == PrunedSide::left)
            throw Inapplicable("pruned Dyck paths prune the 1^d side; use --pruned-side right");
        if (branch_count(t) <= 0) throw Inapplicable("Dyck paths need b > 0");
        auto paths = enumerate_hurwitz_dyck_paths(t.mu);
        std::size_t n = paths.size();
        if (is_pruned(cfg)) n = static_cast<std::size_t>(std::count_if(paths.begin(), paths.end(), is_pruned_dyck));
        // |D(mu)| = d H_0(mu) and H_0(mu, 1^d) = d! H_0(mu)
        r.value = ExactRational(BigInt(static_cast<unsigned long>(n)) * factorial(d - 1));
        r.objects = n;
        r.budget_used = paths.size();
    }
    r.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

json to_json(const ComputeResult& r) {
    json j;
    j["type"] = to_string(r.type);
    j["engine"] = r.engine;
    j["value"] = to_string(r.value);
    j["objects"] = r.objects ? json(*r.objects) : json(nullptr);
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

void print_text(const ComputeResult& r, std::ostream& out) {
    out << "type: " << to_string(r.type) << "\n"
        << "engine: " << r.engine << "\n"
        << "value: " << to_string(r.value) << "\n"
        << "objects: " << (r.objects ? std::to_string(*r.objects) : "-") << "\n"
        << "elapsed_ms: " << r.elapsed_ms << "\n"
        << "budget_used: " << r.budget_used << "\n";
}

struct CacheFile {
    MemoCache cache;
    std::string path;
    explicit CacheFile(std::string p) : path(std::move(p)) {
        if (!path.empty()) cache.load(path);
    }
    void save() const {
        if (!path.empty()) cache.save(path);
    }
};

// ------------------------------------------------------------------ crosscheck

struct SweepRow {
    std::string key;
    json entry;
    bool agree = true;
};

json evaluate_engines(const HurwitzType& t, const RunConfig& cfg, MemoCache& cache, bool pruned, bool& agree) {
    const std::vector<std::string> engines =
        pruned ? std::vector<std::string>{"oracle", "recursion", "pruned-tropical"}
               : std::vector<std::string>{"oracle", "tropical"};
    json j = json::object();
    std::optional<ExactRational> first;
    for (auto& e : engines) {
        RunConfig c = cfg;
        c.engine = e;
        c.type = to_string(t);
        c.pruned = pruned;
        c.pruned_side = pruned ? "left" : "";
        try {
            auto r = compute_with(c, cache);
            j[e] = to_string(r.value);
            if (!first) first = r.value;
            else if (*first != r.value) agree = false;
        } catch (const std::exception& ex) {
            j[e] = std::string("skipped: ") + ex.what();
        }
    }
    return j;
}

int cmd_crosscheck(const RunConfig& cfg, std::ostream& out) {
    std::vector<HurwitzType> types;
    for (int d = 1; d <= cfg.max_d; ++d)
        for (auto& mu : partitions_of(d))
            for (auto& nu : partitions_of(d))
                for (int g = 0;; ++g) {
                    int b = branch_count(g, static_cast<int>(mu.size()), static_cast<int>(nu.size()));
                    if (b > cfg.max_b) break;
                    if (b >= 0) types.emplace_back(g, Partition(mu), Partition(nu));
                }

    CacheFile cf(cfg.cache);
    std::vector<SweepRow> rows(types.size());
    const long n = static_cast<long>(types.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        auto& t = types[i];
        SweepRow& row = rows[i];
        row.key = to_string(t);
        bool agree = true;
        json e;
        e["type"] = row.key;
        e["b"] = branch_count(t);
        e["H"] = evaluate_engines(t, cfg, cf.cache, false, agree);
        e["PH"] = evaluate_engines(t, cfg, cf.cache, true, agree);
        e["status"] = agree ? "agree" : "disagree";
        row.entry = std::move(e);
        row.agree = agree;
    }
    std::sort(rows.begin(), rows.end(), [](auto& a, auto& b) { return a.key < b.key; });

    std::size_t disagree = 0;
    json list = json::array();
    for (auto& r : rows) {
        disagree += !r.agree;
        list.push_back(r.entry);
    }
    json report;
    report["max_d"] = cfg.max_d;
    report["max_b"] = cfg.max_b;
    report["types"] = rows.size();
    report["disagreements"] = disagree;
    report["pass"] = disagree == 0;
    report["results"] = std::move(list);

    fs::create_directories(cfg.out);
    const fs::path file = fs::path(cfg.out) / "crosscheck.json";
    std::ofstream(file) << report.dump(2) << "\n";
    cf.save();

    if (cfg.report == "json") {
        json summary;
        summary["types"] = rows.size();
        summary["disagreements"] = disagree;
        summary["pass"] = disagree == 0;
        summary["report"] = file.string();
        out << summary.dump() << "\n";
    } else {
        for (auto& r : rows)
            if (!r.agree) out << "disagree " << r.entry.dump() << "\n";
        out << rows.size() << " types, " << disagree << " disagreements: " << (disagree ? "FAIL" : "PASS") << "\n"
            << "report: " << file.string() << "\n";
    }
    return disagree ? kExitFailed : kExitOk;
}

// ---------------------------------------------------------------------- export

std::string type_dirname(const HurwitzType& t) {
    return "g" + std::to_string(t.genus) + "_mu" + join_ints(t.mu.parts(), "-") + "_nu" + join_ints(t.nu.parts(), "-");
}

int cmd_export(const RunConfig& cfg, std::ostream& out) {
    if (cfg.engine != "tropical" && cfg.engine != "pruned-tropical" && cfg.engine != "dyck")
        throw Inapplicable("export supports the tropical, pruned-tropical and dyck engines");
    HurwitzType t = parse_type(cfg.type);
    const fs::path dir = fs::path(cfg.out) / type_dirname(t);
    fs::create_directories(dir);

    json objects = json::array();
    auto write = [&](const std::string& hash, const std::string& ext, const std::string& body, json extra) {
        const std::string name = hash + ext;
        std::ofstream(dir / name) << body;
        json o;
        o["file"] = name;
        o["hash"] = hash;
        for (auto& [k, v] : extra.items()) o[k] = v;
        objects.push_back(std::move(o));
    };

    if (cfg.engine == "tropical") {
        TropConfig tc;
        if (cfg.budget) tc.max_states = *cfg.budget;
        for (auto& G : enumerate_monodromy_graphs(t, tc)) {
            json x;
            x["weight"] = to_string(graph_weight(G));
            write(G.hash(), ".dot", to_dot(G), x);
        }
    } else if (cfg.engine == "pruned-tropical") {
        PrunedTropConfig pc;
        if (cfg.budget) pc.max_states = *cfg.budget;
        t.pruned_side = cfg.pruned_side == "right" ? PrunedSide::right : PrunedSide::left;
        for (auto& G : enumerate_pruned_monodromy_graphs(t, pc)) {
            json x;
            x["weight"] = to_string(G.weight);
            json mult = json::array();
            for (auto& v : G.vertices) mult.push_back(to_string(v.multiplicity));
            x["multiplicities"] = mult;
            write(G.hash(), ".dot", to_dot(G), x);
        }
    } else {
        if (t.genus != 0 || t.nu != Partition::ones(t.degree()))
            throw Inapplicable("Dyck paths count genus-0 types (mu, 1^d) only");
        for (auto& D : enumerate_hurwitz_dyck_paths(t.mu)) {
            std::string body = D.serialize() + "\nheights " + join_ints(D.heights(), " ") + "\n";
            json x;
            x["path"] = D.serialize();
            x["pruned"] = is_pruned_dyck(D);
            write(stable_hash(D.serialize()), ".path", body, x);
        }
    }

    json manifest;
    manifest["type"] = to_string(t);
    manifest["engine"] = cfg.engine;
    manifest["count"] = objects.size();
    manifest["objects"] = objects;
    std::ofstream(dir / "manifest.json") << manifest.dump(2) << "\n";
    if (cfg.report == "json") {
        json s;
        s["type"] = to_string(t);
        s["engine"] = cfg.engine;
        s["count"] = objects.size();
        s["manifest"] = (dir / "manifest.json").string();
        out << s.dump() << "\n";
    } else {
        out << objects.size() << " objects written to " << dir.string() << "\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------------------ poly

struct PolyArgs {
    int genus = 0, m = 2, n = 2, box = 12;
    bool walls = false;
};

int cmd_poly(const RunConfig& cfg, const PolyArgs& p, std::ostream& out) {
    Engine engine;
    if (cfg.engine == "tropical" || (cfg.engine == "oracle" && !cfg.pruned)) engine = engine_hurwitz();
    else if (cfg.engine == "recursion" || cfg.engine == "pruned-tropical" || cfg.pruned) engine = engine_pruned_hurwitz();
    else throw Inapplicable("poly uses the tropical (H) or recursion (PH) engine");
    if (p.m < 1 || p.n < 1 || p.genus < 0 || p.box < 1) throw ParseError("poly needs g >= 0, m, n, box >= 1");

    auto reports = fit_all_chambers(engine, p.genus, p.m, p.n, p.box);
    bool ok = !reports.empty();
    json chambers = json::array();
    for (auto& r : reports) {
        ok = ok && r.pass;
        json c;
        c["signature"] = r.signature;
        c["points"] = r.points;
        c["pass"] = r.pass;
        if (r.pass) c["polynomial"] = r.fit.poly.to_string(p.m);
        else c["error"] = r.error;
        chambers.push_back(std::move(c));
    }
    json report;
    report["g"] = p.genus;
    report["m"] = p.m;
    report["n"] = p.n;
    json walls = json::array();
    for (auto& h : hyperplanes(p.m, p.n, false)) walls.push_back(h.to_string());
    report["walls"] = walls;
    report["chambers"] = chambers;
    if (p.walls) {
        if (p.genus != 0) throw Inapplicable("the wall-crossing check is genus 0 only");
        json wc = json::array();
        for (auto& w : check_genus0_wall_crossing(p.m, p.n, p.box)) {
            json x;
            x["wall"] = w.wall.to_string();
            x["points"] = w.points;
            x["failures"] = w.failures;
            ok = ok && w.failures == 0;
            wc.push_back(std::move(x));
        }
        report["wall_crossing"] = wc;
    }
    report["pass"] = ok;
    if (cfg.report == "json") {
        out << report.dump(2) << "\n";
    } else {
        for (auto& c : chambers) {
            out << "chamber " << c["signature"].dump() << " (" << c["points"].get<std::size_t>() << " points): ";
            out << (c["pass"].get<bool>() ? c["polynomial"].get<std::string>() : "FAIL " + c["error"].get<std::string>())
                << "\n";
        }
        if (report.contains("wall_crossing"))
            for (auto& w : report["wall_crossing"])
                out << "wall " << w["wall"].get<std::string>() << ": " << w["failures"].get<std::size_t>() << "/"
                    << w["points"].get<std::size_t>() << " failures\n";
    }
    return ok ? kExitOk : kExitFailed;
}

}  // namespace

ComputeResult compute(const RunConfig& cfg) {
    MemoCache& cache = default_recursion_cache();
    return compute_with(cfg, cache);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hurwitz number engines"};
    app.require_subcommand(1);
    RunConfig cfg;
    PolyArgs poly;
    std::uint64_t budget = 0;

    auto common = [&](CLI::App* s) {
        s->add_option("--engine", cfg.engine, "engine")->check(CLI::IsMember(engine_names()));
        s->add_option("--budget", budget, "search budget (oracle steps / graph states)")->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
        s->add_option("--report", cfg.report, "output format")->check(CLI::IsMember({"json", "text"}));
        s->add_option("--cache", cfg.cache, "memo cache file");
        s->add_option("--out", cfg.out, "output directory");
        s->add_flag("--pruned", cfg.pruned, "pruned numbers");
        s->add_option("--pruned-side", cfg.pruned_side, "side carrying the pruning condition")
            ->check(CLI::IsMember({"left", "right"}));
    };
    auto typed = [&](CLI::App* s) {
        auto* pos = s->add_option("type_string", cfg.type, "type, e.g. \"g=1;mu=5;nu=4,1\"");
        auto* opt = s->add_option("--type", cfg.type, "type, e.g. \"g=1;mu=5;nu=4,1\"");
        pos->excludes(opt);
        opt->excludes(pos);
    };

    auto* compute_cmd = app.add_subcommand("compute", "evaluate one type");
    common(compute_cmd);
    typed(compute_cmd);
    auto* cross = app.add_subcommand("crosscheck", "compare engines over a sweep");
    common(cross);
    cross->add_option("--max-d", cfg.max_d, "largest degree")->check(CLI::NonNegativeNumber);
    cross->add_option("--max-b", cfg.max_b, "largest branch count")->check(CLI::NonNegativeNumber);
    auto* exp = app.add_subcommand("export", "write DOT / path files and a manifest");
    common(exp);
    typed(exp);
    auto* pl = app.add_subcommand("poly", "fit chamber polynomials");
    common(pl);
    pl->add_option("-g,--genus", poly.genus, "genus");
    pl->add_option("-m", poly.m, "length of mu");
    pl->add_option("-n", poly.n, "length of nu");
    pl->add_option("--box", poly.box, "sampling box [1, box]");
    pl->add_flag("--walls", poly.walls, "also check genus-0 wall-crossing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }
    if (budget) cfg.budget = budget;

    try {
        if (*compute_cmd) {
            if (cfg.type.empty()) throw ParseError("missing type string");
            CacheFile cf(cfg.cache);
            auto r = compute_with(cfg, cf.cache);
            cf.save();
            if (cfg.report == "json") out << to_json(r).dump() << "\n";
            else print_text(r, out);
            return kExitOk;
        }
        if (*cross) return cmd_crosscheck(cfg, out);
        if (*exp) {
            if (cfg.type.empty()) throw ParseError("missing type string");
            return cmd_export(cfg, out);
        }
        return cmd_poly(cfg, poly, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded in " << e.what() << "\n";
        return kExitBudget;
    } catch (const Inapplicable& e) {
        err << "inapplicable: " << e.what() << "\n";
        return kExitInapplicable;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailed;
    }
}

}  // namespace hurwitz::cli

// Batch CLI over the library: constructions, freeness checks, structural
// audits, and exact planar Turan searches. Every invocation prints one JSON
// manifest to stdout; files go under --out. Exit code 0 iff all requested
// checks passed.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"
#include "pt/canonical.hpp"
#include "pt/constructions.hpp"
#include "pt/embedding.hpp"
#include "pt/graph6.hpp"
#include "pt/oracle.hpp"
#include "pt/patterns.hpp"
#include "pt/planarity.hpp"
#include "pt/search.hpp"
#include "pt/theta.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

pt::CyclePattern parse_pattern(const std::string& s) {
    std::vector<int> lens;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) lens.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (lens.empty()) throw CLI::ValidationError("--pattern", "empty pattern");
    return pt::CyclePattern(lens);
}

// Tiny integer-affine formula evaluator over n with exact rational
// intermediate values and a final floor, e.g. "5*n/2-4" or "3*n-6".
struct Formula {
    std::string text;

    long long operator()(int n) const {
        std::size_t pos = 0;
        auto r = parse_expr(n, pos);
        skip(pos);
        if (pos != text.size()) throw std::invalid_argument("formula: trailing input");
        long long q = r.first, d = r.second;
        long long f = q >= 0 ? q / d : -((-q + d - 1) / d);
        return f;
    }

  private:
    void skip(std::size_t& pos) const {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    }
    std::pair<long long, long long> parse_expr(int n, std::size_t& pos) const {
        auto acc = parse_term(n, pos);
        while (true) {
            skip(pos);
            if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
                char op = text[pos++];
                auto t = parse_term(n, pos);
                long long num = acc.first * t.second +
                                (op == '+' ? 1 : -1) * t.first * acc.second;
                acc = {num, acc.second * t.second};
            } else {
                return acc;
            }
        }
    }
    std::pair<long long, long long> parse_term(int n, std::size_t& pos) const {
        auto acc = parse_atom(n, pos);
        while (true) {
            skip(pos);
            if (pos < text.size() && (text[pos] == '*' || text[pos] == '/')) {
                char op = text[pos++];
                auto t = parse_atom(n, pos);
                if (op == '*') {
                    acc = {acc.first * t.first, acc.second * t.second};
                } else {
                    if (t.first == 0) throw std::invalid_argument("formula: div by 0");
                    acc = {acc.first * t.second, acc.second * t.first};
                    if (acc.second < 0) {
                        acc.first = -acc.first;
                        acc.second = -acc.second;
                    }
                }
            } else {
                return acc;
            }
        }
    }
    std::pair<long long, long long> parse_atom(int n, std::size_t& pos) const {
        skip(pos);
        if (pos >= text.size()) throw std::invalid_argument("formula: unexpected end");
        if (text[pos] == '(') {
            ++pos;
            auto r = parse_expr(n, pos);
            skip(pos);
            if (pos >= text.size() || text[pos] != ')')
                throw std::invalid_argument("formula: missing )");
            ++pos;
            return r;
        }
        if (text[pos] == 'n') {
            ++pos;
            return {n, 1};
        }
        if (text[pos] == '-') {
            ++pos;
            auto r = parse_atom(n, pos);
            return {-r.first, r.second};
        }
        std::size_t start = pos;
        while (pos < text.size() && isdigit(text[pos])) ++pos;
        if (start == pos) throw std::invalid_argument("formula: bad token");
        return {std::stoll(text.substr(start, pos - start)), 1};
    }
};

struct Manifest {
    std::string command;
    json parameters = json::object();
    std::vector<std::string> outputs;
    json summary = json::object();
    bool ok = true;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    int finish() {
        json j;
        j["command"] = command;
        j["parameters"] = parameters;
        j["version"] = "1.0.0";
        j["outputs"] = outputs;
        j["summary"] = summary;
        j["ok"] = ok;
        j["wall_time_s"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        std::cout << j.dump(2) << std::endl;
        return ok ? 0 : 1;
    }
};

std::string out_path(const std::string& dir, const std::string& name) {
    fs::create_directories(dir);
    return (fs::path(dir) / name).string();
}

json freeness_report(const pt::Graph& g, const pt::CyclePattern& p) {
    json j;
    auto w = pt::find_disjoint_cycles(g, p);
    j["pattern"] = p.lengths;
    j["free"] = !w.has_value();
    if (w) j["witness"] = w->cycles;
    return j;
}

pt::PatchSpec patch_by_name(const std::string& name) {
    if (name == "triangle") return pt::triangle_patch();
    if (name == "k4") return pt::k4_patch();
    if (name.rfind("stellated-", 0) == 0)
        return pt::stellated_patch(std::stoi(name.substr(10)));
    throw CLI::ValidationError("patch", "unknown patch " + name);
}

int cmd_construct(const std::string& family, int n, int t, int k, int ell,
                  const std::string& tprime, const std::string& tdouble,
                  bool allow_remainder, const std::string& out) {
    Manifest man;
    man.command = "construct";
    man.parameters = {{"family", family}, {"n", n},   {"t", t},
                      {"k", k},           {"ell", ell}, {"out", out}};
    pt::PlaneEmbedding emb;
    json checks = json::object();
    if (family == "matching-join") {
        emb = pt::matching_join(n);
        int expect = (5 * n) / 2 - 4;
        checks["edges"] = emb.graph.edge_count();
        checks["edge_formula_ok"] = emb.graph.edge_count() == expect;
        checks["c3c4_free"] =
            pt::is_pattern_free(emb.graph, pt::CyclePattern({3, 4}));
        checks["interior_edges"] =
            pt::interior_edges(emb).edges.size();
        man.ok = checks["edge_formula_ok"].get<bool>() &&
                 checks["c3c4_free"].get<bool>();
    } else if (family == "stellated") {
        emb = pt::stellated_triangulation(t);
        long long expect_n = 1;
        for (int i = 0; i <= t; ++i) expect_n *= 3;
        expect_n = (expect_n + 5) / 2;
        checks["order_ok"] = emb.graph.n == expect_n;
        json fv = json::object();
        for (auto [len, cnt] : pt::face_vector(emb))
            fv[std::to_string(len)] = cnt;
        checks["face_vector"] = fv;
        checks["triangulation_ok"] =
            pt::face_vector(emb) == std::map<int, int>{{3, 2 * emb.graph.n - 4}};
        man.ok = checks["order_ok"].get<bool>() &&
                 checks["triangulation_ok"].get<bool>();
    } else if (family == "wheel") {
        emb = pt::wheel_scaffold(pt::FamilyParams{k, ell, allow_remainder});
        int q = ell / (2 * k - 1);
        checks["edges"] = emb.graph.edge_count();
        checks["edge_formula_ok"] = emb.graph.edge_count() == 2 * ell + 3 * q;
        json fl = json::array();
        for (auto [len, cnt] : pt::face_vector(emb)) fl.push_back({len, cnt});
        checks["face_vector"] = fl;
        man.ok = checks["edge_formula_ok"].get<bool>();
    } else if (family == "gk-family" || family == "g0") {
        pt::PatchSpec ip = patch_by_name(family == "g0" ? "triangle" : tprime);
        pt::PatchSpec rp = patch_by_name(family == "g0" ? "k4" : tdouble);
        if (family == "g0") {
            emb = pt::g0(ell);
            k = 4;
        } else {
            emb = pt::gk_family(k, ell, ip, rp, allow_remainder);
        }
        int q = ell / (2 * k - 1);
        int n1 = ip.emb.graph.n, n2 = rp.emb.graph.n;
        long long en = static_cast<long long>(q) * (n1 - 3) +
                       static_cast<long long>(ell) * (n2 - 2) + 2;
        long long ee = static_cast<long long>(q) * (3 * n1 - 6) +
                       static_cast<long long>(ell) * (3 * n2 - 7);
        checks["order"] = emb.graph.n;
        checks["edges"] = emb.graph.edge_count();
        checks["order_formula_ok"] = emb.graph.n == en;
        checks["edge_formula_ok"] = emb.graph.edge_count() == ee;
        pt::CyclePattern two_ck({k, k});
        bool free = pt::is_pattern_free(emb.graph, two_ck);
        checks[family == "g0" ? "two_c4_free" : "two_ck_free"] = free;
        bool hub_on_all = true;
        for (const auto& c : pt::cycles_of_length(emb.graph, k))
            if (std::find(c.begin(), c.end(), 0) == c.end()) hub_on_all = false;
        checks["k_cycles_contain_hub"] = hub_on_all;
        man.ok = checks["order_formula_ok"].get<bool>() &&
                 checks["edge_formula_ok"].get<bool>() && free && hub_on_all;
    } else {
        std::cerr << "unknown family " << family << "\n";
        return 2;
    }

    std::string base = family;
    std::string g6 = pt::encode_graph6(emb.graph);
    std::string g6_path = out_path(out, base + ".g6");
    pt::write_graph6_file(g6_path, {g6});
    std::string emb_path = out_path(out, base + ".embedding.json");
    {
        std::ofstream f(emb_path);
        f << pt::embedding_to_json(emb) << "\n";
    }
    std::string rep_path = out_path(out, base + ".report.json");
    {
        json rep;
        rep["graph6"] = g6;
        rep["n"] = emb.graph.n;
        rep["edges"] = emb.graph.edge_count();
        rep["checks"] = checks;
        std::ofstream f(rep_path);
        f << rep.dump(2) << "\n";
    }
    man.outputs = {g6_path, emb_path, rep_path};
    man.summary = checks;
    return man.finish();
}

int cmd_check(const std::string& file, const pt::CyclePattern& pattern,
              const std::string& out) {
    Manifest man;
    man.command = "check";
    man.parameters = {{"input", file}, {"pattern", pattern.lengths}};
    auto graphs = pt::read_graph6_file(file);
    if (graphs.empty()) {
        std::cerr << "check: no graphs parsed from " << file << "\n";
        return 2;
    }
    std::string rep_path = out_path(out, "check.jsonl");
    std::ofstream rep(rep_path);
    int free_count = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        json line = freeness_report(graphs[i], pattern);
        line["index"] = i;
        line["n"] = graphs[i].n;
        rep << line.dump() << "\n";
        if (line["free"].get<bool>()) ++free_count;
    }
    man.outputs = {rep_path};
    man.summary = {{"graphs", graphs.size()}, {"free", free_count}};
    man.ok = free_count == static_cast<int>(graphs.size());
    return man.finish();
}

int cmd_audit(const std::string& file, int generate_n, const std::string& lemma,
              const std::string& out) {
    Manifest man;
    man.command = "audit";
    man.parameters = {{"corpus", file}, {"generate", generate_n}, {"lemma", lemma}};
    std::vector<pt::PlaneEmbedding> corpus;
    int skipped_nonplanar = 0, skipped_nonfree = 0;
    auto add_graph = [&](const pt::Graph& g) {
        auto pr = pt::test_planarity(g);
        if (std::holds_alternative<pt::KuratowskiWitness>(pr)) {
            ++skipped_nonplanar;
            return;
        }
        corpus.push_back(std::get<pt::PlaneEmbedding>(pr));
    };
    if (generate_n > 0) {
        pt::enumerate_planar(generate_n, 0, [&](const pt::Graph& g) {
            if (pt::is_pattern_free(g, pt::CyclePattern({3, 4}))) {
                add_graph(g);
            } else {
                ++skipped_nonfree;
            }
        });
    } else {
        for (const auto& g : pt::read_graph6_file(file)) add_graph(g);
    }
    auto records = pt::lemma_audit(corpus);
    std::string rep_path = out_path(out, "audit.jsonl");
    std::ofstream rep(rep_path);
    std::map<std::string, std::map<std::string, int>> tally;
    int failures = 0;
    for (const auto& r : records) {
        if (lemma != "all" && r.lemma != lemma && r.lemma != "corpus-freeness")
            continue;
        rep << pt::lemma_record_to_json(r) << "\n";
        tally[r.lemma][pt::to_string(r.status)]++;
        if (r.status == pt::LemmaRecord::Status::Fail) ++failures;
    }
    man.outputs = {rep_path};
    json t = json::object();
    for (auto& [l, counts] : tally) {
        json c = json::object();
        for (auto& [s, k] : counts) c[s] = k;
        t[l] = c;
    }
    man.summary = {{"corpus_size", corpus.size()},
                   {"skipped_nonplanar", skipped_nonplanar},
                   {"skipped_containing_pattern", skipped_nonfree},
                   {"tally", t},
                   {"failures", failures}};
    man.ok = failures == 0;
    return man.finish();
}

int cmd_search(int n, const pt::CyclePattern& pattern, const std::string& formula,
               bool use_naive, int jobs, const std::string& out) {
    Manifest man;
    man.command = "search";
    man.parameters = {{"n", n},
                      {"pattern", pattern.lengths},
                      {"engine", use_naive ? "naive" : "descent"},
                      {"jobs", jobs}};
    pt::SearchReport rep = use_naive ? pt::planar_turan_naive(n, pattern, jobs)
                                     : pt::planar_turan(n, pattern, jobs);
    std::string json_path = out_path(out, "search.json");
    {
        std::ofstream f(json_path);
        f << pt::report_to_json(rep) << "\n";
    }
    std::string csv_path = out_path(out, "search.csv");
    {
        std::ofstream f(csv_path);
        f << "n,pattern,max_edges,witness_count,graphs_examined,seconds\n";
        f << pt::report_to_csv_row(rep) << "\n";
    }
    man.outputs = {json_path, csv_path};
    man.summary = {{"max_edges", rep.max_edges},
                   {"witness_count", rep.witness_count},
                   {"graphs_examined", rep.graphs_examined}};
    if (!formula.empty()) {
        Formula f{formula};
        long long want = f(n);
        man.summary["formula_value"] = want;
        man.summary["relation"] = rep.max_edges == want  ? "equal"
                                  : rep.max_edges < want ? "below"
                                                         : "above";
    }
    return man.finish();
}

int cmd_crosscheck(int n, std::uint64_t samples, const pt::CyclePattern& pattern,
                   std::uint64_t seed, const std::string& out) {
    Manifest man;
    man.command = "crosscheck";
    man.parameters = {{"n", n},
                      {"samples", samples},
                      {"pattern", pattern.lengths},
                      {"seed", seed}};
    std::mt19937_64 rng(seed);
    std::uint64_t disagreements = 0, with_pattern = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        // random planar graph: insert random edges, skipping any that break
        // planarity, until the attempt budget runs out
        pt::Graph g = pt::build_graph(n, {});
        std::uniform_int_distribution<int> pickv(0, n - 1);
        int attempts = std::uniform_int_distribution<int>(n, 4 * n)(rng);
        for (int a = 0; a < attempts; ++a) {
            int u = pickv(rng), v = pickv(rng);
            if (u == v || g.adjacent(u, v)) continue;
            pt::Graph h = pt::add_edge(g, pt::make_edge(u, v));
            if (pt::is_planar(h)) g = std::move(h);
        }
        bool fast = pt::is_pattern_free(g, pattern);
        bool slow = !pt::naive_contains_disjoint_cycles(g, pattern);
        if (!fast) ++with_pattern;
        if (fast != slow) ++disagreements;
    }
    std::string rep_path = out_path(out, "crosscheck.json");
    {
        json j = {{"samples", samples},
                  {"disagreements", disagreements},
                  {"samples_containing_pattern", with_pattern}};
        std::ofstream f(rep_path);
        f << j.dump(2) << "\n";
    }
    man.outputs = {rep_path};
    man.summary = {{"disagreements", disagreements},
                   {"samples_containing_pattern", with_pattern}};
    man.ok = disagreements == 0;
    return man.finish();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar extremal graph toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // --jobs/--out may follow the subcommand

    int jobs = 0;
    app.add_option("--jobs", jobs, "worker count (default: PLANARTURAN_JOBS or hw)");

    std::string out = ".";
    app.add_option("--out", out, "output directory");

    // construct
    auto* c = app.add_subcommand("construct", "build a graph family instance");
    std::string family;
    c->add_option("family", family,
                  "matching-join | stellated | wheel | gk-family | g0")
        ->required();
    int n = 0, t = 0, k = 4, ell = 14;
    std::string tprime = "triangle", tdouble = "triangle";
    bool allow_remainder = false;
    c->add_option("--n", n, "order (matching-join)");
    c->add_option("--t", t, "stellation rounds");
    c->add_option("--k", k, "forbidden cycle length");
    c->add_option("--ell", ell, "rim length");
    c->add_option("--tprime", tprime, "inner patch: triangle|k4|stellated-T");
    c->add_option("--tdoubleprime", tdouble, "rim patch: triangle|k4|stellated-T");
    c->add_flag("--allow-remainder", allow_remainder,
                "permit a remainder arc (one long face)");

    // check
    auto* ch = app.add_subcommand("check", "pattern-freeness of graph6 input");
    std::string input;
    std::string pattern_str = "3,4";
    ch->add_option("input", input, "graph6 file, one graph per line")->required();
    ch->add_option("--pattern", pattern_str, "cycle lengths, e.g. 3,4");

    // audit
    auto* au = app.add_subcommand("audit", "lemma audit over a corpus");
    std::string corpus_file;
    int generate_n = 0;
    std::string lemma = "all";
    au->add_option("corpus", corpus_file, "graph6 corpus file");
    au->add_option("--generate", generate_n,
                   "audit all pattern-free planar graphs on this many vertices");
    au->add_option("--lemma", lemma,
                   "theta-intersection | theta-classification | face-count | "
                   "eout-matching | all");

    // search
    auto* se = app.add_subcommand("search", "exact planar Turan value");
    int search_n = 0;
    std::string formula;
    bool use_naive = false;
    se->add_option("--n", search_n, "order")->required();
    se->add_option("--pattern", pattern_str, "cycle lengths, e.g. 3,4");
    se->add_option("--formula", formula, "closed form to compare, e.g. 5*n/2-4");
    se->add_flag("--naive", use_naive, "use the labeled-scan oracle engine");

    // crosscheck
    auto* cc = app.add_subcommand("crosscheck",
                                  "detector vs naive oracle on random planar graphs");
    int cc_n = 8;
    std::uint64_t cc_samples = 1000, cc_seed = 20240501;
    cc->add_option("--n", cc_n, "order");
    cc->add_option("--samples", cc_samples, "sample count");
    cc->add_option("--seed", cc_seed, "rng seed");
    cc->add_option("--pattern", pattern_str, "cycle lengths, e.g. 3,4");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c)
            return cmd_construct(family, n, t, k, ell, tprime, tdouble,
                                 allow_remainder, out);
        if (*ch) return cmd_check(input, parse_pattern(pattern_str), out);
        if (*au) {
            if (corpus_file.empty() && generate_n <= 0) {
                std::cerr << "audit: need a corpus file or --generate N\n";
                return 2;
            }
            return cmd_audit(corpus_file, generate_n, lemma, out);
        }
        if (*se)
            return cmd_search(search_n, parse_pattern(pattern_str), formula,
                              use_naive, jobs, out);
        if (*cc)
            return cmd_crosscheck(cc_n, cc_samples, parse_pattern(pattern_str),
                                  cc_seed, out);
    } catch (const pt::Graph6ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

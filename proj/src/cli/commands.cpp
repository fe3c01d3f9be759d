#include "commands.hpp"
#include "report.hpp"

#include "pendant_tc/characterizations.hpp"
#include "pendant_tc/closed_forms.hpp"
#include "pendant_tc/families.hpp"
#include "pendant_tc/nordhaus_gaddum.hpp"
#include "pendant_tc/serialize.hpp"
#include "pendant_tc/solver.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <thread>

namespace pendant_tc::cli {

namespace {

constexpr std::uint64_t kBuiltinBudget = 50'000'000;

using Clock = std::chrono::steady_clock;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OutputOptions {
    std::string out;
    std::string format = "json";
};

struct SolveOptions {
    std::uint64_t budget = 0;
    int max_vertices = 24;

    SolverOptions solver() const { return {max_vertices, budget}; }
};

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Vertex> parse_set(const std::string &text)
{
    std::vector<Vertex> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find(',', pos), text.size());
        const std::string_view item(text.data() + pos, end - pos);
        Vertex v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || v < 0)
            throw UsageError("--set expects comma-separated vertex labels, got \"" + text + "\"");
        out.push_back(v);
        pos = end + 1;
    }
    return out;
}

void check_k(const Graph &g, int k, int lowest)
{
    if (k < lowest || k > g.order())
        throw UsageError("k = " + std::to_string(k) + " must lie in " + std::to_string(lowest) + ".." +
                         std::to_string(g.order()));
}

Json bounds_json(const std::vector<BoundResult> &bounds)
{
    Json out = Json::array();
    for (const auto &b : bounds)
        out.push_back(to_json(b));
    return out;
}

std::string set_text(const VertexSet &s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? " " : "") + std::to_string(s[i]);
    return out;
}

// ---------------------------------------------------------------- compute

struct ComputeArgs {
    std::string graph_path;
    std::string family;
    int k = 0;
    std::string set;
    bool witness = false;
};

struct Input {
    std::string source;
    Graph graph;
};

std::vector<Input> load_inputs(const std::string &graph_path, const std::string &family, std::istream &in)
{
    std::vector<Input> out;
    if (!family.empty()) {
        const FamilySpec spec = parse_family(family);
        out.push_back({to_string(spec), build(spec)});
        return out;
    }
    for (const auto &line : read_graph_lines(graph_path, in)) {
        try {
            out.push_back({"line " + std::to_string(line.line), parse_graph6(line.text)});
        }
        catch (const Graph6Error &e) {
            throw UsageError("line " + std::to_string(line.line) + ": " + e.what());
        }
    }
    if (out.empty())
        throw UsageError("no graphs in " + graph_path);
    return out;
}

int cmd_compute(const ComputeArgs &args, const OutputOptions &output, const SolveOptions &solve, Report &report,
                std::istream &in, std::ostream &out)
{
    const auto inputs = load_inputs(args.graph_path, args.family, in);
    CsvTable csv({"source", "graph6", "n", "k", "set", "tau", "bound", "minimizing_set"});
    int rejected = 0;
    for (const auto &input : inputs) {
        const Graph &g = input.graph;
        Json rec;
        rec["source"] = input.source;
        rec["graph6"] = write_graph6(g);
        rec["n"] = g.order();
        TreePacking witness;
        std::string set_cell, minimizing_cell;
        int tau = 0;
        if (!args.set.empty()) {
            const VertexSet s(parse_set(args.set));
            for (Vertex v : s)
                if (v >= g.order())
                    throw UsageError("vertex " + std::to_string(v) + " is outside the graph");
            check_k(g, static_cast<int>(s.size()), 2);
            const LocalResult r = local_tau(g, s, solve.solver());
            tau = r.tau;
            witness = r.witness;
            rec["k"] = s.size();
            rec["set"] = to_json(s);
            rec["tau"] = r.tau;
            rec["upper_bound"] = r.upper_bound_used;
            rec["nodes_explored"] = r.nodes_explored;
            set_cell = set_text(s);
        }
        else {
            check_k(g, args.k, 2);
            const GlobalResult r = tau_k(g, args.k, solve.solver());
            tau = r.tau_k;
            witness = r.witness;
            rec["k"] = args.k;
            rec["tau"] = r.tau_k;
            rec["minimizing_set"] = to_json(r.minimizing_set);
            rec["subsets_evaluated"] = r.subsets_evaluated;
            rec["nodes_explored"] = r.nodes_explored;
            minimizing_cell = set_text(r.minimizing_set);
        }
        const int k = rec["k"].get<int>();
        const auto bounds = necessary_upper_bounds(g, k);
        rec["bounds"] = bounds_json(bounds);
        if (args.witness) {
            const PackingVerdict verdict = verify_packing(g, witness);
            rejected += !verdict.accepted;
            rec["witness"] = to_json(witness);
            rec["witness_check"] = to_json(verdict);
        }
        csv.add_row({input.source, write_graph6(g), std::to_string(g.order()), std::to_string(k), set_cell,
                     std::to_string(tau), std::to_string(tightest(bounds)), minimizing_cell});
        report.records.push_back(std::move(rec));
    }
    report.summary = {{"graphs", inputs.size()}, {"witnesses_rejected", rejected}};
    if (output.format == "csv")
        emit(csv.str(), output.out, out);
    return rejected ? kCheckFailed : kOk;
}

// ---------------------------------------------------------------- family

struct FamilyArgs {
    std::string family;
    int k = 0;
    bool compare = false;
    bool witness = false;
};

std::optional<BoundResult> formula_for(const FamilySpec &spec, const Graph &g, int k)
{
    using Kind = FamilySpec::Kind;
    switch (spec.kind) {
    case Kind::Complete:
        if (k >= 3)
            return tau_complete(g.order(), k);
        break;
    case Kind::CompleteBipartite: return tau_complete_bipartite(spec.sizes[0], spec.sizes[1], k);
    case Kind::CompleteMultipartite:
        if (k >= 3)
            return tau_multipartite_upper(spec.sizes, k);
        break;
    case Kind::Threshold:
        if (k >= 3)
            return tau_threshold(min_degree(g), k);
        break;
    default: break;
    }
    return std::nullopt;
}

std::string formula_status(const BoundResult &f, int solver)
{
    if (f.kind == BoundKind::Exact)
        return f.value == solver ? "match" : "mismatch";
    if (solver > f.value)
        return "violated";
    return solver == f.value ? "tight" : "holds";
}

int cmd_family(const FamilyArgs &args, const OutputOptions &output, const SolveOptions &solve, Report &report,
               std::ostream &out)
{
    const FamilySpec spec = parse_family(args.family);
    const Graph g = build(spec);
    check_k(g, args.k, 2);
    const GlobalResult r = tau_k(g, args.k, solve.solver());
    const auto bounds = necessary_upper_bounds(g, args.k);

    Json rec;
    rec["family"] = to_string(spec);
    rec["graph6"] = write_graph6(g);
    rec["n"] = g.order();
    rec["k"] = args.k;
    rec["tau"] = r.tau_k;
    rec["minimizing_set"] = to_json(r.minimizing_set);
    rec["bounds"] = bounds_json(bounds);

    std::string status = "not-requested";
    std::string formula_value;
    if (args.compare) {
        if (auto f = formula_for(spec, g, args.k)) {
            status = formula_status(*f, r.tau_k);
            Json fj = to_json(*f);
            fj["status"] = status;
            rec["formula"] = fj;
            formula_value = std::to_string(f->value);
        }
        else {
            status = "no-formula";
            rec["formula"] = nullptr;
        }
    }
    bool witness_ok = true;
    if (args.witness) {
        const PackingVerdict verdict = verify_packing(g, r.witness);
        witness_ok = verdict.accepted;
        rec["witness"] = to_json(r.witness);
        rec["witness_check"] = to_json(verdict);
    }
    report.records.push_back(rec);
    report.summary = {{"status", status}};

    if (output.format == "csv") {
        CsvTable csv({"family", "graph6", "n", "k", "tau", "bound", "formula", "status"});
        csv.add_row({to_string(spec), write_graph6(g), std::to_string(g.order()), std::to_string(args.k),
                     std::to_string(r.tau_k), std::to_string(tightest(bounds)), formula_value, status});
        emit(csv.str(), output.out, out);
    }
    const bool failed = status == "mismatch" || status == "violated" || !witness_ok;
    return failed ? kCheckFailed : kOk;
}

// ---------------------------------------------------------------- scan

struct ScanArgs {
    std::string graphs;
    int k = 0;
    std::vector<std::string> checks;
    int jobs = 1;
    std::string host_reading = "stated";
    std::string outside_reading = "outside-neighbourhood";
};

struct CheckOutcome {
    std::string check;
    bool applicable = true;
    std::string predicted;
    std::optional<int> solver;
    bool agree = true;
    bool advisory = false;
    bool in_class = false;
    std::string evidence;
};

struct ScanResult {
    Json record;
    std::vector<CheckOutcome> outcomes;
    bool budget_exceeded = false;
    bool failed = false;
};

const std::vector<std::string> kAllChecks{"thm4", "thm5", "thm6", "thm7", "ng", "corollaries"};

CheckOutcome from_verdict(std::string name, const LargeTauVerdict &v, int target, const std::function<int()> &solver)
{
    CheckOutcome c;
    c.check = std::move(name);
    c.evidence = v.evidence;
    c.advisory = v.advisory;
    if (v.predicted == Prediction::NotApplicable) {
        c.applicable = false;
        c.predicted = to_string(v.predicted);
        return c;
    }
    const int tau = solver();
    c.solver = tau;
    switch (v.predicted) {
    case Prediction::Higher:
        c.predicted = ">" + std::to_string(target);
        c.agree = tau > target;
        break;
    case Prediction::Lower:
        c.predicted = "<" + std::to_string(target);
        c.agree = tau < target;
        break;
    default:
        c.predicted = std::to_string(target);
        c.agree = tau == target;
        c.in_class = true;
        break;
    }
    return c;
}

CheckOutcome plain(std::string name, bool holds, std::string predicted, std::optional<int> solver, std::string evidence,
                   bool advisory = false)
{
    CheckOutcome c;
    c.check = std::move(name);
    c.agree = holds;
    c.predicted = std::move(predicted);
    c.solver = solver;
    c.evidence = std::move(evidence);
    c.advisory = advisory;
    return c;
}

Json outcome_json(const CheckOutcome &c)
{
    Json j{{"check", c.check}, {"applicable", c.applicable}, {"predicted", c.predicted}};
    j["solver"] = c.solver ? Json(*c.solver) : Json(nullptr);
    j["agree"] = c.agree;
    j["advisory"] = c.advisory;
    j["evidence"] = c.evidence;
    return j;
}

class ScanEvaluator {
public:
    ScanEvaluator(const ScanArgs &args, const SolveOptions &solve) : args_(args), solve_(solve)
    {
        for (const auto &c : args.checks) {
            if (c == "all")
                selected_.insert(kAllChecks.begin(), kAllChecks.end());
            else
                selected_.insert(c);
        }
        nk2_.host_reading = args.host_reading == "converse" ? HostReading::ConverseProof : HostReading::AsStated;
        nk2_.outside_reading = args.outside_reading == "non-isolated" ? OutsideSetReading::NonIsolatedAtMostFour
                                                                     : OutsideSetReading::OutsideNeighbourhoodAtMostFour;
    }

    ScanResult evaluate(const GraphLine &line, const Graph &g) const
    {
        ScanResult r;
        const int n = g.order();
        const int k = args_.k;
        r.record["line"] = line.line;
        r.record["graph6"] = line.text;
        r.record["n"] = n;
        r.record["k"] = k;
        if (k < 3 || k > n) {
            r.record["skipped"] = "k outside 3..n";
            return r;
        }
        if (n > solve_.max_vertices) {
            r.record["skipped"] = "order exceeds solver cap";
            return r;
        }
        try {
            run_checks(g, r);
        }
        catch (const BudgetExceeded &e) {
            r.budget_exceeded = true;
            r.record["error"] = e.what();
        }
        Json checks = Json::array();
        for (const auto &c : r.outcomes) {
            checks.push_back(outcome_json(c));
            if (c.applicable && !c.agree && !c.advisory)
                r.failed = true;
        }
        r.record["checks"] = std::move(checks);
        return r;
    }

private:
    bool wants(const std::string &name) const { return selected_.count(name) != 0; }

    void run_checks(const Graph &g, ScanResult &r) const
    {
        const int n = g.order();
        const int k = args_.k;
        const SolverOptions opts = solve_.solver();
        std::optional<int> tau;
        auto solver = [&]() {
            if (!tau)
                tau = tau_k(g, k, opts).tau_k;
            return *tau;
        };
        const bool connected = is_connected(g);

        if (wants("thm4"))
            r.outcomes.push_back(from_verdict("thm4", classify_nk(g, k), n - k, solver));
        if (wants("thm5"))
            r.outcomes.push_back(from_verdict("thm5", classify_nk1(g, k), n - k - 1, solver));
        if (wants("thm6")) {
            r.outcomes.push_back(from_verdict("thm6", classify_nk2(g, k, nk2_), n - k - 2, solver));
            Nk2Options alt = nk2_;
            std::string alt_name;
            if (k == 4) {
                alt.host_reading = nk2_.host_reading == HostReading::AsStated ? HostReading::ConverseProof
                                                                               : HostReading::AsStated;
                alt_name = "thm6-other-hosts";
            }
            else if (k >= 5) {
                alt.outside_reading = nk2_.outside_reading == OutsideSetReading::NonIsolatedAtMostFour
                                          ? OutsideSetReading::OutsideNeighbourhoodAtMostFour
                                          : OutsideSetReading::NonIsolatedAtMostFour;
                alt_name = "thm6-other-reading";
            }
            if (!alt_name.empty()) {
                CheckOutcome c = from_verdict(alt_name, classify_nk2(g, k, alt), n - k - 2, solver);
                c.advisory = true;
                r.outcomes.push_back(std::move(c));
            }
        }
        if (wants("thm7")) {
            if (connected) {
                const ZeroVerdict z = classify_zero(g, k);
                const std::string why = "kappa " + std::to_string(z.kappa) + ", delta " + std::to_string(z.delta);
                if (z.zero())
                    r.outcomes.push_back(plain("thm7", solver() == 0, "0", solver(), to_string(z.reason) + ": " + why));
                else
                    r.outcomes.push_back(plain("thm7", true, "undecided", solver(), why));
            }
            else {
                CheckOutcome c;
                c.check = "thm7";
                c.applicable = false;
                c.predicted = "not-applicable";
                c.evidence = "graph is disconnected";
                r.outcomes.push_back(c);
            }
        }
        if (wants("ng")) {
            const NGRecord rec = ng_evaluate(g, k, opts);
            if (!tau)
                tau = rec.tau_g;
            r.record["ng"] = to_json(rec);
            r.outcomes.push_back(plain("ng-sum", rec.sum_within(), "<=" + std::to_string(rec.sum_upper), rec.sum,
                                       "sum of both sides"));
            r.outcomes.push_back(plain("ng-product", rec.product_within_quarter(),
                                       "<=" + std::to_string(rec.product_upper_quarter), rec.product,
                                       "floor((n-k)^2/4)"));
            r.outcomes.push_back(plain("ng-product-halved", rec.product_within_halved(),
                                       "<=" + std::to_string(rec.product_upper_halved), rec.product,
                                       "floor((n-k)/2)^2", true));
            const DegreeSpreadCheck spread = check_degree_spread(g, rec);
            if (spread.premise)
                r.outcomes.push_back(plain("ng-degree-spread", spread.holds, "<=" + std::to_string(k - 1), spread.spread,
                                           "max degree - min degree when the sum is n-k"));
            const DisconnectedSumCheck disc = check_disconnected_sum(g, rec);
            if (disc.applicable)
                r.outcomes.push_back(plain("ng-disconnected", disc.holds, disc.edgeless ? "n-k" : "<n-k", rec.sum,
                                           disc.edgeless ? "edgeless graph" : "disconnected graph with edges"));
        }
        if (wants("corollaries") && connected && n >= 5) {
            for (const auto &row : corollaries_near_n(g, opts)) {
                CheckOutcome c = plain("near-n k=" + std::to_string(row.k), row.agrees(),
                                       row.predicted ? std::to_string(*row.predicted) : "none", row.solver, row.rule);
                c.applicable = row.predicted.has_value();
                r.outcomes.push_back(std::move(c));
            }
            for (const auto &s : check_near_n_ng(g, opts))
                r.outcomes.push_back(plain("near-n-sum k=" + std::to_string(s.k), s.holds, s.claim, s.sum,
                                           s.either_complete ? "G or complement complete" : "neither side complete"));
        }
        if (tau)
            r.record["tau"] = *tau;
    }

    const ScanArgs &args_;
    const SolveOptions &solve_;
    std::set<std::string> selected_;
    Nk2Options nk2_;
};

int cmd_scan(const ScanArgs &args, const OutputOptions &output, const SolveOptions &solve, Report &report,
             std::istream &in, std::ostream &out, std::ostream &err)
{
    const auto lines = read_graph_lines(args.graphs, in);
    std::vector<std::optional<Graph>> graphs(lines.size());
    Json malformed = Json::array();
    for (std::size_t i = 0; i < lines.size(); ++i) {
        try {
            graphs[i] = parse_graph6(lines[i].text);
        }
        catch (const Graph6Error &e) {
            malformed.push_back({{"line", lines[i].line}, {"error", e.what()}});
            err << "line " << lines[i].line << ": skipped malformed graph6: " << e.what() << '\n';
        }
    }

    const ScanEvaluator evaluator(args, solve);
    std::vector<ScanResult> results(lines.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < lines.size(); i = next++)
            if (graphs[i])
                results[i] = evaluator.evaluate(lines[i], *graphs[i]);
    };
    const int jobs = std::max(1, std::min<int>(args.jobs, static_cast<int>(lines.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto &t : pool)
        t.join();

    struct Tally {
        int evaluated = 0, agree = 0, disagree = 0, advisory_disagree = 0, not_applicable = 0, in_class = 0;
    };
    std::map<std::string, Tally> tallies;
    CsvTable csv({"line", "graph6", "n", "k", "check", "applicable", "predicted", "solver", "agree", "advisory",
                  "evidence"});
    int failures = 0, budget_hits = 0, graphs_done = 0;
    Json failing = Json::array();
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (!graphs[i])
            continue;
        ScanResult &r = results[i];
        ++graphs_done;
        budget_hits += r.budget_exceeded;
        if (r.failed) {
            ++failures;
            failing.push_back(lines[i].line);
        }
        for (const auto &c : r.outcomes) {
            // Per-k names such as "near-n k=5" are tallied under their stem.
            const std::string key = c.check.substr(0, c.check.find(' '));
            Tally &t = tallies[key];
            if (!c.applicable) {
                ++t.not_applicable;
            }
            else {
                ++t.evaluated;
                t.in_class += c.in_class;
                if (c.agree)
                    ++t.agree;
                else if (c.advisory)
                    ++t.advisory_disagree;
                else
                    ++t.disagree;
            }
            csv.add_row({std::to_string(lines[i].line), lines[i].text, std::to_string(graphs[i]->order()),
                         std::to_string(args.k), c.check, c.applicable ? "1" : "0", c.predicted,
                         c.solver ? std::to_string(*c.solver) : "", c.agree ? "1" : "0", c.advisory ? "1" : "0",
                         c.evidence});
        }
        report.records.push_back(std::move(r.record));
    }

    Json checks = Json::object();
    for (const auto &[name, t] : tallies)
        checks[name] = {{"evaluated", t.evaluated},         {"agree", t.agree},
                        {"disagree", t.disagree},           {"advisory_disagree", t.advisory_disagree},
                        {"not_applicable", t.not_applicable}, {"in_class", t.in_class}};
    report.summary = {{"graphs", graphs_done},
                      {"malformed", malformed.size()},
                      {"malformed_lines", malformed},
                      {"budget_exceeded", budget_hits},
                      {"failing_graphs", failures},
                      {"failing_lines", failing},
                      {"checks", checks}};
    if (output.format == "csv")
        emit(csv.str(), output.out, out);
    if (failures)
        return kCheckFailed;
    return budget_hits ? kBudget : kOk;
}

std::vector<std::string> command_echo(int argc, const char *const *argv)
{
    std::vector<std::string> out;
    for (int i = 1; i < argc; ++i)
        out.emplace_back(argv[i]);
    return out;
}

} // namespace

std::uint64_t default_budget()
{
    const char *env = std::getenv("PENDANT_TC_BUDGET");
    if (!env || !*env)
        return kBuiltinBudget;
    std::uint64_t value = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("PENDANT_TC_BUDGET must be a nonnegative integer, got \"" + std::string(text) + "\"");
    return value;
}

int run(int argc, const char *const *argv, std::istream &in, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact pendant tree-connectivity: compute, scan graph6 files, compare closed forms"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    OutputOptions output;
    SolveOptions solve;
    std::optional<std::uint64_t> budget_flag;
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--out", output.out, "Write the report here instead of stdout");
        sub->add_option("--format", output.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--budget", budget_flag, "Search-node budget per solver call (0 = unlimited)");
        sub->add_option("--max-vertices", solve.max_vertices, "Largest order the exact solver accepts")
            ->check(CLI::Range(1, 64));
    };

    ComputeArgs compute;
    CLI::App *c = app.add_subcommand("compute", "tau_k of a graph, or local tau of one terminal set");
    auto *graph_opt = c->add_option("--graph", compute.graph_path, "graph6 file, one graph per line, or - for stdin");
    auto *family_opt = c->add_option("--family", compute.family, "Family spec such as K_6, K_{3,3}, W_6, C7+3K1");
    graph_opt->excludes(family_opt);
    family_opt->excludes(graph_opt);
    c->add_option("--k", compute.k, "Terminal set size");
    c->add_option("--set", compute.set, "Comma-separated terminal set; computes local tau");
    c->add_flag("--witness", compute.witness, "Embed and verify a maximum tree packing");
    add_common(c);

    ScanArgs scan;
    CLI::App *s = app.add_subcommand("scan", "Check structural predictions against the solver over a graph6 file");
    s->add_option("--graphs", scan.graphs, "graph6 file, one graph per line, or - for stdin")->required();
    s->add_option("--k", scan.k, "Terminal set size")->required();
    s->add_option("--check", scan.checks, "Checks to run (comma separated)")
        ->delimiter(',')
        ->check(CLI::IsMember({"thm4", "thm5", "thm6", "thm7", "ng", "corollaries", "all"}));
    s->add_option("--jobs", scan.jobs, "Worker threads")->check(CLI::Range(1, 256));
    s->add_option("--host-reading", scan.host_reading, "k = 4 host list: stated (C5+K2) or converse (P5+K2)")
        ->check(CLI::IsMember({"stated", "converse"}));
    s->add_option("--outside-reading", scan.outside_reading,
                  "k >= 5 size condition: outside-neighbourhood (default) or non-isolated")
        ->check(CLI::IsMember({"non-isolated", "outside-neighbourhood"}));
    add_common(s);

    FamilyArgs family;
    CLI::App *f = app.add_subcommand("family", "Solve a named family and compare with its closed form");
    f->add_option("--family", family.family, "Family spec")->required();
    f->add_option("--k", family.k, "Terminal set size")->required();
    f->add_flag("--compare-formula", family.compare, "Compare the solver value with the family's formula");
    f->add_flag("--witness", family.witness, "Embed and verify a maximum tree packing");
    add_common(f);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    const auto start = Clock::now();
    Report report;
    report.command = command_echo(argc, argv);
    int code = kOk;
    try {
        solve.budget = budget_flag ? *budget_flag : default_budget();
        if (*c) {
            if (compute.graph_path.empty() && compute.family.empty())
                throw UsageError("compute needs --graph or --family");
            if (compute.set.empty() && c->count("--k") == 0)
                throw UsageError("compute needs --k or --set");
            if (!compute.set.empty() && c->count("--k") != 0 &&
                parse_set(compute.set).size() != static_cast<std::size_t>(compute.k))
                throw UsageError("--k does not match the size of --set");
            code = cmd_compute(compute, output, solve, report, in, out);
        }
        else if (*s) {
            if (scan.checks.empty())
                scan.checks = {"all"};
            code = cmd_scan(scan, output, solve, report, in, out, err);
        }
        else {
            code = cmd_family(family, output, solve, report, out);
        }
    }
    catch (const BudgetExceeded &e) {
        err << "error: " << e.what() << '\n';
        return kBudget;
    }
    catch (const SizeCapExceeded &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    catch (const std::runtime_error &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    report.wall_seconds = seconds_since(start);
    if (output.format == "json") {
        try {
            emit(report.to_json().dump(2) + "\n", output.out, out);
        }
        catch (const std::runtime_error &e) {
            err << "error: " << e.what() << '\n';
            return kUsage;
        }
    }
    return code;
}

} // namespace pendant_tc::cli

// wallman: command-line workbench over the library.
//
// Every command prints one JSON report on stdout. Exit status: 0 when all
// checks pass, 1 when a check fails, 2 when the input cannot be used.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

#include "wallman.hpp"

using namespace wallman;
namespace fs = std::filesystem;

namespace {

struct Globals {
    bool pretty = false;
    bool no_timings = false;
    std::uint64_t seed = 1;
    std::string dot;
    std::string corpus;
};

Globals G;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

class Timer {
public:
    void mark(const std::string& phase)
    {
        const auto now = Clock::now();
        timings_[phase] = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
    }
    const json& timings() const { return timings_; }

private:
    Clock::time_point last_ = Clock::now();
    json timings_ = json::object();
};

struct Outcome {
    json report;
    bool pass = true;
};

fs::path resolve(const std::string& arg)
{
    const fs::path p(arg);
    if (fs::exists(p) || G.corpus.empty())
        return p;
    for (const auto& candidate : {fs::path(G.corpus) / p, fs::path(G.corpus) / (arg + ".json")})
        if (fs::exists(candidate))
            return candidate;
    return p;
}

LatticePtr load(const std::string& arg)
{
    auto L = share(read_lattice(resolve(arg)));
    if (!G.dot.empty())
        write_text(G.dot, lattice_to_dot(*L));
    return L;
}

json verdict_json(const Verdict& v, const std::function<std::string(ElementId)>& name)
{
    json w = json::array();
    for (auto x : v.witness)
        w.push_back(name(x));
    json out{{"holds", v.holds}};
    if (!v.holds)
        out["witness"] = w;
    return out;
}

json verdict_json(const FiniteLattice& L, const Verdict& v)
{
    return verdict_json(v, [&](ElementId a) { return L.element_name(a); });
}

json verdict_json(const WallmanSpace& S, const Verdict& v)
{
    return verdict_json(v, [&](ElementId p) { return S.point_name(p); });
}

json lattice_header(const FiniteLattice& L) { return {{"name", L.name()}, {"size", L.size()}}; }

FilterClass parse_class(const std::string& s)
{
    if (s == "all")
        return FilterClass::all;
    if (s == "prime")
        return FilterClass::prime;
    return FilterClass::ultra;
}

Strategy parse_strategy(const std::string& s)
{
    if (s == "brute")
        return Strategy::brute;
    if (s == "fast")
        return Strategy::fast;
    return Strategy::exhaustive;
}

const char* strategy_name(Strategy s)
{
    switch (s) {
    case Strategy::brute:
        return "brute";
    case Strategy::fast:
        return "fast";
    case Strategy::exhaustive:
        return "exhaustive";
    }
    return "?";
}

// ---- commands ----

Outcome cmd_check(const std::string& path, const std::vector<std::string>& require)
{
    Timer t;
    const auto L = load(path);
    t.mark("load");
    const auto r = analyze(*L);
    const auto laws = check_lattice_laws(*L);
    t.mark("run");
    json checks{{"lattice", verdict_json(*L, laws)},
                {"distributive", verdict_json(*L, r.distributive)},
                {"normal", verdict_json(*L, r.normal)},
                {"separative", verdict_json(*L, r.separative)},
                {"boolean", verdict_json(*L, r.boolean)}};
    bool pass = true;
    for (const auto& name : require)
        pass = pass && checks.at(name).at("holds").get<bool>();
    json report{{"command", "check"}, {"inputs", {L->name()}}, {"lattice", lattice_header(*L)},
                {"checks", checks},   {"required", require},  {"pass", pass}};
    report["timings_ms"] = t.timings();
    return {report, pass};
}

Outcome cmd_filters(const std::string& path, const std::string& cls_name, const std::string& strategy_arg,
                    bool cross_check)
{
    Timer t;
    const auto L = load(path);
    t.mark("load");
    const auto cls = parse_class(cls_name);
    const auto strategy = strategy_arg.empty() ? default_strategy(*L) : parse_strategy(strategy_arg);
    const auto limits = EnumerationLimits::from_env();
    const auto filters = enumerate_filters(*L, cls, strategy, limits);
    t.mark("enumerate");
    json list = json::array();
    for (const auto& f : filters)
        list.push_back(filter_to_json(*L, f));
    json report{{"command", "filters"},       {"inputs", {L->name()}}, {"lattice", lattice_header(*L)},
                {"class", cls_name},          {"strategy", strategy_name(strategy)},
                {"count", filters.size()},    {"filters", list}};
    bool pass = true;
    if (cross_check) {
        json oracle = json::object();
        const auto brute = enumerate_filters(*L, cls, Strategy::brute, limits);
        oracle["brute"] = brute == filters;
        pass = brute == filters;
        if (is_distributive(*L)) {
            const bool same = enumerate_filters(*L, cls, Strategy::fast, limits) == brute;
            oracle["fast"] = same;
            pass = pass && same;
        }
        if (L->size() <= limits.exhaustive_max) {
            const bool same = enumerate_filters(*L, cls, Strategy::exhaustive, limits) == brute;
            oracle["exhaustive"] = same;
            pass = pass && same;
        }
        t.mark("oracle");
        report["oracle"] = oracle;
    }
    report["pass"] = pass;
    report["timings_ms"] = t.timings();
    return {report, pass};
}

Outcome cmd_space(const std::string& path, const std::string& kind_name, bool axioms)
{
    Timer t;
    const auto L = load(path);
    t.mark("load");
    const auto kind = kind_name == "ultra" ? SpaceKind::ultra : SpaceKind::prime;
    const auto S = build_space(L, kind);
    t.mark("build");
    json report{{"command", "space"}, {"inputs", {L->name()}}, {"lattice", lattice_header(*L)},
                {"strategy", strategy_name(default_strategy(*L))}, {"space", space_to_json(S)}};
    bool pass = true;
    const auto base = check_base_homomorphism(S);
    report["checks"] = {{"base_homomorphism", verdict_json(*L, base)}};
    pass = base.holds;
    if (axioms) {
        const auto r = separation_axioms(S);
        report["axioms"] = {{"T0", verdict_json(S, r.t0)}, {"T1", verdict_json(S, r.t1)},
                            {"hausdorff", verdict_json(S, r.hausdorff)}};
        t.mark("axioms");
    }
    report["pass"] = pass;
    report["timings_ms"] = t.timings();
    return {report, pass};
}

Outcome cmd_suite(const std::string& path)
{
    Timer t;
    const auto L = load(path);
    t.mark("load");
    const auto r = vbeer_suite(L);
    t.mark("run");
    json clauses = json::array();
    for (const auto& c : r.clauses) {
        json e{{"id", c.id}, {"statement", c.statement}, {"asserted", c.asserted}, {"evaluated", c.evaluated}};
        if (c.evaluated)
            e["holds"] = c.holds;
        if (!c.note.empty())
            e["note"] = c.note;
        clauses.push_back(e);
    }
    json report{{"command", "suite"},
                {"inputs", {L->name()}},
                {"lattice", lattice_header(*L)},
                {"properties",
                 {{"distributive", r.distributive},
                  {"normal", r.normal},
                  {"separative", r.separative},
                  {"boolean", r.boolean}}},
                {"points", {{"prime", r.prime_points}, {"ultra", r.ultra_points}}},
                {"clauses", clauses},
                {"pass", r.consistent()}};
    report["timings_ms"] = t.timings();
    return {report, r.consistent()};
}

struct LoadedHom {
    LatticeHom h;
    std::vector<std::string> inputs;
};

// A hom file names its lattices; they are embedded under "lattices" or live
// next to it as <name>.json, or in the corpus directory.
LoadedHom load_hom(const std::string& arg)
{
    const auto path = resolve(arg);
    const auto j = read_json(path);
    const auto d = hom_description_from_json(j);
    std::map<std::string, LatticePtr> embedded;
    if (j.contains("lattices"))
        for (const auto& l : j.at("lattices")) {
            auto L = share(lattice_from_json(l));
            embedded.emplace(L->name(), L);
        }
    auto find = [&](const std::string& name) -> LatticePtr {
        if (auto it = embedded.find(name); it != embedded.end())
            return it->second;
        std::vector<fs::path> candidates{path.parent_path() / (name + ".json")};
        if (!G.corpus.empty())
            candidates.push_back(fs::path(G.corpus) / (name + ".json"));
        for (const auto& c : candidates)
            if (fs::exists(c))
                return share(read_lattice(c));
        throw Error(ErrorCode::invalid_argument, path.string() + ": cannot find lattice '" + name + "'");
    };
    auto h = make_hom(find(d.source), find(d.target), d.map);
    require_hom(h);
    return {std::move(h), {path.stem().string(), d.source, d.target}};
}

json implication_json(const ImplicationReport& r)
{
    return {{"antecedent", r.antecedent}, {"consequent", r.consequent}, {"holds", r.holds()}};
}

Outcome cmd_hom(const std::string& path, bool induced, bool separative, bool mbeer, bool unchecked, bool laws,
                const std::string& then_path)
{
    Timer t;
    const auto [h, inputs] = load_hom(path);
    t.mark("load");
    if (!induced && !separative && !mbeer && !laws)
        induced = true;
    json report{{"command", "hom"},
                {"inputs", inputs},
                {"source", lattice_header(*h.source)},
                {"target", lattice_header(*h.target)}};
    bool pass = true;
    if (induced) {
        const auto f = induced_map(h);
        const auto kernel = surjectivity_from_kernel(h);
        const auto embed = embedding_from_separation(h);
        report["induced"] = {{"map", space_map_to_json(f)},
                             {"continuous", static_cast<bool>(is_continuous(f))},
                             {"injective", f.injective()},
                             {"surjective", f.surjective()},
                             {"kernel_implies_onto", implication_json(kernel)},
                             {"separating_implies_injective", implication_json(embed)}};
        pass = pass && kernel.holds() && embed.holds();
    }
    if (separative)
        report["separative"] = verdict_json(*h.source, is_separative_hom(h));
    if (mbeer) {
        const auto r = mbeer_equivalence(h, !unchecked);
        report["equivalence"] = {{"separative", r.separative.holds},
                                 {"preimage_ultra", r.preimage_ultra.holds},
                                 {"pulls_back_base", r.pulls_back_base.holds},
                                 {"equivalent", r.equivalent()}};
        pass = pass && (unchecked || r.equivalent());
    }
    if (laws) {
        const auto g = then_path.empty() ? identity_hom(h.target) : load_hom(then_path).h;
        const auto r = functor_laws(g, h);
        report["laws"] = {{"composition", r.composition.holds}, {"identities", r.identities}};
        if (!then_path.empty())
            report["laws"]["then"] = g.target->name();
        pass = pass && r.composition.holds && r.identities;
    }
    t.mark("run");
    report["pass"] = pass;
    report["timings_ms"] = t.timings();
    return {report, pass};
}

Outcome cmd_stone(const std::string& path)
{
    Timer t;
    const auto L = load(path);
    t.mark("load");
    const auto r = alexandrov(L);
    t.mark("run");
    json j = json::array();
    for (ElementId a = 0; a < L->size(); ++a)
        j.push_back({L->element_name(a), r.algebra->element_name(r.j(a))});
    const bool pass = r.algebra_boolean && r.zero_dimensional && r.onto;
    json report{{"command", "stone"},
                {"inputs", {L->name()}},
                {"lattice", lattice_header(*L)},
                {"algebra", lattice_header(*r.algebra)},
                {"j", j},
                {"ult_j", space_map_to_json(r.ult_j)},
                {"algebra_boolean", r.algebra_boolean},
                {"zero_dimensional", r.zero_dimensional},
                {"kernel", names_of(*L, r.kernel)},
                {"kernel_trivial", r.kernel_trivial},
                {"onto", r.onto},
                {"pass", pass}};
    report["timings_ms"] = t.timings();
    return {report, pass};
}

struct CertOptions {
    std::string phi;
    std::string member;
    std::string point;
    std::string order = "stage-group";
    std::optional<std::size_t> tau;
};

json node_json(const CoverFamily& F, const GulkoNode& n)
{
    json ids = json::array();
    n.s.for_each([&](std::size_t v) { ids.push_back(F.members[v].id); });
    return {{"s", ids}, {"k", n.k}};
}

Outcome cmd_cert(const std::string& path, const std::string& sub, const CertOptions& o)
{
    Timer t;
    const auto file = resolve(path);
    const auto F = family_from_json(read_json(file));
    t.mark("load");
    json report{{"command", "cert"},
                {"subcommand", sub},
                {"inputs", {file.stem().string()}},
                {"family", {{"points", F.ground_size()}, {"members", F.size()}}}};
    auto point_name = [&](ElementId x) { return F.ground[x]; };
    bool pass = true;
    if (sub == "t0") {
        const auto v = is_T0_separating(F);
        report["t0"] = verdict_json(v, point_name);
        pass = v.holds;
    } else if (sub == "ord") {
        json points = json::object();
        const unsigned groups = F.max_group().value_or(0) + 1;
        for (std::size_t x = 0; x < F.ground_size(); ++x) {
            json per_group = json::array();
            for (unsigned n = 0; n < groups; ++n)
                per_group.push_back(ord(F, x, F.group(n)));
            points[F.ground[x]] = {{"ord", ord(F, x)}, {"by_group", per_group}};
        }
        const auto v = is_weakly_sigma_point_finite(F, o.tau);
        report["ord"] = points;
        report["tau"] = o.tau.value_or(F.size() + 1);
        report["weakly_sigma_point_finite"] = verdict_json(v, [&](ElementId) { return std::string(); });
        if (!v.holds)
            report["weakly_sigma_point_finite"]["witness"] = {F.ground[v.witness[0]], F.members[v.witness[1]].id};
        pass = v.holds;
    } else if (sub == "phi") {
        const auto phi = phi_from_witness(F);
        report["phi"] = phi_to_json(F, phi);
        if (!o.phi.empty()) {
            const auto given = phi_from_json(F, read_json(resolve(o.phi)));
            report["matches_given"] = given == phi;
            pass = given == phi;
        }
    } else if (sub == "rank") {
        const auto phi = o.phi.empty() ? phi_from_witness(F) : phi_from_json(F, read_json(resolve(o.phi)));
        const std::size_t u = o.member.empty() ? 0 : F.index(o.member);
        const auto rank = gulko_rank(F, phi, u);
        const auto bound = gulko_rank_bound(F, phi, u);
        json chain = json::array();
        for (const auto& n : rank.chain)
            chain.push_back(node_json(F, n));
        report["member"] = F.members[u].id;
        report["phi"] = phi_to_json(F, phi);
        report["rank"] = {{"length", rank.length}, {"bound", bound}, {"chain", chain}};
        pass = rank.length <= bound;
        if (!o.point.empty()) {
            const auto it = std::find(F.ground.begin(), F.ground.end(), o.point);
            if (it == F.ground.end())
                throw Error(ErrorCode::invalid_argument, "no point '" + o.point + "'");
            json replay = json::array();
            for (const auto& n : proof_replay(F, phi, u, static_cast<std::size_t>(it - F.ground.begin())))
                replay.push_back(node_json(F, n));
            report["replay"] = {{"point", o.point}, {"chain", replay}};
        }
    } else if (sub == "refine") {
        const auto order = o.order == "group-stage" ? RefinementOrder::group_stage : RefinementOrder::stage_group;
        const auto W = order == RefinementOrder::stage_group ? wiec_refinement(F) : rosenthal_refinement(F);
        const auto r = refinement_report(F, W, order);
        auto group_name = [](ElementId g) { return std::to_string(g); };
        report["order"] = o.order;
        report["refined"] = family_to_json(W);
        report["report"] = {{"input_t0", r.input_t0},
                            {"output_t0", r.output_t0.holds},
                            {"t0_preserved", r.t0_preserved()},
                            {"ord_transfer", verdict_json(r.ord_transfer, group_name)},
                            {"centered_transfer", verdict_json(r.centered_transfer, group_name)}};
        pass = r.t0_preserved() && r.ord_transfer.holds && r.centered_transfer.holds;
    }
    t.mark("run");
    report["pass"] = pass;
    report["timings_ms"] = t.timings();
    return {report, pass};
}

Outcome cmd_gen(const std::string& kind, std::size_t size)
{
    SplitMix64 rng(G.seed);
    json fixture;
    if (kind == "downset") {
        fixture = lattice_to_json(downset_lattice(random_poset(size, rng)));
    } else if (kind == "boolean") {
        if (size > 6)
            throw Error(ErrorCode::size_cap, "boolean fixtures are capped at 6 atoms");
        const std::size_t m = 1 + rng.below(std::max<std::size_t>(size, 1));
        const std::size_t n = std::max<std::size_t>(size, 1);
        const auto h = boolean_hom(share(powerset(m)), share(powerset(n)), random_point_map(n, m, rng));
        fixture = hom_to_json(h);
        fixture["lattices"] = {lattice_to_json(*h.source)};
        if (m != n)
            fixture["lattices"].push_back(lattice_to_json(*h.target));
    } else {
        fixture = family_to_json(random_staged_family(size, rng));
    }
    return {fixture, true};
}

Outcome cmd_bench(std::size_t max_size, std::size_t repeats)
{
    SplitMix64 rng(G.seed);
    const auto limits = EnumerationLimits::from_env();
    json rows = json::array();
    bool pass = true;
    for (std::size_t points = 1; points <= max_size; ++points) {
        const auto L = downset_lattice(random_poset(points, rng));
        double brute_ms = 0, fast_ms = 0;
        std::vector<FilterSet> brute, fast;
        for (std::size_t r = 0; r < std::max<std::size_t>(repeats, 1); ++r) {
            auto t0 = Clock::now();
            brute = enumerate_filters(L, FilterClass::ultra, Strategy::brute, limits);
            brute_ms += ms_since(t0);
            t0 = Clock::now();
            fast = enumerate_filters(L, FilterClass::ultra, Strategy::fast, limits);
            fast_ms += ms_since(t0);
        }
        const bool equal = brute == fast;
        pass = pass && equal;
        json row{{"points", points}, {"elements", L.size()}, {"ultrafilters", fast.size()}, {"equal", equal}};
        try {
            const bool same = enumerate_filters(L, FilterClass::ultra, Strategy::exhaustive, limits) == brute;
            row["exhaustive"] = same ? "agree" : "differ";
            pass = pass && same;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::too_large)
                throw;
            row["exhaustive"] = "too_large";
        }
        if (!G.no_timings) {
            row["brute_ms"] = brute_ms / static_cast<double>(std::max<std::size_t>(repeats, 1));
            row["fast_ms"] = fast_ms / static_cast<double>(std::max<std::size_t>(repeats, 1));
        }
        rows.push_back(row);
    }
    json report{{"command", "bench"},
                {"seed", G.seed},
                {"repeats", repeats},
                {"exhaustive_cap", limits.exhaustive_max},
                {"rows", rows},
                {"pass", pass}};
    return {report, pass};
}

void emit(json report)
{
    if (G.no_timings)
        report.erase("timings_ms");
    std::cout << (G.pretty ? report.dump(2) : report.dump()) << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite Wallman dualities: lattices, filters, spaces and certificates"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    app.add_flag("--pretty", G.pretty, "Indented report");
    app.add_flag("--no-timings", G.no_timings, "Drop timing fields");
    app.add_option("--seed", G.seed, "Generator seed");
    app.add_option("--dot", G.dot, "Write the input lattice as a Hasse diagram in dot format");
    app.add_option("--corpus", G.corpus, "Directory searched for fixture names");

    std::function<Outcome()> run;
    std::string path, cls = "all", strategy, kind = "prime", gen_kind, sub, then_path;
    std::vector<std::string> require{"lattice", "distributive", "normal", "separative", "boolean"};
    bool oracle_flag = false, axioms = false, induced = false, separative = false, mbeer = false, unchecked = false,
         laws = false;
    std::size_t size = 5, max_size = 10, repeats = 3;
    CertOptions cert;
    std::size_t tau = 0;

    auto* check = app.add_subcommand("check", "Structural predicates of a lattice");
    check->add_option("lattice", path)->required();
    check->add_option("--require", require, "Predicates that must hold")
        ->check(CLI::IsMember({"lattice", "distributive", "normal", "separative", "boolean"}));
    check->callback([&] { run = [&] { return cmd_check(path, require); }; });

    auto* filters = app.add_subcommand("filters", "Enumerate filters");
    filters->add_option("lattice", path)->required();
    filters->add_option("--class", cls)->check(CLI::IsMember({"all", "prime", "ultra"}));
    filters->add_option("--strategy", strategy)->check(CLI::IsMember({"brute", "fast", "exhaustive"}));
    filters->add_flag("--oracle", oracle_flag, "Cross-check against the brute-force enumeration");
    filters->callback([&] { run = [&] { return cmd_filters(path, cls, strategy, oracle_flag); }; });

    auto* space = app.add_subcommand("space", "Prime filter or ultrafilter space");
    space->add_option("lattice", path)->required();
    space->add_option("--kind", kind)->check(CLI::IsMember({"prime", "ultra"}));
    space->add_flag("--axioms", axioms, "Separation axioms");
    space->callback([&] { run = [&] { return cmd_space(path, kind, axioms); }; });

    auto* suite = app.add_subcommand("suite", "Space clauses of a distributive lattice");
    suite->add_option("lattice", path)->required();
    suite->callback([&] { run = [&] { return cmd_suite(path); }; });

    auto* hom = app.add_subcommand("hom", "Homomorphism and its induced map");
    hom->add_option("hom", path)->required();
    hom->add_flag("--induced", induced);
    hom->add_flag("--separative", separative);
    hom->add_flag("--mbeer", mbeer, "Three-way equivalence for normal separative lattices");
    hom->add_flag("--unchecked", unchecked, "Evaluate --mbeer without its hypotheses");
    hom->add_flag("--laws", laws, "Functor laws");
    hom->add_option("--then", then_path, "Second hom for --laws");
    hom->callback([&] {
        run = [&] { return cmd_hom(path, induced, separative, mbeer, unchecked, laws, then_path); };
    });

    auto* stone = app.add_subcommand("stone", "Boolean cover of a distributive lattice");
    stone->add_option("lattice", path)->required();
    stone->callback([&] { run = [&] { return cmd_stone(path); }; });

    auto* cert_cmd = app.add_subcommand("cert", "Cover family certificates");
    cert_cmd->add_option("family", path)->required();
    cert_cmd->add_option("check", sub)->required()->check(CLI::IsMember({"t0", "ord", "rank", "phi", "refine"}));
    cert_cmd->add_option("--phi", cert.phi);
    cert_cmd->add_option("--member", cert.member);
    cert_cmd->add_option("--point", cert.point, "Replay the chain around this point");
    cert_cmd->add_option("--order", cert.order)->check(CLI::IsMember({"stage-group", "group-stage"}));
    auto* tau_opt = cert_cmd->add_option("--tau", tau);
    cert_cmd->callback([&] {
        if (tau_opt->count())
            cert.tau = tau;
        run = [&] { return cmd_cert(path, sub, cert); };
    });

    auto* gen = app.add_subcommand("gen", "Seeded fixture");
    gen->add_option("kind", gen_kind)->required()->check(CLI::IsMember({"downset", "boolean", "staged-family"}));
    gen->add_option("--size", size);
    gen->callback([&] { run = [&] { return cmd_gen(gen_kind, size); }; });

    auto* bench = app.add_subcommand("bench", "Brute against fast ultrafilter enumeration");
    bench->add_option("--max-size", max_size)->check(CLI::Range(1, 14));
    bench->add_option("--repeats", repeats);
    bench->callback([&] { run = [&] { return cmd_bench(max_size, repeats); }; });

    for (auto* s : app.get_subcommands({}))
        s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const auto out = run();
        emit(out.report);
        return out.pass ? 0 : 1;
    } catch (const Error& e) {
        json w = json::array();
        for (auto x : e.witness())
            w.push_back(x);
        json report{{"command", app.get_subcommands().front()->get_name()},
                    {"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}, {"witness", w}}}};
        emit(report);
        std::cerr << "wallman: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "wallman: " << e.what() << "\n";
        return 2;
    }
}

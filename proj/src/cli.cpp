#include "cpt/cli.hpp"

#include "cpt/coloring.hpp"
#include "cpt/errors.hpp"
#include "cpt/geometry.hpp"
#include "cpt/io.hpp"
#include "cpt/laurent.hpp"
#include "cpt/parity.hpp"
#include "cpt/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <functional>
#include <sstream>

namespace cpt {

namespace {

struct Options {
    std::string file;
    std::optional<std::uint64_t> seed;
    int n = 2;
    std::string parts = "3,3,5";
    std::string grid;
    std::optional<std::uint64_t> budget;
    unsigned threads = 1;
    bool json = false;
    std::string kind = "cycle_triangles";
    std::string out;
    std::string lists;
};

const char* ok(bool good)
{
    return good ? "OK" : "FAIL";
}

void require(bool good, const std::string& what)
{
    if (!good)
        throw TheoremViolation(what);
}

std::vector<int> parse_sizes(const std::string& csv)
{
    std::vector<int> out;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw ValidationError("malformed part size '" + item + "' in --parts");
        }
    }
    if (out.empty())
        throw ValidationError("--parts needs at least one size");
    return out;
}

std::array<BigRational, 3> parse_grid_set(const std::string& csv)
{
    const auto values = parse_rational_list(csv);
    if (values.size() != 3)
        throw ValidationError("--grid needs exactly 3 rationals, got " + std::to_string(values.size()));
    return {values[0], values[1], values[2]};
}

std::string join_colors(const std::vector<int>& colors)
{
    nlohmann::json j = colors;
    return j.dump();
}

std::string join_values(const std::vector<BigRational>& values)
{
    nlohmann::json j = nlohmann::json::array();
    for (const auto& v : values)
        j.push_back(to_string(v));
    return j.dump();
}

std::string grid_text(const std::array<BigRational, 3>& set)
{
    return to_string(set[0]) + "," + to_string(set[1]) + "," + to_string(set[2]);
}

/// List assignment file: a JSON array of 3-element arrays of "p/q" strings.
ListAssignment read_lists(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path + "' for reading");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(e.what(), 0, "");
    }
    if (!doc.is_array())
        throw FormatError("list assignment must be an array", 0, "");
    std::vector<std::array<BigRational, 3>> sets;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& item = doc[i];
        const std::string field = "[" + std::to_string(i) + "]";
        if (!item.is_array() || item.size() != 3)
            throw FormatError("each list needs exactly 3 entries", 0, field);
        std::array<BigRational, 3> set;
        for (std::size_t k = 0; k < 3; ++k) {
            if (!item[k].is_string())
                throw FormatError("list entries are \"p/q\" strings", 0, field);
            set[k] = parse_rational(item[k].get<std::string>());
        }
        sets.push_back(set);
    }
    return ListAssignment(std::move(sets));
}

class Runner {
public:
    explicit Runner(const Options& opt) : opt_(opt) {}

    Instance load_or_generate(const std::string& kind)
    {
        if (!opt_.file.empty())
            return read_instance(opt_.file);
        if (!opt_.seed)
            throw ValidationError("either --file or --seed is required");
        if (kind == "cycle_triangles")
            return random_cycle_triangles(opt_.n, *opt_.seed);
        if (kind == "partitioned")
            return random_partitioned_graph(parse_sizes(opt_.parts), *opt_.seed);
        if (kind == "chords")
            return random_chord_system(*opt_.seed);
        throw ValidationError("unknown instance kind '" + kind + "'");
    }

    template <class T>
    T load(const std::string& kind)
    {
        Instance inst = load_or_generate(kind);
        if (!std::holds_alternative<T>(inst))
            throw ValidationError("this command needs a '" + kind + "' instance, got " + describe(inst));
        report_.add("instance", describe(inst));
        return std::get<T>(std::move(inst));
    }

    RunReport& report() { return report_; }

    void gen()
    {
        Instance inst = load_or_generate(opt_.kind);
        report_.add("instance", describe(inst));
        std::string text = format_instance(inst);
        text.pop_back();
        report_.add("json", text);
        if (!opt_.out.empty()) {
            write_instance(opt_.out, inst);
            report_.add("written", opt_.out);
        }
    }

    void ct()
    {
        const auto inst = load<CycleTrianglesInstance>("cycle_triangles");
        const std::size_t cap = opt_.budget.value_or(default_term_cap);
        const LaurentPoly phi = expand(build_phi(inst), cap);
        const BigInt by_expansion = phi.constant_term();
        const auto set = opt_.grid.empty() ? default_grid_set() : parse_grid_set(opt_.grid);
        const BigRational by_grid = ct_by_grid(inst, GridSpec::uniform(inst.vertex_count(), set),
                                               default_grid_budget, opt_.threads);
        report_.add("expansion terms", std::to_string(phi.size()));
        report_.add("expansion CT", to_string(by_expansion));
        report_.add("grid", grid_text(set));
        report_.add("grid CT", to_string(by_grid));
        require(by_grid == BigRational(by_expansion), "grid and expansion constant terms differ");
        report_.add("grid matches expansion", ok(true));
        require(is_two_mod_four(by_expansion), "constant term is not 2 mod 4");
        report_.add("CT mod 4 = 2", ok(true));
    }

    void colorings()
    {
        const auto inst = load<CycleTrianglesInstance>("cycle_triangles");
        const int max_n = static_cast<int>(opt_.budget.value_or(default_max_triangles));
        const TheoremTwoReport t2 = verify_theorem2(inst, max_n, opt_.threads);
        report_.add("proper colorings", to_string(t2.proper_colorings));
        report_.add("essentially different", to_string(t2.essentially_different) + " (odd: " + ok(t2.is_odd) + ")");

        std::size_t checked = 0;
        enumerate_colorings(
            inst,
            [&](const Coloring& c) {
                color_stats(inst, c);
                ++checked;
                return true;
            },
            max_n);
        report_.add("balanced colors (class sizes n, U=V=W=n)", std::string(ok(true)) + " on " + std::to_string(checked));

        try {
            const SummandCensus census =
                summand_census(inst, default_grid_set(), default_grid_budget, opt_.threads);
            require(BigInt(static_cast<unsigned long>(census.nonzero())) == t2.proper_colorings,
                    "nonzero grid summands differ from the proper colouring count");
            report_.add("nonzero grid summands", std::to_string(census.nonzero()) + " (+1: "
                                                     + std::to_string(census.plus) + ", -1: "
                                                     + std::to_string(census.minus) + ")");
            report_.add("summand bridge", ok(true));
        } catch (const SizeError&) {
            report_.add("summand bridge", "skipped (grid budget)");
        }
    }

    void connected()
    {
        const auto inst = load<CycleTrianglesInstance>("cycle_triangles");
        const int max_n = static_cast<int>(opt_.budget.value_or(default_max_triangles));
        const Coloring c = find_connected_red_blue(inst, max_n);
        report_.add("coloring (white=0, blue=1, red=2)", join_colors(c.colors));
        report_.add("red-blue components", std::to_string(red_blue_components(inst, c).size()));
        report_.add("proper", ok(is_proper(inst, c)));
        report_.add("blue and red connected", ok(true));
    }

    void choosable()
    {
        const bool from_file = !opt_.file.empty();
        const auto inst = load<CycleTrianglesInstance>("cycle_triangles");
        const auto lists = [&]() -> ListAssignment {
            if (!opt_.lists.empty()) {
                report_.add("lists", "file " + opt_.lists);
                return read_lists(opt_.lists);
            }
            if (!opt_.grid.empty()) {
                report_.add("lists", "uniform " + opt_.grid);
                return GridSpec::uniform(inst.vertex_count(), parse_grid_set(opt_.grid));
            }
            if (opt_.seed) {
                // a generated instance already consumed the seed
                const std::uint64_t list_seed = from_file ? *opt_.seed : *opt_.seed + 1;
                report_.add("lists", "random (seed " + std::to_string(list_seed) + ")");
                return random_grid(inst.vertex_count(), list_seed);
            }
            report_.add("lists", "uniform 1,2,3");
            return GridSpec::uniform(inst.vertex_count(), default_grid_set());
        }();
        const auto result =
            certify_choosability(inst, lists, opt_.budget.value_or(default_grid_budget), opt_.threads);
        report_.add("certificate", to_string(result.certificate));
        try {
            const BigInt ct = ct_by_expansion(inst);
            require(result.certificate == BigRational(ct), "certificate differs from the expansion constant term");
            report_.add("certificate matches expansion CT", ok(true));
        } catch (const SizeError&) {
            report_.add("certificate matches expansion CT", "skipped (term cap)");
        }
        report_.add("list coloring", join_values(result.coloring));
        report_.add("list coloring proper", ok(is_proper_list_coloring(inst, lists, result.coloring)));
    }

    void parity()
    {
        const auto g = load<PartitionedGraph>("partitioned");
        const auto r = verify_theorem1(g, opt_.budget.value_or(default_transversal_budget), opt_.threads);
        report_.add("transversal count", to_string(r.transversal_count));
        report_.add("special-sequence count", to_string(r.special_sequence_count));
        report_.add("transversal count odd", ok(r.is_odd));
        report_.add("special-sequence parity agrees", ok(true));
    }

    void chords()
    {
        const auto cs = load<ChordSystem>("chords");
        const PartitionedGraph g = crossing_graph(cs);
        report_.add("crossing pairs", std::to_string(g.edges().size()));
        report_.add("crossing graph validation", ok(true));
        const BigInt count =
            count_eulerian_transversals(g, opt_.budget.value_or(default_transversal_budget), opt_.threads);
        report_.add("even-crossing selections", to_string(count));
        require(mpz_odd_p(count.get_mpz_t()) != 0, "even number of even-crossing selections");
        report_.add("selection count odd", ok(true));
    }

    void selftest();

private:
    const Options& opt_;
    RunReport report_;
};

void Runner::selftest()
{
    const std::uint64_t base = opt_.seed.value_or(1);
    const unsigned threads = opt_.threads;
    std::size_t failures = 0;
    auto check = [&](const std::string& name, const std::function<bool()>& body) {
        bool good = false;
        std::string detail;
        try {
            good = body();
        } catch (const std::exception& e) {
            detail = std::string(" (") + e.what() + ")";
        }
        failures += !good;
        report_.add(name, ok(good) + detail);
    };

    const CycleTrianglesInstance single(1, {{0, 1, 2}});
    check("CT n=1 equals 6", [&] { return ct_by_expansion(single) == 6; });

    std::vector<CycleTrianglesInstance> instances{single};
    for (std::uint64_t s = 0; s < 6; ++s)
        instances.push_back(random_cycle_triangles(2 + static_cast<int>(s % 2), base + s));

    check("CT = 2 mod 4", [&] {
        return std::all_of(instances.begin(), instances.end(),
                           [](const auto& inst) { return is_two_mod_four(ct_by_expansion(inst)); });
    });
    check("grid CT equals expansion CT", [&] {
        for (std::size_t i = 0; i < instances.size(); ++i) {
            const auto& inst = instances[i];
            const BigRational ct(ct_by_expansion(inst));
            const int vars = inst.vertex_count();
            for (const GridSpec& g : {GridSpec::uniform(vars, default_grid_set()), random_uniform_grid(vars, base + i),
                                      random_grid(vars, base + 100 + i)})
                if (ct_by_grid(inst, g, default_grid_budget, threads) != ct)
                    return false;
        }
        return true;
    });
    check("weight moments (1, 0, 0)", [&] {
        Rng rng(base);
        for (int i = 0; i < 20; ++i) {
            const auto w = grid_weights(random_grid_set(rng));
            if (weight_moment(w, 0) != 1 || weight_moment(w, 1) != 0 || weight_moment(w, 2) != 0)
                return false;
        }
        return true;
    });
    check("essentially different colorings odd", [&] {
        for (const auto& inst : instances)
            verify_theorem2(inst, default_max_triangles, threads);
        return true;
    });
    check("balanced colors", [&] {
        for (const auto& inst : instances)
            for (const auto& c : all_colorings(inst))
                color_stats(inst, c);
        return true;
    });
    check("summand bridge", [&] {
        for (const auto& inst : instances) {
            const auto census = summand_census(inst, default_grid_set(), default_grid_budget, threads);
            if (BigInt(static_cast<unsigned long>(census.nonzero())) != count_proper_colorings(inst))
                return false;
        }
        return true;
    });
    check("connected red-blue coloring", [&] {
        for (const auto& inst : instances)
            find_connected_red_blue(inst);
        return true;
    });
    check("Eulerian transversal count odd", [&] {
        Rng rng(base);
        for (int i = 0; i < 20; ++i) {
            std::vector<int> sizes(1 + rng.below(4));
            for (int& s : sizes)
                s = 1 + 2 * static_cast<int>(rng.below(3));
            verify_theorem1(random_partitioned_graph(sizes, base + static_cast<std::uint64_t>(i)),
                            default_transversal_budget, threads);
        }
        return true;
    });
    check("even-crossing selection count odd", [&] {
        for (std::uint64_t s = 0; s < 20; ++s)
            if (mpz_odd_p(count_even_crossing_selections(random_chord_system(base + s), default_transversal_budget,
                                                         threads).get_mpz_t()) == 0)
                return false;
        return true;
    });
    check("choosability certificate", [&] {
        for (std::size_t i = 0; i < instances.size(); ++i) {
            const auto& inst = instances[i];
            const auto r = certify_choosability(inst, random_grid(inst.vertex_count(), base + 200 + i),
                                                default_grid_budget, threads);
            if (r.certificate != BigRational(ct_by_expansion(inst)))
                return false;
        }
        return true;
    });
    report_.add("failures", std::to_string(failures));
    if (failures)
        throw TheoremViolation(std::to_string(failures) + " self-test check(s) failed");
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"Exact verification of parity and constant-term results for cycle-plus-triangles graphs", "cpt"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--file", opt.file, "Instance JSON file");
        sub->add_option("--seed", opt.seed, "Seed for generated instances");
        sub->add_option("--budget", opt.budget, "Command budget (see README)");
        sub->add_option("--threads", opt.threads, "Worker threads for reductions")->check(CLI::Range(1u, 256u));
        sub->add_flag("--json", opt.json, "Machine-readable report");
    };

    std::map<std::string, std::function<void(Runner&)>> commands{
        {"gen", [](Runner& r) { r.gen(); }},
        {"ct", [](Runner& r) { r.ct(); }},
        {"colorings", [](Runner& r) { r.colorings(); }},
        {"connected", [](Runner& r) { r.connected(); }},
        {"choosable", [](Runner& r) { r.choosable(); }},
        {"parity", [](Runner& r) { r.parity(); }},
        {"chords", [](Runner& r) { r.chords(); }},
        {"selftest", [](Runner& r) { r.selftest(); }},
    };
    const std::map<std::string, std::string> help{
        {"gen", "Generate a random instance"},
        {"ct", "Constant term of Phi by expansion and by grid summation"},
        {"colorings", "Count proper and essentially different 3-colourings"},
        {"connected", "Find a colouring with connected blue and red vertices"},
        {"choosable", "List-colouring certificate and an explicit list colouring"},
        {"parity", "Count Eulerian transversals and special sequences"},
        {"chords", "Count even-crossing edge selections of inscribed polygons"},
        {"selftest", "Run the invariant suite at desk scale"},
    };
    for (const auto& [name, _] : commands) {
        CLI::App* sub = app.add_subcommand(name, help.at(name));
        add_common(sub);
        if (name == "gen")
            sub->add_option("--kind", opt.kind, "cycle_triangles | partitioned | chords")
                ->check(CLI::IsMember({"cycle_triangles", "partitioned", "chords"}));
        if (name == "gen" || name == "ct" || name == "colorings" || name == "connected" || name == "choosable")
            sub->add_option("--n", opt.n, "Number of triangles for generated instances")->check(CLI::PositiveNumber);
        if (name == "gen" || name == "parity")
            sub->add_option("--parts", opt.parts, "Comma-separated odd part sizes for generated graphs");
        if (name == "ct" || name == "choosable")
            sub->add_option("--grid", opt.grid, "Three rationals p/q for a uniform grid, e.g. 1,2,3");
        if (name == "choosable")
            sub->add_option("--lists", opt.lists, "List assignment JSON file");
        if (name == "gen")
            sub->add_option("--out", opt.out, "Write the instance to this path");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    Runner runner(opt);
    runner.report().command = name;
    runner.report().seed = opt.seed;
    const auto start = std::chrono::steady_clock::now();
    int code = exit_ok;
    try {
        commands.at(name)(runner);
    } catch (const TheoremViolation& e) {
        err << "theorem violation: " << e.what() << "\n";
        code = exit_theorem;
    } catch (const SizeError& e) {
        err << "budget exceeded: " << e.what() << "\n";
        code = exit_budget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        code = exit_invalid;
    }
    runner.report().wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (code == exit_ok || name == "selftest")
        out << (opt.json ? runner.report().to_json() : runner.report().to_text());
    return code;
}

}  // namespace cpt

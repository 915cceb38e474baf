#include "grk/erosion.hpp"
#include "grk/errors.hpp"
#include "grk/fixtures.hpp"
#include "grk/gri.hpp"
#include "grk/io.hpp"
#include "grk/zigzag.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace grk;
using nlohmann::json;

namespace {

struct Config {
    std::uint32_t field = kDefaultPrime;
    int threads = 1;
    std::uint64_t cap = kDefaultIntervalCap;
    int connected_cap = kDefaultConnectedCap;
    std::string format = "tsv";
    std::string collection = "int";
};

EnumerationConfig enum_config(const Config& c) { return {c.cap, c.connected_cap}; }

std::vector<Subposet> load_collection(const Config& c, const FinitePoset& P) {
    if (std::filesystem::is_regular_file(c.collection)) return parse_collection(read_text_file(c.collection), P);
    return make_collection(P, c.collection, enum_config(c));
}

void emit(const Config& c, const std::string& tsv, const json& j) {
    if (c.format == "json")
        std::cout << j.dump(2) << '\n';
    else
        std::cout << tsv;
}

std::string point_list(const PointSet& s) {
    std::ostringstream out;
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? ";" : "") << s[i].x << ' ' << s[i].y;
    return out.str();
}

void check_table(const GriTable& t) {
    if (t.collection.size() > 5000) return;
    if (auto v = monotonicity_violation(t))
        throw InvariantViolation("rank table is not monotone: {" + members_string(t.collection[v->first].members) +
                                 "} has smaller rank than its superset {" +
                                 members_string(t.collection[v->second].members) + "}");
}

int cmd_gri(const Config& c, const std::string& file) {
    PModule m = read_module_file(file, c.field);
    GriTable t = gri(m, load_collection(c, m.poset()), c.threads, file);
    check_table(t);
    emit(c, gri_tsv(t), gri_json(t));
    return 0;
}

int cmd_gpd(const Config& c, const std::string& file) {
    PModule m = read_module_file(file, c.field);
    auto coll = load_collection(c, m.poset());
    GriTable t = gri(m, coll, c.threads, file);
    check_table(t);
    SignedDiagram d = gpd(t);
    if (c.format == "dot")
        std::cout << diagram_dot(d, coll);
    else
        emit(c, diagram_tsv(d), diagram_json(d));
    return 0;
}

int cmd_decompose(const Config& c, const std::string& file) {
    PModule m = read_module_file(file, c.field);
    auto coll = load_collection(c, m.poset());
    GriTable t = gri(m, coll, c.threads, file);
    RankDecomposition dec = minimal_rank_decomposition(gpd(t));
    // Re-evaluate: rk of k_R minus rk of k_S must give back the table.
    bool intervals = true;
    for (const auto& part : {dec.R, dec.S})
        for (const auto& [s, mult] : part) intervals = intervals && is_interval(m.poset(), s.members);
    bool verified = false;
    if (intervals) {
        GriTable r = gri(realize(m.poset_ptr(), dec.R, m.field()), coll, c.threads);
        GriTable s = gri(realize(m.poset_ptr(), dec.S, m.field()), coll, c.threads);
        verified = true;
        for (std::size_t i = 0; i < t.ranks.size(); ++i) verified = verified && r.ranks[i] - s.ranks[i] == t.ranks[i];
        if (!verified) throw InvariantViolation("rank decomposition does not reproduce the table");
    }
    std::ostringstream tsv;
    json j{{"kind", "rank_decomposition"}, {"R", json::array()}, {"S", json::array()}, {"verified", verified}};
    for (const auto& [s, mult] : dec.R) {
        tsv << "R\t" << members_string(s.members) << '\t' << mult << '\n';
        j["R"].push_back({{"members", s.members}, {"multiplicity", mult}});
    }
    for (const auto& [s, mult] : dec.S) {
        tsv << "S\t" << members_string(s.members) << '\t' << mult << '\n';
        j["S"].push_back({{"members", s.members}, {"multiplicity", mult}});
    }
    emit(c, tsv.str(), j);
    return 0;
}

int cmd_invertible(const Config& c, const std::string& file, const std::string& support) {
    PModule m = read_module_file(file, c.field);
    GriTable t = gri(m, load_collection(c, m.poset()), c.threads, file);
    Config sc = c;
    sc.collection = support;
    InvertibilityReport rep = verify_invertibility(t, load_collection(sc, m.poset()));
    std::ostringstream tsv;
    tsv << "invertible\t" << (rep.invertible ? "yes" : "no") << '\n';
    json j{{"kind", "invertibility"}, {"invertible", rep.invertible}, {"diagram", diagram_json(rep.dgm)["entries"]}};
    if (rep.witness) {
        tsv << "witness\t" << members_string(rep.witness->members) << '\t' << rep.expected << '\t' << rep.obtained
            << '\n';
        j["witness"] = {{"members", rep.witness->members}, {"rank", rep.expected}, {"from_diagram", rep.obtained}};
    }
    tsv << diagram_tsv(rep.dgm);
    emit(c, tsv.str(), j);
    return 0;
}

std::vector<std::vector<Point>> gather_paths(const std::vector<std::string>& files, const std::string& region_file,
                                             bool maximal) {
    std::vector<std::vector<Point>> paths;
    for (const auto& f : files) paths.push_back(read_path_file(f));
    if (!region_file.empty()) {
        PointSet region = make_point_set(read_path_file(region_file));
        auto more = maximal ? maximal_simple_paths(region) : simple_paths(region);
        paths.insert(paths.end(), more.begin(), more.end());
    }
    if (paths.empty()) throw InputError("no paths given");
    return paths;
}

int cmd_zib(const Config& c, const std::string& file, const std::vector<std::string>& path_files,
            const std::string& region, bool maximal) {
    PModule m = read_module_file(file, c.field);
    std::vector<ZigzagPath> zs;
    for (auto& p : gather_paths(path_files, region, maximal)) zs.push_back(make_path(p));
    std::ostringstream tsv;
    json j{{"kind", "zib"}, {"paths", json::array()}};
    for (const auto& e : zib(m, zs)) {
        tsv << "# path";
        for (Point q : e.path.points) tsv << ' ' << q.x << ',' << q.y;
        tsv << '\n' << barcode_tsv(e.barcode);
        j["paths"].push_back({{"path", path_json(e.path)}, {"barcode", barcode_json(e.barcode)}});
    }
    emit(c, tsv.str(), j);
    return 0;
}

int cmd_bounds(const Config& c, const std::string& file, const std::string& path_file, const std::string& interval_file) {
    PModule m = read_module_file(file, c.field);
    if (!m.poset().is_grid()) throw InputError("bounds need a grid module");
    RankProvider rank = [&](const PointSet& s) -> long long { return generalized_rank(m, s); };
    std::ostringstream tsv;
    json j{{"kind", "bounds"}};
    if (!path_file.empty()) {
        ZigzagPath z = make_path(read_path_file(path_file));
        PathBoundsTable table(z.points, rank);
        int n = table.length();
        long long truth = path_rank(m, z.points);
        tsv << "rank\t" << table.m(0, n - 1) << '\t' << truth << '\t' << table.l(0, n - 1) << '\n';
        j["rank"] = {{"lower", table.m(0, n - 1)}, {"value", truth}, {"upper", table.l(0, n - 1)}, {"tame", z.tame}};
        if (z.faithful) {
            Barcode b = zigzag_barcode(m, z);
            j["bars"] = json::array();
            for (int s = 0; s < n; ++s)
                for (int e = s; e < n; ++e) {
                    MultiplicityBounds mb = multiplicity_bounds(table, s, e);
                    long long v = 0;
                    for (const Bar& bar : b)
                        if (bar.start == s && bar.end == e) v = bar.multiplicity;
                    if (mb.lower == 0 && mb.upper == 0 && v == 0) continue;
                    tsv << "bar\t" << s << '\t' << e << '\t' << mb.lower << '\t' << v << '\t' << mb.upper << '\n';
                    j["bars"].push_back({{"start", s}, {"end", e}, {"lower", mb.lower}, {"value", v}, {"upper", mb.upper}});
                }
        }
    }
    if (!interval_file.empty()) {
        PointSet I = make_point_set(read_path_file(interval_file));
        GriEstimate e = gri_bounds_from_zib(
            I, [&](const std::vector<Point>& p) { return full_bar_multiplicity(m, p); }, m.poset());
        int truth = generalized_rank(m, I);
        tsv << "interval\t" << e.method << '\t' << e.lower << '\t' << truth << '\t' << e.upper << '\n';
        j["interval"] = {{"method", e.method}, {"lower", e.lower}, {"value", truth}, {"upper", e.upper}};
    }
    if (path_file.empty() && interval_file.empty()) throw InputError("bounds needs --path or --interval");
    emit(c, tsv.str(), j);
    return 0;
}

int cmd_erosion(const Config& c, const std::vector<std::string>& files, int m, int n, int shift, bool tradeoff,
                std::uint64_t seed) {
    std::ostringstream tsv;
    json j{{"kind", "erosion"}};
    if (tradeoff) {
        j["timing"] = json::array();
        tsv << "side\tm\tn\tintervals\tdistance\tseconds\n";
        for (int side : {4, 6, 8})
            for (auto [mm, nn] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
                TradeoffRow r = tradeoff_timing(side, mm, nn, seed + static_cast<std::uint64_t>(side), 0.05, c.threads);
                tsv << side << '\t' << mm << '\t' << nn << '\t' << r.collection_size << '\t'
                    << (r.distance ? std::to_string(*r.distance) : "inf") << '\t' << r.seconds << '\n';
                j["timing"].push_back({{"side", side},
                                       {"m", mm},
                                       {"n", nn},
                                       {"intervals", r.collection_size},
                                       {"distance", r.distance ? json(*r.distance) : json("inf")},
                                       {"seconds", r.seconds}});
            }
        emit(c, tsv.str(), j);
        return 0;
    }
    if (files.empty() || files.size() > 2) throw InputError("erosion takes one module with --shift or two modules");
    PModule a = read_module_file(files[0], c.field);
    PModule b = files.size() == 2 ? read_module_file(files[1], c.field) : shift_module(a, shift);
    ErosionResult r = erosion_distance(a, b, m, n, c.threads, enum_config(c));
    tsv << "distance\t" << (r.distance ? std::to_string(*r.distance) : "inf") << '\n';
    for (const auto& p : r.trace) tsv << "probe\t" << p.eps << '\t' << (p.ok ? "ok" : "fail") << '\n';
    if (r.witness) tsv << "witness\t" << point_list(*r.witness) << '\n';
    j["distance"] = r.distance ? json(*r.distance) : json("inf");
    j["intervals"] = r.collection_size;
    j["trace"] = json::array();
    for (const auto& p : r.trace) j["trace"].push_back({{"eps", p.eps}, {"ok", p.ok}});
    if (r.witness) j["witness"] = points_json(*r.witness);
    emit(c, tsv.str(), j);
    return 0;
}

int cmd_enumerate(const Config& c, const std::string& file, std::vector<int> grid, bool count_only) {
    FinitePoset P;
    if (!grid.empty()) {
        if (grid.size() != 2 || grid[0] < 1 || grid[1] < 1) throw InputError("--grid takes a width and a height");
        if (count_only) {
            std::uint64_t n = count_grid_intervals(grid[0], grid[1]);
            emit(c, std::to_string(n) + '\n', json{{"kind", "count"}, {"intervals", n}});
            return 0;
        }
        P = grid_poset(grid[0], grid[1]);
    } else if (!file.empty()) {
        std::string text = read_text_file(file);
        try {
            P = parse_poset(text);
        } catch (const InputError&) {
            P = parse_module(text, c.field).poset();
        }
    } else {
        throw InputError("enumerate needs a poset file or --grid");
    }
    auto coll = make_collection(P, c.collection, enum_config(c));
    std::ostringstream tsv;
    json j{{"kind", "collection"}, {"members", json::array()}};
    if (count_only) {
        tsv << coll.size() << '\n';
        j["count"] = coll.size();
    } else {
        for (const auto& s : coll) {
            tsv << members_string(s.members) << '\n';
            j["members"].push_back(s.members);
        }
    }
    emit(c, tsv.str(), j);
    return 0;
}

int cmd_fixtures(const Config& c, const std::string& action, const std::string& name, int window, bool describe,
                 int samples, const std::string& out_dir) {
    if (action == "list") {
        std::ostringstream tsv;
        json j = json::array();
        for (const auto& f : fixture_list()) {
            tsv << f.name;
            if (describe) tsv << '\t' << f.description;
            tsv << '\n';
            j.push_back({{"name", f.name}, {"description", f.description}, {"takes_window", f.takes_window}});
        }
        emit(c, tsv.str(), j);
        return 0;
    }
    if (name.empty()) throw InputError("fixture name required");
    if (action == "describe") {
        for (const auto& f : fixture_list())
            if (f.name == name) {
                std::cout << f.description << '\n';
                return 0;
            }
        throw InputError("unknown fixture '" + name + "'");
    }
    if (action == "dump") {
        for (const auto& [label, m] : fixture_modules(name, window, c.field)) {
            if (out_dir.empty()) {
                std::cout << "# " << name << ' ' << label << '\n' << write_module(m);
                continue;
            }
            std::filesystem::path file = std::filesystem::path(out_dir) / (name + "-" + label + ".mod");
            std::ofstream out(file);
            if (!(out << write_module(m))) throw InputError("cannot write " + file.string());
            std::cout << file.string() << '\n';
        }
        return 0;
    }
    if (action == "run") {
        json r = run_fixture(name, window, c.field, c.threads, samples);
        if (describe)
            for (const auto& f : fixture_list())
                if (f.name == name) r["description"] = f.description;
        std::cout << r.dump(2) << '\n';
        return r["ok"].get<bool>() ? 0 : 4;
    }
    throw InputError("unknown fixtures action '" + action + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized rank invariants of persistence modules over finite posets"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    if (const char* env = std::getenv("GRK_FIELD")) {
        try {
            cfg.field = static_cast<std::uint32_t>(std::stoul(env));
        } catch (const std::exception&) {
            std::cerr << "error: GRK_FIELD is not a number\n";
            return 2;
        }
    }
    app.add_option("--field", cfg.field, "prime field modulus (default from GRK_FIELD, else 2)");
    app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--cap", cfg.cap, "largest interval collection to enumerate")->check(CLI::PositiveNumber);
    app.add_option("--connected-cap", cfg.connected_cap, "largest poset for connected-subset enumeration")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"tsv", "json", "dot"}));

    std::string out_dir, module_file, support = "int", path_file, interval_file, region_file, poset_file, action, name;
    std::vector<std::string> path_files, module_files;
    std::vector<int> grid;
    int m = 2, n = 2, shift = 0, window = 4, samples = 50;
    bool maximal = false, tradeoff = false, count_only = false, describe = false;
    std::uint64_t seed = 1;

    auto add_collection = [&](CLI::App* sub) {
        sub->add_option("--collection", cfg.collection, "int, int:m,n, seg, con, or a file of subposets");
    };
    auto* gri_cmd = app.add_subcommand("gri", "generalized rank invariant over a collection");
    gri_cmd->add_option("module", module_file)->required();
    add_collection(gri_cmd);
    auto* gpd_cmd = app.add_subcommand("gpd", "generalized persistence diagram");
    gpd_cmd->add_option("module", module_file)->required();
    add_collection(gpd_cmd);
    auto* dec_cmd = app.add_subcommand("decompose", "minimal rank decomposition");
    dec_cmd->add_option("module", module_file)->required();
    add_collection(dec_cmd);
    auto* inv_cmd = app.add_subcommand("invertible", "check Möbius invertibility against a candidate support");
    inv_cmd->add_option("module", module_file)->required();
    add_collection(inv_cmd);
    inv_cmd->add_option("--support", support, "candidate support: collection name or file")->required();
    auto* zib_cmd = app.add_subcommand("zib", "zigzag barcodes along paths");
    zib_cmd->add_option("module", module_file)->required();
    zib_cmd->add_option("--path", path_files, "path file (repeatable)");
    zib_cmd->add_option("--simple-in", region_file, "use the simple paths inside this point set (path format)");
    zib_cmd->add_flag("--maximal", maximal, "only maximal simple paths");
    auto* bounds_cmd = app.add_subcommand("bounds", "rank and multiplicity bounds between zigzag and interval ranks");
    bounds_cmd->add_option("module", module_file)->required();
    bounds_cmd->add_option("--path", path_file, "path file");
    bounds_cmd->add_option("--interval", interval_file, "interval as a point list (path format)");
    auto* ero_cmd = app.add_subcommand("erosion", "erosion distance between interval rank invariants");
    ero_cmd->add_option("modules", module_files, "one or two module files");
    ero_cmd->add_option("--m", m, "maximum number of minimal points")->check(CLI::PositiveNumber);
    ero_cmd->add_option("--n", n, "maximum number of maximal points")->check(CLI::PositiveNumber);
    ero_cmd->add_option("--shift", shift, "compare a single module with its diagonal shift")->check(CLI::NonNegativeNumber);
    ero_cmd->add_flag("--tradeoff", tradeoff, "timing table over side in {4,6,8} and (m,n) in {(1,1),(2,1),(2,2)}");
    ero_cmd->add_option("--seed", seed, "seed for --tradeoff modules");
    auto* enum_cmd = app.add_subcommand("enumerate", "enumerate a collection of subposets");
    enum_cmd->add_option("poset", poset_file, "poset or module file");
    enum_cmd->add_option("--grid", grid, "width height")->expected(2);
    enum_cmd->add_flag("--count", count_only, "print only the number of members");
    add_collection(enum_cmd);
    auto* fix_cmd = app.add_subcommand("fixtures", "built-in example modules");
    fix_cmd->add_option("action", action, "list, run, describe or dump")
        ->required()
        ->check(CLI::IsMember({"list", "run", "describe", "dump"}));
    fix_cmd->add_option("name", name, "fixture name");
    fix_cmd->add_option("--window", window, "window size for the counterexample")->check(CLI::Range(2, 64));
    fix_cmd->add_option("--samples", samples, "sampled supersets for the counterexample")->check(CLI::PositiveNumber);
    fix_cmd->add_flag("--describe", describe, "include descriptions");
    fix_cmd->add_option("--out", out_dir, "dump: write one module file per module into this directory")
        ->check(CLI::ExistingDirectory);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (cfg.field < 2 || !is_prime(cfg.field) || cfg.field > 65521)
            throw InputError("--field must be a prime below 65536");
        if (*gri_cmd) return cmd_gri(cfg, module_file);
        if (*gpd_cmd) return cmd_gpd(cfg, module_file);
        if (*dec_cmd) return cmd_decompose(cfg, module_file);
        if (*inv_cmd) return cmd_invertible(cfg, module_file, support);
        if (*zib_cmd) return cmd_zib(cfg, module_file, path_files, region_file, maximal);
        if (*bounds_cmd) return cmd_bounds(cfg, module_file, path_file, interval_file);
        if (*ero_cmd) return cmd_erosion(cfg, module_files, m, n, shift, tradeoff, seed);
        if (*enum_cmd) return cmd_enumerate(cfg, poset_file, grid, count_only);
        if (*fix_cmd) return cmd_fixtures(cfg, action, name, window, describe, samples, out_dir);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return 3;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return 4;
    }
    return 0;
}

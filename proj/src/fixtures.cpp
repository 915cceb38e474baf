#include "grk/fixtures.hpp"

#include "grk/errors.hpp"
#include "grk/gri.hpp"
#include "grk/io.hpp"
#include "grk/random.hpp"
#include "grk/zigzag.hpp"

#include <algorithm>
#include <set>

namespace grk {

namespace {

PosetPtr grid_ptr(int w, int h, Point origin) { return std::make_shared<const FinitePoset>(grid_poset(w, h, origin)); }

Matrix col(std::vector<long long> v, std::uint32_t p) {
    std::vector<std::vector<long long>> rows;
    for (long long x : v) rows.push_back({x});
    return Matrix::from_rows(rows, p);
}

Matrix row(std::vector<long long> v, std::uint32_t p) { return Matrix::from_rows({v}, p); }

PModule interval_on(PosetPtr P, const PointSet& pts, std::uint32_t p) {
    return interval_module(P, subposet_of(*P, pts).members, p);
}

PointSet up_set(const FinitePoset& P, Point a) {
    PointSet out;
    for (int e = 0; e < P.size(); ++e)
        if (point_leq(a, P.coord(e))) out.push_back(P.coord(e));
    return make_point_set(out);
}

nlohmann::json table_json(const GriTable& t) { return gri_json(t)["entries"]; }

}  // namespace

PModule grid_module(PosetPtr grid, const std::map<Point, int>& dims, const std::map<std::pair<Point, Point>, Matrix>& maps,
                    std::uint32_t p) {
    const FinitePoset& P = *grid;
    std::vector<int> d(P.size(), 0);
    for (auto [pt, k] : dims) {
        auto id = P.id_of(pt);
        if (!id) throw InputError("fixture point outside the window");
        d[*id] = k;
    }
    std::vector<Matrix> edge_maps;
    for (auto [a, b] : P.cover_edges()) {
        auto it = maps.find({P.coord(a), P.coord(b)});
        if (it != maps.end())
            edge_maps.push_back(it->second);
        else if (d[a] == 1 && d[b] == 1)
            edge_maps.push_back(Matrix::identity(1, p));
        else
            edge_maps.push_back(Matrix::zero(d[b], d[a], p));
    }
    for (const auto& [edge, m] : maps)
        if (!P.id_of(edge.first) || !P.id_of(edge.second) || P.edge_index(*P.id_of(edge.first), *P.id_of(edge.second)) < 0)
            throw InputError("fixture map on a non-edge");
    return PModule(grid, d, edge_maps, p);
}

Subposet subposet_of(const FinitePoset& grid, const PointSet& pts) {
    auto members = to_members(grid, pts);
    if (!members) throw InputError("point set leaves the window");
    std::sort(members->begin(), members->end());
    return make_subposet(*members, is_interval(grid, *members) ? SubKind::Interval : SubKind::Generic);
}

Subposet chain_interval(int lo, int hi) {
    std::vector<int> m;
    for (int x = lo; x <= hi; ++x) m.push_back(x - 1);
    return make_subposet(m, SubKind::Interval);
}

ChainPairFixture chain4_pair(std::uint32_t p) {
    ChainPairFixture f;
    f.poset = std::make_shared<const FinitePoset>(chain_poset(4));
    f.small = {chain_interval(2, 3), chain_interval(1, 3), chain_interval(2, 4)};
    f.extra = chain_interval(1, 4);
    f.big = f.small;
    f.big.push_back(f.extra);
    canonical_sort(f.small);
    canonical_sort(f.big);
    f.plus = direct_sum(interval_module(f.poset, f.extra.members, p),
                        interval_module(f.poset, chain_interval(2, 3).members, p));
    f.minus = direct_sum(interval_module(f.poset, chain_interval(1, 3).members, p),
                         interval_module(f.poset, chain_interval(2, 4).members, p));
    return f;
}

SquareIndicatorFixture square_indicator(std::uint32_t p) {
    SquareIndicatorFixture f;
    f.poset = grid_ptr(2, 2, {0, 0});
    f.I = subposet_of(*f.poset, make_point_set({{0, 1}, {1, 1}, {1, 0}}));
    f.J1 = subposet_of(*f.poset, make_point_set({{0, 1}, {1, 1}}));
    f.J2 = subposet_of(*f.poset, make_point_set({{1, 0}, {1, 1}}));
    f.J3 = subposet_of(*f.poset, make_point_set({{1, 1}}));
    f.M = direct_sum(interval_module(f.poset, f.I.members, p), interval_module(f.poset, f.J3.members, p));
    f.N = direct_sum(interval_module(f.poset, f.J1.members, p), interval_module(f.poset, f.J2.members, p));
    return f;
}

Grid3PairFixture grid3_pair(std::uint32_t p) {
    Grid3PairFixture f;
    f.poset = grid_ptr(3, 3, {1, 1});
    std::map<Point, int> dims;
    for (int x = 1; x <= 3; ++x)
        for (int y = 1; y <= 3; ++y) dims[{x, y}] = 1;
    dims[{1, 1}] = 0;
    dims[{2, 2}] = 2;
    std::map<std::pair<Point, Point>, Matrix> maps{
        {{{1, 2}, {2, 2}}, col({0, 1}, p)},
        {{{2, 1}, {2, 2}}, col({1, 1}, p)},
        {{{2, 2}, {3, 2}}, row({0, 1}, p)},
        {{{2, 2}, {2, 3}}, row({0, 1}, p)},
    };
    PModule first = grid_module(f.poset, dims, maps, p);
    PModule second = interval_on(f.poset, make_point_set({{1, 3}, {2, 3}, {3, 3}, {2, 2}, {3, 2}, {3, 1}}), p);
    f.M = direct_sum(first, second);
    f.N = direct_sum(
        direct_sum(interval_on(f.poset, make_point_set({{1, 3}, {2, 3}, {3, 3}, {1, 2}, {2, 2}, {3, 2}, {3, 1}}), p),
                   interval_on(f.poset, make_point_set({{1, 3}, {2, 3}, {3, 3}, {2, 2}, {3, 2}, {2, 1}, {3, 1}}), p)),
        interval_on(f.poset, make_point_set({{2, 2}}), p));
    f.path = {{1, 2}, {1, 3}, {2, 3}, {3, 3}, {3, 2}, {3, 1}, {2, 1}};
    return f;
}

HookPairFixture zib_vs_int(std::uint32_t p) {
    HookPairFixture f;
    f.poset = grid_ptr(4, 2, {0, 0});
    const Point a{0, 1}, b{1, 1}, c{2, 1}, d{1, 0}, e{2, 0}, g{3, 0};
    f.I = make_point_set({a, b, c, d, e, g});
    f.M2 = grid_module(f.poset, {{a, 1}, {b, 2}, {c, 1}, {d, 1}, {e, 2}, {g, 1}},
                       {{{a, b}, col({1, 0}, p)},
                        {{b, c}, row({1, 1}, p)},
                        {{d, b}, col({0, 1}, p)},
                        {{d, e}, col({1, 1}, p)},
                        {{e, g}, row({0, 1}, p)},
                        {{e, c}, row({1, 0}, p)}},
                       p);
    f.M = direct_sum(interval_on(f.poset, f.I, p), f.M2);
    PModule n1 = grid_module(f.poset, {{a, 1}, {b, 2}, {c, 1}, {d, 1}, {e, 1}, {g, 1}},
                             {{{a, b}, col({1, 0}, p)}, {{b, c}, row({1, 1}, p)}, {{d, b}, col({0, 1}, p)}}, p);
    PModule n2 = grid_module(f.poset, {{a, 1}, {b, 1}, {c, 1}, {d, 1}, {e, 2}, {g, 1}},
                             {{{d, e}, col({1, 1}, p)}, {{e, g}, row({0, 1}, p)}, {{e, c}, row({1, 0}, p)}}, p);
    f.N = direct_sum(n1, n2);
    return f;
}

BettiPairFixture betti_pair(std::uint32_t p) {
    BettiPairFixture f;
    f.poset = grid_ptr(4, 4, {0, 0});
    const FinitePoset& P = *f.poset;
    const Point a{0, 2}, b{1, 1}, c{2, 0}, D{2, 2};
    PointSet ua = up_set(P, a), ub = up_set(P, b), uc = up_set(P, c), uD = up_set(P, D);
    PointSet ac;
    std::set_union(ua.begin(), ua.end(), uc.begin(), uc.end(), std::back_inserter(ac));
    PointSet b_minus_D;
    std::set_difference(ub.begin(), ub.end(), uD.begin(), uD.end(), std::back_inserter(b_minus_D));
    f.M = direct_sum(interval_on(f.poset, ac, p), interval_on(f.poset, ub, p));
    f.N = direct_sum(direct_sum(interval_on(f.poset, ua, p), interval_on(f.poset, uc, p)),
                     interval_on(f.poset, b_minus_D, p));
    f.path = {a, {1, 2}, D, {2, 1}, c};
    return f;
}

PointSet TameCounterexample::I(int a) const {
    PointSet out;
    for (int e = 0; e < poset->size(); ++e) {
        Point q = poset->coord(e);
        int s = q.x + q.y;
        int k = q.x - a;
        if (s <= 0 || (s == 1 && ((k >= 2 && k % 2 == 0) || (k <= -1 && (-k) % 2 == 1)))) out.push_back(q);
    }
    return make_point_set(out);
}

TameCounterexample tame_counterexample(int window, std::uint32_t p) {
    if (window < 2) throw InputError("counterexample window must be at least 2");
    TameCounterexample t;
    t.window = window;
    t.poset = grid_ptr(2 * window + 1, 2 * window + 1, {-window, -window});
    // 0 below the anti-diagonal, 1/2 on it (even/odd x), 3/4 just above it (even/odd x), 5 beyond.
    t.quotient = std::make_shared<const FinitePoset>(FinitePoset::from_relations(
        6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}}));
    std::vector<int> qd{1, 2, 2, 1, 1, 0};
    std::vector<Matrix> qm;
    for (auto [u, v] : t.quotient->cover_edges()) {
        Matrix m;
        if (u == 0)
            m = col({1, 1}, p);
        else if (u == 1 || u == 2)
            m = (v - 3 == u - 1) ? row({0, 1}, p) : row({1, 0}, p);
        else
            m = Matrix::zero(0, 1, p);
        qm.push_back(m);
    }
    t.N = PModule(t.quotient, qd, qm, p);
    t.pi.resize(t.poset->size());
    for (int e = 0; e < t.poset->size(); ++e) {
        Point q = t.poset->coord(e);
        int s = q.x + q.y, parity = ((q.x % 2) + 2) % 2;
        t.pi[e] = s < 0 ? 0 : s == 0 ? 1 + parity : s == 1 ? 3 + parity : 5;
    }
    t.M = pullback(t.N, t.poset, t.pi);
    t.min_shift = 2 - window;
    t.max_shift = window - 2;
    return t;
}

const std::vector<FixtureInfo>& fixture_list() {
    static const std::vector<FixtureInfo> list{
        {"chain4-pair", "Two modules on the chain [4] with equal ranks on {[2,3],[1,3],[2,4]} and different ranks on [1,4].",
         false},
        {"ex-2x2-indicator",
         "Indicator of the hook I in [2]^2 inverted over {I,J1,J2,J3}; the pair k_I+k_J3 and k_J1+k_J2.", false},
        {"grid3-zib-pair", "Two modules on [3]^2 with equal interval ranks whose restrictions to a 7-point path differ.",
         false},
        {"zib-vs-int",
         "Two modules on a 6-point interval I of [4]x[2]: ranks 1 and 0 over I, equal barcodes on all maximal simple paths.",
         false},
        {"betti-pair", "Two modules on [0,3]^2 separated by the full bar of a zigzag a < D > c.", false},
        {"thm-tame-counterexample",
         "Pullback of a six-point module to the window [-n,n]^2; the sets I_a have rank 1 and every strictly larger "
         "connected set has rank 0.",
         true},
    };
    return list;
}

std::vector<std::pair<std::string, PModule>> fixture_modules(const std::string& name, int window, std::uint32_t p) {
    if (name == "chain4-pair") {
        auto f = chain4_pair(p);
        return {{"plus", f.plus}, {"minus", f.minus}};
    }
    if (name == "ex-2x2-indicator") {
        auto f = square_indicator(p);
        return {{"M", f.M}, {"N", f.N}};
    }
    if (name == "grid3-zib-pair") {
        auto f = grid3_pair(p);
        return {{"M", f.M}, {"N", f.N}};
    }
    if (name == "zib-vs-int") {
        auto f = zib_vs_int(p);
        return {{"M", f.M}, {"N", f.N}};
    }
    if (name == "betti-pair") {
        auto f = betti_pair(p);
        return {{"M", f.M}, {"N", f.N}};
    }
    if (name == "thm-tame-counterexample") {
        auto t = tame_counterexample(window, p);
        return {{"M", t.M}, {"N", t.N}};
    }
    throw InputError("unknown fixture '" + name + "'");
}

nlohmann::json run_fixture(const std::string& name, int window, std::uint32_t p, int threads, int samples) {
    nlohmann::json out{{"fixture", name}};
    bool ok = true;
    auto check = [&](const std::string& what, bool holds) {
        out["checks"].push_back({{"check", what}, {"holds", holds}});
        ok = ok && holds;
    };
    if (name == "chain4-pair") {
        auto f = chain4_pair(p);
        GriTable tp = gri(f.plus, f.big, threads), tm = gri(f.minus, f.big, threads);
        out["plus"] = table_json(tp);
        out["minus"] = table_json(tm);
        check("equal ranks on the small collection", gri(f.plus, f.small).same_values(gri(f.minus, f.small)));
        check("ranks differ at [1,4]", tp.at(f.extra.members) != tm.at(f.extra.members));
        auto pair = minimal_nonisomorphic_pair(f.poset, f.small, f.big, f.extra, p);
        auto all = make_collection(*f.poset, "int");
        check("minimal pair reproduces the plus module", gri(pair.first, all).same_values(gri(f.plus, all)));
        check("minimal pair reproduces the minus module", gri(pair.second, all).same_values(gri(f.minus, all)));
        out["gpd_plus"] = diagram_json(gpd(tp))["entries"];
        out["gpd_minus"] = diagram_json(gpd(tm))["entries"];
    } else if (name == "ex-2x2-indicator") {
        auto f = square_indicator(p);
        std::vector<Subposet> big{f.I, f.J1, f.J2, f.J3}, small{f.J1, f.J2, f.J3};
        canonical_sort(big);
        auto cp = containment_poset(big);
        PosetFunction ind(cp.items.size(), 0);
        for (std::size_t i = 0; i < cp.items.size(); ++i)
            if (cp.items[i] == f.I) ind[i] = 1;
        PosetFunction d = invert_over(cp, ind);
        nlohmann::json inv = nlohmann::json::array();
        bool expected = true;
        for (std::size_t i = 0; i < cp.items.size(); ++i) {
            inv.push_back({{"members", cp.items[i].members}, {"value", d[i]}});
            long long want = (cp.items[i] == f.I || cp.items[i] == f.J3) ? 1 : -1;
            expected = expected && d[i] == want;
        }
        out["indicator_inverse"] = inv;
        check("1_I * mu = 1_I - 1_J1 - 1_J2 + 1_J3", expected);
        check("equal ranks on {J1,J2,J3}", gri(f.M, small).same_values(gri(f.N, small)));
        GriTable tm = gri(f.M, big), tn = gri(f.N, big);
        std::vector<long long> diff(tm.ranks.size());
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = tm.ranks[i] - tn.ranks[i];
        out["rank_difference"] = table_json(GriTable{f.poset, big, diff, ""});
        check("ranks differ at I", generalized_rank(f.M, f.I.members) != generalized_rank(f.N, f.I.members));
        SignedDiagram sd;
        sd.poset = f.poset;
        for (std::size_t i = 0; i < cp.items.size(); ++i)
            if (d[i] != 0) {
                sd.support.push_back(cp.items[i]);
                sd.mult.push_back(d[i]);
            }
        auto dec = minimal_rank_decomposition(sd);
        auto has = [](const auto& v, const Subposet& s) {
            return std::any_of(v.begin(), v.end(), [&](const auto& e) { return e.first == s && e.second == 1; });
        };
        check("minimal rank decomposition R = {I, J3}, S = {J1, J2}",
              dec.R.size() == 2 && dec.S.size() == 2 && has(dec.R, f.I) && has(dec.R, f.J3) && has(dec.S, f.J1) &&
                  has(dec.S, f.J2));
    } else if (name == "grid3-zib-pair") {
        auto f = grid3_pair(p);
        auto all = make_collection(*f.poset, "int");
        check("equal ranks on every interval", gri(f.M, all, threads).same_values(gri(f.N, all, threads)));
        ZigzagPath z = make_path(f.path);
        Barcode bm = zigzag_barcode(f.M, z), bn = zigzag_barcode(f.N, z);
        out["barcode_M"] = barcode_json(bm);
        out["barcode_N"] = barcode_json(bn);
        check("barcodes along the path differ", !(bm == bn));
    } else if (name == "zib-vs-int") {
        auto f = zib_vs_int(p);
        int rm = generalized_rank(f.M, f.I), rn = generalized_rank(f.N, f.I);
        out["rank_M"] = rm;
        out["rank_N"] = rn;
        check("rank over I is 1 for M and 0 for N", rm == 1 && rn == 0);
        auto paths = maximal_simple_paths(f.I);
        bool same = true;
        nlohmann::json pj = nlohmann::json::array();
        for (const auto& path : paths) {
            ZigzagPath z = make_path(path);
            Barcode bm = zigzag_barcode(f.M, z), bn = zigzag_barcode(f.N, z);
            same = same && bm == bn;
            pj.push_back({{"path", path_json(z)["points"]}, {"barcode", barcode_json(bm)}, {"equal", bm == bn}});
        }
        out["maximal_simple_paths"] = pj;
        check("six maximal simple paths", paths.size() == 6);
        check("equal barcodes on every maximal simple path", same);
        check("I is neither thin nor solid", !is_thin(f.I) && !is_solid(f.I));
        for (const auto& [label, mod] : {std::pair<std::string, const PModule*>{"M", &f.M}, {"N", &f.N}}) {
            GriEstimate e = gri_bounds_from_zib(
                f.I, [&](const std::vector<Point>& path) { return full_bar_multiplicity(*mod, path); }, *f.poset);
            out["estimate_" + label] = {{"lower", e.lower}, {"upper", e.upper}, {"method", e.method}};
            int truth = label == "M" ? rm : rn;
            check("estimate brackets the rank of " + label, e.lower <= truth && truth <= e.upper);
        }
    } else if (name == "betti-pair") {
        auto f = betti_pair(p);
        long long m = full_bar_multiplicity(f.M, f.path), n = full_bar_multiplicity(f.N, f.path);
        out["full_bar_M"] = m;
        out["full_bar_N"] = n;
        check("full bar multiplicity is 1 for M and 0 for N", m == 1 && n == 0);
        check("equal dimensions everywhere", f.M.dims() == f.N.dims());
    } else if (name == "thm-tame-counterexample") {
        auto t = tame_counterexample(window, p);
        out["window"] = window;
        nlohmann::json ranks = nlohmann::json::array();
        bool all_one = true;
        for (int a = t.min_shift; a <= t.max_shift; ++a) {
            auto members = to_members(*t.poset, t.I(a));
            int r = generalized_rank(t.M, *members);
            all_one = all_one && r == 1;
            ranks.push_back({{"a", a}, {"rank", r}});
        }
        out["shift_ranks"] = ranks;
        check("rank 1 on I_a for every admissible shift", all_one);
        Rng rng(static_cast<std::uint64_t>(window) * 7919U + 17U);
        std::uniform_int_distribution<int> shift(t.min_shift, t.max_shift);
        nlohmann::json sup = nlohmann::json::array();
        bool all_zero = true;
        for (int s = 0; static_cast<int>(sup.size()) < samples && s < 20 * samples; ++s) {
            int a = shift(rng);
            PointSet J = t.I(a);
            bool u_only = s % 2 == 0;
            std::uniform_int_distribution<int> extra(1, 3);
            int k = extra(rng);
            for (int added = 0; added < k;) {
                std::vector<Point> cand;
                for (Point q : J)
                    for (Point st : {Point{1, 0}, Point{0, 1}, Point{-1, 0}, Point{0, -1}}) {
                        Point nb{q.x + st.x, q.y + st.y};
                        if (!t.poset->id_of(nb) || contains(J, nb)) continue;
                        if (u_only && nb.x + nb.y != 1) continue;
                        cand.push_back(nb);
                    }
                cand = make_point_set(cand);
                if (cand.empty()) break;
                std::uniform_int_distribution<std::size_t> pick(0, cand.size() - 1);
                J.push_back(cand[pick(rng)]);
                J = make_point_set(J);
                ++added;
            }
            if (J.size() == t.I(a).size()) continue;
            int r = generalized_rank(t.M, *to_members(*t.poset, J));
            all_zero = all_zero && r == 0;
            sup.push_back({{"a", a}, {"added", J.size() - t.I(a).size()}, {"anti_diagonal_only", u_only}, {"rank", r}});
        }
        out["superset_ranks"] = sup;
        check("rank 0 on sampled strict connected supersets", all_zero && static_cast<int>(sup.size()) == samples);
    } else {
        throw InputError("unknown fixture '" + name + "'");
    }
    out["ok"] = ok;
    return out;
}

}  // namespace grk

#include "grk/gri.hpp"

#include "grk/errors.hpp"
#include "grk/parallel.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <sstream>

namespace grk {

namespace {

using Rational = boost::multiprecision::cpp_rational;

bool superset(const std::vector<int>& big, const std::vector<int>& small) {
    return big.size() >= small.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::unordered_map<std::vector<int>, std::size_t, MembersHash> index_of(const std::vector<Subposet>& c) {
    std::unordered_map<std::vector<int>, std::size_t, MembersHash> idx;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!idx.emplace(c[i].members, i).second) throw InputError("collection contains a repeated member");
    return idx;
}

SignedDiagram diagram_from(PosetPtr P, const std::vector<Subposet>& items, const PosetFunction& f) {
    SignedDiagram d;
    d.poset = std::move(P);
    std::vector<std::size_t> order(items.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return canonical_less(items[a], items[b]); });
    for (std::size_t i : order)
        if (f[i] != 0) {
            d.support.push_back(items[i]);
            d.mult.push_back(f[i]);
        }
    return d;
}

ContainmentPoset checked_containment(std::vector<Subposet> items) {
    if (items.size() > kMaxInversionSize)
        throw CapExceeded("collection of " + std::to_string(items.size()) + " members exceeds the inversion limit of " +
                          std::to_string(kMaxInversionSize));
    return containment_poset(std::move(items));
}

}  // namespace

std::vector<Subposet> make_collection(const FinitePoset& P, const std::string& name, const EnumerationConfig& cfg) {
    std::vector<Subposet> out;
    if (name == "int") {
        out = enumerate_intervals(P, kUnbounded, kUnbounded, cfg);
    } else if (name.rfind("int:", 0) == 0) {
        int m = 0, n = 0;
        char comma = 0;
        std::istringstream in(name.substr(4));
        if (!(in >> m >> comma >> n) || comma != ',' || m < 1 || n < 1)
            throw InputError("collection '" + name + "' should look like int:m,n");
        out = enumerate_intervals(P, m, n, cfg);
    } else if (name == "seg") {
        out = enumerate_segments(P);
    } else if (name == "con") {
        out = enumerate_connected(P, cfg);
    } else {
        throw InputError("unknown collection '" + name + "'");
    }
    canonical_sort(out);
    return out;
}

int subposet_rank(const PModule& m, const Subposet& s) {
    if (m.poset().is_grid() && (s.kind == SubKind::Interval || s.kind == SubKind::Segment))
        return generalized_rank_fast(m, to_points(m.poset(), s.members));
    return generalized_rank(m, s.members);
}

int RankCache::rank(const Subposet& s) {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(s.members);
        if (it != memo_.end()) return it->second;
    }
    int r = subposet_rank(m_, s);
    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(s.members, r);
    return r;
}

std::size_t RankCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return memo_.size();
}

std::optional<long long> GriTable::at(const std::vector<int>& members) const {
    for (std::size_t i = 0; i < collection.size(); ++i)
        if (collection[i].members == members) return ranks[i];
    return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> monotonicity_violation(const GriTable& t) {
    for (std::size_t i = 0; i < t.collection.size(); ++i)
        for (std::size_t j = 0; j < t.collection.size(); ++j)
            if (i != j && t.ranks[i] < t.ranks[j] && superset(t.collection[j].members, t.collection[i].members))
                return std::make_pair(i, j);
    return std::nullopt;
}

GriTable gri(RankCache& cache, const PModule& m, std::vector<Subposet> collection, int threads, std::string module_ref) {
    canonical_sort(collection);
    GriTable t;
    t.poset = m.poset_ptr();
    t.module_ref = std::move(module_ref);
    t.ranks.assign(collection.size(), 0);
    for (const auto& s : collection)
        if (s.members.empty()) throw InputError("collection contains an empty member");
    parallel_for(collection.size(), threads, [&](std::size_t i) { t.ranks[i] = cache.rank(collection[i]); });
    t.collection = std::move(collection);
    return t;
}

GriTable gri(const PModule& m, std::vector<Subposet> collection, int threads, std::string module_ref) {
    RankCache cache(m);
    return gri(cache, m, std::move(collection), threads, std::move(module_ref));
}

long long SignedDiagram::at(const std::vector<int>& members) const {
    for (std::size_t i = 0; i < support.size(); ++i)
        if (support[i].members == members) return mult[i];
    return 0;
}

std::vector<std::pair<Subposet, long long>> SignedDiagram::positive() const {
    std::vector<std::pair<Subposet, long long>> out;
    for (std::size_t i = 0; i < support.size(); ++i)
        if (mult[i] > 0) out.emplace_back(support[i], mult[i]);
    return out;
}

std::vector<std::pair<Subposet, long long>> SignedDiagram::negative() const {
    std::vector<std::pair<Subposet, long long>> out;
    for (std::size_t i = 0; i < support.size(); ++i)
        if (mult[i] < 0) out.emplace_back(support[i], -mult[i]);
    return out;
}

PosetFunction invert_over(const ContainmentPoset& cp, const PosetFunction& values) {
    return mobius_invert(*cp.order, values);
}

SignedDiagram gpd(const GriTable& table) {
    ContainmentPoset cp = checked_containment(table.collection);
    return diagram_from(table.poset, cp.items, invert_over(cp, table.ranks));
}

std::vector<long long> rank_from_diagram(const SignedDiagram& d, const std::vector<Subposet>& collection) {
    std::vector<long long> out(collection.size(), 0);
    for (std::size_t i = 0; i < collection.size(); ++i)
        for (std::size_t j = 0; j < d.support.size(); ++j)
            if (superset(d.support[j].members, collection[i].members)) out[i] += d.mult[j];
    return out;
}

InvertibilityReport verify_invertibility(const GriTable& table, std::vector<Subposet> candidate) {
    auto idx = index_of(table.collection);
    PosetFunction values;
    for (const auto& c : candidate) {
        auto it = idx.find(c.members);
        if (it == idx.end()) throw InputError("candidate support is not inside the table's collection");
        values.push_back(table.ranks[it->second]);
    }
    ContainmentPoset cp = checked_containment(std::move(candidate));
    InvertibilityReport rep;
    rep.dgm = diagram_from(table.poset, cp.items, invert_over(cp, values));
    std::vector<long long> back = rank_from_diagram(rep.dgm, table.collection);
    rep.invertible = true;
    for (std::size_t i = 0; i < table.collection.size(); ++i)
        if (back[i] != table.ranks[i]) {
            rep.invertible = false;
            rep.witness = table.collection[i];
            rep.expected = table.ranks[i];
            rep.obtained = back[i];
            break;
        }
    return rep;
}

RankDecomposition minimal_rank_decomposition(const SignedDiagram& dgm) { return {dgm.positive(), dgm.negative()}; }

PModule realize(PosetPtr P, const std::vector<std::pair<Subposet, long long>>& parts, std::uint32_t p) {
    PModule out = PModule::zero(P, p);
    for (const auto& [s, mult] : parts) {
        if (mult < 0) throw InputError("cannot realize a negative multiplicity");
        if (!is_interval(*P, s.members)) throw InputError("cannot realize a non-interval support");
        PModule k = interval_module(P, s.members, p);
        for (long long i = 0; i < mult; ++i) out = direct_sum(out, k);
    }
    return out;
}

ModulePair tightness_pair(const PModule& m, const std::vector<Subposet>& collection) {
    SignedDiagram d = gpd(gri(m, collection));
    PModule n = realize(m.poset_ptr(), d.positive(), m.field());
    PModule n2 = direct_sum(m, realize(m.poset_ptr(), d.negative(), m.field()));
    if (d.negative().empty()) {
        auto all = make_collection(m.poset(), "int");
        if (gri(n, all).same_values(gri(m, all)))
            throw InputError("module is indistinguishable from an interval-decomposable one over all intervals");
    }
    return {std::move(n), std::move(n2)};
}

ModulePair minimal_nonisomorphic_pair(PosetPtr P, const std::vector<Subposet>& small, const std::vector<Subposet>& big,
                                      const Subposet& i0, std::uint32_t p) {
    for (const auto& s : small)
        if (s.members == i0.members) throw InputError("I0 belongs to the smaller collection");
    auto idx = index_of(big);
    auto it = idx.find(i0.members);
    if (it == idx.end()) throw InputError("I0 is not in the larger collection");
    PosetFunction indicator(big.size(), 0);
    indicator[it->second] = 1;
    ContainmentPoset cp = checked_containment(big);
    SignedDiagram d = diagram_from(P, cp.items, invert_over(cp, indicator));
    return {realize(P, d.positive(), p), realize(P, d.negative(), p)};
}

KernelCheck gri_difference_kernel_check(const PModule& m, const PModule& n, const std::vector<Subposet>& small,
                                        const std::vector<Subposet>& big) {
    KernelCheck out;
    out.equal_on_small = gri(m, small).same_values(gri(n, small));
    if (!out.equal_on_small) return out;
    auto small_idx = index_of(small);
    ContainmentPoset cp = checked_containment(big);
    const std::size_t rows = cp.items.size();
    GriTable tm = gri(m, cp.items), tn = gri(n, cp.items);
    auto pos_m = index_of(tm.collection);
    PosetFunction rm(rows), rn(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        std::size_t k = pos_m.at(cp.items[i].members);
        rm[i] = tm.ranks[k];
        rn[i] = tn.ranks[k];
    }
    PosetFunction dm = invert_over(cp, rm), dn = invert_over(cp, rn);
    std::vector<std::size_t> outside;
    for (std::size_t i = 0; i < rows; ++i)
        if (!small_idx.count(cp.items[i].members)) outside.push_back(i);
    // Augmented system [b_K | diff] with b_K = 1_K * mu.
    const std::size_t cols = outside.size();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
    for (std::size_t j = 0; j < cols; ++j) {
        PosetFunction ind(rows, 0);
        ind[outside[j]] = 1;
        PosetFunction b = invert_over(cp, ind);
        for (std::size_t i = 0; i < rows; ++i) a[i][j] = b[i];
    }
    for (std::size_t i = 0; i < rows; ++i) a[i][cols] = dm[i] - dn[i];
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        Rational inv = 1 / a[r][c];
        for (auto& v : a[r]) v *= inv;
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && a[i][c] != 0) {
                Rational f = a[i][c];
                for (std::size_t k = c; k <= cols; ++k) a[i][k] -= f * a[r][k];
            }
        pivot_col.push_back(c);
        ++r;
    }
    out.in_span = true;
    for (std::size_t i = r; i < rows; ++i)
        if (a[i][cols] != 0) out.in_span = false;
    if (out.in_span)
        for (std::size_t k = 0; k < pivot_col.size(); ++k)
            if (a[k][cols] != 0) out.coefficients.emplace_back(cp.items[outside[pivot_col[k]]], a[k][cols].str());
    return out;
}

}  // namespace grk

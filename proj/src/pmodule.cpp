#include "grk/pmodule.hpp"

#include "grk/errors.hpp"
#include "grk/zigzag.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace grk {

namespace {

constexpr int kFunctorialityCheckCap = 600;

std::string edge_name(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::vector<int> offsets_of(const std::vector<int>& dims) {
    std::vector<int> off(dims.size() + 1, 0);
    for (std::size_t i = 0; i < dims.size(); ++i) off[i + 1] = off[i] + dims[i];
    return off;
}

Matrix constraint_matrix(const Diagram& d, const std::vector<int>& off) {
    int rows = 0;
    for (const auto& e : d.edges) rows += d.dims[e.dst];
    Matrix c(rows, off.back(), d.p);
    int r = 0;
    for (const auto& e : d.edges) {
        for (int i = 0; i < d.dims[e.dst]; ++i) {
            c.set(r + i, off[e.dst] + i, 1);
            for (int j = 0; j < d.dims[e.src]; ++j) {
                std::uint32_t v = e.map(i, j);
                if (v) c.set(r + i, off[e.src] + j, -static_cast<long long>(v));
            }
        }
        r += d.dims[e.dst];
    }
    return c;
}

Matrix relation_matrix(const Diagram& d, const std::vector<int>& off) {
    int cols = 0;
    for (const auto& e : d.edges) cols += d.dims[e.src];
    Matrix r(off.back(), cols, d.p);
    int c = 0;
    for (const auto& e : d.edges) {
        for (int j = 0; j < d.dims[e.src]; ++j) {
            r.set(off[e.src] + j, c + j, 1);
            for (int i = 0; i < d.dims[e.dst]; ++i) {
                std::uint32_t v = e.map(i, j);
                if (v) r.set(off[e.dst] + i, c + j, -static_cast<long long>(v));
            }
        }
        c += d.dims[e.src];
    }
    return r;
}

void validate_diagram(const Diagram& d) {
    for (const auto& e : d.edges) {
        if (e.src < 0 || e.dst < 0 || e.src >= static_cast<int>(d.dims.size()) ||
            e.dst >= static_cast<int>(d.dims.size()))
            throw InputError("diagram edge out of range");
        if (e.map.rows() != d.dims[e.dst] || e.map.cols() != d.dims[e.src])
            throw InputError("diagram edge map has the wrong shape");
    }
}

}  // namespace

PModule::PModule(PosetPtr P, std::vector<int> dims, std::vector<Matrix> edge_maps, std::uint32_t p, bool check)
    : poset_(std::move(P)), dims_(std::move(dims)), maps_(std::move(edge_maps)), p_(p) {
    if (!poset_) throw InputError("module needs a poset");
    if (!is_prime(p_)) throw InputError("field modulus " + std::to_string(p_) + " is not prime");
    if (static_cast<int>(dims_.size()) != poset_->size()) throw InputError("dims do not match the poset size");
    for (int d : dims_)
        if (d < 0) throw InputError("negative dimension");
    const auto& edges = poset_->cover_edges();
    if (maps_.size() != edges.size()) throw InputError("one matrix per cover edge is required");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [a, b] = edges[i];
        const Matrix& m = maps_[i];
        if (m.rows() != dims_[b] || m.cols() != dims_[a])
            throw InputError("map on edge " + edge_name(a, b) + " must be " + std::to_string(dims_[b]) + "x" +
                             std::to_string(dims_[a]));
        if (m.prime() != p_) throw InputError("map on edge " + edge_name(a, b) + " uses a different field");
    }
    if (check) {
        if (auto defect = functoriality_defect()) throw InputError("module is not functorial: " + *defect);
    }
}

PModule PModule::zero(PosetPtr P, std::uint32_t p) {
    std::vector<Matrix> maps;
    for (std::size_t i = 0; i < P->cover_edges().size(); ++i) maps.emplace_back(0, 0, p);
    std::vector<int> dims(P->size(), 0);
    return PModule(std::move(P), std::move(dims), std::move(maps), p, false);
}

int PModule::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

const Matrix& PModule::edge_map(int a, int b) const {
    int idx = poset_->edge_index(a, b);
    if (idx < 0) throw InputError("no cover edge " + edge_name(a, b));
    return maps_[idx];
}

Matrix PModule::hom(int a, int b) const {
    if (!poset_->leq(a, b)) throw InputError("hom requires " + std::to_string(a) + " <= " + std::to_string(b));
    Matrix acc = Matrix::identity(dims_[a], p_);
    int cur = a;
    if (poset_->is_grid()) {
        Point pa = poset_->coord(a), pb = poset_->coord(b);
        Point q = pa;
        while (q != pb) {
            Point nxt = q.x < pb.x ? Point{q.x + 1, q.y} : Point{q.x, q.y + 1};
            int u = *poset_->id_of(q), v = *poset_->id_of(nxt);
            acc = maps_[poset_->edge_index(u, v)] * acc;
            q = nxt;
        }
        return acc;
    }
    while (cur != b) {
        int next = -1;
        for (int c : poset_->up_covers(cur))
            if (poset_->leq(c, b)) {
                next = c;
                break;
            }
        acc = maps_[poset_->edge_index(cur, next)] * acc;
        cur = next;
    }
    return acc;
}

int PModule::dim_at(Point q) const {
    auto id = poset_->id_of(q);
    return id ? dims_[*id] : 0;
}

Matrix PModule::hom_at(Point a, Point b) const {
    auto ia = poset_->id_of(a), ib = poset_->id_of(b);
    if (!point_leq(a, b)) throw InputError("hom_at requires comparable points");
    if (!ia || !ib) return Matrix(dim_at(b), dim_at(a), p_);
    return hom(*ia, *ib);
}

std::optional<std::string> PModule::functoriality_defect() const {
    const FinitePoset& P = *poset_;
    if (P.is_grid()) {
        const int W = P.grid()->width, H = P.grid()->height;
        for (int dx = 0; dx + 1 < W; ++dx)
            for (int dy = 0; dy + 1 < H; ++dy) {
                int a = dx * H + dy, r = (dx + 1) * H + dy, u = dx * H + dy + 1, t = (dx + 1) * H + dy + 1;
                if (edge_map(r, t) * edge_map(a, r) != edge_map(u, t) * edge_map(a, u))
                    return "square at element " + std::to_string(a) + " does not commute";
            }
        return std::nullopt;
    }
    if (P.size() > kFunctorialityCheckCap) return std::nullopt;
    const auto& order = P.linear_extension();
    for (int a : order) {
        std::vector<std::optional<Matrix>> h(P.size());
        h[a] = Matrix::identity(dims_[a], p_);
        for (int b : order) {
            if (b == a || !P.leq(a, b)) continue;
            for (int c : P.down_covers(b)) {
                if (!P.leq(a, c)) continue;
                Matrix cand = edge_map(c, b) * *h[c];
                if (!h[b])
                    h[b] = std::move(cand);
                else if (*h[b] != cand)
                    return "paths from " + std::to_string(a) + " to " + std::to_string(b) + " disagree";
            }
        }
    }
    return std::nullopt;
}

bool PModule::operator==(const PModule& o) const {
    return p_ == o.p_ && dims_ == o.dims_ && maps_ == o.maps_ && *poset_ == *o.poset_;
}

PModule interval_module(PosetPtr P, const std::vector<int>& members, std::uint32_t p) {
    if (!is_interval(*P, members)) throw InputError("support is not an interval");
    std::vector<int> dims(P->size(), 0);
    for (int e : members) dims[e] = 1;
    std::vector<Matrix> maps;
    for (auto [a, b] : P->cover_edges()) {
        Matrix m(dims[b], dims[a], p);
        if (dims[a] && dims[b]) m.set(0, 0, 1);
        maps.push_back(std::move(m));
    }
    return PModule(std::move(P), std::move(dims), std::move(maps), p, false);
}

PModule direct_sum(const PModule& m, const PModule& n) {
    if (!(m.poset() == n.poset())) throw InputError("direct sum of modules over different posets");
    if (m.field() != n.field()) throw InputError("direct sum of modules over different fields");
    std::vector<int> dims(m.dims());
    for (std::size_t i = 0; i < dims.size(); ++i) dims[i] += n.dims()[i];
    std::vector<Matrix> maps;
    for (std::size_t i = 0; i < m.edge_maps().size(); ++i)
        maps.push_back(block_diag(m.edge_maps()[i], n.edge_maps()[i]));
    return PModule(m.poset_ptr(), std::move(dims), std::move(maps), m.field(), false);
}

PModule pullback(const PModule& n, PosetPtr P, const std::vector<int>& pi) {
    if (static_cast<int>(pi.size()) != P->size()) throw InputError("pullback map has the wrong length");
    for (int q : pi)
        if (q < 0 || q >= n.poset().size()) throw InputError("pullback map leaves the target poset");
    for (auto [a, b] : P->cover_edges())
        if (!n.poset().leq(pi[a], pi[b]))
            throw InputError("pullback map is not order-preserving on " + edge_name(a, b));
    std::vector<int> dims(P->size());
    for (int e = 0; e < P->size(); ++e) dims[e] = n.dim(pi[e]);
    std::vector<Matrix> maps;
    for (auto [a, b] : P->cover_edges()) maps.push_back(n.hom(pi[a], pi[b]));
    return PModule(std::move(P), std::move(dims), std::move(maps), n.field(), false);
}

Diagram induced_diagram(const PModule& m, const std::vector<int>& members) {
    const FinitePoset& P = m.poset();
    std::vector<int> pos(P.size());
    for (int i = 0; i < P.size(); ++i) pos[P.linear_extension()[i]] = i;
    Diagram d;
    d.p = m.field();
    for (int e : members) d.dims.push_back(m.dim(e));
    std::vector<int> order(members.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return pos[members[i]] < pos[members[j]]; });
    for (std::size_t i = 0; i < members.size(); ++i) {
        std::vector<int> covers;
        for (int j : order) {
            if (!P.lt(members[i], members[j])) continue;
            bool above_cover = std::any_of(covers.begin(), covers.end(),
                                           [&](int c) { return P.leq(members[c], members[j]); });
            if (!above_cover) covers.push_back(j);
        }
        for (int j : covers)
            d.edges.push_back({static_cast<int>(i), j, m.hom(members[i], members[j])});
    }
    return d;
}

PModule restrict_to(const PModule& m, const std::vector<int>& members) {
    const FinitePoset& P = m.poset();
    std::vector<std::pair<int, int>> rel;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j)
            if (i != j && P.leq(members[i], members[j])) rel.emplace_back(static_cast<int>(i), static_cast<int>(j));
    auto sub = std::make_shared<const FinitePoset>(FinitePoset::from_relations(static_cast<int>(members.size()), rel));
    std::vector<int> dims;
    for (int e : members) dims.push_back(m.dim(e));
    std::vector<Matrix> maps;
    for (auto [a, b] : sub->cover_edges()) maps.push_back(m.hom(members[a], members[b]));
    return PModule(std::move(sub), std::move(dims), std::move(maps), m.field(), false);
}

SectionSpace limit(const Diagram& d) {
    validate_diagram(d);
    SectionSpace s;
    s.offsets = offsets_of(d.dims);
    s.basis = kernel_basis(constraint_matrix(d, s.offsets));
    return s;
}

ColimitSpace colimit(const Diagram& d) {
    validate_diagram(d);
    ColimitSpace c;
    c.offsets = offsets_of(d.dims);
    auto proj = cokernel_projector(relation_matrix(d, c.offsets));
    c.dim = proj.quotient_dim;
    c.projection = std::move(proj.projector);
    return c;
}

namespace {

Diagram whole_diagram(const PModule& m) {
    Diagram d;
    d.p = m.field();
    d.dims = m.dims();
    const auto& edges = m.poset().cover_edges();
    for (std::size_t i = 0; i < edges.size(); ++i) d.edges.push_back({edges[i].first, edges[i].second, m.edge_maps()[i]});
    return d;
}

}  // namespace

SectionSpace limit(const PModule& m) { return limit(whole_diagram(m)); }
ColimitSpace colimit(const PModule& m) { return colimit(whole_diagram(m)); }

int limit_colimit_rank(const Diagram& low, int low_anchor, const Diagram& high, int high_anchor, const Matrix& f) {
    validate_diagram(low);
    validate_diagram(high);
    if (f.rows() != high.dims[high_anchor] || f.cols() != low.dims[low_anchor])
        throw InputError("connecting map has the wrong shape");
    auto loff = offsets_of(low.dims);
    Matrix k = kernel_basis(constraint_matrix(low, loff));
    if (k.cols() == 0) return 0;
    Matrix image = f * select_rows(k, loff[low_anchor], low.dims[low_anchor]);
    auto hoff = offsets_of(high.dims);
    Matrix v(hoff.back(), k.cols(), high.p);
    for (int i = 0; i < image.rows(); ++i)
        for (int j = 0; j < image.cols(); ++j) v.set(hoff[high_anchor] + i, j, image(i, j));
    Matrix r = relation_matrix(high, hoff);
    return rank(hstack(r, v)) - rank(r);
}

namespace {

void check_path(const Diagram& d) {
    validate_diagram(d);
    if (d.dims.empty()) throw InputError("empty path diagram");
    if (d.edges.size() + 1 != d.dims.size()) throw InputError("path diagram needs one edge per step");
    for (std::size_t i = 0; i < d.edges.size(); ++i) {
        const auto& e = d.edges[i];
        int a = static_cast<int>(i);
        if (!((e.src == a && e.dst == a + 1) || (e.src == a + 1 && e.dst == a)))
            throw InputError("edge " + std::to_string(i) + " does not join consecutive path nodes");
    }
}

Matrix select_cols(const Matrix& a, int first, int count) { return select_rows(a.transpose(), first, count).transpose(); }

}  // namespace

Matrix path_limit_at_start(const Diagram& d) {
    check_path(d);
    Matrix at_start = Matrix::identity(d.dims[0], d.p);
    Matrix here = at_start;  // section values at the current node
    for (std::size_t i = 0; i < d.edges.size(); ++i) {
        if (at_start.cols() == 0) break;
        const auto& e = d.edges[i];
        if (e.src == static_cast<int>(i)) {
            here = e.map * here;
            continue;
        }
        // Sections extend to node i+1 by any v with g v equal to the current value.
        Matrix k = kernel_basis(hstack(here, e.map.negated()));
        int params = here.cols();
        at_start = at_start * select_rows(k, 0, params);
        here = select_rows(k, params, k.rows() - params);
    }
    return at_start;
}

Matrix path_colimit_from_start(const Diagram& d) {
    check_path(d);
    const int n = static_cast<int>(d.dims.size());
    Matrix into = Matrix::identity(d.dims[n - 1], d.p);  // from the current node into the colimit of the suffix
    for (int i = n - 2; i >= 0; --i) {
        const auto& e = d.edges[i];
        if (e.src == i) {
            into = into * e.map;
            continue;
        }
        // Glue M_i to the suffix colimit along g: M_{i+1} -> M_i.
        const int c = into.rows();
        auto proj = cokernel_projector(vstack(into, e.map.negated()));
        into = select_cols(proj.projector, c, d.dims[i]);
    }
    return into;
}

int diagram_rank(const Diagram& d) {
    if (d.dims.empty()) throw InputError("rank over an empty diagram");
    for (int x : d.dims)
        if (x == 0) return 0;
    return limit_colimit_rank(d, 0, d, 0, Matrix::identity(d.dims[0], d.p));
}

int generalized_rank(const PModule& m, const std::vector<int>& members) {
    if (members.empty()) throw InputError("rank over an empty subset");
    if (!is_connected(m.poset(), members)) throw InputError("rank over a disconnected subset");
    for (int e : members)
        if (m.dim(e) == 0) return 0;
    return diagram_rank(induced_diagram(m, members));
}

namespace {

bool ambient_connected(const PointSet& pts) {
    std::vector<char> seen(pts.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (!seen[j] && comparable(pts[i], pts[j])) {
                seen[j] = 1;
                ++count;
                stack.push_back(j);
            }
    }
    return count == pts.size();
}

}  // namespace

int generalized_rank(const PModule& m, const PointSet& pts) {
    if (!m.poset().is_grid()) throw InputError("ambient points need a grid module");
    if (pts.empty()) throw InputError("rank over an empty subset");
    if (!ambient_connected(pts)) throw InputError("rank over a disconnected subset");
    auto members = to_members(m.poset(), pts);
    if (!members) return 0;
    return generalized_rank(m, *members);
}

int generalized_rank_fast(const PModule& m, const PointSet& interval) {
    if (!m.poset().is_grid()) throw InputError("fence rank needs a grid module");
    if (interval.empty()) throw InputError("rank over an empty subset");
    for (Point q : interval)
        if (m.dim_at(q) == 0) return 0;
    std::vector<Point> low = min_zz(interval), high = max_zz(interval);
    Matrix sections = path_limit_at_start(path_diagram(m, low));
    if (sections.cols() == 0) return 0;
    Matrix into = path_colimit_from_start(path_diagram(m, high));
    return rank(into * m.hom_at(low.front(), high.front()) * sections);
}

}  // namespace grk

#include "grk/random.hpp"

#include "grk/errors.hpp"

#include <algorithm>

namespace grk {

Matrix random_matrix(Rng& rng, int rows, int cols, std::uint32_t p) {
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    Matrix m(rows, cols, p);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, d(rng));
    return m;
}

Matrix random_invertible(Rng& rng, int n, std::uint32_t p) {
    for (;;) {
        Matrix m = random_matrix(rng, n, n, p);
        if (rank(m) == n) return m;
    }
}

FinitePoset random_poset(Rng& rng, int n, double density) {
    std::bernoulli_distribution coin(density);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) rel.emplace_back(perm[i], perm[j]);
    return FinitePoset::from_relations(n, rel);
}

PModule random_fp_module(Rng& rng, PosetPtr P, int generators, int relations, std::uint32_t p) {
    const int n = P->size();
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
    std::vector<int> gen_at(generators);
    for (int& g : gen_at) g = pick(rng);
    struct Relation {
        int at;
        std::vector<std::uint32_t> coeffs;  // over all generators; zero unless the generator lies below
    };
    std::vector<Relation> rels;
    for (int r = 0; r < relations; ++r) {
        Relation rel{pick(rng), std::vector<std::uint32_t>(generators, 0)};
        for (int g = 0; g < generators; ++g)
            if (P->leq(gen_at[g], rel.at)) rel.coeffs[g] = coef(rng);
        rels.push_back(std::move(rel));
    }
    // At each element: generators below it, echelon form of the relations below it.
    struct Local {
        std::vector<int> gens;          // generator ids, ascending
        Rref echelon;                   // rows over local generator coordinates
        std::vector<int> free_columns;  // local coordinates surviving in the quotient
    };
    std::vector<Local> local(n);
    for (int x = 0; x < n; ++x) {
        Local& L = local[x];
        for (int g = 0; g < generators; ++g)
            if (P->leq(gen_at[g], x)) L.gens.push_back(g);
        const int k = static_cast<int>(L.gens.size());
        std::vector<const Relation*> below;
        for (const auto& rel : rels)
            if (P->leq(rel.at, x)) below.push_back(&rel);
        Matrix R(static_cast<int>(below.size()), k, p);
        for (int i = 0; i < R.rows(); ++i)
            for (int j = 0; j < k; ++j) R.set(i, j, below[i]->coeffs[L.gens[j]]);
        L.echelon = rref(R);
        std::vector<char> is_pivot(k, 0);
        for (int c : L.echelon.pivots) is_pivot[c] = 1;
        for (int j = 0; j < k; ++j)
            if (!is_pivot[j]) L.free_columns.push_back(j);
    }
    std::vector<int> dims(n);
    for (int x = 0; x < n; ++x) dims[x] = static_cast<int>(local[x].free_columns.size());
    std::vector<Matrix> maps;
    for (auto [a, b] : P->cover_edges()) {
        const Local& A = local[a];
        const Local& B = local[b];
        Matrix m(dims[b], dims[a], p);
        for (int c = 0; c < dims[a]; ++c) {
            int g = A.gens[A.free_columns[c]];
            // Coordinates of generator g at b, reduced modulo the relations at b.
            std::vector<std::uint32_t> v(B.gens.size(), 0);
            int pos = static_cast<int>(std::lower_bound(B.gens.begin(), B.gens.end(), g) - B.gens.begin());
            v[pos] = 1;
            for (std::size_t r = 0; r < B.echelon.pivots.size(); ++r) {
                int pc = B.echelon.pivots[r];
                std::uint32_t f = v[pc];
                if (f == 0) continue;
                const std::uint32_t* row = B.echelon.r.row(static_cast<int>(r));
                for (std::size_t j = 0; j < v.size(); ++j)
                    v[j] = static_cast<std::uint32_t>((v[j] + static_cast<std::uint64_t>(p - f) * row[j]) % p);
            }
            for (int i = 0; i < dims[b]; ++i) m.set(i, c, v[B.free_columns[i]]);
        }
        maps.push_back(std::move(m));
    }
    return PModule(P, dims, maps, p);
}

PModule disguise(Rng& rng, const PModule& m) {
    const auto& P = m.poset();
    const std::uint32_t p = m.field();
    std::vector<Matrix> basis(P.size()), inv(P.size());
    for (int x = 0; x < P.size(); ++x) {
        basis[x] = random_invertible(rng, m.dim(x), p);
        inv[x] = inverse(basis[x]);
    }
    std::vector<Matrix> maps;
    const auto& edges = P.cover_edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [a, b] = edges[i];
        const Matrix& f = m.edge_maps()[i];
        if (f.empty())
            maps.push_back(f);
        else
            maps.push_back(basis[b] * f * inv[a]);
    }
    return PModule(m.poset_ptr(), m.dims(), maps, p);
}

DecomposableModule random_interval_decomposable(Rng& rng, PosetPtr P, int max_summands, std::uint32_t p) {
    std::vector<Subposet> all = enumerate_intervals(*P);
    if (all.empty()) throw InputError("poset has no intervals");
    std::uniform_int_distribution<int> count(1, std::max(1, max_summands));
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    DecomposableModule out;
    out.module = PModule::zero(P, p);
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
        const auto& s = all[pick(rng)].members;
        out.summands.push_back(s);
        out.module = direct_sum(out.module, interval_module(P, s, p));
    }
    std::sort(out.summands.begin(), out.summands.end());
    out.module = disguise(rng, out.module);
    return out;
}

PModule random_chain_module(Rng& rng, PosetPtr chain, int max_dim, std::uint32_t p) {
    std::uniform_int_distribution<int> dim(0, max_dim);
    std::vector<int> dims(chain->size());
    for (int& d : dims) d = dim(rng);
    std::vector<Matrix> maps;
    for (auto [a, b] : chain->cover_edges()) maps.push_back(random_matrix(rng, dims[b], dims[a], p));
    return PModule(chain, dims, maps, p);
}

std::vector<Point> random_walk(Rng& rng, const GridInfo& window, int points) {
    if (points < 1) throw InputError("walk needs at least one point");
    std::uniform_int_distribution<int> px(0, window.width - 1), py(0, window.height - 1), dir(0, 3);
    std::vector<Point> out{{window.origin.x + px(rng), window.origin.y + py(rng)}};
    const Point steps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    if (window.width == 1 && window.height == 1) return out;
    while (static_cast<int>(out.size()) < points) {
        Point s = steps[dir(rng)];
        Point q{out.back().x + s.x, out.back().y + s.y};
        if (q.x < window.origin.x || q.y < window.origin.y || q.x >= window.origin.x + window.width ||
            q.y >= window.origin.y + window.height)
            continue;
        out.push_back(q);
    }
    return out;
}

}  // namespace grk

#include "grk/mobius.hpp"

#include "grk/errors.hpp"

#include <algorithm>

namespace grk {

IncidenceElement::IncidenceElement(PosetPtr P) : poset_(std::move(P)) {
    const int n = poset_->size();
    ups_.assign(n, {});
    vals_.assign(n, {});
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q)
            if (poset_->leq(p, q)) ups_[p].push_back(q);
        vals_[p].assign(ups_[p].size(), 0);
    }
}

long long IncidenceElement::operator()(int p, int q) const {
    const auto& u = ups_[p];
    auto it = std::lower_bound(u.begin(), u.end(), q);
    if (it == u.end() || *it != q) return 0;
    return vals_[p][it - u.begin()];
}

void IncidenceElement::set(int p, int q, long long v) {
    auto& u = ups_[p];
    auto it = std::lower_bound(u.begin(), u.end(), q);
    if (it == u.end() || *it != q)
        throw InputError("incidence value on incomparable pair " + std::to_string(p) + ", " + std::to_string(q));
    vals_[p][it - u.begin()] = v;
}

bool IncidenceElement::operator==(const IncidenceElement& o) const {
    return *poset_ == *o.poset_ && vals_ == o.vals_;
}

IncidenceElement delta(PosetPtr P) {
    IncidenceElement d(P);
    for (int p = 0; p < P->size(); ++p) d.set(p, p, 1);
    return d;
}

IncidenceElement zeta(PosetPtr P) {
    IncidenceElement z(P);
    for (int p = 0; p < P->size(); ++p)
        for (int q : z.ups(p)) z.set(p, q, 1);
    return z;
}

IncidenceElement mobius_function(PosetPtr P) {
    IncidenceElement mu(P);
    const auto& order = P->linear_extension();
    std::vector<int> pos(P->size());
    for (int i = 0; i < P->size(); ++i) pos[order[i]] = i;
    for (int p = 0; p < P->size(); ++p) {
        std::vector<int> up = mu.ups(p);
        std::sort(up.begin(), up.end(), [&](int a, int b) { return pos[a] < pos[b]; });
        std::vector<long long> val(P->size(), 0);
        for (int q : up) {
            if (q == p) {
                val[q] = 1;
            } else {
                long long s = 0;
                for (int r : up) {
                    if (r == q) break;
                    if (P->leq(r, q)) s += val[r];
                }
                val[q] = -s;
            }
            mu.set(p, q, val[q]);
        }
    }
    return mu;
}

IncidenceElement multiply(const IncidenceElement& a, const IncidenceElement& b) {
    if (!(a.poset() == b.poset())) throw InputError("incidence elements over different posets");
    IncidenceElement c(a.poset_ptr());
    const int n = a.poset().size();
    for (int p = 0; p < n; ++p) {
        std::vector<long long> acc(n, 0);
        const auto& ru = a.ups(p);
        const auto& rv = a.values_at(p);
        for (std::size_t i = 0; i < ru.size(); ++i) {
            if (rv[i] == 0) continue;
            const auto& qu = b.ups(ru[i]);
            const auto& qv = b.values_at(ru[i]);
            for (std::size_t j = 0; j < qu.size(); ++j) acc[qu[j]] += rv[i] * qv[j];
        }
        for (int q : c.ups(p)) c.set(p, q, acc[q]);
    }
    return c;
}

PosetFunction convolve(const PosetFunction& f, const IncidenceElement& a) {
    const int n = a.poset().size();
    if (static_cast<int>(f.size()) != n) throw InputError("function and incidence element sizes differ");
    PosetFunction out(n, 0);
    for (int p = 0; p < n; ++p) {
        if (f[p] == 0) continue;
        const auto& u = a.ups(p);
        const auto& v = a.values_at(p);
        for (std::size_t i = 0; i < u.size(); ++i) out[u[i]] += f[p] * v[i];
    }
    return out;
}

PosetFunction mobius_invert(const FinitePoset& P, const PosetFunction& g) {
    const int n = P.size();
    if (static_cast<int>(g.size()) != n) throw InputError("function size differs from the poset");
    PosetFunction f(n, 0);
    for (int q : P.linear_extension()) {
        long long s = g[q];
        for (int p = 0; p < n; ++p)
            if (p != q && f[p] != 0 && P.leq(p, q)) s -= f[p];
        f[q] = s;
    }
    return f;
}

bool is_convolvable(const FinitePoset& P, const PosetFunction& f) { return static_cast<int>(f.size()) == P.size(); }

}  // namespace grk

#pragma once

#include "grk/poset.hpp"

#include <vector>

namespace grk {

// Integer-valued function on the pairs p <= q of a finite poset.
class IncidenceElement {
public:
    IncidenceElement() = default;
    explicit IncidenceElement(PosetPtr P);

    const FinitePoset& poset() const { return *poset_; }
    const PosetPtr& poset_ptr() const { return poset_; }

    // Zero on incomparable pairs; setting such a pair throws.
    long long operator()(int p, int q) const;
    void set(int p, int q, long long v);

    // Elements q >= p in ascending id order, aligned with values_at(p).
    const std::vector<int>& ups(int p) const { return ups_[p]; }
    const std::vector<long long>& values_at(int p) const { return vals_[p]; }

    bool operator==(const IncidenceElement& o) const;

private:
    PosetPtr poset_;
    std::vector<std::vector<int>> ups_;
    std::vector<std::vector<long long>> vals_;
};

using PosetFunction = std::vector<long long>;

IncidenceElement delta(PosetPtr P);
IncidenceElement zeta(PosetPtr P);
IncidenceElement mobius_function(PosetPtr P);

// (a . b)(p, q) = sum over p <= r <= q of a(p, r) b(r, q).
IncidenceElement multiply(const IncidenceElement& a, const IncidenceElement& b);

// (f * a)(q) = sum over p <= q of f(p) a(p, q).
PosetFunction convolve(const PosetFunction& f, const IncidenceElement& a);

// g * mu, computed by solving g = f * zeta along a linear extension.
PosetFunction mobius_invert(const FinitePoset& P, const PosetFunction& g);

// Every principal down-set meets the support of f in finitely many points; true on finite posets.
bool is_convolvable(const FinitePoset& P, const PosetFunction& f);

}  // namespace grk

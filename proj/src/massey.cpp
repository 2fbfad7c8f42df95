#include "rht/massey.hpp"

#include "rht/errors.hpp"

#include <algorithm>

namespace rht {

namespace {

struct Setup {
    int p, q, r, t;
    Element ab, bc;
    bool defined = false;
};

Setup massey_setup(const Cohomology& H, const CohomClass& a, const CohomClass& b,
                   const CohomClass& c) {
    Setup s{a.degree, b.degree, c.degree, a.degree + b.degree + c.degree - 1, Element(H.dga().algebra_ptr()),
            Element(H.dga().algebra_ptr())};
    if (s.t > H.dga().degree_cap())
        throw Error("CapExceeded", "Massey target degree exceeds the cap");
    s.ab = a.representative * b.representative;
    s.bc = b.representative * c.representative;
    s.defined = H.is_exact(s.ab) && H.is_exact(s.bc);
    return s;
}

MasseyVerdict finish(const Cohomology& H, const CohomClass& a, const CohomClass& c, const Setup& s,
                     const Element& g, const Element& h) {
    MasseyVerdict v;
    v.defined = true;
    v.degree = s.t;
    v.g = g;
    v.h = h;
    int sign = (s.p - 1) % 2 == 0 ? 1 : -1;
    Element k = g * c.representative + a.representative * h * Rational(sign);
    if (!H.dga().differential(k).is_zero())
        throw Error("Internal", "Massey representative is not closed");
    v.representative = k;

    const auto& sp = H.space(s.t);
    std::vector<QVector> prods;
    for (const auto& w : H.class_basis(s.q + s.r - 1)) {
        Element u = a.representative * w.representative;
        prods.push_back(sp.coboundaries.reduce(u.coords(s.t)));
    }
    for (const auto& w : H.class_basis(s.p + s.q - 1)) {
        Element u = c.representative * w.representative;
        prods.push_back(sp.coboundaries.reduce(u.coords(s.t)));
    }
    v.indeterminacy = Subspace::span(sp.cocycles.ambient_dim(), prods);

    QVector canon = sp.coboundaries.reduce(k.coords(s.t));
    QVector residue = v.indeterminacy.reduce(canon);
    v.nontrivial = std::any_of(residue.begin(), residue.end(),
                               [](const Rational& x) { return x != 0; });
    return v;
}

} // namespace

MasseyVerdict triple_massey(const Cohomology& H, const CohomClass& a, const CohomClass& b,
                            const CohomClass& c) {
    Setup s = massey_setup(H, a, b, c);
    if (!s.defined) {
        MasseyVerdict v;
        v.degree = s.t;
        return v;
    }
    auto g = solve_any(H.dga().d_matrix(s.p + s.q - 1), s.ab.coords(s.p + s.q));
    auto h = solve_any(H.dga().d_matrix(s.q + s.r - 1), s.bc.coords(s.q + s.r));
    if (!g || !h)
        throw Error("Internal", "primitive solve failed for an exact element");
    return finish(H, a, c, s,
                  Element::from_coords(H.dga().algebra_ptr(), s.p + s.q - 1, *g),
                  Element::from_coords(H.dga().algebra_ptr(), s.q + s.r - 1, *h));
}

MasseyVerdict triple_massey_with_primitives(const Cohomology& H, const CohomClass& a,
                                            const CohomClass& b, const CohomClass& c,
                                            const Element& g, const Element& h) {
    Setup s = massey_setup(H, a, b, c);
    if (!s.defined)
        throw Error("NotClosed", "the product is not defined; primitives cannot exist");
    if (!(H.dga().differential(g) == s.ab) || !(H.dga().differential(h) == s.bc))
        throw Error("NotClosed", "supplied primitives do not bound the cup products");
    return finish(H, a, c, s, g, h);
}

std::vector<ScanHit> formality_scan(const Cohomology& H, int max_degree) {
    if (max_degree > H.dga().degree_cap())
        throw Error("CapExceeded", "scan degree exceeds the cap");
    std::vector<CohomClass> classes;
    for (int q = 1; q <= max_degree; ++q)
        for (const auto& cls : H.class_basis(q)) classes.push_back(cls);
    std::vector<ScanHit> hits;
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = 0; j < classes.size(); ++j)
            for (std::size_t k = 0; k < classes.size(); ++k) {
                const auto& a = classes[i];
                const auto& b = classes[j];
                const auto& c = classes[k];
                if (a.degree + b.degree + c.degree - 1 > max_degree) continue;
                Setup s = massey_setup(H, a, b, c);
                if (!s.defined) continue;
                MasseyVerdict v = triple_massey(H, a, b, c);
                if (v.nontrivial)
                    hits.push_back(ScanHit{i, j, k, a.degree, b.degree, c.degree, v});
            }
    return hits;
}

} // namespace rht

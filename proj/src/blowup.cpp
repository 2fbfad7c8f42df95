#include "rht/blowup.hpp"

#include "rht/errors.hpp"
#include "rht/models.hpp"

namespace rht {

ProjectivizationModel projectivize(DgaPtr base, int k, std::vector<Element> chern,
                                   std::optional<int> cap) {
    if (k < 2)
        throw Error("BadCodimension", "projectivization needs fiber rank >= 2");
    if (static_cast<int>(chern.size()) > k)
        throw Error("BadDimension", "more Chern classes than the fiber rank");
    const auto& balg = base->algebra();
    if (balg.index_of("x") || balg.index_of("y"))
        throw Error("BadGenerator", "base already uses the fiber generator names x, y");

    for (std::size_t j = 0; j < chern.size(); ++j) {
        const Element& c = chern[j];
        if (c.is_zero()) continue;
        if (!c.is_homogeneous(2 * static_cast<int>(j) + 2))
            throw Error("ChernWrongDegree", "c_" + std::to_string(j + 1) + " must have degree " +
                                                std::to_string(2 * (j + 1)));
        if (!base->differential(reexpress(c, base->algebra_ptr())).is_zero())
            throw Error("ChernNotClosed", "c_" + std::to_string(j + 1) + " is not closed");
    }

    std::vector<GeneratorSpec> gens = balg.generators();
    gens.push_back({"x", 2, std::nullopt});
    gens.push_back({"y", 2 * k - 1, std::nullopt});
    auto talg = GradedAlgebra::make(std::move(gens));
    std::size_t xi = *talg->index_of("x");
    std::size_t yi = *talg->index_of("y");

    std::vector<Element> d;
    for (std::size_t i = 0; i < balg.generator_count(); ++i)
        d.push_back(reexpress(base->d_of_generator(i), talg));
    d.push_back(Element(talg)); // d x = 0
    Element x = Element::generator(talg, xi);
    Element dy = x.pow(k);
    for (std::size_t j = 0; j < chern.size(); ++j) {
        if (chern[j].is_zero()) continue;
        dy += reexpress(chern[j], talg) * x.pow(k - 1 - static_cast<int>(j));
    }
    d.push_back(dy);

    int effective_cap = cap ? *cap : base->degree_cap() + 2 * k - 1;
    ProjectivizationModel model;
    model.base = std::move(base);
    model.fiber_rank = k;
    model.chern = std::move(chern);
    model.chern.resize(static_cast<std::size_t>(k), Element(model.base->algebra_ptr()));
    model.total = DGA::make(talg, std::move(d), effective_cap);
    model.x_index = xi;
    model.y_index = yi;
    return model;
}

BlowupBettiProfile blowup_betti(int N, const std::vector<int>& y_betti, int k) {
    if (y_betti.empty())
        throw Error("BadDimension", "the center needs a Betti profile");
    int dim_y = static_cast<int>(y_betti.size()) - 1;
    if (dim_y % 2 != 0)
        throw Error("BadCodimension", "the center of a complex blow-up has even dimension");
    if (k != N - dim_y / 2)
        throw Error("BadCodimension", "codimension must equal N - dim(Y)/2");
    if (k < 2)
        throw Error("BadCodimension", "blow-up centers have codimension >= 2");

    BlowupBettiProfile p;
    p.N = N;
    p.k = k;
    p.y_betti = y_betti;
    auto b_y = [&](int i) {
        return (i >= 0 && i < static_cast<int>(y_betti.size())) ? y_betti[i] : 0;
    };
    long chi = 0;
    for (int i = 0; i <= 2 * N; ++i) {
        int b = (i % 2 == 0) ? 1 : 0; // CP^N
        for (int j = 1; j <= k - 1; ++j) b += b_y(i - 2 * j);
        p.betti.push_back(b);
        chi += (i % 2 == 0) ? b : -b;
    }
    p.euler = chi;
    p.duality = true;
    for (int i = 0; i <= 2 * N; ++i)
        if (p.betti[i] != p.betti[2 * N - i]) p.duality = false;
    return p;
}

namespace {

// <[x x2], [mid], [x x2]> on the total model; mid already lives there.
MasseyVerdict lemma_product(const ProjectivizationModel& pm, const Element& mid_total) {
    auto total = pm.total;
    Cohomology H(total);
    auto talg = total->algebra_ptr();
    Element x = Element::generator(talg, pm.x_index);
    Element x2 = Element::generator(talg, *talg->index_of(
        pm.base->algebra().generator(1).name));
    CohomClass u2 = H.class_of(x * x2);
    CohomClass mid = H.class_of(mid_total);
    return triple_massey(H, u2, mid, u2);
}

} // namespace

MasseyVerdict lemma1_check(int m, int k, const std::vector<Element>& chern) {
    if (m < 2)
        throw Error("BadDimension", "the base family starts at m = 2");
    if (k < 2)
        throw Error("BadCodimension", "fiber rank must be at least 2");
    auto base = chevalley_eilenberg(vn(2 * m));
    std::vector<Element> cs;
    for (const auto& c : chern) cs.push_back(reexpress(c, base->algebra_ptr()));
    auto pm = projectivize(base, k, std::move(cs));
    // middle class [x x1]
    auto talg = pm.total->algebra_ptr();
    Element x = Element::generator(talg, pm.x_index);
    Element x1 = Element::generator(talg, *talg->index_of(base->algebra().generator(0).name));
    return lemma_product(pm, x * x1);
}

MasseyVerdict lemma2_check(Lemma2Target target, int k, const std::vector<Element>& chern) {
    if (k < 2)
        throw Error("BadCodimension", "fiber rank must be at least 2");
    DgaPtr base;
    Rational A;
    if (target == Lemma2Target::kodaira_thurston) {
        base = kodaira_thurston();
        A = 1;
    } else {
        base = chevalley_eilenberg(vn(4));
        A = 3;
    }
    std::vector<Element> cs;
    for (const auto& c : chern) cs.push_back(reexpress(c, base->algebra_ptr()));
    auto pm = projectivize(base, k, std::move(cs));
    // the base symplectic class A x1 x4 + x2 x3
    auto alg = base->algebra_ptr();
    auto t14 = alg->multiply(Monomial::generator(0), Monomial::generator(3));
    auto t23 = alg->multiply(Monomial::generator(1), Monomial::generator(2));
    Element v = Element::monomial(alg, t14->first, A * t14->second) +
                Element::monomial(alg, t23->first, Rational(t23->second));
    return lemma_product(pm, reexpress(v, pm.total->algebra_ptr()));
}

bool massey_survives_connected_sum(int q, int manifold_dim) {
    if (q < 0 || manifold_dim < 0)
        throw Error("BadDimension", "degrees are nonnegative");
    return q <= manifold_dim - 3;
}

} // namespace rht

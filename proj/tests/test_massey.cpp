#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rht/errors.hpp"
#include "rht/massey.hpp"
#include "rht/models.hpp"

#include <random>

using namespace rht;

namespace {

Element random_cocycle(std::mt19937& rng, const Cohomology& H, int degree) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    const auto& Z = H.space(degree).cocycles;
    QVector v(Z.ambient_dim(), Rational(0));
    for (const auto& b : Z.basis()) {
        Rational c(coeff(rng));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
    }
    return Element::from_coords(H.dga_ptr()->algebra_ptr(), degree, v);
}

} // namespace

TEST_CASE("the classical Heisenberg triple product") {
    auto model = chevalley_eilenberg(heisenberg());
    auto alg = model->algebra_ptr();
    Cohomology H(model);
    auto x1 = H.class_of(Element::generator(alg, 0));
    auto x2 = H.class_of(Element::generator(alg, 1));
    auto v = triple_massey(H, x1, x1, x2);
    CHECK(v.defined);
    CHECK(v.degree == 2);
    CHECK(v.nontrivial);
    REQUIRE(v.representative.has_value());
    CHECK(*v.representative == Element::generator(alg, 0) * Element::generator(alg, 2));
    CHECK(v.indeterminacy.dim() == 0);
    CHECK(v.g->is_zero());
    CHECK(*v.h == Element::generator(alg, 2));
}

TEST_CASE("the filiform square triple product") {
    for (int m = 2; m <= 4; ++m) {
        auto model = chevalley_eilenberg(vn(2 * m));
        auto alg = model->algebra_ptr();
        Cohomology H(model);
        auto x1 = H.class_of(Element::generator(alg, 0));
        auto x2 = H.class_of(Element::generator(alg, 1));
        auto v = triple_massey(H, x2, x1, x2);
        CHECK(v.defined);
        CHECK(v.nontrivial);
        Element expect =
            Element::generator(alg, 1) * Element::generator(alg, 2) * Rational(2);
        CHECK(*v.representative == expect); // 2 x2 x3
    }
}

TEST_CASE("verdicts are stable under primitive perturbation") {
    std::mt19937 rng(41);
    auto model = chevalley_eilenberg(vn(4));
    auto alg = model->algebra_ptr();
    Cohomology H(model);
    auto x1 = H.class_of(Element::generator(alg, 0));
    auto x2 = H.class_of(Element::generator(alg, 1));
    auto base = triple_massey(H, x2, x1, x2);
    REQUIRE(base.defined);
    for (int trial = 0; trial < 20; ++trial) {
        // any cocycle added to a primitive leaves d(primitive) unchanged
        Element g = *base.g + random_cocycle(rng, H, 1);
        Element h = *base.h + random_cocycle(rng, H, 1);
        auto v = triple_massey_with_primitives(H, x2, x1, x2, g, h);
        CHECK(v.defined);
        CHECK(v.nontrivial == base.nontrivial);
        CHECK(v.indeterminacy == base.indeterminacy);
    }
}

TEST_CASE("invalid primitives are rejected") {
    auto model = chevalley_eilenberg(heisenberg());
    auto alg = model->algebra_ptr();
    Cohomology H(model);
    auto x1 = H.class_of(Element::generator(alg, 0));
    auto x2 = H.class_of(Element::generator(alg, 1));
    // h = 0 does not bound x1 x2
    CHECK_THROWS_AS(
        triple_massey_with_primitives(H, x1, x1, x2, Element(alg), Element(alg)), Error);
}

TEST_CASE("undefined when a cup product survives") {
    auto model = cpn(2);
    auto alg = model->algebra_ptr();
    Cohomology H(model);
    auto x = H.class_of(Element::generator(alg, 0));
    auto v = triple_massey(H, x, x, x);
    CHECK(!v.defined);
    CHECK(!v.nontrivial);
    CHECK(!v.representative.has_value());
}

TEST_CASE("scaling moves the representative but not the verdict") {
    auto model = chevalley_eilenberg(heisenberg());
    auto alg = model->algebra_ptr();
    Cohomology H(model);
    auto x1 = H.class_of(Element::generator(alg, 0));
    auto x2 = H.class_of(Element::generator(alg, 1));
    auto x1_scaled = H.class_of(Element::generator(alg, 0) * Rational(3));
    auto v1 = triple_massey(H, x1, x1, x2);
    auto v3 = triple_massey(H, x1_scaled, x1, x2);
    CHECK(v3.nontrivial == v1.nontrivial);
    CHECK(*v3.representative == *v1.representative * Rational(3));
}

TEST_CASE("target degree beyond the cap is refused") {
    auto model = chevalley_eilenberg(heisenberg()); // cap 3
    auto alg = model->algebra_ptr();
    Cohomology H(model);
    auto top = H.class_of(Element::generator(alg, 0) * Element::generator(alg, 2));
    CHECK_THROWS_AS(triple_massey(H, top, top, top), Error);
}

TEST_CASE("formality scan finds the Heisenberg products and nothing on spheres") {
    auto heis = chevalley_eilenberg(heisenberg());
    Cohomology H(heis);
    auto hits = formality_scan(H, 3);
    CHECK(hits.size() == 6);
    for (const auto& h : hits) CHECK(h.verdict.nontrivial);

    Cohomology P(cpn(2));
    CHECK(formality_scan(P, 6).empty());

    Cohomology T(abelian_model(3));
    CHECK(formality_scan(T, 3).empty());
}

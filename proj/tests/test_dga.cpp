#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rht/dga.hpp"
#include "rht/errors.hpp"
#include "rht/models.hpp"

#include <random>

using namespace rht;

namespace {

// random homogeneous element of the given degree
Element random_slice_element(std::mt19937& rng, const DGA& d, int degree) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    auto basis = d.algebra().degree_basis(degree);
    Element out(d.algebra_ptr());
    for (const auto& m : basis)
        out += Element::monomial(d.algebra_ptr(), m, Rational(coeff(rng)));
    return out;
}

} // namespace

TEST_CASE("the differential obeys the Leibniz rule") {
    std::mt19937 rng(2024);
    for (const auto& model : {kodaira_thurston(), chevalley_eilenberg(vn(5)), cpn(2)}) {
        for (int trial = 0; trial < 100; ++trial) {
            int cap = model->degree_cap();
            int p = 1 + trial % std::max(1, cap - 2);
            int q = 1 + (trial / 3) % std::max(1, cap - p - 1);
            Element u = random_slice_element(rng, *model, p);
            Element v = random_slice_element(rng, *model, q);
            Element lhs = model->differential(u * v);
            int sign = p % 2 == 0 ? 1 : -1;
            Element rhs = model->differential(u) * v + u * model->differential(v) * Rational(sign);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("d squares to zero on every slice") {
    for (const auto& model : {kodaira_thurston(), chevalley_eilenberg(vn(6)), cpn(3)}) {
        for (int q = 0; q < model->degree_cap(); ++q) {
            const QMatrix& d1 = model->d_matrix(q);
            const QMatrix& d2 = model->d_matrix(q + 1);
            QMatrix z = d2.multiply(d1);
            for (std::size_t i = 0; i < z.rows(); ++i)
                for (std::size_t j = 0; j < z.cols(); ++j) CHECK(z(i, j) == 0);
        }
    }
}

TEST_CASE("a non-square differential is rejected at construction") {
    auto alg = GradedAlgebra::make({{"a", 1, std::nullopt}, {"b", 1, std::nullopt},
                                    {"c", 1, std::nullopt}, {"e", 1, std::nullopt}});
    Element a = Element::generator(alg, 0);
    Element b = Element::generator(alg, 1);
    Element c = Element::generator(alg, 2);
    Element e = Element::generator(alg, 3);
    Element zero(alg);
    // d c = a b, d e = a c: every d(d g) term repeats an odd factor, so it holds
    CHECK(DGA::make(alg, {zero, zero, a * b, a * c})->validate().valid);
    // a cyclic table breaks it: d a = c e, d c = a b, d e = a c
    // gives d(d a) = (a b) e - c (a c) = a b e != 0
    CHECK_THROWS_AS(DGA::make(alg, {c * e, zero, a * b, a * c}), Error);
    auto raw = DGA::make_unchecked(alg, {c * e, zero, a * b, a * c});
    auto report = raw->validate();
    CHECK(!report.valid);
    CHECK(report.failing_generator == "a");
}

TEST_CASE("validation separates squaring from minimality") {
    auto alg = GradedAlgebra::make({{"a", 1, std::nullopt}, {"b", 2, std::nullopt}});
    Element zero(alg);
    // d a = 0, d b = 0: valid, minimal (vacuously), unweighted
    auto free_model = DGA::make(alg, {zero, zero}, 4);
    auto v1 = free_model->validate();
    CHECK(v1.valid);
    CHECK(v1.minimal);
    CHECK(!v1.weighted);

    // d a = b is a linear (non-decomposable) differential: valid but not minimal
    auto contractible = DGA::make(alg, {Element::generator(alg, 1), zero}, 4);
    auto v2 = contractible->validate();
    CHECK(v2.valid);
    CHECK(!v2.minimal);
}

TEST_CASE("weights are tracked when every generator carries one") {
    auto model = chevalley_eilenberg(vn(5));
    auto v = model->validate();
    CHECK(v.valid);
    CHECK(v.minimal);
    CHECK(v.weighted);
    CHECK(v.weight_preserving); // d x_k lands in weight k
}

TEST_CASE("degree cap is enforced and the boundary slice works") {
    auto model = kodaira_thurston(); // cap 4
    CHECK(model->degree_cap() == 4);
    CHECK_NOTHROW(model->d_matrix(4)); // maps into the empty slice 5
    CHECK(model->d_matrix(4).rows() == 0);
    CHECK_THROWS_AS(model->d_matrix(5), Error);
    CHECK_THROWS_AS(model->d_matrix(-1), Error);
    CHECK_THROWS_AS(model->basis(5), Error);

    auto lifted = model->with_cap(7);
    CHECK(lifted->degree_cap() == 7);
    CHECK_NOTHROW(lifted->d_matrix(5));
    CHECK(lifted->equals(*model) == false); // caps differ
    CHECK(lifted->with_cap(4)->equals(*model));
}

TEST_CASE("even generators require an explicit cap") {
    auto alg = GradedAlgebra::make({{"x", 2, std::nullopt}});
    CHECK_THROWS_AS(DGA::make(alg, {Element(alg)}), Error);
    CHECK_NOTHROW(DGA::make(alg, {Element(alg)}, 6));
}

TEST_CASE("differential by matrix equals differential by Leibniz") {
    std::mt19937 rng(99);
    auto model = chevalley_eilenberg(vn(6));
    for (int q = 1; q < model->degree_cap(); ++q) {
        Element u = random_slice_element(rng, *model, q);
        Element du = model->differential(u);
        QVector via_matrix = model->d_matrix(q).apply(u.coords(q));
        CHECK(du == Element::from_coords(model->algebra_ptr(), q + 1, via_matrix));
    }
}

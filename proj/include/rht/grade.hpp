#pragma once

#include "rht/qlin.hpp"

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rht {

struct GeneratorSpec {
    std::string name;
    int degree = 1;
    std::optional<int> weight;
    bool operator==(const GeneratorSpec&) const = default;
};

class GradedAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

// Product of generator powers, factors sorted by generator index.
// Exponents of odd-degree generators never exceed 1.
class Monomial {
public:
    Monomial() = default; // unit
    static Monomial generator(std::size_t index) { return Monomial({{index, 1}}); }
    // factors need not be sorted or merged; zero exponents are dropped
    static Monomial from_factors(std::vector<std::pair<std::size_t, int>> factors);

    const std::vector<std::pair<std::size_t, int>>& factors() const { return f_; }
    bool is_unit() const { return f_.empty(); }
    int exponent(std::size_t index) const;
    int word_length() const; // total number of generator factors, with multiplicity
    int degree(const GradedAlgebra& a) const;
    std::optional<long> weight(const GradedAlgebra& a) const; // nullopt if any factor unweighted

    // Canonical term order: at the smallest generator index where the
    // exponents differ, the monomial with the larger exponent comes first.
    std::strong_ordering operator<=>(const Monomial& other) const;
    bool operator==(const Monomial&) const = default;

private:
    explicit Monomial(std::vector<std::pair<std::size_t, int>> f) : f_(std::move(f)) {}
    std::vector<std::pair<std::size_t, int>> f_;
};

// Free graded-commutative algebra over Q on named generators of degree >= 1.
class GradedAlgebra {
public:
    static AlgebraPtr make(std::vector<GeneratorSpec> gens);

    std::size_t generator_count() const { return gens_.size(); }
    const GeneratorSpec& generator(std::size_t i) const { return gens_[i]; }
    const std::vector<GeneratorSpec>& generators() const { return gens_; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    bool same_generators(const GradedAlgebra& other) const { return gens_ == other.gens_; }
    bool has_even_generators() const { return has_even_; }
    // Top degree sum(deg g) over odd generators; the default degree cap for
    // purely odd (exterior) algebras.
    int odd_degree_sum() const { return odd_degree_sum_; }

    // All monomials of total degree exactly d, in canonical term order.
    // Finite for every d since all generators have degree >= 1.
    std::vector<Monomial> degree_basis(int d) const;

    // Graded-commutative product with Koszul sign; nullopt when an
    // odd-degree generator squares.
    std::optional<std::pair<Monomial, int>> multiply(const Monomial& a, const Monomial& b) const;

private:
    explicit GradedAlgebra(std::vector<GeneratorSpec> gens);
    std::vector<GeneratorSpec> gens_;
    std::map<std::string, std::size_t, std::less<>> index_;
    bool has_even_ = false;
    int odd_degree_sum_ = 0;
};

class Element {
public:
    explicit Element(AlgebraPtr alg) : alg_(std::move(alg)) {}
    static Element unit(AlgebraPtr alg) { return monomial(std::move(alg), Monomial(), 1); }
    static Element generator(AlgebraPtr alg, std::size_t index);
    static Element monomial(AlgebraPtr alg, Monomial m, Rational c);

    const AlgebraPtr& algebra() const { return alg_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    std::optional<int> homogeneous_degree() const; // nullopt when zero or mixed
    bool is_homogeneous(int d) const;              // the zero element is homogeneous of every degree

    Element operator-() const;
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Element& o) const; // MismatchedAlgebra when generator sets differ
    Element operator*(const Rational& c) const;
    friend Element operator*(const Rational& c, const Element& e) { return e * c; }
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element pow(int e) const;

    bool operator==(const Element& o) const { return terms_ == o.terms_; }

    // Coordinates in degree_basis(degree); NotHomogeneous unless is_homogeneous(degree).
    QVector coords(int degree) const;
    static Element from_coords(AlgebraPtr alg, int degree, const QVector& v);

    // Canonical text form, re-parseable by parse_element.
    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& c);
    AlgebraPtr alg_;
    std::map<Monomial, Rational> terms_;
};

// Rewrite an element of a structurally compatible algebra in terms of the
// target algebra's generators, matched by name. Error("UnknownGenerator")
// when a generator is missing from the target.
Element reexpress(const Element& e, AlgebraPtr target);

} // namespace rht

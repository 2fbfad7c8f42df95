#include "rht/grade.hpp"

#include "rht/errors.hpp"

#include <algorithm>
#include <sstream>

namespace rht {

Monomial Monomial::from_factors(std::vector<std::pair<std::size_t, int>> factors) {
    std::sort(factors.begin(), factors.end());
    std::vector<std::pair<std::size_t, int>> merged;
    for (auto& [idx, e] : factors) {
        if (e < 0) throw Error("BadExponent", "negative exponent");
        if (e == 0) continue;
        if (!merged.empty() && merged.back().first == idx)
            merged.back().second += e;
        else
            merged.emplace_back(idx, e);
    }
    return Monomial(std::move(merged));
}

int Monomial::exponent(std::size_t index) const {
    for (const auto& [idx, e] : f_)
        if (idx == index) return e;
    return 0;
}

int Monomial::word_length() const {
    int n = 0;
    for (const auto& [idx, e] : f_) n += e;
    return n;
}

int Monomial::degree(const GradedAlgebra& a) const {
    int d = 0;
    for (const auto& [idx, e] : f_) d += a.generator(idx).degree * e;
    return d;
}

std::optional<long> Monomial::weight(const GradedAlgebra& a) const {
    long w = 0;
    for (const auto& [idx, e] : f_) {
        const auto& g = a.generator(idx);
        if (!g.weight) return std::nullopt;
        w += static_cast<long>(*g.weight) * e;
    }
    return w;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
    std::size_t i = 0, j = 0;
    while (i < f_.size() || j < other.f_.size()) {
        std::size_t ia = i < f_.size() ? f_[i].first : SIZE_MAX;
        std::size_t ib = j < other.f_.size() ? other.f_[j].first : SIZE_MAX;
        if (ia < ib) return std::strong_ordering::less;    // we have a factor earlier
        if (ib < ia) return std::strong_ordering::greater; // they do
        if (f_[i].second != other.f_[j].second)
            return f_[i].second > other.f_[j].second ? std::strong_ordering::less
                                                     : std::strong_ordering::greater;
        ++i, ++j;
    }
    return std::strong_ordering::equal;
}

GradedAlgebra::GradedAlgebra(std::vector<GeneratorSpec> gens) : gens_(std::move(gens)) {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const auto& g = gens_[i];
        if (g.name.empty())
            throw Error("BadGenerator", "generator with empty name");
        if (g.degree < 1)
            throw Error("BadGenerator", "generator '" + g.name + "' has degree < 1");
        if (!index_.emplace(g.name, i).second)
            throw Error("BadGenerator", "duplicate generator name '" + g.name + "'");
        if (g.degree % 2 == 0)
            has_even_ = true;
        else
            odd_degree_sum_ += g.degree;
    }
}

AlgebraPtr GradedAlgebra::make(std::vector<GeneratorSpec> gens) {
    return AlgebraPtr(new GradedAlgebra(std::move(gens)));
}

std::optional<std::size_t> GradedAlgebra::index_of(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<Monomial> GradedAlgebra::degree_basis(int d) const {
    if (d < 0) return {};
    std::vector<Monomial> out;
    std::vector<std::pair<std::size_t, int>> stack;
    // Enumerate exponents generator by generator, largest exponent first at
    // each index, which yields the canonical term order directly.
    auto rec = [&](auto&& self, std::size_t i, int rem) -> void {
        if (rem == 0) {
            // remaining generators all get exponent 0
            out.push_back(Monomial::from_factors(stack));
            return;
        }
        if (i == gens_.size()) return;
        int deg = gens_[i].degree;
        int emax = rem / deg;
        if (deg % 2 != 0) emax = std::min(emax, 1);
        for (int e = emax; e >= 0; --e) {
            if (e > 0) stack.emplace_back(i, e);
            self(self, i + 1, rem - e * deg);
            if (e > 0) stack.pop_back();
        }
    };
    rec(rec, 0, d);
    return out;
}

std::optional<std::pair<Monomial, int>> GradedAlgebra::multiply(const Monomial& a,
                                                                const Monomial& b) const {
    // Koszul sign: only odd-degree factors anticommute; count inversions
    // between the two sorted odd-factor lists. A shared odd factor squares
    // to zero.
    std::vector<std::size_t> odd_a, odd_b;
    for (const auto& [idx, e] : a.factors())
        if (gens_[idx].degree % 2 != 0) odd_a.push_back(idx);
    for (const auto& [idx, e] : b.factors())
        if (gens_[idx].degree % 2 != 0) odd_b.push_back(idx);
    long inversions = 0;
    {
        std::size_t j = 0;
        for (std::size_t bi = 0; bi < odd_b.size(); ++bi) {
            while (j < odd_a.size() && odd_a[j] <= odd_b[bi]) {
                if (odd_a[j] == odd_b[bi]) return std::nullopt;
                ++j;
            }
            inversions += static_cast<long>(odd_a.size() - j);
        }
    }
    std::vector<std::pair<std::size_t, int>> factors = a.factors();
    factors.insert(factors.end(), b.factors().begin(), b.factors().end());
    return std::make_pair(Monomial::from_factors(std::move(factors)),
                          inversions % 2 == 0 ? 1 : -1);
}

Element Element::generator(AlgebraPtr alg, std::size_t index) {
    return monomial(std::move(alg), Monomial::generator(index), 1);
}

Element Element::monomial(AlgebraPtr alg, Monomial m, Rational c) {
    Element e(std::move(alg));
    e.add_term(m, c);
    return e;
}

void Element::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::optional<int> Element::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_.begin()->first.degree(*alg_);
    for (const auto& [m, c] : terms_)
        if (m.degree(*alg_) != d) return std::nullopt;
    return d;
}

bool Element::is_homogeneous(int d) const {
    for (const auto& [m, c] : terms_)
        if (m.degree(*alg_) != d) return false;
    return true;
}

Element Element::operator-() const {
    Element out(alg_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Element& Element::operator+=(const Element& o) {
    if (!alg_->same_generators(*o.alg_))
        throw Error("MismatchedAlgebra", "adding elements over different generator sets");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    if (!alg_->same_generators(*o.alg_))
        throw Error("MismatchedAlgebra", "subtracting elements over different generator sets");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Element Element::operator+(const Element& o) const {
    Element out = *this;
    out += o;
    return out;
}

Element Element::operator-(const Element& o) const {
    Element out = *this;
    out -= o;
    return out;
}

Element Element::operator*(const Element& o) const {
    if (!alg_->same_generators(*o.alg_))
        throw Error("MismatchedAlgebra", "multiplying elements over different generator sets");
    Element out(alg_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            auto prod = alg_->multiply(ma, mb);
            if (!prod) continue;
            out.add_term(prod->first, ca * cb * prod->second);
        }
    return out;
}

Element Element::operator*(const Rational& c) const {
    Element out(alg_);
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

Element Element::pow(int e) const {
    if (e < 0) throw Error("BadExponent", "negative power");
    Element out = Element::unit(alg_);
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
}

QVector Element::coords(int degree) const {
    if (!is_homogeneous(degree))
        throw Error("NotHomogeneous", "element is not homogeneous of degree " + std::to_string(degree));
    auto basis = alg_->degree_basis(degree);
    QVector v(basis.size(), Rational(0));
    // both the basis and the term map follow the canonical order
    auto it = terms_.begin();
    for (std::size_t i = 0; i < basis.size() && it != terms_.end(); ++i)
        if (basis[i] == it->first) {
            v[i] = it->second;
            ++it;
        }
    if (it != terms_.end())
        throw Error("Internal", "term missing from degree basis");
    return v;
}

Element Element::from_coords(AlgebraPtr alg, int degree, const QVector& v) {
    auto basis = alg->degree_basis(degree);
    if (basis.size() != v.size())
        throw Error("BadDimension", "coordinate vector does not match degree basis");
    Element out(alg);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) out.terms_.emplace(basis[i], v[i]);
    return out;
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        bool neg = sgn(a) < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) os << '-';
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string mono;
        for (const auto& [idx, e] : m.factors()) {
            if (!mono.empty()) mono += '*';
            mono += alg_->generator(idx).name;
            if (e > 1) mono += '^' + std::to_string(e);
        }
        if (mono.empty()) {
            os << rational_to_string(a);
        } else if (a == 1) {
            os << mono;
        } else {
            os << rational_to_string(a) << '*' << mono;
        }
    }
    return os.str();
}

Element reexpress(const Element& e, AlgebraPtr target) {
    Element out(target);
    for (const auto& [m, c] : e.terms()) {
        std::vector<std::pair<std::size_t, int>> factors;
        for (const auto& [idx, exp] : m.factors()) {
            const auto& g = e.algebra()->generator(idx);
            auto t = target->index_of(g.name);
            if (!t)
                throw Error("UnknownGenerator",
                            "generator '" + g.name + "' does not exist in the target algebra");
            if (target->generator(*t).degree != g.degree)
                throw Error("MismatchedAlgebra",
                            "generator '" + g.name + "' changes degree between algebras");
            factors.emplace_back(*t, exp);
        }
        out += Element::monomial(target, Monomial::from_factors(std::move(factors)), c);
    }
    return out;
}

} // namespace rht

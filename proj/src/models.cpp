#include "rht/models.hpp"

#include "rht/errors.hpp"

#include <algorithm>
#include <cctype>

namespace rht {

LieAlgebra::LieAlgebra(int dim) : dim_(dim) {
    if (dim < 0) throw Error("BadDimension", "negative dimension");
}

void LieAlgebra::add_bracket(int i, int j, int k, const Rational& c) {
    if (i < 1 || j < 1 || k < 1 || i > dim_ || j > dim_ || k > dim_)
        throw Error("BadDimension", "bracket index out of range");
    if (i >= j)
        throw Error("BadDimension", "brackets are stored with i < j");
    if (c == 0) return;
    auto& row = br_[{i, j}];
    auto [it, inserted] = row.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) row.erase(it);
    }
    if (row.empty()) br_.erase({i, j});
}

std::vector<std::pair<int, Rational>> LieAlgebra::bracket(int i, int j) const {
    if (i == j) return {};
    Rational sign(1);
    if (i > j) {
        std::swap(i, j);
        sign = -1;
    }
    auto it = br_.find({i, j});
    if (it == br_.end()) return {};
    std::vector<std::pair<int, Rational>> out;
    for (const auto& [k, c] : it->second) out.emplace_back(k, c * sign);
    return out;
}

std::optional<LieAlgebra::JacobiWitness> LieAlgebra::jacobi_check() const {
    for (int i = 1; i <= dim_; ++i)
        for (int j = i + 1; j <= dim_; ++j)
            for (int k = j + 1; k <= dim_; ++k) {
                // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
                std::map<int, Rational> total;
                auto acc = [&](int a, int b, int c) {
                    for (const auto& [l, cl] : bracket(a, b))
                        for (const auto& [m, cm] : bracket(l, c)) {
                            total[m] += cl * cm;
                            if (total[m] == 0) total.erase(m);
                        }
                };
                acc(i, j, k);
                acc(j, k, i);
                acc(k, i, j);
                if (!total.empty()) return JacobiWitness{i, j, k};
            }
    return std::nullopt;
}

LieAlgebra heisenberg() {
    LieAlgebra L(3);
    L.add_bracket(1, 2, 3, 1);
    return L;
}

LieAlgebra vn(int n) {
    if (n < 3) throw Error("BadDimension", "vn requires dimension >= 3");
    LieAlgebra L(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; i + j <= n; ++j)
            L.add_bracket(i, j, i + j, Rational(j - i));
    return L;
}

LieAlgebra abelian_lie(int n) { return LieAlgebra(n); }

namespace {

DgaPtr ce_build(const LieAlgebra& L, const std::string& prefix, bool checked) {
    std::vector<GeneratorSpec> gens;
    for (int i = 1; i <= L.dim(); ++i)
        gens.push_back({prefix + std::to_string(i), 1, i});
    auto alg = GradedAlgebra::make(std::move(gens));
    std::vector<Element> d;
    for (int k = 1; k <= L.dim(); ++k) {
        Element dk(alg);
        for (const auto& [pair, terms] : L.table()) {
            auto it = terms.find(k);
            if (it == terms.end()) continue;
            auto prod = alg->multiply(Monomial::generator(pair.first - 1),
                                      Monomial::generator(pair.second - 1));
            dk += Element::monomial(alg, prod->first, it->second * prod->second);
        }
        d.push_back(std::move(dk));
    }
    return checked ? DGA::make(alg, std::move(d)) : DGA::make_unchecked(alg, std::move(d));
}

} // namespace

DgaPtr chevalley_eilenberg(const LieAlgebra& L, const std::string& prefix) {
    if (auto w = L.jacobi_check())
        throw Error("JacobiFailure", "Jacobi identity fails on basis triple (" +
                                         std::to_string(w->i) + "," + std::to_string(w->j) + "," +
                                         std::to_string(w->k) + ")");
    return ce_build(L, prefix, true);
}

DgaPtr chevalley_eilenberg_raw(const LieAlgebra& L, const std::string& prefix) {
    return ce_build(L, prefix, false);
}

DgaPtr tensor_with_circle(const DGA& base) {
    const auto& alg = base.algebra();
    // continue the numbering when all names look like stem + number
    std::string stem;
    bool numbered = alg.generator_count() > 0;
    long maxnum = 0;
    for (std::size_t i = 0; i < alg.generator_count() && numbered; ++i) {
        const std::string& name = alg.generator(i).name;
        std::size_t p = name.size();
        while (p > 0 && std::isdigit(static_cast<unsigned char>(name[p - 1]))) --p;
        if (p == 0 || p == name.size()) {
            numbered = false;
            break;
        }
        std::string s = name.substr(0, p);
        if (i == 0)
            stem = s;
        else if (s != stem) {
            numbered = false;
            break;
        }
        maxnum = std::max(maxnum, std::stol(name.substr(p)));
    }
    std::string fresh = numbered ? stem + std::to_string(maxnum + 1) : "t1";
    while (alg.index_of(fresh)) fresh += "_";

    std::vector<GeneratorSpec> gens = alg.generators();
    gens.push_back({fresh, 1, 1});
    auto ext = GradedAlgebra::make(std::move(gens));
    std::vector<Element> d;
    for (std::size_t i = 0; i < alg.generator_count(); ++i)
        d.push_back(reexpress(base.d_of_generator(i), ext));
    d.push_back(Element(ext)); // the circle class is closed
    return DGA::make(ext, std::move(d), base.degree_cap() + 1);
}

DgaPtr kodaira_thurston() { return tensor_with_circle(*chevalley_eilenberg(vn(3))); }

DgaPtr cpn(int m) {
    if (m < 1) throw Error("BadDimension", "cpn requires m >= 1");
    auto alg = GradedAlgebra::make({{"x", 2, std::nullopt}, {"y", 2 * m + 1, std::nullopt}});
    Element x = Element::generator(alg, 0);
    std::vector<Element> d{Element(alg), x.pow(m + 1)};
    return DGA::make(alg, std::move(d), 2 * m + 2);
}

DgaPtr abelian_model(int n) { return chevalley_eilenberg(abelian_lie(n)); }

DgaPtr point_model() {
    return DGA::make(GradedAlgebra::make({}), {}, 0);
}

} // namespace rht

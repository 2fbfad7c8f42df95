#include "rht/dga.hpp"

#include "rht/errors.hpp"

namespace rht {

DGA::DGA(AlgebraPtr alg, std::vector<Element> d_of_gen, int cap)
    : alg_(std::move(alg)), d_gen_(std::move(d_of_gen)), cap_(cap) {}

DgaPtr DGA::build(AlgebraPtr alg, std::vector<Element> d_of_gen, std::optional<int> cap,
                  bool check_square) {
    if (d_of_gen.size() != alg->generator_count())
        throw Error("NotADifferential", "differential must cover every generator");
    for (std::size_t i = 0; i < d_of_gen.size(); ++i) {
        const auto& img = d_of_gen[i];
        if (!img.algebra()->same_generators(*alg))
            throw Error("MismatchedAlgebra", "differential image lives in a different algebra");
        int want = alg->generator(i).degree + 1;
        if (!img.is_homogeneous(want))
            throw Error("NotADifferential", "d(" + alg->generator(i).name +
                                                ") is not homogeneous of degree " +
                                                std::to_string(want));
    }
    int effective_cap;
    if (cap) {
        effective_cap = *cap;
        if (effective_cap < 0)
            throw Error("BadDimension", "degree cap must be nonnegative");
    } else {
        if (alg->has_even_generators())
            throw Error("BadDimension",
                        "a degree cap is required when even-degree generators are present");
        effective_cap = alg->odd_degree_sum();
    }
    DgaPtr dga(new DGA(std::move(alg), std::move(d_of_gen), effective_cap));
    if (check_square) {
        for (std::size_t i = 0; i < dga->algebra().generator_count(); ++i) {
            if (!dga->differential(dga->d_of_generator(i)).is_zero())
                throw Error("NotADifferential",
                            "d(d(" + dga->algebra().generator(i).name + ")) != 0");
        }
    }
    return dga;
}

DgaPtr DGA::make(AlgebraPtr alg, std::vector<Element> d_of_gen, std::optional<int> cap) {
    return build(std::move(alg), std::move(d_of_gen), cap, true);
}

DgaPtr DGA::make_unchecked(AlgebraPtr alg, std::vector<Element> d_of_gen, std::optional<int> cap) {
    return build(std::move(alg), std::move(d_of_gen), cap, false);
}

DgaPtr DGA::with_cap(int cap) const {
    return build(alg_, d_gen_, cap, false);
}

Element DGA::differential(const Element& u) const {
    if (!u.algebra()->same_generators(*alg_))
        throw Error("MismatchedAlgebra", "element lives in a different algebra");
    Element out(alg_);
    for (const auto& [m, c] : u.terms()) {
        // flatten to the factor word and apply the Leibniz rule factor by factor
        std::vector<std::size_t> word;
        for (const auto& [idx, e] : m.factors())
            for (int r = 0; r < e; ++r) word.push_back(idx);
        int sign = 1;
        for (std::size_t j = 0; j < word.size(); ++j) {
            const Element& dg = d_gen_[word[j]];
            if (!dg.is_zero()) {
                std::vector<std::pair<std::size_t, int>> pre, post;
                for (std::size_t t = 0; t < j; ++t) pre.emplace_back(word[t], 1);
                for (std::size_t t = j + 1; t < word.size(); ++t) post.emplace_back(word[t], 1);
                Element term =
                    Element::monomial(alg_, Monomial::from_factors(std::move(pre)), c * sign) * dg *
                    Element::monomial(alg_, Monomial::from_factors(std::move(post)), 1);
                out += term;
            }
            if (alg_->generator(word[j]).degree % 2 != 0) sign = -sign;
        }
    }
    return out;
}

const QMatrix& DGA::d_matrix(int q) const {
    if (q < 0 || q > cap_)
        throw Error("CapExceeded", "d_matrix(" + std::to_string(q) + ") exceeds degree cap " +
                                       std::to_string(cap_));
    std::lock_guard<std::mutex> lock(mu_);
    auto it = dmat_.find(q);
    if (it != dmat_.end()) return it->second;
    auto src = alg_->degree_basis(q);
    auto dst = alg_->degree_basis(q + 1);
    QMatrix m(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        Element d = differential(Element::monomial(alg_, src[j], 1));
        QVector col = d.coords(q + 1);
        for (std::size_t i = 0; i < dst.size(); ++i) m(i, j) = col[i];
    }
    return dmat_.emplace(q, std::move(m)).first->second;
}

std::vector<Monomial> DGA::basis(int q) const {
    if (q > cap_)
        throw Error("CapExceeded", "basis(" + std::to_string(q) + ") exceeds degree cap " +
                                       std::to_string(cap_));
    return alg_->degree_basis(q);
}

DgaValidation DGA::validate() const {
    DgaValidation rep;
    rep.weighted = true;
    rep.weight_preserving = true;
    for (std::size_t i = 0; i < alg_->generator_count(); ++i) {
        const auto& g = alg_->generator(i);
        const Element& dg = d_gen_[i];
        if (rep.valid && !differential(dg).is_zero()) {
            rep.valid = false;
            rep.failing_generator = g.name;
        }
        for (const auto& [m, c] : dg.terms())
            if (m.word_length() < 2) rep.minimal = false;
        if (!g.weight) {
            rep.weighted = false;
            rep.weight_preserving = false;
        } else if (rep.weight_preserving) {
            for (const auto& [m, c] : dg.terms()) {
                auto w = m.weight(*alg_);
                if (!w || *w != *g.weight) rep.weight_preserving = false;
            }
        }
    }
    return rep;
}

bool DGA::equals(const DGA& other) const {
    if (!alg_->same_generators(*other.alg_)) return false;
    if (cap_ != other.cap_) return false;
    for (std::size_t i = 0; i < d_gen_.size(); ++i)
        if (!(d_gen_[i] == other.d_gen_[i])) return false;
    return true;
}

} // namespace rht

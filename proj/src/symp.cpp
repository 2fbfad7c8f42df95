#include "rht/symp.hpp"

#include "rht/errors.hpp"
#include "rht/models.hpp"

#include <algorithm>

namespace rht {

SymplecticForm::SymplecticForm(DgaPtr dga, Element form)
    : dga_(std::move(dga)), form_(std::move(form)), cache_(std::make_shared<Cache>()) {
    const auto& alg = dga_->algebra();
    for (std::size_t i = 0; i < alg.generator_count(); ++i)
        if (alg.generator(i).degree != 1)
            throw Error("BadDimension", "symplectic coefficient matrices need a degree-1 complex");
    if (!form_.algebra()->same_generators(alg))
        throw Error("MismatchedAlgebra", "form lives in a different algebra");
    if (!form_.is_homogeneous(2))
        throw Error("NotHomogeneous", "a symplectic form has degree 2");
    std::size_t n = alg.generator_count();
    w_ = QMatrix(n, n);
    for (const auto& [m, c] : form_.terms()) {
        const auto& f = m.factors();
        // degree-1 generators: every degree-2 monomial is x_i x_j with i < j
        std::size_t i = f[0].first, j = f[1].first;
        w_(i, j) = c;
        w_(j, i) = -c;
    }
}

int SymplecticForm::half_dim() const {
    int n = generator_count();
    if (n % 2 != 0)
        throw Error("BadDimension", "odd-dimensional complexes carry no symplectic form");
    return n / 2;
}

bool SymplecticForm::closed() const { return dga_->differential(form_).is_zero(); }

bool SymplecticForm::nondegenerate() const { return determinant(w_) != 0; }

void SymplecticForm::require_star_ready() const {
    if (!nondegenerate())
        throw Error("DegenerateForm", "the coefficient matrix is singular");
    half_dim(); // throws on odd generator count
}

const QMatrix& SymplecticForm::star_matrix(int k) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->star.find(k);
    if (it != cache_->star.end()) return it->second;

    int n2 = generator_count();
    int n = n2 / 2;
    if (!cache_->winv) cache_->winv = inverse(w_);
    if (!cache_->top_coeff) {
        Element wn = form_.pow(n);
        QVector top = wn.coords(n2); // the top slice is one-dimensional
        cache_->top_coeff = top.empty() ? Rational(0) : top[0];
    }
    const auto& alg = *dga_->algebra_ptr();
    auto src = alg.degree_basis(k);
    auto dst = alg.degree_basis(n2 - k);
    // factor n!
    Rational nfact(1);
    for (int i = 2; i <= n; ++i) nfact *= i;
    Rational scale = *cache_->top_coeff / nfact;

    // index sets of the source/target monomials
    auto index_set = [](const Monomial& m) {
        std::vector<std::size_t> out;
        for (const auto& [idx, e] : m.factors()) out.push_back(idx);
        return out;
    };

    // For each alpha in the k-slice basis there is a unique complementary
    // monomial gamma with alpha wedge gamma = sign * top, so the defining
    // identity resolves coordinate by coordinate.
    QMatrix st(dst.size(), src.size());
    for (std::size_t b = 0; b < src.size(); ++b) {
        auto bset = index_set(src[b]);
        for (std::size_t a = 0; a < src.size(); ++a) {
            auto aset = index_set(src[a]);
            // Gram determinant <m_a, m_b> = det(winv[a_i][b_j])
            std::size_t kk = aset.size();
            QMatrix gram(kk, kk);
            for (std::size_t i = 0; i < kk; ++i)
                for (std::size_t j = 0; j < kk; ++j) gram(i, j) = (*cache_->winv)(aset[i], bset[j]);
            Rational rhs = determinant(gram) * scale;
            if (rhs == 0) continue;
            // complement of m_a and the sign of m_a wedge complement
            std::vector<std::pair<std::size_t, int>> comp;
            for (std::size_t g = 0; g < static_cast<std::size_t>(n2); ++g)
                if (src[a].exponent(g) == 0) comp.emplace_back(g, 1);
            Monomial cm = Monomial::from_factors(comp);
            auto prod = alg.multiply(src[a], cm);
            // locate the complement in the target basis
            std::size_t row = 0;
            while (row < dst.size() && !(dst[row] == cm)) ++row;
            st(row, b) += rhs / prod->second;
        }
    }
    return cache_->star.emplace(k, std::move(st)).first->second;
}

Element SymplecticForm::star(const Element& u) const {
    require_star_ready();
    if (u.is_zero()) return Element(dga_->algebra_ptr());
    auto deg = u.homogeneous_degree();
    if (!deg)
        throw Error("NotHomogeneous", "the star operator acts degreewise");
    int n2 = generator_count();
    if (*deg > n2)
        throw Error("BadDimension", "degree exceeds the top slice");
    QVector out = star_matrix(*deg).apply(u.coords(*deg));
    return Element::from_coords(dga_->algebra_ptr(), n2 - *deg, out);
}

Element SymplecticForm::codifferential(const Element& u) const {
    require_star_ready();
    if (u.is_zero()) return Element(dga_->algebra_ptr());
    auto deg = u.homogeneous_degree();
    if (!deg)
        throw Error("NotHomogeneous", "the codifferential acts degreewise");
    int n2 = generator_count();
    Element su = star(u);
    if (*deg == 0) return Element(dga_->algebra_ptr()); // d on the top slice vanishes
    return star(dga_->differential(su));
}

bool SymplecticForm::is_harmonic(const Element& u) const {
    return dga_->differential(u).is_zero() && codifferential(u).is_zero();
}

SymplecticForm::HarmonicWitness SymplecticForm::class_has_harmonic_rep(
    const Cohomology& H, const CohomClass& A) const {
    require_star_ready();
    int q = A.degree;
    int n2 = generator_count();
    HarmonicWitness out;
    Element a = A.representative;
    if (q == 0 || dga_->algebra().degree_basis(q - 1).empty()) {
        out.representable = codifferential(a).is_zero();
        if (out.representable) out.witness = a;
        return out;
    }
    // delta(a + d gamma) = 0 as a linear system in gamma
    // columns: slice q-1; rows: slice q-1 via star(2n-q+1) d(2n-q) star(q)
    const QMatrix& stq = star_matrix(q);
    const QMatrix& d_mid = dga_->d_matrix(n2 - q);
    const QMatrix& st_back = star_matrix(n2 - q + 1);
    QMatrix delta_q = st_back.multiply(d_mid.multiply(stq));
    QMatrix ddq = delta_q.multiply(dga_->d_matrix(q - 1));
    QVector rhs = delta_q.apply(a.coords(q));
    for (auto& x : rhs) x = -x;
    auto gamma = solve_any(ddq, rhs);
    out.representable = gamma.has_value();
    if (gamma) {
        Element g = Element::from_coords(dga_->algebra_ptr(), q - 1, *gamma);
        out.witness = a + dga_->differential(g);
    }
    return out;
}

SymplecticForm omega_standard(int m) {
    if (m < 2)
        throw Error("BadDimension", "the standard form needs at least four generators");
    auto dga = chevalley_eilenberg(vn(2 * m));
    auto alg = dga->algebra_ptr();
    Element form(alg);
    for (int i = 1; i <= m; ++i) {
        auto prod = alg->multiply(Monomial::generator(i - 1), Monomial::generator(2 * m - i));
        form += Element::monomial(alg, prod->first, Rational(2 * (m - i) + 1) * prod->second);
    }
    return SymplecticForm(dga, form);
}

SymplecticForm kodaira_thurston_form() {
    auto dga = kodaira_thurston();
    auto alg = dga->algebra_ptr();
    auto t14 = alg->multiply(Monomial::generator(0), Monomial::generator(3));
    auto t23 = alg->multiply(Monomial::generator(1), Monomial::generator(2));
    Element form = Element::monomial(alg, t14->first, Rational(t14->second)) +
                   Element::monomial(alg, t23->first, Rational(t23->second));
    return SymplecticForm(dga, form);
}

LefschetzReport hard_lefschetz(const Cohomology& H, const CohomClass& w, int n) {
    if (w.degree != 2)
        throw Error("NotHomogeneous", "the Lefschetz class has degree 2");
    LefschetzReport rep;
    rep.all_iso = true;
    Element power = Element::unit(H.dga().algebra_ptr());
    for (int k = 0; k <= n; ++k) {
        LefschetzStep step;
        step.k = k;
        auto src = H.class_basis(n - k);
        step.source_dim = src.size();
        step.target_dim = H.space(n + k).class_reps.size();
        QMatrix m(step.target_dim, step.source_dim);
        for (std::size_t j = 0; j < src.size(); ++j) {
            Element u = power * src[j].representative;
            QVector lambda = H.class_coordinates(n + k, u.coords(n + k));
            for (std::size_t i = 0; i < lambda.size(); ++i) m(i, j) = lambda[i];
        }
        step.rank = rank(m);
        step.iso = step.rank == step.source_dim && step.rank == step.target_dim;
        rep.all_iso = rep.all_iso && step.iso;
        rep.steps.push_back(step);
        if (k < n) power = power * w.representative;
    }
    return rep;
}

HarmonicReport harmonic_report(const SymplecticForm& F, const Cohomology& H) {
    int n2 = F.generator_count();
    HarmonicReport rep;
    rep.all_representable = true;
    for (int q = 0; q <= n2; ++q) {
        HarmonicDegree hd;
        hd.degree = q;
        for (const auto& cls : H.class_basis(q)) {
            hd.total += 1;
            if (F.class_has_harmonic_rep(H, cls).representable) hd.representable += 1;
        }
        rep.all_representable = rep.all_representable && hd.representable == hd.total;
        rep.degrees.push_back(hd);
    }
    return rep;
}

HarmonicReport harmonic_by_class_powers(const Cohomology& H, const CohomClass& w, int n) {
    if (w.degree != 2)
        throw Error("NotHomogeneous", "the symplectic class has degree 2");
    HarmonicReport rep;
    rep.all_representable = true;
    // representative powers w^0..w^n must all be d-closed (they are cocycles
    // by construction); what needs checking is that they exhaust cohomology
    Element power = Element::unit(H.dga().algebra_ptr());
    std::vector<QVector> power_coords;
    for (int j = 0; j <= n; ++j) {
        if (!H.dga().differential(power).is_zero())
            throw Error("NotClosed", "a power of the symplectic class is not closed");
        power_coords.push_back(H.space(2 * j).coboundaries.reduce(power.coords(2 * j)));
        if (j < n) power = power * w.representative;
    }
    for (int q = 0; q <= 2 * n; ++q) {
        HarmonicDegree hd;
        hd.degree = q;
        auto basis = H.class_basis(q);
        hd.total = basis.size();
        if (q % 2 == 0) {
            Subspace line = Subspace::span(H.space(q).cocycles.ambient_dim(),
                                           {power_coords[q / 2]});
            for (const auto& cls : basis)
                if (line.contains(cls.representative.coords(q))) hd.representable += 1;
        }
        rep.all_representable = rep.all_representable && hd.representable == hd.total;
        rep.degrees.push_back(hd);
    }
    return rep;
}

} // namespace rht

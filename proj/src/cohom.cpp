#include "rht/cohom.hpp"

#include "rht/errors.hpp"

#include <algorithm>

namespace rht {

const CohomologySpace& Cohomology::space(int q) const {
    if (q > dga_->degree_cap())
        throw Error("CapExceeded", "cohomology in degree " + std::to_string(q) +
                                       " exceeds degree cap " +
                                       std::to_string(dga_->degree_cap()));
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(q);
    if (it != cache_.end()) return it->second;

    CohomologySpace s;
    s.degree = q;
    if (q < 0) {
        return cache_.emplace(q, std::move(s)).first->second;
    }
    s.cocycles = kernel_basis(dga_->d_matrix(q));
    if (q == 0) {
        s.coboundaries = Subspace(s.cocycles.ambient_dim());
    } else {
        s.coboundaries = column_space(dga_->d_matrix(q - 1));
    }
    std::vector<QVector> reduced;
    for (const auto& z : s.cocycles.basis()) reduced.push_back(s.coboundaries.reduce(z));
    s.class_reps = Subspace::span(s.cocycles.ambient_dim(), reduced).basis();
    return cache_.emplace(q, std::move(s)).first->second;
}

int Cohomology::betti(int q) const { return static_cast<int>(space(q).class_reps.size()); }

std::vector<int> Cohomology::betti_profile(int max_degree) const {
    std::vector<int> out;
    for (int q = 0; q <= max_degree; ++q) out.push_back(betti(q));
    return out;
}

bool Cohomology::is_exact(const Element& u) const {
    if (u.is_zero()) return true;
    auto deg = u.homogeneous_degree();
    if (!deg)
        throw Error("NotHomogeneous", "exactness is defined degreewise");
    if (!dga_->differential(u).is_zero())
        throw Error("NotClosed", "element is not closed");
    const auto& s = space(*deg);
    return s.coboundaries.contains(u.coords(*deg));
}

CohomClass Cohomology::class_of(const Element& u) const {
    auto deg = u.homogeneous_degree();
    if (!deg)
        throw Error("NotHomogeneous", "cohomology classes are taken degreewise");
    return class_of(u, *deg);
}

CohomClass Cohomology::class_of(const Element& u, int degree) const {
    if (!u.is_homogeneous(degree))
        throw Error("NotHomogeneous", "element is not homogeneous of the stated degree");
    if (!dga_->differential(u).is_zero())
        throw Error("NotClosed", "element is not closed");
    const auto& s = space(degree);
    QVector canon = s.coboundaries.reduce(u.coords(degree));
    return CohomClass{degree, Element::from_coords(dga_->algebra_ptr(), degree, canon)};
}

CohomClass Cohomology::class_from_coords(int q, const QVector& slice_coords) const {
    const auto& s = space(q);
    QVector canon = s.coboundaries.reduce(slice_coords);
    return CohomClass{q, Element::from_coords(dga_->algebra_ptr(), q, canon)};
}

std::vector<CohomClass> Cohomology::class_basis(int q) const {
    const auto& s = space(q);
    std::vector<CohomClass> out;
    for (const auto& v : s.class_reps)
        out.push_back(CohomClass{q, Element::from_coords(dga_->algebra_ptr(), q, v)});
    return out;
}

CohomClass Cohomology::cup(const CohomClass& a, const CohomClass& b) const {
    Element prod = a.representative * b.representative;
    return class_of(prod, a.degree + b.degree);
}

QVector Cohomology::class_coordinates(int q, const QVector& cocycle_coords) const {
    const auto& s = space(q);
    QVector canon = s.coboundaries.reduce(cocycle_coords);
    // class_reps rows are in RREF, so coordinates are read off at the pivots
    QVector lambda(s.class_reps.size(), Rational(0));
    QVector check(canon.size(), Rational(0));
    for (std::size_t r = 0; r < s.class_reps.size(); ++r) {
        std::size_t pivot = 0;
        while (pivot < canon.size() && s.class_reps[r][pivot] == 0) ++pivot;
        lambda[r] = canon[pivot];
        for (std::size_t j = 0; j < canon.size(); ++j) check[j] += lambda[r] * s.class_reps[r][j];
    }
    if (check != canon)
        throw Error("NotClosed", "vector does not represent a cohomology class");
    return lambda;
}

Cohomology::RingTable Cohomology::ring_table(int max_q) const {
    if (max_q > dga_->degree_cap())
        throw Error("CapExceeded", "ring table degree exceeds the cap");
    RingTable t;
    std::vector<CohomClass> reps;
    for (int q = 0; q <= max_q; ++q) {
        auto cb = class_basis(q);
        for (std::size_t i = 0; i < cb.size(); ++i) {
            t.classes.emplace_back(q, i);
            reps.push_back(cb[i]);
        }
    }
    for (std::size_t a = 0; a < reps.size(); ++a)
        for (std::size_t b = a; b < reps.size(); ++b) {
            int target = reps[a].degree + reps[b].degree;
            if (target > max_q) continue;
            CohomClass p = cup(reps[a], reps[b]);
            t.entries.push_back(
                RingEntry{a, b, class_coordinates(target, p.representative.coords(target))});
        }
    return t;
}

} // namespace rht

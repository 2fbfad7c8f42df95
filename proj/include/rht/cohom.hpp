#pragma once

#include "rht/dga.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace rht {

struct CohomClass {
    int degree = 0;
    Element representative; // canonical: reduced modulo coboundaries
};

struct CohomologySpace {
    int degree = 0;
    Subspace cocycles;
    Subspace coboundaries;
    // Canonical class representatives in slice coordinates: an RREF basis of
    // the image of the cocycles under reduction mod coboundaries. One row per
    // cohomology class; reducing any row mod the coboundaries returns it.
    std::vector<QVector> class_reps;

    CohomologySpace() : cocycles(0), coboundaries(0) {}
};

// Per-degree cohomology of a DGA, computed once per degree and cached.
class Cohomology {
public:
    explicit Cohomology(DgaPtr dga) : dga_(std::move(dga)) {}

    const DGA& dga() const { return *dga_; }
    const DgaPtr& dga_ptr() const { return dga_; }

    const CohomologySpace& space(int q) const; // q < 0 gives the empty space
    int betti(int q) const;
    std::vector<int> betti_profile(int max_degree) const; // b_0..b_max

    bool is_exact(const Element& u) const; // NotClosed when du != 0
    CohomClass class_of(const Element& u) const;
    CohomClass class_of(const Element& u, int degree) const; // for zero elements
    CohomClass class_from_coords(int q, const QVector& slice_coords) const;
    std::vector<CohomClass> class_basis(int q) const;

    CohomClass cup(const CohomClass& a, const CohomClass& b) const;

    // Coefficients of a cocycle's class in the class_reps basis of its degree.
    QVector class_coordinates(int q, const QVector& cocycle_coords) const;

    struct RingEntry {
        std::size_t a, b;  // indices into classes
        QVector product;   // coefficients in the class basis of the target degree
    };
    struct RingTable {
        std::vector<std::pair<int, std::size_t>> classes; // (degree, index within degree)
        std::vector<RingEntry> entries;                   // all pairs a <= b with deg sum <= max_q
    };
    RingTable ring_table(int max_q) const;

private:
    DgaPtr dga_;
    mutable std::mutex mu_;
    mutable std::map<int, CohomologySpace> cache_;
};

} // namespace rht

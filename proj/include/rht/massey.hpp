#pragma once

#include "rht/cohom.hpp"

#include <optional>
#include <vector>

namespace rht {

struct MasseyVerdict {
    bool defined = false;
    int degree = 0;       // p + q + r - 1
    bool nontrivial = false;
    std::optional<Element> representative; // g c + (-1)^{p-1} a h, absent when undefined
    // Image of [a] H^{q+r-1} + [c] H^{p+q-1} in canonical cocycle coordinates
    // of the target slice (each product reduced mod coboundaries).
    Subspace indeterminacy{0};
    std::optional<Element> g, h; // the primitives used
};

// Triple product <[a],[b],[c]>: solve d g = a b and d h = b c, take
// g c + (-1)^{p-1} a h, and test it against indeterminacy + coboundaries.
MasseyVerdict triple_massey(const Cohomology& H, const CohomClass& a, const CohomClass& b,
                            const CohomClass& c);

// Same verdict with caller-supplied primitives (validated against
// d g = a b, d h = b c). The nontriviality flag cannot depend on the choice.
MasseyVerdict triple_massey_with_primitives(const Cohomology& H, const CohomClass& a,
                                            const CohomClass& b, const CohomClass& c,
                                            const Element& g, const Element& h);

struct ScanHit {
    std::size_t ia, ib, ic; // indices into the scan's global class list
    int deg_a, deg_b, deg_c;
    MasseyVerdict verdict;
};

// Every nontrivial triple product of positive-degree class-basis elements
// with target degree <= max_degree, in deterministic index order.
std::vector<ScanHit> formality_scan(const Cohomology& H, int max_degree);

} // namespace rht

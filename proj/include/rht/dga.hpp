#pragma once

#include "rht/grade.hpp"
#include "rht/qlin.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace rht {

struct DgaValidation {
    bool valid = true;                             // d of d vanishes on every generator
    std::optional<std::string> failing_generator;  // witness when it does not
    bool minimal = true;                           // every d(g) is decomposable
    bool weighted = false;                         // every generator carries a weight
    bool weight_preserving = false;                // d is homogeneous of weight 0 (bidegree (1,0))
};

class DGA;
using DgaPtr = std::shared_ptr<const DGA>;

// Free graded-commutative algebra with a degree +1 differential satisfying
// the graded Leibniz rule and d(d(g)) = 0 on every generator.
class DGA {
public:
    // d_of_gen[i] is d applied to generator i (zero Element allowed).
    // cap defaults to the sum of odd generator degrees; algebras containing
    // even-degree generators must supply a cap.
    static DgaPtr make(AlgebraPtr alg, std::vector<Element> d_of_gen,
                       std::optional<int> cap = std::nullopt);
    // Same shape checks, but skips the d(d(g)) = 0 validation so that
    // validate() can report failures on deliberately broken inputs.
    static DgaPtr make_unchecked(AlgebraPtr alg, std::vector<Element> d_of_gen,
                                 std::optional<int> cap = std::nullopt);
    // Identical generators and differential, different degree cap.
    DgaPtr with_cap(int cap) const;

    const GradedAlgebra& algebra() const { return *alg_; }
    const AlgebraPtr& algebra_ptr() const { return alg_; }
    int degree_cap() const { return cap_; }
    const Element& d_of_generator(std::size_t i) const { return d_gen_[i]; }

    // Leibniz extension of the generator differentials.
    Element differential(const Element& u) const;

    // Matrix of d from the degree q slice to the degree q+1 slice in the
    // canonical monomial bases. Memoized. CapExceeded when q > degree_cap
    // (the q+1 slice is enumerated on demand, so the top degree of an
    // exterior model is allowed).
    const QMatrix& d_matrix(int q) const;

    std::vector<Monomial> basis(int q) const; // guarded by the cap

    DgaValidation validate() const;

    bool equals(const DGA& other) const;

private:
    DGA(AlgebraPtr alg, std::vector<Element> d_of_gen, int cap);
    static DgaPtr build(AlgebraPtr alg, std::vector<Element> d_of_gen,
                        std::optional<int> cap, bool check_square);

    AlgebraPtr alg_;
    std::vector<Element> d_gen_;
    int cap_ = 0;

    mutable std::mutex mu_;
    mutable std::map<int, QMatrix> dmat_;
};

} // namespace rht

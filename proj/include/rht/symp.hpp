#pragma once

#include "rht/cohom.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace rht {

// A closed nondegenerate 2-form on a complex generated in degree 1 (an
// exterior algebra on 2n generators), with the star/codifferential calculus
// attached. Construction only requires the shape; closedness and
// nondegeneracy are reported, and the star operators demand nondegeneracy.
class SymplecticForm {
public:
    SymplecticForm(DgaPtr dga, Element form);

    const DgaPtr& dga() const { return dga_; }
    const Element& element() const { return form_; }
    const QMatrix& coefficient_matrix() const { return w_; } // antisymmetric n x n
    int generator_count() const { return static_cast<int>(w_.rows()); }
    int half_dim() const; // n where the algebra has 2n generators

    bool closed() const;
    bool nondegenerate() const;

    // alpha wedge star(beta) = <alpha, beta> omega^n / n! for every alpha;
    // solved per degree as an exact linear system. DegenerateForm when the
    // coefficient matrix is singular.
    Element star(const Element& u) const;
    Element codifferential(const Element& u) const; // star d star, verbatim
    bool is_harmonic(const Element& u) const;       // d u = 0 and delta u = 0

    struct HarmonicWitness {
        bool representable = false;
        std::optional<Element> witness; // closed and co-closed representative
    };
    HarmonicWitness class_has_harmonic_rep(const Cohomology& H, const CohomClass& A) const;

private:
    const QMatrix& star_matrix(int k) const; // slice k -> slice 2n-k
    void require_star_ready() const;

    // shared so the form stays copyable; omega^n = top_coeff * (x_1 ... x_{2n})
    struct Cache {
        std::mutex mu;
        std::map<int, QMatrix> star;
        std::optional<QMatrix> winv;
        std::optional<Rational> top_coeff;
    };

    DgaPtr dga_;
    Element form_;
    QMatrix w_;
    std::shared_ptr<Cache> cache_;
};

// (2m-1) x_1 x_{2m} + (2m-3) x_2 x_{2m-1} + ... + x_m x_{m+1} on the
// Chevalley-Eilenberg model of vn(2m).
SymplecticForm omega_standard(int m);
// x1 x4 + x2 x3 on the Kodaira-Thurston model.
SymplecticForm kodaira_thurston_form();

struct LefschetzStep {
    int k = 0;
    std::size_t rank = 0;
    std::size_t source_dim = 0, target_dim = 0;
    bool iso = false;
};
struct LefschetzReport {
    std::vector<LefschetzStep> steps; // k = 0..n
    bool all_iso = false;
};
// Cup with [w]^k as a map H^{n-k} -> H^{n+k}.
LefschetzReport hard_lefschetz(const Cohomology& H, const CohomClass& w, int n);

struct HarmonicDegree {
    int degree = 0;
    std::size_t representable = 0;
    std::size_t total = 0;
};
struct HarmonicReport {
    std::vector<HarmonicDegree> degrees; // 0..2n
    bool all_representable = false;
};
// Per-class harmonic representability on a degree-1 complex, degrees 0..2n.
HarmonicReport harmonic_report(const SymplecticForm& F, const Cohomology& H);
// For models whose cohomology is spanned by powers of the symplectic class
// (projective-space type): checks that every class in degrees 0..2n is a
// multiple of [w]^j and that d kills each representative power w^j, j <= n,
// which pins delta(w^j) = 0 since the star carries such powers to powers.
HarmonicReport harmonic_by_class_powers(const Cohomology& H, const CohomClass& w, int n);

} // namespace rht

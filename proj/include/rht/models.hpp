#pragma once

#include "rht/dga.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rht {

// Finite-dimensional Lie algebra over Q given by structure constants on a
// fixed basis e_1..e_n (1-based indices at the interface).
class LieAlgebra {
public:
    explicit LieAlgebra(int dim);

    int dim() const { return dim_; }
    // set [e_i, e_j] += c e_k for i < j (the antisymmetric partner is implied)
    void add_bracket(int i, int j, int k, const Rational& c);
    // coefficients of [e_i, e_j] for any i, j; pairs (k, c) with k 1-based
    std::vector<std::pair<int, Rational>> bracket(int i, int j) const;
    const std::map<std::pair<int, int>, std::map<int, Rational>>& table() const { return br_; }

    struct JacobiWitness {
        int i, j, k;
    };
    // nullopt when the Jacobi identity holds on every basis triple
    std::optional<JacobiWitness> jacobi_check() const;

    bool operator==(const LieAlgebra&) const = default;

private:
    int dim_;
    std::map<std::pair<int, int>, std::map<int, Rational>> br_; // (i<j) -> {k -> c}
};

LieAlgebra heisenberg();            // dim 3, [e1,e2] = e3
LieAlgebra vn(int n);               // dim n >= 3, [e_i,e_j] = (j-i) e_{i+j} for i+j <= n
LieAlgebra abelian_lie(int n);      // all brackets zero

// Generators x1..xn of degree 1 and weight i, d x_k = sum_{i<j} c^{ij}_k x_i x_j.
DgaPtr chevalley_eilenberg(const LieAlgebra& L, const std::string& prefix = "x");
// Same construction without the Jacobi / d-squared validation, so broken
// bracket tables can be inspected through DGA::validate().
DgaPtr chevalley_eilenberg_raw(const LieAlgebra& L, const std::string& prefix = "x");

// Adjoin one closed degree-1 generator (a circle factor). The new generator
// continues the numbering of the existing names when they share a stem.
DgaPtr tensor_with_circle(const DGA& base);

DgaPtr kodaira_thurston();          // tensor_with_circle(chevalley_eilenberg(vn(3)))
DgaPtr cpn(int m);                  // x of degree 2, y of degree 2m+1, dy = x^{m+1}
DgaPtr abelian_model(int n);        // chevalley_eilenberg(abelian_lie(n))
DgaPtr point_model();               // no generators

} // namespace rht

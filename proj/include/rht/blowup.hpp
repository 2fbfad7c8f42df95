#pragma once

#include "rht/massey.hpp"

#include <optional>
#include <vector>

namespace rht {

// Total model of a projectivized rank-k bundle: the base's generators plus
// x of degree 2 and y of degree 2k-1 with d y = x^k + c_1 x^{k-1} + ... + c_k.
struct ProjectivizationModel {
    DgaPtr base;
    int fiber_rank = 0;          // k
    std::vector<Element> chern;  // c_1..c_k over the base (zero entries allowed)
    DgaPtr total;
    std::size_t x_index = 0, y_index = 0;
};

// chern may be shorter than k; missing entries are zero. Each nonzero c_j
// must be closed (ChernNotClosed) and homogeneous of degree 2j
// (ChernWrongDegree). cap defaults to base cap + 2k - 1.
ProjectivizationModel projectivize(DgaPtr base, int k, std::vector<Element> chern = {},
                                   std::optional<int> cap = std::nullopt);

struct BlowupBettiProfile {
    int N = 0;
    int k = 0;                  // codimension of the center
    std::vector<int> y_betti;   // b_0..b_{dim Y} of the center
    std::vector<int> betti;     // b_0..b_{2N} of the blow-up
    long euler = 0;
    bool duality = false;       // b_i == b_{2N-i} for all i
};

// b_i of the blow-up of CP^N along a center Y of even dimension 2(N-k):
// b_i(CP^N) + sum_{j=1}^{k-1} b_{i-2j}(Y). BadCodimension unless
// k = N - dim(Y)/2 >= 2.
BlowupBettiProfile blowup_betti(int N, const std::vector<int>& y_betti, int k);

enum class Lemma2Target { kodaira_thurston, m4 };

// Triple product <[x x2],[x x1],[x x2]> on the projectivization of the
// vn(2m) model, against the indeterminacy [x x2] H^5 + coboundaries.
MasseyVerdict lemma1_check(int m, int k, const std::vector<Element>& chern = {});
// Triple product <[x x2], v, [x x2]> where v is the base symplectic class
// (x1 x4 + x2 x3, or 3 x1 x4 + x2 x3 on the vn(4) model), against
// [x x2] H^4 + coboundaries.
MasseyVerdict lemma2_check(Lemma2Target target, int k, const std::vector<Element>& chern = {});

// Degree bookkeeping for connected sums: a product in degree q survives when
// q <= dim - 3 (both gluing spheres miss the representative cells).
bool massey_survives_connected_sum(int q, int manifold_dim);

} // namespace rht

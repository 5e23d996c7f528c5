#pragma once

#include "heis/combinat.hpp"

#include <utility>
#include <vector>

namespace heis {

// Element of S_p x S_q, stored componentwise.
using GroupElement = std::pair<Permutation, Permutation>;

// Explicitly enumerated subgroup of S_p x S_q; closure under product and
// inverse is checked on construction.
class SubgroupSpec {
public:
    // The parabolic S_alpha x S_beta.
    static SubgroupSpec parabolic_product(const Composition& alpha, const Composition& beta);
    // The image of S_{n-q} x S_{p+q-n} x S_{n-p} under
    // (x,y,z) -> (x prod y, y prod z).
    static SubgroupSpec fiber_product(int p, int q, int n);

    const std::vector<GroupElement>& elements() const { return elements_; }
    Integer order() const { return Integer(elements_.size()); }
    bool contains(const GroupElement& g) const;

private:
    explicit SubgroupSpec(std::vector<GroupElement> elements);
    std::vector<GroupElement> elements_;
};

// One representative per double coset (S_p x_n S_q) \ (S_p x S_q) / (S_alpha
// x S_beta), by orbit sweep over the whole group.  Guarded to p + q <= 7.
std::vector<GroupElement> double_cosets(int p, int q, int n, const Composition& alpha,
                                        const Composition& beta);

// The matrix M_upsilon of the double-coset bijection, in the M^n_{alpha,beta}
// convention (rows indexed by beta, columns by alpha).
MarginMatrix coset_matrix(const GroupElement& rep, const Composition& alpha,
                          const Composition& beta, int n);

// |S_p x_n S_q  intersect  rep^{-1} (S_alpha x S_beta) rep|.
Integer coset_intersection_order(const GroupElement& rep, const Composition& alpha,
                                 const Composition& beta, int n);

// [S_n : S_p x_n S_q] dim(h_alpha) dim(h_beta)
//   = sum over M^n_{alpha,beta} of n! / prod (nonzero entries)!.
bool dimension_identity(const Composition& alpha, const Composition& beta, int n);

} // namespace heis

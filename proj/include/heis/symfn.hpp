#pragma once

#include "heis/combinat.hpp"
#include "heis/linear.hpp"

namespace heis {

enum class SymBasis { H, P };

// Element of Lambda in the h- or p-basis, finitely supported over partitions.
// Mixed degrees are allowed; the Heisenberg product is not graded.
class SymElem {
public:
    explicit SymElem(SymBasis basis) : basis_(basis) {}
    SymElem(SymBasis basis, LinearCombo<Partition> terms)
        : basis_(basis), terms_(std::move(terms)) {}

    static SymElem h(std::vector<int> index) {
        return SymElem(SymBasis::H, LinearCombo<Partition>(Partition(std::move(index))));
    }
    static SymElem p(std::vector<int> index) {
        return SymElem(SymBasis::P, LinearCombo<Partition>(Partition(std::move(index))));
    }
    static SymElem one(SymBasis basis) {
        return SymElem(basis, LinearCombo<Partition>(Partition()));
    }

    SymBasis basis() const { return basis_; }
    const LinearCombo<Partition>& terms() const& { return terms_; }
    LinearCombo<Partition>& terms() & { return terms_; }
    LinearCombo<Partition> terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.is_zero(); }

    SymElem component(int degree) const;
    SymElem truncate(int max_degree) const;
    int max_degree() const;

    friend bool operator==(const SymElem&, const SymElem&) = default;
    friend SymElem operator+(SymElem a, const SymElem& b);
    friend SymElem operator-(SymElem a, const SymElem& b);
    friend SymElem operator*(const Rational& c, SymElem a) {
        a.terms_ *= c;
        return a;
    }

private:
    SymBasis basis_;
    LinearCombo<Partition> terms_;
};

using SymTensor = Tensor2<Partition>;

// External product: index concatenation in either basis.
SymElem external_product(const SymElem& f, const SymElem& g);

// Internal (Kronecker) product.  Native only in the p-basis, where
// p_l * p_m = z(l) delta_{l,m} p_l; the h-basis goes through conversion.
SymElem internal_product(const SymElem& f, const SymElem& g);

// Heisenberg product: margin-matrix rule in the h-basis, split rule in the
// p-basis.
SymElem heisenberg(const SymElem& f, const SymElem& g);

// Same product through f # g = sum f1 * (f2 . g1) * g2 over the coproducts.
SymElem heisenberg_via_zelevinski(const SymElem& f, const SymElem& g);

// Coproduct dual to the external product; h_a splits additively and p_n is
// primitive.  The result shares f's basis.
SymTensor coproduct(const SymElem& f);

SymElem h_to_p(const SymElem& f);
SymElem p_to_h(const SymElem& f);

// h_(a_1,...,a_r) -> h_(a_1) # ... # h_(a_r); triangular with unit diagonal.
SymElem iso_external_to_heisenberg(const SymElem& f);
SymElem iso_external_to_heisenberg_inverse(const SymElem& f);

// f -> f * sum_n h_(n), cut off at degree N.
SymElem iso_heisenberg_to_internal_truncated(const SymElem& f, int max_degree);

// Componentwise products on tensor sums, used by the Hopf compatibility and
// Zelevinski checks.
SymTensor tensor_heisenberg(const SymTensor& s, const SymTensor& t, SymBasis basis);
SymTensor tensor_external(const SymTensor& s, const SymTensor& t, SymBasis basis);

} // namespace heis

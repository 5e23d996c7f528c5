#pragma once

#include "heis/combinat.hpp"
#include "heis/linear.hpp"
#include "heis/symfn.hpp"

namespace heis {

// Element of Sigma (non-commutative symmetric functions) in the X_alpha
// basis, finitely supported over compositions.
class NSymElem {
public:
    NSymElem() = default;
    explicit NSymElem(LinearCombo<Composition> terms) : terms_(std::move(terms)) {}

    static NSymElem X(std::vector<int> index) {
        return NSymElem(LinearCombo<Composition>(Composition(std::move(index))));
    }
    static NSymElem one() { return NSymElem(LinearCombo<Composition>(Composition())); }

    const LinearCombo<Composition>& terms() const& { return terms_; }
    LinearCombo<Composition>& terms() & { return terms_; }
    LinearCombo<Composition> terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.is_zero(); }

    NSymElem component(int degree) const;
    NSymElem truncate(int max_degree) const;
    int max_degree() const;

    friend bool operator==(const NSymElem&, const NSymElem&) = default;
    friend NSymElem operator+(NSymElem a, const NSymElem& b) {
        a.terms_ += b.terms_;
        return a;
    }
    friend NSymElem operator-(NSymElem a, const NSymElem& b) {
        a.terms_ -= b.terms_;
        return a;
    }
    friend NSymElem operator*(const Rational& c, NSymElem a) {
        a.terms_ *= c;
        return a;
    }

private:
    LinearCombo<Composition> terms_;
};

using NSymTensor = Tensor2<Composition>;

// External product: concatenation of compositions, order preserved.
NSymElem external_product(const NSymElem& f, const NSymElem& g);

// Heisenberg product: X_alpha # X_beta = sum_n sum_{M} X_{c(M)}.
NSymElem heisenberg(const NSymElem& f, const NSymElem& g);

// Internal (Solomon) product: the degree-diagonal component of #, zero
// across degrees.
NSymElem internal_product(const NSymElem& f, const NSymElem& g);

// Deconcatenation-type coproduct: componentwise splits with zeros dropped.
NSymTensor coproduct(const NSymElem& f);

// Projection onto Lambda: X_alpha -> h of the sorted composition.
SymElem project_pi(const NSymElem& f);

// psi(X_(a_1,...,a_r)) = X_(a_1) # ... # X_(a_r), and its inverse via
// triangularity.
NSymElem iso_psi(const NSymElem& f);
NSymElem iso_psi_inverse(const NSymElem& f);

// Antipode of (Sigma, #, Delta), by the connected-graded recursion on the
// coproduct; the output is inhomogeneous in general.
NSymElem antipode_heisenberg(const NSymElem& f);

// f -> f * sum_n X_(n) truncated at the given degree.  Not multiplicative
// from # to the Solomon product; kept for the regression suite.
NSymElem iso_heisenberg_to_internal_truncated(const NSymElem& f, int max_degree);

NSymTensor tensor_heisenberg(const NSymTensor& s, const NSymTensor& t);
NSymTensor tensor_external(const NSymTensor& s, const NSymTensor& t);

// Projection applied to both tensor legs.
SymTensor project_pi_tensor(const NSymTensor& t);

} // namespace heis

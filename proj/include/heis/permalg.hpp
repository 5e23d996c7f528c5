#pragma once

#include "heis/combinat.hpp"
#include "heis/linear.hpp"
#include "heis/nsymfn.hpp"

namespace heis {

// Element of kS_infinity: finitely supported sum of permutations, mixed
// degrees allowed.
class PermElem {
public:
    PermElem() = default;
    explicit PermElem(LinearCombo<Permutation> terms) : terms_(std::move(terms)) {}

    static PermElem perm(std::vector<int> one_line) {
        return PermElem(LinearCombo<Permutation>(Permutation(std::move(one_line))));
    }
    static PermElem one() { return PermElem(LinearCombo<Permutation>(Permutation())); }

    const LinearCombo<Permutation>& terms() const& { return terms_; }
    LinearCombo<Permutation>& terms() & { return terms_; }
    LinearCombo<Permutation> terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.is_zero(); }

    PermElem component(int degree) const;
    int max_degree() const;

    friend bool operator==(const PermElem&, const PermElem&) = default;
    friend PermElem operator+(PermElem a, const PermElem& b) {
        a.terms_ += b.terms_;
        return a;
    }
    friend PermElem operator-(PermElem a, const PermElem& b) {
        a.terms_ -= b.terms_;
        return a;
    }
    friend PermElem operator*(const Rational& c, PermElem a) {
        a.terms_ *= c;
        return a;
    }

private:
    LinearCombo<Permutation> terms_;
};

using PermTensor = Tensor2<Permutation>;

// Group product extended bilinearly, zero across degrees; (st)(i) = s(t(i)).
PermElem compose_product(const PermElem& f, const PermElem& g);

// Malvenuto-Reutenauer product: s * t = sum over (p,q)-shuffles of
// xi(s x t).
PermElem mr_product(const PermElem& f, const PermElem& g);

// Heisenberg product of permutations:
//   s # t = sum_n sum_{xi in Sh(p,n-p), eta in Sh(p+q-n,n-q)}
//           xi ((s eta) x Id_{n-p}) beta_{2n-p-q,p+q-n} (Id_{n-q} x t).
PermElem heisenberg(const PermElem& f, const PermElem& g);

// Coproduct: s = (s_p x s'_q) xi^{-1} with xi the sorted-preimage shuffle;
// Delta(s) = sum_p s_p (x) s'_q.
PermTensor coproduct(const PermElem& f);

// X_alpha -> sum of permutations with descent set inside the subset of alpha.
PermElem embed_descents(const NSymElem& f);

PermTensor tensor_compose(const PermTensor& s, const PermTensor& t);
PermTensor tensor_mr(const PermTensor& s, const PermTensor& t);

} // namespace heis

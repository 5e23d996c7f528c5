#pragma once

#include "heis/combinat.hpp"
#include "heis/linear.hpp"
#include "heis/nsymfn.hpp"

#include <vector>

namespace heis {

// Quasi-symmetric function in the monomial basis M_alpha.
class QSymElem {
public:
    QSymElem() = default;
    explicit QSymElem(LinearCombo<Composition> terms) : terms_(std::move(terms)) {}

    static QSymElem M(std::vector<int> index) {
        return QSymElem(LinearCombo<Composition>(Composition(std::move(index))));
    }
    static QSymElem one() { return QSymElem(LinearCombo<Composition>(Composition())); }

    const LinearCombo<Composition>& terms() const& { return terms_; }
    LinearCombo<Composition>& terms() & { return terms_; }
    LinearCombo<Composition> terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.is_zero(); }

    QSymElem truncate(int max_degree) const;

    friend bool operator==(const QSymElem&, const QSymElem&) = default;
    friend QSymElem operator+(QSymElem a, const QSymElem& b) {
        a.terms_ += b.terms_;
        return a;
    }
    friend QSymElem operator-(QSymElem a, const QSymElem& b) {
        a.terms_ -= b.terms_;
        return a;
    }
    friend QSymElem operator*(const Rational& c, QSymElem a) {
        a.terms_ *= c;
        return a;
    }

private:
    LinearCombo<Composition> terms_;
};

using QSymTensor = Tensor2<Composition>;

// Quasi-shuffle product, dual to the coproduct of Sigma:
// the coefficient of M_gamma in M_alpha M_beta is the coefficient of
// X_alpha (x) X_beta in Delta(X_gamma).
QSymElem product(const QSymElem& f, const QSymElem& g);

// Heisenberg coproduct: Delta_#(M_gamma) counts margin matrices with
// row-major reading gamma.
QSymTensor heisenberg_coproduct(const QSymElem& f);

// Classical coproducts: external (deconcatenation, dual of *) and internal
// (dual of the Solomon product).
QSymTensor external_coproduct(const QSymElem& f);
QSymTensor internal_coproduct(const QSymElem& f);

// Antipode of (QSym, ., Delta_#), via duality with the antipode of
// (Sigma, #, Delta); lands in the completion, so the output degree is capped.
QSymElem antipode_heisenberg(const QSymElem& f, int max_degree);

// Transpose of psi: Sigma-side psi(X_beta) coefficients, output capped.
QSymElem iso_dual_psi(const QSymElem& f, int max_degree);

QSymTensor tensor_product(const QSymTensor& s, const QSymTensor& t);

// Pairing <M_alpha, X_beta> = delta, extended bilinearly.
Rational pairing(const QSymElem& f, const NSymElem& u);
Rational tensor_pairing(const QSymTensor& f, const NSymTensor& u);

// ---------------------------------------------------------------------------
// Alphabet calculus.  A formal alphabet is a finite totally ordered list of
// letters; each letter carries a sign and a multiset of base-variable
// factors (empty for the adjoined idempotent, which evaluates to 1).
// Monomial evaluation runs over weakly increasing chains where equal
// consecutive letters are allowed exactly at negative letters; a positive
// alphabet therefore sums over strictly increasing chains and a negated one
// over weakly decreasing chains with sign (-1)^r.

class OrderedAlphabet {
public:
    struct Letter {
        int sign = 1;
        std::vector<int> factors; // base-variable ids, with multiplicity
        int degree() const { return static_cast<int>(factors.size()); }
    };

    static OrderedAlphabet base(int k);
    // Disjoint union: every letter of a precedes every letter of b.
    static OrderedAlphabet sum(const OrderedAlphabet& a, const OrderedAlphabet& b);
    // Cartesian product under reverse lexicographic order.
    static OrderedAlphabet product(const OrderedAlphabet& a, const OrderedAlphabet& b);
    // Adjoins the idempotent x_0, smaller than all other letters.
    static OrderedAlphabet one_plus(const OrderedAlphabet& a);
    // (1+a)(1+b) - 1, the alphabet a + b + ab of the Heisenberg coproduct.
    static OrderedAlphabet heisenberg_sum(const OrderedAlphabet& a, const OrderedAlphabet& b);
    // exp a: strictly increasing tuples of length 1..max_level, reverse lex.
    static OrderedAlphabet divided_powers(const OrderedAlphabet& a, int max_level);
    // a*: all tuples of length 1..max_level, reverse lex.
    static OrderedAlphabet star(const OrderedAlphabet& a, int max_level);
    // Opposite alphabet: reversed order, flipped signs.
    static OrderedAlphabet negate(const OrderedAlphabet& a);

    const std::vector<Letter>& letters() const { return letters_; }
    int arity() const { return arity_; } // number of base variables

private:
    OrderedAlphabet(std::vector<Letter> letters, int arity)
        : letters_(std::move(letters)), arity_(arity) {}

    std::vector<Letter> letters_;
    int arity_ = 0;
};

// Exact evaluation of f on the alphabet at a rational point (one value per
// base variable).  A non-negative degree_cap keeps only monomials of total
// degree <= degree_cap, which is how completion-valued identities are
// compared at finite truncation.
Rational evaluate(const QSymElem& f, const OrderedAlphabet& a,
                  const std::vector<Rational>& point, int degree_cap = -1);

} // namespace heis

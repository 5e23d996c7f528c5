#pragma once

#include "heis/combinat.hpp"
#include "heis/linear.hpp"
#include "heis/nsymfn.hpp"
#include "heis/permalg.hpp"

#include <functional>

namespace heis {

// Basis word of T(V) over a finite alphabet; letters are 1-based indices.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {
        for (int l : letters_)
            if (l < 1) throw std::invalid_argument("word letters are 1-based");
    }

    static Word staircase(int n) {
        std::vector<int> l(n);
        for (int i = 0; i < n; ++i) l[i] = i + 1;
        return Word(std::move(l));
    }

    const std::vector<int>& letters() const { return letters_; }
    int degree() const { return static_cast<int>(letters_.size()); }

    Word concat(const Word& other) const {
        std::vector<int> l = letters_;
        l.insert(l.end(), other.letters_.begin(), other.letters_.end());
        return Word(std::move(l));
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.letters_.size() != b.letters_.size())
            return a.letters_.size() <=> b.letters_.size();
        return a.letters_ <=> b.letters_;
    }

private:
    std::vector<int> letters_;
};

using WordSum = LinearCombo<Word>;
using WordTensor = Tensor2<Word>;

// Unshuffle coproduct of T(V): sum over position subsets, 2^n terms.
WordTensor word_coproduct(const Word& w);

// Degree-preserving endomorphism of the word space, evaluated on demand.
class GradedEndo {
public:
    using Action = std::function<WordSum(const Word&)>;

    GradedEndo(int alphabet_size, Action action)
        : alphabet_size_(alphabet_size), action_(std::move(action)) {}

    int alphabet_size() const { return alphabet_size_; }

    WordSum apply(const Word& w) const;
    WordSum apply(const WordSum& s) const;

private:
    int alphabet_size_;
    Action action_;
};

// The unit iota.eps of the Heisenberg product: projection onto degree 0.
GradedEndo unit_endo(int alphabet_size);

// Right action of a permutation on its own degree, zero elsewhere.
GradedEndo psi_action(const Permutation& s, int alphabet_size);
GradedEndo psi_action(const PermElem& f, int alphabet_size);

// g o f (apply f first).
GradedEndo compose_endo(const GradedEndo& outer, const GradedEndo& inner);

// Convolution m (f (x) g) Delta.
GradedEndo convolution(const GradedEndo& f, const GradedEndo& g);

// (f # g)(h) = sum f(h_1)_2 . g(h_2 . f(h_1)_1).
GradedEndo heisenberg(const GradedEndo& f, const GradedEndo& g);

// Applies the smash product of the Psi-images to the staircase word 1..n and
// compares the permutation read-off with the degree-n component of the
// combinatorial Heisenberg product of permutations.
bool verify_schur_weyl(const Permutation& s, const Permutation& t, int n,
                       int alphabet_size);

// True iff Psi(embed(f)) maps each probe word into the span of
// rearrangements of its letters.
bool check_gr_invariance(const NSymElem& f, const std::vector<Word>& words,
                         int alphabet_size);

} // namespace heis

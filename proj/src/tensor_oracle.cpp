#include "heis/tensor_oracle.hpp"

#include <algorithm>

namespace heis {

WordTensor word_coproduct(const Word& w) {
    WordTensor out;
    const int n = w.degree();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> left, right;
        for (int i = 0; i < n; ++i)
            ((mask >> i) & 1u ? left : right).push_back(w.letters()[i]);
        out.add({Word(std::move(left)), Word(std::move(right))}, 1);
    }
    return out;
}

WordSum GradedEndo::apply(const Word& w) const {
    for (int l : w.letters())
        if (l > alphabet_size_) throw std::invalid_argument("letter outside the alphabet");
    return action_(w);
}

WordSum GradedEndo::apply(const WordSum& s) const {
    WordSum out;
    for (const auto& [w, c] : s.terms()) {
        WordSum img = apply(w);
        img *= c;
        out += img;
    }
    return out;
}

GradedEndo unit_endo(int alphabet_size) {
    return GradedEndo(alphabet_size, [](const Word& w) {
        return w.degree() == 0 ? WordSum(w) : WordSum();
    });
}

GradedEndo psi_action(const Permutation& s, int alphabet_size) {
    return GradedEndo(alphabet_size, [s](const Word& w) {
        if (w.degree() != s.degree()) return WordSum();
        std::vector<int> letters(w.degree());
        for (int i = 1; i <= w.degree(); ++i) letters[i - 1] = w.letters()[s(i) - 1];
        return WordSum(Word(std::move(letters)));
    });
}

GradedEndo psi_action(const PermElem& f, int alphabet_size) {
    return GradedEndo(alphabet_size, [f](const Word& w) {
        WordSum out;
        for (const auto& [s, c] : f.terms().terms()) {
            if (s.degree() != w.degree()) continue;
            std::vector<int> letters(w.degree());
            for (int i = 1; i <= w.degree(); ++i) letters[i - 1] = w.letters()[s(i) - 1];
            out.add(Word(std::move(letters)), c);
        }
        return out;
    });
}

GradedEndo compose_endo(const GradedEndo& outer, const GradedEndo& inner) {
    return GradedEndo(outer.alphabet_size(), [outer, inner](const Word& w) {
        return outer.apply(inner.apply(w));
    });
}

GradedEndo convolution(const GradedEndo& f, const GradedEndo& g) {
    return GradedEndo(f.alphabet_size(), [f, g](const Word& w) {
        WordSum out;
        for (const auto& [lr, c] : word_coproduct(w).terms()) {
            const WordSum fs = f.apply(lr.first);
            if (fs.is_zero()) continue;
            const WordSum gs = g.apply(lr.second);
            for (const auto& [fw, cf] : fs.terms())
                for (const auto& [gw, cg] : gs.terms())
                    out.add(fw.concat(gw), c * cf * cg);
        }
        return out;
    });
}

GradedEndo heisenberg(const GradedEndo& f, const GradedEndo& g) {
    return GradedEndo(f.alphabet_size(), [f, g](const Word& w) {
        WordSum out;
        for (const auto& [h12, c] : word_coproduct(w).terms()) {
            const WordSum fh1 = f.apply(h12.first);
            for (const auto& [u, cu] : fh1.terms()) {
                for (const auto& [u12, c2] : word_coproduct(u).terms()) {
                    const WordSum gs = g.apply(h12.second.concat(u12.first));
                    for (const auto& [gw, cg] : gs.terms())
                        out.add(u12.second.concat(gw), c * cu * c2 * cg);
                }
            }
        }
        return out;
    });
}

bool verify_schur_weyl(const Permutation& s, const Permutation& t, int n,
                       int alphabet_size) {
    const int p = s.degree(), q = t.degree();
    if (n < std::max(p, q) || n > p + q || alphabet_size < n)
        throw std::invalid_argument("verify_schur_weyl: invalid degree window");
    const GradedEndo smash =
        heisenberg(psi_action(s, alphabet_size), psi_action(t, alphabet_size));
    const WordSum image = smash.apply(Word::staircase(n));

    LinearCombo<Permutation> read_off;
    for (const auto& [w, c] : image.terms()) {
        if (w.degree() != n) return false;
        std::vector<int> seen(n + 1, 0);
        for (int l : w.letters()) {
            if (l > n || seen[l]) return false;
            seen[l] = 1;
        }
        read_off.add(Permutation(w.letters()), c);
    }
    const PermElem expected =
        heisenberg(PermElem(LinearCombo<Permutation>(s)), PermElem(LinearCombo<Permutation>(t)))
            .component(n);
    return read_off == expected.terms();
}

bool check_gr_invariance(const NSymElem& f, const std::vector<Word>& words,
                         int alphabet_size) {
    const GradedEndo endo = psi_action(embed_descents(f), alphabet_size);
    for (const Word& w : words) {
        std::vector<int> base = w.letters();
        std::sort(base.begin(), base.end());
        for (const auto& [img, c] : endo.apply(w).terms()) {
            std::vector<int> letters = img.letters();
            std::sort(letters.begin(), letters.end());
            if (letters != base) return false;
        }
    }
    return true;
}

} // namespace heis

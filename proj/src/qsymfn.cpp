#include "heis/qsymfn.hpp"

#include <algorithm>
#include <stdexcept>

namespace heis {

namespace {

LinearCombo<Composition> quasi_shuffle_pair(const Composition& a, const Composition& b) {
    LinearCombo<Composition> out;
    for (const Composition& g : compositions_of(a.weight() + b.weight())) {
        const Rational c = coproduct(NSymElem(LinearCombo<Composition>(g)))
                               .coefficient({a, b});
        if (c != 0) out.add(g, c);
    }
    return out;
}

// All (alpha, beta) with max(|alpha|,|beta|) <= n <= |alpha|+|beta| paired
// with the count of matrices in M^n_{alpha,beta} reading off gamma.
QSymTensor heisenberg_coproduct_basis(const Composition& gamma) {
    QSymTensor out;
    const int n = gamma.weight();
    for (int p = 0; p <= n; ++p) {
        for (int q = std::max(0, n - p); q <= n; ++q) {
            for (const Composition& alpha : compositions_of(p)) {
                for (const Composition& beta : compositions_of(q)) {
                    int count = 0;
                    for (const MarginMatrix& m : enumerate_margin_matrices(alpha, beta, n))
                        if (matrix_composition(m) == gamma) ++count;
                    if (count) out.add({alpha, beta}, count);
                }
            }
        }
    }
    return out;
}

} // namespace

QSymElem QSymElem::truncate(int max_degree) const {
    return QSymElem(terms_.filter_degree([](const Composition& a) { return a.weight(); },
                                         [max_degree](int d) { return d <= max_degree; }));
}

QSymElem product(const QSymElem& f, const QSymElem& g) {
    return QSymElem(bilinear<LinearCombo<Composition>>(f.terms(), g.terms(), quasi_shuffle_pair));
}

QSymTensor heisenberg_coproduct(const QSymElem& f) {
    QSymTensor out;
    for (const auto& [gamma, c] : f.terms().terms()) {
        QSymTensor piece = heisenberg_coproduct_basis(gamma);
        piece *= c;
        out += piece;
    }
    return out;
}

QSymTensor external_coproduct(const QSymElem& f) {
    QSymTensor out;
    for (const auto& [gamma, c] : f.terms().terms()) {
        const auto& parts = gamma.parts();
        for (size_t cut = 0; cut <= parts.size(); ++cut) {
            Composition left(std::vector<int>(parts.begin(), parts.begin() + cut));
            Composition right(std::vector<int>(parts.begin() + cut, parts.end()));
            out.add({std::move(left), std::move(right)}, c);
        }
    }
    return out;
}

QSymTensor internal_coproduct(const QSymElem& f) {
    QSymTensor out;
    for (const auto& [gamma, c] : f.terms().terms()) {
        const int n = gamma.weight();
        for (const Composition& alpha : compositions_of(n)) {
            for (const Composition& beta : compositions_of(n)) {
                int count = 0;
                for (const MarginMatrix& m : enumerate_margin_matrices(alpha, beta, n))
                    if (matrix_composition(m) == gamma) ++count;
                if (count) out.add({alpha, beta}, c * count);
            }
        }
    }
    return out;
}

QSymElem antipode_heisenberg(const QSymElem& f, int max_degree) {
    // <S(M_gamma), X_beta> = <M_gamma, S(X_beta)>.
    std::vector<std::pair<Composition, NSymElem>> table;
    for (int d = 0; d <= max_degree; ++d)
        for (const Composition& beta : compositions_of(d))
            table.emplace_back(beta, antipode_heisenberg(NSymElem(LinearCombo<Composition>(beta))));
    QSymElem out;
    for (const auto& [gamma, c] : f.terms().terms())
        for (const auto& [beta, s] : table) out.terms().add(beta, c * s.terms().coefficient(gamma));
    return out;
}

QSymElem iso_dual_psi(const QSymElem& f, int max_degree) {
    QSymElem out;
    for (int d = 0; d <= max_degree; ++d) {
        for (const Composition& beta : compositions_of(d)) {
            const NSymElem image = iso_psi(NSymElem(LinearCombo<Composition>(beta)));
            for (const auto& [gamma, c] : f.terms().terms())
                out.terms().add(beta, c * image.terms().coefficient(gamma));
        }
    }
    return out;
}

QSymTensor tensor_product(const QSymTensor& s, const QSymTensor& t) {
    auto rule = [](const Composition& a, const Composition& b) {
        return quasi_shuffle_pair(a, b);
    };
    return tensor_product_componentwise(s, t, rule, rule);
}

Rational pairing(const QSymElem& f, const NSymElem& u) {
    Rational out = 0;
    for (const auto& [a, c] : f.terms().terms()) out += c * u.terms().coefficient(a);
    return out;
}

Rational tensor_pairing(const QSymTensor& f, const NSymTensor& u) {
    Rational out = 0;
    for (const auto& [ab, c] : f.terms()) out += c * u.coefficient(ab);
    return out;
}

// --------------------------------------------------------------------------
// Alphabets.

OrderedAlphabet OrderedAlphabet::base(int k) {
    if (k < 0) throw std::invalid_argument("base alphabet needs k >= 0 variables");
    std::vector<Letter> letters(k);
    for (int i = 0; i < k; ++i) letters[i].factors = {i};
    return OrderedAlphabet(std::move(letters), k);
}

OrderedAlphabet OrderedAlphabet::sum(const OrderedAlphabet& a, const OrderedAlphabet& b) {
    std::vector<Letter> letters = a.letters_;
    for (Letter l : b.letters_) {
        for (int& id : l.factors) id += a.arity_;
        letters.push_back(std::move(l));
    }
    return OrderedAlphabet(std::move(letters), a.arity_ + b.arity_);
}

OrderedAlphabet OrderedAlphabet::product(const OrderedAlphabet& a, const OrderedAlphabet& b) {
    // Reverse lexicographic: the b-coordinate dominates.
    std::vector<Letter> letters;
    for (const Letter& lb : b.letters_) {
        for (const Letter& la : a.letters_) {
            Letter l;
            l.sign = la.sign * lb.sign;
            l.factors = la.factors;
            for (int id : lb.factors) l.factors.push_back(id + a.arity_);
            std::sort(l.factors.begin(), l.factors.end());
            letters.push_back(std::move(l));
        }
    }
    return OrderedAlphabet(std::move(letters), a.arity_ + b.arity_);
}

OrderedAlphabet OrderedAlphabet::one_plus(const OrderedAlphabet& a) {
    std::vector<Letter> letters;
    letters.push_back(Letter{}); // the idempotent: sign +1, no factors
    letters.insert(letters.end(), a.letters_.begin(), a.letters_.end());
    return OrderedAlphabet(std::move(letters), a.arity_);
}

OrderedAlphabet OrderedAlphabet::heisenberg_sum(const OrderedAlphabet& a,
                                                const OrderedAlphabet& b) {
    OrderedAlphabet prod = product(one_plus(a), one_plus(b));
    std::vector<Letter> letters;
    for (Letter& l : prod.letters_)
        if (!l.factors.empty()) letters.push_back(std::move(l));
    return OrderedAlphabet(std::move(letters), prod.arity_);
}

namespace {

// Tuples compare right to left; on a full-prefix tie the shorter tuple wins.
// This is the refinement under which exp(X+Y) = (1+exp X)(1+exp Y) - 1 holds
// as ordered sets.
bool reverse_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = a.size(), j = b.size();
    while (i > 0 && j > 0) {
        --i;
        --j;
        if (a[i] != b[j]) return a[i] < b[j];
    }
    return a.size() < b.size();
}

OrderedAlphabet::Letter tuple_letter(const std::vector<int>& tuple,
                                     const std::vector<OrderedAlphabet::Letter>& base) {
    OrderedAlphabet::Letter l;
    for (int idx : tuple) {
        l.sign *= base[idx].sign;
        l.factors.insert(l.factors.end(), base[idx].factors.begin(), base[idx].factors.end());
    }
    std::sort(l.factors.begin(), l.factors.end());
    return l;
}

} // namespace

OrderedAlphabet OrderedAlphabet::divided_powers(const OrderedAlphabet& a, int max_level) {
    if (max_level < 1) throw std::invalid_argument("divided_powers needs a level cap >= 1");
    const int k = static_cast<int>(a.letters_.size());
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from) -> void {
        if (!cur.empty()) tuples.push_back(cur);
        if (static_cast<int>(cur.size()) == max_level) return;
        for (int i = from; i < k; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(tuples.begin(), tuples.end(), reverse_lex_less);
    std::vector<Letter> letters;
    for (const auto& t : tuples) letters.push_back(tuple_letter(t, a.letters_));
    return OrderedAlphabet(std::move(letters), a.arity_);
}

OrderedAlphabet OrderedAlphabet::star(const OrderedAlphabet& a, int max_level) {
    if (max_level < 1) throw std::invalid_argument("star needs a level cap >= 1");
    const int k = static_cast<int>(a.letters_.size());
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    auto rec = [&](auto&& self) -> void {
        if (!cur.empty()) tuples.push_back(cur);
        if (static_cast<int>(cur.size()) == max_level) return;
        for (int i = 0; i < k; ++i) {
            cur.push_back(i);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    std::sort(tuples.begin(), tuples.end(), reverse_lex_less);
    std::vector<Letter> letters;
    for (const auto& t : tuples) letters.push_back(tuple_letter(t, a.letters_));
    return OrderedAlphabet(std::move(letters), a.arity_);
}

OrderedAlphabet OrderedAlphabet::negate(const OrderedAlphabet& a) {
    std::vector<Letter> letters(a.letters_.rbegin(), a.letters_.rend());
    for (Letter& l : letters) l.sign = -l.sign;
    return OrderedAlphabet(std::move(letters), a.arity_);
}

Rational evaluate(const QSymElem& f, const OrderedAlphabet& a,
                  const std::vector<Rational>& point, int degree_cap) {
    if (static_cast<int>(point.size()) != a.arity())
        throw std::invalid_argument("evaluate: point has the wrong arity");
    std::vector<Rational> values;
    values.reserve(a.letters().size());
    for (const auto& l : a.letters()) {
        Rational v = 1;
        for (int id : l.factors) v *= point[id];
        values.push_back(std::move(v));
    }

    Rational total = 0;
    for (const auto& [gamma, coeff] : f.terms().terms()) {
        const auto& parts = gamma.parts();
        Rational sum = 0;
        // Chains: weakly increasing, equality allowed only at negative letters.
        auto rec = [&](auto&& self, size_t part_idx, int from, Rational acc, int deg) -> void {
            if (part_idx == parts.size()) {
                sum += acc;
                return;
            }
            for (int i = from; i < static_cast<int>(a.letters().size()); ++i) {
                const auto& l = a.letters()[i];
                const int d = deg + parts[part_idx] * l.degree();
                if (degree_cap >= 0 && d > degree_cap) continue;
                Rational v = acc * Rational(l.sign);
                for (int e = 0; e < parts[part_idx]; ++e) v *= values[i];
                self(self, part_idx + 1, l.sign < 0 ? i : i + 1, std::move(v), d);
            }
        };
        rec(rec, 0, 0, Rational(1), 0);
        total += coeff * sum;
    }
    return total;
}

} // namespace heis

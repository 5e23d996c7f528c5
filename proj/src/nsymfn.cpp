#include "heis/nsymfn.hpp"

#include <algorithm>

namespace heis {

namespace {

LinearCombo<Composition> concat_rule(const Composition& a, const Composition& b) {
    return LinearCombo<Composition>(a.concat(b));
}

LinearCombo<Composition> heisenberg_pair(const Composition& a, const Composition& b) {
    LinearCombo<Composition> out;
    const int p = a.weight(), q = b.weight();
    for (int n = std::max(p, q); n <= p + q; ++n)
        for (const MarginMatrix& m : enumerate_margin_matrices(a, b, n))
            out.add(matrix_composition(m), 1);
    return out;
}

LinearCombo<Composition> internal_pair(const Composition& a, const Composition& b) {
    LinearCombo<Composition> out;
    if (a.weight() != b.weight()) return out;
    for (const MarginMatrix& m : enumerate_margin_matrices(a, b, a.weight()))
        out.add(matrix_composition(m), 1);
    return out;
}

NSymElem antipode_basis(const Composition& alpha,
                        std::map<Composition, NSymElem>& cache) {
    auto it = cache.find(alpha);
    if (it != cache.end()) return it->second;
    NSymElem s;
    if (alpha.weight() == 0) {
        s = NSymElem::one();
    } else {
        // S(x) = -x - sum of S(x_1) # x_2 over the middle coproduct terms.
        s = Rational(-1) * NSymElem(LinearCombo<Composition>(alpha));
        for (const auto& [lr, c] : coproduct(NSymElem(LinearCombo<Composition>(alpha))).terms()) {
            const auto& [left, right] = lr;
            if (left.weight() == 0 || left.weight() == alpha.weight()) continue;
            NSymElem piece = heisenberg(antipode_basis(left, cache),
                                        NSymElem(LinearCombo<Composition>(right)));
            s = s - c * piece;
        }
    }
    cache.emplace(alpha, s);
    return s;
}

} // namespace

NSymElem NSymElem::component(int degree) const {
    return NSymElem(terms_.filter_degree([](const Composition& a) { return a.weight(); },
                                         [degree](int d) { return d == degree; }));
}

NSymElem NSymElem::truncate(int max_degree) const {
    return NSymElem(terms_.filter_degree([](const Composition& a) { return a.weight(); },
                                         [max_degree](int d) { return d <= max_degree; }));
}

int NSymElem::max_degree() const {
    int d = 0;
    for (const auto& [a, c] : terms_.terms()) d = std::max(d, a.weight());
    return d;
}

NSymElem external_product(const NSymElem& f, const NSymElem& g) {
    return NSymElem(bilinear<LinearCombo<Composition>>(f.terms(), g.terms(), concat_rule));
}

NSymElem heisenberg(const NSymElem& f, const NSymElem& g) {
    return NSymElem(bilinear<LinearCombo<Composition>>(f.terms(), g.terms(), heisenberg_pair));
}

NSymElem internal_product(const NSymElem& f, const NSymElem& g) {
    return NSymElem(bilinear<LinearCombo<Composition>>(f.terms(), g.terms(), internal_pair));
}

NSymTensor coproduct(const NSymElem& f) {
    NSymTensor out;
    for (const auto& [alpha, c] : f.terms().terms()) {
        const auto& parts = alpha.parts();
        std::vector<int> left, right;
        auto rec = [&](auto&& self, size_t i) -> void {
            if (i == parts.size()) {
                out.add({Composition(left), Composition(right)}, c);
                return;
            }
            for (int b = 0; b <= parts[i]; ++b) {
                if (b > 0) left.push_back(b);
                if (b < parts[i]) right.push_back(parts[i] - b);
                self(self, i + 1);
                if (b > 0) left.pop_back();
                if (b < parts[i]) right.pop_back();
            }
        };
        rec(rec, 0);
    }
    return out;
}

SymElem project_pi(const NSymElem& f) {
    LinearCombo<Partition> out;
    for (const auto& [alpha, c] : f.terms().terms()) out.add(Partition(alpha.parts()), c);
    return SymElem(SymBasis::H, std::move(out));
}

NSymElem iso_psi(const NSymElem& f) {
    NSymElem out;
    for (const auto& [alpha, c] : f.terms().terms()) {
        NSymElem acc = NSymElem::one();
        for (int a : alpha.parts()) acc = heisenberg(acc, NSymElem::X({a}));
        out = out + c * acc;
    }
    return out;
}

NSymElem iso_psi_inverse(const NSymElem& f) {
    LinearCombo<Composition> rest = f.terms();
    NSymElem out;
    while (!rest.is_zero()) {
        const auto [top, c] = *rest.terms().rbegin();
        out = out + NSymElem(LinearCombo<Composition>(top, c));
        NSymElem image = iso_psi(NSymElem(LinearCombo<Composition>(top, c)));
        rest -= image.terms();
    }
    return out;
}

NSymElem antipode_heisenberg(const NSymElem& f) {
    std::map<Composition, NSymElem> cache;
    NSymElem out;
    for (const auto& [alpha, c] : f.terms().terms())
        out = out + c * antipode_basis(alpha, cache);
    return out;
}

NSymElem iso_heisenberg_to_internal_truncated(const NSymElem& f, int max_degree) {
    NSymElem out;
    for (const auto& [alpha, c] : f.terms().terms()) {
        for (int n = 0; alpha.weight() + n <= max_degree; ++n) {
            Composition idx = n > 0 ? alpha.concat(Composition({n})) : alpha;
            out.terms().add(idx, c);
        }
    }
    return out;
}

NSymTensor tensor_heisenberg(const NSymTensor& s, const NSymTensor& t) {
    return tensor_product_componentwise(s, t, heisenberg_pair, heisenberg_pair);
}

NSymTensor tensor_external(const NSymTensor& s, const NSymTensor& t) {
    return tensor_product_componentwise(s, t, concat_rule, concat_rule);
}

SymTensor project_pi_tensor(const NSymTensor& t) {
    SymTensor out;
    for (const auto& [lr, c] : t.terms())
        out.add({Partition(lr.first.parts()), Partition(lr.second.parts())}, c);
    return out;
}

} // namespace heis

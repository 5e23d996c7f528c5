#include "heis/permalg.hpp"

#include <algorithm>

namespace heis {

namespace {

LinearCombo<Permutation> compose_pair(const Permutation& s, const Permutation& t) {
    if (s.degree() != t.degree()) return {};
    return LinearCombo<Permutation>(s.compose(t));
}

LinearCombo<Permutation> mr_pair(const Permutation& s, const Permutation& t) {
    LinearCombo<Permutation> out;
    const Permutation st = parabolic_embed(s, t);
    for (const Permutation& xi : shuffles(s.degree(), t.degree()))
        out.add(xi.compose(st), 1);
    return out;
}

LinearCombo<Permutation> heisenberg_pair(const Permutation& s, const Permutation& t) {
    LinearCombo<Permutation> out;
    const int p = s.degree(), q = t.degree();
    for (int n = std::max(p, q); n <= p + q; ++n) {
        const Permutation beta0 = beta_max_shuffle(2 * n - p - q, p + q - n);
        const Permutation right = parabolic_embed(Permutation::identity(n - q), t);
        const Permutation fixed = beta0.compose(right);
        for (const Permutation& eta : shuffles(p + q - n, n - q)) {
            const Permutation mid =
                parabolic_embed(s.compose(eta), Permutation::identity(n - p)).compose(fixed);
            for (const Permutation& xi : shuffles(p, n - p)) out.add(xi.compose(mid), 1);
        }
    }
    return out;
}

} // namespace

PermElem PermElem::component(int degree) const {
    return PermElem(terms_.filter_degree([](const Permutation& s) { return s.degree(); },
                                         [degree](int d) { return d == degree; }));
}

int PermElem::max_degree() const {
    int d = 0;
    for (const auto& [s, c] : terms_.terms()) d = std::max(d, s.degree());
    return d;
}

PermElem compose_product(const PermElem& f, const PermElem& g) {
    return PermElem(bilinear<LinearCombo<Permutation>>(f.terms(), g.terms(), compose_pair));
}

PermElem mr_product(const PermElem& f, const PermElem& g) {
    return PermElem(bilinear<LinearCombo<Permutation>>(f.terms(), g.terms(), mr_pair));
}

PermElem heisenberg(const PermElem& f, const PermElem& g) {
    return PermElem(bilinear<LinearCombo<Permutation>>(f.terms(), g.terms(), heisenberg_pair));
}

PermTensor coproduct(const PermElem& f) {
    PermTensor out;
    for (const auto& [s, c] : f.terms().terms()) {
        const int n = s.degree();
        for (int p = 0; p <= n; ++p) {
            std::vector<int> low, high;
            for (int i = 1; i <= n; ++i) (s(i) <= p ? low : high).push_back(i);
            std::vector<int> left, right;
            for (int i : low) left.push_back(s(i));
            for (int i : high) right.push_back(s(i));
            out.add({Permutation(standardize(left)), Permutation(standardize(right))}, c);
        }
    }
    return out;
}

PermElem embed_descents(const NSymElem& f) {
    PermElem out;
    std::map<Composition, std::vector<Permutation>> cache;
    for (const auto& [alpha, c] : f.terms().terms()) {
        auto it = cache.find(alpha);
        if (it == cache.end()) {
            std::vector<Permutation> basis;
            const std::set<int> allowed = composition_to_subset(alpha);
            for (const Permutation& s : permutations_of(alpha.weight())) {
                const std::set<int> des = descent_set(s);
                if (std::includes(allowed.begin(), allowed.end(), des.begin(), des.end()))
                    basis.push_back(s);
            }
            it = cache.emplace(alpha, std::move(basis)).first;
        }
        for (const Permutation& s : it->second) out.terms().add(s, c);
    }
    return out;
}

PermTensor tensor_compose(const PermTensor& s, const PermTensor& t) {
    return tensor_product_componentwise(s, t, compose_pair, compose_pair);
}

PermTensor tensor_mr(const PermTensor& s, const PermTensor& t) {
    return tensor_product_componentwise(s, t, mr_pair, mr_pair);
}

} // namespace heis

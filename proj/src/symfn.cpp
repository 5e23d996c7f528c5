#include "heis/symfn.hpp"

#include <algorithm>
#include <stdexcept>

namespace heis {

namespace {

void require_same_basis(const SymElem& f, const SymElem& g) {
    if (f.basis() != g.basis())
        throw std::invalid_argument("basis mismatch between h- and p-basis elements");
}

LinearCombo<Partition> concat_rule(const Partition& a, const Partition& b) {
    return LinearCombo<Partition>(concat_partitions(a, b));
}

// Sub-multisets gamma of the common parts of l and m, together with the count
// of ways to carve gamma out of each: prod_v C(mult_v(l), mult_v(gamma)).
struct CommonValue {
    int value;
    int mult_l;
    int mult_m;
};

std::vector<CommonValue> common_values(const Partition& l, const Partition& m) {
    std::vector<CommonValue> out;
    auto mult_of = [](const Partition& p, int v) {
        return static_cast<int>(std::count(p.parts().begin(), p.parts().end(), v));
    };
    for (size_t i = 0; i < l.parts().size(); ++i) {
        int v = l.parts()[i];
        if (i > 0 && l.parts()[i - 1] == v) continue;
        int mm = mult_of(m, v);
        if (mm > 0) out.push_back({v, mult_of(l, v), mm});
    }
    return out;
}

Partition remove_multiset(const Partition& from, const std::vector<int>& values) {
    std::vector<int> rest = from.parts();
    for (int v : values) {
        auto it = std::find(rest.begin(), rest.end(), v);
        rest.erase(it);
    }
    return Partition(std::move(rest));
}

LinearCombo<Partition> heisenberg_p_pair(const Partition& l, const Partition& m) {
    LinearCombo<Partition> out;
    const auto common = common_values(l, m);
    std::vector<int> gamma_mult(common.size(), 0);
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == common.size()) {
            std::vector<int> gamma;
            Integer ways = 1;
            for (size_t k = 0; k < common.size(); ++k) {
                for (int c = 0; c < gamma_mult[k]; ++c) gamma.push_back(common[k].value);
                ways *= binomial(common[k].mult_l, gamma_mult[k]);
                ways *= binomial(common[k].mult_m, gamma_mult[k]);
            }
            Partition g(gamma);
            Partition alpha = remove_multiset(l, gamma);
            Partition beta = remove_multiset(m, gamma);
            Rational coeff = Rational(ways * z_factor(g));
            out.add(concat_partitions(concat_partitions(alpha, g), beta), coeff);
            return;
        }
        for (int c = 0; c <= std::min(common[i].mult_l, common[i].mult_m); ++c) {
            gamma_mult[i] = c;
            self(self, i + 1);
        }
        gamma_mult[i] = 0;
    };
    rec(rec, 0);
    return out;
}

LinearCombo<Partition> heisenberg_h_pair(const Partition& a, const Partition& b) {
    LinearCombo<Partition> out;
    const Composition alpha = a.as_composition();
    const Composition beta = b.as_composition();
    const int p = alpha.weight(), q = beta.weight();
    for (int n = std::max(p, q); n <= p + q; ++n)
        for (const MarginMatrix& m : enumerate_margin_matrices(alpha, beta, n))
            out.add(matrix_partition(m), 1);
    return out;
}

// h_n = sum_{l |- n} p_l / z(l).
LinearCombo<Partition> h_generator_in_p(int n) {
    LinearCombo<Partition> out;
    for (const Partition& l : partitions_of(n)) out.add(l, Rational(1) / Rational(z_factor(l)));
    return out;
}

// Newton: p_n = n h_n - sum_{i=1}^{n-1} h_i * p_{n-i}, products by concatenation.
LinearCombo<Partition> p_generator_in_h(int n, std::vector<LinearCombo<Partition>>& cache) {
    if (n < static_cast<int>(cache.size())) return cache[n];
    for (int k = static_cast<int>(cache.size()); k <= n; ++k) {
        LinearCombo<Partition> pk(Partition({k}), Rational(k));
        for (int i = 1; i < k; ++i) {
            LinearCombo<Partition> piece =
                cache[k - i].map_basis([&](const Partition& mu) {
                    return LinearCombo<Partition>(concat_partitions(Partition({i}), mu));
                });
            pk -= piece;
        }
        cache.push_back(std::move(pk));
    }
    return cache[n];
}

} // namespace

SymElem SymElem::component(int degree) const {
    return SymElem(basis_, terms_.filter_degree([](const Partition& l) { return l.weight(); },
                                                [degree](int d) { return d == degree; }));
}

SymElem SymElem::truncate(int max_degree) const {
    return SymElem(basis_, terms_.filter_degree([](const Partition& l) { return l.weight(); },
                                                [max_degree](int d) { return d <= max_degree; }));
}

int SymElem::max_degree() const {
    int d = 0;
    for (const auto& [l, c] : terms_.terms()) d = std::max(d, l.weight());
    return d;
}

SymElem operator+(SymElem a, const SymElem& b) {
    require_same_basis(a, b);
    a.terms_ += b.terms_;
    return a;
}

SymElem operator-(SymElem a, const SymElem& b) {
    require_same_basis(a, b);
    a.terms_ -= b.terms_;
    return a;
}

SymElem external_product(const SymElem& f, const SymElem& g) {
    require_same_basis(f, g);
    auto terms = bilinear<LinearCombo<Partition>>(f.terms(), g.terms(), concat_rule);
    return SymElem(f.basis(), std::move(terms));
}

SymElem internal_product(const SymElem& f, const SymElem& g) {
    require_same_basis(f, g);
    if (f.basis() == SymBasis::H)
        return p_to_h(internal_product(h_to_p(f), h_to_p(g)));
    auto terms = bilinear<LinearCombo<Partition>>(
        f.terms(), g.terms(), [](const Partition& l, const Partition& m) {
            if (l != m) return LinearCombo<Partition>();
            return LinearCombo<Partition>(l, Rational(z_factor(l)));
        });
    return SymElem(SymBasis::P, std::move(terms));
}

SymElem heisenberg(const SymElem& f, const SymElem& g) {
    require_same_basis(f, g);
    auto rule = f.basis() == SymBasis::H ? heisenberg_h_pair : heisenberg_p_pair;
    auto terms = bilinear<LinearCombo<Partition>>(f.terms(), g.terms(), rule);
    return SymElem(f.basis(), std::move(terms));
}

SymElem heisenberg_via_zelevinski(const SymElem& f, const SymElem& g) {
    require_same_basis(f, g);
    const SymTensor df = coproduct(f);
    const SymTensor dg = coproduct(g);
    SymElem out(f.basis());
    for (const auto& [f12, cf] : df.terms()) {
        const SymElem f1(f.basis(), LinearCombo<Partition>(f12.first));
        const SymElem f2(f.basis(), LinearCombo<Partition>(f12.second));
        for (const auto& [g12, cg] : dg.terms()) {
            const SymElem g1(f.basis(), LinearCombo<Partition>(g12.first));
            const SymElem g2(f.basis(), LinearCombo<Partition>(g12.second));
            SymElem term =
                external_product(f1, external_product(internal_product(f2, g1), g2));
            out = out + (cf * cg) * term;
        }
    }
    return out;
}

SymTensor coproduct(const SymElem& f) {
    SymTensor out;
    for (const auto& [l, c] : f.terms().terms()) {
        if (f.basis() == SymBasis::H) {
            // Multiplicative extension of Delta(h_a) = sum_{i+j=a} h_i (x) h_j.
            SymTensor acc(std::pair<Partition, Partition>{Partition(), Partition()});
            for (int a : l.parts()) {
                SymTensor da;
                for (int i = 0; i <= a; ++i) {
                    Partition left = i > 0 ? Partition({i}) : Partition();
                    Partition right = i < a ? Partition({a - i}) : Partition();
                    da.add({left, right}, 1);
                }
                acc = tensor_product_componentwise(acc, da, concat_rule, concat_rule);
            }
            acc *= c;
            out += acc;
        } else {
            // p_n primitive: split the multiset, counting copy choices.
            std::vector<int> take;
            const auto& parts = l.parts();
            auto rec = [&](auto&& self, size_t i) -> void {
                if (i == parts.size()) {
                    std::vector<int> left, right;
                    Integer ways = 1;
                    size_t k = 0;
                    while (k < parts.size()) {
                        size_t j = k;
                        while (j < parts.size() && parts[j] == parts[k]) ++j;
                        int taken = 0;
                        for (size_t t = k; t < j; ++t) taken += take[t];
                        ways *= binomial(static_cast<int>(j - k), taken);
                        k = j;
                    }
                    for (size_t t = 0; t < parts.size(); ++t)
                        (take[t] ? left : right).push_back(parts[t]);
                    out.add({Partition(left), Partition(right)}, c * Rational(ways));
                    return;
                }
                // Within a run of equal parts keep the taken copies first, so
                // each multiset split is generated exactly once.
                for (int v = 1; v >= 0; --v) {
                    if (v == 1 && i > 0 && parts[i - 1] == parts[i] && take[i - 1] == 0)
                        continue;
                    take.push_back(v);
                    self(self, i + 1);
                    take.pop_back();
                }
            };
            rec(rec, 0);
        }
    }
    return out;
}

SymElem h_to_p(const SymElem& f) {
    if (f.basis() == SymBasis::P) return f;
    LinearCombo<Partition> out;
    for (const auto& [l, c] : f.terms().terms()) {
        LinearCombo<Partition> acc{Partition()};
        for (int a : l.parts())
            acc = bilinear<LinearCombo<Partition>>(acc, h_generator_in_p(a), concat_rule);
        acc *= c;
        out += acc;
    }
    return SymElem(SymBasis::P, std::move(out));
}

SymElem p_to_h(const SymElem& f) {
    if (f.basis() == SymBasis::H) return f;
    std::vector<LinearCombo<Partition>> cache;
    cache.push_back(LinearCombo<Partition>{Partition()}); // p_0 = 1
    LinearCombo<Partition> out;
    for (const auto& [l, c] : f.terms().terms()) {
        LinearCombo<Partition> acc{Partition()};
        for (int a : l.parts())
            acc = bilinear<LinearCombo<Partition>>(acc, p_generator_in_h(a, cache), concat_rule);
        acc *= c;
        out += acc;
    }
    return SymElem(SymBasis::H, std::move(out));
}

SymElem iso_external_to_heisenberg(const SymElem& f) {
    if (f.basis() != SymBasis::H)
        throw std::invalid_argument("iso_external_to_heisenberg acts on the h-basis");
    SymElem out(SymBasis::H);
    for (const auto& [l, c] : f.terms().terms()) {
        SymElem acc = SymElem::one(SymBasis::H);
        for (int a : l.parts()) acc = heisenberg(acc, SymElem::h({a}));
        out = out + c * acc;
    }
    return out;
}

SymElem iso_external_to_heisenberg_inverse(const SymElem& f) {
    if (f.basis() != SymBasis::H)
        throw std::invalid_argument("iso_external_to_heisenberg_inverse acts on the h-basis");
    // The map is triangular with unit diagonal: peel the top-degree term.
    LinearCombo<Partition> rest = f.terms();
    SymElem out(SymBasis::H);
    while (!rest.is_zero()) {
        const auto [top, c] = *rest.terms().rbegin();
        out = out + SymElem(SymBasis::H, LinearCombo<Partition>(top, c));
        SymElem image = iso_external_to_heisenberg(
            SymElem(SymBasis::H, LinearCombo<Partition>(top, c)));
        rest -= image.terms();
    }
    return out;
}

SymElem iso_heisenberg_to_internal_truncated(const SymElem& f, int max_degree) {
    SymElem out(f.basis());
    for (const auto& [l, c] : f.terms().terms()) {
        for (int n = 0; l.weight() + n <= max_degree; ++n) {
            Partition idx = n > 0 ? concat_partitions(l, Partition({n})) : l;
            out.terms().add(idx, c);
        }
    }
    return out;
}

SymTensor tensor_heisenberg(const SymTensor& s, const SymTensor& t, SymBasis basis) {
    auto rule = [basis](const Partition& a, const Partition& b) {
        SymElem fa(basis, LinearCombo<Partition>(a));
        SymElem fb(basis, LinearCombo<Partition>(b));
        return heisenberg(fa, fb).terms();
    };
    return tensor_product_componentwise(s, t, rule, rule);
}

SymTensor tensor_external(const SymTensor& s, const SymTensor& t, SymBasis) {
    return tensor_product_componentwise(s, t, concat_rule, concat_rule);
}

} // namespace heis

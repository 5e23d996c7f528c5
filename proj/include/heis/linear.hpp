#pragma once

#include "heis/rational.hpp"

#include <map>
#include <utility>

namespace heis {

// Finitely supported map from a basis type to exact rational coefficients.
// Zero coefficients are never stored; term order is the basis order, which is
// graded-lexicographic for every index type in this library.
template <typename B>
class LinearCombo {
public:
    using Terms = std::map<B, Rational>;

    LinearCombo() = default;
    explicit LinearCombo(const B& b) { terms_.emplace(b, 1); }
    LinearCombo(const B& b, Rational c) {
        if (c != 0) terms_.emplace(b, std::move(c));
    }

    static LinearCombo zero() { return LinearCombo(); }

    // Rvalue access returns by value so that iterating over the terms of a
    // temporary keeps them alive for the whole loop.
    const Terms& terms() const& { return terms_; }
    Terms terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    Rational coefficient(const B& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const B& b, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LinearCombo& operator+=(const LinearCombo& o) {
        for (const auto& [b, c] : o.terms_) add(b, c);
        return *this;
    }
    LinearCombo& operator-=(const LinearCombo& o) {
        for (const auto& [b, c] : o.terms_) add(b, -c);
        return *this;
    }
    LinearCombo& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, v] : terms_) v *= c;
        return *this;
    }

    friend LinearCombo operator+(LinearCombo a, const LinearCombo& b) { return a += b; }
    friend LinearCombo operator-(LinearCombo a, const LinearCombo& b) { return a -= b; }
    friend LinearCombo operator*(const Rational& c, LinearCombo a) { return a *= c; }
    friend LinearCombo operator-(LinearCombo a) { return a *= Rational(-1); }

    friend bool operator==(const LinearCombo&, const LinearCombo&) = default;

    // Applies f(basis) -> LinearCombo<B2> linearly.
    template <typename F>
    auto map_basis(F&& f) const {
        decltype(f(std::declval<const B&>())) out;
        for (const auto& [b, c] : terms_) {
            auto img = f(b);
            img *= c;
            out += img;
        }
        return out;
    }

    // Keeps terms whose degree (given by deg(basis)) satisfies pred.
    template <typename Deg, typename Pred>
    LinearCombo filter_degree(Deg&& deg, Pred&& pred) const {
        LinearCombo out;
        for (const auto& [b, c] : terms_)
            if (pred(deg(b))) out.add(b, c);
        return out;
    }

private:
    Terms terms_;
};

// Bilinear extension of a rule on basis pairs.
template <typename R, typename A, typename B, typename F>
R bilinear(const LinearCombo<A>& f, const LinearCombo<B>& g, F&& rule) {
    R out;
    for (const auto& [a, ca] : f.terms()) {
        for (const auto& [b, cb] : g.terms()) {
            auto piece = rule(a, b);
            piece *= ca * cb;
            out += piece;
        }
    }
    return out;
}

// Formal sums of tensors, represented as pair-indexed combinations.
template <typename B>
using Tensor2 = LinearCombo<std::pair<B, B>>;

template <typename B>
Tensor2<B> tensor(const LinearCombo<B>& f, const LinearCombo<B>& g) {
    Tensor2<B> out;
    for (const auto& [a, ca] : f.terms())
        for (const auto& [b, cb] : g.terms()) out.add({a, b}, ca * cb);
    return out;
}

// Componentwise product of tensors: (a (x) b) . (c (x) d) = f(a,c) (x) g(b,d),
// where f and g are basis-level rules returning combinations.
template <typename B, typename F, typename G>
Tensor2<B> tensor_product_componentwise(const Tensor2<B>& s, const Tensor2<B>& t,
                                        F&& left_rule, G&& right_rule) {
    Tensor2<B> out;
    for (const auto& [ab, c1] : s.terms()) {
        for (const auto& [cd, c2] : t.terms()) {
            auto left = left_rule(ab.first, cd.first);
            auto right = right_rule(ab.second, cd.second);
            const Rational scale = c1 * c2;
            for (const auto& [x, cx] : left.terms())
                for (const auto& [y, cy] : right.terms())
                    out.add({x, y}, scale * cx * cy);
        }
    }
    return out;
}

} // namespace heis

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heis/symfn.hpp"

#include <map>

using namespace heis;

namespace {

SymElem h(std::vector<int> v) { return SymElem::h(std::move(v)); }
SymElem p(std::vector<int> v) { return SymElem::p(std::move(v)); }

// Test-side oracle: symmetric functions as honest polynomials in m variables.
using Mono = std::vector<int>;
using Poly = std::map<Mono, Rational>;

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            Mono m(ma.size());
            for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out[m] += ca * cb;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Poly h_poly(int n, int m) {
    // All monomials of total degree n in m variables.
    Poly out;
    Mono cur(m, 0);
    auto rec = [&](auto&& self, int var, int rest) -> void {
        if (var == m - 1) {
            cur[var] = rest;
            out[cur] += 1;
            return;
        }
        for (int e = 0; e <= rest; ++e) {
            cur[var] = e;
            self(self, var + 1, rest - e);
        }
    };
    if (m == 0) {
        if (n == 0) out[{}] = 1;
        return out;
    }
    rec(rec, 0, n);
    return out;
}

Poly p_poly(int n, int m) {
    Poly out;
    for (int i = 0; i < m; ++i) {
        Mono mono(m, 0);
        mono[i] = n;
        out[mono] += 1;
    }
    return out;
}

Poly expand_in_p(const SymElem& f, int m) {
    Poly total;
    for (const auto& [l, c] : f.terms().terms()) {
        Poly prod{{Mono(m, 0), c}};
        for (int part : l.parts()) prod = poly_mul(prod, p_poly(part, m));
        for (const auto& [mono, q] : prod) {
            total[mono] += q;
        }
    }
    std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
    return total;
}

} // namespace

TEST_CASE("external product") {
    CHECK(external_product(h({2}), h({1})) == h({2, 1}));
    CHECK(external_product(p({3, 2, 1, 1}), p({2, 2, 1})) == p({3, 2, 2, 2, 1, 1, 1}));
    CHECK(external_product(SymElem::one(SymBasis::H), h({4, 1})) == h({4, 1}));
    CHECK_THROWS_AS(external_product(h({1}), p({1})), std::invalid_argument);
}

TEST_CASE("internal product in the p basis") {
    CHECK(internal_product(p({2}), p({2})) == Rational(2) * p({2}));
    CHECK(internal_product(p({2}), p({1, 1})).is_zero());
    CHECK(internal_product(p({1, 1}), p({1, 1})) == Rational(2) * p({1, 1}));
}

TEST_CASE("heisenberg product of complete homogeneous functions") {
    SUBCASE("the six-term worked example") {
        const SymElem expected =
            h({2, 1}) + h({1, 1, 1, 1}) + h({2, 1, 1}) + h({2, 2, 1}) + h({2, 1, 1, 1}) +
            h({3, 2, 1});
        CHECK(heisenberg(h({2, 1}), h({3})) == expected);
    }
    SUBCASE("unit") {
        CHECK(heisenberg(SymElem::one(SymBasis::H), h({2, 1})) == h({2, 1}));
        CHECK(heisenberg(h({2, 1}), SymElem::one(SymBasis::H)) == h({2, 1}));
    }
    SUBCASE("h1 # h1") { CHECK(heisenberg(h({1}), h({1})) == h({1}) + h({1, 1})); }
    SUBCASE("composition input is normalized") {
        CHECK(heisenberg(h({1, 2}), h({3})) == heisenberg(h({2, 1}), h({3})));
    }
    SUBCASE("integer coefficients on generator products") {
        for (const auto& [l, c] : heisenberg(h({2, 2}), h({3, 1})).terms().terms())
            CHECK(denominator(c) == 1);
    }
}

TEST_CASE("heisenberg product of power sums") {
    CHECK(heisenberg(p({1}), p({1})) == p({1}) + p({1, 1}));
    CHECK(heisenberg(p({2}), p({2})) == Rational(2) * p({2}) + p({2, 2}));

    SUBCASE("no diagonal term for distinct partitions of equal weight") {
        for (int n = 1; n <= 5; ++n) {
            const auto parts = partitions_of(n);
            for (const Partition& l : parts)
                for (const Partition& m : parts)
                    if (!(l == m))
                        CHECK(heisenberg(SymElem(SymBasis::P, LinearCombo<Partition>(l)),
                                         SymElem(SymBasis::P, LinearCombo<Partition>(m)))
                                  .component(n)
                                  .is_zero());
        }
    }

    SUBCASE("p_(1^u) # p_(1^v) closed form") {
        for (int u = 0; u <= 4; ++u) {
            for (int v = 0; v <= 4; ++v) {
                SymElem expected(SymBasis::P);
                for (int n = std::max(u, v); n <= u + v; ++n) {
                    const Rational coeff(binomial(u, n - v) * binomial(v, n - u) *
                                         factorial(u + v - n));
                    expected = expected +
                               coeff * p(std::vector<int>(n, 1));
                }
                CHECK(heisenberg(p(std::vector<int>(u, 1)), p(std::vector<int>(v, 1))) ==
                      expected);
            }
        }
    }
}

TEST_CASE("coproduct") {
    SUBCASE("Delta(h_2)") {
        SymTensor expected;
        expected.add({Partition(), Partition({2})}, 1);
        expected.add({Partition({1}), Partition({1})}, 1);
        expected.add({Partition({2}), Partition()}, 1);
        CHECK(coproduct(h({2})) == expected);
    }
    SUBCASE("p_3 is primitive") {
        SymTensor expected;
        expected.add({Partition(), Partition({3})}, 1);
        expected.add({Partition({3}), Partition()}, 1);
        CHECK(coproduct(p({3})) == expected);
    }
    SUBCASE("Delta(p_(2,1)) has four terms") {
        SymTensor expected;
        expected.add({Partition(), Partition({2, 1})}, 1);
        expected.add({Partition({1}), Partition({2})}, 1);
        expected.add({Partition({2}), Partition({1})}, 1);
        expected.add({Partition({2, 1}), Partition()}, 1);
        CHECK(coproduct(p({2, 1})) == expected);
    }
}

TEST_CASE("Zelevinski identity") {
    CHECK(heisenberg_via_zelevinski(h({2, 1}), h({3})) == heisenberg(h({2, 1}), h({3})));
    CHECK(heisenberg_via_zelevinski(p({3, 1}), SymElem::one(SymBasis::P)) == p({3, 1}));
    CHECK(heisenberg_via_zelevinski(p({1, 1}), p({1, 1})) ==
          heisenberg(p({1, 1}), p({1, 1})));
}

TEST_CASE("basis change") {
    CHECK(h_to_p(h({1})) == p({1}));
    CHECK(h_to_p(h({2})) ==
          Rational(1, 2) * p({1, 1}) + Rational(1, 2) * p({2}));

    SUBCASE("against the polynomial expansion oracle") {
        for (int n = 1; n <= 5; ++n) {
            const int m = n;
            CHECK(expand_in_p(h_to_p(h({n})), m) == h_poly(n, m));
        }
        // A non-trivial product index as well.
        CHECK(expand_in_p(h_to_p(h({2, 1})), 3) == poly_mul(h_poly(2, 3), h_poly(1, 3)));
    }

    SUBCASE("round trips") {
        for (int n = 0; n <= 6; ++n)
            for (const Partition& l : partitions_of(n)) {
                const SymElem hl(SymBasis::H, LinearCombo<Partition>(l));
                const SymElem pl(SymBasis::P, LinearCombo<Partition>(l));
                CHECK(p_to_h(h_to_p(hl)) == hl);
                CHECK(h_to_p(p_to_h(pl)) == pl);
            }
    }
}

TEST_CASE("iso from external to heisenberg") {
    CHECK(iso_external_to_heisenberg(h({3})) == h({3}));
    CHECK(iso_external_to_heisenberg(h({1, 1})) == h({1}) + h({1, 1}));
    for (int n = 0; n <= 5; ++n)
        for (const Partition& l : partitions_of(n)) {
            const SymElem hl(SymBasis::H, LinearCombo<Partition>(l));
            CHECK(iso_external_to_heisenberg_inverse(iso_external_to_heisenberg(hl)) == hl);
        }
}

TEST_CASE("truncated iso towards the internal product") {
    CHECK(iso_heisenberg_to_internal_truncated(SymElem::one(SymBasis::H), 3) ==
          SymElem::one(SymBasis::H) + h({1}) + h({2}) + h({3}));
    CHECK(iso_heisenberg_to_internal_truncated(h({1}), 2) == h({1}) + h({1, 1}));

    SUBCASE("multiplicative from # to the internal product") {
        const int cutoff = 6;
        for (int a = 0; a <= 3; ++a) {
            for (int b = 0; b <= 3; ++b) {
                for (const Partition& l : partitions_of(a)) {
                    for (const Partition& m : partitions_of(b)) {
                        const SymElem f(SymBasis::H, LinearCombo<Partition>(l));
                        const SymElem g(SymBasis::H, LinearCombo<Partition>(m));
                        const SymElem lhs = iso_heisenberg_to_internal_truncated(
                            heisenberg(f, g), cutoff);
                        const SymElem rhs =
                            internal_product(iso_heisenberg_to_internal_truncated(f, cutoff),
                                             iso_heisenberg_to_internal_truncated(g, cutoff))
                                .truncate(cutoff);
                        CHECK(lhs == rhs);
                    }
                }
            }
        }
    }
}

TEST_CASE("interpolation and commutativity spot checks") {
    const SymElem fg = heisenberg(h({2, 1}), h({3}));
    CHECK(fg.component(6) == external_product(h({2, 1}), h({3})));
    CHECK(fg.component(3) == internal_product(h({2, 1}), h({3})));
    CHECK(heisenberg(h({2, 1}), h({3})) == heisenberg(h({3}), h({2, 1})));
}

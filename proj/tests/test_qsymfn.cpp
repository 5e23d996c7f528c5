#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heis/qsymfn.hpp"

using namespace heis;

namespace {
QSymElem M(std::vector<int> v) { return QSymElem::M(std::move(v)); }
NSymElem X(std::vector<int> v) { return NSymElem::X(std::move(v)); }
} // namespace

TEST_CASE("quasi-shuffle product") {
    CHECK(product(M({1}), M({1})) == Rational(2) * M({1, 1}) + M({2}));
    CHECK(product(QSymElem::one(), M({3, 1})) == M({3, 1}));
    SUBCASE("duality re-check against the Sigma coproduct") {
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; a + b <= 4; ++b)
                for (const Composition& alpha : compositions_of(a))
                    for (const Composition& beta : compositions_of(b)) {
                        const QSymElem prod = product(QSymElem::M(alpha.parts()),
                                                      QSymElem::M(beta.parts()));
                        for (const Composition& g : compositions_of(a + b))
                            CHECK(prod.terms().coefficient(g) ==
                                  coproduct(NSymElem(LinearCombo<Composition>(g)))
                                      .coefficient({alpha, beta}));
                    }
    }
}

TEST_CASE("heisenberg coproduct") {
    SUBCASE("Delta_# of M[1]") {
        QSymTensor expected;
        expected.add({Composition({1}), Composition()}, 1);
        expected.add({Composition(), Composition({1})}, 1);
        expected.add({Composition({1}), Composition({1})}, 1);
        CHECK(heisenberg_coproduct(M({1})) == expected);
    }
    SUBCASE("duality with the Heisenberg product of Sigma") {
        for (int n = 0; n <= 4; ++n) {
            for (const Composition& g : compositions_of(n)) {
                const QSymTensor dh = heisenberg_coproduct(QSymElem::M(g.parts()));
                for (int a = 0; a <= n; ++a)
                    for (int b = std::max(0, n - a); b <= n; ++b)
                        for (const Composition& alpha : compositions_of(a))
                            for (const Composition& beta : compositions_of(b))
                                CHECK(dh.coefficient({alpha, beta}) ==
                                      heisenberg(NSymElem(LinearCombo<Composition>(alpha)),
                                                 NSymElem(LinearCombo<Composition>(beta)))
                                          .terms()
                                          .coefficient(g));
            }
        }
    }
}

TEST_CASE("classical coproducts") {
    SUBCASE("deconcatenation") {
        QSymTensor expected;
        expected.add({Composition(), Composition({2, 1})}, 1);
        expected.add({Composition({2}), Composition({1})}, 1);
        expected.add({Composition({2, 1}), Composition()}, 1);
        CHECK(external_coproduct(M({2, 1})) == expected);
    }
    SUBCASE("extreme bidegrees of Delta_#") {
        for (int n = 1; n <= 4; ++n) {
            for (const Composition& g : compositions_of(n)) {
                const QSymTensor dh = heisenberg_coproduct(QSymElem::M(g.parts()));
                QSymTensor diag, top;
                for (const auto& [lr, c] : dh.terms()) {
                    if (lr.first.weight() == n && lr.second.weight() == n)
                        diag.add(lr, c);
                    if (lr.first.weight() + lr.second.weight() == n) top.add(lr, c);
                }
                CHECK(diag == internal_coproduct(QSymElem::M(g.parts())));
                CHECK(top == external_coproduct(QSymElem::M(g.parts())));
            }
        }
    }
}

TEST_CASE("alphabet evaluation") {
    const OrderedAlphabet X3 = OrderedAlphabet::base(3);
    const OrderedAlphabet X2 = OrderedAlphabet::base(2);
    CHECK(evaluate(M({1}), X3, {1, 1, 1}) == 3);
    CHECK(evaluate(M({2}), X2, {1, 2}) == 5);
    CHECK(evaluate(M({1}), OrderedAlphabet::negate(X2), {1, 2}) == -3);
    SUBCASE("negated alphabets use weakly decreasing chains") {
        // (-1)^2 sum_{i>=j} x_i x_j at (1,2): 1 + 4 + 2.
        CHECK(evaluate(M({1, 1}), OrderedAlphabet::negate(X2), {1, 2}) == 7);
    }
    SUBCASE("the idempotent letter evaluates to 1 at any power") {
        const OrderedAlphabet oneX = OrderedAlphabet::one_plus(X2);
        for (int k = 1; k <= 4; ++k)
            CHECK(evaluate(M({k}), oneX, {Rational(1, 2), Rational(1, 3)}) ==
                  Rational(1) + evaluate(M({k}), X2, {Rational(1, 2), Rational(1, 3)}));
    }
    SUBCASE("divided powers count strictly increasing tuples") {
        const OrderedAlphabet expX = OrderedAlphabet::divided_powers(X3, 3);
        CHECK(evaluate(M({1}), expX, {1, 1, 1}) == 7);
    }
    SUBCASE("star counts all tuples with sign") {
        // M[1]((-X)*) = sum_r (-1)^r (x1+x2)^r at (1,1): -2 + 4 - 8 = -6.
        const OrderedAlphabet star =
            OrderedAlphabet::star(OrderedAlphabet::negate(X2), 3);
        CHECK(evaluate(M({1}), star, {1, 1}) == -6);
    }
}

TEST_CASE("antipode of (QSym, ., Delta_#)") {
    SUBCASE("S(M[1]) truncated at 3 is the geometric series") {
        const QSymElem expected = Rational(-1) * M({1}) + product(M({1}), M({1})) -
                                  product(product(M({1}), M({1})), M({1}));
        CHECK(antipode_heisenberg(M({1}), 3) == expected);
    }
    SUBCASE("antipode axiom, truncated") {
        const int N = 4;
        for (int n = 1; n <= 3; ++n) {
            for (const Composition& g : compositions_of(n)) {
                QSymElem folded;
                for (const auto& [lr, c] :
                     heisenberg_coproduct(QSymElem::M(g.parts())).terms()) {
                    const QSymElem left =
                        antipode_heisenberg(QSymElem::M(lr.first.parts()), N)
                            .truncate(N - lr.second.weight());
                    folded = folded + c * product(left, QSymElem::M(lr.second.parts()));
                }
                CHECK(folded.truncate(N).is_zero());
            }
        }
    }
}

TEST_CASE("dual of psi") {
    SUBCASE("pairs as delta against single-part generators") {
        for (int n = 1; n <= 4; ++n)
            for (const Composition& a : compositions_of(n)) {
                const QSymElem img = iso_dual_psi(QSymElem::M(a.parts()), 4);
                CHECK(img.terms().coefficient(Composition({n})) ==
                      Rational(a == Composition({n}) ? 1 : 0));
            }
    }
    SUBCASE("transpose identity") {
        for (int n = 0; n <= 4; ++n)
            for (const Composition& g : compositions_of(n))
                for (int m = 0; m <= 4; ++m)
                    for (const Composition& a : compositions_of(m)) {
                        const Rational lhs = iso_psi(NSymElem(LinearCombo<Composition>(g)))
                                                 .terms()
                                                 .coefficient(a);
                        const Rational rhs =
                            iso_dual_psi(QSymElem::M(a.parts()), 4).terms().coefficient(g);
                        CHECK(lhs == rhs);
                    }
    }
    SUBCASE("numeric divided-power count") {
        const OrderedAlphabet expX =
            OrderedAlphabet::divided_powers(OrderedAlphabet::base(3), 3);
        CHECK(evaluate(M({1}), expX, {1, 1, 1}) == 7);
        const QSymElem img = iso_dual_psi(M({1}), 3);
        CHECK(evaluate(img, OrderedAlphabet::base(3), {1, 1, 1}) == 7);
    }
}

TEST_CASE("heisenberg coproduct is coassociative and counital") {
    using Triple = std::tuple<Composition, Composition, Composition>;
    for (int n = 0; n <= 4; ++n) {
        for (const Composition& g : compositions_of(n)) {
            std::map<Triple, Rational> left, right;
            for (const auto& [ab, c] : heisenberg_coproduct(QSymElem::M(g.parts())).terms()) {
                for (const auto& [xy, d] :
                     heisenberg_coproduct(QSymElem::M(ab.first.parts())).terms())
                    left[{xy.first, xy.second, ab.second}] += c * d;
                for (const auto& [xy, d] :
                     heisenberg_coproduct(QSymElem::M(ab.second.parts())).terms())
                    right[{ab.first, xy.first, xy.second}] += c * d;
            }
            std::erase_if(left, [](const auto& kv) { return kv.second == 0; });
            std::erase_if(right, [](const auto& kv) { return kv.second == 0; });
            CHECK(left == right);

            QSymElem restored;
            for (const auto& [ab, c] : heisenberg_coproduct(QSymElem::M(g.parts())).terms())
                if (ab.first.weight() == 0) restored.terms().add(ab.second, c);
            CHECK(restored == QSymElem::M(g.parts()));
        }
    }
}

TEST_CASE("bialgebra compatibility of the heisenberg coproduct") {
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; a + b <= 4; ++b)
            for (const Composition& alpha : compositions_of(a))
                for (const Composition& beta : compositions_of(b)) {
                    const QSymElem f = QSymElem::M(alpha.parts());
                    const QSymElem g = QSymElem::M(beta.parts());
                    CHECK(heisenberg_coproduct(product(f, g)) ==
                          tensor_product(heisenberg_coproduct(f), heisenberg_coproduct(g)));
                }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heis/rep_oracle.hpp"

#include <set>

using namespace heis;

TEST_CASE("subgroup construction") {
    CHECK(SubgroupSpec::parabolic_product(Composition({1, 1}), Composition({2})).order() == 2);
    CHECK(SubgroupSpec::parabolic_product(Composition({2, 1}), Composition({3})).order() ==
          2 * 6);
    CHECK(SubgroupSpec::fiber_product(2, 2, 3).order() == 1);
    CHECK(SubgroupSpec::fiber_product(3, 3, 3).order() == 6);   // the diagonal
    CHECK(SubgroupSpec::fiber_product(3, 3, 6).order() == 36);  // the full product
    CHECK_THROWS_AS(SubgroupSpec::fiber_product(4, 4, 6), std::domain_error);
}

TEST_CASE("double coset counts") {
    CHECK(double_cosets(1, 1, 1, Composition({1}), Composition({1})).size() == 1);
    CHECK(double_cosets(2, 2, 2, Composition({1, 1}), Composition({2})).size() == 1);
    SUBCASE("counts match the margin matrices for p,q <= 2") {
        for (int p = 0; p <= 2; ++p)
            for (int q = 0; q <= 2; ++q)
                for (const Composition& alpha : compositions_of(p))
                    for (const Composition& beta : compositions_of(q))
                        for (int n = std::max(p, q); n <= p + q; ++n)
                            CHECK(double_cosets(p, q, n, alpha, beta).size() ==
                                  enumerate_margin_matrices(alpha, beta, n).size());
    }
}

TEST_CASE("coset matrices") {
    SUBCASE("identity representative at the top degree") {
        const GroupElement id{Permutation::identity(2), Permutation::identity(3)};
        const MarginMatrix m = coset_matrix(id, Composition({2}), Composition({3}), 5);
        CHECK(matrix_partition(m).weight() == 5);
    }
    SUBCASE("the unique zero-margin matrix") {
        const auto reps = double_cosets(2, 2, 2, Composition({1, 1}), Composition({2}));
        REQUIRE(reps.size() == 1);
        const MarginMatrix m = coset_matrix(reps[0], Composition({1, 1}), Composition({2}), 2);
        CHECK(matrix_composition(m) == Composition({1, 1}));
    }
    SUBCASE("constant on double cosets, p,q <= 2") {
        for (int p = 1; p <= 2; ++p) {
            for (int q = 1; q <= 2; ++q) {
                for (const Composition& alpha : compositions_of(p)) {
                    for (const Composition& beta : compositions_of(q)) {
                        for (int n = std::max(p, q); n <= p + q; ++n) {
                            const SubgroupSpec h = SubgroupSpec::fiber_product(p, q, n);
                            const SubgroupSpec k =
                                SubgroupSpec::parabolic_product(alpha, beta);
                            for (const GroupElement& rep :
                                 double_cosets(p, q, n, alpha, beta)) {
                                const MarginMatrix expected =
                                    coset_matrix(rep, alpha, beta, n);
                                for (const auto& [h1, h2] : h.elements())
                                    for (const auto& [k1, k2] : k.elements()) {
                                        const GroupElement g{
                                            h1.compose(rep.first).compose(k1),
                                            h2.compose(rep.second).compose(k2)};
                                        CHECK(coset_matrix(g, alpha, beta, n) == expected);
                                    }
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("intersection orders match the parabolic of p(M)") {
    for (int p = 1; p <= 3; ++p) {
        for (int q = 1; q <= 3; ++q) {
            for (const Composition& alpha : compositions_of(p)) {
                for (const Composition& beta : compositions_of(q)) {
                    for (int n = std::max(p, q); n <= p + q; ++n) {
                        for (const GroupElement& rep : double_cosets(p, q, n, alpha, beta)) {
                            Integer expected = 1;
                            for (int part :
                                 matrix_partition(coset_matrix(rep, alpha, beta, n)).parts())
                                expected *= factorial(part);
                            CHECK(coset_intersection_order(rep, alpha, beta, n) == expected);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("dimension identity") {
    CHECK(dimension_identity(Composition({1}), Composition({1}), 2));
    SUBCASE("induction-product case reduces to a binomial") {
        for (int p = 1; p <= 3; ++p)
            for (int q = 1; q <= 3; ++q)
                CHECK(dimension_identity(Composition({p}), Composition({q}), p + q));
    }
    SUBCASE("exhaustive for p,q <= 3") {
        for (int p = 0; p <= 3; ++p)
            for (int q = 0; q <= 3; ++q)
                for (const Composition& alpha : compositions_of(p))
                    for (const Composition& beta : compositions_of(q))
                        for (int n = std::max(p, q); n <= p + q; ++n)
                            CHECK(dimension_identity(alpha, beta, n));
    }
}

TEST_CASE("size guard") {
    CHECK_THROWS_AS(double_cosets(4, 4, 5, Composition({4}), Composition({4})),
                    std::domain_error);
}

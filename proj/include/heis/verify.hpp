#pragma once

#include <string>
#include <vector>

namespace heis::verify {

// Outcome of one property sweep.  `checks` counts individual identities
// tested; on the first failure the sweep records a counterexample and keeps
// counting so the report shows the full size of the suite.
struct Report {
    std::string suite;
    bool ok = true;
    long checks = 0;
    std::string first_failure;

    void check(bool cond, const std::string& context) {
        ++checks;
        if (!cond && ok) {
            ok = false;
            first_failure = context;
        }
    }
};

// Associativity of the Heisenberg product on basis generators.
Report assoc_h(int max_total_degree);
Report assoc_p(int max_total_degree);
Report assoc_x(int max_total_degree);
Report assoc_perm(int max_total_degree);

// Top component = external/MR/convolution, degree-diagonal component =
// internal/composition, in Lambda (h and p), Sigma, permutations, and
// endomorphisms of T(V).
Report interpolation(int max_total_degree, int alphabet_size);

// f # g = sum f1 * (f2 . g1) * g2 against the direct formulas, h and p.
Report zelevinski(int max_total_degree);

// p-basis formula vs h-basis formula under the basis change; round trips.
Report basis_change(int max_total_degree);

// h_alpha # h_beta = h_beta # h_alpha.
Report commutativity_h(int max_total_degree);

// Permutation-level formula vs Sigma-level formula under embed_descents.
Report embed_equivalence(int max_total_degree);

// Coproduct multiplicativity for #, on Sigma and Lambda.
Report hopf_sigma(int max_total_degree);
Report hopf_lambda(int max_total_degree);

// psi : (Sigma,*) -> (Sigma,#) is an algebra and coalgebra isomorphism.
Report psi_morphism(int max_degree);

// pi : Sigma -> Lambda is a #-morphism and a coalgebra morphism.
Report pi_morphism(int max_total_degree);

// Antipode axioms.
Report antipode_sigma(int max_degree);
Report antipode_qsym(int max_degree, int truncation);

// All four QSym structures are transposes of the Sigma structures.
Report duality(int max_degree);

// Symbolic (M-basis) vs numeric (alphabet evaluation) answers for the
// composite-alphabet theorems, at three rational sample points.
Report alphabet_consistency(int max_degree, int base_variables);

// Coassociativity, counit, MR-compatibility and the composition negative
// control for the permutation coproduct.
Report perm_coproduct(int max_total_degree);

// The non-multiplicativity counterexample on Sigma-hat and the matching
// positive statement on Lambda-hat, at the given truncation.
Report regression_counterexamples(int truncation);

// EGF coefficients for all-ones sequences against 3^n and against the
// brute-force count of pairs of sets covering [n].
Report egf_counts(int max_n);

// X_(1)^{#n} = sum_k S(n,k) X_(1^k) against an independent Stirling table.
Report stirling(int max_n);

// Exhaustive Schur-Weyl cross-check of the permutation formula.
Report schur_weyl(int max_pq, int alphabet_size);

// Double cosets vs margin matrices, intersection orders, dimension identity.
Report cosets(int max_pq);

// Heisenberg products of descent elements act within rearrangement spans.
Report gr_invariance(int max_total_degree, int alphabet_size);

// Margin-matrix layer: transpose involution and composition weights.
Report margin_matrices(int max_total_degree);

std::vector<std::string> suite_names();
// Runs a named suite at its default (acceptance) bounds; unknown name throws.
Report run_suite(const std::string& name);

} // namespace heis::verify

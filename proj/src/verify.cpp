#include "heis/verify.hpp"

#include "heis/combinat.hpp"
#include "heis/permalg.hpp"
#include "heis/qsymfn.hpp"
#include "heis/rep_oracle.hpp"
#include "heis/symfn.hpp"
#include "heis/tensor_oracle.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace heis::verify {

namespace {

std::vector<Partition> partitions_up_to(int max_weight, int min_weight = 0) {
    std::vector<Partition> out;
    for (int n = min_weight; n <= max_weight; ++n)
        for (const Partition& l : partitions_of(n)) out.push_back(l);
    return out;
}

std::vector<Composition> compositions_up_to(int max_weight, int min_weight = 0) {
    std::vector<Composition> out;
    for (int n = min_weight; n <= max_weight; ++n)
        for (const Composition& a : compositions_of(n)) out.push_back(a);
    return out;
}

template <typename B>
std::string combo_str(const LinearCombo<B>& c) {
    if (c.is_zero()) return "0";
    std::string s;
    for (const auto& [b, q] : c.terms()) {
        if (!s.empty()) s += " + ";
        s += rational_str(q) + "*" + b.str();
    }
    return s;
}

SymElem h_of(const Partition& l) {
    return SymElem(SymBasis::H, LinearCombo<Partition>(l));
}
SymElem p_of(const Partition& l) {
    return SymElem(SymBasis::P, LinearCombo<Partition>(l));
}
NSymElem x_of(const Composition& a) { return NSymElem(LinearCombo<Composition>(a)); }
QSymElem m_of(const Composition& a) { return QSymElem(LinearCombo<Composition>(a)); }
PermElem s_of(const Permutation& s) { return PermElem(LinearCombo<Permutation>(s)); }

// Sample points for the polynomial identity tests; three sets, exact
// rationals, no common structure.
std::vector<std::vector<Rational>> sample_points(int arity) {
    const std::vector<std::vector<Rational>> seeds = {
        {Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(2, 7), Rational(3, 11),
         Rational(5, 13)},
        {Rational(2), Rational(1, 7), Rational(3, 4), Rational(5, 2), Rational(1, 11),
         Rational(7, 3)},
        {Rational(1, 4), Rational(5, 6), Rational(2, 3), Rational(3, 13), Rational(4, 9),
         Rational(1, 8)},
    };
    std::vector<std::vector<Rational>> out;
    for (const auto& seed : seeds)
        out.emplace_back(seed.begin(), seed.begin() + arity);
    return out;
}

} // namespace

Report assoc_h(int max_total_degree) {
    Report r{"assoc-h"};
    const auto basis = partitions_up_to(max_total_degree - 2, 1);
    for (const Partition& a : basis)
        for (const Partition& b : basis)
            for (const Partition& c : basis) {
                if (a.weight() + b.weight() + c.weight() > max_total_degree) continue;
                const SymElem left = heisenberg(heisenberg(h_of(a), h_of(b)), h_of(c));
                const SymElem right = heisenberg(h_of(a), heisenberg(h_of(b), h_of(c)));
                r.check(left == right,
                        "h" + a.str() + " # h" + b.str() + " # h" + c.str());
            }
    return r;
}

Report assoc_p(int max_total_degree) {
    Report r{"assoc-p"};
    const auto basis = partitions_up_to(max_total_degree - 2, 1);
    for (const Partition& a : basis)
        for (const Partition& b : basis)
            for (const Partition& c : basis) {
                if (a.weight() + b.weight() + c.weight() > max_total_degree) continue;
                const SymElem left = heisenberg(heisenberg(p_of(a), p_of(b)), p_of(c));
                const SymElem right = heisenberg(p_of(a), heisenberg(p_of(b), p_of(c)));
                r.check(left == right,
                        "p" + a.str() + " # p" + b.str() + " # p" + c.str());
            }
    return r;
}

Report assoc_x(int max_total_degree) {
    Report r{"assoc-x"};
    const auto basis = compositions_up_to(max_total_degree - 2, 1);
    for (const Composition& a : basis)
        for (const Composition& b : basis)
            for (const Composition& c : basis) {
                if (a.weight() + b.weight() + c.weight() > max_total_degree) continue;
                const NSymElem left = heisenberg(heisenberg(x_of(a), x_of(b)), x_of(c));
                const NSymElem right = heisenberg(x_of(a), heisenberg(x_of(b), x_of(c)));
                r.check(left == right,
                        "X" + a.str() + " # X" + b.str() + " # X" + c.str());
            }
    return r;
}

Report assoc_perm(int max_total_degree) {
    Report r{"assoc-perm"};
    for (int p = 1; p + 2 <= max_total_degree; ++p) {
        for (int q = 1; p + q + 1 <= max_total_degree; ++q) {
            for (int w = 1; p + q + w <= max_total_degree; ++w) {
                for (const Permutation& a : permutations_of(p))
                    for (const Permutation& b : permutations_of(q))
                        for (const Permutation& c : permutations_of(w)) {
                            const PermElem left =
                                heisenberg(heisenberg(s_of(a), s_of(b)), s_of(c));
                            const PermElem right =
                                heisenberg(s_of(a), heisenberg(s_of(b), s_of(c)));
                            r.check(left == right, a.str() + " # " + b.str() + " # " + c.str());
                        }
            }
        }
    }
    return r;
}

Report interpolation(int max_total_degree, int alphabet_size) {
    Report r{"interpolation"};
    // Lambda, h-basis and p-basis.
    for (const Partition& a : partitions_up_to(max_total_degree - 1, 1)) {
        for (const Partition& b : partitions_up_to(max_total_degree - a.weight(), 1)) {
            const int p = a.weight(), q = b.weight();
            {
                const SymElem fg = heisenberg(h_of(a), h_of(b));
                r.check(fg.component(p + q) == external_product(h_of(a), h_of(b)),
                        "top of h" + a.str() + " # h" + b.str());
                if (p == q)
                    r.check(fg.component(p) == internal_product(h_of(a), h_of(b)),
                            "bottom of h" + a.str() + " # h" + b.str());
            }
            {
                const SymElem fg = heisenberg(p_of(a), p_of(b));
                r.check(fg.component(p + q) == external_product(p_of(a), p_of(b)),
                        "top of p" + a.str() + " # p" + b.str());
                if (p == q)
                    r.check(fg.component(p) == internal_product(p_of(a), p_of(b)),
                            "bottom of p" + a.str() + " # p" + b.str());
            }
        }
    }
    // Sigma: top is concatenation; bottom matches composition of the descent
    // elements inside kS_n.
    for (const Composition& a : compositions_up_to(max_total_degree - 1, 1)) {
        for (const Composition& b :
             compositions_up_to(max_total_degree - a.weight(), 1)) {
            const NSymElem fg = heisenberg(x_of(a), x_of(b));
            r.check(fg.component(a.weight() + b.weight()) ==
                        external_product(x_of(a), x_of(b)),
                    "top of X" + a.str() + " # X" + b.str());
            if (a.weight() == b.weight()) {
                const NSymElem diag = fg.component(a.weight());
                r.check(diag == internal_product(x_of(a), x_of(b)),
                        "diagonal of X" + a.str() + " # X" + b.str());
                r.check(embed_descents(diag) ==
                            compose_product(embed_descents(x_of(a)), embed_descents(x_of(b))),
                        "Solomon product of X" + a.str() + " . X" + b.str() +
                            " vs composition in kS_n");
            }
        }
    }
    // Permutations.
    for (int p = 1; p + 1 <= max_total_degree; ++p) {
        for (int q = 1; p + q <= max_total_degree; ++q) {
            for (const Permutation& s : permutations_of(p)) {
                for (const Permutation& t : permutations_of(q)) {
                    const PermElem fg = heisenberg(s_of(s), s_of(t));
                    r.check(fg.component(p + q) == mr_product(s_of(s), s_of(t)),
                            "top of " + s.str() + " # " + t.str());
                    if (p == q)
                        r.check(fg.component(p) == compose_product(s_of(s), s_of(t)),
                                "bottom of " + s.str() + " # " + t.str());
                }
            }
        }
    }
    // Endomorphisms of T(V), probed on staircase words.
    for (int p = 1; p + 1 <= max_total_degree; ++p) {
        for (int q = 1; p + q <= max_total_degree; ++q) {
            for (const Permutation& s : permutations_of(p)) {
                for (const Permutation& t : permutations_of(q)) {
                    const GradedEndo fe = psi_action(s, alphabet_size);
                    const GradedEndo ge = psi_action(t, alphabet_size);
                    const GradedEndo fg = heisenberg(fe, ge);
                    const Word top_probe = Word::staircase(p + q);
                    r.check(fg.apply(top_probe) == convolution(fe, ge).apply(top_probe),
                            "endo top of " + s.str() + " # " + t.str());
                    if (p == q) {
                        const Word probe = Word::staircase(p);
                        r.check(fg.apply(probe) == compose_endo(ge, fe).apply(probe),
                                "endo bottom of " + s.str() + " # " + t.str());
                    }
                }
            }
        }
    }
    // The unit iota.eps of the endomorphism level.
    const GradedEndo unit = unit_endo(alphabet_size);
    const GradedEndo psi12 = psi_action(Permutation({1, 2}), alphabet_size);
    const Word probe2 = Word::staircase(2);
    r.check(heisenberg(unit, psi12).apply(probe2) == psi12.apply(probe2) &&
                heisenberg(psi12, unit).apply(probe2) == psi12.apply(probe2),
            "unit of the endomorphism Heisenberg product");
    return r;
}

Report zelevinski(int max_total_degree) {
    Report r{"zelevinski"};
    for (const Partition& a : partitions_up_to(max_total_degree - 1, 0)) {
        for (const Partition& b :
             partitions_up_to(max_total_degree - a.weight(), 0)) {
            r.check(heisenberg(h_of(a), h_of(b)) ==
                        heisenberg_via_zelevinski(h_of(a), h_of(b)),
                    "Zelevinski identity for h" + a.str() + ", h" + b.str());
            r.check(heisenberg(p_of(a), p_of(b)) ==
                        heisenberg_via_zelevinski(p_of(a), p_of(b)),
                    "Zelevinski identity for p" + a.str() + ", p" + b.str());
        }
    }
    return r;
}

Report basis_change(int max_total_degree) {
    Report r{"basis-change"};
    for (const Partition& l : partitions_up_to(max_total_degree, 0)) {
        r.check(p_to_h(h_to_p(h_of(l))) == h_of(l), "round trip h" + l.str());
        r.check(h_to_p(p_to_h(p_of(l))) == p_of(l), "round trip p" + l.str());
    }
    for (const Partition& a : partitions_up_to(max_total_degree - 1, 1)) {
        for (const Partition& b :
             partitions_up_to(max_total_degree - a.weight(), 1)) {
            const SymElem via_p = p_to_h(heisenberg(h_to_p(h_of(a)), h_to_p(h_of(b))));
            r.check(via_p == heisenberg(h_of(a), h_of(b)),
                    "p-basis route for h" + a.str() + " # h" + b.str());
        }
    }
    return r;
}

Report commutativity_h(int max_total_degree) {
    Report r{"commutativity-h"};
    for (const Partition& a : partitions_up_to(max_total_degree - 1, 1))
        for (const Partition& b :
             partitions_up_to(max_total_degree - a.weight(), 1))
            r.check(heisenberg(h_of(a), h_of(b)) == heisenberg(h_of(b), h_of(a)),
                    "h" + a.str() + " # h" + b.str() + " commutes");
    return r;
}

Report embed_equivalence(int max_total_degree) {
    Report r{"embed-equivalence"};
    for (const Composition& a : compositions_up_to(max_total_degree - 1, 1)) {
        for (const Composition& b :
             compositions_up_to(max_total_degree - a.weight(), 1)) {
            const PermElem lhs = heisenberg(embed_descents(x_of(a)), embed_descents(x_of(b)));
            const PermElem rhs = embed_descents(heisenberg(x_of(a), x_of(b)));
            r.check(lhs == rhs, "embedding of X" + a.str() + " # X" + b.str());
        }
    }
    return r;
}

Report hopf_sigma(int max_total_degree) {
    Report r{"hopf-sigma"};
    for (const Composition& a : compositions_up_to(max_total_degree, 0)) {
        for (const Composition& b :
             compositions_up_to(max_total_degree - a.weight(), 0)) {
            const NSymTensor lhs = coproduct(heisenberg(x_of(a), x_of(b)));
            const NSymTensor rhs = tensor_heisenberg(coproduct(x_of(a)), coproduct(x_of(b)));
            r.check(lhs == rhs, "Delta(X" + a.str() + " # X" + b.str() + ")");
        }
    }
    return r;
}

Report hopf_lambda(int max_total_degree) {
    Report r{"hopf-lambda"};
    for (const Partition& a : partitions_up_to(max_total_degree, 0)) {
        for (const Partition& b :
             partitions_up_to(max_total_degree - a.weight(), 0)) {
            const SymTensor lhs = coproduct(heisenberg(h_of(a), h_of(b)));
            const SymTensor rhs =
                tensor_heisenberg(coproduct(h_of(a)), coproduct(h_of(b)), SymBasis::H);
            r.check(lhs == rhs, "Delta(h" + a.str() + " # h" + b.str() + ")");
        }
    }
    return r;
}

Report psi_morphism(int max_degree) {
    Report r{"psi-morphism"};
    for (const Composition& a : compositions_up_to(max_degree, 0)) {
        // Coalgebra morphism.
        NSymTensor lhs = coproduct(iso_psi(x_of(a)));
        NSymTensor rhs;
        for (const auto& [lr, c] : coproduct(x_of(a)).terms()) {
            const NSymElem li = iso_psi(x_of(lr.first));
            const NSymElem ri = iso_psi(x_of(lr.second));
            for (const auto& [lb, lc] : li.terms().terms())
                for (const auto& [rb, rc] : ri.terms().terms())
                    rhs.add({lb, rb}, c * lc * rc);
        }
        r.check(lhs == rhs, "(psi x psi) Delta = Delta psi at X" + a.str());
        r.check(iso_psi_inverse(iso_psi(x_of(a))) == x_of(a), "psi inverse at X" + a.str());
        // Algebra morphism from * to #.
        for (const Composition& b :
             compositions_up_to(max_degree - a.weight(), 0)) {
            r.check(iso_psi(external_product(x_of(a), x_of(b))) ==
                        heisenberg(iso_psi(x_of(a)), iso_psi(x_of(b))),
                    "psi(X" + a.str() + " * X" + b.str() + ")");
        }
    }
    return r;
}

Report pi_morphism(int max_total_degree) {
    Report r{"pi-morphism"};
    for (const Composition& a : compositions_up_to(max_total_degree, 0)) {
        r.check(project_pi_tensor(coproduct(x_of(a))) == coproduct(project_pi(x_of(a))),
                "(pi x pi) Delta = Delta pi at X" + a.str());
        for (const Composition& b :
             compositions_up_to(max_total_degree - a.weight(), 0)) {
            r.check(project_pi(heisenberg(x_of(a), x_of(b))) ==
                        heisenberg(project_pi(x_of(a)), project_pi(x_of(b))),
                    "pi(X" + a.str() + " # X" + b.str() + ")");
        }
    }
    return r;
}

Report antipode_sigma(int max_degree) {
    Report r{"antipode-sigma"};
    r.check(antipode_heisenberg(NSymElem::one()) == NSymElem::one(), "S(1) = 1");
    for (const Composition& a : compositions_up_to(max_degree, 1)) {
        NSymElem folded;
        for (const auto& [lr, c] : coproduct(x_of(a)).terms())
            folded = folded + c * heisenberg(antipode_heisenberg(x_of(lr.first)), x_of(lr.second));
        r.check(folded.is_zero(), "antipode axiom at X" + a.str() + ": " +
                                      combo_str(folded.terms()));
    }
    return r;
}

Report antipode_qsym(int max_degree, int truncation) {
    Report r{"antipode-qsym"};
    // S truncated to degree <= truncation, tabulated once.
    std::map<Composition, QSymElem> s_table;
    for (const Composition& a : compositions_up_to(truncation, 0))
        s_table.emplace(a, antipode_heisenberg(m_of(a), truncation));

    r.check(product(s_table.at(Composition()), QSymElem::one()) == QSymElem::one(),
            "S(1) = 1 on QSym");
    for (const Composition& g : compositions_up_to(max_degree, 1)) {
        QSymElem folded;
        for (const auto& [lr, c] : heisenberg_coproduct(m_of(g)).terms()) {
            const int right_deg = lr.second.weight();
            if (right_deg > truncation) continue;
            const QSymElem left = s_table.at(lr.first).truncate(truncation - right_deg);
            folded = folded + c * product(left, m_of(lr.second));
        }
        folded = folded.truncate(truncation);
        r.check(folded.is_zero(), "QSym antipode axiom at M" + g.str() + ": " +
                                      combo_str(folded.terms()));
    }
    return r;
}

Report duality(int max_degree) {
    Report r{"duality"};
    const auto comps = compositions_up_to(max_degree, 0);
    std::map<Composition, QSymTensor> delta_heis, delta_int, delta_ext;
    std::map<Composition, NSymTensor> delta_sigma;
    for (const Composition& g : comps) {
        delta_heis.emplace(g, heisenberg_coproduct(m_of(g)));
        delta_int.emplace(g, internal_coproduct(m_of(g)));
        delta_ext.emplace(g, external_coproduct(m_of(g)));
        delta_sigma.emplace(g, coproduct(x_of(g)));
    }
    for (const Composition& a : comps) {
        for (const Composition& b : comps) {
            if (a.weight() + b.weight() <= max_degree) {
                // Product of QSym vs coproduct of Sigma; external coproduct
                // of QSym vs concatenation in Sigma.
                const QSymElem prod = product(m_of(a), m_of(b));
                const Composition ab = a.concat(b);
                for (const Composition& g : compositions_of(a.weight() + b.weight())) {
                    r.check(prod.terms().coefficient(g) ==
                                delta_sigma.at(g).coefficient({a, b}),
                            "<M" + a.str() + " M" + b.str() + ", X" + g.str() + ">");
                    r.check(delta_ext.at(g).coefficient({a, b}) ==
                                Rational(g == ab ? 1 : 0),
                            "<Delta_ext M" + g.str() + ", X" + a.str() + " x X" +
                                b.str() + ">");
                }
            }
            if (a.weight() == 0 && b.weight() == 0) continue;
            // Internal coproduct vs Solomon product (equal degrees).
            if (a.weight() == b.weight() && a.weight() >= 1) {
                const NSymElem prod = internal_product(x_of(a), x_of(b));
                for (const Composition& g : compositions_of(a.weight())) {
                    r.check(delta_int.at(g).coefficient({a, b}) ==
                                prod.terms().coefficient(g),
                            "<Delta_int M" + g.str() + ", X" + a.str() + " x X" + b.str() + ">");
                }
            }
            // Heisenberg coproduct vs Heisenberg product.
            const int lo = std::max(a.weight(), b.weight());
            const int hi = a.weight() + b.weight();
            if (lo > max_degree) continue;
            const NSymElem prod = heisenberg(x_of(a), x_of(b));
            for (int n = lo; n <= std::min(hi, max_degree); ++n) {
                for (const Composition& g : compositions_of(n)) {
                    r.check(delta_heis.at(g).coefficient({a, b}) ==
                                prod.terms().coefficient(g),
                            "<Delta_# M" + g.str() + ", X" + a.str() + " x X" + b.str() + ">");
                }
            }
        }
    }
    return r;
}

Report alphabet_consistency(int max_degree, int base_variables) {
    Report r{"alphabet-consistency"};
    const int k = base_variables;
    const OrderedAlphabet X = OrderedAlphabet::base(k);
    const OrderedAlphabet Y = OrderedAlphabet::base(k);
    const OrderedAlphabet XplusY = OrderedAlphabet::sum(X, Y);
    const OrderedAlphabet XtimesY = OrderedAlphabet::product(X, Y);
    const OrderedAlphabet Xheis = OrderedAlphabet::heisenberg_sum(X, Y);

    for (const Composition& g : compositions_up_to(max_degree, 0)) {
        const QSymTensor dh = heisenberg_coproduct(m_of(g));
        const QSymTensor de = external_coproduct(m_of(g));
        const QSymTensor di = internal_coproduct(m_of(g));
        for (const auto& joint : sample_points(2 * k)) {
            const std::vector<Rational> px(joint.begin(), joint.begin() + k);
            const std::vector<Rational> py(joint.begin() + k, joint.end());
            auto separated = [&](const QSymTensor& t) {
                Rational sum = 0;
                for (const auto& [lr, c] : t.terms())
                    sum += c * evaluate(m_of(lr.first), X, px) *
                           evaluate(m_of(lr.second), Y, py);
                return sum;
            };
            r.check(evaluate(m_of(g), Xheis, joint) == separated(dh),
                    "M" + g.str() + "(X+Y+XY) vs Delta_#");
            r.check(evaluate(m_of(g), XplusY, joint) == separated(de),
                    "M" + g.str() + "(X+Y) vs Delta_ext");
            r.check(evaluate(m_of(g), XtimesY, joint) == separated(di),
                    "M" + g.str() + "(XxY) vs Delta_int");
        }
    }

    // psi^*(f) = f(exp X), compared under a common degree cap.
    const int cap = max_degree;
    const OrderedAlphabet expX = OrderedAlphabet::divided_powers(X, std::min(cap, k));
    for (const Composition& g : compositions_up_to(max_degree, 0)) {
        const QSymElem img = iso_dual_psi(m_of(g), cap);
        for (const auto& pt : sample_points(k)) {
            r.check(evaluate(img, X, pt) == evaluate(m_of(g), expX, pt, cap),
                    "M" + g.str() + "(exp X) vs psi^*");
        }
    }

    // S_#(f) = f((-X)^*), compared under a common degree cap (two base
    // variables keep the star alphabet small).
    const OrderedAlphabet X2 = OrderedAlphabet::base(2);
    const OrderedAlphabet starNeg =
        OrderedAlphabet::star(OrderedAlphabet::negate(X2), cap);
    for (const Composition& g : compositions_up_to(max_degree, 0)) {
        const QSymElem img = antipode_heisenberg(m_of(g), cap);
        for (const auto& pt : sample_points(2)) {
            r.check(evaluate(img, X2, pt) == evaluate(m_of(g), starNeg, pt, cap),
                    "M" + g.str() + "((-X)*) vs S_#");
        }
    }
    return r;
}

Report perm_coproduct(int max_total_degree) {
    Report r{"perm-coproduct"};
    using Triple = std::tuple<Permutation, Permutation, Permutation>;
    for (int n = 0; n <= max_total_degree; ++n) {
        for (const Permutation& s : permutations_of(n)) {
            // Coassociativity.
            std::map<Triple, Rational> left, right;
            for (const auto& [ab, c] : coproduct(s_of(s)).terms()) {
                for (const auto& [xy, d] : coproduct(s_of(ab.first)).terms()) {
                    left[{xy.first, xy.second, ab.second}] += c * d;
                }
                for (const auto& [xy, d] : coproduct(s_of(ab.second)).terms()) {
                    right[{ab.first, xy.first, xy.second}] += c * d;
                }
            }
            std::erase_if(left, [](const auto& kv) { return kv.second == 0; });
            std::erase_if(right, [](const auto& kv) { return kv.second == 0; });
            r.check(left == right, "coassociativity at " + s.str());
            // Counit.
            PermElem restored;
            for (const auto& [ab, c] : coproduct(s_of(s)).terms())
                if (ab.first.degree() == 0) restored.terms().add(ab.second, c);
            r.check(restored == s_of(s), "counit at " + s.str());
        }
    }
    // Compatibility with the MR product.
    for (int p = 1; p + 1 <= max_total_degree; ++p) {
        for (int q = 1; p + q <= max_total_degree; ++q) {
            for (const Permutation& s : permutations_of(p)) {
                for (const Permutation& t : permutations_of(q)) {
                    r.check(coproduct(mr_product(s_of(s), s_of(t))) ==
                                tensor_mr(coproduct(s_of(s)), coproduct(s_of(t))),
                            "Delta(MR) at " + s.str() + " * " + t.str());
                }
            }
        }
    }
    // Negative control: the coproduct is not compatible with composition.
    {
        const PermElem s = PermElem::perm({2, 1, 3});
        const PermElem t = PermElem::perm({1, 3, 2});
        const bool differs = coproduct(compose_product(s, t)) !=
                             tensor_compose(coproduct(s), coproduct(t));
        r.check(differs, "expected Delta(213 . 132) != Delta(213) . Delta(132)");
    }
    return r;
}

Report regression_counterexamples(int truncation) {
    Report r{"regression"};
    const int T = truncation;
    auto family = [T](std::vector<int> head) {
        // X_(head, n) for n >= 0 with zero parts dropped, up to degree T.
        LinearCombo<Composition> out;
        const Composition base(head);
        for (int n = 0; base.weight() + n <= T; ++n) {
            Composition idx = n > 0 ? base.concat(Composition({n})) : base;
            out.add(idx, 1);
        }
        return NSymElem(out);
    };

    const NSymElem x3 = NSymElem::X({3});
    const NSymElem lhs = iso_heisenberg_to_internal_truncated(heisenberg(x3, x3), T);
    const NSymElem rhs = internal_product(iso_heisenberg_to_internal_truncated(x3, T),
                                          iso_heisenberg_to_internal_truncated(x3, T))
                             .truncate(T);

    const NSymElem lhs_expected =
        family({3}) + family({1, 1, 2}) + family({2, 2, 1}) + family({3, 3});
    const NSymElem rhs_expected =
        family({3}) + family({2, 1, 1}) + family({1, 2, 2}) + family({3, 3});

    r.check(lhs == lhs_expected, "phi(X[3] # X[3]) truncated at " + std::to_string(T));
    r.check(rhs == rhs_expected, "phi(X[3]) . phi(X[3]) truncated at " + std::to_string(T));
    r.check(lhs != rhs, "the two sides must differ");

    auto has_prefix = [](const NSymElem& f, std::vector<int> prefix) {
        for (const auto& [a, c] : f.terms().terms()) {
            if (a.parts().size() < prefix.size()) continue;
            if (std::equal(prefix.begin(), prefix.end(), a.parts().begin())) return true;
        }
        return false;
    };
    r.check(has_prefix(rhs, {2, 1, 1}) && !has_prefix(lhs, {2, 1, 1}),
            "X[2,1,1,...] terms appear only on the composition side");
    r.check(has_prefix(lhs, {1, 1, 2}) && !has_prefix(rhs, {1, 1, 2}),
            "X[1,1,2,...] terms appear only on the Heisenberg side");

    // On Lambda-hat the same map is multiplicative.
    const SymElem h3 = SymElem::h({3});
    const SymElem sym_lhs =
        iso_heisenberg_to_internal_truncated(heisenberg(h3, h3), T);
    const SymElem sym_rhs =
        internal_product(iso_heisenberg_to_internal_truncated(h3, T),
                         iso_heisenberg_to_internal_truncated(h3, T))
            .truncate(T);
    r.check(sym_lhs == sym_rhs, "phi is multiplicative on Lambda-hat at h[3]");
    return r;
}

Report egf_counts(int max_n) {
    Report r{"egf"};
    const std::vector<Rational> ones(max_n + 1, Rational(1));
    const auto c = egf_heisenberg(ones, ones, max_n);
    Integer power = 1;
    for (int n = 0; n <= max_n; ++n) {
        r.check(c[n] == Rational(power), "egf coefficient at n=" + std::to_string(n) +
                                             ": " + rational_str(c[n]) + " vs 3^n");
        // Brute-force: pairs of subsets of [n] whose union is [n].
        if (n <= 8) {
            long count = 0;
            for (long s = 0; s < (1L << n); ++s)
                for (long t = 0; t < (1L << n); ++t)
                    if ((s | t) == (1L << n) - 1) ++count;
            r.check(c[n] == Rational(count),
                    "egf coefficient vs set-cover count at n=" + std::to_string(n));
        }
        power *= 3;
    }
    return r;
}

Report stirling(int max_n) {
    Report r{"stirling"};
    // S(n,k) by the standard recurrence.
    std::vector<std::vector<Integer>> s(max_n + 1, std::vector<Integer>(max_n + 1, 0));
    s[0][0] = 1;
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k) s[n][k] = Integer(k) * s[n - 1][k] + s[n - 1][k - 1];

    NSymElem power = NSymElem::X({1});
    for (int n = 1; n <= max_n; ++n) {
        NSymElem expected;
        for (int k = 1; k <= n; ++k) {
            expected.terms().add(Composition(std::vector<int>(k, 1)), Rational(s[n][k]));
        }
        r.check(power == expected, "X[1]^{#" + std::to_string(n) + "}");
        power = heisenberg(power, NSymElem::X({1}));
    }
    return r;
}

Report schur_weyl(int max_pq, int alphabet_size) {
    Report r{"schur-weyl"};
    for (int p = 0; p <= max_pq; ++p) {
        for (int q = 0; q <= max_pq; ++q) {
            for (const Permutation& s : permutations_of(p)) {
                for (const Permutation& t : permutations_of(q)) {
                    for (int n = std::max(p, q); n <= p + q; ++n) {
                        r.check(verify_schur_weyl(s, t, n, alphabet_size),
                                "Schur-Weyl at " + s.str() + " # " + t.str() +
                                    ", n=" + std::to_string(n));
                    }
                }
            }
        }
    }
    return r;
}

Report cosets(int max_pq) {
    Report r{"cosets"};
    for (int p = 0; p <= max_pq; ++p) {
        for (int q = 0; q <= max_pq; ++q) {
            for (const Composition& alpha : compositions_of(p)) {
                for (const Composition& beta : compositions_of(q)) {
                    for (int n = std::max(p, q); n <= p + q; ++n) {
                        const auto reps = double_cosets(p, q, n, alpha, beta);
                        const auto matrices = enumerate_margin_matrices(alpha, beta, n);
                        const std::string ctx = "alpha=" + alpha.str() + " beta=" +
                                                beta.str() + " n=" + std::to_string(n);
                        r.check(reps.size() == matrices.size(),
                                "|double cosets| = |matrices| at " + ctx);
                        std::set<std::vector<std::vector<int>>> images;
                        for (const auto& rep : reps) {
                            const MarginMatrix m = coset_matrix(rep, alpha, beta, n);
                            images.insert(m.entries());
                            r.check(coset_intersection_order(rep, alpha, beta, n) ==
                                        [&] {
                                            Integer f = 1;
                                            for (int part : matrix_partition(m).parts())
                                                f *= factorial(part);
                                            return f;
                                        }(),
                                    "intersection order at " + ctx);
                        }
                        std::set<std::vector<std::vector<int>>> expected;
                        for (const auto& m : matrices) expected.insert(m.entries());
                        r.check(images == expected, "coset matrices exhaust M at " + ctx);
                        r.check(dimension_identity(alpha, beta, n),
                                "dimension identity at " + ctx);
                    }
                }
            }
        }
    }
    return r;
}

Report gr_invariance(int max_total_degree, int alphabet_size) {
    Report r{"gr-invariance"};
    for (const Composition& a : compositions_up_to(max_total_degree - 1, 1)) {
        for (const Composition& b :
             compositions_up_to(max_total_degree - a.weight(), 1)) {
            const NSymElem fg = heisenberg(x_of(a), x_of(b));
            std::vector<Word> probes;
            for (int n = std::max(a.weight(), b.weight()); n <= a.weight() + b.weight();
                 ++n)
                probes.push_back(Word::staircase(n));
            r.check(check_gr_invariance(fg, probes, alphabet_size),
                    "span invariance of X" + a.str() + " # X" + b.str());

            // The endomorphism-level product itself stays in the span of
            // permuted words, and agrees with the Sigma-level product.
            const GradedEndo smash =
                heisenberg(psi_action(embed_descents(x_of(a)), alphabet_size),
                           psi_action(embed_descents(x_of(b)), alphabet_size));
            const GradedEndo expected =
                psi_action(embed_descents(fg), alphabet_size);
            for (const Word& w : probes) {
                const WordSum img = smash.apply(w);
                bool in_span = true;
                std::vector<int> ref = w.letters();
                std::sort(ref.begin(), ref.end());
                for (const auto& [iw, c] : img.terms()) {
                    std::vector<int> letters = iw.letters();
                    std::sort(letters.begin(), letters.end());
                    if (letters != ref) in_span = false;
                }
                r.check(in_span && img == expected.apply(w),
                        "endomorphism image of X" + a.str() + " # X" + b.str());
            }
        }
    }
    return r;
}

Report margin_matrices(int max_total_degree) {
    Report r{"margin-matrices"};
    for (const Composition& a : compositions_up_to(max_total_degree - 1, 1)) {
        for (const Composition& b :
             compositions_up_to(max_total_degree - a.weight(), 1)) {
            for (int n = std::max(a.weight(), b.weight()); n <= a.weight() + b.weight();
                 ++n) {
                const auto ms = enumerate_margin_matrices(a, b, n);
                const auto ts = enumerate_margin_matrices(b, a, n);
                r.check(ms.size() == ts.size(), "|M^n_{a,b}| = |M^n_{b,a}| at " + a.str() +
                                                    "," + b.str() + ",n=" + std::to_string(n));
                std::set<std::vector<std::vector<int>>> transposed;
                for (const auto& m : ms) transposed.insert(m.transpose().entries());
                std::set<std::vector<std::vector<int>>> other;
                for (const auto& m : ts) other.insert(m.entries());
                r.check(transposed == other, "transposition is a bijection at " + a.str() +
                                                 "," + b.str() + ",n=" + std::to_string(n));
                for (const auto& m : ms) {
                    r.check(matrix_composition(m).weight() == n,
                            "c(M) has weight n at " + a.str() + "," + b.str());
                    r.check(matrix_partition(m) ==
                                Partition(matrix_composition(m).parts()),
                            "p(M) sorts c(M)");
                    r.check(matrix_partition(m.transpose()) == matrix_partition(m),
                            "p(M) is transpose invariant");
                }
            }
        }
    }
    return r;
}

std::vector<std::string> suite_names() {
    return {"assoc-h",      "assoc-p",        "assoc-x",       "assoc-perm",
            "interpolation", "zelevinski",    "basis-change",  "commutativity-h",
            "embed-equivalence", "hopf-sigma", "hopf-lambda",  "psi-morphism",
            "pi-morphism",  "antipode-sigma", "antipode-qsym", "duality",
            "alphabet-consistency", "perm-coproduct", "regression", "egf",
            "stirling",     "schur-weyl",     "cosets",        "gr-invariance",
            "margin-matrices"};
}

Report run_suite(const std::string& name) {
    if (name == "assoc-h") return assoc_h(8);
    if (name == "assoc-p") return assoc_p(8);
    if (name == "assoc-x") return assoc_x(8);
    if (name == "assoc-perm") return assoc_perm(7);
    if (name == "interpolation") return interpolation(6, 6);
    if (name == "zelevinski") return zelevinski(7);
    if (name == "basis-change") return basis_change(7);
    if (name == "commutativity-h") return commutativity_h(7);
    if (name == "embed-equivalence") return embed_equivalence(7);
    if (name == "hopf-sigma") return hopf_sigma(6);
    if (name == "hopf-lambda") return hopf_lambda(6);
    if (name == "psi-morphism") return psi_morphism(6);
    if (name == "pi-morphism") return pi_morphism(7);
    if (name == "antipode-sigma") return antipode_sigma(5);
    if (name == "antipode-qsym") return antipode_qsym(5, 5);
    if (name == "duality") return duality(5);
    if (name == "alphabet-consistency") return alphabet_consistency(4, 3);
    if (name == "perm-coproduct") return perm_coproduct(5);
    if (name == "regression") return regression_counterexamples(9);
    if (name == "egf") return egf_counts(8);
    if (name == "stirling") return stirling(6);
    if (name == "schur-weyl") return schur_weyl(3, 6);
    if (name == "cosets") return cosets(3);
    if (name == "gr-invariance") return gr_invariance(5, 6);
    if (name == "margin-matrices") return margin_matrices(7);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

} // namespace heis::verify

#include "heis/rep_oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace heis {

namespace {

constexpr int kMaxTotalDegree = 7;

void check_window(int p, int q, int n) {
    if (p + q > kMaxTotalDegree)
        throw std::domain_error("rep_oracle size guard exceeded (p+q must be <= 7)");
    if (n < std::max(p, q) || n > p + q)
        throw std::domain_error("rep_oracle: n outside [max(p,q), p+q]");
}

// All elements of the parabolic S_alpha inside S_p.
std::vector<Permutation> parabolic(const Composition& alpha) {
    std::vector<Permutation> out{Permutation::identity(alpha.weight())};
    int offset = 0;
    for (int a : alpha.parts()) {
        std::vector<Permutation> next;
        for (const Permutation& base : out) {
            for (const Permutation& block : permutations_of(a)) {
                std::vector<int> im = base.image();
                for (int i = 1; i <= a; ++i) im[offset + i - 1] = offset + block(i);
                next.emplace_back(std::move(im));
            }
        }
        out = std::move(next);
        offset += a;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// The block-sorting shuffle zeta of sigma: increasing on each alpha-block,
// with zeta(block) = sigma(block) as sets.
Permutation block_shuffle(const Permutation& sigma, const Composition& alpha) {
    std::vector<int> im(sigma.degree());
    int offset = 0;
    for (int a : alpha.parts()) {
        std::vector<int> values;
        for (int i = 1; i <= a; ++i) values.push_back(sigma(offset + i));
        std::sort(values.begin(), values.end());
        for (int i = 0; i < a; ++i) im[offset + i] = values[i];
        offset += a;
    }
    return Permutation(std::move(im));
}

} // namespace

SubgroupSpec::SubgroupSpec(std::vector<GroupElement> elements)
    : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    std::set<GroupElement> all(elements_.begin(), elements_.end());
    for (const auto& [a1, a2] : elements_) {
        if (!all.count({a1.inverse(), a2.inverse()}))
            throw std::logic_error("subgroup not closed under inverses");
        for (const auto& [b1, b2] : elements_)
            if (!all.count({a1.compose(b1), a2.compose(b2)}))
                throw std::logic_error("subgroup not closed under products");
    }
}

SubgroupSpec SubgroupSpec::parabolic_product(const Composition& alpha,
                                             const Composition& beta) {
    std::vector<GroupElement> out;
    for (const Permutation& u : parabolic(alpha))
        for (const Permutation& v : parabolic(beta)) out.emplace_back(u, v);
    return SubgroupSpec(std::move(out));
}

SubgroupSpec SubgroupSpec::fiber_product(int p, int q, int n) {
    check_window(p, q, n);
    std::vector<GroupElement> out;
    for (const Permutation& x : permutations_of(n - q))
        for (const Permutation& y : permutations_of(p + q - n))
            for (const Permutation& z : permutations_of(n - p))
                out.emplace_back(parabolic_embed(x, y), parabolic_embed(y, z));
    return SubgroupSpec(std::move(out));
}

bool SubgroupSpec::contains(const GroupElement& g) const {
    return std::binary_search(elements_.begin(), elements_.end(), g);
}

std::vector<GroupElement> double_cosets(int p, int q, int n, const Composition& alpha,
                                        const Composition& beta) {
    check_window(p, q, n);
    if (alpha.weight() != p || beta.weight() != q)
        throw std::invalid_argument("double_cosets: compositions must fit p and q");
    const SubgroupSpec left = SubgroupSpec::fiber_product(p, q, n);
    const SubgroupSpec right = SubgroupSpec::parabolic_product(alpha, beta);

    std::set<GroupElement> remaining;
    for (const Permutation& s : permutations_of(p))
        for (const Permutation& t : permutations_of(q)) remaining.insert({s, t});

    std::vector<GroupElement> reps;
    while (!remaining.empty()) {
        const GroupElement rep = *remaining.begin();
        reps.push_back(rep);
        for (const auto& [h1, h2] : left.elements()) {
            const Permutation m1 = h1.compose(rep.first);
            const Permutation m2 = h2.compose(rep.second);
            for (const auto& [k1, k2] : right.elements())
                remaining.erase({m1.compose(k1), m2.compose(k2)});
        }
    }
    return reps;
}

MarginMatrix coset_matrix(const GroupElement& rep, const Composition& alpha,
                          const Composition& beta, int n) {
    const int p = alpha.weight(), q = beta.weight();
    check_window(p, q, n);
    const Permutation& sigma = rep.first;
    const Permutation& tau = rep.second;
    const Permutation zeta_a = block_shuffle(sigma, alpha);
    const Permutation zeta_b = block_shuffle(tau, beta);
    const int k = alpha.length(), s = beta.length();

    // Rows indexed by alpha blocks, columns by beta blocks, then transposed
    // into the M^n_{alpha,beta} convention at the end.
    std::vector<std::vector<int>> m(k + 1, std::vector<int>(s + 1, 0));

    std::vector<std::set<int>> zeta_a_second(k + 1); // zeta_a(E''_i)
    int offset = 0;
    for (int i = 1; i <= k; ++i) {
        const int a = alpha.parts()[i - 1];
        for (int e = offset + 1; e <= offset + a; ++e) {
            if (zeta_a(e) <= n - q)
                ++m[i][0]; // |E'_i|
            else
                zeta_a_second[i].insert(zeta_a(e));
        }
        offset += a;
    }
    std::vector<std::set<int>> zeta_b_first_shifted(s + 1); // n-q + zeta_b(F'_j)
    offset = 0;
    for (int j = 1; j <= s; ++j) {
        const int b = beta.parts()[j - 1];
        for (int f = offset + 1; f <= offset + b; ++f) {
            if (zeta_b(f) <= p + q - n)
                zeta_b_first_shifted[j].insert(n - q + zeta_b(f));
            else
                ++m[0][j]; // |F''_j|
        }
        offset += b;
    }
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= s; ++j)
            m[i][j] = static_cast<int>(std::count_if(
                zeta_a_second[i].begin(), zeta_a_second[i].end(),
                [&](int v) { return zeta_b_first_shifted[j].count(v) > 0; }));

    std::vector<std::vector<int>> entries(s + 1, std::vector<int>(k + 1, 0));
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= s; ++j) entries[j][i] = m[i][j];

    std::vector<int> col_sums{n - p};
    col_sums.insert(col_sums.end(), alpha.parts().begin(), alpha.parts().end());
    std::vector<int> row_sums{n - q};
    row_sums.insert(row_sums.end(), beta.parts().begin(), beta.parts().end());
    return MarginMatrix(std::move(entries), std::move(col_sums), std::move(row_sums));
}

Integer coset_intersection_order(const GroupElement& rep, const Composition& alpha,
                                 const Composition& beta, int n) {
    const int p = alpha.weight(), q = beta.weight();
    check_window(p, q, n);
    const SubgroupSpec left = SubgroupSpec::fiber_product(p, q, n);
    const SubgroupSpec right = SubgroupSpec::parabolic_product(alpha, beta);
    const Permutation si = rep.first.inverse();
    const Permutation ti = rep.second.inverse();
    Integer count = 0;
    for (const auto& [g1, g2] : left.elements()) {
        const GroupElement conj{rep.first.compose(g1).compose(si),
                                rep.second.compose(g2).compose(ti)};
        if (right.contains(conj)) ++count;
    }
    return count;
}

bool dimension_identity(const Composition& alpha, const Composition& beta, int n) {
    const int p = alpha.weight(), q = beta.weight();
    check_window(p, q, n);
    Integer lhs = factorial(n) / (factorial(n - q) * factorial(p + q - n) * factorial(n - p));
    Integer dim_a = factorial(p), dim_b = factorial(q);
    for (int a : alpha.parts()) dim_a /= factorial(a);
    for (int b : beta.parts()) dim_b /= factorial(b);
    lhs *= dim_a * dim_b;

    Integer rhs = 0;
    for (const MarginMatrix& m : enumerate_margin_matrices(alpha, beta, n)) {
        Integer term = factorial(n);
        for (const auto& row : m.entries())
            for (int e : row)
                if (e > 0) term /= factorial(e);
        rhs += term;
    }
    return lhs == rhs;
}

} // namespace heis

#pragma once

#include "heis/rational.hpp"

#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace heis {

// All index types order the same way: by weight first, then lexicographically
// on the part/value sequence.  This is the canonical term order of the whole
// library; every printed expansion and every JSON document follows it.

class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // Concatenation, order preserved.
    Composition concat(const Composition& other) const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
        if (a.weight_ != b.weight_) return a.weight_ <=> b.weight_;
        return a.parts_ <=> b.parts_;
    }

    std::string str() const;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

class Partition {
public:
    Partition() = default;
    // Accepts parts in any order and sorts them decreasingly.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    Composition as_composition() const { return Composition(parts_); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        if (a.weight_ != b.weight_) return a.weight_ <=> b.weight_;
        return a.parts_ <=> b.parts_;
    }

    std::string str() const;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

class Permutation {
public:
    Permutation() = default;
    // One-line form: image[i] = sigma(i+1), values a bijection of [n].
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n);

    const std::vector<int>& image() const { return image_; }
    int degree() const { return static_cast<int>(image_.size()); }
    int operator()(int i) const { return image_[i - 1]; }

    // (s.compose(t))(i) = s(t(i)); degrees must match.
    Permutation compose(const Permutation& t) const;
    Permutation inverse() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        if (a.image_.size() != b.image_.size())
            return a.image_.size() <=> b.image_.size();
        return a.image_ <=> b.image_;
    }

    std::string str() const;

private:
    std::vector<int> image_;
};

// Margin matrix: (s+1) x (r+1) grid of non-negative integers with corner
// entry zero, column sums (n-p, a_1, ..., a_r) and row sums (n-q, b_1, ..., b_s).
class MarginMatrix {
public:
    MarginMatrix(std::vector<std::vector<int>> entries,
                 std::vector<int> col_sums, std::vector<int> row_sums);

    const std::vector<std::vector<int>>& entries() const { return entries_; }
    const std::vector<int>& col_sums() const { return col_sums_; }
    const std::vector<int>& row_sums() const { return row_sums_; }
    int rows() const { return static_cast<int>(entries_.size()); }
    int cols() const { return static_cast<int>(entries_.front().size()); }

    MarginMatrix transpose() const;

    friend bool operator==(const MarginMatrix&, const MarginMatrix&) = default;

private:
    std::vector<std::vector<int>> entries_;
    std::vector<int> col_sums_;
    std::vector<int> row_sums_;
};

// Non-zero entries read left to right, top to bottom.
Composition matrix_composition(const MarginMatrix& m);
// The same entries sorted decreasingly.
Partition matrix_partition(const MarginMatrix& m);

// The set M^n_{alpha,beta}: requires max(p,q) <= n <= p+q, enumerated in
// row-major lexicographic order on the entry grid.
std::vector<MarginMatrix> enumerate_margin_matrices(const Composition& alpha,
                                                    const Composition& beta, int n);

// All (p,q)-shuffles: xi(1)<...<xi(p) and xi(p+1)<...<xi(p+q).
std::vector<Permutation> shuffles(int p, int q);

// The shuffle of maximal length: i -> q+i for i<=p, p+j -> j.
Permutation beta_max_shuffle(int p, int q);

// Parabolic embedding of S_p x S_q into S_{p+q}.
Permutation parabolic_embed(const Permutation& s, const Permutation& t);

std::set<int> descent_set(const Permutation& s);
Composition descent_composition(const Permutation& s);

// Bijection between compositions of n and subsets of [n-1]:
// (a_1,...,a_r) <-> {a_1, a_1+a_2, ..., a_1+...+a_{r-1}}.
std::set<int> composition_to_subset(const Composition& a);
Composition subset_to_composition(const std::set<int>& subset, int n);

// z(gamma) = prod_r r^{m_r} m_r!, the centralizer order of cycle type gamma.
Integer z_factor(const Partition& g);

// Concatenation and reordering of two partitions.
Partition concat_partitions(const Partition& l, const Partition& m);

// EGF coefficient sequence of the Heisenberg product of two exponential
// generating functions, up to index N:
//   c_n = sum_{i,j<=n<=i+j} n!/((n-i)!(n-j)!(i+j-n)!) a_i b_j.
std::vector<Rational> egf_heisenberg(const std::vector<Rational>& a,
                                     const std::vector<Rational>& b, int n_max);

// Exhaustive generators used all over the test and verification suites.
std::vector<Partition> partitions_of(int n);
std::vector<Composition> compositions_of(int n);
std::vector<Permutation> permutations_of(int n);

// Replaces distinct values by their ranks in [1, len].
std::vector<int> standardize(const std::vector<int>& values);

} // namespace heis

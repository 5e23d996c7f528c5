#include "heis/combinat.hpp"

#include <algorithm>
#include <numeric>

namespace heis {

namespace {

std::string bracket_list(const std::vector<int>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

} // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0) throw std::invalid_argument("composition parts must be positive");
        weight_ += p;
    }
}

Composition Composition::concat(const Composition& other) const {
    std::vector<int> p = parts_;
    p.insert(p.end(), other.parts_.begin(), other.parts_.end());
    return Composition(std::move(p));
}

std::string Composition::str() const { return bracket_list(parts_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0) throw std::invalid_argument("partition parts must be positive");
        weight_ += p;
    }
    std::sort(parts_.rbegin(), parts_.rend());
}

std::string Partition::str() const { return bracket_list(parts_); }

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (int v : image_) {
        if (v < 1 || v > static_cast<int>(image_.size()) || seen[v - 1])
            throw std::invalid_argument("not a permutation in one-line form");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& t) const {
    if (degree() != t.degree())
        throw std::invalid_argument("composition of permutations of different degrees");
    std::vector<int> im(image_.size());
    for (size_t i = 0; i < im.size(); ++i) im[i] = image_[t.image_[i] - 1];
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(image_.size());
    for (size_t i = 0; i < im.size(); ++i) im[image_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(im));
}

std::string Permutation::str() const {
    bool digits = image_.size() <= 9;
    std::string s;
    for (size_t i = 0; i < image_.size(); ++i) {
        if (!digits && i) s += ",";
        s += std::to_string(image_[i]);
    }
    return s;
}

MarginMatrix::MarginMatrix(std::vector<std::vector<int>> entries,
                           std::vector<int> col_sums, std::vector<int> row_sums)
    : entries_(std::move(entries)), col_sums_(std::move(col_sums)),
      row_sums_(std::move(row_sums)) {
    if (entries_.empty() || entries_.front().empty())
        throw std::invalid_argument("margin matrix must have at least the corner cell");
    if (entries_[0][0] != 0)
        throw std::invalid_argument("margin matrix corner must be zero");
    if (entries_.size() != row_sums_.size() || entries_.front().size() != col_sums_.size())
        throw std::invalid_argument("margin matrix shape does not match margins");
    std::vector<int> cs(col_sums_.size(), 0);
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].size() != col_sums_.size())
            throw std::invalid_argument("ragged margin matrix");
        int rs = 0;
        for (size_t j = 0; j < entries_[i].size(); ++j) {
            if (entries_[i][j] < 0) throw std::invalid_argument("negative entry");
            rs += entries_[i][j];
            cs[j] += entries_[i][j];
        }
        if (rs != row_sums_[i]) throw std::invalid_argument("row sum mismatch");
    }
    if (cs != col_sums_) throw std::invalid_argument("column sum mismatch");
}

MarginMatrix MarginMatrix::transpose() const {
    std::vector<std::vector<int>> t(cols(), std::vector<int>(rows()));
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j) t[j][i] = entries_[i][j];
    return MarginMatrix(std::move(t), row_sums_, col_sums_);
}

Composition matrix_composition(const MarginMatrix& m) {
    std::vector<int> parts;
    for (const auto& row : m.entries())
        for (int e : row)
            if (e != 0) parts.push_back(e);
    return Composition(std::move(parts));
}

Partition matrix_partition(const MarginMatrix& m) {
    std::vector<int> parts;
    for (const auto& row : m.entries())
        for (int e : row)
            if (e != 0) parts.push_back(e);
    return Partition(std::move(parts));
}

std::vector<MarginMatrix> enumerate_margin_matrices(const Composition& alpha,
                                                    const Composition& beta, int n) {
    const int p = alpha.weight();
    const int q = beta.weight();
    if (n < std::max(p, q) || n > p + q)
        throw std::domain_error("margin matrices: n outside [max(p,q), p+q]");

    std::vector<int> col_sums;
    col_sums.push_back(n - p);
    col_sums.insert(col_sums.end(), alpha.parts().begin(), alpha.parts().end());
    std::vector<int> row_sums;
    row_sums.push_back(n - q);
    row_sums.insert(row_sums.end(), beta.parts().begin(), beta.parts().end());

    const int rows = static_cast<int>(row_sums.size());
    const int cols = static_cast<int>(col_sums.size());
    std::vector<std::vector<int>> grid(rows, std::vector<int>(cols, 0));
    std::vector<int> col_left = col_sums;
    std::vector<MarginMatrix> out;

    // Row-major backtracking, values ascending: outputs arrive in row-major
    // lexicographic order on the entry grid.
    auto fill = [&](auto&& self, int i, int j, int row_left) -> void {
        if (j == cols) {
            if (row_left != 0) return;
            if (i + 1 == rows) {
                for (int c : col_left)
                    if (c != 0) return;
                out.emplace_back(grid, col_sums, row_sums);
                return;
            }
            self(self, i + 1, 0, row_sums[i + 1]);
            return;
        }
        const bool last_row = (i + 1 == rows);
        const bool last_col = (j + 1 == cols);
        int lo = 0, hi = std::min(row_left, col_left[j]);
        if (i == 0 && j == 0) hi = 0;
        if (last_col) lo = row_left;          // forced to close the row
        if (last_row) lo = std::max(lo, col_left[j]); // forced to close the column
        if (last_row || last_col) hi = std::min(hi, std::max(lo, 0));
        for (int v = lo; v <= hi; ++v) {
            grid[i][j] = v;
            col_left[j] -= v;
            self(self, i, j + 1, row_left - v);
            col_left[j] += v;
            grid[i][j] = 0;
        }
    };
    fill(fill, 0, 0, row_sums[0]);
    return out;
}

std::vector<Permutation> shuffles(int p, int q) {
    if (p < 0 || q < 0) throw std::invalid_argument("shuffles: negative block size");
    const int n = p + q;
    std::vector<Permutation> out;
    std::vector<int> pick(p);
    std::iota(pick.begin(), pick.end(), 1);
    // Subsets of [n] of size p in lexicographic order.
    auto emit = [&] {
        std::vector<int> im(n);
        std::vector<bool> used(n + 1, false);
        for (int i = 0; i < p; ++i) {
            im[i] = pick[i];
            used[pick[i]] = true;
        }
        int k = p;
        for (int v = 1; v <= n; ++v)
            if (!used[v]) im[k++] = v;
        out.emplace_back(std::move(im));
    };
    if (p == 0) {
        out.push_back(Permutation::identity(n));
        return out;
    }
    while (true) {
        emit();
        int i = p - 1;
        while (i >= 0 && pick[i] == n - (p - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int k = i + 1; k < p; ++k) pick[k] = pick[k - 1] + 1;
    }
    return out;
}

Permutation beta_max_shuffle(int p, int q) {
    std::vector<int> im(p + q);
    for (int i = 1; i <= p; ++i) im[i - 1] = q + i;
    for (int j = 1; j <= q; ++j) im[p + j - 1] = j;
    return Permutation(std::move(im));
}

Permutation parabolic_embed(const Permutation& s, const Permutation& t) {
    const int p = s.degree(), q = t.degree();
    std::vector<int> im(p + q);
    for (int i = 1; i <= p; ++i) im[i - 1] = s(i);
    for (int j = 1; j <= q; ++j) im[p + j - 1] = p + t(j);
    return Permutation(std::move(im));
}

std::set<int> descent_set(const Permutation& s) {
    std::set<int> d;
    for (int i = 1; i < s.degree(); ++i)
        if (s(i) > s(i + 1)) d.insert(i);
    return d;
}

Composition descent_composition(const Permutation& s) {
    return subset_to_composition(descent_set(s), s.degree());
}

std::set<int> composition_to_subset(const Composition& a) {
    std::set<int> out;
    int acc = 0;
    for (size_t i = 0; i + 1 < a.parts().size(); ++i) {
        acc += a.parts()[i];
        out.insert(acc);
    }
    return out;
}

Composition subset_to_composition(const std::set<int>& subset, int n) {
    std::vector<int> parts;
    int prev = 0;
    for (int s : subset) {
        if (s <= prev || s >= n)
            throw std::invalid_argument("subset not inside [n-1]");
        parts.push_back(s - prev);
        prev = s;
    }
    if (n > 0) parts.push_back(n - prev);
    return Composition(std::move(parts));
}

Integer z_factor(const Partition& g) {
    Integer z = 1;
    size_t i = 0;
    const auto& parts = g.parts();
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const int mult = static_cast<int>(j - i);
        for (int k = 0; k < mult; ++k) z *= parts[i];
        z *= factorial(mult);
        i = j;
    }
    return z;
}

Partition concat_partitions(const Partition& l, const Partition& m) {
    std::vector<int> parts = l.parts();
    parts.insert(parts.end(), m.parts().begin(), m.parts().end());
    return Partition(std::move(parts));
}

std::vector<Rational> egf_heisenberg(const std::vector<Rational>& a,
                                     const std::vector<Rational>& b, int n_max) {
    if (static_cast<int>(a.size()) <= n_max || static_cast<int>(b.size()) <= n_max)
        throw std::invalid_argument("egf_heisenberg: sequences shorter than n_max");
    std::vector<Rational> c(n_max + 1, Rational(0));
    for (int n = 0; n <= n_max; ++n) {
        for (int i = 0; i <= n; ++i) {
            for (int j = 0; j <= n; ++j) {
                if (i + j < n) continue;
                Integer coeff = factorial(n) / (factorial(n - i) * factorial(n - j) * factorial(i + j - n));
                c[n] += Rational(coeff) * a[i] * b[j];
            }
        }
    }
    return c;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.push_back(Composition(cur));
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            cur.push_back(p);
            self(self, rest - p);
            cur.pop_back();
        }
    };
    rec(rec, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> permutations_of(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

std::vector<int> standardize(const std::vector<int>& values) {
    std::vector<int> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out(values.size());
    for (size_t i = 0; i < values.size(); ++i) {
        out[i] = static_cast<int>(
                     std::lower_bound(sorted.begin(), sorted.end(), values[i]) - sorted.begin()) +
                 1;
    }
    return out;
}

} // namespace heis

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace dlrigid {

/// Row rank by Gaussian elimination over an exact field. Field must provide
/// Elem-compatible is_zero / mul / sub / inv.
template <class Field, class Elem>
std::size_t matrix_rank(std::vector<std::vector<Elem>> rows, const Field& f) {
    const std::size_t n = rows.size();
    const std::size_t cols = n == 0 ? 0 : rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && f.is_zero(rows[piv][col])) ++piv;
        if (piv == n) continue;
        std::swap(rows[rank], rows[piv]);
        Elem inv = f.inv(rows[rank][col]);
        for (std::size_t r = rank + 1; r < n; ++r) {
            if (f.is_zero(rows[r][col])) continue;
            Elem factor = f.mul(rows[r][col], inv);
            for (std::size_t c = col; c < cols; ++c) {
                rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[rank][c]));
            }
        }
        ++rank;
    }
    return rank;
}

/// Result of a prefix-greedy elimination: which rows form the greedy basis,
/// and for every dependent row the support of its (unique) expression over
/// the earlier basis rows -- i.e. its fundamental circuit, itself included.
struct TrackedElimination {
    std::vector<std::size_t> basis;
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> dependents;
};

template <class Field, class Elem>
TrackedElimination eliminate_tracking(const std::vector<std::vector<Elem>>& rows,
                                      const Field& f) {
    const std::size_t n = rows.size();
    const std::size_t cols = n == 0 ? 0 : rows[0].size();
    TrackedElimination out;
    std::vector<std::vector<Elem>> reduced; // basis rows, each augmented with combo
    std::vector<std::size_t> pivot_col;
    std::vector<Elem> pivot_inv;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Elem> aug(cols + n, Elem{});
        for (std::size_t c = 0; c < cols; ++c) aug[c] = rows[i][c];
        aug[cols + i] = f.one();
        for (std::size_t k = 0; k < reduced.size(); ++k) {
            const Elem& lead = aug[pivot_col[k]];
            if (f.is_zero(lead)) continue;
            Elem factor = f.mul(lead, pivot_inv[k]);
            const auto& prow = reduced[k];
            for (std::size_t c = 0; c < aug.size(); ++c) {
                if (!f.is_zero(prow[c])) aug[c] = f.sub(aug[c], f.mul(factor, prow[c]));
            }
        }
        std::size_t lead_col = cols;
        for (std::size_t c = 0; c < cols; ++c) {
            if (!f.is_zero(aug[c])) {
                lead_col = c;
                break;
            }
        }
        if (lead_col == cols) {
            std::vector<std::size_t> support;
            for (std::size_t j = 0; j < n; ++j) {
                if (!f.is_zero(aug[cols + j])) support.push_back(j);
            }
            out.dependents.emplace_back(i, std::move(support));
        } else {
            pivot_col.push_back(lead_col);
            pivot_inv.push_back(f.inv(aug[lead_col]));
            reduced.push_back(std::move(aug));
            out.basis.push_back(i);
        }
    }
    return out;
}

/// Union-find over {0..n-1}.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
    }

    std::size_t find(std::size_t a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }

    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

    bool same(std::size_t a, std::size_t b) { return find(a) == find(b); }

private:
    std::vector<std::size_t> parent_;
};

} // namespace dlrigid

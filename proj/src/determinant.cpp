#include "catwalk/determinant.hpp"

#include "catwalk/errors.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace catwalk {

namespace {

Polynomial laplace_rec(const SquareMatrix& m, size_t top, uint32_t colmask) {
    // Single active column left: 1x1 base case.
    if ((colmask & (colmask - 1)) == 0) {
        for (size_t j = 0; j < m.size(); ++j) {
            if (colmask & (1u << j)) return m.at(top, j);
        }
    }
    Polynomial acc;
    int pos = 0;
    for (size_t j = 0; j < m.size(); ++j) {
        if (!(colmask & (1u << j))) continue;
        const Polynomial& pivot = m.at(top, j);
        if (!pivot.is_zero()) {
            Polynomial minor = laplace_rec(m, top + 1, colmask & ~(1u << j));
            if (pos % 2 == 0)
                acc += pivot * minor;
            else
                acc -= pivot * minor;
        }
        ++pos;
    }
    return acc;
}

// Binomial table sized for the division-free cap.
constexpr size_t kDfMax = 24;

std::array<std::array<uint64_t, kDfMax + 1>, kDfMax + 1> binomials() {
    std::array<std::array<uint64_t, kDfMax + 1>, kDfMax + 1> c{};
    for (size_t n = 0; n <= kDfMax; ++n) {
        c[n][0] = 1;
        for (size_t k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
    return c;
}

} // namespace

Polynomial det_laplace(const SquareMatrix& m, size_t cap) {
    if (m.size() > cap)
        throw Error(ErrorCode::SizeCap,
                    "det_laplace limited to " + std::to_string(cap) + "x" + std::to_string(cap));
    return laplace_rec(m, 0, (1u << m.size()) - 1);
}

Polynomial det_division_free(const SquareMatrix& m, Exec exec, size_t cap) {
    const size_t n = m.size();
    if (cap > kDfMax) cap = kDfMax;
    if (n > cap)
        throw Error(ErrorCode::SizeCap,
                    "det_division_free limited to " + std::to_string(cap) + "x" + std::to_string(cap));

    static const auto binom = binomials();

    // Colex rank of the size-k subset with ascending elements b_0 < b_1 < ...:
    // sum of C(b_i, i+1). Layer k only needs layer k-1.
    auto unrank = [&](uint64_t rank, size_t k) {
        std::vector<int> elems(k);
        for (size_t i = k; i >= 1; --i) {
            int b = static_cast<int>(i) - 1;
            while (binom[b + 1][i] <= rank) ++b;
            elems[i - 1] = b;
            rank -= binom[b][i];
        }
        return elems;
    };

    std::vector<Polynomial> prev{Polynomial(1)}; // layer 0: D[{}] = 1
    for (size_t k = 1; k <= n; ++k) {
        const size_t row = k - 1;
        std::vector<Polynomial> curr(binom[n][k]);
        const int64_t layer_size = static_cast<int64_t>(curr.size());
#pragma omp parallel for schedule(dynamic, 16) if (exec == Exec::parallel)
        for (int64_t r = 0; r < layer_size; ++r) {
            std::vector<int> elems = unrank(static_cast<uint64_t>(r), k);
            Polynomial acc;
            for (size_t p = 0; p < k; ++p) {
                const Polynomial& entry = m.at(row, static_cast<size_t>(elems[p]));
                if (entry.is_zero()) continue;
                // Rank of the subset with position p removed.
                uint64_t sub = 0;
                for (size_t i = 0; i < p; ++i) sub += binom[elems[i]][i + 1];
                for (size_t i = p + 1; i < k; ++i) sub += binom[elems[i]][i];
                Polynomial term = entry * prev[sub];
                if ((row + p) % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            curr[r] = std::move(acc);
        }
        prev = std::move(curr);
    }
    return prev[0];
}

Polynomial det_bareiss(const SquareMatrix& m, Exec exec) {
    const size_t n = m.size();
    std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    }

    bool negate = false;
    Polynomial prev_pivot(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t pivot_row = k;
        while (pivot_row < n && a[pivot_row][k].is_zero()) ++pivot_row;
        if (pivot_row == n) return Polynomial(); // structurally singular
        if (pivot_row != k) {
            std::swap(a[pivot_row], a[k]);
            negate = !negate;
        }
        const int64_t lo = static_cast<int64_t>(k) + 1;
        const int64_t hi = static_cast<int64_t>(n);
#pragma omp parallel for collapse(2) schedule(dynamic, 4) if (exec == Exec::parallel)
        for (int64_t i = lo; i < hi; ++i) {
            for (int64_t j = lo; j < hi; ++j) {
                a[i][j] = poly_exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev_pivot);
            }
        }
        prev_pivot = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

} // namespace catwalk

#include "wreathgen/intmatrix.hpp"

#include <algorithm>

namespace wreathgen {

namespace {

int leading_column(const IntVec& v) {
    for (size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) return static_cast<int>(j);
    return -1;
}

// Floor division, so remainders land in [0, |b|) for b > 0.
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

void subtract_multiple(IntVec& target, const IntVec& source, const Int& q) {
    if (q == 0) return;
    for (size_t j = 0; j < target.size(); ++j) target[j] -= q * source[j];
}

// Re-reduce entries above every pivot after the basis changed.  Each row is
// reduced against the pivots below it in increasing column order, so a later
// reduction never disturbs an earlier column.
void normalize(IntMat& basis) {
    for (size_t k = basis.size(); k-- > 0;)
        for (size_t i = k + 1; i < basis.size(); ++i) {
            int col = leading_column(basis[i]);
            Int q = floor_div(basis[k][static_cast<size_t>(col)], basis[i][static_cast<size_t>(col)]);
            subtract_multiple(basis[k], basis[i], q);
        }
}

}  // namespace

bool hnf_absorb(IntMat& basis, IntVec row) {
    bool grew = false;
    while (true) {
        int col = leading_column(row);
        if (col == -1) break;
        // locate the basis row owning this pivot column, keeping pivots sorted
        size_t pos = 0;
        while (pos < basis.size() && leading_column(basis[pos]) < col) ++pos;
        if (pos == basis.size() || leading_column(basis[pos]) > col) {
            if (row[static_cast<size_t>(col)] < 0)
                for (auto& x : row) x = -x;
            basis.insert(basis.begin() + static_cast<long>(pos), std::move(row));
            grew = true;
            break;
        }
        IntVec& pivot_row = basis[pos];
        const Int& p = pivot_row[static_cast<size_t>(col)];
        Int r = row[static_cast<size_t>(col)] % p;
        if (r == 0) {
            subtract_multiple(row, pivot_row, row[static_cast<size_t>(col)] / p);
            continue;  // eliminated this column, move right
        }
        // gcd step: shrink the pivot, then retry with the displaced row
        Int q = floor_div(row[static_cast<size_t>(col)], p);
        subtract_multiple(row, pivot_row, q);
        std::swap(pivot_row, row);
        grew = true;
    }
    if (grew) normalize(basis);
    return grew;
}

IntMat hnf(IntMat rows) {
    IntMat basis;
    for (auto& row : rows) hnf_absorb(basis, std::move(row));
    return basis;
}

bool in_span(const IntMat& basis, IntVec v) {
    for (const IntVec& b : basis) {
        int col = leading_column(b);
        if (v[static_cast<size_t>(col)] == 0) continue;
        if (v[static_cast<size_t>(col)] % b[static_cast<size_t>(col)] != 0) return false;
        subtract_multiple(v, b, v[static_cast<size_t>(col)] / b[static_cast<size_t>(col)]);
    }
    return leading_column(v) == -1;
}

std::optional<Int> lattice_index(const IntMat& basis, int r) {
    if (static_cast<int>(basis.size()) != r) return std::nullopt;
    Int prod = 1;
    for (const IntVec& b : basis) prod *= b[static_cast<size_t>(leading_column(b))];
    return prod;
}

Int bareiss_determinant(IntMat m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace wreathgen

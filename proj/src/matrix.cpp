#include "loclib/matrix.hpp"

#include <algorithm>
#include <string>

namespace loclib {

/*
 * In-place forward elimination used by rank/solve/null_space. Returns the
 * pivot column of each eliminated row, in elimination order. Pivots are the
 * first nonzero entry scanning columns left to right.
 */
static std::vector<int> eliminate(FieldMatrix& m) {
    const FieldSpec& f = m.field();
    std::vector<int> pivot_cols;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); c++) {
        int pivot = -1;
        for (int i = r; i < m.rows(); i++)
            if (m.at(i, c) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < m.cols(); j++) {
                FieldElement t = m.at(r, j);
                m.set(r, j, m.at(pivot, j));
                m.set(pivot, j, t);
            }
        FieldElement piv_inv = f.inv(m.at(r, c));
        for (int j = c; j < m.cols(); j++) m.set(r, j, f.mul(m.at(r, j), piv_inv));
        for (int i = 0; i < m.rows(); i++) {
            if (i == r) continue;
            FieldElement factor = m.at(i, c);
            if (factor == 0) continue;
            for (int j = c; j < m.cols(); j++)
                m.set(i, j, f.add(m.at(i, j), f.mul(factor, m.at(r, j))));
        }
        pivot_cols.push_back(c);
        r++;
    }
    return pivot_cols;
}

int rank(const FieldMatrix& m) {
    FieldMatrix work = m;
    return static_cast<int>(eliminate(work).size());
}

FieldMatrix transpose(const FieldMatrix& m) {
    FieldMatrix t(m.field(), m.cols(), m.rows());
    for (int i = 0; i < m.rows(); i++)
        for (int j = 0; j < m.cols(); j++) t.set(j, i, m.at(i, j));
    return t;
}

FieldMatrix matmul(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.field() != b.field()) throw DimensionMismatch("matmul over different fields");
    if (a.cols() != b.rows()) throw DimensionMismatch("matmul shape mismatch");
    const FieldSpec& f = a.field();
    FieldMatrix out(f, a.rows(), b.cols());
    for (int i = 0; i < a.rows(); i++)
        for (int l = 0; l < a.cols(); l++) {
            FieldElement v = a.at(i, l);
            if (v == 0) continue;
            for (int j = 0; j < b.cols(); j++)
                if (b.at(l, j) != 0) out.set(i, j, f.add(out.at(i, j), f.mul(v, b.at(l, j))));
        }
    return out;
}

std::vector<FieldElement> vecmat(const std::vector<FieldElement>& x, const FieldMatrix& m) {
    if (static_cast<int>(x.size()) != m.rows()) throw DimensionMismatch("vecmat shape mismatch");
    const FieldSpec& f = m.field();
    std::vector<FieldElement> y(m.cols(), 0);
    for (int i = 0; i < m.rows(); i++) {
        if (x[i] == 0) continue;
        for (int j = 0; j < m.cols(); j++)
            if (m.at(i, j) != 0) y[j] = f.add(y[j], f.mul(x[i], m.at(i, j)));
    }
    return y;
}

FieldMatrix column_submatrix(const FieldMatrix& m, const std::vector<int>& indices) {
    FieldMatrix out(m.field(), m.rows(), static_cast<int>(indices.size()));
    for (int j = 0; j < static_cast<int>(indices.size()); j++) {
        int c = indices[j];
        if (c < 0 || c >= m.cols()) throw IndexOutOfRange("column index out of range");
        for (int i = 0; i < m.rows(); i++) out.set(i, j, m.at(i, c));
    }
    return out;
}

std::optional<std::vector<FieldElement>> solve(const FieldMatrix& a,
                                               const std::vector<FieldElement>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw DimensionMismatch("solve: rows(A) != len(b)");
    // Eliminate the augmented matrix [A | b].
    FieldMatrix aug(a.field(), a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); i++) {
        for (int j = 0; j < a.cols(); j++) aug.set(i, j, a.at(i, j));
        aug.set(i, a.cols(), b[i]);
    }
    std::vector<int> pivots = eliminate(aug);
    for (int c : pivots)
        if (c == a.cols()) return std::nullopt;  // pivot in the b column: inconsistent
    std::vector<FieldElement> x(a.cols(), 0);    // free variables fixed to zero
    for (size_t r = 0; r < pivots.size(); r++) x[pivots[r]] = aug.at(static_cast<int>(r), a.cols());
    return x;
}

std::vector<std::vector<FieldElement>> null_space(const FieldMatrix& m) {
    FieldMatrix work = m;
    std::vector<int> pivots = eliminate(work);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<FieldElement>> basis;
    for (int free = 0; free < m.cols(); free++) {
        if (is_pivot[free]) continue;
        std::vector<FieldElement> v(m.cols(), 0);
        v[free] = 1;
        // Work is in reduced echelon form: pivot row r reads x[p_r] = -sum of
        // free-column entries (minus is identity in characteristic 2).
        for (size_t r = 0; r < pivots.size(); r++)
            v[pivots[r]] = work.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

FieldMatrix inverse(const FieldMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
    const int n = m.rows();
    FieldMatrix aug(m.field(), n, 2 * n);
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) aug.set(i, j, m.at(i, j));
        aug.set(i, n + i, 1);
    }
    std::vector<int> pivots = eliminate(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() >= n)
        throw RankDeficient("matrix is singular");
    FieldMatrix out(m.field(), n, n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) out.set(i, j, aug.at(i, n + j));
    return out;
}

Systematized systematize(const FieldMatrix& h) {
    const int r = h.rows(), n = h.cols();
    const FieldSpec& f = h.field();

    // Greedily pick identity-block columns scanning right to left; a column
    // is accepted when it is independent of the ones already picked. The
    // incremental basis keeps each accepted column in eliminated form.
    std::vector<std::vector<FieldElement>> basis;  // basis[i] has leading 1 at lead[i]
    std::vector<int> lead;
    std::vector<int> picked;
    for (int c = n - 1; c >= 0 && static_cast<int>(picked.size()) < r; c--) {
        std::vector<FieldElement> v(r);
        for (int i = 0; i < r; i++) v[i] = h.at(i, c);
        for (size_t b = 0; b < basis.size(); b++) {
            FieldElement factor = v[lead[b]];
            if (factor == 0) continue;
            for (int i = 0; i < r; i++) v[i] = f.add(v[i], f.mul(factor, basis[b][i]));
        }
        int l = -1;
        for (int i = 0; i < r; i++)
            if (v[i] != 0) { l = i; break; }
        if (l < 0) continue;
        FieldElement s = f.inv(v[l]);
        for (int i = 0; i < r; i++) v[i] = f.mul(v[i], s);
        basis.push_back(std::move(v));
        lead.push_back(l);
        picked.push_back(c);
    }
    if (static_cast<int>(picked.size()) < r)
        throw RankDeficient("systematize requires full row rank");

    std::sort(picked.begin(), picked.end());
    std::vector<bool> is_pivot(n, false);
    for (int c : picked) is_pivot[c] = true;

    std::vector<int> perm;
    perm.reserve(n);
    for (int c = 0; c < n; c++)
        if (!is_pivot[c]) perm.push_back(c);
    for (int c : picked) perm.push_back(c);

    FieldMatrix hp = column_submatrix(h, perm);
    std::vector<int> right(r);
    for (int i = 0; i < r; i++) right[i] = n - r + i;
    FieldMatrix t = inverse(column_submatrix(hp, right));
    return {matmul(t, hp), perm};
}

FieldMatrix unpermute_columns(const FieldMatrix& m, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != m.cols())
        throw DimensionMismatch("permutation length does not match column count");
    FieldMatrix out(m.field(), m.rows(), m.cols());
    for (int j = 0; j < m.cols(); j++)
        for (int i = 0; i < m.rows(); i++) out.set(i, perm[j], m.at(i, j));
    return out;
}

}  // namespace loclib

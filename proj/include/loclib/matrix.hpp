#ifndef LOCLIB_MATRIX_HPP
#define LOCLIB_MATRIX_HPP

#include <optional>
#include <vector>

#include "loclib/field.hpp"

namespace loclib {

/*
 * Dense row-major matrix over a GF(2^m). Sizes here are tiny (n <= ~64), so
 * everything below is plain Gaussian elimination with first-nonzero
 * pivoting; in an exact field there is no stability concern and the
 * deterministic pivot order keeps outputs reproducible.
 */
class FieldMatrix {
public:
    FieldMatrix(FieldSpec field, int rows, int cols)
        : field_(field), rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, 0) {}

    static FieldMatrix identity(FieldSpec field, int n) {
        FieldMatrix m(field, n, n);
        for (int i = 0; i < n; i++) m.set(i, i, 1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    FieldElement at(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }

    void set(int r, int c, FieldElement v) {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw IndexOutOfRange("matrix index out of range");
        if (!field_.contains(v))
            throw IndexOutOfRange("entry does not belong to the field");
        entries_[static_cast<size_t>(r) * cols_ + c] = v;
    }

    std::vector<FieldElement> row(int r) const {
        return {entries_.begin() + static_cast<size_t>(r) * cols_,
                entries_.begin() + static_cast<size_t>(r + 1) * cols_};
    }

    bool operator==(const FieldMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && entries_ == o.entries_;
    }
    bool operator!=(const FieldMatrix& o) const { return !(*this == o); }

private:
    FieldSpec field_;
    int rows_, cols_;
    std::vector<FieldElement> entries_;
};

int rank(const FieldMatrix& m);

FieldMatrix transpose(const FieldMatrix& m);

FieldMatrix matmul(const FieldMatrix& a, const FieldMatrix& b);

// y = x * M (row vector times matrix).
std::vector<FieldElement> vecmat(const std::vector<FieldElement>& x, const FieldMatrix& m);

// Selected columns in the given order; indices must lie in [0, cols).
FieldMatrix column_submatrix(const FieldMatrix& m, const std::vector<int>& indices);

// Some x with A*x = b, or nullopt if the system is inconsistent. When
// rank(A) = cols the solution is unique.
std::optional<std::vector<FieldElement>> solve(const FieldMatrix& a,
                                               const std::vector<FieldElement>& b);

// Basis of {x : M*x = 0}, one vector per row of the result.
std::vector<std::vector<FieldElement>> null_space(const FieldMatrix& m);

// Inverse of a square full-rank matrix; throws RankDeficient otherwise.
FieldMatrix inverse(const FieldMatrix& m);

struct Systematized {
    FieldMatrix h;           // [-P^T | I] (over GF(2^m) the sign is moot)
    std::vector<int> perm;   // output column j came from input column perm[j]
};

/*
 * Row-reduce H (rows x n, full row rank) into the form [-P^T | I], column
 * permuted as needed. The identity block is placed on the rightmost linearly
 * independent columns, scanning right to left, so an input already in
 * systematic form comes back unchanged with the identity permutation. The
 * row space is preserved: the output is T*H with T invertible, up to the
 * recorded column permutation.
 */
Systematized systematize(const FieldMatrix& h);

// Apply the inverse of a systematize() permutation: result column perm[j]
// takes column j of m. Restores the original column order.
FieldMatrix unpermute_columns(const FieldMatrix& m, const std::vector<int>& perm);

/*
 * Lexicographic k-subset enumerator over [0, n), in the style of
 *   Combinations c(n, k);
 *   std::vector<int> s;
 *   while (c.next(s)) { ... }
 */
class Combinations {
public:
    Combinations(int n, int k) : n_(n), k_(k), started_(false) {}

    bool next(std::vector<int>& state) {
        if (k_ > n_ || k_ < 0) return false;
        if (!started_) {
            started_ = true;
            state.resize(k_);
            for (int i = 0; i < k_; i++) state[i] = i;
            return true;
        }
        int i = k_ - 1;
        while (i >= 0 && state[i] == n_ - k_ + i) i--;
        if (i < 0) return false;
        state[i]++;
        for (int j = i + 1; j < k_; j++) state[j] = state[j - 1] + 1;
        return true;
    }

private:
    int n_, k_;
    bool started_;
};

}  // namespace loclib

#endif

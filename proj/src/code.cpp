#include "loclib/code.hpp"

#include <algorithm>
#include <string>

namespace loclib {

void CodeParams::validate() const {
    if (k < 1 || k >= n)
        throw BadParams("need 1 <= k < n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    if (d < 2 || d > n - k + 1)
        throw BadParams("need 2 <= d <= n-k+1 (Singleton), got d=" + std::to_string(d));
}

ErasurePattern::ErasurePattern(std::vector<int> idx) : erased(std::move(idx)) {
    std::sort(erased.begin(), erased.end());
    erased.erase(std::unique(erased.begin(), erased.end()), erased.end());
}

LinearCode::LinearCode(CodeParams params, FieldMatrix g, FieldMatrix h)
    : params_(params), g_(std::move(g)), h_(std::move(h)) {
    params_.validate();
    if (g_.field() != h_.field()) throw DimensionMismatch("G and H over different fields");
    if (g_.rows() != params_.k || g_.cols() != params_.n)
        throw DimensionMismatch("G must be k x n");
    if (h_.rows() != params_.n - params_.k || h_.cols() != params_.n)
        throw DimensionMismatch("H must be (n-k) x n");
    if (rank(g_) != params_.k) throw RankDeficient("rank(G) != k");
    if (rank(h_) != params_.n - params_.k) throw RankDeficient("rank(H) != n-k");

    FieldMatrix prod = matmul(g_, transpose(h_));
    for (int i = 0; i < prod.rows(); i++)
        for (int j = 0; j < prod.cols(); j++)
            if (prod.at(i, j) != 0) throw Error("G*H^T != 0");

    // Fail closed: the declared design distance must actually hold.
    if (!distance_at_least(h_, params_.d))
        throw BadParams("actual minimum distance is below the declared d=" +
                        std::to_string(params_.d));
}

LinearCode LinearCode::from_parity_check(CodeParams params, const FieldMatrix& h) {
    params.validate();
    Systematized sys = systematize(h);
    const FieldSpec& f = h.field();
    const int k = params.k, n = params.n;
    // H_sys = [P^T | I], so [I_k | P] generates the permuted code; undo the
    // permutation to line G up with the original column order.
    FieldMatrix g_perm(f, k, n);
    for (int i = 0; i < k; i++) {
        g_perm.set(i, i, 1);
        for (int j = 0; j < n - k; j++) g_perm.set(i, k + j, sys.h.at(j, i));
    }
    return LinearCode(params, unpermute_columns(g_perm, sys.perm), h);
}

std::vector<FieldElement> encode(const LinearCode& code, const std::vector<FieldElement>& x) {
    if (static_cast<int>(x.size()) != code.params().k)
        throw DimensionMismatch("encode: information vector must have length k");
    return vecmat(x, code.generator());
}

std::optional<std::vector<int>> find_dependent_columns(const FieldMatrix& h, int s) {
    if (s <= 0) return std::nullopt;
    if (s > h.cols()) return std::nullopt;
    Combinations combos(h.cols(), s);
    std::vector<int> subset;
    while (combos.next(subset)) {
        if (rank(column_submatrix(h, subset)) < s) return subset;
    }
    return std::nullopt;
}

int min_distance(const FieldMatrix& h) {
    // Any rows+1 columns are dependent, so the scan always terminates.
    for (int s = 1; s <= h.rows() + 1; s++)
        if (find_dependent_columns(h, s)) return s;
    return h.rows() + 1;
}

bool distance_at_least(const FieldMatrix& h, int d0) {
    if (d0 <= 1) return true;
    return !find_dependent_columns(h, d0 - 1).has_value();
}

std::vector<FieldElement> erasure_decode(const LinearCode& code,
                                         const std::vector<FieldElement>& y,
                                         const ErasurePattern& pattern) {
    const FieldMatrix& h = code.parity_check();
    const FieldSpec& f = code.field();
    const int n = code.params().n;
    if (static_cast<int>(y.size()) != n)
        throw DimensionMismatch("erasure_decode: codeword must have length n");
    for (int e : pattern.erased)
        if (e < 0 || e >= n) throw IndexOutOfRange("erased index out of range");
    if (pattern.erased.empty()) return y;

    // H*z^T = 0 splits as H_E * z_E = H_K * y_K (characteristic 2).
    std::vector<bool> is_erased(n, false);
    for (int e : pattern.erased) is_erased[e] = true;

    std::vector<FieldElement> rhs(h.rows(), 0);
    for (int r = 0; r < h.rows(); r++)
        for (int c = 0; c < n; c++)
            if (!is_erased[c] && h.at(r, c) != 0)
                rhs[r] = f.add(rhs[r], f.mul(h.at(r, c), y[c]));

    FieldMatrix he = column_submatrix(h, pattern.erased);
    if (rank(he) < static_cast<int>(pattern.erased.size()))
        throw TooManyErasures("erased columns are not independent; pattern not correctable");
    auto x = solve(he, rhs);
    if (!x) throw TooManyErasures("no consistent completion for the erasure pattern");

    std::vector<FieldElement> z = y;
    for (size_t j = 0; j < pattern.erased.size(); j++) z[pattern.erased[j]] = (*x)[j];
    return z;
}

bool helper_set_exists(const FieldMatrix& h, int i, const std::vector<int>& helpers) {
    const int n = h.cols();
    if (i < 0 || i >= n) throw IndexOutOfRange("symbol index out of range");
    std::vector<bool> inside(n, false);
    inside[i] = true;
    for (int l : helpers) {
        if (l < 0 || l >= n) throw IndexOutOfRange("helper index out of range");
        if (l == i) throw IndexOutOfRange("helper set must not contain the symbol itself");
        inside[l] = true;
    }
    std::vector<int> outside;
    for (int c = 0; c < n; c++)
        if (!inside[c]) outside.push_back(c);

    FieldMatrix ho = column_submatrix(h, outside);
    int base = rank(ho);
    std::vector<int> with_i = outside;
    with_i.push_back(i);
    return rank(column_submatrix(h, with_i)) > base;
}

}  // namespace loclib

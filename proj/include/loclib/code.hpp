#ifndef LOCLIB_CODE_HPP
#define LOCLIB_CODE_HPP

#include <optional>
#include <vector>

#include "loclib/matrix.hpp"

namespace loclib {

/*
 * (n, k, d) block-code parameters. d is a *design* distance: the LinearCode
 * constructor verifies that the actual minimum distance is at least d and
 * rejects the matrices otherwise.
 */
struct CodeParams {
    int n = 0;
    int k = 0;
    int d = 0;

    // J = n - k - d + 2; at least 1 for any Singleton-respecting d.
    int J() const { return n - k - d + 2; }

    void validate() const;
};

struct ErasurePattern {
    std::vector<int> erased;  // sorted, unique

    ErasurePattern() = default;
    explicit ErasurePattern(std::vector<int> idx);
};

/*
 * A linear block code given by generator G (k x n) and parity check H
 * ((n-k) x n). Construction verifies rank(G) = k, rank(H) = n - k,
 * G*H^T = 0 and that every d-1 columns of H are independent.
 */
class LinearCode {
public:
    LinearCode(CodeParams params, FieldMatrix g, FieldMatrix h);

    // Derive a systematic generator from H alone.
    static LinearCode from_parity_check(CodeParams params, const FieldMatrix& h);

    const CodeParams& params() const { return params_; }
    const FieldSpec& field() const { return h_.field(); }
    const FieldMatrix& generator() const { return g_; }
    const FieldMatrix& parity_check() const { return h_; }

private:
    CodeParams params_;
    FieldMatrix g_;
    FieldMatrix h_;
};

// y = x * G.
std::vector<FieldElement> encode(const LinearCode& code, const std::vector<FieldElement>& x);

// Lexicographically first set of s columns of H that is linearly dependent,
// or nullopt if every s columns are independent. This is the witness used in
// diagnostics.
std::optional<std::vector<int>> find_dependent_columns(const FieldMatrix& h, int s);

// Smallest s such that some s columns of H are dependent. For a full-row-rank
// H this is the code's exact minimum distance (at most rows+1).
int min_distance(const FieldMatrix& h);

// True iff every (d0 - 1)-subset of columns has full rank.
bool distance_at_least(const FieldMatrix& h, int d0);

/*
 * Recover a full codeword from its non-erased coordinates by solving H
 * restricted to the erased columns. Values of y at erased positions are
 * ignored. Throws TooManyErasures when the erased-column submatrix is rank
 * deficient (the pattern is not uniquely correctable).
 */
std::vector<FieldElement> erasure_decode(const LinearCode& code,
                                         const std::vector<FieldElement>& y,
                                         const ErasurePattern& pattern);

/*
 * True iff y_i is a fixed linear combination of {y_l : l in helpers} for all
 * codewords, i.e. some dual-space parity covers {i} plus a subset of the
 * helpers with a nonzero coefficient at i. Equivalent rank test: column h_i
 * is outside the span of the columns not in {i} or helpers. Monotone in the
 * helper set.
 */
bool helper_set_exists(const FieldMatrix& h, int i, const std::vector<int>& helpers);

}  // namespace loclib

#endif

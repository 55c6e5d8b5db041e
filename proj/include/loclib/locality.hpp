#ifndef LOCLIB_LOCALITY_HPP
#define LOCLIB_LOCALITY_HPP

#include <string>
#include <vector>

#include "loclib/code.hpp"
#include "loclib/rational.hpp"

namespace loclib {

struct TannerCheck {
    std::vector<int> support;  // sorted VN indices
    bool local = false;
};

/*
 * Bipartite check structure of a code: n variable nodes plus a list of
 * checks, each flagged local or global. Local checks are the ones that
 * define localities (their support is a local group); global checks only
 * contribute distance.
 */
struct TannerGraph {
    int n = 0;
    std::vector<TannerCheck> checks;

    std::vector<int> local_indices() const;
    std::vector<int> global_indices() const;

    // Structural sanity: supports sorted/unique/in range, every VN covered
    // by at least one check.
    void validate() const;
};

struct LocalGroupPartition {
    std::vector<std::vector<int>> groups;  // disjoint, union = [0, n)
    std::vector<int> localities;           // non-decreasing, one per group

    int group_count() const { return static_cast<int>(groups.size()); }
};

struct LocalityProfile {
    std::vector<int> loc;  // Loc(y_i) per symbol
    int r_max = 0;
    Rational r_avg;
};

/*
 * Smallest helper set that reconstructs symbol i, found by enumerating
 * candidate sets in increasing size (and lexicographic order within a size,
 * so the result is the canonical minimum repair set). Sizes are capped at k;
 * any symbol of a code with d >= 2 and no dead coordinate resolves within
 * that cap.
 */
std::vector<int> min_repair_set(const FieldMatrix& h, int k, int i);

// |min_repair_set(i)|.
int symbol_locality(const LinearCode& code, int i);

// All n localities plus exact maximum and average.
LocalityProfile locality_profile(const LinearCode& code);

/*
 * Greedy local-group partition: repeatedly take an uncovered symbol of
 * minimum locality (lowest index on ties), use its minimum repair group as
 * the next local group, and assign it the not-yet-covered members. Localities
 * come out non-decreasing and the number of groups never exceeds n - k.
 */
LocalGroupPartition build_local_groups(const LinearCode& code);

struct ValidationResult {
    bool ok = true;
    std::vector<std::string> diagnostics;
};

/*
 * Check that a graph is a locality Tanner graph for the code:
 *  (a) every VN sits in some local check of size Loc(y_i) + 1 that actually
 *      repairs it, and
 *  (b) the local checks are simultaneously realizable as linearly
 *      independent dual parities (checked exactly via the subspaces of dual
 *      words supported within each check).
 */
ValidationResult validate_locality_tanner(const TannerGraph& graph, const LinearCode& code);

struct CoverageResult {
    bool ok = true;
    std::vector<int> witness;  // violating check subset when !ok
};

/*
 * Distance certificate for graphs whose local CNs each own a private VN and
 * whose global CNs touch all n VNs (throws HypothesisViolated otherwise;
 * fall back to coverage_sweep in that case): the minimum distance
 * reaches d over a large enough field iff every J local CNs cover at least
 * J + k VNs, J = n - k - d + 2.
 */
CoverageResult coverage_check(const TannerGraph& graph, int k, int d);

// The unconditional criterion: every gamma-subset of all CNs must cover at
// least gamma + k VNs for every gamma in [J, n-k].
CoverageResult coverage_sweep(const TannerGraph& graph, int k, int d);

}  // namespace loclib

#endif

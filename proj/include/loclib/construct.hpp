#ifndef LOCLIB_CONSTRUCT_HPP
#define LOCLIB_CONSTRUCT_HPP

#include <cstdint>
#include <map>
#include <random>
#include <set>

#include "loclib/bounds.hpp"
#include "loclib/locality.hpp"

namespace loclib {

/*
 * Tanner-level layout of an average-locality-optimal LRC before any field
 * coefficients are chosen. Groups list VN indices (classes 2 and 3 overlap);
 * group-to-index assignment is contiguous ascending so plans are canonical
 * and diffable. expected_profile maps locality -> symbol count and its mean
 * equals the applicable average-locality bound by construction.
 */
struct ConstructionPlan {
    int class_id = 0;
    CodeParams params;
    std::vector<std::vector<int>> local_groups;
    int global_checks = 0;
    int theta_star = -1;  // class 3 only
    int b_theta = 0;      // class 3 only: 1 iff the overlap group exists
    int r_last = -1;      // class 3 only: locality of the overlap group
    std::map<int, int> expected_profile;

    Rational expected_avg() const;
};

struct RealizationConfig {
    FieldSpec field;
    std::uint64_t seed = 1;
    int max_retries = 200;
};

// Which construction classes accept (n,k,d). Numeric applicability only;
// the plan builders additionally reject layouts that would need local
// groups of fewer than two symbols.
std::set<int> applicability(int n, int k, int d);

// Disjoint local groups only; needs (ceil(k/J)+1) | (d-2). Meets the
// general average-locality bound.
ConstructionPlan plan_class1(int n, int k, int d);

// One chain of overlapping groups; needs J | (k-1) and
// floor((d-2)/(ceil(k/J)+1)) >= ceil(k/J) - (d-2) mod (ceil(k/J)+1).
// Meets the general average-locality bound.
ConstructionPlan plan_class2(int n, int k, int d);

// Theta-optimized layout; needs the rate condition. Meets the tight bound.
ConstructionPlan plan_class3(int n, int k, int d);

// Asserts every structural invariant of a plan (sizes, cover, check budget,
// coverage certificate, profile average vs the applicable bound).
void validate_plan(const ConstructionPlan& plan);

TannerGraph plan_to_tanner(const ConstructionPlan& plan);

// One coefficient draw for a graph: per-check rows with uniform nonzero
// entries on the support. No rank or distance guarantee.
FieldMatrix random_parity_check(const TannerGraph& graph, const FieldSpec& field,
                                std::mt19937_64& rng);

/*
 * Realize a Tanner graph as an actual code: draw coefficients with the
 * seeded generator, accept when H has full rank and verified distance d,
 * retry with a fresh derived seed otherwise. Deterministic for a given
 * (graph, field, seed). Throws RealizationFailed when the budget runs out
 * (typically: field too small for the required independence).
 */
LinearCode realize_tanner(const TannerGraph& graph, CodeParams params,
                          const RealizationConfig& cfg);

// realize_tanner on the plan's graph, plus a locality-oracle check of the
// plan's expected profile (ProfileMismatch on disagreement).
LinearCode realize(const ConstructionPlan& plan, const RealizationConfig& cfg);

// The explicit (16,10,5) code over GF(256)/0x11D carried as verbatim
// generator data, with H derived from the generator's unit columns.
LinearCode embedded_g0();

// The generator transpose as stored (16 rows of 10 decimal bytes).
const std::vector<std::vector<int>>& g0_transpose_rows();

}  // namespace loclib

#endif

#ifndef LOCLIB_REPAIR_HPP
#define LOCLIB_REPAIR_HPP

#include "loclib/locality.hpp"

namespace loclib {

/*
 * Node and block sizes in abstract capacity units. A node holds
 * node_capacity / block_size coded blocks; rebuilding a full node costs
 * r_avg * node_capacity units of download.
 */
struct RepairConfig {
    long long node_capacity = 1;  // S_DN
    long long block_size = 1;     // S_Blk

    void validate() const {
        if (block_size <= 0 || node_capacity < block_size)
            throw BadParams("need node_capacity >= block_size > 0");
    }
};

struct RepairReport {
    int failed_index = 0;
    std::vector<int> helpers;    // canonical minimum repair set
    int symbols_downloaded = 0;  // == |helpers| == Loc(y_i)
    Rational bandwidth;          // in block units (block_size = 1)
};

struct NodeFailureStats {
    Rational avg_symbols_per_block;  // == r_avg
    int r_max = 0;
    Rational blocks_per_node;     // node_capacity / block_size
    Rational bandwidth;           // r_avg * node_capacity
    std::vector<RepairReport> per_symbol;
};

struct MultiRepairResult {
    std::vector<FieldElement> codeword;
    // (erased index, symbols read to repair it), in repair order: locally
    // peeled symbols first, then the jointly solved remainder.
    std::vector<std::pair<int, int>> costs;
    std::vector<int> peeled;
    std::vector<int> globally_solved;
};

// Canonical single-symbol repair: the lexicographically smallest helper set
// of minimum size, costing Loc(y_i) downloads.
RepairReport repair_single(const LinearCode& code, const LocalityProfile& profile, int i);

// Value of y[i] recomputed from the given helpers through a dual parity
// covering {i} + helpers. helpers must satisfy helper_set_exists.
FieldElement local_repair_value(const LinearCode& code, const std::vector<FieldElement>& y,
                                int i, const std::vector<int>& helpers);

// Whole-node accounting: per-symbol repair table plus the exact averages.
NodeFailureStats node_failure_stats(const LinearCode& code, const RepairConfig& cfg);

// Relative reduction 1 - improved/baseline.
Rational improvement_ratio(const Rational& baseline, const Rational& improved);

// Canonical minimum repair set of every symbol, computed once; feed it to
// multi_erasure_repair when repairing many patterns of the same code.
std::vector<std::vector<int>> all_min_repair_sets(const LinearCode& code);

/*
 * Repair up to d-1 erasures: first peel every erased symbol whose canonical
 * minimum repair set is fully available (cost = its locality), iterating to
 * a fixpoint; whatever survives is solved jointly from all remaining
 * available symbols (cost = number of symbols the joint solve reads).
 */
MultiRepairResult multi_erasure_repair(const LinearCode& code,
                                       const std::vector<FieldElement>& y,
                                       const ErasurePattern& pattern);

MultiRepairResult multi_erasure_repair(const LinearCode& code,
                                       const std::vector<FieldElement>& y,
                                       const ErasurePattern& pattern,
                                       const std::vector<std::vector<int>>& repair_sets);

}  // namespace loclib

#endif

#include "loclib/repair.hpp"

#include <algorithm>
#include <string>

namespace loclib {

RepairReport repair_single(const LinearCode& code, const LocalityProfile& profile, int i) {
    const int n = code.params().n;
    if (i < 0 || i >= n) throw IndexOutOfRange("repair index out of range");
    RepairReport rep;
    rep.failed_index = i;
    rep.helpers = min_repair_set(code.parity_check(), code.params().k, i);
    rep.symbols_downloaded = static_cast<int>(rep.helpers.size());
    if (rep.symbols_downloaded != profile.loc[i])
        throw Error("repair set size disagrees with the locality profile");
    rep.bandwidth = Rational(rep.symbols_downloaded);
    return rep;
}

FieldElement local_repair_value(const LinearCode& code, const std::vector<FieldElement>& y,
                                int i, const std::vector<int>& helpers) {
    const FieldMatrix& h = code.parity_check();
    const FieldSpec& f = code.field();
    const int n = code.params().n;

    // A dual word supported within {i} + helpers and nonzero at i: w = u*H
    // with u in the left null space of the outside columns. Some basis
    // element must be nonzero at i, or the helpers do not repair i at all.
    std::vector<bool> inside(n, false);
    inside[i] = true;
    for (int l : helpers) inside[l] = true;
    std::vector<int> outside;
    for (int c = 0; c < n; c++)
        if (!inside[c]) outside.push_back(c);

    for (const auto& u : null_space(transpose(column_submatrix(h, outside)))) {
        std::vector<FieldElement> w = vecmat(u, h);
        if (w[i] == 0) continue;
        FieldElement acc = 0;
        for (int l : helpers)
            if (w[l] != 0) acc = f.add(acc, f.mul(w[l], y[l]));
        return f.div(acc, w[i]);  // w_i*y_i + acc = 0, characteristic 2
    }
    throw Error("helpers do not determine symbol " + std::to_string(i));
}

NodeFailureStats node_failure_stats(const LinearCode& code, const RepairConfig& cfg) {
    cfg.validate();
    LocalityProfile profile = locality_profile(code);
    NodeFailureStats stats;
    stats.avg_symbols_per_block = profile.r_avg;
    stats.r_max = profile.r_max;
    stats.blocks_per_node = Rational(cfg.node_capacity, cfg.block_size);
    stats.bandwidth = profile.r_avg * Rational(cfg.node_capacity);
    for (int i = 0; i < code.params().n; i++)
        stats.per_symbol.push_back(repair_single(code, profile, i));
    return stats;
}

Rational improvement_ratio(const Rational& baseline, const Rational& improved) {
    return Rational(1) - improved / baseline;
}

std::vector<std::vector<int>> all_min_repair_sets(const LinearCode& code) {
    std::vector<std::vector<int>> sets(code.params().n);
    for (int i = 0; i < code.params().n; i++)
        sets[i] = min_repair_set(code.parity_check(), code.params().k, i);
    return sets;
}

MultiRepairResult multi_erasure_repair(const LinearCode& code,
                                       const std::vector<FieldElement>& y,
                                       const ErasurePattern& pattern) {
    std::vector<std::vector<int>> repair_sets(code.params().n);
    for (int e : pattern.erased)
        if (e >= 0 && e < code.params().n)
            repair_sets[e] = min_repair_set(code.parity_check(), code.params().k, e);
    return multi_erasure_repair(code, y, pattern, repair_sets);
}

MultiRepairResult multi_erasure_repair(const LinearCode& code,
                                       const std::vector<FieldElement>& y,
                                       const ErasurePattern& pattern,
                                       const std::vector<std::vector<int>>& repair_sets) {
    const int n = code.params().n;
    if (static_cast<int>(y.size()) != n)
        throw DimensionMismatch("codeword must have length n");
    if (static_cast<int>(repair_sets.size()) != n)
        throw DimensionMismatch("need one repair set slot per symbol");
    if (static_cast<int>(pattern.erased.size()) > code.params().d - 1)
        throw TooManyErasures("more than d-1 erasures requested");

    MultiRepairResult out;
    out.codeword = y;
    std::vector<bool> erased(n, false);
    for (int e : pattern.erased) {
        if (e < 0 || e >= n) throw IndexOutOfRange("erased index out of range");
        erased[e] = true;
    }

    // Peeling pass: repair any symbol whose canonical minimum repair set is
    // intact, then retry the rest until nothing moves.
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 0; i < n; i++) {
            if (!erased[i]) continue;
            const std::vector<int>& helpers = repair_sets[i];
            bool available = std::none_of(helpers.begin(), helpers.end(),
                                          [&](int l) { return erased[l]; });
            if (!available) continue;
            out.codeword[i] = local_repair_value(code, out.codeword, i, helpers);
            erased[i] = false;
            out.peeled.push_back(i);
            out.costs.emplace_back(i, static_cast<int>(helpers.size()));
            progress = true;
        }
    }

    std::vector<int> survivors;
    for (int i = 0; i < n; i++)
        if (erased[i]) survivors.push_back(i);
    if (!survivors.empty()) {
        out.codeword = erasure_decode(code, out.codeword, ErasurePattern(survivors));
        const int read = n - static_cast<int>(survivors.size());
        for (int i : survivors) {
            out.globally_solved.push_back(i);
            out.costs.emplace_back(i, read);
        }
    }
    return out;
}

}  // namespace loclib

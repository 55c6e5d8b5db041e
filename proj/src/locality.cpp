#include "loclib/locality.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace loclib {

std::vector<int> TannerGraph::local_indices() const {
    std::vector<int> out;
    for (int c = 0; c < static_cast<int>(checks.size()); c++)
        if (checks[c].local) out.push_back(c);
    return out;
}

std::vector<int> TannerGraph::global_indices() const {
    std::vector<int> out;
    for (int c = 0; c < static_cast<int>(checks.size()); c++)
        if (!checks[c].local) out.push_back(c);
    return out;
}

void TannerGraph::validate() const {
    std::vector<bool> covered(n, false);
    for (const TannerCheck& chk : checks) {
        if (chk.support.empty()) throw ShapeMismatch("check with empty support");
        int prev = -1;
        for (int v : chk.support) {
            if (v < 0 || v >= n) throw IndexOutOfRange("check support index out of range");
            if (v <= prev) throw ShapeMismatch("check support must be sorted and unique");
            prev = v;
            covered[v] = true;
        }
    }
    for (int v = 0; v < n; v++)
        if (!covered[v]) throw ShapeMismatch("VN " + std::to_string(v) + " appears in no check");
}

std::vector<int> min_repair_set(const FieldMatrix& h, int k, int i) {
    const int n = h.cols();
    if (i < 0 || i >= n) throw IndexOutOfRange("symbol index out of range");
    std::vector<int> candidates;
    for (int c = 0; c < n; c++)
        if (c != i) candidates.push_back(c);

    std::vector<int> picks;
    for (int t = 1; t <= k; t++) {
        Combinations combos(static_cast<int>(candidates.size()), t);
        while (combos.next(picks)) {
            std::vector<int> helpers(t);
            for (int j = 0; j < t; j++) helpers[j] = candidates[picks[j]];
            if (helper_set_exists(h, i, helpers)) return helpers;
        }
    }
    throw Error("symbol " + std::to_string(i) + " has no repair set of size <= k");
}

int symbol_locality(const LinearCode& code, int i) {
    return static_cast<int>(min_repair_set(code.parity_check(), code.params().k, i).size());
}

LocalityProfile locality_profile(const LinearCode& code) {
    const int n = code.params().n;
    LocalityProfile p;
    p.loc.resize(n);
    long long sum = 0;
    for (int i = 0; i < n; i++) {
        p.loc[i] = symbol_locality(code, i);
        sum += p.loc[i];
        p.r_max = std::max(p.r_max, p.loc[i]);
    }
    p.r_avg = Rational(sum, n);
    return p;
}

LocalGroupPartition build_local_groups(const LinearCode& code) {
    const int n = code.params().n;
    const FieldMatrix& h = code.parity_check();

    std::vector<int> loc(n);
    for (int i = 0; i < n; i++) loc[i] = symbol_locality(code, i);

    LocalGroupPartition part;
    std::vector<bool> covered(n, false);
    int covered_count = 0;
    while (covered_count < n) {
        int pick = -1;
        for (int i = 0; i < n; i++)
            if (!covered[i] && (pick < 0 || loc[i] < loc[pick])) pick = i;

        std::vector<int> group = min_repair_set(h, code.params().k, pick);
        group.push_back(pick);
        std::sort(group.begin(), group.end());

        std::vector<int> fresh;
        for (int v : group)
            if (!covered[v]) fresh.push_back(v);
        for (int v : fresh) covered[v] = true;
        covered_count += static_cast<int>(fresh.size());

        part.groups.push_back(std::move(fresh));
        part.localities.push_back(loc[pick]);
    }
    return part;
}

/*
 * Basis of the dual words supported within the given VN set: combinations
 * u*H with u in the left null space of H restricted to the complement.
 */
static std::vector<std::vector<FieldElement>> dual_words_within(const FieldMatrix& h,
                                                                const std::vector<int>& support) {
    const int n = h.cols();
    std::vector<bool> inside(n, false);
    for (int v : support) inside[v] = true;
    std::vector<int> outside;
    for (int c = 0; c < n; c++)
        if (!inside[c]) outside.push_back(c);

    std::vector<std::vector<FieldElement>> coeffs =
        null_space(transpose(column_submatrix(h, outside)));
    std::vector<std::vector<FieldElement>> words;
    for (const auto& u : coeffs) words.push_back(vecmat(u, h));
    return words;
}

static int stacked_rank(const FieldSpec& f, const std::vector<std::vector<FieldElement>>& rows,
                        int n) {
    FieldMatrix m(f, static_cast<int>(rows.size()), n);
    for (int i = 0; i < static_cast<int>(rows.size()); i++)
        for (int j = 0; j < n; j++) m.set(i, j, rows[i][j]);
    return rank(m);
}

ValidationResult validate_locality_tanner(const TannerGraph& graph, const LinearCode& code) {
    const int n = code.params().n;
    if (graph.n != n) throw ShapeMismatch("graph and code disagree on n");
    graph.validate();

    ValidationResult res;
    const FieldMatrix& h = code.parity_check();
    std::vector<int> locals = graph.local_indices();

    if (static_cast<int>(locals.size()) > n - code.params().k) {
        res.ok = false;
        res.diagnostics.push_back("more local checks than n-k");
    }

    // (a) each VN must be repaired by some local check of size Loc+1.
    for (int i = 0; i < n; i++) {
        int want = symbol_locality(code, i) + 1;
        bool found = false;
        for (int c : locals) {
            const std::vector<int>& s = graph.checks[c].support;
            if (static_cast<int>(s.size()) != want) continue;
            if (!std::binary_search(s.begin(), s.end(), i)) continue;
            std::vector<int> helpers;
            for (int v : s)
                if (v != i) helpers.push_back(v);
            if (helper_set_exists(h, i, helpers)) { found = true; break; }
        }
        if (!found) {
            res.ok = false;
            res.diagnostics.push_back("VN " + std::to_string(i) +
                                      " has no local check of degree Loc+1 = " +
                                      std::to_string(want));
        }
    }

    // (b) one independent dual parity per local check must exist. Exact
    // transversal criterion: for every subset T of local checks, the dual
    // words supported within its members must span at least |T| dimensions.
    std::vector<std::vector<std::vector<FieldElement>>> spaces;
    for (int c : locals) {
        auto words = dual_words_within(h, graph.checks[c].support);
        if (words.empty()) {
            res.ok = false;
            res.diagnostics.push_back("local check " + std::to_string(c) +
                                      " supports no dual parity");
        }
        spaces.push_back(std::move(words));
    }
    const int m = static_cast<int>(spaces.size());
    if (m <= 20) {
        // Exact transversal criterion (Rado): independent representatives
        // exist iff every subset of checks spans at least its own size.
        for (unsigned mask = 1; mask < (1u << m); mask++) {
            std::vector<std::vector<FieldElement>> stacked;
            int size = 0;
            for (int b = 0; b < m; b++)
                if (mask & (1u << b)) {
                    size++;
                    stacked.insert(stacked.end(), spaces[b].begin(), spaces[b].end());
                }
            if (stacked_rank(code.field(), stacked, n) < size) {
                res.ok = false;
                res.diagnostics.push_back("local checks are not independently realizable (mask " +
                                          std::to_string(mask) + ")");
                break;
            }
        }
    } else {
        // Beyond the exact sweep's range, settle for the joint-span check.
        std::vector<std::vector<FieldElement>> stacked;
        for (const auto& words : spaces)
            stacked.insert(stacked.end(), words.begin(), words.end());
        if (stacked_rank(code.field(), stacked, n) < m) {
            res.ok = false;
            res.diagnostics.push_back("local checks span fewer dimensions than their count");
        }
    }
    return res;
}

static int cover_size(const TannerGraph& graph, const std::vector<int>& check_subset) {
    std::set<int> cover;
    for (int c : check_subset)
        cover.insert(graph.checks[c].support.begin(), graph.checks[c].support.end());
    return static_cast<int>(cover.size());
}

CoverageResult coverage_check(const TannerGraph& graph, int k, int d) {
    graph.validate();
    const int n = graph.n;
    const int J = n - k - d + 2;
    if (k < 1 || k >= n || J < 1) throw BadParams("invalid (n,k,d) for coverage check");

    std::vector<int> locals = graph.local_indices();

    // Hypotheses first: every local CN owns a VN private to it among local
    // CNs, and every global CN touches all n VNs.
    std::vector<int> local_degree(n, 0);
    for (int c : locals)
        for (int v : graph.checks[c].support) local_degree[v]++;
    for (int c : locals) {
        bool has_private = false;
        for (int v : graph.checks[c].support)
            if (local_degree[v] == 1) { has_private = true; break; }
        if (!has_private)
            throw HypothesisViolated("local check " + std::to_string(c) +
                                     " has no private VN; use coverage_sweep");
    }
    for (int c : graph.global_indices())
        if (static_cast<int>(graph.checks[c].support.size()) != n)
            throw HypothesisViolated("global check " + std::to_string(c) +
                                     " does not touch all VNs; use coverage_sweep");

    if (J > static_cast<int>(locals.size())) {
        // Fewer than J local CNs: with the hypotheses above the J-subset
        // condition is vacuous only if globals fill in; defer to the sweep.
        return coverage_sweep(graph, k, d);
    }

    Combinations combos(static_cast<int>(locals.size()), J);
    std::vector<int> picks;
    while (combos.next(picks)) {
        std::vector<int> subset;
        for (int p : picks) subset.push_back(locals[p]);
        if (cover_size(graph, subset) < J + k) return {false, subset};
    }
    return {};
}

CoverageResult coverage_sweep(const TannerGraph& graph, int k, int d) {
    graph.validate();
    const int n = graph.n;
    const int J = n - k - d + 2;
    if (k < 1 || k >= n || J < 1) throw BadParams("invalid (n,k,d) for coverage sweep");

    const int total = static_cast<int>(graph.checks.size());
    for (int gamma = J; gamma <= total; gamma++) {
        Combinations combos(total, gamma);
        std::vector<int> subset;
        while (combos.next(subset)) {
            if (cover_size(graph, subset) < gamma + k) return {false, subset};
        }
    }
    return {};
}

}  // namespace loclib

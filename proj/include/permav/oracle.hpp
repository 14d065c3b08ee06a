#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permav/perm.hpp"
#include "permav/ratfunc.hpp"

namespace permav {

/// Ground-truth counts from direct enumeration, indexed by length.
/// indecomposable_counts[0] is always 0; class_counts[0] is 1.
struct OracleCounts {
    Series class_counts;
    Series indecomposable_counts;
    int n_max = 0;
};

/// Level-by-level generation: children of each avoider arise by inserting
/// the new maximum at every position, filtered by avoidance. Deliberately
/// naive; guarded at desk scale.
OracleCounts enumerate_class(const Basis& basis, int n_max);

/// As enumerate_class, also returning the avoiders per length.
OracleCounts enumerate_class(const Basis& basis, int n_max,
                             std::vector<std::vector<Permutation>>* levels);

/// True iff no proper nonempty prefix of positions occupies an initial
/// segment of values (so the permutation is not a direct sum of two nonempty
/// permutations; length 1 is indecomposable, 12 is not). Throws on the empty
/// permutation.
bool is_sum_indecomposable(const Permutation& pi);

/// Cross-validation verdict for one basis.
struct CompareReport {
    bool regular = false;
    bool checked = false;   // automata were built and compared
    bool ok = false;        // oracle and automaton series agree
    OracleCounts oracle;
    Series automaton_class;
    Series automaton_indecomposable;
    std::optional<int> first_mismatch_length;
    std::string mismatch_kind;  // "class" or "indecomposable"
};

/// Build both automata (when the class is regular), compute both series and
/// diff them against the oracle.
CompareReport compare(const Basis& basis, int n_max);

}  // namespace permav

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permav/automaton.hpp"
#include "permav/perm.hpp"
#include "permav/ratfunc.hpp"

namespace permav {

/// One orbit of bases under the eight symmetries of the square. Symmetries
/// preserve counting but not slot-boundedness (inverse turns vertical
/// alternations into horizontal ones), so an orbit is enumerable as soon as
/// one member passes the regularity check; all members share the resulting
/// generating function.
struct SurveyRow {
    int symmetry_class_id = 0;
    Basis representative;                // lexicographically least member
    std::vector<Basis> members;
    bool regular = false;                // some member passes check_regular
    std::vector<bool> member_regular;    // parallel to members
    std::optional<Basis> enumerated_member;  // first regular member, when any
    std::string failing_condition;       // representative's, when not regular
    std::optional<RationalFunction> gf;  // canonical, when regular
    Series series;                       // prefix, when regular
    int automaton_states = 0;            // raw construction size
    int minimized_states = 0;
    int slot_bound = 0;
};

struct SurveyResult {
    int pattern_length = 0;
    int basis_size = 0;
    long basis_count = 0;
    std::vector<SurveyRow> rows;           // sorted by representative
    int regular_class_count = 0;
    int distinct_gf_count = 0;             // among regular symmetry classes
    std::vector<std::vector<int>> gf_groups;  // class ids per distinct gf
};

struct SurveyOptions {
    int series_length = 8;
    /// Build every member basis of each regular class and check that the
    /// canonical generating functions agree across the orbit.
    bool verify_members = true;
};

/// Enumerate all `size`-subsets of length-`length` permutations as bases,
/// group them into symmetry classes, test regularity per class, and compute
/// the generating function of each regular class. Desk-scale guard:
/// length <= 4 and size <= 2.
SurveyResult survey(int length, int size, const SurveyOptions& options = {});

}  // namespace permav

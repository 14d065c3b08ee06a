#pragma once

#include <array>
#include <optional>
#include <string>

#include "permav/perm.hpp"

namespace permav {

/// The two unavoidable shapes of long vertical alternations, in the drawn
/// orientation and its reversal.
enum class AlternationFamily { Parallel, Wedge, ParallelReversed, WedgeReversed };

/// One of the four finiteness conditions: the class avoids arbitrarily long
/// alternations of `family` iff some basis element lies in the fixed
/// avoidance class attached to that family.
struct RegularityCheck {
    AlternationFamily family;
    std::string name;
    bool passed = false;
    std::optional<Permutation> witness;  // a basis element inside the fixed class
};

struct RegularityReport {
    bool regular = false;
    std::array<RegularityCheck, 4> checks;
    std::optional<int> slot_bound;  // filled in after automaton construction

    const RegularityCheck* first_failing() const {
        for (const auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }
};

/// The defining patterns of the avoidance class attached to a family.
const std::vector<Permutation>& family_patterns(AlternationFamily family);

std::string to_string(AlternationFamily family);

/// Decide whether Av(basis) has a regular insertion encoding: all four
/// finiteness conditions must hold.
RegularityReport check_regular(const Basis& basis);

/// The length-n vertical alternation of the given family, n even and >= 2.
Permutation alternation_witness(AlternationFamily family, int n);

class NotRegularError : public Error {
public:
    explicit NotRegularError(RegularityReport report)
        : Error("class does not have a regular insertion encoding (failing condition: " +
                (report.first_failing() ? report.first_failing()->name : std::string("?")) +
                ")"),
          report_(std::move(report)) {}

    const RegularityReport& report() const { return report_; }

private:
    RegularityReport report_;
};

}  // namespace permav

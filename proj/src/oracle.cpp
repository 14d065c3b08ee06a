#include "permav/oracle.hpp"

#include "permav/automaton.hpp"
#include "permav/regularity.hpp"

namespace permav {

namespace {
constexpr int kMaxOracleLength = 14;
}

OracleCounts enumerate_class(const Basis& basis, int n_max,
                             std::vector<std::vector<Permutation>>* levels) {
    if (n_max < 0) throw InvalidArgumentError("oracle length must be nonnegative");
    if (n_max > kMaxOracleLength)
        throw GuardError("oracle_length", "brute-force enumeration limited to length " +
                                              std::to_string(kMaxOracleLength));
    OracleCounts out;
    out.n_max = n_max;
    out.class_counts.emplace_back(1);  // the empty permutation
    out.indecomposable_counts.emplace_back(0);
    std::vector<Permutation> level{Permutation{}};
    if (levels) levels->push_back(level);
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Permutation> next;
        for (const Permutation& parent : level) {
            for (int pos = 0; pos < n; ++pos) {
                std::vector<std::uint8_t> entries = parent.entries();
                entries.insert(entries.begin() + pos, static_cast<std::uint8_t>(n));
                Permutation child = Permutation::unchecked(std::move(entries));
                if (avoids(child, basis)) next.push_back(std::move(child));
            }
        }
        level = std::move(next);
        out.class_counts.emplace_back(level.size());
        mpz_class indec = 0;
        for (const Permutation& p : level)
            if (is_sum_indecomposable(p)) ++indec;
        out.indecomposable_counts.push_back(std::move(indec));
        if (levels) levels->push_back(level);
    }
    return out;
}

OracleCounts enumerate_class(const Basis& basis, int n_max) {
    return enumerate_class(basis, n_max, nullptr);
}

bool is_sum_indecomposable(const Permutation& pi) {
    if (pi.empty())
        throw InvalidArgumentError("sum indecomposability is defined for nonempty permutations");
    int prefix_max = 0;
    for (std::size_t i = 0; i + 1 < pi.size(); ++i) {
        prefix_max = std::max(prefix_max, pi[i]);
        if (prefix_max == static_cast<int>(i) + 1) return false;
    }
    return true;
}

CompareReport compare(const Basis& basis, int n_max) {
    CompareReport report;
    report.oracle = enumerate_class(basis, n_max);
    report.regular = check_regular(basis).regular;
    if (!report.regular) return report;

    Automaton cls = build(basis);
    Automaton ind = build_indecomposable(basis);
    report.automaton_class = series_from_automaton(cls, n_max);
    report.automaton_indecomposable = series_from_automaton(ind, n_max);
    report.checked = true;
    report.ok = true;
    for (int n = 0; n <= n_max; ++n) {
        const std::size_t i = static_cast<std::size_t>(n);
        if (report.automaton_class[i] != report.oracle.class_counts[i]) {
            report.ok = false;
            report.first_mismatch_length = n;
            report.mismatch_kind = "class";
            break;
        }
        if (report.automaton_indecomposable[i] != report.oracle.indecomposable_counts[i]) {
            report.ok = false;
            report.first_mismatch_length = n;
            report.mismatch_kind = "indecomposable";
            break;
        }
    }
    return report;
}

}  // namespace permav

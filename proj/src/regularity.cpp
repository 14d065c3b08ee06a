#include "permav/regularity.hpp"

namespace permav {

const std::vector<Permutation>& family_patterns(AlternationFamily family) {
    static const std::vector<Permutation> parallel = {{1, 2, 3}, {3, 1, 4, 2}, {3, 4, 1, 2}};
    static const std::vector<Permutation> wedge = {{1, 3, 2}, {3, 1, 2}};
    static const std::vector<Permutation> parallel_rev = {{3, 2, 1}, {2, 1, 4, 3}, {2, 4, 1, 3}};
    static const std::vector<Permutation> wedge_rev = {{2, 1, 3}, {2, 3, 1}};
    switch (family) {
        case AlternationFamily::Parallel: return parallel;
        case AlternationFamily::Wedge: return wedge;
        case AlternationFamily::ParallelReversed: return parallel_rev;
        case AlternationFamily::WedgeReversed: return wedge_rev;
    }
    throw InvalidArgumentError("unknown alternation family");
}

std::string to_string(AlternationFamily family) {
    switch (family) {
        case AlternationFamily::Parallel: return "parallel";
        case AlternationFamily::Wedge: return "wedge";
        case AlternationFamily::ParallelReversed: return "parallel_reversed";
        case AlternationFamily::WedgeReversed: return "wedge_reversed";
    }
    return "?";
}

namespace {

bool in_class(const Permutation& p, const std::vector<Permutation>& patterns) {
    for (const auto& beta : patterns)
        if (contains(p, beta)) return false;
    return true;
}

}  // namespace

RegularityReport check_regular(const Basis& basis) {
    RegularityReport report;
    const AlternationFamily families[4] = {
        AlternationFamily::Parallel, AlternationFamily::Wedge,
        AlternationFamily::ParallelReversed, AlternationFamily::WedgeReversed};
    report.regular = true;
    for (int i = 0; i < 4; ++i) {
        RegularityCheck& chk = report.checks[i];
        chk.family = families[i];
        chk.name = to_string(families[i]);
        for (const auto& beta : basis.elements()) {
            if (in_class(beta, family_patterns(families[i]))) {
                chk.passed = true;
                chk.witness = beta;
                break;
            }
        }
        report.regular = report.regular && chk.passed;
    }
    return report;
}

Permutation alternation_witness(AlternationFamily family, int n) {
    if (n < 2 || n % 2 != 0)
        throw InvalidArgumentError("alternation length must be even and >= 2");
    const int m = n / 2;
    std::vector<std::uint8_t> entries(static_cast<std::size_t>(n));
    switch (family) {
        case AlternationFamily::Parallel:
        case AlternationFamily::ParallelReversed:
            // odd positions descend through the low half, even through the high
            for (int i = 1; i <= m; ++i) {
                entries[2 * i - 2] = static_cast<std::uint8_t>(m - i + 1);
                entries[2 * i - 1] = static_cast<std::uint8_t>(2 * m - i + 1);
            }
            break;
        case AlternationFamily::Wedge:
        case AlternationFamily::WedgeReversed:
            // interleaved wedge closing to the right
            for (int i = 1; i <= m; ++i) {
                entries[2 * i - 2] = static_cast<std::uint8_t>(m + i);
                entries[2 * i - 1] = static_cast<std::uint8_t>(m - i + 1);
            }
            break;
    }
    Permutation p(std::move(entries));
    if (family == AlternationFamily::ParallelReversed || family == AlternationFamily::WedgeReversed)
        p = reverse(p);
    return p;
}

}  // namespace permav

#include "permav/survey.hpp"

#include <algorithm>
#include <map>

#include "permav/errors.hpp"
#include "permav/regularity.hpp"

namespace permav {

namespace {

std::vector<Permutation> all_permutations(int n) {
    std::vector<std::uint8_t> entries(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) entries[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i + 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::unchecked(entries));
    } while (std::next_permutation(entries.begin(), entries.end()));
    return out;
}

std::vector<Permutation> basis_image(const Basis& b, int sym) {
    std::vector<Permutation> out;
    out.reserve(b.size());
    for (const auto& p : b.elements()) out.push_back(apply_symmetry(p, sym));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

SurveyResult survey(int length, int size, const SurveyOptions& options) {
    if (length < 1 || length > 4 || size < 1 || size > 2)
        throw GuardError("survey_scale", "survey is guarded to pattern length <= 4 and basis size <= 2");

    const std::vector<Permutation> patterns = all_permutations(length);

    // all size-subsets as normalized bases (equal-length distinct patterns
    // are automatically an antichain)
    std::vector<Basis> bases;
    if (size == 1) {
        for (const auto& p : patterns) bases.push_back(Basis::normalize({p}));
    } else {
        for (std::size_t i = 0; i < patterns.size(); ++i)
            for (std::size_t j = i + 1; j < patterns.size(); ++j)
                bases.push_back(Basis::normalize({patterns[i], patterns[j]}));
    }

    // group into orbits under the eight symmetries, keyed by the least image
    std::map<std::vector<Permutation>, std::vector<Basis>> orbits;
    for (const auto& b : bases) {
        std::vector<Permutation> key = basis_image(b, 0);
        for (int sym = 1; sym < 8; ++sym) key = std::min(key, basis_image(b, sym));
        orbits[std::move(key)].push_back(b);
    }

    SurveyResult result;
    result.pattern_length = length;
    result.basis_size = size;
    result.basis_count = static_cast<long>(bases.size());

    int id = 0;
    for (auto& [key, members] : orbits) {
        SurveyRow row;
        row.symmetry_class_id = id++;
        row.representative = Basis::normalize({key.begin(), key.end()});
        std::sort(members.begin(), members.end(),
                  [](const Basis& a, const Basis& b) { return a.elements() < b.elements(); });
        row.members = std::move(members);

        for (const Basis& member : row.members)
            row.member_regular.push_back(check_regular(member).regular);
        for (std::size_t i = 0; i < row.members.size(); ++i) {
            if (row.member_regular[i]) {
                row.regular = true;
                row.enumerated_member = row.members[i];
                break;
            }
        }
        if (!row.regular) {
            row.failing_condition = check_regular(row.representative).first_failing()->name;
        } else {
            Automaton a = build(*row.enumerated_member);
            Automaton m = minimize(a);
            row.automaton_states = a.state_count();
            row.minimized_states = m.state_count();
            row.slot_bound = a.slot_bound;
            row.gf = gf_from_automaton(m);
            row.series = series_from_automaton(a, options.series_length);
            ++result.regular_class_count;

            if (options.verify_members) {
                for (std::size_t i = 0; i < row.members.size(); ++i) {
                    if (!row.member_regular[i] || row.members[i] == *row.enumerated_member)
                        continue;
                    RationalFunction member_gf = gf_from_automaton(minimize(build(row.members[i])));
                    if (!(member_gf == *row.gf))
                        throw Error("survey: generating function differs within the orbit of " +
                                    to_string(row.representative) + " at member " +
                                    to_string(row.members[i]));
                }
            }
        }
        result.rows.push_back(std::move(row));
    }

    // Wilf grouping among regular classes, by canonical generating function
    std::map<std::string, std::vector<int>> by_gf;
    for (const auto& row : result.rows)
        if (row.regular) by_gf[to_string(*row.gf)].push_back(row.symmetry_class_id);
    result.distinct_gf_count = static_cast<int>(by_gf.size());
    for (auto& [gf, ids] : by_gf) result.gf_groups.push_back(ids);

    return result;
}

}  // namespace permav

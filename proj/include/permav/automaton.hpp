#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "permav/config.hpp"
#include "permav/ratfunc.hpp"
#include "permav/regularity.hpp"

namespace permav {

/// Deterministic partial automaton over insertion letters. States carry the
/// canonical (reduced) valid configuration that represents them; missing
/// transitions are an implicit dead sink. At most one state is slotless; it
/// is the accept state.
class Automaton {
public:
    enum class Kind { Class, SumIndecomposable };

    struct Transition {
        Letter letter;
        int to;
    };

    Kind kind = Kind::Class;
    std::vector<Configuration> reps;               // state id -> representative
    int initial = 0;
    std::vector<int> accepts;                      // slotless states
    std::vector<std::vector<Transition>> out;      // ordered by letter
    int slot_bound = 0;                            // max slots over reps

    int state_count() const { return static_cast<int>(reps.size()); }
    long transition_count() const {
        long n = 0;
        for (const auto& v : out) n += static_cast<long>(v.size());
        return n;
    }
    bool is_accepting(int s) const;

    /// Walk a word from the initial state; nullopt on a missing transition.
    std::optional<int> walk(const InsertionWord& w) const;
    bool accepts_word(const InsertionWord& w) const;
};

struct BuildGuards {
    long max_states = 200000;
    int max_slots = 16;
};

/// Knobs used by the property-test suites; defaults give the canonical
/// construction.
struct BuildOptions {
    BuildGuards guards;
    bool force = false;  // skip the regularity gate
    enum class Direction { Leftmost, Rightmost };
    Direction direction = Direction::Leftmost;
    /// When set, identifications at matching (configuration, position) pairs
    /// are skipped during reduction.
    std::function<bool(const Configuration&, std::size_t)> skip_identification;
};

/// Is the entry at `pos` deletable without changing the Myhill-Nerode class?
/// Decided by the bounded weak-distinguisher search: no word of length at
/// most b-1 may separate c from its deletion. Entries flanked by two slots
/// are never reducible. Throws InvalidArgumentError when `pos` is out of
/// range or names a slot.
bool ie_reducible(const Configuration& c, std::size_t pos, const Basis& basis);

/// Canonical form: repeatedly delete the leftmost IE-reducible value,
/// re-standardizing, until none remains. Requires c valid for the basis.
Configuration reduce(const Configuration& c, const Basis& basis);

/// BFS over valid configurations collapsed by IE-reduction. Throws
/// NotRegularError unless the class passes the regularity check (or
/// options.force is set); throws GuardError when a resource guard trips.
Automaton build(const Basis& basis, const BuildOptions& options = {});

/// Variant accepting the insertion encodings of the sum indecomposable
/// members: non-initial configurations whose only slot is final are
/// rejected, and the rightmost item is never identified away.
Automaton build_indecomposable(const Basis& basis, const BuildOptions& options = {});

Automaton build_automaton(const Basis& basis, Automaton::Kind kind,
                          const BuildOptions& options = {});

/// Classical DFA minimization (partition refinement over the completed
/// automaton, dead sink removed afterwards). Language-preserving.
Automaton minimize(const Automaton& a);

/// Number of accepted words per length, by integer dynamic programming on
/// the transition relation. Index 0 carries the empty-permutation convention
/// for class automata (1) and is 0 for indecomposable automata.
Series series_from_automaton(const Automaton& a, int n_max);

/// Exact generating function by Cramer's rule on the transfer system
/// (I - xM) F = [accept], solved with fraction-free elimination. Class
/// automata get the empty permutation's +1.
RationalFunction gf_from_automaton(const Automaton& a);

/// Machine-readable export: {states:[{id,rep}], initial, accepts,
/// transitions:[{from,kind,slot,to}]}.
std::string to_json(const Automaton& a);
Automaton automaton_from_json(const std::string& text,
                              Automaton::Kind kind = Automaton::Kind::Class);

std::string to_dot(const Automaton& a);

}  // namespace permav

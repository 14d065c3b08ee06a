#include "permav/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "json.hpp"

namespace permav {

bool Automaton::is_accepting(int s) const {
    return std::find(accepts.begin(), accepts.end(), s) != accepts.end();
}

std::optional<int> Automaton::walk(const InsertionWord& w) const {
    int s = initial;
    for (const Letter& a : w) {
        const auto& ts = out[static_cast<std::size_t>(s)];
        auto it = std::find_if(ts.begin(), ts.end(),
                               [&](const Transition& t) { return t.letter == a; });
        if (it == ts.end()) return std::nullopt;
        s = it->to;
    }
    return s;
}

bool Automaton::accepts_word(const InsertionWord& w) const {
    auto s = walk(w);
    return s && is_accepting(*s);
}

namespace {

// Shared state for one construction: the basis, the validity and reduction
// caches, and the canonicalization knobs.
class Builder {
public:
    Builder(const Basis& basis, Automaton::Kind kind, const BuildOptions& options)
        : basis_(basis), kind_(kind), options_(options) {}

    bool valid(const Configuration& c) {
        auto it = valid_cache_.find(c);
        if (it != valid_cache_.end()) return it->second;
        bool v = is_valid(c, basis_);
        valid_cache_.emplace(c, v);
        return v;
    }

    // --- exact residual fingerprint -------------------------------------
    //
    // A completion of c assigns a nonempty sequence of new maxima to every
    // slot, so the words accepted from c are determined by the slot count
    // together with which "suffix assignments" of basis elements are still
    // realizable: a copy of beta in any completion splits into its j
    // smallest values (already present in c) and its top values, landing in
    // specific slots. The set of live (beta, j, slot vector) triples
    // therefore determines the residual language exactly, and two
    // configurations with equal slot counts and equal live sets are
    // indistinguishable. Deleting an entry can only shrink the live set, so
    // a deletion is safe iff every live triple survives it.
    //
    // The bounded word search of the reducibility test is kept as a fast,
    // always-correct rejection path; the live-set comparison supplies the
    // soundness that the length bound alone does not (deletions accepted by
    // the depth-(b-1) search alone can merge distinguishable states; see
    // the regression test on Av(1234,3241)).

    using LiveSet = std::vector<std::uint64_t>;

    // does sigma (slots for the top values of beta, by position) admit an
    // embedding of the j smallest values of beta into c's entries?
    bool assignment_live(const Configuration& c, const Permutation& beta, int j,
                         const std::vector<int>& y_positions, const std::vector<int>& sigma,
                         const std::vector<int>& slot_pos) {
        std::vector<int> x_positions;
        for (std::size_t p = 0; p < beta.size(); ++p)
            if (beta[p] <= j) x_positions.push_back(static_cast<int>(p));
        // value positions of c
        std::vector<int> value_pos;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!c.is_slot(i)) value_pos.push_back(static_cast<int>(i));

        // windows: for every Y position, the slot must sit strictly between
        // the images of the neighbouring X positions
        std::vector<int> q(x_positions.size(), -1);
        const auto& items = c.items();

        std::function<bool(std::size_t, int)> place = [&](std::size_t xi, int min_item) -> bool {
            if (xi == x_positions.size()) {
                // Y entries after the last X position need slots to the right
                for (std::size_t yi = 0; yi < y_positions.size(); ++yi) {
                    if (x_positions.empty() || y_positions[yi] > x_positions.back()) {
                        int sp = slot_pos[static_cast<std::size_t>(sigma[yi] - 1)];
                        if (!x_positions.empty() && sp < q.back()) return false;
                    }
                }
                return true;
            }
            const int bp = x_positions[xi];
            for (int vp : value_pos) {
                if (vp < min_item) continue;
                // windows for Y positions between the previous X and this one
                bool ok = true;
                for (std::size_t yi = 0; yi < y_positions.size() && ok; ++yi) {
                    const int yp = y_positions[yi];
                    const bool after_prev = xi == 0 || yp > x_positions[xi - 1];
                    if (after_prev && yp < bp) {
                        const int sp = slot_pos[static_cast<std::size_t>(sigma[yi] - 1)];
                        if (xi > 0 && sp < q[xi - 1]) ok = false;
                        if (sp > vp) ok = false;
                    }
                }
                if (!ok) continue;
                // order isomorphism with previously placed X entries
                for (std::size_t t = 0; t < xi && ok; ++t) {
                    const bool c_less = items[static_cast<std::size_t>(q[t])] <
                                        items[static_cast<std::size_t>(vp)];
                    const bool b_less = beta[static_cast<std::size_t>(x_positions[t])] <
                                        beta[static_cast<std::size_t>(bp)];
                    if (c_less != b_less) ok = false;
                }
                if (!ok) continue;
                q[xi] = vp;
                if (place(xi + 1, vp + 1)) return true;
            }
            return false;
        };
        return place(0, 0);
    }

    const LiveSet& live_set(const Configuration& c) {
        auto it = live_cache_.find(c);
        if (it != live_cache_.end()) return it->second;

        LiveSet live;
        const std::vector<std::size_t> slot_positions = c.slot_positions();
        std::vector<int> slot_pos(slot_positions.begin(), slot_positions.end());
        const int s = static_cast<int>(slot_pos.size());
        if (s == 0) return live_cache_.emplace(c, std::move(live)).first->second;
        for (std::size_t bi = 0; bi < basis_.elements().size(); ++bi) {
            const Permutation& beta = basis_.elements()[bi];
            const int len = static_cast<int>(beta.size());
            if (len - 1 > 8 || s > 63 || basis_.elements().size() > 255)
                throw GuardError("live_set_encoding",
                                 "residual fingerprint supports basis elements of length <= 9");
            for (int j = 1; j < len; ++j) {
                std::vector<int> y_positions;
                for (std::size_t p = 0; p < beta.size(); ++p)
                    if (beta[p] > j) y_positions.push_back(static_cast<int>(p));
                std::vector<int> sigma(y_positions.size(), 1);
                // weakly increasing slot vectors over the Y positions
                for (;;) {
                    if (assignment_live(c, beta, j, y_positions, sigma, slot_pos))
                        live.push_back(encode_assignment(bi, j, sigma));
                    std::size_t k = sigma.size();
                    while (k > 0 && sigma[k - 1] == s) --k;
                    if (k == 0) break;
                    ++sigma[k - 1];
                    for (std::size_t t = k; t < sigma.size(); ++t) sigma[t] = sigma[k - 1];
                }
            }
        }
        return live_cache_.emplace(c, std::move(live)).first->second;
    }

    static std::uint64_t encode_assignment(std::size_t beta_idx, int j,
                                           const std::vector<int>& sigma) {
        std::uint64_t key = (static_cast<std::uint64_t>(beta_idx) << 8) |
                            static_cast<std::uint64_t>(j);
        for (int slot : sigma) key = (key << 6) | static_cast<std::uint64_t>(slot);
        return key;
    }

    // A word of length <= depth weakly distinguishes the pair iff exactly one
    // side can still be completed. Both sides always hold the same number of
    // slots, so the same letters apply to both.
    bool weakly_distinguished(const Configuration& a, const Configuration& b, int depth) {
        const bool va = valid(a), vb = valid(b);
        if (va != vb) return true;
        if (!va) return false;  // both dead: stays dead under every extension
        if (depth == 0) return false;
        const int s = a.slot_count();
        for (int slot = 1; slot <= s; ++slot) {
            for (LetterKind k : {LetterKind::M, LetterKind::L, LetterKind::R, LetterKind::F}) {
                Letter letter{k, slot};
                if (weakly_distinguished(apply_letter(a, letter), apply_letter(b, letter),
                                         depth - 1))
                    return true;
            }
        }
        return false;
    }

    bool reducible_at(const Configuration& c, std::size_t pos) {
        if (pos >= c.size() || c.is_slot(pos))
            throw InvalidArgumentError("IE-reducibility is asked of a value position");
        const bool slot_left = pos > 0 && c.is_slot(pos - 1);
        const bool slot_right = pos + 1 < c.size() && c.is_slot(pos + 1);
        if (slot_left && slot_right) return false;  // deletion would merge slots
        Configuration deleted = delete_and_standardize(c, pos);
        if (weakly_distinguished(c, deleted, basis_.max_len() - 1)) return false;
        return live_set(c) == live_set(deleted);
    }

    Configuration canonical(const Configuration& c) {
        const bool cacheable = !options_.skip_identification;
        if (cacheable) {
            auto it = reduce_cache_.find(c);
            if (it != reduce_cache_.end()) return it->second;
        }
        Configuration cur = c;
        for (;;) {
            bool deleted = false;
            const std::size_t n = cur.size();
            for (std::size_t step = 0; step < n; ++step) {
                const std::size_t i =
                    options_.direction == BuildOptions::Direction::Leftmost ? step
                                                                            : n - 1 - step;
                if (cur.is_slot(i)) continue;
                if (kind_ == Automaton::Kind::SumIndecomposable && i == n - 1)
                    continue;  // the rightmost item is never identified away
                if (options_.skip_identification && options_.skip_identification(cur, i))
                    continue;
                if (reducible_at(cur, i)) {
                    cur = delete_and_standardize(cur, i);
                    deleted = true;
                    break;
                }
            }
            if (!deleted) break;
        }
        if (cacheable) reduce_cache_.emplace(c, cur);
        return cur;
    }

    Automaton run() {
        Automaton a;
        a.kind = kind_;
        const Configuration start = Configuration::initial();
        a.reps.push_back(start);
        a.out.emplace_back();
        if (valid(start)) {
            std::unordered_map<Configuration, int, ConfigurationHash> ids;
            ids.emplace(start, 0);
            std::deque<int> frontier{0};
            while (!frontier.empty()) {
                const int sid = frontier.front();
                frontier.pop_front();
                const Configuration rep = a.reps[static_cast<std::size_t>(sid)];
                const int slots = rep.slot_count();
                for (int slot = 1; slot <= slots; ++slot) {
                    for (LetterKind k :
                         {LetterKind::M, LetterKind::L, LetterKind::R, LetterKind::F}) {
                        const Letter letter{k, slot};
                        Configuration child = apply_letter(rep, letter);
                        if (kind_ == Automaton::Kind::SumIndecomposable &&
                            child.only_slot_at_end())
                            continue;  // evolves only sum decomposable permutations
                        if (!valid(child)) continue;
                        if (child.slot_count() > options_.guards.max_slots)
                            throw GuardError("max_slots",
                                             "slot count exceeded guard max_slots=" +
                                                 std::to_string(options_.guards.max_slots));
                        Configuration canon = canonical(child);
                        auto [it, inserted] = ids.emplace(canon, static_cast<int>(a.reps.size()));
                        if (inserted) {
                            if (static_cast<long>(a.reps.size()) >= options_.guards.max_states)
                                throw GuardError("max_states",
                                                 "state count exceeded guard max_states=" +
                                                     std::to_string(options_.guards.max_states));
                            a.reps.push_back(std::move(canon));
                            a.out.emplace_back();
                            frontier.push_back(it->second);
                        }
                        a.out[static_cast<std::size_t>(sid)].push_back({letter, it->second});
                    }
                }
            }
        }
        for (int s = 0; s < a.state_count(); ++s) {
            if (a.reps[static_cast<std::size_t>(s)].slotless()) a.accepts.push_back(s);
            a.slot_bound =
                std::max(a.slot_bound, a.reps[static_cast<std::size_t>(s)].slot_count());
        }
        return a;
    }

private:
    const Basis& basis_;
    Automaton::Kind kind_;
    const BuildOptions& options_;
    std::unordered_map<Configuration, bool, ConfigurationHash> valid_cache_;
    std::unordered_map<Configuration, Configuration, ConfigurationHash> reduce_cache_;
    std::unordered_map<Configuration, LiveSet, ConfigurationHash> live_cache_;
};

}  // namespace

bool ie_reducible(const Configuration& c, std::size_t pos, const Basis& basis) {
    BuildOptions options;
    Builder b(basis, Automaton::Kind::Class, options);
    return b.reducible_at(c, pos);
}

Configuration reduce(const Configuration& c, const Basis& basis) {
    BuildOptions options;
    Builder b(basis, Automaton::Kind::Class, options);
    return b.canonical(c);
}

Automaton build_automaton(const Basis& basis, Automaton::Kind kind, const BuildOptions& options) {
    if (!options.force) {
        RegularityReport report = check_regular(basis);
        if (!report.regular) throw NotRegularError(std::move(report));
    }
    Builder b(basis, kind, options);
    return b.run();
}

Automaton build(const Basis& basis, const BuildOptions& options) {
    return build_automaton(basis, Automaton::Kind::Class, options);
}

Automaton build_indecomposable(const Basis& basis, const BuildOptions& options) {
    return build_automaton(basis, Automaton::Kind::SumIndecomposable, options);
}

namespace {

std::vector<Letter> full_alphabet(int max_slots) {
    std::vector<Letter> letters;
    for (int slot = 1; slot <= max_slots; ++slot)
        for (LetterKind k : {LetterKind::M, LetterKind::L, LetterKind::R, LetterKind::F})
            letters.push_back({k, slot});
    return letters;
}

}  // namespace

Automaton minimize(const Automaton& a) {
    const int n = a.state_count();
    Automaton empty_lang;
    empty_lang.kind = a.kind;
    empty_lang.reps = {a.reps[static_cast<std::size_t>(a.initial)]};
    empty_lang.out.emplace_back();
    empty_lang.slot_bound = empty_lang.reps[0].slot_count();
    if (a.accepts.empty()) return empty_lang;

    const std::vector<Letter> alphabet = full_alphabet(a.slot_bound);
    const int sink = n;

    // complete transition table, missing edges to the sink
    std::vector<std::vector<int>> delta(static_cast<std::size_t>(n) + 1,
                                        std::vector<int>(alphabet.size(), sink));
    for (int s = 0; s < n; ++s)
        for (const auto& t : a.out[static_cast<std::size_t>(s)]) {
            auto it = std::find(alphabet.begin(), alphabet.end(), t.letter);
            delta[static_cast<std::size_t>(s)][static_cast<std::size_t>(it - alphabet.begin())] =
                t.to;
        }

    std::vector<int> cls(static_cast<std::size_t>(n) + 1, 0);
    for (int s : a.accepts) cls[static_cast<std::size_t>(s)] = 1;
    int classes = 2;
    for (;;) {
        std::map<std::vector<int>, int> signature_ids;
        std::vector<int> next(cls.size());
        for (std::size_t s = 0; s < cls.size(); ++s) {
            std::vector<int> sig;
            sig.reserve(alphabet.size() + 1);
            sig.push_back(cls[s]);
            for (std::size_t ai = 0; ai < alphabet.size(); ++ai)
                sig.push_back(cls[static_cast<std::size_t>(delta[s][ai])]);
            auto [it, inserted] = signature_ids.emplace(std::move(sig),
                                                        static_cast<int>(signature_ids.size()));
            next[s] = it->second;
        }
        const int count = static_cast<int>(signature_ids.size());
        cls = std::move(next);
        if (count == classes) break;
        classes = count;
    }

    const int sink_cls = cls[static_cast<std::size_t>(sink)];
    if (cls[static_cast<std::size_t>(a.initial)] == sink_cls) return empty_lang;

    // representative (minimum-id) original state per class
    std::vector<int> class_state(static_cast<std::size_t>(classes), -1);
    for (int s = 0; s < n; ++s) {
        int c = cls[static_cast<std::size_t>(s)];
        if (class_state[static_cast<std::size_t>(c)] < 0)
            class_state[static_cast<std::size_t>(c)] = s;
    }

    // breadth-first renumbering of reachable classes, sink dropped
    Automaton m;
    m.kind = a.kind;
    std::vector<int> new_id(static_cast<std::size_t>(classes), -1);
    std::deque<int> frontier;
    const int init_cls = cls[static_cast<std::size_t>(a.initial)];
    new_id[static_cast<std::size_t>(init_cls)] = 0;
    m.reps.push_back(a.reps[static_cast<std::size_t>(class_state[static_cast<std::size_t>(init_cls)])]);
    m.out.emplace_back();
    frontier.push_back(init_cls);
    while (!frontier.empty()) {
        const int c = frontier.front();
        frontier.pop_front();
        const int from = new_id[static_cast<std::size_t>(c)];
        const int src = class_state[static_cast<std::size_t>(c)];
        for (std::size_t ai = 0; ai < alphabet.size(); ++ai) {
            const int t = delta[static_cast<std::size_t>(src)][ai];
            if (t == sink) continue;
            const int tc = cls[static_cast<std::size_t>(t)];
            if (tc == sink_cls) continue;
            if (new_id[static_cast<std::size_t>(tc)] < 0) {
                new_id[static_cast<std::size_t>(tc)] = m.state_count();
                m.reps.push_back(
                    a.reps[static_cast<std::size_t>(class_state[static_cast<std::size_t>(tc)])]);
                m.out.emplace_back();
                frontier.push_back(tc);
            }
            m.out[static_cast<std::size_t>(from)].push_back(
                {alphabet[ai], new_id[static_cast<std::size_t>(tc)]});
        }
    }
    m.initial = 0;
    for (int s : a.accepts) {
        const int c = new_id[static_cast<std::size_t>(cls[static_cast<std::size_t>(s)])];
        if (c >= 0 && !m.is_accepting(c)) m.accepts.push_back(c);
    }
    std::sort(m.accepts.begin(), m.accepts.end());
    for (const auto& rep : m.reps) m.slot_bound = std::max(m.slot_bound, rep.slot_count());
    return m;
}

Series series_from_automaton(const Automaton& a, int n_max) {
    if (n_max < 0) throw InvalidArgumentError("series length must be nonnegative");
    Series counts;
    counts.reserve(static_cast<std::size_t>(n_max) + 1);
    counts.emplace_back(a.kind == Automaton::Kind::Class ? 1 : 0);
    std::vector<mpz_class> v(static_cast<std::size_t>(a.state_count()), 0);
    v[static_cast<std::size_t>(a.initial)] = 1;
    std::vector<mpz_class> w(v.size());
    for (int n = 1; n <= n_max; ++n) {
        std::fill(w.begin(), w.end(), mpz_class(0));
        for (int s = 0; s < a.state_count(); ++s) {
            if (v[static_cast<std::size_t>(s)] == 0) continue;
            for (const auto& t : a.out[static_cast<std::size_t>(s)])
                w[static_cast<std::size_t>(t.to)] += v[static_cast<std::size_t>(s)];
        }
        std::swap(v, w);
        mpz_class total = 0;
        for (int s : a.accepts) total += v[static_cast<std::size_t>(s)];
        counts.push_back(std::move(total));
    }
    return counts;
}

RationalFunction gf_from_automaton(const Automaton& a) {
    const RationalFunction empty_part =
        RationalFunction::constant(a.kind == Automaton::Kind::Class ? 1 : 0);
    if (a.accepts.empty()) return empty_part;

    const std::size_t n = static_cast<std::size_t>(a.state_count());
    // A = I - x M, with M counting letters between states
    std::vector<std::vector<Poly>> A(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long> edge_count(n, 0);
        for (const auto& t : a.out[i]) ++edge_count[static_cast<std::size_t>(t.to)];
        for (std::size_t j = 0; j < n; ++j) {
            Poly entry = (i == j) ? Poly::constant(1) : Poly();
            if (edge_count[j] != 0) entry = entry - Poly{0, edge_count[j]};
            A[i][j] = std::move(entry);
        }
    }
    Poly det_a = bareiss_determinant(A);

    // Cramer: replace the initial column with the accept indicator
    for (std::size_t i = 0; i < n; ++i)
        A[i][static_cast<std::size_t>(a.initial)] =
            a.is_accepting(static_cast<int>(i)) ? Poly::constant(1) : Poly();
    Poly det_b = bareiss_determinant(std::move(A));

    return empty_part + RationalFunction(std::move(det_b), std::move(det_a));
}

std::string to_json(const Automaton& a) {
    nlohmann::ordered_json j;
    j["states"] = nlohmann::ordered_json::array();
    for (int s = 0; s < a.state_count(); ++s)
        j["states"].push_back(
            {{"id", s}, {"rep", to_string(a.reps[static_cast<std::size_t>(s)])}});
    j["initial"] = a.initial;
    j["accepts"] = a.accepts;
    j["transitions"] = nlohmann::ordered_json::array();
    for (int s = 0; s < a.state_count(); ++s)
        for (const auto& t : a.out[static_cast<std::size_t>(s)])
            j["transitions"].push_back({{"from", s},
                                        {"kind", std::string(1, to_char(t.letter.kind))},
                                        {"slot", t.letter.slot},
                                        {"to", t.to}});
    return j.dump(2);
}

Automaton automaton_from_json(const std::string& text, Automaton::Kind kind) {
    nlohmann::json j = nlohmann::json::parse(text);
    Automaton a;
    a.kind = kind;
    const auto& states = j.at("states");
    a.reps.resize(states.size());
    a.out.resize(states.size());
    for (const auto& st : states) {
        const int id = st.at("id").get<int>();
        if (id < 0 || id >= static_cast<int>(states.size()))
            throw InvalidArgumentError("automaton import: state id out of range");
        a.reps[static_cast<std::size_t>(id)] =
            parse_configuration(st.at("rep").get<std::string>());
    }
    a.initial = j.at("initial").get<int>();
    for (const auto& acc : j.at("accepts")) a.accepts.push_back(acc.get<int>());
    for (const auto& tr : j.at("transitions")) {
        const int from = tr.at("from").get<int>();
        const std::string kind_s = tr.at("kind").get<std::string>();
        if (kind_s.size() != 1)
            throw InvalidArgumentError("automaton import: bad letter kind");
        LetterKind lk;
        switch (kind_s[0]) {
            case 'm': lk = LetterKind::M; break;
            case 'l': lk = LetterKind::L; break;
            case 'r': lk = LetterKind::R; break;
            case 'f': lk = LetterKind::F; break;
            default: throw InvalidArgumentError("automaton import: bad letter kind");
        }
        a.out[static_cast<std::size_t>(from)].push_back(
            {{lk, tr.at("slot").get<int>()}, tr.at("to").get<int>()});
    }
    for (const auto& rep : a.reps) a.slot_bound = std::max(a.slot_bound, rep.slot_count());
    return a;
}

std::string to_dot(const Automaton& a) {
    std::string out = "digraph insertion_automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
    out += "  __start [shape=point];\n";
    for (int s = 0; s < a.state_count(); ++s) {
        out += "  s" + std::to_string(s) + " [label=\"" +
               to_string(a.reps[static_cast<std::size_t>(s)]) + "\"";
        if (a.is_accepting(s)) out += ", shape=doublecircle";
        out += "];\n";
    }
    out += "  __start -> s" + std::to_string(a.initial) + ";\n";
    for (int s = 0; s < a.state_count(); ++s)
        for (const auto& t : a.out[static_cast<std::size_t>(s)])
            out += "  s" + std::to_string(s) + " -> s" + std::to_string(t.to) + " [label=\"" +
                   to_string(t.letter) + "\"];\n";
    out += "}\n";
    return out;
}

}  // namespace permav

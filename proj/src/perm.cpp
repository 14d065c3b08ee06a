#include "permav/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace permav {

namespace {

void check_bijection(const std::vector<std::uint8_t>& entries) {
    const std::size_t n = entries.size();
    std::vector<bool> seen(n + 1, false);
    for (std::uint8_t v : entries) {
        if (v < 1 || v > n || seen[v])
            throw InvalidArgumentError("permutation entries must be a bijection onto {1..n}");
        seen[v] = true;
    }
}

}  // namespace

Permutation::Permutation(std::vector<std::uint8_t> entries) : entries_(std::move(entries)) {
    check_bijection(entries_);
}

Permutation::Permutation(std::initializer_list<int> entries) {
    if (entries.size() > 255)
        throw InvalidArgumentError("permutation length exceeds 255");
    entries_.reserve(entries.size());
    for (int v : entries) {
        if (v < 1 || v > 255)
            throw InvalidArgumentError("permutation entry out of range");
        entries_.push_back(static_cast<std::uint8_t>(v));
    }
    check_bijection(entries_);
}

Permutation standardize(const std::vector<int>& values) {
    if (values.size() > 255)
        throw InvalidArgumentError("sequence length exceeds 255");
    std::vector<int> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidArgumentError("repeated value in sequence to standardize");
    std::vector<std::uint8_t> ranks(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), values[i]);
        ranks[i] = static_cast<std::uint8_t>(it - sorted.begin() + 1);
    }
    return Permutation(std::move(ranks));
}

namespace {

// Backtracking subsequence match: extend a partial embedding of beta into pi,
// keeping all pairwise comparisons consistent.
bool match_from(const Permutation& pi, const Permutation& beta,
                std::vector<std::size_t>& chosen, std::size_t next_pos) {
    const std::size_t j = chosen.size();
    if (j == beta.size()) return true;
    // positions left must cover the rest of the pattern
    for (std::size_t p = next_pos; p + (beta.size() - j) <= pi.size(); ++p) {
        bool ok = true;
        for (std::size_t t = 0; t < j; ++t) {
            if ((pi[chosen[t]] < pi[p]) != (beta[t] < beta[j])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen.push_back(p);
        if (match_from(pi, beta, chosen, p + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

bool contains(const Permutation& pi, const Permutation& beta) {
    if (beta.empty()) return true;
    if (beta.size() > pi.size()) return false;
    std::vector<std::size_t> chosen;
    chosen.reserve(beta.size());
    return match_from(pi, beta, chosen, 0);
}

Permutation inverse(const Permutation& p) {
    std::vector<std::uint8_t> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        out[static_cast<std::size_t>(p[i]) - 1] = static_cast<std::uint8_t>(i + 1);
    return Permutation(std::move(out));
}

Permutation reverse(const Permutation& p) {
    std::vector<std::uint8_t> out(p.entries().rbegin(), p.entries().rend());
    return Permutation(std::move(out));
}

Permutation complement(const Permutation& p) {
    const int n = static_cast<int>(p.size());
    std::vector<std::uint8_t> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        out[i] = static_cast<std::uint8_t>(n + 1 - p[i]);
    return Permutation(std::move(out));
}

Permutation symmetry(const Permutation& p, SymmetryOp op) {
    switch (op) {
        case SymmetryOp::Inverse: return inverse(p);
        case SymmetryOp::Reverse: return reverse(p);
        case SymmetryOp::Complement: return complement(p);
    }
    throw InvalidArgumentError("unknown symmetry");
}

Permutation apply_symmetry(const Permutation& p, int index) {
    if (index < 0 || index > 7)
        throw InvalidArgumentError("symmetry index must be in 0..7");
    Permutation q = p;
    if (index & 1) q = inverse(q);
    if (index & 2) q = reverse(q);
    if (index & 4) q = complement(q);
    return q;
}

std::array<Permutation, 8> all_symmetries(const Permutation& p) {
    std::array<Permutation, 8> out;
    for (int i = 0; i < 8; ++i) out[i] = apply_symmetry(p, i);
    return out;
}

Basis Basis::normalize(std::vector<Permutation> raw) {
    if (raw.empty())
        throw InvalidArgumentError(
            "unbounded class: empty basis defines all permutations, never slot-bounded");
    for (const auto& p : raw)
        if (p.empty())
            throw InvalidArgumentError("basis elements must be nonempty");
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<Permutation> kept;
    for (const auto& p : raw) {
        bool redundant = false;
        for (const auto& q : raw) {
            if (q != p && contains(p, q)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(p);
    }
    Basis b;
    b.elements_ = std::move(kept);
    for (const auto& p : b.elements_)
        b.max_len_ = std::max(b.max_len_, static_cast<int>(p.size()));
    return b;
}

bool avoids(const Permutation& pi, const Basis& basis) {
    for (const auto& beta : basis.elements())
        if (contains(pi, beta)) return false;
    return true;
}

std::string to_string(const Permutation& p) {
    std::string out;
    if (p.size() <= 9) {
        for (std::size_t i = 0; i < p.size(); ++i)
            out.push_back(static_cast<char>('0' + p[i]));
    } else {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out.push_back('-');
            out += std::to_string(p[i]);
        }
    }
    return out;
}

Permutation parse_permutation(std::string_view text) {
    if (text.empty()) throw ParseError("empty permutation", 0);
    std::vector<std::uint8_t> entries;
    if (text.find('-') == std::string_view::npos) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            char ch = text[i];
            if (ch < '1' || ch > '9')
                throw ParseError(std::string("invalid character '") + ch + "' in permutation", i);
            entries.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
    } else {
        std::size_t i = 0;
        while (i <= text.size()) {
            std::size_t j = text.find('-', i);
            if (j == std::string_view::npos) j = text.size();
            std::string_view tok = text.substr(i, j - i);
            int value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
                throw ParseError("invalid value in dash-separated permutation", i);
            if (value < 1 || value > 255)
                throw ParseError("permutation value out of range 1..255", i);
            entries.push_back(static_cast<std::uint8_t>(value));
            if (j == text.size()) break;
            i = j + 1;
            if (i == text.size()) throw ParseError("trailing dash in permutation", j);
        }
    }
    try {
        return Permutation(std::move(entries));
    } catch (const InvalidArgumentError& e) {
        throw ParseError(e.what(), 0);
    }
}

std::string to_string(const Basis& b) {
    std::string out;
    for (std::size_t i = 0; i < b.elements().size(); ++i) {
        if (i) out.push_back(',');
        out += to_string(b.elements()[i]);
    }
    return out;
}

Basis parse_basis(std::string_view text) {
    if (text.empty()) throw ParseError("empty basis", 0);
    std::vector<Permutation> elems;
    std::size_t i = 0;
    while (i <= text.size()) {
        std::size_t j = text.find(',', i);
        if (j == std::string_view::npos) j = text.size();
        std::string_view tok = text.substr(i, j - i);
        if (tok.empty()) throw ParseError("empty permutation in basis", i);
        try {
            elems.push_back(parse_permutation(tok));
        } catch (const ParseError& e) {
            throw ParseError(e.message(), i + e.position());
        }
        if (j == text.size()) break;
        i = j + 1;
    }
    try {
        return Basis::normalize(std::move(elems));
    } catch (const InvalidArgumentError& e) {
        throw ParseError(e.what(), 0);
    }
}

}  // namespace permav

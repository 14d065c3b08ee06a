#include "permav/config.hpp"

#include <algorithm>
#include <charconv>

#include "permav/errors.hpp"

namespace permav {

char to_char(LetterKind k) {
    switch (k) {
        case LetterKind::M: return 'm';
        case LetterKind::L: return 'l';
        case LetterKind::R: return 'r';
        case LetterKind::F: return 'f';
    }
    return '?';
}

std::string to_string(const Letter& a) {
    return std::string(1, to_char(a.kind)) + std::to_string(a.slot);
}

std::string to_string(const InsertionWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back(' ');
        out += to_string(w[i]);
    }
    return out;
}

InsertionWord parse_word(std::string_view text) {
    InsertionWord w;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ') {
            ++i;
            continue;
        }
        LetterKind kind;
        switch (text[i]) {
            case 'm': kind = LetterKind::M; break;
            case 'l': kind = LetterKind::L; break;
            case 'r': kind = LetterKind::R; break;
            case 'f': kind = LetterKind::F; break;
            default: throw ParseError("expected letter kind m/l/r/f", i);
        }
        std::size_t j = i + 1;
        while (j < text.size() && text[j] != ' ') ++j;
        int slot = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i + 1, text.data() + j, slot);
        if (ec != std::errc{} || ptr != text.data() + j || slot < 1)
            throw ParseError("expected positive slot index after letter kind", i + 1);
        w.push_back({kind, slot});
        i = j;
    }
    return w;
}

Configuration::Configuration(std::vector<std::uint8_t> items) : items_(std::move(items)) {
    std::vector<std::uint8_t> values;
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (items_[i] == kSlot) {
            if (i + 1 < items_.size() && items_[i + 1] == kSlot)
                throw InvalidArgumentError("configuration has adjacent slots");
        } else {
            values.push_back(items_[i]);
        }
    }
    Permutation check{std::move(values)};  // throws unless standardized
}

Configuration Configuration::initial() {
    Configuration c;
    c.items_ = {kSlot};
    return c;
}

Configuration Configuration::from_permutation(const Permutation& p) {
    Configuration c;
    c.items_ = p.entries();
    return c;
}

int Configuration::value_count() const {
    return static_cast<int>(items_.size()) - slot_count();
}

int Configuration::slot_count() const {
    return static_cast<int>(std::count(items_.begin(), items_.end(), kSlot));
}

std::vector<std::size_t> Configuration::slot_positions() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < items_.size(); ++i)
        if (items_[i] == kSlot) out.push_back(i);
    return out;
}

Permutation Configuration::underlying_permutation() const {
    std::vector<std::uint8_t> values;
    for (std::uint8_t x : items_)
        if (x != kSlot) values.push_back(x);
    return Permutation(std::move(values));
}

bool Configuration::only_slot_at_end() const {
    return !items_.empty() && items_.back() == kSlot && slot_count() == 1;
}

Configuration apply_letter(const Configuration& c, const Letter& a) {
    const auto slots = c.slot_positions();
    if (a.slot < 1 || a.slot > static_cast<int>(slots.size()))
        throw InvalidArgumentError("letter slot index " + std::to_string(a.slot) +
                                   " out of range for configuration with " +
                                   std::to_string(slots.size()) + " slot(s)");
    const std::size_t pos = slots[static_cast<std::size_t>(a.slot) - 1];
    const std::uint8_t v = static_cast<std::uint8_t>(c.value_count() + 1);

    std::vector<std::uint8_t> items;
    items.reserve(c.size() + 2);
    items.insert(items.end(), c.items().begin(), c.items().begin() + pos);
    switch (a.kind) {
        case LetterKind::M:
            items.push_back(Configuration::kSlot);
            items.push_back(v);
            items.push_back(Configuration::kSlot);
            break;
        case LetterKind::L:
            items.push_back(v);
            items.push_back(Configuration::kSlot);
            break;
        case LetterKind::R:
            items.push_back(Configuration::kSlot);
            items.push_back(v);
            break;
        case LetterKind::F:
            items.push_back(v);
            break;
    }
    items.insert(items.end(), c.items().begin() + pos + 1, c.items().end());
    return Configuration(std::move(items));
}

InsertionWord encode(const Permutation& pi) {
    if (pi.empty())
        throw InvalidArgumentError("the empty permutation has the empty encoding");
    const std::size_t n = pi.size();
    std::vector<std::size_t> pos(n + 1);
    for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(pi[i])] = i;

    std::vector<bool> placed(n, false);
    InsertionWord word;
    word.reserve(n);
    for (std::size_t v = 1; v <= n; ++v) {
        const std::size_t p = pos[v];
        // locate the maximal unplaced block containing p and its slot index
        int slot = 0;
        std::size_t block_lo = 0, block_hi = 0;
        for (std::size_t i = 0; i < n;) {
            if (placed[i]) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < n && !placed[j]) ++j;
            ++slot;
            if (i <= p && p < j) {
                block_lo = i;
                block_hi = j - 1;
                break;
            }
            i = j;
        }
        const bool left = p > block_lo;
        const bool right = p < block_hi;
        LetterKind kind = left ? (right ? LetterKind::M : LetterKind::R)
                               : (right ? LetterKind::L : LetterKind::F);
        word.push_back({kind, slot});
        placed[p] = true;
    }
    return word;
}

Configuration decode(const InsertionWord& w) {
    Configuration c = Configuration::initial();
    for (std::size_t i = 0; i < w.size(); ++i) {
        try {
            c = apply_letter(c, w[i]);
        } catch (const InvalidArgumentError& e) {
            throw InvalidArgumentError("invalid word: letter " + std::to_string(i + 1) + " (" +
                                       to_string(w[i]) + "): " + e.what());
        }
    }
    return c;
}

Configuration standardize_config(const std::vector<int>& items) {
    std::vector<int> values;
    for (int x : items)
        if (x != 0) values.push_back(x);
    Permutation ranks = standardize(values);
    std::vector<std::uint8_t> out;
    out.reserve(items.size());
    std::size_t next = 0;
    for (int x : items)
        out.push_back(x == 0 ? Configuration::kSlot
                             : static_cast<std::uint8_t>(ranks[next++]));
    return Configuration(std::move(out));
}

Configuration delete_and_standardize(const Configuration& c, std::size_t pos) {
    if (pos >= c.size() || c.is_slot(pos))
        throw InvalidArgumentError("deletion position must name a value");
    const std::uint8_t gone = c.items()[pos];
    std::vector<std::uint8_t> items;
    items.reserve(c.size() - 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i == pos) continue;
        std::uint8_t x = c.items()[i];
        items.push_back(x != Configuration::kSlot && x > gone ? static_cast<std::uint8_t>(x - 1)
                                                              : x);
    }
    return Configuration(std::move(items));
}

bool is_valid(const Configuration& c, const Basis& basis) {
    const int s = c.slot_count();
    if (s == 0) return avoids(c.underlying_permutation(), basis);
    // A completion of a completion shrinks to a one-value-per-slot filling,
    // so minimal fillings decide validity.
    if (!avoids(c.underlying_permutation(), basis)) return false;

    const int m = c.value_count();
    std::vector<std::uint8_t> order(s);
    for (int i = 0; i < s; ++i) order[i] = static_cast<std::uint8_t>(i + 1);

    std::vector<std::uint8_t> filled;
    filled.reserve(c.size());
    do {
        filled.clear();
        std::size_t next = 0;
        for (std::uint8_t x : c.items())
            filled.push_back(x == Configuration::kSlot
                                 ? static_cast<std::uint8_t>(m + order[next++])
                                 : x);
        if (avoids(Permutation::unchecked(filled), basis)) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

std::string to_string(const Configuration& c) {
    const int m = c.value_count();
    std::string out;
    if (m <= 9) {
        for (std::size_t i = 0; i < c.size(); ++i)
            out.push_back(c.is_slot(i) ? '*' : static_cast<char>('0' + c.items()[i]));
    } else {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out.push_back('-');
            out += c.is_slot(i) ? "*" : std::to_string(c.items()[i]);
        }
    }
    return out;
}

Configuration parse_configuration(std::string_view text) {
    std::vector<std::uint8_t> items;
    if (text.find('-') == std::string_view::npos) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            char ch = text[i];
            if (ch == '*')
                items.push_back(Configuration::kSlot);
            else if (ch >= '1' && ch <= '9')
                items.push_back(static_cast<std::uint8_t>(ch - '0'));
            else
                throw ParseError(std::string("invalid character '") + ch + "' in configuration",
                                 i);
        }
    } else {
        std::size_t i = 0;
        while (i <= text.size()) {
            std::size_t j = text.find('-', i);
            if (j == std::string_view::npos) j = text.size();
            std::string_view tok = text.substr(i, j - i);
            if (tok == "*") {
                items.push_back(Configuration::kSlot);
            } else {
                int value = 0;
                auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
                if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() ||
                    value < 1 || value > 255)
                    throw ParseError("invalid token in configuration", i);
                items.push_back(static_cast<std::uint8_t>(value));
            }
            if (j == text.size()) break;
            i = j + 1;
            if (i == text.size()) throw ParseError("trailing dash in configuration", j);
        }
    }
    try {
        return Configuration(std::move(items));
    } catch (const InvalidArgumentError& e) {
        throw ParseError(e.what(), 0);
    }
}

}  // namespace permav

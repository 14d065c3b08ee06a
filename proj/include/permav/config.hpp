#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "permav/perm.hpp"

namespace permav {

/// One insertion letter: a kind plus a 1-based slot index, slots numbered
/// from the left. M splits a slot around the new maximum, L keeps the slot
/// to its right, R keeps it to the left, F fills it.
enum class LetterKind : std::uint8_t { M, L, R, F };

struct Letter {
    LetterKind kind;
    int slot;  // 1-based

    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;
};

using InsertionWord = std::vector<Letter>;

char to_char(LetterKind k);
std::string to_string(const Letter& a);
std::string to_string(const InsertionWord& w);  // "m1 m2 l2 f1 f2 f1"
InsertionWord parse_word(std::string_view text);

/// A permutation interleaved with slots: items are values (standardized,
/// forming a permutation of {1..m}) or slots, with no two slots adjacent.
/// Internally a slot is the byte 0. The slotless configurations are exactly
/// the permutations.
class Configuration {
public:
    static constexpr std::uint8_t kSlot = 0;

    Configuration() = default;

    /// Validates standardized values and the no-adjacent-slots invariant.
    explicit Configuration(std::vector<std::uint8_t> items);

    /// The initial configuration, a single slot.
    static Configuration initial();

    /// A slotless configuration from a permutation.
    static Configuration from_permutation(const Permutation& p);

    const std::vector<std::uint8_t>& items() const { return items_; }
    std::size_t size() const { return items_.size(); }
    bool is_slot(std::size_t i) const { return items_[i] == kSlot; }

    int value_count() const;
    int slot_count() const;
    std::vector<std::size_t> slot_positions() const;
    bool slotless() const { return slot_count() == 0; }

    /// The values in order, as a permutation (valid only when standardized,
    /// which the constructor guarantees).
    Permutation underlying_permutation() const;

    /// True when the single slot sits at the very end of the configuration.
    bool only_slot_at_end() const;

    bool operator==(const Configuration&) const = default;
    auto operator<=>(const Configuration&) const = default;

private:
    std::vector<std::uint8_t> items_;
};

/// Insert the new maximum into the letter's slot. Throws
/// InvalidArgumentError when the slot index is out of range.
Configuration apply_letter(const Configuration& c, const Letter& a);

/// The unique insertion word producing `pi` from the initial configuration.
/// Throws InvalidArgumentError on the empty permutation (its encoding is the
/// empty word by convention, and the empty word is not in the language).
InsertionWord encode(const Permutation& pi);

/// Apply a word from the initial configuration. Throws InvalidArgumentError
/// naming the offending 1-based letter position when a slot index is out of
/// range.
Configuration decode(const InsertionWord& w);

/// Standardize the values of a configuration-like sequence (0 = slot),
/// keeping slots in place.
Configuration standardize_config(const std::vector<int>& items);

/// Delete the item at `pos` and re-standardize the remaining values.
Configuration delete_and_standardize(const Configuration& c, std::size_t pos);

/// True iff the configuration can be completed to a permutation avoiding the
/// basis. Decided by minimal fillings: one new value per slot, over all s!
/// relative orders.
bool is_valid(const Configuration& c, const Basis& basis);

// Text format: digits with '*' for slots ("423*1*"); dash-separated tokens
// with '*' for values beyond 9 ("10-3-*-2-*").
std::string to_string(const Configuration& c);
Configuration parse_configuration(std::string_view text);

struct ConfigurationHash {
    std::size_t operator()(const Configuration& c) const {
        const auto& it = c.items();
        return std::hash<std::string_view>{}(
            std::string_view(reinterpret_cast<const char*>(it.data()), it.size()));
    }
};

}  // namespace permav

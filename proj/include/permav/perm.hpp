#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "permav/errors.hpp"

namespace permav {

/// A permutation of {1, ..., n} in one-line notation. The empty permutation
/// (n = 0) is a legal value. Entries are stored as bytes; lengths above 255
/// are rejected at construction.
class Permutation {
public:
    Permutation() = default;

    /// Validates that `entries` is a bijection onto {1, ..., n}.
    explicit Permutation(std::vector<std::uint8_t> entries);
    Permutation(std::initializer_list<int> entries);

    /// Skips validation; caller guarantees a standardized sequence.
    static Permutation unchecked(std::vector<std::uint8_t> entries) {
        Permutation p;
        p.entries_ = std::move(entries);
        return p;
    }

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<std::uint8_t>& entries() const { return entries_; }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<std::uint8_t> entries_;
};

/// Rank the values of a duplicate-free sequence, yielding the unique
/// order-isomorphic permutation. Throws InvalidArgumentError on repeats.
Permutation standardize(const std::vector<int>& values);

/// True iff some subsequence of `pi` is order isomorphic to `beta`.
/// The empty pattern is contained in everything.
bool contains(const Permutation& pi, const Permutation& beta);

enum class SymmetryOp { Inverse, Reverse, Complement };

Permutation inverse(const Permutation& p);
Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation symmetry(const Permutation& p, SymmetryOp op);

/// The eight symmetries of the square, as the compositions
/// [inverse?] then [reverse?] then [complement?]. Index bit 0 = inverse,
/// bit 1 = reverse, bit 2 = complement; index 0 is the identity.
Permutation apply_symmetry(const Permutation& p, int index);
std::array<Permutation, 8> all_symmetries(const Permutation& p);

/// A normalized finite basis: a nonempty antichain of distinct nonempty
/// permutations, sorted, with the longest length cached.
class Basis {
public:
    /// An empty placeholder; every usable Basis comes from normalize().
    Basis() = default;

    /// Deduplicates and drops every element that contains another element.
    /// Throws InvalidArgumentError on an empty set (an empty basis defines
    /// the class of all permutations, which is never slot-bounded).
    static Basis normalize(std::vector<Permutation> raw);

    const std::vector<Permutation>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    int max_len() const { return max_len_; }

    bool operator==(const Basis&) const = default;

private:
    std::vector<Permutation> elements_;
    int max_len_ = 0;
};

/// True iff `pi` contains no element of `basis`.
bool avoids(const Permutation& pi, const Basis& basis);

// Text formats. Permutations of length <= 9 print as digit strings
// ("4321"); longer ones as dash-separated values ("10-3-2-1"). Bases are
// comma-separated permutations. Parsers reject malformed input with the
// offending position.
std::string to_string(const Permutation& p);
Permutation parse_permutation(std::string_view text);
std::string to_string(const Basis& b);
Basis parse_basis(std::string_view text);

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const {
        const auto& e = p.entries();
        return std::hash<std::string_view>{}(
            std::string_view(reinterpret_cast<const char*>(e.data()), e.size()));
    }
};

}  // namespace permav

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wordcx {

using Int = std::int64_t;
using Vec = std::vector<Int>;

// Overflow-checked arithmetic; throws OverflowError.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// An element of Z^m.
struct Letter {
    Vec coords;

    Letter() = default;
    explicit Letter(Vec c) : coords(std::move(c)) {}

    static Letter scalar(Int v) { return Letter{Vec{v}}; }

    std::size_t dimension() const noexcept { return coords.size(); }
    Int operator[](std::size_t j) const { return coords[j]; }

    friend auto operator<=>(const Letter&, const Letter&) = default;
    friend bool operator==(const Letter&, const Letter&) = default;
};

std::string to_string(const Letter& letter);
std::vector<Letter> scalars(std::initializer_list<Int> values);

/// A finite ordered set of distinct letters of a common dimension.
/// The order indexes Parikh coordinates.
class Alphabet {
public:
    explicit Alphabet(std::vector<Letter> letters);

    /// Distinct letters of `letters` in lexicographic order.
    static Alphabet sorted_from(std::span<const Letter> letters);

    std::size_t size() const noexcept { return letters_.size(); }
    std::size_t dimension() const noexcept { return letters_.front().dimension(); }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }

    std::optional<std::size_t> index_of(const Letter& letter) const;
    bool contains(const Letter& letter) const { return index_.contains(letter); }

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.letters_ == b.letters_; }

private:
    std::vector<Letter> letters_;
    std::map<Letter, std::size_t> index_;
};

/// A materialized prefix x_1 ... x_n. `at` uses the 1-based convention.
struct FiniteWord {
    std::vector<Letter> letters;

    std::size_t size() const noexcept { return letters.size(); }
    bool empty() const noexcept { return letters.empty(); }
    std::size_t dimension() const { return letters.empty() ? 0 : letters.front().dimension(); }
    const Letter& at(std::size_t i) const;

    friend bool operator==(const FiniteWord&, const FiniteWord&) = default;
};

std::string to_string(const FiniteWord& word);

} // namespace wordcx

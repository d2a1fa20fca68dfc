#pragma once

#include "wordcx/letter.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace wordcx {

/// Letter -> nonempty finite word. Used both for morphism rules and block codes.
using Substitution = std::map<Letter, std::vector<Letter>>;

/// Deterministic generator of prefixes of an (in)finite word.
///
/// Sources are immutable values; copies share their description. `prefix(n)`
/// is always the first n letters of `prefix(n')` for n <= n'.
class WordSource {
public:
    enum class Kind { periodic, explicit_word, morphic, champernowne, block_coded, lifted };

    /// pattern repeated forever.
    static WordSource periodic(std::vector<Letter> pattern);

    /// A finite word; prefixes longer than it are errors.
    static WordSource explicit_word(std::vector<Letter> letters);

    /// Fixed point of `rules` starting at `seed`. rules(seed) must start with
    /// seed and have length >= 2; every letter reachable from the images needs a rule.
    static WordSource morphic(Substitution rules, Letter seed);

    /// 0 1 10 11 100 ... concatenated: 0110111001011101111000...
    static WordSource champernowne_binary();

    /// code(x_1) code(x_2) ... ; code must cover the base alphabet.
    static WordSource block_coded(WordSource base, Substitution code);

    /// Over Z^m with m = |S|: the j-th letter a_j of the base alphabet (in alphabet
    /// order) becomes a_j * e_j. The base must be one-dimensional with 0 not in S.
    static WordSource lifted(WordSource base);

    Kind kind() const noexcept;

    /// Letters the source may produce. For lifted sources the order follows the
    /// base alphabet; otherwise it is lexicographic.
    const Alphabet& alphabet() const noexcept;
    std::size_t dimension() const noexcept { return alphabet().dimension(); }

    /// Length of the word if finite.
    std::optional<std::size_t> length() const noexcept;

    FiniteWord prefix(std::size_t n) const;

    struct Impl;

private:
    explicit WordSource(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// 0 -> 011, 1 -> 0001.
Substitution dekking_rules();
/// Fixed point of dekking_rules() from 0.
WordSource dekking_sigma();
/// dekking_sigma() block-coded by 1 -> 12, 0 -> 03.
WordSource dekking_tau();

} // namespace wordcx

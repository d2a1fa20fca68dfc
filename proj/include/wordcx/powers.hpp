#pragma once

#include "wordcx/measures.hpp"
#include "wordcx/words.hpp"

#include <optional>
#include <span>
#include <vector>

namespace wordcx {

/// Blocks B_i = x[t+(i-1)s+1 .. t+is], 1 <= i <= k, all with mu-value `value`.
struct PowerWitness {
    std::size_t t = 0;
    std::size_t s = 1;
    std::size_t k = 2;
    Vec value;

    std::size_t end() const noexcept { return t + k * s; }
    friend bool operator==(const PowerWitness&, const PowerWitness&) = default;
};

struct SearchLimits {
    std::size_t max_prefix = 1000;
    std::optional<std::size_t> max_block;  // largest s; default max_prefix / k
    std::optional<std::size_t> max_offset; // largest t; default unbounded within the prefix
    std::optional<Int> initial_modulus;    // default: observed M2 + 1
    unsigned retry_cap = 8;
    bool allow_empty_anchor = true;        // permit t = 0, i.e. the point P(0) = 0
    std::size_t spread_window = 256;       // window lengths used to observe M2

    void validate() const;
};

enum class PowerStatus { found, not_found, retry_exhausted };

const char* to_string(PowerStatus status);

/// Outcome of a search. `not_found` only speaks about the limits used.
struct PowerResult {
    PowerStatus status = PowerStatus::not_found;
    std::optional<PowerWitness> witness;
    SearchLimits limits;        // with max_prefix clamped to the data actually searched
    Vec modulus;                // per coordinate; empty for the scan
    unsigned retries = 0;

    bool found() const noexcept { return status == PowerStatus::found; }
};

/// True iff all k blocks have value w.value. Throws RangeError when the blocks
/// do not fit the table.
bool validate_witness(const CumulativeTable& table, const PowerWitness& w);
bool validate_witness(const FiniteWord& word, const MorphismMu& mu, const PowerWitness& w);

/// Exhaustive search; returns the witness minimizing (t + ks, s, t).
PowerResult find_power_scan(const CumulativeTable& table, std::size_t k, const SearchLimits& limits);
PowerResult find_power_scan(const WordSource& source, const MorphismMu& mu, std::size_t k,
                            const SearchLimits& limits);

/// Colors 0..N by P(n) mod q (coordinate-wise), walks arithmetic progressions
/// t, t+s, ..., t+ks in order of (t + ks, s) and returns the first monochromatic
/// one whose blocks agree exactly. If a monochromatic progression fails the exact
/// check, the moduli double and the walk restarts, at most `retry_cap` times.
PowerResult find_colored_progression(const CumulativeTable& table, std::size_t k, Vec moduli,
                                     const SearchLimits& limits);

/// Additive k-powers through the prefix-sum coloring, built straight from letter coordinates.
PowerResult find_power_vdw(const WordSource& source, std::size_t k, const SearchLimits& limits);

/// Abelian k-powers through the Parikh-vector coloring, counted straight from the alphabet.
PowerResult find_power_abelian(const WordSource& source, std::size_t k, const SearchLimits& limits);

/// k-powers modulo an arbitrary additive morphism.
PowerResult find_power_mod_mu(const WordSource& source, const MorphismMu& mu, std::size_t k,
                              const SearchLimits& limits);

/// One (t, s) that is an additive k-power in every source at once. The witness
/// value concatenates the per-source block sums.
PowerResult find_simultaneous(std::span<const WordSource> sources, std::size_t k,
                              const SearchLimits& limits);

/// P(n) reduced coordinate-wise into [0, q_j).
Vec residue(std::span<const Int> value, const Vec& moduli);

/// Prefix sums of the letters themselves.
CumulativeTable sum_table(const FiniteWord& word);
/// Letter counts indexed by `alphabet`.
CumulativeTable parikh_table(const FiniteWord& word, const Alphabet& alphabet);

/// Observed M2 + 1 over window lengths up to `window`, one entry per coordinate.
Vec auto_modulus(const CumulativeTable& table, std::size_t window);

} // namespace wordcx

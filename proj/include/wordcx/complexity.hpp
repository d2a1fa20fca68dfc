#pragma once

#include "wordcx/measures.hpp"
#include "wordcx/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wordcx {

enum class ProfileMode { additive, abelian, custom };

const char* to_string(ProfileMode mode);
ProfileMode profile_mode_for(const MorphismMu& mu);

/// Distinct window values for one length, sorted lexicographically.
class ValueSet {
public:
    ValueSet() = default;
    ValueSet(std::size_t dimension, std::vector<Int> sorted_rows);

    std::size_t size() const noexcept { return dim_ ? rows_.size() / dim_ : 0; }
    std::size_t dimension() const noexcept { return dim_; }
    std::span<const Int> operator[](std::size_t i) const { return {rows_.data() + i * dim_, dim_}; }
    Int min(std::size_t j) const { return min_[j]; }
    Int max(std::size_t j) const { return max_[j]; }
    bool contains(std::span<const Int> value) const;

    friend bool operator==(const ValueSet& a, const ValueSet& b)
    {
        return a.dim_ == b.dim_ && a.rows_ == b.rows_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<Int> rows_;
    Vec min_, max_;
};

/// Value sets of all length-n windows of a prefix, for 1 <= n <= n_max.
/// Exact for the prefix; lower bounds for the infinite word.
struct ComplexityProfile {
    std::size_t prefix_length = 0;
    std::size_t n_max = 0;
    std::size_t dimension = 0;
    ProfileMode mode = ProfileMode::additive;
    std::vector<ValueSet> sets; // sets[n - 1]

    const ValueSet& values(std::size_t n) const { return sets.at(n - 1); }
    std::size_t size(std::size_t n) const { return values(n).size(); }
};

/// `threads` = 0 picks the hardware concurrency. Output does not depend on it.
ComplexityProfile profile(const CumulativeTable& table, std::size_t n_max, ProfileMode mode,
                          unsigned threads = 0);
ComplexityProfile profile(const WordSource& source, const MorphismMu& mu, std::size_t prefix_length,
                          std::size_t n_max, unsigned threads = 0);

/// Two length-n factors, given by 1-based start positions.
struct FactorPair {
    std::size_t n = 0;
    std::size_t first = 0;
    std::size_t second = 0;
};

/// Observed constants of a prefix. M1 maximizes over adjacent pairs, M2 over all
/// pairs of equal length, M3 is the largest value-set size.
struct BoundReport {
    ProfileMode mode = ProfileMode::additive;
    std::size_t prefix_length = 0;
    std::size_t n_max = 0;
    std::size_t dimension = 0;

    std::vector<std::size_t> sizes;           // per n
    std::vector<Vec> ranges;                  // per n, per coordinate (max - min)
    std::vector<std::vector<FactorPair>> extremes; // per n, per coordinate: (argmin, argmax)
    std::vector<std::optional<Int>> m1_at;    // per n; empty when 2n > N
    std::vector<Int> m2_at;                   // per n

    Vec m1_coord, m2_coord;                   // per coordinate, maximized over n
    Int m1 = 0;
    Int m2 = 0;
    std::size_t m3 = 0;
    FactorPair m1_witness, m2_witness;

    // Extremes of the letter images over the morphism's domain, per coordinate.
    Vec letter_max, letter_min, letter_max_abs;

    // Largest change between consecutive windows, per coordinate.
    Vec max_shift;

    // Euclidean length of the per-n range box diagonal, maximized over n. An upper
    // bound on the Euclidean M2.
    double m2_euclidean_upper = 0.0;

    // The largest size was already reached for n <= n_max / 2.
    bool saturated = false;
};

BoundReport observed_bounds(const ComplexityProfile& profile, const CumulativeTable& table,
                            const MorphismMu& mu);
BoundReport observed_bounds(const ComplexityProfile& profile, const FiniteWord& word,
                            const MorphismMu& mu, std::size_t n_max);

/// Per-coordinate max over n <= n_max of (max - min) of the length-n window values.
/// Cheap form of observed M2 without building value sets.
Vec observed_spread(const CumulativeTable& table, std::size_t n_max);

struct Verdict {
    std::string name;
    bool passed = true;
    std::string detail;
    std::optional<FactorPair> witness;
};

struct Verdicts {
    std::vector<Verdict> checks;
    std::vector<std::string> notes;

    bool all_passed() const;
};

Verdicts check_additive_bounds(const BoundReport& report);
Verdicts check_abelian_bounds(const BoundReport& report);

} // namespace wordcx

#pragma once

#include "wordcx/letter.hpp"

#include <span>
#include <vector>

namespace wordcx {

/// A factor x_start ... x_{start+length-1} (1-based).
struct Factor {
    std::size_t start = 1;
    std::size_t length = 1;
};

/// A letter -> Z^t map extended additively to words: mu(B1 B2) = mu(B1) + mu(B2).
class MorphismMu {
public:
    enum class Kind { additive, parikh, custom };

    MorphismMu(Alphabet domain, std::vector<Vec> images, Kind kind = Kind::custom);

    Kind kind() const noexcept { return kind_; }
    const Alphabet& domain() const noexcept { return domain_; }
    std::size_t target_dimension() const noexcept { return target_dim_; }

    /// Image of a single letter; throws InputError for letters outside the domain.
    const Vec& image(const Letter& letter) const;
    const std::vector<Vec>& images() const noexcept { return images_; }

    Vec apply(std::span<const Letter> word) const;

private:
    Alphabet domain_;
    std::vector<Vec> images_;
    std::size_t target_dim_;
    Kind kind_;
};

/// Each letter maps to itself.
MorphismMu mu_additive(const Alphabet& alphabet);
/// a_i maps to the i-th unit vector of Z^|S|; mu(B) is the Parikh vector of B.
MorphismMu mu_parikh(const Alphabet& alphabet);

const char* to_string(MorphismMu::Kind kind);

/// Prefix values P(0) = 0, P(i) = mu(x_1 ... x_i), stored un-reduced.
class CumulativeTable {
public:
    /// `increments` holds mu(x_i) row by row (N rows of `dimension` entries).
    static CumulativeTable from_increments(std::size_t dimension, std::span<const Int> increments);

    std::size_t length() const noexcept { return length_; }
    std::size_t dimension() const noexcept { return dim_; }

    /// P(i) for 0 <= i <= length().
    std::span<const Int> at(std::size_t i) const
    {
        return {values_.data() + i * dim_, dim_};
    }
    Int at(std::size_t i, std::size_t j) const { return values_[i * dim_ + j]; }

    /// P(hi) - P(lo), i.e. mu(x_{lo+1} ... x_hi).
    Vec difference(std::size_t lo, std::size_t hi) const;

private:
    CumulativeTable(std::size_t dim, std::size_t length, std::vector<Int> values)
        : dim_(dim), length_(length), values_(std::move(values))
    {
    }

    std::size_t dim_;
    std::size_t length_;
    std::vector<Int> values_;
};

CumulativeTable accumulate(const MorphismMu& mu, const FiniteWord& word);

/// mu of the factor, in O(1) from the table. Throws RangeError if it does not fit.
Vec factor_value(const CumulativeTable& table, Factor factor);

} // namespace wordcx

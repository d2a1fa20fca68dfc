#include "wordcx/powers.hpp"

#include "wordcx/complexity.hpp"
#include "wordcx/error.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wordcx {

void SearchLimits::validate() const
{
    if (max_prefix < 1)
        throw InputError("limits: max prefix must be positive");
    if (max_block && *max_block < 1)
        throw InputError("limits: max block length must be positive");
    if (initial_modulus && *initial_modulus < 1)
        throw InputError("limits: modulus must be at least 1");
    if (spread_window < 1)
        throw InputError("limits: spread window must be positive");
}

const char* to_string(PowerStatus status)
{
    switch (status) {
    case PowerStatus::found: return "found";
    case PowerStatus::not_found: return "not_found";
    case PowerStatus::retry_exhausted: return "retry_exhausted";
    }
    return "not_found";
}

bool validate_witness(const CumulativeTable& table, const PowerWitness& w)
{
    if (w.k < 1 || w.s < 1)
        throw RangeError("witness needs k >= 1 and s >= 1");
    if (w.end() > table.length())
        throw RangeError("witness ends at " + std::to_string(w.end()) + ", past the prefix of length "
                         + std::to_string(table.length()));
    if (w.value.size() != table.dimension())
        return false;
    for (std::size_t i = 1; i <= w.k; ++i)
        if (table.difference(w.t + (i - 1) * w.s, w.t + i * w.s) != w.value)
            return false;
    return true;
}

bool validate_witness(const FiniteWord& word, const MorphismMu& mu, const PowerWitness& w)
{
    return validate_witness(accumulate(mu, word), w);
}

namespace {

void check_k(std::size_t k)
{
    if (k < 2)
        throw InputError("k must be at least 2");
}

SearchLimits clamp(SearchLimits limits, const CumulativeTable& table)
{
    limits.max_prefix = std::min(limits.max_prefix, table.length());
    return limits;
}

std::size_t effective_prefix(const WordSource& source, const SearchLimits& limits)
{
    limits.validate();
    std::size_t n = limits.max_prefix;
    if (auto len = source.length())
        n = std::min(n, *len);
    return n;
}

bool blocks_equal(const CumulativeTable& table, std::size_t t, std::size_t s, std::size_t k)
{
    const std::size_t d = table.dimension();
    for (std::size_t j = 0; j < d; ++j) {
        Int first = checked_sub(table.at(t + s, j), table.at(t, j));
        for (std::size_t i = 2; i <= k; ++i)
            if (checked_sub(table.at(t + i * s, j), table.at(t + (i - 1) * s, j)) != first)
                return false;
    }
    return true;
}

PowerWitness make_witness(const CumulativeTable& table, std::size_t t, std::size_t s, std::size_t k)
{
    PowerWitness w{t, s, k, table.difference(t, t + s)};
    if (!validate_witness(table, w))
        throw std::logic_error("internal error: witness failed validation");
    return w;
}

// Calls visit(t, s) over progressions in order of (t + ks, s) until it returns true.
template <typename Visit>
bool walk_progressions(std::size_t n, std::size_t k, const SearchLimits& limits, Visit&& visit)
{
    const std::size_t s_max = limits.max_block.value_or(n / k);
    for (std::size_t end = k; end <= n; ++end) {
        const std::size_t s_hi = std::min(end / k, s_max);
        for (std::size_t s = 1; s <= s_hi; ++s) {
            const std::size_t t = end - k * s;
            if (limits.max_offset && t > *limits.max_offset)
                continue;
            if (t == 0 && !limits.allow_empty_anchor)
                continue;
            if (visit(t, s))
                return true;
        }
    }
    return false;
}

std::vector<std::uint32_t> color_positions(const CumulativeTable& table, std::size_t n, const Vec& moduli)
{
    std::map<Vec, std::uint32_t> ids;
    std::vector<std::uint32_t> colors(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        auto [it, inserted] = ids.try_emplace(residue(table.at(i), moduli),
                                              static_cast<std::uint32_t>(ids.size()));
        colors[i] = it->second;
    }
    return colors;
}

} // namespace

Vec residue(std::span<const Int> value, const Vec& moduli)
{
    if (value.size() != moduli.size())
        throw InputError("one modulus per coordinate is required");
    Vec out(value.size());
    for (std::size_t j = 0; j < value.size(); ++j) {
        Int r = value[j] % moduli[j];
        out[j] = r < 0 ? r + moduli[j] : r;
    }
    return out;
}

CumulativeTable sum_table(const FiniteWord& word)
{
    const std::size_t d = word.dimension();
    std::vector<Int> increments;
    increments.reserve(word.size() * d);
    for (const auto& l : word.letters) {
        if (l.dimension() != d)
            throw InputError("word mixes letter dimensions");
        increments.insert(increments.end(), l.coords.begin(), l.coords.end());
    }
    return CumulativeTable::from_increments(d, increments);
}

CumulativeTable parikh_table(const FiniteWord& word, const Alphabet& alphabet)
{
    const std::size_t t = alphabet.size();
    std::vector<Int> increments(word.size() * t, 0);
    for (std::size_t i = 0; i < word.size(); ++i) {
        auto idx = alphabet.index_of(word.letters[i]);
        if (!idx)
            throw InputError("letter " + to_string(word.letters[i]) + " is not in the alphabet");
        increments[i * t + *idx] = 1;
    }
    return CumulativeTable::from_increments(t, increments);
}

Vec auto_modulus(const CumulativeTable& table, std::size_t window)
{
    Vec spread = observed_spread(table, window);
    Int m2 = *std::max_element(spread.begin(), spread.end());
    return Vec(table.dimension(), checked_add(m2, 1));
}

PowerResult find_power_scan(const CumulativeTable& table, std::size_t k, const SearchLimits& limits)
{
    check_k(k);
    limits.validate();
    PowerResult result;
    result.limits = clamp(limits, table);
    const std::size_t n = result.limits.max_prefix;
    walk_progressions(n, k, result.limits, [&](std::size_t t, std::size_t s) {
        if (!blocks_equal(table, t, s, k))
            return false;
        result.status = PowerStatus::found;
        result.witness = make_witness(table, t, s, k);
        return true;
    });
    return result;
}

PowerResult find_power_scan(const WordSource& source, const MorphismMu& mu, std::size_t k,
                            const SearchLimits& limits)
{
    return find_power_scan(accumulate(mu, source.prefix(effective_prefix(source, limits))), k, limits);
}

PowerResult find_colored_progression(const CumulativeTable& table, std::size_t k, Vec moduli,
                                     const SearchLimits& limits)
{
    check_k(k);
    limits.validate();
    if (moduli.size() != table.dimension())
        throw InputError("one modulus per coordinate is required");
    for (Int q : moduli)
        if (q < 1)
            throw InputError("moduli must be at least 1");

    PowerResult result;
    result.limits = clamp(limits, table);
    const std::size_t n = result.limits.max_prefix;

    for (;;) {
        result.modulus = moduli;
        const auto colors = color_positions(table, n, moduli);
        bool congruent_only = false;
        walk_progressions(n, k, result.limits, [&](std::size_t t, std::size_t s) {
            const auto c = colors[t];
            for (std::size_t i = 1; i <= k; ++i)
                if (colors[t + i * s] != c)
                    return false;
            // Monochromatic: block values agree mod q; accept only exact agreement.
            if (blocks_equal(table, t, s, k)) {
                result.status = PowerStatus::found;
                result.witness = make_witness(table, t, s, k);
            } else {
                congruent_only = true;
            }
            return true;
        });
        if (result.found() || !congruent_only) {
            if (!result.found())
                result.status = PowerStatus::not_found;
            return result;
        }
        if (result.retries >= limits.retry_cap) {
            result.status = PowerStatus::retry_exhausted;
            return result;
        }
        ++result.retries;
        for (auto& q : moduli)
            q = checked_mul(q, 2);
    }
}

namespace {

PowerResult colored_search(const CumulativeTable& table, std::size_t k, const SearchLimits& limits)
{
    limits.validate();
    Vec moduli = limits.initial_modulus ? Vec(table.dimension(), *limits.initial_modulus)
                                        : auto_modulus(table, limits.spread_window);
    return find_colored_progression(table, k, std::move(moduli), limits);
}

} // namespace

PowerResult find_power_vdw(const WordSource& source, std::size_t k, const SearchLimits& limits)
{
    return colored_search(sum_table(source.prefix(effective_prefix(source, limits))), k, limits);
}

PowerResult find_power_abelian(const WordSource& source, std::size_t k, const SearchLimits& limits)
{
    auto word = source.prefix(effective_prefix(source, limits));
    return colored_search(parikh_table(word, source.alphabet()), k, limits);
}

PowerResult find_power_mod_mu(const WordSource& source, const MorphismMu& mu, std::size_t k,
                              const SearchLimits& limits)
{
    return colored_search(accumulate(mu, source.prefix(effective_prefix(source, limits))), k, limits);
}

PowerResult find_simultaneous(std::span<const WordSource> sources, std::size_t k,
                              const SearchLimits& limits)
{
    if (sources.empty())
        throw InputError("simultaneous search needs at least one word");
    limits.validate();
    std::size_t n = limits.max_prefix;
    for (const auto& src : sources)
        n = std::min(n, effective_prefix(src, limits));

    std::vector<CumulativeTable> tables;
    Vec moduli;
    std::size_t width = 0;
    for (const auto& src : sources) {
        tables.push_back(sum_table(src.prefix(n)));
        const auto& tb = tables.back();
        Vec q = limits.initial_modulus ? Vec(tb.dimension(), *limits.initial_modulus)
                                       : auto_modulus(tb, limits.spread_window);
        moduli.insert(moduli.end(), q.begin(), q.end());
        width += tb.dimension();
    }

    // Interleave the words into one word over Z^width.
    std::vector<Int> increments(n * width);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t col = 0;
        for (const auto& tb : tables)
            for (std::size_t j = 0; j < tb.dimension(); ++j)
                increments[i * width + col++] = checked_sub(tb.at(i + 1, j), tb.at(i, j));
    }
    auto combined = CumulativeTable::from_increments(width, increments);
    return find_colored_progression(combined, k, std::move(moduli), limits);
}

} // namespace wordcx

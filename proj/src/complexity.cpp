#include "wordcx/complexity.hpp"

#include "wordcx/error.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

namespace wordcx {

const char* to_string(ProfileMode mode)
{
    switch (mode) {
    case ProfileMode::additive: return "additive";
    case ProfileMode::abelian: return "abelian";
    case ProfileMode::custom: return "custom";
    }
    return "custom";
}

ProfileMode profile_mode_for(const MorphismMu& mu)
{
    switch (mu.kind()) {
    case MorphismMu::Kind::additive: return ProfileMode::additive;
    case MorphismMu::Kind::parikh: return ProfileMode::abelian;
    case MorphismMu::Kind::custom: return ProfileMode::custom;
    }
    return ProfileMode::custom;
}

ValueSet::ValueSet(std::size_t dimension, std::vector<Int> sorted_rows)
    : dim_(dimension), rows_(std::move(sorted_rows))
{
    if (dim_ == 0 || rows_.empty() || rows_.size() % dim_ != 0)
        throw InputError("value set needs at least one row of a positive dimension");
    min_.assign(rows_.begin(), rows_.begin() + static_cast<std::ptrdiff_t>(dim_));
    max_ = min_;
    for (std::size_t i = 1; i < size(); ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            min_[j] = std::min(min_[j], rows_[i * dim_ + j]);
            max_[j] = std::max(max_[j], rows_[i * dim_ + j]);
        }
}

bool ValueSet::contains(std::span<const Int> value) const
{
    if (value.size() != dim_)
        return false;
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        auto row = (*this)[mid];
        if (std::lexicographical_compare(row.begin(), row.end(), value.begin(), value.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo < size() && std::equal(value.begin(), value.end(), (*this)[lo].begin());
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        return std::numeric_limits<std::uint64_t>::max();
    return r;
}

struct Scratch {
    std::vector<Int> rows;
    std::vector<char> seen;
    std::vector<std::size_t> order;
};

ValueSet distinct_windows(const CumulativeTable& table, std::size_t n, Scratch& scratch)
{
    const std::size_t d = table.dimension();
    const std::size_t count = table.length() - n + 1;
    auto& rows = scratch.rows;
    rows.resize(count * d);

    Vec lo(d), hi(d);
    for (std::size_t j = 0; j < d; ++j) {
        rows[j] = checked_sub(table.at(n, j), table.at(0, j));
        lo[j] = hi[j] = rows[j];
    }
    // Shift the window one step: add the entering letter, drop the leaving one.
    for (std::size_t i = 1; i < count; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            Int entering = checked_sub(table.at(i + n, j), table.at(i + n - 1, j));
            Int leaving = checked_sub(table.at(i, j), table.at(i - 1, j));
            Int v = checked_sub(checked_add(rows[(i - 1) * d + j], entering), leaving);
            rows[i * d + j] = v;
            lo[j] = std::min(lo[j], v);
            hi[j] = std::max(hi[j], v);
        }
    }

    // Dense boxes go through a bitmap keyed in lexicographic (mixed-radix) order.
    std::uint64_t cells = 1;
    std::vector<std::uint64_t> extent(d);
    for (std::size_t j = 0; j < d; ++j) {
        Int r;
        if (__builtin_sub_overflow(hi[j], lo[j], &r) || r >= (Int{1} << 40))
            cells = std::numeric_limits<std::uint64_t>::max();
        else
            extent[j] = static_cast<std::uint64_t>(r) + 1;
        cells = saturating_mul(cells, extent[j]);
    }

    std::vector<Int> out;
    if (cells <= 8 * static_cast<std::uint64_t>(count) + 4096) {
        auto& seen = scratch.seen;
        seen.assign(cells, 0);
        for (std::size_t i = 0; i < count; ++i) {
            std::uint64_t key = 0;
            for (std::size_t j = 0; j < d; ++j)
                key = key * extent[j] + static_cast<std::uint64_t>(rows[i * d + j] - lo[j]);
            seen[key] = 1;
        }
        Vec row(d);
        for (std::uint64_t key = 0; key < cells; ++key) {
            if (!seen[key])
                continue;
            std::uint64_t rest = key;
            for (std::size_t j = d; j-- > 0;) {
                row[j] = lo[j] + static_cast<Int>(rest % extent[j]);
                rest /= extent[j];
            }
            out.insert(out.end(), row.begin(), row.end());
        }
    } else if (d == 1) {
        out.assign(rows.begin(), rows.end());
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    } else {
        auto& order = scratch.order;
        order.resize(count);
        std::iota(order.begin(), order.end(), std::size_t{0});
        auto row_less = [&](std::size_t a, std::size_t b) {
            return std::lexicographical_compare(rows.begin() + a * d, rows.begin() + (a + 1) * d,
                                                rows.begin() + b * d, rows.begin() + (b + 1) * d);
        };
        std::sort(order.begin(), order.end(), row_less);
        for (std::size_t k = 0; k < count; ++k) {
            if (k > 0 && !row_less(order[k - 1], order[k]))
                continue;
            out.insert(out.end(), rows.begin() + order[k] * d, rows.begin() + (order[k] + 1) * d);
        }
    }
    return ValueSet(d, std::move(out));
}

Int window(const CumulativeTable& table, std::size_t i, std::size_t n, std::size_t j)
{
    return checked_sub(table.at(i + n, j), table.at(i, j));
}

Int abs_checked(Int v)
{
    if (v == std::numeric_limits<Int>::min())
        throw OverflowError("integer overflow in absolute value");
    return v < 0 ? -v : v;
}

} // namespace

ComplexityProfile profile(const CumulativeTable& table, std::size_t n_max, ProfileMode mode,
                          unsigned threads)
{
    if (n_max < 1)
        throw InputError("n_max must be at least 1");
    if (n_max > table.length())
        throw InputError("n_max (" + std::to_string(n_max) + ") exceeds the prefix length ("
                         + std::to_string(table.length()) + ")");

    ComplexityProfile result;
    result.prefix_length = table.length();
    result.n_max = n_max;
    result.dimension = table.dimension();
    result.mode = mode;
    result.sets.resize(n_max);

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_max));

    // Worker w handles n = w+1, w+1+T, ...; each n writes only its own slot.
    std::vector<std::exception_ptr> errors(threads);
    auto work = [&](unsigned w) {
        try {
            Scratch scratch;
            for (std::size_t n = w + 1; n <= n_max; n += threads)
                result.sets[n - 1] = distinct_windows(table, n, scratch);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back(work, w);
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return result;
}

ComplexityProfile profile(const WordSource& source, const MorphismMu& mu, std::size_t prefix_length,
                          std::size_t n_max, unsigned threads)
{
    if (n_max > prefix_length)
        throw InputError("n_max (" + std::to_string(n_max) + ") exceeds the prefix length ("
                         + std::to_string(prefix_length) + ")");
    auto table = accumulate(mu, source.prefix(prefix_length));
    return profile(table, n_max, profile_mode_for(mu), threads);
}

BoundReport observed_bounds(const ComplexityProfile& profile, const CumulativeTable& table,
                            const MorphismMu& mu)
{
    if (profile.prefix_length != table.length() || profile.dimension != table.dimension())
        throw InputError("profile and table describe different prefixes");
    if (mu.target_dimension() != table.dimension())
        throw InputError("morphism target dimension does not match the table");

    const std::size_t N = table.length();
    const std::size_t d = table.dimension();
    const std::size_t n_max = profile.n_max;

    BoundReport r;
    r.mode = profile.mode;
    r.prefix_length = N;
    r.n_max = n_max;
    r.dimension = d;
    r.m1_coord.assign(d, 0);
    r.m2_coord.assign(d, 0);
    r.max_shift.assign(d, 0);

    r.letter_max = r.letter_min = mu.images().front();
    r.letter_max_abs.assign(d, 0);
    for (const auto& v : mu.images())
        for (std::size_t j = 0; j < d; ++j) {
            r.letter_max[j] = std::max(r.letter_max[j], v[j]);
            r.letter_min[j] = std::min(r.letter_min[j], v[j]);
            r.letter_max_abs[j] = std::max(r.letter_max_abs[j], abs_checked(v[j]));
        }

    for (std::size_t n = 1; n <= n_max; ++n) {
        const ValueSet& set = profile.values(n);
        const std::size_t count = N - n + 1;
        r.sizes.push_back(set.size());
        r.m3 = std::max(r.m3, set.size());

        Vec range(d);
        std::vector<FactorPair> ext(d, FactorPair{n, 1, 1});
        Vec lo(d), hi(d);
        for (std::size_t j = 0; j < d; ++j) {
            range[j] = checked_sub(set.max(j), set.min(j));
            lo[j] = hi[j] = window(table, 0, n, j);
        }

        std::optional<Int> m1_here;
        if (2 * n <= N)
            m1_here = 0;
        Int m2_here = 0;
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                Int v = window(table, i, n, j);
                if (v < lo[j]) {
                    lo[j] = v;
                    ext[j].first = i + 1;
                }
                if (v > hi[j]) {
                    hi[j] = v;
                    ext[j].second = i + 1;
                }
                if (i + 1 < count) {
                    Int step = abs_checked(checked_sub(window(table, i + 1, n, j), v));
                    r.max_shift[j] = std::max(r.max_shift[j], step);
                }
                if (i + 2 * n <= N) {
                    Int gap = abs_checked(checked_sub(window(table, i + n, n, j), v));
                    if (gap > r.m1_coord[j])
                        r.m1_coord[j] = gap;
                    if (gap > *m1_here)
                        m1_here = gap;
                    if (gap > r.m1) {
                        r.m1 = gap;
                        r.m1_witness = FactorPair{n, i + 1, i + n + 1};
                    }
                }
            }
        }
        for (std::size_t j = 0; j < d; ++j) {
            r.m2_coord[j] = std::max(r.m2_coord[j], range[j]);
            m2_here = std::max(m2_here, range[j]);
            if (range[j] > r.m2) {
                r.m2 = range[j];
                r.m2_witness = ext[j];
            }
        }
        double diag = 0.0;
        for (std::size_t j = 0; j < d; ++j)
            diag += static_cast<double>(range[j]) * static_cast<double>(range[j]);
        r.m2_euclidean_upper = std::max(r.m2_euclidean_upper, std::sqrt(diag));

        r.ranges.push_back(std::move(range));
        r.extremes.push_back(std::move(ext));
        r.m1_at.push_back(m1_here);
        r.m2_at.push_back(m2_here);
    }

    std::size_t early = 0;
    for (std::size_t n = 1; n <= n_max / 2; ++n)
        early = std::max(early, r.sizes[n - 1]);
    r.saturated = n_max >= 2 && early == r.m3;
    return r;
}

BoundReport observed_bounds(const ComplexityProfile& profile, const FiniteWord& word,
                            const MorphismMu& mu, std::size_t n_max)
{
    if (n_max != profile.n_max)
        throw InputError("n_max does not match the profile");
    return observed_bounds(profile, accumulate(mu, word), mu);
}

Vec observed_spread(const CumulativeTable& table, std::size_t n_max)
{
    const std::size_t d = table.dimension();
    n_max = std::min(n_max, table.length());
    Vec spread(d, 0);
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (std::size_t j = 0; j < d; ++j) {
            Int lo = window(table, 0, n, j), hi = lo;
            for (std::size_t i = 1; i + n <= table.length(); ++i) {
                Int v = window(table, i, n, j);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            spread[j] = std::max(spread[j], checked_sub(hi, lo));
        }
    }
    return spread;
}

bool Verdicts::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Verdict& v) { return v.passed; });
}

namespace {

std::uint64_t to_count(Int v)
{
    return v < 0 ? 0 : static_cast<std::uint64_t>(v);
}

// Shift lemma: consecutive windows differ by at most `bound_j` in coordinate j.
Verdict shift_verdict(const BoundReport& r, const Vec& bound, const char* name)
{
    Verdict v{name, true, {}, std::nullopt};
    std::ostringstream os;
    for (std::size_t j = 0; j < r.dimension; ++j)
        if (r.max_shift[j] > bound[j]) {
            v.passed = false;
            os << "coordinate " << j + 1 << ": step " << r.max_shift[j] << " > " << bound[j] << "; ";
        }
    v.detail = v.passed ? "consecutive windows within bound" : os.str();
    return v;
}

} // namespace

Verdicts check_additive_bounds(const BoundReport& r)
{
    Verdicts out;
    const std::size_t d = r.dimension;

    // (a) M2 <= 2 M1 + 2 max|a|, per coordinate.
    {
        Verdict v{"m2_le_2m1_plus_2maxabs", true, {}, std::nullopt};
        std::ostringstream os;
        for (std::size_t j = 0; j < d; ++j) {
            Int sound = checked_add(checked_mul(2, r.m1_coord[j]), checked_mul(2, r.letter_max_abs[j]));
            Int literal = checked_add(checked_mul(2, r.m1_coord[j]), checked_mul(2, r.letter_max[j]));
            os << "coord " << j + 1 << ": M2=" << r.m2_coord[j] << " <= " << sound
               << " (2M1+2max|a|), literal 2M1+2maxS=" << literal << "; ";
            if (r.m2_coord[j] > sound) {
                v.passed = false;
                v.witness = r.m2_witness;
            }
            if (r.m2_coord[j] > literal)
                out.notes.push_back("coordinate " + std::to_string(j + 1) + ": M2=" +
                                    std::to_string(r.m2_coord[j]) + " exceeds 2M1+2maxS=" +
                                    std::to_string(literal) +
                                    " (negative letters); the max|a| form holds");
        }
        v.detail = os.str();
        out.checks.push_back(std::move(v));
    }

    // (b) size(n) <= prod_j (range_j(n) + 1) <= (M2 + 1)^m.
    {
        Verdict v{"size_le_box_le_m2_plus_1_pow_m", true, {}, std::nullopt};
        std::uint64_t cap = 1;
        for (std::size_t j = 0; j < d; ++j)
            cap = saturating_mul(cap, to_count(r.m2) + 1);
        for (std::size_t n = 1; n <= r.n_max && v.passed; ++n) {
            std::uint64_t box = 1;
            for (std::size_t j = 0; j < d; ++j)
                box = saturating_mul(box, to_count(r.ranges[n - 1][j]) + 1);
            if (r.sizes[n - 1] > box || box > cap) {
                v.passed = false;
                v.witness = r.extremes[n - 1][0];
                v.detail = "n=" + std::to_string(n) + ": size " + std::to_string(r.sizes[n - 1]) +
                           ", box " + std::to_string(box) + ", (M2+1)^m " + std::to_string(cap);
            }
        }
        if (v.passed)
            v.detail = "M3=" + std::to_string(r.m3) + " <= (M2+1)^m=" + std::to_string(cap);
        out.checks.push_back(std::move(v));
    }

    // (c) range_j(n) <= (size(n) - 1)(max S_j - min S_j).
    {
        Verdict v{"range_le_size_minus_1_times_spread", true, {}, std::nullopt};
        for (std::size_t n = 1; n <= r.n_max && v.passed; ++n)
            for (std::size_t j = 0; j < d; ++j) {
                Int spread = checked_sub(r.letter_max[j], r.letter_min[j]);
                Int bound = checked_mul(static_cast<Int>(r.sizes[n - 1]) - 1, spread);
                if (r.ranges[n - 1][j] > bound) {
                    v.passed = false;
                    v.witness = r.extremes[n - 1][j];
                    v.detail = "n=" + std::to_string(n) + " coord " + std::to_string(j + 1) +
                               ": range " + std::to_string(r.ranges[n - 1][j]) + " > " +
                               std::to_string(bound);
                    break;
                }
            }
        if (v.passed)
            v.detail = "all n <= " + std::to_string(r.n_max);
        out.checks.push_back(std::move(v));
    }

    Vec spread(d);
    for (std::size_t j = 0; j < d; ++j)
        spread[j] = checked_sub(r.letter_max[j], r.letter_min[j]);
    out.checks.push_back(shift_verdict(r, spread, "shift_le_max_minus_min"));
    return out;
}

Verdicts check_abelian_bounds(const BoundReport& r)
{
    Verdicts out;
    const std::size_t t = r.dimension;

    // rho(n) <= (2 M2 + 1)^t; the literal (2 M2 - 1)^t is reported alongside.
    {
        Verdict v{"rho_le_2m2_plus_1_pow_t", true, {}, std::nullopt};
        std::uint64_t sound = 1, literal = 1;
        for (std::size_t j = 0; j < t; ++j) {
            sound = saturating_mul(sound, 2 * to_count(r.m2) + 1);
            literal = saturating_mul(literal, r.m2 >= 1 ? 2 * to_count(r.m2) - 1 : 0);
        }
        v.passed = r.m3 <= sound;
        v.detail = "M3=" + std::to_string(r.m3) + ", (2M2+1)^t=" + std::to_string(sound) +
                   ", literal (2M2-1)^t=" + std::to_string(literal);
        if (!v.passed)
            v.witness = r.m2_witness;
        if (r.m2 >= 1 && r.m3 > literal)
            out.notes.push_back("M3=" + std::to_string(r.m3) + " exceeds the literal (2M2-1)^t=" +
                                std::to_string(literal) + " with M2=" + std::to_string(r.m2) +
                                "; each coordinate has 2M2+1 admissible values");
        out.checks.push_back(std::move(v));
    }

    // Per n, the distinct Parikh vectors fill their box at most.
    {
        Verdict v{"rho_le_box", true, "all n <= " + std::to_string(r.n_max), std::nullopt};
        for (std::size_t n = 1; n <= r.n_max && v.passed; ++n) {
            std::uint64_t box = 1;
            for (std::size_t j = 0; j < t; ++j)
                box = saturating_mul(box, to_count(r.ranges[n - 1][j]) + 1);
            if (r.sizes[n - 1] > box) {
                v.passed = false;
                v.witness = r.extremes[n - 1][0];
                v.detail = "n=" + std::to_string(n) + ": rho " + std::to_string(r.sizes[n - 1]) +
                           " > box " + std::to_string(box);
            }
        }
        out.checks.push_back(std::move(v));
    }

    // |psi(B1) - psi(B2)| <= M3 - 1 for |B1| = |B2|.
    {
        Verdict v{"parikh_gap_le_m3_minus_1", true, {}, std::nullopt};
        Int bound = static_cast<Int>(r.m3) - 1;
        v.detail = "M2=" + std::to_string(r.m2) + " <= M3-1=" + std::to_string(bound);
        for (std::size_t n = 1; n <= r.n_max && v.passed; ++n)
            for (std::size_t j = 0; j < t; ++j)
                if (r.ranges[n - 1][j] > bound) {
                    v.passed = false;
                    v.witness = r.extremes[n - 1][j];
                    v.detail = "n=" + std::to_string(n) + " coord " + std::to_string(j + 1) +
                               ": gap " + std::to_string(r.ranges[n - 1][j]) + " > " +
                               std::to_string(bound);
                    break;
                }
        out.checks.push_back(std::move(v));
    }

    out.checks.push_back(shift_verdict(r, Vec(t, 1), "parikh_shift_le_1"));

    if (!r.saturated)
        out.notes.push_back("abelian complexity still growing at n_max=" + std::to_string(r.n_max) +
                            " (M3=" + std::to_string(r.m3) + "); no fixed bound observed");
    return out;
}

} // namespace wordcx

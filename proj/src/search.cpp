#include "wordcx/search.hpp"

#include "wordcx/error.hpp"

#include <algorithm>
#include <map>

namespace wordcx {

const char* to_string(PatternMode mode)
{
    return mode == PatternMode::abelian ? "abelian" : "additive";
}

void AvoidanceProblem::validate() const
{
    if (alphabet.empty())
        throw InputError("search alphabet must be nonempty");
    auto sorted = alphabet;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("search alphabet has repeated letters");
    if (k < 2)
        throw InputError("k must be at least 2");
    if (max_length < 1 || max_nodes < 1)
        throw InputError("search budget must be positive");
}

namespace {

// Rows P(0..n) of width d, laid out flat.
bool power_ends_at(std::span<const Int> rows, std::size_t d, std::size_t n, std::size_t k)
{
    auto at = [&](std::size_t i, std::size_t j) { return rows[i * d + j]; };
    for (std::size_t len = 1; len * k <= n; ++len) {
        bool all = true;
        for (std::size_t j = 0; j < d && all; ++j) {
            const Int last = checked_sub(at(n, j), at(n - len, j));
            for (std::size_t i = 2; i <= k && all; ++i)
                all = checked_sub(at(n - (i - 1) * len, j), at(n - i * len, j)) == last;
        }
        if (all)
            return true;
    }
    return false;
}

} // namespace

bool has_additive_square_at_end(std::span<const Int> word, const CumulativeTable& table)
{
    if (word.empty())
        throw InputError("word must be nonempty");
    if (table.length() != word.size())
        throw InputError("table does not belong to the word");
    return has_power_at_end(table, 2);
}

bool has_power_at_end(const CumulativeTable& table, std::size_t k)
{
    std::vector<Int> rows;
    rows.reserve((table.length() + 1) * table.dimension());
    for (std::size_t i = 0; i <= table.length(); ++i) {
        auto r = table.at(i);
        rows.insert(rows.end(), r.begin(), r.end());
    }
    return power_ends_at(rows, table.dimension(), table.length(), k);
}

SearchOutcome backtrack(const AvoidanceProblem& problem, const std::optional<SearchCheckpoint>& from)
{
    problem.validate();
    std::vector<Int> letters = problem.alphabet;
    std::sort(letters.begin(), letters.end());
    const std::size_t a = letters.size();
    const std::size_t d = problem.mode == PatternMode::abelian ? a : 1;

    std::vector<std::size_t> path;   // letter indices
    std::vector<Int> rows(d, 0);     // P(0..|path|)
    std::vector<std::size_t> next;   // next child index per open node, root first
    SearchOutcome out;
    std::size_t session = 0;

    auto push = [&](std::size_t c) {
        const std::size_t n = path.size();
        for (std::size_t j = 0; j < d; ++j) {
            Int inc = problem.mode == PatternMode::abelian ? (j == c ? 1 : 0) : letters[c];
            rows.push_back(checked_add(rows[n * d + j], inc));
        }
        path.push_back(c);
        if (power_ends_at(rows, d, n + 1, problem.k)) {
            rows.resize(rows.size() - d);
            path.pop_back();
            return false;
        }
        return true;
    };
    auto pop = [&] {
        rows.resize(rows.size() - d);
        path.pop_back();
    };
    auto word = [&] {
        std::vector<Int> w;
        for (auto c : path)
            w.push_back(letters[c]);
        return w;
    };

    next.push_back(0);
    if (from) {
        for (Int l : from->path) {
            auto it = std::find(letters.begin(), letters.end(), l);
            if (it == letters.end())
                throw InputError("checkpoint letter " + std::to_string(l) + " is not in the alphabet");
            const auto c = static_cast<std::size_t>(it - letters.begin());
            if (!push(c))
                throw InputError("checkpoint path contains the forbidden pattern");
            next.back() = c + 1;
            next.push_back(0);
        }
        if (!path.empty() && path.size() >= problem.max_length) {
            out.length_capped = true;
            next.pop_back();
            pop();
        }
        out.longest = from->longest;
        out.nodes = from->nodes;
    }

    while (!next.empty()) {
        const std::size_t c = next.back()++;
        if (c >= a) {
            next.pop_back();
            if (!path.empty())
                pop();
            continue;
        }
        if (!push(c))
            continue;
        ++out.nodes;
        ++session;
        if (path.size() > out.longest.size())
            out.longest = word();
        if (session >= problem.max_nodes) {
            // A path at max_length is fine here; resuming pops it without extending.
            out.length_capped = out.length_capped || path.size() >= problem.max_length;
            out.resume = SearchCheckpoint{word(), out.longest, out.nodes};
            return out;
        }
        if (path.size() >= problem.max_length) {
            out.length_capped = true;
            pop();
            continue;
        }
        next.push_back(0);
    }
    out.exhausted = true;
    return out;
}

bool contains_power(std::span<const Int> word, std::size_t k, PatternMode mode)
{
    if (k < 1)
        throw InputError("k must be positive");
    const std::size_t n = word.size();

    // Per-coordinate running totals: one coordinate (sum) or one per distinct letter.
    std::map<Int, std::size_t> index;
    if (mode == PatternMode::abelian)
        for (Int l : word)
            index.try_emplace(l, index.size());
    const std::size_t d = mode == PatternMode::abelian ? std::max<std::size_t>(index.size(), 1) : 1;
    std::vector<std::vector<long long>> prefix(d, std::vector<long long>(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            long long inc = mode == PatternMode::abelian ? (index[word[i]] == j) : word[i];
            prefix[j][i + 1] = prefix[j][i] + inc;
        }

    for (std::size_t start = 0; start < n; ++start)
        for (std::size_t len = 1; start + k * len <= n; ++len) {
            bool same = true;
            for (std::size_t j = 0; j < d && same; ++j) {
                const auto& p = prefix[j];
                const long long first = p[start + len] - p[start];
                for (std::size_t b = 1; b < k && same; ++b)
                    same = p[start + (b + 1) * len] - p[start + b * len] == first;
            }
            if (same)
                return true;
        }
    return false;
}

} // namespace wordcx

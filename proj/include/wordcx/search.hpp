#pragma once

#include "wordcx/measures.hpp"

#include <optional>
#include <span>
#include <vector>

namespace wordcx {

/// Additive: blocks with equal sums. Abelian: blocks with equal Parikh vectors.
enum class PatternMode { additive, abelian };

const char* to_string(PatternMode mode);

/// Words over a finite S in Z avoiding k adjacent equal-length blocks that agree
/// under the chosen mode. k = 2, additive is the additive-square question.
struct AvoidanceProblem {
    std::vector<Int> alphabet;
    std::size_t k = 2;
    PatternMode mode = PatternMode::additive;
    std::size_t max_length = 1000;
    std::size_t max_nodes = 10'000'000; // per run; a resumed run gets a fresh budget

    void validate() const;
};

/// Where a budget-truncated search stopped: `path` is a valid word whose
/// children have not been tried yet.
struct SearchCheckpoint {
    std::vector<Int> path;
    std::vector<Int> longest;
    std::size_t nodes = 0;
};

struct SearchOutcome {
    std::vector<Int> longest;
    bool exhausted = false;      // every node within max_length was visited
    bool length_capped = false;  // some word reached max_length (no finite bound shown)
    std::size_t nodes = 0;       // pattern-free nonempty words visited, cumulative
    std::optional<SearchCheckpoint> resume;
};

/// True iff some suffix B1 B2 with |B1| = |B2| >= 1 has equal block sums.
/// `table` holds the prefix sums of `word`.
bool has_additive_square_at_end(std::span<const Int> word, const CumulativeTable& table);

/// True iff the table's last k*L positions split into k equal blocks for some L >= 1.
bool has_power_at_end(const CumulativeTable& table, std::size_t k);

/// Depth-first extension in increasing letter order. Deterministic.
SearchOutcome backtrack(const AvoidanceProblem& problem,
                        const std::optional<SearchCheckpoint>& from = std::nullopt);

/// From-scratch quadratic scan for k adjacent agreeing blocks anywhere in `word`.
bool contains_power(std::span<const Int> word, std::size_t k, PatternMode mode);

} // namespace wordcx

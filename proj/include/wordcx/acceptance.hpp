#pragma once

#include "wordcx/words.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wordcx {

struct AcceptanceOptions {
    /// Caps every prefix length used by the suite; 0 runs at full scale.
    std::size_t scale_cap = 0;
    /// Replaces the Dekking word (and everything built from it).
    std::optional<WordSource> dekking_override;
    /// Called after each criterion, e.g. for live progress output.
    std::function<void(const struct CriterionResult&)> on_result;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    std::optional<double> time_limit;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// "PASS [n] name: detail", with the elapsed time appended when `with_time`.
std::string format_result(const CriterionResult& result, bool with_time);

/// Fixed-seed word over [lo, hi]; mt19937_64 output reduced modulo the range so
/// the letters are the same on every platform.
std::vector<Letter> pseudo_random_letters(std::uint64_t seed, std::size_t length, Int lo, Int hi);

} // namespace wordcx

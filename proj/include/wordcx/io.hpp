#pragma once

#include "wordcx/complexity.hpp"
#include "wordcx/measures.hpp"
#include "wordcx/powers.hpp"
#include "wordcx/search.hpp"
#include "wordcx/words.hpp"

#include <json.hpp>

#include <ostream>
#include <string>

namespace wordcx {

using Json = nlohmann::json;

// Letters are integers when m = 1 and integer arrays otherwise.
Letter letter_from_json(const Json& j);
Json letter_to_json(const Letter& letter);
Json word_to_json(const FiniteWord& word);

/// Word-description document:
///   {"kind": "periodic", "pattern": [..]}
///   {"kind": "explicit", "letters": [..]}
///   {"kind": "morphic", "rules": [[letter, [..]], ..] | {"0": [..], ..}, "seed": letter}
///   {"kind": "morphic", "preset": "dekking"}
///   {"kind": "champernowne"}
///   {"kind": "block_coded", "base": {..}, "code": <rules>}
///   {"kind": "lifted", "base": {..}}
WordSource word_source_from_json(const Json& j);

/// {"images": [[letter, [ints]], ..]} or {"images": {"0": [ints], ..}}; the bare
/// map without the "images" key is accepted as well.
MorphismMu morphism_from_json(const Json& j);

/// Keys: n, s_max, t_max, modulus ("auto" or int), retry_cap, allow_empty_anchor, spread_window.
SearchLimits limits_from_json(const Json& j, SearchLimits base = {});
Json limits_to_json(const SearchLimits& limits);

/// Witness document, or a not-found / retry-exhausted document echoing the limits.
Json power_result_to_json(const PowerResult& result, const std::string& mu_name,
                          const std::string& method);

Json report_to_json(const BoundReport& report);
Json verdicts_to_json(const Verdicts& verdicts);
Json profile_to_json(const ComplexityProfile& profile, bool with_values);

/// Columns n, size, min_value.., max_value.. (one block per coordinate).
void write_profile_csv(std::ostream& os, const ComplexityProfile& profile);

Json outcome_to_json(const AvoidanceProblem& problem, const SearchOutcome& outcome);
Json checkpoint_to_json(const SearchCheckpoint& checkpoint);
/// Accepts the checkpoint object or a bare letter array (the DFS path alone).
SearchCheckpoint checkpoint_from_json(const Json& j);

/// Parses `text` as inline JSON, or reads it as a file path if it does not parse.
Json load_json_argument(const std::string& text);

} // namespace wordcx

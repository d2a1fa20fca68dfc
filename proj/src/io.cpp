#include "wordcx/io.hpp"

#include "wordcx/error.hpp"

#include <algorithm>
#include <set>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace wordcx {

namespace {

[[noreturn]] void malformed(const std::string& what)
{
    throw InputError("malformed document: " + what);
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        malformed(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

Int integer(const Json& j, const char* what)
{
    if (!j.is_number_integer())
        malformed(std::string(what) + " must be an integer");
    return j.get<Int>();
}

std::vector<Letter> letters_from_json(const Json& j, const char* what)
{
    if (!j.is_array())
        malformed(std::string(what) + " must be an array");
    std::vector<Letter> out;
    for (const auto& e : j)
        out.push_back(letter_from_json(e));
    return out;
}

Substitution substitution_from_json(const Json& j)
{
    Substitution out;
    auto add = [&](Letter from, const Json& to) {
        if (!out.emplace(std::move(from), letters_from_json(to, "image")).second)
            malformed("letter listed twice in a substitution");
    };
    if (j.is_object()) {
        for (const auto& [key, to] : j.items()) {
            std::size_t used = 0;
            Int v = 0;
            try {
                v = std::stoll(key, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != key.size())
                malformed("substitution key \"" + key + "\" is not an integer");
            add(Letter::scalar(v), to);
        }
    } else if (j.is_array()) {
        for (const auto& pair : j) {
            if (!pair.is_array() || pair.size() != 2)
                malformed("substitution entries must be [letter, [letters]] pairs");
            add(letter_from_json(pair[0]), pair[1]);
        }
    } else {
        malformed("substitution must be an object or an array of pairs");
    }
    return out;
}

Json vec_to_json(const Vec& v)
{
    Json a = Json::array();
    for (Int x : v)
        a.push_back(x);
    return a;
}

Json pair_to_json(const FactorPair& p)
{
    return Json{{"n", p.n}, {"first", p.first}, {"second", p.second}};
}

} // namespace

Letter letter_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Letter::scalar(j.get<Int>());
    if (j.is_array() && !j.empty()) {
        Vec coords;
        for (const auto& c : j)
            coords.push_back(integer(c, "letter coordinate"));
        return Letter(std::move(coords));
    }
    malformed("letter must be an integer or a nonempty integer array");
}

Json letter_to_json(const Letter& letter)
{
    if (letter.dimension() == 1)
        return letter[0];
    return vec_to_json(letter.coords);
}

Json word_to_json(const FiniteWord& word)
{
    Json a = Json::array();
    for (const auto& l : word.letters)
        a.push_back(letter_to_json(l));
    return a;
}

WordSource word_source_from_json(const Json& j)
{
    if (!j.is_object())
        malformed("word description must be an object");
    const auto& kind_field = field(j, "kind");
    if (!kind_field.is_string())
        malformed("\"kind\" must be a string");
    const auto kind = kind_field.get<std::string>();

    if (kind == "periodic")
        return WordSource::periodic(letters_from_json(field(j, "pattern"), "pattern"));
    if (kind == "explicit")
        return WordSource::explicit_word(letters_from_json(field(j, "letters"), "letters"));
    if (kind == "champernowne")
        return WordSource::champernowne_binary();
    if (kind == "morphic") {
        if (j.contains("preset")) {
            if (j.at("preset") != "dekking")
                malformed("unknown morphic preset");
            return dekking_sigma();
        }
        return WordSource::morphic(substitution_from_json(field(j, "rules")),
                                   letter_from_json(field(j, "seed")));
    }
    if (kind == "block_coded")
        return WordSource::block_coded(word_source_from_json(field(j, "base")),
                                       substitution_from_json(field(j, "code")));
    if (kind == "lifted")
        return WordSource::lifted(word_source_from_json(field(j, "base")));
    malformed("unknown kind \"" + kind + "\"");
}

MorphismMu morphism_from_json(const Json& j)
{
    const Json& images = j.is_object() && j.contains("images") ? j.at("images") : j;
    std::vector<std::pair<Letter, Vec>> entries;
    auto add = [&](Letter from, const Json& to) {
        if (!to.is_array() || to.empty())
            malformed("morphism image must be a nonempty integer array");
        Vec v;
        for (const auto& c : to)
            v.push_back(integer(c, "morphism image entry"));
        entries.emplace_back(std::move(from), std::move(v));
    };
    if (images.is_object()) {
        for (const auto& [key, to] : images.items()) {
            std::size_t used = 0;
            Int v = 0;
            try {
                v = std::stoll(key, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != key.size())
                malformed("morphism key \"" + key + "\" is not an integer");
            add(Letter::scalar(v), to);
        }
    } else if (images.is_array()) {
        for (const auto& pair : images) {
            if (!pair.is_array() || pair.size() != 2)
                malformed("morphism entries must be [letter, [ints]] pairs");
            add(letter_from_json(pair[0]), pair[1]);
        }
    } else {
        malformed("morphism must be an object or an array of pairs");
    }
    if (entries.empty())
        malformed("morphism has no images");
    std::sort(entries.begin(), entries.end());
    std::vector<Letter> domain;
    std::vector<Vec> vecs;
    for (auto& [l, v] : entries) {
        domain.push_back(l);
        vecs.push_back(v);
    }
    return MorphismMu(Alphabet(std::move(domain)), std::move(vecs), MorphismMu::Kind::custom);
}

SearchLimits limits_from_json(const Json& j, SearchLimits base)
{
    if (!j.is_object())
        malformed("limits must be an object");
    static const std::set<std::string> known{"n", "s_max", "t_max", "modulus", "retry_cap",
                                             "allow_empty_anchor", "spread_window"};
    for (const auto& [key, value] : j.items())
        if (!known.contains(key))
            malformed("unknown limits key \"" + key + "\"");
    auto positive = [&](const char* key) -> std::optional<std::size_t> {
        if (!j.contains(key))
            return std::nullopt;
        Int v = integer(j.at(key), key);
        if (v < 1)
            malformed(std::string(key) + " must be positive");
        return static_cast<std::size_t>(v);
    };
    if (auto v = positive("n"))
        base.max_prefix = *v;
    // null clears an optional limit, matching what limits_to_json writes.
    if (j.contains("s_max") && j.at("s_max").is_null())
        base.max_block.reset();
    else if (auto v = positive("s_max"))
        base.max_block = *v;
    if (j.contains("t_max") && j.at("t_max").is_null()) {
        base.max_offset.reset();
    } else if (j.contains("t_max")) {
        Int v = integer(j.at("t_max"), "t_max");
        if (v < 0)
            malformed("t_max must be nonnegative");
        base.max_offset = static_cast<std::size_t>(v);
    }
    if (j.contains("modulus")) {
        const auto& m = j.at("modulus");
        if (m.is_string() && m == "auto")
            base.initial_modulus.reset();
        else
            base.initial_modulus = integer(m, "modulus");
    }
    if (j.contains("retry_cap")) {
        Int v = integer(j.at("retry_cap"), "retry_cap");
        if (v < 0)
            malformed("retry_cap must be nonnegative");
        base.retry_cap = static_cast<unsigned>(v);
    }
    if (j.contains("allow_empty_anchor")) {
        if (!j.at("allow_empty_anchor").is_boolean())
            malformed("allow_empty_anchor must be a boolean");
        base.allow_empty_anchor = j.at("allow_empty_anchor").get<bool>();
    }
    if (auto v = positive("spread_window"))
        base.spread_window = *v;
    base.validate();
    return base;
}

Json limits_to_json(const SearchLimits& limits)
{
    Json j{{"n", limits.max_prefix},
           {"retry_cap", limits.retry_cap},
           {"allow_empty_anchor", limits.allow_empty_anchor},
           {"spread_window", limits.spread_window}};
    j["s_max"] = limits.max_block ? Json(*limits.max_block) : Json(nullptr);
    j["t_max"] = limits.max_offset ? Json(*limits.max_offset) : Json(nullptr);
    j["modulus"] = limits.initial_modulus ? Json(*limits.initial_modulus) : Json("auto");
    return j;
}

Json power_result_to_json(const PowerResult& result, const std::string& mu_name,
                          const std::string& method)
{
    Json j;
    j["status"] = to_string(result.status);
    j["mu"] = mu_name;
    j["method"] = method;
    if (result.found()) {
        const auto& w = *result.witness;
        j["t"] = w.t;
        j["s"] = w.s;
        j["k"] = w.k;
        j["value"] = vec_to_json(w.value);
        j["verified"] = true;
        j["anchor"] = w.t == 0 ? "empty_prefix" : "position";
    } else {
        j["limits"] = limits_to_json(result.limits);
    }
    if (!result.modulus.empty()) {
        j["modulus"] = vec_to_json(result.modulus);
        j["retries"] = result.retries;
    }
    return j;
}

Json report_to_json(const BoundReport& r)
{
    Json j;
    j["mode"] = to_string(r.mode);
    j["prefix_length"] = r.prefix_length;
    j["n_max"] = r.n_max;
    j["dimension"] = r.dimension;
    j["m1"] = r.m1;
    j["m2"] = r.m2;
    j["m3"] = r.m3;
    j["m1_by_coordinate"] = vec_to_json(r.m1_coord);
    j["m2_by_coordinate"] = vec_to_json(r.m2_coord);
    j["m1_witness"] = pair_to_json(r.m1_witness);
    j["m2_witness"] = pair_to_json(r.m2_witness);
    j["m2_euclidean_upper"] = r.m2_euclidean_upper;
    j["letter_max"] = vec_to_json(r.letter_max);
    j["letter_min"] = vec_to_json(r.letter_min);
    j["letter_max_abs"] = vec_to_json(r.letter_max_abs);
    j["max_shift"] = vec_to_json(r.max_shift);
    j["saturated"] = r.saturated;
    Json per_n = Json::array();
    for (std::size_t n = 1; n <= r.n_max; ++n) {
        Json row{{"n", n}, {"size", r.sizes[n - 1]}, {"range", vec_to_json(r.ranges[n - 1])},
                 {"m2", r.m2_at[n - 1]}};
        row["m1"] = r.m1_at[n - 1] ? Json(*r.m1_at[n - 1]) : Json(nullptr);
        per_n.push_back(std::move(row));
    }
    j["per_n"] = std::move(per_n);
    return j;
}

Json verdicts_to_json(const Verdicts& v)
{
    Json checks = Json::array();
    for (const auto& c : v.checks) {
        Json e{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
        if (c.witness)
            e["witness"] = pair_to_json(*c.witness);
        checks.push_back(std::move(e));
    }
    return Json{{"passed", v.all_passed()}, {"checks", checks}, {"notes", v.notes}};
}

Json profile_to_json(const ComplexityProfile& p, bool with_values)
{
    Json rows = Json::array();
    for (std::size_t n = 1; n <= p.n_max; ++n) {
        const auto& set = p.values(n);
        Vec lo(p.dimension), hi(p.dimension);
        for (std::size_t j = 0; j < p.dimension; ++j) {
            lo[j] = set.min(j);
            hi[j] = set.max(j);
        }
        Json row{{"n", n}, {"size", set.size()}, {"min", vec_to_json(lo)}, {"max", vec_to_json(hi)}};
        if (with_values) {
            Json vals = Json::array();
            for (std::size_t i = 0; i < set.size(); ++i)
                vals.push_back(vec_to_json(Vec(set[i].begin(), set[i].end())));
            row["values"] = std::move(vals);
        }
        rows.push_back(std::move(row));
    }
    return Json{{"mode", to_string(p.mode)},
                {"prefix_length", p.prefix_length},
                {"n_max", p.n_max},
                {"dimension", p.dimension},
                {"rows", rows}};
}

void write_profile_csv(std::ostream& os, const ComplexityProfile& p)
{
    const std::size_t d = p.dimension;
    os << "n,size";
    for (const char* side : {"min_value", "max_value"})
        for (std::size_t j = 0; j < d; ++j) {
            os << ',' << side;
            if (d > 1)
                os << '_' << j + 1;
        }
    os << '\n';
    for (std::size_t n = 1; n <= p.n_max; ++n) {
        const auto& set = p.values(n);
        os << n << ',' << set.size();
        for (std::size_t j = 0; j < d; ++j)
            os << ',' << set.min(j);
        for (std::size_t j = 0; j < d; ++j)
            os << ',' << set.max(j);
        os << '\n';
    }
}

Json outcome_to_json(const AvoidanceProblem& problem, const SearchOutcome& o)
{
    auto sorted = problem.alphabet;
    std::sort(sorted.begin(), sorted.end());
    Json j{{"alphabet", sorted},
           {"k", problem.k},
           {"mode", to_string(problem.mode)},
           {"longest", o.longest},
           {"length", o.longest.size()},
           {"exhausted", o.exhausted},
           {"length_capped", o.length_capped},
           {"nodes", o.nodes}};
    if (o.resume)
        j["checkpoint"] = checkpoint_to_json(*o.resume);
    return j;
}

Json checkpoint_to_json(const SearchCheckpoint& c)
{
    return Json{{"path", c.path}, {"longest", c.longest}, {"nodes", c.nodes}};
}

SearchCheckpoint checkpoint_from_json(const Json& j)
{
    auto ints = [](const Json& a, const char* what) {
        if (!a.is_array())
            malformed(std::string(what) + " must be an array");
        std::vector<Int> out;
        for (const auto& e : a)
            out.push_back(integer(e, what));
        return out;
    };
    SearchCheckpoint c;
    if (j.is_array()) {
        c.path = ints(j, "checkpoint path");
        return c;
    }
    c.path = ints(field(j, "path"), "checkpoint path");
    if (j.contains("longest"))
        c.longest = ints(j.at("longest"), "checkpoint longest");
    if (j.contains("nodes")) {
        Int n = integer(j.at("nodes"), "checkpoint nodes");
        if (n < 0)
            malformed("checkpoint nodes must be nonnegative");
        c.nodes = static_cast<std::size_t>(n);
    }
    return c;
}

Json load_json_argument(const std::string& text)
{
    Json parsed = Json::parse(text, nullptr, false);
    if (!parsed.is_discarded())
        return parsed;
    std::ifstream in(text);
    if (!in)
        throw InputError("\"" + text + "\" is neither valid JSON nor a readable file");
    parsed = Json::parse(in, nullptr, false);
    if (parsed.is_discarded())
        throw InputError("file \"" + text + "\" does not contain valid JSON");
    return parsed;
}

} // namespace wordcx

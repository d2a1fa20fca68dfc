#include "wordcx/cli.hpp"

#include "wordcx/acceptance.hpp"
#include "wordcx/error.hpp"
#include "wordcx/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace wordcx {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct Config {
    std::vector<std::string> words;
    std::size_t n = 1000;
    std::size_t n_max = 256;
    std::size_t k = 2;
    std::string mode = "additive";
    std::string method = "scan";
    std::string modulus;
    std::string limits;
    std::string format;
    std::string out_path;
    std::string checkpoint;
    std::string alphabet;
    std::size_t max_nodes = 10'000'000;
    bool quick = false;
    std::string dekking;
};

// Writes to --out when given, else to the caller's stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw InputError("cannot open output file: " + path);
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

WordSource single_word(const Config& c)
{
    if (c.words.size() != 1)
        throw InputError("expected exactly one --word");
    return word_source_from_json(load_json_argument(c.words.front()));
}

struct ModeChoice {
    MorphismMu mu;
    std::string name; // "additive" | "parikh" | "custom"
};

ModeChoice resolve_mode(const std::string& mode, const WordSource& source)
{
    if (mode == "additive") {
        if (source.dimension() != 1)
            throw InputError("additive mode needs a word over Z; use mu:<file> for vectors");
        return {mu_additive(source.alphabet()), "additive"};
    }
    if (mode == "abelian")
        return {mu_parikh(source.alphabet()), "parikh"};
    if (mode.rfind("mu:", 0) == 0)
        return {morphism_from_json(load_json_argument(mode.substr(3))), "custom"};
    throw InputError("unknown mode: " + mode);
}

SearchLimits resolve_limits(const Config& c)
{
    SearchLimits limits;
    limits.max_prefix = c.n;
    if (!c.limits.empty())
        limits = limits_from_json(load_json_argument(c.limits), limits);
    if (!c.modulus.empty() && c.modulus != "auto") {
        std::size_t used = 0;
        Int q = 0;
        try {
            q = std::stoll(c.modulus, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != c.modulus.size())
            throw InputError("--modulus must be an integer or 'auto'");
        limits.initial_modulus = q;
    } else if (c.modulus == "auto") {
        limits.initial_modulus.reset();
    }
    limits.validate();
    return limits;
}

std::string letter_text(const Letter& letter)
{
    std::string s;
    for (std::size_t j = 0; j < letter.coords.size(); ++j) {
        if (j)
            s += ' ';
        s += std::to_string(letter.coords[j]);
    }
    return s;
}

int cmd_generate(const Config& c, std::ostream& out)
{
    auto source = single_word(c);
    auto word = source.prefix(c.n);
    Sink sink(c.out_path, out);
    if (c.format == "json") {
        Json doc{{"kind", "explicit"}, {"letters", word_to_json(word)}};
        sink.get() << doc.dump() << '\n';
    } else if (c.format.empty() || c.format == "text") {
        for (const auto& letter : word.letters)
            sink.get() << letter_text(letter) << '\n';
    } else {
        throw InputError("generate supports --format text or json");
    }
    return exit_ok;
}

int cmd_complexity(const Config& c, std::ostream& out, std::ostream& err)
{
    auto source = single_word(c);
    auto mode = resolve_mode(c.mode, source);
    auto word = source.prefix(c.n);
    auto table = accumulate(mode.mu, word);
    const std::size_t n_max = std::min(c.n_max, word.size());
    auto prof = profile(table, n_max, profile_mode_for(mode.mu));
    auto report = observed_bounds(prof, table, mode.mu);
    auto verdicts = mode.name == "parikh" ? check_abelian_bounds(report) : check_additive_bounds(report);

    Sink sink(c.out_path, out);
    if (c.format == "csv") {
        write_profile_csv(sink.get(), prof);
        for (const auto& v : verdicts.checks)
            err << (v.passed ? "pass " : "FAIL ") << v.name << ": " << v.detail << '\n';
    } else if (c.format.empty() || c.format == "json") {
        Json doc{{"mu", mode.name},
                 {"profile", profile_to_json(prof, false)},
                 {"report", report_to_json(report)},
                 {"verdicts", verdicts_to_json(verdicts)}};
        sink.get() << doc.dump(2) << '\n';
    } else {
        throw InputError("complexity supports --format csv or json");
    }
    return verdicts.all_passed() ? exit_ok : exit_failed;
}

int emit_power(const PowerResult& r, const std::string& mu, const std::string& method, const Config& c,
               std::ostream& out)
{
    Sink sink(c.out_path, out);
    sink.get() << power_result_to_json(r, mu, method).dump(2) << '\n';
    return r.status == PowerStatus::retry_exhausted ? exit_failed : exit_ok;
}

int cmd_find_power(const Config& c, std::ostream& out)
{
    if (!c.format.empty() && c.format != "json")
        throw InputError("find-power output is JSON only");
    auto source = single_word(c);
    auto mode = resolve_mode(c.mode, source);
    auto limits = resolve_limits(c);
    PowerResult r;
    if (c.method == "scan") {
        r = find_power_scan(source, mode.mu, c.k, limits);
    } else if (c.method == "vdw") {
        if (mode.name == "additive")
            r = find_power_vdw(source, c.k, limits);
        else if (mode.name == "parikh")
            r = find_power_abelian(source, c.k, limits);
        else
            r = find_power_mod_mu(source, mode.mu, c.k, limits);
    } else {
        throw InputError("unknown method: " + c.method);
    }
    return emit_power(r, mode.name, c.method, c, out);
}

int cmd_simultaneous(const Config& c, std::ostream& out)
{
    if (c.words.empty())
        throw InputError("simultaneous needs at least one --word");
    std::vector<WordSource> words;
    for (const auto& w : c.words)
        words.push_back(word_source_from_json(load_json_argument(w)));
    auto r = find_simultaneous(words, c.k, resolve_limits(c));
    return emit_power(r, "additive", "simultaneous", c, out);
}

std::vector<Int> parse_alphabet(const std::string& text)
{
    std::vector<Int> letters;
    if (!text.empty() && text.front() == '[') {
        for (const auto& v : Json::parse(text))
            letters.push_back(v.get<Int>());
        return letters;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        Int v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw InputError("bad alphabet entry: '" + item + "'");
        letters.push_back(v);
    }
    return letters;
}

int cmd_search(const Config& c, std::ostream& out)
{
    AvoidanceProblem problem;
    problem.alphabet = parse_alphabet(c.alphabet);
    problem.k = c.k;
    problem.max_length = c.n;
    problem.max_nodes = c.max_nodes;
    if (c.mode == "additive")
        problem.mode = PatternMode::additive;
    else if (c.mode == "abelian")
        problem.mode = PatternMode::abelian;
    else
        throw InputError("search supports --mode additive or abelian");
    problem.validate();

    std::optional<SearchCheckpoint> from;
    if (!c.checkpoint.empty() && std::filesystem::exists(c.checkpoint)) {
        std::ifstream in(c.checkpoint);
        Json doc;
        try {
            in >> doc;
        } catch (const Json::exception& e) {
            throw InputError("unreadable checkpoint " + c.checkpoint + ": " + e.what());
        }
        from = checkpoint_from_json(doc);
    }
    auto outcome = backtrack(problem, from);
    if (!c.checkpoint.empty()) {
        if (outcome.resume) {
            std::ofstream cp(c.checkpoint);
            if (!cp)
                throw InputError("cannot write checkpoint: " + c.checkpoint);
            cp << checkpoint_to_json(*outcome.resume).dump() << '\n';
        } else {
            std::filesystem::remove(c.checkpoint);
        }
    }
    Sink sink(c.out_path, out);
    sink.get() << outcome_to_json(problem, outcome).dump(2) << '\n';
    return exit_ok;
}

int cmd_verify(const Config& c, std::ostream& out)
{
    AcceptanceOptions options;
    if (c.quick)
        options.scale_cap = 1000;
    if (!c.dekking.empty())
        options.dekking_override = word_source_from_json(load_json_argument(c.dekking));
    Sink sink(c.out_path, out);
    options.on_result = [&](const CriterionResult& r) { sink.get() << format_result(r, false) << std::endl; };
    auto results = run_acceptance(options);
    std::size_t failed = 0;
    for (const auto& r : results)
        failed += !r.passed;
    sink.get() << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
    return failed == 0 ? exit_ok : exit_failed;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Additive and abelian complexity of infinite words", "wordcx"};
    app.require_subcommand(1);
    Config c;

    auto word_opt = [&](CLI::App* sub, bool many) {
        auto* o = sub->add_option("--word", c.words, "word description (JSON file or inline JSON)")->required();
        if (!many)
            o->expected(1);
    };
    auto n_opt = [&](CLI::App* sub, const char* what) {
        sub->add_option("--n", c.n, what)->check(CLI::PositiveNumber);
    };
    auto out_opt = [&](CLI::App* sub) { sub->add_option("--out", c.out_path, "output path (default stdout)"); };
    auto limit_opts = [&](CLI::App* sub) {
        sub->add_option("--k", c.k, "number of blocks")->check(CLI::Range(2, 1 << 20));
        sub->add_option("--modulus", c.modulus, "initial coloring modulus: integer or auto");
        sub->add_option("--limits", c.limits, "limits JSON (file or inline)");
    };

    auto* gen = app.add_subcommand("generate", "print a prefix of a word, one letter per line");
    word_opt(gen, false);
    n_opt(gen, "prefix length");
    gen->add_option("--format", c.format, "text or json");
    out_opt(gen);

    auto* cx = app.add_subcommand("complexity", "value-set profile, observed constants and bound checks");
    word_opt(cx, false);
    n_opt(cx, "prefix length");
    cx->add_option("--nmax", c.n_max, "largest factor length")->check(CLI::PositiveNumber);
    cx->add_option("--mode", c.mode, "additive, abelian or mu:<file>");
    cx->add_option("--format", c.format, "csv or json");
    out_opt(cx);

    auto* fp = app.add_subcommand("find-power", "search for k blocks with equal values");
    word_opt(fp, false);
    n_opt(fp, "prefix length searched");
    fp->add_option("--mode", c.mode, "additive, abelian or mu:<file>");
    fp->add_option("--method", c.method, "scan or vdw");
    fp->add_option("--format", c.format, "json");
    limit_opts(fp);
    out_opt(fp);

    auto* sim = app.add_subcommand("simultaneous", "one (t, s) that is an additive k-power in every word");
    word_opt(sim, true);
    n_opt(sim, "prefix length searched");
    limit_opts(sim);
    out_opt(sim);

    auto* se = app.add_subcommand("search", "backtracking search for words avoiding k-powers");
    se->add_option("--alphabet", c.alphabet, "letters, e.g. 0,1,3 or [0,1,3]")->required();
    n_opt(se, "maximum word length");
    se->add_option("--k", c.k, "number of blocks")->check(CLI::Range(2, 1 << 20));
    se->add_option("--mode", c.mode, "additive or abelian");
    se->add_option("--max-nodes", c.max_nodes, "node budget for this run")->check(CLI::PositiveNumber);
    se->add_option("--checkpoint", c.checkpoint, "resume from and save to this file");
    out_opt(se);

    auto* ver = app.add_subcommand("verify", "run the acceptance suite");
    ver->add_flag("--quick", c.quick, "reduced prefix lengths");
    ver->add_option("--dekking", c.dekking, "substitute word for the Dekking word");
    out_opt(ver);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "wordcx: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (gen->parsed())
            return cmd_generate(c, out);
        if (cx->parsed())
            return cmd_complexity(c, out, err);
        if (fp->parsed())
            return cmd_find_power(c, out);
        if (sim->parsed())
            return cmd_simultaneous(c, out);
        if (se->parsed())
            return cmd_search(c, out);
        if (ver->parsed())
            return cmd_verify(c, out);
    } catch (const OverflowError& e) {
        err << "wordcx: overflow: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        err << "wordcx: " << e.what() << '\n';
        return exit_usage;
    } catch (const Json::exception& e) {
        err << "wordcx: bad JSON: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace wordcx

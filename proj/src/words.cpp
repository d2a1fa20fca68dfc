#include "wordcx/words.hpp"

#include "wordcx/error.hpp"

#include <algorithm>
#include <variant>

namespace wordcx {

namespace {

struct Periodic {
    std::vector<Letter> pattern;
};

struct Explicit {
    std::vector<Letter> letters;
};

struct Morphic {
    Substitution rules;
    Letter seed;
};

struct Champernowne {};

struct BlockCoded {
    WordSource base;
    Substitution code;
};

struct Lifted {
    WordSource base;
};

void check_dimension(std::span<const Letter> letters, std::size_t m, const char* what)
{
    for (const auto& l : letters)
        if (l.dimension() != m)
            throw InputError(std::string(what) + ": letter " + to_string(l)
                             + " does not match dimension " + std::to_string(m));
}

std::vector<Letter> champernowne_prefix(std::size_t n)
{
    std::vector<Letter> out;
    out.reserve(n + 64);
    const Letter zero = Letter::scalar(0), one = Letter::scalar(1);
    out.push_back(zero);
    for (std::uint64_t v = 1; out.size() < n; ++v) {
        int top = 63 - __builtin_clzll(v);
        for (int b = top; b >= 0; --b)
            out.push_back((v >> b) & 1 ? one : zero);
    }
    out.resize(n);
    return out;
}

} // namespace

struct WordSource::Impl {
    std::variant<Periodic, Explicit, Morphic, Champernowne, BlockCoded, Lifted> body;
    Alphabet alphabet;
    std::optional<std::size_t> length;
};

WordSource WordSource::periodic(std::vector<Letter> pattern)
{
    if (pattern.empty())
        throw InputError("periodic word needs a nonempty pattern");
    auto alphabet = Alphabet::sorted_from(pattern);
    check_dimension(pattern, alphabet.dimension(), "periodic pattern");
    return WordSource(std::make_shared<const Impl>(
        Impl{Periodic{std::move(pattern)}, std::move(alphabet), std::nullopt}));
}

WordSource WordSource::explicit_word(std::vector<Letter> letters)
{
    if (letters.empty())
        throw InputError("explicit word must be nonempty");
    auto alphabet = Alphabet::sorted_from(letters);
    check_dimension(letters, alphabet.dimension(), "explicit word");
    const std::size_t n = letters.size();
    return WordSource(std::make_shared<const Impl>(
        Impl{Explicit{std::move(letters)}, std::move(alphabet), n}));
}

WordSource WordSource::morphic(Substitution rules, Letter seed)
{
    auto it = rules.find(seed);
    if (it == rules.end())
        throw InputError("morphic word: no rule for seed " + to_string(seed));
    if (it->second.size() < 2 || it->second.front() != seed)
        throw InputError("morphic word: rule for seed " + to_string(seed)
                         + " must start with the seed and have length >= 2");
    std::vector<Letter> keys;
    for (const auto& [from, to] : rules) {
        if (to.empty())
            throw InputError("morphic word: empty image for " + to_string(from));
        for (const auto& l : to)
            if (!rules.contains(l))
                throw InputError("morphic word: image of " + to_string(from)
                                 + " uses letter " + to_string(l) + " which has no rule");
        keys.push_back(from);
    }
    auto alphabet = Alphabet::sorted_from(keys);
    for (const auto& [from, to] : rules)
        check_dimension(to, alphabet.dimension(), "morphic rule");
    return WordSource(std::make_shared<const Impl>(
        Impl{Morphic{std::move(rules), std::move(seed)}, std::move(alphabet), std::nullopt}));
}

WordSource WordSource::champernowne_binary()
{
    return WordSource(std::make_shared<const Impl>(
        Impl{Champernowne{}, Alphabet(scalars({0, 1})), std::nullopt}));
}

WordSource WordSource::block_coded(WordSource base, Substitution code)
{
    std::vector<Letter> produced;
    for (const auto& letter : base.alphabet().letters()) {
        auto it = code.find(letter);
        if (it == code.end())
            throw InputError("block code has no image for letter " + to_string(letter));
        if (it->second.empty())
            throw InputError("block code image of " + to_string(letter) + " is empty");
        produced.insert(produced.end(), it->second.begin(), it->second.end());
    }
    auto alphabet = Alphabet::sorted_from(produced);
    check_dimension(produced, alphabet.dimension(), "block code");
    std::optional<std::size_t> length;
    if (auto base_len = base.length()) {
        // Every letter of an explicit base occurs in its alphabet.
        auto word = base.prefix(*base_len);
        std::size_t total = 0;
        for (const auto& l : word.letters)
            total += code.at(l).size();
        length = total;
    }
    return WordSource(std::make_shared<const Impl>(
        Impl{BlockCoded{std::move(base), std::move(code)}, std::move(alphabet), length}));
}

WordSource WordSource::lifted(WordSource base)
{
    const auto& s = base.alphabet();
    if (s.dimension() != 1)
        throw InputError("lift needs a base word over a subset of Z (dimension 1)");
    if (s.contains(Letter::scalar(0)))
        throw InputError("lift needs 0 outside the alphabet: the lifted letters would not "
                         "be linearly independent");
    const std::size_t m = s.size();
    std::vector<Letter> lifted;
    for (std::size_t j = 0; j < m; ++j) {
        Vec coords(m, 0);
        coords[j] = s[j][0];
        lifted.emplace_back(std::move(coords));
    }
    auto length = base.length();
    return WordSource(std::make_shared<const Impl>(
        Impl{Lifted{std::move(base)}, Alphabet(std::move(lifted)), length}));
}

WordSource::Kind WordSource::kind() const noexcept
{
    return static_cast<Kind>(impl_->body.index());
}

const Alphabet& WordSource::alphabet() const noexcept
{
    return impl_->alphabet;
}

std::optional<std::size_t> WordSource::length() const noexcept
{
    return impl_->length;
}

FiniteWord WordSource::prefix(std::size_t n) const
{
    if (n == 0)
        throw InputError("prefix length must be positive");
    if (impl_->length && n > *impl_->length)
        throw RangeError("requested prefix of length " + std::to_string(n)
                         + " from a word of length " + std::to_string(*impl_->length));

    const Alphabet& alphabet = impl_->alphabet;
    auto visitor = [&](const auto& body) -> std::vector<Letter> {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, Periodic>) {
            std::vector<Letter> out;
            out.reserve(n);
            for (std::size_t i = 0; i < n; ++i)
                out.push_back(body.pattern[i % body.pattern.size()]);
            return out;
        } else if constexpr (std::is_same_v<T, Explicit>) {
            return {body.letters.begin(), body.letters.begin() + static_cast<std::ptrdiff_t>(n)};
        } else if constexpr (std::is_same_v<T, Morphic>) {
            // u = rules(u): expand u_1, u_2, ... in turn; u_i is always known
            // by the time it is read because |rules(seed)| >= 2.
            std::vector<Letter> out = body.rules.at(body.seed);
            out.reserve(n + 16);
            for (std::size_t i = 1; out.size() < n; ++i) {
                const auto& image = body.rules.at(out[i]);
                out.insert(out.end(), image.begin(), image.end());
            }
            out.resize(n);
            return out;
        } else if constexpr (std::is_same_v<T, Champernowne>) {
            return champernowne_prefix(n);
        } else if constexpr (std::is_same_v<T, BlockCoded>) {
            // Images are nonempty, so n base letters always suffice.
            std::size_t need = n;
            if (auto len = body.base.length())
                need = std::min(need, *len);
            auto base = body.base.prefix(need);
            std::vector<Letter> out;
            out.reserve(n + 16);
            for (const auto& l : base.letters) {
                const auto& image = body.code.at(l);
                out.insert(out.end(), image.begin(), image.end());
                if (out.size() >= n)
                    break;
            }
            out.resize(n);
            return out;
        } else {
            auto base = body.base.prefix(n);
            const auto& s = body.base.alphabet();
            std::vector<Letter> out;
            out.reserve(n);
            for (const auto& l : base.letters)
                out.push_back(alphabet[*s.index_of(l)]);
            return out;
        }
    };
    return FiniteWord{std::visit(visitor, impl_->body)};
}

Substitution dekking_rules()
{
    return {{Letter::scalar(0), scalars({0, 1, 1})}, {Letter::scalar(1), scalars({0, 0, 0, 1})}};
}

WordSource dekking_sigma()
{
    return WordSource::morphic(dekking_rules(), Letter::scalar(0));
}

WordSource dekking_tau()
{
    return WordSource::block_coded(
        dekking_sigma(),
        {{Letter::scalar(1), scalars({1, 2})}, {Letter::scalar(0), scalars({0, 3})}});
}

} // namespace wordcx

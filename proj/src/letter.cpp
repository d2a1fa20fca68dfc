#include "wordcx/letter.hpp"

#include "wordcx/error.hpp"

#include <algorithm>
#include <sstream>

namespace wordcx {

Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

std::string to_string(const Letter& letter)
{
    if (letter.dimension() == 1)
        return std::to_string(letter[0]);
    std::ostringstream os;
    os << '(';
    for (std::size_t j = 0; j < letter.dimension(); ++j)
        os << (j ? "," : "") << letter[j];
    os << ')';
    return os.str();
}

std::vector<Letter> scalars(std::initializer_list<Int> values)
{
    std::vector<Letter> out;
    out.reserve(values.size());
    for (Int v : values)
        out.push_back(Letter::scalar(v));
    return out;
}

Alphabet::Alphabet(std::vector<Letter> letters) : letters_(std::move(letters))
{
    if (letters_.empty())
        throw InputError("alphabet must be nonempty");
    const std::size_t m = letters_.front().dimension();
    if (m == 0)
        throw InputError("letters must have dimension at least 1");
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i].dimension() != m)
            throw InputError("letter " + to_string(letters_[i]) + " has dimension "
                             + std::to_string(letters_[i].dimension()) + ", expected "
                             + std::to_string(m));
        if (!index_.emplace(letters_[i], i).second)
            throw InputError("alphabet letter " + to_string(letters_[i]) + " is repeated");
    }
}

Alphabet Alphabet::sorted_from(std::span<const Letter> letters)
{
    std::vector<Letter> sorted(letters.begin(), letters.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return Alphabet(std::move(sorted));
}

std::optional<std::size_t> Alphabet::index_of(const Letter& letter) const
{
    auto it = index_.find(letter);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

const Letter& FiniteWord::at(std::size_t i) const
{
    if (i < 1 || i > letters.size())
        throw RangeError("position " + std::to_string(i) + " outside word of length "
                         + std::to_string(letters.size()));
    return letters[i - 1];
}

std::string to_string(const FiniteWord& word)
{
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i)
            out += ' ';
        out += to_string(word.letters[i]);
    }
    return out;
}

} // namespace wordcx

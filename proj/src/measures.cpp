#include "wordcx/measures.hpp"

#include "wordcx/error.hpp"

namespace wordcx {

MorphismMu::MorphismMu(Alphabet domain, std::vector<Vec> images, Kind kind)
    : domain_(std::move(domain)), images_(std::move(images)), kind_(kind)
{
    if (images_.size() != domain_.size())
        throw InputError("morphism needs exactly one image per alphabet letter");
    target_dim_ = images_.front().size();
    if (target_dim_ == 0)
        throw InputError("morphism images must have dimension at least 1");
    for (const auto& v : images_)
        if (v.size() != target_dim_)
            throw InputError("morphism images must share one target dimension");
}

const Vec& MorphismMu::image(const Letter& letter) const
{
    auto i = domain_.index_of(letter);
    if (!i)
        throw InputError("morphism has no image for letter " + to_string(letter));
    return images_[*i];
}

Vec MorphismMu::apply(std::span<const Letter> word) const
{
    Vec out(target_dim_, 0);
    for (const auto& l : word) {
        const auto& v = image(l);
        for (std::size_t j = 0; j < target_dim_; ++j)
            out[j] = checked_add(out[j], v[j]);
    }
    return out;
}

MorphismMu mu_additive(const Alphabet& alphabet)
{
    std::vector<Vec> images;
    for (const auto& l : alphabet.letters())
        images.push_back(l.coords);
    return MorphismMu(alphabet, std::move(images), MorphismMu::Kind::additive);
}

MorphismMu mu_parikh(const Alphabet& alphabet)
{
    std::vector<Vec> images;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        Vec e(alphabet.size(), 0);
        e[i] = 1;
        images.push_back(std::move(e));
    }
    return MorphismMu(alphabet, std::move(images), MorphismMu::Kind::parikh);
}

const char* to_string(MorphismMu::Kind kind)
{
    switch (kind) {
    case MorphismMu::Kind::additive: return "additive";
    case MorphismMu::Kind::parikh: return "parikh";
    case MorphismMu::Kind::custom: return "custom";
    }
    return "custom";
}

CumulativeTable CumulativeTable::from_increments(std::size_t dimension, std::span<const Int> increments)
{
    if (dimension == 0 || increments.size() % dimension != 0)
        throw InputError("increment rows do not match the table dimension");
    const std::size_t n = increments.size() / dimension;
    std::vector<Int> values((n + 1) * dimension, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < dimension; ++j)
            values[(i + 1) * dimension + j] =
                checked_add(values[i * dimension + j], increments[i * dimension + j]);
    return CumulativeTable(dimension, n, std::move(values));
}

Vec CumulativeTable::difference(std::size_t lo, std::size_t hi) const
{
    if (lo > hi || hi > length_)
        throw RangeError("prefix range [" + std::to_string(lo) + ", " + std::to_string(hi)
                         + "] outside table of length " + std::to_string(length_));
    Vec out(dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        out[j] = checked_sub(at(hi, j), at(lo, j));
    return out;
}

CumulativeTable accumulate(const MorphismMu& mu, const FiniteWord& word)
{
    const std::size_t t = mu.target_dimension();
    std::vector<Int> increments;
    increments.reserve(word.size() * t);
    for (const auto& l : word.letters) {
        const auto& v = mu.image(l);
        increments.insert(increments.end(), v.begin(), v.end());
    }
    return CumulativeTable::from_increments(t, increments);
}

Vec factor_value(const CumulativeTable& table, Factor factor)
{
    if (factor.start < 1 || factor.length < 1
        || factor.start + factor.length - 1 > table.length())
        throw RangeError("factor (start " + std::to_string(factor.start) + ", length "
                         + std::to_string(factor.length) + ") outside prefix of length "
                         + std::to_string(table.length()));
    return table.difference(factor.start - 1, factor.start + factor.length - 1);
}

} // namespace wordcx

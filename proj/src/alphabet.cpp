#include "corrseq/alphabet.hpp"

#include <functional>

namespace corrseq {

Alphabet::Alphabet(std::vector<Symbol> symbols) : syms_(std::move(symbols)) {
    if (syms_.empty()) throw PreconditionError("alphabet must be nonempty");
    if (syms_.size() > 255) throw PreconditionError("alphabet too large (max 255 symbols)");
    for (std::size_t i = 0; i < syms_.size(); ++i) {
        if (syms_[i].value.norm2() > 1)
            throw PreconditionError("alphabet symbol '" + syms_[i].name +
                                    "' lies outside the unit disc");
        if (syms_[i].name.empty()) syms_[i].name = gaussian_to_string(syms_[i].value);
        for (std::size_t j = 0; j < i; ++j)
            if (syms_[j].value == syms_[i].value)
                throw PreconditionError("alphabet symbols must be pairwise distinct");
    }
}

std::uint8_t Alphabet::index_of_value(const GaussianRational& v) const {
    for (std::size_t i = 0; i < syms_.size(); ++i)
        if (syms_[i].value == v) return static_cast<std::uint8_t>(i);
    throw PreconditionError("value " + gaussian_to_string(v) + " not in alphabet");
}

bool Alphabet::contains_value(const GaussianRational& v) const {
    for (const Symbol& s : syms_)
        if (s.value == v) return true;
    return false;
}

std::uint8_t Alphabet::index_of_name(const std::string& n) const {
    for (std::size_t i = 0; i < syms_.size(); ++i)
        if (syms_[i].name == n) return static_cast<std::uint8_t>(i);
    throw PreconditionError("token '" + n + "' not in alphabet");
}

bool Alphabet::operator==(const Alphabet& o) const {
    if (syms_.size() != o.syms_.size()) return false;
    for (std::size_t i = 0; i < syms_.size(); ++i)
        if (!(syms_[i].value == o.syms_[i].value)) return false;
    return true;
}

Alphabet Alphabet::plus_minus_one() {
    return Alphabet({{GaussianRational(1), "+1"}, {GaussianRational(-1), "-1"}});
}

Alphabet Alphabet::mobius() {
    return Alphabet(
        {{GaussianRational(1), "1"}, {GaussianRational(0), "0"}, {GaussianRational(-1), "-1"}});
}

Alphabet Alphabet::signed_product() {
    return Alphabet({{GaussianRational(1), "1"},
                     {GaussianRational(Rational(1, 2)), "1/2"},
                     {GaussianRational(Rational(-1, 2)), "-1/2"},
                     {GaussianRational(-1), "-1"}});
}

Block::Block(Alphabet alphabet, std::vector<std::uint8_t> indices)
    : alphabet_(std::move(alphabet)), idx_(std::move(indices)) {
    for (std::uint8_t i : idx_)
        if (i >= alphabet_.size())
            throw PreconditionError("block symbol index out of alphabet range");
}

Block Block::slice(std::size_t from, std::size_t to) const {
    if (from < 1 || to > idx_.size() || from > to + 1)
        throw PreconditionError("block slice out of range");
    std::vector<std::uint8_t> sub(idx_.begin() + static_cast<std::ptrdiff_t>(from - 1),
                                  idx_.begin() + static_cast<std::ptrdiff_t>(to));
    return Block(alphabet_, std::move(sub));
}

Block Block::concat(const Block& other) const {
    if (!(alphabet_ == other.alphabet_))
        throw PreconditionError("cannot concatenate blocks over different alphabets");
    std::vector<std::uint8_t> all(idx_);
    all.insert(all.end(), other.idx_.begin(), other.idx_.end());
    return Block(alphabet_, std::move(all));
}

std::vector<GaussianRational> Block::values() const {
    std::vector<GaussianRational> v;
    v.reserve(idx_.size());
    for (std::uint8_t i : idx_) v.push_back(alphabet_.value(i));
    return v;
}

Block SymbolicSequence::prefix(std::size_t n) const {
    if (n > limit_)
        throw PreconditionError("prefix length " + std::to_string(n) +
                                " exceeds the sequence materialization limit " +
                                std::to_string(limit_));
    std::vector<std::uint8_t> idx;
    idx.reserve(n);
    producer_(n, idx);
    if (idx.size() != n) throw PreconditionError("sequence producer returned a wrong length");
    return Block(alphabet_, std::move(idx));
}

} // namespace corrseq

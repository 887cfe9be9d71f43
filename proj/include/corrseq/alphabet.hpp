#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "corrseq/rational.hpp"

namespace corrseq {

struct Symbol {
    GaussianRational value;
    std::string name;
};

// Finite set of complex symbol values inside the closed unit disc.
// Invariants: nonempty, pairwise distinct values, |z| <= 1 (checked exactly),
// at most 255 symbols (blocks store 8-bit indices).
class Alphabet {
public:
    explicit Alphabet(std::vector<Symbol> symbols);

    std::size_t size() const { return syms_.size(); }
    const GaussianRational& value(std::uint8_t i) const { return syms_.at(i).value; }
    const std::string& name(std::uint8_t i) const { return syms_.at(i).name; }
    const std::vector<Symbol>& symbols() const { return syms_; }

    // Index of a value/name; throws PreconditionError when absent.
    std::uint8_t index_of_value(const GaussianRational& v) const;
    std::uint8_t index_of_name(const std::string& n) const;
    bool contains_value(const GaussianRational& v) const;

    bool operator==(const Alphabet& o) const;

    // {+1, -1} (in this order: index 0 is +1).
    static Alphabet plus_minus_one();
    // {1, 0, -1} for the Moebius function.
    static Alphabet mobius();
    // {1, 1/2, -1/2, -1}, the image of the signed product code.
    static Alphabet signed_product();

private:
    std::vector<Symbol> syms_;
};

// Finite word over an Alphabet, stored as symbol indices, logical positions
// 1..size().
class Block {
public:
    Block(Alphabet alphabet, std::vector<std::uint8_t> indices);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return idx_.size(); }
    bool empty() const { return idx_.empty(); }
    std::uint8_t index_at(std::size_t pos1) const { return idx_.at(pos1 - 1); } // 1-based
    const GaussianRational& value_at(std::size_t pos1) const {
        return alphabet_.value(idx_.at(pos1 - 1));
    }
    const std::vector<std::uint8_t>& indices() const { return idx_; }

    // Sub-block [from, to], 1-based inclusive.
    Block slice(std::size_t from, std::size_t to) const;
    // Concatenation; alphabets must match.
    Block concat(const Block& other) const;

    std::vector<GaussianRational> values() const;

private:
    Alphabet alphabet_;
    std::vector<std::uint8_t> idx_;
};

// Deterministic symbol producer with an explicit materialization limit.
// prefix(n) always reproduces the same first n symbols.
class SymbolicSequence {
public:
    using Producer = std::function<void(std::size_t, std::vector<std::uint8_t>&)>;

    SymbolicSequence(Alphabet alphabet, std::size_t limit, std::string description,
                     Producer producer)
        : alphabet_(std::move(alphabet)),
          limit_(limit),
          description_(std::move(description)),
          producer_(std::move(producer)) {}

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t limit() const { return limit_; }
    const std::string& description() const { return description_; }

    // First n symbols; throws PreconditionError when n exceeds the limit.
    Block prefix(std::size_t n) const;

private:
    Alphabet alphabet_;
    std::size_t limit_;
    std::string description_;
    Producer producer_;
};

} // namespace corrseq

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace poramsey {

using Vertex = std::size_t;

namespace bits {

using Word = std::uint64_t;
inline constexpr std::size_t word_bits = 64;
inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

constexpr std::size_t words_for(std::size_t n) noexcept { return (n + word_bits - 1) / word_bits; }

} // namespace bits

/// Read-only view of a fixed-length bit string. Rows of a BitMatrix and
/// owning Bitsets both hand these out, so every set algorithm is written once.
class BitRow {
public:
    BitRow() = default;
    BitRow(std::span<const bits::Word> words, std::size_t size) noexcept : words_(words), size_(size) {}

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] std::span<const bits::Word> words() const noexcept { return words_; }

    [[nodiscard]] bool test(std::size_t i) const noexcept
    {
        return (words_[i / bits::word_bits] >> (i % bits::word_bits)) & 1U;
    }

    [[nodiscard]] std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    [[nodiscard]] bool any() const noexcept
    {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }

    [[nodiscard]] bool none() const noexcept { return ! any(); }

    [[nodiscard]] std::size_t first() const noexcept { return next_from(0); }

    /// Smallest set index >= from, or bits::npos.
    [[nodiscard]] std::size_t next_from(std::size_t from) const noexcept
    {
        if (from >= size_)
            return bits::npos;
        std::size_t wi = from / bits::word_bits;
        bits::Word w = words_[wi] & (~bits::Word{0} << (from % bits::word_bits));
        while (true) {
            if (w)
                return wi * bits::word_bits + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size())
                return bits::npos;
            w = words_[wi];
        }
    }

    [[nodiscard]] bool is_subset_of(BitRow other) const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    [[nodiscard]] bool intersects(BitRow other) const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    template <typename F>
    void for_each(F && f) const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            bits::Word w = words_[wi];
            while (w) {
                f(wi * bits::word_bits + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    [[nodiscard]] std::vector<Vertex> to_vector() const
    {
        std::vector<Vertex> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    friend bool operator==(BitRow a, BitRow b) noexcept
    {
        if (a.size_ != b.size_)
            return false;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            if (a.words_[i] != b.words_[i])
                return false;
        return true;
    }

private:
    std::span<const bits::Word> words_;
    std::size_t size_ = 0;
};

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_(bits::words_for(size), 0) {}
    explicit Bitset(BitRow row) : size_(row.size()), words_(row.words().begin(), row.words().end()) {}

    static Bitset full(std::size_t size)
    {
        Bitset b(size);
        for (auto & w : b.words_)
            w = ~bits::Word{0};
        b.trim();
        return b;
    }

    static Bitset of(std::size_t size, std::span<const Vertex> members)
    {
        Bitset b(size);
        for (auto v : members)
            b.set(v);
        return b;
    }

    [[nodiscard]] BitRow view() const noexcept { return {words_, size_}; }
    operator BitRow() const noexcept { return view(); } // NOLINT(google-explicit-constructor)

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] bool test(std::size_t i) const noexcept { return view().test(i); }
    [[nodiscard]] std::size_t count() const noexcept { return view().count(); }
    [[nodiscard]] bool any() const noexcept { return view().any(); }
    [[nodiscard]] bool none() const noexcept { return view().none(); }
    [[nodiscard]] std::size_t first() const noexcept { return view().first(); }
    [[nodiscard]] std::size_t next_from(std::size_t i) const noexcept { return view().next_from(i); }
    [[nodiscard]] std::vector<Vertex> to_vector() const { return view().to_vector(); }

    template <typename F>
    void for_each(F && f) const
    {
        view().for_each(std::forward<F>(f));
    }

    void set(std::size_t i) noexcept { words_[i / bits::word_bits] |= bits::Word{1} << (i % bits::word_bits); }
    void reset(std::size_t i) noexcept { words_[i / bits::word_bits] &= ~(bits::Word{1} << (i % bits::word_bits)); }
    void clear() noexcept
    {
        for (auto & w : words_)
            w = 0;
    }

    Bitset & operator&=(BitRow o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words()[i];
        return *this;
    }

    Bitset & operator|=(BitRow o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words()[i];
        return *this;
    }

    /// Set difference.
    Bitset & operator-=(BitRow o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words()[i];
        return *this;
    }

    void flip() noexcept
    {
        for (auto & w : words_)
            w = ~w;
        trim();
    }

    friend bool operator==(const Bitset & a, const Bitset & b) noexcept { return a.view() == b.view(); }

private:
    void trim() noexcept
    {
        if (size_ % bits::word_bits && ! words_.empty())
            words_.back() &= (bits::Word{1} << (size_ % bits::word_bits)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<bits::Word> words_;
};

/// Dense square bit matrix stored row-major in one allocation.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : n_(n), stride_(bits::words_for(n)), data_(n * stride_, 0) {}

    [[nodiscard]] std::size_t size() const noexcept { return n_; }

    [[nodiscard]] BitRow row(std::size_t i) const noexcept
    {
        return {std::span<const bits::Word>(data_.data() + i * stride_, stride_), n_};
    }

    [[nodiscard]] bool test(std::size_t i, std::size_t j) const noexcept
    {
        return (data_[i * stride_ + j / bits::word_bits] >> (j % bits::word_bits)) & 1U;
    }

    void set(std::size_t i, std::size_t j) noexcept
    {
        data_[i * stride_ + j / bits::word_bits] |= bits::Word{1} << (j % bits::word_bits);
    }

    void reset(std::size_t i, std::size_t j) noexcept
    {
        data_[i * stride_ + j / bits::word_bits] &= ~(bits::Word{1} << (j % bits::word_bits));
    }

    /// Raw access for callers that build rows a word at a time.
    [[nodiscard]] std::span<bits::Word> row_words(std::size_t i) noexcept
    {
        return {data_.data() + i * stride_, stride_};
    }

    friend bool operator==(const BitMatrix &, const BitMatrix &) = default;

private:
    std::size_t n_ = 0;
    std::size_t stride_ = 0;
    std::vector<bits::Word> data_;
};

} // namespace poramsey

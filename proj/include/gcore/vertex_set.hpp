#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

#include "gcore/errors.hpp"

namespace gcore {

using Vertex = std::uint32_t;

/// Dense bitmap over vertex ids 0..n-1 with cached cardinality.
class VertexSet {
  public:
    VertexSet() = default;

    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet of(std::size_t universe, std::initializer_list<Vertex> members) {
        VertexSet s(universe);
        for (Vertex v : members) s.insert(v);
        return s;
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~0ULL;
        s.trim_tail();
        s.count_ = universe;
        return s;
    }

    std::size_t universe_size() const { return universe_; }
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(Vertex v) const {
        return (words_[v >> 6] >> (v & 63)) & 1ULL;
    }

    void insert(Vertex v) {
        check_range(v);
        std::uint64_t& w = words_[v >> 6];
        const std::uint64_t bit = 1ULL << (v & 63);
        count_ += !(w & bit);
        w |= bit;
    }

    void erase(Vertex v) {
        check_range(v);
        std::uint64_t& w = words_[v >> 6];
        const std::uint64_t bit = 1ULL << (v & 63);
        count_ -= !!(w & bit);
        w &= ~bit;
    }

    void clear() {
        for (auto& w : words_) w = 0;
        count_ = 0;
    }

    VertexSet& intersect_with(const VertexSet& other) {
        check_same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        recount();
        return *this;
    }

    VertexSet& unite_with(const VertexSet& other) {
        check_same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        recount();
        return *this;
    }

    bool is_subset_of(const VertexSet& other) const {
        check_same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet& other) const {
        return universe_ == other.universe_ && words_ == other.words_;
    }

    std::size_t intersection_size(const VertexSet& other) const {
        check_same_universe(other);
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(count_);
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                const int b = std::countr_zero(w);
                f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(b)));
                w &= w - 1;
            }
        }
    }

  private:
    void check_range(Vertex v) const {
        if (v >= universe_) throw ArgumentError("vertex id out of range");
    }

    void check_same_universe(const VertexSet& other) const {
        if (universe_ != other.universe_)
            throw ArgumentError("vertex sets over different universes");
    }

    void trim_tail() {
        if (universe_ % 64 != 0 && !words_.empty())
            words_.back() &= (1ULL << (universe_ % 64)) - 1;
    }

    void recount() {
        count_ = 0;
        for (auto w : words_) count_ += static_cast<std::size_t>(std::popcount(w));
    }

    std::size_t universe_ = 0;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace gcore

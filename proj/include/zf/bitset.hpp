#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef ZF_MAX_VERTICES
#define ZF_MAX_VERTICES 256
#endif

namespace zf {

/// Fixed-width set of vertex indices. The width is chosen at build time
/// (ZF_MAX_VERTICES); graphs larger than the width are rejected up front.
class VertexSet {
public:
    static constexpr int capacity() { return ZF_MAX_VERTICES; }

    constexpr VertexSet() = default;

    static VertexSet full(int n)
    {
        check_index_range(n);
        VertexSet s;
        for (int w = 0; w < kwords; ++w) {
            int lo = w * 64;
            if (n <= lo)
                break;
            int in_word = n - lo >= 64 ? 64 : n - lo;
            s.w_[w] = in_word == 64 ? ~0ULL : ((1ULL << in_word) - 1);
        }
        return s;
    }

    static VertexSet of(std::initializer_list<int> vs)
    {
        VertexSet s;
        for (int v : vs)
            s.set(v);
        return s;
    }

    static VertexSet of(const std::vector<int>& vs)
    {
        VertexSet s;
        for (int v : vs)
            s.set(v);
        return s;
    }

    bool test(int v) const { return (w_[word(v)] >> bit(v)) & 1ULL; }
    void set(int v)
    {
        check_index(v);
        w_[word(v)] |= 1ULL << bit(v);
    }
    void reset(int v)
    {
        check_index(v);
        w_[word(v)] &= ~(1ULL << bit(v));
    }

    int count() const
    {
        int c = 0;
        for (auto x : w_)
            c += std::popcount(x);
        return c;
    }

    bool empty() const
    {
        for (auto x : w_)
            if (x)
                return false;
        return true;
    }

    /// Lowest set index, or -1 when empty.
    int first() const
    {
        for (int w = 0; w < kwords; ++w)
            if (w_[w])
                return w * 64 + std::countr_zero(w_[w]);
        return -1;
    }

    /// Lowest set index greater than v, or -1.
    int next(int v) const
    {
        ++v;
        if (v >= ZF_MAX_VERTICES)
            return -1;
        int w = word(v);
        std::uint64_t x = w_[w] >> bit(v);
        if (x)
            return v + std::countr_zero(x);
        for (++w; w < kwords; ++w)
            if (w_[w])
                return w * 64 + std::countr_zero(w_[w]);
        return -1;
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v != -1; v = next(v))
            out.push_back(v);
        return out;
    }

    VertexSet& operator|=(const VertexSet& o)
    {
        for (int w = 0; w < kwords; ++w)
            w_[w] |= o.w_[w];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o)
    {
        for (int w = 0; w < kwords; ++w)
            w_[w] &= o.w_[w];
        return *this;
    }
    VertexSet& operator^=(const VertexSet& o)
    {
        for (int w = 0; w < kwords; ++w)
            w_[w] ^= o.w_[w];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o)
    {
        for (int w = 0; w < kwords; ++w)
            w_[w] &= ~o.w_[w];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool is_subset_of(const VertexSet& o) const
    {
        for (int w = 0; w < kwords; ++w)
            if (w_[w] & ~o.w_[w])
                return false;
        return true;
    }

    bool intersects(const VertexSet& o) const
    {
        for (int w = 0; w < kwords; ++w)
            if (w_[w] & o.w_[w])
                return true;
        return false;
    }

    bool operator==(const VertexSet& o) const = default;

    /// Total order; used only for canonical container keys.
    bool operator<(const VertexSet& o) const
    {
        for (int w = kwords - 1; w >= 0; --w)
            if (w_[w] != o.w_[w])
                return w_[w] < o.w_[w];
        return false;
    }

    std::string to_string() const
    {
        std::string s = "{";
        bool sep = false;
        for (int v = first(); v != -1; v = next(v)) {
            if (sep)
                s += ',';
            s += std::to_string(v);
            sep = true;
        }
        s += '}';
        return s;
    }

private:
    static constexpr int kwords = (ZF_MAX_VERTICES + 63) / 64;
    static constexpr int word(int v) { return v >> 6; }
    static constexpr int bit(int v) { return v & 63; }
    static void check_index(int v)
    {
        if (v < 0 || v >= ZF_MAX_VERTICES)
            throw std::out_of_range("vertex index " + std::to_string(v)
                + " outside bit-set width " + std::to_string(ZF_MAX_VERTICES));
    }
    static void check_index_range(int n)
    {
        if (n < 0 || n > ZF_MAX_VERTICES)
            throw std::out_of_range("vertex count " + std::to_string(n)
                + " outside bit-set width " + std::to_string(ZF_MAX_VERTICES));
    }

    std::array<std::uint64_t, kwords> w_ {};
};

} // namespace zf

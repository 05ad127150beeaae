#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace ftld {

/// Fixed-size dynamic bitset used for vertex sets and neighborhood rows.
/// All clause evaluation in the verifier reduces to word-wise and/xor plus
/// popcount over these.
class Bitset {
public:
    Bitset() : bits_(0) {}
    explicit Bitset(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    static Bitset from_vertices(int bits, const std::vector<int>& vs) {
        Bitset b(bits);
        for (int v : vs) b.set(v);
        return b;
    }

    int size() const { return bits_; }
    int words() const { return static_cast<int>(words_.size()); }
    std::span<const std::uint64_t> data() const { return words_; }

    void set(int i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    std::vector<int> to_vertices() const {
        std::vector<int> out;
        for (int wi = 0; wi < words(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(wi * 64 + b);
                w &= w - 1;
            }
        }
        return out;
    }

    bool operator==(const Bitset& o) const = default;

    /// popcount(a & b) without materializing the intersection.
    static int and_count(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
        int c = 0;
        for (size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
        return c;
    }

private:
    int bits_;
    std::vector<std::uint64_t> words_;
};

} // namespace ftld

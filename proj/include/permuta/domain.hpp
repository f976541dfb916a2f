#ifndef PERMUTA_DOMAIN_HPP
#define PERMUTA_DOMAIN_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace permuta {

// Finite set of small non-negative integers, bitset-backed.
// Values live in [0, kMaxValue]; builders reject anything larger.
class Domain {
public:
    static constexpr int kMaxValue = 127;

    Domain() = default;

    static Domain range(int lo, int hi) {
        Domain d;
        for (int v = lo; v <= hi; ++v) d.insert(v);
        return d;
    }

    static Domain of(std::initializer_list<int> vs) {
        Domain d;
        for (int v : vs) d.insert(v);
        return d;
    }

    static Domain from_mask64(std::uint64_t lo) {
        Domain d;
        d.bits_[0] = lo;
        return d;
    }

    bool contains(int v) const {
        if (v < 0 || v > kMaxValue) return false;
        return (bits_[static_cast<unsigned>(v) >> 6] >> (v & 63)) & 1u;
    }

    // Out-of-range insertions are dropped: a value pushed past the universe
    // by arithmetic propagation simply has no support.
    void insert(int v) {
        if (v < 0 || v > kMaxValue) return;
        bits_[static_cast<unsigned>(v) >> 6] |= (1ull << (v & 63));
    }

    void erase(int v) {
        if (v < 0 || v > kMaxValue) return;
        bits_[static_cast<unsigned>(v) >> 6] &= ~(1ull << (v & 63));
    }

    int size() const {
        return __builtin_popcountll(bits_[0]) + __builtin_popcountll(bits_[1]);
    }

    bool empty() const { return bits_[0] == 0 && bits_[1] == 0; }
    bool is_singleton() const { return size() == 1; }

    int min() const {
        if (bits_[0]) return __builtin_ctzll(bits_[0]);
        if (bits_[1]) return 64 + __builtin_ctzll(bits_[1]);
        return -1;
    }

    int max() const {
        if (bits_[1]) return 127 - __builtin_clzll(bits_[1]);
        if (bits_[0]) return 63 - __builtin_clzll(bits_[0]);
        return -1;
    }

    // Value of a singleton domain; undefined when size() != 1.
    int single() const { return min(); }

    bool intersect(const Domain& o) {
        std::uint64_t a = bits_[0] & o.bits_[0];
        std::uint64_t b = bits_[1] & o.bits_[1];
        bool changed = (a != bits_[0]) || (b != bits_[1]);
        bits_[0] = a;
        bits_[1] = b;
        return changed;
    }

    bool subtract(const Domain& o) {
        std::uint64_t a = bits_[0] & ~o.bits_[0];
        std::uint64_t b = bits_[1] & ~o.bits_[1];
        bool changed = (a != bits_[0]) || (b != bits_[1]);
        bits_[0] = a;
        bits_[1] = b;
        return changed;
    }

    void unite(const Domain& o) {
        bits_[0] |= o.bits_[0];
        bits_[1] |= o.bits_[1];
    }

    bool is_subset_of(const Domain& o) const {
        return (bits_[0] & ~o.bits_[0]) == 0 && (bits_[1] & ~o.bits_[1]) == 0;
    }

    bool intersects(const Domain& o) const {
        return (bits_[0] & o.bits_[0]) != 0 || (bits_[1] & o.bits_[1]) != 0;
    }

    // Domain shifted by k (negative shifts allowed); values falling outside
    // [0, kMaxValue] are dropped.
    Domain shifted(int k) const {
        Domain out;
        for (int v = min(); v >= 0; v = next(v))
            if (v + k >= 0 && v + k <= kMaxValue) out.insert(v + k);
        return out;
    }

    // Next value strictly greater than v, or -1.
    int next(int v) const {
        int w = v + 1;
        if (w < 64) {
            std::uint64_t rem = bits_[0] & (~0ull << w);
            if (rem) return __builtin_ctzll(rem);
            w = 64;
        }
        if (w <= kMaxValue) {
            std::uint64_t rem = bits_[1] & (w == 64 ? ~0ull : (~0ull << (w - 64)));
            if (rem) return 64 + __builtin_ctzll(rem);
        }
        return -1;
    }

    std::vector<int> values() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v = min(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    std::uint64_t mask64() const { return bits_[0]; }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v = min(); v >= 0; v = next(v)) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        s += "}";
        return s;
    }

    friend bool operator==(const Domain& a, const Domain& b) {
        return a.bits_ == b.bits_;
    }
    friend bool operator!=(const Domain& a, const Domain& b) { return !(a == b); }

private:
    std::array<std::uint64_t, 2> bits_{{0, 0}};
};

}  // namespace permuta

#endif

#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace dynkin {

/// Finitely supported integer sequence x_1, x_2, ... (stored 0-based,
/// trailing zeros trimmed).
struct HVector {
    std::vector<long long> v;

    HVector() = default;
    explicit HVector(std::vector<long long> entries) : v(std::move(entries)) { trim(); }

    void trim() {
        while (!v.empty() && v.back() == 0) v.pop_back();
    }

    /// max{i : x_i != 0}, 0 for the zero vector.
    int ell() const { return static_cast<int>(v.size()); }

    long long get(int i) const {  // 1-based
        return (i >= 1 && i <= ell()) ? v[i - 1] : 0;
    }
    void set(int i, long long value) {  // 1-based
        if (i > ell()) v.resize(i, 0);
        v[i - 1] = value;
        trim();
    }

    bool is_zero() const { return v.empty(); }
    bool nonnegative() const {
        for (long long x : v)
            if (x < 0) return false;
        return true;
    }

    friend HVector operator+(const HVector& a, const HVector& b) {
        HVector r = a;
        if (b.ell() > r.ell()) r.v.resize(b.v.size(), 0);
        for (int i = 0; i < b.ell(); ++i) r.v[i] += b.v[i];
        r.trim();
        return r;
    }
    friend HVector operator-(const HVector& a, const HVector& b) {
        HVector r = a;
        if (b.ell() > r.ell()) r.v.resize(b.v.size(), 0);
        for (int i = 0; i < b.ell(); ++i) r.v[i] -= b.v[i];
        r.trim();
        return r;
    }
    auto operator<=>(const HVector&) const = default;
};

/// epsilon_i: the sequence with a single 1 in position i (1-based).
inline HVector hv_unit(int i) {
    HVector h;
    h.set(i, 1);
    return h;
}

/// gamma = (x, y): a weight shape usable on every Z_k with k large enough.
struct TwoSidedWeight {
    HVector left, right;

    TwoSidedWeight() = default;
    TwoSidedWeight(HVector x, HVector y) : left(std::move(x)), right(std::move(y)) {}

    int ls(int d1) const { return std::max(left.ell(), d1); }
    int rs(int d2) const { return std::max(right.ell(), d2); }
    int ell(int d1, int d2) const { return ls(d1) + rs(d2); }

    bool is_zero() const { return left.is_zero() && right.is_zero(); }
    bool dominant() const { return left.nonnegative() && right.nonnegative(); }

    friend TwoSidedWeight operator+(const TwoSidedWeight& a, const TwoSidedWeight& b) {
        return {a.left + b.left, a.right + b.right};
    }
    friend TwoSidedWeight operator-(const TwoSidedWeight& a, const TwoSidedWeight& b) {
        return {a.left - b.left, a.right - b.right};
    }
    auto operator<=>(const TwoSidedWeight&) const = default;
};

}  // namespace dynkin

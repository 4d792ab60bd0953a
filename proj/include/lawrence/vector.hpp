#ifndef LAWRENCE_VECTOR_HPP
#define LAWRENCE_VECTOR_HPP

#include "lawrence/integer.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lawrence {

/// Fixed-length vector of exact integers.
class IntVector {
public:
    IntVector() = default;
    explicit IntVector(std::size_t n) : v_(n) {}
    IntVector(std::initializer_list<std::int64_t> xs) : v_(xs.begin(), xs.end()) {}
    explicit IntVector(std::vector<Integer> xs) : v_(std::move(xs)) {}

    template <class It>
    IntVector(It first, It last) : v_(first, last) {}

    [[nodiscard]] std::size_t size() const noexcept { return v_.size(); }
    [[nodiscard]] bool empty() const noexcept { return v_.empty(); }
    Integer& operator[](std::size_t i) { return v_[i]; }
    const Integer& operator[](std::size_t i) const { return v_[i]; }
    [[nodiscard]] auto begin() const { return v_.begin(); }
    [[nodiscard]] auto end() const { return v_.end(); }
    [[nodiscard]] auto begin() { return v_.begin(); }
    [[nodiscard]] auto end() { return v_.end(); }
    [[nodiscard]] std::span<const Integer> span() const { return v_; }
    [[nodiscard]] const std::vector<Integer>& values() const { return v_; }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(v_.begin(), v_.end(), [](const Integer& x) { return x.is_zero(); });
    }

    IntVector& operator+=(const IntVector& o) {
        check_size(o);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
        return *this;
    }
    IntVector& operator-=(const IntVector& o) {
        check_size(o);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
        return *this;
    }
    friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
    friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
    friend IntVector operator-(IntVector a) {
        for (auto& x : a.v_) x = -x;
        return a;
    }
    friend IntVector operator*(const Integer& k, IntVector a) {
        for (auto& x : a.v_) x *= k;
        return a;
    }

    friend bool operator==(const IntVector&, const IntVector&) = default;
    friend std::strong_ordering operator<=>(const IntVector& a, const IntVector& b) {
        return std::lexicographical_compare_three_way(a.v_.begin(), a.v_.end(), b.v_.begin(),
                                                      b.v_.end());
    }

    [[nodiscard]] std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i) s += ' ';
            s += v_[i].str();
        }
        return s;
    }

    [[nodiscard]] std::size_t hash() const noexcept {
        std::size_t h = v_.size();
        for (const auto& x : v_) h ^= x.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    void check_size(const IntVector& o) const {
        if (o.size() != size()) throw std::invalid_argument("vector length mismatch");
    }
    std::vector<Integer> v_;
};

struct IntVectorHash {
    std::size_t operator()(const IntVector& v) const noexcept { return v.hash(); }
};

inline IntVector positive_part(const IntVector& v) {
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i].sign() > 0) r[i] = v[i];
    return r;
}

inline IntVector negative_part(const IntVector& v) {
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i].sign() < 0) r[i] = -v[i];
    return r;
}

inline Integer norm1(const IntVector& v) {
    Integer s;
    for (const auto& x : v) s += abs(x);
    return s;
}

inline Integer norm_inf(const IntVector& v) {
    Integer s;
    for (const auto& x : v) s = std::max(s, abs(x));
    return s;
}

/// True when v ⊑ u: v lies in the same orthant as u and |v_i| <= |u_i|.
inline bool conformally_below(const IntVector& v, const IntVector& u) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        const int sv = v[i].sign();
        if (sv == 0) continue;
        if (sv != u[i].sign()) return false;
        if (abs(v[i]) > abs(u[i])) return false;
    }
    return true;
}

/// No coordinate where the two vectors have strictly opposite signs.
inline bool sign_compatible(const IntVector& a, const IntVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].sign() * b[i].sign() < 0) return false;
    return true;
}

/// Representative of {v, -v} whose first nonzero entry is positive.
inline IntVector sign_canonical(IntVector v) {
    for (const auto& x : v) {
        if (x.sign() > 0) return v;
        if (x.sign() < 0) return -v;
    }
    return v;
}

inline bool is_sign_canonical(const IntVector& v) {
    for (const auto& x : v) {
        if (x.sign() != 0) return x.sign() > 0;
    }
    return true;
}

/// An r x n slab over a flat vector of length r*n, slice-major.
class SlicedVector {
public:
    SlicedVector(IntVector base, std::size_t slices, std::size_t width)
        : base_(std::move(base)), r_(slices), n_(width) {
        if (r_ * n_ != base_.size()) throw std::invalid_argument("sliced vector shape mismatch");
    }

    [[nodiscard]] std::size_t slices() const noexcept { return r_; }
    [[nodiscard]] std::size_t width() const noexcept { return n_; }
    [[nodiscard]] const IntVector& flat() const noexcept { return base_; }

    /// Zero-based slice index.
    [[nodiscard]] IntVector slice(std::size_t i) const {
        if (i >= r_) throw std::out_of_range("slice index");
        auto first = base_.begin() + static_cast<std::ptrdiff_t>(i * n_);
        return IntVector(first, first + static_cast<std::ptrdiff_t>(n_));
    }

    static SlicedVector from_slices(const std::vector<IntVector>& rows) {
        if (rows.empty()) throw std::invalid_argument("no slices");
        const std::size_t n = rows.front().size();
        std::vector<Integer> flat;
        flat.reserve(rows.size() * n);
        for (const auto& row : rows) {
            if (row.size() != n) throw std::invalid_argument("ragged slices");
            flat.insert(flat.end(), row.begin(), row.end());
        }
        return SlicedVector(IntVector(std::move(flat)), rows.size(), n);
    }

private:
    IntVector base_;
    std::size_t r_;
    std::size_t n_;
};

/// Number of nonzero slices.
inline std::size_t type_of(const SlicedVector& u) {
    std::size_t t = 0;
    for (std::size_t i = 0; i < u.slices(); ++i) {
        bool nonzero = false;
        for (std::size_t k = 0; k < u.width() && !nonzero; ++k)
            nonzero = !u.flat()[i * u.width() + k].is_zero();
        t += nonzero ? 1 : 0;
    }
    return t;
}

inline std::size_t type_of(const IntVector& flat, std::size_t slices, std::size_t width) {
    return type_of(SlicedVector(flat, slices, width));
}

}  // namespace lawrence

#endif

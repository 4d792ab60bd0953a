#ifndef LAWRENCE_INTEGER_HPP
#define LAWRENCE_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lawrence {

using big_int = boost::multiprecision::cpp_int;

/// Exact integer. Values that fit in 64 bits live inline; anything larger is
/// promoted to a heap-allocated arbitrary-precision representation, so
/// arithmetic never overflows.
class Integer {
public:
    Integer() noexcept = default;
    Integer(std::int64_t v) noexcept : small_(v) {}  // NOLINT(implicit)
    Integer(int v) noexcept : small_(v) {}           // NOLINT(implicit)
    explicit Integer(const big_int& v) { assign(v); }

    Integer(const Integer& o) : small_(o.small_) {
        if (o.big_) big_ = std::make_unique<big_int>(*o.big_);
    }
    Integer(Integer&&) noexcept = default;
    Integer& operator=(const Integer& o) {
        if (this != &o) {
            small_ = o.small_;
            big_ = o.big_ ? std::make_unique<big_int>(*o.big_) : nullptr;
        }
        return *this;
    }
    Integer& operator=(Integer&&) noexcept = default;
    ~Integer() = default;

    static Integer parse(std::string_view text) {
        if (text.empty()) throw std::invalid_argument("empty integer literal");
        std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
        if (i == text.size()) throw std::invalid_argument("bad integer literal");
        for (std::size_t k = i; k < text.size(); ++k)
            if (text[k] < '0' || text[k] > '9')
                throw std::invalid_argument("bad integer literal: " + std::string(text));
        return Integer(big_int(std::string(text[0] == '+' ? text.substr(1) : text)));
    }

    [[nodiscard]] bool is_small() const noexcept { return !big_; }
    [[nodiscard]] std::int64_t small_value() const noexcept { return small_; }
    [[nodiscard]] big_int to_big() const { return big_ ? *big_ : big_int(small_); }

    [[nodiscard]] int sign() const noexcept {
        if (!big_) return (small_ > 0) - (small_ < 0);
        return big_->sign();
    }
    [[nodiscard]] bool is_zero() const noexcept { return !big_ && small_ == 0; }

    /// Narrowing conversion; throws when the value does not fit.
    [[nodiscard]] std::int64_t to_int64() const {
        if (big_) throw std::overflow_error("integer does not fit in 64 bits");
        return small_;
    }

    [[nodiscard]] std::string str() const { return big_ ? big_->str() : std::to_string(small_); }

    Integer& operator+=(const Integer& o) {
        if (!big_ && !o.big_) {
            std::int64_t r;
            if (!__builtin_add_overflow(small_, o.small_, &r)) {
                small_ = r;
                return *this;
            }
        }
        assign(to_big() + o.to_big());
        return *this;
    }
    Integer& operator-=(const Integer& o) {
        if (!big_ && !o.big_) {
            std::int64_t r;
            if (!__builtin_sub_overflow(small_, o.small_, &r)) {
                small_ = r;
                return *this;
            }
        }
        assign(to_big() - o.to_big());
        return *this;
    }
    Integer& operator*=(const Integer& o) {
        if (!big_ && !o.big_) {
            std::int64_t r;
            if (!__builtin_mul_overflow(small_, o.small_, &r)) {
                small_ = r;
                return *this;
            }
        }
        assign(to_big() * o.to_big());
        return *this;
    }
    /// Truncating division (C++ semantics).
    Integer& operator/=(const Integer& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        if (!big_ && !o.big_ && !(small_ == INT64_MIN && o.small_ == -1)) {
            small_ /= o.small_;
            return *this;
        }
        assign(to_big() / o.to_big());
        return *this;
    }
    Integer& operator%=(const Integer& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        if (!big_ && !o.big_) {
            small_ = (o.small_ == -1) ? 0 : small_ % o.small_;
            return *this;
        }
        assign(to_big() % o.to_big());
        return *this;
    }

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
    friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
    friend Integer operator%(Integer a, const Integer& b) { return a %= b; }
    friend Integer operator-(const Integer& a) { return Integer(0) - a; }

    friend bool operator==(const Integer& a, const Integer& b) {
        if (!a.big_ && !b.big_) return a.small_ == b.small_;
        return a.to_big() == b.to_big();
    }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
        const auto c = a.to_big().compare(b.to_big());
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.str(); }

    [[nodiscard]] std::size_t hash() const noexcept {
        if (!big_) return std::hash<std::int64_t>{}(small_);
        return std::hash<std::string>{}(big_->str());
    }

private:
    void assign(const big_int& v) {
        if (v >= INT64_MIN && v <= INT64_MAX) {
            small_ = static_cast<std::int64_t>(v);
            big_.reset();
        } else {
            small_ = 0;
            big_ = std::make_unique<big_int>(v);
        }
    }

    std::int64_t small_ = 0;
    std::unique_ptr<big_int> big_;  // set only when the value needs more than 64 bits
};

inline Integer abs(const Integer& v) { return v.sign() < 0 ? -v : v; }

/// Floor division for a positive divisor.
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b).sign() != 0 && (a.sign() < 0) != (b.sign() < 0)) q -= 1;
    return q;
}

inline Integer gcd(Integer a, Integer b) {
    a = abs(a);
    b = abs(b);
    while (!b.is_zero()) {
        Integer t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

}  // namespace lawrence

template <>
struct std::hash<lawrence::Integer> {
    std::size_t operator()(const lawrence::Integer& v) const noexcept { return v.hash(); }
};

#endif

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace multiprong {

// Exact rational arithmetic for Copeland tie values and scores.
// Denominator is kept positive; value is always normalized.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace multiprong

#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace knotups {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit on purpose, integers are rationals
    Rational(BigInt num, BigInt den);

    // Accepts "a/b" or "a"; throws std::invalid_argument on malformed input.
    static Rational parse(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // Converts to int64 if the value is an integer that fits; throws otherwise.
    std::int64_t to_int64() const;
    double to_double() const;
    std::string str() const;

private:
    void normalize();

    BigInt num_{0};
    BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// A Rational extended by the two infinities.
class ExtRational {
public:
    enum class Kind { NegInf, Finite, PosInf };

    ExtRational() = default;
    ExtRational(Rational value) : value_(std::move(value)) {}  // NOLINT
    ExtRational(std::int64_t value) : value_(value) {}         // NOLINT

    static ExtRational pos_inf() { return ExtRational(Kind::PosInf); }
    static ExtRational neg_inf() { return ExtRational(Kind::NegInf); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }

    // Throws std::logic_error when infinite.
    const Rational& value() const;

    ExtRational operator-() const;
    // (+inf) + (-inf) throws std::domain_error.
    friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
    friend ExtRational operator-(const ExtRational& a, const ExtRational& b) { return a + (-b); }
    // Multiplication by a finite scalar; sign of the scalar flips infinities, zero is an error on infinities.
    friend ExtRational operator*(const Rational& k, const ExtRational& x);

    friend bool operator==(const ExtRational& a, const ExtRational& b);
    friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

    std::string str() const;

private:
    explicit ExtRational(Kind kind) : kind_(kind) {}

    Kind kind_ = Kind::Finite;
    Rational value_;
};

std::ostream& operator<<(std::ostream& os, const ExtRational& r);

}  // namespace knotups

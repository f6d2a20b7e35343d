#include "knotups/rational.hpp"

#include <limits>

namespace knotups {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) {
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    BigInt value = 0;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9') {
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
        }
        value = value * 10 + (c - '0');
    }
    return negative ? BigInt(-value) : value;
}

}  // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    normalize();
}

void Rational::normalize() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text), BigInt(1));
    }
    return Rational(parse_integer(text.substr(0, slash), text),
                    parse_integer(text.substr(slash + 1), text));
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) {
        throw std::domain_error("division by zero");
    }
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::int64_t Rational::to_int64() const {
    if (den_ != 1 || num_ > std::numeric_limits<std::int64_t>::max() ||
        num_ < std::numeric_limits<std::int64_t>::min()) {
        throw std::range_error("rational " + str() + " is not a 64-bit integer");
    }
    return static_cast<std::int64_t>(num_);
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

const Rational& ExtRational::value() const {
    if (kind_ != Kind::Finite) {
        throw std::logic_error("value() on infinite ExtRational");
    }
    return value_;
}

ExtRational ExtRational::operator-() const {
    switch (kind_) {
        case Kind::NegInf: return pos_inf();
        case Kind::PosInf: return neg_inf();
        case Kind::Finite: break;
    }
    return ExtRational(-value_);
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
    using K = ExtRational::Kind;
    if ((a.kind_ == K::PosInf && b.kind_ == K::NegInf) ||
        (a.kind_ == K::NegInf && b.kind_ == K::PosInf)) {
        throw std::domain_error("(+inf) + (-inf) is undefined");
    }
    if (!a.is_finite()) return a;
    if (!b.is_finite()) return b;
    return ExtRational(a.value_ + b.value_);
}

ExtRational operator*(const Rational& k, const ExtRational& x) {
    if (x.is_finite()) return ExtRational(k * x.value_);
    if (k.sign() == 0) {
        throw std::domain_error("0 * infinity is undefined");
    }
    return k.sign() > 0 ? x : -x;
}

bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.is_finite() || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    auto rank = [](ExtRational::Kind k) { return static_cast<int>(k); };
    if (a.kind_ != b.kind_) return rank(a.kind_) <=> rank(b.kind_);
    if (!a.is_finite()) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
}

std::string ExtRational::str() const {
    switch (kind_) {
        case Kind::NegInf: return "-inf";
        case Kind::PosInf: return "inf";
        case Kind::Finite: break;
    }
    return value_.str();
}

std::ostream& operator<<(std::ostream& os, const ExtRational& r) { return os << r.str(); }

}  // namespace knotups

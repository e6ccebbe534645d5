#include "tracforge/field.hpp"

namespace tracforge {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(
        static_cast<__int128>(a) * static_cast<__int128>(b) % m);
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m) {
    std::int64_t r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

} // namespace

// Deterministic Miller-Rabin; bases {2,3,5,7} decide primality below 3.2e9.
bool is_prime_int64(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p : {2, 3, 5, 7}) {
        if (n % p == 0) return n == p;
    }
    std::int64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::int64_t a : {2, 3, 5, 7}) {
        std::int64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::gf(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t{1} << 31))
        throw std::invalid_argument("GF(p): p must satisfy 2 <= p < 2^31");
    if (!is_prime_int64(p))
        throw std::invalid_argument("GF(p): " + std::to_string(p) + " is not prime");
    return Field(Kind::prime, p);
}

std::string Field::name() const {
    if (kind_ == Kind::rationals) return "QQ";
    return "GF(" + std::to_string(p_) + ")";
}

std::int64_t Field::canon(std::int64_t v) const {
    v %= p_;
    if (v < 0) v += p_;
    return v;
}

Scalar Field::zero() const {
    if (kind_ == Kind::prime) return std::int64_t{0};
    return Rational(0);
}

Scalar Field::one() const {
    if (kind_ == Kind::prime) return std::int64_t{1};
    return Rational(1);
}

Scalar Field::from_int(std::int64_t n) const {
    if (kind_ == Kind::prime) return canon(n);
    return Rational(n);
}

Scalar Field::from_rational(const Rational& q) const {
    if (kind_ == Kind::rationals) return q;
    const BigInt p(p_);
    BigInt num = numerator(q) % p;
    BigInt den = denominator(q) % p;
    if (den == 0)
        throw std::domain_error("rational with denominator divisible by " + std::to_string(p_));
    std::int64_t n = canon(static_cast<std::int64_t>(num));
    std::int64_t d = canon(static_cast<std::int64_t>(den));
    return mulmod(n, std::get<std::int64_t>(inv(Scalar(d))), p_);
}

bool Field::is_zero(const Scalar& a) const {
    if (kind_ == Kind::prime) return std::get<std::int64_t>(a) == 0;
    return std::get<Rational>(a) == 0;
}

bool Field::is_one(const Scalar& a) const {
    if (kind_ == Kind::prime) return std::get<std::int64_t>(a) == 1;
    return std::get<Rational>(a) == 1;
}

bool Field::eq(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::prime)
        return std::get<std::int64_t>(a) == std::get<std::int64_t>(b);
    return std::get<Rational>(a) == std::get<Rational>(b);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::prime)
        return canon(std::get<std::int64_t>(a) + std::get<std::int64_t>(b));
    return Rational(std::get<Rational>(a) + std::get<Rational>(b));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::prime)
        return canon(std::get<std::int64_t>(a) - std::get<std::int64_t>(b));
    return Rational(std::get<Rational>(a) - std::get<Rational>(b));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::prime)
        return mulmod(std::get<std::int64_t>(a), std::get<std::int64_t>(b), p_);
    return Rational(std::get<Rational>(a) * std::get<Rational>(b));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
    return mul(a, inv(b));
}

Scalar Field::neg(const Scalar& a) const {
    if (kind_ == Kind::prime) return canon(-std::get<std::int64_t>(a));
    return Rational(-std::get<Rational>(a));
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw std::domain_error("field inverse of zero");
    if (kind_ == Kind::prime)
        return powmod(std::get<std::int64_t>(a), p_ - 2, p_);
    return Rational(1 / std::get<Rational>(a));
}

std::string Field::to_string(const Scalar& a) const {
    if (kind_ == Kind::prime) {
        std::int64_t v = std::get<std::int64_t>(a);
        if (v > p_ / 2) v -= p_;
        return std::to_string(v);
    }
    const Rational& q = std::get<Rational>(a);
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

} // namespace tracforge

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace tracforge {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// One coefficient: a canonical residue in [0, p) for GF(p), or an exact
/// rational kept in lowest terms (cpp_rational normalizes eagerly).
using Scalar = std::variant<std::int64_t, Rational>;

/// Coefficient field descriptor: QQ or GF(p) with p prime, p < 2^31.
class Field {
public:
    enum class Kind { rationals, prime };

    static Field rationals() { return Field(Kind::rationals, 0); }
    static Field gf(std::int64_t p);

    Kind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == Kind::prime; }
    std::int64_t characteristic() const { return p_; }
    std::string name() const;

    bool operator==(const Field&) const = default;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t n) const;
    Scalar from_rational(const Rational& q) const;

    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    bool eq(const Scalar& a, const Scalar& b) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar div(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;

    /// GF(p) residues print balanced in (-p/2, p/2]; rationals print as n or n/d.
    std::string to_string(const Scalar& a) const;

private:
    Field(Kind k, std::int64_t p) : kind_(k), p_(p) {}

    std::int64_t canon(std::int64_t v) const;

    Kind kind_;
    std::int64_t p_;
};

bool is_prime_int64(std::int64_t n);

} // namespace tracforge

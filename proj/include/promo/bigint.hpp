#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace promo {

/// Arbitrary-precision signed integer.
///
/// Counts produced by the closed-form evaluators (factorials past 20!,
/// chain counts of the form 2^k * k!) overflow 64-bit integers, so every
/// public counting interface traffics in BigInt. Magnitude is stored as
/// base-2^32 limbs, little-endian, with no leading zero limbs.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::signed_integral auto v) { init_signed(static_cast<long long>(v)); }
    BigInt(std::unsigned_integral auto v) { init_unsigned(static_cast<unsigned long long>(v)); }

    static BigInt from_string(std::string_view decimal);
    static BigInt factorial(unsigned n);
    static BigInt pow(const BigInt& base, unsigned exp);

    /// Decimal representation, e.g. "-2432902008176640000".
    std::string str() const;

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }

    bool fits_u64() const;
    std::uint64_t to_u64() const;

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    /// Truncated division: a = q*b + r with |r| < |b| and sign(r) = sign(a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    int compare(const BigInt& o) const;

    friend bool operator==(const BigInt& a, const BigInt& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return a.compare(b) >= 0; }

private:
    int sign_ = 0;                    // -1, 0, +1
    std::vector<std::uint32_t> mag_;  // empty iff sign_ == 0

    void init_signed(long long v);
    void init_unsigned(unsigned long long v);
    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
    static std::uint32_t divmod_small(std::vector<std::uint32_t>& a, std::uint32_t d);
    void mul_small(std::uint32_t f);

    friend class Rational;
};

BigInt gcd(BigInt a, BigInt b);

/// Exact rational with reduced BigInt numerator/denominator, denominator > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt numerator, BigInt denominator);
    Rational(long long v) : num_(v), den_(1) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const;
    /// Requires is_integer().
    BigInt to_integer() const;

    Rational& operator+=(const Rational& o);
    Rational& operator*=(const Rational& o);
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator*(const BigInt& a, Rational b) { return b *= Rational(a, 1); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const;

private:
    BigInt num_, den_;
    void normalize();
};

}  // namespace promo

#include "promo/bigint.hpp"

#include <algorithm>
#include <cctype>

namespace promo {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

void BigInt::init_signed(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long u = v < 0 ? 0ull - static_cast<unsigned long long>(v)
                                 : static_cast<unsigned long long>(v);
    mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
    if (u >> 32) mag_.push_back(static_cast<std::uint32_t>(u >> 32));
}

void BigInt::init_unsigned(unsigned long long u) {
    if (u == 0) return;
    sign_ = 1;
    mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
    if (u >> 32) mag_.push_back(static_cast<std::uint32_t>(u >> 32));
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        out.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    if (carry) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow;
        if (i < b.size()) d -= b[i];
        if (d < 0) {
            d += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(d));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + out[i + j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = out[k] + carry;
            out[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Binary long division on magnitudes; quadratic but exact, and the operands
// this library feeds it stay small (path products, one factorial).
void BigInt::divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    q.assign(a.size(), 0);
    r.clear();
    if (cmp_mag(a, b) < 0) {
        r = a;
        q.clear();
        return;
    }
    if (b.size() == 1) {
        std::vector<std::uint32_t> tmp = a;
        std::uint32_t rem = divmod_small(tmp, b[0]);
        q = std::move(tmp);
        if (rem) r.push_back(rem);
        return;
    }
    for (std::size_t bit = a.size() * 32; bit-- > 0;) {
        // r = (r << 1) | a.bit(bit)
        std::uint32_t carry = (a[bit / 32] >> (bit % 32)) & 1u;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint32_t next = r[i] >> 31;
            r[i] = (r[i] << 1) | carry;
            carry = next;
        }
        if (carry) r.push_back(carry);
        if (cmp_mag(r, b) >= 0) {
            r = sub_mag(r, b);
            q[bit / 32] |= 1u << (bit % 32);
        }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
}

std::uint32_t BigInt::divmod_small(std::vector<std::uint32_t>& a, std::uint32_t d) {
    std::uint64_t rem = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | a[i];
        a[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return static_cast<std::uint32_t>(rem);
}

void BigInt::mul_small(std::uint32_t f) {
    if (f == 0 || sign_ == 0) {
        sign_ = 0;
        mag_.clear();
        return;
    }
    std::uint64_t carry = 0;
    for (auto& limb : mag_) {
        std::uint64_t cur = static_cast<std::uint64_t>(limb) * f + carry;
        limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
    }
    if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
}

int BigInt::compare(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
    int m = cmp_mag(mag_, o.mag_);
    return sign_ >= 0 ? m : -m;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) return *this = o;
    if (sign_ == o.sign_) {
        mag_ = add_mag(mag_, o.mag_);
        return *this;
    }
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0) {
        sign_ = 0;
        mag_.clear();
    } else if (c > 0) {
        mag_ = sub_mag(mag_, o.mag_);
    } else {
        mag_ = sub_mag(o.mag_, mag_);
        sign_ = o.sign_;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
    sign_ *= o.sign_;
    mag_ = mul_mag(mag_, o.mag_);
    if (mag_.empty()) sign_ = 0;
    return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<std::uint32_t> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q.mag_ = std::move(qm);
    r.mag_ = std::move(rm);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

bool BigInt::fits_u64() const {
    return sign_ >= 0 && mag_.size() <= 2;
}

std::uint64_t BigInt::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigInt: value does not fit in uint64_t");
    std::uint64_t v = 0;
    if (mag_.size() > 0) v = mag_[0];
    if (mag_.size() > 1) v |= static_cast<std::uint64_t>(mag_[1]) << 32;
    return v;
}

BigInt BigInt::from_string(std::string_view dec) {
    BigInt out;
    bool neg = false;
    std::size_t i = 0;
    if (i < dec.size() && (dec[i] == '+' || dec[i] == '-')) {
        neg = dec[i] == '-';
        ++i;
    }
    if (i == dec.size()) throw std::invalid_argument("BigInt: empty numeral");
    out.sign_ = 1;
    for (; i < dec.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(dec[i])))
            throw std::invalid_argument("BigInt: bad digit in numeral");
        out.mul_small(10);
        out += BigInt(static_cast<long long>(dec[i] - '0'));
    }
    out.trim();
    if (neg) out.sign_ = -out.sign_;
    return out;
}

std::string BigInt::str() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> tmp = mag_;
    std::string digits;
    while (!tmp.empty()) {
        std::uint32_t chunk = divmod_small(tmp, 1000000000u);
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt BigInt::factorial(unsigned n) {
    BigInt out(1ll);
    for (unsigned i = 2; i <= n; ++i) out.mul_small(i);
    return out;
}

BigInt BigInt::pow(const BigInt& base, unsigned exp) {
    BigInt out(1ll), b = base;
    while (exp) {
        if (exp & 1u) out *= b;
        exp >>= 1u;
        if (exp) b *= b;
    }
    return out;
}

BigInt gcd(BigInt a, BigInt b) {
    if (a.is_negative()) a = -a;
    if (b.is_negative()) b = -b;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.is_negative()) {
        den_ = -den_;
        num_ = -num_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1ll);
        return;
    }
    BigInt g = gcd(num_, den_);
    num_ = num_ / g;
    den_ = den_ / g;
}

bool Rational::is_integer() const { return den_ == BigInt(1ll); }

BigInt Rational::to_integer() const {
    if (!is_integer()) throw std::domain_error("Rational: not an integer: " + str());
    return num_;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) return num_.str();
    return num_.str() + "/" + den_.str();
}

}  // namespace promo

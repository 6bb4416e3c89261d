/* Copyright (c) 2026 The unitheta authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef UNITHETA_RATIONAL_HPP
#define UNITHETA_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace unitheta {

// Arbitrary-precision rational number, always kept in lowest terms with a
// positive denominator. All arithmetic is exact; there is no implicit
// conversion to floating point anywhere in the library.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    Rational(int n) : v_(n) {}
    Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long long num, long long den)
        : Rational(mpz_class(static_cast<long>(num)),
                   mpz_class(static_cast<long>(den))) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "p", "-p", "+p" or "p/q" in base 10. Anything else (spaces,
    // decimal points, empty numerator, zero denominator) is rejected.
    explicit Rational(const std::string& text) {
        if (!looks_like_rational(text))
            throw std::invalid_argument("rational: cannot parse '" + text + "'");
        std::string s = text;
        if (!s.empty() && s[0] == '+') s = s.substr(1);
        if (v_.set_str(s, 10) != 0)
            throw std::invalid_argument("rational: cannot parse '" + text + "'");
        if (v_.get_den() == 0)
            throw std::invalid_argument("rational: zero denominator in '" + text + "'");
        v_.canonicalize();
    }

    static bool looks_like_rational(const std::string& s) {
        std::size_t i = 0;
        auto digits = [&](std::size_t& k) {
            std::size_t start = k;
            while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
            return k > start;
        };
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        if (!digits(i)) return false;
        if (i == s.size()) return true;
        if (s[i] != '/') return false;
        ++i;
        if (!digits(i)) return false;
        return i == s.size();
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    Rational pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        mpq_class r(1);
        mpq_class base = v_;
        unsigned long long k = static_cast<unsigned long long>(e);
        while (k > 0) {
            if (k & 1ULL) r *= base;
            base *= base;
            k >>= 1;
        }
        return Rational(r);
    }

    std::string to_string() const { return v_.get_str(); }

    // Decimal rendering for human-facing output only; the exact string is
    // always available via to_string().
    double to_double() const { return v_.get_d(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

// 2^-bits, used as a default width for certified brackets.
inline Rational pow2(long long e) { return Rational(2).pow(e); }

}  // namespace unitheta

#endif  // UNITHETA_RATIONAL_HPP

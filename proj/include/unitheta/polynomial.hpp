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
#ifndef UNITHETA_POLYNOMIAL_HPP
#define UNITHETA_POLYNOMIAL_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "unitheta/rational.hpp"

namespace unitheta {

// Variable tag for univariate polynomials. Z is the secrecy-function
// variable on (0, 1/4]; N is a symbolic dimension parameter.
enum class Var : unsigned char { Z, N };

inline char var_symbol(Var v) { return v == Var::Z ? 'z' : 'n'; }

inline Var var_from_symbol(const std::string& s) {
    if (s == "z") return Var::Z;
    if (s == "n") return Var::N;
    throw std::invalid_argument("polynomial: unknown variable '" + s + "'");
}

// Dense univariate polynomial with exact rational coefficients, stored in
// ascending degree with a normalized (trailing-zero-free) coefficient
// vector. The zero polynomial has an empty vector and degree -1.
class Poly {
public:
    Poly() : var_(Var::Z) {}
    explicit Poly(Var v) : var_(v) {}

    static Poly constant(const Rational& c, Var v = Var::Z) {
        Poly p(v);
        if (!c.is_zero()) p.c_.push_back(c);
        return p;
    }

    static Poly monomial(const Rational& c, int deg, Var v = Var::Z) {
        if (deg < 0) throw std::invalid_argument("polynomial: negative degree");
        Poly p(v);
        if (!c.is_zero()) {
            p.c_.assign(static_cast<std::size_t>(deg) + 1, Rational());
            p.c_.back() = c;
        }
        return p;
    }

    static Poly from_coeffs(std::vector<Rational> coeffs, Var v = Var::Z) {
        Poly p(v);
        p.c_ = std::move(coeffs);
        p.normalize();
        return p;
    }

    Var var() const { return var_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const Rational& coeff(int i) const {
        static const Rational kZero;
        if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
        return c_[static_cast<std::size_t>(i)];
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    Rational leading_coeff() const { return c_.empty() ? Rational() : c_.back(); }

    void set_coeff(int i, const Rational& v) {
        if (i < 0) throw std::invalid_argument("polynomial: negative index");
        if (i >= static_cast<int>(c_.size())) {
            if (v.is_zero()) return;
            c_.resize(static_cast<std::size_t>(i) + 1, Rational());
        }
        c_[static_cast<std::size_t>(i)] = v;
        normalize();
    }

    Poly& operator+=(const Poly& o) {
        check_var(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        check_var(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }

    Poly& operator*=(const Poly& o) {
        check_var(o);
        *this = *this * o;
        return *this;
    }

    Poly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            c_.clear();
        } else {
            for (auto& c : c_) c *= s;
        }
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_var(b);
        Poly r(a.var_);
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.normalize();
        return r;
    }

    friend Poly operator*(Poly a, const Rational& s) { a *= s; return a; }
    friend Poly operator*(const Rational& s, Poly a) { a *= s; return a; }

    Poly operator-() const {
        Poly r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    Poly pow(unsigned long long e) const {
        Poly r = constant(Rational(1), var_);
        Poly base = *this;
        while (e > 0) {
            if (e & 1ULL) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    Poly derivative() const {
        Poly r(var_);
        if (c_.size() <= 1) return r;
        r.c_.resize(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r.c_[i - 1] = c_[i] * Rational(static_cast<long long>(i));
        r.normalize();
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational r;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    // Euclidean division; divisor must be nonzero and share the variable.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        check_var(d);
        if (d.is_zero()) throw std::domain_error("polynomial: division by zero");
        Poly q(var_), r(*this);
        const Rational lead_inv = d.leading_coeff().inverse();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int shift = r.degree() - d.degree();
            Rational factor = r.leading_coeff() * lead_inv;
            q += monomial(factor, shift, var_);
            r -= monomial(factor, shift, var_) * d;
        }
        return {q, r};
    }

    friend Poly operator/(const Poly& a, const Poly& b) { return a.divmod(b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return a.divmod(b).second; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.var_ == b.var_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Positive rational c such that (*this) / c has coprime integer
    // coefficients; the sign stays with the primitive part.
    Rational content() const {
        if (is_zero()) return Rational(1);
        mpz_class num_gcd = 0, den_lcm = 1;
        for (const auto& c : c_) {
            if (c.is_zero()) continue;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
            num_gcd = ::abs(g);
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
            den_lcm = l;
        }
        return Rational(num_gcd, den_lcm);
    }

    Poly primitive_part() const {
        if (is_zero()) return *this;
        Poly r(*this);
        r *= content().inverse();
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        const char x = var_symbol(var_);
        for (std::size_t i = c_.size(); i-- > 0;) {
            const Rational& c = c_[i];
            if (c.is_zero()) continue;
            Rational a = c.abs();
            if (out.empty()) {
                if (c.sign() < 0) out += "-";
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            bool unit = (a == Rational(1));
            if (i == 0) {
                out += a.to_string();
            } else {
                if (!unit) {
                    out += a.to_string();
                    out += "*";
                }
                out += x;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void check_var(const Poly& o) const {
        if (var_ != o.var_ && !is_zero() && !o.is_zero())
            throw std::invalid_argument("polynomial: mixed variables");
    }

    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    Var var_;
    std::vector<Rational> c_;
};

// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
inline Poly poly_gcd(Poly a, Poly b) {
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
        Poly r = (a % b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.leading_coeff().sign() < 0) a *= Rational(-1);
    return a;
}

// p with all repeated roots collapsed to simple ones: p / gcd(p, p').
inline Poly squarefree_part(const Poly& p) {
    if (p.is_zero() || p.degree() == 0) return p;
    Poly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    return (p / g).primitive_part();
}

// Yun's algorithm: returns f_1, f_2, ... with p ~ prod f_i^i up to a
// constant; each f_i is squarefree and pairwise coprime.
inline std::vector<Poly> yun_decomposition(const Poly& p) {
    std::vector<Poly> out;
    if (p.is_zero() || p.degree() == 0) return out;
    Poly f = p.primitive_part();
    Poly g = poly_gcd(f, f.derivative());
    if (g.degree() == 0) {
        out.push_back(f);
        return out;
    }
    Poly c = f / g;
    Poly d = (f.derivative() / g) - c.derivative();
    while (true) {
        Poly a = poly_gcd(c, d);
        out.push_back(a);
        c = c / a;
        if (c.degree() == 0) break;
        d = (d / a) - c.derivative();
    }
    return out;
}

}  // namespace unitheta

#endif  // UNITHETA_POLYNOMIAL_HPP

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
#ifndef UNITHETA_QSERIES_HPP
#define UNITHETA_QSERIES_HPP

#include <map>
#include <stdexcept>
#include <utility>

#include "unitheta/polynomial.hpp"
#include "unitheta/rational.hpp"

namespace unitheta {

// Coefficient-ring glue for QSeries. Rational gives ordinary series;
// Poly (in the symbolic dimension variable n) gives series whose
// coefficients are polynomials in n.
template <typename R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static constexpr const char* tag = "rational";
    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static bool is_unit(const Rational& x) { return !x.is_zero(); }
    static Rational invert(const Rational& x) { return x.inverse(); }
};

template <>
struct RingTraits<Poly> {
    static constexpr const char* tag = "poly_in_n";
    static Poly zero() { return Poly(Var::N); }
    static Poly one() { return Poly::constant(Rational(1), Var::N); }
    static bool is_zero(const Poly& x) { return x.is_zero(); }
    static bool is_unit(const Poly& x) { return x.degree() == 0; }
    static Poly invert(const Poly& x) {
        if (x.degree() != 0)
            throw std::domain_error("qseries: non-constant coefficient is not invertible");
        return Poly::constant(x.coeff(0).inverse(), Var::N);
    }
};

// Truncated power series on the u-grid (u^4 = q). A series of order T has
// exact coefficients for exponents 0..T-1; everything at or beyond T is
// unknown and silently dropped. Binary operations truncate to the smaller
// order, so exactness of the stored prefix is an invariant.
template <typename R>
class QSeries {
public:
    using Traits = RingTraits<R>;

    explicit QSeries(int order) : order_(order) {
        if (order < 1) throw std::invalid_argument("qseries: order must be >= 1");
    }

    static QSeries zero(int order) { return QSeries(order); }

    static QSeries one(int order) {
        QSeries s(order);
        s.set(0, Traits::one());
        return s;
    }

    static QSeries monomial(const R& c, int e, int order) {
        QSeries s(order);
        s.set(e, c);
        return s;
    }

    int order() const { return order_; }

    R coeff(int e) const {
        if (e < 0 || e >= order_)
            throw std::out_of_range("qseries: coefficient beyond truncation order");
        auto it = terms_.find(e);
        return it == terms_.end() ? Traits::zero() : it->second;
    }

    void set(int e, const R& v) {
        if (e < 0 || e >= order_)
            throw std::out_of_range("qseries: exponent beyond truncation order");
        if (Traits::is_zero(v))
            terms_.erase(e);
        else
            terms_[e] = v;
    }

    const std::map<int, R>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    // Smallest exponent with a nonzero coefficient, or -1 for the zero
    // prefix.
    int valuation() const { return terms_.empty() ? -1 : terms_.begin()->first; }

    QSeries truncated(int new_order) const {
        if (new_order > order_)
            throw std::invalid_argument("qseries: cannot extend truncation order");
        QSeries s(new_order);
        for (const auto& [e, c] : terms_) {
            if (e >= new_order) break;
            s.terms_[e] = c;
        }
        return s;
    }

    bool support_in_multiples_of(int m) const {
        for (const auto& [e, c] : terms_)
            if (e % m != 0) return false;
        return true;
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        QSeries r(std::min(a.order_, b.order_));
        for (const auto& [e, c] : a.terms_)
            if (e < r.order_) r.add_to(e, c);
        for (const auto& [e, c] : b.terms_)
            if (e < r.order_) r.add_to(e, c);
        return r;
    }

    friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

    QSeries operator-() const {
        QSeries r(order_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        QSeries r(std::min(a.order_, b.order_));
        for (const auto& [ea, ca] : a.terms_) {
            if (ea >= r.order_) break;
            for (const auto& [eb, cb] : b.terms_) {
                int e = ea + eb;
                if (e >= r.order_) break;
                r.add_to(e, ca * cb);
            }
        }
        return r;
    }

    template <typename S>
    QSeries scaled(const S& s) const {
        QSeries r(order_);
        for (const auto& [e, c] : terms_) {
            R v = c * s;
            if (!Traits::is_zero(v)) r.terms_[e] = v;
        }
        return r;
    }

    QSeries pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        QSeries r = one(order_);
        QSeries base = *this;
        unsigned long long k = static_cast<unsigned long long>(e);
        while (k > 0) {
            if (k & 1ULL) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    // Multiplicative inverse; the constant term must be a unit.
    QSeries inverse() const {
        R c0 = coeff(0);
        if (!Traits::is_unit(c0))
            throw std::domain_error("qseries: constant term is not a unit");
        R c0inv = Traits::invert(c0);
        QSeries r(order_);
        r.set(0, c0inv);
        for (int e = 1; e < order_; ++e) {
            R acc = Traits::zero();
            for (const auto& [j, aj] : terms_) {
                if (j < 1) continue;
                if (j > e) break;
                acc = acc + aj * r.coeff(e - j);
            }
            R v = -(acc * c0inv);
            if (!Traits::is_zero(v)) r.terms_[e] = v;
        }
        return r;
    }

    // Formal logarithm; requires constant term exactly 1. Uses the
    // recurrence e*A_e = sum_{j=1..e} j*B_j*A_{e-j} solved for B_e.
    QSeries log() const {
        if (!(coeff(0) == Traits::one()))
            throw std::domain_error("qseries: log requires constant term 1");
        QSeries b(order_);
        for (int e = 1; e < order_; ++e) {
            R acc = coeff(e) * Rational(e);
            for (const auto& [j, bj] : b.terms_) {
                if (j >= e) break;
                acc = acc - (bj * coeff(e - j)) * Rational(j);
            }
            R v = acc * Rational(1, e);
            if (!Traits::is_zero(v)) b.terms_[e] = v;
        }
        return b;
    }

    // Formal exponential; requires zero constant term. Uses
    // e*E_e = sum_{j=1..e} j*A_j*E_{e-j}.
    QSeries exp() const {
        if (!Traits::is_zero(coeff(0)))
            throw std::domain_error("qseries: exp requires zero constant term");
        QSeries r(order_);
        r.set(0, Traits::one());
        for (int e = 1; e < order_; ++e) {
            R acc = Traits::zero();
            for (const auto& [j, aj] : terms_) {
                if (j > e) break;
                acc = acc + (aj * r.coeff(e - j)) * Rational(j);
            }
            R v = acc * Rational(1, e);
            if (!Traits::is_zero(v)) r.terms_[e] = v;
        }
        return r;
    }

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.order_ == b.order_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

private:
    void add_to(int e, const R& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!Traits::is_zero(c)) terms_[e] = c;
            return;
        }
        it->second = it->second + c;
        if (Traits::is_zero(it->second)) terms_.erase(it);
    }

    int order_;
    std::map<int, R> terms_;
};

// a^n for symbolic n: exp(n * log a). Requires constant term 1; the
// result's coefficients are polynomials in n of degree <= exponent index.
inline QSeries<Poly> pow_symbolic(const QSeries<Rational>& a) {
    QSeries<Rational> l = a.log();
    QSeries<Poly> m(a.order());
    for (const auto& [e, c] : l.terms())
        m.set(e, Poly::monomial(c, 1, Var::N));
    return m.exp();
}

// Substitutes a concrete value for n in every coefficient.
inline QSeries<Rational> substitute(const QSeries<Poly>& s, const Rational& n) {
    QSeries<Rational> r(s.order());
    for (const auto& [e, c] : s.terms()) r.set(e, c.eval(n));
    return r;
}

}  // namespace unitheta

#endif  // UNITHETA_QSERIES_HPP

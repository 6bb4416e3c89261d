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
#ifndef UNITHETA_BOUNDS_HPP
#define UNITHETA_BOUNDS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "unitheta/forms.hpp"
#include "unitheta/polynomial.hpp"
#include "unitheta/qseries.hpp"
#include "unitheta/rational.hpp"
#include "unitheta/roots.hpp"

namespace unitheta {

// Symbolic-in-n data for a dimension-n unimodular lattice whose theta
// series is theta3^n + sum_{l=1..k} b_l theta3^{n-8l} Delta8^l and whose
// vectors all have norm >= k: the vanishing of the q^1..q^{k-1}
// coefficients determines b_1(n)..b_{k-1}(n) as polynomials, while b_k is
// only constrained to a window by the endpoint-minimum conjecture.
struct SymbolicRootlessTheta {
    int k = 0;
    std::vector<Poly> b;                // b_1(n) .. b_{k-1}(n), var n
    std::pair<Poly, Poly> top_bounds;   // (L, U) with L(n) < b_k(n) <= U(n)
};

enum class BoundMode { PaperFaithful, Derived };

inline const char* bound_mode_string(BoundMode m) {
    return m == BoundMode::PaperFaithful ? "paper_faithful" : "derived";
}

enum class LambdaSign { Plus, Minus };

struct DimensionBoundReport {
    int k = 0;
    BoundMode mode = BoundMode::Derived;
    Poly constraint_poly;       // in n; the inequality is poly(n) <= bound
    Rational bound_constant;
    long long threshold = 0;    // largest n satisfying the inequality
    LambdaSign lambda_sign = LambdaSign::Plus;
};

namespace detail {

inline QSeries<Poly> lift_to_poly_ring(const QSeries<Rational>& s) {
    QSeries<Poly> r(s.order());
    for (const auto& [e, c] : s.terms()) r.set(e, Poly::constant(c, Var::N));
    return r;
}

// Window L(n) < b_k(n) <= U(n) from 0 < D(1/4) <= 1 after clearing 64^k:
// U = -sum_{l<k} b_l * 64^{k-l}, L = U - 64^k.
inline std::pair<Poly, Poly> top_bounds_from(const std::vector<Poly>& b, int k) {
    Poly upper(Var::N);
    for (int l = 1; l < k; ++l)
        upper -= b[l - 1] * Rational(64).pow(k - l);
    Poly lower = upper - Poly::constant(Rational(64).pow(k), Var::N);
    return {lower, upper};
}

}  // namespace detail

// Triangular solve over polynomials in n: the q^l coefficient of
// theta3^n + sum_j b_j theta3^{n-8j} Delta8^j must vanish for l < k.
inline SymbolicRootlessTheta rootless_symbolic_coeffs(int k) {
    if (k < 2 || k > 8)
        throw std::invalid_argument("bounds: k must be in 2..8");
    const int order = 4 * (k + 2);

    QSeries<Rational> t3 = form_series(FormName::Theta3, order);
    QSeries<Rational> d8 = form_series(FormName::Delta8, order);
    QSeries<Poly> t3_sym = pow_symbolic(t3);

    SymbolicRootlessTheta out;
    out.k = k;

    std::vector<QSeries<Poly>> basis;  // theta3^{n-8j} Delta8^j, j = 0..k-1
    QSeries<Rational> t3_inv8 = t3.pow(-8);
    QSeries<Rational> shrink = QSeries<Rational>::one(order);
    for (int j = 0; j < k; ++j) {
        if (j > 0) shrink = shrink * t3_inv8 * d8;
        basis.push_back(t3_sym * detail::lift_to_poly_ring(shrink));
    }

    for (int l = 1; l < k; ++l) {
        Poly acc = basis[0].coeff(4 * l);
        for (int j = 1; j < l; ++j)
            acc += out.b[j - 1] * basis[j].coeff(4 * l);
        // basis[l] has q^l coefficient 1, so b_l = -acc.
        out.b.push_back(-acc);
    }

    out.top_bounds = detail::top_bounds_from(out.b, k);
    return out;
}

inline std::pair<Poly, Poly> conjecture_top_bounds(int k) {
    return rootless_symbolic_coeffs(k).top_bounds;
}

namespace detail {

// The inequalities exactly as printed in the source text, for
// paper-faithful mode. Derived mode recomputes them from the symbolic
// solve instead.
inline std::pair<Poly, Rational> printed_constraint(int k) {
    auto c = [](long long v) { return Rational(v); };
    switch (k) {
        case 3:
            // 2^36 >= 128 n^2 - 174 n
            return {Poly::from_coeffs({c(0), c(-174), c(128)}, Var::N), Rational(2).pow(36)};
        case 4:
            // 2^48 >= 64^3*2n - 64^2(2n^2-46n) + 64((4/3)n^3 - 92n^2 + (4832/3)n)
            return {Poly::from_coeffs({c(0),
                                       c(2) * Rational(64).pow(3) +
                                           c(46) * Rational(64).pow(2) +
                                           Rational(4832, 3) * c(64),
                                       c(-2) * Rational(64).pow(2) - c(92) * c(64),
                                       Rational(4, 3) * c(64)},
                                      Var::N),
                    Rational(2).pow(48)};
        case 5:
            // 2^60 >= -64^4*2n + 64^3(2n^2-46n) - 64^2((4/3)n^3 - 92n^2 + (4832/3)n)
            //         + 64((2/3)n^4 - 84n^3 + (12430/3)n^2 - 66542n)
            return {Poly::from_coeffs(
                        {c(0),
                         c(-2) * Rational(64).pow(4) - c(46) * Rational(64).pow(3) -
                             Rational(4832, 3) * Rational(64).pow(2) - c(66542) * c(64),
                         c(2) * Rational(64).pow(3) + c(92) * Rational(64).pow(2) +
                             Rational(12430, 3) * c(64),
                         Rational(-4, 3) * Rational(64).pow(2) - c(84) * c(64),
                         Rational(2, 3) * c(64)},
                        Var::N),
                    Rational(2).pow(60)};
        default:
            throw std::invalid_argument("bounds: paper-faithful mode covers k in {3,4,5}");
    }
}

inline long long threshold_with_expansion(const Poly& p, const Rational& bound,
                                          long long lo) {
    if (!(p.eval(Rational(lo)) <= bound))
        throw std::domain_error("bounds: constraint already violated at the window start");
    long long hi = 1LL << 25;
    while (hi <= lo) hi *= 2;
    while (p.eval(Rational(hi)) <= bound) {
        if (hi > (1LL << 56))
            throw std::domain_error("bounds: constraint never violated in search window");
        hi *= 2;
    }
    return largest_satisfying_integer(p, bound, lo, hi);
}

}  // namespace detail

// Largest dimension n for which a rootless lattice as above is not ruled
// out by the characteristic-vector counting bound 2^n >= |chi| =
// lambda_k 2^{n-8k}, i.e. |b_k(n)| <= 2^{12k} at the zero-slack extreme
// b_k = U(n). Paper-faithful mode evaluates the printed inequalities
// verbatim; derived mode rebuilds them from the symbolic solve.
inline DimensionBoundReport dimension_bound(int k, BoundMode mode) {
    DimensionBoundReport rep;
    rep.k = k;
    rep.mode = mode;
    rep.lambda_sign = LambdaSign::Plus;

    if (mode == BoundMode::PaperFaithful) {
        auto [poly, bound] = detail::printed_constraint(k);
        rep.constraint_poly = poly;
        rep.bound_constant = bound;
    } else {
        if (k < 3 || k > 8)
            throw std::invalid_argument("bounds: derived mode covers k in 3..8");
        Poly upper = conjecture_top_bounds(k).second;
        // lambda_k = (-1)^k b_k / 16^k must be non-negative, so the
        // magnitude constraint applies to (-1)^k U(n).
        Poly signed_upper = k % 2 == 0 ? upper : -upper;
        rep.constraint_poly = signed_upper;
        rep.bound_constant = Rational(2).pow(12 * k);
    }

    const long long lo = 8 * k + 1;
    rep.threshold = detail::threshold_with_expansion(rep.constraint_poly,
                                                     rep.bound_constant, lo);

    if (mode == BoundMode::Derived &&
        rep.constraint_poly.eval(Rational(rep.threshold)).sign() < 0)
        throw std::domain_error(
            "bounds: no contradiction reachable; lambda sign analysis failed at n = " +
            std::to_string(rep.threshold));

    // Two-sided verification is part of the report's contract.
    if (!(rep.constraint_poly.eval(Rational(rep.threshold)) <= rep.bound_constant) ||
        !(rep.constraint_poly.eval(Rational(rep.threshold + 1)) > rep.bound_constant))
        throw std::logic_error("bounds: threshold verification failed");

    return rep;
}

// Number of shortest characteristic vectors implied by a top coefficient
// b_k at dimension n: lambda_k * 2^{n-8k} with lambda_k = (-1)^k b_k/16^k.
// A negative lambda_k is an infeasibility witness, not a count.
class InfeasibleCount : public std::domain_error {
public:
    explicit InfeasibleCount(const Rational& lambda)
        : std::domain_error("bounds: implied vector count is negative (lambda = " +
                            lambda.to_string() + ")"),
          lambda_(lambda) {}

    const Rational& lambda() const { return lambda_; }

private:
    Rational lambda_;
};

inline Rational chi_count(int k, int n, const Rational& b_k) {
    Rational lambda = b_k / Rational(16).pow(k);
    if (k % 2 != 0) lambda = -lambda;
    if (lambda.sign() < 0) throw InfeasibleCount(lambda);
    return lambda * Rational(2).pow(n - 8 * k);
}

}  // namespace unitheta

#endif  // UNITHETA_BOUNDS_HPP

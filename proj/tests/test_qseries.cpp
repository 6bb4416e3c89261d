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
#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "unitheta/qseries.hpp"

using unitheta::Poly;
using unitheta::QSeries;
using unitheta::Rational;
using unitheta::Var;

namespace {
QSeries<Rational> one_plus_u(int order) {
    QSeries<Rational> s = QSeries<Rational>::one(order);
    s.set(1, Rational(1));
    return s;
}
}  // namespace

TEST_CASE("basic accessors") {
    QSeries<Rational> s(8);
    CHECK(s.is_zero());
    CHECK(s.valuation() == -1);
    s.set(3, Rational(5));
    CHECK(s.coeff(3) == Rational(5));
    CHECK(s.coeff(4) == Rational(0));
    CHECK(s.valuation() == 3);
    CHECK_THROWS_AS(s.coeff(8), std::out_of_range);
    CHECK_THROWS_AS(s.set(9, Rational(1)), std::out_of_range);
    CHECK_THROWS_AS(QSeries<Rational>(0), std::invalid_argument);
    CHECK(QSeries<Rational>::monomial(Rational(2), 3, 8).coeff(3) == Rational(2));
}

TEST_CASE("truncated ring laws") {
    QSeries<Rational> a = one_plus_u(8);
    QSeries<Rational> b = QSeries<Rational>::monomial(Rational(1), 1, 8) -
                          QSeries<Rational>::one(8);
    // (1+u)(u-1) = u^2 - 1
    QSeries<Rational> prod = a * b;
    CHECK(prod.coeff(0) == Rational(-1));
    CHECK(prod.coeff(1) == Rational(0));
    CHECK(prod.coeff(2) == Rational(1));

    QSeries<Rational> c = QSeries<Rational>::monomial(Rational(3), 2, 8);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK((-a + a).is_zero());
}

TEST_CASE("orders shrink to the weakest operand") {
    QSeries<Rational> a = one_plus_u(16);
    QSeries<Rational> b = one_plus_u(8);
    CHECK((a * b).order() == 8);
    CHECK((a + b).order() == 8);
    CHECK(a.truncated(4).order() == 4);
    CHECK(a.truncated(4).coeff(1) == Rational(1));
}

TEST_CASE("inverse against Newton iteration") {
    QSeries<Rational> a(32);
    a.set(0, Rational(1));
    a.set(1, Rational(-1));  // 1 - u, inverse = geometric series
    QSeries<Rational> inv = a.inverse();
    for (int e = 0; e < 32; ++e) CHECK(inv.coeff(e) == Rational(1));
    CHECK(inv == oracles::inverse_newton(a));
    CHECK((a * inv) == QSeries<Rational>::one(32));

    QSeries<Rational> f(24);
    f.set(0, Rational(2));
    f.set(3, Rational(-1, 3));
    f.set(7, Rational(5));
    CHECK(f.inverse() == oracles::inverse_newton(f));
    CHECK(f * f.inverse() == QSeries<Rational>::one(24));

    QSeries<Rational> non_unit(8);
    non_unit.set(1, Rational(1));
    CHECK_THROWS_AS(non_unit.inverse(), std::domain_error);
}

TEST_CASE("log matches series composition and exp inverts it") {
    QSeries<Rational> s = one_plus_u(16);
    s.set(2, Rational(1));  // 1 + u + u^2
    CHECK(s.log() == oracles::log_composition(s));
    CHECK(s.log().exp() == s);

    QSeries<Rational> x(16);
    x.set(1, Rational(1));
    x.set(3, Rational(1));
    CHECK(x.exp().log() == x);

    CHECK_THROWS_AS(x.log(), std::domain_error);         // constant term is not 1
    CHECK_THROWS_AS(one_plus_u(8).exp(), std::domain_error);  // constant term not 0
}

TEST_CASE("powers including negative exponents") {
    QSeries<Rational> a = one_plus_u(16);
    QSeries<Rational> cube = a.pow(3);
    CHECK(cube.coeff(0) == Rational(1));
    CHECK(cube.coeff(1) == Rational(3));
    CHECK(cube.coeff(2) == Rational(3));
    CHECK(cube.coeff(3) == Rational(1));
    CHECK(cube.coeff(4) == Rational(0));
    CHECK(a.pow(0) == QSeries<Rational>::one(16));
    CHECK(a.pow(-2) == a.inverse().pow(2));
    CHECK(a.pow(5) * a.pow(-5) == QSeries<Rational>::one(16));
}

TEST_CASE("support filters") {
    QSeries<Rational> s(16);
    s.set(0, Rational(1));
    s.set(4, Rational(2));
    s.set(8, Rational(-1));
    CHECK(s.support_in_multiples_of(4));
    CHECK(s.support_in_multiples_of(2));
    s.set(6, Rational(1));
    CHECK_FALSE(s.support_in_multiples_of(4));
    CHECK(s.support_in_multiples_of(2));
}

TEST_CASE("scaling") {
    QSeries<Rational> s = one_plus_u(8);
    QSeries<Rational> scaled = s.scaled(Rational(3, 2));
    CHECK(scaled.coeff(0) == Rational(3, 2));
    CHECK(scaled.coeff(1) == Rational(3, 2));
    CHECK(s.scaled(Rational(0)).is_zero());
}

TEST_CASE("symbolic exponentiation specializes correctly") {
    // Base must have constant term 1; use 1 + 2u^4 + 2u^16 (theta3 prefix).
    QSeries<Rational> base = oracles::theta3_sum(20);
    unitheta::QSeries<Poly> sym = unitheta::pow_symbolic(base);

    // q-coefficients of theta3^n as polynomials in n.
    Poly q1 = Poly::from_coeffs({Rational(0), Rational(2)}, Var::N);
    Poly q2 = Poly::from_coeffs({Rational(0), Rational(-2), Rational(2)}, Var::N);
    Poly q3 =
        Poly::from_coeffs({Rational(0), Rational(8, 3), Rational(-4), Rational(4, 3)},
                          Var::N);
    Poly q4 = Poly::from_coeffs(
        {Rational(0), Rational(-2), Rational(22, 3), Rational(-4), Rational(2, 3)},
        Var::N);
    CHECK(sym.coeff(4) == q1);
    CHECK(sym.coeff(8) == q2);
    CHECK(sym.coeff(12) == q3);
    CHECK(sym.coeff(16) == q4);

    for (int n : {1, 2, 5, 8}) {
        QSeries<Rational> direct = base.pow(n);
        QSeries<Rational> specialized = unitheta::substitute(sym, Rational(n));
        CHECK(specialized == direct);
    }
}

TEST_CASE("polynomial-coefficient series form a ring") {
    unitheta::QSeries<Poly> a(8);
    a.set(0, Poly::constant(Rational(1), Var::N));
    a.set(1, Poly::from_coeffs({Rational(0), Rational(1)}, Var::N));  // n u
    unitheta::QSeries<Poly> sq = a * a;
    CHECK(sq.coeff(1) == Poly::from_coeffs({Rational(0), Rational(2)}, Var::N));
    CHECK(sq.coeff(2) ==
          Poly::from_coeffs({Rational(0), Rational(0), Rational(1)}, Var::N));
}

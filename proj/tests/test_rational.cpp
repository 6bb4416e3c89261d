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

#include "unitheta/rational.hpp"

using unitheta::Rational;
using unitheta::pow2;

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-1, -2) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(2, 4).num() == 1);
    CHECK(Rational(2, 4).den() == 2);
    CHECK(Rational(-3, 6).den() == 2);  // denominator stays positive
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("string parsing is strict") {
    CHECK(Rational("10/4") == Rational(5, 2));
    CHECK(Rational("-7") == Rational(-7));
    CHECK(Rational("+3/4") == Rational(3, 4));
    CHECK(Rational("0") == Rational(0));
    for (const char* bad : {"x", "", "1.5", "3/", "/4", "1/-2", "1 /2", "0x1", "--3", "1e3"})
        CHECK_THROWS_AS(Rational(bad), std::invalid_argument);
    CHECK_THROWS_AS(Rational("1/0"), std::invalid_argument);
}

TEST_CASE("to_string round trips") {
    for (const auto& r : {Rational(5, 2), Rational(-7, 3), Rational(0), Rational(42)})
        CHECK(Rational(r.to_string()) == r);
    CHECK(Rational(5, 2).to_string() == "5/2");
    CHECK(Rational(4, 2).to_string() == "2");   // integers print without slash
    CHECK(Rational(-1, 3).to_string() == "-1/3");
}

TEST_CASE("field operations") {
    Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(-a == Rational(-1, 2));
    CHECK(a.inverse() == Rational(2));
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("order and signs") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-5) < Rational(-4));
    CHECK(Rational(-2, 7).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(-2, 7).abs() == Rational(2, 7));
    CHECK(Rational(3, 2).is_integer() == false);
    CHECK(Rational(4, 2).is_integer());
    CHECK(Rational(0).is_zero());
}

TEST_CASE("powers") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(0) == Rational(1));
    CHECK(Rational(2).pow(-3) == Rational(1, 8));
    CHECK(Rational(-2).pow(3) == Rational(-8));
    CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
    CHECK(pow2(10) == Rational(1024));
    CHECK(pow2(-40) == Rational(1, 1099511627776LL));
    CHECK(pow2(0) == Rational(1));
}

TEST_CASE("pow laws hold on samples") {
    const Rational xs[] = {Rational(2, 3), Rational(-5, 4), Rational(7)};
    for (const auto& x : xs) {
        for (long long i = -3; i <= 3; ++i) {
            for (long long j = -3; j <= 3; ++j) {
                CHECK(x.pow(i) * x.pow(j) == x.pow(i + j));
                CHECK(x.pow(i).pow(j) == x.pow(i * j));
            }
        }
    }
}

TEST_CASE("to_double") {
    CHECK(Rational(1, 4).to_double() == 0.25);
    CHECK(Rational(-3, 2).to_double() == -1.5);
}

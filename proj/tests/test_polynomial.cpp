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

#include "unitheta/polynomial.hpp"

using unitheta::Poly;
using unitheta::Rational;
using unitheta::Var;

namespace {
Poly zp(std::vector<Rational> c) { return Poly::from_coeffs(std::move(c), Var::Z); }
Poly linear(const Rational& root) { return zp({-root, Rational(1)}); }  // z - root
}  // namespace

TEST_CASE("normalization and degree") {
    CHECK(zp({Rational(1), Rational(0), Rational(0)}).degree() == 0);
    CHECK(Poly(Var::Z).degree() == -1);
    CHECK(Poly(Var::Z).is_zero());
    CHECK(zp({Rational(0), Rational(0)}).is_zero());
    Poly p = zp({Rational(1), Rational(2)});
    CHECK(p.coeff(0) == Rational(1));
    CHECK(p.coeff(1) == Rational(2));
    CHECK(p.coeff(5) == Rational(0));  // out of range reads as zero
    CHECK(p.leading_coeff() == Rational(2));
}

TEST_CASE("constant and monomial constructors") {
    CHECK(Poly::constant(Rational(3), Var::Z).degree() == 0);
    CHECK(Poly::constant(Rational(0), Var::Z).is_zero());
    Poly m = Poly::monomial(Rational(2, 3), 4, Var::N);
    CHECK(m.degree() == 4);
    CHECK(m.coeff(4) == Rational(2, 3));
    CHECK(m.to_string() == "2/3*n^4");
}

TEST_CASE("ring operations") {
    Poly a = zp({Rational(1), Rational(-2), Rational(1)});  // (z-1)^2
    Poly b = zp({Rational(-1), Rational(1)});               // z-1
    CHECK(b * b == a);
    CHECK(a + b == zp({Rational(0), Rational(-1), Rational(1)}));
    CHECK(a - a == Poly(Var::Z));
    CHECK(-b == zp({Rational(1), Rational(-1)}));
    CHECK(b.pow(2) == a);
    CHECK(b.pow(0) == Poly::constant(Rational(1), Var::Z));
    CHECK(b * Rational(3) == zp({Rational(-3), Rational(3)}));
    CHECK(Rational(3) * b == b * Rational(3));
}

TEST_CASE("mixed variables are rejected") {
    Poly z = Poly::monomial(Rational(1), 1, Var::Z);
    Poly n = Poly::monomial(Rational(1), 1, Var::N);
    CHECK_THROWS_AS(z + n, std::invalid_argument);
    CHECK_THROWS_AS(z * n, std::invalid_argument);
    // Zero carries no variable constraint.
    CHECK((z + Poly(Var::N)) == z);
}

TEST_CASE("evaluation is a homomorphism") {
    Poly p = zp({Rational(1), Rational(-5), Rational(85, 16), Rational(-5, 8)});
    Poly q = zp({Rational(2), Rational(0), Rational(7)});
    const Rational xs[] = {Rational(0), Rational(1, 4), Rational(-3, 7), Rational(2)};
    for (const auto& x : xs) {
        CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
        CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
    }
    CHECK(p.eval(Rational(1, 4)) ==
          Rational(1) - Rational(5, 4) + Rational(85, 256) - Rational(5, 512));
}

TEST_CASE("derivative satisfies the product rule") {
    Poly p = zp({Rational(3), Rational(-1), Rational(0), Rational(2)});
    Poly q = zp({Rational(-2), Rational(5), Rational(1, 3)});
    CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
    CHECK(Poly::constant(Rational(9), Var::Z).derivative().is_zero());
    CHECK(zp({Rational(0), Rational(0), Rational(1)}).derivative() ==
          zp({Rational(0), Rational(2)}));
}

TEST_CASE("euclidean division") {
    Poly p = linear(Rational(1)) * linear(Rational(2)) * linear(Rational(3)) +
             Poly::constant(Rational(5), Var::Z);
    Poly d = linear(Rational(1)) * linear(Rational(4));
    auto [q, r] = p.divmod(d);
    CHECK(p == q * d + r);
    CHECK(r.degree() < d.degree());
    CHECK(p / d == q);
    CHECK(p % d == r);
    CHECK_THROWS_AS(p.divmod(Poly(Var::Z)), std::domain_error);

    Poly exact = linear(Rational(1, 2)) * linear(Rational(-3));
    CHECK((exact / linear(Rational(1, 2))) == linear(Rational(-3)));
    CHECK((exact % linear(Rational(1, 2))).is_zero());
}

TEST_CASE("content and primitive part") {
    Poly p = zp({Rational(6), Rational(4)});
    CHECK(p.content() == Rational(2));
    CHECK(p.primitive_part() == zp({Rational(3), Rational(2)}));
    Poly q = zp({Rational(-6), Rational(-4)});
    CHECK(q.content() == Rational(2));  // content is always positive
    CHECK(q.primitive_part() == zp({Rational(-3), Rational(-2)}));
    Poly f = zp({Rational(1, 2), Rational(3, 4)});
    CHECK(f.content() == Rational(1, 4));
    CHECK(f.primitive_part() == zp({Rational(2), Rational(3)}));
}

TEST_CASE("gcd of polynomials") {
    Poly g = unitheta::poly_gcd(linear(Rational(1)) * linear(Rational(-2)),
                                linear(Rational(1)) * linear(Rational(3)));
    CHECK(g == linear(Rational(1)));
    CHECK(unitheta::poly_gcd(linear(Rational(5)), Poly(Var::Z)) == linear(Rational(5)));
    CHECK(unitheta::poly_gcd(zp({Rational(2)}), linear(Rational(7))).degree() == 0);
    // Result is primitive with positive leading coefficient.
    Poly a = zp({Rational(-4), Rational(-4)});  // -4(z+1)
    Poly b = zp({Rational(2), Rational(4), Rational(2)});
    Poly got = unitheta::poly_gcd(a, b);
    CHECK(got == zp({Rational(1), Rational(1)}));
}

TEST_CASE("squarefree part and multiplicity decomposition") {
    Poly p = linear(Rational(1)).pow(2) * linear(Rational(-2));
    CHECK(unitheta::squarefree_part(p) == linear(Rational(1)) * linear(Rational(-2)));

    Poly f = linear(Rational(1)) * linear(Rational(-2)).pow(2) * linear(Rational(3)).pow(3);
    std::vector<Poly> parts = unitheta::yun_decomposition(f);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == linear(Rational(1)));
    CHECK(parts[1] == linear(Rational(-2)));
    CHECK(parts[2] == linear(Rational(3)));

    // Squarefree input decomposes as itself at multiplicity one.
    Poly s = linear(Rational(0)) * linear(Rational(1, 4));
    std::vector<Poly> sq = unitheta::yun_decomposition(s);
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].primitive_part() == s.primitive_part());
}

TEST_CASE("pretty printing") {
    CHECK(zp({Rational(1), Rational(-1)}).to_string() == "-z + 1");
    CHECK(zp({Rational(0), Rational(1)}).to_string() == "z");
    CHECK(Poly(Var::Z).to_string() == "0");
    CHECK(zp({Rational(-1, 2), Rational(0), Rational(3)}).to_string() == "3*z^2 - 1/2");
}

TEST_CASE("set_coeff renormalizes") {
    Poly p = zp({Rational(1), Rational(2)});
    p.set_coeff(1, Rational(0));
    CHECK(p.degree() == 0);
    p.set_coeff(4, Rational(7));
    CHECK(p.degree() == 4);
    CHECK(p.coeff(2) == Rational(0));
}

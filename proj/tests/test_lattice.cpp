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
#include "unitheta/forms.hpp"
#include "unitheta/lattice.hpp"

using unitheta::EvenLatticeTheta;
using unitheta::FormName;
using unitheta::GeneralLatticeTheta;
using unitheta::QSeries;
using unitheta::Rational;
using unitheta::ShortVectorCounts;

namespace {
ShortVectorCounts counts_of(std::initializer_list<long long> xs) {
    ShortVectorCounts c;
    for (long long x : xs) c.counts.emplace_back(x);
    return c;
}
}  // namespace

TEST_CASE("eight dimensions, no free coefficients") {
    EvenLatticeTheta lat = unitheta::even_from_counts(8, counts_of({}));
    CHECK(lat.m == 0);
    CHECK(lat.k == 1);
    CHECK(lat.dimension() == 8);
    CHECK(lat.b.empty());
    QSeries<Rational> theta = unitheta::theta_expansion(lat, 32);
    CHECK(theta == unitheta::form_series(FormName::E4, 32));
    unitheta::KissingData kiss = unitheta::kissing_data(lat, 32);
    CHECK(kiss.min_norm == 2);
    CHECK(kiss.count == Rational(240));
}

TEST_CASE("24 dimensions with empty norm-2 shell") {
    EvenLatticeTheta lat = unitheta::even_from_counts(24, counts_of({0}));
    REQUIRE(lat.b.size() == 1);
    CHECK(lat.b[0] == Rational(-720));
    unitheta::KissingData kiss =
        unitheta::kissing_data(lat, unitheta::default_expansion_order(lat));
    CHECK(kiss.min_norm == 4);
    CHECK(kiss.count == Rational(196560));
    unitheta::ValidationReport rep = unitheta::validate_lattice_series(
        lat, unitheta::default_expansion_order(lat));
    CHECK(rep.pass);
    CHECK(rep.issues.empty());
}

TEST_CASE("top-count scaling in the e4/delta basis") {
    // With the norm-2 shell empty, b_1 is linear in the dimension.
    CHECK(unitheta::even_from_counts(24, counts_of({0})).b[0] == Rational(-720));
    CHECK(unitheta::even_from_counts(32, counts_of({0})).b[0] == Rational(-960));
    CHECK(unitheta::even_from_counts(40, counts_of({0})).b[0] == Rational(-1200));
    CHECK(unitheta::even_from_counts(40, counts_of({0, 39600})).b[0] == Rational(-1200));
}

TEST_CASE("surplus counts are verified, not trusted") {
    CHECK_THROWS_WITH(unitheta::even_from_counts(40, counts_of({0, 39601})),
                      Catch::Matchers::ContainsSubstring("determined to be 39600"));
    CHECK_THROWS_AS(unitheta::even_from_counts(40, counts_of({0, 39601})),
                    std::invalid_argument);
    CHECK_NOTHROW(unitheta::even_from_counts(40, counts_of({0, 39600})));
    CHECK_THROWS_AS(unitheta::general_from_counts(8, counts_of({0, 999})),
                    std::invalid_argument);
}

TEST_CASE("dimension preconditions") {
    CHECK_THROWS_AS(unitheta::even_from_counts(12, counts_of({})), std::invalid_argument);
    CHECK_THROWS_AS(unitheta::even_from_counts(-8, counts_of({})), std::invalid_argument);
    CHECK_THROWS_AS(unitheta::general_from_counts(0, counts_of({})),
                    std::invalid_argument);
    CHECK_NOTHROW(unitheta::general_from_counts(7, counts_of({})));  // mu = 0
}

TEST_CASE("general basis for the e8 theta") {
    GeneralLatticeTheta lat = unitheta::general_from_counts(8, counts_of({0}));
    CHECK(lat.mu() == 1);
    REQUIRE(lat.a.size() == 2);
    CHECK(lat.a[0] == Rational(1));
    CHECK(lat.a[1] == Rational(-16));
    CHECK(unitheta::theta_expansion(lat, 32) ==
          unitheta::form_series(FormName::E4, 32));
}

TEST_CASE("kissing number enters linearly in dimension 16") {
    for (long long kiss : {0LL, 64LL, 480LL}) {
        GeneralLatticeTheta lat = unitheta::general_from_counts(16, counts_of({0, kiss}));
        REQUIRE(lat.a.size() == 3);
        CHECK(lat.a[1] == Rational(-32));
        CHECK(lat.a[2] == Rational(kiss - 224));
    }
}

TEST_CASE("40-dim odd basis coefficients") {
    GeneralLatticeTheta lat =
        unitheta::general_from_counts(40, counts_of({0, 0, 0, 39600, 1048576}));
    std::vector<Rational> want = {Rational(1),     Rational(-80),   Rational(1360),
                                  Rational(-2560), Rational(20480), Rational(0)};
    CHECK(lat.a == want);
    QSeries<Rational> theta =
        unitheta::theta_expansion(lat, unitheta::default_expansion_order(lat));
    CHECK(theta.coeff(16) == Rational(39600));
    CHECK(theta.coeff(20) == Rational(1048576));
}

TEST_CASE("z^n itself has trivial basis coefficients") {
    // Counts of Z^n from brute force; the solve must give a_0 = 1, rest 0.
    for (int n : {2, 3, 4}) {
        std::vector<long long> rn = oracles::znorm_counts(n, n / 8 + 1);
        ShortVectorCounts counts;
        for (int q = 1; q <= n / 8; ++q) counts.counts.emplace_back(rn[q]);
        GeneralLatticeTheta lat = unitheta::general_from_counts(n, counts);
        CHECK(lat.a == std::vector<Rational>{Rational(1)});
    }
    // Dimension 8 with the norm-1 count r_8(1) = 16 must land on theta3^8.
    GeneralLatticeTheta z8 = unitheta::general_from_counts(8, counts_of({16}));
    CHECK(z8.a == (std::vector<Rational>{Rational(1), Rational(0)}));
    QSeries<Rational> t3 = unitheta::form_series(FormName::Theta3, 36);
    CHECK(unitheta::theta_expansion(z8, 36) == t3.pow(8));
}

TEST_CASE("theta3 powers against brute-force counts") {
    QSeries<Rational> t3 = unitheta::form_series(FormName::Theta3, 36);
    for (int n : {1, 2, 3, 4}) {
        QSeries<Rational> tn = t3.pow(n);
        std::vector<long long> rn = oracles::znorm_counts(n, 8);
        for (int m = 0; m <= 8; ++m) CHECK(tn.coeff(4 * m) == Rational(rn[m]));
    }
}

TEST_CASE("default orders cover the data plus headroom") {
    EvenLatticeTheta even = unitheta::even_from_counts(48, counts_of({0, 0}));
    CHECK(unitheta::default_expansion_order(even) == 4 * (2 * even.m + 4));
    GeneralLatticeTheta gen = unitheta::general_from_counts(40, counts_of({}));
    CHECK(unitheta::default_expansion_order(gen) == 4 * (gen.mu() + 4));
}

TEST_CASE("change of basis to theta3/e4") {
    GeneralLatticeTheta e8ish = unitheta::general_from_counts(8, counts_of({0}));
    std::vector<Rational> lambda = unitheta::to_e4_basis(e8ish);
    REQUIRE(lambda.size() == 2);
    CHECK(lambda[0] == Rational(0));
    CHECK(lambda[1] == Rational(1));  // theta = E4 exactly

    GeneralLatticeTheta odd40 =
        unitheta::general_from_counts(40, counts_of({0, 0, 0, 39600, 1048576}));
    std::vector<Rational> l40 = unitheta::to_e4_basis(odd40);
    std::vector<Rational> want = {Rational(1),      Rational(-5), Rational(85, 16),
                                  Rational(-5, 8),  Rational(5, 16), Rational(0)};
    CHECK(l40 == want);

    // The rebuilt expansion agrees with the original on any order.
    for (int order : {24, 36}) {
        CHECK(unitheta::theta_expansion_e4_basis(40, l40, order) ==
              unitheta::theta_expansion(odd40, order));
        CHECK(unitheta::theta_expansion_e4_basis(8, lambda, order) ==
              unitheta::theta_expansion(e8ish, order));
    }
}

TEST_CASE("kissing data needs a nonzero coefficient in range") {
    CHECK_THROWS_AS(unitheta::kissing_from_series(QSeries<Rational>::one(8)),
                    unitheta::InsufficientOrder);
    QSeries<Rational> off_grid(8);
    off_grid.set(0, Rational(1));
    off_grid.set(3, Rational(2));
    CHECK_THROWS_AS(unitheta::kissing_from_series(off_grid), std::logic_error);
}

TEST_CASE("validation flags impossible series") {
    // Forcing b_1 far below the consistent value drives a coefficient negative.
    EvenLatticeTheta bad;
    bad.m = 1;
    bad.k = 0;
    bad.b = {Rational(-10000)};
    unitheta::ValidationReport rep = unitheta::validate_lattice_series(bad, 16);
    CHECK_FALSE(rep.pass);
    REQUIRE_FALSE(rep.issues.empty());
    CHECK(rep.issues[0].q_exponent == 2);
    CHECK(rep.issues[0].message.find("negative") != std::string::npos);

    // Fractional counts produce non-integral coefficients.
    GeneralLatticeTheta frac = unitheta::general_from_counts(16, counts_of({0}));
    frac.a[1] = Rational(1, 2);
    unitheta::ValidationReport rep2 = unitheta::validate_lattice_series(frac, 16);
    CHECK_FALSE(rep2.pass);

    // A genuine theta passes.
    GeneralLatticeTheta good = unitheta::general_from_counts(16, counts_of({0, 480}));
    CHECK(unitheta::validate_lattice_series(good, 24).pass);
}

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
#ifndef UNITHETA_FORMS_HPP
#define UNITHETA_FORMS_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "unitheta/qseries.hpp"
#include "unitheta/rational.hpp"

namespace unitheta {

// The six named series. Everything lives on the u-grid with u^4 = q, so
// theta2's quarter-power prefactor is the integer exponent u^1.
enum class FormName { Theta2, Theta3, Theta4, E4, Delta, Delta8 };

inline std::string form_name_string(FormName f) {
    switch (f) {
        case FormName::Theta2: return "theta2";
        case FormName::Theta3: return "theta3";
        case FormName::Theta4: return "theta4";
        case FormName::E4: return "E4";
        case FormName::Delta: return "Delta";
        case FormName::Delta8: return "Delta8";
    }
    throw std::logic_error("forms: unreachable");
}

inline FormName form_name_from_string(const std::string& s) {
    if (s == "theta2") return FormName::Theta2;
    if (s == "theta3") return FormName::Theta3;
    if (s == "theta4") return FormName::Theta4;
    if (s == "E4") return FormName::E4;
    if (s == "Delta") return FormName::Delta;
    if (s == "Delta8") return FormName::Delta8;
    throw std::invalid_argument("forms: unknown form name '" + s + "'");
}

namespace detail {

// 1 + c*u^e, truncated. Factors whose lowest nonconstant exponent falls
// beyond the order reduce to 1 and are skipped by the callers.
inline QSeries<Rational> two_term(int order, int e, const Rational& c) {
    QSeries<Rational> s = QSeries<Rational>::one(order);
    if (e < order) s.set(e, c);
    return s;
}

// Product over j >= 1 of (1 - u^{8j}) * (1 + sign * u^{8j-4})^2, the
// common shape of the theta3/theta4 product formulas.
inline QSeries<Rational> theta_product(int order, int sign) {
    QSeries<Rational> s = QSeries<Rational>::one(order);
    for (int j = 1; 8 * j - 4 < order; ++j) {
        QSeries<Rational> odd = two_term(order, 8 * j - 4, Rational(sign));
        s = s * odd * odd;
        if (8 * j < order) s = s * two_term(order, 8 * j, Rational(-1));
    }
    return s;
}

inline QSeries<Rational> theta2_series(int order) {
    QSeries<Rational> s = QSeries<Rational>::one(order);
    for (int j = 1; 8 * j < order; ++j) {
        QSeries<Rational> even = two_term(order, 8 * j, Rational(1));
        s = s * even * even * two_term(order, 8 * j, Rational(-1));
    }
    return QSeries<Rational>::monomial(Rational(2), 1, order) * s;
}

}  // namespace detail

inline QSeries<Rational> form_series(FormName name, int order) {
    if (order < 1) throw std::invalid_argument("forms: order must be >= 1");
    switch (name) {
        case FormName::Theta2:
            return detail::theta2_series(order);
        case FormName::Theta3:
            return detail::theta_product(order, +1);
        case FormName::Theta4:
            return detail::theta_product(order, -1);
        case FormName::E4: {
            QSeries<Rational> t2 = form_series(FormName::Theta2, order);
            QSeries<Rational> t3 = form_series(FormName::Theta3, order);
            QSeries<Rational> t4 = form_series(FormName::Theta4, order);
            return (t2.pow(8) + t3.pow(8) + t4.pow(8)).scaled(Rational(1, 2));
        }
        case FormName::Delta: {
            QSeries<Rational> t2 = form_series(FormName::Theta2, order);
            QSeries<Rational> t3 = form_series(FormName::Theta3, order);
            QSeries<Rational> t4 = form_series(FormName::Theta4, order);
            return (t2 * t3 * t4).pow(8).scaled(Rational(1, 256));
        }
        case FormName::Delta8: {
            QSeries<Rational> t2 = form_series(FormName::Theta2, order);
            QSeries<Rational> t4 = form_series(FormName::Theta4, order);
            return (t2 * t4).pow(4).scaled(Rational(1, 16));
        }
    }
    throw std::logic_error("forms: unreachable");
}

// Sum of cubes of divisors, by direct divisor enumeration. This is the
// independent route to E4's coefficients used by the identity suite.
inline Rational sigma3(long long n) {
    if (n < 1) throw std::invalid_argument("forms: sigma3 of non-positive integer");
    Rational acc;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        long long e = n / d;
        acc += Rational(d).pow(3);
        if (e != d) acc += Rational(e).pow(3);
    }
    return acc;
}

struct IdentityCheck {
    std::string name;
    bool pass = false;
    // Smallest failing u-exponent, or -1 when the identity holds.
    int first_fail_exponent = -1;
};

struct IdentityReport {
    int order = 0;
    std::vector<IdentityCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

inline IdentityCheck compare_series(const std::string& name, const QSeries<Rational>& a,
                                    const QSeries<Rational>& b) {
    QSeries<Rational> diff = a - b;
    IdentityCheck c;
    c.name = name;
    c.pass = diff.is_zero();
    c.first_fail_exponent = c.pass ? -1 : diff.valuation();
    return c;
}

}  // namespace detail

// Identity suite over caller-supplied series, so corrupted inputs can be
// exercised directly.
inline IdentityReport check_identities_on(const QSeries<Rational>& t2,
                                          const QSeries<Rational>& t3,
                                          const QSeries<Rational>& t4,
                                          const QSeries<Rational>& e4,
                                          const QSeries<Rational>& delta,
                                          const QSeries<Rational>& delta8) {
    const int order = std::min({t2.order(), t3.order(), t4.order(), e4.order(),
                                delta.order(), delta8.order()});
    IdentityReport rep;
    rep.order = order;

    rep.checks.push_back(
        detail::compare_series("jacobi_quartic", t3.pow(4), t2.pow(4) + t4.pow(4)));
    rep.checks.push_back(detail::compare_series(
        "e4_theta_average", e4,
        (t2.pow(8) + t3.pow(8) + t4.pow(8)).scaled(Rational(1, 2))));
    rep.checks.push_back(detail::compare_series(
        "delta_theta_product", delta, (t2 * t3 * t4).pow(8).scaled(Rational(1, 256))));
    rep.checks.push_back(detail::compare_series("delta8_excess", delta8.scaled(Rational(16)),
                                                t3.pow(8) - e4));

    QSeries<Rational> sigma_form = QSeries<Rational>::one(order);
    for (int n = 1; 8 * n < order; ++n)
        sigma_form.set(8 * n, Rational(240) * sigma3(n));
    rep.checks.push_back(detail::compare_series("e4_sigma3", e4, sigma_form));

    return rep;
}

inline IdentityReport check_identities(int order) {
    if (order < 8) throw std::invalid_argument("forms: identity check needs order >= 8");
    return check_identities_on(form_series(FormName::Theta2, order),
                               form_series(FormName::Theta3, order),
                               form_series(FormName::Theta4, order),
                               form_series(FormName::E4, order),
                               form_series(FormName::Delta, order),
                               form_series(FormName::Delta8, order));
}

// q^{2j+2i}-coefficient of E4^h * Delta^j. The expansion starts at q^{2j},
// so index i counts steps of q^2 past the leading term.
inline Rational basis_coeff(int h, int j, int i) {
    if (h < 0 || j < 0 || i < 1)
        throw std::invalid_argument("forms: basis_coeff requires h,j >= 0 and i >= 1");
    const int order = 8 * (i + j) + 4;
    QSeries<Rational> s = form_series(FormName::E4, order).pow(h) *
                          form_series(FormName::Delta, order).pow(j);
    return s.coeff(8 * (i + j));
}

}  // namespace unitheta

#endif  // UNITHETA_FORMS_HPP

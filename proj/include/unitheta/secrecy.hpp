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
#ifndef UNITHETA_SECRECY_HPP
#define UNITHETA_SECRECY_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "unitheta/lattice.hpp"
#include "unitheta/polynomial.hpp"
#include "unitheta/rational.hpp"
#include "unitheta/roots.hpp"

namespace unitheta {

// Outcome of the minimum-location check for the inverse secrecy polynomial
// D on (0, 1/4]:
//   HoldsAtQuarter - D > D(1/4) on the open interval; minimum at z = 1/4.
//   Tie            - the minimum value D(1/4) is also attained inside.
//   InteriorMinimum- D dips strictly below D(1/4) inside the interval.
enum class Verdict { HoldsAtQuarter, Tie, InteriorMinimum };

inline const char* verdict_string(Verdict v) {
    switch (v) {
        case Verdict::HoldsAtQuarter: return "holds_at_quarter";
        case Verdict::Tie: return "tie";
        case Verdict::InteriorMinimum: return "interior_minimum";
    }
    throw std::logic_error("secrecy: unreachable");
}

struct SecrecyCertificate {
    Poly d;                       // inverse secrecy polynomial in z
    Rational value_at_quarter;    // D(1/4)
    Verdict verdict = Verdict::HoldsAtQuarter;
    std::vector<IsolatingInterval> interior_critical_intervals;
    std::optional<Rational> gain;  // 1/D(1/4) when the minimum sits at 1/4
    std::pair<Rational, Rational> gain_bracket;  // encloses 1/min D
};

// D(z) for an even lattice:
// sum_j (b_j / 256^j) * (1-z)^{3(m-j)+k} * z^{2j}, b_0 = 1.
inline Poly inverse_secrecy_poly(const EvenLatticeTheta& lat) {
    Poly one_minus_z = Poly::from_coeffs({Rational(1), Rational(-1)}, Var::Z);
    Poly z = Poly::monomial(Rational(1), 1, Var::Z);
    Poly d(Var::Z);
    for (int j = 0; j <= static_cast<int>(lat.b.size()); ++j) {
        Rational bj = j == 0 ? Rational(1) : lat.b[j - 1];
        Poly term = one_minus_z.pow(3 * (lat.m - j) + lat.k) * z.pow(2 * j);
        d += term * (bj / Rational(256).pow(j));
    }
    return d;
}

// D(z) for a general lattice: sum_r (a_r / 16^r) z^r.
inline Poly inverse_secrecy_poly(const GeneralLatticeTheta& lat) {
    std::vector<Rational> coeffs;
    for (std::size_t r = 0; r < lat.a.size(); ++r)
        coeffs.push_back(lat.a[r] / Rational(16).pow(r));
    return Poly::from_coeffs(coeffs, Var::Z);
}

namespace detail {

inline const Rational& quarter() {
    static const Rational q(1, 4);
    return q;
}

// Isolating intervals for the roots of p strictly inside (0, 1/4). The
// half-open isolation includes a root at 1/4; that interval is dropped.
inline std::vector<IsolatingInterval> isolate_interior(const Poly& p) {
    std::vector<IsolatingInterval> iv;
    if (p.is_zero() || p.degree() < 1) return iv;
    if (sturm_count(p, Rational(0), quarter()) == 0) return iv;
    iv = isolate_roots(p, Rational(0), quarter());
    if (!iv.empty() && iv.back().hi == quarter() && p.eval(quarter()).is_zero())
        iv.pop_back();
    return iv;
}

// A point in (0, 1/4) that is provably not a root of p, given p's interior
// isolating intervals: the left endpoint of the first interval, pushed
// strictly above zero by refinement if needed.
inline Rational off_root_sample(const Poly& p, std::vector<IsolatingInterval> iv) {
    if (iv.empty()) return Rational(1, 1024);
    while (!(iv.front().lo > Rational(0)))
        iv.front() = refine_interval(p, iv.front(),
                                     (iv.front().hi - iv.front().lo) * Rational(1, 2));
    return iv.front().lo;
}

}  // namespace detail

// Locates the minimum of D on (0, 1/4] by comparing against the endpoint
// value: the verdict is decided by the roots of g = D - D(1/4) inside the
// open interval, with one exact sample fixing the sign of g off its roots.
// The gain bracket always enclosed 1/min D; for non-endpoint verdicts it
// is produced by interval refinement around the critical points of D,
// with the endpoint values D(0) = 1 and D(1/4) as additional candidates.
inline SecrecyCertificate certify_inverse_poly(const Poly& d,
                                               const Rational& bracket_width = pow2(-40)) {
    if (d.var() != Var::Z && !d.is_zero())
        throw std::invalid_argument("secrecy: inverse polynomial must be in z");
    if (bracket_width.sign() <= 0)
        throw std::invalid_argument("secrecy: bracket width must be positive");

    SecrecyCertificate cert;
    cert.d = d;
    cert.value_at_quarter = d.eval(detail::quarter());
    const Rational& v = cert.value_at_quarter;

    Poly g = d - Poly::constant(v, Var::Z);

    if (g.is_zero()) {
        // Constant D: the minimum value is attained everywhere, including
        // the interior, so this is a tie.
        if (v.sign() <= 0)
            throw std::domain_error(
                "secrecy: non-positive value at z = 1/4 cannot come from a lattice");
        cert.verdict = Verdict::Tie;
        cert.gain = v.inverse();
        cert.gain_bracket = {*cert.gain, *cert.gain};
        return cert;
    }

    std::vector<IsolatingInterval> g_interior = detail::isolate_interior(g);

    if (g_interior.empty()) {
        Rational sample = g.eval(Rational(1, 1024));
        if (sample.sign() > 0) {
            if (v.sign() <= 0)
                throw std::domain_error(
                "secrecy: non-positive value at z = 1/4 cannot come from a lattice");
            cert.verdict = Verdict::HoldsAtQuarter;
            cert.gain = v.inverse();
            cert.gain_bracket = {*cert.gain, *cert.gain};
            return cert;
        }
        cert.verdict = Verdict::InteriorMinimum;
    } else {
        bool all_even = true;
        for (const auto& iv : g_interior)
            if (iv.multiplicity % 2 != 0) all_even = false;
        Rational sample = g.eval(detail::off_root_sample(g, g_interior));
        if (all_even && sample.sign() > 0) {
            // g >= 0 with interior touch points: minimum value D(1/4) is
            // shared with interior minimizers.
            if (v.sign() <= 0)
                throw std::domain_error(
                "secrecy: non-positive value at z = 1/4 cannot come from a lattice");
            cert.verdict = Verdict::Tie;
            cert.gain = v.inverse();
            cert.gain_bracket = {*cert.gain, *cert.gain};
            cert.interior_critical_intervals = detail::isolate_interior(d.derivative());
            return cert;
        }
        cert.verdict = Verdict::InteriorMinimum;
    }

    // Interior minimum: bracket min D over the closure [0, 1/4] from the
    // critical points plus both endpoint values, then refine until the
    // reciprocal bracket is tight enough.
    cert.interior_critical_intervals = detail::isolate_interior(d.derivative());
    Rational width = detail::quarter();
    for (int round = 0; round < 256; ++round) {
        Rational lo_min = v < Rational(1) ? v : Rational(1);
        Rational hi_min = lo_min;
        for (auto& iv : cert.interior_critical_intervals) {
            iv = refine_interval(d.derivative(), iv, width);
            auto [plo, phi] = interval_eval(d, iv.lo, iv.hi);
            if (plo < lo_min) lo_min = plo;
            if (phi < hi_min) hi_min = phi;
        }
        if (hi_min.sign() <= 0)
            throw std::domain_error("secrecy: non-positive minimum cannot come from a lattice");
        if (lo_min.sign() > 0) {
            Rational glo = hi_min.inverse();
            Rational ghi = lo_min.inverse();
            if (ghi - glo <= bracket_width) {
                cert.gain_bracket = {glo, ghi};
                return cert;
            }
        }
        width = width * Rational(1, 2);
    }
    throw std::domain_error("secrecy: gain bracket did not converge");
}

inline SecrecyCertificate certify_gain(const EvenLatticeTheta& lat,
                                       const Rational& bracket_width = pow2(-40)) {
    return certify_inverse_poly(inverse_secrecy_poly(lat), bracket_width);
}

inline SecrecyCertificate certify_gain(const GeneralLatticeTheta& lat,
                                       const Rational& bracket_width = pow2(-40)) {
    return certify_inverse_poly(inverse_secrecy_poly(lat), bracket_width);
}

namespace detail {

inline Rational value_at_quarter_checked(const Poly& d) {
    Rational v = d.eval(quarter());
    if (v.sign() <= 0)
        throw std::domain_error(
            "secrecy: D(1/4) = " + v.to_string() +
            " is not positive; the series cannot come from a lattice");
    return v;
}

}  // namespace detail

// 1/D(1/4): the secrecy gain under the endpoint-minimum conjecture, with
// no certification of the minimum's location.
inline Rational gain_at_one(const EvenLatticeTheta& lat) {
    return detail::value_at_quarter_checked(inverse_secrecy_poly(lat)).inverse();
}

inline Rational gain_at_one(const GeneralLatticeTheta& lat) {
    return detail::value_at_quarter_checked(inverse_secrecy_poly(lat)).inverse();
}

namespace detail {

inline Rational even_value_at_quarter_from_top_count(int m, int k, const Rational& kappa) {
    ShortVectorCounts counts;
    counts.counts.assign(m, Rational());
    counts.counts.back() = kappa;
    EvenLatticeTheta lat = even_from_counts(24 * m + 8 * k, counts);
    return inverse_secrecy_poly(lat).eval(quarter());
}

}  // namespace detail

// Difference of inverse gains, D_A(1/4) - D_B(1/4), for two even lattices
// of dimension 24m+8k that differ only in the norm-2m count:
// (kappa - kappa') * 3^k / 4^{6m+k}. The closed form is recomputed from
// the triangular solve and must agree exactly.
inline Rational inverse_gain_difference_even(int m, int k, const Rational& kappa,
                                             const Rational& kappa_prime) {
    if (m < 1) throw std::invalid_argument("secrecy: m must be >= 1");
    if (k < 0 || k > 2) throw std::invalid_argument("secrecy: k must be in {0,1,2}");
    Rational closed =
        (kappa - kappa_prime) * Rational(3).pow(k) / Rational(4).pow(6 * m + k);
    Rational direct = detail::even_value_at_quarter_from_top_count(m, k, kappa) -
                      detail::even_value_at_quarter_from_top_count(m, k, kappa_prime);
    if (closed != direct)
        throw std::logic_error("secrecy: closed-form difference " + closed.to_string() +
                               " disagrees with direct evaluation " + direct.to_string());
    return closed;
}

namespace detail {

inline Rational even_value_at_quarter_from_two_counts(int m, int k, const Rational& kprev,
                                                      const Rational& ktop) {
    ShortVectorCounts counts;
    counts.counts.assign(m, Rational());
    counts.counts[m - 2] = kprev;
    counts.counts[m - 1] = ktop;
    EvenLatticeTheta lat = even_from_counts(24 * m + 8 * k, counts);
    return inverse_secrecy_poly(lat).eval(quarter());
}

}  // namespace detail

// For even lattices differing in the counts at norms 2m-2 and 2m, decides
// whether the first has the larger gain via the linear comparison
// kappa_2m - kappa'_2m < (kappa_{2m-2} - kappa'_{2m-2})(240k - 24(m-1) - 1728),
// cross-checked against the direct D(1/4) comparison. The published
// multiplier is kept verbatim; count differences in the band where it
// disagrees with the exact comparison raise logic_error naming the
// multiplier the triangular solve implies.
inline bool gain_improves_even(int m, int k, const Rational& kappa_prev,
                               const Rational& kappa_top, const Rational& kappa_prev_prime,
                               const Rational& kappa_top_prime) {
    if (m < 2)
        throw std::invalid_argument(
            "secrecy: comparison needs m >= 2 (norm 2m-2 must be a real vector norm)");
    if (k < 0 || k > 2) throw std::invalid_argument("secrecy: k must be in {0,1,2}");
    Rational multiplier = Rational(240) * k - Rational(24) * (m - 1) - Rational(1728);
    bool linear = (kappa_top - kappa_top_prime) <
                  (kappa_prev - kappa_prev_prime) * multiplier;
    Rational va = detail::even_value_at_quarter_from_two_counts(m, k, kappa_prev, kappa_top);
    Rational vb = detail::even_value_at_quarter_from_two_counts(m, k, kappa_prev_prime,
                                                                kappa_top_prime);
    bool direct = va < vb;
    if (linear != direct) {
        // Measure the slope the triangular solve actually implies, so the
        // failure names the multiplier that would have agreed.
        Rational base = detail::even_value_at_quarter_from_two_counts(m, k, Rational(0),
                                                                      Rational(0));
        Rational c_prev =
            detail::even_value_at_quarter_from_two_counts(m, k, Rational(1), Rational(0)) -
            base;
        Rational c_top =
            detail::even_value_at_quarter_from_two_counts(m, k, Rational(0), Rational(1)) -
            base;
        Rational implied = -(c_prev / c_top);
        throw std::logic_error(
            "secrecy: linear comparison with multiplier " + multiplier.to_string() +
            " disagrees with the direct D(1/4) comparison; the triangular solve implies "
            "multiplier " + implied.to_string());
    }
    return linear;
}

// Difference of inverse gains for general lattices of dimension n
// differing only in the norm-mu count: (h - h') / 4^{3 mu}. Cross-checked
// against the triangular solve.
inline Rational inverse_gain_difference_general(int n, const Rational& h,
                                                const Rational& h_prime) {
    if (n < 8) throw std::invalid_argument("secrecy: dimension must be >= 8");
    const int mu = n / 8;
    Rational closed = (h - h_prime) / Rational(4).pow(3 * mu);
    auto value = [&](const Rational& top) {
        ShortVectorCounts counts;
        counts.counts.assign(mu, Rational());
        counts.counts.back() = top;
        return inverse_secrecy_poly(general_from_counts(n, counts)).eval(detail::quarter());
    };
    Rational direct = value(h) - value(h_prime);
    if (closed != direct)
        throw std::logic_error("secrecy: closed-form difference " + closed.to_string() +
                               " disagrees with direct evaluation " + direct.to_string());
    return closed;
}

// Closed-form gain 1/(1 - 2n/2^6 + (2n(n-23) + K)/2^12) for unimodular
// lattices in dimensions 16..23 with minimum 2 and kissing number K,
// cross-checked through the triangular-solve pipeline.
inline Rational closed_form_gain_16_23(int n, long long kissing) {
    if (n < 16 || n > 23)
        throw std::invalid_argument("secrecy: closed form covers dimensions 16..23 only");
    Rational denom = Rational(1) - Rational(2 * n, 64) +
                     (Rational(2 * n * (n - 23)) + Rational(kissing)) / Rational(4096);
    if (denom.sign() <= 0)
        throw std::domain_error("secrecy: non-positive inverse gain in closed form");
    Rational closed = denom.inverse();
    ShortVectorCounts counts;
    counts.counts = {Rational(0), Rational(kissing)};
    Rational direct = gain_at_one(general_from_counts(n, counts));
    if (closed != direct)
        throw std::logic_error("secrecy: closed-form gain " + closed.to_string() +
                               " disagrees with pipeline value " + direct.to_string());
    return closed;
}

}  // namespace unitheta

#endif  // UNITHETA_SECRECY_HPP

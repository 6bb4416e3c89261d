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
#ifndef UNITHETA_LATTICE_HPP
#define UNITHETA_LATTICE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "unitheta/forms.hpp"
#include "unitheta/qseries.hpp"
#include "unitheta/rational.hpp"

namespace unitheta {

// Vector counts by ascending norm: norms 2, 4, ..., 2m for even lattices,
// norms 1, ..., mu for general ones. Formal (non-integral, negative)
// entries are allowed at this layer; realizability is a separate
// validation step.
struct ShortVectorCounts {
    std::vector<Rational> counts;
};

// Theta series of an even unimodular lattice of dimension n = 24m + 8k on
// the E4/Delta basis: E4^{3m+k} + sum_j b_j E4^{3(m-j)+k} Delta^j.
struct EvenLatticeTheta {
    int m = 0;
    int k = 0;
    std::vector<Rational> b;  // b_1 .. b_m

    int dimension() const { return 24 * m + 8 * k; }
};

// Theta series of a unimodular lattice of dimension n on the
// theta3/Delta8 basis: sum_r a_r theta3^{n-8r} Delta8^r, a_0 = 1.
struct GeneralLatticeTheta {
    int n = 0;
    std::vector<Rational> a;  // a_0 .. a_mu

    int mu() const { return n / 8; }
};

inline int default_expansion_order(const EvenLatticeTheta& lat) {
    return 4 * (2 * lat.m + 4);
}

inline int default_expansion_order(const GeneralLatticeTheta& lat) {
    return 4 * (lat.mu() + 4);
}

inline QSeries<Rational> theta_expansion(const EvenLatticeTheta& lat, int order) {
    QSeries<Rational> e4 = form_series(FormName::E4, order);
    QSeries<Rational> delta = form_series(FormName::Delta, order);
    QSeries<Rational> sum = e4.pow(3 * lat.m + lat.k);
    QSeries<Rational> delta_pow = QSeries<Rational>::one(order);
    for (std::size_t j = 1; j <= lat.b.size(); ++j) {
        delta_pow = delta_pow * delta;
        sum = sum + (e4.pow(3 * (lat.m - static_cast<int>(j)) + lat.k) * delta_pow)
                        .scaled(lat.b[j - 1]);
    }
    return sum;
}

inline QSeries<Rational> theta_expansion(const GeneralLatticeTheta& lat, int order) {
    QSeries<Rational> t3 = form_series(FormName::Theta3, order);
    QSeries<Rational> d8 = form_series(FormName::Delta8, order);
    QSeries<Rational> sum(order);
    QSeries<Rational> d8_pow = QSeries<Rational>::one(order);
    for (std::size_t r = 0; r < lat.a.size(); ++r) {
        if (r > 0) d8_pow = d8_pow * d8;
        sum = sum + (t3.pow(lat.n - 8 * static_cast<int>(r)) * d8_pow).scaled(lat.a[r]);
    }
    return sum;
}

// Expansion on the theta3/E4 basis: sum_l lambda_l theta3^{n-8l} E4^l.
inline QSeries<Rational> theta_expansion_e4_basis(int n, const std::vector<Rational>& lambda,
                                                  int order) {
    QSeries<Rational> t3 = form_series(FormName::Theta3, order);
    QSeries<Rational> e4 = form_series(FormName::E4, order);
    QSeries<Rational> sum(order);
    QSeries<Rational> e4_pow = QSeries<Rational>::one(order);
    for (std::size_t l = 0; l < lambda.size(); ++l) {
        if (l > 0) e4_pow = e4_pow * e4;
        sum = sum + (t3.pow(n - 8 * static_cast<int>(l)) * e4_pow).scaled(lambda[l]);
    }
    return sum;
}

namespace detail {

// Forward triangular solve shared by both constructors. basis[j] must
// start with coefficient 1 at u-exponent stride*j; targets[j-1] is the
// required series coefficient at that exponent (j = 1..targets.size()).
inline std::vector<Rational> solve_unit_triangular(const std::vector<QSeries<Rational>>& basis,
                                                   const std::vector<Rational>& targets,
                                                   int stride) {
    std::vector<Rational> x{Rational(1)};
    for (std::size_t j = 1; j <= targets.size(); ++j) {
        Rational acc = targets[j - 1];
        for (std::size_t i = 0; i < j; ++i)
            acc -= x[i] * basis[i].coeff(stride * static_cast<int>(j));
        x.push_back(acc);
    }
    return x;
}

// Counts beyond the determined coefficients cannot be chosen freely; they
// must match the reconstructed expansion exactly.
template <typename Lattice>
inline void verify_extra_counts(const Lattice& lat, const std::vector<Rational>& counts,
                                std::size_t solved, int stride) {
    if (counts.size() <= solved) return;
    int order = stride * static_cast<int>(counts.size()) + stride;
    QSeries<Rational> theta = theta_expansion(lat, order);
    for (std::size_t j = solved; j < counts.size(); ++j) {
        Rational have = theta.coeff(stride * static_cast<int>(j + 1));
        if (have != counts[j])
            throw std::invalid_argument(
                "lattice: count at norm index " + std::to_string(j + 1) +
                " is determined to be " + have.to_string() + ", got " +
                counts[j].to_string());
    }
}

}  // namespace detail

// Solves for b_1..b_m from the counts at norms 2..2m. Short count vectors
// are zero-padded; surplus entries are cross-checked against the
// reconstruction and rejected on mismatch.
inline EvenLatticeTheta even_from_counts(int n, const ShortVectorCounts& counts) {
    if (n < 0 || n % 8 != 0)
        throw std::invalid_argument("lattice: even dimension must be a non-negative multiple of 8");
    const int t = n / 8;
    EvenLatticeTheta lat;
    lat.m = t / 3;
    lat.k = t % 3;

    const int order = 8 * lat.m + 8;
    QSeries<Rational> e4 = form_series(FormName::E4, order);
    QSeries<Rational> delta = form_series(FormName::Delta, order);
    std::vector<QSeries<Rational>> basis;
    QSeries<Rational> delta_pow = QSeries<Rational>::one(order);
    for (int j = 0; j <= lat.m; ++j) {
        if (j > 0) delta_pow = delta_pow * delta;
        basis.push_back(e4.pow(3 * (lat.m - j) + lat.k) * delta_pow);
    }

    std::vector<Rational> targets(counts.counts.begin(),
                                  counts.counts.begin() +
                                      std::min<std::size_t>(counts.counts.size(), lat.m));
    targets.resize(lat.m, Rational());

    std::vector<Rational> solved = detail::solve_unit_triangular(basis, targets, 8);
    lat.b.assign(solved.begin() + 1, solved.end());
    detail::verify_extra_counts(lat, counts.counts, lat.m, 8);
    return lat;
}

// Solves for a_0..a_mu from the counts at norms 1..mu, mu = floor(n/8).
inline GeneralLatticeTheta general_from_counts(int n, const ShortVectorCounts& counts) {
    if (n < 1) throw std::invalid_argument("lattice: dimension must be >= 1");
    GeneralLatticeTheta lat;
    lat.n = n;
    const int mu = lat.mu();

    const int order = 4 * mu + 8;
    QSeries<Rational> t3 = form_series(FormName::Theta3, order);
    QSeries<Rational> d8 = form_series(FormName::Delta8, order);
    std::vector<QSeries<Rational>> basis;
    QSeries<Rational> d8_pow = QSeries<Rational>::one(order);
    for (int r = 0; r <= mu; ++r) {
        if (r > 0) d8_pow = d8_pow * d8;
        basis.push_back(t3.pow(n - 8 * r) * d8_pow);
    }

    std::vector<Rational> targets(counts.counts.begin(),
                                  counts.counts.begin() +
                                      std::min<std::size_t>(counts.counts.size(), mu));
    targets.resize(mu, Rational());

    lat.a = detail::solve_unit_triangular(basis, targets, 4);
    detail::verify_extra_counts(lat, counts.counts, mu, 4);
    return lat;
}

struct KissingData {
    int min_norm = 0;      // q-exponent of the first nonzero coefficient
    Rational count;
};

// Signals that an expansion prefix was all zero and a larger order is
// needed to read off kissing data.
class InsufficientOrder : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline KissingData kissing_from_series(const QSeries<Rational>& theta) {
    for (const auto& [e, c] : theta.terms()) {
        if (e == 0) continue;
        if (e % 4 != 0)
            throw std::logic_error("lattice: theta exponent off the q-grid");
        return {e / 4, c};
    }
    throw InsufficientOrder("lattice: all-zero prefix, increase order");
}

inline KissingData kissing_data(const EvenLatticeTheta& lat, int order) {
    return kissing_from_series(theta_expansion(lat, order));
}

inline KissingData kissing_data(const GeneralLatticeTheta& lat, int order) {
    return kissing_from_series(theta_expansion(lat, order));
}

// Change of basis theta3/Delta8 -> theta3/E4 via
// Delta8^r = ((theta3^8 - E4)/16)^r:
// lambda_l = (-1)^l sum_{r>=l} a_r * C(r,l) / 16^r.
inline std::vector<Rational> to_e4_basis(const GeneralLatticeTheta& lat) {
    const int mu = static_cast<int>(lat.a.size()) - 1;
    std::vector<Rational> lambda;
    for (int l = 0; l <= mu; ++l) {
        Rational acc;
        for (int r = l; r <= mu; ++r) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(r),
                         static_cast<unsigned long>(l));
            acc += lat.a[r] * Rational(binom) / Rational(16).pow(r);
        }
        if (l % 2 != 0) acc = -acc;
        lambda.push_back(acc);
    }
    return lambda;
}

struct ValidationIssue {
    int q_exponent = 0;
    std::string message;
};

struct ValidationReport {
    bool pass = true;
    std::vector<ValidationIssue> issues;
};

namespace detail {

inline void validate_common(const QSeries<Rational>& theta, bool even_only,
                            ValidationReport& rep) {
    if (theta.coeff(0) != Rational(1))
        rep.issues.push_back({0, "constant term is " + theta.coeff(0).to_string() +
                                     ", expected 1"});
    for (const auto& [e, c] : theta.terms()) {
        if (e == 0) continue;
        if (e % 4 != 0) {
            rep.issues.push_back({0, "exponent u^" + std::to_string(e) + " off the q-grid"});
            continue;
        }
        int q = e / 4;
        if (c.sign() < 0)
            rep.issues.push_back({q, "negative coefficient " + c.to_string()});
        if (!c.is_integer())
            rep.issues.push_back({q, "non-integral coefficient " + c.to_string()});
        if (even_only && q % 2 != 0)
            rep.issues.push_back({q, "odd-norm coefficient " + c.to_string() +
                                         " on an even lattice"});
    }
    rep.pass = rep.issues.empty();
}

}  // namespace detail

inline ValidationReport validate_lattice_series(const EvenLatticeTheta& lat, int order) {
    ValidationReport rep;
    detail::validate_common(theta_expansion(lat, order), true, rep);
    return rep;
}

inline ValidationReport validate_lattice_series(const GeneralLatticeTheta& lat, int order) {
    ValidationReport rep;
    detail::validate_common(theta_expansion(lat, order), false, rep);
    return rep;
}

}  // namespace unitheta

#endif  // UNITHETA_LATTICE_HPP

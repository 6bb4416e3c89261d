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
#ifndef UNITHETA_ROOTS_HPP
#define UNITHETA_ROOTS_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "unitheta/polynomial.hpp"
#include "unitheta/rational.hpp"

namespace unitheta {

// Open-below, closed-above interval (lo, hi] containing exactly one
// distinct real root of the polynomial it was produced for.
struct IsolatingInterval {
    Rational lo;
    Rational hi;
    int multiplicity = 1;
};

// Canonical Sturm chain. Remainders are scaled by their (positive) content
// only, so every sign in the chain matches the unscaled Euclidean chain.
inline std::vector<Poly> sturm_chain(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("roots: sturm chain of zero");
    std::vector<Poly> chain;
    chain.push_back(p.primitive_part());
    if (p.degree() == 0) return chain;
    Poly d = p.derivative();
    chain.push_back(d * d.content().inverse());
    while (chain.back().degree() > 0) {
        Poly r = -(chain[chain.size() - 2] % chain.back());
        if (r.is_zero()) break;
        chain.push_back(r * r.content().inverse());
    }
    return chain;
}

// Number of sign changes along the chain at x; zero values are skipped.
// With zeros skipped, the count at x equals the count just right of x, so
// differencing yields a half-open (a, b] root count even when an endpoint
// is itself a root.
inline int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
    int variations = 0;
    int prev = 0;
    for (const Poly& p : chain) {
        int s = p.eval(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

// Distinct real roots of p in (a, b]. The chain is built on the squarefree
// part: a repeated root at an endpoint would otherwise zero out the whole
// chain there and break the half-open semantics.
inline int sturm_count(const Poly& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw std::invalid_argument("roots: root count of zero polynomial");
    if (!(a < b)) throw std::invalid_argument("roots: empty interval");
    if (p.degree() == 0) return 0;
    std::vector<Poly> chain = sturm_chain(squarefree_part(p));
    return sign_variations(chain, a) - sign_variations(chain, b);
}

// Distinct real roots of p in the open interval (a, b).
inline int sturm_count_open(const Poly& p, const Rational& a, const Rational& b) {
    int n = sturm_count(p, a, b);
    if (p.eval(b).is_zero()) --n;
    return n;
}

namespace detail {

inline int multiplicity_in(const std::vector<Poly>& yun, const Rational& lo,
                           const Rational& hi) {
    for (std::size_t i = 0; i < yun.size(); ++i) {
        if (yun[i].degree() < 1) continue;
        if (sturm_count(yun[i], lo, hi) == 1) return static_cast<int>(i) + 1;
    }
    return 1;
}

}  // namespace detail

// Disjoint isolating intervals, in increasing order, for the distinct real
// roots of p in (a, b]. Multiplicities come from a squarefree
// decomposition of p.
inline std::vector<IsolatingInterval> isolate_roots(const Poly& p, const Rational& a,
                                                    const Rational& b) {
    if (p.is_zero()) throw std::invalid_argument("roots: isolate roots of zero polynomial");
    if (!(a < b)) throw std::invalid_argument("roots: empty interval");
    std::vector<IsolatingInterval> out;
    if (p.degree() == 0) return out;

    const Poly sf = squarefree_part(p);
    const std::vector<Poly> chain = sturm_chain(sf);
    const std::vector<Poly> yun = yun_decomposition(p);

    struct Segment {
        Rational lo, hi;
        int count;
    };
    std::vector<Segment> stack;
    {
        int total = sign_variations(chain, a) - sign_variations(chain, b);
        if (total > 0) stack.push_back({a, b, total});
    }
    while (!stack.empty()) {
        Segment s = stack.back();
        stack.pop_back();
        if (s.count == 1) {
            out.push_back({s.lo, s.hi, detail::multiplicity_in(yun, s.lo, s.hi)});
            continue;
        }
        Rational mid = (s.lo + s.hi) * Rational(1, 2);
        int left = sign_variations(chain, s.lo) - sign_variations(chain, mid);
        int right = s.count - left;
        // Push right first so output ends up sorted by position.
        if (right > 0) stack.push_back({mid, s.hi, right});
        if (left > 0) stack.push_back({s.lo, mid, left});
    }

    std::sort(out.begin(), out.end(),
              [](const IsolatingInterval& x, const IsolatingInterval& y) {
                  return x.lo < y.lo;
              });
    return out;
}

// Shrinks an isolating interval for p until hi - lo <= width, keeping the
// root inside (lo, hi].
inline IsolatingInterval refine_interval(const Poly& p, IsolatingInterval iv,
                                         const Rational& width) {
    if (width.sign() <= 0) throw std::invalid_argument("roots: non-positive width");
    const Poly sf = squarefree_part(p);
    const std::vector<Poly> chain = sturm_chain(sf);
    if (sign_variations(chain, iv.lo) - sign_variations(chain, iv.hi) != 1)
        throw std::invalid_argument("roots: interval does not isolate a root");
    while (iv.hi - iv.lo > width) {
        Rational mid = (iv.lo + iv.hi) * Rational(1, 2);
        if (sign_variations(chain, iv.lo) - sign_variations(chain, mid) == 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
    return iv;
}

// Interval-arithmetic Horner bound: returns [m, M] with
// m <= p(x) <= M for every x in [lo, hi].
inline std::pair<Rational, Rational> interval_eval(const Poly& p, const Rational& lo,
                                                   const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("roots: inverted interval");
    Rational rlo, rhi;
    for (int i = p.degree(); i >= 0; --i) {
        Rational p1 = rlo * lo, p2 = rlo * hi, p3 = rhi * lo, p4 = rhi * hi;
        Rational mn = p1, mx = p1;
        for (const Rational& v : {p2, p3, p4}) {
            if (v < mn) mn = v;
            if (v > mx) mx = v;
        }
        rlo = mn + p.coeff(i);
        rhi = mx + p.coeff(i);
    }
    return {rlo, rhi};
}

// Largest integer r in [lo, hi) with p(r) <= bound, found by bisection.
// Requires p(lo) <= bound < p(hi); the result satisfies
// p(r) <= bound < p(r + 1).
inline long long largest_satisfying_integer(const Poly& p, const Rational& bound,
                                            long long lo, long long hi) {
    if (lo >= hi) throw std::invalid_argument("roots: empty integer range");
    if (!(p.eval(Rational(lo)) <= bound))
        throw std::invalid_argument("roots: lower endpoint exceeds bound");
    if (!(p.eval(Rational(hi)) > bound))
        throw std::invalid_argument("roots: upper endpoint within bound");
    while (hi - lo > 1) {
        long long mid = lo + (hi - lo) / 2;
        if (p.eval(Rational(mid)) <= bound)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace unitheta

#endif  // UNITHETA_ROOTS_HPP

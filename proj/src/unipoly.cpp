/*
   Copyright 2026 The quartic authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "quartic/unipoly.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace quartic {

RootSet solve_quadratic(const UniPoly<Rational>& p) {
    if (p.is_zero()) throw std::invalid_argument("solve_quadratic: zero polynomial (every value is a root)");
    if (p.degree() > 2) throw std::invalid_argument("solve_quadratic: degree exceeds 2");
    if (p.degree() == 0) return NoRoot{};
    if (p.degree() == 1) return OneRational{-(p.coeff(0) / p.coeff(1))};

    const Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    const Rational disc = b * b - Rational(4) * a * c;
    const Rational two_a = Rational(2) * a;
    if (auto s = rat_is_square(disc)) {
        Rational r1 = (-b - *s) / two_a;
        Rational r2 = (-b + *s) / two_a;
        if (r2 < r1) std::swap(r1, r2);
        return TwoRational{r1, r2};
    }
    Rational im = Rational(1) / two_a;
    return ConjugatePair{QuadExtElem(-b / two_a, abs(im), disc)};
}

namespace {

// Deterministic enough for the sizes seen here: BPSW via GMP.
bool is_probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0; }

Integer pollard_rho(const Integer& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEu);
    while (true) {
        Integer x = rng.get_z_range(n - 2) + 1;
        Integer y = x;
        Integer c = rng.get_z_range(n - 1) + 1;
        Integer d(1);
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factorize(Integer n, std::map<Integer, unsigned>& out) {
    if (n <= 1) return;
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[Integer(static_cast<long>(p))] += 1;
            n /= static_cast<long>(p);
        }
        if (n == 1) return;
    }
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    Integer d = pollard_rho(n);
    factorize(d, out);
    factorize(n / d, out);
}

std::vector<Integer> divisors(const Integer& n) {
    std::map<Integer, unsigned> f;
    factorize(n, f);
    std::vector<Integer> div{Integer(1)};
    for (const auto& [p, e] : f) {
        std::size_t base = div.size();
        Integer pk(1);
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) div.push_back(div[i] * pk);
        }
    }
    return div;
}

} // namespace

std::vector<Rational> rational_roots(const UniPoly<Rational>& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");

    // Clear denominators and the content: same root set.
    Integer den_lcm(1);
    for (const auto& c : p.coeffs()) den_lcm = lcm(den_lcm, c.den());
    std::vector<Integer> ic;
    ic.reserve(p.coeffs().size());
    Integer content(0);
    for (const auto& c : p.coeffs()) {
        Integer v = c.num() * (den_lcm / c.den());
        content = gcd(content, v);
        ic.push_back(v);
    }
    if (content > 1)
        for (auto& v : ic) v /= content;

    std::set<Rational> roots;
    std::size_t first_nonzero = 0;
    while (ic[first_nonzero] == 0) ++first_nonzero;
    if (first_nonzero > 0) roots.insert(Rational(0));
    std::vector<Rational> deflated;
    for (std::size_t i = first_nonzero; i < ic.size(); ++i) deflated.emplace_back(ic[i]);
    UniPoly<Rational> q(std::move(deflated));

    if (q.degree() == 1) {
        roots.insert(-(q.coeff(0) / q.coeff(1)));
    } else if (q.degree() == 2) {
        RootSet rs = solve_quadratic(q);
        if (auto* two = std::get_if<TwoRational>(&rs)) {
            roots.insert(two->first);
            roots.insert(two->second);
        }
    } else if (q.degree() >= 3) {
        for (const Integer& dn : divisors(abs(Rational(q.coeff(0))).num()))
            for (const Integer& dl : divisors(abs(Rational(q.leading())).num())) {
                Rational cand(dn, dl);
                if (q.eval(cand).is_zero()) roots.insert(cand);
                if (q.eval(-cand).is_zero()) roots.insert(-cand);
            }
    }
    return {roots.begin(), roots.end()};
}

} // namespace quartic

#include "liecoh/polynomial.hpp"

#include <stdexcept>

namespace liecoh {

Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Rat poly_eval(const Poly& p, const Rat& x) {
    Rat acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly poly_derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    return poly_trim(std::move(d));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return poly_trim(std::move(out));
}

// Keeps signs intact: scales by a positive rational so coefficients become
// coprime integers. Sturm chains only care about signs, this tames growth.
static Poly make_primitive(Poly p) {
    p = poly_trim(std::move(p));
    if (p.empty()) return p;
    Int l = denominator_lcm(p);
    Int g = 0;
    for (auto& c : p) {
        c *= Rat(l);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    }
    if (g > 1)
        for (auto& c : p) c /= Rat(g);
    return p;
}

Poly poly_remainder(Poly num, const Poly& den) {
    num = poly_trim(std::move(num));
    Poly d = poly_trim(den);
    if (d.empty()) throw std::invalid_argument("poly_remainder: division by zero polynomial");
    const Rat lead = d.back();
    while (num.size() >= d.size()) {
        Rat f = num.back() / lead;
        std::size_t off = num.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) num[off + i] -= f * d[i];
        num = poly_trim(std::move(num));
        if (num.empty()) break;
    }
    return num;
}

Poly poly_quotient_exact(Poly num, const Poly& den) {
    num = poly_trim(std::move(num));
    Poly d = poly_trim(den);
    if (d.empty()) throw std::invalid_argument("poly_quotient_exact: division by zero polynomial");
    if (num.empty()) return {};
    if (num.size() < d.size()) throw std::logic_error("poly_quotient_exact: inexact division");
    Poly q(num.size() - d.size() + 1, Rat(0));
    const Rat lead = d.back();
    while (num.size() >= d.size()) {
        Rat f = num.back() / lead;
        q[num.size() - d.size()] = f;
        std::size_t off = num.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) num[off + i] -= f * d[i];
        num = poly_trim(std::move(num));
        if (num.empty()) break;
    }
    if (!num.empty()) throw std::logic_error("poly_quotient_exact: inexact division");
    return poly_trim(std::move(q));
}

Poly poly_gcd(Poly a, Poly b) {
    a = make_primitive(std::move(a));
    b = make_primitive(std::move(b));
    while (!b.empty()) {
        Poly r = make_primitive(poly_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    const Rat lead = a.back();
    for (auto& c : a) c /= lead;
    return a;
}

Poly squarefree_part(const Poly& p) {
    Poly q = poly_trim(p);
    if (poly_degree(q) <= 0) return q;
    Poly g = poly_gcd(q, poly_derivative(q));
    if (poly_degree(g) <= 0) return q;
    return poly_quotient_exact(q, g);
}

namespace {

int sign_at_plus_inf(const Poly& p) { return sgn(p.back()); }

int sign_at_minus_inf(const Poly& p) {
    int s = sgn(p.back());
    return (poly_degree(p) % 2 == 0) ? s : -s;
}

int variations(const std::vector<int>& signs) {
    int v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

int sturm_distinct_real_roots(const Poly& p) {
    Poly q = make_primitive(p);
    if (q.empty()) throw std::invalid_argument("sturm: zero polynomial");
    if (poly_degree(q) == 0) return 0;

    std::vector<Poly> chain{q, make_primitive(poly_derivative(q))};
    while (!chain.back().empty() && poly_degree(chain.back()) > 0) {
        Poly r = poly_remainder(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        chain.push_back(make_primitive(std::move(r)));
    }
    if (chain.back().empty()) chain.pop_back();

    std::vector<int> lo, hi;
    for (const auto& f : chain) {
        lo.push_back(sign_at_minus_inf(f));
        hi.push_back(sign_at_plus_inf(f));
    }
    return variations(lo) - variations(hi);
}

int real_root_count(const Poly& p) {
    Poly q = poly_trim(p);
    if (q.empty()) throw std::invalid_argument("real_root_count: zero polynomial");
    int total = 0;
    // Each multiplicity-m root of q appears with multiplicity m-1 in
    // gcd(q, q'), so recurse down the gcd chain.
    while (poly_degree(q) > 0) {
        Poly g = poly_gcd(q, poly_derivative(q));
        total += sturm_distinct_real_roots(poly_quotient_exact(q, g));
        q = std::move(g);
    }
    return total;
}

bool all_roots_real(const Poly& p) {
    Poly q = poly_trim(p);
    if (q.empty()) throw std::invalid_argument("all_roots_real: zero polynomial");
    if (poly_degree(q) <= 0) return true;
    Poly sf = squarefree_part(q);
    return sturm_distinct_real_roots(sf) == poly_degree(sf);
}

Poly characteristic_polynomial(const RatMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("characteristic_polynomial: matrix not square");
    const int n = m.rows();
    if (n == 0) return {Rat(1)};

    // Evaluate det(xI - M) at x = 0..n, then interpolate.
    std::vector<Rat> xs, ys;
    for (int t = 0; t <= n; ++t) {
        RatMatrix a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a.at(i, j) = (i == j ? Rat(t) : Rat(0)) - m.at(i, j);
        xs.push_back(Rat(t));
        ys.push_back(determinant(a));
    }

    Poly acc;
    for (int i = 0; i <= n; ++i) {
        Poly term{Rat(1)};
        Rat denom(1);
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            term = poly_mul(term, Poly{-xs[static_cast<std::size_t>(j)], Rat(1)});
            denom *= xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(j)];
        }
        Rat f = ys[static_cast<std::size_t>(i)] / denom;
        if (acc.size() < term.size()) acc.resize(term.size(), Rat(0));
        for (std::size_t k = 0; k < term.size(); ++k) acc[k] += f * term[k];
    }
    acc = poly_trim(std::move(acc));
    if (poly_degree(acc) != n || acc.back() != 1)
        throw std::logic_error("characteristic_polynomial: interpolation is not monic degree n");
    return acc;
}

}  // namespace liecoh

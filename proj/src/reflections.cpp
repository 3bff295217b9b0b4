#include "eislat/reflections.hpp"

#include <algorithm>
#include <set>

namespace eislat {

bool is_root(const Form& f, const EVec& r) { return f.raw(r, r) == Eint(-3 * f.den); }

EVec reflect(const Form& f, const EVec& r, const Eint& mu, const EVec& v) {
    Eint rr = f.raw(r, r);
    if (rr != Eint(-3 * f.den)) throw std::invalid_argument("reflect: not a root");
    if (unit_index(mu) < 0) throw std::invalid_argument("reflect: mu is not a unit");
    Eint c = (Eint(1) - mu) * f.raw(r, v);
    if (c.is_zero()) return v;
    auto q = exact_div(c, rr);
    if (!q) throw std::domain_error("reflect: image is not integral");
    EVec out = v;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!r[i].is_zero()) out[i] -= r[i] * *q;
    return out;
}

RMat reflection_matrix(const Form& f, const EVec& r, const Eint& mu) {
    Eint rr = f.raw(r, r);
    if (rr != Eint(-3 * f.den)) throw std::invalid_argument("reflection_matrix: not a root");
    if (unit_index(mu) < 0) throw std::invalid_argument("reflection_matrix: mu is not a unit");
    std::size_t n = f.dim;
    RMat m = RMat::identity(n);
    Erat inv = inverse(to_rat(rr));
    for (std::size_t j = 0; j < n; ++j) {
        EVec e(n, Eint(0));
        e[j] = Eint(1);
        Erat q = to_rat((Eint(1) - mu) * f.raw(r, e)) * inv;
        if (q.is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i)
            if (!r[i].is_zero()) m(i, j) -= to_rat(r[i]) * q;
    }
    return m;
}

Eint eis_gcd(Eint x, Eint y) {
    while (!y.is_zero()) {
        Eint t = x * y.conj();
        Int n = y.norm();
        auto rnd = [&](const Int& v) {
            Int r, num = 2 * v + n, den = 2 * n;
            mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            return r;
        };
        Eint q(rnd(t.a), rnd(t.b));
        Eint r = x - q * y;
        x = y;
        y = r;
    }
    return x;
}

bool is_primitive(const EVec& v) {
    Eint g(0);
    for (const auto& x : v) g = eis_gcd(g, x);
    return g.norm() == 1;
}

bool is_primitive_in(const EVec& v, const std::function<bool(const EVec&)>& contains) {
    Eint g(0);
    for (const auto& x : v) g = eis_gcd(g, x);
    if (g.is_zero()) return false;
    long n = g.norm().get_si();
    // every non-unit divisor d of g has 1 < N(d) <= N(g); |a|, |b| <= 2 sqrt(N/3)
    long r = 1;
    while (3 * r * r <= 4 * n) ++r;
    for (long a = -r; a <= r; ++a)
        for (long b = -r; b <= r; ++b) {
            Eint d{Int(a), Int(b)};
            if (d.norm() <= 1 || d.norm() > n || !divides(d, g)) continue;
            EVec y;
            for (const auto& x : v) y.push_back(*exact_div(x, d));
            if (contains(y)) return false;
        }
    return true;
}

bool adjacent(const Form& f, const EVec& a, const EVec& b) {
    return f.raw(a, b).norm() == Int(3 * f.den * f.den);
}

bool braid_check(const Form& f, const EVec& a, const EVec& b) {
    RMat x = reflection_matrix(f, a, Eint::w()), y = reflection_matrix(f, b, Eint::w());
    return x * y * x == y * x * y;
}

bool commute_check(const Form& f, const EVec& a, const EVec& b) {
    RMat x = reflection_matrix(f, a, Eint::w()), y = reflection_matrix(f, b, Eint::w());
    return x * y == y * x;
}

bool lex_less(const EVec& x, const EVec& y) {
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        auto c = canon_cmp(x[i], y[i]);
        if (c != 0) return c < 0;
    }
    return x.size() < y.size();
}

EVec canonical(const EVec& r) {
    EVec best = r;
    for (const auto& u : units()) {
        EVec c = scale(u, r);
        if (lex_less(c, best)) best = std::move(c);
    }
    return best;
}

std::optional<Eint> unit_ratio(const EVec& v, const EVec& w) {
    for (const auto& u : units())
        if (scale(u, w) == v) return u;
    return std::nullopt;
}

RadicalResult radical_closure(const Form& f, const std::vector<EVec>& phi, int budget, std::size_t max_size) {
    if (phi.empty()) throw std::invalid_argument("radical_closure: empty root set");
    auto cmp = [](const EVec& x, const EVec& y) { return lex_less(x, y); };
    std::set<EVec, decltype(cmp)> cur(cmp);
    for (const auto& r : phi) {
        if (!is_root(f, r)) throw std::invalid_argument("radical_closure: input is not a root");
        cur.insert(canonical(r));
    }
    RadicalResult res;
    for (int round = 0; round < budget; ++round) {
        std::vector<EVec> list(cur.begin(), cur.end());
        std::size_t before = cur.size();
        for (const auto& r : list)
            for (const auto& s : list)
                for (const Eint& mu : {Eint::w(), Eint::w2()}) {
                    cur.insert(canonical(reflect(f, r, mu, s)));
                    if (cur.size() >= max_size) {
                        res.capped = true;
                        goto done;
                    }
                }
        res.rounds = round + 1;
        if (cur.size() == before) {
            res.saturated = true;
            break;
        }
    }
done:
    res.roots.assign(cur.begin(), cur.end());
    return res;
}

bool connected(const Form& f, const std::vector<EVec>& roots) {
    if (roots.empty()) return true;
    std::vector<int> seen(roots.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (seen[j] || f.raw(roots[i], roots[j]).is_zero()) continue;
            seen[j] = 1;
            ++count;
            stack.push_back(j);
        }
    }
    return count == roots.size();
}

}  // namespace eislat

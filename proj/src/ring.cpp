#include "eislat/ring.hpp"

#include <cmath>
#include <sstream>

namespace eislat {

bool is_integral(const Erat& x) {
    return x.a.get_den() == 1 && x.b.get_den() == 1;
}

Eint to_int(const Erat& x) {
    if (!is_integral(x)) throw std::domain_error("value is not an Eisenstein integer");
    return Eint(x.a.get_num(), x.b.get_num());
}

std::optional<Eint> exact_div(const Eint& x, const Eint& d) {
    if (d.is_zero()) throw std::invalid_argument("exact_div: zero divisor");
    Eint t = x * d.conj();
    Int n = d.norm();
    if (!mpz_divisible_p(t.a.get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(t.b.get_mpz_t(), n.get_mpz_t()))
        return std::nullopt;
    Eint q;
    mpz_divexact(q.a.get_mpz_t(), t.a.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(q.b.get_mpz_t(), t.b.get_mpz_t(), n.get_mpz_t());
    return q;
}

bool divides(const Eint& d, const Eint& x) {
    if (d.is_zero()) throw std::invalid_argument("divides: zero divisor");
    return exact_div(x, d).has_value();
}

Eint nearest(const cplx& z) {
    // coordinates in the basis (1, w), then test the surrounding cell
    double b = z.imag() / 0.8660254037844386;
    double a = z.real() + 0.5 * b;
    long a0 = static_cast<long>(std::floor(a)), b0 = static_cast<long>(std::floor(b));
    Eint best;
    double bd = 1e300;
    for (long da = 0; da <= 1; ++da)
        for (long db = 0; db <= 1; ++db) {
            Eint c(Int(a0 + da), Int(b0 + db));
            double d = std::norm(c.to_complex() - z);
            if (d < bd) { bd = d; best = c; }
        }
    return best;
}

int residue_theta(const Eint& x) {
    Int s = x.a + x.b;
    long r = mpz_fdiv_ui(s.get_mpz_t(), 3);
    return r == 2 ? -1 : static_cast<int>(r);
}

const std::array<Eint, 6>& units() {
    static const std::array<Eint, 6> u{Eint(1), Eint::w(), Eint::w2(), Eint(-1), -Eint::w(), -Eint::w2()};
    return u;
}

int unit_index(const Eint& u) {
    const auto& us = units();
    for (int i = 0; i < 6; ++i)
        if (us[i] == u) return i;
    return -1;
}

std::strong_ordering canon_cmp(const Eint& x, const Eint& y) {
    int c = cmp(x.norm(), y.norm());
    if (c == 0) c = cmp(x.a, y.a);
    if (c == 0) c = cmp(x.b, y.b);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string to_string(const Eint& x) { return x.a.get_str() + "," + x.b.get_str(); }

Eint parse_eint(const std::string& s) {
    auto k = s.find(',');
    if (k == std::string::npos) throw std::invalid_argument("bad Eisenstein entry '" + s + "'");
    try {
        return Eint(Int(s.substr(0, k)), Int(s.substr(k + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad Eisenstein entry '" + s + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const Eint& x) { return os << to_string(x); }
std::ostream& operator<<(std::ostream& os, const Erat& x) { return os << x.a.get_str() << "," << x.b.get_str(); }

int Sqrt3::sign() const {
    int sp = sgn(p), sq = sgn(q);
    if (sp >= 0 && sq >= 0) return (sp || sq) ? 1 : 0;
    if (sp <= 0 && sq <= 0) return -1;
    // opposite signs: compare p^2 with 3 q^2
    int c = cmp(Rat(p * p), Rat(3 * q * q));
    return sp > 0 ? c : -c;
}

Sqrt3 operator/(const Sqrt3& x, const Sqrt3& y) {
    Rat n = y.galois_norm();
    if (sgn(n) == 0) throw std::domain_error("division by zero in Q(sqrt3)");
    Sqrt3 t = x * y.conj();
    return Sqrt3(Rat(t.p / n), Rat(t.q / n));
}

std::strong_ordering sqrt3_cmp(const Sqrt3& x, const Sqrt3& y) { return x <=> y; }

std::string to_string(const Sqrt3& x) {
    std::ostringstream os;
    os << x.p.get_str();
    if (sgn(x.q) >= 0) os << "+";
    os << x.q.get_str() << "*sqrt3";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Sqrt3& x) { return os << to_string(x); }

std::string to_string(const Cint& x) {
    return "[" + x.c[0].get_str() + "," + x.c[1].get_str() + "," + x.c[2].get_str() + "," +
           x.c[3].get_str() + "]";
}

}  // namespace eislat

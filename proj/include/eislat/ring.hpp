// Exact arithmetic in Z[w], Z[zeta12] and Q(sqrt3).
#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace eislat {

using Int = mpz_class;
using Rat = mpq_class;
using cplx = std::complex<double>;

// a + b*w with w = exp(2 pi i / 3), so w^2 = -1 - w.
template <class T>
struct Eis {
    T a{0}, b{0};

    Eis() = default;
    Eis(long x) : a(x), b(0) {}
    Eis(T x, T y) : a(std::move(x)), b(std::move(y)) {}

    template <class U>
    explicit Eis(const Eis<U>& o) : a(o.a), b(o.b) {}

    static Eis w() { return Eis(T(0), T(1)); }
    static Eis w2() { return Eis(T(-1), T(-1)); }
    static Eis theta() { return Eis(T(1), T(2)); }

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    Eis conj() const { return Eis(T(a - b), T(-b)); }
    T norm() const { return T(a * a - a * b + b * b); }

    Eis& operator+=(const Eis& o) { a += o.a; b += o.b; return *this; }
    Eis& operator-=(const Eis& o) { a -= o.a; b -= o.b; return *this; }
    Eis& operator*=(const Eis& o) { return *this = *this * o; }

    friend Eis operator+(Eis x, const Eis& y) { return x += y; }
    friend Eis operator-(Eis x, const Eis& y) { return x -= y; }
    friend Eis operator-(const Eis& x) { return Eis(T(-x.a), T(-x.b)); }
    friend Eis operator*(const Eis& x, const Eis& y) {
        T bd = x.b * y.b;
        return Eis(T(x.a * y.a - bd), T(x.a * y.b + x.b * y.a - bd));
    }
    friend bool operator==(const Eis& x, const Eis& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Eis& x, const Eis& y) { return !(x == y); }

    cplx to_complex() const {
        return cplx(to_d(a) - 0.5 * to_d(b), 0.8660254037844386 * to_d(b));
    }

private:
    static double to_d(const mpz_class& x) { return x.get_d(); }
    static double to_d(const mpq_class& x) { return x.get_d(); }
};

using Eint = Eis<Int>;
using Erat = Eis<Rat>;

inline Erat inverse(const Erat& x) {
    if (x.is_zero()) throw std::domain_error("division by zero in Q(w)");
    Rat n = x.norm();
    Erat c = x.conj();
    return Erat(Rat(c.a / n), Rat(c.b / n));
}
inline Erat operator/(const Erat& x, const Erat& y) { return x * inverse(y); }

inline Erat to_rat(const Eint& x) { return Erat(Rat(x.a), Rat(x.b)); }
bool is_integral(const Erat& x);
Eint to_int(const Erat& x);  // throws if not integral

// Quotient x/d when it lies in Z[w].
std::optional<Eint> exact_div(const Eint& x, const Eint& d);
bool divides(const Eint& d, const Eint& x);  // throws on d = 0
Eint nearest(const cplx& z);                  // closest Eisenstein integer
// Residue of x modulo theta as an element of {-1, 0, 1}; w == 1 mod theta.
int residue_theta(const Eint& x);

// The six units, ordered 1, w, w^2, -1, -w, -w^2.
const std::array<Eint, 6>& units();
int unit_index(const Eint& u);  // -1 if not a unit
// Canonical total order on Z[w]: norm, then a, then b.
std::strong_ordering canon_cmp(const Eint& x, const Eint& y);

std::string to_string(const Eint& x);  // "a,b"
Eint parse_eint(const std::string& s);
std::ostream& operator<<(std::ostream& os, const Eint& x);
std::ostream& operator<<(std::ostream& os, const Erat& x);

// p + q sqrt3, exact total order.
struct Sqrt3 {
    Rat p{0}, q{0};
    Sqrt3() = default;
    Sqrt3(long x) : p(x), q(0) {}
    Sqrt3(Rat x, Rat y) : p(std::move(x)), q(std::move(y)) {}

    int sign() const;
    Sqrt3 conj() const { return Sqrt3(p, Rat(-q)); }  // sqrt3 -> -sqrt3
    Rat galois_norm() const { return Rat(p * p - 3 * q * q); }
    double to_double() const { return p.get_d() + q.get_d() * 1.7320508075688772; }

    Sqrt3& operator+=(const Sqrt3& o) { p += o.p; q += o.q; return *this; }
    Sqrt3& operator-=(const Sqrt3& o) { p -= o.p; q -= o.q; return *this; }
    friend Sqrt3 operator+(Sqrt3 x, const Sqrt3& y) { return x += y; }
    friend Sqrt3 operator-(Sqrt3 x, const Sqrt3& y) { return x -= y; }
    friend Sqrt3 operator-(const Sqrt3& x) { return Sqrt3(Rat(-x.p), Rat(-x.q)); }
    friend Sqrt3 operator*(const Sqrt3& x, const Sqrt3& y) {
        return Sqrt3(Rat(x.p * y.p + 3 * x.q * y.q), Rat(x.p * y.q + x.q * y.p));
    }
    friend Sqrt3 operator/(const Sqrt3& x, const Sqrt3& y);
    friend bool operator==(const Sqrt3& x, const Sqrt3& y) { return x.p == y.p && x.q == y.q; }
    friend std::strong_ordering operator<=>(const Sqrt3& x, const Sqrt3& y) {
        int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less
                     : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    static Sqrt3 root3() { return Sqrt3(Rat(0), Rat(1)); }
};

std::strong_ordering sqrt3_cmp(const Sqrt3& x, const Sqrt3& y);
std::string to_string(const Sqrt3& x);
std::ostream& operator<<(std::ostream& os, const Sqrt3& x);

// c0 + c1 z + c2 z^2 + c3 z^3 with z = exp(i pi / 6), reduced by z^4 = z^2 - 1.
template <class T>
struct Cyc {
    std::array<T, 4> c{T(0), T(0), T(0), T(0)};

    Cyc() = default;
    Cyc(long x) { c[0] = x; }
    Cyc(T c0, T c1, T c2, T c3) : c{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}
    // w = z^2 - 1
    explicit Cyc(const Eis<T>& e) : c{T(e.a - e.b), T(0), e.b, T(0)} {}

    static Cyc zeta() { return Cyc(T(0), T(1), T(0), T(0)); }
    static Cyc xi() { return Cyc(T(0), T(1), T(0), T(-1)); }     // exp(-i pi/6)
    static Cyc sqrt3() { return Cyc(T(0), T(2), T(0), T(-1)); }  // 2z - z^3

    bool is_zero() const { return sgn(c[0]) == 0 && sgn(c[1]) == 0 && sgn(c[2]) == 0 && sgn(c[3]) == 0; }
    Cyc conj() const { return Cyc(T(c[0] + c[2]), c[1], T(-c[2]), T(-c[1] - c[3])); }

    Cyc& operator+=(const Cyc& o) { for (int i = 0; i < 4; ++i) c[i] += o.c[i]; return *this; }
    Cyc& operator-=(const Cyc& o) { for (int i = 0; i < 4; ++i) c[i] -= o.c[i]; return *this; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
    friend Cyc operator+(Cyc x, const Cyc& y) { return x += y; }
    friend Cyc operator-(Cyc x, const Cyc& y) { return x -= y; }
    friend Cyc operator-(const Cyc& x) { return Cyc(T(-x.c[0]), T(-x.c[1]), T(-x.c[2]), T(-x.c[3])); }
    friend Cyc operator*(const Cyc& x, const Cyc& y) {
        std::array<T, 7> e{};
        for (int i = 0; i < 4; ++i) {
            if (sgn(x.c[i]) == 0) continue;
            for (int j = 0; j < 4; ++j) e[i + j] += x.c[i] * y.c[j];
        }
        // z^6 = -1, z^5 = z^3 - z, z^4 = z^2 - 1
        e[0] -= e[6];
        e[3] += e[5];
        e[1] -= e[5];
        e[2] += e[4];
        e[0] -= e[4];
        return Cyc(e[0], e[1], e[2], e[3]);
    }
    friend bool operator==(const Cyc& x, const Cyc& y) { return x.c == y.c; }
    friend bool operator!=(const Cyc& x, const Cyc& y) { return !(x == y); }

    bool is_real() const { return sgn(c[2]) == 0 && c[1] == -2 * c[3]; }
    // value as p + q sqrt3; requires is_real()
    Sqrt3 real_value() const {
        if (!is_real()) throw std::domain_error("cyclotomic value is not real");
        return Sqrt3(Rat(c[0]), Rat(-c[3]));
    }
    Sqrt3 norm() const { return (*this * conj()).real_value(); }

    cplx to_complex() const {
        const cplx z(0.8660254037844386, 0.5);
        return dbl(c[0]) + dbl(c[1]) * z + dbl(c[2]) * z * z + dbl(c[3]) * z * z * z;
    }

private:
    static double dbl(const mpz_class& x) { return x.get_d(); }
    static double dbl(const mpq_class& x) { return x.get_d(); }
};

using Cint = Cyc<Int>;
using Crat = Cyc<Rat>;

inline Cint embed(const Eint& e) { return Cint(e); }
std::string to_string(const Cint& x);

}  // namespace eislat

// Hermitian forms of the lattices in coordinates.
//
// A form is -(1/den) * sum conj(u_i) v_i over the definite coordinates, plus an
// optional hyperbolic cell H on the last two coordinates with
// <(a,b),(a',b')> = conj(a) conj(theta) b' + conj(b) theta a'.
// raw() returns den times the form so that everything stays in the ring.
#pragma once

#include "eislat/matrix.hpp"

#include <type_traits>

namespace eislat {

struct Form {
    std::size_t dim = 0;
    int den = 1;
    bool hyperbolic = false;

    std::size_t definite_dim() const { return hyperbolic ? dim - 2 : dim; }

    template <class T>
    T raw(const Vec<T>& u, const Vec<T>& v) const {
        if (u.size() != dim || v.size() != dim) throw std::invalid_argument("form: dimension mismatch");
        T s(0);
        std::size_t n = definite_dim();
        for (std::size_t i = 0; i < n; ++i)
            if (!u[i].is_zero() && !v[i].is_zero()) s -= u[i].conj() * v[i];
        if (hyperbolic) {
            T th = theta_as<T>();
            T h = u[n].conj() * th.conj() * v[n + 1] + u[n + 1].conj() * th * v[n];
            s += T(den) * h;
        }
        return s;
    }

    Erat ip(const EVec& u, const EVec& v) const {
        Eint r = raw(u, v);
        Erat z = to_rat(r);
        if (den != 1) {
            z.a /= den;
            z.b /= den;
        }
        return z;
    }
    Erat norm(const EVec& v) const { return ip(v, v); }

    // Gram matrix of the coordinate basis, as used by hermitian_ip.
    RMat gram() const;
    // Gram matrix of the given rows.
    RMat gram_of(const std::vector<EVec>& rows) const;
    // conj(M)^T G M == G
    bool preserved_by(const EMat& m) const;
    bool preserved_by(const RMat& m) const;

private:
    template <class T>
    static T theta_as() {
        if constexpr (std::is_same_v<T, Eint>) return Eint::theta();
        else return T(Eint::theta());
    }
};

Form form_3e8h();   // -I12 + H, coordinates of 3E8+H
Form form_lh();     // -(1/3) I12 + H, coordinates of Lambda+H
Form form_leech();  // -(1/3) I12
Form form_e8();     // -I4
Form form_h();      // H alone

}  // namespace eislat

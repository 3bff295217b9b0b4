#include "eislat/isomorphism.hpp"

#include "eislat/diagram.hpp"
#include "eislat/textio.hpp"

#include <stdexcept>

namespace eislat {

namespace {

RMat cols_of(const std::vector<EVec>& rows) {
    std::vector<Vec<Erat>> c;
    for (const auto& r : rows) c.push_back(to_rat(r));
    return RMat::from_cols(c);
}

std::optional<EVec> to_int_vec(const Vec<Erat>& v) {
    for (const auto& x : v)
        if (!is_integral(x)) return std::nullopt;
    return to_int(v);
}

}  // namespace

std::vector<EVec> e2_rows() {
    const auto& D = Diagram::get();
    const Eint w = Eint::w();
    std::vector<EVec> rows;
    for (int i = 1; i <= 3; ++i) {
        std::string k = std::to_string(i);
        rows.push_back(D.root("f" + k));
        rows.push_back(scale(w, D.root("e" + k)));
        rows.push_back(D.root("d" + k));
        rows.push_back(scale(w, D.root("c" + k)));
    }
    EVec n1(14, Eint(0)), n2(14, Eint(0));
    n1[13] = Eint(1);
    n2[12] = Eint(1);
    rows.push_back(n1);
    rows.push_back(n2);
    return rows;
}

std::vector<EVec> read_basis_file(const std::string& path) {
    auto rows = read_rows_file(path);
    if (rows.size() != 14 || rows[0].size() != 14) throw std::invalid_argument(path + ": expected a 14x14 matrix");
    return rows;
}

ChangeOfBasis verify_change_of_basis(const std::vector<EVec>& e1, const HermitianLattice& k1,
                                     const std::vector<EVec>& e2, const HermitianLattice& k2) {
    const Form &f1 = k1.form, &f2 = k2.form;
    if (e1.size() != f1.dim || e2.size() != f2.dim || f1.dim != f2.dim)
        throw std::invalid_argument("change of basis: dimension mismatch");
    for (const auto& r : e1)
        if (!k1.contains(r)) throw std::invalid_argument("change of basis: a row of E1 is outside " + k1.name);
    for (const auto& r : e2)
        if (!k2.contains(r)) throw std::invalid_argument("change of basis: a row of E2 is outside " + k2.name);
    if (f1.gram_of(e1) != f2.gram_of(e2)) throw std::invalid_argument("change of basis: Gram matrices differ");

    ChangeOfBasis out;
    out.report.add("rows_in_lattices", true);
    out.report.add("gram_equal", true);
    auto e1inv = inverse(cols_of(e1));
    if (!e1inv) throw std::invalid_argument("change of basis: E1 is singular");
    out.c = cols_of(e2) * *e1inv;
    out.c_inv = *inverse(out.c);

    // first route: the matrix between lattice bases and its inverse
    RMat b1 = cols_of(k1.basis), b2 = cols_of(k2.basis);
    auto cl = to_int(*inverse(b2) * out.c * b1);
    auto cli = to_int(*inverse(b1) * out.c_inv * b2);
    // second route: images of basis vectors by membership tests
    bool fwd = true, back = true;
    for (const auto& b : k1.basis) {
        auto v = to_int_vec(out.c * to_rat(b));
        fwd = fwd && v && k2.contains(*v);
    }
    for (const auto& b : k2.basis) {
        auto v = to_int_vec(out.c_inv * to_rat(b));
        back = back && v && k1.contains(*v);
    }
    out.report.add("C_integral", cl.has_value() && fwd);
    out.report.add("C_inverse_integral", cli.has_value() && back);
    if (!cl || !cli || !fwd || !back) throw std::domain_error("change of basis: C does not map " + k1.name + " onto " + k2.name);
    out.c_lattice = *cl;
    out.c_lattice_inv = *cli;
    // conj(C)^T G2 C = G1
    out.report.add("C_form_preserving", out.c.adjoint() * f2.gram() * out.c == f1.gram());
    bool maps = true;
    for (std::size_t k = 0; k < e1.size(); ++k) maps = maps && out.c * to_rat(e1[k]) == to_rat(e2[k]);
    out.report.add("C_maps_rows", maps);
    return out;
}

ChangeOfBasis verify_change_of_basis(const std::vector<EVec>& e1, const std::vector<EVec>& e2) {
    return verify_change_of_basis(e1, lh_lattice(), e2, e8h_lattice());
}

M666Config verify_m666_leech_form(const std::vector<EVec>& e1p) {
    if (e1p.size() != 14) throw std::invalid_argument("m666: expected 14 rows");
    const Eint w = Eint::w(), w2 = Eint::w2();
    const Form f = form_lh();
    M666Config out;
    const EVec &n1 = e1p[12], &n2 = e1p[13];
    // rows are f, w e, d, w c per hand
    auto hand = [&](int i, int k) {
        const EVec& r = e1p[4 * i + k];
        return (k == 1 || k == 3) ? scale(w2, r) : r;
    };
    std::vector<EVec> b, c, d, e, fr;
    for (int i = 0; i < 3; ++i) {
        fr.push_back(hand(i, 0));
        e.push_back(hand(i, 1));
        d.push_back(hand(i, 2));
        c.push_back(hand(i, 3));
        EVec s = fr[i] + scale(Eint(2) + w, e[i]) + scale(Eint(2), d[i]) + scale(Eint(2) + w, c[i]);
        b.push_back(scale(Eint(-1), n2 + s));
    }
    out.names.push_back("a");
    out.roots.push_back(n2 + scale(w2, n1));
    auto add = [&](const char* s, const std::vector<EVec>& v) {
        for (int i = 0; i < 3; ++i) {
            out.names.push_back(s + std::to_string(i + 1));
            out.roots.push_back(v[i]);
        }
    };
    add("b", b);
    add("c", c);
    add("d", d);
    add("e", e);
    add("f", fr);

    bool norms = true, member = true;
    for (const auto& r : out.roots) {
        norms = norms && f.raw(r, r) == Eint(-3 * f.den);
        member = member && in_lh(r);
    }
    out.report.add("m666_norms_minus3", norms);
    out.report.add("m666_in_lattice", member);

    const auto& D = Diagram::get();
    std::vector<EVec> ref;
    for (const auto& s : out.names) ref.push_back(D.root(s));
    out.report.add("m666_gram_matches_D", f.gram_of(out.roots) == form_3e8h().gram_of(ref));

    // the 12 hand roots are (lambda; 1, *) up to units, lambda in the first shell
    bool shape = true;
    for (std::size_t k = 4; k < out.roots.size(); ++k) {
        const EVec& r = out.roots[k];
        int u = unit_index(r[12]);
        if (u < 0) {
            shape = false;
            continue;
        }
        EVec lam(r.begin(), r.begin() + 12);
        lam = scale(units()[u].conj(), lam);
        shape = shape && form_leech().raw(lam, lam) == Eint(-18) && leech_contains(lam).has_value();
    }
    out.report.add("m666_hand_roots_leech_form", shape);
    return out;
}

}  // namespace eislat

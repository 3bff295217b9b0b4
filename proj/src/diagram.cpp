#include "eislat/diagram.hpp"

#include "eislat/lattices.hpp"
#include "eislat/reflections.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace eislat {

namespace {

EVec block(const std::array<Eint, 4>& v, std::initializer_list<int> blocks) {
    EVec out(12, Eint(0));
    for (int b : blocks)
        for (int k = 0; k < 4; ++k) out[4 * b + k] = v[k];
    return out;
}

EVec with_h(EVec v, const Eint& alpha, const Eint& beta) {
    v.push_back(alpha);
    v.push_back(beta);
    return v;
}

// One concrete labeling of the nodes by points and lines of P^2(F3).
struct Label {
    const char* name;
    F3Vec v;
};
const Label kLabels[26] = {
    {"a", {0, 0, 1}},   {"c1", {1, 0, 0}},  {"c2", {1, -1, 1}}, {"c3", {0, 1, 0}},  {"e1", {1, 1, 1}},
    {"e2", {1, 1, 0}},  {"e3", {1, 1, -1}}, {"a1", {1, 0, 1}},  {"a2", {1, -1, 0}}, {"a3", {0, 1, -1}},
    {"g1", {1, 0, -1}}, {"g2", {1, -1, -1}}, {"g3", {0, 1, 1}}, {"f", {1, -1, 0}},  {"f1", {1, 1, 1}},
    {"f2", {1, -1, -1}}, {"f3", {1, 1, -1}}, {"b1", {0, 1, 0}}, {"b2", {1, 1, 0}},  {"b3", {1, 0, 0}},
    {"z1", {1, 0, -1}}, {"z2", {0, 0, 1}},  {"z3", {0, 1, 1}},  {"d1", {0, 1, -1}}, {"d2", {1, -1, 1}},
    {"d3", {1, 0, 1}},
};

F3Vec f3_norm(F3Vec v) {
    for (auto& x : v) x = f3(x);
    int lead = 0;
    for (int x : v)
        if (x) { lead = x; break; }
    if (lead == -1)
        for (auto& x : v) x = -x;
    return v;
}

const Form& f3e8h() {
    static const Form f = form_3e8h();
    return f;
}

CVec cvec(const EVec& v) { return embed(v); }

CVec add(const CVec& x, const CVec& y) { return x + y; }
CVec cscale(const Cint& s, CVec v) {
    for (auto& x : v) x = s * x;
    return v;
}

}  // namespace

Diagram::Diagram() {
    const Eint w = Eint::w(), w2 = Eint::w2(), th = Eint::theta();
    const Eint t = -th * w2;
    const Eint O(0), I(1);
    auto push = [&](std::string name, EVec root) {
        DiagramNode n;
        n.name = std::move(name);
        n.root = std::move(root);
        nodes_.push_back(std::move(n));
    };
    auto nm = [](const char* s, int i) { return std::string(s) + std::to_string(i + 1); };
    push("a", with_h(EVec(12, O), I, w2));
    for (int i = 0; i < 3; ++i) push(nm("c", i), with_h(block({t, O, O, O}, {i}), O, O));
    for (int i = 0; i < 3; ++i) push(nm("e", i), with_h(block({O, t, O, O}, {i}), O, O));
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        push(nm("a", i), with_h(block({O, O, O, t}, {j, k}), w, w2));
    }
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        push(nm("g", i), with_h(block({O, O, O, t}, {i}) + block({O, O, th * w2, t}, {j, k}), Eint(2) * w, Eint(2) * w2));
    }
    push("f", with_h(block({O, I, I, Eint(-2)}, {0, 1, 2}), Eint(-2) + w, -th));
    for (int i = 0; i < 3; ++i) push(nm("f", i), with_h(block({O, I, I, I}, {i}), O, O));
    for (int i = 0; i < 3; ++i) push(nm("b", i), with_h(block({I, O, I, Eint(-1)}, {i}), Eint(-1), O));
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        push(nm("z", i), with_h(block({O, I, I, Eint(-2)}, {i}) + block({I, O, I, Eint(-1)}, {j, k}), -th * w2, -th));
    }
    for (int i = 0; i < 3; ++i) push(nm("d", i), with_h(block({I, I, Eint(-1), O}, {i}), O, O));

    for (int i = 0; i < 26; ++i) {
        if (nodes_[i].name != kLabels[i].name) throw std::logic_error("diagram label table out of order");
        nodes_[i].point = i < 13;
        nodes_[i].plane = f3_norm(kLabels[i].v);
    }

    sigma_p = EVec(14, O);
    sigma_l = EVec(14, O);
    for (const auto& n : nodes_) (n.point ? sigma_p : sigma_l) = (n.point ? sigma_p : sigma_l) + n.root;

    // w_P from the first line, w_L from the first point; verify_diagram checks all others
    int l0 = lines()[0], x0 = points()[0];
    w_p = scale(w2 * th, nodes_[l0].root);
    for (int x : points())
        if (incident(x, l0)) w_p = w_p + nodes_[x].root;
    w_l = scale(-w * th, nodes_[x0].root);
    for (int l : lines())
        if (incident(x0, l)) w_l = w_l + nodes_[l].root;

    CVec sp = cvec(sigma_p), sl = cvec(sigma_l);
    rho = add(sp, cscale(Cint::xi(), sl));
    rho_minus = add(sp, cscale(-Cint::xi(), sl));
}

const Diagram& Diagram::get() {
    static const Diagram d;
    return d;
}

int Diagram::index(const std::string& name) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].name == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown diagram node '" + name + "'");
}

std::vector<EVec> Diagram::roots() const {
    std::vector<EVec> r;
    for (const auto& n : nodes_) r.push_back(n.root);
    return r;
}

std::vector<int> Diagram::points() const {
    std::vector<int> v;
    for (int i = 0; i < 26; ++i)
        if (nodes_[i].point) v.push_back(i);
    return v;
}

std::vector<int> Diagram::lines() const {
    std::vector<int> v;
    for (int i = 0; i < 26; ++i)
        if (!nodes_[i].point) v.push_back(i);
    return v;
}

bool Diagram::incident(int i, int j) const {
    const auto &p = nodes_[i], &q = nodes_[j];
    if (p.point == q.point) return false;
    long s = 0;
    for (int k = 0; k < 3; ++k) s += p.plane[k] * q.plane[k];
    return f3(s) == 0;
}

std::vector<std::string> Diagram::m666_names() const {
    std::vector<std::string> v{"a"};
    for (const char* s : {"b", "c", "d", "e", "f"})
        for (int i = 1; i <= 3; ++i) v.push_back(s + std::to_string(i));
    return v;
}

Cint ip(const CVec& u, const CVec& v) { return f3e8h().raw(u, v); }

Sqrt3 real_value(const Cint& x) { return x.real_value(); }

namespace {

// (|rho|^2 / 26)^2 = (4 sqrt3 - 3)^2
const Sqrt3& height_den() {
    static const Sqrt3 d = [] {
        const auto& D = Diagram::get();
        Sqrt3 n = real_value(ip(D.rho, D.rho)) / Sqrt3(26);
        return n * n;
    }();
    return d;
}

}  // namespace

Sqrt3 height_sq(const CVec& r) {
    Cint x = ip(Diagram::get().rho, r);
    return (x * x.conj()).real_value() / height_den();
}

Sqrt3 height_sq(const EVec& r) { return height_sq(cvec(r)); }

Rat galois_norm_ht(const EVec& r) { return height_sq(r).galois_norm(); }

Sqrt3 c_squared(const CVec& u, const CVec& v) {
    Sqrt3 nu = real_value(ip(u, u)), nv = real_value(ip(v, v));
    if (nu.sign() == 0 || nv.sign() == 0) throw std::invalid_argument("c_squared: zero norm vector");
    Cint x = ip(u, v);
    return (x * x.conj()).real_value() / (nu * nv);
}

bool verify_linear_relations() {
    const auto& D = Diagram::get();
    const Cint s3 = Cint::sqrt3(), xi = Cint::xi();
    CVec wp = cvec(D.w_p), xwl = cscale(xi, cvec(D.w_l));
    for (int l : D.lines()) {
        CVec v = cscale(s3 * xi, cvec(D.node(l).root));  // sqrt3 rho_l with rho_l = xi l
        for (int x : D.points())
            if (D.incident(x, l)) v = add(v, cvec(D.node(x).root));
        if (v != wp) return false;
    }
    for (int x : D.points()) {
        CVec v = cscale(s3, cvec(D.node(x).root));
        for (int l : D.lines())
            if (D.incident(x, l)) v = add(v, cscale(xi, cvec(D.node(l).root)));
        if (v != xwl) return false;
    }
    return true;
}

Rat disc_f() {
    const auto& D = Diagram::get();
    return discriminant(f3e8h(), {D.w_p, D.w_l});
}

bool f_primitive() {
    // gcd of the 2x2 minors of the 2x14 coordinate matrix is a unit
    const auto& D = Diagram::get();
    Eint g(0);
    for (int i = 0; i < 14; ++i)
        for (int j = i + 1; j < 14; ++j) g = eis_gcd(g, D.w_p[i] * D.w_l[j] - D.w_p[j] * D.w_l[i]);
    return g.norm() == 1;
}

Report verify_diagram() {
    Report rep;
    const auto& D = Diagram::get();
    const Form& f = f3e8h();
    const Eint w = Eint::w(), th = Eint::theta();

    bool norms = true, lattice = true;
    for (const auto& n : D.nodes()) {
        norms = norms && f.raw(n.root, n.root) == Eint(-3);
        lattice = lattice && in_3e8h(n.root) && is_primitive_in(n.root, in_3e8h);
    }
    rep.add("node_norms_minus3", norms);
    rep.add("nodes_in_lattice", lattice);

    bool adj = true, deg = true;
    for (int i = 0; i < 26; ++i) {
        int d = 0;
        for (int j = 0; j < 26; ++j) {
            if (i == j) continue;
            Eint p = f.raw(D.node(i).root, D.node(j).root);
            bool inc = D.incident(i, j);
            if (inc) ++d;
            if (inc ? p.norm() != 3 : !p.is_zero()) adj = false;
        }
        deg = deg && d == 4;
    }
    rep.add("adjacency_equals_incidence", adj);
    rep.add("every_node_degree_4", deg);

    // M666: a-b_i-c_i-d_i-e_i-f_i, nothing else
    {
        auto names = D.m666_names();
        std::set<std::pair<std::string, std::string>> edges;
        for (int i = 1; i <= 3; ++i) {
            std::string s = std::to_string(i);
            edges.insert({"a", "b" + s});
            edges.insert({"b" + s, "c" + s});
            edges.insert({"c" + s, "d" + s});
            edges.insert({"d" + s, "e" + s});
            edges.insert({"e" + s, "f" + s});
        }
        bool ok = true;
        for (const auto& x : names)
            for (const auto& y : names) {
                if (x == y) continue;
                bool e = edges.count({x, y}) || edges.count({y, x});
                ok = ok && (adjacent(f, D.root(x), D.root(y)) == e);
            }
        rep.add("m666_edges", ok);
    }

    rep.add("linear_relations", verify_linear_relations());

    bool wp_all = true, wl_all = true;
    for (int l : D.lines()) {
        EVec v = scale(Eint::w2() * th, D.node(l).root);
        for (int x : D.points())
            if (D.incident(x, l)) v = v + D.node(x).root;
        wp_all = wp_all && v == D.w_p;
    }
    for (int x : D.points()) {
        EVec v = scale(-w * th, D.node(x).root);
        for (int l : D.lines())
            if (D.incident(x, l)) v = v + D.node(l).root;
        wl_all = wl_all && v == D.w_l;
    }
    rep.add("w_P_same_for_every_line", wp_all);
    rep.add("w_L_same_for_every_point", wl_all);
    rep.add("w_P_norm_3", f.raw(D.w_p, D.w_p) == Eint(3));
    rep.add("w_L_norm_3", f.raw(D.w_l, D.w_l) == Eint(3));
    Eint wpl = f.raw(D.w_p, D.w_l);
    rep.add("ip_w_P_w_L", wpl == Eint(-4) * th * w, to_string(wpl));
    Rat dF = disc_f();
    rep.add("disc_F", dF == 39, dF.get_str());
    rep.add("F_primitive", f_primitive());

    // Weyl vector, scaled by 26
    const Sqrt3 target = Sqrt3(Rat(-3), Rat(4)) / Sqrt3(26);  // (4 sqrt3 - 3)/26
    Sqrt3 rn = real_value(ip(D.rho, D.rho)) / Sqrt3(676);
    rep.add("rho_bar_norm", rn == target, to_string(rn));
    Cint wr = ip(cvec(D.w_p), D.rho);
    bool wr_ok = wr.is_real() && wr.real_value() / Sqrt3(26) == Sqrt3(Rat(0), Rat(1, 2));
    rep.add("ip_w_P_rho_bar", wr_ok, wr.is_real() ? to_string(wr.real_value() / Sqrt3(26)) : "not real");

    bool rho_i = true;
    const Cint xi = Cint::xi();
    for (const auto& n : D.nodes()) {
        CVec r = n.point ? cvec(n.root) : cscale(xi, cvec(n.root));
        Cint x = ip(D.rho, r);
        rho_i = rho_i && x.is_real() && x.real_value() / Sqrt3(26) == target;
    }
    rep.add("ip_rho_bar_rho_i", rho_i);

    const Sqrt3 target_m = Sqrt3(Rat(-3), Rat(-4)) / Sqrt3(26);
    Sqrt3 rmn = real_value(ip(D.rho_minus, D.rho_minus)) / Sqrt3(676);
    bool rm_ok = rmn == target_m;
    for (const auto& n : D.nodes()) {
        CVec r = n.point ? cvec(n.root) : cscale(xi, cvec(n.root));
        Cint x = ip(D.rho_minus, r);
        rm_ok = rm_ok && x.is_real() && x.real_value() / Sqrt3(26) == (n.point ? target_m : -target_m);
    }
    rep.add("rho_minus_identities", rm_ok, to_string(rmn));

    // rho-bar = (w_P + xi w_L) / 2(4 + sqrt3)
    {
        CVec lhs = cscale(Cint(2) * (Cint(4) + Cint::sqrt3()), D.rho);
        CVec rhs = cscale(Cint(26), add(cvec(D.w_p), cscale(xi, cvec(D.w_l))));
        rep.add("rho_bar_from_w", lhs == rhs);
    }

    bool h1 = true;
    for (const auto& n : D.nodes()) h1 = h1 && height_sq(n.root) == Sqrt3(1);
    rep.add("node_heights_1", h1);
    return rep;
}

// ---- P^2(F3) and PGL3(F3)

F3Mat f3_mul(const F3Mat& x, const F3Mat& y) {
    F3Mat z{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            long s = 0;
            for (int k = 0; k < 3; ++k) s += x[3 * i + k] * y[3 * k + j];
            z[3 * i + j] = f3(s);
        }
    return z;
}

int f3_det(const F3Mat& g) {
    long d = static_cast<long>(g[0]) * (g[4] * g[8] - g[5] * g[7]) - g[1] * (g[3] * g[8] - g[5] * g[6]) +
             g[2] * (g[3] * g[7] - g[4] * g[6]);
    return f3(d);
}

F3Mat f3_inverse(const F3Mat& g) {
    int d = f3_det(g);
    if (d == 0) throw std::invalid_argument("singular matrix over F3");
    F3Mat adj{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            adj[3 * i + j] = f3(g[3 * r0 + c0] * g[3 * r1 + c1] - g[3 * r0 + c1] * g[3 * r1 + c0]);
        }
    for (auto& x : adj) x = f3(x * d);  // 1/d = d in F3
    return adj;
}

F3Mat f3_normalize(F3Mat g) {
    int lead = 0;
    for (auto& x : g) {
        x = f3(x);
        if (!lead && x) lead = x;
    }
    if (lead == -1)
        for (auto& x : g) x = -x;
    return g;
}

std::vector<F3Mat> pgl3_elements() {
    std::set<F3Mat> s;
    F3Mat g{};
    for (int code = 0; code < 19683; ++code) {
        int c = code;
        for (int k = 0; k < 9; ++k) {
            g[k] = c % 3 - 1;
            c /= 3;
        }
        if (f3_det(g) != 0) s.insert(f3_normalize(g));
    }
    return {s.begin(), s.end()};
}

std::vector<int> node_permutation(const F3Mat& g) {
    const auto& D = Diagram::get();
    std::map<std::pair<bool, F3Vec>, int> where;
    for (int i = 0; i < 26; ++i) where[{D.node(i).point, D.node(i).plane}] = i;
    F3Mat gi = f3_inverse(g);
    std::vector<int> perm(26);
    for (int i = 0; i < 26; ++i) {
        const auto& n = D.node(i);
        F3Vec v{};
        for (int r = 0; r < 3; ++r) {
            long s = 0;
            for (int k = 0; k < 3; ++k) s += n.point ? g[3 * r + k] * n.plane[k] : n.plane[k] * gi[3 * k + r];
            v[r] = static_cast<int>(s);
        }
        perm[i] = where.at({n.point, f3_norm(v)});
    }
    return perm;
}

const RMat& lattice_basis() {
    static const RMat b = RMat::from_cols([] {
        std::vector<Vec<Erat>> cols;
        for (const auto& r : row_basis(Diagram::get().roots())) cols.push_back(to_rat(r));
        return cols;
    }());
    return b;
}

bool preserves_lattice(const RMat& m) {
    static const RMat binv = *inverse(lattice_basis());
    auto mi = inverse(m);
    if (!mi) return false;
    return to_int(binv * m * lattice_basis()).has_value() && to_int(binv * *mi * lattice_basis()).has_value();
}

RMat g_action(const F3Mat& g) {
    const auto& D = Diagram::get();
    auto perm = node_permutation(g);
    std::vector<Vec<Erat>> src, dst;
    for (int i = 0; i < 26; ++i) {
        src.push_back(to_rat(D.node(i).root));
        dst.push_back(to_rat(D.node(perm[i]).root));
    }
    auto m = map_from_images(src, dst);
    if (!m) throw std::logic_error("diagram permutation does not extend linearly");
    return *m;
}

namespace {

const char* kLongRelator = "xyxyxyxyxYxyxyxyxyxYxyxyxYxYxyxYxYxyxyxY";

template <class T, class Mul>
T eval_word(const std::string& word, const T& x, const T& y, const T& yinv, const T& one, Mul mul) {
    T acc = one;
    for (char c : word) acc = mul(acc, c == 'x' ? x : c == 'y' ? y : yinv);
    return acc;
}

using Perm = std::vector<int>;
Perm pmul(const Perm& a, const Perm& b) {  // a after b
    Perm c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
    return c;
}
Perm pinv(const Perm& a) {
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
    return c;
}
Perm pid(std::size_t n) {
    Perm p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
    return p;
}
Perm ppow(const Perm& a, int n) {
    Perm r = pid(a.size());
    for (int i = 0; i < n; ++i) r = pmul(r, a);
    return r;
}

}  // namespace

std::size_t permutation_group_order(const std::vector<std::vector<int>>& gens) {
    if (gens.empty()) return 1;
    std::set<Perm> seen{pid(gens[0].size())};
    std::vector<Perm> frontier{pid(gens[0].size())};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& p : frontier)
            for (const auto& g : gens) {
                Perm q = pmul(g, p);
                if (seen.insert(q).second) next.push_back(std::move(q));
            }
        frontier = std::move(next);
    }
    return seen.size();
}

PglGenerators pgl3_presentation_generators() {
    auto els = pgl3_elements();
    std::vector<Perm> perms;
    for (const auto& g : els) perms.push_back(node_permutation(g));
    const Perm one = pid(26);
    std::vector<std::size_t> inv2, ord3;
    for (std::size_t i = 0; i < els.size(); ++i) {
        if (perms[i] == one) continue;
        if (pmul(perms[i], perms[i]) == one) inv2.push_back(i);
        else if (ppow(perms[i], 3) == one) ord3.push_back(i);
    }
    for (auto i : inv2)
        for (auto j : ord3) {
            const Perm &x = perms[i], &y = perms[j];
            Perm xy = pmul(x, y);
            if (ppow(xy, 13) != one) continue;
            Perm r = eval_word(kLongRelator, x, y, pinv(y), one, pmul);
            if (r != one) continue;
            if (permutation_group_order({x, y}) != 5616) continue;
            return {els[i], els[j]};
        }
    throw std::logic_error("no presentation generators found");
}

bool pgl3_relations_hold(const RMat& x, const RMat& y) {
    auto mul = [](const RMat& a, const RMat& b) { return a * b; };
    RMat one = RMat::identity(x.rows);
    RMat yinv = y * y;  // y^3 = 1 is checked below
    bool ok = (x * x).is_identity() && (y * y * y).is_identity() && power(x * y, 13).is_identity();
    return ok && eval_word(kLongRelator, x, y, yinv, one, mul).is_identity();
}

RMat sigma_matrix() {
    const auto& D = Diagram::get();
    std::map<std::pair<bool, F3Vec>, int> where;
    for (int i = 0; i < 26; ++i) where[{D.node(i).point, D.node(i).plane}] = i;
    std::vector<Vec<Erat>> src, dst;
    for (int i = 0; i < 26; ++i) {
        const auto& n = D.node(i);
        int j = where.at({!n.point, n.plane});
        EVec img = n.point ? scale(-Eint::w(), D.node(j).root) : D.node(j).root;
        src.push_back(to_rat(n.root));
        dst.push_back(to_rat(img));
    }
    auto m = map_from_images(src, dst);
    if (!m) throw std::logic_error("sigma does not extend linearly");
    return *m;
}

Report verify_automorphisms() {
    Report rep;
    const auto& D = Diagram::get();
    const Form& f = f3e8h();
    auto gens = pgl3_presentation_generators();
    RMat x = g_action(gens.x), y = g_action(gens.y);
    rep.add("pgl3_generators_preserve_L", preserves_lattice(x) && preserves_lattice(y));
    rep.add("pgl3_relations", pgl3_relations_hold(x, y));
    rep.add("pgl3_form_preserved", f.preserved_by(x) && f.preserved_by(y));
    std::size_t order = permutation_group_order({node_permutation(gens.x), node_permutation(gens.y)});
    rep.add("pgl3_order_5616", order == 5616, std::to_string(order));

    RMat s = sigma_matrix();
    rep.add("sigma_form_preserved", f.preserved_by(s));
    rep.add("sigma_preserves_L", preserves_lattice(s));
    rep.add("sigma_square_minus_w", s * s == scale(to_rat(-Eint::w()), RMat::identity(14)));
    rep.add("sigma_order_12", power(s, 12).is_identity() && !power(s, 6).is_identity() && !power(s, 4).is_identity());
    rep.add("sigma_Sigma_P", s * to_rat(D.sigma_p) == to_rat(scale(-Eint::w(), D.sigma_l)));
    rep.add("sigma_Sigma_L", s * to_rat(D.sigma_l) == to_rat(D.sigma_p));

    // rho-bar is fixed projectively: G fixes it, sigma multiplies it by xi.
    // Work with 3M, which is integral, to stay in Z[zeta12].
    auto act = [](const RMat& m, const CVec& v) {
        auto m3 = to_int(scale(Erat(3), m));
        if (!m3) throw std::logic_error("automorphism denominator exceeds 3");
        CVec r = embed(*m3) * v;
        CVec v3 = v;
        for (auto& x : v3) x = Cint(3) * x;
        return std::pair{r, v3};
    };
    auto [xr, r3] = act(x, D.rho);
    auto [yr, r3b] = act(y, D.rho);
    auto [sr, r3c] = act(s, D.rho);
    bool fixed = xr == r3 && yr == r3 && sr == cscale(Cint::xi(), r3);
    rep.add("rho_bar_fixed_by_Q_generators", fixed);

    // G permutes the roots and fixes w_P, w_L
    Vec<Erat> wp = to_rat(D.w_p), wl = to_rat(D.w_l);
    rep.add("G_fixes_F", x * wp == wp && x * wl == wl && y * wp == wp && y * wl == wl);
    return rep;
}

ProbeReport local_max_probe(int directions, double eps, double tol, unsigned seed) {
    using C = std::complex<double>;
    const auto& D = Diagram::get();
    const Form& f = f3e8h();
    auto cv = [](const CVec& v) {
        std::vector<C> o;
        for (const auto& x : v) o.push_back(x.to_complex());
        return o;
    };
    auto ipd = [&](const std::vector<C>& u, const std::vector<C>& v) {
        C s = 0;
        std::size_t n = f.definite_dim();
        for (std::size_t i = 0; i < n; ++i) s -= std::conj(u[i]) * v[i];
        C th(0, std::sqrt(3.0));
        s += std::conj(u[n]) * std::conj(th) * v[n + 1] + std::conj(u[n + 1]) * th * v[n];
        return s;
    };
    std::vector<std::vector<C>> roots;
    for (const auto& n : D.nodes()) roots.push_back(cv(embed(n.root)));
    // min over mirrors of sinh^2 d(u, r-perp) = |<u,r>|^2 / (3 |u|^2)
    auto mind = [&](const std::vector<C>& u) {
        double nu = ipd(u, u).real(), m = 1e300;
        for (const auto& r : roots) m = std::min(m, std::norm(ipd(u, r)) / (3 * nu));
        return m;
    };
    auto each = [&](const std::vector<C>& u) {
        double nu = ipd(u, u).real();
        std::vector<double> d;
        for (const auto& r : roots) d.push_back(std::norm(ipd(u, r)) / (3 * nu));
        return d;
    };
    std::vector<C> rb = cv(D.rho);
    double base = mind(rb);
    ProbeReport rep;
    rep.base_sinh2 = base;
    std::mt19937 rng(seed);
    std::normal_distribution<double> g(0, 1);
    double nrb = ipd(rb, rb).real();
    double scale_rb = std::sqrt(nrb);
    for (int t = 0; t < directions; ++t) {
        std::vector<C> v(14);
        for (auto& z : v) z = C(g(rng), g(rng));
        C p = ipd(rb, v) / nrb;  // project to the tangent space at rho-bar
        for (int i = 0; i < 14; ++i) v[i] -= p * rb[i];
        double nv = std::abs(ipd(v, v).real());
        std::vector<C> u(14);
        for (int i = 0; i < 14; ++i) u[i] = rb[i] + eps * scale_rb / std::sqrt(nv) * v[i];
        double inc = mind(u) - base;
        ++rep.directions;
        rep.max_increase = std::max(rep.max_increase, inc);
        if (inc > tol) ++rep.increased;
    }
    std::vector<C> rm = cv(D.rho_minus), u(14);
    double nm = std::abs(ipd(rm, rm).real());
    for (int i = 0; i < 14; ++i) u[i] = rb[i] + C(0, eps * scale_rb / std::sqrt(nm)) * rm[i];
    auto d0 = each(rb), d1 = each(u);
    rep.special_all_decrease = true;
    rep.special_all_increase = true;
    for (std::size_t j = 0; j < d0.size(); ++j) {
        rep.special_all_decrease = rep.special_all_decrease && d1[j] < d0[j];
        rep.special_all_increase = rep.special_all_increase && d1[j] > d0[j];
    }
    return rep;
}

std::vector<int> special_direction_signs(long n) {
    const auto& D = Diagram::get();
    const Cint i(Int(0), Int(0), Int(0), Int(1));  // zeta^3
    CVec u = cscale(Cint(n), D.rho);
    for (std::size_t k = 0; k < u.size(); ++k) u[k] += i * D.rho_minus[k];
    // sinh^2 is invariant under scaling, so compare |<v,r>|^2 / |v|^2 directly
    Sqrt3 nu = real_value(ip(u, u)), n0 = real_value(ip(D.rho, D.rho));
    std::vector<int> out;
    for (const auto& node : D.nodes()) {
        CVec r = cvec(node.root);
        Cint a = ip(u, r), b = ip(D.rho, r);
        Sqrt3 su = (a * a.conj()).real_value() / nu, s0 = (b * b.conj()).real_value() / n0;
        out.push_back((su - s0).sign());
    }
    return out;
}

}  // namespace eislat

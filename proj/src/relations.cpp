#include "eislat/relations.hpp"

#include "eislat/diagram.hpp"
#include "eislat/isomorphism.hpp"
#include "eislat/lattices.hpp"
#include "eislat/reflections.hpp"
#include "eislat/textio.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eislat {

RMat GroupWord::realize() const {
    RMat m = RMat::identity(form.dim);
    for (const auto& l : letters) m = m * reflection_matrix(form, l.root, l.eps);
    if (!form.preserved_by(m)) throw std::logic_error("word realization does not preserve the form");
    return m;
}

std::string GroupWord::str() const {
    std::string s;
    for (const auto& l : letters) {
        if (!s.empty()) s += ' ';
        s += l.label;
        if (l.eps != Eint::w()) s += "'";
    }
    return s;
}

GroupWord diagram_word(const std::vector<std::string>& names) {
    const auto& D = Diagram::get();
    GroupWord w{form_3e8h(), {}};
    for (const auto& n : names) w.letters.push_back({n, D.root(n), Eint::w()});
    return w;
}

// ---- orders ----

namespace {

// M = A / d with A integral
struct Scaled {
    EMat a;
    Int d;
};

Scaled scaled(const RMat& m) {
    Int d = 1;
    for (const auto& x : m.d) {
        d = lcm(d, Int(x.a.get_den()));
        d = lcm(d, Int(x.b.get_den()));
    }
    Scaled s{EMat(m.rows, m.cols), d};
    for (std::size_t k = 0; k < m.d.size(); ++k) {
        Rat a = m.d[k].a * d, b = m.d[k].b * d;
        s.a.d[k] = Eint(a.get_num(), b.get_num());
    }
    return s;
}

bool is_scalar(const EMat& a, const Int& c) {
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j)
            if (a(i, j) != (i == j ? Eint(c, Int(0)) : Eint(0))) return false;
    return true;
}

bool power_is_identity(const Scaled& s, unsigned long k) {
    Int dk;
    mpz_pow_ui(dk.get_mpz_t(), s.d.get_mpz_t(), k);
    return is_scalar(power(s.a, k), dk);
}

std::vector<unsigned long> prime_factors(unsigned long n) {
    std::vector<unsigned long> p;
    for (unsigned long q = 2; q * q <= n; ++q)
        if (n % q == 0) {
            p.push_back(q);
            while (n % q == 0) n /= q;
        }
    if (n > 1) p.push_back(n);
    return p;
}

unsigned long euler_phi(unsigned long n) {
    unsigned long r = n;
    for (auto p : prime_factors(n)) r = r / p * (p - 1);
    return r;
}

// q / d for monic d; nullopt if the remainder is nonzero
template <class T>
std::optional<std::vector<T>> divide_exact(const std::vector<T>& q, const std::vector<Int>& d) {
    if (q.size() < d.size()) return std::nullopt;
    std::vector<T> r = q, out(q.size() - d.size() + 1);
    for (std::size_t k = out.size(); k-- > 0;) {
        T c = r[k + d.size() - 1];
        out[k] = c;
        if (sgn(c) == 0) continue;
        for (std::size_t j = 0; j < d.size(); ++j) r[k + j] -= c * d[j];
    }
    for (const auto& x : r)
        if (sgn(x) != 0) return std::nullopt;
    return out;
}

}  // namespace

std::vector<Int> cyclotomic_poly(unsigned long n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_poly: n = 0");
    static std::map<unsigned long, std::vector<Int>> memo;
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    std::vector<Int> p(n + 1, Int(0));
    p[0] = -1;
    p[n] = 1;
    for (unsigned long d = 1; d < n; ++d)
        if (n % d == 0) p = *divide_exact(p, cyclotomic_poly(d));
    memo[n] = p;
    return p;
}

std::vector<Rat> realified_charpoly(const RMat& m) {
    auto p = charpoly(m);
    std::vector<Erat> q(2 * p.size() - 1, Erat(0));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) q[i + j] += p[i] * p[j].conj();
    std::vector<Rat> r;
    for (const auto& c : q) {
        if (sgn(c.b) != 0) throw std::logic_error("realified charpoly is not rational");
        r.push_back(c.a);
    }
    return r;
}

MatrixOrder matrix_order(const RMat& m, unsigned long bound) {
    MatrixOrder res;
    Scaled s = scaled(m);
    {
        EMat p = s.a;
        Int dk = s.d;
        for (unsigned long k = 1; k <= bound; ++k) {
            if (is_scalar(p, dk)) {
                res.by_powers = k;
                break;
            }
            p = p * s.a;
            dk *= s.d;
        }
    }

    auto q = realified_charpoly(m);
    for (unsigned long n = 1; q.size() > 1; ++n) {
        std::size_t deg = q.size() - 1;
        unsigned long ph = euler_phi(n);
        // phi(n) >= sqrt(n/2) bounds the search
        if (n > 2 * deg * deg + 2) break;
        if (ph > deg) continue;
        auto c = cyclotomic_poly(n);
        while (auto d = divide_exact(q, c)) {
            q = *d;
            res.cyclotomic.push_back(n);
        }
    }
    if (q.size() > 1) {
        res.kind = OrderKind::infinite;
        res.reason = "non-cyclotomic factor of degree " + std::to_string(q.size() - 1);
        return res;
    }
    unsigned long big = 1;
    for (auto n : res.cyclotomic) big = std::lcm(big, n);
    if (!power_is_identity(s, big)) {
        res.kind = OrderKind::infinite;
        res.reason = "eigenvalues are roots of unity but M^" + std::to_string(big) + " != I (not diagonalizable)";
        return res;
    }
    unsigned long ord = big;
    for (auto p : prime_factors(big))
        while (ord % p == 0 && power_is_identity(s, ord / p)) ord /= p;
    res.kind = OrderKind::finite;
    res.order = ord;
    return res;
}

std::string to_string(const MatrixOrder& o) {
    switch (o.kind) {
        case OrderKind::finite: return std::to_string(o.order);
        case OrderKind::infinite: return "inf";
        default: return "unknown";
    }
}

// ---- Dynkin subdiagrams ----

std::vector<std::vector<int>> dynkin_edges(const std::string& type) {
    if (type.size() < 2) throw std::invalid_argument("dynkin type: " + type);
    char t = type[0];
    int n = std::stoi(type.substr(1));
    std::vector<std::vector<int>> adj(n);
    auto join = [&](int i, int j) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    };
    if (t == 'A' && n >= 1) {
        for (int i = 0; i + 1 < n; ++i) join(i, i + 1);
    } else if (t == 'D' && n >= 4) {
        for (int i = 0; i + 2 < n; ++i) join(i, i + 1);
        join(n - 3, n - 1);
    } else if (t == 'E' && n >= 6 && n <= 8) {
        // labels 0..n-1 stand for 1..n
        join(0, 2);
        for (int i = 2; i + 1 < n; ++i) join(i, i + 1);
        join(1, 3);
    } else {
        throw std::invalid_argument("dynkin type: " + type);
    }
    return adj;
}

namespace {

// 0 none, 1 simple edge, 2 other nonzero inner product
const std::vector<std::vector<int>>& m666_graph() {
    static const auto g = [] {
        const auto& D = Diagram::get();
        auto names = D.m666_names();
        const Form f = form_3e8h();
        std::vector<std::vector<int>> e(names.size(), std::vector<int>(names.size(), 0));
        for (std::size_t i = 0; i < names.size(); ++i)
            for (std::size_t j = 0; j < names.size(); ++j) {
                if (i == j) continue;
                Eint x = f.raw(D.root(names[i]), D.root(names[j]));
                e[i][j] = x.is_zero() ? 0 : (x.norm() == 3 ? 1 : 2);
            }
        return e;
    }();
    return g;
}

}  // namespace

std::vector<DynkinSubdiagram> free_embeddings(const std::string& type, std::size_t limit) {
    auto adj = dynkin_edges(type);
    const auto& g = m666_graph();
    auto names = Diagram::get().m666_names();
    const int n = static_cast<int>(adj.size()), N = static_cast<int>(names.size());
    std::vector<std::vector<bool>> want(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j : adj[i]) want[i][j] = true;

    std::vector<DynkinSubdiagram> out;
    std::vector<int> img(n, -1);
    std::vector<bool> used(N, false);
    auto rec = [&](auto&& self, int k) -> bool {
        if (k == n) {
            DynkinSubdiagram d{type, {}, expected_coxeter_order(type)};
            for (int x : img) d.nodes.push_back(names[x]);
            out.push_back(std::move(d));
            return limit && out.size() >= limit;
        }
        for (int v = 0; v < N; ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (int j = 0; j < k && ok; ++j) {
                int e = g[v][img[j]];
                ok = want[k][j] ? e == 1 : e == 0;
            }
            if (!ok) continue;
            img[k] = v;
            used[v] = true;
            bool stop = self(self, k + 1);
            used[v] = false;
            if (stop) return true;
        }
        return false;
    };
    rec(rec, 0);
    return out;
}

std::vector<std::string> coxeter_types() {
    std::vector<std::string> t;
    for (int n = 1; n <= 11; ++n) t.push_back("A" + std::to_string(n));
    for (int n = 4; n <= 8; ++n) t.push_back("D" + std::to_string(n));
    for (int n = 6; n <= 8; ++n) t.push_back("E" + std::to_string(n));
    return t;
}

std::string expected_coxeter_order(const std::string& type) {
    static const std::map<std::string, std::string> table{
        {"A1", "3"},  {"A2", "6"},  {"A3", "12"}, {"A4", "30"}, {"A5", "inf"}, {"A6", "42"},
        {"A7", "24"}, {"A8", "18"}, {"A9", "30"}, {"A10", "66"}, {"A11", "12"}, {"D4", "inf"},
        {"D5", "24"}, {"D6", "15"}, {"D7", "12"}, {"D8", "21"}, {"E6", "12"},  {"E7", "9"},
        {"E8", "15"}};
    auto it = table.find(type);
    if (it == table.end()) throw std::invalid_argument("no table entry for " + type);
    return it->second;
}

CoxeterRow coxeter_row(const std::string& type, int alternatives) {
    auto all = free_embeddings(type);
    if (all.empty()) throw std::runtime_error("no free embedding of " + type);
    CoxeterRow row;
    row.delta = all[0];
    row.order = matrix_order(diagram_word(row.delta.nodes).realize());
    row.matches = to_string(row.order) == row.delta.expected;

    // alternatives on different node sets first, then relabellings
    std::vector<std::set<std::string>> seen{{row.delta.nodes.begin(), row.delta.nodes.end()}};
    std::vector<const DynkinSubdiagram*> pick;
    for (std::size_t k = 1; k < all.size() && static_cast<int>(pick.size()) < alternatives; ++k) {
        std::set<std::string> s(all[k].nodes.begin(), all[k].nodes.end());
        if (std::find(seen.begin(), seen.end(), s) != seen.end()) continue;
        seen.push_back(s);
        pick.push_back(&all[k]);
    }
    for (std::size_t k = 1; k < all.size() && static_cast<int>(pick.size()) < alternatives; ++k)
        if (std::find(pick.begin(), pick.end(), &all[k]) == pick.end()) pick.push_back(&all[k]);

    row.alternatives_match = true;
    for (const auto* d : pick) {
        auto o = matrix_order(diagram_word(d->nodes).realize());
        row.alternatives_match = row.alternatives_match && to_string(o) == d->expected;
        row.alternatives.emplace_back(*d, o);
    }
    return row;
}

std::vector<CoxeterRow> coxeter_table(int alternatives) {
    std::vector<CoxeterRow> rows;
    for (const auto& t : coxeter_types()) rows.push_back(coxeter_row(t, alternatives));
    return rows;
}

// ---- spider ----

namespace {

std::vector<std::string> spider_letters() { return {"a", "b1", "c1", "a", "b2", "c2", "a", "b3", "c3"}; }

std::vector<std::string> translate(const std::vector<std::string>& names, const std::vector<int>& perm) {
    const auto& D = Diagram::get();
    std::vector<std::string> out;
    for (const auto& n : names) out.push_back(D.node(perm[D.index(n)]).name);
    return out;
}

}  // namespace

SpiderResult spider_check() {
    SpiderResult res;
    RMat s = diagram_word(spider_letters()).realize();
    res.s20 = power(s, 20).is_identity();
    res.s10_identity = power(s, 10).is_identity();
    res.order = matrix_order(s);
    res.report.add("spider_S20_identity", res.s20, "S = a b1 c1 a b2 c2 a b3 c3");
    res.report.add("spider_order", res.order.kind == OrderKind::finite && 20 % res.order.order == 0,
                   to_string(res.order) + (res.s10_identity ? " (S^10 = I)" : " (S^10 != I)"));

    auto gens = pgl3_presentation_generators();
    res.conjugates = true;
    for (const auto& g : {gens.x, gens.y}) {
        auto names = translate(spider_letters(), node_permutation(g));
        RMat t = diagram_word(names).realize();
        RMat a = g_action(g);
        res.conjugates = res.conjugates && t == a * s * *inverse(a) && power(t, 20).is_identity();
    }
    res.report.add("spider_G_translates", res.conjugates, "generators x, y of G");
    return res;
}

// ---- deflation ----

namespace {

const std::vector<std::string>& twelve_gon_names() {
    static const std::vector<std::string> y{"f1", "e1", "d1", "c1", "b1", "a", "b2", "c2", "d2", "e2", "f2", "a3"};
    return y;
}

// rotate and reflect so the sequence starts at its least node and proceeds to the smaller neighbour
std::vector<int> canonical_cycle(std::vector<int> c) {
    auto it = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), it, c.end());
    if (c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
    return c;
}

}  // namespace

bool deflate_holds(const std::vector<int>& y) {
    if (y.size() != 12) throw std::invalid_argument("deflate: need 12 nodes");
    const auto& D = Diagram::get();
    const Form f = form_3e8h();
    EVec v = D.node(y[10]).root;
    for (int k = 9; k >= 0; --k) v = reflect(f, D.node(y[k]).root, Eint::w(), v);
    return unit_ratio(v, D.node(y[11]).root).has_value();
}

std::vector<std::vector<int>> induced_twelve_gons() {
    const auto& D = Diagram::get();
    const int n = static_cast<int>(D.nodes().size());
    std::vector<std::vector<bool>> e(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e[i][j] = i != j && D.incident(i, j);

    std::set<std::vector<int>> found;
    std::vector<int> path;
    std::vector<bool> on(n, false);
    // paths from the least vertex s through larger vertices, each new vertex
    // adjacent only to its predecessor among the path (and to s at the end)
    auto rec = [&](auto&& self, int s) -> void {
        int last = path.back();
        for (int v = s + 1; v < n; ++v) {
            if (on[v] || !e[last][v]) continue;
            bool ok = true;
            for (std::size_t k = 0; k + 1 < path.size() && ok; ++k)
                if (e[v][path[k]] && !(k == 0 && path.size() == 11)) ok = false;
            if (!ok) continue;
            if (path.size() == 11) {
                if (!e[v][s]) continue;
                path.push_back(v);
                found.insert(canonical_cycle(path));
                path.pop_back();
                continue;
            }
            path.push_back(v);
            on[v] = true;
            self(self, s);
            on[v] = false;
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        on.assign(n, false);
        on[s] = true;
        rec(rec, s);
    }
    return {found.begin(), found.end()};
}

DeflateResult deflate_check() {
    DeflateResult res;
    const auto& D = Diagram::get();
    const Form f = form_3e8h();
    const auto& y = twelve_gon_names();

    EVec v = D.root(y[10]);
    for (int k = 9; k >= 0; --k) v = reflect(f, D.root(y[k]), Eint::w(), v);
    res.vector_identity = v == scale(Eint::w2(), D.root("a3"));
    res.report.add("deflate_vector_identity", res.vector_identity, "f1 e1 d1 c1 b1 a b2 c2 d2 e2 (f2) = w^2 a3");

    // the same as a relation between reflections
    {
        std::vector<std::string> head(y.begin(), y.begin() + 10);
        RMat w = diagram_word(head).realize();
        RMat lhs = w * diagram_word({y[10]}).realize() * *inverse(w);
        bool ok = lhs == diagram_word({y[11]}).realize();
        res.report.add("deflate_relation", ok);
    }

    RMat a = diagram_word({"a", "b2", "c2", "d2", "e2", "f2", "a3", "f1", "e1", "d1", "c1", "b1"}).realize();
    res.a11 = power(a, 11).is_identity();
    res.a_order = matrix_order(a);
    res.report.add("deflate_A11_identity", res.a11, "A = a b2 c2 d2 e2 f2 a3 f1 e1 d1 c1 b1, order " + to_string(res.a_order));

    std::vector<int> y0;
    for (const auto& s : y) y0.push_back(D.index(s));
    std::set<std::vector<int>> labelled, cycles;
    bool all = true;
    for (const auto& g : pgl3_elements()) {
        auto perm = node_permutation(g);
        std::vector<int> yi;
        for (int k : y0) yi.push_back(perm[k]);
        if (!labelled.insert(yi).second) continue;
        cycles.insert(canonical_cycle(yi));
        all = all && deflate_holds(yi);
    }
    auto gons = induced_twelve_gons();
    res.twelve_gons = gons.size();
    res.orbit_size = cycles.size();
    res.labellings_checked = labelled.size();
    bool covers = std::equal(gons.begin(), gons.end(), cycles.begin(), cycles.end());
    res.all_hold = all && covers;
    res.report.add("deflate_G_translates", all, std::to_string(labelled.size()) + " labelled 12-gons");
    res.report.add("deflate_covers_all_12gons", covers,
                   std::to_string(cycles.size()) + " of " + std::to_string(gons.size()));
    auto comp = complete_by_twelve_gons();
    std::string order;
    for (const auto& c : comp) order += (order.empty() ? "" : " ") + c.added;
    res.report.add("D_in_radical_of_M666", comp.size() == 10, "completed " + order);
    return res;
}

std::vector<Completion> complete_by_twelve_gons() {
    const auto& D = Diagram::get();
    const int n = static_cast<int>(D.nodes().size());
    std::vector<bool> known(n, false);
    for (const auto& s : D.m666_names()) known[D.index(s)] = true;
    auto gons = induced_twelve_gons();
    std::vector<Completion> out;
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& g : gons)
            for (int start = 0; start < 12 && !grew; ++start)
                for (int dir : {1, -1}) {
                    std::vector<int> y;
                    for (int k = 0; k < 12; ++k) y.push_back(g[((start + dir * k) % 12 + 12) % 12]);
                    if (known[y[11]]) continue;
                    bool have = true;
                    for (int k = 0; k < 11; ++k) have = have && known[y[k]];
                    if (!have || !deflate_holds(y)) continue;
                    known[y[11]] = true;
                    Completion c{D.node(y[11]).name, {}};
                    for (int k : y) c.gon.push_back(D.node(k).name);
                    out.push_back(std::move(c));
                    grew = true;
                    break;
                }
    }
    return out;
}

// ---- the involutions phi12, phi23 ----

PhiResult verify_phi_flips(const std::vector<EVec>& e1prime) {
    auto cfg = verify_m666_leech_form(e1prime);
    PhiResult res;
    res.report.append(cfg.report);
    std::map<std::string, EVec> r;
    for (std::size_t k = 0; k < cfg.names.size(); ++k) r[cfg.names[k]] = cfg.roots[k];
    const Form f = form_lh();

    auto chain = [](int i, int j) {
        std::vector<std::string> c;
        for (const char* s : {"f", "e", "d", "c", "b"}) c.push_back(s + std::to_string(i));
        c.push_back("a");
        for (const char* s : {"b", "c", "d", "e", "f"}) c.push_back(s + std::to_string(j));
        return c;
    };
    auto build = [&](int i, int j, int k, const char* name) {
        auto c = chain(i, j);
        std::vector<Vec<Erat>> src, dst;
        for (std::size_t t = 0; t < c.size(); ++t) {
            src.push_back(to_rat(r[c[t]]));
            dst.push_back(to_rat(r[c[c.size() - 1 - t]]));
        }
        for (const char* s : {"f", "e", "d", "c"}) {
            src.push_back(to_rat(r[s + std::to_string(k)]));
            dst.push_back(src.back());
        }
        auto m = map_from_images(src, dst);
        res.report.add(std::string(name) + "_determined", m.has_value());
        return m.value_or(RMat::identity(14));
    };
    res.phi12 = build(1, 2, 3, "phi12");
    res.phi23 = build(2, 3, 1, "phi23");

    EVec rho(14, Eint(0));
    rho[13] = Eint(1);
    const Eint w = Eint::w(), w2 = Eint::w2();
    const EVec cell{Eint(-2), w2, w2, Eint(1), w, Eint(-2) * w, Eint(1), w2, Eint(1), Eint(1), Eint(1), w, Eint(1),
                    Eint::theta()};
    for (const auto* p : {&res.phi12, &res.phi23}) {
        std::string n = p == &res.phi12 ? "phi12" : "phi23";
        res.report.add(n + "_form_preserved", f.preserved_by(*p));
        res.report.add(n + "_order_2", !p->is_identity() && (*p * *p).is_identity());
        bool lat = true;
        for (const auto& row : e1prime) lat = lat && in_lh(to_int(*p * to_rat(row)));
        res.report.add(n + "_preserves_L", lat);
        res.report.add(n + "_fixes_rho", *p * to_rat(rho) == to_rat(rho));
        res.report.add(n + "_fixes_cell_vector", *p * to_rat(cell) == to_rat(cell));
        bool perm = true;
        for (const auto& nm : cfg.names) {
            auto img = *p * to_rat(r[nm]);
            perm = perm && std::any_of(cfg.roots.begin(), cfg.roots.end(), [&](const EVec& x) { return to_rat(x) == img; });
        }
        res.report.add(n + "_permutes_m666", perm);
    }

    // closure of {phi12, phi23}
    std::vector<RMat> group{RMat::identity(14)};
    for (std::size_t k = 0; k < group.size() && group.size() <= 12; ++k)
        for (const auto* g : {&res.phi12, &res.phi23}) {
            RMat x = group[k] * *g;
            if (std::find(group.begin(), group.end(), x) == group.end()) group.push_back(x);
        }
    bool s3 = group.size() == 6 && !(res.phi12 * res.phi23 * res.phi12 * res.phi23).is_identity() &&
              power(res.phi12 * res.phi23, 3).is_identity();
    res.report.add("phi_generate_S3", s3, "group order " + std::to_string(group.size()));

    // each element permutes the three hands
    bool hands = true;
    for (const auto& g : group) {
        std::set<int> images;
        for (int i = 1; i <= 3; ++i) {
            auto img = g * to_rat(r["f" + std::to_string(i)]);
            for (int j = 1; j <= 3; ++j)
                if (img == to_rat(r["f" + std::to_string(j)])) images.insert(j);
        }
        hands = hands && images.size() == 3;
    }
    res.report.add("phi_permute_hands", hands);
    return res;
}

Report verify_relations() {
    Report rep;
    rep.append(spider_check().report);
    rep.append(deflate_check().report);
    for (const auto& row : coxeter_table()) {
        std::string alt;
        for (const auto& [d, o] : row.alternatives) alt += (alt.empty() ? "" : ",") + to_string(o);
        rep.add("coxeter_" + row.delta.type, row.matches && row.alternatives_match,
                "order " + to_string(row.order) + " expected " + row.delta.expected + " on " +
                    diagram_word(row.delta.nodes).str() + "; alternatives " + alt +
                    (row.order.kind == OrderKind::infinite ? "; " + row.order.reason : ""));
    }
    rep.append(verify_phi_flips(read_basis_file(data_path("e1prime.txt"))).report);
    return rep;
}

}  // namespace eislat

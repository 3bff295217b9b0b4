// Steps (b)-(g): from the first shell of the Leech lattice to a basis of
// Lambda+H with the Gram matrix of E2.
#include "eislat/isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <stdexcept>

namespace eislat {

namespace {

// Leech form <u,v> = -(sum conj(u_i) v_i)/3
Eint lip(const SVec& u, const SVec& v) {
    auto [p, q] = sdot(u, v);
    if (p % 3 != 0 || q % 3 != 0) throw std::logic_error("Leech inner product is not integral");
    return Eint(Int(-p / 3), Int(-q / 3));
}

// |u - v|^2 = -6 for shell vectors, i.e. Re<u,v> = -3, i.e. 2p - q = 18
bool close(const SVec& u, const SVec& v) {
    auto [p, q] = sdot(u, v);
    return 2 * p - q == 18;
}

bool adjacent_ip(const Eint& x) { return x.norm() == 3; }

}  // namespace

EVec LeechRoot::root() const {
    EVec r = lambda;
    r.push_back(Eint(1));
    r.push_back(Eint(Int(a), Int(1)));
    return r;
}

Eint leech_root_ip(const Eint& g, long a_r, long a_s) { return g + Eint(3) + Eint::theta() * Eint(Int(a_r - a_s), Int(0)); }

std::optional<long> orth_offset(const Eint& g) {
    // g + 3 + theta d = 0 with theta d = d + 2d w
    if (!g.b.fits_slong_p() || !g.a.fits_slong_p()) return std::nullopt;
    long x = g.a.get_si(), y = g.b.get_si();
    if (y % 2 != 0) return std::nullopt;
    long d = -y / 2;
    if (x != -3 - d) return std::nullopt;
    return d;
}

bool valid_simplex(const SimplexWitness& delta) {
    if (delta.size() != 24) return false;
    const Form f = form_leech();
    for (const auto& v : delta)
        if (f.raw(v, v) != Eint(-18) || !leech_contains(v)) return false;
    for (std::size_t i = 0; i < delta.size(); ++i)
        for (std::size_t j = i + 1; j < delta.size(); ++j) {
            EVec d = delta[i] - delta[j];
            if (f.raw(d, d) != Eint(-18)) return false;
        }
    return true;
}

namespace {

bool grow(const std::vector<SVec>& shell, std::vector<std::size_t>& clique, const std::vector<std::size_t>& cand) {
    if (clique.size() == 24) return true;
    for (std::size_t n = 0; n < cand.size(); ++n) {
        std::size_t c = cand[n];
        std::vector<std::size_t> next;
        for (std::size_t m = n + 1; m < cand.size(); ++m)
            if (close(shell[c], shell[cand[m]])) next.push_back(cand[m]);
        if (clique.size() + 1 + next.size() < 24) continue;
        clique.push_back(c);
        if (grow(shell, clique, next)) return true;
        clique.pop_back();
    }
    return false;
}

}  // namespace

std::optional<SimplexWitness> find_simplex(const std::vector<SVec>& shell, std::size_t start) {
    for (std::size_t s = start; s < shell.size(); ++s) {
        std::vector<std::size_t> cand;
        for (std::size_t k = s + 1; k < shell.size(); ++k)
            if (close(shell[s], shell[k])) cand.push_back(k);
        std::vector<std::size_t> clique{s};
        if (grow(shell, clique, cand)) {
            SimplexWitness w;
            for (auto k : clique) w.push_back(to_evec(shell[k]));
            return w;
        }
    }
    return std::nullopt;
}

std::vector<Quad> find_e8_quadruples(const SimplexWitness& delta) {
    const int n = static_cast<int>(delta.size());
    const Form f = form_leech();
    std::vector<std::vector<Eint>> g(n, std::vector<Eint>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[i][j] = *exact_div(f.raw(delta[i], delta[j]), Eint(3));
    std::vector<Quad> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = i + 1; l < n; ++l) {
                    if (j == i || k == i || k == j || l == j || l == k) continue;
                    // a_i - a_k etc. from the three orthogonalities
                    auto dik = orth_offset(g[i][k]), dil = orth_offset(g[i][l]), djl = orth_offset(g[j][l]);
                    if (!dik || !dil || !djl) continue;
                    long ai = 0, ak = -*dik, al = -*dil, aj = al + *djl;
                    if (!adjacent_ip(leech_root_ip(g[i][j], ai, aj))) continue;
                    if (!adjacent_ip(leech_root_ip(g[j][k], aj, ak))) continue;
                    if (!adjacent_ip(leech_root_ip(g[k][l], ak, al))) continue;
                    out.push_back(Quad{{i, j, k, l}, {ai, aj, ak, al}});
                }
    return out;
}

std::vector<OrthogonalPair> find_orthogonal_pairs(const SimplexWitness& delta, const std::vector<Quad>& quads,
                                                  std::size_t limit) {
    const Form f = form_leech();
    const int n = static_cast<int>(delta.size());
    std::vector<std::vector<std::optional<long>>> off(n, std::vector<std::optional<long>>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) off[x][y] = orth_offset(*exact_div(f.raw(delta[x], delta[y]), Eint(3)));
    std::vector<std::uint32_t> mask;
    for (const auto& q : quads) {
        std::uint32_t m = 0;
        for (int x : q.idx) m |= 1u << x;
        mask.push_back(m);
    }
    std::vector<OrthogonalPair> out;
    for (std::size_t p = 0; p < quads.size(); ++p)
        for (std::size_t q = p + 1; q < quads.size(); ++q) {
            if (mask[p] & mask[q]) continue;
            const Quad &q1 = quads[p], &q2 = quads[q];
            // a1[x] - (a2[y] + s) = orth offset, the same s for all 16 pairs
            std::optional<long> shift;
            bool ok = true;
            for (int s = 0; s < 4 && ok; ++s)
                for (int t = 0; t < 4 && ok; ++t) {
                    const auto& d = off[q1.idx[s]][q2.idx[t]];
                    if (!d) {
                        ok = false;
                        break;
                    }
                    long v = q1.a[s] - q2.a[t] - *d;
                    if (shift && *shift != v) ok = false;
                    shift = v;
                }
            if (!ok) continue;
            OrthogonalPair pr{q1, q2};
            for (auto& a : pr.q2.a) a += *shift;
            out.push_back(pr);
            if (out.size() >= limit) return out;
        }
    return out;
}

std::optional<OrthogonalPair> find_orthogonal_pair(const SimplexWitness& delta, const std::vector<Quad>& quads) {
    auto v = find_orthogonal_pairs(delta, quads, 1);
    if (v.empty()) return std::nullopt;
    return v.front();
}

StepF extend_to_3e8(const std::vector<SVec>& shell, const std::vector<LeechRoot>& eight) {
    std::vector<SVec> deltas;
    for (const auto& r : eight) deltas.push_back(to_svec(r.lambda));
    StepF out;
    for (const auto& v : shell) {
        bool near = true;
        for (const auto& d : deltas) near = near && close(v, d);
        if (!near) continue;
        ++out.at_min_distance;
        std::optional<long> a;
        bool ok = true;
        for (std::size_t k = 0; k < eight.size() && ok; ++k) {
            auto d = orth_offset(lip(v, deltas[k]));
            if (!d) {
                ok = false;
                break;
            }
            long av = eight[k].a + *d;
            if (a && *a != av) ok = false;
            a = av;
        }
        if (ok) out.orthogonal.push_back(LeechRoot{to_evec(v), *a});
    }
    return out;
}

std::optional<std::array<LeechRoot, 4>> e8_chain(const std::vector<LeechRoot>& cands) {
    const Form f = form_lh();
    const int n = static_cast<int>(cands.size());
    std::vector<EVec> r;
    for (const auto& c : cands) r.push_back(c.root());
    auto ip = [&](int x, int y) { return f.raw(r[x], r[y]); };  // 3 <,>
    auto adj = [&](int x, int y) { return ip(x, y).norm() == 27; };
    auto orth = [&](int x, int y) { return ip(x, y).is_zero(); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = i + 1; l < n; ++l) {
                    if (j == i || k == i || k == j || l == j || l == k) continue;
                    if (adj(i, j) && adj(j, k) && adj(k, l) && orth(i, k) && orth(j, l) && orth(i, l))
                        return std::array<LeechRoot, 4>{cands[i], cands[j], cands[k], cands[l]};
                }
    return std::nullopt;
}

std::optional<std::vector<EVec>> complete_hyperbolic(const std::array<std::array<EVec, 4>, 3>& hands) {
    const Form f = form_lh();
    const Form f2 = form_3e8h();
    const auto target = e2_rows();
    std::vector<EVec> rows;
    // fix phases along each chain so the Gram matches E2
    for (int h = 0; h < 3; ++h) {
        rows.push_back(hands[h][0]);
        for (int k = 1; k < 4; ++k) {
            Erat want = f2.ip(target[4 * h + k - 1], target[4 * h + k]);
            Erat have = f.ip(rows.back(), hands[h][k]);
            if (have.is_zero()) return std::nullopt;
            Erat u = want * inverse(have);
            if (!is_integral(u) || unit_index(to_int(u)) < 0) return std::nullopt;
            rows.push_back(scale(to_int(u), hands[h][k]));
        }
    }
    // orthogonal complement inside Lambda+H
    std::vector<EVec> basis;
    for (auto v : leech_lattice().basis) {
        v.push_back(Eint(0));
        v.push_back(Eint(0));
        basis.push_back(v);
    }
    for (int k = 12; k < 14; ++k) {
        EVec e(14, Eint(0));
        e[k] = Eint(1);
        basis.push_back(e);
    }
    EMat m(14, 12);
    for (int k = 0; k < 14; ++k)
        for (int j = 0; j < 12; ++j) m(k, j) = f.raw(rows[j], basis[k]);
    auto ker = left_kernel(m);
    if (ker.size() != 2) return std::nullopt;
    std::vector<EVec> hb;
    for (const auto& c : ker) {
        EVec v(14, Eint(0));
        for (int k = 0; k < 14; ++k) v = v + scale(c[k], basis[k]);
        hb.push_back(v);
    }
    // Gauss-style reduction of the binary form so that small isotropic vectors
    // show up in a small box
    for (int it = 0; it < 1000; ++it) {
        Eint a = f.raw(hb[0], hb[0]), c = f.raw(hb[1], hb[1]);
        if (a.is_zero()) break;
        if (!c.is_zero() && c.norm() < a.norm()) {
            std::swap(hb[0], hb[1]);
            continue;
        }
        Eint b = f.raw(hb[0], hb[1]);
        Eint best = b;
        EVec keep = hb[1];
        for (const Eint& q : {round_div(b, a), round_div(b.conj(), a), round_div(b, a).conj()}) {
            EVec v = hb[1] - scale(q, hb[0]);
            Eint nb = f.raw(hb[0], v);
            if (nb.norm() < best.norm()) {
                best = nb;
                keep = v;
            }
        }
        if (keep == hb[1]) break;
        hb[1] = keep;
    }
    // isotropic vectors in a small box, then a pair with <n1,n2> = theta
    std::vector<EVec> iso;
    const long R = 3;
    for (long a0 = -R; a0 <= R; ++a0)
        for (long b0 = -R; b0 <= R; ++b0)
            for (long a1 = -R; a1 <= R; ++a1)
                for (long b1 = -R; b1 <= R; ++b1) {
                    EVec v = scale(Eint(Int(a0), Int(b0)), hb[0]) + scale(Eint(Int(a1), Int(b1)), hb[1]);
                    if (is_zero(v) || !f.raw(v, v).is_zero()) continue;
                    iso.push_back(v);
                }
    const Eint th = Eint::theta();
    for (const auto& n1 : iso)
        for (const auto& n2 : iso) {
            Eint x = f.raw(n1, n2);  // 3 <n1,n2>
            if (x.norm() != 27) continue;
            // want <n1, u n2> = u <n1,n2> = theta
            auto u = exact_div(Eint(3) * th, x);
            if (!u || unit_index(*u) < 0) continue;
            std::vector<EVec> out = rows;
            out.push_back(n1);
            out.push_back(scale(*u, n2));
            if (f.gram_of(out) == f2.gram_of(target)) return out;
        }
    return std::nullopt;
}

SearchReport run_search(const std::vector<SVec>& shell) {
    SearchReport out;
    auto delta = find_simplex(shell);
    out.report.add("step_b_simplex", delta && valid_simplex(*delta));
    if (!delta) return out;
    out.delta = *delta;
    auto quads = find_e8_quadruples(*delta);
    out.quads = quads.size();
    out.report.add("step_c_quadruples", !quads.empty(), std::to_string(quads.size()));
    auto mk = [&](const Quad& q) {
        std::array<LeechRoot, 4> r;
        for (int k = 0; k < 4; ++k) r[k] = LeechRoot{(*delta)[q.idx[k]], q.a[k]};
        return r;
    };
    // take orthogonal pairs in order until step (f) yields a third E8 diagram
    auto pairs = find_orthogonal_pairs(*delta, quads, 2000);
    for (std::size_t skip = 0; skip < pairs.size(); ++skip) {
        const auto* pair = &pairs[skip];
        auto h1 = mk(pair->q1), h2 = mk(pair->q2);
        std::vector<LeechRoot> eight(h1.begin(), h1.end());
        eight.insert(eight.end(), h2.begin(), h2.end());
        StepF sf = extend_to_3e8(shell, eight);
        auto h3 = e8_chain(sf.orthogonal);
        if (!h3) continue;
        out.step_f_min_distance = sf.at_min_distance;
        out.step_f_orthogonal = sf.orthogonal.size();
        out.report.add("step_d_orthogonal_pair", true, "pair " + std::to_string(skip));
        out.report.add("step_f_candidates", true,
                       std::to_string(sf.at_min_distance) + " at minimal distance, " +
                           std::to_string(sf.orthogonal.size()) + " orthogonal");
        std::array<std::array<EVec, 4>, 3> hands;
        for (int k = 0; k < 4; ++k) {
            hands[0][k] = h1[k].root();
            hands[1][k] = h2[k].root();
            hands[2][k] = (*h3)[k].root();
        }
        auto basis = complete_hyperbolic(hands);
        out.report.add("step_g_hyperbolic_pair", basis.has_value());
        if (!basis) return out;
        out.basis = *basis;
        auto c = verify_change_of_basis(out.basis, e2_rows());
        out.report.append(c.report);
        return out;
    }
    out.report.add("step_d_orthogonal_pair", false);
    return out;
}

StepF step_f_from_basis(const std::vector<SVec>& shell, const std::vector<EVec>& e1, int hand1, int hand2) {
    std::vector<LeechRoot> eight;
    for (int h : {hand1, hand2})
        for (int k = 0; k < 4; ++k) {
            const EVec& r = e1.at(4 * h + k);
            int u = unit_index(r[12]);
            if (u < 0) throw std::invalid_argument("step f: hand root is not of the form (lambda; unit, *)");
            EVec n = scale(units()[u].conj(), r);
            if (n[13].b != 1 || !n[13].a.fits_slong_p()) throw std::invalid_argument("step f: unexpected H coordinate");
            eight.push_back(LeechRoot{EVec(n.begin(), n.begin() + 12), n[13].a.get_si()});
        }
    return extend_to_3e8(shell, eight);
}

}  // namespace eislat

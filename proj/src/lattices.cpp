#include "eislat/lattices.hpp"

#include "eislat/textio.hpp"

#include <algorithm>
#include <unordered_set>

namespace eislat {

namespace {

const TernaryCode& c12() {
    static const TernaryCode c = golay12();
    return c;
}
const TernaryCode& c4() {
    static const TernaryCode c = tetracode();
    return c;
}

}  // namespace

std::optional<LeechWitness> leech_contains(const EVec& v) {
    if (v.size() != 12) return std::nullopt;
    int m = residue_theta(v[0]);
    for (const auto& x : v)
        if (residue_theta(x) != m) return std::nullopt;
    LeechWitness w;
    w.m = m;
    const Eint th = Eint::theta();
    for (const auto& x : v) {
        auto y = exact_div(x - Eint(m), th);
        if (!y) return std::nullopt;  // cannot happen once residues agree
        w.c.push_back(residue_theta(*y));
    }
    if (!c12().contains(w.c)) return std::nullopt;
    Eint s(0);
    for (std::size_t i = 0; i < 12; ++i) {
        auto z = exact_div(v[i] - Eint(m) - th * Eint(w.c[i]), Eint(3));
        if (!z) return std::nullopt;
        s += *z;
        w.z.push_back(*z);
    }
    if (residue_theta(s) != m) return std::nullopt;
    return w;
}

bool e8_contains(const EVec& v) {
    if (v.size() != 4) return false;
    Word w;
    for (const auto& x : v) w.push_back(residue_theta(x));
    return c4().contains(w);
}

bool in_3e8h(const EVec& v) {
    if (v.size() != 14) return false;
    for (int b = 0; b < 3; ++b)
        if (!e8_contains(EVec(v.begin() + 4 * b, v.begin() + 4 * b + 4))) return false;
    return true;
}

bool in_lh(const EVec& v) {
    return v.size() == 14 && leech_contains(EVec(v.begin(), v.begin() + 12)).has_value();
}

HermitianLattice e8_lattice() {
    const Eint th = Eint::theta();
    std::vector<EVec> gens{{1, 1, -1, 0}, {0, 1, 1, 1}};
    for (int i = 0; i < 4; ++i) {
        EVec e(4, Eint(0));
        e[i] = th;
        gens.push_back(e);
    }
    return {"E8", form_e8(), row_basis(gens), e8_contains};
}

std::vector<EVec> leech_z_basis() { return read_rows_file(data_path("leech_basis.txt")); }

HermitianLattice leech_lattice() {
    return {"Lambda", form_leech(), row_basis(leech_z_basis()),
            [](const EVec& v) { return leech_contains(v).has_value(); }};
}

HermitianLattice h_lattice() {
    return {"H", form_h(), {{1, 0}, {0, 1}}, [](const EVec& v) { return v.size() == 2; }};
}

namespace {

// direct sum with H on the last two coordinates
std::vector<EVec> with_h_basis(const std::vector<EVec>& blocks, std::size_t width) {
    std::vector<EVec> out;
    for (const auto& b : blocks) {
        EVec v = b;
        v.resize(width + 2, Eint(0));
        out.push_back(v);
    }
    for (std::size_t k = width; k < width + 2; ++k) {
        EVec e(width + 2, Eint(0));
        e[k] = Eint(1);
        out.push_back(e);
    }
    return out;
}

}  // namespace

HermitianLattice lh_lattice() {
    return {"Lambda+H", form_lh(), with_h_basis(leech_lattice().basis, 12), in_lh};
}

HermitianLattice e8h_lattice() {
    std::vector<EVec> blocks;
    auto e8 = e8_lattice().basis;
    for (int k = 0; k < 3; ++k)
        for (const auto& b : e8) {
            EVec v(12, Eint(0));
            for (int i = 0; i < 4; ++i) v[4 * k + i] = b[i];
            blocks.push_back(v);
        }
    return {"3E8+H", form_3e8h(), with_h_basis(blocks, 12), in_3e8h};
}

Rat discriminant(const Form& f, const std::vector<EVec>& basis) {
    Erat d = det(f.gram_of(basis));
    if (sgn(d.b) != 0) throw std::logic_error("Hermitian determinant is not rational");
    return abs(d.a);
}

Rat discriminant(const HermitianLattice& k) { return discriminant(k.form, k.basis); }

EVec to_evec(const SVec& s) {
    EVec v(12);
    for (int i = 0; i < 12; ++i) v[i] = Eint(Int(s[2 * i]), Int(s[2 * i + 1]));
    return v;
}

SVec to_svec(const EVec& v) {
    SVec s{};
    for (int i = 0; i < 12; ++i) {
        if (!v[i].a.fits_slong_p() || !v[i].b.fits_slong_p() || abs(v[i].a) > 127 || abs(v[i].b) > 127)
            throw std::out_of_range("coordinate too large for compact vector");
        s[2 * i] = static_cast<std::int8_t>(v[i].a.get_si());
        s[2 * i + 1] = static_cast<std::int8_t>(v[i].b.get_si());
    }
    return s;
}

std::pair<long, long> sdot(const SVec& u, const SVec& v) {
    long p = 0, q = 0;
    for (int i = 0; i < 12; ++i) {
        long a = u[2 * i] - u[2 * i + 1], b = -u[2 * i + 1];  // conj(u_i)
        long c = v[2 * i], d = v[2 * i + 1];
        long bd = b * d;
        p += a * c - bd;
        q += a * d + b * c - bd;
    }
    return {p, q};
}

namespace {

struct Small {
    int a, b;
    int norm() const { return a * a - a * b + b * b; }
    int res() const { return f3(a + b); }
};

// Eisenstein integers with norm <= n, in a box large enough to contain them:
// |x|^2 = a^2 - ab + b^2 >= 3 b^2 / 4 and likewise for a.
std::vector<Small> ball(int n) {
    std::vector<Small> out;
    int r = 1;
    while (3 * r * r <= 4 * n) ++r;
    for (int a = -r; a <= r; ++a)
        for (int b = -r; b <= r; ++b)
            if (Small{a, b}.norm() <= n) out.push_back({a, b});
    std::sort(out.begin(), out.end(), [](Small x, Small y) { return x.norm() < y.norm(); });
    return out;
}

constexpr int kBudget = 18;  // sum of |v_i|^2 for Leech norm -6

}  // namespace

std::vector<EVec> shell_e8(long norm) {
    if (norm >= 0) throw std::invalid_argument("shell_e8: norm must be negative");
    int k = static_cast<int>(-norm);
    auto cand = ball(k);
    std::vector<EVec> out;
    std::array<Small, 4> cur{};
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == 4) {
            if (left != 0) return;
            EVec v;
            for (auto s : cur) v.push_back(Eint(Int(s.a), Int(s.b)));
            if (e8_contains(v)) out.push_back(v);
            return;
        }
        for (auto s : cand) {
            if (s.norm() > left) break;
            cur[i] = s;
            rec(i + 1, left - s.norm());
        }
    };
    rec(0, k);
    return out;
}

std::vector<SVec> leech_shell_by_shape() {
    std::vector<SVec> out;
    const auto all = ball(kBudget);
    for (int m : {0, 1, -1}) {
        for (const auto& c : c12().words) {
            // candidates per coordinate: v = t + 3z, t = m + theta c_i, sorted by norm
            std::array<std::vector<std::pair<Small, int>>, 12> cand;  // (v, residue of z)
            std::array<int, 13> minrest{};
            for (int i = 0; i < 12; ++i) {
                Small t{m + c[i], 2 * c[i]};
                for (auto v : all) {
                    int da = v.a - t.a, db = v.b - t.b;
                    if (da % 3 || db % 3) continue;
                    cand[i].push_back({v, f3(da / 3 + db / 3)});
                }
            }
            for (int i = 11; i >= 0; --i) minrest[i] = minrest[i + 1] + cand[i].front().first.norm();
            if (minrest[0] > kBudget) continue;
            SVec cur{};
            std::function<void(int, int, int)> rec = [&](int i, int left, int zres) {
                if (i == 12) {
                    if (left == 0 && f3(zres - m) == 0) out.push_back(cur);
                    return;
                }
                for (const auto& [v, zr] : cand[i]) {
                    int n = v.norm();
                    if (n > left) break;
                    if (left - n < minrest[i + 1]) continue;
                    cur[2 * i] = static_cast<std::int8_t>(v.a);
                    cur[2 * i + 1] = static_cast<std::int8_t>(v.b);
                    rec(i + 1, left - n, zres + zr);
                }
            };
            rec(0, kBudget, 0);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SVec> leech_shell_by_coordinate() {
    // prefixes of Golay codewords, keyed by base-3 digits, per length
    std::array<std::unordered_set<std::uint32_t>, 13> prefix;
    for (const auto& w : c12().words) {
        std::uint32_t k = 0;
        prefix[0].insert(0);
        for (int i = 0; i < 12; ++i) {
            k = 3 * k + static_cast<std::uint32_t>(w[i] + 1);
            prefix[i + 1].insert(k);
        }
    }
    const auto all = ball(kBudget);
    std::vector<SVec> out;
    for (int m : {0, 1, -1}) {
        std::vector<std::pair<Small, int>> cand;  // (v, codeword digit)
        for (auto v : all) {
            if (v.res() != m) continue;
            // (v - m)/theta, theta = 1 + 2w, 1/theta = -theta/3 = (-1 - 2w)/3
            Small d{v.a - m, v.b};
            // d * conj(theta) / 3 with conj(theta) = -1 - 2w... use exact formula
            int pa = -d.a + 2 * d.b, pb = -2 * d.a + d.b;  // d * (-theta) = d*(-1-2w), expanded
            // (-theta) d / 3 = d / theta
            int ya = pa / 3, yb = pb / 3;
            cand.push_back({v, f3(ya + yb)});
        }
        const int minnorm = m == 0 ? 0 : 1;
        SVec cur{};
        std::function<void(int, int, std::uint32_t, int)> rec = [&](int i, int left, std::uint32_t key, int zres) {
            if (i == 12) {
                if (left == 0 && f3(zres - m) == 0) out.push_back(cur);
                return;
            }
            for (const auto& [v, ci] : cand) {
                int n = v.norm();
                if (n > left) break;
                if (left - n < (11 - i) * minnorm) continue;
                std::uint32_t k = 3 * key + static_cast<std::uint32_t>(ci + 1);
                if (!prefix[i + 1].count(k)) continue;
                // z = (v - m - theta c)/3
                int za = (v.a - m - ci) / 3, zb = (v.b - 2 * ci) / 3;
                cur[2 * i] = static_cast<std::int8_t>(v.a);
                cur[2 * i + 1] = static_cast<std::int8_t>(v.b);
                rec(i + 1, left - n, k, zres + za + zb);
            }
        };
        rec(0, kBudget, 0, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool affine_e8_check(const EVec& c, const EVec& d, const EVec& e, const EVec& f, const EVec& bprime) {
    const Form g = form_e8();
    const std::array<const EVec*, 5> r{&bprime, &c, &d, &e, &f};
    for (auto* x : r) {
        if (x->size() != 4 || is_zero(*x)) throw std::invalid_argument("affine_e8_check: expects nonzero 4-vectors");
        if (!e8_contains(*x) || g.norm(*x) != Erat(-3)) return false;
    }
    // chain b'-c-d-e-f: consecutive adjacent, others orthogonal
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) {
            Eint p = g.raw(*r[i], *r[j]);
            if ((j == i + 1) != (p.norm() == 3) || (j != i + 1 && !p.is_zero())) return false;
        }
    const Eint two_w = Eint(2) + Eint::w();
    EVec s = bprime + scale(two_w, c) + scale(Eint(2), d) + scale(two_w, e) + f;
    return is_zero(s);
}

Rat real_form(const Form& f, const EVec& u, const EVec& v) {
    Erat z = f.ip(u, v);
    // Re(a + b w) = a - b/2
    return Rat(2, 3) * (z.a - z.b / 2);
}

}  // namespace eislat

namespace eislat {

// Coset by coset: for each m and codeword c the z part is a coordinatewise
// nearest-point problem with one congruence on the sum, solved by a small DP
// over residues mod theta. Floating point only chooses; callers verify.
EVec leech_closest(const std::vector<cplx>& t) {
    if (t.size() != 12) throw std::invalid_argument("leech_closest: expected 12 coordinates");
    // a + b w as a complex number; residue mod theta is (a + b) mod 3
    auto val = [](long a, long b) { return cplx(a - 0.5 * b, 0.8660254037844386 * b); };
    auto res = [](long a, long b) { return static_cast<int>((((a + b) % 3) + 3) % 3); };  // 0, 1, 2 = -1
    static const long du[7][2] = {{0, 0}, {1, 0}, {0, 1}, {-1, -1}, {-1, 0}, {0, -1}, {1, 1}};
    const cplx th = val(1, 2);
    static const std::vector<Word>& words = c12().words;
    double best = 1e300;
    int best_m = 0;
    std::size_t best_c = 0;
    std::array<std::array<long, 2>, 12> best_z{};
    for (int m = -1; m <= 1; ++m)
        for (std::size_t w = 0; w < words.size(); ++w) {
            const Word& c = words[w];
            // nearest z in each residue class: the nearest point and its six
            // unit neighbours cover all three classes
            double cost[12][3];
            long pick[12][3][2];
            for (int i = 0; i < 12; ++i) {
                cplx y = (t[i] - double(m) - th * double(c[i])) / 3.0;
                double bb = y.imag() / 0.8660254037844386;
                long b0 = std::lround(bb), a0 = std::lround(y.real() + 0.5 * b0);
                // refine the nearest point among its neighbours
                double d0 = std::norm(y - val(a0, b0));
                long na = a0, nb = b0;
                for (const auto& d : du) {
                    double e = std::norm(y - val(a0 + d[0], b0 + d[1]));
                    if (e < d0) d0 = e, na = a0 + d[0], nb = b0 + d[1];
                }
                for (int r = 0; r < 3; ++r) cost[i][r] = 1e300;
                for (const auto& d : du) {
                    long a = na + d[0], b = nb + d[1];
                    double e = std::norm(y - val(a, b));
                    int r = res(a, b);
                    if (e < cost[i][r]) cost[i][r] = e, pick[i][r][0] = a, pick[i][r][1] = b;
                }
            }
            // dp over the residue of the partial sum
            double dp[3] = {0, 1e300, 1e300};
            int from[12][3][2];
            for (int i = 0; i < 12; ++i) {
                double nd[3] = {1e300, 1e300, 1e300};
                for (int s = 0; s < 3; ++s) {
                    if (dp[s] >= 1e300) continue;
                    for (int r = 0; r < 3; ++r) {
                        int ns = (s + r) % 3;
                        double v = dp[s] + cost[i][r];
                        if (v < nd[ns]) nd[ns] = v, from[i][ns][0] = s, from[i][ns][1] = r;
                    }
                }
                for (int s = 0; s < 3; ++s) dp[s] = nd[s];
            }
            int want = (m + 3) % 3;
            if (9 * dp[want] >= best) continue;
            best = 9 * dp[want];
            best_m = m;
            best_c = w;
            int s = want;
            for (int i = 11; i >= 0; --i) {
                int r = from[i][s][1];
                best_z[i] = {pick[i][r][0], pick[i][r][1]};
                s = from[i][s][0];
            }
        }
    EVec out(12);
    const Eint the = Eint::theta();
    const Word& c = words[best_c];
    for (int i = 0; i < 12; ++i)
        out[i] = Eint(best_m) + the * Eint(c[i]) + Eint(3) * Eint(Int(best_z[i][0]), Int(best_z[i][1]));
    return out;
}

}  // namespace eislat

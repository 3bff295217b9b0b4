#include "eislat/reduction.hpp"

#include "eislat/diagram.hpp"
#include "eislat/lattices.hpp"
#include "eislat/reflections.hpp"
#include "eislat/textio.hpp"

#include "json.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace eislat {

namespace {

std::optional<EVec> integral(const Vec<Erat>& v) {
    EVec out;
    for (const auto& x : v) {
        if (!is_integral(x)) return std::nullopt;
        out.push_back(to_int(x));
    }
    return out;
}

Erat leech_ip(const EVec& u, const EVec& v) { return form_leech().ip(u, v); }

// <lambda,lambda> as an integer
Int leech_norm(const EVec& l) {
    Erat n = leech_ip(l, l);
    if (n.b != 0 || n.a.get_den() != 1) throw std::logic_error("Leech norm is not a rational integer");
    return n.a.get_num();
}

const Eint W = Eint::w();
const Eint W2 = Eint::w2();

}  // namespace

// ---- translations ----

Erat Translation::z() const {
    Erat t = to_rat(Eint::theta());
    return Erat(Rat(t.a * alpha / 2), Rat(t.b * alpha / 2));
}

RMat Translation::matrix() const {
    RMat m = RMat::identity(14);
    const Erat th = to_rat(Eint::theta());
    const Erat thi = inverse(th), thbi = inverse(th.conj());
    for (int i = 0; i < 12; ++i) {
        m(i, 12) = to_rat(lambda[i]);
        // theta^-1 <lambda, x>, the Leech form being -(1/3) sum conj(l_i) x_i
        m(13, i) = thi * to_rat(lambda[i]).conj() * Erat(Rat(-1, 3), Rat(0));
    }
    Erat half_norm(Rat(Rat(leech_norm(lambda)) / 2), Rat(0));
    m(13, 12) = thbi * (z() - half_norm);
    return m;
}

EVec Translation::apply(const EVec& v) const {
    auto r = integral(matrix() * to_rat(v));
    if (!r) throw std::domain_error("translation: image is not integral");
    return *r;
}

Translation build_translation(const EVec& lambda, const Int& alpha) {
    if (lambda.size() != 12 || !leech_contains(lambda)) throw std::invalid_argument("translation: lambda is not in Lambda");
    Int n = leech_norm(lambda);
    if (((alpha - n) % 2) != 0) throw std::invalid_argument("translation: alpha has the wrong parity");
    return Translation{lambda, alpha};
}

Translation compose(const Translation& t1, const Translation& t2) {
    // With our form conjugate-linear in the first slot the cross term is
    // im <l2,l1> = -b theta / 2 for <l1,l2> = a + b w.
    Erat g = leech_ip(t1.lambda, t2.lambda);
    if (g.b.get_den() != 1) throw std::logic_error("compose: Leech inner product is not integral");
    EVec l(12);
    for (int i = 0; i < 12; ++i) l[i] = t1.lambda[i] + t2.lambda[i];
    return Translation{l, Int(t1.alpha + t2.alpha - g.b.get_num())};
}

// ---- generators ----

EVec root_r1() {
    EVec v(14, Eint(0));
    v[12] = Eint(1);
    v[13] = W2;
    return v;
}

EVec root_r2() {
    EVec v(14, Eint(0));
    v[12] = Eint(1);
    v[13] = -W;
    return v;
}

Rat leech_real_det(const std::vector<EVec>& basis) {
    const Form f = form_leech();
    RMat g(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = Erat(real_form(f, basis[i], basis[j]), Rat(0));
    return det(g).a;
}

GeneratorSet build_generators(const std::vector<EVec>& basis, const ChangeOfBasis& c) {
    if (basis.size() != 24) throw std::invalid_argument("generators: expected 24 Leech vectors");
    for (const auto& l : basis)
        if (l.size() != 12 || !leech_contains(l)) throw std::invalid_argument("generators: a basis vector is not in Lambda");
    Rat d = leech_real_det(basis);
    if (d != 1 && d != -1) throw std::invalid_argument("generators: vectors do not span Lambda over Z");

    GeneratorSet out;
    const Form f = form_3e8h();
    auto push = [&](const EVec& lh, std::string why) {
        auto g = integral(c.c * to_rat(lh));
        if (!g || !in_3e8h(*g) || f.raw(*g, *g) != Eint(-3)) throw std::logic_error("generators: image is not a root of 3E8+H");
        out.lh.push_back(lh);
        out.roots.push_back(*g);
        out.provenance.push_back(std::move(why));
    };
    for (std::size_t j = 0; j < 24; ++j) {
        Int n = leech_norm(basis[j]);
        Int alpha = ((n % 2) + 2) % 2;
        Translation t = build_translation(basis[j], alpha);
        std::string k = std::to_string(j + 1);
        push(t.apply(root_r1()), "T_" + k + "(r1)");
        push(t.apply(root_r2()), "T_" + k + "(r2)");
    }
    push(root_r1(), "r1");
    push(root_r2(), "r2");
    return out;
}

const GeneratorSet& default_generators() {
    static const GeneratorSet g = [] {
        auto c = verify_change_of_basis(read_basis_file(data_path("e1.txt")), e2_rows());
        return build_generators(leech_z_basis(), c);
    }();
    return g;
}

// ---- height reduction ----

namespace {

struct NodeIndex {
    std::vector<EVec> roots;
    std::map<EVec, int, bool (*)(const EVec&, const EVec&)> canon{lex_less};
    NodeIndex() {
        roots = Diagram::get().roots();
        for (std::size_t k = 0; k < roots.size(); ++k) canon[canonical(roots[k])] = static_cast<int>(k);
    }
    // node index (0-based) and unit u with y = u * node
    std::optional<std::pair<int, Eint>> find(const EVec& y) const {
        auto it = canon.find(canonical(y));
        if (it == canon.end()) return std::nullopt;
        auto u = unit_ratio(y, roots[it->second]);
        if (!u) return std::nullopt;
        return std::make_pair(it->second, *u);
    }
};

const NodeIndex& node_index() {
    static const NodeIndex n;
    return n;
}

bool is_reflection_unit(const Eint& e) { return e == W || e == W2; }

}  // namespace

ReductionCertificate reduce_height(const EVec& y0, const ReduceOptions& opt, const GeneratorSet& gens) {
    const Form f = form_3e8h();
    if (!is_root(f, y0) || !in_3e8h(y0)) throw std::invalid_argument("reduce_height: not a root of L");
    const auto& nodes = node_index();
    long used = 0;

    ReductionCertificate cert;
    cert.target = y0;
    std::vector<CertStep> steps;

    std::function<bool(EVec, int)> attempt = [&](EVec y, int left) -> bool {
        const std::size_t mark = steps.size();
        Sqrt3 h = height_sq(y);
        while (true) {
            if (auto hit = nodes.find(y)) {
                cert.terminal_node = hit->first + 1;
                cert.terminal_unit = hit->second;
                return true;
            }
            bool moved = false;
            for (std::size_t k = 0; k < nodes.roots.size() && !moved; ++k)
                for (const Eint& eps : {W, W2}) {
                    EVec y2 = reflect(f, nodes.roots[k], eps, y);
                    Sqrt3 h2 = height_sq(y2);
                    if (h2 < h) {
                        if (++used > opt.budget) throw std::runtime_error("reduce_height: step budget exhausted");
                        y = std::move(y2);
                        h = h2;
                        steps.push_back({false, static_cast<int>(k) + 1, eps});
                        moved = true;
                        break;
                    }
                }
            if (!moved) break;
        }
        // stuck: perturb by an already certified generator
        if (left > 0)
            for (int j : opt.perturb_policy) {
                if (std::find(opt.certified.begin(), opt.certified.end(), j) == opt.certified.end()) continue;
                for (const Eint& eps : {W, W2}) {
                    const std::size_t here = steps.size();
                    steps.push_back({true, j, eps});
                    if (attempt(reflect(f, gens.roots.at(j - 1), eps, y), left - 1)) return true;
                    steps.resize(here);
                }
            }
        steps.resize(mark);
        return false;
    };

    if (!attempt(y0, opt.max_perturbations))
        throw std::runtime_error("reduce_height: stuck with no admissible perturbation");
    cert.steps = std::move(steps);
    return cert;
}

CertCheck check_certificate(const ReductionCertificate& cert, const GeneratorSet& gens) {
    const Form f = form_3e8h();
    const auto& nodes = node_index();
    if (!is_root(f, cert.target) || !in_3e8h(cert.target)) return {false, "target is not a root of L"};
    EVec y = cert.target;
    Sqrt3 h = height_sq(y);
    for (std::size_t s = 0; s < cert.steps.size(); ++s) {
        const auto& st = cert.steps[s];
        std::string where = "step " + std::to_string(s + 1);
        if (!is_reflection_unit(st.eps)) return {false, where + ": eps is not w or wbar"};
        if (st.perturb) {
            if (st.index < 1 || st.index > static_cast<int>(gens.roots.size())) return {false, where + ": bad generator"};
            y = reflect(f, gens.roots[st.index - 1], st.eps, y);
            h = height_sq(y);
            continue;
        }
        if (st.index < 1 || st.index > 26) return {false, where + ": bad node"};
        y = reflect(f, nodes.roots[st.index - 1], st.eps, y);
        Sqrt3 h2 = height_sq(y);
        if (!(h2 < h)) return {false, where + ": height does not decrease"};
        h = h2;
    }
    if (cert.terminal_node < 1 || cert.terminal_node > 26) return {false, "bad terminal node"};
    if (unit_index(cert.terminal_unit) < 0) return {false, "terminal unit is not a unit"};
    if (y != scale(cert.terminal_unit, nodes.roots[cert.terminal_node - 1]))
        return {false, "replay does not end at the terminal node"};
    return {true, ""};
}

std::vector<ReductionCertificate> certify_generators(const GeneratorSet& gens, int max_perturbations) {
    const std::size_t n = gens.roots.size();
    std::vector<ReductionCertificate> out(n);
    ReduceOptions opt;
    opt.max_perturbations = max_perturbations;
    std::vector<int> order = opt.perturb_policy;
    for (std::size_t k = 1; k <= n; ++k)
        if (std::find(order.begin(), order.end(), static_cast<int>(k)) == order.end()) order.push_back(static_cast<int>(k));
    std::vector<int> certified;
    for (int k : order) {
        ReduceOptions o = opt;
        o.certified = certified;
        auto c = reduce_height(gens.roots.at(k - 1), o, gens);
        c.generator = k;
        bool clean = std::none_of(c.steps.begin(), c.steps.end(), [](const CertStep& s) { return s.perturb; });
        if (clean) certified.push_back(k);
        out[k - 1] = std::move(c);
    }
    return out;
}

Report check_certificates(const std::vector<ReductionCertificate>& certs, const GeneratorSet& gens) {
    Report rep;
    const std::size_t n = gens.roots.size();
    std::vector<const ReductionCertificate*> by(n + 1, nullptr);
    bool unique = certs.size() == n;
    for (const auto& c : certs) {
        if (c.generator < 1 || c.generator > static_cast<int>(n) || by[c.generator]) unique = false;
        else by[c.generator] = &c;
    }
    rep.add("certificates_present", unique, std::to_string(certs.size()));
    bool replay = true, targets = true, deps = true;
    std::size_t most = 0, perturbed = 0;
    std::string failed;
    for (std::size_t k = 1; k <= n; ++k) {
        if (!by[k]) continue;
        const auto& c = *by[k];
        auto r = check_certificate(c, gens);
        if (!r.ok) {
            replay = false;
            failed += " g" + std::to_string(k) + " (" + r.reason + ")";
        }
        targets = targets && c.target == gens.roots[k - 1];
        std::size_t p = 0;
        for (const auto& s : c.steps) {
            if (!s.perturb) continue;
            ++p;
            const auto* src = (s.index >= 1 && s.index <= static_cast<int>(n)) ? by[s.index] : nullptr;
            bool ok = src && src != &c && check_certificate(*src, gens).ok &&
                      std::none_of(src->steps.begin(), src->steps.end(), [](const CertStep& t) { return t.perturb; });
            deps = deps && ok;
        }
        most = std::max(most, p);
        perturbed += p > 0;
    }
    rep.add("replay_all", replay, failed);
    rep.add("targets_are_generators", targets);
    rep.add("perturbation_sources_certified_first", deps);
    rep.add("at_most_one_perturbation", most <= 1,
            std::to_string(perturbed) + " certificates use a perturbation");
    return rep;
}

std::string certificate_to_json(const ReductionCertificate& cert) {
    using nlohmann::json;
    auto eps = [](const Eint& e) { return e == W ? "w" : e == W2 ? "wbar" : to_string(e); };
    json j;
    if (cert.generator) j["generator"] = cert.generator;
    json t = json::array();
    for (const auto& x : cert.target) t.push_back(to_string(x));
    j["target"] = t;
    json st = json::array();
    for (const auto& s : cert.steps) {
        json e;
        e[s.perturb ? "perturb" : "node"] = s.index;
        e["eps"] = eps(s.eps);
        st.push_back(e);
    }
    j["steps"] = st;
    j["terminal"] = {{"node", cert.terminal_node}, {"unit", to_string(cert.terminal_unit)}};
    return j.dump(1);
}

ReductionCertificate certificate_from_json(const std::string& text) {
    using nlohmann::json;
    try {
        json j = json::parse(text);
        ReductionCertificate c;
        c.generator = j.value("generator", 0);
        for (const auto& x : j.at("target")) c.target.push_back(parse_eint(x.get<std::string>()));
        for (const auto& e : j.at("steps")) {
            CertStep s;
            s.perturb = e.contains("perturb");
            s.index = s.perturb ? e.at("perturb").get<int>() : e.at("node").get<int>();
            std::string eps = e.at("eps").get<std::string>();
            s.eps = eps == "w" ? W : eps == "wbar" ? W2 : parse_eint(eps);
            c.steps.push_back(s);
        }
        c.terminal_node = j.at("terminal").at("node").get<int>();
        c.terminal_unit = parse_eint(j.at("terminal").at("unit").get<std::string>());
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("certificate: ") + e.what());
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument(std::string("certificate: ") + e.what());
    }
}

// ---- h-reduction ----

int psi_beta2(const EVec& lambda) {
    Int k = (-3 - leech_norm(lambda)) / 3;
    return mpz_odd_p(k.get_mpz_t()) ? 1 : 0;
}

EVec PsiRoot::root() const {
    Int k = (-3 - leech_norm(lambda)) / 3;
    if ((k + beta2) % 2 != 0) throw std::invalid_argument("psi root: beta does not match lambda");
    EVec v = lambda;
    v.push_back(Eint(1));
    v.push_back(Eint(Int((k + beta2) / 2 + n), k));
    return v;
}

Int h_squared(const EVec& mu) { return mu.at(12).norm(); }

ConwayResult conway_reduce(const EVec& mu0) {
    const Form f = form_lh();
    if (!is_root(f, mu0) || !in_lh(mu0)) throw std::invalid_argument("conway_reduce: not a root of Lambda+H");
    ConwayResult out;
    EVec mu = mu0;
    const Erat th = to_rat(Eint::theta());
    while (h_squared(mu) > 1) {
        const Eint s = mu[12];
        if (s.is_zero()) throw std::domain_error("conway_reduce: root orthogonal to rho");
        // w = mu / s = (l; 1, *)
        const Erat si = inverse(to_rat(s));
        std::vector<cplx> l(12);
        Vec<Erat> lr(12);
        for (int i = 0; i < 12; ++i) {
            lr[i] = to_rat(mu[i]) * si;
            l[i] = lr[i].to_complex();
        }
        EVec lam = leech_closest(l);
        Rat dist(0);
        for (int i = 0; i < 12; ++i) dist += (lr[i] - to_rat(lam[i])).norm();
        if (dist > 9) throw std::domain_error("conway_reduce: no Leech vector within the covering radius");

        PsiRoot r{lam, psi_beta2(lam), Int(0)};
        const Erat K = f.ip(r.root(), mu);
        const Erat S = to_rat(s);
        std::optional<ConwayStep> best;
        Int best_n2 = h_squared(mu);
        for (const Eint& eps : {W, W2}) {
            const Erat one_eps = to_rat(Eint(1) - eps) * Erat(Rat(1, 3), Rat(0));
            const Erat X = S + one_eps * K, Y = one_eps * th * S;
            cplx xc = X.to_complex(), yc = Y.to_complex();
            long n0 = std::lround(-std::real(xc * std::conj(yc)) / std::norm(yc));
            for (long n = n0 - 2; n <= n0 + 2; ++n) {
                Erat s2 = X + Y * Erat(Rat(n), Rat(0));
                if (!is_integral(s2)) throw std::logic_error("conway_reduce: non-integral coordinate");
                Int n2 = to_int(s2).norm();
                if (n2 < best_n2) {
                    best_n2 = n2;
                    best = ConwayStep{PsiRoot{lam, r.beta2, Int(n)}, eps, n2};
                }
            }
        }
        if (!best) throw std::domain_error("conway_reduce: no Psi reflection lowers h");
        mu = reflect(f, best->r.root(), best->eps, mu);
        if (h_squared(mu) != best->h2_after) throw std::logic_error("conway_reduce: predicted h differs");
        out.steps.push_back(*best);
    }
    out.final_root = mu;
    return out;
}

// ---- minimal height ----

MinHeightScan min_height_scan() {
    const auto& D = Diagram::get();
    const Form f = form_3e8h();
    std::vector<EVec> x;
    for (int i : D.points()) x.push_back(D.node(i).root);
    const EVec& wp = D.w_p;
    // r = sum -<x_i,r> x_i / 3 + <w_P,r> w_P / 3 needs an orthogonal frame
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (f.raw(x[i], x[i]) != Eint(-3) || !f.raw(wp, x[i]).is_zero())
            throw std::logic_error("min_height_scan: points and w_P are not an orthogonal frame");
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (!f.raw(x[i], x[j]).is_zero()) throw std::logic_error("min_height_scan: points are not orthogonal");
    }
    if (f.raw(wp, wp) != Eint(3)) throw std::logic_error("min_height_scan: |w_P|^2 != 3");
    // <rho, x_i> is the same for every point, so the height of r depends on
    // the multiset of <x_i, r> only
    const Cint px = ip(D.rho, embed(x[0]));
    for (const auto& xi : x)
        if (ip(D.rho, embed(xi)) != px) throw std::logic_error("min_height_scan: <rho, x_i> not constant");
    const cplx pxc = px.to_complex(), pwc = ip(D.rho, embed(wp)).to_complex();
    const double rho2 = ip(D.rho, D.rho).to_complex().real();
    auto approx_height = [&](const std::vector<Eint>& vals, const Eint& c) {
        cplx s = 0;
        for (const auto& a : vals) s += -a.to_complex() / 3.0 * pxc;
        s += c.to_complex() / 3.0 * pwc;
        return 26.0 * std::abs(s) / std::abs(rho2);
    };

    // admissible values of <x_i, r>: theta E, norm at most 18 (3, 9 or 12)
    std::vector<Eint> values;
    const Eint th = Eint::theta();
    for (const Eint& base : {th, Eint(3), Eint(2) * th})
        for (const Eint& u : units()) values.push_back(u * base);

    MinHeightScan out;
    const auto& nodes = node_index();
    std::set<EVec, bool (*)(const EVec&, const EVec&)> seen(lex_less);
    for (const Eint& c : {Eint(0), th, Eint(3)}) {
        const Int target = 9 + c.norm();
        std::vector<Eint> ms;
        // multisets by nondecreasing value index
        std::function<void(std::size_t, Int)> grow = [&](std::size_t from, Int left) {
            if (left == 0) {
                ++out.multisets;
                if (approx_height(ms, c) > 1 + 1e-6) return;
                // every placement of the multiset on the 13 points
                std::vector<Eint> a(13, Eint(0));
                std::vector<bool> used(ms.size(), false);
                std::function<void(std::size_t, std::size_t)> place = [&](std::size_t pos, std::size_t placed) {
                    if (placed == ms.size()) {
                        ++out.reconstructed;
                        EVec r = scale(c, wp);
                        for (std::size_t i = 0; i < 13; ++i)
                            if (!a[i].is_zero()) r = r - scale(a[i], x[i]);
                        EVec q;
                        for (const auto& e : r) {
                            auto d = exact_div(e, Eint(3));
                            if (!d) return;
                            q.push_back(*d);
                        }
                        if (!in_3e8h(q) || f.raw(q, q) != Eint(-3)) return;
                        Sqrt3 h = height_sq(q);
                        if (h > Sqrt3(1)) return;
                        if (!seen.insert(q).second) return;
                        ScanHit hit{q, c, 0, h};
                        if (auto nd = nodes.find(q)) hit.node = nd->first + 1;
                        out.hits.push_back(hit);
                        return;
                    }
                    if (pos == 13 || 13 - pos < ms.size() - placed) return;
                    place(pos + 1, placed);  // leave this point orthogonal
                    for (std::size_t k = 0; k < ms.size(); ++k) {
                        if (used[k]) continue;
                        // equal values are interchangeable: use the first unused copy
                        bool dup = false;
                        for (std::size_t j = 0; j < k; ++j) dup = dup || (!used[j] && ms[j] == ms[k]);
                        if (dup) continue;
                        used[k] = true;
                        a[pos] = ms[k];
                        place(pos + 1, placed + 1);
                        a[pos] = Eint(0);
                        used[k] = false;
                    }
                };
                place(0, 0);
                return;
            }
            if (ms.size() == 13) return;
            for (std::size_t k = from; k < values.size(); ++k) {
                Int nk = values[k].norm();
                if (nk > left) continue;
                ms.push_back(values[k]);
                grow(k, left - nk);
                ms.pop_back();
            }
        };
        grow(0, target);
    }
    return out;
}

}  // namespace eislat

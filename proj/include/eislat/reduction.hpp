// Generators of the reflection group from Heisenberg translations, the height
// reduction to the 26 nodes with replayable certificates, the reduction of the
// Lambda+H height h(r) = |<r, rho>/theta|, and the scan for roots of minimal height.
#pragma once

#include "eislat/form.hpp"
#include "eislat/isomorphism.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace eislat {

// ---- translations in Lambda+H coordinates ----

// T_{lambda, z} with z = theta * alpha / 2; alpha == <lambda,lambda> mod 2.
struct Translation {
    EVec lambda;  // 12 coordinates
    Int alpha{0};
    Erat z() const;
    RMat matrix() const;  // acts on columns
    EVec apply(const EVec& v) const;  // throws std::domain_error if the image is not integral
};
// Throws std::invalid_argument when lambda is not in Lambda or alpha has the wrong parity.
Translation build_translation(const EVec& lambda, const Int& alpha);
// Parameters of T1 o T2 by the composition law (the im term taken as im <l2, l1>).
Translation compose(const Translation& t1, const Translation& t2);

// ---- the 50 generators ----

EVec root_r1();  // (0^12; 1, w^2)
EVec root_r2();  // (0^12; 1, -w)

struct GeneratorSet {
    std::vector<EVec> lh;     // Lambda+H coordinates
    std::vector<EVec> roots;  // 3E8+H coordinates, g_k = roots[k-1]
    std::vector<std::string> provenance;
};
// g_{2j-1} = T_j(r1), g_{2j} = T_j(r2) for j = 1..24, then g_49 = r1, g_50 = r2,
// where T_j is the translation by basis[j-1] with alpha in {0, 1}.
// Throws std::invalid_argument if the basis does not span Lambda over Z.
GeneratorSet build_generators(const std::vector<EVec>& basis, const ChangeOfBasis& c);
// Pinned Leech basis and the shipped E1.
const GeneratorSet& default_generators();
// Determinant of the real Gram matrix (2/3) Re <u_i, u_j> of 24 Leech vectors.
Rat leech_real_det(const std::vector<EVec>& basis);

// ---- height reduction with certificates (3E8+H coordinates) ----

struct CertStep {
    bool perturb = false;
    int index = 0;  // node 1..26, or generator 1..50 when perturb
    Eint eps;       // w or wbar
};

struct ReductionCertificate {
    int generator = 0;  // 0 if the target is not one of the 50
    EVec target;
    std::vector<CertStep> steps;
    int terminal_node = 0;  // 1..26
    Eint terminal_unit{1};
};

struct ReduceOptions {
    std::vector<int> perturb_policy{3, 4, 6};
    std::vector<int> certified;  // generators allowed as perturbations
    int max_perturbations = 1;
    long budget = 10000;  // reflection steps over all attempts
};

// Throws std::runtime_error when stuck with no admissible perturbation or over budget.
ReductionCertificate reduce_height(const EVec& y0, const ReduceOptions& opt = {},
                                   const GeneratorSet& gens = default_generators());

struct CertCheck {
    bool ok = false;
    std::string reason;
};
CertCheck check_certificate(const ReductionCertificate& cert, const GeneratorSet& gens = default_generators());

// All 50, dependency ordered: the policy generators first without perturbation.
std::vector<ReductionCertificate> certify_generators(const GeneratorSet& gens = default_generators(),
                                                     int max_perturbations = 1);
// Each certificate replays, targets its generator, and perturbs only by
// generators certified without perturbation.
Report check_certificates(const std::vector<ReductionCertificate>& certs,
                          const GeneratorSet& gens = default_generators());

std::string certificate_to_json(const ReductionCertificate& cert);
ReductionCertificate certificate_from_json(const std::string& text);  // throws std::invalid_argument

// ---- h-reduction in Lambda+H ----

// r = (lambda; 1, theta(-3 - <lambda,lambda>)/6 + beta + n), beta2 = 2 beta in {0, 1}.
struct PsiRoot {
    EVec lambda;
    int beta2 = 0;
    Int n{0};
    EVec root() const;
};
// beta2 forced by lambda so that the last coordinate is integral
int psi_beta2(const EVec& lambda);

struct ConwayStep {
    PsiRoot r;
    Eint eps;
    Int h2_after;  // |<mu, rho>/theta|^2 after the step
};
struct ConwayResult {
    std::vector<ConwayStep> steps;
    EVec final_root;
};
Int h_squared(const EVec& mu);  // norm of the coordinate paired with rho
// Throws std::domain_error if no Psi reflection lowers h (the covering radius
// fact would then be false) and std::invalid_argument if mu is not a root.
ConwayResult conway_reduce(const EVec& mu);

// ---- roots of height at most one ----

struct ScanHit {
    EVec root;
    Eint wp_ip;  // <w_P, r>: 0, theta or 3
    int node = 0;  // 1..26, 0 if not a unit multiple of a node
    Sqrt3 height_sq;
};
struct MinHeightScan {
    std::vector<ScanHit> hits;  // every root with height^2 <= 1 found by the case analysis
    std::size_t multisets = 0;      // value multisets examined
    std::size_t reconstructed = 0;  // candidate vectors rebuilt and tested
};
MinHeightScan min_height_scan();

}  // namespace eislat

// The isomorphism Lambda+H ~ 3E8+H: verification of the basis matrices E1, E1'
// and E2, and the search that discovers such a basis from the Leech shell.
#pragma once

#include "eislat/form.hpp"
#include "eislat/lattices.hpp"
#include "eislat/report.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace eislat {

// Rows f_i, w e_i, d_i, w c_i hand by hand (i = 1..3), then (0;0,1) and (0;1,0), in 3E8+H.
std::vector<EVec> e2_rows();
std::vector<EVec> read_basis_file(const std::string& path);  // 14 rows of 14

struct ChangeOfBasis {
    RMat c;  // column map: C e1_k = e2_k, so C = E2^T (E1^T)^-1
    RMat c_inv;
    // C in Z[w]-bases of the two lattices. The ambient matrix has denominators
    // (3 and 9) because both lattices are proper sublattices of Z[w]^14;
    // integrality of C means integrality of these.
    EMat c_lattice;
    EMat c_lattice_inv;
    Report report;
};

// Throws std::invalid_argument on Gram mismatch or rows outside their lattice,
// std::domain_error when C does not map k1 onto k2.
ChangeOfBasis verify_change_of_basis(const std::vector<EVec>& e1, const HermitianLattice& k1,
                                     const std::vector<EVec>& e2, const HermitianLattice& k2);
// Lambda+H to 3E8+H.
ChangeOfBasis verify_change_of_basis(const std::vector<EVec>& e1, const std::vector<EVec>& e2);

struct M666Config {
    std::vector<std::string> names;  // a, b1..b3, c1..c3, d1..d3, e1..e3, f1..f3
    std::vector<EVec> roots;         // Lambda+H coordinates
    Report report;
};
// a' = n2' + w^2 n1', b_i' = -n2' - (f_i' + (2+w)e_i' + 2d_i' + (2+w)c_i').
M666Config verify_m666_leech_form(const std::vector<EVec>& e1p);

// ---- the search, steps (b) to (g) ----

// Roots (lambda; 1, a + w) with lambda in the first shell have norm -3; they
// are stored by shell vector and the integer offset a.
struct LeechRoot {
    EVec lambda;
    long a = 0;
    EVec root() const;  // 14 coordinates
};
// <r, s> of two such roots without building them
Eint leech_root_ip(const Eint& lambda_ip, long a_r, long a_s);
// The offset a_r - a_s making two such roots orthogonal, if any.
std::optional<long> orth_offset(const Eint& lambda_ip);

using SimplexWitness = std::vector<EVec>;  // 24 shell vectors
bool valid_simplex(const SimplexWitness& delta);
// Least-index clique growth with backtracking over the difference graph,
// starting from shell[start].
std::optional<SimplexWitness> find_simplex(const std::vector<SVec>& shell, std::size_t start = 0);

struct Quad {
    std::array<int, 4> idx;   // chain idx[0]-idx[1]-idx[2]-idx[3] in Delta
    std::array<long, 4> a{};  // offsets, a[0] = 0
};
std::vector<Quad> find_e8_quadruples(const SimplexWitness& delta);

struct OrthogonalPair {
    Quad q1, q2;  // q2's offsets already shifted so that all cross products vanish
};
// Pairs (in quad order) with disjoint index sets and mutually orthogonal roots.
std::vector<OrthogonalPair> find_orthogonal_pairs(const SimplexWitness& delta, const std::vector<Quad>& quads,
                                                  std::size_t limit);
std::optional<OrthogonalPair> find_orthogonal_pair(const SimplexWitness& delta, const std::vector<Quad>& quads);

struct StepF {
    std::size_t at_min_distance = 0;  // shell vectors at distance -6 from all eight
    std::vector<LeechRoot> orthogonal;  // those extending to roots orthogonal to all eight
};
StepF extend_to_3e8(const std::vector<SVec>& shell, const std::vector<LeechRoot>& eight);

// The chain among the candidates forming an E8 diagram, if any.
std::optional<std::array<LeechRoot, 4>> e8_chain(const std::vector<LeechRoot>& cands);

// Given three orthogonal E8 chains in Lambda+H (the first root of each plays f), the
// orthogonal complement H and a hyperbolic pair n1, n2 with <n1,n2> = theta,
// assemble rows matching e2_rows(). Phases of the chain roots are fixed by units.
std::optional<std::vector<EVec>> complete_hyperbolic(const std::array<std::array<EVec, 4>, 3>& hands);

struct SearchReport {
    SimplexWitness delta;
    std::size_t quads = 0;
    std::size_t step_f_min_distance = 0;
    std::size_t step_f_orthogonal = 0;
    std::vector<EVec> basis;  // empty if a step failed
    Report report;
};
// Steps (b)-(g) from scratch on the given shell.
SearchReport run_search(const std::vector<SVec>& shell);
// Step (f) only, with K1 taken from two hands of a shipped basis (rows 4h..4h+3 per hand).
StepF step_f_from_basis(const std::vector<SVec>& shell, const std::vector<EVec>& e1, int hand1, int hand2);

}  // namespace eislat

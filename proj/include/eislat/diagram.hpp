// The 26 node diagram D: roots of 3E8+H indexed by the points and lines of
// P^2(F3), its automorphisms, the Weyl vector and heights.
#pragma once

#include "eislat/form.hpp"
#include "eislat/report.hpp"

#include <array>
#include <string>
#include <vector>

namespace eislat {

using F3Vec = std::array<int, 3>;
using F3Mat = std::array<int, 9>;  // row major

struct DiagramNode {
    std::string name;
    bool point = false;
    EVec root;    // 3E8+H coordinates
    F3Vec plane;  // column (points) or row (lines), normalized up to sign
};

class Diagram {
public:
    // Node order: a c1 c2 c3 e1 e2 e3 a1 a2 a3 g1 g2 g3 (points), then
    // f f1 f2 f3 b1 b2 b3 z1 z2 z3 d1 d2 d3 (lines).
    static const Diagram& get();

    const std::vector<DiagramNode>& nodes() const { return nodes_; }
    const DiagramNode& node(int i) const { return nodes_.at(i); }
    int index(const std::string& name) const;  // throws on unknown name
    const EVec& root(const std::string& name) const { return nodes_[index(name)].root; }
    std::vector<EVec> roots() const;
    std::vector<int> points() const;
    std::vector<int> lines() const;
    // point on line (either argument order)
    bool incident(int i, int j) const;
    // the 16 nodes a, b_i, c_i, d_i, e_i, f_i
    std::vector<std::string> m666_names() const;

    EVec sigma_p, sigma_l;  // sums of points and of lines
    EVec w_p, w_l;          // G-fixed vectors spanning F
    CVec rho;               // 26 * rho-bar = Sigma_P + xi Sigma_L
    CVec rho_minus;         // Sigma_P - xi Sigma_L

private:
    Diagram();
    std::vector<DiagramNode> nodes_;
};

// The 3E8+H form extended to Z[zeta12] coordinates.
Cint ip(const CVec& u, const CVec& v);
Sqrt3 real_value(const Cint& x);  // throws if not real

// ht(r)^2 = |<rho-bar, r>|^2 / |rho-bar|^4
Sqrt3 height_sq(const EVec& r);
Sqrt3 height_sq(const CVec& r);
// c(u,v)^2 = |<u,v>|^2 / (|u|^2 |v|^2)
Sqrt3 c_squared(const CVec& u, const CVec& v);
// Galois norm of ht^2, a diagnostic alternative height
Rat galois_norm_ht(const EVec& r);

// Identities of the diagram, its constants and the fixed lattice F.
Report verify_diagram();
bool verify_linear_relations();
Rat disc_f();
bool f_primitive();

// P^2(F3) and G = PGL3(F3)
F3Mat f3_mul(const F3Mat& x, const F3Mat& y);
int f3_det(const F3Mat& g);
F3Mat f3_inverse(const F3Mat& g);
F3Mat f3_normalize(F3Mat g);              // scale so the first nonzero entry is 1
std::vector<F3Mat> pgl3_elements();       // 5616 normalized matrices, sorted
std::vector<int> node_permutation(const F3Mat& g);  // image index of each node
// The induced lattice automorphism, sending root i to root perm[i] exactly.
// In the ambient coordinates it may have denominators dividing 3.
RMat g_action(const F3Mat& g);
// A Z[w]-basis of L (computed from the nodes) as the columns of a matrix.
const RMat& lattice_basis();
// M maps L onto L: its matrix in the basis above, and that of the inverse, are integral.
bool preserves_lattice(const RMat& m);
struct PglGenerators {
    F3Mat x, y;
};
// Least pair (x, y) in the sorted element list satisfying the presentation
// and generating the whole group.
PglGenerators pgl3_presentation_generators();
// x^2, y^3, (xy)^13 and the long relator, for matrices.
bool pgl3_relations_hold(const RMat& x, const RMat& y);
// Size of the permutation group generated by node permutations.
std::size_t permutation_group_order(const std::vector<std::vector<int>>& gens);

// sigma: point x -> -w (polar line of x), line l -> its pole.
RMat sigma_matrix();
// G presentation, group order, sigma identities and the fixed point rho-bar.
Report verify_automorphisms();

struct ProbeReport {
    int directions = 0;
    int increased = 0;       // directions where the min distance went up by more than tol
    double max_increase = 0;
    bool special_all_decrease = false;  // the direction i * rho-minus
    bool special_all_increase = false;
    double base_sinh2 = 0;
};
// Numeric: moving rho-bar by eps along sampled tangent directions.
ProbeReport local_max_probe(int directions, double eps, double tol, unsigned seed = 1);
// Exact: for each node j, the sign of
// sinh^2 d(rho + (i/n) rho_minus, r_j-perp) - sinh^2 d(rho, r_j-perp).
std::vector<int> special_direction_signs(long n);

}  // namespace eislat

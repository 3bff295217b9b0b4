// The lattices E8, Lambda (complex Leech), H and L in coordinates.
#pragma once

#include "eislat/codes.hpp"
#include "eislat/form.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace eislat {

// v = m(1,..,1) + theta c + 3 z with sum z = m mod theta
struct LeechWitness {
    int m = 0;
    Word c;
    EVec z;
};

std::optional<LeechWitness> leech_contains(const EVec& v);
bool e8_contains(const EVec& v);      // 4 coordinates
bool in_3e8h(const EVec& v);          // 14 coordinates, three E8 blocks then H
bool in_lh(const EVec& v);            // 14 coordinates, Lambda then H

struct HermitianLattice {
    std::string name;
    Form form;
    std::vector<EVec> basis;  // Z[w]-basis
    std::function<bool(const EVec&)> contains;
};

HermitianLattice e8_lattice();
HermitianLattice leech_lattice();
HermitianLattice h_lattice();
HermitianLattice lh_lattice();   // Lambda+H
HermitianLattice e8h_lattice();  // 3E8+H
// Determinant of the Gram matrix of the basis, up to sign.
Rat discriminant(const Form& f, const std::vector<EVec>& basis);
Rat discriminant(const HermitianLattice& k);

// A Leech vector nearest to t in the Euclidean metric (double precision search;
// the result is exact and lies in Lambda, but optimality is not certified).
EVec leech_closest(const std::vector<cplx>& t);

// Z-basis of Lambda shipped with the data (24 vectors).
std::vector<EVec> leech_z_basis();

// Compact shell vectors: (a0,b0,a1,b1,...), lexicographic order agrees with
// ordering coordinate tuples. Enumeration internals only; results are
// converted back to exact vectors for verification.
using SVec = std::array<std::int8_t, 24>;
EVec to_evec(const SVec& s);
SVec to_svec(const EVec& v);
// sum conj(u_i) v_i as (a,b); the Leech form is minus one third of it
std::pair<long, long> sdot(const SVec& u, const SVec& v);

// All E8 vectors of the given norm (a negative integer; -3 gives the roots).
std::vector<EVec> shell_e8(long norm);
// All Lambda vectors of norm -6, two independent enumerations, each sorted.
std::vector<SVec> leech_shell_by_shape();      // per (m, codeword) family
std::vector<SVec> leech_shell_by_coordinate(); // coordinatewise with codeword-prefix pruning

// Lowest root relation b' + (2+w)c + 2d + (2+w)e + f = 0 for an A4 chain c-d-e-f
// of E8 roots, with b' a root adjacent only to c.
bool affine_e8_check(const EVec& c, const EVec& d, const EVec& e, const EVec& f, const EVec& bprime);

// (2/3) Re <u,v> on the real form of Lambda+H (even unimodular of signature (2,26))
Rat real_form(const Form& f, const EVec& u, const EVec& v);

}  // namespace eislat

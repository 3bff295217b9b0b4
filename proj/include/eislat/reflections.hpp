// Complex reflections v -> v - r (1 - mu) <r,v> / <r,r>.
#pragma once

#include "eislat/form.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace eislat {

// Throws std::invalid_argument if r is not a root (norm -3) or mu is not a
// unit, and std::domain_error if the image leaves Z[w]^n.
EVec reflect(const Form& f, const EVec& r, const Eint& mu, const EVec& v);
// In the coordinates of Z[w]^n; rational when the lattice is a proper sublattice.
RMat reflection_matrix(const Form& f, const EVec& r, const Eint& mu);

bool is_root(const Form& f, const EVec& r);
bool is_primitive(const EVec& v);  // in Z[w]^n
// Primitive in the lattice given by its membership test: v is not d*y with y
// in the lattice and d a non-unit.
bool is_primitive_in(const EVec& v, const std::function<bool(const EVec&)>& contains);
Eint eis_gcd(Eint x, Eint y);

bool adjacent(const Form& f, const EVec& a, const EVec& b);  // |<a,b>|^2 = 3
bool braid_check(const Form& f, const EVec& a, const EVec& b);
bool commute_check(const Form& f, const EVec& a, const EVec& b);

// Least of the six unit multiples, comparing coordinates in order with canon_cmp.
EVec canonical(const EVec& r);
bool lex_less(const EVec& x, const EVec& y);
// The unit u with v = u * w, if any.
std::optional<Eint> unit_ratio(const EVec& v, const EVec& w);

struct RadicalResult {
    std::vector<EVec> roots;  // canonical, sorted
    bool saturated = false;   // a round added nothing
    int rounds = 0;
    bool capped = false;      // size cap hit
};

// Rounds of reflecting members in each other (mu = w and wbar), up to units.
RadicalResult radical_closure(const Form& f, const std::vector<EVec>& phi, int budget,
                              std::size_t max_size = 100000);

// Connectivity of the graph joining non-orthogonal roots.
bool connected(const Form& f, const std::vector<EVec>& roots);

}  // namespace eislat

// Relations among the omega-reflections of the diagram: the spider, 12-gon
// deflation, orders of Coxeter elements, and the hand-permuting involutions
// of the M666 configuration.
#pragma once

#include "eislat/form.hpp"
#include "eislat/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eislat {

struct Letter {
    std::string label;
    EVec root;
    Eint eps = Eint::w();
};

// Product of reflections; the leftmost letter acts last.
struct GroupWord {
    Form form;
    std::vector<Letter> letters;

    // Throws std::logic_error if the product fails to preserve the form.
    RMat realize() const;
    std::string str() const;
};
// Letters by node name of the 26-node diagram, all with eps = w, form of 3E8+H.
GroupWord diagram_word(const std::vector<std::string>& names);

// ---- orders ----

enum class OrderKind { finite, infinite, unknown };

struct MatrixOrder {
    OrderKind kind = OrderKind::unknown;
    unsigned long order = 0;             // when finite
    std::string reason;                  // why infinite
    std::vector<unsigned long> cyclotomic;  // n with Phi_n dividing the rational charpoly, with multiplicity
    std::optional<unsigned long> by_powers;  // first k <= bound with M^k = I
};

// Exact: the charpoly of the realification (p * conj(p), over Q) is stripped of
// cyclotomic factors. A leftover factor means infinite order; otherwise M has
// finite order iff M^N = I for N the lcm of the cyclotomic indices (else M is
// not diagonalizable). Powers up to bound are computed independently.
MatrixOrder matrix_order(const RMat& m, unsigned long bound = 200);
std::string to_string(const MatrixOrder& o);

// Coefficients (low degree first) of the n-th cyclotomic polynomial.
std::vector<Int> cyclotomic_poly(unsigned long n);
// p * conj(p) for a polynomial over Q(w); rational coefficients.
std::vector<Rat> realified_charpoly(const RMat& m);

// ---- Dynkin subdiagrams of the 16 node diagram ----

struct DynkinSubdiagram {
    std::string type;                // "A5", "D4", "E8", ...
    std::vector<std::string> nodes;  // images of the standard labels in order
    std::string expected;            // "12", "inf"
};

// Standard labelling: A_n a path 1-2-..-n; D_n a path 1..n-1 with n joined to
// n-2; E_n a path 1,3,4,..,n with 2 joined to 4.
std::vector<std::vector<int>> dynkin_edges(const std::string& type);
// Free embeddings (induced subgraph exactly the shape) into the M666 nodes,
// lexicographic in the node order a, b1..b3, c1..c3, .., f1..f3.
std::vector<DynkinSubdiagram> free_embeddings(const std::string& type, std::size_t limit = 0);

struct CoxeterRow {
    DynkinSubdiagram delta;
    MatrixOrder order;
    bool matches = false;
    std::vector<std::pair<DynkinSubdiagram, MatrixOrder>> alternatives;
    bool alternatives_match = false;
};
std::vector<std::string> coxeter_types();  // A1..A11, D4..D8, E6..E8
std::string expected_coxeter_order(const std::string& type);
CoxeterRow coxeter_row(const std::string& type, int alternatives = 3);
std::vector<CoxeterRow> coxeter_table(int alternatives = 3);

// ---- named relations ----

struct SpiderResult {
    bool s20 = false;
    MatrixOrder order;
    bool s10_identity = false;  // diagnostic only
    bool conjugates = false;    // the word on G-translated nodes equals g S g^-1 and satisfies S^20
    Report report;
};
SpiderResult spider_check();

struct DeflateResult {
    bool vector_identity = false;  // the displayed word sends f2 to w^2 a3
    bool a11 = false;
    MatrixOrder a_order;
    std::size_t twelve_gons = 0;      // induced 12-cycles of D
    std::size_t orbit_size = 0;       // G-orbit of the displayed one
    std::size_t labellings_checked = 0;
    bool all_hold = false;
    Report report;
};
// deflate(y): (y1..y10) y11 (y1..y10)^-1 = y12 as reflections.
bool deflate_holds(const std::vector<int>& y);  // 12 node indices of D
std::vector<std::vector<int>> induced_twelve_gons();  // as cyclic sequences, canonical
DeflateResult deflate_check();

// Starting from the 16 M666 nodes, repeatedly complete a free A11 of known
// nodes to its 12-gon: the deflation word in known reflections sends y11 to a
// unit multiple of y12. Returns the nodes added, in order, as (name, the
// 12-gon used). Reaching all 26 shows that D lies in the radical of M666.
struct Completion {
    std::string added;
    std::vector<std::string> gon;
};
std::vector<Completion> complete_by_twelve_gons();

struct PhiResult {
    RMat phi12, phi23;  // Lambda+H coordinates
    Report report;
};
// From the 16 roots of E1': phi12 swaps the hands 1, 2 along the A11 chain
// f1..a..f2 and fixes f3, e3, d3, c3; phi23 likewise for hands 2, 3 fixing the first.
PhiResult verify_phi_flips(const std::vector<EVec>& e1prime);

// All relation checks.
Report verify_relations();

}  // namespace eislat

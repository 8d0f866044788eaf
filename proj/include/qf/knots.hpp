#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qf/cohomology.hpp"
#include "qf/quandle.hpp"

namespace qf {

// One crossing of an oriented diagram.  The over-strand passes straight
// through, so it carries a single arc label; the under-strand enters as
// under_in and leaves as under_out.  sign is +1 or -1.
struct Crossing {
    int over = 0;
    int under_in = 0;
    int under_out = 0;
    int sign = 1;

    bool operator==(const Crossing&) const = default;
};

// PD-coded oriented knot diagram.  Arcs are labeled 0..arcs-1; every arc
// occurs exactly once as some crossing's under_in and once as an under_out,
// and following under_in -> under_out walks all arcs in a single cycle (one
// component).  A crossing-free diagram is the unknot with its one arc.
struct KnotDiagram {
    std::vector<Crossing> crossings;
    int arcs = 1;

    bool operator==(const KnotDiagram&) const = default;
};

// Text form, one crossing per line:
//     X o_in o_out u_in u_out s
// where o_in = o_out is the over-arc label and s is + or -.  '#' starts a
// comment; blank lines are skipped; empty input is the unknot.
KnotDiagram parse_pd(std::istream& in);
KnotDiagram parse_pd(const std::string& text);
std::string pd_to_string(const KnotDiagram& k);

// Arc colors, indexed by arc label.  At a positive crossing the under-arc
// color is pushed through the over color's right translation,
// under_out = under_in * over; a negative crossing applies the inverse.
using Coloring = std::vector<int>;

// Every coloring, in lexicographic order as color vectors.  Backtracking
// with crossing-relation propagation; agrees with the |X|^arcs filter.
std::vector<Coloring> colorings(const KnotDiagram& k, const Quandle& q);

// Element of the group ring Z[Z_m] with Z_m written multiplicatively with
// generator t: coeff[e] is the coefficient of t^e.
struct GroupRingElement {
    int modulus = 1;
    std::vector<long long> coeff;  // size modulus

    long long coefficient_sum() const;
    // "4 + 12t", ascending exponents, zero terms dropped, "0" when empty
    std::string to_string() const;

    bool operator==(const GroupRingElement&) const = default;
};

// State sum: each coloring contributes the product of Boltzmann weights
// t^{phi(x, y)} over positive crossings (x = under_in color, y = over color)
// and t^{-phi(x, y)} over negative ones (there x = under_out color, the arc
// the inverse translation produces).  phi must pass is_cocycle; the
// coefficient sum always equals the number of colorings.
GroupRingElement cocycle_invariant(const KnotDiagram& k, const Quandle& q,
                                   const CocycleTable& phi);

// Regression harness for the invariance theorem: true when both diagrams
// have the same coloring count and the same state sum.  Not a knot
// equivalence decision procedure.
bool reidemeister_equivalence_check(const KnotDiagram& a, const KnotDiagram& b, const Quandle& q,
                                    const CocycleTable& phi);

}  // namespace qf

#pragma once

#include <string>
#include <vector>

#include "qf/cohomology.hpp"
#include "qf/quandle.hpp"

namespace qf {

// Extensions live on pairs (a, x) with a the fiber coordinate, flattened as
// a * |X| + x; the projection is index % |X| and the fiber label index / |X|.

// E(X, Z_m, phi): (a1, x1) * (a2, x2) = (a1 + phi(x1, x2), x1 * x2).
// phi must pass is_cocycle; the result is a verified quandle of order m|X|.
Quandle abelian_extension(const Quandle& x, int m, const CocycleTable& phi);

// Reads the cocycle back out of a covering p : e -> x with constant fiber
// size m.  `section` gives each element of e its fiber coordinate; together
// with p it must label e bijectively by Z_m x X.  Fails (domain_error) when
// some translation shifts fibers inconsistently — that is, when the labeled
// operation is not of the abelian form above.
CocycleTable extract_cocycle(const Quandle& e, const Quandle& x, const std::vector<int>& p,
                             const std::vector<int>& section);

// Section-search variant: tries fiber labelings (per inner-orbit of x, base
// fiber ordered all (m-1)! ways with the least element pinned to 0, the rest
// transported along translations) and returns the first cocycle found in
// that order.  m <= 4 and |X| <= 8; throws domain_error when no labeling
// exhibits an abelian structure.
CocycleTable extract_cocycle(const Quandle& e, const Quandle& x, const std::vector<int>& p);

// alpha_{x,y} : S x S -> S, one table per ordered pair of base elements.
struct DynamicalCocycle {
    int base = 0;   // |X|
    int fiber = 0;  // |S|
    std::vector<CayleyTable> maps;  // row-major over (x, y)

    DynamicalCocycle() = default;
    DynamicalCocycle(int base_order, int fiber_order);
    CayleyTable& at(int x, int y);
    const CayleyTable& at(int x, int y) const;
};

struct DynamicalReport {
    bool valid = false;
    std::string reason;        // empty when valid
    std::vector<int> witness;  // offending tuple, empty when valid
    explicit operator bool() const { return valid; }
};

// The three extension conditions: alpha_{x,x}(a,a) = a; each alpha_{x,y}(-,b)
// a bijection of S; and the mixed cocycle identity
// alpha_{x*y,z}(alpha_{x,y}(a,b), c) = alpha_{x*z,y*z}(alpha_{x,z}(a,c), alpha_{y,z}(b,c)).
DynamicalReport check_dynamical(const Quandle& x, const DynamicalCocycle& alpha);

// (a, x) * (b, y) = (alpha_{x,y}(a, b), x * y); alpha is checked first.
Quandle dynamical_extension(const Quandle& x, const DynamicalCocycle& alpha);

// Any constant-fiber covering is a dynamical extension: label each fiber by
// ascending carrier index, read alpha off the multiplication, check the
// three conditions, and verify the rebuilt quandle against e elementwise.
DynamicalCocycle fibration_to_dynamical(const Quandle& e, const Quandle& x,
                                        const std::vector<int>& p);

}  // namespace qf

#pragma once

#include <vector>

#include "qf/cayley.hpp"
#include "qf/perm.hpp"
#include "qf/quandle.hpp"

namespace qf {

// Finite abelian group as a product of cyclic factors.  Elements are encoded
// as mixed-radix integers with the FIRST factor most significant, so a single
// factor Z_n encodes as the value itself.
struct AbelianGroupSpec {
    std::vector<int> cyclic_orders;  // each >= 1; Z_1 factors are legal no-ops

    int size() const;
    std::vector<int> decode(int index) const;
    int encode(const std::vector<int>& coords) const;

    int add(int x, int y) const;
    int sub(int x, int y) const;
    int neg(int x) const;
    int scale(long long k, int x) const;  // integer scalar action, k may be negative
};

// Endomorphism given as an integer matrix on the cyclic coordinates
// (row i is reduced mod cyclic_orders[i]).  Whether it is actually an
// automorphism of a particular group is checked by automorphism_perm.
struct AutomorphismSpec {
    std::vector<std::vector<int>> matrix;

    // Single-factor shorthand: multiplication by the unit t.
    static AutomorphismSpec unit(int t) { return AutomorphismSpec{{{t}}}; }
};

// Realize the spec as a permutation of the element indices, verifying
// bijectivity and additivity; throws domain_error otherwise.
Perm automorphism_perm(const AbelianGroupSpec& a, const AutomorphismSpec& t);

// --- constructors ---------------------------------------------------------

Quandle trivial_quandle(int n);                      // x*y = x
Quandle dihedral(int n);                             // x*y = 2y - x mod n

Quandle conjugation(const CayleyTable& g);           // a*b = b a b^{-1}
Quandle core_quandle(const CayleyTable& g);          // a*b = b a^{-1} b

// x*y = t(x-y) + y on the group a.
Quandle alexander(const AbelianGroupSpec& a, const AutomorphismSpec& t);

// Alexander quandle on Z_q[T]/(p(T)) with t = multiplication by T.
// poly lists the monic coefficients ascending (constant term first);
// elements are encoded as base-q integers, constant coefficient least
// significant.  Requires the constant term to be a unit mod q.
Quandle alexander_poly(int q, const std::vector<int>& poly);

// Right-coset quandle Hx * Hy = H phi(x y^{-1}) y.  h lists the subgroup's
// element indices; phi must be a group automorphism fixing h pointwise.
// Well-definedness is verified over every pair of representatives.
Quandle homogeneous(const CayleyTable& g, const std::vector<int>& h, const Perm& phi);

// Quandle on Z_3 x A: (x,a)*(y,b) = (2y-x, -a + mu(x-y) b + tau(x-y)) with
// mu(0) = 2, mu(1) = mu(2) = -1 acting as integer scalars and
// tau = (0, c1, c2).  Element (x,a) encodes as x*|A| + a.
Quandle galkin(const AbelianGroupSpec& a, int c1, int c2);

// Reflection quandle on the anisotropic vectors of (Z_p)^dim under a
// symmetric bilinear form: x*y = (2<x,y>/<y,y>) y - x.  Odd p only.
// Carrier vectors are ordered by their base-p index.
Quandle coxeter_fp(int p, const std::vector<std::vector<int>>& form, int dim);

// Medial quasigroup x*y = f(x) + g(y) + c for commuting automorphisms f, g.
CayleyTable affine_quasigroup(const AbelianGroupSpec& a, const AutomorphismSpec& f,
                              const AutomorphismSpec& g, int c);

// --- group-table helpers ---------------------------------------------------

CayleyTable cyclic_group(int n);

// Multiplication table of a materialized permutation group; element i of the
// table is g.elements()[i] (the sorted order), entry (i,j) = index of e_i*e_j.
CayleyTable group_table(const PermGroup& g);

}  // namespace qf

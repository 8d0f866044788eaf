#pragma once

#include <array>
#include <optional>

#include "qf/cayley.hpp"
#include "qf/constructions.hpp"
#include "qf/perm.hpp"
#include "qf/quandle.hpp"

namespace qf {

// A verified quasigroup: every row and every column of the table is a
// permutation.  Construction throws domain_error with the first witnesses,
// so a Quasigroup value can be trusted downstream (same contract as Quandle).
class Quasigroup {
  public:
    explicit Quasigroup(CayleyTable t);

    int size() const { return t_.n; }
    int op(int a, int b) const { return t_.at(a, b); }
    const CayleyTable& table() const { return t_; }

    Perm right_map(int b) const;  // column b
    Perm left_map(int a) const;   // row a

  private:
    CayleyTable t_;
};

// A quasigroup with a two-sided identity.  The constructor locates it
// (group_identity) and throws domain_error when there is none.
class Loop : public Quasigroup {
  public:
    explicit Loop(CayleyTable t);

    int identity() const { return e_; }

  private:
    int e_ = 0;
};

struct DistributivityFlags {
    bool left = false;   // x*(y*z) = (x*y)*(x*z)
    bool right = false;  // (x*y)*z = (x*z)*(y*z)
};

// Exhaustive triple scan.  A right-distributive quasigroup is forced
// idempotent -- (x*x)*x = (x*x)*(x*x) cancels on the left -- and is then a
// Latin quandle; that consequence is re-verified on every right-distributive
// input and a failure is an internal error.
DistributivityFlags distributivity_flags(const Quasigroup& q);

// Verdict of one exhaustively checked identity: holds, or the
// lexicographically least witness (x, y, z); unused slots stay -1.
struct IdentityCheck {
    bool holds = true;
    std::array<int, 3> witness{-1, -1, -1};
};

// The three Moufang identities
//   id1:  x*(y*(x*z)) = ((x*y)*x)*z
//   id2:  z*(x*(y*x)) = ((z*x)*y)*x
//   id3:  (x*y)*(z*x) = (x*(y*z))*x
// each scanned over all (x, y, z) in lexicographic order.  They are
// equivalent in any loop, so the three verdicts must agree; a disagreement
// is an internal error.
struct MoufangReport {
    IdentityCheck id1, id2, id3;
    bool all() const { return id1.holds && id2.holds && id3.holds; }
};

MoufangReport moufang_check(const Loop& l);

// Lex-least (x, y) with x*y != y*x, if any.
std::optional<std::array<int, 2>> commutativity_witness(const CayleyTable& t);

// Lex-least (x, y, z) with (x*y)*z != x*(y*z), if any.
std::optional<std::array<int, 3>> associativity_witness(const CayleyTable& t);

// lcm of the left-power orders, powers taken as x^(k+1) = x * x^k.  The
// identity sits immediately before x on its own left-translation cycle, so
// every order is finite even without power associativity.
long long loop_exponent(const Loop& l);

// Belousov's derived loop x + y = R_a^{-1}(x) * L_a^{-1}(y).  The identity
// is a*a -- which is a itself whenever the basepoint is idempotent, in
// particular for every quandle -- and R_a(x) + L_a(y) = x*y always; both are
// asserted.  When q is distributive on both sides the result is a
// commutative Moufang loop (Belousov) and that is asserted too.  Dropping
// either hypothesis loses the conclusion: the derived loop of a Galkin
// quandle (right-distributive only) is not even commutative.
Loop belousov_loop(const Quasigroup& q, int a);

// The commutative Moufang loop of order 81 and exponent 3 on (Z_3)^4:
//   (x0 + y0 + (x1 - y1)(x2 y3 - x3 y2), x1 + y1, x2 + y2, x3 + y3)
// coordinates mod 3, mixed-radix encoded with the first position most
// significant.  81 is the least order where a commutative Moufang loop can
// fail to be associative; this is the exponent-3 specimen (Bol 1937, who
// credited it to Zassenhaus).
Loop zassenhaus81();

// An Alexander presentation of a Latin quandle: iso relabels the quandle
// onto alexander(group, action), i.e. iso(x * y) = iso(x) * iso(y).
struct ToyodaWitness {
    AbelianGroupSpec group;
    AutomorphismSpec action;
    Perm iso;
};

// Toyoda: a Latin quandle is Alexander exactly when it is medial.  Scans
// enumerate_alexander(q.size()) for an isomorphic representative; a medial
// input must match and a non-medial one must not, so either miss is an
// internal error.  Requires q Latin; the enumeration cost caps the order.
inline constexpr int toyoda_order_limit = 15;

std::optional<ToyodaWitness> toyoda_witness(const Quandle& q);

}  // namespace qf

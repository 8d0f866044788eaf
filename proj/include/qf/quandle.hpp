#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qf/cayley.hpp"
#include "qf/perm.hpp"

namespace qf {

// A verified quandle.  Construction checks the three axioms and throws
// domain_error (with the first witnesses) on failure, so a Quandle value can
// be trusted everywhere downstream.
class Quandle {
  public:
    explicit Quandle(CayleyTable t);

    // Fast path for tables produced by the library itself (enumeration
    // leaves, canonical relabelings): skips re-verification.
    static Quandle trusted(CayleyTable t);

    int size() const { return t_.n; }
    int op(int a, int b) const { return t_.at(a, b); }
    const CayleyTable& table() const { return t_; }

    Perm right_map(int b) const;          // column b
    bool left_map_bijective(int a) const; // row a

    PermGroup inner_group(std::size_t max_order = default_closure_bound()) const;
    PermGroup transvection_group(std::size_t max_order = default_closure_bound()) const;

  private:
    Quandle() = default;
    CayleyTable t_;
};

struct ClassificationReport {
    bool kei = false;        // every R_b an involution
    bool latin = false;      // rows bijective too
    bool medial = false;     // (a*b)*(c*d) = (a*c)*(b*d)
    bool connected = false;  // Inn transitive
    bool faithful = false;   // a -> R_a injective
    std::optional<bool> simple;  // empty: not computed (order above the congruence-search limit)
    long long inner_order = 0;
    long long transvection_order = 0;
};

// Congruence search for the simple flag is exhaustive over set partitions;
// Bell(8) = 4140 keeps this instant, larger orders are left uncomputed.
inline constexpr int simple_search_limit = 8;

ClassificationReport classify(const Quandle& q);

bool is_medial(const Quandle& q);
bool is_left_distributive(const Quandle& q);

// An induced subquandle: global indices plus the relabeled local table.
struct Subquandle {
    std::vector<int> carrier;  // ascending global indices
    CayleyTable table;
};

// Orbits of Inn(q), each induced as a subquandle (orbits are always closed
// under the operation).  Sorted by minimal element.
std::vector<Subquandle> orbit_decomposition(const Quandle& q);

// The unique family of minimal complemented subquandles (A is complemented
// iff its complement is empty or is itself a subquandle).  Exhaustive over
// subsets; limited to n <= 16.  Blocks partition the carrier.
std::vector<Subquandle> nelson_wong_decomposition(const Quandle& q);

// Relabeling f with f(a*b) = f(a) * f(b), if any.  Invariant-guided
// backtracking with forward propagation.
std::optional<Perm> are_isomorphic(const Quandle& a, const Quandle& b);

// Lexicographically least row-major flattening over all n! relabelings,
// by cell-level branch and bound.  Equal canonical forms iff isomorphic.
CayleyTable canonical_form(const Quandle& q);
bool is_canonical_table(const CayleyTable& t);  // t must already be a quandle

PermGroup automorphism_group(const Quandle& q);  // exhaustive, n <= 12

// Rebuilds q as the homogeneous quandle (Inn(q), Stab(x0), conj by R_{x0})
// and checks the result is isomorphic to q.  Requires q connected, n <= 8.
bool verify_vendramin(const Quandle& q);

bool is_subquandle_carrier(const Quandle& q, const std::vector<int>& subset);

// Column permutations in disjoint-cycle form ("(12)" style when labels are
// single digits); index_base 1 matches the classical order-4 table.
std::vector<std::string> column_cycles(const Quandle& q, int index_base = 1);

}  // namespace qf

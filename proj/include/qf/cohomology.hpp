#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qf/quandle.hpp"

namespace qf {

// Chain groups are free on n-tuples over the carrier.  The quandle theory
// works in the quotient by the degenerate subcomplex (tuples with some
// x_i = x_{i+1}), realized here by simply dropping degenerate tuples from
// both bases; the boundary maps degenerate chains to degenerate chains, so
// the projection is a chain map.
enum class ChainTheory { rack, quandle };

struct BoundaryMatrix {
    int degree = 0;                         // the n of the map C_n -> C_{n-1}
    ChainTheory theory = ChainTheory::rack;
    std::vector<std::vector<int>> source;   // n-tuples, lexicographic
    std::vector<std::vector<int>> target;   // (n-1)-tuples, lexicographic
    std::vector<long long> entries;         // row-major, rows indexed by target
    std::size_t rows() const { return target.size(); }
    std::size_t cols() const { return source.size(); }
    long long at(std::size_t r, std::size_t c) const { return entries[r * cols() + c]; }
};

// del_n(x_1..x_n) = sum_{i=2..n} (-1)^i [ (x_1,..,x_{i-1},x_{i+1},..,x_n)
//                                       - (x_1*x_i,..,x_{i-1}*x_i,x_{i+1},..,x_n) ];
// zero for n <= 1.  Bases are kept to |X|^n <= 10^6.
BoundaryMatrix boundary_matrix(const Quandle& q, int n, ChainTheory theory = ChainTheory::rack);

struct HomologyGroup {
    long long free_rank = 0;
    std::vector<long long> torsion;  // invariant factors > 1, divisibility chain
    std::string describe() const;    // "Z^2 + Z_2 + Z_4", "Z", "0", ...
    bool operator==(const HomologyGroup&) const = default;
};

// H_n = ker del_n / im del_{n+1} by integer Smith normal form.  n <= 3.
HomologyGroup homology(const Quandle& q, int n, ChainTheory theory = ChainTheory::quandle);

// A Z_m-valued function on pairs (degree 2) or triples (degree 3) of quandle
// elements, stored row-major over the full tuple space.
struct CocycleTable {
    int degree = 2;  // 2 or 3
    int modulus = 2;
    int n = 0;  // carrier size
    std::vector<int> values;

    CocycleTable() = default;
    CocycleTable(int degree, int modulus, int n);
    int& at(int x, int y);
    int at(int x, int y) const;
    int& at(int x, int y, int z);
    int at(int x, int y, int z) const;
    bool operator==(const CocycleTable&) const = default;
};

// Text form: "degree D", "mod M", "order N" headers, then one line per
// nonzero value: "x y -> v" (or "x y z -> v").  '#' starts a comment.
CocycleTable parse_cocycle(std::istream& in);
CocycleTable parse_cocycle(const std::string& text);
std::string cocycle_to_string(const CocycleTable& c);

struct CocycleReport {
    bool valid = false;
    std::string reason;        // empty when valid
    std::vector<int> witness;  // first offending tuple, empty when valid
    explicit operator bool() const { return valid; }
};

// Exhaustive check of the degree-appropriate identity plus the degeneracy
// conditions (phi(x,x) = 0; psi(x,x,y) = psi(x,y,y) = 0).
CocycleReport is_cocycle(const Quandle& q, const CocycleTable& c);

struct CocycleSpace {
    int degree = 2;
    int modulus = 2;
    // Generating sets in Smith-normal coordinates: element i of `cocycles`
    // has additive order cocycle_orders[i] in Z_m^(tuples), and the whole
    // group of cocycles is their direct sum; likewise for coboundaries.
    std::vector<CocycleTable> cocycles;
    std::vector<long long> cocycle_orders;
    std::vector<CocycleTable> coboundaries;
    std::vector<long long> coboundary_orders;
    std::vector<long long> quotient;  // invariant factors > 1 of H^degree
};

// Cocycles and coboundaries over Z_m in the quandle theory, degree 2 or 3.
// The kernel mod m comes out of one integer normal form of the condition
// matrix (rows: identity instances; columns: non-degenerate tuples), so the
// result is exact for every m, prime or not.
CocycleSpace cocycle_space(const Quandle& q, int degree, int m);

// Does c = delta(lambda) for some cochain lambda one degree down?  Exact
// linear solve mod c.modulus; c must vanish on degenerate tuples.
bool is_coboundary(const Quandle& q, const CocycleTable& c);

// Same cohomology class: a - b is a coboundary.  Shapes must match.
bool cohomologous(const Quandle& q, const CocycleTable& a, const CocycleTable& b);

}  // namespace qf

#pragma once

#include <array>
#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

namespace qf {

// Binary-operation table on {0..n-1}; entry(a, b) = a*b, rows indexed by the
// left argument.  Column b, read as the map a -> a*b, is the right
// translation R_b; Cayley-table "columns in disjoint-cycle form" in the
// classical order-4 table are exactly these maps.
struct CayleyTable {
    int n = 0;
    std::vector<int> e;  // row-major, size n*n

    CayleyTable() = default;
    explicit CayleyTable(int order) : n(order), e(static_cast<std::size_t>(order) * order, 0) {}

    int at(int a, int b) const { return e[static_cast<std::size_t>(a) * n + b]; }
    int& at(int a, int b) { return e[static_cast<std::size_t>(a) * n + b]; }

    bool in_range() const;  // every entry in {0..n-1}

    bool operator==(const CayleyTable&) const = default;
    auto operator<=>(const CayleyTable&) const = default;
};

// Shared text format: first non-comment line is n, then n rows of n
// 0-based entries.  '#' starts a comment anywhere on a line.
CayleyTable parse_table(std::istream& in);
CayleyTable parse_table(const std::string& text);
void print_table(std::ostream& out, const CayleyTable& t);
std::string table_to_string(const CayleyTable& t);

// One axiom failure: which axiom (human-readable) and a witness tuple
// (unused positions are -1).
struct Violation {
    std::string axiom;
    std::array<int, 3> witness{-1, -1, -1};
    std::string describe() const;
};

// Quandle axioms: idempotency, bijective right translations, right
// self-distributivity.  Empty result means the table is a quandle.
std::vector<Violation> quandle_violations(const CayleyTable& t);

// Latin-square checks for quasigroups: both rows and columns bijective.
std::vector<Violation> quasigroup_violations(const CayleyTable& t);

// Group check used by the conjugation/core/homogeneous constructions.
bool is_group_table(const CayleyTable& t, std::string* why = nullptr);
int group_identity(const CayleyTable& t);          // -1 if none
int group_inverse(const CayleyTable& t, int x);    // requires identity

}  // namespace qf

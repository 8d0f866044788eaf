#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace qf {

// Permutation of {0..n-1}, stored as the image sequence (image of i at
// position i).  Composition is apply-right-first throughout the library:
// (p * q)(i) = p(q(i)).  This matters for the inner-automorphism relation
// R_c R_b R_c^{-1} = R_{b*c}, which silently flips under the other convention.
class Perm {
  public:
    Perm() = default;
    explicit Perm(std::vector<int> images);
    static Perm identity(int n);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    Perm inverse() const;

    // Cycle lengths including fixed points, sorted ascending.  Conjugation
    // invariant; the workhorse invariant for isomorphism pruning.
    std::vector<int> cycle_type() const;

    // Disjoint-cycle string, fixed points omitted; identity prints "(1)"
    // in base 1 (the classical table style) and "(0)" in base 0.
    // Elements are juxtaposed when every label is a single digit.
    std::string cycles(int index_base = 0) const;

    friend Perm operator*(const Perm& p, const Perm& q);  // apply q first
    bool operator==(const Perm&) const = default;
    auto operator<=>(const Perm&) const = default;  // lexicographic on images

  private:
    std::vector<int> img_;
};

// Parse a disjoint-cycle string such as "(2 4)(3 5)" or the juxtaposed
// "(24)(35)" single-digit form, into a permutation of the given degree.
// index_base is subtracted from every label.
Perm parse_cycles(const std::string& text, int degree, int index_base = 0);

// Closure bound for generate(); QF_MAX_CLOSURE overrides the default 10^7.
std::size_t default_closure_bound();

// Fully materialized permutation group: the degrees in this library are tiny
// (carriers of quandles, so <= ~100) and explicit element sets keep orbit,
// normality and quotient logic trivially correct and deterministic.
class PermGroup {
  public:
    static PermGroup generate(std::vector<Perm> gens, int degree,
                              std::size_t max_order = default_closure_bound());

    // Wrap an element set already known to be closed (e.g. an automorphism
    // search result); skips the closure pass.  The elements double as the
    // stored generating set.
    static PermGroup from_closed_set(std::vector<Perm> elements, int degree);

    // Orbit partition of {0..degree-1} under a generator list, without
    // materializing the group.
    static std::vector<std::vector<int>> orbits_of(const std::vector<Perm>& gens, int degree);

    int degree() const { return degree_; }
    long long order() const { return static_cast<long long>(elements_.size()); }
    const std::vector<Perm>& elements() const { return elements_; }  // sorted
    const std::vector<Perm>& generators() const { return gens_; }

    bool contains(const Perm& p) const;
    bool is_subgroup_of(const PermGroup& g) const;
    bool is_normal_in(const PermGroup& g) const;

    std::vector<std::vector<int>> orbits() const;  // sorted by minimal element
    bool is_transitive() const;

  private:
    int degree_ = 0;
    std::vector<Perm> gens_;
    std::vector<Perm> elements_;
};

// Whether g/n is cyclic.  Verifies that n is a normal subgroup of g first
// and throws domain_error otherwise.
bool quotient_is_cyclic(const PermGroup& g, const PermGroup& n);

}  // namespace qf

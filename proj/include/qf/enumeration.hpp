#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qf/cayley.hpp"
#include "qf/constructions.hpp"
#include "qf/quandle.hpp"

namespace qf {

enum class QuandleFilter { all, connected, latin, medial, kei };

const char* filter_name(QuandleFilter f);
std::optional<QuandleFilter> filter_from_name(const std::string& name);

struct EnumerationOptions {
    QuandleFilter filter = QuandleFilter::all;
    int jobs = 1;                      // worker threads over root branches
    bool allow_large = false;          // permit n = 9 (minutes, not seconds)
    std::ostream* progress = nullptr;  // coarse progress notes for long runs
};

struct EnumerationResult {
    int order = 0;
    std::string filter;
    std::vector<CayleyTable> tables;  // canonical forms, sorted, pairwise distinct
    long long count() const { return static_cast<long long>(tables.size()); }
};

// All quandles of order n up to isomorphism.  The search assigns the columns
// R_0..R_{n-1} as permutations fixing their own index, propagates the forced
// column R_{b*c} = R_c R_b R_c^{-1} whenever two columns meet, keeps column
// cycle types non-decreasing, and rejects any leaf that a type-block
// relabeling strictly lowers.  Winners are re-labeled by canonical_form.
EnumerationResult enumerate_quandles(int n, const EnumerationOptions& opts = {});

long long count_connected(int n);

// One isomorphism class of Alexander quandles, with the (group, action) pair
// that produced the representative.
struct AlexanderClass {
    AbelianGroupSpec group;
    AutomorphismSpec action;
    CayleyTable table;  // as constructed, NOT canonicalized (see below)
};

// Alexander quandles of order n up to isomorphism: every abelian group of
// that order, every automorphism up to conjugacy, then explicit isomorphism
// dedupe.  Representatives keep their constructed labeling; lex-min
// relabeling is deliberately skipped because the trivial class at order
// 15/16 has n! automorphisms and defeats branch-and-bound.
std::vector<AlexanderClass> enumerate_alexander(int n);

// All abelian groups of the given order (primary decomposition, one spec per
// isomorphism type).
std::vector<AbelianGroupSpec> abelian_groups(int order);

// Clauwens: a surjective homomorphism onto a connected quandle has fibers of
// one common size.  f maps carrier(q) onto carrier(p); throws domain_error
// unless f is a surjective homomorphism and p is connected.  Returns whether
// all fibers agree in size (the proposition says they must).
bool divisibility_check(const Quandle& q, const Quandle& p, const std::vector<int>& f);

}  // namespace qf

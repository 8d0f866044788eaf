#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "qf/cayley.hpp"
#include "qf/constructions.hpp"
#include "qf/errors.hpp"
#include "qf/perm.hpp"
#include "qf/quandle.hpp"

using namespace qf;

namespace {

// Table assembled from 1-indexed column cycles, the classical presentation.
Quandle from_column_cycles(const std::vector<std::string>& cols) {
    int n = static_cast<int>(cols.size());
    CayleyTable t(n);
    for (int b = 0; b < n; ++b) {
        Perm rb = parse_cycles(cols[b], n, 1);
        for (int a = 0; a < n; ++a) t.at(a, b) = rb(a);
    }
    return Quandle(std::move(t));
}

// Brute-force axiom check used as the oracle for quandle_violations.
bool brute_is_quandle(const CayleyTable& t) {
    if (!t.in_range()) return false;
    for (int a = 0; a < t.n; ++a)
        if (t.at(a, a) != a) return false;
    for (int b = 0; b < t.n; ++b) {
        std::set<int> col;
        for (int a = 0; a < t.n; ++a) col.insert(t.at(a, b));
        if (static_cast<int>(col.size()) != t.n) return false;
    }
    for (int a = 0; a < t.n; ++a)
        for (int b = 0; b < t.n; ++b)
            for (int c = 0; c < t.n; ++c)
                if (t.at(t.at(a, b), c) != t.at(t.at(a, c), t.at(b, c))) return false;
    return true;
}

CayleyTable s3_table() {
    auto s3 = PermGroup::generate({parse_cycles("(01)", 3), parse_cycles("(012)", 3)}, 3);
    return group_table(s3);
}

}  // namespace

TEST_CASE("permutation composition applies the right factor first") {
    Perm a = parse_cycles("(01)", 3);
    Perm b = parse_cycles("(12)", 3);
    Perm ab = a * b;  // 2 -> 1 -> 0 under (01)(12) read right-to-left
    CHECK(ab(2) == 0);
    CHECK(ab(0) == 1);
    CHECK(ab(1) == 2);
    CHECK(ab.cycle_type() == std::vector<int>{3});
    CHECK((a * a).is_identity());
    CHECK(a.inverse() == a);
}

TEST_CASE("cycle strings round-trip") {
    Perm p = parse_cycles("(2 4)(3 5)", 6, 1);
    CHECK(p.cycles(1) == "(24)(35)");
    CHECK(p(1) == 3);  // 0-based: label 2 -> label 4
    CHECK(Perm::identity(4).cycles(1) == "(1)");
    CHECK(Perm::identity(4).cycles(0) == "(0)");
    Perm q = parse_cycles("(1 11)(2 10)", 12, 1);
    CHECK(parse_cycles(q.cycles(1), 12, 1) == q);
    CHECK_THROWS_AS(parse_cycles("(09)", 3, 0), domain_error);
}

TEST_CASE("group closure, orbits, cyclic quotient") {
    auto s3 = PermGroup::generate({parse_cycles("(01)", 3), parse_cycles("(012)", 3)}, 3);
    CHECK(s3.order() == 6);
    CHECK(s3.is_transitive());

    auto v4 = PermGroup::generate({parse_cycles("(01)(23)", 4), parse_cycles("(02)(13)", 4)}, 4);
    CHECK(v4.order() == 4);

    Quandle r3 = dihedral(3);
    auto inn = r3.inner_group();
    auto tr = r3.transvection_group();
    CHECK(inn.order() == 6);
    CHECK(tr.order() == 3);
    CHECK(tr.is_normal_in(inn));
    CHECK(quotient_is_cyclic(inn, tr));

    CHECK_THROWS_AS(PermGroup::generate({parse_cycles("(0 1 2 3 4 5 6 7 8 9 10)", 11)}, 11, 5),
                    resource_error);
}

TEST_CASE("inner/transvection quotient is cyclic across small quandles") {
    for (int n = 2; n <= 7; ++n) {
        Quandle r = dihedral(n);
        CHECK(quotient_is_cyclic(r.inner_group(), r.transvection_group()));
    }
}

TEST_CASE("table text format") {
    std::string text =
        "# order\n"
        "3\n"
        "0 2 1   # row 0\n"
        "2 1 0\n"
        "1 0 2\n";
    CayleyTable t = parse_table(text);
    CHECK(t.n == 3);
    CHECK(t.at(0, 1) == 2);
    CHECK(parse_table(table_to_string(t)) == t);

    CHECK_THROWS_AS(parse_table("2\n0 1\n"), parse_error);      // missing entries
    CHECK_THROWS_AS(parse_table("2\n0 5\n1 0\n"), parse_error); // out of range
    try {
        parse_table("3\n0 0 0\n0 0 x\n0 0 0\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("axiom verification matches the brute-force oracle") {
    CHECK(quandle_violations(trivial_quandle(3).table()).empty());
    CHECK(quandle_violations(dihedral(5).table()).empty());

    CayleyTable bad = trivial_quandle(3).table();
    bad.at(0, 0) = 1;
    auto vs = quandle_violations(bad);
    REQUIRE(!vs.empty());
    CHECK(vs.front().axiom.starts_with("idempotency"));
    CHECK(vs.front().witness[0] == 0);

    std::mt19937 rng(2718);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        CayleyTable t(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) t.at(a, b) = static_cast<int>(rng() % n);
        CHECK(quandle_violations(t).empty() == brute_is_quandle(t));
    }
}

TEST_CASE("right and left translation maps") {
    Quandle r4 = dihedral(4);
    CHECK(r4.right_map(0) == parse_cycles("(13)", 4));
    CHECK_FALSE(r4.left_map_bijective(0));  // row 0 hits only even residues
    Quandle t4 = trivial_quandle(4);
    for (int b = 0; b < 4; ++b) CHECK(t4.right_map(b).is_identity());
}

TEST_CASE("translation maps satisfy the conjugation relation") {
    std::vector<Quandle> sample;
    sample.push_back(dihedral(5));
    sample.push_back(dihedral(6));
    sample.push_back(alexander_poly(2, {1, 1, 1}));
    sample.push_back(galkin(AbelianGroupSpec{{3}}, 1, 2));
    for (const Quandle& q : sample)
        for (int b = 0; b < q.size(); ++b)
            for (int c = 0; c < q.size(); ++c) {
                CHECK(q.right_map(c) * q.right_map(b) ==
                      q.right_map(q.op(b, c)) * q.right_map(c));
            }
}

TEST_CASE("classification flags") {
    auto r4 = classify(dihedral(4));
    CHECK(r4.kei);
    CHECK_FALSE(r4.latin);
    CHECK(r4.medial);
    CHECK_FALSE(r4.connected);
    CHECK_FALSE(r4.faithful);  // R_1 = R_3
    REQUIRE(r4.simple.has_value());
    CHECK_FALSE(*r4.simple);   // parity classes form a congruence

    auto r5 = classify(dihedral(5));
    CHECK(r5.kei);
    CHECK(r5.latin);
    CHECK(r5.medial);
    CHECK(r5.connected);
    CHECK(r5.faithful);
    CHECK(*r5.simple);

    auto t9 = classify(trivial_quandle(9));
    CHECK_FALSE(t9.simple.has_value());  // beyond the congruence-search limit
    CHECK(t9.inner_order == 1);

    auto g5 = classify(galkin(AbelianGroupSpec{{5}}, 0, 0));
    CHECK(g5.latin);
    CHECK_FALSE(g5.medial);
    CHECK(g5.connected);
}

TEST_CASE("medial implies left-distributive on a mixed sample") {
    std::vector<Quandle> sample;
    sample.push_back(trivial_quandle(4));
    sample.push_back(dihedral(4));
    sample.push_back(dihedral(6));
    sample.push_back(alexander_poly(2, {1, 1, 1}));
    sample.push_back(alexander(AbelianGroupSpec{{7}}, AutomorphismSpec::unit(3)));
    for (const Quandle& q : sample)
        if (is_medial(q)) CHECK(is_left_distributive(q));
}

TEST_CASE("orbit decomposition") {
    auto t3 = orbit_decomposition(trivial_quandle(3));
    REQUIRE(t3.size() == 3);
    for (const auto& b : t3) CHECK(b.carrier.size() == 1);

    auto r4 = orbit_decomposition(dihedral(4));
    REQUIRE(r4.size() == 2);
    CHECK(r4[0].carrier == std::vector<int>{0, 2});
    CHECK(r4[1].carrier == std::vector<int>{1, 3});
    CHECK(r4[0].table == trivial_quandle(2).table());

    CHECK(orbit_decomposition(dihedral(5)).size() == 1);

    auto s3conj = orbit_decomposition(conjugation(s3_table()));
    std::multiset<std::size_t> sizes;
    for (const auto& b : s3conj) sizes.insert(b.carrier.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
}

TEST_CASE("minimal complemented subquandle decomposition") {
    auto t4 = nelson_wong_decomposition(trivial_quandle(4));
    CHECK(t4.size() == 4);

    auto r5 = nelson_wong_decomposition(dihedral(5));
    REQUIRE(r5.size() == 1);
    CHECK(r5[0].carrier.size() == 5);

    // Columns (1),(1),(12),(12) in the classical 1-indexed style.
    Quandle q4 = from_column_cycles({"(1)", "(1)", "(12)", "(12)"});
    auto blocks = nelson_wong_decomposition(q4);
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0].carrier == std::vector<int>{0, 1});
    CHECK(blocks[1].carrier == std::vector<int>{2});
    CHECK(blocks[2].carrier == std::vector<int>{3});

    CHECK_THROWS_AS(nelson_wong_decomposition(trivial_quandle(17)), resource_error);
}

TEST_CASE("isomorphism testing") {
    Quandle r4 = dihedral(4);
    auto self = are_isomorphic(r4, r4);
    REQUIRE(self.has_value());

    Quandle q6 = from_column_cycles({"(34)", "(34)", "(12)", "(12)"});
    auto iso = are_isomorphic(r4, q6);
    REQUIRE(iso.has_value());
    const Perm& f = *iso;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(f(r4.op(a, b)) == q6.op(f(a), f(b)));

    CHECK_FALSE(are_isomorphic(trivial_quandle(4), q6).has_value());
    CHECK_FALSE(are_isomorphic(trivial_quandle(3), trivial_quandle(4)).has_value());
}

TEST_CASE("canonical form") {
    Quandle t4 = trivial_quandle(4);
    CHECK(canonical_form(t4) == t4.table());

    Quandle r4 = dihedral(4);
    Quandle q6 = from_column_cycles({"(34)", "(34)", "(12)", "(12)"});
    CHECK(canonical_form(r4) == canonical_form(q6));
    CHECK(canonical_form(r4) != canonical_form(t4));

    std::vector<Quandle> sample;
    sample.push_back(dihedral(5));
    sample.push_back(alexander_poly(2, {1, 1, 1}));
    sample.push_back(from_column_cycles({"(1)", "(1)", "(12)", "(12)"}));
    sample.push_back(galkin(AbelianGroupSpec{{3}}, 0, 1));
    for (const Quandle& q : sample) {
        CayleyTable c = canonical_form(q);
        CHECK(is_canonical_table(c));
        CHECK(canonical_form(Quandle::trusted(c)) == c);  // idempotent
        REQUIRE(are_isomorphic(q, Quandle::trusted(c)).has_value());
    }
}

TEST_CASE("automorphism groups") {
    CHECK(automorphism_group(trivial_quandle(4)).order() == 24);
    CHECK(automorphism_group(dihedral(3)).order() == 6);
    CHECK(automorphism_group(dihedral(5)).order() == 20);
    CHECK_THROWS_AS(automorphism_group(trivial_quandle(13)), resource_error);
}

TEST_CASE("inner-group reconstruction of connected quandles") {
    CHECK(verify_vendramin(dihedral(3)));
    CHECK(verify_vendramin(dihedral(5)));
    CHECK(verify_vendramin(alexander_poly(2, {1, 1, 1})));
    CHECK_THROWS_AS(verify_vendramin(dihedral(4)), domain_error);  // disconnected
}

TEST_CASE("classical order-4 column presentation") {
    Quandle alex4 = alexander_poly(2, {1, 1, 1});
    CHECK(column_cycles(alex4) ==
          std::vector<std::string>{"(234)", "(143)", "(124)", "(132)"});
}

// --- constructions ----------------------------------------------------------

TEST_CASE("dihedral and trivial tables") {
    CHECK(dihedral(3).op(0, 1) == 2);
    CHECK(column_cycles(dihedral(4)) ==
          std::vector<std::string>{"(24)", "(13)", "(24)", "(13)"});
    CHECK(column_cycles(trivial_quandle(4)) ==
          std::vector<std::string>{"(1)", "(1)", "(1)", "(1)"});
    CHECK_THROWS_AS(dihedral(0), domain_error);
}

TEST_CASE("conjugation and core quandles") {
    CHECK(conjugation(cyclic_group(5)).table() == trivial_quandle(5).table());
    CHECK(core_quandle(cyclic_group(3)).table() == dihedral(3).table());

    CayleyTable not_group(3);  // all-zero table: no identity
    CHECK_THROWS_AS(conjugation(not_group), domain_error);

    Quandle cs3 = conjugation(s3_table());
    CHECK(cs3.size() == 6);
    CHECK(classify(cs3).kei == false);
}

TEST_CASE("abelian group spec and automorphism validation") {
    AbelianGroupSpec z24{{2, 4}};
    CHECK(z24.size() == 8);
    for (int x = 0; x < 8; ++x) CHECK(z24.encode(z24.decode(x)) == x);
    CHECK(z24.add(z24.encode({1, 3}), z24.encode({1, 2})) == z24.encode({0, 1}));
    CHECK(z24.scale(-1, z24.encode({1, 1})) == z24.encode({1, 3}));

    CHECK_THROWS_AS(automorphism_perm(AbelianGroupSpec{{4}}, AutomorphismSpec::unit(2)),
                    domain_error);  // not bijective
    CHECK_THROWS_AS(automorphism_perm(z24, AutomorphismSpec{{{1, 0}, {1, 1}}}),
                    domain_error);  // bijective but not additive
    CHECK(automorphism_perm(z24, AutomorphismSpec{{{1, 2}, {0, 1}}}).degree() == 8);
}

TEST_CASE("affine quandles") {
    CHECK(alexander(AbelianGroupSpec{{5}}, AutomorphismSpec::unit(1)).table() ==
          trivial_quandle(5).table());
    CHECK(alexander(AbelianGroupSpec{{6}}, AutomorphismSpec::unit(5)).table() ==
          dihedral(6).table());

    Quandle f4 = alexander(AbelianGroupSpec{{2, 2}}, AutomorphismSpec{{{0, 1}, {1, 1}}});
    CHECK(are_isomorphic(f4, alexander_poly(2, {1, 1, 1})).has_value());

    CHECK_THROWS_AS(alexander(AbelianGroupSpec{{4}}, AutomorphismSpec::unit(2)), domain_error);
}

TEST_CASE("polynomial quotient quandles") {
    CHECK(alexander_poly(8, {1, 1}).table() == dihedral(8).table());

    Quandle alex4 = alexander_poly(2, {1, 1, 1});
    auto rep = classify(alex4);
    CHECK(rep.connected);
    CHECK(rep.latin);

    Quandle base = alexander_poly(2, {1, 0, 1});  // (1-T)^2 over Z_2
    CHECK(base.size() == 4);
    CHECK_FALSE(classify(base).connected);

    CHECK_THROWS_AS(alexander_poly(2, {0, 1}), domain_error);  // T not invertible
    CHECK_THROWS_AS(alexander_poly(4, {1, 2}), domain_error);  // not monic
}

TEST_CASE("homogeneous coset quandles") {
    // H = G collapses to a point.
    CayleyTable z6 = cyclic_group(6);
    std::vector<int> all{0, 1, 2, 3, 4, 5};
    CHECK(homogeneous(z6, all, Perm::identity(6)).size() == 1);

    // H = {e}, phi = negation: literally the dihedral table.
    std::vector<int> neg(6);
    for (int i = 0; i < 6; ++i) neg[i] = (6 - i) % 6;
    CHECK(homogeneous(z6, {0}, Perm(neg)).table() == dihedral(6).table());

    // Stabilizer construction on S_3 recovers R_3.
    auto s3 = PermGroup::generate({parse_cycles("(01)", 3), parse_cycles("(012)", 3)}, 3);
    CayleyTable g = group_table(s3);
    const auto& els = s3.elements();
    std::vector<int> stab;
    for (int i = 0; i < 6; ++i)
        if (els[i](0) == 0) stab.push_back(i);
    Perm z = parse_cycles("(12)", 3);
    std::vector<int> phi(6);
    for (int i = 0; i < 6; ++i) {
        Perm w = z * els[i] * z;
        phi[i] = static_cast<int>(std::lower_bound(els.begin(), els.end(), w) - els.begin());
    }
    Quandle h = homogeneous(g, stab, Perm(phi));
    CHECK(h.size() == 3);
    CHECK(are_isomorphic(h, dihedral(3)).has_value());

    // phi must fix H pointwise: conjugation by (01) moves the stabilizer.
    Perm w0 = parse_cycles("(01)", 3);
    std::vector<int> phi2(6);
    for (int i = 0; i < 6; ++i) {
        Perm w = w0 * els[i] * w0;
        phi2[i] = static_cast<int>(std::lower_bound(els.begin(), els.end(), w) - els.begin());
    }
    CHECK_THROWS_AS(homogeneous(g, stab, Perm(phi2)), domain_error);
}

TEST_CASE("triple cover quandles") {
    CHECK(galkin(AbelianGroupSpec{{1}}, 0, 0).table() == dihedral(3).table());

    Quandle g3 = galkin(AbelianGroupSpec{{3}}, 1, 2);
    Quandle g3n = galkin(AbelianGroupSpec{{3}}, 0, 1);
    CHECK(are_isomorphic(g3, g3n).has_value());  // (c1,c2) ~ (0, c2-c1)
    CHECK(is_medial(g3));                        // 3A = 0

    auto rep = classify(galkin(AbelianGroupSpec{{2}}, 0, 0));
    CHECK(rep.connected);
    CHECK_FALSE(rep.latin);  // |A| even
}

TEST_CASE("reflection quandles over odd prime fields") {
    Quandle c1 = coxeter_fp(3, {{1}}, 1);
    CHECK(c1.table() == trivial_quandle(2).table());  // carrier {1,2}, reflections fix the line

    Quandle c2 = coxeter_fp(3, {{1, 0}, {0, 1}}, 2);
    CHECK(c2.size() == 8);  // only the origin is isotropic
    CHECK(classify(c2).kei);

    CHECK_THROWS_AS(coxeter_fp(2, {{1}}, 1), domain_error);
    CHECK_THROWS_AS(coxeter_fp(9, {{1}}, 1), domain_error);
    CHECK_THROWS_AS(coxeter_fp(3, {{1, 1}, {0, 1}}, 2), domain_error);  // not symmetric
}

TEST_CASE("affine quasigroups") {
    AbelianGroupSpec z5{{5}};
    CHECK(affine_quasigroup(z5, AutomorphismSpec::unit(1), AutomorphismSpec::unit(1), 0) ==
          cyclic_group(5));

    CayleyTable m = affine_quasigroup(z5, AutomorphismSpec::unit(2), AutomorphismSpec::unit(2), 1);
    CHECK(quasigroup_violations(m).empty());
    CHECK(m.at(0, 0) == 1);  // not idempotent

    CayleyTable a = affine_quasigroup(z5, AutomorphismSpec::unit(2), AutomorphismSpec::unit(4), 0);
    CHECK(a == alexander(z5, AutomorphismSpec::unit(2)).table());  // g = 1 - f
}

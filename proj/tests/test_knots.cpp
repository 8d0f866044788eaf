#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

#include "qf/cohomology.hpp"
#include "qf/constructions.hpp"
#include "qf/errors.hpp"
#include "qf/knots.hpp"
#include "qf/quandle.hpp"

using namespace qf;

namespace {

KnotDiagram load_knot(const std::string& name) {
    std::ifstream in(std::string(QF_DATA_DIR) + "/knots/" + name);
    if (!in) throw std::runtime_error("missing data file " + name);
    return parse_pd(in);
}

Quandle load_quandle(const std::string& name) {
    std::ifstream in(std::string(QF_DATA_DIR) + "/quandles/" + name);
    if (!in) throw std::runtime_error("missing data file " + name);
    return Quandle(parse_table(in));
}

CocycleTable load_cocycle(const std::string& name) {
    std::ifstream in(std::string(QF_DATA_DIR) + "/cocycles/" + name);
    if (!in) throw std::runtime_error("missing data file " + name);
    return parse_cocycle(in);
}

// odometer over all |X|^arcs assignments, filtered crossing by crossing
std::vector<Coloring> brute_colorings(const KnotDiagram& k, const Quandle& q) {
    const int n = q.size();
    std::vector<int> rinv(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) rinv[static_cast<std::size_t>(q.op(x, y)) * n + y] = x;
    std::vector<Coloring> out;
    Coloring c(static_cast<std::size_t>(k.arcs), 0);
    while (true) {
        bool ok = true;
        for (const Crossing& cr : k.crossings) {
            int ov = c[static_cast<std::size_t>(cr.over)], ui = c[static_cast<std::size_t>(cr.under_in)],
                uo = c[static_cast<std::size_t>(cr.under_out)];
            int want = cr.sign > 0 ? q.op(ui, ov) : rinv[static_cast<std::size_t>(ui) * n + ov];
            if (uo != want) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(c);
        int pos = k.arcs - 1;
        while (pos >= 0 && c[static_cast<std::size_t>(pos)] == n - 1) c[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++c[static_cast<std::size_t>(pos)];
    }
    return out;
}

GroupRingElement ring(int m, std::vector<long long> coeff) { return {m, std::move(coeff)}; }

}  // namespace

TEST_CASE("pd parsing") {
    KnotDiagram tre = load_knot("trefoil.pd");
    CHECK(tre.crossings.size() == 3);
    CHECK(tre.arcs == 3);
    CHECK(tre.crossings[0] == Crossing{0, 1, 2, 1});
    CHECK(tre.crossings[1] == Crossing{2, 0, 1, 1});
    CHECK(tre.crossings[2] == Crossing{1, 2, 0, 1});

    // round trip through the text form
    CHECK(parse_pd(pd_to_string(tre)) == tre);
    KnotDiagram eight = load_knot("figure8.pd");
    CHECK(eight.crossings.size() == 4);
    CHECK(eight.crossings[1].sign == -1);
    CHECK(parse_pd(pd_to_string(eight)) == eight);

    // no crossings: the unknot with its single free arc
    KnotDiagram unknot = parse_pd("");
    CHECK(unknot.crossings.empty());
    CHECK(unknot.arcs == 1);
    CHECK(parse_pd("# just a comment\n\n") == unknot);
    CHECK(pd_to_string(unknot).empty());

    // a one-crossing kink is a fine diagram: the arc crosses itself
    KnotDiagram kink = parse_pd("X 0 0 0 0 +");
    CHECK(kink.arcs == 1);
}

TEST_CASE("pd validation failures") {
    auto line_of = [](const std::string& text) {
        try {
            parse_pd(text);
        } catch (const parse_error& e) {
            return e.line;
        }
        return -1;
    };

    CHECK(line_of("Y 0 0 1 2 +") == 1);
    CHECK(line_of("X 0 0 1 +") == 1);            // missing a label
    CHECK(line_of("X 0 0 1 2 *") == 1);          // bad sign
    CHECK(line_of("X 0 0 1 2 + 5") == 1);        // trailing token
    CHECK(line_of("X 0 1 1 2 +") == 1);          // over-arc must pass through
    CHECK(line_of("# header\n\nX 0 0 0 0 +\nX 0 1 0 0 +") == 4);

    // arc labels out of range (must be 0..crossings-1)
    CHECK_THROWS_AS(parse_pd("X 0 0 5 0 +"), parse_error);
    // arc 0 under twice, arc 1 never
    CHECK_THROWS_AS(parse_pd("X 0 0 0 1 +\nX 2 2 0 2 +\nX 1 1 1 0 +"), parse_error);
    CHECK_THROWS_AS(parse_pd("X 0 0 1 2 +\nX 0 0 2 1 +\nX 0 0 2 0 +"), parse_error);
    // two disjoint kinks: a link, not a knot
    CHECK_THROWS_AS(parse_pd("X 1 1 0 0 +\nX 0 0 1 1 +"), parse_error);

    // messages name the offense
    try {
        parse_pd("X 0 0 0 1 +\nX 2 2 0 2 +\nX 1 1 1 0 +");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("more than twice") != std::string::npos);
    }
    try {
        parse_pd("X 0 0 1 2 +\nX 0 0 2 1 +\nX 0 0 2 0 +");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("dangling") != std::string::npos);
    }
}

TEST_CASE("coloring counts on the classical diagrams") {
    Quandle alex4 = load_quandle("alex4.qdl");
    CHECK(alex4.table() == alexander_poly(2, {1, 1, 1}).table());

    KnotDiagram tre = load_knot("trefoil.pd"), eight = load_knot("figure8.pd"),
                k85 = load_knot("k8_5.pd");
    Quandle r3 = dihedral(3), r5 = dihedral(5), r7 = dihedral(7);

    CHECK(colorings(tre, r3).size() == 9);
    CHECK(colorings(eight, r3).size() == 3);  // only monochromatic: distinguishes 4_1 from 3_1
    CHECK(colorings(eight, r5).size() == 25);
    CHECK(colorings(k85, r3).size() == 9);
    CHECK(colorings(k85, r7).size() == 49);
    CHECK(colorings(tre, alex4).size() == 16);
    CHECK(colorings(eight, alex4).size() == 16);
    CHECK(colorings(k85, alex4).size() == 16);

    // unknots color freely
    CHECK(colorings(parse_pd(""), r5).size() == 5);
    CHECK(colorings(parse_pd("X 0 0 0 0 +"), r5).size() == 5);

    // monochromatic colorings always survive, and results come out sorted
    auto cols = colorings(tre, r3);
    for (int x = 0; x < 3; ++x)
        CHECK(std::find(cols.begin(), cols.end(), Coloring(3, x)) != cols.end());
    CHECK(std::is_sorted(cols.begin(), cols.end()));
}

TEST_CASE("colorings agree with the exhaustive filter") {
    std::vector<KnotDiagram> knots = {load_knot("trefoil.pd"), load_knot("figure8.pd"),
                                      load_knot("trefoil_r1.pd"), load_knot("trefoil_r2.pd")};
    std::vector<Quandle> quandles = {trivial_quandle(1), trivial_quandle(2), dihedral(3),
                                     dihedral(4), load_quandle("alex4.qdl")};
    for (const KnotDiagram& k : knots)
        for (const Quandle& q : quandles) CHECK(colorings(k, q) == brute_colorings(k, q));
}

TEST_CASE("group ring printing") {
    CHECK(ring(2, {4, 12}).to_string() == "4 + 12t");
    CHECK(ring(1, {16}).to_string() == "16");
    CHECK(ring(2, {16, 0}).to_string() == "16");
    CHECK(ring(4, {0, 1, 2, 0}).to_string() == "t + 2t^2");
    CHECK(ring(3, {0, 0, 0}).to_string() == "0");
    CHECK(ring(5, {1, 0, 3, 0, 1}).to_string() == "1 + 3t^2 + t^4");
    CHECK(ring(2, {4, 12}).coefficient_sum() == 16);
    CHECK(ring(3, {0, 0, 0}).coefficient_sum() == 0);
}

TEST_CASE("state sums reproduce the published table") {
    Quandle alex4 = load_quandle("alex4.qdl");
    CocycleTable chi6 = load_cocycle("chi6.coc");
    REQUIRE(is_cocycle(alex4, chi6).valid);

    GroupRingElement tre = cocycle_invariant(load_knot("trefoil.pd"), alex4, chi6);
    CHECK(tre == ring(2, {4, 12}));
    CHECK(tre.to_string() == "4 + 12t");

    GroupRingElement eight = cocycle_invariant(load_knot("figure8.pd"), alex4, chi6);
    CHECK(eight == ring(2, {4, 12}));

    GroupRingElement k85 = cocycle_invariant(load_knot("k8_5.pd"), alex4, chi6);
    CHECK(k85 == ring(2, {16, 0}));
    CHECK(k85.to_string() == "16");

    // coefficient sums count the colorings
    CHECK(tre.coefficient_sum() == 16);
    CHECK(k85.coefficient_sum() == 16);

    // the zero cocycle collapses to the coloring count
    Quandle r3 = dihedral(3);
    CHECK(cocycle_invariant(load_knot("trefoil.pd"), r3, CocycleTable(2, 2, 3)).to_string() == "9");
}

TEST_CASE("state sum invariance") {
    Quandle alex4 = load_quandle("alex4.qdl");
    CocycleTable chi6 = load_cocycle("chi6.coc");
    KnotDiagram tre = load_knot("trefoil.pd");

    // Reidemeister-stabilized trefoils carry the same data
    for (const char* name : {"trefoil_r1.pd", "trefoil_r2.pd"}) {
        KnotDiagram stab = load_knot(name);
        CHECK(cocycle_invariant(stab, alex4, chi6) == ring(2, {4, 12}));
        CHECK(reidemeister_equivalence_check(tre, stab, alex4, chi6));
    }

    // different knots: the harness reports the difference
    CHECK_FALSE(
        reidemeister_equivalence_check(tre, load_knot("figure8.pd"), dihedral(3), CocycleTable(2, 2, 3)));

    // shifting the cocycle by a coboundary never moves the state sum
    auto shift_by = [](const Quandle& q, const CocycleTable& phi, const std::vector<int>& lam) {
        CocycleTable out = phi;
        for (int x = 0; x < q.size(); ++x)
            for (int y = 0; y < q.size(); ++y)
                out.at(x, y) =
                    ((out.at(x, y) + lam[static_cast<std::size_t>(x)] -
                      lam[static_cast<std::size_t>(q.op(x, y))]) % phi.modulus + phi.modulus) %
                    phi.modulus;
        return out;
    };
    KnotDiagram eight = load_knot("figure8.pd");
    CocycleTable shifted = shift_by(alex4, chi6, {0, 1, 1, 0});
    REQUIRE(is_cocycle(alex4, shifted).valid);
    CHECK(shifted != chi6);
    CHECK(cocycle_invariant(eight, alex4, shifted) == ring(2, {4, 12}));

    Quandle r4 = dihedral(4);
    CocycleTable phi8 = load_cocycle("r4ext.coc");
    CHECK(cocycle_invariant(tre, r4, phi8) == ring(2, {4, 0}));
    CHECK(cocycle_invariant(tre, r4, shift_by(r4, phi8, {0, 1, 0, 1})) == ring(2, {4, 0}));
}

TEST_CASE("state sum validation") {
    Quandle r3 = dihedral(3);
    KnotDiagram tre = load_knot("trefoil.pd");

    CocycleTable bad(2, 2, 3);
    bad.at(0, 1) = 1;  // chi_{0,1} is not a cocycle on the dihedral triangle
    CHECK_THROWS_AS(cocycle_invariant(tre, r3, bad), domain_error);
    CHECK_THROWS_AS(cocycle_invariant(tre, r3, CocycleTable(3, 2, 3)), domain_error);
    CHECK_THROWS_AS(cocycle_invariant(tre, r3, CocycleTable(2, 2, 4)), domain_error);
}

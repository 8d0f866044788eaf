// End-to-end acceptance harness.  Each numbered criterion prints exactly one
// PASS/FAIL line; the exit status is the number of failing criteria.  Run a
// single criterion with --criterion N, or the order-8 census (slow, part of
// criterion 1 but budgeted separately) with --large.

#include <array>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qf/cli.hpp"
#include "qf/cohomology.hpp"
#include "qf/constructions.hpp"
#include "qf/enumeration.hpp"
#include "qf/errors.hpp"
#include "qf/extensions.hpp"
#include "qf/knots.hpp"
#include "qf/loops.hpp"
#include "qf/perm.hpp"
#include "qf/quandle.hpp"

using namespace qf;

namespace {

// Wall-clock budgets, all in seconds.  These encode "fast on a laptop"; the
// census budgets have an order of magnitude of headroom over measured times.
constexpr double small_census_budget = 60.0;    // quandle counts, orders 3..7
constexpr double large_census_budget = 1800.0;  // quandle count, order 8
constexpr double alexander16_budget = 300.0;    // affine census, order 16
constexpr double state_sum_budget = 10.0;       // one knot invariant
constexpr double loop_budget = 60.0;            // exhaustive order-81 loop checks

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::string secs(double s) {
    std::ostringstream o;
    o << std::fixed << std::setprecision(1) << s << "s";
    return o.str();
}

std::string chomp(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

std::string data_path(const std::string& rel) {
    return std::string(QF_DATA_DIR) + "/" + rel;
}

KnotDiagram load_knot(const std::string& name) {
    std::ifstream f(data_path("knots/" + name));
    return parse_pd(f);
}

CocycleTable load_cocycle(const std::string& name) {
    std::ifstream f(data_path("cocycles/" + name));
    return parse_cocycle(f);
}

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

// Run the CLI in-process and return {exit code, stdout}.
std::pair<int, std::string> run_cli(const std::vector<std::string>& args) {
    std::istringstream in;
    std::ostringstream out, err;
    int code = cli::run(args, in, out, err);
    return {code, out.str()};
}

// --- criterion 1: census counts for orders 3..7 ----------------------------

Outcome small_census() {
    const long long expected[] = {3, 7, 22, 73, 298};
    Stopwatch w;
    for (int n = 3; n <= 7; ++n) {
        auto [code, out] = run_cli({"enumerate", "--order", std::to_string(n), "--count-only"});
        if (code != 0)
            return {false, "enumerate --order " + std::to_string(n) + " exited " + std::to_string(code)};
        long long want = expected[n - 3];
        if (out != std::to_string(want) + "\n")
            return {false, "order " + std::to_string(n) + " counted " + chomp(out) +
                               ", expected " + std::to_string(want)};
    }
    double t = w.elapsed();
    if (t > small_census_budget)
        return {false, "counts correct but took " + secs(t) + ", budget " + secs(small_census_budget)};
    return {true, "orders 3..7 -> 3, 7, 22, 73, 298 in " + secs(t)};
}

// The order-8 half of criterion 1, kept behind --large.
Outcome large_census() {
    Stopwatch w;
    auto [code, out] = run_cli({"enumerate", "--order", "8", "--count-only"});
    double t = w.elapsed();
    if (code != 0) return {false, "enumerate --order 8 exited " + std::to_string(code)};
    if (out != "1581\n") return {false, "order 8 counted " + chomp(out) + ", expected 1581"};
    if (t > large_census_budget)
        return {false, "count correct but took " + secs(t) + ", budget " + secs(large_census_budget)};
    return {true, "order 8 -> 1581 in " + secs(t)};
}

// --- criterion 2: the classical order-4 table ------------------------------

Outcome order4_table() {
    // The seven order-4 quandles in column disjoint-cycle notation (1-indexed),
    // as tabulated in the classical census.
    const std::vector<std::vector<std::string>> rows = {
        {"(1)", "(1)", "(1)", "(1)"},   {"(1)", "(1)", "(1)", "(23)"},
        {"(1)", "(1)", "(1)", "(123)"}, {"(1)", "(1)", "(12)", "(12)"},
        {"(1)", "(34)", "(24)", "(23)"}, {"(34)", "(34)", "(12)", "(12)"},
        {"(234)", "(143)", "(124)", "(132)"},
    };
    std::vector<CayleyTable> census = enumerate_quandles(4).tables;
    if (census.size() != rows.size())
        return {false, "census found " + std::to_string(census.size()) + " classes, expected 7"};
    std::vector<int> hits(census.size(), 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        Quandle q = from_column_cycles(rows[r]);
        int matches = 0;
        std::size_t where = 0;
        for (std::size_t c = 0; c < census.size(); ++c)
            if (are_isomorphic(q, Quandle::trusted(census[c])).has_value()) {
                ++matches;
                where = c;
            }
        if (matches != 1)
            return {false, "row " + std::to_string(r + 1) + " matches " + std::to_string(matches) +
                               " census classes, expected exactly 1"};
        ++hits[where];
    }
    for (std::size_t c = 0; c < hits.size(); ++c)
        if (hits[c] != 1)
            return {false, "census class " + std::to_string(c + 1) + " matched " +
                               std::to_string(hits[c]) + " rows"};
    return {true, "the seven column-cycle rows match the seven census classes one-to-one"};
}

// --- criterion 3: automorphism groups of dihedral quandles -----------------

Outcome dihedral_automorphisms() {
    std::string sizes;
    for (int n : {3, 5, 6, 7, 9}) {
        int phi = 0;
        for (int k = 1; k <= n; ++k)
            if (std::gcd(k, n) == 1) ++phi;
        long long want = static_cast<long long>(n) * phi;
        long long have = static_cast<long long>(automorphism_group(dihedral(n)).order());
        if (have != want)
            return {false, "|Aut(R_" + std::to_string(n) + ")| = " + std::to_string(have) +
                               ", expected n*phi(n) = " + std::to_string(want)};
        sizes += (sizes.empty() ? "" : ", ") + std::to_string(have);
    }
    return {true, "|Aut(R_n)| = " + sizes + " for n = 3, 5, 6, 7, 9, each equal to n*phi(n)"};
}

// --- criterion 4: the order-16 Alexander census ----------------------------

Outcome alexander16() {
    Stopwatch w;
    auto [code, out] = run_cli({"enumerate-alexander", "16"});
    double t = w.elapsed();
    if (code != 0) return {false, "enumerate-alexander 16 exited " + std::to_string(code)};
    long long got = std::strtoll(out.c_str(), nullptr, 10);
    if (t > alexander16_budget)
        return {false, "census took " + secs(t) + ", budget " + secs(alexander16_budget)};
    if (got != 24)
        return {false, "computed " + std::to_string(got) + " Alexander classes of order 16 in " +
                           secs(t) + "; the pinned published tally is 24"};
    return {true, "24 Alexander classes of order 16 in " + secs(t)};
}

// --- criterion 5: the published state-sum values ---------------------------

Outcome state_sum_table() {
    Quandle alex4 = alexander_poly(2, {1, 1, 1});
    CocycleTable chi6 = load_cocycle("chi6.coc");
    if (!is_cocycle(alex4, chi6).valid)
        return {false, "the stored six-term cocycle no longer validates"};
    struct Row {
        const char* file;
        GroupRingElement want;
        const char* text;
    };
    const Row table[] = {
        {"trefoil.pd", {2, {4, 12}}, "4 + 12t"},
        {"figure8.pd", {2, {4, 12}}, "4 + 12t"},
        {"k8_5.pd", {2, {16, 0}}, "16"},
    };
    std::string times;
    for (const Row& row : table) {
        Stopwatch w;
        GroupRingElement got = cocycle_invariant(load_knot(row.file), alex4, chi6);
        double t = w.elapsed();
        if (got != row.want || got.to_string() != row.text)
            return {false, std::string(row.file) + " gave " + got.to_string() + ", expected " + row.text};
        if (t > state_sum_budget)
            return {false, std::string(row.file) + " took " + secs(t) + ", budget " +
                               secs(state_sum_budget) + " per knot"};
        times += (times.empty() ? "" : ", ") + secs(t);
    }
    return {true, "trefoil and figure-eight -> 4 + 12t, 8_5 -> 16 (" + times + ")"};
}

// --- criterion 6: R_8 as an abelian extension of R_4 ------------------------

Outcome dihedral8_extension() {
    Quandle r4 = dihedral(4);
    Quandle r8 = dihedral(8);
    CocycleTable phi = load_cocycle("r4ext.coc");
    if (!is_cocycle(r4, phi).valid)
        return {false, "the stored extension cocycle no longer validates"};
    Quandle e = abelian_extension(r4, 2, phi);
    if (!are_isomorphic(e, r8).has_value())
        return {false, "E(R_4, Z_2, phi) is not isomorphic to R_8"};
    std::vector<int> p(8);
    for (int i = 0; i < 8; ++i) p[static_cast<std::size_t>(i)] = i % 4;
    CocycleTable back = extract_cocycle(r8, r4, p);
    if (!cohomologous(r4, back, phi))
        return {false, "the cocycle extracted from R_8 -> R_4 is not cohomologous to phi"};
    return {true, "E(R_4, Z_2, phi) ~ R_8 and the extracted cocycle is cohomologous to phi"};
}

// --- criterion 7: the commutative Moufang loop of order 81 -----------------

Outcome zassenhaus_loop() {
    Stopwatch w;
    Loop z = zassenhaus81();
    if (z.size() != 81) return {false, "order " + std::to_string(z.size()) + ", expected 81"};
    if (auto c = commutativity_witness(z.table()))
        return {false, "not commutative at (" + std::to_string((*c)[0]) + ", " +
                           std::to_string((*c)[1]) + ")"};
    if (!moufang_check(z).all()) return {false, "a Moufang identity fails"};
    std::optional<std::array<int, 3>> a = associativity_witness(z.table());
    if (!a) return {false, "no associativity-failure witness: the loop associates"};
    int x = (*a)[0], y = (*a)[1], zz = (*a)[2];
    if (z.op(x, z.op(y, zz)) == z.op(z.op(x, y), zz))
        return {false, "the recorded witness does not violate associativity"};
    long long e = loop_exponent(z);
    if (e != 3) return {false, "exponent " + std::to_string(e) + ", expected 3"};
    double t = w.elapsed();
    if (t > loop_budget)
        return {false, "checks took " + secs(t) + ", budget " + secs(loop_budget)};
    std::ostringstream d;
    d << "order 81, commutative, Moufang, exponent 3, associativity fails at (" << x << ", " << y
      << ", " << zz << ") in " << secs(t);
    return {true, d.str()};
}

// --- criterion 8: the two order-15 Galkin quandles --------------------------

Outcome galkin_pair() {
    Quandle a = galkin(AbelianGroupSpec{{5}}, 0, 0);
    Quandle b = galkin(AbelianGroupSpec{{5}}, 1, 0);
    for (const Quandle* q : {&a, &b}) {
        ClassificationReport r = classify(*q);
        if (!r.connected) return {false, "an order-15 Galkin quandle is disconnected"};
        if (!r.latin) return {false, "an order-15 Galkin quandle is not Latin"};
        if (r.medial) return {false, "an order-15 Galkin quandle came out medial"};
    }
    if (are_isomorphic(a, b).has_value())
        return {false, "G(Z_5,(0,0)) and G(Z_5,(1,0)) came out isomorphic"};
    if (!are_isomorphic(galkin(AbelianGroupSpec{{3}}, 1, 2), galkin(AbelianGroupSpec{{3}}, 0, 1))
             .has_value())
        return {false, "G(Z_3,(1,2)) and G(Z_3,(0,1)) came out non-isomorphic"};
    return {true, "both order-15 quandles connected, Latin, non-medial, and non-isomorphic; "
                  "G(Z_3,(1,2)) ~ G(Z_3,(0,1))"};
}

// --- criterion 9: medial <-> Alexander across all small Latin quandles -----

Outcome toyoda_sweep() {
    int latin_total = 0, medial_total = 0;
    for (int n = 1; n <= 7; ++n) {
        EnumerationOptions opts;
        opts.filter = QuandleFilter::latin;
        for (const CayleyTable& t : enumerate_quandles(n, opts).tables) {
            Quandle q = Quandle::trusted(t);
            ++latin_total;
            bool medial = is_medial(q);
            std::optional<ToyodaWitness> w = toyoda_witness(q);
            if (medial != w.has_value())
                return {false, "an order-" + std::to_string(n) +
                                   " Latin class breaks medial <-> Alexander"};
            if (!w) continue;
            ++medial_total;
            Quandle model = alexander(w->group, w->action);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (w->iso(q.op(x, y)) != model.op(w->iso(x), w->iso(y)))
                        return {false, "a returned Alexander witness is not an isomorphism"};
        }
    }
    return {true, std::to_string(latin_total) + " Latin classes of order <= 7, " +
                      std::to_string(medial_total) +
                      " medial, medial <-> Alexander with zero exceptions"};
}

// --- criterion 10: structural property suites -------------------------------

bool composes_to_zero(const BoundaryMatrix& outer, const BoundaryMatrix& inner) {
    if (outer.cols() != inner.rows()) return false;
    for (std::size_t r = 0; r < outer.rows(); ++r)
        for (std::size_t c = 0; c < inner.cols(); ++c) {
            long long s = 0;
            for (std::size_t k = 0; k < outer.cols(); ++k) s += outer.at(r, k) * inner.at(k, c);
            if (s != 0) return false;
        }
    return true;
}

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
            int ov = c[static_cast<std::size_t>(cr.over)];
            int ui = c[static_cast<std::size_t>(cr.under_in)];
            int uo = c[static_cast<std::size_t>(cr.under_out)];
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

Outcome property_suites() {
    // boundary maps square to zero: every order <= 4, both theories
    for (int n = 1; n <= 4; ++n)
        for (const CayleyTable& t : enumerate_quandles(n).tables) {
            Quandle q = Quandle::trusted(t);
            for (ChainTheory th : {ChainTheory::rack, ChainTheory::quandle}) {
                if (!composes_to_zero(boundary_matrix(q, 1, th), boundary_matrix(q, 2, th)) ||
                    !composes_to_zero(boundary_matrix(q, 2, th), boundary_matrix(q, 3, th)))
                    return {false, "d.d != 0 on an order-" + std::to_string(n) + " quandle"};
            }
        }

    // coloring counts against the |X|^arcs filter, <= 4 crossings, |X| <= 4
    std::vector<KnotDiagram> knots;
    knots.push_back(parse_pd(""));             // unknot
    knots.push_back(parse_pd("X 0 0 0 0 +"));  // one-crossing kink
    knots.push_back(load_knot("trefoil.pd"));
    knots.push_back(load_knot("figure8.pd"));
    Quandle alex4 = alexander_poly(2, {1, 1, 1});
    std::vector<Quandle> small = {trivial_quandle(4), dihedral(3), dihedral(4), alex4};
    for (const KnotDiagram& k : knots)
        for (const Quandle& q : small)
            if (colorings(k, q) != brute_colorings(k, q))
                return {false, "a coloring set disagrees with the exhaustive filter"};

    // state-sum coefficient sums count the colorings
    CocycleTable chi6 = load_cocycle("chi6.coc");
    CocycleTable r4ext = load_cocycle("r4ext.coc");
    Quandle r4 = dihedral(4);
    struct Instance {
        const char* file;
        const Quandle* q;
        const CocycleTable* phi;
    };
    const Instance instances[] = {
        {"trefoil.pd", &alex4, &chi6}, {"figure8.pd", &alex4, &chi6},
        {"k8_5.pd", &alex4, &chi6},    {"trefoil.pd", &r4, &r4ext},
        {"figure8.pd", &r4, &r4ext},
    };
    for (const Instance& it : instances) {
        KnotDiagram k = load_knot(it.file);
        long long sum = cocycle_invariant(k, *it.q, *it.phi).coefficient_sum();
        if (sum != static_cast<long long>(colorings(k, *it.q).size()))
            return {false, std::string("coefficient sum != coloring count on ") + it.file};
    }

    // stabilized trefoil diagrams carry the same invariant
    KnotDiagram tre = load_knot("trefoil.pd");
    KnotDiagram tre1 = load_knot("trefoil_r1.pd");
    KnotDiagram tre2 = load_knot("trefoil_r2.pd");
    GroupRingElement base = cocycle_invariant(tre, alex4, chi6);
    if (cocycle_invariant(tre1, alex4, chi6) != base ||
        cocycle_invariant(tre2, alex4, chi6) != base)
        return {false, "a stabilized trefoil diagram changed the state sum"};
    if (!reidemeister_equivalence_check(tre, tre1, alex4, chi6) ||
        !reidemeister_equivalence_check(tre, tre2, alex4, chi6) ||
        !reidemeister_equivalence_check(tre1, tre2, alex4, chi6))
        return {false, "a stabilized trefoil pair fails the equivalence check"};

    // R_c R_b = R_{b*c} R_c on every constructed family
    std::vector<Quandle> made;
    made.push_back(trivial_quandle(4));
    for (int n = 3; n <= 8; ++n) made.push_back(dihedral(n));
    made.push_back(alex4);
    made.push_back(alexander(AbelianGroupSpec{{8}}, AutomorphismSpec::unit(3)));
    made.push_back(galkin(AbelianGroupSpec{{5}}, 0, 0));
    made.push_back(galkin(AbelianGroupSpec{{3}}, 1, 2));
    PermGroup s3 = PermGroup::generate({Perm({1, 0, 2}), Perm({1, 2, 0})}, 3);
    made.push_back(conjugation(group_table(s3)));
    made.push_back(core_quandle(cyclic_group(5)));
    for (const Quandle& q : made)
        for (int b = 0; b < q.size(); ++b)
            for (int c = 0; c < q.size(); ++c)
                if (q.right_map(c) * q.right_map(b) != q.right_map(q.op(b, c)) * q.right_map(c))
                    return {false, "R_c R_b != R_{b*c} R_c on a constructed quandle"};

    // Inn/Transv is cyclic for every quandle of order <= 5; the coset of any
    // single right translation must already generate the quotient
    for (int n = 1; n <= 5; ++n)
        for (const CayleyTable& t : enumerate_quandles(n).tables) {
            Quandle q = Quandle::trusted(t);
            PermGroup inn = q.inner_group();
            PermGroup tv = q.transvection_group();
            if (inn.order() % tv.order() != 0)
                return {false, "transvection order does not divide inner order"};
            std::size_t quotient = inn.order() / tv.order();
            Perm g = q.right_map(0);
            Perm p = g;
            std::size_t k = 1;
            while (!tv.contains(p) && k <= quotient) {
                p = g * p;
                ++k;
            }
            if (k != quotient)
                return {false, "Inn/Transv is not generated by a right translation on an order-" +
                                   std::to_string(n) + " quandle"};
        }

    return {true, "boundary squares to zero; brute-force coloring counts, coefficient sums, "
                  "stabilized diagrams, the inner relation, and cyclic Inn/Transv all verified"};
}

using Criterion = Outcome (*)();

const Criterion criteria[] = {
    small_census,     order4_table, dihedral_automorphisms, alexander16, state_sum_table,
    dihedral8_extension, zassenhaus_loop, galkin_pair,      toyoda_sweep, property_suites,
};

int run_one(const std::string& label, Criterion fn) {
    Outcome o;
    try {
        o = fn();
    } catch (const std::exception& e) {
        o = {false, std::string("unexpected exception: ") + e.what()};
    }
    std::cout << "criterion " << label << (o.pass ? ": PASS" : ": FAIL");
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n" << std::flush;
    return o.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    int criterion = 0;
    bool large = false;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--criterion" && i + 1 < argc) {
            criterion = std::atoi(argv[++i]);
            if (criterion < 1 || criterion > 10) {
                std::cerr << "criterion must be 1..10\n";
                return 2;
            }
        } else if (a == "--large") {
            large = true;
        } else {
            std::cerr << "usage: qf_acceptance [--criterion N] [--large]\n";
            return 2;
        }
    }

    int failures = 0;
    if (large) failures += run_one("1 (order 8)", large_census);
    if (criterion != 0) {
        failures += run_one(std::to_string(criterion), criteria[criterion - 1]);
    } else if (!large) {
        for (int i = 1; i <= 10; ++i) failures += run_one(std::to_string(i), criteria[i - 1]);
    }
    return failures;
}

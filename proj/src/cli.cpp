#include "qf/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qf/cayley.hpp"
#include "qf/cohomology.hpp"
#include "qf/constructions.hpp"
#include "qf/enumeration.hpp"
#include "qf/errors.hpp"
#include "qf/extensions.hpp"
#include "qf/knots.hpp"
#include "qf/loops.hpp"
#include "qf/quandle.hpp"

namespace qf::cli {

namespace {

std::string slurp(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// "-" or an empty path reads the main input stream
std::string read_text(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") return slurp(in);
    std::ifstream f(path);
    if (!f) throw domain_error("cannot open " + path);
    return slurp(f);
}

const char* yn(bool b) { return b ? "yes" : "no"; }

void print_witness(std::ostream& out, const char* label, bool holds,
                   const int* w, int len) {
    out << label << ": " << yn(holds);
    if (!holds) {
        out << " (witness";
        for (int i = 0; i < len; ++i) out << ' ' << w[i];
        out << ')';
    }
    out << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"finite quandle, quasigroup and loop workbench"};
    app.name("qf");
    app.require_subcommand(1);
    int status = 0;

    // construct ------------------------------------------------------------
    std::string kind;
    std::vector<int> params;
    auto* construct = app.add_subcommand("construct", "emit a named construction's table");
    construct->add_option("kind", kind, "trivial | dihedral | alexander | galkin | cyclic-group | zassenhaus")
        ->required();
    construct->add_option("params", params, "integer parameters of the construction");
    construct->callback([&] {
        auto need = [&](std::size_t k) {
            if (params.size() != k)
                throw CLI::ValidationError("construct",
                                           kind + " takes " + std::to_string(k) + " parameter(s)");
        };
        CayleyTable t;
        if (kind == "trivial") {
            need(1);
            t = trivial_quandle(params[0]).table();
        } else if (kind == "dihedral") {
            need(1);
            t = dihedral(params[0]).table();
        } else if (kind == "alexander") {
            need(2);
            t = alexander(AbelianGroupSpec{{params[0]}}, AutomorphismSpec::unit(params[1])).table();
        } else if (kind == "galkin") {
            need(3);
            t = galkin(AbelianGroupSpec{{params[0]}}, params[1], params[2]).table();
        } else if (kind == "cyclic-group") {
            need(1);
            t = cyclic_group(params[0]);
        } else if (kind == "zassenhaus") {
            need(0);
            t = zassenhaus81().table();
        } else {
            throw CLI::ValidationError("construct", "unknown kind '" + kind + "'");
        }
        print_table(out, t);
    });

    // check ------------------------------------------------------------------
    std::string check_path;
    auto* check = app.add_subcommand("check", "verify and classify a quandle table");
    check->add_option("file", check_path, "table file, '-' or absent for stdin");
    check->callback([&] {
        CayleyTable t = parse_table(read_text(check_path, in));
        auto vs = quandle_violations(t);
        if (!vs.empty()) {
            out << "quandle: no\n";
            for (std::size_t i = 0; i < vs.size() && i < 6; ++i) out << vs[i].describe() << '\n';
            if (vs.size() > 6) out << "... (" << vs.size() - 6 << " more)\n";
            status = 1;
            return;
        }
        Quandle q = Quandle::trusted(std::move(t));
        ClassificationReport r = classify(q);
        out << "quandle: yes\n"
            << "order: " << q.size() << '\n'
            << "kei: " << yn(r.kei) << '\n'
            << "latin: " << yn(r.latin) << '\n'
            << "medial: " << yn(r.medial) << '\n'
            << "connected: " << yn(r.connected) << '\n'
            << "faithful: " << yn(r.faithful) << '\n'
            << "simple: " << (r.simple ? yn(*r.simple) : "not computed") << '\n'
            << "inner order: " << r.inner_order << '\n'
            << "transvection order: " << r.transvection_order << '\n';
    });

    // enumerate --------------------------------------------------------------
    int enum_order = 0, enum_jobs = 1;
    bool count_only = false, allow_large = false;
    std::string filter = "all";
    auto* enumerate = app.add_subcommand("enumerate", "quandles of one order up to isomorphism");
    enumerate->add_option("--order", enum_order, "carrier size")->required();
    enumerate->add_option("--filter", filter, "all | connected | latin | medial | kei")
        ->check(CLI::IsMember({"all", "connected", "latin", "medial", "kei"}));
    enumerate->add_flag("--count-only", count_only, "print the class count instead of tables");
    enumerate->add_option("--jobs", enum_jobs, "worker threads")->check(CLI::PositiveNumber);
    enumerate->add_flag("--allow-large", allow_large, "confirm the minutes-long order 9 run");
    enumerate->callback([&] {
        EnumerationOptions opts;
        opts.filter = *filter_from_name(filter);
        opts.jobs = enum_jobs;
        opts.allow_large = allow_large;
        EnumerationResult res = enumerate_quandles(enum_order, opts);
        if (count_only) {
            out << res.count() << '\n';
            return;
        }
        bool first = true;
        for (const CayleyTable& t : res.tables) {
            if (!first) out << '\n';
            first = false;
            print_table(out, t);
        }
    });

    // enumerate-alexander ------------------------------------------------------
    int alex_order = 0;
    bool alex_tables = false;
    auto* enum_alex =
        app.add_subcommand("enumerate-alexander", "Alexander quandles of one order up to isomorphism");
    enum_alex->add_option("order", alex_order, "carrier size")->required();
    enum_alex->add_flag("--tables", alex_tables, "print representatives, not just the count");
    enum_alex->callback([&] {
        auto classes = enumerate_alexander(alex_order);
        if (!alex_tables) {
            out << classes.size() << '\n';
            return;
        }
        bool first = true;
        for (const AlexanderClass& cl : classes) {
            if (!first) out << '\n';
            first = false;
            out << "# group";
            for (int o : cl.group.cyclic_orders) out << ' ' << o;
            out << "\n# matrix";
            for (std::size_t r = 0; r < cl.action.matrix.size(); ++r) {
                if (r) out << " /";
                for (int v : cl.action.matrix[r]) out << ' ' << v;
            }
            out << '\n';
            print_table(out, cl.table);
        }
    });

    // iso ----------------------------------------------------------------------
    std::string iso_a, iso_b;
    auto* iso = app.add_subcommand("iso", "test two quandle tables for isomorphism");
    iso->add_option("a", iso_a, "first table file ('-' for stdin)")->required();
    iso->add_option("b", iso_b, "second table file ('-' for stdin)")->required();
    iso->callback([&] {
        Quandle qa(parse_table(read_text(iso_a, in)));
        Quandle qb(parse_table(read_text(iso_b, in)));
        auto p = are_isomorphic(qa, qb);
        if (!p) {
            out << "isomorphic: no\n";
            return;
        }
        out << "isomorphic: yes\nmap:";
        for (int i = 0; i < qa.size(); ++i) out << ' ' << (*p)(i);
        out << '\n';
    });

    // cohomology -----------------------------------------------------------------
    std::string coh_path, theory = "quandle";
    int degree = 0, modulus = 0;
    bool basis = false;
    auto* coh = app.add_subcommand("cohomology", "homology / cohomology of a quandle table");
    coh->add_option("file", coh_path, "table file, '-' or absent for stdin");
    coh->add_option("--degree", degree, "chain degree")->required()->check(CLI::Range(1, 3));
    coh->add_option("--mod", modulus, "coefficient modulus; omit for integral homology")
        ->check(CLI::Range(2, 1 << 20));
    coh->add_flag("--basis", basis, "also print a generating set of cocycles (needs --mod)");
    coh->add_option("--theory", theory, "quandle | rack (integral homology only)")
        ->check(CLI::IsMember({"quandle", "rack"}));
    coh->callback([&] {
        Quandle q(parse_table(read_text(coh_path, in)));
        if (modulus == 0) {
            if (basis) throw CLI::ValidationError("cohomology", "--basis needs --mod");
            ChainTheory th = theory == "rack" ? ChainTheory::rack : ChainTheory::quandle;
            out << "H_" << degree << " = " << homology(q, degree, th).describe() << '\n';
            return;
        }
        if (theory == "rack")
            throw CLI::ValidationError("cohomology", "--theory rack applies to integral homology");
        if (degree < 2) throw CLI::ValidationError("cohomology", "cocycles live in degree 2 or 3");
        CocycleSpace s = cocycle_space(q, degree, modulus);
        out << "H^" << degree << " mod " << modulus << " = "
            << HomologyGroup{0, s.quotient}.describe() << '\n';
        if (basis)
            for (const CocycleTable& c : s.cocycles) out << '\n' << cocycle_to_string(c);
    });

    // extend ------------------------------------------------------------------
    std::string ext_quandle, ext_cocycle;
    auto* extend = app.add_subcommand("extend", "abelian extension of a quandle by a 2-cocycle");
    extend->add_option("quandle", ext_quandle, "base quandle table ('-' for stdin)")->required();
    extend->add_option("cocycle", ext_cocycle, "cocycle file ('-' for stdin)")->required();
    extend->callback([&] {
        Quandle q(parse_table(read_text(ext_quandle, in)));
        CocycleTable c = parse_cocycle(read_text(ext_cocycle, in));
        print_table(out, abelian_extension(q, c.modulus, c).table());
    });

    // extract -----------------------------------------------------------------
    std::string x_total, x_base;
    std::vector<int> x_map;
    auto* extract = app.add_subcommand("extract", "read a defining 2-cocycle off a covering");
    extract->add_option("total", x_total, "covering quandle table ('-' for stdin)")->required();
    extract->add_option("base", x_base, "base quandle table ('-' for stdin)")->required();
    extract->add_option("--map", x_map, "projection: image of each covering element")->required();
    extract->callback([&] {
        Quandle e(parse_table(read_text(x_total, in)));
        Quandle b(parse_table(read_text(x_base, in)));
        out << cocycle_to_string(extract_cocycle(e, b, x_map));
    });

    // invariant -----------------------------------------------------------------
    std::string inv_knot, inv_quandle, inv_cocycle;
    int inv_mod = 0;
    auto* invariant = app.add_subcommand("invariant", "cocycle state sum of a knot diagram");
    invariant->add_option("--knot", inv_knot, "PD file ('-' for stdin)")->required();
    invariant->add_option("--quandle", inv_quandle, "coloring quandle table")->required();
    invariant->add_option("--cocycle", inv_cocycle, "weight 2-cocycle")->required();
    invariant->add_option("--mod", inv_mod, "reinterpret the cocycle values modulo m")
        ->check(CLI::Range(2, 1 << 20));
    invariant->callback([&] {
        KnotDiagram k = parse_pd(read_text(inv_knot, in));
        Quandle q(parse_table(read_text(inv_quandle, in)));
        CocycleTable c = parse_cocycle(read_text(inv_cocycle, in));
        if (inv_mod != 0 && inv_mod != c.modulus) {
            CocycleTable r(c.degree, inv_mod, c.n);
            for (std::size_t i = 0; i < c.values.size(); ++i)
                r.values[i] = ((c.values[i] % inv_mod) + inv_mod) % inv_mod;
            c = r;
        }
        GroupRingElement v = cocycle_invariant(k, q, c);
        out << v.to_string() << '\n';
        out << "colorings: " << v.coefficient_sum() << '\n';
    });

    // loop-check ------------------------------------------------------------------
    std::string loop_path;
    auto* loop_check = app.add_subcommand("loop-check", "quasigroup / loop / Moufang report");
    loop_check->add_option("file", loop_path, "table file, '-' or absent for stdin");
    loop_check->callback([&] {
        CayleyTable t = parse_table(read_text(loop_path, in));
        auto vs = quasigroup_violations(t);
        if (!vs.empty()) {
            out << "quasigroup: no\n";
            for (std::size_t i = 0; i < vs.size() && i < 6; ++i) out << vs[i].describe() << '\n';
            if (vs.size() > 6) out << "... (" << vs.size() - 6 << " more)\n";
            status = 1;
            return;
        }
        Quasigroup qg(t);
        out << "quasigroup: yes\n";
        int e = group_identity(t);
        if (e < 0)
            out << "loop: no\n";
        else
            out << "loop: yes (identity " << e << ")\n";
        auto cw = commutativity_witness(t);
        print_witness(out, "commutative", !cw, cw ? cw->data() : nullptr, 2);
        auto aw = associativity_witness(t);
        print_witness(out, "associative", !aw, aw ? aw->data() : nullptr, 3);
        DistributivityFlags d = distributivity_flags(qg);
        out << "left-distributive: " << yn(d.left) << '\n';
        out << "right-distributive: " << yn(d.right) << '\n';
        if (e >= 0) {
            Loop l(t);
            MoufangReport m = moufang_check(l);
            print_witness(out, "moufang id1", m.id1.holds, m.id1.witness.data(), 3);
            print_witness(out, "moufang id2", m.id2.holds, m.id2.witness.data(), 3);
            print_witness(out, "moufang id3", m.id3.holds, m.id3.witness.data(), 3);
            out << "exponent: " << loop_exponent(l) << '\n';
        }
    });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
    return status;
}

}  // namespace qf::cli

#include "qf/quandle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "qf/constructions.hpp"
#include "qf/errors.hpp"

namespace qf {

namespace {

std::string join_violations(const std::vector<Violation>& vs) {
    std::ostringstream os;
    os << "not a quandle:";
    std::size_t shown = 0;
    for (const auto& v : vs) {
        os << ' ' << v.describe() << ';';
        if (++shown == 4 && vs.size() > 4) {
            os << " ... (" << vs.size() - 4 << " more)";
            break;
        }
    }
    return os.str();
}

}  // namespace

Quandle::Quandle(CayleyTable t) {
    auto vs = quandle_violations(t);
    if (!vs.empty()) throw domain_error(join_violations(vs));
    t_ = std::move(t);
}

Quandle Quandle::trusted(CayleyTable t) {
    Quandle q;
    q.t_ = std::move(t);
    return q;
}

Perm Quandle::right_map(int b) const {
    std::vector<int> img(t_.n);
    for (int a = 0; a < t_.n; ++a) img[a] = t_.at(a, b);
    return Perm(std::move(img));
}

bool Quandle::left_map_bijective(int a) const {
    std::vector<bool> seen(t_.n, false);
    for (int b = 0; b < t_.n; ++b) {
        int v = t_.at(a, b);
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

PermGroup Quandle::inner_group(std::size_t max_order) const {
    std::vector<Perm> gens;
    gens.reserve(t_.n);
    for (int b = 0; b < t_.n; ++b) gens.push_back(right_map(b));
    return PermGroup::generate(gens, t_.n, max_order);
}

PermGroup Quandle::transvection_group(std::size_t max_order) const {
    // R_x R_y^{-1} = (R_x R_0^{-1}) (R_y R_0^{-1})^{-1}, so the pairs with
    // y = 0 already generate the whole transvection group.
    Perm r0inv = right_map(0).inverse();
    std::vector<Perm> gens;
    gens.reserve(t_.n);
    for (int x = 0; x < t_.n; ++x) gens.push_back(right_map(x) * r0inv);
    return PermGroup::generate(gens, t_.n, max_order);
}

bool is_medial(const Quandle& q) {
    int n = q.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    if (q.op(q.op(a, b), q.op(c, d)) != q.op(q.op(a, c), q.op(b, d)))
                        return false;
    return true;
}

bool is_left_distributive(const Quandle& q) {
    int n = q.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (q.op(a, q.op(b, c)) != q.op(q.op(a, b), q.op(a, c))) return false;
    return true;
}

namespace {

// A set partition (as a label vector) is a congruence iff merging respects
// the operation on both sides.
bool is_congruence(const CayleyTable& t, const std::vector<int>& lbl) {
    int n = t.n;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (lbl[a] != lbl[b]) continue;
            for (int c = 0; c < n; ++c) {
                if (lbl[t.at(a, c)] != lbl[t.at(b, c)]) return false;
                if (lbl[t.at(c, a)] != lbl[t.at(c, b)]) return false;
            }
        }
    return true;
}

// Enumerate restricted growth strings; report whether any proper nontrivial
// congruence exists.
bool has_proper_congruence(const CayleyTable& t) {
    int n = t.n;
    std::vector<int> lbl(n, 0);
    bool found = false;
    auto rec = [&](auto&& self, int pos, int maxlbl) -> void {
        if (found) return;
        if (pos == n) {
            int blocks = maxlbl + 1;
            if (blocks == 1 || blocks == n) return;
            if (is_congruence(t, lbl)) found = true;
            return;
        }
        for (int v = 0; v <= maxlbl + 1 && !found; ++v) {
            lbl[pos] = v;
            self(self, pos + 1, std::max(maxlbl, v));
        }
    };
    rec(rec, 1, 0);  // lbl[0] = 0 fixed
    return found;
}

}  // namespace

ClassificationReport classify(const Quandle& q) {
    ClassificationReport r;
    int n = q.size();

    r.kei = true;
    for (int b = 0; b < n && r.kei; ++b) {
        Perm rb = q.right_map(b);
        if (!(rb * rb).is_identity()) r.kei = false;
    }

    r.latin = true;
    for (int a = 0; a < n && r.latin; ++a)
        if (!q.left_map_bijective(a)) r.latin = false;

    r.medial = is_medial(q);

    PermGroup inn = q.inner_group();
    PermGroup transv = q.transvection_group();
    r.inner_order = static_cast<long long>(inn.order());
    r.transvection_order = static_cast<long long>(transv.order());
    r.connected = inn.is_transitive();

    r.faithful = true;
    std::set<std::vector<int>> cols;
    for (int b = 0; b < n; ++b) cols.insert(q.right_map(b).images());
    r.faithful = (static_cast<int>(cols.size()) == n);

    if (n <= simple_search_limit)
        r.simple = !has_proper_congruence(q.table());

    return r;
}

bool is_subquandle_carrier(const Quandle& q, const std::vector<int>& subset) {
    std::vector<bool> in(q.size(), false);
    for (int x : subset) {
        if (x < 0 || x >= q.size()) return false;
        in[x] = true;
    }
    for (int a : subset)
        for (int b : subset)
            if (!in[q.op(a, b)]) return false;
    return true;
}

namespace {

Subquandle induce(const Quandle& q, std::vector<int> carrier) {
    std::sort(carrier.begin(), carrier.end());
    std::vector<int> local(q.size(), -1);
    int m = static_cast<int>(carrier.size());
    for (int i = 0; i < m; ++i) local[carrier[i]] = i;
    CayleyTable t;
    t.n = m;
    t.e.resize(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int v = local[q.op(carrier[i], carrier[j])];
            if (v < 0) throw domain_error("carrier is not closed under the operation");
            t.e[static_cast<std::size_t>(i) * m + j] = v;
        }
    return Subquandle{std::move(carrier), std::move(t)};
}

}  // namespace

std::vector<Subquandle> orbit_decomposition(const Quandle& q) {
    std::vector<Perm> gens;
    for (int b = 0; b < q.size(); ++b) gens.push_back(q.right_map(b));
    auto orbs = PermGroup::orbits_of(gens, q.size());
    std::vector<Subquandle> out;
    out.reserve(orbs.size());
    for (auto& o : orbs) out.push_back(induce(q, o));
    return out;
}

std::vector<Subquandle> nelson_wong_decomposition(const Quandle& q) {
    int n = q.size();
    if (n > 16) throw resource_error("complemented-subquandle search is exhaustive over subsets; limited to order <= 16");

    auto closed = [&](unsigned mask) {
        for (int a = 0; a < n; ++a) {
            if (!(mask >> a & 1u)) continue;
            for (int b = 0; b < n; ++b) {
                if (!(mask >> b & 1u)) continue;
                if (!(mask >> q.op(a, b) & 1u)) return false;
            }
        }
        return true;
    };

    unsigned full = (n == 32) ? ~0u : ((1u << n) - 1u);
    std::vector<unsigned> complemented;
    for (unsigned m = 1; m <= full; ++m) {
        if (!closed(m)) continue;
        unsigned c = full & ~m;
        if (c != 0 && !closed(c)) continue;
        complemented.push_back(m);
    }

    std::vector<unsigned> minimal;
    for (unsigned m : complemented) {
        bool min = true;
        for (unsigned o : complemented)
            if (o != m && (o & m) == o) { min = false; break; }
        if (min) minimal.push_back(m);
    }

    // The minimal complemented subquandles always tile the carrier; guard the
    // theorem anyway since everything downstream assumes it.
    unsigned covered = 0;
    for (unsigned m : minimal) {
        if (covered & m) throw domain_error("minimal complemented subquandles overlap");
        covered |= m;
    }
    if (covered != full) throw domain_error("minimal complemented subquandles do not cover");

    std::vector<Subquandle> out;
    for (unsigned m : minimal) {
        std::vector<int> carrier;
        for (int i = 0; i < n; ++i)
            if (m >> i & 1u) carrier.push_back(i);
        out.push_back(induce(q, std::move(carrier)));
    }
    std::sort(out.begin(), out.end(), [](const Subquandle& a, const Subquandle& b) {
        return a.carrier.front() < b.carrier.front();
    });
    return out;
}

// ---------------------------------------------------------------------------
// Isomorphism and automorphisms: backtracking with forward closure.  When
// f(a) and f(b) are both known, f(a*b) is forced; propagating that forcing
// from each fresh assignment visits every ordered pair exactly once, so a
// completed map needs no final verification pass.
// ---------------------------------------------------------------------------

namespace {

struct IsoSearch {
    const CayleyTable& t1;
    const CayleyTable& t2;
    int n;
    std::vector<std::vector<int>> inv1, inv2;  // per-element invariant: column cycle type
    std::vector<int> f, used_by;               // f: t1 -> t2 images; used_by[v] = preimage or -1
    bool collect_all = false;
    std::vector<Perm> found;
    std::optional<Perm> first;

    IsoSearch(const CayleyTable& a, const CayleyTable& b)
        : t1(a), t2(b), n(a.n), f(a.n, -1), used_by(a.n, -1) {
        inv1 = invariants(t1);
        inv2 = invariants(t2);
    }

    static std::vector<std::vector<int>> invariants(const CayleyTable& t) {
        std::vector<std::vector<int>> out(t.n);
        for (int b = 0; b < t.n; ++b) {
            std::vector<int> img(t.n);
            for (int a = 0; a < t.n; ++a) img[a] = t.at(a, b);
            out[b] = Perm(std::move(img)).cycle_type();
        }
        return out;
    }

    bool compatible() const {
        auto s1 = inv1, s2 = inv2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        return s1 == s2;
    }

    // Assign f[a]=v, then close under products with already-assigned elements.
    // Returns the list of assignments made (for undo), or nullopt on clash.
    std::optional<std::vector<int>> assign(int a, int v) {
        std::vector<int> trail;
        auto set = [&](int x, int y) -> bool {
            if (inv1[x] != inv2[y]) return false;
            f[x] = y;
            used_by[y] = x;
            trail.push_back(x);
            return true;
        };
        auto undo = [&]() {
            for (int x : trail) {
                used_by[f[x]] = -1;
                f[x] = -1;
            }
        };
        if (!set(a, v)) { undo(); return std::nullopt; }
        for (std::size_t qi = 0; qi < trail.size(); ++qi) {
            int x = trail[qi];
            for (int b = 0; b < n; ++b) {
                if (f[b] < 0) continue;
                // both orders: x*b and b*x
                for (int ord = 0; ord < 2; ++ord) {
                    int u = ord == 0 ? t1.at(x, b) : t1.at(b, x);
                    int w = ord == 0 ? t2.at(f[x], f[b]) : t2.at(f[b], f[x]);
                    if (f[u] >= 0) {
                        if (f[u] != w) { undo(); return std::nullopt; }
                    } else if (used_by[w] >= 0) {
                        undo();
                        return std::nullopt;
                    } else if (!set(u, w)) {
                        undo();
                        return std::nullopt;
                    }
                }
            }
        }
        return trail;
    }

    void unassign(const std::vector<int>& trail) {
        for (int x : trail) {
            used_by[f[x]] = -1;
            f[x] = -1;
        }
    }

    bool search() {
        int a = -1;
        for (int i = 0; i < n; ++i)
            if (f[i] < 0) { a = i; break; }
        if (a < 0) {
            Perm p{std::vector<int>(f)};
            if (collect_all) {
                found.push_back(std::move(p));
                return false;  // keep searching
            }
            first = std::move(p);
            return true;
        }
        for (int v = 0; v < n; ++v) {
            if (used_by[v] >= 0) continue;
            auto trail = assign(a, v);
            if (!trail) continue;
            if (search()) return true;
            unassign(*trail);
        }
        return false;
    }
};

}  // namespace

std::optional<Perm> are_isomorphic(const Quandle& a, const Quandle& b) {
    if (a.size() != b.size()) return std::nullopt;
    IsoSearch s(a.table(), b.table());
    if (!s.compatible()) return std::nullopt;
    s.search();
    return s.first;
}

PermGroup automorphism_group(const Quandle& q) {
    if (q.size() > 12)
        throw resource_error("automorphism search is exhaustive; limited to order <= 12");
    IsoSearch s(q.table(), q.table());
    s.collect_all = true;
    s.search();
    return PermGroup::from_closed_set(std::move(s.found), q.size());
}

// ---------------------------------------------------------------------------
// Canonical form: branch and bound over relabelings, filling the new table in
// row-major order.  New labels are handed out in first-use order, which is
// forced for lexicographic minimality: an unseen value must take the smallest
// unused new label, since any later label could be improved by swapping.
// ---------------------------------------------------------------------------

namespace {

struct CanonSearch {
    const CayleyTable& t;
    int n;
    std::vector<int> to_old, to_new;  // -1 = unassigned
    std::vector<int> cur;             // row-major values of the relabeled table
    std::vector<int> best;
    bool have_best = false;
    bool minimality_probe = false;  // true: stop as soon as something < best exists
    bool beaten = false;

    explicit CanonSearch(const CayleyTable& table)
        : t(table), n(table.n), to_old(table.n, -1), to_new(table.n, -1),
          cur(static_cast<std::size_t>(table.n) * table.n, -1) {}

    void run() { explore(0, 0, false); }

    // cell = i*n + j scans row-major; next_free = #assigned labels;
    // strict = prefix already strictly below best.
    void explore(int cell, int next_free, bool strict) {
        if (minimality_probe && beaten) return;
        if (cell == n * n) {
            if (minimality_probe) {
                if (strict) beaten = true;
                return;
            }
            best = cur;
            have_best = true;
            return;
        }
        int i = cell / n, j = cell % n;
        if (to_old[j] < 0) {
            // j is necessarily the next unassigned label; branch on its preimage.
            for (int u = 0; u < n; ++u) {
                if (to_new[u] >= 0) continue;
                to_old[j] = u;
                to_new[u] = j;
                step(cell, i, j, next_free + 1, strict);
                to_new[u] = -1;
                to_old[j] = -1;
                if (minimality_probe && beaten) return;
            }
            return;
        }
        step(cell, i, j, next_free, strict);
    }

    void step(int cell, int i, int j, int next_free, bool strict) {
        int v_old = t.at(to_old[i], to_old[j]);
        bool forced = false;
        if (to_new[v_old] < 0) {
            to_new[v_old] = next_free;
            to_old[next_free] = v_old;
            ++next_free;
            forced = true;
        }
        int val = to_new[v_old];
        bool ok = true;
        if (!strict && have_best) {
            if (val > best[cell]) ok = false;
            else if (val < best[cell]) strict = true;
        }
        if (ok) {
            cur[cell] = val;
            explore(cell + 1, next_free, strict);
        }
        if (forced) {
            to_old[--next_free] = -1;
            to_new[v_old] = -1;
        }
    }
};

}  // namespace

CayleyTable canonical_form(const Quandle& q) {
    CanonSearch s(q.table());
    s.run();
    CayleyTable out;
    out.n = q.size();
    out.e = std::move(s.best);
    return out;
}

bool is_canonical_table(const CayleyTable& t) {
    CanonSearch s(t);
    s.best = t.e;
    s.have_best = true;
    s.minimality_probe = true;
    s.run();
    return !s.beaten;
}

bool verify_vendramin(const Quandle& q) {
    if (q.size() > 8)
        throw resource_error("inner-group reconstruction is limited to order <= 8");
    PermGroup inn = q.inner_group();
    if (!inn.is_transitive()) throw domain_error("reconstruction requires a connected quandle");

    const auto& els = inn.elements();
    int m = static_cast<int>(els.size());
    std::map<Perm, int> index;
    for (int i = 0; i < m; ++i) index.emplace(els[i], i);
    CayleyTable g = group_table(inn);

    int x0 = 0;
    Perm z = q.right_map(x0);

    std::vector<int> stab;
    for (int i = 0; i < m; ++i)
        if (els[i](x0) == x0) stab.push_back(i);
    for (int h : stab)
        if (!(els[h] * z == z * els[h])) return false;  // z must centralize the stabilizer

    std::vector<int> phi(m);
    Perm zinv = z.inverse();
    for (int i = 0; i < m; ++i) phi[i] = index.at(z * els[i] * zinv);

    Quandle h = homogeneous(g, stab, Perm(std::move(phi)));
    return are_isomorphic(h, q).has_value();
}

std::vector<std::string> column_cycles(const Quandle& q, int index_base) {
    std::vector<std::string> out;
    out.reserve(q.size());
    for (int b = 0; b < q.size(); ++b) out.push_back(q.right_map(b).cycles(index_base));
    return out;
}

}  // namespace qf

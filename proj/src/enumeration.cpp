#include "qf/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <set>
#include <thread>

#include "qf/errors.hpp"
#include "qf/perm.hpp"

namespace qf {

const char* filter_name(QuandleFilter f) {
    switch (f) {
        case QuandleFilter::all: return "all";
        case QuandleFilter::connected: return "connected";
        case QuandleFilter::latin: return "latin";
        case QuandleFilter::medial: return "medial";
        case QuandleFilter::kei: return "kei";
    }
    return "all";
}

std::optional<QuandleFilter> filter_from_name(const std::string& name) {
    if (name == "all") return QuandleFilter::all;
    if (name == "connected") return QuandleFilter::connected;
    if (name == "latin") return QuandleFilter::latin;
    if (name == "medial") return QuandleFilter::medial;
    if (name == "kei") return QuandleFilter::kei;
    return std::nullopt;
}

namespace {

std::vector<int> cycle_type_of(const std::vector<int>& col) {
    const int n = static_cast<int>(col.size());
    std::vector<char> seen(col.size(), 0);
    std::vector<int> type;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = col[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = 1;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    return type;
}

// Candidate columns per position, grouped so that the cycle-type order
// constraint becomes a start offset.
struct Catalog {
    int n = 0;
    std::map<std::vector<int>, int> type_ids;                 // cycle type -> dense id (lex order)
    std::vector<std::vector<std::vector<int>>> cols;          // [pos] -> candidate columns
    std::vector<std::vector<int>> col_tid;                    // [pos] -> type id per candidate
    std::vector<std::vector<std::size_t>> tid_start;          // [pos][tid] -> first index with >= tid

    explicit Catalog(int order) : n(order) {
        std::vector<std::vector<int>> fixing0;
        std::vector<int> vals;
        for (int v = 1; v < n; ++v) vals.push_back(v);
        std::sort(vals.begin(), vals.end());
        do {
            std::vector<int> img(static_cast<std::size_t>(n));
            img[0] = 0;
            for (int i = 1; i < n; ++i) img[static_cast<std::size_t>(i)] = vals[static_cast<std::size_t>(i - 1)];
            fixing0.push_back(std::move(img));
        } while (std::next_permutation(vals.begin(), vals.end()));

        std::set<std::vector<int>> types;
        for (const auto& c : fixing0) types.insert(cycle_type_of(c));
        int id = 0;
        for (const auto& t : types) type_ids.emplace(t, id++);

        cols.resize(static_cast<std::size_t>(n));
        col_tid.resize(static_cast<std::size_t>(n));
        tid_start.resize(static_cast<std::size_t>(n));
        const int ntypes = id;
        for (int b = 0; b < n; ++b) {
            std::vector<std::pair<int, std::vector<int>>> tagged;
            for (const auto& base : fixing0) {
                // conjugate by the transposition (0 b) to fix b instead of 0
                std::vector<int> c(base);
                if (b != 0) {
                    auto sw = [&](int x) { return x == 0 ? b : x == b ? 0 : x; };
                    for (int i = 0; i < n; ++i)
                        c[static_cast<std::size_t>(sw(i))] = sw(base[static_cast<std::size_t>(i)]);
                }
                int t = type_ids.at(cycle_type_of(c));
                tagged.push_back({t, std::move(c)});
            }
            std::sort(tagged.begin(), tagged.end());
            for (auto& [t, c] : tagged) {
                col_tid[static_cast<std::size_t>(b)].push_back(t);
                cols[static_cast<std::size_t>(b)].push_back(std::move(c));
            }
            auto& starts = tid_start[static_cast<std::size_t>(b)];
            starts.assign(static_cast<std::size_t>(ntypes) + 1, cols[static_cast<std::size_t>(b)].size());
            for (std::size_t i = cols[static_cast<std::size_t>(b)].size(); i-- > 0;)
                starts[static_cast<std::size_t>(col_tid[static_cast<std::size_t>(b)][i])] = i;
            for (std::size_t t = starts.size() - 1; t-- > 0;)
                starts[t] = std::min(starts[t], starts[t + 1]);
        }
    }
};

struct Search {
    const Catalog& cat;
    int n;
    QuandleFilter filter;
    std::vector<const std::vector<int>*> col;  // assigned columns by position
    std::vector<std::vector<int>> colinv;
    std::vector<std::vector<int>> forced;      // pending forced columns (empty = none)
    std::vector<int> tid;                      // type id at each assigned position
    std::vector<int> scratch;
    std::vector<CayleyTable> found;

    Search(const Catalog& c, QuandleFilter f)
        : cat(c), n(c.n), filter(f), col(static_cast<std::size_t>(c.n), nullptr),
          colinv(static_cast<std::size_t>(c.n)), forced(static_cast<std::size_t>(c.n)),
          tid(static_cast<std::size_t>(c.n), 0), scratch(static_cast<std::size_t>(c.n)) {}

    // Conjugation requirement: with columns p at b and q at c assigned,
    // R_{q(b)} must equal q p q^{-1}.  Returns false on contradiction;
    // records newly forced columns on the trail.
    bool require(int target, const std::vector<int>& q, const std::vector<int>& p,
                 const std::vector<int>& qinv, int level, std::vector<int>& trail) {
        for (int i = 0; i < n; ++i)
            scratch[static_cast<std::size_t>(i)] =
                q[static_cast<std::size_t>(p[static_cast<std::size_t>(qinv[static_cast<std::size_t>(i)])])];
        if (target <= level) return *col[static_cast<std::size_t>(target)] == scratch;
        auto& slot = forced[static_cast<std::size_t>(target)];
        if (!slot.empty()) return slot == scratch;
        slot = scratch;
        trail.push_back(target);
        return true;
    }

    bool propagate(int k, std::vector<int>& trail) {
        const auto& ck = *col[static_cast<std::size_t>(k)];
        const auto& ckinv = colinv[static_cast<std::size_t>(k)];
        for (int b = 0; b < k; ++b) {
            const auto& cb = *col[static_cast<std::size_t>(b)];
            const auto& cbinv = colinv[static_cast<std::size_t>(b)];
            if (!require(ck[static_cast<std::size_t>(b)], ck, cb, ckinv, k, trail)) return false;
            if (!require(cb[static_cast<std::size_t>(k)], cb, ck, cbinv, k, trail)) return false;
        }
        return true;
    }

    void place_and_recurse(int k, const std::vector<int>& candidate, int candidate_tid) {
        col[static_cast<std::size_t>(k)] = &candidate;
        auto& inv = colinv[static_cast<std::size_t>(k)];
        inv.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(candidate[static_cast<std::size_t>(i)])] = i;
        tid[static_cast<std::size_t>(k)] = candidate_tid;
        std::vector<int> trail;
        if (propagate(k, trail)) run(k + 1);
        for (int t : trail) forced[static_cast<std::size_t>(t)].clear();
        col[static_cast<std::size_t>(k)] = nullptr;
    }

    void run(int k) {
        if (k == n) {
            leaf();
            return;
        }
        const int floor_tid = k == 0 ? 0 : tid[static_cast<std::size_t>(k - 1)];
        if (!forced[static_cast<std::size_t>(k)].empty()) {
            // Column fully determined; keep a stable copy while recursing.
            std::vector<int> c = forced[static_cast<std::size_t>(k)];
            if (c[static_cast<std::size_t>(k)] != k) return;
            int t = cat.type_ids.at(cycle_type_of(c));
            if (t < floor_tid) return;
            place_and_recurse(k, c, t);
            return;
        }
        const auto& cands = cat.cols[static_cast<std::size_t>(k)];
        const auto& tids = cat.col_tid[static_cast<std::size_t>(k)];
        for (std::size_t i = cat.tid_start[static_cast<std::size_t>(k)][static_cast<std::size_t>(floor_tid)];
             i < cands.size(); ++i)
            place_and_recurse(k, cands[i], tids[i]);
    }

    bool passes_filter(const CayleyTable& t) const {
        switch (filter) {
            case QuandleFilter::all: return true;
            case QuandleFilter::kei:
                for (int b = 0; b < n; ++b) {
                    const auto& c = *col[static_cast<std::size_t>(b)];
                    for (int a = 0; a < n; ++a)
                        if (c[static_cast<std::size_t>(c[static_cast<std::size_t>(a)])] != a) return false;
                }
                return true;
            case QuandleFilter::latin:
                for (int a = 0; a < n; ++a) {
                    unsigned seen = 0;
                    for (int b = 0; b < n; ++b) seen |= 1u << t.at(a, b);
                    if (seen != (n == 32 ? ~0u : (1u << n) - 1u)) return false;
                }
                return true;
            case QuandleFilter::medial:
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        for (int c = 0; c < n; ++c)
                            for (int d = 0; d < n; ++d)
                                if (t.at(t.at(a, b), t.at(c, d)) != t.at(t.at(a, c), t.at(b, d)))
                                    return false;
                return true;
            case QuandleFilter::connected: {
                std::vector<int> root(static_cast<std::size_t>(n));
                std::iota(root.begin(), root.end(), 0);
                auto find = [&](int x) {
                    while (root[static_cast<std::size_t>(x)] != x) x = root[static_cast<std::size_t>(x)];
                    return x;
                };
                for (int b = 0; b < n; ++b)
                    for (int a = 0; a < n; ++a) {
                        int ra = find(a), rb = find(t.at(a, b));
                        if (ra != rb) root[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
                    }
                for (int a = 0; a < n; ++a)
                    if (find(a) != 0) return false;
                return true;
            }
        }
        return true;
    }

    // Positions with equal column cycle type form blocks; any isomorphism
    // between two type-sorted tables respects the blocks, so it suffices to
    // keep the table iff no block-preserving relabeling lowers it.
    bool block_minimal(const CayleyTable& t) const {
        std::vector<std::pair<int, int>> blocks;  // [begin, end)
        for (int b = 0; b < n;) {
            int e = b;
            while (e < n && tid[static_cast<std::size_t>(e)] == tid[static_cast<std::size_t>(b)]) ++e;
            if (e - b > 1) blocks.push_back({b, e});
            b = e;
        }
        if (blocks.empty()) return true;

        std::vector<int> sigma(static_cast<std::size_t>(n)), sigmainv(static_cast<std::size_t>(n));
        std::iota(sigma.begin(), sigma.end(), 0);
        std::vector<std::vector<int>> arrangement;
        for (auto [b, e] : blocks) {
            std::vector<int> ar;
            for (int i = b; i < e; ++i) ar.push_back(i);
            arrangement.push_back(std::move(ar));
        }

        // Odometer over per-block permutations via next_permutation.
        bool lowered = false;
        auto apply = [&]() {
            for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
                auto [b, e] = blocks[bi];
                for (int i = b; i < e; ++i)
                    sigma[static_cast<std::size_t>(i)] = arrangement[bi][static_cast<std::size_t>(i - b)];
            }
            for (int i = 0; i < n; ++i) sigmainv[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = i;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    int v = sigma[static_cast<std::size_t>(t.at(sigmainv[static_cast<std::size_t>(a)],
                                                                sigmainv[static_cast<std::size_t>(b)]))];
                    int w = t.at(a, b);
                    if (v != w) return v < w;
                }
            return false;  // identical table
        };
        auto advance = [&]() {
            for (std::size_t bi = arrangement.size(); bi-- > 0;) {
                if (std::next_permutation(arrangement[bi].begin(), arrangement[bi].end())) return true;
                // wrapped to sorted order; carry to the next block
            }
            return false;
        };
        // skip the identity arrangement (first state), then scan
        while (advance()) {
            if (apply()) { lowered = true; break; }
        }
        return !lowered;
    }

    void leaf() {
        CayleyTable t(n);
        for (int b = 0; b < n; ++b) {
            const auto& c = *col[static_cast<std::size_t>(b)];
            for (int a = 0; a < n; ++a) t.at(a, b) = c[static_cast<std::size_t>(a)];
        }
        if (!passes_filter(t)) return;
        if (!block_minimal(t)) return;
        found.push_back(canonical_form(Quandle::trusted(std::move(t))));
    }
};

}  // namespace

EnumerationResult enumerate_quandles(int n, const EnumerationOptions& opts) {
    if (n < 1) throw domain_error("order must be positive");
    if (n > 9) throw resource_error("enumeration supported up to order 9");
    if (n == 9 && !opts.allow_large)
        throw resource_error("order 9 takes minutes; pass the long-run option to confirm");

    Catalog cat(n);
    EnumerationResult result;
    result.order = n;
    result.filter = filter_name(opts.filter);

    const auto& roots = cat.cols[0];
    int jobs = std::max(1, opts.jobs);
    jobs = std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(roots.size(), 1)));

    std::vector<std::vector<CayleyTable>> per_root(roots.size());
    std::atomic<std::size_t> next{0};
    std::mutex progress_mu;

    auto work = [&]() {
        Search s(cat, opts.filter);
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= roots.size()) break;
            s.found.clear();
            s.place_and_recurse(0, roots[i], cat.col_tid[0][i]);
            per_root[i] = std::move(s.found);
            if (opts.progress) {
                std::lock_guard<std::mutex> lk(progress_mu);
                *opts.progress << "root " << (i + 1) << "/" << roots.size() << " done, "
                               << per_root[i].size() << " classes\n";
            }
        }
    };

    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    for (auto& part : per_root)
        for (auto& t : part) result.tables.push_back(std::move(t));
    std::sort(result.tables.begin(), result.tables.end());
    auto dup = std::adjacent_find(result.tables.begin(), result.tables.end());
    if (dup != result.tables.end())
        throw domain_error("internal error: duplicate canonical form escaped the search");
    return result;
}

long long count_connected(int n) {
    EnumerationOptions opts;
    opts.filter = QuandleFilter::connected;
    return enumerate_quandles(n, opts).count();
}

// --- Alexander quandles ------------------------------------------------------

namespace {

void partitions_desc(int total, int maxpart, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(total, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_desc(total - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<AbelianGroupSpec> abelian_groups(int order) {
    if (order < 1) throw domain_error("order must be positive");
    std::vector<std::pair<int, int>> pe;  // prime, exponent
    int m = order;
    for (int p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            pe.push_back({p, e});
        }
    if (m > 1) pe.push_back({m, 1});

    std::vector<std::vector<std::vector<int>>> per_prime;  // factor lists per prime
    for (auto [p, e] : pe) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        partitions_desc(e, e, cur, parts);
        std::vector<std::vector<int>> factors;
        for (const auto& part : parts) {
            std::vector<int> f;
            for (int k : part) {
                int q = 1;
                for (int i = 0; i < k; ++i) q *= p;
                f.push_back(q);
            }
            factors.push_back(std::move(f));
        }
        per_prime.push_back(std::move(factors));
    }

    std::vector<AbelianGroupSpec> out;
    std::vector<std::size_t> pick(per_prime.size(), 0);
    for (;;) {
        std::vector<int> orders;
        for (std::size_t i = 0; i < per_prime.size(); ++i)
            for (int f : per_prime[i][pick[i]]) orders.push_back(f);
        std::sort(orders.begin(), orders.end(), std::greater<int>());
        if (orders.empty()) orders.push_back(1);  // the trivial group
        out.push_back(AbelianGroupSpec{std::move(orders)});
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < per_prime[i].size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
    return out;
}

namespace {

// Every automorphism of the group, as index permutations paired with their
// matrices.  Matrix entries obey the divisibility constraint for maps
// between cyclic factors, so only bijectivity needs checking.
void all_automorphisms(const AbelianGroupSpec& g, std::vector<Perm>& perms,
                       std::vector<std::vector<std::vector<int>>>& mats) {
    const int n = g.size();
    const auto& ord = g.cyclic_orders;
    const std::size_t k = ord.size();

    std::vector<std::vector<int>> choices;  // flattened entry index -> admissible values
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            int step = ord[i] / std::gcd(ord[i], ord[j]);
            std::vector<int> vals;
            for (int v = 0; v < ord[i]; v += step) vals.push_back(v);
            choices.push_back(std::move(vals));
        }

    std::vector<std::vector<int>> coords;
    for (int x = 0; x < n; ++x) coords.push_back(g.decode(x));

    std::vector<std::size_t> pick(choices.size(), 0);
    std::vector<std::vector<int>> mat(k, std::vector<int>(k, 0));
    std::vector<int> img(static_cast<std::size_t>(n));
    std::vector<char> hit(static_cast<std::size_t>(n));
    for (;;) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) mat[i][j] = choices[i * k + j][pick[i * k + j]];

        std::fill(hit.begin(), hit.end(), 0);
        bool bij = true;
        for (int x = 0; x < n && bij; ++x) {
            long long idx = 0;
            for (std::size_t i = 0; i < k; ++i) {
                long long s = 0;
                for (std::size_t j = 0; j < k; ++j)
                    s += static_cast<long long>(mat[i][j]) * coords[static_cast<std::size_t>(x)][j];
                idx = idx * ord[i] + (s % ord[i]);
            }
            img[static_cast<std::size_t>(x)] = static_cast<int>(idx);
            if (hit[static_cast<std::size_t>(idx)]) bij = false;
            hit[static_cast<std::size_t>(idx)] = 1;
        }
        if (bij) {
            perms.push_back(Perm(img));
            mats.push_back(mat);
        }

        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < choices[i].size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
}

std::vector<Perm> small_generating_set(const std::vector<Perm>& elements, int degree) {
    std::vector<Perm> gens;
    PermGroup closure = PermGroup::generate({}, degree);
    for (const Perm& e : elements) {
        if (closure.contains(e)) continue;
        gens.push_back(e);
        closure = PermGroup::generate(gens, degree);
    }
    return gens;
}

CayleyTable alexander_table(const AbelianGroupSpec& g, const Perm& t) {
    const int n = g.size();
    std::vector<std::vector<int>> sub(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    std::vector<std::vector<int>> add(sub);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            add[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = g.add(x, y);
            sub[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = g.sub(x, y);
        }
    CayleyTable out(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            out.at(x, y) = add[static_cast<std::size_t>(t(sub[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]))]
                              [static_cast<std::size_t>(y)];
    return out;
}

// Cheap isomorphism invariants for bucketing before the real test.
std::string fingerprint(const CayleyTable& t) {
    Quandle q = Quandle::trusted(t);
    std::vector<std::vector<int>> coltypes;
    for (int b = 0; b < t.n; ++b) coltypes.push_back(q.right_map(b).cycle_type());
    std::sort(coltypes.begin(), coltypes.end());
    auto orbs = PermGroup::orbits_of([&] {
        std::vector<Perm> gens;
        for (int b = 0; b < t.n; ++b) gens.push_back(q.right_map(b));
        return gens;
    }(), t.n);
    std::vector<std::size_t> osizes;
    for (const auto& o : orbs) osizes.push_back(o.size());
    std::sort(osizes.begin(), osizes.end());

    std::string key;
    for (const auto& ct : coltypes) {
        for (int v : ct) key += static_cast<char>('0' + v);
        key += '.';
    }
    key += '|';
    for (auto s : osizes) key += static_cast<char>('0' + static_cast<int>(s));
    key += '|';
    key += static_cast<char>('0' + static_cast<int>(q.inner_group().order() % 64));
    return key;
}

}  // namespace

std::vector<AlexanderClass> enumerate_alexander(int n) {
    if (n < 1) throw domain_error("order must be positive");
    if (n > 16) throw resource_error("Alexander enumeration supported up to order 16");

    std::vector<AlexanderClass> reps;
    std::map<std::string, std::vector<std::size_t>> buckets;

    for (const AbelianGroupSpec& g : abelian_groups(n)) {
        std::vector<Perm> auts;
        std::vector<std::vector<std::vector<int>>> mats;
        all_automorphisms(g, auts, mats);

        // Conjugate automorphisms give isomorphic quandles; keep one per class.
        std::vector<Perm> gens = small_generating_set(auts, n);
        std::map<Perm, std::size_t> index;
        for (std::size_t i = 0; i < auts.size(); ++i) index.emplace(auts[i], i);
        std::vector<char> visited(auts.size(), 0);
        std::vector<std::size_t> class_reps;
        for (std::size_t i = 0; i < auts.size(); ++i) {
            if (visited[i]) continue;
            class_reps.push_back(i);
            std::vector<std::size_t> frontier{i};
            visited[i] = 1;
            while (!frontier.empty()) {
                std::size_t cur = frontier.back();
                frontier.pop_back();
                for (const Perm& s : gens) {
                    Perm conj = s * auts[cur] * s.inverse();
                    std::size_t j = index.at(conj);
                    if (!visited[j]) {
                        visited[j] = 1;
                        frontier.push_back(j);
                    }
                }
            }
        }

        for (std::size_t ci : class_reps) {
            CayleyTable t = alexander_table(g, auts[ci]);
            std::string key = fingerprint(t);
            bool fresh = true;
            for (std::size_t ri : buckets[key]) {
                if (are_isomorphic(Quandle::trusted(t), Quandle::trusted(reps[ri].table))) {
                    fresh = false;
                    break;
                }
            }
            if (fresh) {
                buckets[key].push_back(reps.size());
                reps.push_back(AlexanderClass{g, AutomorphismSpec{mats[ci]}, std::move(t)});
            }
        }
    }
    return reps;
}

bool divisibility_check(const Quandle& q, const Quandle& p, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != q.size()) throw domain_error("map size mismatch");
    std::vector<int> fiber(static_cast<std::size_t>(p.size()), 0);
    for (int v : f) {
        if (v < 0 || v >= p.size()) throw domain_error("map value out of range");
        ++fiber[static_cast<std::size_t>(v)];
    }
    for (int c : fiber)
        if (c == 0) throw domain_error("map is not surjective");
    for (int a = 0; a < q.size(); ++a)
        for (int b = 0; b < q.size(); ++b)
            if (f[static_cast<std::size_t>(q.op(a, b))] !=
                p.op(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]))
                throw domain_error("map is not a homomorphism");
    if (!p.inner_group().is_transitive()) throw domain_error("target quandle is not connected");

    return std::all_of(fiber.begin(), fiber.end(), [&](int c) { return c == fiber[0]; });
}

}  // namespace qf

#include "qf/loops.hpp"

#include <numeric>
#include <sstream>
#include <utility>
#include <vector>

#include "qf/enumeration.hpp"
#include "qf/errors.hpp"

namespace qf {

namespace {

std::string join_violations(const char* what, const std::vector<Violation>& vs) {
    std::ostringstream os;
    os << what << ':';
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

int md(long long v, int m) { return static_cast<int>(((v % m) + m) % m); }

DistributivityFlags dist_flags(const CayleyTable& t) {
    DistributivityFlags f{true, true};
    const int n = t.n;
    for (int x = 0; x < n && (f.left || f.right); ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (t.at(x, t.at(y, z)) != t.at(t.at(x, y), t.at(x, z))) f.left = false;
                if (t.at(t.at(x, y), z) != t.at(t.at(x, z), t.at(y, z))) f.right = false;
            }
    return f;
}

}  // namespace

Quasigroup::Quasigroup(CayleyTable t) {
    auto vs = quasigroup_violations(t);
    if (!vs.empty()) throw domain_error(join_violations("not a quasigroup", vs));
    t_ = std::move(t);
}

Perm Quasigroup::right_map(int b) const {
    std::vector<int> img(static_cast<std::size_t>(size()));
    for (int a = 0; a < size(); ++a) img[static_cast<std::size_t>(a)] = op(a, b);
    return Perm(std::move(img));
}

Perm Quasigroup::left_map(int a) const {
    std::vector<int> img(static_cast<std::size_t>(size()));
    for (int b = 0; b < size(); ++b) img[static_cast<std::size_t>(b)] = op(a, b);
    return Perm(std::move(img));
}

Loop::Loop(CayleyTable t) : Quasigroup(std::move(t)) {
    e_ = group_identity(table());
    if (e_ < 0) throw domain_error("quasigroup has no two-sided identity");
}

DistributivityFlags distributivity_flags(const Quasigroup& q) {
    DistributivityFlags f = dist_flags(q.table());
    if (f.right && !quandle_violations(q.table()).empty())
        throw domain_error(
            "internal error: a right-distributive quasigroup failed the quandle axioms");
    return f;
}

namespace {

IdentityCheck scan_identity(const CayleyTable& t, int id) {
    const int n = t.n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                bool ok = true;
                switch (id) {
                    case 1: ok = t.at(x, t.at(y, t.at(x, z))) == t.at(t.at(t.at(x, y), x), z); break;
                    case 2: ok = t.at(z, t.at(x, t.at(y, x))) == t.at(t.at(t.at(z, x), y), x); break;
                    default: ok = t.at(t.at(x, y), t.at(z, x)) == t.at(t.at(x, t.at(y, z)), x); break;
                }
                if (!ok) return {false, {x, y, z}};
            }
    return {};
}

}  // namespace

MoufangReport moufang_check(const Loop& l) {
    MoufangReport r{scan_identity(l.table(), 1), scan_identity(l.table(), 2),
                    scan_identity(l.table(), 3)};
    if (r.id1.holds != r.id2.holds || r.id2.holds != r.id3.holds)
        throw domain_error("internal error: the Moufang identities disagree on a loop");
    return r;
}

std::optional<std::array<int, 2>> commutativity_witness(const CayleyTable& t) {
    for (int x = 0; x < t.n; ++x)
        for (int y = 0; y < t.n; ++y)
            if (t.at(x, y) != t.at(y, x)) return std::array<int, 2>{x, y};
    return std::nullopt;
}

std::optional<std::array<int, 3>> associativity_witness(const CayleyTable& t) {
    for (int x = 0; x < t.n; ++x)
        for (int y = 0; y < t.n; ++y)
            for (int z = 0; z < t.n; ++z)
                if (t.at(t.at(x, y), z) != t.at(x, t.at(y, z)))
                    return std::array<int, 3>{x, y, z};
    return std::nullopt;
}

long long loop_exponent(const Loop& l) {
    long long e = 1;
    for (int x = 0; x < l.size(); ++x) {
        int p = x;
        long long k = 1;
        while (p != l.identity()) {
            p = l.op(x, p);
            ++k;
        }
        e = std::lcm(e, k);
    }
    return e;
}

Loop belousov_loop(const Quasigroup& q, int a) {
    const int n = q.size();
    if (a < 0 || a >= n) throw domain_error("basepoint out of range");
    Perm rinv = q.right_map(a).inverse(), linv = q.left_map(a).inverse();
    CayleyTable plus(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) plus.at(x, y) = q.op(rinv(x), linv(y));
    Loop l(std::move(plus));

    if (l.identity() != q.op(a, a))
        throw domain_error("internal error: derived-loop identity is not a*a");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (l.op(q.op(x, a), q.op(a, y)) != q.op(x, y))
                throw domain_error("internal error: derived loop fails R_a(x) + L_a(y) = x*y");

    DistributivityFlags f = dist_flags(q.table());
    if (f.left && f.right &&
        (commutativity_witness(l.table()) || !moufang_check(l).all()))
        throw domain_error(
            "internal error: a distributive quasigroup derived a non-Moufang or "
            "non-commutative loop");
    return l;
}

Loop zassenhaus81() {
    CayleyTable t(81);
    for (int i = 0; i < 81; ++i)
        for (int j = 0; j < 81; ++j) {
            int x0 = i / 27, x1 = (i / 9) % 3, x2 = (i / 3) % 3, x3 = i % 3;
            int y0 = j / 27, y1 = (j / 9) % 3, y2 = (j / 3) % 3, y3 = j % 3;
            int c0 = md(x0 + y0 + (x1 - y1) * (x2 * y3 - x3 * y2), 3);
            t.at(i, j) = ((c0 * 3 + md(x1 + y1, 3)) * 3 + md(x2 + y2, 3)) * 3 + md(x3 + y3, 3);
        }
    return Loop(std::move(t));
}

std::optional<ToyodaWitness> toyoda_witness(const Quandle& q) {
    for (int a = 0; a < q.size(); ++a)
        if (!q.left_map_bijective(a))
            throw domain_error("toyoda_witness needs a Latin quandle");
    if (q.size() > toyoda_order_limit)
        throw resource_error("toyoda_witness supports orders <= " +
                             std::to_string(toyoda_order_limit));

    const bool medial = is_medial(q);
    for (const auto& cl : enumerate_alexander(q.size()))
        if (auto iso = are_isomorphic(q, Quandle::trusted(cl.table))) {
            if (!medial)
                throw domain_error(
                    "internal error: a non-medial Latin quandle matched an Alexander class");
            return ToyodaWitness{cl.group, cl.action, *iso};
        }
    if (medial)
        throw domain_error("internal error: a medial Latin quandle matched no Alexander class");
    return std::nullopt;
}

}  // namespace qf

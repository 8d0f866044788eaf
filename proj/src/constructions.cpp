#include "qf/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qf/errors.hpp"

namespace qf {

// --- AbelianGroupSpec -------------------------------------------------------

int AbelianGroupSpec::size() const {
    long long s = 1;
    for (int o : cyclic_orders) {
        if (o < 1) throw domain_error("cyclic factor order must be >= 1");
        s *= o;
        if (s > 1'000'000) throw resource_error("abelian group too large");
    }
    return static_cast<int>(s);
}

std::vector<int> AbelianGroupSpec::decode(int index) const {
    if (index < 0 || index >= size()) throw domain_error("element index out of range");
    std::vector<int> c(cyclic_orders.size());
    for (std::size_t i = cyclic_orders.size(); i-- > 0;) {
        c[i] = index % cyclic_orders[i];
        index /= cyclic_orders[i];
    }
    return c;
}

int AbelianGroupSpec::encode(const std::vector<int>& coords) const {
    if (coords.size() != cyclic_orders.size()) throw domain_error("coordinate count mismatch");
    long long idx = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        int o = cyclic_orders[i];
        int c = ((coords[i] % o) + o) % o;
        idx = idx * o + c;
    }
    return static_cast<int>(idx);
}

int AbelianGroupSpec::add(int x, int y) const {
    auto a = decode(x), b = decode(y);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return encode(a);
}

int AbelianGroupSpec::sub(int x, int y) const { return add(x, neg(y)); }

int AbelianGroupSpec::neg(int x) const {
    auto a = decode(x);
    for (int& c : a) c = -c;
    return encode(a);
}

int AbelianGroupSpec::scale(long long k, int x) const {
    auto a = decode(x);
    for (std::size_t i = 0; i < a.size(); ++i) {
        int o = cyclic_orders[i];
        long long v = (static_cast<long long>(a[i]) * k) % o;
        a[i] = static_cast<int>((v + o) % o);
    }
    return encode(a);
}

Perm automorphism_perm(const AbelianGroupSpec& a, const AutomorphismSpec& t) {
    const std::size_t k = a.cyclic_orders.size();
    if (t.matrix.size() != k) throw domain_error("automorphism matrix has wrong row count");
    for (const auto& row : t.matrix)
        if (row.size() != k) throw domain_error("automorphism matrix is not square");

    const int n = a.size();
    std::vector<int> img(static_cast<std::size_t>(n));
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x) {
        auto c = a.decode(x);
        std::vector<int> d(k, 0);
        for (std::size_t i = 0; i < k; ++i) {
            long long s = 0;
            for (std::size_t j = 0; j < k; ++j) s += static_cast<long long>(t.matrix[i][j]) * c[j];
            int o = a.cyclic_orders[i];
            d[i] = static_cast<int>(((s % o) + o) % o);
        }
        int y = a.encode(d);
        img[static_cast<std::size_t>(x)] = y;
        if (hit[static_cast<std::size_t>(y)]) throw domain_error("matrix does not act bijectively");
        hit[static_cast<std::size_t>(y)] = 1;
    }
    // Additivity can still fail when a matrix entry moves mass between factors
    // of incompatible orders, so check it outright.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (img[static_cast<std::size_t>(a.add(x, y))] !=
                a.add(img[static_cast<std::size_t>(x)], img[static_cast<std::size_t>(y)]))
                throw domain_error("matrix does not act additively");
    return Perm(std::move(img));
}

// --- elementary constructors ------------------------------------------------

Quandle trivial_quandle(int n) {
    if (n < 1) throw domain_error("order must be positive");
    CayleyTable t(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t.at(a, b) = a;
    return Quandle::trusted(std::move(t));
}

Quandle dihedral(int n) {
    if (n < 1) throw domain_error("order must be positive");
    CayleyTable t(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t.at(a, b) = ((2 * b - a) % n + n) % n;
    return Quandle(std::move(t));
}

namespace {

void require_group(const CayleyTable& g) {
    std::string why;
    if (!is_group_table(g, &why)) throw domain_error("not a group table: " + why);
}

}  // namespace

Quandle conjugation(const CayleyTable& g) {
    require_group(g);
    CayleyTable t(g.n);
    for (int b = 0; b < g.n; ++b) {
        int binv = group_inverse(g, b);
        for (int a = 0; a < g.n; ++a) t.at(a, b) = g.at(g.at(b, a), binv);
    }
    return Quandle(std::move(t));
}

Quandle core_quandle(const CayleyTable& g) {
    require_group(g);
    CayleyTable t(g.n);
    for (int a = 0; a < g.n; ++a) {
        int ainv = group_inverse(g, a);
        for (int b = 0; b < g.n; ++b) t.at(a, b) = g.at(g.at(b, ainv), b);
    }
    return Quandle(std::move(t));
}

Quandle alexander(const AbelianGroupSpec& a, const AutomorphismSpec& t) {
    Perm tp = automorphism_perm(a, t);
    const int n = a.size();
    CayleyTable q(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) q.at(x, y) = a.add(tp(a.sub(x, y)), y);
    Quandle out(std::move(q));
    if (!is_medial(out)) throw domain_error("affine table unexpectedly non-medial");
    return out;
}

Quandle alexander_poly(int q, const std::vector<int>& poly) {
    if (q < 2) throw domain_error("base modulus must be >= 2");
    if (poly.size() < 2) throw domain_error("polynomial must have degree >= 1");
    const int d = static_cast<int>(poly.size()) - 1;
    if (((poly.back() % q) + q) % q != 1) throw domain_error("polynomial must be monic");
    if (std::gcd(((poly.front() % q) + q) % q, q) != 1)
        throw domain_error("constant term must be a unit mod q (T not invertible)");

    long long sz = 1;
    for (int i = 0; i < d; ++i) {
        sz *= q;
        if (sz > 4096) throw resource_error("quotient ring too large");
    }
    const int n = static_cast<int>(sz);

    auto decode = [&](int x) {
        std::vector<int> c(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) { c[static_cast<std::size_t>(i)] = x % q; x /= q; }
        return c;  // c[i] = coefficient of T^i
    };
    auto encode = [&](const std::vector<int>& c) {
        int x = 0;
        for (int i = d; i-- > 0;) x = x * q + ((c[static_cast<std::size_t>(i)] % q) + q) % q;
        return x;
    };
    auto mul_t = [&](std::vector<int> c) {
        int top = c.back();
        for (int i = d - 1; i > 0; --i) c[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i - 1)];
        c[0] = 0;
        for (int i = 0; i < d; ++i)  // reduce top*T^d by p(T)
            c[static_cast<std::size_t>(i)] =
                ((c[static_cast<std::size_t>(i)] - top * poly[static_cast<std::size_t>(i)]) % q + q) % q;
        return c;
    };

    CayleyTable t(n);
    for (int x = 0; x < n; ++x) {
        auto cx = decode(x);
        for (int y = 0; y < n; ++y) {
            auto cy = decode(y);
            std::vector<int> diff(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i)
                diff[static_cast<std::size_t>(i)] =
                    ((cx[static_cast<std::size_t>(i)] - cy[static_cast<std::size_t>(i)]) % q + q) % q;
            auto td = mul_t(std::move(diff));
            for (int i = 0; i < d; ++i)
                td[static_cast<std::size_t>(i)] = (td[static_cast<std::size_t>(i)] + cy[static_cast<std::size_t>(i)]) % q;
            t.at(x, y) = encode(td);
        }
    }
    return Quandle(std::move(t));
}

Quandle homogeneous(const CayleyTable& g, const std::vector<int>& h, const Perm& phi) {
    require_group(g);
    const int n = g.n;
    if (phi.degree() != n) throw domain_error("automorphism degree mismatch");

    std::vector<char> in_h(static_cast<std::size_t>(n), 0);
    for (int x : h) {
        if (x < 0 || x >= n) throw domain_error("subgroup index out of range");
        in_h[static_cast<std::size_t>(x)] = 1;
    }
    int e = group_identity(g);
    if (!in_h[static_cast<std::size_t>(e)]) throw domain_error("subgroup must contain the identity");
    for (int x : h) {
        if (!in_h[static_cast<std::size_t>(group_inverse(g, x))])
            throw domain_error("subgroup not closed under inverse");
        for (int y : h)
            if (!in_h[static_cast<std::size_t>(g.at(x, y))])
                throw domain_error("subgroup not closed under product");
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (phi(g.at(x, y)) != g.at(phi(x), phi(y)))
                throw domain_error("phi is not a group automorphism");
    for (int x : h)
        if (phi(x) != x) throw domain_error("phi must fix the subgroup pointwise");

    // Right cosets Hx, labeled by their least member.
    std::vector<int> coset_of(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> cosets;
    for (int x = 0; x < n; ++x) {
        if (coset_of[static_cast<std::size_t>(x)] >= 0) continue;
        int id = static_cast<int>(cosets.size());
        std::vector<int> members;
        for (int hh : h) {
            int m = g.at(hh, x);
            coset_of[static_cast<std::size_t>(m)] = id;
            members.push_back(m);
        }
        std::sort(members.begin(), members.end());
        cosets.push_back(std::move(members));
    }
    const int m = static_cast<int>(cosets.size());

    CayleyTable t(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int result = -1;
            for (int x : cosets[static_cast<std::size_t>(i)])
                for (int y : cosets[static_cast<std::size_t>(j)]) {
                    int v = g.at(phi(g.at(x, group_inverse(g, y))), y);
                    int c = coset_of[static_cast<std::size_t>(v)];
                    if (result < 0) result = c;
                    else if (result != c)
                        throw domain_error("coset operation is not well-defined");
                }
            t.at(i, j) = result;
        }
    return Quandle(std::move(t));
}

Quandle galkin(const AbelianGroupSpec& a, int c1, int c2) {
    const int m = a.size();
    if (c1 < 0 || c1 >= m || c2 < 0 || c2 >= m) throw domain_error("tau value out of range");
    const int tau[3] = {0, c1, c2};
    const long long mu[3] = {2, -1, -1};
    const int n = 3 * m;

    CayleyTable t(n);
    for (int x = 0; x < 3; ++x)
        for (int av = 0; av < m; ++av)
            for (int y = 0; y < 3; ++y)
                for (int bv = 0; bv < m; ++bv) {
                    int d = ((x - y) % 3 + 3) % 3;
                    int first = ((2 * y - x) % 3 + 3) % 3;
                    int second = a.add(a.add(a.neg(av), a.scale(mu[d], bv)), tau[d]);
                    t.at(x * m + av, y * m + bv) = first * m + second;
                }
    return Quandle(std::move(t));
}

Quandle coxeter_fp(int p, const std::vector<std::vector<int>>& form, int dim) {
    if (p < 3 || p % 2 == 0) throw domain_error("p must be an odd prime");
    for (int k = 3; k * k <= p; k += 2)
        if (p % k == 0) throw domain_error("p must be an odd prime");
    if (dim < 1) throw domain_error("dimension must be positive");
    if (static_cast<int>(form.size()) != dim) throw domain_error("form has wrong size");
    for (int i = 0; i < dim; ++i) {
        if (static_cast<int>(form[static_cast<std::size_t>(i)].size()) != dim)
            throw domain_error("form has wrong size");
        for (int j = 0; j < dim; ++j)
            if (((form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                  form[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) % p) != 0)
                throw domain_error("form must be symmetric");
    }

    long long total = 1;
    for (int i = 0; i < dim; ++i) {
        total *= p;
        if (total > 100'000) throw resource_error("vector space too large");
    }

    auto decode = [&](long long x) {
        std::vector<int> v(static_cast<std::size_t>(dim));
        for (int i = dim; i-- > 0;) { v[static_cast<std::size_t>(i)] = static_cast<int>(x % p); x /= p; }
        return v;
    };
    auto pairing = [&](const std::vector<int>& x, const std::vector<int>& y) {
        long long s = 0;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                s += static_cast<long long>(x[static_cast<std::size_t>(i)]) *
                     form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                     y[static_cast<std::size_t>(j)];
        return static_cast<int>(((s % p) + p) % p);
    };
    auto inv_mod = [&](int a) {  // p prime, a != 0
        int r = 1, b = a, exp = p - 2;
        while (exp) {
            if (exp & 1) r = static_cast<int>(static_cast<long long>(r) * b % p);
            b = static_cast<int>(static_cast<long long>(b) * b % p);
            exp >>= 1;
        }
        return r;
    };

    std::vector<long long> carrier;
    std::vector<int> pos(static_cast<std::size_t>(total), -1);
    for (long long x = 0; x < total; ++x) {
        auto v = decode(x);
        if (pairing(v, v) != 0) {
            pos[static_cast<std::size_t>(x)] = static_cast<int>(carrier.size());
            carrier.push_back(x);
        }
    }
    const int n = static_cast<int>(carrier.size());
    if (n == 0) throw domain_error("no anisotropic vectors under this form");

    CayleyTable t(n);
    for (int i = 0; i < n; ++i) {
        auto x = decode(carrier[static_cast<std::size_t>(i)]);
        for (int j = 0; j < n; ++j) {
            auto y = decode(carrier[static_cast<std::size_t>(j)]);
            int s = static_cast<int>(2LL * pairing(x, y) % p * inv_mod(pairing(y, y)) % p);
            long long idx = 0;
            for (int k = 0; k < dim; ++k) {
                int c = ((s * y[static_cast<std::size_t>(k)] - x[static_cast<std::size_t>(k)]) % p + p) % p;
                idx = idx * p + c;
            }
            int target = pos[static_cast<std::size_t>(idx)];
            if (target < 0) throw domain_error("reflection left the anisotropic carrier");
            t.at(i, j) = target;
        }
    }
    return Quandle(std::move(t));
}

CayleyTable affine_quasigroup(const AbelianGroupSpec& a, const AutomorphismSpec& f,
                              const AutomorphismSpec& g, int c) {
    Perm fp = automorphism_perm(a, f);
    Perm gp = automorphism_perm(a, g);
    if (!(fp * gp == gp * fp)) throw domain_error("f and g must commute");
    const int n = a.size();
    if (c < 0 || c >= n) throw domain_error("offset out of range");

    CayleyTable t(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t.at(x, y) = a.add(a.add(fp(x), gp(y)), c);

    auto vs = quasigroup_violations(t);
    if (!vs.empty()) throw domain_error("affine table is not a quasigroup: " + vs.front().describe());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int w = 0; w < n; ++w)
                    if (t.at(t.at(x, y), t.at(z, w)) != t.at(t.at(x, z), t.at(y, w)))
                        throw domain_error("affine quasigroup is unexpectedly non-medial");
    return t;
}

CayleyTable cyclic_group(int n) {
    if (n < 1) throw domain_error("order must be positive");
    CayleyTable t(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t.at(a, b) = (a + b) % n;
    return t;
}

CayleyTable group_table(const PermGroup& g) {
    const auto& els = g.elements();
    const int m = static_cast<int>(els.size());
    std::map<Perm, int> index;
    for (int i = 0; i < m; ++i) index.emplace(els[static_cast<std::size_t>(i)], i);
    CayleyTable t(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            t.at(i, j) = index.at(els[static_cast<std::size_t>(i)] * els[static_cast<std::size_t>(j)]);
    return t;
}

}  // namespace qf

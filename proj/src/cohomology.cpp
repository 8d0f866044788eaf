#include "qf/cohomology.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

#include "qf/errors.hpp"

namespace qf {

namespace {

constexpr long long kGrowthLimit = 1'000'000'000'000'000'000LL / 4;  // entry bound in normal forms
constexpr long long kBasisLimit = 1'000'000;                         // |X|^n cap

long long checked(long long v) {
    if (v > kGrowthLimit || v < -kGrowthLimit)
        throw resource_error("integer growth during normal form");
    return v;
}

struct Mat {
    std::size_t r = 0, c = 0;
    std::vector<long long> e;
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : r(rows), c(cols), e(rows * cols, 0) {}
    static Mat eye(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    long long& at(std::size_t i, std::size_t j) { return e[i * c + j]; }
    long long at(std::size_t i, std::size_t j) const { return e[i * c + j]; }
};

// D = U * A * V with U, V unimodular; diag holds the divisibility chain.
struct Smith {
    std::vector<long long> diag;
    std::size_t rank = 0;
    Mat u, uinv, v, vinv;
};

Smith smith(Mat a, bool want_u, bool want_v) {
    Smith s;
    if (want_u) {
        s.u = Mat::eye(a.r);
        s.uinv = Mat::eye(a.r);
    }
    if (want_v) {
        s.v = Mat::eye(a.c);
        s.vinv = Mat::eye(a.c);
    }

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < a.c; ++k) std::swap(a.at(i, k), a.at(j, k));
        if (want_u)
            for (std::size_t k = 0; k < a.r; ++k) {
                std::swap(s.u.at(i, k), s.u.at(j, k));
                std::swap(s.uinv.at(k, i), s.uinv.at(k, j));
            }
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < a.r; ++k) std::swap(a.at(k, i), a.at(k, j));
        if (want_v)
            for (std::size_t k = 0; k < a.c; ++k) {
                std::swap(s.v.at(k, i), s.v.at(k, j));
                std::swap(s.vinv.at(i, k), s.vinv.at(j, k));
            }
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t k = 0; k < a.c; ++k) a.at(i, k) = -a.at(i, k);
        if (want_u)
            for (std::size_t k = 0; k < a.r; ++k) {
                s.u.at(i, k) = -s.u.at(i, k);
                s.uinv.at(k, i) = -s.uinv.at(k, i);
            }
    };
    // row_i -= q * row_k
    auto row_sub = [&](std::size_t i, std::size_t k, long long q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < a.c; ++j) a.at(i, j) = checked(a.at(i, j) - q * a.at(k, j));
        if (want_u)
            for (std::size_t j = 0; j < a.r; ++j) {
                s.u.at(i, j) = checked(s.u.at(i, j) - q * s.u.at(k, j));
                s.uinv.at(j, k) = checked(s.uinv.at(j, k) + q * s.uinv.at(j, i));
            }
    };
    // col_j -= q * col_k
    auto col_sub = [&](std::size_t j, std::size_t k, long long q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < a.r; ++i) a.at(i, j) = checked(a.at(i, j) - q * a.at(i, k));
        if (want_v)
            for (std::size_t i = 0; i < a.c; ++i) {
                s.v.at(i, j) = checked(s.v.at(i, j) - q * s.v.at(i, k));
                s.vinv.at(k, i) = checked(s.vinv.at(k, i) + q * s.vinv.at(j, i));
            }
    };

    const std::size_t lim = std::min(a.r, a.c);
    for (std::size_t k = 0; k < lim; ++k) {
        // pivot: smallest nonzero absolute value in the trailing submatrix
        std::size_t pi = k, pj = k;
        long long best = 0;
        for (std::size_t i = k; i < a.r; ++i)
            for (std::size_t j = k; j < a.c; ++j) {
                long long v = a.at(i, j) < 0 ? -a.at(i, j) : a.at(i, j);
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        swap_rows(k, pi);
        swap_cols(k, pj);
        if (a.at(k, k) < 0) negate_row(k);

        for (bool settled = false; !settled;) {
            settled = true;
            for (std::size_t i = k + 1; i < a.r; ++i) {
                row_sub(i, k, a.at(i, k) / a.at(k, k));
                if (a.at(i, k) != 0) {  // remainder beats the pivot
                    swap_rows(k, i);
                    if (a.at(k, k) < 0) negate_row(k);
                    settled = false;
                }
            }
            if (!settled) continue;
            for (std::size_t j = k + 1; j < a.c; ++j) {
                col_sub(j, k, a.at(k, j) / a.at(k, k));
                if (a.at(k, j) != 0) {
                    swap_cols(k, j);
                    if (a.at(k, k) < 0) negate_row(k);
                    settled = false;
                }
            }
            if (!settled) continue;
            // divisibility: the pivot must divide everything that remains
            for (std::size_t i = k + 1; i < a.r && settled; ++i)
                for (std::size_t j = k + 1; j < a.c && settled; ++j)
                    if (a.at(i, j) % a.at(k, k) != 0) {
                        row_sub(k, i, -1);  // row_k += row_i, reopens column k
                        settled = false;
                    }
        }
    }

    for (std::size_t k = 0; k < lim; ++k) s.diag.push_back(a.at(k, k));
    for (long long d : s.diag)
        if (d != 0) ++s.rank;
    return s;
}

bool degenerate(const std::vector<int>& tuple) {
    for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
        if (tuple[i] == tuple[i + 1]) return true;
    return false;
}

// All k-tuples over {0..n-1} in lexicographic order; the quandle theory
// omits tuples with an adjacent repeat.
std::vector<std::vector<int>> tuple_basis(int n, int k, ChainTheory theory) {
    std::vector<std::vector<int>> out;
    if (k < 0) return out;
    std::vector<int> cur(static_cast<std::size_t>(k), 0);
    for (;;) {
        if (theory == ChainTheory::rack || !degenerate(cur)) out.push_back(cur);
        int p = k - 1;
        while (p >= 0 && cur[static_cast<std::size_t>(p)] == n - 1) cur[static_cast<std::size_t>(p--)] = 0;
        if (p < 0) break;
        ++cur[static_cast<std::size_t>(p)];
    }
    return out;
}

long long raw_index(const std::vector<int>& tuple, int n) {
    long long idx = 0;
    for (int v : tuple) idx = idx * n + v;
    return idx;
}

Mat to_mat(const BoundaryMatrix& b) {
    Mat m(b.rows(), b.cols());
    m.e = b.entries;
    return m;
}

// delta on cochains is the transpose of the boundary one degree up.
Mat delta_matrix(const Quandle& q, int cochain_degree) {
    BoundaryMatrix b = boundary_matrix(q, cochain_degree + 1, ChainTheory::quandle);
    Mat m(b.cols(), b.rows());
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m.at(c, r) = b.at(r, c);
    return m;
}

int mod_reduce(long long v, int m) { return static_cast<int>(((v % m) + m) % m); }

CocycleTable table_from_vector(const Quandle& q, int degree, int m,
                               const std::vector<std::vector<int>>& basis,
                               const std::vector<int>& vec) {
    CocycleTable t(degree, m, q.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& tup = basis[i];
        if (degree == 2)
            t.at(tup[0], tup[1]) = vec[i];
        else
            t.at(tup[0], tup[1], tup[2]) = vec[i];
    }
    return t;
}

std::vector<int> vector_from_table(const CocycleTable& c,
                                   const std::vector<std::vector<int>>& basis) {
    std::vector<int> vec(basis.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& tup = basis[i];
        int v = c.degree == 2 ? c.at(tup[0], tup[1]) : c.at(tup[0], tup[1], tup[2]);
        vec[i] = mod_reduce(v, c.modulus);
    }
    return vec;
}

void check_cochain_shape(const Quandle& q, const CocycleTable& c) {
    if (c.degree != 2 && c.degree != 3) throw domain_error("cochain degree must be 2 or 3");
    if (c.modulus < 2) throw domain_error("cochain modulus must be >= 2");
    if (c.n != q.size()) throw domain_error("cochain carrier does not match the quandle");
    std::size_t want = 1;
    for (int i = 0; i < c.degree; ++i) want *= static_cast<std::size_t>(c.n);
    if (c.values.size() != want) throw domain_error("cochain value table has the wrong size");
}

}  // namespace

// --- chain complex -----------------------------------------------------------

BoundaryMatrix boundary_matrix(const Quandle& q, int n, ChainTheory theory) {
    if (n < 0) throw domain_error("chain degree must be >= 0");
    const int x = q.size();
    long long span = 1;
    for (int i = 0; i < n; ++i) {
        span *= x;
        if (span > kBasisLimit) throw resource_error("chain basis exceeds the size bound");
    }

    BoundaryMatrix b;
    b.degree = n;
    b.theory = theory;
    b.source = tuple_basis(x, n, theory);
    b.target = tuple_basis(x, n - 1, theory);
    b.entries.assign(b.rows() * b.cols(), 0);
    if (n <= 1) return b;

    // dense raw-index -> row lookup for the (possibly filtered) target basis
    long long raw_span = 1;
    for (int i = 0; i < n - 1; ++i) raw_span *= x;
    std::vector<long long> row_of(static_cast<std::size_t>(raw_span), -1);
    for (std::size_t r = 0; r < b.target.size(); ++r)
        row_of[static_cast<std::size_t>(raw_index(b.target[r], x))] = static_cast<long long>(r);

    std::vector<int> shortened(static_cast<std::size_t>(n - 1));
    for (std::size_t col = 0; col < b.source.size(); ++col) {
        const auto& tup = b.source[col];
        for (int p = 1; p < n; ++p) {
            const int sign = (p % 2 == 1) ? 1 : -1;  // (-1)^i for the 1-based i = p + 1
            const int xi = tup[static_cast<std::size_t>(p)];
            // term with x_p removed
            int w = 0;
            for (int j = 0; j < n; ++j)
                if (j != p) shortened[static_cast<std::size_t>(w++)] = tup[static_cast<std::size_t>(j)];
            long long r = row_of[static_cast<std::size_t>(raw_index(shortened, x))];
            if (r >= 0) b.entries[static_cast<std::size_t>(r) * b.cols() + col] += sign;
            // term with the prefix acted on by x_p
            for (int j = 0; j < p; ++j)
                shortened[static_cast<std::size_t>(j)] = q.op(tup[static_cast<std::size_t>(j)], xi);
            r = row_of[static_cast<std::size_t>(raw_index(shortened, x))];
            if (r >= 0) b.entries[static_cast<std::size_t>(r) * b.cols() + col] -= sign;
        }
    }
    return b;
}

std::string HomologyGroup::describe() const {
    std::ostringstream out;
    bool first = true;
    if (free_rank > 0) {
        out << "Z";
        if (free_rank > 1) out << "^" << free_rank;
        first = false;
    }
    for (long long d : torsion) {
        if (!first) out << " + ";
        out << "Z_" << d;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

HomologyGroup homology(const Quandle& q, int n, ChainTheory theory) {
    if (n < 0) throw domain_error("homology degree must be >= 0");
    if (n > 3) throw resource_error("homology computed for degree <= 3 only");
    BoundaryMatrix dn = boundary_matrix(q, n, theory);
    BoundaryMatrix dup = boundary_matrix(q, n + 1, theory);
    Smith sn = smith(to_mat(dn), false, false);
    Smith sup = smith(to_mat(dup), false, false);

    HomologyGroup h;
    h.free_rank = static_cast<long long>(dn.cols()) - static_cast<long long>(sn.rank) -
                  static_cast<long long>(sup.rank);
    for (long long d : sup.diag)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

// --- cochains ----------------------------------------------------------------

CocycleTable::CocycleTable(int degree_, int modulus_, int n_)
    : degree(degree_), modulus(modulus_), n(n_) {
    if (degree != 2 && degree != 3) throw domain_error("cocycle degree must be 2 or 3");
    if (modulus < 2) throw domain_error("modulus must be >= 2");
    if (n < 1) throw domain_error("carrier must be nonempty");
    std::size_t sz = 1;
    for (int i = 0; i < degree; ++i) sz *= static_cast<std::size_t>(n);
    values.assign(sz, 0);
}

int& CocycleTable::at(int x, int y) {
    return values[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(y)];
}
int CocycleTable::at(int x, int y) const {
    return values[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(y)];
}
int& CocycleTable::at(int x, int y, int z) {
    return values[(static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(y)) *
                      static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(z)];
}
int CocycleTable::at(int x, int y, int z) const {
    return values[(static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(y)) *
                      static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(z)];
}

CocycleTable parse_cocycle(std::istream& in) {
    CocycleTable out;
    bool have_degree = false, have_mod = false, have_order = false;
    int degree = 0, modulus = 0, order = 0;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        auto read_int = [&](int& into) {
            std::string t;
            if (!(ls >> t)) throw parse_error("missing number after '" + tok + "'", line_no);
            try {
                std::size_t used = 0;
                into = std::stoi(t, &used);
                if (used != t.size()) throw std::invalid_argument(t);
            } catch (const std::exception&) {
                throw parse_error("expected an integer, got '" + t + "'", line_no);
            }
        };
        if (!have_degree) {
            if (tok != "degree") throw parse_error("expected 'degree D' first", line_no);
            read_int(degree);
            if (degree != 2 && degree != 3)
                throw parse_error("degree must be 2 or 3", line_no);
            have_degree = true;
        } else if (!have_mod) {
            if (tok != "mod") throw parse_error("expected 'mod M'", line_no);
            read_int(modulus);
            if (modulus < 2) throw parse_error("modulus must be >= 2", line_no);
            have_mod = true;
        } else if (!have_order) {
            if (tok != "order") throw parse_error("expected 'order N'", line_no);
            read_int(order);
            if (order < 1) throw parse_error("order must be >= 1", line_no);
            out = CocycleTable(degree, modulus, order);
            have_order = true;
        } else {
            std::vector<int> idx(static_cast<std::size_t>(degree));
            try {
                std::size_t used = 0;
                idx[0] = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw parse_error("expected an index, got '" + tok + "'", line_no);
            }
            for (int i = 1; i < degree; ++i) read_int(idx[static_cast<std::size_t>(i)]);
            std::string arrow;
            if (!(ls >> arrow) || arrow != "->")
                throw parse_error("expected '->' after the tuple", line_no);
            int v = 0;
            tok = "->";
            read_int(v);
            for (int i : idx)
                if (i < 0 || i >= order)
                    throw parse_error("index out of range 0.." + std::to_string(order - 1),
                                      line_no);
            v = mod_reduce(v, modulus);
            if (degree == 2)
                out.at(idx[0], idx[1]) = v;
            else
                out.at(idx[0], idx[1], idx[2]) = v;
        }
    }
    if (!have_order) throw parse_error("missing 'degree', 'mod' or 'order' header");
    return out;
}

CocycleTable parse_cocycle(const std::string& text) {
    std::istringstream in(text);
    return parse_cocycle(in);
}

std::string cocycle_to_string(const CocycleTable& c) {
    std::ostringstream out;
    out << "degree " << c.degree << "\n";
    out << "mod " << c.modulus << "\n";
    out << "order " << c.n << "\n";
    if (c.degree == 2) {
        for (int x = 0; x < c.n; ++x)
            for (int y = 0; y < c.n; ++y)
                if (mod_reduce(c.at(x, y), c.modulus) != 0)
                    out << x << " " << y << " -> " << mod_reduce(c.at(x, y), c.modulus) << "\n";
    } else {
        for (int x = 0; x < c.n; ++x)
            for (int y = 0; y < c.n; ++y)
                for (int z = 0; z < c.n; ++z)
                    if (mod_reduce(c.at(x, y, z), c.modulus) != 0)
                        out << x << " " << y << " " << z << " -> "
                            << mod_reduce(c.at(x, y, z), c.modulus) << "\n";
    }
    return out.str();
}

CocycleReport is_cocycle(const Quandle& q, const CocycleTable& c) {
    check_cochain_shape(q, c);
    const int n = q.size();
    const int m = c.modulus;
    CocycleReport rep;

    if (c.degree == 2) {
        for (int x = 0; x < n; ++x)
            if (mod_reduce(c.at(x, x), m) != 0) {
                rep.reason = "phi(x,x) must vanish";
                rep.witness = {x, x};
                return rep;
            }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    long long lhs = c.at(x, y) + c.at(q.op(x, y), z);
                    long long rhs = c.at(x, z) + c.at(q.op(x, z), q.op(y, z));
                    if (mod_reduce(lhs - rhs, m) != 0) {
                        rep.reason = "2-cocycle identity fails";
                        rep.witness = {x, y, z};
                        return rep;
                    }
                }
    } else {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (mod_reduce(c.at(x, x, y), m) != 0) {
                    rep.reason = "psi(x,x,y) must vanish";
                    rep.witness = {x, x, y};
                    return rep;
                }
                if (mod_reduce(c.at(x, y, y), m) != 0) {
                    rep.reason = "psi(x,y,y) must vanish";
                    rep.witness = {x, y, y};
                    return rep;
                }
            }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    for (int w = 0; w < n; ++w) {
                        long long lhs = c.at(x, y, z) + c.at(x, z, w) +
                                        c.at(q.op(x, z), q.op(y, z), w);
                        long long rhs = c.at(q.op(x, y), z, w) +
                                        c.at(q.op(x, w), q.op(y, w), q.op(z, w)) +
                                        c.at(x, y, w);
                        if (mod_reduce(lhs - rhs, m) != 0) {
                            rep.reason = "3-cocycle identity fails";
                            rep.witness = {x, y, z, w};
                            return rep;
                        }
                    }
    }
    rep.valid = true;
    return rep;
}

CocycleSpace cocycle_space(const Quandle& q, int degree, int m) {
    if (degree != 2 && degree != 3) throw domain_error("cocycle degree must be 2 or 3");
    if (m < 2) throw domain_error("modulus must be >= 2");
    long long span = 1;
    for (int i = 0; i <= degree; ++i) {
        span *= q.size();
        if (span > kBasisLimit) throw resource_error("cochain basis exceeds the size bound");
    }

    const auto basis = tuple_basis(q.size(), degree, ChainTheory::quandle);
    CocycleSpace out;
    out.degree = degree;
    out.modulus = m;

    // Cocycles: kernel mod m of the condition matrix delta(phi) = 0.
    Mat cond = delta_matrix(q, degree);
    Smith sc = smith(cond, false, true);
    const std::size_t dim = basis.size();
    std::vector<long long> g(dim, m);
    for (std::size_t j = 0; j < dim; ++j) {
        long long d = j < sc.diag.size() ? sc.diag[j] : 0;
        g[j] = std::gcd(d, static_cast<long long>(m));
    }
    for (std::size_t j = 0; j < dim; ++j) {
        if (g[j] <= 1) continue;
        long long scale = m / g[j];
        std::vector<int> vec(dim);
        for (std::size_t i = 0; i < dim; ++i)
            vec[i] = mod_reduce(scale * sc.v.at(i, j), m);
        out.cocycles.push_back(table_from_vector(q, degree, m, basis, vec));
        out.cocycle_orders.push_back(g[j]);
    }

    // Coboundaries: image mod m of delta from one degree down.
    Mat db = delta_matrix(q, degree - 1);
    Smith sb = smith(db, true, false);
    std::vector<std::vector<long long>> cob_int;  // integer generators of the image
    for (std::size_t i = 0; i < sb.diag.size(); ++i) {
        if (sb.diag[i] == 0) continue;
        long long ord = m / std::gcd(sb.diag[i], static_cast<long long>(m));
        if (ord <= 1) continue;
        std::vector<long long> w(dim);
        for (std::size_t r = 0; r < dim; ++r) w[r] = checked(sb.diag[i] * sb.uinv.at(r, i));
        std::vector<int> vec(dim);
        for (std::size_t r = 0; r < dim; ++r) vec[r] = mod_reduce(w[r], m);
        out.coboundaries.push_back(table_from_vector(q, degree, m, basis, vec));
        out.coboundary_orders.push_back(ord);
        cob_int.push_back(std::move(w));
    }

    // Quotient: kernel generators modulo the coboundary lattice, expressed in
    // the kernel's Smith coordinates.
    std::vector<std::size_t> kept;
    for (std::size_t j = 0; j < dim; ++j)
        if (g[j] > 1) kept.push_back(j);
    Mat rel(kept.size(), kept.size() + cob_int.size());
    for (std::size_t jj = 0; jj < kept.size(); ++jj) rel.at(jj, jj) = g[kept[jj]];
    for (std::size_t wi = 0; wi < cob_int.size(); ++wi) {
        // psi = Vinv * w; coordinate j of w along generator j is psi_j / (m/g_j)
        for (std::size_t jj = 0; jj < kept.size(); ++jj) {
            std::size_t j = kept[jj];
            long long psi = 0;
            for (std::size_t i = 0; i < dim; ++i)
                psi = checked(psi + sc.vinv.at(j, i) * cob_int[wi][i]);
            long long step = m / g[j];
            if (psi % step != 0)
                throw domain_error("internal error: coboundary escaped the cocycle lattice");
            rel.at(jj, kept.size() + wi) = mod_reduce(psi / step, static_cast<int>(g[j]));
        }
    }
    Smith sq = smith(std::move(rel), false, false);
    for (long long d : sq.diag)
        if (d > 1) out.quotient.push_back(d);
    return out;
}

bool is_coboundary(const Quandle& q, const CocycleTable& c) {
    check_cochain_shape(q, c);
    const int m = c.modulus;
    const auto basis = tuple_basis(q.size(), c.degree, ChainTheory::quandle);

    // quandle cochains vanish off the non-degenerate basis
    if (c.degree == 2) {
        for (int x = 0; x < c.n; ++x)
            if (mod_reduce(c.at(x, x), m) != 0)
                throw domain_error("cochain must vanish on degenerate tuples");
    } else {
        for (int x = 0; x < c.n; ++x)
            for (int y = 0; y < c.n; ++y)
                if (mod_reduce(c.at(x, x, y), m) != 0 || mod_reduce(c.at(x, y, y), m) != 0)
                    throw domain_error("cochain must vanish on degenerate tuples");
    }

    std::vector<int> w = vector_from_table(c, basis);
    Mat db = delta_matrix(q, c.degree - 1);
    Smith sb = smith(db, true, false);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        long long rhs = 0;
        for (std::size_t k = 0; k < basis.size(); ++k)
            rhs = checked(rhs + sb.u.at(i, k) * w[k]);
        long long d = i < sb.diag.size() ? sb.diag[i] : 0;
        long long gg = std::gcd(d, static_cast<long long>(m));
        if (gg == 0) gg = m;  // unreachable (gcd(0,m) = m), kept for clarity
        if (mod_reduce(rhs, m) % gg != 0) return false;
    }
    return true;
}

bool cohomologous(const Quandle& q, const CocycleTable& a, const CocycleTable& b) {
    if (a.degree != b.degree || a.modulus != b.modulus || a.n != b.n)
        throw domain_error("cochains live in different groups");
    CocycleTable diff(a.degree, a.modulus, a.n);
    for (std::size_t i = 0; i < diff.values.size(); ++i)
        diff.values[i] = mod_reduce(static_cast<long long>(a.values[i]) - b.values[i], a.modulus);
    return is_coboundary(q, diff);
}

}  // namespace qf

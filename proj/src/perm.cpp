#include "qf/perm.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "qf/errors.hpp"

namespace qf {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    const int n = degree();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : img_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw domain_error("image sequence is not a bijection");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
    return Perm(std::move(img));
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

Perm Perm::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < degree(); ++i) inv[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
    Perm r;
    r.img_ = std::move(inv);  // already known bijective
    return r;
}

std::vector<int> Perm::cycle_type() const {
    const int n = degree();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> type;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
            seen[static_cast<std::size_t>(j)] = 1;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    return type;
}

std::string Perm::cycles(int index_base) const {
    const int n = degree();
    bool single_digit = (n - 1 + index_base) <= 9;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::ostringstream out;
    bool any = false;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)] || (*this)(i) == i) {
            seen[static_cast<std::size_t>(i)] = 1;
            continue;
        }
        any = true;
        out << '(';
        bool first = true;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
            seen[static_cast<std::size_t>(j)] = 1;
            if (!first && !single_digit) out << ' ';
            out << (j + index_base);
            first = false;
        }
        out << ')';
    }
    if (!any) return "(" + std::to_string(index_base) + ")";
    return out.str();
}

Perm operator*(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree()) throw domain_error("composing permutations of different degree");
    std::vector<int> img(p.img_.size());
    for (int i = 0; i < p.degree(); ++i) img[static_cast<std::size_t>(i)] = p(q(i));
    Perm r;
    r.img_ = std::move(img);
    return r;
}

Perm parse_cycles(const std::string& text, int degree, int index_base) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = i;
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    bool multi = degree - 1 + index_base > 9;
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(') throw domain_error("expected '(' in cycle string: " + text);
        ++pos;
        std::vector<int> cyc;
        skip_ws();
        while (pos < text.size() && text[pos] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw domain_error("expected digit in cycle string: " + text);
            int v = 0;
            if (multi) {
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    v = v * 10 + (text[pos++] - '0');
            } else {
                v = text[pos++] - '0';
            }
            v -= index_base;
            if (v < 0 || v >= degree) throw domain_error("cycle label out of range: " + text);
            cyc.push_back(v);
            skip_ws();
        }
        if (pos >= text.size()) throw domain_error("unterminated cycle: " + text);
        ++pos;  // ')'
        for (std::size_t i = 0; i + 1 < cyc.size(); ++i) img[static_cast<std::size_t>(cyc[i])] = cyc[i + 1];
        if (cyc.size() > 1) img[static_cast<std::size_t>(cyc.back())] = cyc.front();
        skip_ws();
    }
    return Perm(std::move(img));
}

std::size_t default_closure_bound() {
    static const std::size_t bound = [] {
        if (const char* s = std::getenv("QF_MAX_CLOSURE")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(s, &end, 10);
            if (end != s && v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(10'000'000);
    }();
    return bound;
}

PermGroup PermGroup::generate(std::vector<Perm> gens, int degree, std::size_t max_order) {
    for (const Perm& g : gens)
        if (g.degree() != degree) throw domain_error("generator degree mismatch");

    std::set<Perm> closed;
    closed.insert(Perm::identity(degree));
    std::vector<Perm> frontier(closed.begin(), closed.end());
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& e : frontier) {
            for (const Perm& g : gens) {
                Perm h = e * g;
                if (closed.insert(h).second) {
                    if (closed.size() > max_order)
                        throw resource_error("group closure exceeds bound of " + std::to_string(max_order));
                    next.push_back(std::move(h));
                }
            }
        }
        frontier = std::move(next);
    }
    // Finite + closed under multiplication by generators => closed under inverse.
    PermGroup g;
    g.degree_ = degree;
    g.gens_ = std::move(gens);
    g.elements_.assign(closed.begin(), closed.end());  // std::set iterates sorted
    return g;
}

PermGroup PermGroup::from_closed_set(std::vector<Perm> elements, int degree) {
    std::sort(elements.begin(), elements.end());
    PermGroup g;
    g.degree_ = degree;
    g.gens_ = elements;
    g.elements_ = std::move(elements);
    return g;
}

std::vector<std::vector<int>> PermGroup::orbits_of(const std::vector<Perm>& gens, int degree) {
    PermGroup g;
    g.degree_ = degree;
    g.gens_ = gens;
    return g.orbits();
}

bool PermGroup::contains(const Perm& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
    if (degree_ != g.degree_) return false;
    for (const Perm& e : elements_)
        if (!g.contains(e)) return false;
    return true;
}

bool PermGroup::is_normal_in(const PermGroup& g) const {
    if (!is_subgroup_of(g)) return false;
    for (const Perm& h : g.elements_) {
        const Perm hinv = h.inverse();
        for (const Perm& e : elements_)
            if (!contains(h * e * hinv)) return false;
    }
    return true;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
    std::vector<int> parent(static_cast<std::size_t>(degree_));
    for (int i = 0; i < degree_; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const Perm& g : gens_)
        for (int i = 0; i < degree_; ++i) {
            int a = find(i), b = find(g(i));
            if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    std::map<int, std::vector<int>> blocks;
    for (int i = 0; i < degree_; ++i) blocks[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    out.reserve(blocks.size());
    for (auto& [root, blk] : blocks) out.push_back(std::move(blk));
    return out;  // map keys ascend => sorted by minimal element
}

bool PermGroup::is_transitive() const {
    return degree_ >= 1 && orbits().size() == 1;
}

bool quotient_is_cyclic(const PermGroup& g, const PermGroup& n) {
    if (!n.is_subgroup_of(g)) throw domain_error("quotient: not a subgroup");
    if (!n.is_normal_in(g)) throw domain_error("quotient: subgroup not normal");

    // Identify each coset by its lexicographically least member.
    auto coset_key = [&](const Perm& p) {
        Perm best = p * n.elements().front();
        for (const Perm& e : n.elements()) {
            Perm q = p * e;
            if (q < best) best = q;
        }
        return best;
    };
    std::set<Perm> cosets;
    for (const Perm& p : g.elements()) cosets.insert(coset_key(p));
    const std::size_t q = cosets.size();

    for (const Perm& rep : cosets) {
        std::set<Perm> seen;
        Perm acc = Perm::identity(g.degree());
        for (std::size_t k = 0; k < q; ++k) {
            seen.insert(coset_key(acc));
            acc = acc * rep;
        }
        if (seen.size() == q) return true;
    }
    return false;
}

}  // namespace qf

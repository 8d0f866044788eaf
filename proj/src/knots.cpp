#include "qf/knots.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qf/errors.hpp"

namespace qf {

namespace {

int modr(long long v, int m) { return static_cast<int>(((v % m) + m) % m); }

void validate_diagram(const std::vector<Crossing>& crossings) {
    const int arcs = static_cast<int>(crossings.size());
    std::vector<int> in_count(static_cast<std::size_t>(arcs), 0);
    std::vector<int> out_count(static_cast<std::size_t>(arcs), 0);
    for (const Crossing& c : crossings) {
        for (int label : {c.over, c.under_in, c.under_out})
            if (label < 0 || label >= arcs)
                throw parse_error("arc labels must lie in 0..c-1 for c crossings");
        ++in_count[static_cast<std::size_t>(c.under_in)];
        ++out_count[static_cast<std::size_t>(c.under_out)];
    }
    for (int a = 0; a < arcs; ++a) {
        if (in_count[static_cast<std::size_t>(a)] > 1 || out_count[static_cast<std::size_t>(a)] > 1)
            throw parse_error("arc " + std::to_string(a) + " used more than twice");
        if (in_count[static_cast<std::size_t>(a)] == 0 || out_count[static_cast<std::size_t>(a)] == 0)
            throw parse_error("dangling arc " + std::to_string(a));
    }
    // one closed component: under_in -> under_out must be a single cycle
    std::vector<int> next(static_cast<std::size_t>(arcs));
    for (const Crossing& c : crossings) next[static_cast<std::size_t>(c.under_in)] = c.under_out;
    int seen = 0;
    for (int a = 0; seen == 0 || a != 0; a = next[static_cast<std::size_t>(a)]) ++seen;
    if (seen != arcs) throw parse_error("diagram is not a single closed knot component");
}

}  // namespace

KnotDiagram parse_pd(std::istream& in) {
    KnotDiagram k;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head != "X") throw parse_error("crossing line must start with X", line_no);
        int fields[4];
        for (int& f : fields)
            if (!(ls >> f)) throw parse_error("expected four arc labels", line_no);
        std::string sign;
        if (!(ls >> sign) || (sign != "+" && sign != "-"))
            throw parse_error("crossing sign must be + or -", line_no);
        std::string extra;
        if (ls >> extra) throw parse_error("trailing tokens after crossing", line_no);
        if (fields[0] != fields[1])
            throw parse_error("over-arc in and out labels differ", line_no);
        k.crossings.push_back({fields[0], fields[2], fields[3], sign == "+" ? 1 : -1});
    }
    if (k.crossings.empty()) return k;  // the unknot, one free arc
    validate_diagram(k.crossings);
    k.arcs = static_cast<int>(k.crossings.size());
    return k;
}

KnotDiagram parse_pd(const std::string& text) {
    std::istringstream in(text);
    return parse_pd(in);
}

std::string pd_to_string(const KnotDiagram& k) {
    std::ostringstream os;
    for (const Crossing& c : k.crossings)
        os << "X " << c.over << " " << c.over << " " << c.under_in << " " << c.under_out << " "
           << (c.sign > 0 ? "+" : "-") << "\n";
    return os.str();
}

std::vector<Coloring> colorings(const KnotDiagram& k, const Quandle& q) {
    const int n = q.size();
    // rinv[z * n + y] = the x with x*y = z (columns are bijective)
    std::vector<int> rinv(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) rinv[static_cast<std::size_t>(q.op(x, y)) * n + y] = x;

    std::vector<std::vector<int>> touching(static_cast<std::size_t>(k.arcs));
    for (std::size_t i = 0; i < k.crossings.size(); ++i) {
        const Crossing& c = k.crossings[i];
        for (int a : {c.over, c.under_in, c.under_out}) {
            auto& t = touching[static_cast<std::size_t>(a)];
            if (t.empty() || t.back() != static_cast<int>(i)) t.push_back(static_cast<int>(i));
        }
    }

    std::vector<int> color(static_cast<std::size_t>(k.arcs), -1);
    std::vector<int> trail;
    std::vector<Coloring> found;

    // assign + fixpoint propagation through the crossing relations; false on
    // conflict (caller unwinds via the trail)
    auto propagate = [&](int arc, int val) -> bool {
        std::size_t head = trail.size();
        color[static_cast<std::size_t>(arc)] = val;
        trail.push_back(arc);
        while (head < trail.size()) {
            int a = trail[head++];
            for (int ci : touching[static_cast<std::size_t>(a)]) {
                const Crossing& c = k.crossings[static_cast<std::size_t>(ci)];
                int ov = color[static_cast<std::size_t>(c.over)];
                int ui = color[static_cast<std::size_t>(c.under_in)];
                int uo = color[static_cast<std::size_t>(c.under_out)];
                if (ov < 0) continue;
                int want_out = -1, want_in = -1;
                if (ui >= 0)
                    want_out = c.sign > 0 ? q.op(ui, ov) : rinv[static_cast<std::size_t>(ui) * n + ov];
                if (uo >= 0)
                    want_in = c.sign > 0 ? rinv[static_cast<std::size_t>(uo) * n + ov] : q.op(uo, ov);
                if (want_out >= 0) {
                    if (uo < 0) {
                        color[static_cast<std::size_t>(c.under_out)] = want_out;
                        trail.push_back(c.under_out);
                    } else if (uo != want_out) {
                        return false;
                    }
                } else if (want_in >= 0 && ui < 0) {
                    color[static_cast<std::size_t>(c.under_in)] = want_in;
                    trail.push_back(c.under_in);
                }
            }
        }
        return true;
    };

    auto rec = [&](auto&& self, int arc) -> void {
        while (arc < k.arcs && color[static_cast<std::size_t>(arc)] >= 0) ++arc;
        if (arc == k.arcs) {
            found.push_back(color);
            return;
        }
        for (int v = 0; v < n; ++v) {
            std::size_t mark = trail.size();
            if (propagate(arc, v)) self(self, arc + 1);
            while (trail.size() > mark) {
                color[static_cast<std::size_t>(trail.back())] = -1;
                trail.pop_back();
            }
        }
    };
    rec(rec, 0);
    return found;
}

long long GroupRingElement::coefficient_sum() const {
    return std::accumulate(coeff.begin(), coeff.end(), 0LL);
}

std::string GroupRingElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int e = 0; e < modulus; ++e) {
        long long c = coeff[static_cast<std::size_t>(e)];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (e == 0) {
            os << c;
        } else {
            if (c != 1) os << c;
            os << "t";
            if (e > 1) os << "^" << e;
        }
    }
    if (first) os << 0;
    return os.str();
}

GroupRingElement cocycle_invariant(const KnotDiagram& k, const Quandle& q,
                                   const CocycleTable& phi) {
    if (phi.degree != 2) throw domain_error("state sums take a degree-2 cocycle");
    if (phi.n != q.size()) throw domain_error("cocycle order does not match the quandle");
    CocycleReport rep = is_cocycle(q, phi);
    if (!rep.valid) throw domain_error("not a 2-cocycle: " + rep.reason);

    GroupRingElement out{phi.modulus, std::vector<long long>(static_cast<std::size_t>(phi.modulus), 0)};
    for (const Coloring& col : colorings(k, q)) {
        long long w = 0;
        for (const Crossing& c : k.crossings) {
            if (c.sign > 0)
                w += phi.at(col[static_cast<std::size_t>(c.under_in)], col[static_cast<std::size_t>(c.over)]);
            else
                w -= phi.at(col[static_cast<std::size_t>(c.under_out)], col[static_cast<std::size_t>(c.over)]);
        }
        ++out.coeff[static_cast<std::size_t>(modr(w, phi.modulus))];
    }
    return out;
}

bool reidemeister_equivalence_check(const KnotDiagram& a, const KnotDiagram& b, const Quandle& q,
                                    const CocycleTable& phi) {
    if (colorings(a, q).size() != colorings(b, q).size()) return false;
    return cocycle_invariant(a, q, phi) == cocycle_invariant(b, q, phi);
}

}  // namespace qf

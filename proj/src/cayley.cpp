#include "qf/cayley.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "qf/errors.hpp"

namespace qf {

bool CayleyTable::in_range() const {
    if (n < 0 || e.size() != static_cast<std::size_t>(n) * n) return false;
    return std::all_of(e.begin(), e.end(), [&](int v) { return v >= 0 && v < n; });
}

CayleyTable parse_table(std::istream& in) {
    std::vector<int> values;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                values.push_back(v);
            } catch (const std::exception&) {
                throw parse_error("expected an integer, got '" + tok + "'", line_no);
            }
        }
    }
    if (values.empty()) throw parse_error("empty table");
    const int n = values.front();
    if (n < 1) throw parse_error("table order must be >= 1");
    if (values.size() != 1 + static_cast<std::size_t>(n) * n)
        throw parse_error("expected " + std::to_string(static_cast<long long>(n) * n) +
                          " entries for order " + std::to_string(n) + ", got " +
                          std::to_string(values.size() - 1));
    CayleyTable t(n);
    std::copy(values.begin() + 1, values.end(), t.e.begin());
    if (!t.in_range()) throw parse_error("table entry out of range 0.." + std::to_string(n - 1));
    return t;
}

CayleyTable parse_table(const std::string& text) {
    std::istringstream in(text);
    return parse_table(in);
}

void print_table(std::ostream& out, const CayleyTable& t) {
    out << t.n << '\n';
    for (int a = 0; a < t.n; ++a) {
        for (int b = 0; b < t.n; ++b) {
            if (b) out << ' ';
            out << t.at(a, b);
        }
        out << '\n';
    }
}

std::string table_to_string(const CayleyTable& t) {
    std::ostringstream out;
    print_table(out, t);
    return out.str();
}

std::string Violation::describe() const {
    std::ostringstream out;
    out << axiom << " at (";
    bool first = true;
    for (int v : witness) {
        if (v < 0) break;
        if (!first) out << ", ";
        out << v;
        first = false;
    }
    out << ")";
    return out.str();
}

std::vector<Violation> quandle_violations(const CayleyTable& t) {
    std::vector<Violation> bad;
    if (!t.in_range()) {
        bad.push_back({"entry out of range", {-1, -1, -1}});
        return bad;
    }
    const int n = t.n;
    for (int a = 0; a < n; ++a)
        if (t.at(a, a) != a) bad.push_back({"idempotency a*a = a", {a, -1, -1}});
    for (int b = 0; b < n; ++b) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int a = 0; a < n; ++a) seen[static_cast<std::size_t>(t.at(a, b))] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            bad.push_back({"right translation R_b not bijective", {b, -1, -1}});
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (t.at(t.at(a, b), c) != t.at(t.at(a, c), t.at(b, c))) {
                    bad.push_back({"self-distributivity (a*b)*c = (a*c)*(b*c)", {a, b, c}});
                    return bad;  // one witness is enough at this point
                }
    return bad;
}

std::vector<Violation> quasigroup_violations(const CayleyTable& t) {
    std::vector<Violation> bad;
    if (!t.in_range()) {
        bad.push_back({"entry out of range", {-1, -1, -1}});
        return bad;
    }
    const int n = t.n;
    for (int a = 0; a < n; ++a) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int b = 0; b < n; ++b) seen[static_cast<std::size_t>(t.at(a, b))] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            bad.push_back({"row (left translation L_a) not bijective", {a, -1, -1}});
    }
    for (int b = 0; b < n; ++b) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int a = 0; a < n; ++a) seen[static_cast<std::size_t>(t.at(a, b))] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            bad.push_back({"column (right translation R_b) not bijective", {b, -1, -1}});
    }
    return bad;
}

int group_identity(const CayleyTable& t) {
    for (int e = 0; e < t.n; ++e) {
        bool ok = true;
        for (int x = 0; x < t.n && ok; ++x) ok = t.at(e, x) == x && t.at(x, e) == x;
        if (ok) return e;
    }
    return -1;
}

bool is_group_table(const CayleyTable& t, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (!t.in_range()) return fail("entry out of range");
    if (!quasigroup_violations(t).empty()) return fail("not a Latin square");
    if (group_identity(t) < 0) return fail("no two-sided identity");
    const int n = t.n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (t.at(t.at(a, b), c) != t.at(a, t.at(b, c)))
                    return fail("not associative at (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")");
    return true;  // Latin + identity + associative => inverses exist
}

int group_inverse(const CayleyTable& t, int x) {
    const int e = group_identity(t);
    if (e < 0) throw domain_error("group_inverse: table has no identity");
    for (int y = 0; y < t.n; ++y)
        if (t.at(x, y) == e && t.at(y, x) == e) return y;
    throw domain_error("group_inverse: no inverse found (not a group?)");
}

}  // namespace qf

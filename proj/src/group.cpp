#include "latcom/group.hpp"

#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "latcom/error.hpp"

namespace latcom {

namespace {

void check_cap(long order, int cap, const char* what) {
    if (order > cap) {
        throw OrderCapExceeded(std::string(what) + ": order " + std::to_string(order) +
                               " exceeds cap " + std::to_string(cap));
    }
}

// Relabels so the identity sits at index 0 (swap of labels 0 and e).
std::vector<std::vector<int>> relocate_identity(std::vector<std::vector<int>> t, int e) {
    if (e == 0) return t;
    const int n = static_cast<int>(t.size());
    auto sw = [&](int x) { return x == 0 ? e : (x == e ? 0 : x); };
    std::vector<std::vector<int>> out(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out[sw(a)][sw(b)] = sw(t[a][b]);
    return out;
}

} // namespace

FiniteGroup make_group(const std::vector<std::vector<int>>& table_in,
                       std::string label, int order_cap) {
    const int n = static_cast<int>(table_in.size());
    if (n == 0) throw NotClosed("empty table");
    check_cap(n, order_cap, "make_group");
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table_in[a].size()) != n)
            throw NotClosed("row " + std::to_string(a) + " has wrong length");
        for (int b = 0; b < n; ++b)
            if (table_in[a][b] < 0 || table_in[a][b] >= n)
                throw NotClosed("entry (" + std::to_string(a) + "," + std::to_string(b) +
                                ") = " + std::to_string(table_in[a][b]) + " out of range");
    }
    // Each row and column must be a permutation.
    for (int a = 0; a < n; ++a) {
        std::vector<bool> row(n, false), col(n, false);
        for (int b = 0; b < n; ++b) {
            if (row[table_in[a][b]])
                throw NotClosed("row " + std::to_string(a) + " repeats element " +
                                std::to_string(table_in[a][b]));
            row[table_in[a][b]] = true;
            if (col[table_in[b][a]])
                throw NotClosed("column " + std::to_string(a) + " repeats element " +
                                std::to_string(table_in[b][a]));
            col[table_in[b][a]] = true;
        }
    }
    // Two-sided identity.
    int e = -1;
    for (int a = 0; a < n && e < 0; ++a) {
        bool ok = true;
        for (int b = 0; b < n && ok; ++b)
            ok = table_in[a][b] == b && table_in[b][a] == b;
        if (ok) e = a;
    }
    if (e < 0) throw NoIdentity("no two-sided identity element");

    auto t = relocate_identity(table_in, e);

    FiniteGroup g;
    g.order = n;
    g.label = std::move(label);
    g.table.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g.table[static_cast<std::size_t>(a) * n + b] = t[a][b];

    g.inverse.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (t[a][b] == 0 && t[b][a] == 0) {
                g.inverse[a] = b;
                break;
            }
        }
        if (g.inverse[a] < 0)
            throw MissingInverse("element " + std::to_string(a) + " has no two-sided inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw NotAssociative("triple (" + std::to_string(a) + "," +
                                         std::to_string(b) + "," + std::to_string(c) + ")");
    return g;
}

FiniteGroup cyclic(long n, int order_cap) {
    if (n <= 0) throw InvalidSpec("cyclic: n must be positive");
    check_cap(n, order_cap, "cyclic");
    FiniteGroup g;
    g.order = static_cast<int>(n);
    g.label = "Z(" + std::to_string(n) + ")";
    g.table.resize(static_cast<std::size_t>(n) * n);
    g.inverse.resize(n);
    for (long a = 0; a < n; ++a) {
        g.inverse[a] = static_cast<std::int32_t>((n - a) % n);
        for (long b = 0; b < n; ++b)
            g.table[a * n + b] = static_cast<std::int32_t>((a + b) % n);
    }
    return g;
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, int order_cap) {
    const long n = static_cast<long>(g.order) * h.order;
    check_cap(n, order_cap, "direct_product");
    FiniteGroup p;
    p.order = static_cast<int>(n);
    p.label = "prod(" + g.label + "," + h.label + ")";
    p.table.resize(static_cast<std::size_t>(n) * n);
    p.inverse.resize(n);
    for (int a1 = 0; a1 < g.order; ++a1)
        for (int a2 = 0; a2 < h.order; ++a2) {
            const long a = static_cast<long>(a1) * h.order + a2;
            p.inverse[a] = static_cast<std::int32_t>(
                static_cast<long>(g.inv(a1)) * h.order + h.inv(a2));
            for (int b1 = 0; b1 < g.order; ++b1)
                for (int b2 = 0; b2 < h.order; ++b2) {
                    const long b = static_cast<long>(b1) * h.order + b2;
                    p.table[a * n + b] = static_cast<std::int32_t>(
                        static_cast<long>(g.mul(a1, b1)) * h.order + h.mul(a2, b2));
                }
        }
    return p;
}

FiniteGroup semidirect_cyclic(long m, long t, long k, int order_cap) {
    if (m <= 0 || t <= 0) throw InvalidSpec("semidirect_cyclic: moduli must be positive");
    const long n = m * t;
    check_cap(n, order_cap, "semidirect_cyclic");
    k %= m;
    if (k < 0) k += m;
    if (std::gcd(k, m) != 1)
        throw InvalidAction("gcd(k=" + std::to_string(k) + ", m=" + std::to_string(m) + ") != 1");
    // Powers k^0..k^{t-1}, plus the k^t = 1 (mod m) requirement.
    std::vector<long> kpow(t);
    kpow[0] = 1 % m;
    for (long b = 1; b < t; ++b) kpow[b] = (kpow[b - 1] * k) % m;
    if ((kpow[t - 1] * k) % m != 1 % m)
        throw InvalidAction("k=" + std::to_string(k) + " does not satisfy k^" +
                            std::to_string(t) + " = 1 (mod " + std::to_string(m) + ")");

    FiniteGroup g;
    g.order = static_cast<int>(n);
    g.label = "Z" + std::to_string(m) + ":Z" + std::to_string(t) + "(k=" + std::to_string(k) + ")";
    g.table.resize(static_cast<std::size_t>(n) * n);
    g.inverse.resize(n);
    for (long a = 0; a < m; ++a)
        for (long b = 0; b < t; ++b) {
            const long ab = a * t + b;
            // (a,b)^-1 = ((m-a)·k^d, d) with d = -b mod t: k^{b+d} = 1 (mod m).
            const long d = (t - b) % t;
            const long c = ((m - a) % m) * kpow[d] % m;
            g.inverse[ab] = static_cast<std::int32_t>(c * t + d);
            for (long cc = 0; cc < m; ++cc)
                for (long dd = 0; dd < t; ++dd)
                    g.table[ab * n + cc * t + dd] = static_cast<std::int32_t>(
                        ((a + cc * kpow[b]) % m) * t + (b + dd) % t);
        }
    return g;
}

int element_order(const FiniteGroup& g, int elem) {
    int x = elem, d = 1;
    while (x != 0) {
        x = g.mul(x, elem);
        ++d;
    }
    return d;
}

FiniteGroup read_cayley_text(std::istream& in, std::string label, int order_cap) {
    int n = 0;
    if (!(in >> n) || n <= 0) throw ParseError("cayley text: bad order line");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!(in >> t[a][b]))
                throw ParseError("cayley text: truncated at row " + std::to_string(a));
    return make_group(t, std::move(label), order_cap);
}

void write_cayley_text(std::ostream& out, const FiniteGroup& g) {
    out << g.order << "\n";
    for (int a = 0; a < g.order; ++a) {
        for (int b = 0; b < g.order; ++b)
            out << g.mul(a, b) << (b + 1 == g.order ? "" : " ");
        out << "\n";
    }
}

} // namespace latcom

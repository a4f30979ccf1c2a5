#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace latcom {

inline constexpr int kDefaultOrderCap = 5000;

/// A finite group as a validated Cayley table. Index 0 is always the
/// identity; the table is immutable after construction and safe to share
/// across threads.
struct FiniteGroup {
    int order = 1;
    std::vector<std::int32_t> table;   // row-major, table[a*order+b] = a·b
    std::vector<std::int32_t> inverse; // inverse[a]·a = identity
    std::string label;

    int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * order + b]; }
    int inv(int a) const { return inverse[a]; }
};

/// Validates a square multiplication table (closure, identity, inverses,
/// associativity) and relocates the identity to index 0 if needed.
/// Throws NotClosed / NoIdentity / MissingInverse / NotAssociative naming
/// the violating element or triple, OrderCapExceeded above `order_cap`.
FiniteGroup make_group(const std::vector<std::vector<int>>& table,
                       std::string label = "",
                       int order_cap = kDefaultOrderCap);

/// Z_n with table[a][b] = (a+b) mod n.
FiniteGroup cyclic(long n, int order_cap = kDefaultOrderCap);

/// G × H, componentwise, element index = g·|H| + h (row-major pairing).
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           int order_cap = kDefaultOrderCap);

/// Z_m ⋊ Z_t with (a,b)·(c,d) = (a + c·k^b mod m, b + d mod t), element
/// index a·t + b. k is reduced mod m at entry (negative k accepted).
/// Requires gcd(k,m) = 1 and k^t ≡ 1 (mod m); otherwise InvalidAction.
FiniteGroup semidirect_cyclic(long m, long t, long k,
                              int order_cap = kDefaultOrderCap);

/// Least d ≥ 1 with g^d = identity; divides |G|.
int element_order(const FiniteGroup& g, int elem);

/// Cayley-table text format: line 1 = n, then n lines of n indices.
FiniteGroup read_cayley_text(std::istream& in, std::string label = "",
                             int order_cap = kDefaultOrderCap);
void write_cayley_text(std::ostream& out, const FiniteGroup& g);

} // namespace latcom

#pragma once

#include <cstdint>
#include <vector>

#include "latcom/rational.hpp"

namespace latcom {

/// Deterministic Miller-Rabin, valid for all 64-bit n.
bool is_prime(std::uint64_t n);

struct DivisorProfile {
    std::uint64_t n = 1;
    std::uint64_t tau = 1;  // number of divisors
    BigInt sigma = 1;       // sum of divisors (can exceed 64 bits near 2^63)
    std::vector<std::pair<std::uint64_t, int>> factorization; // (prime, exponent), ascending
};

/// Trial division with a primality-test bailout on the remaining cofactor.
DivisorProfile divisor_profile(std::uint64_t n);

/// Divisors of n in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Number of solutions (s, j) with s | n, 1 <= j <= n/s and
/// (n / lcm(r,s)) | 2(i-j). Then |C(H^r_i)| = tau(n) + x_ri in D_2n.
std::int64_t x_ri(std::int64_t n, std::int64_t r, std::int64_t i);

// --- closed forms; evaluated exactly from integer parameters, no primality
// --- needed to evaluate (only to build actual groups).

/// Z_p ⋊ Z_{q^n}, one class of non-normal subgroups.
struct T21Formulas {
    Rational sd_rel_top; // sd(Z_{q^n}, G)
    Rational sd_G;
};
T21Formulas sd_formula_T21(std::int64_t p, std::int64_t n);

/// Z_q ⋊ Z_{p^n}, action of order p^2 (p^2 | q-1, n > 1).
struct T22Type2Formulas {
    Rational sd_zpn_minus1; // sd(Z_{p^{n-1}}, G)
    Rational sd_zpn;        // sd(Z_{p^n}, G)
    Rational sd_sub;        // sd(Z_q ⋊ Z_{p^{n-1}}, G)
    Rational sd_G;
};
T22Type2Formulas sd_formula_T22_type2(std::int64_t q, std::int64_t n);

/// (Z_r ⋊ Z_{p^n}) × Z_q. sd_rel is shared by Z_{p^n} and Z_{p^n} × Z_q.
struct T22Type3Formulas {
    Rational sd_rel;
    Rational sd_G;
};
T22Type3Formulas sd_formula_T22_type3(std::int64_t r, std::int64_t n);

/// Z_{q^2} ⋊ Z_{p^n}, action of order p (p | q-1).
struct T22Type4Formulas {
    Rational sd_zpn; // sd(Z_{p^n}, G)
    Rational sd_sub; // sd(Z_q ⋊ Z_{p^n}, G)
    Rational sd_G;
};
T22Type4Formulas sd_formula_T22_type4(std::int64_t q, std::int64_t n);

enum class TwoGroupFamily { Dihedral, Quaternion, QuasiDihedral };

/// sd of D_{2^n} (n >= 3), Q_{2^n} (n >= 3), S_{2^n} (n >= 4).
Rational sd_formula_2groups(TwoGroupFamily family, int n);

/// |N| = n+3 for all three order-2^n families.
std::int64_t normal_count_2groups(int n);

/// Dihedral relative-degree case formulas for D_2n, n not a power of 2.
struct DihedralCaseValues {
    bool even_case = false;      // n = 2^m n' with m >= 1
    std::int64_t m = 0;          // 2-adic valuation of n
    std::int64_t c_h11 = 0;      // |C(H^1_1)|
    Rational sd_h11;             // sd(H^1_1, D_2n)
    struct PerPrime {
        std::int64_t p = 0;      // odd prime divisor of n
        int alpha = 0;
        std::int64_t c_hp1 = 0;  // |C(H^p_1)|
        Rational sd_hp1;         // sd(H^p_1, D_2n)
    };
    std::vector<PerPrime> per_prime;
};
DihedralCaseValues dihedral_case_formulas(std::int64_t n);

/// Scan of the Theorem 3.3 necessary conditions. Odd n pass when all prime
/// exponents are equal and sigma(n) = (a+1)^{k-1}(a+3); even n = 2^m n'
/// (n' > 1) pass when exponents of n' are equal and
/// (2^{m+1}-1) sigma(n') = (2m+1)(a+1)^{k-1}(a+3). The even survivor n = 6
/// is excluded by the explicit D12 computation and is reported flagged.
struct MembershipScanResult {
    std::vector<std::int64_t> odd_survivors;
    std::vector<std::int64_t> even_survivors_excluded;
};
MembershipScanResult membership_condition_scan(std::int64_t bound);

} // namespace latcom

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "beta_arena/lattice.hpp"
#include "beta_arena/numeric.hpp"

namespace beta_arena {

using DigitSequence = std::vector<int>;

std::string to_string(std::span<const int> digits);

/// Real base b > 1 with its digit bound, quasi-greedy expansion of 1 and the
/// combinatorial constants i_b, K_b.
struct RealBase {
    double b = 2.0;
    int digit_max = 1;                  ///< s_b
    DigitSequence greedy_one;           ///< greedy expansion of 1 (finite if it terminates)
    bool greedy_one_terminates = false;
    DigitSequence c_period;             ///< one period of the quasi-greedy expansion when periodic
    DigitSequence c_prefix;             ///< quasi-greedy expansion to the stored depth
    int reliable_depth = 0;             ///< digits of c_prefix trusted in double precision
    std::optional<int> i_b;             ///< empty when undetermined at depth
    int K_b = 0;                        ///< exact if i_b is set, else the longest zero run observed
    int d_prime = 0;                    ///< minimal digit of the quasi-greedy expansion
    Tolerance tol;

    bool K_determined() const { return i_b.has_value(); }

    /// c_i, 1-based. Throws PreconditionError past the trusted depth of a non-periodic expansion.
    int c(int i) const;

    ExpansionSystem system(AmbiguityPolicy policy = AmbiguityPolicy::Throw) const;
};

/// Builds the base; `depth` is how many quasi-greedy digits to store.
RealBase make_real_base(double b, int depth = 64, Tolerance tol = {});

/// s_b = b - 1 for integer b, floor(b) otherwise.
int digit_bound(double b);

/// First n greedy digits of x in [0, 1).
DigitSequence digits(const RealBase& base, double x, int n,
                     AmbiguityPolicy policy = AmbiguityPolicy::Throw);

DigitSequence quasi_greedy_of_one(double b, int depth, Tolerance tol = {});

struct IKResult {
    std::optional<int> i_b;
    int K_b = 0;
};

/// i_b and K_b from the expansion of b - floor(b), looked at up to `depth` digits.
IKResult compute_iK(const RealBase& base, int depth);

/// sum a_k b^{-k}.
double block_value(std::span<const int> block, double b);

/// Lexicographic comparison of equal-length blocks (-1, 0, 1).
int lex_compare(std::span<const int> lhs, std::span<const int> rhs);

bool is_admissible(const RealBase& base, std::span<const int> block);

/// All admissible n-blocks in increasing lexicographic order.
std::vector<DigitSequence> enumerate_admissible(const RealBase& base, int n);

/// Membership of block (length k-1) in E_{k-1,d}. Throws PreconditionError if d > d'.
bool in_E(const RealBase& base, std::span<const int> block, int d);

struct CylinderInterval {
    DigitSequence block;  ///< length k, last digit = d
    double lo = 0.0;
    double hi = 0.0;
    bool full_length = false;
};

/// Intervals Delta(a d) making up V_k(b; d), sorted by lo. With a window only the
/// intervals meeting [window_lo, window_hi] are returned.
std::vector<CylinderInterval> cylinder_intervals(const RealBase& base, int d, int k);
std::vector<CylinderInterval> cylinder_intervals(const RealBase& base, int d, int k,
                                                 double window_lo, double window_hi);

/// Sup of Delta(a d) by bisection on agreement of the first k digits.
double cylinder_upper_end(const RealBase& base, std::span<const int> block_with_d);

}  // namespace beta_arena

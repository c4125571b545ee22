#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "beta_arena/numeric.hpp"

namespace beta_arena {

using Coords = std::array<double, 4>;
using LatticeCoords = std::array<std::int64_t, 4>;

/// Lattice Z eta_1 + ... + Z eta_m in R^m (m in {1, 2, 4}) together with the
/// half-open box fundamental domain { sum t_i eta_i : lo_i <= t_i < lo_i + 1 }.
class LatticeDomain {
public:
    /// Throws PreconditionError if the basis is singular or 0 is outside the box.
    LatticeDomain(int dim, std::array<Quaternion, 4> basis, std::array<double, 4> lo);

    /// Standard basis (1, i, j, k) truncated to `dim`, every offset equal to `lo`.
    static LatticeDomain standard(int dim, double lo);

    int dim() const { return dim_; }
    const std::array<Quaternion, 4>& basis() const { return basis_; }
    const std::array<double, 4>& lo() const { return lo_; }

    Coords coordinates(const Quaternion& z) const;
    Quaternion point(const Coords& t) const;
    Quaternion lattice_point(const LatticeCoords& n) const;

    /// Half-open membership with the given slack (in basis coordinates).
    bool contains(const Quaternion& z, double slack = 0.0) const;
    bool contains_closure(const Quaternion& z, double slack = 0.0) const;

    /// Euclidean distance from z to the nearest face hyperplane; negative outside.
    double boundary_distance(const Quaternion& z) const;

    /// Corners of the closure (2^dim points).
    std::vector<Quaternion> corners() const;

    /// Euclidean diameter of the box.
    double diameter() const;

    /// |det| of the basis matrix restricted to dim.
    double covolume() const;

    /// Projects z onto the closed box (coordinate clamp in basis coordinates).
    Quaternion clamp_closure(const Quaternion& z) const;

private:
    int dim_;
    std::array<Quaternion, 4> basis_;
    std::array<double, 4> lo_;
    std::array<std::array<double, 4>, 4> inverse_{};  // rows map R^4 to basis coordinates
    std::array<double, 4> row_norm_{};                 // |row_i| of inverse_
};

struct DigitStep {
    LatticeCoords digit_coords{};
    Quaternion digit;
    Quaternion remainder;
};

/// Radix + lattice domain: z -> radix * z - d(z) with d(z) the unique lattice point
/// putting the image back into the domain.
class ExpansionSystem {
public:
    ExpansionSystem(Quaternion radix, LatticeDomain domain, Tolerance tol = {},
                    AmbiguityPolicy policy = AmbiguityPolicy::Throw);

    const Quaternion& radix() const { return radix_; }
    const LatticeDomain& domain() const { return domain_; }
    const Tolerance& tolerance() const { return tol_; }
    AmbiguityPolicy policy() const { return policy_; }
    int dim() const { return domain_.dim(); }

    ExpansionSystem with_policy(AmbiguityPolicy policy) const;

    /// One step of the transformation. `step` is reported in ambiguity errors.
    DigitStep step(const Quaternion& z, int step = 1) const;

    /// First n digits of z; throws PreconditionError if z is outside the domain.
    std::vector<DigitStep> expand(const Quaternion& z, int n) const;

    /// sum_{k=1}^{n} radix^{-k} d_k.
    Quaternion reconstruct(std::span<const Quaternion> digits) const;

    /// Largest m <= max_depth such that every point of the ball B(center, radius)
    /// intersected with the domain shares the first m digits with the center.
    int resolved_depth(const Quaternion& center, double radius, int max_depth) const;

private:
    Quaternion radix_;
    LatticeDomain domain_;
    Tolerance tol_;
    AmbiguityPolicy policy_;
};

}  // namespace beta_arena

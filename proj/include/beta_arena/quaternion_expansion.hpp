#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "beta_arena/lattice.hpp"
#include "beta_arena/numeric.hpp"

namespace beta_arena {

using Matrix4 = std::array<std::array<double, 4>, 4>;

/// Isoclinic matrix of q/|q|; |q| M vec(x) = vec(q x).
Matrix4 isoclinic_matrix(const Quaternion& q);

Quaternion apply(const Matrix4& m, const Quaternion& x);

/// Lipschitz lattice (1, i, j, k) on [0, 1)^4.
LatticeDomain lipschitz_lattice();

/// Basis (1, i, j, k/2) on the unit box in basis coordinates: X = [0,1)^3 x [0,1/2).
LatticeDomain hurwitz_box_lattice();

/// Basis (1, conj(zeta), eta, conj(zeta) eta), offsets [-eps, 1 - eps).
LatticeDomain zeta_lattice(const Quaternion& zeta, const Quaternion& eta, double epsilon);

/// 2 eps (1, i, j, k) with X = [-eps, eps)^4.
LatticeDomain symmetric_lattice(double epsilon);

/// Lattice presets: lipschitz, hurwitz-box, zeta, symmetric:<eps>, basis:<16 reals>.
LatticeDomain lattice_preset(const std::string& name);

/// Sample uniformly from the fundamental domain.
Quaternion sample_domain(const LatticeDomain& domain, std::mt19937_64& rng);

/// How the denominator of the constants is formed.
enum class AnchorGap {
    Standard,   ///< |xi| - 2 rho, requires |xi| > 2 rho
    Symmetric,  ///< |xi|, requires |xi| > rho (anchor on the diagonal of a symmetric box)
};

struct DomainConstants {
    Quaternion xi_anchor;
    double rho = 0.0;
    double M_sup = 0.0;  ///< sup |z| over X
    double D_sup = 0.0;  ///< sup |xi - z| over X
    double C_X = 0.0;
    AnchorGap gap_kind = AnchorGap::Standard;

    double gap() const;
};

/// Throws PreconditionError if xi is not interior, the closed ball leaves X or the gap is not positive.
DomainConstants domain_constants(const LatticeDomain& L, const Quaternion& xi, double rho,
                                 AnchorGap gap_kind = AnchorGap::Standard);

struct LosingPreset {
    std::string name;
    LatticeDomain lattice;
    DomainConstants constants;
};

/// Worked-example presets: lipschitz, hurwitz-box, zeta, symmetric:<eps>, rotational:<|d|>.
LosingPreset losing_preset(const std::string& name);

/// rho solving 1 + 1/rho = (2 + |d|)/(1 - 2 rho) on the Lipschitz box.
double rotational_rho(double digit_norm);

struct COmegaResult {
    double weighted_sum_norm = 0.0;  ///< |sum q^{n-j} d_j|
    double theorem_constant = 0.0;   ///< C_X + C_X |sum|
    double refined_constant = 0.0;   ///< max(1 + D/rho, (M + |sum|)/gap)
    double q_norm_power = 0.0;       ///< |q|^n
    bool applicable = false;         ///< theorem_constant < |q|^n
};

COmegaResult C_Omega(const Quaternion& q, const std::vector<Quaternion>& omega, const DomainConstants& dc);

struct LosingParameters {
    double alpha_min = 0.0;  ///< inclusive
    double alpha_max = 1.0;  ///< exclusive
    double q_norm_power = 0.0;

    double beta(double alpha) const { return 1.0 / (q_norm_power * alpha); }
};

LosingParameters losing_parameters(double c_omega, double q_norm, int n);
LosingParameters losing_parameters(const Quaternion& q, const std::vector<Quaternion>& omega,
                                   const DomainConstants& dc);

/// Witness search: a sampled z whose expansion starts with the block.
std::optional<Quaternion> admissibility_witness(const ExpansionSystem& sys, const std::vector<Quaternion>& block,
                                                int samples, std::uint64_t seed);

}  // namespace beta_arena

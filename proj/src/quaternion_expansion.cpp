#include "beta_arena/quaternion_expansion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace beta_arena {

Matrix4 isoclinic_matrix(const Quaternion& q) {
    const double n = q.norm();
    if (n == 0.0) throw PreconditionError("isoclinic matrix of zero quaternion");
    const double a = q.a / n, b = q.b / n, c = q.c / n, d = q.d / n;
    return {{{a, -b, -c, -d}, {b, a, -d, c}, {c, d, a, -b}, {d, -c, b, a}}};
}

Quaternion apply(const Matrix4& m, const Quaternion& x) {
    Quaternion out;
    for (int r = 0; r < 4; ++r) {
        double s = 0.0;
        for (int c = 0; c < 4; ++c) s += m[r][c] * x[c];
        out[r] = s;
    }
    return out;
}

LatticeDomain lipschitz_lattice() { return LatticeDomain::standard(4, 0.0); }

LatticeDomain hurwitz_box_lattice() {
    return LatticeDomain(4, {Quaternion(1, 0, 0, 0), Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0), Quaternion(0, 0, 0, 0.5)},
                         {0.0, 0.0, 0.0, 0.0});
}

LatticeDomain zeta_lattice(const Quaternion& zeta, const Quaternion& eta, double epsilon) {
    if (zeta.b == 0.0 && zeta.c == 0.0 && zeta.d == 0.0) throw PreconditionError("zeta must be non-real");
    if (eta.a != 0.0) throw PreconditionError("eta must be purely imaginary");
    if (std::abs(eta.norm() - 1.0) > 1e-12) throw PreconditionError("eta must have norm 1");
    const double dot = zeta.a * eta.a + zeta.b * eta.b + zeta.c * eta.c + zeta.d * eta.d;
    if (std::abs(dot) > 1e-12) throw PreconditionError("eta must be orthogonal to zeta");
    if (!(epsilon >= 0.0 && epsilon < 1.0)) throw PreconditionError("epsilon must lie in [0, 1)");
    const Quaternion zb = zeta.conj();
    return LatticeDomain(4, {Quaternion(1), zb, eta, zb * eta}, {-epsilon, -epsilon, -epsilon, -epsilon});
}

LatticeDomain symmetric_lattice(double epsilon) {
    if (!(epsilon > 0.0)) throw PreconditionError("epsilon must be positive");
    const double s = 2.0 * epsilon;
    return LatticeDomain(4, {Quaternion(s, 0, 0, 0), Quaternion(0, s, 0, 0), Quaternion(0, 0, s, 0), Quaternion(0, 0, 0, s)},
                         {-0.5, -0.5, -0.5, -0.5});
}

namespace {

double parse_number(const std::string& text) {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw PreconditionError("malformed number: " + text);
    return v;
}

}  // namespace

LatticeDomain lattice_preset(const std::string& name) {
    if (name == "lipschitz") return lipschitz_lattice();
    if (name == "hurwitz-box") return hurwitz_box_lattice();
    if (name == "zeta") return zeta_lattice(Quaternion(0, 2, 0, 0), Quaternion(0, 0, 1, 0), 0.0);
    if (name.rfind("symmetric:", 0) == 0) return symmetric_lattice(parse_number(name.substr(10)));
    if (name.rfind("basis:", 0) == 0) {
        std::vector<double> v;
        std::stringstream ss(name.substr(6));
        std::string item;
        while (std::getline(ss, item, ',')) v.push_back(parse_number(item));
        if (v.size() != 16) throw PreconditionError("basis preset needs 16 comma-separated reals");
        std::array<Quaternion, 4> basis;
        for (int i = 0; i < 4; ++i) basis[i] = Quaternion(v[4 * i], v[4 * i + 1], v[4 * i + 2], v[4 * i + 3]);
        return LatticeDomain(4, basis, {0.0, 0.0, 0.0, 0.0});
    }
    throw PreconditionError("unknown lattice preset: " + name);
}

Quaternion sample_domain(const LatticeDomain& domain, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Coords t{};
    for (int i = 0; i < domain.dim(); ++i) t[i] = domain.lo()[i] + unit(rng);
    return domain.point(t);
}

double DomainConstants::gap() const {
    const double n = xi_anchor.norm();
    return gap_kind == AnchorGap::Standard ? n - 2.0 * rho : n;
}

DomainConstants domain_constants(const LatticeDomain& L, const Quaternion& xi, double rho, AnchorGap gap_kind) {
    if (!(rho > 0.0)) throw PreconditionError("rho must be positive");
    if (L.boundary_distance(xi) <= 0.0) throw PreconditionError("anchor must be interior to the domain");
    if (L.boundary_distance(xi) < rho - 1e-12) throw PreconditionError("closed ball around the anchor leaves the domain");
    DomainConstants dc;
    dc.xi_anchor = xi;
    dc.rho = rho;
    dc.gap_kind = gap_kind;
    if (gap_kind == AnchorGap::Standard && !(xi.norm() > 2.0 * rho))
        throw PreconditionError("|xi| must exceed 2 rho");
    if (gap_kind == AnchorGap::Symmetric && !(xi.norm() > rho)) throw PreconditionError("|xi| must exceed rho");
    for (const Quaternion& corner : L.corners()) {
        dc.M_sup = std::max(dc.M_sup, corner.norm());
        dc.D_sup = std::max(dc.D_sup, distance(corner, xi));
    }
    const double g = dc.gap();
    dc.C_X = std::max({1.0 + dc.D_sup / rho, dc.M_sup / g, 1.0 / g});
    return dc;
}

double rotational_rho(double digit_norm) {
    const double d = digit_norm;
    return (std::sqrt(d * d + 6.0 * d + 17.0) - d - 3.0) / 4.0;
}

LosingPreset losing_preset(const std::string& name) {
    if (name == "lipschitz") {
        auto L = lipschitz_lattice();
        return {name, L, domain_constants(L, Quaternion(0.5, 0.5, 0.5, 0.5), 0.4)};
    }
    if (name == "hurwitz-box") {
        auto L = hurwitz_box_lattice();
        return {name, L, domain_constants(L, Quaternion(0.5, 0.5, 0.5, 0.25), 0.25)};
    }
    if (name == "zeta") {
        auto L = lattice_preset("zeta");
        const Quaternion xi = 0.5 * (L.basis()[0] + L.basis()[1] + L.basis()[2] + L.basis()[3]);
        // rho balancing 1 + D/rho against M/(|xi| - 2 rho).
        double M = 0.0, D = 0.0;
        for (const auto& corner : L.corners()) M = std::max(M, corner.norm()), D = std::max(D, distance(corner, xi));
        const double g = xi.norm();
        const double lin = M + 2.0 * D - g;
        const double rho = (-lin + std::sqrt(lin * lin + 8.0 * D * g)) / 4.0;
        return {name, L, domain_constants(L, xi, rho)};
    }
    if (name.rfind("symmetric:", 0) == 0) {
        const double eps = parse_number(name.substr(10));
        auto L = symmetric_lattice(eps);
        const double tau = 0.4 * eps;
        return {name, L, domain_constants(L, Quaternion(tau, tau, tau, tau), tau, AnchorGap::Symmetric)};
    }
    if (name.rfind("rotational:", 0) == 0) {
        const double d = parse_number(name.substr(11));
        auto L = lipschitz_lattice();
        return {name, L, domain_constants(L, Quaternion(0.5, 0.5, 0.5, 0.5), rotational_rho(d))};
    }
    throw PreconditionError("unknown losing preset: " + name);
}

COmegaResult C_Omega(const Quaternion& q, const std::vector<Quaternion>& omega, const DomainConstants& dc) {
    if (omega.empty()) throw PreconditionError("block must be nonempty");
    Quaternion sum;
    for (const Quaternion& d : omega) sum = q * sum + d;  // sum_j q^{n-j} d_j
    COmegaResult r;
    r.weighted_sum_norm = sum.norm();
    r.theorem_constant = dc.C_X + dc.C_X * r.weighted_sum_norm;
    r.refined_constant = std::max(1.0 + dc.D_sup / dc.rho, (dc.M_sup + r.weighted_sum_norm) / dc.gap());
    r.q_norm_power = std::pow(q.norm(), static_cast<double>(omega.size()));
    r.applicable = r.theorem_constant < r.q_norm_power;
    return r;
}

LosingParameters losing_parameters(double c_omega, double q_norm, int n) {
    if (n < 1) throw PreconditionError("block length must be >= 1");
    const double qn = std::pow(q_norm, n);
    if (!(c_omega < qn)) throw PreconditionError("theorem inapplicable: C_Omega >= |q|^n");
    return {std::max(c_omega, 1.0) / qn, 1.0, qn};
}

LosingParameters losing_parameters(const Quaternion& q, const std::vector<Quaternion>& omega,
                                   const DomainConstants& dc) {
    const COmegaResult c = C_Omega(q, omega, dc);
    return losing_parameters(c.theorem_constant, q.norm(), static_cast<int>(omega.size()));
}

std::optional<Quaternion> admissibility_witness(const ExpansionSystem& sys, const std::vector<Quaternion>& block,
                                                int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const ExpansionSystem nudged = sys.with_policy(AmbiguityPolicy::NudgeInward);
    const int n = static_cast<int>(block.size());
    for (int s = 0; s < samples; ++s) {
        const Quaternion z = sample_domain(sys.domain(), rng);
        const auto steps = nudged.expand(z, n);
        bool match = true;
        for (int j = 0; j < n && match; ++j) match = distance(steps[j].digit, block[j]) < 1e-9;
        if (match) return z;
    }
    return std::nullopt;
}

}  // namespace beta_arena

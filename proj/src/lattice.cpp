#include "beta_arena/lattice.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <limits>

namespace beta_arena {

namespace {

Eigen::Matrix4d basis_matrix(int dim, const std::array<Quaternion, 4>& basis) {
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    for (int col = 0; col < dim; ++col)
        for (int row = 0; row < 4; ++row) m(row, col) = basis[col][row];
    return m;
}

}  // namespace

LatticeDomain::LatticeDomain(int dim, std::array<Quaternion, 4> basis, std::array<double, 4> lo)
    : dim_(dim), basis_(basis), lo_(lo) {
    if (dim != 1 && dim != 2 && dim != 4) throw PreconditionError("lattice dimension must be 1, 2 or 4");
    for (int i = dim; i < 4; ++i) {
        Quaternion e;
        e[i] = 1.0;
        basis_[i] = e;
        lo_[i] = 0.0;
    }
    for (int i = 0; i < dim; ++i)
        for (int row = dim; row < 4; ++row)
            if (basis_[i][row] != 0.0)
                throw PreconditionError("basis vector leaves the first " + std::to_string(dim) + " components");

    const Eigen::Matrix4d m = basis_matrix(dim, basis_);
    const Eigen::Matrix4d gram = m.transpose() * m;
    double scale = 1.0;
    for (int i = 0; i < dim; ++i) scale *= gram(i, i);
    if (std::abs(gram.determinant()) <= 1e-12 * scale) throw PreconditionError("lattice basis is singular");

    const Eigen::Matrix4d inv = m.inverse();
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) inverse_[r][c] = inv(r, c);
        row_norm_[r] = inv.row(r).norm();
    }
    for (int i = 0; i < dim; ++i)
        if (!(lo_[i] <= 0.0 && 0.0 < lo_[i] + 1.0))
            throw PreconditionError("0 must lie in the fundamental domain");
}

LatticeDomain LatticeDomain::standard(int dim, double lo) {
    return LatticeDomain(dim, {Quaternion(1, 0, 0, 0), Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0), Quaternion(0, 0, 0, 1)},
                         {lo, lo, lo, lo});
}

Coords LatticeDomain::coordinates(const Quaternion& z) const {
    Coords t{};
    for (int r = 0; r < 4; ++r) {
        double s = 0.0;
        for (int c = 0; c < 4; ++c) s += inverse_[r][c] * z[c];
        t[r] = s;
    }
    // Orthonormal-axis bases keep exact values exact.
    for (int r = 0; r < 4; ++r) {
        int nonzero = 0, col = -1;
        for (int c = 0; c < 4; ++c)
            if (inverse_[r][c] != 0.0) ++nonzero, col = c;
        if (nonzero == 1) t[r] = z[col] * inverse_[r][col];
    }
    return t;
}

Quaternion LatticeDomain::point(const Coords& t) const {
    Quaternion z;
    for (int i = 0; i < 4; ++i) z += t[i] * basis_[i];
    return z;
}

Quaternion LatticeDomain::lattice_point(const LatticeCoords& n) const {
    Quaternion z;
    for (int i = 0; i < dim_; ++i) z += static_cast<double>(n[i]) * basis_[i];
    return z;
}

bool LatticeDomain::contains(const Quaternion& z, double slack) const {
    const Coords t = coordinates(z);
    for (int i = 0; i < dim_; ++i)
        if (t[i] < lo_[i] - slack || t[i] >= lo_[i] + 1.0 + slack) return false;
    for (int i = dim_; i < 4; ++i)
        if (std::abs(z[i]) > slack) return false;
    return true;
}

bool LatticeDomain::contains_closure(const Quaternion& z, double slack) const {
    const Coords t = coordinates(z);
    for (int i = 0; i < dim_; ++i)
        if (t[i] < lo_[i] - slack || t[i] > lo_[i] + 1.0 + slack) return false;
    for (int i = dim_; i < 4; ++i)
        if (std::abs(z[i]) > slack) return false;
    return true;
}

double LatticeDomain::boundary_distance(const Quaternion& z) const {
    const Coords t = coordinates(z);
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < dim_; ++i) {
        const double low = (t[i] - lo_[i]) / row_norm_[i];
        const double high = (lo_[i] + 1.0 - t[i]) / row_norm_[i];
        best = std::min({best, low, high});
    }
    return best;
}

std::vector<Quaternion> LatticeDomain::corners() const {
    std::vector<Quaternion> out;
    const int count = 1 << dim_;
    out.reserve(count);
    for (int mask = 0; mask < count; ++mask) {
        Coords t{};
        for (int i = 0; i < dim_; ++i) t[i] = lo_[i] + ((mask >> i) & 1);
        out.push_back(point(t));
    }
    return out;
}

double LatticeDomain::diameter() const {
    const auto cs = corners();
    double best = 0.0;
    for (const auto& p : cs)
        for (const auto& q : cs) best = std::max(best, distance(p, q));
    return best;
}

double LatticeDomain::covolume() const { return std::abs(basis_matrix(dim_, basis_).determinant()); }

Quaternion LatticeDomain::clamp_closure(const Quaternion& z) const {
    Coords t = coordinates(z);
    for (int i = 0; i < dim_; ++i) t[i] = std::clamp(t[i], lo_[i], lo_[i] + 1.0);
    for (int i = dim_; i < 4; ++i) t[i] = 0.0;
    return point(t);
}

ExpansionSystem::ExpansionSystem(Quaternion radix, LatticeDomain domain, Tolerance tol, AmbiguityPolicy policy)
    : radix_(radix), domain_(std::move(domain)), tol_(tol), policy_(policy) {
    tol_.validate();
    if (radix_.norm() <= 1.0) throw PreconditionError("radix must have modulus > 1");
    for (int i = domain_.dim(); i < 4; ++i)
        if (radix_[i] != 0.0) throw PreconditionError("radix leaves the domain's dimension");
}

ExpansionSystem ExpansionSystem::with_policy(AmbiguityPolicy policy) const {
    return ExpansionSystem(radix_, domain_, tol_, policy);
}

DigitStep ExpansionSystem::step(const Quaternion& z, int step) const {
    const Quaternion w = radix_ * z;
    Coords t = domain_.coordinates(w);
    DigitStep out;
    for (int i = 0; i < domain_.dim(); ++i) {
        const CoordinateFloor f = digit_floor(t[i] - domain_.lo()[i], tol_, policy_, step);
        out.digit_coords[i] = f.n;
        t[i] = domain_.lo()[i] + f.fraction;
    }
    for (int i = domain_.dim(); i < 4; ++i) t[i] = 0.0;
    out.digit = domain_.lattice_point(out.digit_coords);
    out.remainder = domain_.point(t);
    return out;
}

std::vector<DigitStep> ExpansionSystem::expand(const Quaternion& z, int n) const {
    if (n < 1) throw PreconditionError("digit count must be >= 1");
    if (!domain_.contains(z)) throw PreconditionError("point outside the fundamental domain");
    std::vector<DigitStep> out;
    out.reserve(n);
    Quaternion cur = z;
    for (int k = 1; k <= n; ++k) {
        out.push_back(step(cur, k));
        cur = out.back().remainder;
    }
    return out;
}

Quaternion ExpansionSystem::reconstruct(std::span<const Quaternion> digits) const {
    const Quaternion inv = radix_.inverse();
    Quaternion acc;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) acc = inv * (*it + acc);
    return acc;
}

int ExpansionSystem::resolved_depth(const Quaternion& center, double radius, int max_depth) const {
    const double q = radix_.norm();
    const double scale = std::max(1.0, center.norm());
    double r = radius + 8.0 * std::numeric_limits<double>::epsilon() * scale;
    Quaternion cur = center;
    // Points outside the domain do not belong to the play space; only later images matter.
    if (!domain_.contains_closure(center, 1e-12)) return 0;
    ExpansionSystem nudged = with_policy(AmbiguityPolicy::NudgeInward);
    for (int k = 1; k <= max_depth; ++k) {
        const DigitStep s = nudged.step(cur, k);
        r *= q;
        if (domain_.boundary_distance(s.remainder) <= r) return k - 1;
        cur = s.remainder;
        r += 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, cur.norm());
    }
    return max_depth;
}

}  // namespace beta_arena

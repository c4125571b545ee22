#include "beta_arena/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace beta_arena {

std::string to_string(Player p) { return p == Player::Alice ? "alice" : "bob"; }

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Verified: return "verified";
        case Verdict::Falsified: return "falsified";
        case Verdict::Indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

void GameParams::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) throw PreconditionError("alpha must lie in (0, 1)");
    if (!(beta > 0.0 && beta < 1.0)) throw PreconditionError("beta must lie in (0, 1)");
    if (!(rho > 0.0)) throw PreconditionError("rho must be positive");
    if (dim != 1 && dim != 2 && dim != 4) throw PreconditionError("dimension must be 1, 2 or 4");
}

double GameParams::radius(int n) const { return rho * std::pow(alpha * beta, n); }

const Quaternion& GameView::bob_center(int n) const { return moves.at(2 * n).center; }
const Quaternion& GameView::alice_center(int n) const { return moves.at(2 * n - 1).center; }

Quaternion Strategy::initial_center(const GameView&) {
    throw PreconditionError(name() + " cannot open the game");
}

double legality_slack(const GameParams& params, int round, const Quaternion& p, const Quaternion& q,
                      const Tolerance& tol) {
    const double scale = std::max({1.0, p.norm(), q.norm()});
    return tol.eps_cmp * params.radius(round - 1) + 16.0 * std::numeric_limits<double>::epsilon() * scale;
}

namespace {

constexpr double kSpaceSlack = 1e-12;

bool alice_legal(const GameParams& params, int n, const Quaternion& x_prev, const Quaternion& y, const Tolerance& tol) {
    const double prev = params.radius(n - 1);
    return distance(x_prev, y) + params.alpha * prev <= prev + legality_slack(params, n, x_prev, y, tol);
}

bool bob_legal(const GameParams& params, int n, const Quaternion& y, const Quaternion& x, const Tolerance& tol) {
    return distance(y, x) + params.radius(n) <= params.alpha * params.radius(n - 1) + legality_slack(params, n, y, x, tol);
}

bool finite(const Quaternion& q) {
    return std::isfinite(q.a) && std::isfinite(q.b) && std::isfinite(q.c) && std::isfinite(q.d);
}

}  // namespace

GameTrace play(const GameParams& params, const LatticeDomain& space, Strategy& alice, Strategy& bob,
               const PlayOptions& options) {
    params.validate();
    if (space.dim() != params.dim) throw PreconditionError("strategy space dimension differs from the game");
    GameTrace trace;
    trace.params = params;
    trace.alice = alice.name();
    trace.bob = bob.name();

    auto request = [&](Strategy& s, Player who, int round, bool opening) -> std::optional<Quaternion> {
        GameView view{params, space, trace.moves, round};
        try {
            return opening ? s.initial_center(view) : s.next_center(view);
        } catch (const std::exception& e) {
            trace.aborted_by = who;
            trace.abort_reason = e.what();
            return std::nullopt;
        }
    };
    auto reject = [&](Player who, int round, const Quaternion& c, double radius, const std::string& why) {
        trace.moves.push_back({who, round, c, radius, false});
        trace.aborted_by = who;
        trace.abort_reason = why;
    };

    const auto x0 = request(bob, Player::Bob, 0, true);
    if (!x0) return trace;
    if (!finite(*x0) || !space.contains_closure(*x0, kSpaceSlack)) {
        reject(Player::Bob, 0, *x0, params.rho, "starting center outside the play space");
        return trace;
    }
    trace.moves.push_back({Player::Bob, 0, *x0, params.rho, true});

    for (int n = 1; n <= options.max_rounds; ++n) {
        const double alice_radius = params.alpha * params.radius(n - 1);
        const auto y = request(alice, Player::Alice, n, false);
        if (!y) return trace;
        const Quaternion& x_prev = trace.moves.back().center;
        if (!finite(*y) || !space.contains_closure(*y, kSpaceSlack)) {
            reject(Player::Alice, n, *y, alice_radius, "center outside the play space");
            return trace;
        }
        if (!alice_legal(params, n, x_prev, *y, options.tol)) {
            reject(Player::Alice, n, *y, alice_radius, "ball not inside Bob's previous ball");
            return trace;
        }
        trace.moves.push_back({Player::Alice, n, *y, alice_radius, true});

        const auto x = request(bob, Player::Bob, n, false);
        if (!x) return trace;
        if (!finite(*x) || !space.contains_closure(*x, kSpaceSlack)) {
            reject(Player::Bob, n, *x, params.radius(n), "center outside the play space");
            return trace;
        }
        if (!bob_legal(params, n, *y, *x, options.tol)) {
            reject(Player::Bob, n, *x, params.radius(n), "ball not inside Alice's previous ball");
            return trace;
        }
        trace.moves.push_back({Player::Bob, n, *x, params.radius(n), true});
        if (params.radius(n) < options.min_radius) break;
    }
    return trace;
}

AuditResult audit_trace(const GameTrace& trace, const LatticeDomain& space, const Tolerance& tol) {
    const GameParams& p = trace.params;
    if (trace.moves.empty()) return {false, -1, "empty trace"};
    for (std::size_t i = 0; i < trace.moves.size(); ++i) {
        const Move& m = trace.moves[i];
        const int idx = static_cast<int>(i);
        const bool bob_turn = i % 2 == 0;
        const int round = static_cast<int>((i + 1) / 2);
        if ((m.player == Player::Bob) != bob_turn || m.round != round) return {false, idx, "turn order broken"};
        const double expected = bob_turn ? p.radius(round) : p.alpha * p.radius(round - 1);
        if (std::abs(m.radius - expected) > 1e-12 * expected) return {false, idx, "radius differs from the schedule"};
        if (!m.legal) {
            if (trace.aborted_by && i + 1 == trace.moves.size()) continue;  // recorded rejection
            return {false, idx, "accepted move flagged illegal"};
        }
        if (!space.contains_closure(m.center, kSpaceSlack)) return {false, idx, "center outside the play space"};
        if (i == 0) continue;
        const Move& prev = trace.moves[i - 1];
        const double slack = legality_slack(p, round, prev.center, m.center, tol);
        if (bob_turn ? !bob_legal(p, round, prev.center, m.center, tol)
                     : !alice_legal(p, round, prev.center, m.center, tol))
            return {false, idx, "legality inequality violated"};
        // Nesting of consecutive balls.
        if (distance(prev.center, m.center) + m.radius > prev.radius + slack) return {false, idx, "balls not nested"};
    }
    return {};
}

Claim Claim::contains_digit(const Quaternion& d, int max_position) {
    Claim c;
    c.kind = Kind::ContainsDigit;
    c.block = {d};
    c.max_position = max_position;
    return c;
}

Claim Claim::digit_at(const Quaternion& d, int position) {
    Claim c = contains_digit(d, position);
    c.kind = Kind::DigitAt;
    return c;
}

Claim Claim::avoids_block(std::vector<Quaternion> block, int stride) {
    Claim c;
    c.kind = Kind::AvoidsBlock;
    c.block = std::move(block);
    c.stride = std::max(1, stride);
    return c;
}

VerifyResult verify_outcome(const GameTrace& trace, const ExpansionSystem& system, const Claim& claim, int m) {
    VerifyResult out;
    if (trace.moves.empty() || trace.aborted_by) {
        out.detail = "game did not complete";
        return out;
    }
    const Quaternion center = system.domain().clamp_closure(trace.outcome());
    const int depth = claim.kind == Claim::Kind::AvoidsBlock ? m : std::min(m, claim.max_position);
    Quaternion start = center;
    if (!system.domain().contains(start)) {
        out.detail = "outcome estimate on an excluded face of the domain";
        return out;
    }
    out.resolved_depth = system.resolved_depth(start, trace.outcome_radius(), depth);
    const auto steps = system.with_policy(AmbiguityPolicy::NudgeInward).expand(start, std::max(1, depth));
    for (const auto& s : steps) out.digits.push_back(s.digit);
    auto same = [](const Quaternion& a, const Quaternion& b) { return distance(a, b) < 1e-9; };

    if (claim.kind == Claim::Kind::DigitAt) {
        if (out.resolved_depth < claim.max_position) {
            out.detail = "final ball straddles a digit boundary";
            return out;
        }
        const bool hit = same(out.digits[claim.max_position - 1], claim.block.front());
        out.verdict = hit ? Verdict::Verified : Verdict::Falsified;
        out.position = hit ? claim.max_position : 0;
        if (!hit) out.detail = "digit differs at the claimed position";
        return out;
    }
    if (claim.kind == Claim::Kind::ContainsDigit) {
        for (int p = 1; p <= out.resolved_depth; ++p)
            if (same(out.digits[p - 1], claim.block.front())) {
                out.verdict = Verdict::Verified;
                out.position = p;
                return out;
            }
        out.verdict = out.resolved_depth >= depth ? Verdict::Falsified : Verdict::Indeterminate;
        out.detail = out.verdict == Verdict::Falsified ? "digit absent from the resolved prefix"
                                                       : "final ball straddles a digit boundary";
        return out;
    }

    const int len = static_cast<int>(claim.block.size());
    for (int start_pos = 1; start_pos + len - 1 <= out.resolved_depth; start_pos += claim.stride) {
        bool match = true;
        for (int j = 0; j < len && match; ++j) match = same(out.digits[start_pos - 1 + j], claim.block[j]);
        if (match) {
            out.verdict = Verdict::Falsified;
            out.position = start_pos;
            out.detail = "avoided block occurs";
            return out;
        }
    }
    out.verdict = out.resolved_depth >= depth ? Verdict::Verified : Verdict::Indeterminate;
    if (out.verdict == Verdict::Indeterminate) out.detail = "final ball straddles a digit boundary";
    return out;
}

}  // namespace beta_arena

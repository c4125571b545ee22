#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "beta_arena/lattice.hpp"
#include "beta_arena/numeric.hpp"

namespace beta_arena {

enum class Player { Alice, Bob };

std::string to_string(Player p);

struct GameParams {
    double alpha = 0.5;
    double beta = 0.5;
    double rho = 1.0;
    int dim = 1;

    void validate() const;
    /// rho_n = (alpha beta)^n rho.
    double radius(int n) const;
};

struct Move {
    Player player = Player::Bob;
    int round = 0;  ///< Bob's initial ball is round 0; Alice's A_n and Bob's B_n share round n
    Quaternion center;
    double radius = 0.0;
    bool legal = true;
};

/// Read-only view of the game handed to strategies.
struct GameView {
    const GameParams& params;
    const LatticeDomain& space;
    const std::vector<Move>& moves;
    int round = 0;  ///< round of the move being requested

    /// Bob's center x_n (n = 0 is the starting ball).
    const Quaternion& bob_center(int n) const;
    /// Alice's center y_n, n >= 1.
    const Quaternion& alice_center(int n) const;
};

class Strategy {
public:
    virtual ~Strategy() = default;
    virtual std::string name() const = 0;
    /// Bob only: center of the starting ball.
    virtual Quaternion initial_center(const GameView& view);
    virtual Quaternion next_center(const GameView& view) = 0;
};

struct GameTrace {
    GameParams params;
    std::string alice;
    std::string bob;
    std::vector<Move> moves;
    std::optional<Player> aborted_by;
    std::string abort_reason;

    Quaternion outcome() const { return moves.back().center; }
    double outcome_radius() const { return moves.back().radius; }
    int rounds() const { return moves.empty() ? 0 : moves.back().round; }
};

struct PlayOptions {
    int max_rounds = 60;
    double min_radius = 1e-13;  ///< stop once Bob's radius drops below this
    Tolerance tol;
};

/// Plays alternating moves inside the closure of `space`, validating every move.
/// An illegal move or a strategy failure ends the game with attribution.
GameTrace play(const GameParams& params, const LatticeDomain& space, Strategy& alice, Strategy& bob,
               const PlayOptions& options = {});

/// Slack used for the legality inequalities at round n.
double legality_slack(const GameParams& params, int round, const Quaternion& p, const Quaternion& q,
                      const Tolerance& tol);

struct AuditResult {
    bool ok = true;
    int bad_move = -1;
    std::string reason;
};

/// Re-verifies every recorded move from the raw trace: radii, legality, nesting, space.
AuditResult audit_trace(const GameTrace& trace, const LatticeDomain& space, const Tolerance& tol = {});

struct Claim {
    enum class Kind { ContainsDigit, DigitAt, AvoidsBlock };
    Kind kind = Kind::ContainsDigit;
    std::vector<Quaternion> block;  ///< one digit for ContainsDigit
    int max_position = 0;           ///< ContainsDigit: digit must appear at a position <= this; DigitAt: at this position
    int stride = 1;                 ///< AvoidsBlock: only occurrences starting at 1 + stride * j count

    static Claim contains_digit(const Quaternion& d, int max_position);
    static Claim digit_at(const Quaternion& d, int position);
    static Claim avoids_block(std::vector<Quaternion> block, int stride);
};

enum class Verdict { Verified, Falsified, Indeterminate };

std::string to_string(Verdict v);

struct VerifyResult {
    Verdict verdict = Verdict::Indeterminate;
    int resolved_depth = 0;
    std::vector<Quaternion> digits;  ///< digits of the outcome estimate up to the checked depth
    int position = 0;                ///< where the digit/block was found (1-based), 0 if not
    std::string detail;
};

VerifyResult verify_outcome(const GameTrace& trace, const ExpansionSystem& system, const Claim& claim, int m);

}  // namespace beta_arena

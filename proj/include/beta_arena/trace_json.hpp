#pragma once

#include <cstdint>
#include <optional>

#include <json.hpp>

#include "beta_arena/game.hpp"

namespace beta_arena {

/// Params, per-move {player, round, center, radius, legal}, abort attribution and seed.
nlohmann::ordered_json trace_to_json(const GameTrace& trace, std::uint64_t seed);

nlohmann::ordered_json quaternion_to_json(const Quaternion& q, int dim);

nlohmann::ordered_json verify_to_json(const VerifyResult& result, int dim);

}  // namespace beta_arena

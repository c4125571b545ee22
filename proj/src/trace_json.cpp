#include "beta_arena/trace_json.hpp"

namespace beta_arena {

nlohmann::ordered_json quaternion_to_json(const Quaternion& q, int dim) {
    auto out = nlohmann::ordered_json::array();
    for (int i = 0; i < dim; ++i) out.push_back(q[i]);
    return out;
}

nlohmann::ordered_json trace_to_json(const GameTrace& trace, std::uint64_t seed) {
    const int dim = trace.params.dim;
    nlohmann::ordered_json j;
    j["params"] = {{"alpha", trace.params.alpha},
                   {"beta", trace.params.beta},
                   {"rho", trace.params.rho},
                   {"dimension", dim}};
    j["alice"] = trace.alice;
    j["bob"] = trace.bob;
    j["seed"] = seed;
    auto moves = nlohmann::ordered_json::array();
    for (const Move& m : trace.moves)
        moves.push_back({{"player", to_string(m.player)},
                         {"round", m.round},
                         {"center", quaternion_to_json(m.center, dim)},
                         {"radius", m.radius},
                         {"legal", m.legal}});
    j["moves"] = std::move(moves);
    if (trace.aborted_by) {
        j["aborted_by"] = to_string(*trace.aborted_by);
        j["abort_reason"] = trace.abort_reason;
    } else {
        j["aborted_by"] = nullptr;
    }
    if (!trace.moves.empty()) {
        j["outcome"] = {{"center", quaternion_to_json(trace.outcome(), dim)}, {"radius", trace.outcome_radius()}};
    }
    return j;
}

nlohmann::ordered_json verify_to_json(const VerifyResult& result, int dim) {
    nlohmann::ordered_json j;
    j["verdict"] = to_string(result.verdict);
    j["resolved_depth"] = result.resolved_depth;
    auto digits = nlohmann::ordered_json::array();
    for (const Quaternion& d : result.digits) digits.push_back(quaternion_to_json(d, dim));
    j["digits"] = std::move(digits);
    j["position"] = result.position;
    j["detail"] = result.detail;
    return j;
}

}  // namespace beta_arena

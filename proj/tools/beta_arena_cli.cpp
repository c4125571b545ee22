#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "beta_arena/complex_expansion.hpp"
#include "beta_arena/game.hpp"
#include "beta_arena/quaternion_expansion.hpp"
#include "beta_arena/real_expansion.hpp"
#include "beta_arena/strategies.hpp"
#include "beta_arena/thresholds.hpp"
#include "beta_arena/trace_json.hpp"

using namespace beta_arena;
using json = nlohmann::ordered_json;

namespace {

enum ExitCode { kOk = 0, kError = 1, kFalsified = 2, kIndeterminate = 3, kIllegal = 4 };

Tolerance tolerance_from_env() {
    Tolerance tol;
    if (const char* eps = std::getenv("BETA_ARENA_EPS")) {
        tol.eps_floor = std::stod(eps);
        tol.eps_cmp = std::min(tol.eps_cmp, 1e-3 * tol.eps_floor);
    }
    tol.validate();
    return tol;
}

double parse_real(const std::string& text) {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw PreconditionError("malformed number: " + text);
    return v;
}

/// golden, silver, phi:<j>, cubic or a decimal.
double parse_base(const std::string& text) {
    if (text == "golden") return metallic_mean(1);
    if (text == "silver") return metallic_mean(2);
    if (text == "cubic") return tribonacci_like_base();
    if (text.rfind("phi:", 0) == 0) return metallic_mean(std::stoi(text.substr(4)));
    return parse_real(text);
}

struct Grid {
    double lo = 0.0, step = 1.0;
    int count = 1;
    double at(int i) const { return lo + i * step; }
};

/// lo:hi:step, or a single value.
Grid parse_grid(const std::string& text) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(parse_real(item));
    if (parts.size() == 1) return {parts[0], 1.0, 1};
    if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0]) throw PreconditionError("malformed grid: " + text);
    const int count = static_cast<int>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9)) + 1;
    return {parts[0], parts[2], count};
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

/// Fills rows[i] = make(i) using all hardware threads; output order is the index order.
std::vector<std::string> parallel_rows(int count, const std::function<std::string(int)>& make) {
    std::vector<std::string> rows(count);
    const int workers = std::max(1u, std::min(16u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (int i = w; i < count; i += workers) rows[i] = make(i);
        });
    for (auto& t : pool) t.join();
    return rows;
}

void emit_csv(std::ostream& out, const std::string& header, const std::vector<std::string>& rows) {
    out << header << '\n';
    for (const auto& r : rows) out << r << '\n';
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

Quaternion from_values(const std::vector<double>& v) {
    Quaternion q;
    for (std::size_t i = 0; i < v.size() && i < 4; ++i) q[static_cast<int>(i)] = v[i];
    return q;
}

// ---------------------------------------------------------------- expand

struct ExpandArgs {
    std::string real_base;
    std::vector<double> complex_base;
    std::vector<double> quat_base;
    std::string lattice = "lipschitz";
    std::string domain = "unit";
    double x = 0.0;
    std::vector<double> z;
    int n = 10;
    std::string format = "text";
    bool nudge = false;
};

int cmd_expand(const ExpandArgs& args, const Tolerance& tol) {
    const AmbiguityPolicy policy = args.nudge ? AmbiguityPolicy::NudgeInward : AmbiguityPolicy::Throw;
    int dim = 1;
    std::optional<ExpansionSystem> sys;
    Quaternion point;
    if (!args.real_base.empty()) {
        sys = make_real_base(parse_base(args.real_base), 64, tol).system(policy);
        point = Quaternion(args.x);
    } else if (!args.complex_base.empty()) {
        if (args.domain != "unit" && args.domain != "centered") throw PreconditionError("domain must be unit or centered");
        dim = 2;
        sys = complex_system(args.complex_base[0], args.complex_base[1], args.domain == "unit" ? 0.0 : -0.5, tol, policy);
        if (args.z.size() != 2) throw PreconditionError("--z needs two coordinates for a complex base");
        point = from_values(args.z);
    } else if (!args.quat_base.empty()) {
        dim = 4;
        sys = ExpansionSystem(from_values(args.quat_base), lattice_preset(args.lattice), tol, policy);
        if (args.z.size() != 4) throw PreconditionError("--z needs four coordinates for a quaternion base");
        point = from_values(args.z);
    } else {
        throw PreconditionError("one of --real, --complex, --quat is required");
    }
    if (args.n < 1) throw PreconditionError("--n must be >= 1");
    const auto steps = sys->expand(point, args.n);
    std::vector<Quaternion> digits;
    for (const auto& s : steps) digits.push_back(s.digit);
    const double error = distance(sys->reconstruct(digits), point);
    if (args.format == "json") {
        json j;
        j["radix"] = quaternion_to_json(sys->radix(), dim);
        j["point"] = quaternion_to_json(point, dim);
        auto arr = json::array();
        for (const auto& d : digits) arr.push_back(quaternion_to_json(d, dim));
        j["digits"] = std::move(arr);
        j["reconstruction_error"] = error;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "digits:";
        for (const auto& d : digits) std::cout << ' ' << to_string(d, dim);
        std::cout << "\nreconstruction_error: " << fmt(error) << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------- admissible

int cmd_admissible(const std::string& base_text, int n, const std::string& format, const Tolerance& tol) {
    const RealBase base = make_real_base(parse_base(base_text), 64, tol);
    const auto blocks = enumerate_admissible(base, n);
    if (format == "json") {
        json j;
        j["b"] = base.b;
        j["n"] = n;
        j["count"] = blocks.size();
        auto arr = json::array();
        for (const auto& b : blocks) arr.push_back(b);
        j["blocks"] = std::move(arr);
        std::cout << j.dump(2) << '\n';
    } else {
        for (const auto& b : blocks) {
            for (int d : b) std::cout << d;
            std::cout << '\n';
        }
    }
    return kOk;
}

// ---------------------------------------------------------------- regions

struct RegionsArgs {
    std::string curve;
    std::string base = "golden";
    int K = -1;
    double r = 4.5;
    std::string alpha = "0.01:0.3:0.005";
    bool G = false;
    double theta = 0.0;
    int cap = 10;
    bool figure2 = false;
    bool square = false;
    std::string r_grid = "1.01:12:0.055";
    std::string theta_grid = "0:0.785398163397:0.016";
    std::string format = "csv";
    std::string out;
};

int base_K(const RealBase& base, int requested) {
    if (requested >= 0) return requested;
    if (!base.K_determined()) throw PreconditionError("K_b undetermined for this base; pass --K");
    return base.K_b;
}

std::string A_row(double b, int K, double alpha, const Tolerance& tol) {
    try {
        return fmt(b) + ',' + std::to_string(K) + ',' + fmt(alpha) + ',' + fmt(A_threshold(b, K, alpha, tol)) + ",0";
    } catch (const PreconditionError&) {
        return fmt(b) + ',' + std::to_string(K) + ',' + fmt(alpha) + ",,1";
    }
}

int cmd_regions(const RegionsArgs& args, const Tolerance& tol) {
    Output out(args.out);
    std::ostream& os = out.stream();
    const Grid alpha = parse_grid(args.alpha);
    if (args.G) {
        const auto intervals = G_region(args.theta, args.cap);
        if (args.format == "json") {
            json j;
            j["theta"] = args.theta;
            auto arr = json::array();
            for (const auto& iv : intervals) arr.push_back({{"N", iv.N}, {"v", iv.v}, {"u", iv.u}});
            j["intervals"] = std::move(arr);
            os << j.dump(2) << '\n';
        } else {
            std::vector<std::string> rows;
            for (const auto& iv : intervals) rows.push_back(std::to_string(iv.N) + ',' + fmt(iv.v) + ',' + fmt(iv.u));
            emit_csv(os, "N,v_open,u_closed", rows);
        }
        return kOk;
    }
    if (args.figure2) {
        std::vector<std::string> rows;
        for (int j : {1, 2, 10}) {
            const RealBase base = make_real_base(metallic_mean(j), 64, tol);
            const int K = base_K(base, args.K);
            for (int i = 0; i < alpha.count; ++i) rows.push_back("phi" + std::to_string(j) + ',' + A_row(base.b, K, alpha.at(i), tol));
        }
        emit_csv(os, "base,b,K,alpha,A,flag", rows);
        return kOk;
    }
    if (args.square) {
        const Grid rg = parse_grid(args.r_grid), tg = parse_grid(args.theta_grid);
        const auto rows = parallel_rows(rg.count * tg.count, [&](int idx) {
            const double r = rg.at(idx / tg.count), theta = tg.at(idx % tg.count);
            try {
                const DigitSetClass c = classify_digit_set(r, theta, tol);
                return fmt(r) + ',' + fmt(theta) + ',' + (c.square ? "1" : "0") + ',' + std::to_string(c.N) + ",0";
            } catch (const AmbiguousRegion&) {
                return fmt(r) + ',' + fmt(theta) + ",,,1";
            }
        });
        emit_csv(os, "r,theta,square,N,ambiguous", rows);
        return kOk;
    }
    if (args.curve == "A") {
        const RealBase base = make_real_base(parse_base(args.base), 64, tol);
        const int K = base_K(base, args.K);
        std::vector<std::string> rows;
        for (int i = 0; i < alpha.count; ++i) rows.push_back(A_row(base.b, K, alpha.at(i), tol));
        emit_csv(os, "b,K,alpha,A,flag", rows);
        return kOk;
    }
    if (args.curve == "F") {
        std::vector<std::string> rows;
        for (int i = 0; i < alpha.count; ++i) {
            const double a = alpha.at(i);
            try {
                rows.push_back(fmt(args.r) + ',' + fmt(a) + ',' + fmt(F_threshold(args.r, a, tol)) + ",0");
            } catch (const PreconditionError&) {
                rows.push_back(fmt(args.r) + ',' + fmt(a) + ",,1");
            }
        }
        emit_csv(os, "r,alpha,F,flag", rows);
        return kOk;
    }
    throw PreconditionError("regions needs one of --curve A|F, --G, --figure2, --square");
}

// ---------------------------------------------------------------- scan

struct ScanArgs {
    std::string kind = "real";
    std::string base = "golden";
    int K = -1;
    double r = 4.5;
    double theta = 0.05;
    std::string alpha = "0.05:0.95:0.05";
    std::string beta = "0.05:0.95:0.05";
    double rho = 1.0;
    std::string out;
};

int cmd_scan(const ScanArgs& args, const Tolerance& tol) {
    Output out(args.out);
    const Grid ag = parse_grid(args.alpha), bg = parse_grid(args.beta);
    const double margin = 10.0 * tol.eps_cmp;
    if (args.kind == "real") {
        const RealBase base = make_real_base(parse_base(args.base), 64, tol);
        const int K = base_K(base, args.K);
        const auto rows = parallel_rows(ag.count * bg.count, [&](int idx) {
            const double a = ag.at(idx / bg.count), b = bg.at(idx % bg.count);
            std::string row = fmt(a) + ',' + fmt(b) + ',';
            try {
                const double A = A_threshold(base.b, K, a, tol);
                const bool hyp = b > A + margin;
                const auto nk = hyp ? find_nk_real(base.b, K, a, b, args.rho, tol) : std::nullopt;
                row += fmt(A) + ',' + (hyp ? "1" : "0") + ',' + (nk ? std::to_string(nk->n) + ',' + std::to_string(nk->k) : ",") + ",0";
            } catch (const PreconditionError&) {
                row += ",,,,1";
            }
            return row;
        });
        emit_csv(out.stream(), "alpha,beta,A,hypothesis,n,k,flag", rows);
        return kOk;
    }
    if (args.kind == "complex") {
        const ComplexBase base = make_complex_base(args.r, args.theta, tol);
        std::vector<int> ks;
        if (base.N)
            for (int k = 2; k <= 6; ++k)
                if (check_Ck(base, k).holds) ks.push_back(k);
        const auto rows = parallel_rows(ag.count * bg.count, [&](int idx) {
            const double a = ag.at(idx / bg.count), b = bg.at(idx % bg.count);
            std::string row = fmt(a) + ',' + fmt(b) + ',';
            try {
                const double F = F_threshold(args.r, a, tol);
                const bool hyp = b > F + margin && !ks.empty();
                const auto nk = hyp ? find_nk_complex(args.r, ks, a, b, args.rho, tol) : std::nullopt;
                row += fmt(F) + ',' + (hyp ? "1" : "0") + ',' + (nk ? std::to_string(nk->n) + ',' + std::to_string(nk->k) : ",") + ",0";
            } catch (const PreconditionError&) {
                row += ",,,,1";
            }
            return row;
        });
        emit_csv(out.stream(), "alpha,beta,F,hypothesis,n,k,flag", rows);
        return kOk;
    }
    throw PreconditionError("scan kind must be real or complex");
}

// ---------------------------------------------------------------- game

struct GameArgs {
    std::string preset = "dwinning-golden";
    std::optional<double> alpha, beta, rho;
    std::string base;
    std::optional<int> digit;
    std::vector<double> complex_base;
    std::vector<double> q;
    std::vector<double> x0;
    std::string alice;
    std::string bob;
    std::uint64_t seed = 0;
    int rounds = 60;
    std::string out;
};

struct Setup {
    std::string family;  // real, complex, componentwise, losing
    GameParams params;
    std::unique_ptr<LatticeDomain> space;
    std::unique_ptr<ExpansionSystem> system;
    std::unique_ptr<Strategy> alice;
    std::unique_ptr<Strategy> bob;
    std::optional<Claim> claim;
    int claim_depth = 0;
    int rounds = 0;
    json hypotheses;
    bool satisfied = false;
    int block_length = 1;
};

std::unique_ptr<Strategy> make_bob(const std::string& kind, const Quaternion& start, std::uint64_t seed) {
    if (kind == "drift" || kind == "bob-optimal-drift") return std::make_unique<BobOptimalDrift>(start, Quaternion(1.0));
    if (kind == "random" || kind == "bob-random") return std::make_unique<BobRandom>(start, seed);
    if (kind == "center-hold" || kind == "bob-center-hold") return std::make_unique<BobCenterHold>(start);
    throw PreconditionError("unknown Bob strategy: " + kind);
}

Quaternion start_point(const GameArgs& a, const Quaternion& fallback) {
    return a.x0.empty() ? fallback : from_values(a.x0);
}

void setup_real(Setup& s, const GameArgs& a, const Tolerance& tol) {
    const RealBase base = make_real_base(parse_base(a.base.empty() ? "golden" : a.base), 64, tol);
    const int d = a.digit.value_or(0);
    s.params = {a.alpha.value_or(0.05), a.beta.value_or(0.5), a.rho.value_or(0.3), 1};
    s.space = std::make_unique<LatticeDomain>(LatticeDomain::standard(1, 0.0));
    s.system = std::make_unique<ExpansionSystem>(base.system());
    s.rounds = a.rounds;
    s.hypotheses["b"] = base.b;
    s.hypotheses["digit"] = d;
    if (!base.K_determined()) {
        s.hypotheses["reason"] = "K_b undetermined for this base";
        return;
    }
    if (d > base.d_prime) {
        s.hypotheses["reason"] = "digit exceeds the minimal quasi-greedy digit";
        return;
    }
    const double A = A_threshold(base.b, base.K_b, s.params.alpha, tol);
    s.hypotheses["K"] = base.K_b;
    s.hypotheses["A"] = A;
    if (!(s.params.beta > A + 10.0 * tol.eps_cmp)) {
        s.hypotheses["reason"] = "beta does not exceed A_b(alpha)";
        return;
    }
    const auto nk = find_nk_real(base.b, base.K_b, s.params.alpha, s.params.beta, s.params.rho, tol);
    if (!nk) {
        s.hypotheses["reason"] = "no (n, k) within the search bounds";
        return;
    }
    s.hypotheses["n"] = nk->n;
    s.hypotheses["k"] = nk->k;
    s.alice = std::make_unique<AliceRealWinning>(base, d, *nk);
    s.bob = make_bob(a.bob.empty() ? "drift" : a.bob, start_point(a, Quaternion(0.37)), a.seed);
    s.claim = Claim::digit_at(Quaternion(d), nk->k);
    s.claim_depth = nk->k;
    s.satisfied = true;
}

void setup_complex(Setup& s, const GameArgs& a, const Tolerance& tol) {
    const double r = a.complex_base.empty() ? 4.5 : a.complex_base.at(0);
    const double theta = a.complex_base.empty() ? 0.05 : a.complex_base.at(1);
    const ComplexBase base = make_complex_base(r, theta, tol);
    s.params = {a.alpha.value_or(0.6), a.beta.value_or(0.8), a.rho.value_or(2.0), 2};
    s.space = std::make_unique<LatticeDomain>(LatticeDomain::standard(2, -0.5));
    s.system = std::make_unique<ExpansionSystem>(base.system());
    s.rounds = a.rounds;
    s.hypotheses["r"] = r;
    s.hypotheses["theta"] = theta;
    if (!base.N) {
        s.hypotheses["reason"] = "digit set is not square";
        return;
    }
    std::vector<int> ks;
    for (int k = 2; k <= 6; ++k)
        if (check_Ck(base, k).holds) ks.push_back(k);
    s.hypotheses["N"] = *base.N;
    s.hypotheses["Ck"] = ks;
    const double F = F_threshold(r, s.params.alpha, tol);
    s.hypotheses["F"] = F;
    if (ks.empty()) {
        s.hypotheses["reason"] = "(C_k) fails for every k tried";
        return;
    }
    if (!(s.params.beta > F + 10.0 * tol.eps_cmp)) {
        s.hypotheses["reason"] = "beta does not exceed F_r(alpha)";
        return;
    }
    const auto nk = find_nk_complex(r, ks, s.params.alpha, s.params.beta, s.params.rho, tol);
    if (!nk) {
        s.hypotheses["reason"] = "no (n, k) within the search bounds";
        return;
    }
    s.hypotheses["n"] = nk->n;
    s.hypotheses["k"] = nk->k;
    s.alice = std::make_unique<AliceComplexWinning>(base, *nk);
    s.bob = make_bob(a.bob.empty() ? "drift" : a.bob, start_point(a, Quaternion(0.1, 0.2)), a.seed);
    s.claim = Claim::digit_at(Quaternion(), nk->k);
    s.claim_depth = nk->k;
    s.satisfied = true;
}

void setup_componentwise(Setup& s, const GameArgs& a, const Tolerance& tol) {
    const RealBase base = make_real_base(parse_base(a.base.empty() ? "golden" : a.base), 64, tol);
    const int d = a.digit.value_or(0);
    s.params = {a.alpha.value_or(0.02), a.beta.value_or(0.5), a.rho.value_or(0.3), 4};
    s.space = std::make_unique<LatticeDomain>(lipschitz_lattice());
    s.system = std::make_unique<ExpansionSystem>(Quaternion(base.b), lipschitz_lattice(), tol);
    s.rounds = a.rounds;
    s.hypotheses["q"] = base.b;
    s.hypotheses["digit"] = d;
    if (!base.K_determined()) {
        s.hypotheses["reason"] = "K_q undetermined for this base";
        return;
    }
    if (d > base.d_prime) {
        s.hypotheses["reason"] = "digit exceeds the minimal quasi-greedy digit";
        return;
    }
    const double A = A_threshold(2.0 * base.b, base.K_b, s.params.alpha, tol);
    s.hypotheses["K"] = base.K_b;
    s.hypotheses["A_2q"] = A;
    if (!(s.params.beta > A + 10.0 * tol.eps_cmp)) {
        s.hypotheses["reason"] = "beta does not exceed A_2q(alpha)";
        return;
    }
    const auto nk = find_nk_componentwise(base.b, base.K_b, s.params.alpha, s.params.beta, s.params.rho, tol);
    if (!nk) {
        s.hypotheses["reason"] = "no (n, k) within the search bounds";
        return;
    }
    s.hypotheses["n"] = nk->n;
    s.hypotheses["k"] = nk->k;
    s.alice = std::make_unique<AliceComponentwiseWinning>(base, std::array<int, 4>{d, d, d, d}, *nk);
    s.bob = make_bob(a.bob.empty() ? "drift" : a.bob, start_point(a, Quaternion(0.37, 0.41, 0.29, 0.55)), a.seed);
    s.claim = Claim::digit_at(Quaternion(d, d, d, d), nk->k);
    s.claim_depth = nk->k;
    s.satisfied = true;
}

void setup_losing(Setup& s, const GameArgs& a, const std::string& lattice, const Quaternion& default_q,
                  const Tolerance& tol) {
    const LosingPreset preset = losing_preset(lattice);
    const Quaternion q = a.q.empty() ? default_q : from_values(a.q);
    const Quaternion avoided = a.digit ? Quaternion(*a.digit) : Quaternion();
    const std::vector<Quaternion> omega{avoided};
    const COmegaResult c = C_Omega(q, omega, preset.constants);
    s.system = std::make_unique<ExpansionSystem>(q, preset.lattice, tol);
    s.space = std::make_unique<LatticeDomain>(preset.lattice);
    s.hypotheses["lattice"] = lattice;
    s.hypotheses["q"] = quaternion_to_json(q, 4);
    s.hypotheses["C_X"] = preset.constants.C_X;
    s.hypotheses["C_Omega"] = c.theorem_constant;
    s.hypotheses["q_norm_power"] = c.q_norm_power;
    const double alpha = a.alpha.value_or(std::min(0.99, std::max(0.85, 1.05 * c.theorem_constant / c.q_norm_power)));
    const double beta = a.beta.value_or(1.0 / (alpha * c.q_norm_power));
    s.params = {alpha, beta, preset.constants.rho, 4};
    if (a.rho && std::abs(*a.rho - preset.constants.rho) > 1e-12) {
        s.hypotheses["reason"] = "rho is fixed by the anchor ball of the lattice preset";
        return;
    }
    if (!c.applicable) {
        s.hypotheses["reason"] = "C_Omega >= |q|^n";
        return;
    }
    if (!(alpha >= c.theorem_constant / c.q_norm_power - 10.0 * tol.eps_cmp) || !(alpha < 1.0)) {
        s.hypotheses["reason"] = "alpha below C_Omega |q|^-n";
        return;
    }
    if (std::abs(alpha * beta * c.q_norm_power - 1.0) > 1e-9 || !(beta < 1.0)) {
        s.hypotheses["reason"] = "alpha beta must equal |q|^-n with beta < 1";
        return;
    }
    auto bob = std::make_unique<BobAvoidDigit>(*s.system, preset.constants, 1);
    s.rounds = std::min(a.rounds, bob->max_rounds());
    s.bob = std::move(bob);
    const std::string alice = a.alice.empty() ? "random" : a.alice;
    if (alice == "random" || alice == "alice-random")
        s.alice = std::make_unique<AliceRandom>(a.seed);
    else if (alice == "center-hold" || alice == "alice-center-hold")
        s.alice = std::make_unique<AliceCenterHold>();
    else
        throw PreconditionError("unknown Alice strategy: " + alice);
    s.claim = Claim::avoids_block(omega, 1);
    s.satisfied = true;
}

void configure(Setup& s, const GameArgs& a, const Tolerance& tol) {
    const std::string& p = a.preset;
    if (p == "dwinning-golden" || p == "real") {
        s.family = "real";
        setup_real(s, a, tol);
    } else if (p == "complex") {
        s.family = "complex";
        setup_complex(s, a, tol);
    } else if (p == "componentwise") {
        s.family = "componentwise";
        setup_componentwise(s, a, tol);
    } else if (p == "notwinning-lipschitz") {
        s.family = "losing";
        setup_losing(s, a, "lipschitz", Quaternion(7, 5, 3, 9), tol);
    } else if (p == "notwinning-hurwitz-box") {
        s.family = "losing";
        setup_losing(s, a, "hurwitz-box", Quaternion(9, 6, 5, 8), tol);
    } else if (p == "notwinning-zeta") {
        s.family = "losing";
        setup_losing(s, a, "zeta", Quaternion(11, 7, 6, 9), tol);
    } else if (p == "notwinning-symmetric") {
        s.family = "losing";
        setup_losing(s, a, "symmetric:0.5", Quaternion(8, 7, 6, 5), tol);
    } else {
        throw std::runtime_error("unknown preset: " + p);
    }
}

int cmd_game(const GameArgs& a, const Tolerance& tol) {
    Setup s;
    const std::string& p = a.preset;
    try {
        configure(s, a, tol);
    } catch (const PreconditionError& e) {
        s.satisfied = false;
        s.hypotheses["reason"] = e.what();
    }
    if (s.satisfied && !a.alice.empty() && s.family != "losing") {
        if (a.alice == "center-hold" || a.alice == "alice-center-hold") s.alice = std::make_unique<AliceCenterHold>();
        else if (a.alice == "random" || a.alice == "alice-random") s.alice = std::make_unique<AliceRandom>(a.seed);
        else if (a.alice != "winning") throw PreconditionError("unknown Alice strategy: " + a.alice);
    }

    json report;
    report["preset"] = p;
    report["params"] = {{"alpha", s.params.alpha}, {"beta", s.params.beta}, {"rho", s.params.rho}, {"dimension", s.params.dim}};
    report["seed"] = a.seed;
    s.hypotheses["satisfied"] = s.satisfied;
    report["hypotheses"] = s.hypotheses;
    int code = kIndeterminate;
    if (s.satisfied) {
        s.params.validate();
        PlayOptions options;
        options.max_rounds = s.rounds;
        options.tol = tol;
        const GameTrace trace = play(s.params, *s.space, *s.alice, *s.bob, options);
        report["trace"] = trace_to_json(trace, a.seed);
        const AuditResult audit = audit_trace(trace, *s.space, tol);
        report["audit"] = {{"ok", audit.ok}, {"bad_move", audit.bad_move}, {"reason", audit.reason}};
        if (trace.aborted_by) {
            code = kIllegal;
            report["verification"] = {{"verdict", "illegal-move"}, {"player", to_string(*trace.aborted_by)},
                                      {"reason", trace.abort_reason}};
            std::cerr << "game aborted by " << to_string(*trace.aborted_by) << ": " << trace.abort_reason << '\n';
        } else {
            const int depth = s.family == "losing" ? std::max(1, (trace.rounds() - 1) * s.block_length) : s.claim_depth;
            json claim;
            claim["kind"] = s.claim->kind == Claim::Kind::AvoidsBlock ? "avoids-digit" : "contains-digit";
            if (s.claim->kind == Claim::Kind::DigitAt) claim["position"] = s.claim->max_position;
            claim["digit"] = quaternion_to_json(s.claim->block.front(), s.params.dim);
            claim["depth"] = depth;
            report["claim"] = claim;
            const VerifyResult v = verify_outcome(trace, *s.system, *s.claim, depth);
            report["verification"] = verify_to_json(v, s.params.dim);
            code = v.verdict == Verdict::Verified ? kOk : v.verdict == Verdict::Falsified ? kFalsified : kIndeterminate;
            if (!audit.ok) code = kIllegal;
        }
    }
    Output out(a.out);
    out.stream() << report.dump(2) << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Digit-expansion Schmidt games: expansions, thresholds, scans and game runs"};
    app.require_subcommand(1);

    ExpandArgs ex;
    auto* expand = app.add_subcommand("expand", "Digits of a point in a real, complex or quaternion base");
    expand->add_option("--real", ex.real_base, "Real base (number, golden, silver, phi:<j>, cubic)");
    expand->add_option("--complex", ex.complex_base, "Complex base as modulus and argument")->expected(2);
    expand->add_option("--quat", ex.quat_base, "Quaternion base a b c d")->expected(4);
    expand->add_option("--lattice", ex.lattice, "Lattice preset for --quat");
    expand->add_option("--domain", ex.domain, "Complex domain: unit ([0,1)^2) or centered ([-1/2,1/2)^2)");
    expand->add_option("--x", ex.x, "Real point");
    expand->add_option("--z", ex.z, "Complex or quaternion point")->expected(2, 4);
    expand->add_option("--n", ex.n, "Number of digits");
    expand->add_option("--format", ex.format, "text or json");
    expand->add_flag("--nudge", ex.nudge, "Resolve ambiguous digits inward instead of failing");

    std::string adm_base = "golden", adm_format = "text";
    int adm_n = 3;
    auto* admissible = app.add_subcommand("admissible", "List admissible blocks of a real base");
    admissible->add_option("--b", adm_base, "Real base");
    admissible->add_option("--n", adm_n, "Block length");
    admissible->add_option("--format", adm_format, "text or json");

    RegionsArgs rg;
    auto* regions = app.add_subcommand("regions", "Threshold curves and parameter regions as plot data");
    regions->add_option("--curve", rg.curve, "A or F");
    regions->add_option("--b", rg.base, "Real base for the A curve");
    regions->add_option("--K", rg.K, "Override K_b");
    regions->add_option("--r", rg.r, "Modulus for the F curve");
    regions->add_option("--alpha", rg.alpha, "alpha grid lo:hi:step");
    regions->add_flag("--G", rg.G, "Radius intervals where (C_2) holds");
    regions->add_option("--theta", rg.theta, "Angle for --G");
    regions->add_option("--cap", rg.cap, "Largest N listed at theta = 0");
    regions->add_flag("--figure2", rg.figure2, "A_b curves for phi_1, phi_2, phi_10");
    regions->add_flag("--square", rg.square, "Square digit set classification over an (r, theta) grid");
    regions->add_option("--r-grid", rg.r_grid, "r grid for --square");
    regions->add_option("--theta-grid", rg.theta_grid, "theta grid for --square");
    regions->add_option("--format", rg.format, "csv or json (json only for --G)");
    regions->add_option("--out", rg.out, "Output file");

    ScanArgs sc;
    auto* scan = app.add_subcommand("scan", "(n, k) search over an (alpha, beta) grid");
    scan->add_option("--kind", sc.kind, "real or complex");
    scan->add_option("--b", sc.base, "Real base");
    scan->add_option("--K", sc.K, "Override K_b");
    scan->add_option("--r", sc.r, "Complex modulus");
    scan->add_option("--theta", sc.theta, "Complex argument");
    scan->add_option("--alpha", sc.alpha, "alpha grid lo:hi:step");
    scan->add_option("--beta", sc.beta, "beta grid lo:hi:step");
    scan->add_option("--rho", sc.rho, "Initial radius");
    scan->add_option("--out", sc.out, "Output file");

    GameArgs ga;
    auto* game = app.add_subcommand("game", "Play a Schmidt game and verify the claimed outcome");
    game->add_option("--preset", ga.preset,
                     "dwinning-golden, complex, componentwise, notwinning-lipschitz, notwinning-hurwitz-box, "
                     "notwinning-zeta, notwinning-symmetric");
    game->add_option("--alpha", ga.alpha, "alpha");
    game->add_option("--beta", ga.beta, "beta");
    game->add_option("--rho", ga.rho, "Initial radius");
    game->add_option("--b", ga.base, "Real base for real and componentwise presets");
    game->add_option("--digit", ga.digit, "Target digit (winning) or avoided digit (losing)");
    game->add_option("--complex", ga.complex_base, "Complex base modulus and argument")->expected(2);
    game->add_option("--q", ga.q, "Quaternion radix a b c d for losing presets")->expected(4);
    game->add_option("--x0", ga.x0, "Bob's starting center")->expected(1, 4);
    game->add_option("--alice", ga.alice, "winning, random or center-hold");
    game->add_option("--bob", ga.bob, "drift, random or center-hold");
    game->add_option("--seed", ga.seed, "Seed for random strategies");
    game->add_option("--rounds", ga.rounds, "Maximum number of rounds");
    game->add_option("--out", ga.out, "Trace output file");

    CLI11_PARSE(app, argc, argv);

    try {
        const Tolerance tol = tolerance_from_env();
        if (*expand) return cmd_expand(ex, tol);
        if (*admissible) return cmd_admissible(adm_base, adm_n, adm_format, tol);
        if (*regions) return cmd_regions(rg, tol);
        if (*scan) return cmd_scan(sc, tol);
        if (*game) return cmd_game(ga, tol);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scldpc/lifting.hpp"
#include "scldpc/tx_schedule.hpp"

namespace scldpc {

// Erasure flags, one per transmitted variable (punctured bits are implicitly
// erased and are not part of the pattern).
struct ErasurePattern {
    std::vector<std::uint8_t> erased;
};

struct DecodeOutcome {
    bool success = false;
    std::vector<std::uint8_t> layer_success;   // index 0 = layer 1
    std::vector<std::int64_t> layer_residual;  // unresolved erased bits per layer
    int iterations = 0;
    std::vector<std::uint8_t> decoded;         // full codeword; filled when values were supplied
};

struct TrajectorySample {
    double tau;                     // iterations / (v_unc * N)
    double r1;                      // degree-one checks / total checks
    std::vector<double> r1_layer;
    std::vector<double> resid_layer;  // remaining erased variables / layer variables
};

struct PeelTrajectory {
    std::vector<TrajectorySample> samples;
    int n_layers = 1;
};

struct PeelResult {
    DecodeOutcome outcome;
    PeelTrajectory trajectory;  // filled when capture was requested
};

// Peeling decoder: repeatedly resolves the lowest-indexed degree-one check.
// When `received` is given (values of transmitted bits, same indexing as the
// pattern), recovered bit values are returned in outcome.decoded.
PeelResult peel_bec(const LiftedCode& code, const ErasurePattern& pat, bool capture = false,
                    const std::vector<std::uint8_t>* received = nullptr);

// Erasure message passing; success set identical to peeling on every pattern.
DecodeOutcome bp_bec(const LiftedCode& code, const ErasurePattern& pat, int max_iter = 200,
                     const std::vector<std::uint8_t>* received = nullptr);

// Flooding sum-product over channel LLRs (one per lifted variable; punctured
// entries 0). Messages clip at magnitude 30; early exit on a satisfied
// syndrome. Per-layer accounting compares against `truth` when provided,
// otherwise only the syndrome verdict is reported.
DecodeOutcome bp_awgn(const LiftedCode& code, const std::vector<double>& llr, int max_iter = 100,
                      const std::vector<std::uint8_t>* truth = nullptr);

struct WindowedStats {
    std::int64_t blocks_consumed_before_done = 0;
    bool consumed_unreceived = false;  // instrumented prefix-decodability assertion
    bool all_finalized = false;
};

// Windowed erasure decoding following a transmission schedule: each chain's
// positions finalize left to right once the window's own-chain blocks have
// arrived; cross-chain checks use whatever blocks the schedule has already
// delivered. A window spanning the whole chain defers to full BP.
DecodeOutcome windowed_bp(const LiftedCode& code, const ErasurePattern& pat,
                          const TxSchedule& schedule, int W, int iters_per_shift = 50,
                          WindowedStats* stats = nullptr);

// Ensemble-averaged degree-one trajectory over `trials` random patterns at
// erasure rate eps, conditioned on decoding success. threads = 1 runs the
// serial reference path; 0 uses all cores.
PeelTrajectory mean_trajectory(const Protograph& p, double eps, std::uint32_t N, int trials,
                               std::uint64_t seed, int threads = 0);

// Uniform i.i.d. erasure pattern over the transmitted bits.
ErasurePattern random_erasures(const LiftedCode& code, double eps, std::uint64_t seed);

}  // namespace scldpc

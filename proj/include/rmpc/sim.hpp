#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rmpc/channel.hpp"

namespace rmpc {

enum class DecoderKind {
    Peeling,          // pd
    SumProduct,       // bp
    LinearProgram,    // lp
    BitFlip,          // bf
    MostReliableBasis,// mrb
    ExactErasure,     // ml-bec
    Exhaustive        // ml-bf
};

enum class MatrixPolicy { Full, Tailored, RandomSubset };

struct ExperimentConfig {
    int r = 1;
    int m = 3;
    ChannelKind channel = ChannelKind::Awgn;
    std::vector<double> params; // erasure rates, crossover rates, or Eb/N0 dB
    DecoderKind decoder = DecoderKind::SumProduct;
    MatrixPolicy policy = MatrixPolicy::Full;
    double f = 0.25;   // reliable fraction for tailoring on soft channels
    int s = 0;         // row budget for tailored / random subsets
    double w = 0.05;   // sum-product damping
    int ell = 30;      // sum-product iteration budget
    double mu = 0.03;  // ADMM penalty
    int t_max = 1000;  // ADMM sweep budget
    double tol = 1e-5; // ADMM residual threshold
    int nu = 3;        // reprocessing order
    uint64_t seed = 1;
    uint64_t min_block_errors = 100;
    uint64_t max_frames = 1000000;
    int threads = 1;
};

// One sweep point.  Optional fields were not used by the run and serialize
// as empty (CSV) or null (JSON).  decoder_iters_mean averages the decoder's
// reported iteration count over the frames that actually ran a decoder; it
// is an API-level diagnostic and is never serialized.
struct SweepRecord {
    int r = 0, m = 0;
    std::string channel, decoder, matrix_policy;
    double param = 0.0;
    std::optional<double> f;
    std::optional<long long> s;
    std::optional<double> w;
    std::optional<long long> ell;
    std::optional<double> mu;
    std::optional<long long> tmax;
    std::optional<long long> nu;
    uint64_t seed = 0;
    uint64_t frames = 0;
    uint64_t block_errors = 0;
    double bler = 0.0;
    double wall_time_s = 0.0;
    double decoder_iters_mean = 0.0;
};

std::string channel_name(ChannelKind k);
std::string decoder_name(DecoderKind d);
std::string policy_name(MatrixPolicy p);

// Throws std::invalid_argument on any inconsistent combination: unknown code
// parameters, empty sweeps or frame budgets, decoders bound to the wrong
// channel (pd and ml-bec need erasures, mrb needs soft reliabilities, ml-bf
// needs k <= 20), tailoring on the crossover channel, or row budgets outside
// [1, F(r,m)].
void validate_config(const ExperimentConfig& cfg);

// Monte Carlo at one channel parameter: frames are seeded independently from
// (seed, frame index), so results do not depend on the worker count.  Stops
// at the exact frame that produces the min_block_errors-th error, or at
// max_frames.
SweepRecord run_point(const ExperimentConfig& cfg, double param);

// run_point per entry of cfg.params, sharing one full matrix across points.
std::vector<SweepRecord> run_sweep(const ExperimentConfig& cfg);

std::string to_csv(const std::vector<SweepRecord>& recs);
std::string to_json(const std::vector<SweepRecord>& recs);
std::vector<SweepRecord> from_json(const std::string& text);

} // namespace rmpc

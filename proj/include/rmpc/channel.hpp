#pragma once

#include <cstdint>
#include <vector>

#include "rmpc/binary_word.hpp"
#include "rmpc/rng.hpp"

namespace rmpc {

enum class ChannelKind { Bec, Bsc, Awgn };

// Saturation value for log-likelihood ratios of perfectly known bits.
constexpr double LLR_CAP = 1000.0;

struct ChannelObservation {
    ChannelKind kind;
    double param;                // erasure rate, crossover rate, or Eb/N0 in dB
    double sigma2 = 0.0;         // Gaussian channel only
    std::vector<uint8_t> hard;   // received bits; on the erasure channel valid where !erased
    std::vector<uint8_t> erased; // erasure channel only
    std::vector<double> y;       // Gaussian channel only
};

double awgn_sigma2(double rate, double ebn0_db); // 1 / (2 R 10^(dB/10))

// Modulation maps bit c to 1-2c on the Gaussian channel.  Draws consume the
// rng once per bit, in index order.
ChannelObservation transmit(const BinaryWord& c, ChannelKind kind, double param, double rate,
                            Rng& rng);

// Positive values favor bit 0: log P(y|0) - log P(y|1), magnitudes clamped
// to LLR_CAP, erased positions exactly 0.
std::vector<double> llr(const ChannelObservation& obs);

} // namespace rmpc

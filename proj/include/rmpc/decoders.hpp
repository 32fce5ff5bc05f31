#pragma once

#include <cstdint>
#include <vector>

#include "rmpc/binary_word.hpp"
#include "rmpc/channel.hpp"
#include "rmpc/pc_matrix.hpp"
#include "rmpc/rm_code.hpp"

namespace rmpc {

enum class Verdict { Success, Failure, Ambiguous };

struct DecodeResult {
    Verdict verdict = Verdict::Failure;
    BinaryWord word;
    int iterations_used = 0;
    bool valid = false; // word satisfies the reference checks of the code
};

// Erasure filling through degree-1 checks of h.  Known bits are trusted
// (erasures never flip); Ambiguous when unresolved erasures remain.
DecodeResult peel(const PcMatrix& h, const ChannelObservation& obs, const RmCode& code);

// Flooding sum-product with check messages damped by w on both the
// variable-to-check sums and the marginals.  Stops early as soon as the
// running hard decision satisfies the reference checks.
DecodeResult bp_decode(const PcMatrix& h, const std::vector<double>& gamma, double w, int ell,
                       const RmCode& code);

// Euclidean projection onto the convex hull of even-weight binary vectors of
// length v.size() >= 2.
std::vector<double> project_parity_polytope(std::vector<double> v);

// Penalized linear-programming decoder: ADMM over one parity-polytope replica
// per check row.  Stops on a sub-tol infinity-norm residual, on a valid
// rounded word, or after t_max sweeps.
DecodeResult admm_lp_decode(const PcMatrix& h, const std::vector<double>& gamma, double mu,
                            int t_max, double tol, const RmCode& code);

// Greedy single-bit flipping on a hard-decision word: each step flips the bit
// with the largest positive (violated - satisfied) margin, so the unsatisfied
// count strictly decreases.  unsat_trace, when given, records that count
// after every flip.
DecodeResult bit_flip_decode(const PcMatrix& h, const std::vector<uint8_t>& y, int max_flips,
                             const RmCode& code, std::vector<int>* unsat_trace = nullptr);

// Most-reliable-basis reprocessing of order nu: Gaussian elimination onto the
// most reliable information set, then all error patterns of weight <= nu on
// it, scored by correlation discrepancy against the hard decision.
DecodeResult mrb_decode(const RmCode& code, const std::vector<double>& gamma, int nu);

// Exact erasure decoding: solves the reference checks restricted to the
// erased coordinates; Ambiguous when the system is underdetermined.
DecodeResult ml_bec_decode(const RmCode& code, const ChannelObservation& obs);

// Exhaustive maximum-likelihood search over all 2^k codewords (k <= 20),
// minimizing the sum of gamma over set bits; ties resolve to the lowest
// information word value.
DecodeResult ml_bruteforce(const RmCode& code, const std::vector<double>& gamma);

} // namespace rmpc

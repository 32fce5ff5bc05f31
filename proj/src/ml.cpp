#include "rmpc/decoders.hpp"

#include <bit>
#include <stdexcept>

#include "rmpc/gf2.hpp"

namespace rmpc {

DecodeResult ml_bec_decode(const RmCode& code, const ChannelObservation& obs) {
    if (obs.kind != ChannelKind::Bec) throw std::invalid_argument("erasure decoder needs erasure flags");
    const int n = code.n;
    if (static_cast<int>(obs.erased.size()) != n) throw std::invalid_argument("length mismatch");

    std::vector<int32_t> er;
    for (int i = 0; i < n; ++i)
        if (obs.erased[i]) er.push_back(i);
    const int e = static_cast<int>(er.size());

    BinaryWord knowns(n);
    for (int i = 0; i < n; ++i)
        if (!obs.erased[i] && obs.hard[i]) knowns.set(i, true);

    DecodeResult res;
    if (e == 0) {
        res.word = knowns;
        res.valid = is_codeword(code, res.word);
        res.verdict = Verdict::Success;
        return res;
    }

    // Each reference check restricted to the erased coordinates, augmented
    // with the parity its known part already fixes (column e).
    std::vector<BinaryWord> sys;
    sys.reserve(code.h_ref.size());
    for (const BinaryWord& row : code.h_ref) {
        BinaryWord packed(e + 1);
        for (int t = 0; t < e; ++t)
            if (row.get(er[t])) packed.set(t, true);
        if (row.dot(knowns)) packed.set(e, true);
        if (!packed.is_zero()) sys.push_back(packed);
    }
    sys = gf2_rref(std::move(sys));

    // Unique fill iff every erased coordinate is a pivot.
    std::vector<int8_t> value(e, -1);
    for (const BinaryWord& row : sys) {
        int32_t p = row.first_set();
        if (p >= e) continue; // 0 = 1 cannot arise from a consistent erasure pattern
        value[p] = row.get(e) ? 1 : 0;
    }
    bool unique = true;
    for (int t = 0; t < e; ++t)
        if (value[t] < 0) unique = false;

    res.word = knowns;
    if (unique) {
        for (int t = 0; t < e; ++t)
            if (value[t] == 1) res.word.set(er[t], true);
        res.valid = is_codeword(code, res.word);
        res.verdict = Verdict::Success;
    } else {
        res.valid = false;
        res.verdict = Verdict::Ambiguous;
    }
    return res;
}

DecodeResult ml_bruteforce(const RmCode& code, const std::vector<double>& gamma) {
    const int n = code.n, k = code.k;
    if (static_cast<int>(gamma.size()) != n) throw std::invalid_argument("llr length mismatch");
    if (k > 20) throw std::invalid_argument("exhaustive search capped at k <= 20");

    // Gray walk over all information words: one generator row toggles per
    // step, with the score updated only along that row's support.
    BinaryWord cur(n);
    double score = 0.0;
    BinaryWord best_word(cur);
    double best_score = score;
    uint32_t best_u = 0;

    const uint32_t total = 1u << k;
    for (uint32_t g = 1; g < total; ++g) {
        int bit = std::countr_zero(g);
        cur ^= code.gen[bit];
        for (int32_t i : code.gen[bit].support())
            score += cur.get(i) ? gamma[i] : -gamma[i];
        uint32_t u = g ^ (g >> 1);
        if (score < best_score || (score == best_score && u < best_u)) {
            best_score = score;
            best_word = cur;
            best_u = u;
        }
    }

    DecodeResult res;
    res.word = best_word;
    res.iterations_used = static_cast<int>(total);
    res.valid = is_codeword(code, res.word);
    res.verdict = Verdict::Success;
    return res;
}

} // namespace rmpc

#include "rmpc/decoders.hpp"

#include <stdexcept>

namespace rmpc {

DecodeResult bit_flip_decode(const PcMatrix& h, const std::vector<uint8_t>& y, int max_flips,
                             const RmCode& code, std::vector<int>* unsat_trace) {
    const int n = h.cols();
    const int m_rows = h.row_count();
    if (static_cast<int>(y.size()) != n) throw std::invalid_argument("word length mismatch");
    if (max_flips < 0) throw std::invalid_argument("flip budget must be nonnegative");

    std::vector<uint8_t> cur(y);
    std::vector<uint8_t> syn(m_rows, 0);
    int unsat = 0;
    for (int j = 0; j < m_rows; ++j) {
        uint8_t s = 0;
        for (int32_t i : h.row(j)) s ^= cur[i] & 1;
        syn[j] = s;
        unsat += s;
    }

    // margin[i] = violated minus satisfied checks through bit i; flipping i
    // changes the unsatisfied count by exactly -margin[i].
    std::vector<int32_t> margin(n, 0);
    for (int j = 0; j < m_rows; ++j) {
        int32_t d = syn[j] ? 1 : -1;
        for (int32_t i : h.row(j)) margin[i] += d;
    }

    if (unsat_trace) unsat_trace->push_back(unsat);
    int flips = 0;
    while (unsat > 0 && flips < max_flips) {
        int best = -1;
        int32_t best_margin = 0;
        for (int i = 0; i < n; ++i) {
            if (margin[i] > best_margin) {
                best_margin = margin[i];
                best = i;
            }
        }
        if (best < 0) break; // no flip can reduce the unsatisfied count

        cur[best] ^= 1;
        ++flips;
        for (int32_t j : h.rows_on(best)) {
            if (syn[j]) {
                syn[j] = 0;
                --unsat;
                for (int32_t i : h.row(j)) margin[i] -= 2;
            } else {
                syn[j] = 1;
                ++unsat;
                for (int32_t i : h.row(j)) margin[i] += 2;
            }
        }
        if (unsat_trace) unsat_trace->push_back(unsat);
    }

    DecodeResult res;
    res.word = BinaryWord(n);
    for (int i = 0; i < n; ++i)
        if (cur[i]) res.word.set(i, true);
    res.iterations_used = flips;
    res.valid = unsat == 0 && is_codeword(code, res.word);
    res.verdict = res.valid ? Verdict::Success : Verdict::Failure;
    return res;
}

} // namespace rmpc

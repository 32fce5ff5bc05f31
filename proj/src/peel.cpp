#include "rmpc/decoders.hpp"

#include <stdexcept>

namespace rmpc {

DecodeResult peel(const PcMatrix& h, const ChannelObservation& obs, const RmCode& code) {
    if (obs.kind != ChannelKind::Bec) throw std::invalid_argument("peeling needs erasure flags");
    const int n = h.cols();
    if (static_cast<int>(obs.erased.size()) != n) throw std::invalid_argument("length mismatch");
    const int m_rows = h.row_count();

    std::vector<uint8_t> known(n), val(n, 0);
    int unresolved = 0;
    for (int i = 0; i < n; ++i) {
        known[i] = !obs.erased[i];
        if (known[i]) val[i] = obs.hard[i];
        else ++unresolved;
    }

    // parity[j] tracks the XOR of the known bits on check j, so a check with
    // one unknown pins that bit to parity[j].
    std::vector<int32_t> unknowns(m_rows, 0);
    std::vector<uint8_t> parity(m_rows, 0);
    std::vector<int32_t> ready;
    for (int j = 0; j < m_rows; ++j) {
        for (int32_t i : h.row(j)) {
            if (known[i]) parity[j] ^= val[i];
            else ++unknowns[j];
        }
        if (unknowns[j] == 1) ready.push_back(j);
    }

    int steps = 0;
    while (!ready.empty()) {
        int32_t j = ready.back();
        ready.pop_back();
        if (unknowns[j] != 1) continue; // stale entry
        int32_t target = -1;
        for (int32_t i : h.row(j)) {
            if (!known[i]) {
                target = i;
                break;
            }
        }
        known[target] = 1;
        val[target] = parity[j];
        --unresolved;
        ++steps;
        for (int32_t j2 : h.rows_on(target)) {
            --unknowns[j2];
            parity[j2] ^= val[target];
            if (unknowns[j2] == 1) ready.push_back(j2);
        }
    }

    DecodeResult res;
    res.word = BinaryWord(n);
    for (int i = 0; i < n; ++i)
        if (val[i]) res.word.set(i, true);
    res.iterations_used = steps;
    res.valid = unresolved == 0 && is_codeword(code, res.word);
    res.verdict = unresolved == 0 ? Verdict::Success : Verdict::Ambiguous;
    return res;
}

} // namespace rmpc

#include "rmpc/decoders.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rmpc {

namespace {
constexpr double kMsgCap = 1000.0;
constexpr double kTanhCap = 1.0 - 1e-12;
} // namespace

DecodeResult bp_decode(const PcMatrix& h, const std::vector<double>& gamma, double w, int ell,
                       const RmCode& code) {
    const int n = h.cols();
    const int m_rows = h.row_count();
    if (static_cast<int>(gamma.size()) != n) throw std::invalid_argument("llr length mismatch");
    if (ell < 0) throw std::invalid_argument("iteration count must be nonnegative");

    // Edges flattened by check; the variable pass only ever accumulates into
    // per-bit sums, so no variable-side adjacency is needed.
    std::vector<int32_t> off(m_rows + 1, 0);
    for (int j = 0; j < m_rows; ++j)
        off[j + 1] = off[j] + static_cast<int32_t>(h.row(j).size());
    const int32_t edges = off[m_rows];
    std::vector<int32_t> edge_bit(edges);
    int max_deg = 0;
    for (int j = 0; j < m_rows; ++j) {
        const auto& sup = h.row(j);
        max_deg = std::max(max_deg, static_cast<int>(sup.size()));
        for (size_t t = 0; t < sup.size(); ++t) edge_bit[off[j] + t] = sup[t];
    }

    std::vector<double> msg_cv(edges, 0.0); // check-to-variable
    std::vector<double> msg_vc(edges);      // variable-to-check
    std::vector<double> acc(gamma);         // gamma + w * sum of incoming msg_cv
    std::vector<double> fwd(max_deg + 1), bwd(max_deg + 1), th(max_deg);

    BinaryWord word(n);
    auto decide = [&]() {
        for (int i = 0; i < n; ++i) word.set(i, acc[i] < 0.0);
        return is_codeword(code, word);
    };

    DecodeResult res;
    if (decide()) { // channel hard decision may already satisfy the checks
        res.word = word;
        res.iterations_used = 0;
        res.valid = true;
        res.verdict = Verdict::Success;
        return res;
    }

    int iter;
    bool ok = false;
    for (iter = 1; iter <= ell && !ok; ++iter) {
        for (int32_t e = 0; e < edges; ++e)
            msg_vc[e] = std::clamp(acc[edge_bit[e]] - w * msg_cv[e], -kMsgCap, kMsgCap);

        for (int j = 0; j < m_rows; ++j) {
            const int32_t b = off[j];
            const int deg = off[j + 1] - b;
            for (int t = 0; t < deg; ++t)
                th[t] = std::clamp(std::tanh(0.5 * msg_vc[b + t]), -kTanhCap, kTanhCap);
            fwd[0] = 1.0;
            for (int t = 0; t < deg; ++t) fwd[t + 1] = fwd[t] * th[t];
            bwd[deg] = 1.0;
            for (int t = deg - 1; t >= 0; --t) bwd[t] = bwd[t + 1] * th[t];
            for (int t = 0; t < deg; ++t) {
                double prod = std::clamp(fwd[t] * bwd[t + 1], -kTanhCap, kTanhCap);
                msg_cv[b + t] = 2.0 * std::atanh(prod);
            }
        }

        for (int i = 0; i < n; ++i) acc[i] = gamma[i];
        for (int32_t e = 0; e < edges; ++e) acc[edge_bit[e]] += w * msg_cv[e];
        ok = decide();
    }

    res.word = word;
    res.iterations_used = ok ? iter - 1 : ell;
    res.valid = ok;
    res.verdict = ok ? Verdict::Success : Verdict::Failure;
    return res;
}

} // namespace rmpc

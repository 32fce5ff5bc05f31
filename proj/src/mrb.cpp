#include "rmpc/decoders.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rmpc {

namespace {

// Correlation discrepancy: total reliability of the bits where the candidate
// disagrees with the hard decision.
double discrepancy(const BinaryWord& diff, const std::vector<double>& reliab) {
    double s = 0.0;
    for (size_t l = 0; l < diff.limbs().size(); ++l) {
        uint64_t bits = diff.limbs()[l];
        while (bits) {
            int b = std::countr_zero(bits);
            s += reliab[64 * l + b];
            bits &= bits - 1;
        }
    }
    return s;
}

} // namespace

DecodeResult mrb_decode(const RmCode& code, const std::vector<double>& gamma, int nu) {
    const int n = code.n, k = code.k;
    if (static_cast<int>(gamma.size()) != n) throw std::invalid_argument("llr length mismatch");
    if (nu < 0) throw std::invalid_argument("reprocessing order must be nonnegative");

    std::vector<int32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int32_t a, int32_t b) {
        return std::fabs(gamma[a]) > std::fabs(gamma[b]);
    });

    // Reduce the generator onto the most reliable independent columns; after
    // full elimination row t is the unique generator row with a 1 at
    // basis_col[t] and 0 at every other basis column.
    std::vector<BinaryWord> rows(code.gen);
    std::vector<int32_t> basis_col;
    basis_col.reserve(k);
    int done = 0;
    for (int32_t c : order) {
        int pivot = -1;
        for (int p = done; p < k; ++p) {
            if (rows[p].get(c)) {
                pivot = p;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[done], rows[pivot]);
        for (int q = 0; q < k; ++q)
            if (q != done && rows[q].get(c)) rows[q] ^= rows[done];
        basis_col.push_back(c);
        if (++done == k) break;
    }

    BinaryWord hard(n);
    std::vector<double> reliab(n);
    for (int i = 0; i < n; ++i) {
        reliab[i] = std::fabs(gamma[i]);
        if (gamma[i] < 0.0) hard.set(i, true);
    }

    // Re-encode the hard decision restricted to the basis; all candidates are
    // tracked through their difference from the hard word.
    BinaryWord diff(hard);
    for (int t = 0; t < k; ++t)
        if (hard.get(basis_col[t])) diff ^= rows[t];

    BinaryWord best_diff(diff);
    double best = discrepancy(diff, reliab);
    long candidates = 1;

    // All basis error patterns of weight 1..nu in graded order, sharing XOR
    // prefixes across the combination walk.
    const int max_w = std::min(nu, k);
    std::vector<int> comb;
    std::vector<BinaryWord> pref;
    for (int w = 1; w <= max_w; ++w) {
        comb.resize(w);
        pref.assign(w, diff);
        for (int t = 0; t < w; ++t) {
            comb[t] = t;
            pref[t] = t ? pref[t - 1] : diff;
            pref[t] ^= rows[t];
        }
        for (;;) {
            ++candidates;
            double s = discrepancy(pref[w - 1], reliab);
            if (s < best) {
                best = s;
                best_diff = pref[w - 1];
            }
            int t = w - 1;
            while (t >= 0 && comb[t] == k - w + t) --t;
            if (t < 0) break;
            ++comb[t];
            for (int u = t + 1; u < w; ++u) comb[u] = comb[u - 1] + 1;
            for (int u = t; u < w; ++u) {
                pref[u] = u ? pref[u - 1] : diff;
                pref[u] ^= rows[comb[u]];
            }
        }
    }

    DecodeResult res;
    res.word = hard;
    res.word ^= best_diff;
    res.iterations_used = static_cast<int>(candidates);
    res.valid = is_codeword(code, res.word);
    res.verdict = Verdict::Success;
    return res;
}

} // namespace rmpc

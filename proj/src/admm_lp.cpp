#include "rmpc/decoders.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rmpc {

namespace {

struct WaterEvent {
    double at;  // beta at which the coordinate changes regime
    int delta;  // +1 entering (0,1), -1 saturating at 1
    double val;
};

// Solves sum_i clip(vt_i + beta, 0, 1) = 1 exactly by walking the
// piecewise-linear segments.  Caller guarantees the sum at beta = 0 is
// below 1, so the crossing lies at some beta > 0.
double waterfill(const std::vector<double>& vt) {
    std::vector<WaterEvent> ev;
    ev.reserve(2 * vt.size());
    for (double x : vt) {
        ev.push_back({-x, +1, x});
        ev.push_back({1.0 - x, -1, x});
    }
    std::sort(ev.begin(), ev.end(),
              [](const WaterEvent& a, const WaterEvent& b) { return a.at < b.at; });

    double lo = -std::numeric_limits<double>::infinity();
    int active = 0;
    double active_sum = 0.0;
    double saturated = 0.0;
    for (const WaterEvent& e : ev) {
        if (active > 0) {
            double beta = (1.0 - saturated - active_sum) / active;
            if (beta >= lo && beta <= e.at) return beta;
        }
        if (e.delta > 0) {
            ++active;
            active_sum += e.val;
        } else {
            --active;
            active_sum -= e.val;
            saturated += 1.0;
        }
        lo = e.at;
    }
    // Every coordinate saturated: the sum equals the dimension (>= 2), so the
    // crossing was inside some earlier segment.
    return lo;
}

} // namespace

std::vector<double> project_parity_polytope(std::vector<double> v) {
    const int d = static_cast<int>(v.size());
    if (d < 2) throw std::invalid_argument("parity polytope needs dimension >= 2");

    // Candidate odd set: coordinates rounding to 1, with the closest-to-half
    // coordinate toggled when that count comes out even.
    std::vector<char> in_s(d);
    int s_size = 0;
    for (int i = 0; i < d; ++i) {
        in_s[i] = v[i] >= 0.5 ? 1 : 0;
        s_size += in_s[i];
    }
    if (s_size % 2 == 0) {
        int pick = 0;
        double best = std::fabs(v[0] - 0.5);
        for (int i = 1; i < d; ++i) {
            double off = std::fabs(v[i] - 0.5);
            if (off < best) {
                best = off;
                pick = i;
            }
        }
        in_s[pick] ^= 1;
    }

    // The box clip is the projection unless it crosses the facet of the
    // candidate odd set.
    double slack = 0.0;
    for (int i = 0; i < d; ++i) {
        double u = std::clamp(v[i], 0.0, 1.0);
        slack += in_s[i] ? 1.0 - u : u;
    }
    if (slack >= 1.0) {
        for (double& x : v) x = std::clamp(x, 0.0, 1.0);
        return v;
    }

    // Mirror the odd-set coordinates, waterfill onto the simplex-like slice,
    // and mirror back.
    std::vector<double> vt(d);
    for (int i = 0; i < d; ++i) vt[i] = in_s[i] ? 1.0 - v[i] : v[i];
    double beta = waterfill(vt);
    for (int i = 0; i < d; ++i) {
        double t = std::clamp(vt[i] + beta, 0.0, 1.0);
        v[i] = in_s[i] ? 1.0 - t : t;
    }
    return v;
}

DecodeResult admm_lp_decode(const PcMatrix& h, const std::vector<double>& gamma, double mu,
                            int t_max, double tol, const RmCode& code) {
    const int n = h.cols();
    const int m_rows = h.row_count();
    if (static_cast<int>(gamma.size()) != n) throw std::invalid_argument("llr length mismatch");
    if (mu <= 0.0) throw std::invalid_argument("mu must be positive");

    // Flattened per-edge replica and scaled dual storage, grouped by check.
    std::vector<int32_t> off(m_rows + 1, 0);
    for (int j = 0; j < m_rows; ++j)
        off[j + 1] = off[j] + static_cast<int32_t>(h.row(j).size());
    const int32_t edges = off[m_rows];
    std::vector<int32_t> edge_bit(edges);
    for (int j = 0; j < m_rows; ++j) {
        const auto& sup = h.row(j);
        for (size_t t = 0; t < sup.size(); ++t) edge_bit[off[j] + t] = sup[t];
    }

    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = 1.0 / (1.0 + std::exp(gamma[i]));
    std::vector<double> z(edges), lambda(edges, 0.0);
    for (int32_t e = 0; e < edges; ++e) z[e] = x[edge_bit[e]];

    std::vector<int> degree(n, 0);
    for (int32_t e = 0; e < edges; ++e) ++degree[edge_bit[e]];

    BinaryWord word(n);
    std::vector<double> slice;
    std::vector<double> acc(n);

    auto round_and_check = [&]() {
        for (int i = 0; i < n; ++i) word.set(i, x[i] > 0.5);
        return is_codeword(code, word);
    };

    int iter = 0;
    bool found = false;
    for (iter = 1; iter <= t_max; ++iter) {
        // Variable update: average the replica views, offset by the channel.
        std::fill(acc.begin(), acc.end(), 0.0);
        for (int32_t e = 0; e < edges; ++e) acc[edge_bit[e]] += z[e] - lambda[e] / mu;
        for (int i = 0; i < n; ++i) {
            if (degree[i] == 0) {
                x[i] = gamma[i] > 0.0 ? 0.0 : 1.0;
            } else {
                x[i] = std::clamp((acc[i] - gamma[i] / mu) / degree[i], 0.0, 1.0);
            }
        }

        // Replica update: project each check's slice of x + lambda/mu, then
        // take the dual ascent step.
        double residual = 0.0;
        for (int j = 0; j < m_rows; ++j) {
            const int32_t b = off[j], e_end = off[j + 1];
            const int deg = e_end - b;
            if (deg < 2) continue;
            slice.resize(deg);
            for (int t = 0; t < deg; ++t) slice[t] = x[edge_bit[b + t]] + lambda[b + t] / mu;
            slice = project_parity_polytope(std::move(slice));
            for (int t = 0; t < deg; ++t) {
                double zi = slice[t];
                double gap = x[edge_bit[b + t]] - zi;
                z[b + t] = zi;
                lambda[b + t] += mu * gap;
                residual = std::max(residual, std::fabs(gap));
            }
        }

        if (round_and_check()) {
            found = true;
            break;
        }
        if (residual < tol) break;
    }

    DecodeResult res;
    if (!found) found = round_and_check();
    res.word = word;
    res.valid = found;
    res.verdict = found ? Verdict::Success : Verdict::Failure;
    res.iterations_used = std::min(iter, t_max);
    return res;
}

} // namespace rmpc

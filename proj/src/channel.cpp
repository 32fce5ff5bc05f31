#include "rmpc/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rmpc {

double awgn_sigma2(double rate, double ebn0_db) {
    if (rate <= 0.0) throw std::invalid_argument("rate must be positive");
    return 1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0));
}

ChannelObservation transmit(const BinaryWord& c, ChannelKind kind, double param, double rate,
                            Rng& rng) {
    int n = c.size();
    ChannelObservation obs;
    obs.kind = kind;
    obs.param = param;
    switch (kind) {
    case ChannelKind::Bec:
        if (param < 0.0 || param > 1.0) throw std::invalid_argument("erasure rate outside [0,1]");
        obs.hard.resize(n);
        obs.erased.resize(n);
        for (int i = 0; i < n; ++i) {
            obs.erased[i] = rng.bernoulli(param);
            obs.hard[i] = uint8_t(c.get(i));
        }
        break;
    case ChannelKind::Bsc:
        if (param < 0.0 || param > 1.0) throw std::invalid_argument("crossover outside [0,1]");
        obs.hard.resize(n);
        for (int i = 0; i < n; ++i)
            obs.hard[i] = uint8_t(c.get(i) ^ int(rng.bernoulli(param)));
        break;
    case ChannelKind::Awgn:
        obs.sigma2 = awgn_sigma2(rate, param);
        obs.y.resize(n);
        {
            double sigma = std::sqrt(obs.sigma2);
            for (int i = 0; i < n; ++i)
                obs.y[i] = (c.get(i) ? -1.0 : 1.0) + sigma * rng.gaussian();
        }
        break;
    }
    return obs;
}

std::vector<double> llr(const ChannelObservation& obs) {
    std::vector<double> g;
    switch (obs.kind) {
    case ChannelKind::Bec:
        g.resize(obs.hard.size());
        for (size_t i = 0; i < g.size(); ++i)
            g[i] = obs.erased[i] ? 0.0 : (obs.hard[i] ? -LLR_CAP : LLR_CAP);
        break;
    case ChannelKind::Bsc: {
        double mag = std::log((1.0 - obs.param) / obs.param); // +-inf at the endpoints
        mag = std::clamp(mag, -LLR_CAP, LLR_CAP);
        g.resize(obs.hard.size());
        for (size_t i = 0; i < g.size(); ++i) g[i] = obs.hard[i] ? -mag : mag;
        break;
    }
    case ChannelKind::Awgn:
        g.resize(obs.y.size());
        for (size_t i = 0; i < g.size(); ++i)
            g[i] = std::clamp(2.0 * obs.y[i] / obs.sigma2, -LLR_CAP, LLR_CAP);
        break;
    }
    return g;
}

} // namespace rmpc

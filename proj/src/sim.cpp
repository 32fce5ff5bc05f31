#include "rmpc/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "rmpc/decoders.hpp"
#include "rmpc/mwpc.hpp"
#include "rmpc/rng.hpp"
#include "rmpc/tailor.hpp"

namespace rmpc {

std::string channel_name(ChannelKind k) {
    switch (k) {
    case ChannelKind::Bec: return "bec";
    case ChannelKind::Bsc: return "bsc";
    case ChannelKind::Awgn: return "awgn";
    }
    return "?";
}

std::string decoder_name(DecoderKind d) {
    switch (d) {
    case DecoderKind::Peeling: return "pd";
    case DecoderKind::SumProduct: return "bp";
    case DecoderKind::LinearProgram: return "lp";
    case DecoderKind::BitFlip: return "bf";
    case DecoderKind::MostReliableBasis: return "mrb";
    case DecoderKind::ExactErasure: return "ml-bec";
    case DecoderKind::Exhaustive: return "ml-bf";
    }
    return "?";
}

std::string policy_name(MatrixPolicy p) {
    switch (p) {
    case MatrixPolicy::Full: return "full";
    case MatrixPolicy::Tailored: return "tailored";
    case MatrixPolicy::RandomSubset: return "random";
    }
    return "?";
}

namespace {

bool decoder_uses_matrix(DecoderKind d) {
    return d == DecoderKind::Peeling || d == DecoderKind::SumProduct ||
           d == DecoderKind::LinearProgram || d == DecoderKind::BitFlip;
}

struct FrameOutcome {
    uint8_t error = 0;
    uint8_t decoded = 0;
    int iters = 0;
};

struct PointContext {
    const ExperimentConfig& cfg;
    const RmCode& code;
    const PcMatrix* h_full; // only when the policy draws from the full matrix
    double param;
};

FrameOutcome trivial_outcome(const PointContext& ctx, const std::vector<double>& g,
                             const BinaryWord& sent) {
    BinaryWord w(ctx.code.n);
    for (int i = 0; i < ctx.code.n; ++i)
        if (g[i] < 0.0) w.set(i, true);
    bool ok = is_codeword(ctx.code, w);
    bool err = w != sent || (ctx.cfg.channel == ChannelKind::Bec && !ok);
    return {static_cast<uint8_t>(err), 1, 0};
}

FrameOutcome run_frame(const PointContext& ctx, uint64_t idx) {
    const ExperimentConfig& cfg = ctx.cfg;
    const RmCode& code = ctx.code;
    Rng rng = frame_rng(cfg.seed, idx);

    BinaryWord u(code.k);
    for (int i = 0; i < code.k; ++i)
        if (rng.bernoulli(0.5)) u.set(i, true);
    BinaryWord sent = encode(code, u);

    double rate = double(code.k) / code.n;
    ChannelObservation obs = transmit(sent, cfg.channel, ctx.param, rate, rng);
    std::vector<double> g = llr(obs);

    PcMatrix local(code.n);
    const PcMatrix* h = nullptr;
    if (decoder_uses_matrix(cfg.decoder)) {
        switch (cfg.policy) {
        case MatrixPolicy::Full:
            h = ctx.h_full;
            break;
        case MatrixPolicy::Tailored: {
            ReliabilityPartition part;
            if (cfg.channel == ChannelKind::Bec) {
                for (int i = 0; i < code.n; ++i)
                    (obs.erased[i] ? part.bad : part.good).push_back(i);
            } else {
                part = classify_bits(g, cfg.f);
            }
            // No unreliable bits: the channel word itself is the decision.
            if (part.bad.empty()) return trivial_outcome(ctx, g, sent);
            // Too few reliable bits to anchor even one row: frame is lost.
            if (static_cast<int>(part.good.size()) < code.r + 1) return {1, 0, 0};
            TailorResult tr = build_tailored_matrix(code.r, code.m, part, cfg.s, rng);
            local = std::move(tr.h); // saturated builds decode with what they got
            h = &local;
            break;
        }
        case MatrixPolicy::RandomSubset: {
            // Floyd's sampling: s distinct rows, order-independent once sorted.
            const int total = ctx.h_full->row_count();
            std::vector<int32_t> pick;
            pick.reserve(cfg.s);
            std::vector<uint8_t> chosen(total, 0);
            for (int j = total - cfg.s; j < total; ++j) {
                auto t = static_cast<int32_t>(rng.uniform_below(uint64_t(j) + 1));
                if (chosen[t]) {
                    chosen[j] = 1;
                    pick.push_back(j);
                } else {
                    chosen[t] = 1;
                    pick.push_back(t);
                }
            }
            std::sort(pick.begin(), pick.end());
            for (int32_t row : pick) local.add_row(ctx.h_full->row(row));
            h = &local;
            break;
        }
        }
    }

    DecodeResult res;
    switch (cfg.decoder) {
    case DecoderKind::Peeling:
        res = peel(*h, obs, code);
        break;
    case DecoderKind::SumProduct:
        res = bp_decode(*h, g, cfg.w, cfg.ell, code);
        break;
    case DecoderKind::LinearProgram:
        res = admm_lp_decode(*h, g, cfg.mu, cfg.t_max, cfg.tol, code);
        break;
    case DecoderKind::BitFlip: {
        std::vector<uint8_t> y(code.n);
        for (int i = 0; i < code.n; ++i) y[i] = g[i] < 0.0 ? 1 : 0;
        res = bit_flip_decode(*h, y, 2 * code.n, code);
        break;
    }
    case DecoderKind::MostReliableBasis:
        res = mrb_decode(code, g, cfg.nu);
        break;
    case DecoderKind::ExactErasure:
        res = ml_bec_decode(code, obs);
        break;
    case DecoderKind::Exhaustive:
        res = ml_bruteforce(code, g);
        break;
    }

    bool err = res.word != sent;
    if (cfg.channel == ChannelKind::Bec && res.verdict != Verdict::Success) err = true;
    return {static_cast<uint8_t>(err), 1, res.iterations_used};
}

SweepRecord run_point_shared(const ExperimentConfig& cfg, double param, const PcMatrix* h_full) {
    RmCode code = build_code(cfg.r, cfg.m);
    PointContext ctx{cfg, code, h_full, param};

    auto t0 = std::chrono::steady_clock::now();
    uint64_t frames = 0, errors = 0, decoded = 0;
    long double iter_sum = 0;

    const int workers = std::max(1, cfg.threads);
    const uint64_t batch = workers == 1 ? 1 : uint64_t(workers) * 8;
    std::vector<FrameOutcome> out(batch);

    uint64_t base = 0;
    bool stop = false;
    while (!stop && frames < cfg.max_frames) {
        uint64_t chunk = std::min<uint64_t>(batch, cfg.max_frames - frames);
        if (workers == 1) {
            for (uint64_t j = 0; j < chunk; ++j) out[j] = run_frame(ctx, base + j);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (int t = 0; t < workers; ++t)
                pool.emplace_back([&, t] {
                    for (uint64_t j = uint64_t(t); j < chunk; j += uint64_t(workers))
                        out[j] = run_frame(ctx, base + j);
                });
            for (auto& th : pool) th.join();
        }
        // The scan is in frame order and truncates at the stopping frame, so
        // the counts never depend on how the batch was scheduled.
        for (uint64_t j = 0; j < chunk; ++j) {
            ++frames;
            if (out[j].decoded) {
                ++decoded;
                iter_sum += out[j].iters;
            }
            if (out[j].error && ++errors == cfg.min_block_errors) {
                stop = true;
                break;
            }
        }
        base += chunk;
    }
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    SweepRecord rec;
    rec.r = cfg.r;
    rec.m = cfg.m;
    rec.channel = channel_name(cfg.channel);
    rec.decoder = decoder_name(cfg.decoder);
    rec.matrix_policy = policy_name(cfg.policy);
    rec.param = param;
    bool tailored = cfg.policy == MatrixPolicy::Tailored && decoder_uses_matrix(cfg.decoder);
    bool subset = cfg.policy == MatrixPolicy::RandomSubset && decoder_uses_matrix(cfg.decoder);
    if (tailored && cfg.channel != ChannelKind::Bec) rec.f = cfg.f;
    if (tailored || subset) rec.s = cfg.s;
    if (cfg.decoder == DecoderKind::SumProduct) {
        rec.w = cfg.w;
        rec.ell = cfg.ell;
    }
    if (cfg.decoder == DecoderKind::LinearProgram) {
        rec.mu = cfg.mu;
        rec.tmax = cfg.t_max;
    }
    if (cfg.decoder == DecoderKind::MostReliableBasis) rec.nu = cfg.nu;
    rec.seed = cfg.seed;
    rec.frames = frames;
    rec.block_errors = errors;
    rec.bler = frames ? double(errors) / double(frames) : 0.0;
    rec.wall_time_s = wall;
    rec.decoder_iters_mean = decoded ? double(iter_sum / decoded) : 0.0;
    return rec;
}

bool policy_needs_full(const ExperimentConfig& cfg) {
    return decoder_uses_matrix(cfg.decoder) &&
           (cfg.policy == MatrixPolicy::Full || cfg.policy == MatrixPolicy::RandomSubset);
}

} // namespace

void validate_config(const ExperimentConfig& cfg) {
    code_params(cfg.r, cfg.m); // throws when (r, m) is out of range
    if (cfg.params.empty()) throw std::invalid_argument("no channel parameters to sweep");
    if (cfg.min_block_errors < 1) throw std::invalid_argument("min_block_errors must be >= 1");
    if (cfg.max_frames < 1) throw std::invalid_argument("frame budget must be >= 1");
    if (cfg.threads < 1) throw std::invalid_argument("thread count must be >= 1");

    for (double p : cfg.params) {
        if (cfg.channel != ChannelKind::Awgn && !(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("rate parameters must lie in [0, 1]");
    }

    switch (cfg.decoder) {
    case DecoderKind::Peeling:
        if (cfg.channel != ChannelKind::Bec)
            throw std::invalid_argument("peeling decodes erasures only");
        break;
    case DecoderKind::ExactErasure:
        if (cfg.channel != ChannelKind::Bec)
            throw std::invalid_argument("the exact erasure solver decodes erasures only");
        break;
    case DecoderKind::MostReliableBasis:
        if (cfg.channel == ChannelKind::Bsc)
            throw std::invalid_argument(
                "basis reprocessing needs graded reliabilities; crossover flips are uniform");
        if (cfg.nu < 0) throw std::invalid_argument("reprocessing order must be >= 0");
        break;
    case DecoderKind::Exhaustive:
        if (code_params(cfg.r, cfg.m).k > 20)
            throw std::invalid_argument("exhaustive search is limited to k <= 20");
        break;
    case DecoderKind::SumProduct:
        if (cfg.ell < 0) throw std::invalid_argument("iteration budget must be >= 0");
        break;
    case DecoderKind::LinearProgram:
        if (cfg.mu <= 0.0) throw std::invalid_argument("penalty must be positive");
        if (cfg.t_max < 1) throw std::invalid_argument("sweep budget must be >= 1");
        break;
    case DecoderKind::BitFlip:
        break;
    }

    if (decoder_uses_matrix(cfg.decoder)) {
        if (cfg.policy == MatrixPolicy::Tailored) {
            if (cfg.channel == ChannelKind::Bsc)
                throw std::invalid_argument(
                    "tailoring needs erasure or soft reliability information; on the "
                    "crossover channel every bit is equally reliable");
            if (!(cfg.f >= 0.0 && cfg.f <= 1.0))
                throw std::invalid_argument("reliable fraction must lie in [0, 1]");
        }
        if (cfg.policy != MatrixPolicy::Full) {
            if (cfg.s < 1) throw std::invalid_argument("row budget must be >= 1");
            if (uint64_t(cfg.s) > count_mwpc(cfg.r, cfg.m))
                throw std::invalid_argument("row budget exceeds the dual row count");
        }
    }
}

SweepRecord run_point(const ExperimentConfig& cfg, double param) {
    validate_config(cfg);
    if (policy_needs_full(cfg)) {
        PcMatrix h = full_mwpc_matrix(cfg.r, cfg.m);
        return run_point_shared(cfg, param, &h);
    }
    return run_point_shared(cfg, param, nullptr);
}

std::vector<SweepRecord> run_sweep(const ExperimentConfig& cfg) {
    validate_config(cfg);
    PcMatrix shared(1);
    const PcMatrix* h_full = nullptr;
    if (policy_needs_full(cfg)) {
        shared = full_mwpc_matrix(cfg.r, cfg.m);
        h_full = &shared;
    }
    std::vector<SweepRecord> recs;
    recs.reserve(cfg.params.size());
    for (double p : cfg.params) recs.push_back(run_point_shared(cfg, p, h_full));
    return recs;
}

namespace {

std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

std::string to_csv(const std::vector<SweepRecord>& recs) {
    std::string out =
        "code,r,m,channel,param,decoder,matrix_policy,f,s,w,ell,mu,tmax,nu,seed,"
        "frames,block_errors,bler,wall_time_s\n";
    for (const SweepRecord& x : recs) {
        out += "\"RM(" + std::to_string(x.r) + "," + std::to_string(x.m) + ")\",";
        out += std::to_string(x.r) + "," + std::to_string(x.m) + ",";
        out += x.channel + "," + fmt_g(x.param) + "," + x.decoder + "," + x.matrix_policy + ",";
        out += (x.f ? fmt_g(*x.f) : "") + std::string(",");
        out += (x.s ? std::to_string(*x.s) : "") + std::string(",");
        out += (x.w ? fmt_g(*x.w) : "") + std::string(",");
        out += (x.ell ? std::to_string(*x.ell) : "") + std::string(",");
        out += (x.mu ? fmt_g(*x.mu) : "") + std::string(",");
        out += (x.tmax ? std::to_string(*x.tmax) : "") + std::string(",");
        out += (x.nu ? std::to_string(*x.nu) : "") + std::string(",");
        out += std::to_string(x.seed) + "," + std::to_string(x.frames) + "," +
               std::to_string(x.block_errors) + ",";
        out += fmt_g(x.bler) + "," + fmt_g(x.wall_time_s) + "\n";
    }
    return out;
}

std::string to_json(const std::vector<SweepRecord>& recs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SweepRecord& x : recs) {
        nlohmann::json o;
        o["code"] = "RM(" + std::to_string(x.r) + "," + std::to_string(x.m) + ")";
        o["r"] = x.r;
        o["m"] = x.m;
        o["channel"] = x.channel;
        o["param"] = x.param;
        o["decoder"] = x.decoder;
        o["matrix_policy"] = x.matrix_policy;
        o["f"] = x.f ? nlohmann::json(*x.f) : nlohmann::json(nullptr);
        o["s"] = x.s ? nlohmann::json(*x.s) : nlohmann::json(nullptr);
        o["w"] = x.w ? nlohmann::json(*x.w) : nlohmann::json(nullptr);
        o["ell"] = x.ell ? nlohmann::json(*x.ell) : nlohmann::json(nullptr);
        o["mu"] = x.mu ? nlohmann::json(*x.mu) : nlohmann::json(nullptr);
        o["tmax"] = x.tmax ? nlohmann::json(*x.tmax) : nlohmann::json(nullptr);
        o["nu"] = x.nu ? nlohmann::json(*x.nu) : nlohmann::json(nullptr);
        o["seed"] = x.seed;
        o["frames"] = x.frames;
        o["block_errors"] = x.block_errors;
        o["bler"] = x.bler;
        o["wall_time_s"] = x.wall_time_s;
        arr.push_back(std::move(o));
    }
    return arr.dump(2);
}

std::vector<SweepRecord> from_json(const std::string& text) {
    nlohmann::json arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw std::invalid_argument("expected a record array");
    std::vector<SweepRecord> recs;
    recs.reserve(arr.size());
    for (const auto& o : arr) {
        SweepRecord x;
        x.r = o.at("r").get<int>();
        x.m = o.at("m").get<int>();
        x.channel = o.at("channel").get<std::string>();
        x.param = o.at("param").get<double>();
        x.decoder = o.at("decoder").get<std::string>();
        x.matrix_policy = o.at("matrix_policy").get<std::string>();
        if (!o.at("f").is_null()) x.f = o.at("f").get<double>();
        if (!o.at("s").is_null()) x.s = o.at("s").get<long long>();
        if (!o.at("w").is_null()) x.w = o.at("w").get<double>();
        if (!o.at("ell").is_null()) x.ell = o.at("ell").get<long long>();
        if (!o.at("mu").is_null()) x.mu = o.at("mu").get<double>();
        if (!o.at("tmax").is_null()) x.tmax = o.at("tmax").get<long long>();
        if (!o.at("nu").is_null()) x.nu = o.at("nu").get<long long>();
        x.seed = o.at("seed").get<uint64_t>();
        x.frames = o.at("frames").get<uint64_t>();
        x.block_errors = o.at("block_errors").get<uint64_t>();
        x.bler = o.at("bler").get<double>();
        x.wall_time_s = o.at("wall_time_s").get<double>();
        recs.push_back(std::move(x));
    }
    return recs;
}

} // namespace rmpc

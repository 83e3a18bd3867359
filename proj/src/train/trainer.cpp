#include "blescope/train/trainer.hpp"

#include <chrono>
#include <cmath>

#include <json.hpp>

#include "blescope/core/error.hpp"
#include "blescope/core/windows.hpp"
#include "blescope/model/losses.hpp"
#include "blescope/nn/adam.hpp"
#include "blescope/nn/checkpoint.hpp"

namespace blescope::train {

namespace {

using nn::Mat;
using nn::Seq;

void shuffle(std::vector<int>& v, nn::Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng.below(i)]);
}

// Flattened training windows plus the contiguous-pair units batches are
// built from (pairs keep the position-smoothness loss well-defined).
struct Pool {
  std::vector<Mat> window;  // scaled B x H
  std::vector<char> labeled;
  std::vector<Location> loc;
  std::vector<std::pair<int, int>> units;  // (first window index, count 1|2)
  int skipped_pairs = 0;

  int total_windows() const { return static_cast<int>(window.size()); }
  bool empty() const { return window.empty(); }
};

Pool build_pool(const std::vector<Run>& runs, int window_len, double scale) {
  Pool pool;
  for (const Run& run : runs) {
    if (run.length() < window_len) continue;
    const int base = pool.total_windows();
    std::vector<long> end_times;
    for (int end = window_len - 1; end < run.length(); ++end) {
      pool.window.push_back(run.rssi.middleCols(end - window_len + 1, window_len) * scale);
      pool.labeled.push_back(run.has_labels ? 1 : 0);
      pool.loc.push_back(run.has_labels ? run.locations[static_cast<std::size_t>(end)]
                                        : Location{});
      end_times.push_back(run.time_at(end));
    }
    const int n = pool.total_windows() - base;
    int i = 0;
    while (i + 1 < n) {
      if (end_times[static_cast<std::size_t>(i) + 1] - end_times[static_cast<std::size_t>(i)] == 1) {
        pool.units.push_back({base + i, 2});
        i += 2;
      } else {
        ++pool.skipped_pairs;
        pool.units.push_back({base + i, 1});
        ++i;
      }
    }
    if (i < n) pool.units.push_back({base + i, 1});
  }
  return pool;
}

struct Batch {
  const Pool* pool = nullptr;
  Seq input;                               // window_len slices of (B x N)
  std::vector<int> window_idx;             // pool index per column
  std::vector<std::pair<int, int>> pairs;  // (prev col, curr col)
  std::vector<int> labeled_cols;
  bool unlabeled_kind = false;
};

Batch assemble(const Pool& pool, const std::vector<int>& unit_order, std::size_t from,
               std::size_t to, int window_len, bool unlabeled_kind) {
  int n_cols = 0;
  for (std::size_t u = from; u < to; ++u)
    n_cols += pool.units[static_cast<std::size_t>(unit_order[u])].second;

  Batch b;
  b.pool = &pool;
  b.unlabeled_kind = unlabeled_kind;
  const int B = static_cast<int>(pool.window.front().rows());
  b.input.assign(static_cast<std::size_t>(window_len), Mat(B, n_cols));
  int col = 0;
  for (std::size_t u = from; u < to; ++u) {
    const auto [first, count] = pool.units[static_cast<std::size_t>(unit_order[u])];
    for (int k = 0; k < count; ++k) {
      const int wi = first + k;
      for (int t = 0; t < window_len; ++t)
        b.input[static_cast<std::size_t>(t)].col(col) =
            pool.window[static_cast<std::size_t>(wi)].col(t);
      b.window_idx.push_back(wi);
      if (pool.labeled[static_cast<std::size_t>(wi)] && !unlabeled_kind)
        b.labeled_cols.push_back(col);
      ++col;
    }
    if (count == 2) b.pairs.push_back({col - 2, col - 1});
  }
  return b;
}

// Everything one optimizer phase needs; `transnet == nullptr` selects the
// LocNet-only path (scenario 1 and both baselines).
struct PhaseContext {
  model::LocNet* locnet = nullptr;
  model::TransNet* transnet = nullptr;
  const stats::StatMatrix* scaled_m = nullptr;  // units match scaled inputs
  LossWeights w;
  model::SslOptions ssl_opts;
  bool freeze_transnet = false;
};

// Forward, loss, and (when `step` is set) backward + Adam update for one
// batch. Returns the batch loss.
double batch_pass(PhaseContext& ctx, const Batch& batch, const nn::AdamConfig* step) {
  const Pool& pool = *batch.pool;
  const int n_cols = static_cast<int>(batch.window_idx.size());
  const int window_len = static_cast<int>(batch.input.size());
  const double scale = batch.unlabeled_kind ? ctx.w.w_u : 1.0;
  const bool use_loc = !batch.unlabeled_kind && ctx.w.w_loc > 0.0 && !batch.labeled_cols.empty();
  const bool use_ps = ctx.w.w_ps > 0.0 && !batch.pairs.empty();
  const bool use_ssl = ctx.transnet != nullptr && ctx.w.w_ssl > 0.0 && ctx.scaled_m != nullptr;
  const bool use_ts = ctx.transnet != nullptr && ctx.w.w_ts > 0.0;

  nn::Tape trans_tape, loc_tape;
  Seq ghat;
  const Seq* loc_input = &batch.input;
  if (ctx.transnet != nullptr) {
    ghat = ctx.transnet->forward_scaled(batch.input, trans_tape);
    loc_input = &ghat;
  }
  const Seq pred_seq = ctx.locnet->forward_scaled(*loc_input, loc_tape);
  const Mat& pred = pred_seq[0];  // 2 x N

  double loss = 0.0;
  Mat dpred = Mat::Zero(2, n_cols);

  if (use_loc) {
    const double norm = scale * ctx.w.w_loc / static_cast<double>(batch.labeled_cols.size());
    for (int c : batch.labeled_cols) {
      const Location p{pred(0, c), pred(1, c)};
      const Location& truth = pool.loc[static_cast<std::size_t>(batch.window_idx[static_cast<std::size_t>(c)])];
      loss += norm * model::loss_loc(p, truth);
      dpred.col(c) += norm * model::loss_loc_grad(p, truth);
    }
  }
  if (use_ps) {
    const double norm = scale * ctx.w.w_ps / static_cast<double>(batch.pairs.size());
    for (const auto& [ca, cb] : batch.pairs) {
      const Eigen::Vector2d prev = pred.col(ca);
      const Eigen::Vector2d curr = pred.col(cb);
      loss += norm * model::loss_ps(curr, prev);
      const Eigen::Vector2d g = model::loss_ps_grad(curr, prev);
      dpred.col(cb) += norm * g;
      dpred.col(ca) -= norm * g;
    }
  }

  Seq dghat_extra;
  if (use_ssl || use_ts) {
    const int B = static_cast<int>(ghat[0].rows());
    dghat_extra.assign(static_cast<std::size_t>(window_len), Mat::Zero(B, n_cols));
    const double norm = scale / static_cast<double>(n_cols);
    Mat ghat_w(B, window_len), input_w(B, window_len);
    for (int c = 0; c < n_cols; ++c) {
      for (int t = 0; t < window_len; ++t) {
        ghat_w.col(t) = ghat[static_cast<std::size_t>(t)].col(c);
        input_w.col(t) = batch.input[static_cast<std::size_t>(t)].col(c);
      }
      if (use_ssl) {
        const model::MatrixLoss ssl =
            model::loss_ssl(ghat_w, input_w, *ctx.scaled_m, ctx.ssl_opts);
        loss += norm * ctx.w.w_ssl * ssl.value;
        for (int t = 0; t < window_len; ++t)
          dghat_extra[static_cast<std::size_t>(t)].col(c) +=
              norm * ctx.w.w_ssl * ssl.grad.col(t);
      }
      if (use_ts) {
        const model::MatrixLoss ts = model::loss_ts(ghat_w);
        loss += norm * ctx.w.w_ts * ts.value;
        for (int t = 0; t < window_len; ++t)
          dghat_extra[static_cast<std::size_t>(t)].col(c) +=
              norm * ctx.w.w_ts * ts.grad.col(t);
      }
    }
  }

  if (step == nullptr) return loss;
  if (!std::isfinite(loss)) throw TrainingAborted("non-finite training loss");

  ctx.locnet->params().zero_grads();
  if (ctx.transnet != nullptr) ctx.transnet->params().zero_grads();

  Seq dghat = nn::backward(loc_tape, Seq{dpred});
  if (ctx.transnet != nullptr) {
    if (!dghat_extra.empty())
      for (int t = 0; t < window_len; ++t)
        dghat[static_cast<std::size_t>(t)] += dghat_extra[static_cast<std::size_t>(t)];
    if (!ctx.freeze_transnet) nn::backward(trans_tape, dghat);
  }

  nn::adam_step(ctx.locnet->params(), *step);
  if (ctx.transnet != nullptr && !ctx.freeze_transnet)
    nn::adam_step(ctx.transnet->params(), *step);
  return loss;
}

// Deterministic batch boundaries over a unit order.
std::vector<std::pair<std::size_t, std::size_t>> batch_ranges(const Pool& pool,
                                                              const std::vector<int>& order,
                                                              int batch_windows) {
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    int filled = 0;
    while (j < order.size() && filled < batch_windows) {
      filled += pool.units[static_cast<std::size_t>(order[j])].second;
      ++j;
    }
    ranges.push_back({i, j});
    i = j;
  }
  return ranges;
}

double mean_loss_over(PhaseContext& ctx, const Pool& pool, bool unlabeled_kind,
                      int batch_windows, int window_len) {
  if (pool.empty()) return 0.0;
  std::vector<int> order(pool.units.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  double total = 0.0;
  int windows = 0;
  for (const auto& [from, to] : batch_ranges(pool, order, batch_windows)) {
    const Batch b = assemble(pool, order, from, to, window_len, unlabeled_kind);
    total += batch_pass(ctx, b, nullptr) * static_cast<double>(b.window_idx.size());
    windows += static_cast<int>(b.window_idx.size());
  }
  return windows > 0 ? total / windows : 0.0;
}

std::string combined_checkpoint_id(PhaseContext& ctx) {
  std::string id = nn::checkpoint_id(ctx.locnet->params());
  if (ctx.transnet != nullptr) id += "-" + nn::checkpoint_id(ctx.transnet->params());
  return id;
}

// Runs one optimizer phase; on a non-finite loss or gradient the parameters
// roll back to the last completed epoch and the report is marked aborted.
TrainReport run_phase(PhaseContext& ctx, const Pool& labeled, const Pool* unlabeled,
                      const Pool* val, const OptimPhase& opt, const nn::Rng& shuffle_base,
                      int window_len, int phase_tag) {
  const auto t0 = std::chrono::steady_clock::now();
  TrainReport report;
  report.skipped_pairs = labeled.skipped_pairs + (unlabeled ? unlabeled->skipped_pairs : 0);

  nn::AdamConfig adam;
  adam.lr = opt.lr;

  nn::ModelParams loc_snapshot = ctx.locnet->params();
  nn::ModelParams trans_snapshot;
  if (ctx.transnet != nullptr) trans_snapshot = ctx.transnet->params();

  const bool use_unlabeled = unlabeled != nullptr && !unlabeled->empty() && ctx.w.w_u > 0.0;

  for (int epoch = 0; epoch < opt.epochs; ++epoch) {
    nn::Rng rng = shuffle_base.split(static_cast<std::uint64_t>(phase_tag) * 100000 +
                                     static_cast<std::uint64_t>(epoch));

    std::vector<int> lab_order(labeled.units.size());
    for (std::size_t i = 0; i < lab_order.size(); ++i) lab_order[i] = static_cast<int>(i);
    shuffle(lab_order, rng);
    auto lab_ranges = batch_ranges(labeled, lab_order, opt.batch);

    std::vector<int> unl_order;
    std::vector<std::pair<std::size_t, std::size_t>> unl_ranges;
    if (use_unlabeled) {
      unl_order.resize(unlabeled->units.size());
      for (std::size_t i = 0; i < unl_order.size(); ++i) unl_order[i] = static_cast<int>(i);
      shuffle(unl_order, rng);
      unl_ranges = batch_ranges(*unlabeled, unl_order, opt.batch);
    }

    // Interleave labeled/unlabeled batches in a shuffled order.
    std::vector<int> kinds(lab_ranges.size(), 0);
    kinds.insert(kinds.end(), unl_ranges.size(), 1);
    shuffle(kinds, rng);

    double epoch_loss = 0.0;
    int epoch_windows = 0;
    std::size_t li = 0, ui = 0;
    bool ok = true;
    try {
      for (int kind : kinds) {
        const Batch b = kind == 0
                            ? assemble(labeled, lab_order, lab_ranges[li].first,
                                       lab_ranges[li].second, window_len, false)
                            : assemble(*unlabeled, unl_order, unl_ranges[ui].first,
                                       unl_ranges[ui].second, window_len, true);
        if (kind == 0) ++li;
        else ++ui;
        const double l = batch_pass(ctx, b, &adam);
        epoch_loss += l * static_cast<double>(b.window_idx.size());
        epoch_windows += static_cast<int>(b.window_idx.size());
      }
    } catch (const TrainingAborted& e) {
      ok = false;
      report.aborted = true;
      report.abort_reason = e.what();
    }

    if (!ok) {
      // Roll back to the last finite state.
      ctx.locnet->params() = loc_snapshot;
      if (ctx.transnet != nullptr) ctx.transnet->params() = trans_snapshot;
      break;
    }

    EpochRecord rec;
    rec.epoch = epoch;
    rec.train_loss = epoch_windows > 0 ? epoch_loss / epoch_windows : 0.0;
    rec.val_loss = val != nullptr && !val->empty()
                       ? mean_loss_over(ctx, *val, false, opt.batch, window_len)
                       : 0.0;
    report.epochs.push_back(rec);

    loc_snapshot = ctx.locnet->params();
    if (ctx.transnet != nullptr) trans_snapshot = ctx.transnet->params();
  }

  report.checkpoint_id = combined_checkpoint_id(ctx);
  report.wall_clock_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

int beacon_count_of(const std::vector<Run>& runs) {
  const int B = static_cast<int>(runs.front().rssi.rows());
  for (const Run& r : runs)
    if (static_cast<int>(r.rssi.rows()) != B)
      throw Error("runs disagree on beacon count");
  return B;
}

aug::AugmentConfig effective_augment(const ScenarioConfig& cfg) {
  aug::AugmentConfig a = cfg.augment;
  // Derive the augmentation stream from the experiment seed so reseeding an
  // experiment reshuffles augmentation noise too.
  a.seed = nn::Rng(cfg.seed).split(4).next_u64() ^ a.seed;
  return a;
}

model::SslOptions ssl_options(const ScenarioConfig& cfg) {
  model::SslOptions o;
  o.tau = cfg.weights.tau;
  o.weight_exponent_cap = cfg.ssl_weight_cap;
  o.mask_zero_support = cfg.ssl_mask_zero_support;
  return o;
}

}  // namespace

void ScenarioConfig::validate() const {
  if (scenario < 1 || scenario > 3) throw Error("scenario must be 1, 2 or 3");
  if (weights.w_loc < 0 || weights.w_ps < 0 || weights.w_ssl < 0 || weights.w_ts < 0 ||
      weights.w_u < 0)
    throw Error("loss weights must be non-negative");
  if (weights.tau <= 0) throw Error("tau must be positive");
  if (window_len < 1) throw Error("window_len must be >= 1");
  if (scenario >= 2) {
    if (known_brands.empty()) throw Error("scenario 2/3 needs a nonempty known-brand set");
    if (known_brands.count(target_brand) == 0)
      throw Error("target brand J must belong to the known brands");
  }
  if (scenario == 3) {
    for (Brand b : unlabeled_brands)
      if (known_brands.count(b) != 0)
        throw Error(std::string("unlabeled brand '") + brand_name(b) +
                    "' overlaps the known-brand set");
  }
}

std::string train_report_to_json(const TrainReport& report) {
  nlohmann::json j;
  j["epochs"] = nlohmann::json::array();
  for (const auto& e : report.epochs)
    j["epochs"].push_back(
        {{"epoch", e.epoch}, {"train_loss", e.train_loss}, {"val_loss", e.val_loss}});
  j["checkpoint_id"] = report.checkpoint_id;
  j["wall_clock_s"] = report.wall_clock_s;
  j["skipped_pairs"] = report.skipped_pairs;
  j["aborted"] = report.aborted;
  if (report.aborted) j["abort_reason"] = report.abort_reason;
  if (!report.note.empty()) j["note"] = report.note;
  return j.dump(2) + "\n";
}

Scenario1Result train_scenario1(const std::vector<Run>& train_runs,
                                const std::vector<Run>& val_runs,
                                const ScenarioConfig& cfg) {
  require_no_test_runs(train_runs, "train_scenario1");
  require_no_test_runs(val_runs, "train_scenario1 (validation)");
  cfg.validate();
  if (train_runs.empty()) throw Error("train_scenario1: no training runs");

  std::vector<Run> runs = cfg.restrict_brands.empty()
                              ? train_runs
                              : restrict_runs(train_runs, cfg.restrict_brands);
  std::vector<Run> vruns = cfg.restrict_brands.empty()
                               ? val_runs
                               : restrict_runs(val_runs, cfg.restrict_brands);
  if (runs.empty()) throw Error("train_scenario1: brand filter removed all runs");
  for (const Run& r : runs)
    if (!r.has_labels) throw Error("train_scenario1: run '" + r.id + "' is unlabeled");

  const int B = beacon_count_of(runs);
  model::LocNetConfig lcfg = cfg.locnet;
  lcfg.beacons = B;

  const std::vector<Run> augmented = aug::augment_runs(runs, effective_augment(cfg));
  const Pool pool = build_pool(augmented, cfg.window_len, lcfg.input_scale);
  const Pool val_pool = build_pool(vruns, cfg.window_len, lcfg.input_scale);
  if (pool.empty()) throw Error("train_scenario1: no training windows (runs shorter than H?)");

  const nn::Rng base(cfg.seed);
  Scenario1Result result{model::LocNet(lcfg, base.split(1).next_u64()), {}};

  PhaseContext ctx;
  ctx.locnet = &result.locnet;
  ctx.w = LossWeights{cfg.weights.w_loc, 0.0, 0.0, 0.0, 0.0, cfg.weights.tau};
  result.report = run_phase(ctx, pool, nullptr, val_pool.empty() ? nullptr : &val_pool,
                            cfg.phase1, base.split(3), cfg.window_len, 1);
  return result;
}

namespace {

// Shared by scenario 2 and phase 1 of scenario 3.
Scenario2Result scenario2_impl(const std::vector<Run>& train_runs,
                               const std::vector<Run>& val_runs, const ScenarioConfig& cfg) {
  require_no_test_runs(train_runs, "train_scenario2");
  require_no_test_runs(val_runs, "train_scenario2 (validation)");
  cfg.validate();
  if (train_runs.empty()) throw Error("train_scenario2: no training runs");

  const std::vector<Run> restricted = restrict_runs(train_runs, cfg.known_brands);
  const std::vector<Run> vruns = restrict_runs(val_runs, cfg.known_brands);
  if (restricted.empty())
    throw Error("train_scenario2: no labeled runs from the known brands");
  for (const Run& r : restricted)
    if (!r.has_labels) throw Error("train_scenario2: run '" + r.id + "' is unlabeled");

  const int B = beacon_count_of(restricted);
  model::LocNetConfig lcfg = cfg.locnet;
  lcfg.beacons = B;
  model::TransNetConfig tcfg = cfg.transnet;
  tcfg.beacons = B;
  tcfg.input_scale = lcfg.input_scale;

  // Brand-conditional statistics come from raw (un-augmented) data of J.
  stats::StatMatrix m_raw = stats::stat_matrix_for_brand(restricted, cfg.target_brand);
  stats::StatMatrix m_scaled = m_raw;
  m_scaled.m *= lcfg.input_scale;

  const std::vector<Run> augmented = aug::augment_runs(restricted, effective_augment(cfg));
  const Pool pool = build_pool(augmented, cfg.window_len, lcfg.input_scale);
  const Pool val_pool = build_pool(vruns, cfg.window_len, lcfg.input_scale);
  if (pool.empty()) throw Error("train_scenario2: no training windows (runs shorter than H?)");

  const nn::Rng base(cfg.seed);
  Scenario2Result result{model::TransNet(tcfg, base.split(2).next_u64()),
                         model::LocNet(lcfg, base.split(1).next_u64()), std::move(m_raw), {}};
  if (cfg.transnet_residual_zero_init) result.transnet.zero_residual_output();

  PhaseContext ctx;
  ctx.locnet = &result.locnet;
  ctx.transnet = &result.transnet;
  ctx.scaled_m = &m_scaled;
  ctx.w = cfg.weights;
  ctx.ssl_opts = ssl_options(cfg);
  ctx.freeze_transnet = cfg.freeze_transnet;
  result.report = run_phase(ctx, pool, nullptr, val_pool.empty() ? nullptr : &val_pool,
                            cfg.phase1, base.split(3), cfg.window_len, 1);
  return result;
}

}  // namespace

Scenario2Result train_scenario2(const std::vector<Run>& train_runs,
                                const std::vector<Run>& val_runs,
                                const ScenarioConfig& cfg) {
  ScenarioConfig c = cfg;
  if (c.scenario < 2) c.scenario = 2;
  return scenario2_impl(train_runs, val_runs, c);
}

Scenario3Result train_scenario3(const std::vector<Run>& train_runs,
                                const std::vector<Run>& val_runs,
                                const std::vector<Run>& unlabeled_runs,
                                const ScenarioConfig& cfg) {
  ScenarioConfig c = cfg;
  c.scenario = 3;
  c.validate();
  require_no_test_runs(unlabeled_runs, "train_scenario3 (unlabeled)");

  Scenario2Result phase1 = scenario2_impl(train_runs, val_runs, c);

  const std::vector<Run> unlabeled =
      c.unlabeled_brands.empty() ? unlabeled_runs
                                 : restrict_runs(unlabeled_runs, c.unlabeled_brands);

  Scenario3Result result{std::move(phase1.transnet), std::move(phase1.locnet),
                         std::move(phase1.stat_matrix), std::move(phase1.report), {}};

  const std::vector<Run> restricted = restrict_runs(train_runs, c.known_brands);
  const std::vector<Run> vruns = restrict_runs(val_runs, c.known_brands);
  const double input_scale = result.locnet.config().input_scale;
  const std::vector<Run> augmented = aug::augment_runs(restricted, effective_augment(c));
  const Pool pool = build_pool(augmented, c.window_len, input_scale);
  const Pool val_pool = build_pool(vruns, c.window_len, input_scale);
  const Pool unl_pool = build_pool(unlabeled, c.window_len, input_scale);

  stats::StatMatrix m_scaled = result.stat_matrix;
  m_scaled.m *= input_scale;

  // The semi-supervised phase restarts the optimizer (new learning rate).
  result.locnet.params().reset_adam();
  result.transnet.params().reset_adam();

  PhaseContext ctx;
  ctx.locnet = &result.locnet;
  ctx.transnet = &result.transnet;
  ctx.scaled_m = &m_scaled;
  ctx.w = c.weights;
  ctx.ssl_opts = ssl_options(c);
  ctx.freeze_transnet = c.freeze_transnet;

  const bool have_unlabeled = !unl_pool.empty() && c.weights.w_u > 0.0;
  const nn::Rng base(c.seed);
  result.phase2 = run_phase(ctx, pool, have_unlabeled ? &unl_pool : nullptr,
                            val_pool.empty() ? nullptr : &val_pool, c.phase2,
                            base.split(3), c.window_len, 2);
  if (!have_unlabeled)
    result.phase2.note = unl_pool.empty()
                             ? "no unlabeled windows; phase 2 degenerated to supervised"
                             : "w_u = 0; unlabeled pool ignored";
  return result;
}

Location predict_composed(model::TransNet& transnet, model::LocNet& locnet,
                          const RssiWindow& w) {
  nn::Tape t1, t2;
  const Seq ghat = transnet.forward_scaled(
      model::window_to_seq(w, transnet.config().input_scale), t1);
  const Seq out = locnet.forward_scaled(ghat, t2);
  return {out[0](0, 0), out[0](1, 0)};
}

eval::Predictor make_predictor(model::LocNet& locnet) {
  return [&locnet](const RssiWindow& w) { return locnet.predict(w); };
}

eval::Predictor make_predictor(model::TransNet& transnet, model::LocNet& locnet) {
  return [&transnet, &locnet](const RssiWindow& w) {
    return predict_composed(transnet, locnet, w);
  };
}

}  // namespace blescope::train

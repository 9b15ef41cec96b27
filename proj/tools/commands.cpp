// Copyright 2026 The groundml Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "groundml/dataset.hpp"
#include "groundml/eval.hpp"
#include "groundml/io.hpp"
#include "groundml/metric.hpp"
#include "groundml/parallel.hpp"
#include "groundml/random.hpp"
#include "groundml/trainer.hpp"
#include "groundml/triplets.hpp"

namespace groundml::cli {
namespace {

namespace fs = std::filesystem;

// Missing or unreadable inputs; reported with exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_file(const std::string& path, const char* what) {
  if (path.empty()) throw InvalidArgument(std::string(what) + " path is required");
  if (!fs::is_regular_file(path)) throw InputError(std::string(what) + " not found: " + path);
}

struct GlobalOptions {
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string out_dir = ".";
};

struct TrainOptions {
  TrainOptions() { config.rank_k = 0; }

  TrainConfig config;
  std::string regularizer = "l1";
  std::string init = "identity_truncated";
  std::string neighbor_source = "wasserstein_euclidean";

  TrainConfig resolve(const GlobalOptions& g, Index dimension) const {
    TrainConfig c = config;
    if (c.rank_k == 0) c.rank_k = std::min<Index>(5, dimension);
    c.regularizer = parse_regularizer(regularizer);
    c.init = parse_init_kind(init);
    c.neighbor_source = parse_neighbor_source(neighbor_source);
    c.seed = g.seed;
    c.threads = g.threads;
    return c;
  }
};

void add_train_options(CLI::App* sub, TrainOptions& o) {
  sub->add_option("--alpha", o.config.alpha, "Triplet margin")->capture_default_str();
  sub->add_option("--lambda", o.config.lambda, "Regularisation strength")->capture_default_str();
  sub->add_option("--regularizer", o.regularizer, "l1 or frobenius")->capture_default_str();
  sub->add_option("--rank", o.config.rank_k, "Rows of the metric parameter matrix (0: min(5, D))")->capture_default_str();
  sub->add_option("--neighbors", o.config.neighbor_t, "Neighbours per class for triplets")->capture_default_str();
  sub->add_option("--neighbor-source", o.neighbor_source, "wasserstein_euclidean or random")->capture_default_str();
  sub->add_option("--batch-size", o.config.batch_size, "Triplets per minibatch")->capture_default_str();
  sub->add_option("--lr", o.config.learning_rate, "Adam learning rate")->capture_default_str();
  sub->add_option("--epochs", o.config.epochs, "Passes over the triplet set")->capture_default_str();
  sub->add_option("--init", o.init, "identity_truncated, random_gaussian or zero")->capture_default_str();
}

struct SplitOptions {
  int splits = 10;
  int knn_k = 0;  // 0: 5 at distribution level, 100 at point level
  double test_fraction = 0.5;
  double validation_fraction = 0.2;
  std::string level = "distribution";

  BenchmarkOptions resolve(const GlobalOptions& g) const {
    BenchmarkOptions b;
    b.level = parse_eval_level(level);
    b.splits = splits;
    b.knn_k = knn_k > 0 ? knn_k : (b.level == EvalLevel::point ? 100 : 5);
    b.test_fraction = test_fraction;
    b.validation_fraction = validation_fraction;
    b.seed = g.seed;
    b.threads = g.threads;
    return b;
  }
};

void add_split_options(CLI::App* sub, SplitOptions& o) {
  sub->add_option("--splits", o.splits, "Number of group-shuffle splits")->capture_default_str();
  sub->add_option("--knn-k", o.knn_k, "Neighbours for kNN (0: 5 per distribution, 100 per point)")
      ->capture_default_str();
  sub->add_option("--test-fraction", o.test_fraction)->capture_default_str();
  sub->add_option("--validation-fraction", o.validation_fraction)->capture_default_str();
  sub->add_option("--level", o.level, "distribution or point")->capture_default_str();
}

// Where a ground metric comes from: a params file, a baseline name, or
// "ggml" to train on the full dataset first.
struct MetricOptions {
  std::string metric = "euclidean";
  std::string params;
};

void add_metric_options(CLI::App* sub, MetricOptions& o) {
  sub->add_option("--metric", o.metric, "euclidean, manhattan, cosine or ggml")->capture_default_str();
  sub->add_option("--params", o.params, "Learned metric parameters CSV (overrides --metric)");
}

class Manifest {
 public:
  explicit Manifest(std::string command) : command_(std::move(command)) {}

  void set(const std::string& key, const std::string& value) { run_.emplace_back(key, value); }
  void set(const std::string& key, std::uint64_t value) { set(key, std::to_string(value)); }
  void artifact(const fs::path& path) { artifacts_.emplace_back(path.filename().string(), hash_file(path)); }

  void write(const fs::path& dir, const std::string& config_text, double wall_time) const {
    std::ofstream out(dir / kManifestName);
    if (!out) throw InputError("cannot write manifest in " + dir.string());
    out << "# groundml run manifest; pass it back with --config to reproduce the run\n";
    out << config_text;
    out << "\n[manifest]\ncommand=\"" << command_ << "\"\n";
    for (const auto& [k, v] : run_) out << k << "=\"" << v << "\"\n";
    out << "wall_time_seconds=" << format_double(wall_time) << "\n";
    out << "\n[manifest.artifacts]\n";
    for (const auto& [name, hash] : artifacts_) out << '"' << name << "\"=\"" << hash << "\"\n";
  }

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> run_;
  std::vector<std::pair<std::string, std::string>> artifacts_;
};

fs::path prepare_out_dir(const GlobalOptions& g) {
  fs::path dir(g.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (!fs::is_directory(dir)) throw InputError("cannot create output directory: " + g.out_dir);
  return dir;
}

LabeledDataset load_input(const std::string& path, Manifest& m) {
  require_file(path, "dataset file");
  auto ds = load_dataset(path);
  m.set("dataset_fingerprint", ds.fingerprint());
  return ds;
}

std::vector<std::string> feature_names_for(const LabeledDataset& ds, const std::string& names_path) {
  if (names_path.empty()) {
    return ds.feature_names().empty() ? default_feature_names(ds.dimension()) : ds.feature_names();
  }
  require_file(names_path, "feature names file");
  auto names = load_feature_names(names_path);
  if (static_cast<Index>(names.size()) != ds.dimension()) {
    throw InvalidArgument("feature names file has " + std::to_string(names.size()) + " names, dataset has " +
                          std::to_string(ds.dimension()) + " features");
  }
  return names;
}

GroundMetric resolve_metric(const MetricOptions& o, const LabeledDataset& ds, const TrainOptions& t,
                            const GlobalOptions& g, Manifest& m) {
  if (!o.params.empty()) {
    require_file(o.params, "params file");
    auto loaded = load_params(o.params);
    if (loaded.params.dimension() != ds.dimension()) {
      throw InvalidArgument("params dimension " + std::to_string(loaded.params.dimension()) +
                            " differs from dataset dimension " + std::to_string(ds.dimension()));
    }
    m.set("params_hash", hash_file(o.params));
    return loaded.params;
  }
  if (o.metric == "ggml") {
    const TrainConfig cfg = t.resolve(g, ds.dimension());
    cfg.validate(ds.dimension());
    const auto triplets = build_triplets(ds, cfg.neighbor_t, cfg.neighbor_source, cfg.seed, cfg.threads);
    m.set("triplet_count", triplets.size());
    m.set("init_seed", derive_seed(cfg.seed, "init"));
    return train(ds, triplets, cfg).final_params;
  }
  return parse_baseline_metric(o.metric);
}

// Per-point accuracy of kNN over the splits in which the point was scored;
// points never scored get no entry.
std::vector<std::optional<double>> point_accuracy(const LabeledDataset& ds, const GroundMetric& metric,
                                                  const BenchmarkOptions& b) {
  std::map<std::string, Index> offset;
  Index total = 0;
  for (const auto& d : ds.distributions()) {
    offset[d.id] = total;
    total += d.size();
  }
  std::vector<int> hits(static_cast<std::size_t>(total), 0), seen(static_cast<std::size_t>(total), 0);
  for (int s = 0; s < b.splits; ++s) {
    const auto split =
        group_shuffle_split(ds, b.test_fraction, b.validation_fraction, derive_seed(b.seed, "split", s));
    const Matrix d = cross_ground(split.test.stacked_points(), split.train.stacked_points(), metric, b.threads);
    const auto predicted = knn_classify(d, split.train.stacked_labels(), b.knn_k);
    std::size_t row = 0;
    for (const auto& dist : split.test.distributions()) {
      for (Index p = 0; p < dist.size(); ++p, ++row) {
        const auto g = static_cast<std::size_t>(offset[dist.id] + p);
        ++seen[g];
        hits[g] += predicted[row] == dist.label ? 1 : 0;
      }
    }
  }
  std::vector<std::optional<double>> out(static_cast<std::size_t>(total));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (seen[i] > 0) out[i] = static_cast<double>(hits[i]) / seen[i];
  }
  return out;
}

// Config text for the global options and the selected subcommand only, so
// that feeding the manifest back through --config selects the same command.
std::string selected_config(const CLI::App& app, const CLI::App* selected) {
  std::istringstream in(app.config_to_str(true, false));
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    bool foreign = false;
    for (const auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
      if (sub != selected && line.rfind(sub->get_name() + ".", 0) == 0) foreign = true;
    }
    // Unset options print as empty strings, which would not parse back as numbers.
    const bool unset = line.size() >= 3 && line.compare(line.size() - 3, 3, "=\"\"") == 0;
    if (!foreign && !unset) out << line << '\n';
  }
  return out.str();
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_double(v[i]);
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"groundml: ground metric learning for optimal transport", "groundml"};
  app.set_config("--config", "", "Read options from an INI/TOML file; command-line flags win");
  app.allow_config_extras(CLI::config_extras_mode::ignore);
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--seed", g.seed, "Base seed for every random stream")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads (0: all cores)")
      ->envname(kThreadsEnv)
      ->capture_default_str();
  app.add_option("--out-dir", g.out_dir, "Directory for outputs and the manifest")->capture_default_str();

  // synth
  auto* synth = app.add_subcommand("synth", "Generate a synthetic labelled dataset")->configurable();
  struct {
    Index dim = 2;
    int classes = 3;
    int dists = 10;
    int points = 50;
    Index signal_axis = 0;
    double class_offset = 1.0;
    std::vector<double> noise;
  } so;
  synth->add_option("--dim", so.dim, "Feature dimension (>= 2)")->capture_default_str();
  synth->add_option("--classes", so.classes)->capture_default_str();
  synth->add_option("--dists-per-class", so.dists)->capture_default_str();
  synth->add_option("--points", so.points, "Points per distribution")->capture_default_str();
  synth->add_option("--signal-axis", so.signal_axis)->capture_default_str();
  synth->add_option("--class-offset", so.class_offset)->capture_default_str();
  synth->add_option("--noise", so.noise,
                    "Noise standard deviation: one value for every axis or one per axis "
                    "(default: the anisotropic preset in 2D, 1.0 otherwise)")
      ->delimiter(',');

  // train
  auto* train_cmd = app.add_subcommand("train", "Learn a ground metric from a dataset")->configurable();
  std::string data_path;
  std::string names_path;
  bool save_triplets = false;
  TrainOptions to;
  train_cmd->add_option("--data", data_path, "Dataset CSV")->required();
  train_cmd->add_option("--feature-names", names_path, "Feature names, one per line");
  train_cmd->add_flag("--save-triplets", save_triplets, "Also write triplets.csv");
  add_train_options(train_cmd, to);

  // eval-classify
  auto* classify = app.add_subcommand("eval-classify", "kNN classification over repeated splits")->configurable();
  std::string method = "ggml";
  bool score_validation = false;
  SplitOptions sp;
  classify->add_option("--data", data_path, "Dataset CSV")->required();
  classify->add_option("--method", method, "ggml, euclidean, manhattan or cosine")->capture_default_str();
  classify->add_flag("--score-validation", score_validation, "Score the validation partition");
  add_train_options(classify, to);
  add_split_options(classify, sp);

  // eval-cluster
  auto* cluster = app.add_subcommand("eval-cluster", "Agglomerative clustering of a distance matrix")
                      ->configurable();
  std::string distances_path;
  std::string linkage = "average";
  int n_clusters = 0;
  bool median_threshold = false;
  MetricOptions mo;
  cluster->add_option("--data", data_path, "Dataset CSV (distances computed with --metric/--params)");
  cluster->add_option("--distances", distances_path, "Precomputed distance matrix CSV");
  cluster->add_option("--linkage", linkage, "average, complete or single")->capture_default_str();
  cluster->add_option("--clusters", n_clusters, "Cluster count (0: number of classes)")->capture_default_str();
  cluster->add_flag("--median-threshold", median_threshold, "Stop merging above the median pairwise distance");
  add_metric_options(cluster, mo);
  add_train_options(cluster, to);

  // distances
  auto* distances = app.add_subcommand("distances", "Export a pairwise distance matrix")->configurable();
  double min_accuracy = -1.0;
  distances->add_option("--data", data_path, "Dataset CSV")->required();
  distances->add_option("--min-accuracy", min_accuracy,
                        "Point level only: keep points whose kNN accuracy over the splits reaches this value");
  add_metric_options(distances, mo);
  add_train_options(distances, to);
  add_split_options(distances, sp);

  // importance
  auto* importance = app.add_subcommand("importance", "Rank features by learned importance")->configurable();
  std::string params_path;
  importance->add_option("--params", params_path, "Params CSV")->required();
  importance->add_option("--feature-names", names_path, "Feature names, one per line");

  // grid
  auto* grid = app.add_subcommand("grid", "Grid search over alpha and lambda on validation splits")
                   ->configurable();
  std::vector<double> alphas{0.1, 1.0, 10.0, 100.0};
  std::vector<double> lambdas{0.0, 0.1, 1.0, 10.0};
  grid->add_option("--data", data_path, "Dataset CSV")->required();
  grid->add_option("--alphas", alphas, "Comma-separated margins")->delimiter(',')->capture_default_str();
  grid->add_option("--lambdas", lambdas, "Comma-separated regularisation strengths")
      ->delimiter(',')
      ->capture_default_str();
  add_train_options(grid, to);
  add_split_options(grid, sp);

  std::vector<const char*> argv{"groundml"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    auto* selected = app.get_subcommands().front();
    Manifest m(selected->get_name());
    m.set("seed", g.seed);
    m.set("threads", std::to_string(g.threads == 0 ? default_thread_count() : g.threads));
    std::vector<fs::path> written;

    if (selected == synth) {
      SynthConfig cfg = SynthConfig::isotropic(so.dim, g.seed);
      if (so.noise.empty() && so.dim == 2) cfg = SynthConfig::anisotropic_2d(g.seed);
      cfg.class_count = so.classes;
      cfg.distributions_per_class = so.dists;
      cfg.points_per_distribution = so.points;
      cfg.signal_axis = so.signal_axis;
      cfg.class_offset = so.class_offset;
      if (so.noise.size() == 1) {
        cfg.noise_scales = Vector::Constant(std::max<Index>(so.dim, 0), so.noise[0]);
      } else if (!so.noise.empty()) {
        cfg.noise_scales = Eigen::Map<const Vector>(so.noise.data(), static_cast<Index>(so.noise.size()));
      }
      cfg.validate();
      const auto ds = generate_synthetic(cfg);
      const auto dir = prepare_out_dir(g);
      write_dataset(ds, dir / "dataset.csv");
      written.push_back(dir / "dataset.csv");
      m.set("synth_seed", derive_seed(g.seed, "synth"));
      m.set("dataset_fingerprint", ds.fingerprint());
    } else if (selected == train_cmd) {
      const auto ds = load_input(data_path, m);
      const TrainConfig cfg = to.resolve(g, ds.dimension());
      cfg.validate(ds.dimension());
      const auto names = feature_names_for(ds, names_path);
      const auto triplets = build_triplets(ds, cfg.neighbor_t, cfg.neighbor_source, cfg.seed, cfg.threads);
      const auto report = train(ds, triplets, cfg);
      const auto dir = prepare_out_dir(g);
      write_params(report.final_params, names, dir / "params.csv");
      write_loss_trace(report.initial_loss, report.loss_trace, dir / "loss.csv");
      written = {dir / "params.csv", dir / "loss.csv"};
      if (save_triplets) {
        std::ofstream tf(dir / "triplets.csv");
        write_triplets(ds, triplets, tf);
        tf.close();
        written.push_back(dir / "triplets.csv");
      }
      m.set("triplet_count", triplets.size());
      m.set("init_seed", derive_seed(cfg.seed, "init"));
      m.set("final_loss", format_double(report.loss_trace.empty() ? report.initial_loss : report.loss_trace.back()));
      out << "trained on " << triplets.size() << " triplets; loss " << format_double(report.initial_loss)
          << " -> " << format_double(report.loss_trace.empty() ? report.initial_loss : report.loss_trace.back())
          << "\n";
    } else if (selected == classify) {
      auto b = sp.resolve(g);
      b.score_validation = score_validation;
      const auto ds = load_input(data_path, m);
      const auto spec = method == "ggml" ? MethodSpec::ggml(to.resolve(g, ds.dimension()))
                                         : MethodSpec::fixed(parse_baseline_metric(method));
      const auto result = classification_benchmark(ds, spec, b);
      const auto dir = prepare_out_dir(g);
      write_benchmark(result, dir / "benchmark.csv");
      written.push_back(dir / "benchmark.csv");
      for (std::size_t s = 0; s < result.split_seeds.size(); ++s) m.set("split_seed_" + std::to_string(s), result.split_seeds[s]);
      out << spec.name() << " accuracy " << format_double(result.mean) << " (variance "
          << format_double(result.variance) << ")\n";
    } else if (selected == cluster) {
      const Linkage link = parse_linkage(linkage);
      if (data_path.empty() == distances_path.empty()) {
        throw InvalidArgument("eval-cluster needs exactly one of --data or --distances");
      }
      DistanceMatrix dm;
      std::vector<int> truth;
      int classes = 0;
      if (!data_path.empty()) {
        const auto ds = load_input(data_path, m);
        dm = pairwise_wasserstein(ds, resolve_metric(mo, ds, to, g, m), g.threads);
        truth = ds.labels();
        classes = ds.class_count();
      } else {
        require_file(distances_path, "distance matrix file");
        dm = load_distance_matrix(distances_path);
        m.set("distances_hash", hash_file(distances_path));
      }
      ClusterTarget target = ClusterTarget::median_threshold();
      if (!median_threshold) {
        const int count = n_clusters > 0 ? n_clusters : classes;
        if (count < 1) throw InvalidArgument("--clusters is required with --distances");
        target = ClusterTarget::count(count);
      }
      const auto labels = agglomerative_cluster(dm, link, target);
      const auto dir = prepare_out_dir(g);
      write_clusters(dm.ids, labels, dir / "clusters.csv");
      written.push_back(dir / "clusters.csv");
      if (!truth.empty()) {
        const auto s = clustering_metrics(labels, truth);
        std::ofstream sf(dir / "scores.csv");
        sf << "score,value\nmi," << format_double(s.mi) << "\nari," << format_double(s.ari) << "\nvi,"
           << format_double(s.vi) << "\n";
        sf.close();
        written.push_back(dir / "scores.csv");
        out << "ari " << format_double(s.ari) << " mi " << format_double(s.mi) << " vi " << format_double(s.vi)
            << "\n";
      }
    } else if (selected == distances) {
      const auto b = sp.resolve(g);
      const auto ds = load_input(data_path, m);
      const GroundMetric metric = resolve_metric(mo, ds, to, g, m);
      DistanceMatrix dm;
      if (b.level == EvalLevel::distribution) {
        if (min_accuracy >= 0.0) throw InvalidArgument("--min-accuracy applies to --level point only");
        dm = pairwise_wasserstein(ds, metric, g.threads);
      } else {
        std::vector<std::string> ids;
        for (const auto& d : ds.distributions()) {
          for (Index p = 0; p < d.size(); ++p) ids.push_back(d.id + ":" + std::to_string(p));
        }
        RowMatrix points = ds.stacked_points();
        if (min_accuracy >= 0.0) {
          const auto acc = point_accuracy(ds, metric, b);
          std::vector<Index> keep;
          for (std::size_t i = 0; i < acc.size(); ++i) {
            if (acc[i] && *acc[i] >= min_accuracy) keep.push_back(static_cast<Index>(i));
          }
          RowMatrix kept(static_cast<Index>(keep.size()), points.cols());
          std::vector<std::string> kept_ids;
          for (std::size_t r = 0; r < keep.size(); ++r) {
            kept.row(static_cast<Index>(r)) = points.row(keep[r]);
            kept_ids.push_back(ids[static_cast<std::size_t>(keep[r])]);
          }
          points = std::move(kept);
          ids = std::move(kept_ids);
          m.set("points_kept", keep.size());
        }
        dm = pairwise_ground(points, std::move(ids), metric, g.threads);
      }
      const auto dir = prepare_out_dir(g);
      write_distance_matrix(dm, dir / "distances.csv");
      written.push_back(dir / "distances.csv");
    } else if (selected == importance) {
      require_file(params_path, "params file");
      const auto loaded = load_params(params_path);
      std::vector<std::string> names = loaded.feature_names;
      if (!names_path.empty()) {
        require_file(names_path, "feature names file");
        names = load_feature_names(names_path);
      }
      const auto ranking = feature_importance(loaded.params, names);
      const auto dir = prepare_out_dir(g);
      write_importance(ranking, dir / "importance.csv");
      written.push_back(dir / "importance.csv");
      m.set("params_hash", hash_file(params_path));
    } else if (selected == grid) {
      if (alphas.empty() || lambdas.empty()) throw InvalidArgument("grid needs at least one alpha and one lambda");
      auto b = sp.resolve(g);
      b.score_validation = true;
      const auto ds = load_input(data_path, m);
      std::ostringstream rows;
      rows << "alpha,lambda,val_accuracy\n";
      for (double a : alphas) {
        for (double l : lambdas) {
          TrainOptions cell = to;
          cell.config.alpha = a;
          cell.config.lambda = l;
          const auto result = classification_benchmark(ds, MethodSpec::ggml(cell.resolve(g, ds.dimension())), b);
          rows << format_double(a) << ',' << format_double(l) << ',' << format_double(result.mean) << '\n';
          out << "alpha " << format_double(a) << " lambda " << format_double(l) << " val_accuracy "
              << format_double(result.mean) << "\n";
        }
      }
      const auto dir = prepare_out_dir(g);
      std::ofstream gf(dir / "grid.csv");
      gf << rows.str();
      gf.close();
      written.push_back(dir / "grid.csv");
      m.set("alphas", join(alphas));
      m.set("lambdas", join(lambdas));
    }

    for (const auto& p : written) m.artifact(p);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    m.write(fs::path(g.out_dir), selected_config(app, selected), wall);
    return 0;
  } catch (const InvalidArgument& e) {
    err << "error: invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace groundml::cli

#include "leadtrack/benchgen.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "leadtrack/errors.hpp"

namespace leadtrack {
namespace {

using Rng = std::mt19937_64;

bool coin(Rng& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

std::size_t uniform_index(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

// k distinct elements of `pool`, in random order (partial Fisher–Yates).
template <class T>
std::vector<T> sample_without_replacement(std::vector<T> pool, std::size_t k, Rng& rng) {
  k = std::min(k, pool.size());
  for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + uniform_index(rng, pool.size() - i)]);
  pool.resize(k);
  return pool;
}

DynamicNetwork numbered_network(std::size_t nodes) {
  DynamicNetwork net;
  for (std::size_t i = 0; i < nodes; ++i) net.symbols.intern(std::to_string(i));
  return net;
}

LabeledPartition truth_on(const SnapshotGraph& g, const std::vector<Label>& label, Label none) {
  std::vector<LabeledPartition::Entry> entries;
  for (NodeId v : g.nodes()) {
    if (label[v] != none) entries.emplace_back(v, label[v]);
  }
  return LabeledPartition(std::move(entries));
}

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError(std::string(name) + " must lie in [0, 1]");
}

}  // namespace

void KawadiaConfig::validate() const {
  if (communities == 0 || nodes == 0) throw ConfigError("kawadia: need at least one node and one community");
  if (nodes % communities != 0) throw ConfigError("kawadia: nodes must be divisible by communities");
  if (!(intra_p > 0.0 && intra_p < 1.0)) throw ConfigError("kawadia: p_c must lie in (0, 1)");
  check_probability(death_p, "kawadia: p");
  if (!(background_p >= 0.0 && background_p < 1.0)) throw ConfigError("kawadia: p_r must lie in [0, 1)");
  if (timesteps < 1) throw ConfigError("kawadia: need at least one timestep");
  if (birth_p() > 1.0) throw ConfigError("kawadia: q = p*p_c/(1-p_c) exceeds 1");
}

Benchmark generate_kawadia(const KawadiaConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  const std::size_t n = cfg.nodes;
  const std::size_t size = n / cfg.communities;
  const double q = cfg.birth_p();

  std::vector<Edge> background;
  std::vector<Edge> chain_pairs;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng, cfg.background_p)) background.emplace_back(u, v);
    }
  }
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n && v / size == u / size; ++v) chain_pairs.emplace_back(u, v);
  }
  std::vector<char> present(chain_pairs.size());
  for (auto& s : present) s = coin(rng, cfg.intra_p);

  std::vector<Label> label(n);
  for (std::size_t v = 0; v < n; ++v) label[v] = v / size;

  Benchmark out;
  out.network = numbered_network(n);
  out.chain_pair_count = chain_pairs.size();
  for (int t = 1; t <= cfg.timesteps; ++t) {
    if (t > 1) {
      for (auto& s : present) s = s ? !coin(rng, cfg.death_p) : coin(rng, q);
    }
    std::vector<Edge> edges = background;
    std::size_t live = 0;
    for (std::size_t i = 0; i < chain_pairs.size(); ++i) {
      if (present[i]) {
        edges.push_back(chain_pairs[i]);
        ++live;
      }
    }
    auto g = SnapshotGraph::from_edges(t, std::move(edges));
    out.truth.steps.push_back(truth_on(g, label, ~Label{0}));
    out.network.snapshots.push_back(std::move(g));
    out.chain_edge_counts.push_back(live);
    out.community_counts.push_back(cfg.communities);
    out.tallies.emplace_back();
  }
  return out;
}

std::string_view to_string(BenchEvent e) {
  switch (e) {
    case BenchEvent::None:
      return "none";
    case BenchEvent::Intermittent:
      return "intermittent";
    case BenchEvent::ExpandContract:
      return "expand_contract";
    case BenchEvent::BirthDeath:
      return "birth_death";
    case BenchEvent::MergeSplit:
      return "merge_split";
  }
  return "?";
}

BenchEvent parse_bench_event(std::string_view name) {
  for (auto e : {BenchEvent::None, BenchEvent::Intermittent, BenchEvent::ExpandContract, BenchEvent::BirthDeath,
                 BenchEvent::MergeSplit}) {
    if (to_string(e) == name) return e;
  }
  throw ConfigError("unknown event kind '" + std::string(name) + "'");
}

void EventBenchConfig::validate() const {
  if (communities == 0) throw ConfigError("events: need at least one community");
  if (min_size < 2 || max_size < min_size) throw ConfigError("events: need 2 <= min_size <= max_size");
  if (size_exponent < 0.0) throw ConfigError("events: size exponent must be non-negative");
  if (activity_exponent != 0.0 && activity_exponent <= 2.0) {
    throw ConfigError("events: activity exponent must be 0 or greater than 2");
  }
  check_probability(p_in, "events: p_in");
  check_probability(p_out, "events: p_out");
  check_probability(intermittent_fraction, "events: intermittent fraction");
  check_probability(expand_contract_fraction, "events: expand/contract fraction");
  if (timesteps < 1) throw ConfigError("events: need at least one timestep");
}

namespace {

// Mutable ground truth of the event benchmark.
class EventWorld {
 public:
  EventWorld(const EventBenchConfig& cfg, Rng& rng) : cfg_(cfg), rng_(rng) {
    std::vector<double> weights;
    for (std::size_t s = cfg.min_size; s <= cfg.max_size; ++s) {
      weights.push_back(std::pow(static_cast<double>(s), -cfg.size_exponent));
    }
    size_dist_ = std::discrete_distribution<std::size_t>(weights.begin(), weights.end());

    NodeId next = 0;
    for (std::size_t c = 0; c < cfg.communities; ++c) {
      const std::size_t size = draw_size();
      NodeSet members(size);
      std::iota(members.begin(), members.end(), next);
      next += static_cast<NodeId>(size);
      communities_.emplace(next_label_++, std::move(members));
    }
    for (std::size_t i = 0; i < cfg.floaters; ++i) floaters_.push_back(next++);
    node_count_ = next;

    activity_.assign(node_count_, 1.0);
    if (cfg.activity_exponent > 0.0) {
      // Pareto(1, γ-1) weights, capped, then scaled to mean 1.
      const double cap = std::sqrt(static_cast<double>(node_count_));
      for (auto& a : activity_) {
        const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
        a = std::min(cap, std::pow(1.0 - u, -1.0 / (cfg.activity_exponent - 1.0)));
      }
      const double mean = std::accumulate(activity_.begin(), activity_.end(), 0.0) / static_cast<double>(node_count_);
      for (auto& a : activity_) a /= mean;
    }
  }

  std::size_t node_count() const { return node_count_; }
  std::size_t community_count() const { return communities_.size(); }

  EventTally advance() {
    EventTally tally;
    hidden_.clear();
    switch (cfg_.event) {
      case BenchEvent::None:
        break;
      case BenchEvent::Intermittent:
        hide(tally);
        break;
      case BenchEvent::ExpandContract:
        expand_contract(tally);
        break;
      case BenchEvent::BirthDeath:
        birth_death(tally);
        break;
      case BenchEvent::MergeSplit:
        merge_split(tally);
        break;
    }
    return tally;
  }

  // Redraws all edges among visible community members.
  SnapshotGraph draw(int t) {
    std::vector<Label> label = labels();
    std::vector<NodeId> visible;
    for (const auto& [l, members] : communities_) {
      if (std::binary_search(hidden_.begin(), hidden_.end(), l)) continue;
      visible.insert(visible.end(), members.begin(), members.end());
    }
    std::sort(visible.begin(), visible.end());
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < visible.size(); ++i) {
      const NodeId u = visible[i];
      for (std::size_t j = i + 1; j < visible.size(); ++j) {
        const NodeId v = visible[j];
        const double base = label[u] == label[v] ? cfg_.p_in : cfg_.p_out;
        if (coin(rng_, std::min(1.0, base * activity_[u] * activity_[v]))) edges.emplace_back(u, v);
      }
    }
    return SnapshotGraph::from_edges(t, std::move(edges));
  }

  std::vector<Label> labels() const {
    std::vector<Label> label(node_count_, kNone);
    for (const auto& [l, members] : communities_) {
      for (NodeId v : members) label[v] = l;
    }
    return label;
  }

  static constexpr Label kNone = ~Label{0};

 private:
  std::size_t draw_size() { return cfg_.min_size + size_dist_(rng_); }

  std::vector<Label> community_labels() const {
    std::vector<Label> out;
    for (const auto& [l, members] : communities_) out.push_back(l);
    return out;
  }

  NodeSet take_floaters(std::size_t k) {
    auto picked = sample_without_replacement(floaters_, k, rng_);
    std::sort(picked.begin(), picked.end());
    floaters_ = set_difference(make_node_set(floaters_), picked);
    return picked;
  }

  void release(std::span<const NodeId> nodes) {
    floaters_.insert(floaters_.end(), nodes.begin(), nodes.end());
    std::sort(floaters_.begin(), floaters_.end());
  }

  void hide(EventTally& tally) {
    const auto k = static_cast<std::size_t>(std::llround(cfg_.intermittent_fraction *
                                                         static_cast<double>(communities_.size())));
    hidden_ = sample_without_replacement(community_labels(), k, rng_);
    std::sort(hidden_.begin(), hidden_.end());
    tally.hidden = hidden_.size();
  }

  void expand_contract(EventTally& tally) {
    for (Label l : sample_without_replacement(community_labels(), cfg_.expand_contract_count, rng_)) {
      auto& members = communities_.at(l);
      const auto delta = std::max<std::size_t>(
          1, static_cast<std::size_t>(std::llround(cfg_.expand_contract_fraction * static_cast<double>(members.size()))));
      if (coin(rng_, 0.5)) {
        if (floaters_.size() < delta) {
          ++tally.skipped;
          continue;
        }
        members = set_union(members, take_floaters(delta));
        ++tally.expansions;
      } else {
        if (members.size() < delta + 2) {
          ++tally.skipped;
          continue;
        }
        auto leaving = make_node_set(sample_without_replacement(members, delta, rng_));
        members = set_difference(members, leaving);
        release(leaving);
        ++tally.contractions;
      }
    }
  }

  void birth_death(EventTally& tally) {
    const auto victims = sample_without_replacement(community_labels(), cfg_.death_count, rng_);
    tally.skipped += cfg_.death_count - victims.size();
    for (Label l : victims) {
      release(communities_.at(l));
      communities_.erase(l);
      ++tally.deaths;
    }
    for (std::size_t b = 0; b < cfg_.birth_count; ++b) {
      const std::size_t size = draw_size();
      if (floaters_.size() < size) {
        ++tally.skipped;
        continue;
      }
      communities_.emplace(next_label_++, take_floaters(size));
      ++tally.births;
    }
  }

  void merge_split(EventTally& tally) {
    for (std::size_t i = 0; i < cfg_.merge_count; ++i) {
      if (communities_.size() < 2) {
        ++tally.skipped;
        continue;
      }
      const auto pair = sample_without_replacement(community_labels(), 2, rng_);
      auto& into = communities_.at(pair[0]);
      into = set_union(into, communities_.at(pair[1]));
      communities_.erase(pair[1]);
      ++tally.merges;
    }
    for (std::size_t i = 0; i < cfg_.split_count; ++i) {
      std::vector<Label> splittable;
      for (const auto& [l, members] : communities_) {
        if (members.size() >= 2) splittable.push_back(l);
      }
      if (splittable.empty()) {
        ++tally.skipped;
        continue;
      }
      const Label l = splittable[uniform_index(rng_, splittable.size())];
      auto& members = communities_.at(l);
      auto shuffled = sample_without_replacement(members, members.size(), rng_);
      const std::size_t half = shuffled.size() / 2;
      NodeSet moved = make_node_set({shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(half)});
      members = set_difference(members, moved);
      communities_.emplace(next_label_++, std::move(moved));
      ++tally.splits;
    }
  }

  const EventBenchConfig& cfg_;
  Rng& rng_;
  std::discrete_distribution<std::size_t> size_dist_;
  std::map<Label, NodeSet> communities_;
  std::vector<NodeId> floaters_;
  std::vector<Label> hidden_;
  std::vector<double> activity_;
  std::size_t node_count_ = 0;
  Label next_label_ = 0;
};

}  // namespace

Benchmark generate_events(const EventBenchConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  EventWorld world(cfg, rng);

  Benchmark out;
  out.network = numbered_network(world.node_count());
  for (int t = 1; t <= cfg.timesteps; ++t) {
    out.tallies.push_back(t == 1 ? EventTally{} : world.advance());
    auto g = world.draw(t);
    out.truth.steps.push_back(truth_on(g, world.labels(), EventWorld::kNone));
    out.network.snapshots.push_back(std::move(g));
    out.community_counts.push_back(world.community_count());
  }
  return out;
}

}  // namespace leadtrack

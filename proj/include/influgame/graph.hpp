#ifndef INFLUGAME_GRAPH_HPP
#define INFLUGAME_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace influgame {

/// Activation threshold of a node: a finite positive integer, or
/// "unconvincible" (no finite incoming weight sum ever reaches it).
class Threshold {
 public:
  static Threshold finite(std::int64_t v) {
    if (v < 1) throw std::invalid_argument("threshold must be >= 1");
    return Threshold(v);
  }
  static Threshold unconvincible() { return Threshold(kInf); }

  bool is_finite() const { return v_ != kInf; }
  std::int64_t value() const {
    if (!is_finite()) throw std::logic_error("unconvincible threshold has no value");
    return v_;
  }
  // Raw comparison value: finite thresholds compare by value, unconvincible
  // is larger than any sum of weights the graph can produce.
  std::int64_t raw() const { return v_; }

  friend bool operator==(const Threshold&, const Threshold&) = default;

 private:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  explicit Threshold(std::int64_t v) : v_(v) {}
  std::int64_t v_;
};

struct Arc {
  int src = 0;
  int dst = 0;
  std::int64_t weight = 1;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// A subset of nodes with bitset semantics. Supports up to 32 nodes, which
/// covers everything the exact engine can enumerate.
class Coalition {
 public:
  Coalition() = default;
  explicit Coalition(std::uint32_t bits) : bits_(bits) {}
  Coalition(std::initializer_list<int> members) {
    for (int i : members) bits_ |= bit(i);
  }

  static Coalition all(int n) {
    return Coalition(n >= 32 ? ~0u : (1u << n) - 1u);
  }

  std::uint32_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  bool contains(int i) const { return (bits_ & bit(i)) != 0; }
  bool subset_of(Coalition other) const { return (bits_ & ~other.bits_) == 0; }

  Coalition with(int i) const { return Coalition(bits_ | bit(i)); }
  Coalition without(int i) const { return Coalition(bits_ & ~bit(i)); }

  Coalition operator|(Coalition o) const { return Coalition(bits_ | o.bits_); }
  Coalition operator&(Coalition o) const { return Coalition(bits_ & o.bits_); }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint32_t m = bits_; m != 0; m &= m - 1)
      out.push_back(std::countr_zero(m));
    return out;
  }

  friend bool operator==(const Coalition&, const Coalition&) = default;

 private:
  static std::uint32_t bit(int i) {
    if (i < 0 || i >= 32) throw std::out_of_range("coalition member out of range");
    return 1u << i;
  }
  std::uint32_t bits_ = 0;
};

/// Extended nonnegative integer used for coalition threshold masses.
class Mass {
 public:
  static Mass finite(std::int64_t v) {
    if (v < 0) throw std::invalid_argument("mass must be nonnegative");
    Mass m;
    m.v_ = v;
    return m;
  }
  static Mass infinite() {
    Mass m;
    m.inf_ = true;
    return m;
  }

  bool is_finite() const { return !inf_; }
  std::int64_t value() const {
    if (inf_) throw std::logic_error("infinite mass has no value");
    return v_;
  }

  friend bool operator==(const Mass&, const Mass&) = default;
  friend bool operator<(const Mass& a, const Mass& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }

 private:
  std::int64_t v_ = 0;
  bool inf_ = false;
};

/// Directed weighted graph with per-node activation thresholds.
///
/// Canonical form: no self-loops, at most one arc per ordered pair (parallel
/// arcs are merged at construction by summing weights), arcs sorted by
/// (src, dst). Immutable after construction.
class InfluenceGraph {
 public:
  InfluenceGraph(int n, std::vector<Arc> arcs, std::vector<Threshold> thresholds,
                 std::vector<std::string> labels = {})
      : n_(n), thresholds_(std::move(thresholds)), labels_(std::move(labels)) {
    if (n_ < 0) throw std::invalid_argument("negative node count");
    if (static_cast<int>(thresholds_.size()) != n_)
      throw std::invalid_argument("threshold count does not match node count");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
      throw std::invalid_argument("label count does not match node count");
    if (labels_.empty()) {
      labels_.reserve(n_);
      for (int i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
    }
    for (const Arc& a : arcs) {
      if (a.src < 0 || a.src >= n_ || a.dst < 0 || a.dst >= n_)
        throw std::invalid_argument("arc endpoint out of range");
      if (a.src == a.dst) throw std::invalid_argument("self-loop");
      if (a.weight < 1) throw std::invalid_argument("arc weight must be >= 1");
    }
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
      return std::pair(a.src, a.dst) < std::pair(b.src, b.dst);
    });
    // Merge parallel arcs by summing their weights.
    for (const Arc& a : arcs) {
      if (!arcs_.empty() && arcs_.back().src == a.src && arcs_.back().dst == a.dst)
        arcs_.back().weight += a.weight;
      else
        arcs_.push_back(a);
    }
    std::int64_t total = 0;
    for (const Arc& a : arcs_) total += a.weight;
    if (total > (std::int64_t(1) << 60))
      throw std::invalid_argument("total arc weight too large");
    build_adjacency();
  }

  int node_count() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Threshold& threshold(int i) const { return thresholds_.at(i); }
  const std::vector<Threshold>& thresholds() const { return thresholds_; }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  int in_degree(int i) const { return in_degree_.at(i); }
  int out_degree(int i) const {
    return out_offsets_.at(i + 1) - out_offsets_.at(i);
  }
  std::int64_t in_weight(int i) const { return in_weight_.at(i); }

  // Out-adjacency of node i as (target, weight) pairs.
  const std::pair<int, std::int64_t>* out_begin(int i) const {
    return out_.data() + out_offsets_[i];
  }
  const std::pair<int, std::int64_t>* out_end(int i) const {
    return out_.data() + out_offsets_[i + 1];
  }

  InfluenceGraph with_thresholds(std::vector<Threshold> t) const {
    return InfluenceGraph(n_, arcs_, std::move(t), labels_);
  }

  /// Bitmask of unconvincible nodes (only meaningful for n <= 32).
  std::uint32_t unconvincible_mask() const {
    std::uint32_t m = 0;
    if (n_ <= 32) {
      for (int i = 0; i < n_; ++i)
        if (!thresholds_[i].is_finite()) m |= 1u << i;
    }
    return m;
  }

  friend bool operator==(const InfluenceGraph& a, const InfluenceGraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_ && a.thresholds_ == b.thresholds_ &&
           a.labels_ == b.labels_;
  }

 private:
  void build_adjacency() {
    out_offsets_.assign(n_ + 1, 0);
    in_degree_.assign(n_, 0);
    in_weight_.assign(n_, 0);
    for (const Arc& a : arcs_) {
      ++out_offsets_[a.src + 1];
      ++in_degree_[a.dst];
      in_weight_[a.dst] += a.weight;
    }
    for (int i = 0; i < n_; ++i) out_offsets_[i + 1] += out_offsets_[i];
    out_.resize(arcs_.size());
    std::vector<int> cursor(out_offsets_.begin(), out_offsets_.end() - 1);
    for (const Arc& a : arcs_) out_[cursor[a.src]++] = {a.dst, a.weight};
  }

  int n_;
  std::vector<Arc> arcs_;
  std::vector<Threshold> thresholds_;
  std::vector<std::string> labels_;
  std::vector<int> out_offsets_;
  std::vector<std::pair<int, std::int64_t>> out_;
  std::vector<int> in_degree_;
  std::vector<std::int64_t> in_weight_;
};

/// Threshold assignment rules used by the case studies.
class ThresholdScheme {
 public:
  enum class Kind { Constant, Min, AverageIndegree, MajorityIndegree, MaxIndegree };

  static ThresholdScheme constant(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("constant threshold must be >= 1");
    return ThresholdScheme(Kind::Constant, k);
  }
  static ThresholdScheme min() { return ThresholdScheme(Kind::Min, 1); }
  static ThresholdScheme average_indegree() {
    return ThresholdScheme(Kind::AverageIndegree, 0);
  }
  static ThresholdScheme majority_indegree() {
    return ThresholdScheme(Kind::MajorityIndegree, 0);
  }
  static ThresholdScheme max_indegree() {
    return ThresholdScheme(Kind::MaxIndegree, 0);
  }

  Kind kind() const { return kind_; }
  std::int64_t constant_value() const { return k_; }

 private:
  ThresholdScheme(Kind kind, std::int64_t k) : kind_(kind), k_(k) {}
  Kind kind_;
  std::int64_t k_;
};

/// Recomputes all thresholds from the scheme. Degree-based schemes map
/// zero-indegree nodes to unconvincible (isolated nodes cannot be convinced).
inline InfluenceGraph apply_threshold_scheme(const InfluenceGraph& g,
                                             const ThresholdScheme& scheme) {
  std::vector<Threshold> t;
  t.reserve(g.node_count());
  for (int i = 0; i < g.node_count(); ++i) {
    const std::int64_t d = g.in_degree(i);
    switch (scheme.kind()) {
      case ThresholdScheme::Kind::Constant:
        t.push_back(Threshold::finite(scheme.constant_value()));
        break;
      case ThresholdScheme::Kind::Min:
        t.push_back(Threshold::finite(1));
        break;
      case ThresholdScheme::Kind::AverageIndegree:
        t.push_back(d == 0 ? Threshold::unconvincible()
                           : Threshold::finite((d + 1) / 2));
        break;
      case ThresholdScheme::Kind::MajorityIndegree:
        t.push_back(d == 0 ? Threshold::unconvincible()
                           : Threshold::finite(d / 2 + 1));
        break;
      case ThresholdScheme::Kind::MaxIndegree:
        t.push_back(d == 0 ? Threshold::unconvincible() : Threshold::finite(d));
        break;
    }
  }
  return g.with_thresholds(std::move(t));
}

/// Expands each unordered pair {a, b} into the two arcs (a,b) and (b,a) with
/// the pair's weight. Thresholds default to 1 when not supplied.
inline InfluenceGraph from_undirected(int n, const std::vector<Arc>& edges,
                                      std::vector<Threshold> thresholds = {},
                                      std::vector<std::string> labels = {}) {
  std::vector<std::pair<int, int>> seen;
  std::vector<Arc> arcs;
  arcs.reserve(edges.size() * 2);
  for (const Arc& e : edges) {
    if (e.src == e.dst) throw std::invalid_argument("self-pair in undirected edge list");
    auto key = std::minmax(e.src, e.dst);
    if (std::find(seen.begin(), seen.end(), std::pair(key.first, key.second)) != seen.end())
      throw std::invalid_argument("duplicate undirected pair");
    seen.emplace_back(key.first, key.second);
    arcs.push_back({e.src, e.dst, e.weight});
    arcs.push_back({e.dst, e.src, e.weight});
  }
  if (thresholds.empty())
    thresholds.assign(static_cast<std::size_t>(n), Threshold::finite(1));
  return InfluenceGraph(n, std::move(arcs), std::move(thresholds), std::move(labels));
}

/// Reverses every arc and swaps its weight 1 <-> 2. Used to turn a
/// first/second-preference graph into the corresponding influence graph.
inline InfluenceGraph reverse_with_weight_swap(const InfluenceGraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(g.arcs().size());
  for (const Arc& a : g.arcs()) {
    if (a.weight != 1 && a.weight != 2)
      throw std::invalid_argument("reverse_with_weight_swap requires weights in {1,2}");
    arcs.push_back({a.dst, a.src, a.weight == 1 ? 2 : 1});
  }
  return InfluenceGraph(g.node_count(), std::move(arcs), g.thresholds(), g.labels());
}

/// Sum of member thresholds; infinite if any member is unconvincible.
inline Mass threshold_mass(const InfluenceGraph& g, Coalition x) {
  std::int64_t sum = 0;
  for (std::uint32_t m = x.bits(); m != 0; m &= m - 1) {
    const int i = std::countr_zero(m);
    if (i >= g.node_count()) throw std::out_of_range("coalition member out of range");
    const Threshold& t = g.threshold(i);
    if (!t.is_finite()) return Mass::infinite();
    sum += t.value();
  }
  return Mass::finite(sum);
}

}  // namespace influgame

#endif  // INFLUGAME_GRAPH_HPP

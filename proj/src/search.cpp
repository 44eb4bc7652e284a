#include "girthforge/search.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstring>
#include <fstream>
#include <functional>
#include <mutex>
#include <thread>

#include "girthforge/canon.hpp"

namespace girthforge {

std::string to_string(SearchMode m) {
  switch (m) {
    case SearchMode::exact: return "exact";
    case SearchMode::witness: return "witness";
    case SearchMode::emptiness: return "emptiness";
  }
  return "?";
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::proved: return "proved";
    case SearchStatus::witness_found: return "witness_found";
    case SearchStatus::empty: return "empty";
    case SearchStatus::timeout: return "timeout";
  }
  return "?";
}

void SearchParams::validate() const {
  spec.validate();
  const int max_n = (mode == SearchMode::witness) ? 20 : 12;
  if (spec.n > max_n)
    throw std::invalid_argument("guardrail: order " + std::to_string(spec.n) + " exceeds " +
                                std::to_string(max_n) + " for mode " + to_string(mode));
  if (mode == SearchMode::witness && !target_arcs)
    throw std::invalid_argument("witness mode needs target_arcs");
  if (target_arcs && (*target_arcs < 0 || *target_arcs > pairs_of(spec.n)))
    throw std::invalid_argument("target_arcs outside [0, n(n-1)/2]");
  if (gamma_budget && *gamma_budget < 0) throw std::invalid_argument("gamma_budget must be >= 0");
  if (gamma_budget && target_arcs && *gamma_budget + *target_arcs != pairs_of(spec.n))
    throw std::invalid_argument("gamma_budget + target_arcs must equal n(n-1)/2");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (time_limit_seconds < 0) throw std::invalid_argument("time limit must be >= 0");
  if (tuning.split_depth < 0) throw std::invalid_argument("split depth must be >= 0");
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kMaxSearchVertices = 20;
constexpr int kMaxPairs = kMaxSearchVertices * (kMaxSearchVertices - 1) / 2;

enum : std::uint8_t { kStateFwd = 0, kStateBwd = 1, kStateNone = 2 };

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// The branch-and-bound kernel over unordered pair states. Pairs are visited
// in lexicographic order; each takes one of the states {u->v, v->u, no arc},
// so 2-cycles are outside the state space by construction.
class Kernel {
 public:
  struct Limits {
    std::uint64_t node_budget = 0;  // 0 = unlimited
    const std::atomic<bool>* stop = nullptr;
    bool has_deadline = false;
    Clock::time_point deadline{};
  };

  enum class RunResult { complete, stopped, budget, deadline };

  Kernel(const ClassSpec& spec, int gamma_budget, const SearchTuning& tuning, bool shuffle,
         std::uint64_t rng_seed)
      : n_(spec.n),
        k_(spec.k),
        xi_(spec.min_out),
        zeta_(spec.min_in),
        gamma_budget_(gamma_budget),
        tuning_(tuning),
        shuffle_(shuffle),
        rng_(splitmix64(rng_seed ^ 0xc2b2ae3d27d4eb4full)) {
    pair_count_ = 0;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v) pairs_[pair_count_++] = {u, v};
    lo_out_ = tuning_.prune_degree ? xi_ : (tuning_.prune_strong ? 1 : 0);
    lo_in_ = tuning_.prune_degree ? zeta_ : (tuning_.prune_strong ? 1 : 0);
    std::fill(out_.begin(), out_.end(), 0);
    std::fill(in_.begin(), in_.end(), 0);
    std::fill(dout_.begin(), dout_.end(), 0);
    std::fill(din_.begin(), din_.end(), 0);
    std::fill(und_.begin(), und_.end(), n_ - 1);
  }

  int pair_count() const { return pair_count_; }

  bool load_prefix(const std::vector<std::uint8_t>& states) {
    for (std::size_t p = 0; p < states.size(); ++p)
      if (!try_assign(static_cast<int>(p), states[p])) return false;
    start_depth_ = static_cast<int>(states.size());
    return true;
  }

  /// member_sink returns false to stop the search. When collect_depth >= 0,
  /// the walk stops there and hands the assignment prefix to prefix_sink.
  RunResult run(const Limits& limits, const std::function<bool(Kernel&)>& member_sink,
                int collect_depth = -1,
                const std::function<void(std::vector<std::uint8_t>)>& prefix_sink = nullptr) {
    limits_ = limits;
    member_sink_ = &member_sink;
    collect_depth_ = collect_depth;
    prefix_sink_ = prefix_sink ? &prefix_sink : nullptr;
    abort_ = RunResult::complete;
    if (!dfs(start_depth_)) return abort_;
    return RunResult::complete;
  }

  Digraph snapshot() const {
    Digraph d(n_);
    for (int u = 0; u < n_; ++u)
      for (int v : vertices_of(out_[u])) d.add_arc(u, v);
    return d;
  }

  int arc_count() const { return arc_count_; }
  SearchStats& stats() { return stats_; }

 private:
  bool dfs(int depth) {
    ++stats_.nodes;
    if ((stats_.nodes & 0xfff) == 0 || limits_.node_budget) {
      if (limits_.stop && limits_.stop->load(std::memory_order_relaxed)) {
        abort_ = RunResult::stopped;
        return false;
      }
      if (limits_.node_budget && stats_.nodes > limits_.node_budget) {
        abort_ = RunResult::budget;
        return false;
      }
      if (limits_.has_deadline && (stats_.nodes & 0xfff) == 0 &&
          Clock::now() >= limits_.deadline) {
        abort_ = RunResult::deadline;
        return false;
      }
    }

    if (depth == collect_depth_) {
      if (prefix_sink_)
        (*prefix_sink_)(std::vector<std::uint8_t>(state_.begin(), state_.begin() + depth));
      return true;
    }
    if (depth == pair_count_) {
      ++stats_.leaves;
      if (leaf_is_member()) {
        ++stats_.members_found;
        if (!(*member_sink_)(*this)) {
          abort_ = RunResult::stopped;
          return false;
        }
      } else {
        ++stats_.prunes[kPruneLeafNotMember];
      }
      return true;
    }

    std::uint8_t order[3] = {kStateFwd, kStateBwd, kStateNone};
    if (shuffle_) {
      // Members near the arc-count target are dense, so the nonadjacent state
      // mostly goes last; occasional other orders keep restarts diverse.
      rng_ = splitmix64(rng_);
      switch (rng_ % 16) {
        default: break;
        case 7: case 8: case 9: case 10: case 11: case 12: case 13:
          order[0] = kStateBwd; order[1] = kStateFwd; break;
        case 14: order[1] = kStateNone; order[2] = kStateBwd; break;
        case 15: order[0] = kStateNone; order[1] = kStateBwd; order[2] = kStateFwd; break;
      }
    }
    for (std::uint8_t s : order) {
      if (!try_assign(depth, s)) continue;
      bool keep_going = dfs(depth + 1);
      undo(depth);
      if (!keep_going) return false;
    }
    return true;
  }

  // Path head ~> tail of length <= k-1 in the arcs decided so far; together
  // with the new arc tail -> head that closes a cycle of length <= k.
  bool closes_short_cycle(int tail, int head) const {
    if (k_ == 3) return (out_[head] & in_[tail]) != 0;
    VertexSet frontier = out_[head];
    VertexSet reached = 0;
    for (int len = 1; len <= k_ - 1; ++len) {
      if (contains(frontier, tail)) return true;
      if (len == k_ - 1) break;
      reached |= frontier;
      VertexSet next = 0;
      VertexSet rest = frontier;
      while (rest) {
        int w = std::countr_zero(rest);
        rest &= rest - 1;
        next |= out_[w];
      }
      frontier = next & ~reached;
    }
    return false;
  }

  bool try_assign(int p, std::uint8_t s) {
    auto [u, v] = pairs_[p];
    int a = -1, b = -1;
    if (s == kStateNone) {
      if (tuning_.prune_gamma && gamma_budget_ >= 0 && none_count_ + 1 > gamma_budget_) {
        ++stats_.prunes[kPruneGamma];
        return false;
      }
    } else {
      a = (s == kStateFwd) ? u : v;
      b = (s == kStateFwd) ? v : u;
      if (tuning_.prune_cycle && closes_short_cycle(a, b)) {
        ++stats_.prunes[kPruneCycle];
        return false;
      }
      if (tuning_.normalize_vertex0) {
        if (u == 0) {
          // The out-neighborhood of vertex 0 must occupy a prefix of 1..n-1.
          if (s == kStateFwd && dout_[0] != p) {
            ++stats_.prunes[kPruneSymmetry];
            return false;
          }
        } else if (a != 0 && dout_[a] + 1 > dout_[0]) {
          // Vertex 0 carries the maximum out-degree; dout_[0] is final here
          // because all pairs at vertex 0 precede the rest.
          ++stats_.prunes[kPruneSymmetry];
          return false;
        }
      }
    }

    if (lo_out_ > 0 || lo_in_ > 0) {
      for (int w : {u, v}) {
        int reserve = und_[w] - 1;
        int ow = dout_[w] + (w == a ? 1 : 0);
        int iw = din_[w] + (w == b ? 1 : 0);
        if (ow + reserve < lo_out_ || iw + reserve < lo_in_) {
          ++stats_.prunes[tuning_.prune_degree ? kPruneDegree : kPruneStrong];
          return false;
        }
      }
    }

    state_[p] = s;
    --und_[u];
    --und_[v];
    if (s == kStateNone) {
      ++none_count_;
    } else {
      out_[a] |= bit(b);
      in_[b] |= bit(a);
      ++dout_[a];
      ++din_[b];
      ++arc_count_;
    }

    // Lookahead over the still-undecided pairs: an orientation that already
    // closes a short cycle can never be used, so pairs blocked both ways are
    // forced nonadjacent (they count against the gamma budget now), one-way
    // blocked pairs shrink the degree slack of their endpoints, and a branch
    // whose optimistic arc set is not even strongly connected is dead.
    int reason = lookahead_violation(p);
    if (reason >= 0) {
      undo(p);
      ++stats_.prunes[reason];
      return false;
    }
    return true;
  }

  // Returns the prune reason when no completion of the current assignment can
  // satisfy the budget, degree and strongness constraints, -1 otherwise.
  int lookahead_violation(int depth) const {
    const bool need_gamma = tuning_.prune_gamma && gamma_budget_ >= 0;
    const bool need_degree = tuning_.prune_degree && (xi_ > 0 || zeta_ > 0);
    const bool need_strong = tuning_.prune_strong;
    if (!need_gamma && !need_degree && !need_strong) return -1;
    int forced_none = 0;
    std::array<std::int8_t, kMaxSearchVertices> out_blocked{};
    std::array<std::int8_t, kMaxSearchVertices> in_blocked{};
    // Optimistic arc set: everything decided plus every orientation that does
    // not already close a short cycle. Any member completing this branch is a
    // subgraph of it.
    std::array<VertexSet, kMaxSearchVertices> optimistic;
    for (int w = 0; w < n_; ++w) optimistic[w] = out_[w];
    for (int q = depth + 1; q < pair_count_; ++q) {
      auto [x, y] = pairs_[q];
      bool fwd_dead = closes_short_cycle(x, y);
      bool bwd_dead = closes_short_cycle(y, x);
      if (fwd_dead) {
        ++out_blocked[x];
        ++in_blocked[y];
      } else {
        optimistic[x] |= bit(y);
      }
      if (bwd_dead) {
        ++out_blocked[y];
        ++in_blocked[x];
      } else {
        optimistic[y] |= bit(x);
      }
      if (fwd_dead && bwd_dead) ++forced_none;
    }
    if (need_gamma && none_count_ + forced_none > gamma_budget_) return kPruneGamma;
    if (need_degree)
      for (int w = 0; w < n_; ++w) {
        if (dout_[w] + und_[w] - out_blocked[w] < xi_) return kPruneDegree;
        if (din_[w] + und_[w] - in_blocked[w] < zeta_) return kPruneDegree;
      }
    // The optimistic graph is near-complete at shallow depths; the closure
    // only starts cutting once a good share of the pairs is decided.
    if (need_strong && n_ > 1 && 2 * depth >= pair_count_) {
      // Forward closure from vertex 0 over the optimistic arcs.
      VertexSet seen = 1, frontier = 1;
      while (frontier) {
        VertexSet next = 0, rest = frontier;
        while (rest) {
          int w = std::countr_zero(rest);
          rest &= rest - 1;
          next |= optimistic[w];
        }
        frontier = next & ~seen;
        seen |= frontier;
      }
      if (seen != full_set(n_)) return kPruneStrong;
      // Backward closure: transpose on the fly.
      std::array<VertexSet, kMaxSearchVertices> optimistic_in{};
      for (int w = 0; w < n_; ++w)
        for (VertexSet rest = optimistic[w]; rest;) {
          int v = std::countr_zero(rest);
          rest &= rest - 1;
          optimistic_in[v] |= bit(w);
        }
      seen = frontier = 1;
      while (frontier) {
        VertexSet next = 0, rest = frontier;
        while (rest) {
          int w = std::countr_zero(rest);
          rest &= rest - 1;
          next |= optimistic_in[w];
        }
        frontier = next & ~seen;
        seen |= frontier;
      }
      if (seen != full_set(n_)) return kPruneStrong;
    }
    return -1;
  }

  void undo(int p) {
    auto [u, v] = pairs_[p];
    std::uint8_t s = state_[p];
    ++und_[u];
    ++und_[v];
    if (s == kStateNone) {
      --none_count_;
    } else {
      int a = (s == kStateFwd) ? u : v;
      int b = (s == kStateFwd) ? v : u;
      out_[a] &= ~bit(b);
      in_[b] &= ~bit(a);
      --dout_[a];
      --din_[b];
      --arc_count_;
    }
  }

  bool leaf_is_member() const {
    if (gamma_budget_ >= 0 && none_count_ > gamma_budget_) return false;
    for (int w = 0; w < n_; ++w)
      if (dout_[w] < xi_ || din_[w] < zeta_) return false;
    if (!mask_strong()) return false;
    return mask_cycle_free();
  }

  bool mask_strong() const {
    if (n_ == 1) return true;
    const VertexSet all = full_set(n_);
    VertexSet seen = 1, frontier = 1;
    while (frontier) {
      VertexSet next = 0, rest = frontier;
      while (rest) {
        int w = std::countr_zero(rest);
        rest &= rest - 1;
        next |= out_[w];
      }
      frontier = next & ~seen;
      seen |= frontier;
    }
    if (seen != all) return false;
    seen = frontier = 1;
    while (frontier) {
      VertexSet next = 0, rest = frontier;
      while (rest) {
        int w = std::countr_zero(rest);
        rest &= rest - 1;
        next |= in_[w];
      }
      frontier = next & ~seen;
      seen |= frontier;
    }
    return seen == all;
  }

  bool mask_cycle_free() const {
    for (int s = 0; s < n_; ++s) {
      VertexSet frontier = out_[s];
      VertexSet reached = 0;
      for (int len = 1; len <= k_; ++len) {
        if (contains(frontier, s)) return false;
        reached |= frontier;
        VertexSet next = 0, rest = frontier;
        while (rest) {
          int w = std::countr_zero(rest);
          rest &= rest - 1;
          next |= out_[w];
        }
        frontier = next & ~reached;
        if (!frontier) break;
      }
    }
    return true;
  }

  const int n_, k_, xi_, zeta_;
  const int gamma_budget_;
  const SearchTuning tuning_;
  const bool shuffle_;
  std::uint64_t rng_;
  int lo_out_, lo_in_;

  int pair_count_ = 0;
  std::array<std::pair<std::int8_t, std::int8_t>, kMaxPairs> pairs_{};
  std::array<VertexSet, kMaxSearchVertices> out_{};
  std::array<VertexSet, kMaxSearchVertices> in_{};
  std::array<int, kMaxSearchVertices> dout_{};
  std::array<int, kMaxSearchVertices> din_{};
  std::array<int, kMaxSearchVertices> und_{};
  std::array<std::uint8_t, kMaxPairs> state_{};
  int none_count_ = 0;
  int arc_count_ = 0;
  int start_depth_ = 0;

  Limits limits_;
  const std::function<bool(Kernel&)>* member_sink_ = nullptr;
  int collect_depth_ = -1;
  const std::function<void(std::vector<std::uint8_t>)>* prefix_sink_ = nullptr;
  RunResult abort_ = RunResult::complete;

  SearchStats stats_;
};

void merge_stats(SearchStats& into, const SearchStats& from) {
  into.nodes += from.nodes;
  into.leaves += from.leaves;
  into.members_found += from.members_found;
  for (int i = 0; i < kPruneReasonCount; ++i) into.prunes[i] += from.prunes[i];
}

struct TaskOutput {
  std::vector<std::pair<std::vector<std::uint8_t>, Digraph>> members;  // discovery order
  std::optional<Digraph> witness;
  SearchStats stats;
  bool completed = false;
  bool budget_exhausted = false;
};

// ---------------------------------------------------------------------------
// Checkpoints: magic, params hash, the pair-state prefix of the next subtree
// to process, then the running target / frontier / stats / members.

std::array<std::uint8_t, 32> params_hash(const SearchParams& p) {
  std::string text = "girthforge-search-v1|" + std::to_string(p.spec.n) + "|" +
                     std::to_string(p.spec.k) + "|" + std::to_string(p.spec.min_out) + "|" +
                     std::to_string(p.spec.min_in) + "|" + to_string(p.mode) + "|" +
                     std::to_string(p.target_arcs.value_or(-1)) + "|" +
                     std::to_string(p.gamma_budget.value_or(-1)) + "|" +
                     std::to_string(p.seed) + "|" + std::to_string(p.tuning.split_depth);
  std::array<std::uint8_t, 32> hash{};
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), hash.data(), &len, EVP_sha256(), nullptr);
  return hash;
}

struct Checkpoint {
  std::array<std::uint8_t, 32> hash{};
  std::vector<std::uint8_t> next_prefix;
  std::uint32_t target = 0;
  std::uint64_t frontier = 0;
  SearchStats stats;
  std::vector<Digraph> members;
};

constexpr char kCheckpointMagic[5] = {'G', 'F', 'C', 'K', '1'};

template <typename T>
void put_le(std::string& out, T value) {
  for (size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<char>((value >> (8 * i)) & 0xff));
}

template <typename T>
T get_le(const std::string& in, size_t& pos) {
  if (pos + sizeof(T) > in.size()) throw std::runtime_error("checkpoint: truncated file");
  T value = 0;
  for (size_t i = 0; i < sizeof(T); ++i)
    value |= static_cast<T>(static_cast<unsigned char>(in[pos + i])) << (8 * i);
  pos += sizeof(T);
  return value;
}

void write_checkpoint(const std::string& path, const Checkpoint& ck) {
  std::string blob(kCheckpointMagic, sizeof kCheckpointMagic);
  blob.append(reinterpret_cast<const char*>(ck.hash.data()), ck.hash.size());
  put_le<std::uint8_t>(blob, static_cast<std::uint8_t>(ck.next_prefix.size()));
  for (std::uint8_t s : ck.next_prefix) put_le<std::uint8_t>(blob, s);
  put_le<std::uint32_t>(blob, ck.target);
  put_le<std::uint64_t>(blob, ck.frontier);
  put_le<std::uint64_t>(blob, ck.stats.nodes);
  put_le<std::uint64_t>(blob, ck.stats.leaves);
  put_le<std::uint64_t>(blob, ck.stats.members_found);
  for (auto p : ck.stats.prunes) put_le<std::uint64_t>(blob, p);
  put_le<std::uint64_t>(blob, static_cast<std::uint64_t>(ck.stats.elapsed_seconds * 1000));
  put_le<std::uint32_t>(blob, static_cast<std::uint32_t>(ck.members.size()));
  for (const Digraph& d : ck.members) {
    put_le<std::uint8_t>(blob, static_cast<std::uint8_t>(d.order()));
    for (int v = 0; v < d.order(); ++v) put_le<std::uint64_t>(blob, d.out_set(v));
  }
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint '" + path + "'");
    out.write(blob.data(), static_cast<std::streamsize>(blob.size()));
    if (!out) throw std::runtime_error("checkpoint write failed for '" + path + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot move checkpoint into place at '" + path + "'");
}

Checkpoint read_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::string blob((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (!in && blob.empty()) throw std::runtime_error("cannot read checkpoint '" + path + "'");
  if (blob.size() < sizeof(kCheckpointMagic) + 32 ||
      std::memcmp(blob.data(), kCheckpointMagic, sizeof kCheckpointMagic) != 0)
    throw std::runtime_error("checkpoint: bad magic in '" + path + "'");
  Checkpoint ck;
  size_t pos = sizeof kCheckpointMagic;
  std::memcpy(ck.hash.data(), blob.data() + pos, 32);
  pos += 32;
  int prefix_len = get_le<std::uint8_t>(blob, pos);
  ck.next_prefix.resize(prefix_len);
  for (int i = 0; i < prefix_len; ++i) ck.next_prefix[i] = get_le<std::uint8_t>(blob, pos);
  ck.target = get_le<std::uint32_t>(blob, pos);
  ck.frontier = get_le<std::uint64_t>(blob, pos);
  ck.stats.nodes = get_le<std::uint64_t>(blob, pos);
  ck.stats.leaves = get_le<std::uint64_t>(blob, pos);
  ck.stats.members_found = get_le<std::uint64_t>(blob, pos);
  for (auto& p : ck.stats.prunes) p = get_le<std::uint64_t>(blob, pos);
  ck.stats.elapsed_seconds = static_cast<double>(get_le<std::uint64_t>(blob, pos)) / 1000.0;
  std::uint32_t count = get_le<std::uint32_t>(blob, pos);
  for (std::uint32_t i = 0; i < count; ++i) {
    int n = get_le<std::uint8_t>(blob, pos);
    Digraph d(n);
    for (int v = 0; v < n; ++v) {
      VertexSet row = get_le<std::uint64_t>(blob, pos);
      for (int w : vertices_of(row)) d.add_arc(v, w);
    }
    ck.members.push_back(std::move(d));
  }
  return ck;
}

// ---------------------------------------------------------------------------

struct PassSetup {
  const SearchParams* params = nullptr;
  int gamma_budget = -1;
  bool collect_all = false;      // exact mode: never stop early, gather everything
  bool shuffle = false;
  std::uint64_t round_seed = 0;
  std::uint64_t node_budget = 0;
  bool has_deadline = false;
  Clock::time_point deadline{};
};

struct PassResult {
  bool deadline_hit = false;
  bool exhausted = true;  // false when some subtree stopped on its node budget
  std::optional<Digraph> witness;
  std::vector<std::pair<std::vector<std::uint8_t>, Digraph>> members;
  SearchStats stats;
  std::uint64_t frontier = 0;  // subtrees merged contiguously from the start
};

std::vector<std::vector<std::uint8_t>> enumerate_prefixes(const PassSetup& setup) {
  const SearchParams& p = *setup.params;
  Kernel kernel(p.spec, setup.gamma_budget, p.tuning, false, 0);
  int depth = std::min(p.tuning.split_depth, kernel.pair_count());
  std::vector<std::vector<std::uint8_t>> prefixes;
  Kernel::Limits limits;  // prefix enumeration is cheap; no budget needed
  kernel.run(
      limits, [](Kernel&) { return true; }, depth,
      [&](std::vector<std::uint8_t> states) { prefixes.push_back(std::move(states)); });
  return prefixes;
}

// Runs one full sweep over the subtree list. Member collection, early-stop
// and checkpointing all key off the subtree index so the merged result is
// identical for any worker count.
PassResult run_pass(const PassSetup& setup, const std::vector<std::vector<std::uint8_t>>& tasks,
                    std::uint64_t start_frontier,
                    std::vector<std::pair<std::vector<std::uint8_t>, Digraph>> carried_members,
                    const SearchStats& carried_stats,
                    const std::function<void(const PassResult&, std::uint64_t)>& on_progress) {
  const SearchParams& params = *setup.params;
  const std::size_t task_count = tasks.size();

  std::vector<TaskOutput> outputs(task_count);
  std::vector<char> done(task_count, 0);
  std::atomic<std::size_t> next{start_frontier};
  std::atomic<long long> min_found{static_cast<long long>(task_count)};
  std::atomic<bool> deadline_flag{false};
  std::mutex merge_mutex;

  PassResult result;
  result.members = std::move(carried_members);
  result.stats = carried_stats;
  result.frontier = start_frontier;

  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= task_count) return;
      if (!setup.collect_all &&
          static_cast<long long>(i) > min_found.load(std::memory_order_acquire)) {
        TaskOutput out;
        out.completed = true;  // skipped: a smaller-index witness already decides the pass
        std::lock_guard<std::mutex> lock(merge_mutex);
        outputs[i] = std::move(out);
        done[i] = 1;
        continue;
      }

      Kernel kernel(params.spec, setup.gamma_budget, params.tuning, setup.shuffle,
                    splitmix64(setup.round_seed ^ (0x9e37ull * (i + 1))));
      if (!kernel.load_prefix(tasks[i]))
        throw invariant_violation("generated subtree prefix failed to replay");

      TaskOutput out;
      Kernel::Limits limits;
      limits.node_budget = setup.node_budget;
      limits.has_deadline = setup.has_deadline;
      limits.deadline = setup.deadline;

      std::function<bool(Kernel&)> sink;
      if (setup.collect_all) {
        sink = [&out](Kernel& k) {
          Digraph d = k.snapshot();
          auto bytes = canonical_form(d).bytes;
          for (const auto& m : out.members)
            if (m.first == bytes) return true;
          out.members.emplace_back(std::move(bytes), std::move(d));
          return true;
        };
      } else {
        sink = [&out](Kernel& k) {
          out.witness = k.snapshot();
          return false;
        };
      }

      Kernel::RunResult run_result = kernel.run(limits, sink);
      out.stats = kernel.stats();
      out.completed = run_result == Kernel::RunResult::complete ||
                      run_result == Kernel::RunResult::stopped;
      out.budget_exhausted = run_result == Kernel::RunResult::budget;
      if (run_result == Kernel::RunResult::deadline) deadline_flag.store(true);
      if (out.witness) {
        long long mine = static_cast<long long>(i);
        long long seen = min_found.load(std::memory_order_acquire);
        while (mine < seen && !min_found.compare_exchange_weak(seen, mine)) {
        }
      }

      std::lock_guard<std::mutex> lock(merge_mutex);
      outputs[i] = std::move(out);
      done[i] = 1;
      // Advance the contiguous frontier and let the caller checkpoint.
      while (result.frontier < task_count && done[result.frontier]) {
        TaskOutput& merged = outputs[result.frontier];
        merge_stats(result.stats, merged.stats);
        if (!merged.completed) result.exhausted = false;
        if (merged.budget_exhausted) result.exhausted = false;
        for (auto& m : merged.members) {
          bool seen_before = false;
          for (const auto& have : result.members)
            if (have.first == m.first) {
              seen_before = true;
              break;
            }
          if (!seen_before) result.members.push_back(std::move(m));
        }
        if (merged.witness && !result.witness) result.witness = std::move(merged.witness);
        ++result.frontier;
      }
      if (on_progress) on_progress(result, result.frontier);
    }
  };

  std::vector<std::thread> pool;
  const int workers = std::max(1, params.workers);
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  result.deadline_hit = deadline_flag.load();
  if (result.deadline_hit) result.exhausted = false;

  // A witness in a subtree that was merged keeps the smallest index by
  // construction; recover it also when later tasks were skipped.
  if (!setup.collect_all && !result.witness) {
    long long found = min_found.load();
    if (found < static_cast<long long>(task_count) && outputs[found].witness)
      result.witness = outputs[found].witness;
  }
  return result;
}

SearchOutcome make_timeout(SearchStats stats, bool resumable) {
  SearchOutcome outcome;
  outcome.status = SearchStatus::timeout;
  outcome.stats = std::move(stats);
  outcome.resumable = resumable;
  return outcome;
}

}  // namespace

SearchOutcome solve(const SearchParams& params) {
  params.validate();
  const auto started = Clock::now();
  const int n = params.spec.n;
  const int total_pairs = pairs_of(n);

  PassSetup setup;
  setup.params = &params;
  setup.has_deadline = params.time_limit_seconds > 0;
  if (setup.has_deadline)
    setup.deadline =
        started + std::chrono::duration_cast<Clock::duration>(
                      std::chrono::duration<double>(params.time_limit_seconds));

  auto finish_stats = [&](SearchStats s, double carried_elapsed = 0) {
    s.elapsed_seconds =
        carried_elapsed + std::chrono::duration<double>(Clock::now() - started).count();
    s.seed = params.seed;
    return s;
  };

  if (params.mode == SearchMode::exact) {
    // Downward target iteration: the first nonempty level is the maximum.
    // Every level is a full sweep, so the members of the first nonempty level
    // are the complete isomorph-free extremal list.
    int lower = std::max(n * params.spec.min_out, n * params.spec.min_in);
    if (n >= 2) lower = std::max(lower, n);
    if (params.gamma_budget) lower = std::max(lower, total_pairs - *params.gamma_budget);
    int start_target = params.target_arcs.value_or(total_pairs);

    // Resume bookkeeping.
    const auto hash = params_hash(params);
    std::uint64_t frontier = 0;
    std::vector<std::pair<std::vector<std::uint8_t>, Digraph>> carried_members;
    SearchStats carried_stats;
    double carried_elapsed = 0;
    bool resumed = false;
    if (!params.checkpoint_path.empty()) {
      std::ifstream probe(params.checkpoint_path, std::ios::binary);
      if (probe.good()) {
        Checkpoint ck = read_checkpoint(params.checkpoint_path);
        if (ck.hash != hash)
          throw std::runtime_error("checkpoint '" + params.checkpoint_path +
                                   "' was written for different search parameters");
        start_target = static_cast<int>(ck.target);
        frontier = ck.frontier;
        carried_stats = ck.stats;
        carried_elapsed = ck.stats.elapsed_seconds;
        carried_stats.elapsed_seconds = 0;
        for (Digraph& d : ck.members) {
          auto bytes = canonical_form(d).bytes;
          carried_members.emplace_back(std::move(bytes), std::move(d));
        }
        resumed = true;
      }
    }

    for (int target = start_target; target >= lower; --target) {
      setup.gamma_budget = total_pairs - target;
      setup.collect_all = true;
      auto tasks = enumerate_prefixes(setup);
      if (!resumed || target != start_target) frontier = 0;

      auto last_write = Clock::now();
      std::function<void(const PassResult&, std::uint64_t)> on_progress;
      if (!params.checkpoint_path.empty()) {
        on_progress = [&](const PassResult& partial, std::uint64_t at) {
          auto now = Clock::now();
          if (now - last_write <
              std::chrono::seconds(std::max(1, params.tuning.checkpoint_period_seconds)))
            return;
          last_write = now;
          Checkpoint ck;
          ck.hash = hash;
          ck.target = static_cast<std::uint32_t>(target);
          ck.frontier = at;
          ck.next_prefix = at < tasks.size() ? tasks[at] : std::vector<std::uint8_t>{};
          ck.stats = partial.stats;
          ck.stats.elapsed_seconds =
              carried_elapsed + std::chrono::duration<double>(now - started).count();
          for (const auto& m : partial.members) ck.members.push_back(m.second);
          write_checkpoint(params.checkpoint_path, ck);
        };
      }

      std::vector<std::pair<std::vector<std::uint8_t>, Digraph>> seed_members;
      SearchStats seed_stats;
      if (resumed && target == start_target) {
        seed_members = std::move(carried_members);
        seed_stats = carried_stats;
      } else {
        seed_stats = carried_stats;  // cumulative across levels
      }

      PassResult pass = run_pass(setup, tasks, frontier, std::move(seed_members), seed_stats,
                                 on_progress);
      carried_stats = pass.stats;

      if (pass.deadline_hit) {
        bool wrote = false;
        if (!params.checkpoint_path.empty()) {
          Checkpoint ck;
          ck.hash = hash;
          ck.target = static_cast<std::uint32_t>(target);
          ck.frontier = pass.frontier;
          ck.next_prefix =
              pass.frontier < tasks.size() ? tasks[pass.frontier] : std::vector<std::uint8_t>{};
          ck.stats = finish_stats(pass.stats, carried_elapsed);
          for (const auto& m : pass.members) ck.members.push_back(m.second);
          write_checkpoint(params.checkpoint_path, ck);
          wrote = true;
        }
        return make_timeout(finish_stats(pass.stats, carried_elapsed), wrote);
      }

      if (!pass.members.empty()) {
        SearchOutcome outcome;
        outcome.status = SearchStatus::proved;
        int best = 0;
        for (const auto& m : pass.members) best = std::max(best, m.second.arc_count());
        outcome.phi = best;
        for (const auto& m : pass.members)
          if (m.second.arc_count() == best) outcome.extremal.push_back(m.second);
        outcome.stats = finish_stats(pass.stats, carried_elapsed);
        return outcome;
      }
    }

    SearchOutcome outcome;
    outcome.status = SearchStatus::empty;
    outcome.phi = 0;
    outcome.stats = finish_stats(carried_stats, carried_elapsed);
    return outcome;
  }

  // Emptiness and witness: stop at the first member, smallest subtree first.
  setup.collect_all = false;
  setup.gamma_budget = params.gamma_budget.value_or(-1);
  if (params.mode == SearchMode::witness)
    setup.gamma_budget = total_pairs - *params.target_arcs;

  auto tasks = enumerate_prefixes(setup);
  SearchStats cumulative;
  int round = 0;
  for (;;) {
    setup.shuffle = params.mode == SearchMode::witness;
    setup.round_seed = splitmix64(params.seed + 0x51ull * round);
    setup.node_budget = 0;
    if (params.mode == SearchMode::witness) {
      int shift = std::min(round, 16);
      setup.node_budget = params.tuning.witness_node_budget << shift;
    }

    PassResult pass = run_pass(setup, tasks, 0, {}, {}, nullptr);
    merge_stats(cumulative, pass.stats);
    cumulative.restarts = round;

    if (pass.witness) {
      SearchOutcome outcome;
      outcome.status = SearchStatus::witness_found;
      outcome.extremal.push_back(*pass.witness);
      outcome.stats = finish_stats(cumulative);
      return outcome;
    }
    if (pass.deadline_hit) return make_timeout(finish_stats(cumulative), false);
    if (pass.exhausted) {
      SearchOutcome outcome;
      outcome.status = SearchStatus::empty;
      outcome.phi = params.mode == SearchMode::emptiness ? std::optional<int>(0) : std::nullopt;
      outcome.stats = finish_stats(cumulative);
      return outcome;
    }
    ++round;  // some subtree ran out of budget: widen and reshuffle
  }
}

int removable_vertex(const Digraph& d) {
  if (DegreeProfile::of(d).min_out < 2)
    throw std::invalid_argument("removable_vertex needs minimum out-degree 2");
  if (!is_strong(d)) throw std::invalid_argument("removable_vertex needs a strong digraph");
  for (int v = 0; v < d.order(); ++v)
    if (is_strong(remove_vertex(d, v).graph)) return v;
  throw invariant_violation(
      "no single vertex removal preserves strongness; this contradicts the removable-vertex "
      "theorem for strong digraphs of minimum out-degree two");
}

namespace {

bool conjecture_instance_empty(int n, int r, int min_in, int workers) {
  if (n < 2 || n > 12) throw std::invalid_argument("instance order must be in [2, 12]");
  if (r < 1 || r >= n) throw std::invalid_argument("degree bound must be in [1, n-1]");
  SearchParams params;
  params.spec = ClassSpec{n, (n + r - 1) / r, r, min_in};
  params.mode = SearchMode::emptiness;
  params.workers = workers;
  return solve(params).status == SearchStatus::empty;
}

}  // namespace

bool caccetta_haggkvist_holds(int n, int r, int workers) {
  return conjecture_instance_empty(n, r, 1, workers);
}

bool behzad_chartrand_wall_holds(int n, int r, int workers) {
  return conjecture_instance_empty(n, r, r, workers);
}

}  // namespace girthforge

#include "fullerene/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace fullerene {

namespace {

using Clock = std::chrono::steady_clock;

// Shared between workers. The incumbent is ranked by key = length * stride -
// root, so a longer cycle wins and, at equal length, the smaller root (hence
// the lexicographically smaller canonical order) wins.
struct Shared {
  std::int64_t stride = 0;
  std::atomic<std::int64_t> key{std::numeric_limits<std::int64_t>::min()};
  std::atomic<std::int64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> exhausted{false};
  std::atomic<int> next_root{0};
  std::mutex mutex;
  std::vector<Vertex> best;
  Clock::time_point deadline;
};

class Worker {
 public:
  Worker(const FullereneGraph& g, const std::vector<char>& allowed, const SearchBudget& budget,
         Shared& shared)
      : g_(g), allowed_(allowed), budget_(budget), shared_(shared), n_(g.n()),
        usable_(n_), visited_(n_), live_(n_), support_(n_), queue_(n_) {}

  void run_root(Vertex root) {
    root_ = root;
    for (Vertex v = 0; v < n_; ++v) {
      usable_[v] = allowed_[v] && v > root;
      visited_[v] = 0;
    }
    visited_[root] = 1;
    path_.assign(1, root);
    dfs(root);
  }

 private:
  bool prunable(std::int64_t bound) const {
    return bound * shared_.stride - root_ <= shared_.key.load(std::memory_order_relaxed);
  }

  void publish() {
    const std::int64_t key = static_cast<std::int64_t>(path_.size()) * shared_.stride - root_;
    std::lock_guard lock(shared_.mutex);
    if (key <= shared_.key.load()) return;
    shared_.best = canonical_cycle(path_);
    shared_.key.store(key);
    if (budget_.on_incumbent) budget_.on_incumbent(CycleState(g_, shared_.best));
    if (budget_.target_length && static_cast<int>(path_.size()) >= *budget_.target_length) {
      shared_.stop = true;
    }
  }

  bool tick() {
    if (shared_.stop.load(std::memory_order_relaxed)) return false;
    const auto count = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (count > budget_.node_limit || ((count & 0xfff) == 0 && Clock::now() > shared_.deadline)) {
      shared_.exhausted = true;
      shared_.stop = true;
      return false;
    }
    return true;
  }

  // Upper bound on the length of any cycle completing the current path.
  // Unvisited usable vertices with fewer than two usable neighbors (counting
  // the path end and the root) are peeled repeatedly; the survivors
  // reachable from the end are the only candidates.
  int bound(Vertex end) {
    int head = 0, tail = 0;
    for (Vertex v = 0; v < n_; ++v) live_[v] = usable_[v] && !visited_[v];
    auto counts = [&](Vertex x) {
      return live_[x] || x == end || x == root_;
    };
    for (Vertex v = 0; v < n_; ++v) {
      if (!live_[v]) continue;
      int s = 0;
      for (Vertex u : g_.neighbors(v)) s += counts(u);
      support_[v] = s;
      if (s < 2) queue_[tail++] = v;
    }
    while (head < tail) {
      const Vertex v = queue_[head++];
      if (!live_[v]) continue;
      live_[v] = 0;
      for (Vertex u : g_.neighbors(v)) {
        if (live_[u] && --support_[u] == 1) queue_[tail++] = u;
      }
    }
    bool closes = g_.adjacent(end, root_) && path_.size() >= 3;
    int reached = 0;
    head = tail = 0;
    queue_[tail++] = end;
    while (head < tail) {
      const Vertex v = queue_[head++];
      for (Vertex u : g_.neighbors(v)) {
        if (live_[u]) {
          live_[u] = 0;
          ++reached;
          queue_[tail++] = u;
          if (g_.adjacent(u, root_)) closes = true;
        }
      }
    }
    if (!closes) return -1;
    return static_cast<int>(path_.size()) + reached;
  }

  void dfs(Vertex end) {
    if (!tick()) return;
    std::array<Vertex, 3> next{g_.neighbors(end)[0], g_.neighbors(end)[1], g_.neighbors(end)[2]};
    std::sort(next.begin(), next.end());
    for (Vertex u : next) {
      if (shared_.stop.load(std::memory_order_relaxed)) return;
      if (u == root_) {
        if (path_.size() >= 3 && !prunable(static_cast<std::int64_t>(path_.size()))) publish();
        continue;
      }
      if (!usable_[u] || visited_[u]) continue;
      visited_[u] = 1;
      path_.push_back(u);
      const int b = bound(u);
      if (b >= 0 && !prunable(b)) dfs(u);
      path_.pop_back();
      visited_[u] = 0;
    }
  }

  const FullereneGraph& g_;
  const std::vector<char>& allowed_;
  const SearchBudget& budget_;
  Shared& shared_;
  int n_;
  Vertex root_ = 0;
  std::vector<Vertex> path_;
  std::vector<char> usable_, visited_, live_;
  std::vector<int> support_;
  std::vector<Vertex> queue_;
};

std::vector<char> allowed_mask(const FullereneGraph& g, const std::vector<Vertex>& forbidden) {
  std::vector<char> allowed(g.n(), 1);
  for (Vertex v : forbidden) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("forbidden vertex out of range");
    allowed[v] = 0;
  }
  return allowed;
}

}  // namespace

SearchResult longest_cycle_exact(const FullereneGraph& g, const std::vector<Vertex>& forbidden,
                                 const SearchBudget& budget) {
  if (budget.node_limit <= 0 || budget.time_limit <= 0 || budget.threads <= 0 ||
      (budget.target_length && *budget.target_length <= 0)) {
    throw std::invalid_argument("search budget limits must be positive");
  }
  const auto started = Clock::now();
  const std::vector<char> allowed = allowed_mask(g, forbidden);
  const int n = g.n();
  // suffix[s] = allowed vertices >= s: the most any cycle rooted at s can use.
  std::vector<int> suffix(n + 1, 0);
  for (Vertex v = n - 1; v >= 0; --v) suffix[v] = suffix[v + 1] + allowed[v];

  Shared shared;
  shared.stride = n + 1;
  shared.deadline = started + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(budget.time_limit));

  auto work = [&] {
    Worker worker(g, allowed, budget, shared);
    while (!shared.stop.load()) {
      const Vertex root = shared.next_root.fetch_add(1);
      if (root >= n) break;
      if (!allowed[root]) continue;
      if (static_cast<std::int64_t>(suffix[root]) * shared.stride - root <= shared.key.load()) {
        break;
      }
      worker.run_root(root);
    }
  };
  if (budget.threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < budget.threads; ++t) pool.emplace_back(work);
  }

  SearchResult result;
  result.cycle = CycleState(g, shared.best);
  const int upper = suffix[0];
  result.optimal = !shared.exhausted.load() &&
                   (!shared.stop.load() || result.cycle.length() == upper);
  result.nodes = shared.nodes.load();
  result.seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return result;
}

void for_each_cycle(const FullereneGraph& g, const std::vector<Vertex>& forbidden,
                    const std::function<bool(const std::vector<Vertex>&)>& visit) {
  const int n = g.n();
  if (n > 64) throw std::invalid_argument("cycle enumeration requires n <= 64");
  std::vector<std::uint64_t> adj(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) adj[v] |= std::uint64_t{1} << u;
  }
  std::uint64_t allowed = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (Vertex v : forbidden) allowed &= ~(std::uint64_t{1} << v);

  std::vector<Vertex> path;
  bool keep_going = true;
  // Paths from `root` through vertices above it; each cycle is reported in
  // the direction whose second vertex is smaller than its last.
  std::function<void(Vertex, std::uint64_t, std::uint64_t)> extend =
      [&](Vertex end, std::uint64_t used, std::uint64_t avail) {
        const Vertex root = path.front();
        if (path.size() >= 3 && (adj[end] >> root & 1) && path[1] < path.back()) {
          if (!visit(path)) {
            keep_going = false;
            return;
          }
        }
        std::uint64_t options = adj[end] & avail & ~used;
        while (options && keep_going) {
          const Vertex u = std::countr_zero(options);
          options &= options - 1;
          path.push_back(u);
          extend(u, used | (std::uint64_t{1} << u), avail);
          path.pop_back();
        }
      };
  for (Vertex root = 0; root < n && keep_going; ++root) {
    if (!(allowed >> root & 1)) continue;
    const std::uint64_t above = root == 63 ? 0 : allowed & ~((std::uint64_t{2} << root) - 1);
    path.assign(1, root);
    extend(root, std::uint64_t{1} << root, above);
  }
}

CycleState brute_force_longest_cycle(const FullereneGraph& g,
                                     const std::vector<Vertex>& forbidden) {
  std::vector<Vertex> best;
  for_each_cycle(g, forbidden, [&](const std::vector<Vertex>& order) {
    if (order.size() < best.size()) return true;
    std::vector<Vertex> canon = canonical_cycle(order);
    if (order.size() > best.size() || canon < best) best = std::move(canon);
    return true;
  });
  return CycleState(g, best);
}

}  // namespace fullerene

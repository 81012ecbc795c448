#include "satlat/saturation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "satlat/bounds.hpp"

namespace satlat {

SaturationVerdict is_saturated(const Family& f, const PosetSpec& p,
                               Mode mode) {
  SaturationVerdict v;
  if (contains_copy(f, p, mode)) {
    v.copy_inside = find_embedding(f, p, mode, std::nullopt);
    return v;
  }
  const Mask top = full_mask(f.n);
  for (Mask s = 0; s <= top; ++s) {
    if (f.contains(s)) continue;
    if (!contains_copy(f.with(s), p, mode, s)) {
      v.missing_blocker = s;
      return v;
    }
  }
  v.saturated = true;
  return v;
}

Family complete(const Family& f, const PosetSpec& p, Mode mode,
                ScanOrder order) {
  if (contains_copy(f, p, mode))
    throw std::invalid_argument("family already contains a copy of " +
                                p.label());
  Family g = f;
  const Mask top = full_mask(f.n);
  auto try_add = [&](Mask s) {
    if (g.contains(s)) return;
    Family h = g.with(s);
    if (!contains_copy(h, p, mode, s)) g = std::move(h);
  };
  // A single pass suffices: copies created by an addition only involve sets
  // already present, so skipped sets stay blocked as the family grows.
  if (order == ScanOrder::ascending) {
    for (Mask s = 0; s <= top; ++s) try_add(s);
  } else {
    for (Mask s = top;; --s) {
      try_add(s);
      if (s == 0) break;
    }
  }
  return g;
}

namespace {

struct BudgetBlown {};
struct RootCancelled {};

// Ground-permutation images of every mask, identity omitted.  Only built
// for n <= 4, where 23 tables of 16 entries cover the symmetric group.
std::vector<std::vector<Mask>> permutation_tables(int n) {
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Mask>> tables;
  const Mask count = Mask{1} << n;
  // next_permutation from sorted order visits everything but the identity,
  // which never witnesses non-canonicity anyway.
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<Mask> t(count);
    for (Mask m = 0; m < count; ++m) {
      Mask im = 0;
      for (int i = 0; i < n; ++i)
        if (m >> i & 1) im |= Mask{1} << perm[static_cast<size_t>(i)];
      t[m] = im;
    }
    tables.push_back(std::move(t));
  }
  return tables;
}

// A family is canonical when no ground relabelling gives a lexicographically
// smaller sorted member sequence.  Deleting the largest member of a
// canonical family leaves a canonical family, so pruning non-canonical
// partial families never loses the least witness.
bool is_canonical(const std::vector<Mask>& mem,
                  const std::vector<std::vector<Mask>>& perms,
                  std::vector<Mask>& scratch) {
  scratch.resize(mem.size());
  for (const auto& t : perms) {
    for (size_t i = 0; i < mem.size(); ++i) scratch[i] = t[mem[i]];
    std::sort(scratch.begin(), scratch.end());
    if (std::lexicographical_compare(scratch.begin(), scratch.end(),
                                     mem.begin(), mem.end()))
      return false;
  }
  return true;
}

struct SizeSearch {
  const PosetSpec& p;
  Mode mode;
  int m;
  Mask top;
  const std::vector<std::vector<Mask>>* perms;  // null = no symmetry pruning
  std::uint64_t budget;                         // 0 = unbounded
  std::atomic<std::uint64_t>& nodes;
  std::atomic<Mask>& best_hit_root;  // sentinel top+1 when no hit yet
  Mask my_root;

  Family f;
  std::vector<Mask> scratch;
  std::optional<Family> hit;

  bool saturated_leaf() {
    size_t idx = 0;
    for (Mask s = 0; s <= top; ++s) {
      if (idx < f.members.size() && f.members[idx] == s) {
        ++idx;
        continue;
      }
      if (!contains_copy(f.with(s), p, mode, s)) return false;
    }
    return true;
  }

  bool dfs(Mask next) {
    const std::uint64_t seen = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (budget && seen > budget) throw BudgetBlown{};
    if (my_root > best_hit_root.load(std::memory_order_relaxed))
      throw RootCancelled{};
    if (static_cast<int>(f.members.size()) == m) {
      if (!saturated_leaf()) return false;
      hit = f;
      return true;
    }
    const Mask need = static_cast<Mask>(m - f.size());
    for (Mask s = next; s <= top; ++s) {
      if (top - s + 1 < need) break;
      f.members.push_back(s);  // s exceeds every member, order is kept
      bool ok = !contains_copy(f, p, mode, s) &&
                (!perms || is_canonical(f.members, *perms, scratch));
      if (ok && dfs(s + 1)) return true;
      f.members.pop_back();
    }
    return false;
  }
};

// Best applicable analytic lower bound for seeding, 0 when none applies.
int seed_bound(const PosetSpec& p, Mode mode, int n) {
  // Reference bounds for antichains and the named small posets are induced
  // statements; chains are total orders, where weak and induced copies (and
  // hence both saturation numbers) coincide.
  if (mode == Mode::weak && !p.is_chain()) return 0;
  BoundReport rep;
  try {
    rep = reference_bounds(p.label(), BigInt(n));
  } catch (const std::exception&) {
    return 0;
  }
  BigInt best = 0;
  for (const auto& e : rep.entries)
    if (e.kind == BoundKind::lower && e.applicable && e.value &&
        *e.value > best)
      best = *e.value;
  if (best > (BigInt(1) << n)) best = BigInt(1) << n;  // defensive clamp
  return static_cast<int>(best);
}

}  // namespace

SolveResult min_saturated(int n, const PosetSpec& p, Mode mode,
                          const SolveOptions& opts) {
  if (n < 1 || n > kMaxGroundSize)
    throw std::invalid_argument("ground size out of range [1, 24]: " +
                                std::to_string(n));
  if (opts.jobs < 1)
    throw std::invalid_argument("jobs must be >= 1");
  if (opts.node_budget > 0 && opts.jobs != 1)
    throw std::invalid_argument(
        "a node budget requires jobs=1 (deterministic accounting)");
  if (n >= 6 && opts.node_budget == 0)
    throw std::invalid_argument(
        "full exhaustion is only supported for n <= 5; set a node budget");

  const auto t0 = std::chrono::steady_clock::now();
  SolveResult r;
  r.n = n;
  r.target = p.label();
  r.mode = mode;

  const Family upper = complete(Family::empty(n), p, mode);
  const int upper_size = upper.size();
  int start = 0;
  if (opts.seed_lower_bound)
    start = std::min(seed_bound(p, mode, n), upper_size);
  r.start_size = start;

  std::vector<std::vector<Mask>> perm_store;
  const std::vector<std::vector<Mask>>* perms = nullptr;
  if (opts.symmetry_pruning && n <= 4) {
    perm_store = permutation_tables(n);
    perms = &perm_store;
  }

  const Mask top = full_mask(n);
  std::atomic<std::uint64_t> nodes{0};

  auto finish = [&](SolveResult& res) -> SolveResult& {
    res.nodes_explored = nodes.load();
    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return res;
  };

  for (int m = start; m <= upper_size; ++m) {
    // Subtrees are rooted at the first member; a hit in root s makes every
    // root beyond s irrelevant (its families are lexicographically larger).
    std::vector<Mask> roots;
    std::atomic<Mask> best_hit_root{static_cast<Mask>(top) + 1};
    std::vector<std::optional<Family>> hits;

    if (m == 0) {
      SizeSearch ss{p,    mode,  0,       top, perms, opts.node_budget,
                    nodes, best_hit_root, 0,   Family::empty(n), {}, {}};
      bool found = false;
      try {
        found = ss.dfs(0);
      } catch (const BudgetBlown&) {
        r.conclusive = false;
        r.interval_low = m;
        r.interval_high = upper_size;
        return finish(r);
      }
      if (found) {
        r.conclusive = true;
        r.min_size = 0;
        r.witness = *ss.hit;
        return finish(r);
      }
      continue;
    }

    {
      std::vector<Mask> scratch;
      Family probe = Family::empty(n);
      for (Mask s = 0; s + (static_cast<Mask>(m) - 1) <= top; ++s) {
        probe.members.assign(1, s);
        if (contains_copy(probe, p, mode, s)) continue;
        if (perms && !is_canonical(probe.members, *perms, scratch)) continue;
        roots.push_back(s);
      }
    }
    hits.assign(roots.size(), std::nullopt);

    auto run_root = [&](size_t i) {
      SizeSearch ss{p,     mode,  m,
                    top,   perms, opts.node_budget,
                    nodes, best_hit_root, roots[i],
                    Family(n, {roots[i]}), {}, {}};
      try {
        if (ss.dfs(roots[i] + 1)) {
          hits[i] = std::move(ss.hit);
          // Lower best_hit_root to cancel lexicographically larger roots.
          Mask cur = best_hit_root.load();
          while (roots[i] < cur &&
                 !best_hit_root.compare_exchange_weak(cur, roots[i])) {
          }
        }
      } catch (const RootCancelled&) {
      }
    };

    bool blown = false;
    if (opts.jobs == 1) {
      try {
        for (size_t i = 0; i < roots.size(); ++i) {
          if (roots[i] > best_hit_root.load()) break;
          run_root(i);
          if (hits[i]) break;  // first root with a hit wins
        }
      } catch (const BudgetBlown&) {
        blown = true;
      }
    } else {
      std::atomic<size_t> next{0};
      const int workers =
          static_cast<int>(std::min<size_t>(roots.size(),
                                            static_cast<size_t>(opts.jobs)));
      std::vector<std::thread> pool;
      pool.reserve(static_cast<size_t>(workers));
      for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
          for (size_t i = next.fetch_add(1); i < roots.size();
               i = next.fetch_add(1)) {
            if (roots[i] > best_hit_root.load()) continue;
            run_root(i);
          }
        });
      for (auto& t : pool) t.join();
    }

    if (blown) {
      r.conclusive = false;
      r.interval_low = m;
      r.interval_high = upper_size;
      return finish(r);
    }
    for (size_t i = 0; i < roots.size(); ++i) {
      if (!hits[i]) continue;
      r.conclusive = true;
      r.min_size = m;
      r.witness = *hits[i];
      if (!is_saturated(r.witness, p, mode).saturated)
        throw std::logic_error("solver produced a non-saturated witness");
      return finish(r);
    }
  }
  // The greedy completion itself is a saturated family of the final size,
  // so the last round cannot miss.
  throw std::logic_error("exhaustion missed its own upper bound");
}

}  // namespace satlat

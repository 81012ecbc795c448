#include "satlat/chains.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace satlat {

namespace {

// Maximum matching on the bipartite graph with an edge (u, v) whenever
// member u is a strict subset of member v.  Kuhn's augmenting paths with
// both sides scanned in ascending member order keep the result (and hence
// the partition and the witness antichain) deterministic.
struct Matching {
  int m;
  const std::vector<Mask>& mem;
  std::vector<int> succ;  // left u -> matched right v, -1 if none
  std::vector<int> pred;  // right v -> matched left u, -1 if none

  explicit Matching(const Family& f)
      : m(f.size()), mem(f.members), succ(mem.size(), -1),
        pred(mem.size(), -1) {
    std::vector<char> seen(mem.size());
    for (int u = 0; u < m; ++u) {
      std::fill(seen.begin(), seen.end(), 0);
      try_augment(u, seen);
    }
  }

  bool try_augment(int u, std::vector<char>& seen) {
    for (int v = 0; v < m; ++v) {
      if (seen[v] || !is_strict_subset(mem[u], mem[v])) continue;
      seen[v] = 1;
      if (pred[v] < 0 || try_augment(pred[v], seen)) {
        succ[u] = v;
        pred[v] = u;
        return true;
      }
    }
    return false;
  }

  int size() const {
    int s = 0;
    for (int v : succ)
      if (v >= 0) ++s;
    return s;
  }

  // Koenig: Z = vertices reachable by alternating paths from unmatched left
  // vertices; the antichain is { x : left(x) in Z and right(x) not in Z }.
  std::vector<Mask> antichain() const {
    std::vector<char> zl(mem.size(), 0), zr(mem.size(), 0);
    std::vector<int> stack;
    for (int u = 0; u < m; ++u)
      if (succ[u] < 0) {
        zl[u] = 1;
        stack.push_back(u);
      }
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < m; ++v) {
        if (zr[v] || !is_strict_subset(mem[u], mem[v]) || succ[u] == v)
          continue;
        zr[v] = 1;
        int w = pred[v];
        if (w >= 0 && !zl[w]) {
          zl[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::vector<Mask> out;
    for (int x = 0; x < m; ++x)
      if (zl[x] && !zr[x]) out.push_back(mem[x]);
    return out;
  }
};

}  // namespace

WidthResult width(const Family& f) {
  if (f.size() == 0)
    throw std::invalid_argument("width of an empty family is undefined");
  Matching mt(f);
  WidthResult r;
  r.value = f.size() - mt.size();
  r.antichain = mt.antichain();
  assert(static_cast<int>(r.antichain.size()) == r.value);
  return r;
}

ChainPartition chain_partition(const Family& f) {
  if (f.size() == 0)
    throw std::invalid_argument("cannot partition an empty family");
  Matching mt(f);
  ChainPartition p;
  p.family = f;
  p.augmented = false;
  // Chain heads are the members with no matched predecessor; members are
  // ascending, so walking heads in index order lists chains by least
  // element.
  for (int u = 0; u < f.size(); ++u) {
    if (mt.pred[u] >= 0) continue;
    std::vector<Mask> chain;
    for (int v = u; v >= 0; v = mt.succ[v]) chain.push_back(f.members[v]);
    p.chains.push_back(std::move(chain));
  }
  assert(static_cast<int>(p.chains.size()) == f.size() - mt.size());
  return p;
}

ChainPartition ChainPartition::from_chains(Family family,
                                           std::vector<std::vector<Mask>> chains,
                                           bool augmented) {
  ChainPartition p;
  p.family = std::move(family);
  p.chains = std::move(chains);
  p.augmented = augmented;
  const Mask lo = 0, hi = full_mask(p.family.n);
  std::vector<Mask> covered;
  for (const auto& chain : p.chains) {
    if (augmented &&
        (chain.size() < 2 || chain.front() != lo || chain.back() != hi))
      throw std::invalid_argument(
          "augmented chain must run from the empty set to the full set");
    for (size_t i = 0; i + 1 < chain.size(); ++i)
      if (!is_strict_subset(chain[i], chain[i + 1]))
        throw std::invalid_argument(
            "chain not strictly increasing at " +
            to_set_notation(chain[i]) + " vs " + to_set_notation(chain[i + 1]));
    for (Mask s : chain) {
      if (augmented && (s == lo || s == hi)) continue;
      covered.push_back(s);
    }
  }
  std::sort(covered.begin(), covered.end());
  if (std::adjacent_find(covered.begin(), covered.end()) != covered.end())
    throw std::invalid_argument("chains are not disjoint");
  if (covered != p.family.members)
    throw std::invalid_argument("chains do not cover the family exactly");
  if (augmented &&
      (p.family.contains(lo) || p.family.contains(hi)))
    throw std::invalid_argument(
        "augmented partition family must exclude the endpoints");
  return p;
}

std::vector<Gap> gaps_of(const ChainPartition& p) {
  if (!p.augmented)
    throw std::invalid_argument("gaps are read off augmented chains");
  std::vector<Gap> out;
  for (int c = 0; c < p.chain_count(); ++c) {
    const auto& chain = p.chains[static_cast<size_t>(c)];
    for (size_t i = 0; i + 1 < chain.size(); ++i)
      out.push_back(Gap{c, chain[i], chain[i + 1],
                        cube_dimension(chain[i], chain[i + 1])});
  }
  return out;
}

std::pair<ChainPartition, std::vector<Gap>> augment_and_gaps(
    const ChainPartition& p) {
  if (p.augmented)
    throw std::invalid_argument("partition is already augmented");
  const Mask lo = 0, hi = full_mask(p.family.n);
  if (p.family.contains(lo) || p.family.contains(hi))
    throw std::invalid_argument(
        "family to augment must exclude the empty set and the full set");
  ChainPartition q;
  q.family = p.family;
  q.augmented = true;
  for (const auto& chain : p.chains) {
    std::vector<Mask> c;
    c.reserve(chain.size() + 2);
    c.push_back(lo);
    c.insert(c.end(), chain.begin(), chain.end());
    c.push_back(hi);
    q.chains.push_back(std::move(c));
  }
  std::vector<Gap> gaps = gaps_of(q);
  return {std::move(q), std::move(gaps)};
}

}  // namespace satlat

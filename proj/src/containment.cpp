#include "satlat/containment.hpp"

#include <algorithm>
#include <stdexcept>

#include "satlat/chains.hpp"

namespace satlat {

namespace {

// Must the pair (target u, target v) -> (mask a, mask b) be accepted?
bool pair_ok(const PosetSpec& p, Mode mode, int u, int v, Mask a, Mask b) {
  if (p.less(u, v)) return is_strict_subset(a, b);
  if (p.less(v, u)) return is_strict_subset(b, a);
  return mode == Mode::weak || incomparable(a, b);
}

struct Search {
  const Family& f;
  const PosetSpec& p;
  Mode mode;
  int req_idx;  // -1 when unconstrained
  std::vector<int> image;
  std::vector<char> used;

  Search(const Family& f_, const PosetSpec& p_, Mode mode_, int req_idx_)
      : f(f_), p(p_), mode(mode_), req_idx(req_idx_),
        image(static_cast<size_t>(p_.size()), -1),
        used(f_.members.size(), 0) {}

  // candidate for target w against the first `assigned` bound targets.
  bool fits(int w, int assigned, Mask candidate) const {
    for (int v = 0; v < assigned; ++v)
      if (!pair_ok(p, mode, w, v, candidate, f.members[image[v]]))
        return false;
    return true;
  }

  // Depth-first in candidate-index order; the first full assignment is the
  // lexicographically least embedding (among those using the required
  // member, if one was given).
  bool dfs(int u) {
    const int pn = p.size();
    if (u == pn) return req_idx < 0 || used[req_idx];
    if (req_idx >= 0 && !used[req_idx]) {
      // Prune: the required member must still fit some unassigned target.
      bool placeable = false;
      for (int w = u; w < pn && !placeable; ++w)
        placeable = fits(w, u, f.members[req_idx]);
      if (!placeable) return false;
    }
    const int m = f.size();
    for (int c = 0; c < m; ++c) {
      if (used[c]) continue;
      if (!fits(u, u, f.members[c])) continue;
      image[u] = c;
      used[c] = 1;
      if (dfs(u + 1)) return true;
      used[c] = 0;
      image[u] = -1;
    }
    return false;
  }
};

}  // namespace

bool valid_embedding(const Family& f, const PosetSpec& p, const Embedding& e,
                     Mode mode) {
  const int pn = p.size();
  if (static_cast<int>(e.image.size()) != pn) return false;
  for (int u = 0; u < pn; ++u) {
    int c = e.image[u];
    if (c < 0 || c >= f.size()) return false;
    for (int v = 0; v < u; ++v) {
      if (e.image[v] == c) return false;  // injective
      if (!pair_ok(p, mode, u, v, f.members[c], f.members[e.image[v]]))
        return false;
    }
  }
  return true;
}

std::optional<Embedding> find_embedding(const Family& f, const PosetSpec& p,
                                        Mode mode,
                                        std::optional<Mask> required) {
  int req_idx = -1;
  if (required) {
    req_idx = f.index_of(*required);
    if (req_idx < 0)
      throw std::invalid_argument("required set is not a member: " +
                                  to_set_notation(*required));
  }
  if (p.size() > f.size()) return std::nullopt;
  Search s(f, p, mode, req_idx);
  if (!s.dfs(0)) return std::nullopt;
  return Embedding{std::move(s.image)};
}

std::optional<Embedding> find_induced(const Family& f, const PosetSpec& p,
                                      std::optional<Mask> required) {
  return find_embedding(f, p, Mode::induced, required);
}

std::optional<Embedding> find_weak(const Family& f, const PosetSpec& p) {
  return find_embedding(f, p, Mode::weak, std::nullopt);
}

bool contains_induced_diamond(const Family& f, std::optional<Mask> required) {
  if (required && !f.contains(*required))
    throw std::invalid_argument("required set is not a member: " +
                                to_set_notation(*required));
  const auto& mem = f.members;
  const int m = f.size();
  // For each incomparable middle pair, any bottom below the meet plus any
  // top above the join completes an induced diamond: all six pairwise
  // relations are then forced, so no further checking is needed.
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (!incomparable(mem[i], mem[j])) continue;
      Mask meet = mem[i] & mem[j];
      Mask join = mem[i] | mem[j];
      bool have_s = false, have_u = false;
      for (int t = 0; t < m && !(have_s && have_u); ++t) {
        have_s = have_s || is_subset_of(mem[t], meet);
        have_u = have_u || is_subset_of(join, mem[t]);
      }
      if (!(have_s && have_u)) continue;
      if (!required) return true;
      Mask r = *required;
      if (r == mem[i] || r == mem[j]) return true;  // r as a middle
      if (is_subset_of(r, meet)) return true;       // r as the bottom
      if (is_subset_of(join, r)) return true;       // r as the top
    }
  return false;
}

int longest_chain(const Family& f, std::optional<Mask> required) {
  if (required && !f.contains(*required))
    throw std::invalid_argument("required set is not a member: " +
                                to_set_notation(*required));
  const auto& mem = f.members;
  const int m = f.size();
  if (m == 0) return 0;
  // Ascending mask order is a linear extension, so a left-to-right DP over
  // "longest chain ending here" is exact.
  std::vector<int> up(mem.size(), 1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j)
      if (is_strict_subset(mem[j], mem[i])) up[i] = std::max(up[i], up[j] + 1);
  if (!required) return *std::max_element(up.begin(), up.end());
  std::vector<int> down(mem.size(), 1);
  for (int i = m - 1; i >= 0; --i)
    for (int j = m - 1; j > i; --j)
      if (is_strict_subset(mem[i], mem[j]))
        down[i] = std::max(down[i], down[j] + 1);
  int r = f.index_of(*required);
  return up[r] + down[r] - 1;
}

bool contains_copy(const Family& f, const PosetSpec& p, Mode mode,
                   std::optional<Mask> required) {
  if (required && !f.contains(*required))
    throw std::invalid_argument("required set is not a member: " +
                                to_set_notation(*required));
  const int pn = p.size();
  if (pn > f.size()) return false;
  if (p.is_antichain()) {
    if (mode == Mode::weak) return true;  // any pn distinct members qualify
    if (!required) return width(f).value >= pn;
    if (pn == 1) return true;
    // Copy through r = antichain of pn-1 members all incomparable to r.
    std::vector<Mask> inc;
    for (Mask s : f.members)
      if (incomparable(s, *required)) inc.push_back(s);
    if (static_cast<int>(inc.size()) < pn - 1) return false;
    return width(Family(f.n, std::move(inc))).value >= pn - 1;
  }
  if (p.is_chain()) return longest_chain(f, required) >= pn;
  if (mode == Mode::induced && p.same_relation(PosetSpec::diamond()))
    return contains_induced_diamond(f, required);
  return find_embedding(f, p, mode, required).has_value();
}

}  // namespace satlat

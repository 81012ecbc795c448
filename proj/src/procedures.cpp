#include "satlat/procedures.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "satlat/bounds.hpp"
#include "satlat/numbers.hpp"

namespace satlat {

namespace {

Family family_minus_extremes(const Family& f) {
  const Mask full = full_mask(f.n);
  std::vector<Mask> rest;
  rest.reserve(f.members.size());
  for (Mask m : f.members)
    if (m != 0 && m != full) rest.push_back(m);
  return Family(f.n, std::move(rest));
}

void expect_partition_of(const Family& f, const ChainPartition& p,
                         bool want_augmented, const char* who) {
  if (p.augmented != want_augmented)
    throw std::invalid_argument(std::string(who) + " expects an " +
                                (want_augmented ? "augmented" : "unaugmented") +
                                " partition");
  if (p.family.n != f.n || !(p.family == family_minus_extremes(f)))
    throw std::invalid_argument(
        std::string(who) +
        ": partition does not cover the family minus the extreme sets");
}

int members_inside(const std::vector<Mask>& chain, Mask x, Mask y) {
  int count = 0;
  for (Mask m : chain)
    if (is_strict_subset(x, m) && is_strict_subset(m, y)) ++count;
  return count;
}

}  // namespace

// ---------- diamond-target audits ----------

WitnessTable diamond_witness_table(const Family& f, Mask fstar) {
  if (!f.contains(fstar))
    throw std::invalid_argument("witness table needs a member as its anchor");
  WitnessTable t;
  t.fstar = fstar;
  t.n = f.n;
  t.inside.assign(f.n, std::nullopt);
  t.outside.assign(f.n, std::nullopt);
  for (int e = 1; e <= f.n; ++e) {
    const Mask bit = Mask{1} << (e - 1);
    const bool in = (fstar & bit) != 0;
    auto& slot = in ? t.inside[e - 1] : t.outside[e - 1];
    // Lexicographically least (F_e, G_e): members ascend, so the first hit
    // in this double scan is it.
    for (Mask fi : f.members) {
      if (in && !is_subset_of(fi, fstar)) continue;
      for (Mask gi : f.members) {
        if ((fi & ~gi) != bit) continue;
        if (!in && !is_subset_of(fstar, gi)) continue;
        slot = WitnessPair{fi, gi};
        break;
      }
      if (slot) break;
    }
  }
  t.complete = true;
  for (int e = 1; e <= f.n; ++e) {
    const Mask bit = Mask{1} << (e - 1);
    const auto& slot = (fstar & bit) ? t.inside[e - 1] : t.outside[e - 1];
    if (!slot) t.complete = false;
  }
  return t;
}

DigraphAudit diamond_digraph_audit(const Family& f) {
  DigraphAudit a;
  const long long m = static_cast<long long>(f.size());
  a.pair_budget = m * (m - 1);
  a.element_covered.assign(f.n, false);
  for (Mask from : f.members)
    for (Mask to : f.members) {
      if (from == to) continue;
      const Mask diff = to & ~from;
      if (popcount(diff) != 1) continue;
      ++a.arc_count;
      a.element_covered[static_cast<size_t>(std::countr_zero(diff))] = true;
    }
  a.pass = std::all_of(a.element_covered.begin(), a.element_covered.end(),
                       [](bool b) { return b; });
  return a;
}

ExtremalAudit extremal_element_audit(const Family& f) {
  ExtremalAudit a;
  const int m = f.size();
  const Mask full = full_mask(f.n);
  for (Mask s : f.members) {
    const bool minimal = std::none_of(
        f.members.begin(), f.members.end(),
        [&](Mask other) { return is_strict_subset(other, s); });
    if (minimal)
      a.items.push_back({"minimal_member", s, popcount(s) + 1, false});
  }
  for (Mask u : f.members) {
    const bool maximal = std::none_of(
        f.members.begin(), f.members.end(),
        [&](Mask other) { return is_strict_subset(u, other); });
    if (maximal)
      a.items.push_back({"maximal_member", u, f.n - popcount(u) + 1, false});
  }
  if (f.contains(0)) a.items.push_back({"extreme_set", 0, f.n + 1, false});
  if (f.contains(full)) a.items.push_back({"extreme_set", full, f.n + 1, false});
  for (auto& item : a.items) {
    item.pass = m >= item.required;
    if (!item.pass) a.pass = false;
  }
  return a;
}

// ---------- antichain-target gap machinery ----------

GapFullness gap_fullness_audit(const Family& f, const ChainPartition& p) {
  expect_partition_of(f, p, true, "gap fullness audit");
  // Arithmetic sanity: a chain from the empty to the full set whose largest
  // jump is d cannot have fewer than ceil(n/d) + 1 members.
  for (const auto& chain : p.chains) {
    int dmax = 1;
    for (size_t i = 0; i + 1 < chain.size(); ++i)
      dmax = std::max(dmax, cube_dimension(chain[i], chain[i + 1]));
    if (static_cast<int>(chain.size()) < (f.n + dmax - 1) / dmax + 1)
      throw std::logic_error("chain shorter than its gap sizes allow");
  }
  GapFullness r;
  for (const Gap& g : gaps_of(p)) {
    if (g.size < 2) continue;
    for_each_in_open_interval(g.x, g.y, [&](Mask z) {
      if (!r.pass || f.contains(z)) return;
      r.pass = false;
      r.failed_gap = g;
      r.missing = z;
    });
    if (!r.pass) break;
  }
  return r;
}

std::vector<Gap> wide_gaps(const ChainPartition& p) {
  std::vector<Gap> out;
  for (const Gap& g : gaps_of(p)) {
    if (g.size < 3) continue;  // interiors with < 3 sets cannot be wide
    for (int j = 0; j < p.chain_count(); ++j) {
      if (j == g.chain_index) continue;
      if (members_inside(p.chains[j], g.x, g.y) >= 3) {
        out.push_back(g);
        break;
      }
    }
  }
  return out;
}

namespace {

std::pair<int, long long> gap_measure(const std::vector<Gap>& wide) {
  int size = 0;
  long long count = 0;
  for (const Gap& g : wide) size = std::max(size, g.size);
  for (const Gap& g : wide)
    if (g.size == size) ++count;
  return {size, count};
}

}  // namespace

std::pair<ChainPartition, MoveTrace> eliminate_wide_gaps(ChainPartition p) {
  if (!p.augmented)
    throw std::invalid_argument(
        "wide-gap elimination expects an augmented partition");
  MoveTrace trace;
  std::vector<Gap> wide = wide_gaps(p);
  auto measure = gap_measure(wide);
  trace.initial_measure_size = measure.first;
  trace.initial_measure_count = measure.second;
  while (!wide.empty()) {
    // Widest gap, lowest chain then lowest bottom set on ties.
    const Gap* pick = &wide.front();
    for (const Gap& g : wide) {
      if (g.size > pick->size ||
          (g.size == pick->size &&
           (g.chain_index < pick->chain_index ||
            (g.chain_index == pick->chain_index && g.x < pick->x))))
        pick = &g;
    }
    const Gap gap = *pick;
    int donor = -1;
    for (int j = 0; j < p.chain_count() && donor < 0; ++j)
      if (j != gap.chain_index &&
          members_inside(p.chains[j], gap.x, gap.y) >= 3)
        donor = j;
    assert(donor >= 0);
    // The donor's members inside (X, Y) form a consecutive run of its chain
    // (anything between two of them lies in the interval too); move the
    // middle of the lowest three into the gap.
    std::vector<Mask> run;
    for (Mask m : p.chains[donor])
      if (is_strict_subset(gap.x, m) && is_strict_subset(m, gap.y))
        run.push_back(m);
    const Mask moved = run[1];
    auto& from = p.chains[donor];
    from.erase(std::find(from.begin(), from.end(), moved));
    auto& to = p.chains[gap.chain_index];
    to.insert(std::lower_bound(to.begin(), to.end(), moved), moved);

    wide = wide_gaps(p);
    const auto next = gap_measure(wide);
    if (next >= measure)
      throw std::logic_error(
          "wide-gap elimination failed to decrease its measure");
    trace.moves.push_back(
        {gap, donor, moved, next.first, next.second});
    measure = next;
  }
  return {std::move(p), trace};
}

std::string format_trace(const MoveTrace& t) {
  std::ostringstream out;
  out << "initial measure: size=" << t.initial_measure_size
      << " count=" << t.initial_measure_count << "\n";
  for (const WideGapMove& m : t.moves) {
    out << "move T=" << to_set_notation(m.moved) << " from=" << m.donor_chain
        << " to=" << m.gap.chain_index << " gap=" << to_set_notation(m.gap.x)
        << ".." << to_set_notation(m.gap.y) << " size=" << m.gap.size
        << " -> measure size=" << m.measure_size_after
        << " count=" << m.measure_count_after << "\n";
  }
  if (t.moves.empty()) out << "no moves needed\n";
  return out.str();
}

MaxGapCheck max_gap_bound_check(const ChainPartition& p) {
  if (!p.augmented)
    throw std::invalid_argument(
        "max-gap bound check expects an augmented partition");
  MaxGapCheck r;
  const long long limit = 2LL * (p.chain_count() - 1);
  for (const Gap& g : gaps_of(p)) {
    if ((1LL << g.size) - 2 > limit) {
      r.pass = false;
      r.offender = g;
      break;
    }
  }
  return r;
}

// ---------- greedy chain colouring ----------

ColoredFamily greedy_color(const Family& f, const ChainPartition& p) {
  expect_partition_of(f, p, false, "greedy colouring");
  ColoredFamily c;
  c.n = f.n;
  const int k = p.chain_count();
  c.classes.assign(k, {});
  for (int j = 1; j <= k; ++j) {
    std::vector<Mask>& cls = c.classes[j - 1];
    for (Mask m : p.chains[j - 1])
      if (!c.color.count(m)) {
        cls.push_back(m);
        c.color[m] = j;
      }
    // cls is ascending: it came from an ascending chain.  Absorb every
    // uncoloured member that keeps it a chain, in ascending order.
    for (Mask z : p.family.members) {
      if (c.color.count(z)) continue;
      const bool fits = std::all_of(cls.begin(), cls.end(), [&](Mask m) {
        return is_subset_of(m, z) || is_subset_of(z, m);
      });
      if (fits) {
        cls.insert(std::lower_bound(cls.begin(), cls.end(), z), z);
        c.color[z] = j;
      }
    }
  }
  if (c.color.size() != p.family.members.size())
    throw std::logic_error("greedy colouring left members uncoloured");
  const Mask full = full_mask(f.n);
  for (auto& cls : c.classes) {
    cls.insert(cls.begin(), 0);
    cls.push_back(full);
  }
  return c;
}

ColoringCheck coloring_gap_check(const Family& f, const ColoredFamily& c) {
  if (c.n != f.n)
    throw std::invalid_argument("colouring and family disagree on n");
  const Mask full = full_mask(f.n);
  std::vector<Mask> covered;
  for (const auto& cls : c.classes)
    for (Mask m : cls)
      if (m != 0 && m != full) covered.push_back(m);
  std::sort(covered.begin(), covered.end());
  if (!(Family(f.n, covered) == family_minus_extremes(f)))
    throw std::invalid_argument(
        "colouring classes do not cover the family minus the extreme sets");

  ColoringCheck r;
  for (int j = 1; j <= static_cast<int>(c.classes.size()); ++j) {
    const auto& cls = c.classes[j - 1];
    for (size_t i = 0; i + 1 < cls.size(); ++i) {
      const int d = cube_dimension(cls[i], cls[i + 1]);
      if (d >= 2 && central_binomial(d) > j - 1) {
        r.pass = false;
        r.failures.push_back(
            {j, "gap-middle-layer", Gap{j - 1, cls[i], cls[i + 1], d}});
      }
    }
    const int need = static_cast<int>(
        ceil_div(BigInt(f.n), BigInt(d_star(BigInt(j))))) + 1;
    if (static_cast<int>(cls.size()) < need) {
      r.pass = false;
      r.failures.push_back({j, "class-size", std::nullopt});
    }
  }
  return r;
}

}  // namespace satlat

// satlat: verify, solve, bound, and audit minimum saturated families in the
// Boolean lattice.  Exit codes: 0 success, 1 verification/audit failed,
// 2 invalid input, 3 solver stopped by its node budget (interval answer).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "satlat/bounds.hpp"
#include "satlat/cache.hpp"
#include "satlat/io.hpp"
#include "satlat/procedures.hpp"
#include "satlat/saturation.hpp"
#include "satlat/selfcheck.hpp"
#include "satlat/version.hpp"

namespace {

using nlohmann::json;
using namespace satlat;

// ---------- small rendering helpers ----------

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (size_t i = 0; i < cells.size(); ++i)
    os << (i ? "," : "") << csv_field(cells[i]);
  os << "\n";
}

Mode parse_mode(const std::string& s) {
  return s == "weak" ? Mode::weak : Mode::induced;
}

std::string bits(Mask m, int n) { return to_bitstring(m, n); }

std::string family_line(const Family& f) {
  std::string out;
  for (Mask m : f.members) {
    if (!out.empty()) out += ' ';
    out += bits(m, f.n);
  }
  return out.empty() ? "(empty)" : out;
}

json embedding_json(const Family& f, const Embedding& e) {
  json arr = json::array();
  for (int idx : e.image)
    arr.push_back(bits(f.members[static_cast<size_t>(idx)], f.n));
  return arr;
}

std::string rational_exact(const ExactRational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

// Parse one set: a bitstring of length n or a decimal mask.
Mask parse_set(const std::string& s, int n) {
  if (auto m = mask_from_bitstring(s, n)) return *m;
  json j = json::parse(s, nullptr, false);
  if (j.is_number_unsigned() &&
      j.get<std::uint64_t>() < (std::uint64_t{1} << n)) {
    Family probe(n, {static_cast<Mask>(j.get<std::uint64_t>())});
    return probe.members[0];
  }
  throw std::invalid_argument("cannot parse set '" + s + "' for n = " +
                              std::to_string(n));
}

// ---------- verify ----------

int cmd_verify(const std::string& family_path, const std::string& poset,
               const std::string& mode_str, const std::string& format) {
  const Family f = load_family_file(family_path);
  const PosetSpec p = parse_poset(poset);
  const Mode mode = parse_mode(mode_str);
  const SaturationVerdict v = is_saturated(f, p, mode);

  std::string detail;
  if (v.copy_inside)
    detail = "copy inside: " + embedding_json(f, *v.copy_inside).dump();
  else if (v.missing_blocker)
    detail = "addable without a copy: " + bits(*v.missing_blocker, f.n);

  if (format == "json") {
    json out = {{"command", "verify"}, {"n", f.n},       {"poset", poset},
                {"mode", mode_str},    {"family_size", f.size()},
                {"saturated", v.saturated}};
    out["copy_inside"] =
        v.copy_inside ? embedding_json(f, *v.copy_inside) : json();
    out["missing_blocker"] =
        v.missing_blocker ? json(bits(*v.missing_blocker, f.n)) : json();
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    csv_row(std::cout, {"n", "poset", "mode", "family_size", "saturated",
                        "detail"});
    csv_row(std::cout,
            {std::to_string(f.n), poset, mode_str, std::to_string(f.size()),
             v.saturated ? "true" : "false", detail});
  } else {
    std::cout << "family of " << f.size() << " sets in B_" << f.n << " vs "
              << poset << " (" << mode_str << "): "
              << (v.saturated ? "saturated" : "NOT saturated") << "\n";
    if (!detail.empty()) std::cout << detail << "\n";
  }
  return v.saturated ? 0 : 1;
}

// ---------- solve ----------

json solve_payload(const SolveResult& r) {
  json out = {{"n", r.n},
              {"target", r.target},
              {"mode", std::string(to_string(r.mode))},
              {"conclusive", r.conclusive},
              {"min_size", r.conclusive ? json(r.min_size) : json()},
              {"witness", r.conclusive ? family_to_json(r.witness) : json()},
              {"interval_low", r.interval_low},
              {"interval_high", r.interval_high},
              {"start_size", r.start_size},
              {"nodes_explored", r.nodes_explored},
              {"elapsed_seconds", r.elapsed_seconds}};
  return out;
}

int cmd_solve(int n, const std::string& poset, const std::string& mode_str,
              std::uint64_t budget, int jobs, bool seed, bool no_cache,
              const std::string& format) {
  const PosetSpec p = parse_poset(poset);
  const Mode mode = parse_mode(mode_str);
  const json params = {{"n", n},
                       {"poset", poset},
                       {"mode", mode_str},
                       {"budget", budget},
                       {"seed", seed}};
  std::optional<ResultCache> cache;
  if (!no_cache) cache.emplace(ResultCache::from_env());

  std::string cache_status = no_cache ? "off" : "miss";
  json payload;
  bool have = false;
  if (cache) {
    if (auto hit = cache->load("solve", params)) {
      payload = std::move(*hit);
      have = true;
      cache_status = "hit";
      if (payload.value("conclusive", false)) {
        // Never trust a stored witness blindly.
        const Family w = family_from_json(payload.at("witness"));
        if (!is_saturated(w, p, mode).saturated) {
          have = false;
          cache_status = "stale";
          std::cerr << "cache: stored witness no longer verifies; "
                       "recomputing\n";
        }
      }
    }
  }
  if (!have) {
    SolveOptions opts;
    opts.node_budget = budget;
    opts.seed_lower_bound = seed;
    opts.jobs = jobs;
    const SolveResult r = min_saturated(n, p, mode, opts);
    payload = solve_payload(r);
    if (cache) cache->store("solve", params, payload);
  }

  const bool conclusive = payload.value("conclusive", false);
  if (format == "json") {
    json out = payload;
    out["command"] = "solve";
    out["poset"] = poset;
    out["cache"] = cache_status;
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    csv_row(std::cout,
            {"n", "poset", "mode", "conclusive", "min_size", "interval_low",
             "interval_high", "start_size", "nodes_explored", "witness"});
    std::string witness;
    if (conclusive) witness = family_line(family_from_json(payload["witness"]));
    csv_row(std::cout,
            {std::to_string(n), poset, mode_str, conclusive ? "true" : "false",
             conclusive ? payload["min_size"].dump() : "",
             payload["interval_low"].dump(), payload["interval_high"].dump(),
             payload["start_size"].dump(), payload["nodes_explored"].dump(),
             witness});
  } else {
    std::cout << poset << " in B_" << n << " (" << mode_str << ")";
    if (cache_status == "hit") std::cout << " [cached]";
    std::cout << "\n";
    if (conclusive) {
      std::cout << "minimum saturated size: " << payload["min_size"] << "\n"
                << "witness: "
                << family_line(family_from_json(payload["witness"])) << "\n";
    } else {
      std::cout << "inconclusive within node budget " << budget
                << ": minimum lies in [" << payload["interval_low"] << ", "
                << payload["interval_high"] << "]\n";
    }
    std::cout << "nodes explored: " << payload["nodes_explored"]
              << ", elapsed: " << payload["elapsed_seconds"] << " s\n";
  }
  return conclusive ? 0 : 3;
}

// ---------- bounds ----------

int cmd_bounds(const std::string& poset, const std::string& n_str,
               const std::string& format) {
  const BigInt n(n_str);
  const BoundReport r = reference_bounds(poset, n);
  auto lo = r.best_lower();
  auto hi = r.best_upper();
  if (format == "json") {
    json entries = json::array();
    for (const BoundEntry& e : r.entries)
      entries.push_back({{"name", e.name},
                         {"kind", std::string(to_string(e.kind))},
                         {"value", e.value ? json(e.value->str()) : json()},
                         {"display", e.display},
                         {"condition", e.condition},
                         {"applicable", e.applicable}});
    json out = {{"command", "bounds"},
                {"target", r.target},
                {"n", r.n.str()},
                {"k", r.k ? json(r.k->str()) : json()},
                {"entries", entries},
                {"best_lower", lo ? json(lo->str()) : json()},
                {"best_upper", hi ? json(hi->str()) : json()}};
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    csv_row(std::cout,
            {"name", "kind", "value", "display", "condition", "applicable"});
    for (const BoundEntry& e : r.entries)
      csv_row(std::cout, {e.name, to_string(e.kind),
                          e.value ? e.value->str() : "", e.display,
                          e.condition, e.applicable ? "true" : "false"});
  } else {
    std::cout << "bounds for " << r.target << " at n = " << r.n.str() << "\n";
    for (const BoundEntry& e : r.entries) {
      std::cout << "  " << e.name << " (" << to_string(e.kind) << "): "
                << (e.value ? e.value->str() : e.display);
      if (!e.applicable) std::cout << "  [not applicable: " << e.condition << "]";
      std::cout << "\n";
    }
    std::cout << "bracket: [" << (lo ? lo->str() : "-") << ", "
              << (hi ? hi->str() : "-") << "]\n";
  }
  return 0;
}

// ---------- slopes / crossover ----------

int cmd_slopes(const std::string& k_str, const std::string& format) {
  const BigInt k(k_str);
  const SlopeComparison c = slope_compare(k);
  if (format == "json") {
    json out = {{"command", "slopes"},
                {"k", k.str()},
                {"slope_a",
                 {{"exact", rational_exact(c.slope_a)},
                  {"decimal", decimal_string(c.slope_a, 6)}}},
                {"slope_b",
                 {{"exact", rational_exact(c.slope_b)},
                  {"decimal", decimal_string(c.slope_b, 6)}}},
                {"winner", std::string(1, c.winner)}};
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    csv_row(std::cout, {"k", "slope_a", "slope_b", "winner"});
    csv_row(std::cout, {k.str(), decimal_string(c.slope_a, 6),
                        decimal_string(c.slope_b, 6), std::string(1, c.winner)});
  } else {
    std::cout << "k = " << k.str() << "\n"
              << "slope of k-driven bound:  " << rational_exact(c.slope_a)
              << " = " << decimal_string(c.slope_a, 6) << "\n"
              << "slope of level-sum bound: " << rational_exact(c.slope_b)
              << " = " << decimal_string(c.slope_b, 6) << "\n"
              << "larger: "
              << (c.winner == '=' ? std::string("equal")
                                  : std::string(1, c.winner))
              << "\n";
  }
  return 0;
}

int cmd_crossover(const std::string& k_max_str, bool scan,
                  const std::string& format) {
  const BigInt k_max(k_max_str);
  const auto r = scan ? crossover_scan(k_max) : crossover(k_max);
  if (format == "json") {
    json out = {{"command", "crossover"},
                {"k_max", k_max.str()},
                {"method", scan ? "scan" : "breakpoints"},
                {"crossover", r ? json(r->str()) : json()}};
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    csv_row(std::cout, {"k_max", "method", "crossover"});
    csv_row(std::cout,
            {k_max.str(), scan ? "scan" : "breakpoints", r ? r->str() : ""});
  } else {
    if (r)
      std::cout << "k-driven slope first wins at k = " << r->str() << "\n";
    else
      std::cout << "no crossover up to k_max = " << k_max.str() << "\n";
  }
  return 0;
}

// ---------- procedures ----------

Family strip_extremes(const Family& f) {
  const Mask full = full_mask(f.n);
  std::vector<Mask> rest;
  for (Mask m : f.members)
    if (m != 0 && m != full) rest.push_back(m);
  return Family(f.n, std::move(rest));
}

json gap_json(const Gap& g, int n) {
  return {{"chain", g.chain_index},
          {"x", bits(g.x, n)},
          {"y", bits(g.y, n)},
          {"size", g.size}};
}

json chains_json(const std::vector<std::vector<Mask>>& chains, int n) {
  json arr = json::array();
  for (const auto& c : chains) {
    json one = json::array();
    for (Mask m : c) one.push_back(bits(m, n));
    arr.push_back(std::move(one));
  }
  return arr;
}

int cmd_procedures(const std::string& family_path, const std::string& pipeline,
                   const std::string& anchor_str, const std::string& format) {
  if (format == "csv")
    throw std::invalid_argument("csv output is not available for procedures");
  const bool as_json = format == "json";
  const Family f = load_family_file(family_path);
  json out = {{"command", "procedures"}, {"pipeline", pipeline}, {"n", f.n}};

  if (pipeline == "dilworth") {
    const WidthResult w = width(f);
    const ChainPartition p = chain_partition(f);
    if (as_json) {
      json anti = json::array();
      for (Mask m : w.antichain) anti.push_back(bits(m, f.n));
      out["width"] = w.value;
      out["antichain"] = anti;
      out["chains"] = chains_json(p.chains, f.n);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "width: " << w.value << "\nantichain:";
      for (Mask m : w.antichain) std::cout << " " << bits(m, f.n);
      std::cout << "\nchains:\n";
      for (const auto& c : p.chains) {
        std::cout << " ";
        for (Mask m : c) std::cout << " " << bits(m, f.n);
        std::cout << "\n";
      }
    }
    return 0;
  }

  if (pipeline == "gaps" || pipeline == "widegap" || pipeline == "color") {
    const Family core = strip_extremes(f);
    const ChainPartition p = chain_partition(core);
    if (pipeline == "color") {
      const ColoredFamily col = greedy_color(f, p);
      const ColoringCheck cc = coloring_gap_check(f, col);
      if (as_json) {
        out["classes"] = chains_json(col.classes, f.n);
        json fails = json::array();
        for (const auto& x : cc.failures) {
          json one = {{"color", x.color}, {"kind", x.kind}};
          if (x.gap) one["gap"] = gap_json(*x.gap, f.n);
          fails.push_back(std::move(one));
        }
        out["failures"] = fails;
        out["pass"] = cc.pass;
        std::cout << out.dump(2) << "\n";
      } else {
        for (size_t j = 0; j < col.classes.size(); ++j) {
          std::cout << "class " << (j + 1) << ":";
          for (Mask m : col.classes[j]) std::cout << " " << bits(m, f.n);
          std::cout << "\n";
        }
        std::cout << "gap check: " << (cc.pass ? "pass" : "FAIL") << "\n";
        for (const auto& x : cc.failures)
          std::cout << "  colour " << x.color << ": " << x.kind << "\n";
      }
      return cc.pass ? 0 : 1;
    }
    auto [aug, gaps] = augment_and_gaps(p);
    if (pipeline == "gaps") {
      const GapFullness gf = gap_fullness_audit(f, aug);
      if (as_json) {
        json garr = json::array();
        for (const Gap& g : gaps) garr.push_back(gap_json(g, f.n));
        out["gaps"] = garr;
        out["pass"] = gf.pass;
        if (!gf.pass) {
          out["failed_gap"] = gap_json(*gf.failed_gap, f.n);
          out["missing"] = bits(*gf.missing, f.n);
        }
        std::cout << out.dump(2) << "\n";
      } else {
        for (const Gap& g : gaps)
          std::cout << "chain " << g.chain_index << ": " << bits(g.x, f.n)
                    << " .. " << bits(g.y, f.n) << " (size " << g.size
                    << ")\n";
        std::cout << "interiors inside family: "
                  << (gf.pass ? "pass" : "FAIL") << "\n";
        if (!gf.pass)
          std::cout << "  missing " << bits(*gf.missing, f.n) << " in gap "
                    << bits(gf.failed_gap->x, f.n) << " .. "
                    << bits(gf.failed_gap->y, f.n) << "\n";
      }
      return gf.pass ? 0 : 1;
    }
    // widegap
    auto [after, trace] = eliminate_wide_gaps(aug);
    const MaxGapCheck mg = max_gap_bound_check(after);
    if (as_json) {
      json moves = json::array();
      for (const WideGapMove& m : trace.moves)
        moves.push_back({{"gap", gap_json(m.gap, f.n)},
                         {"donor_chain", m.donor_chain},
                         {"moved", bits(m.moved, f.n)},
                         {"measure_size_after", m.measure_size_after},
                         {"measure_count_after", m.measure_count_after}});
      out["initial_measure_size"] = trace.initial_measure_size;
      out["initial_measure_count"] = trace.initial_measure_count;
      out["moves"] = moves;
      out["chains_after"] = chains_json(after.chains, f.n);
      out["max_gap_bound"] = mg.pass;
      if (mg.offender) out["offender"] = gap_json(*mg.offender, f.n);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << format_trace(trace);
      std::cout << "max-gap bound: " << (mg.pass ? "pass" : "FAIL") << "\n";
    }
    return mg.pass ? 0 : 1;
  }

  if (pipeline == "witness" || pipeline == "digraph" || pipeline == "audit") {
    bool ok = true;
    json parts = json::object();
    std::ostringstream text;
    if (pipeline == "witness" || pipeline == "audit") {
      std::vector<Mask> anchors;
      if (!anchor_str.empty())
        anchors.push_back(parse_set(anchor_str, f.n));
      else
        anchors = f.members;
      json tables = json::array();
      for (Mask anchor : anchors) {
        const WitnessTable t = diamond_witness_table(f, anchor);
        ok = ok && t.complete;
        json pairs = json::array();
        for (int e = 1; e <= f.n; ++e) {
          const bool in = (anchor >> (e - 1)) & 1;
          const auto& slot = in ? t.inside[e - 1] : t.outside[e - 1];
          json one = {{"element", e}, {"side", in ? "inside" : "outside"}};
          if (slot) {
            one["f"] = bits(slot->fi, f.n);
            one["g"] = bits(slot->gi, f.n);
          } else {
            one["f"] = json();
            one["g"] = json();
          }
          pairs.push_back(std::move(one));
        }
        tables.push_back({{"anchor", bits(anchor, f.n)},
                          {"complete", t.complete},
                          {"pairs", pairs}});
        text << "anchor " << bits(anchor, f.n) << ": "
             << (t.complete ? "complete" : "INCOMPLETE") << "\n";
        for (int e = 1; e <= f.n; ++e) {
          const bool in = (anchor >> (e - 1)) & 1;
          const auto& slot = in ? t.inside[e - 1] : t.outside[e - 1];
          text << "  element " << e << (in ? " (inside): " : " (outside): ");
          if (slot)
            text << "F=" << bits(slot->fi, f.n) << " G=" << bits(slot->gi, f.n)
                 << "\n";
          else
            text << "missing\n";
        }
      }
      parts["witness_tables"] = tables;
    }
    if (pipeline == "digraph" || pipeline == "audit") {
      const DigraphAudit d = diamond_digraph_audit(f);
      ok = ok && d.pass && d.arc_count >= f.n;
      json covered = json::array();
      for (int e = 1; e <= f.n; ++e)
        covered.push_back(
            json{{"element", e},
                 {"covered", bool(d.element_covered[e - 1])}});
      parts["digraph"] = {{"arc_count", d.arc_count},
                          {"pair_budget", d.pair_budget},
                          {"elements", covered},
                          {"pass", d.pass}};
      text << "digraph: arcs=" << d.arc_count << " budget=" << d.pair_budget
           << " " << (d.pass ? "pass" : "FAIL") << "\n";
    }
    if (pipeline == "audit") {
      const ExtremalAudit x = extremal_element_audit(f);
      ok = ok && x.pass;
      json items = json::array();
      for (const auto& it : x.items)
        items.push_back({{"check", it.check},
                         {"subject", bits(it.subject, f.n)},
                         {"required", it.required},
                         {"pass", it.pass}});
      parts["extremal"] = {{"items", items}, {"pass", x.pass}};
      text << "extremal audit: " << (x.pass ? "pass" : "FAIL") << "\n";
    }
    if (as_json) {
      out["parts"] = parts;
      out["pass"] = ok;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << text.str() << "overall: " << (ok ? "pass" : "FAIL")
                << "\n";
    }
    return ok ? 0 : 1;
  }

  throw std::invalid_argument("unknown pipeline: " + pipeline);
}

// ---------- report ----------

int cmd_report(const std::string& out_path, const std::string& format) {
  const auto sections = selfcheck::run_all();
  bool all = true;
  for (const auto& s : sections) all = all && s.pass;
  const std::string markdown = selfcheck::render_markdown(sections);

  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::trunc);
    file << markdown;
    if (!file)
      throw std::runtime_error("cannot write report to " + out_path);
  }

  if (format == "json") {
    json secs = json::array();
    for (const auto& s : sections) {
      json rows = json::array();
      for (const auto& r : s.rows)
        rows.push_back({{"check", r.label},
                        {"expected", r.expected},
                        {"computed", r.computed},
                        {"pass", r.pass}});
      secs.push_back({{"index", s.index},
                      {"title", s.title},
                      {"pass", s.pass},
                      {"elapsed_seconds", s.elapsed_seconds},
                      {"budget_seconds", s.time_limit_seconds},
                      {"rows", rows}});
    }
    json out = {{"command", "report"}, {"pass", all}, {"sections", secs}};
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    csv_row(std::cout, {"section", "check", "expected", "computed", "status"});
    for (const auto& s : sections)
      for (const auto& r : s.rows)
        csv_row(std::cout, {std::to_string(s.index), r.label, r.expected,
                            r.computed, r.pass ? "pass" : "FAIL"});
  } else if (!out_path.empty()) {
    std::cout << "report written to " << out_path << " — overall "
              << (all ? "PASS" : "FAIL") << "\n";
  } else {
    std::cout << markdown;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum saturated families in the Boolean lattice"};
  app.set_version_flag("--version", std::string("satlat ") + kVersion);
  app.require_subcommand(1);
  const auto format_check = CLI::IsMember({"human", "json", "csv"});
  const auto mode_check = CLI::IsMember({"induced", "weak"});

  std::string v_family, v_poset, v_mode = "induced", v_format = "human";
  auto* verify = app.add_subcommand("verify", "check a family file for saturation");
  verify->add_option("--family", v_family, "family JSON file")->required();
  verify->add_option("--poset", v_poset, "target poset descriptor")->required();
  verify->add_option("--mode", v_mode)->check(mode_check);
  verify->add_option("--format", v_format)->check(format_check);

  int s_n = 0;
  std::string s_poset, s_mode = "induced", s_format = "human";
  std::uint64_t s_budget = 0;
  int s_jobs = 1;
  bool s_seed = false, s_no_cache = false;
  auto* solve = app.add_subcommand("solve", "exact minimum saturated size");
  solve->add_option("--n", s_n, "ground set size")->required();
  solve->add_option("--poset", s_poset, "target poset descriptor")->required();
  solve->add_option("--mode", s_mode)->check(mode_check);
  solve->add_option("--budget", s_budget, "node budget (0 = unbounded)");
  solve->add_option("--jobs", s_jobs, "worker threads");
  solve->add_flag("--seed", s_seed, "start at the best applicable lower bound");
  solve->add_flag("--no-cache", s_no_cache, "skip the result cache");
  solve->add_option("--format", s_format)->check(format_check);

  std::string b_poset, b_n, b_format = "human";
  auto* bounds = app.add_subcommand("bounds", "closed-form bound report");
  bounds->add_option("--poset", b_poset, "target poset descriptor")->required();
  bounds->add_option("--n", b_n, "ground set size (any magnitude)")->required();
  bounds->add_option("--format", b_format)->check(format_check);

  std::string sl_k, sl_format = "human";
  auto* slopes = app.add_subcommand("slopes", "per-n slopes of the two antichain bounds");
  slopes->add_option("--k", sl_k, "antichain bound parameter k")->required();
  slopes->add_option("--format", sl_format)->check(format_check);

  std::string c_kmax = "18446744073709551616";  // 2^64
  bool c_scan = false;
  std::string c_format = "human";
  auto* cross = app.add_subcommand("crossover", "least k where the k-driven slope wins");
  cross->add_option("--k-max", c_kmax, "search ceiling (default 2^64)");
  cross->add_flag("--scan", c_scan, "term-by-term oracle (k-max <= 10^6)");
  cross->add_option("--format", c_format)->check(format_check);

  std::string p_family, p_pipeline, p_anchor, p_format = "human";
  auto* procs = app.add_subcommand("procedures", "structural audits and traces");
  procs->add_option("--family", p_family, "family JSON file")->required();
  procs
      ->add_option("--pipeline", p_pipeline,
                   "dilworth | gaps | widegap | color | witness | digraph | audit")
      ->required()
      ->check(CLI::IsMember({"dilworth", "gaps", "widegap", "color", "witness",
                             "digraph", "audit"}));
  procs->add_option("--anchor", p_anchor,
                    "anchor member for the witness pipeline (bitstring or mask)");
  procs->add_option("--format", p_format)->check(format_check);

  std::string r_out, r_format = "human";
  auto* report = app.add_subcommand("report", "recompute every pinned number");
  report->add_option("--out", r_out, "also write the markdown document here");
  report->add_option("--format", r_format)->check(format_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(v_family, v_poset, v_mode, v_format);
    if (solve->parsed())
      return cmd_solve(s_n, s_poset, s_mode, s_budget, s_jobs, s_seed,
                       s_no_cache, s_format);
    if (bounds->parsed()) return cmd_bounds(b_poset, b_n, b_format);
    if (slopes->parsed()) return cmd_slopes(sl_k, sl_format);
    if (cross->parsed()) return cmd_crossover(c_kmax, c_scan, c_format);
    if (procs->parsed())
      return cmd_procedures(p_family, p_pipeline, p_anchor, p_format);
    if (report->parsed()) return cmd_report(r_out, r_format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

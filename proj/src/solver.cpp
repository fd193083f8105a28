#include "prodlab/solver.hpp"

#include "prodlab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace prodlab {

namespace {

std::vector<Edge> search_order(const Graph& g) {
  std::vector<Edge> order = g.edges();
  std::stable_sort(order.begin(), order.end(), [&](const Edge& a, const Edge& b) {
    const auto da = g.degree(a.u) + g.degree(a.v);
    const auto db = g.degree(b.u) + g.degree(b.v);
    if (da != db) return da > db;
    return a < b;
  });
  return order;
}

void apply(Rational& colour, const Rational& x, Mode mode) {
  if (mode == Mode::Product)
    colour *= x;
  else
    colour += x;
}

class Backtracker {
 public:
  Backtracker(const Graph& g, const ListAssignment& la, Mode mode, std::uint64_t cap)
      : g_(g), mode_(mode), cap_(cap), order_(search_order(g)) {
    if (!la.covers(g)) throw PreconditionError("list assignment does not cover every edge");
    for (const Edge& e : order_) lists_.push_back(&la.at(e));
    colour_.assign(g.id_bound(), mode == Mode::Product ? Rational(1) : Rational(0));
    remaining_.assign(g.id_bound(), 0);
    for (VertexId v : g.vertices()) remaining_[v] = g.degree(v);
    chosen_.assign(order_.size(), 0);
  }

  /// Visits proper labellings in search order; `visit` returns false to stop.
  template <typename Visit>
  void run(Visit&& visit) {
    stop_ = false;
    descend(0, visit);
  }

  Labelling current() const {
    Labelling lab;
    for (std::size_t i = 0; i < order_.size(); ++i) lab.set(order_[i], (*lists_[i])[chosen_[i]]);
    return lab;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool completes_cleanly(VertexId v) const {
    if (remaining_[v] != 0) return true;
    for (VertexId w : g_.neighbours(v))
      if (remaining_[w] == 0 && colour_[w] == colour_[v]) return false;
    return true;
  }

  template <typename Visit>
  void descend(std::size_t i, Visit& visit) {
    if (i == order_.size()) {
      if (!visit(*this)) stop_ = true;
      return;
    }
    const Edge& e = order_[i];
    const auto& list = *lists_[i];
    for (std::size_t j = 0; j < list.size() && !stop_; ++j) {
      if (++nodes_ > cap_) throw RefusalError("search exceeded node cap " + std::to_string(cap_));
      const Rational saved_u = colour_[e.u];
      const Rational saved_v = colour_[e.v];
      apply(colour_[e.u], list[j], mode_);
      apply(colour_[e.v], list[j], mode_);
      --remaining_[e.u];
      --remaining_[e.v];
      chosen_[i] = j;
      if (completes_cleanly(e.u) && completes_cleanly(e.v)) descend(i + 1, visit);
      ++remaining_[e.u];
      ++remaining_[e.v];
      colour_[e.u] = saved_u;
      colour_[e.v] = saved_v;
    }
  }

  const Graph& g_;
  Mode mode_;
  std::uint64_t cap_;
  std::vector<Edge> order_;
  std::vector<const std::vector<Rational>*> lists_;
  std::vector<Rational> colour_;
  std::vector<std::size_t> remaining_;
  std::vector<std::size_t> chosen_;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
};

}  // namespace

SolveOutcome solve(const Graph& g, const ListAssignment& la, Mode mode, std::uint64_t node_cap) {
  Backtracker bt(g, la, mode, node_cap);
  SolveOutcome out;
  bt.run([&](const Backtracker& b) {
    out.labelling = b.current();
    return false;
  });
  out.nodes_explored = bt.nodes();
  if (out.labelling) {
    if (!check_proper(g, *out.labelling, mode).empty() || first_list_violation(g, *out.labelling, la))
      throw InvariantViolation("solver returned an improper labelling");
  }
  return out;
}

std::uint64_t count_solutions(const Graph& g, const ListAssignment& la, Mode mode, std::uint64_t node_cap) {
  Backtracker bt(g, la, mode, node_cap);
  std::uint64_t count = 0;
  bt.run([&](const Backtracker&) {
    ++count;
    return true;
  });
  return count;
}

std::uint64_t count_proper(const Graph& g, const ListAssignment& la, Mode mode, std::uint64_t cap) {
  if (!la.covers(g)) throw PreconditionError("list assignment does not cover every edge");
  const auto& edges = g.edges();
  std::uint64_t total = 1;
  for (const Edge& e : edges) {
    const std::uint64_t s = la.at(e).size();
    if (total > cap / s) throw RefusalError("enumeration exceeds cap " + std::to_string(cap));
    total *= s;
  }
  std::vector<std::size_t> digit(edges.size(), 0);
  std::uint64_t count = 0;
  for (std::uint64_t n = 0; n < total; ++n) {
    Labelling lab;
    for (std::size_t i = 0; i < edges.size(); ++i) lab.set(edges[i], la.at(edges[i])[digit[i]]);
    if (check_proper(g, lab, mode).empty()) ++count;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (++digit[i] < la.at(edges[i]).size()) break;
      digit[i] = 0;
    }
  }
  return count;
}

namespace {

struct RowHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t x : v) h = (h ^ x) * 1099511628211ull;
    return std::size_t(h);
  }
};

/// The condition on edge uv with uv's own label cancelled: the labels on the
/// other edges at u must combine differently from those at v. This is exact
/// for sums, and for products once 0 is excluded (a 0 label always conflicts).
struct EdgeCondition {
  std::vector<std::size_t> at_u;
  std::vector<std::size_t> at_v;
};

/// One component of the "shares an edge condition" relation on edges, in the
/// order its edges are assigned.
struct Block {
  std::vector<std::size_t> order;
  std::vector<std::size_t> conditions;
};

/// Distinct frontier rows seen before one step, with their successor table.
struct Layer {
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, RowHash> ids;
  std::vector<std::vector<std::uint32_t>> rows;
  /// next[row * universe + label]: successor row id in the following layer.
  std::vector<std::uint32_t> next;
};

constexpr std::uint32_t kUnknown = 0xffffffffu;
constexpr std::uint32_t kDead = 0xfffffffeu;

/// Searches list choices for one block. Rows hold universe indices of the
/// labels on edges still needed by an unfinished condition.
class BlockSearch {
 public:
  BlockSearch(const Block& block, const std::vector<EdgeCondition>& conditions, const std::vector<Rational>& universe,
              const std::vector<std::vector<std::size_t>>& subsets, Mode mode, std::uint64_t cap,
              std::uint64_t& work)
      : block_(block),
        conditions_(conditions),
        universe_(universe),
        subsets_(subsets),
        mode_(mode),
        cap_(cap),
        work_(work) {
    const std::size_t n = block.order.size();
    std::unordered_map<std::size_t, std::size_t> position;
    for (std::size_t i = 0; i < n; ++i) position[block.order[i]] = i;
    std::vector<std::size_t> last_use(n, 0);
    completes_.resize(n);
    for (std::size_t c : block.conditions) {
      std::size_t last = 0;
      for (const auto* side : {&conditions[c].at_u, &conditions[c].at_v})
        for (std::size_t e : *side) last = std::max(last, position.at(e));
      completes_[last].push_back(c);
      for (const auto* side : {&conditions[c].at_u, &conditions[c].at_v})
        for (std::size_t e : *side) last_use[position.at(e)] = std::max(last_use[position.at(e)], last);
    }
    active_.resize(n + 1);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (last_use[j] >= i) active_[i].push_back(j);
    layers_.resize(n + 1);
    refuted_.resize(n + 1);
    chosen_.assign(n, 0);
    position_ = std::move(position);
  }

  /// Subset indices per block position for an assignment with no proper
  /// labelling, if one exists.
  std::optional<std::vector<std::size_t>> run() {
    intern(0, {});
    if (!search(0, {0})) return std::nullopt;
    return chosen_;
  }

 private:
  std::uint32_t intern(std::size_t layer, std::vector<std::uint32_t> row) {
    Layer& l = layers_[layer];
    auto [it, inserted] = l.ids.emplace(row, std::uint32_t(l.rows.size()));
    if (inserted) {
      l.rows.push_back(std::move(row));
      l.next.resize(l.next.size() + universe_.size(), kUnknown);
    }
    return it->second;
  }

  Rational side_value(const std::vector<std::size_t>& side) const {
    Rational acc = mode_ == Mode::Product ? Rational(1) : Rational(0);
    for (std::size_t e : side) apply(acc, universe_[label_of_[position_.at(e)]], mode_);
    return acc;
  }

  std::uint32_t successor(std::size_t i, std::uint32_t r, std::size_t x) {
    const std::size_t slot = std::size_t(r) * universe_.size() + x;
    if (layers_[i].next[slot] != kUnknown) return layers_[i].next[slot];
    std::uint32_t out = kDead;
    if (!(mode_ == Mode::Product && universe_[x] == 0)) {
      const auto& row = layers_[i].rows[r];
      label_of_.assign(block_.order.size(), 0);
      for (std::size_t c = 0; c < active_[i].size(); ++c) label_of_[active_[i][c]] = row[c];
      label_of_[i] = std::uint32_t(x);
      bool ok = true;
      for (std::size_t c : completes_[i])
        if (side_value(conditions_[c].at_u) == side_value(conditions_[c].at_v)) {
          ok = false;
          break;
        }
      if (ok) {
        std::vector<std::uint32_t> next_row;
        next_row.reserve(active_[i + 1].size());
        for (std::size_t j : active_[i + 1]) next_row.push_back(label_of_[j]);
        out = intern(i + 1, std::move(next_row));
      }
    }
    layers_[i].next[slot] = out;
    return out;
  }

  bool search(std::size_t i, const std::vector<std::uint32_t>& s) {
    if (s.empty()) {
      for (std::size_t j = i; j < chosen_.size(); ++j) chosen_[j] = 0;
      return true;
    }
    if (i == block_.order.size()) return false;
    if (refuted_[i].contains(s)) return false;
    work_ += s.size() * universe_.size();
    if (work_ > cap_) throw RefusalError("list search exceeded work cap " + std::to_string(cap_));
    std::vector<std::vector<std::uint32_t>> image(universe_.size());
    for (std::size_t x = 0; x < universe_.size(); ++x) {
      for (std::uint32_t r : s)
        if (const std::uint32_t n = successor(i, r, x); n != kDead) image[x].push_back(n);
      std::sort(image[x].begin(), image[x].end());
      image[x].erase(std::unique(image[x].begin(), image[x].end()), image[x].end());
    }
    std::vector<std::vector<std::uint32_t>> tried;
    for (std::size_t sub = 0; sub < subsets_.size(); ++sub) {
      std::vector<std::uint32_t> next;
      for (std::size_t x : subsets_[sub]) {
        std::vector<std::uint32_t> merged;
        std::set_union(next.begin(), next.end(), image[x].begin(), image[x].end(), std::back_inserter(merged));
        next = std::move(merged);
      }
      // A superset of a refuted sibling is refuted too.
      bool dominated = false;
      for (const auto& old : tried)
        if (std::includes(next.begin(), next.end(), old.begin(), old.end())) {
          dominated = true;
          break;
        }
      if (dominated) continue;
      chosen_[i] = sub;
      if (search(i + 1, next)) return true;
      tried.push_back(std::move(next));
    }
    refuted_[i].insert(s);
    return false;
  }

  const Block& block_;
  const std::vector<EdgeCondition>& conditions_;
  const std::vector<Rational>& universe_;
  const std::vector<std::vector<std::size_t>>& subsets_;
  Mode mode_;
  std::uint64_t cap_;
  std::uint64_t& work_;
  std::unordered_map<std::size_t, std::size_t> position_;
  std::vector<std::vector<std::size_t>> completes_;
  std::vector<std::vector<std::size_t>> active_;
  std::vector<std::uint32_t> label_of_;
  std::vector<Layer> layers_;
  std::vector<std::unordered_set<std::vector<std::uint32_t>, RowHash>> refuted_;
  std::vector<std::size_t> chosen_;
};

std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    out.push_back(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

/// Splits the edges into blocks and orders each block greedily so that every
/// next edge shares as many conditions as possible with the placed ones.
std::vector<Block> make_blocks(const Graph& g, const std::vector<EdgeCondition>& conditions) {
  const std::size_t m = g.edge_count();
  std::vector<std::vector<std::size_t>> uses(m);
  for (std::size_t c = 0; c < conditions.size(); ++c)
    for (const auto* side : {&conditions[c].at_u, &conditions[c].at_v})
      for (std::size_t e : *side) uses[e].push_back(c);
  std::vector<char> placed(m, 0);
  std::vector<Block> blocks;
  for (std::size_t seed = 0; seed < m; ++seed) {
    if (placed[seed]) continue;
    Block b;
    std::vector<std::size_t> score(m, 0);
    std::vector<char> in_block(m, 0), cond_seen(conditions.size(), 0);
    std::vector<std::size_t> candidates{seed};
    in_block[seed] = 1;
    while (!candidates.empty()) {
      auto best = std::max_element(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t c) {
        return score[a] != score[c] ? score[a] < score[c] : a > c;
      });
      const std::size_t e = *best;
      candidates.erase(best);
      placed[e] = 1;
      b.order.push_back(e);
      for (std::size_t c : uses[e]) {
        if (!cond_seen[c]) {
          cond_seen[c] = 1;
          b.conditions.push_back(c);
        }
        for (const auto* side : {&conditions[c].at_u, &conditions[c].at_v})
          for (std::size_t f : *side) {
            if (placed[f]) continue;
            ++score[f];
            if (!in_block[f]) {
              in_block[f] = 1;
              candidates.push_back(f);
            }
          }
      }
    }
    blocks.push_back(std::move(b));
  }
  return blocks;
}

}  // namespace

WorstListVerdict worst_list_verdict(const Graph& g, std::vector<Rational> universe, std::size_t k, Mode mode,
                                    std::uint64_t cap) {
  normalize_labels(universe);
  if (k == 0 || k > universe.size())
    throw PreconditionError("list size k must be between 1 and the universe size");
  WorstListVerdict out;
  if (g.edge_count() == 0) return out;
  const auto subsets = k_subsets(universe.size(), k);
  const auto& edges = g.edges();

  std::vector<EdgeCondition> conditions(edges.size());
  bool always_conflicts = false;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t e : g.incident_edges(edges[i].u))
      if (e != i) conditions[i].at_u.push_back(e);
    for (std::size_t e : g.incident_edges(edges[i].v))
      if (e != i) conditions[i].at_v.push_back(e);
    if (conditions[i].at_u.empty() && conditions[i].at_v.empty()) always_conflicts = true;
  }

  std::vector<std::size_t> choice(edges.size(), 0);
  bool found = always_conflicts;
  if (!found) {
    for (const Block& b : make_blocks(g, conditions)) {
      BlockSearch search(b, conditions, universe, subsets, mode, cap, out.work);
      if (auto picked = search.run()) {
        for (std::size_t i = 0; i < b.order.size(); ++i) choice[b.order[i]] = (*picked)[i];
        found = true;
        break;
      }
    }
  }
  if (!found) return out;
  ListAssignment witness;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::vector<Rational> list;
    for (std::size_t j : subsets[choice[i]]) list.push_back(universe[j]);
    witness.set(edges[i], std::move(list));
  }
  if (solve(g, witness, mode).found()) throw InvariantViolation("worst-list witness admits a proper labelling");
  out.witness = std::move(witness);
  return out;
}

}  // namespace prodlab

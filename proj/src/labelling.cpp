#include "prodlab/labelling.hpp"

#include "prodlab/errors.hpp"

#include <algorithm>
#include <string>

namespace prodlab {

std::string_view mode_name(Mode mode) { return mode == Mode::Sum ? "sum" : "product"; }

Mode parse_mode(std::string_view text) {
  if (text == "sum") return Mode::Sum;
  if (text == "product") return Mode::Product;
  throw ParseError("unknown mode '" + std::string(text) + "' (expected sum or product)");
}

ListAssignment ListAssignment::uniform(const Graph& g, std::vector<Rational> labels) {
  ListAssignment la;
  for (const Edge& e : g.edges()) la.set(e, labels);
  return la;
}

void ListAssignment::set(const Edge& e, std::vector<Rational> labels) {
  normalize_labels(labels);
  if (labels.empty()) throw PreconditionError("empty list on edge " + edge_key(e));
  lists_[e] = std::move(labels);
}

const std::vector<Rational>& ListAssignment::at(const Edge& e) const {
  const auto it = lists_.find(e);
  if (it == lists_.end()) throw PreconditionError("no list for edge " + edge_key(e));
  return it->second;
}

std::optional<std::size_t> ListAssignment::uniform_size() const {
  if (lists_.empty()) return std::nullopt;
  const std::size_t k = lists_.begin()->second.size();
  for (const auto& [e, list] : lists_)
    if (list.size() != k) return std::nullopt;
  return k;
}

std::size_t ListAssignment::min_size(const Graph& g) const {
  if (g.edge_count() == 0) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const Edge& e : g.edges()) best = std::min(best, at(e).size());
  return best;
}

bool ListAssignment::covers(const Graph& g) const {
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return contains(e); });
}

bool ListAssignment::zero_free() const {
  for (const auto& [e, list] : lists_)
    for (const Rational& x : list)
      if (x == 0) return false;
  return true;
}

const Rational& Labelling::at(const Edge& e) const {
  const auto it = labels_.find(e);
  if (it == labels_.end()) throw PreconditionError("edge " + edge_key(e) + " is not labelled");
  return it->second;
}

bool Labelling::total_on(const Graph& g) const {
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return contains(e); });
}

void Labelling::merge(const Labelling& other) {
  for (const auto& [e, x] : other.labels_) labels_[e] = x;
}

Labelling Labelling::restricted_to(const Graph& g) const {
  Labelling out;
  for (const Edge& e : g.edges())
    if (auto it = labels_.find(e); it != labels_.end()) out.set(e, it->second);
  return out;
}

Rational vertex_product(const Graph& g, const Labelling& lab, VertexId v) {
  Rational p = 1;
  for (VertexId w : g.neighbours(v)) p *= lab.at(Edge::of(v, w));
  return p;
}

Rational vertex_sum(const Graph& g, const Labelling& lab, VertexId v) {
  Rational s = 0;
  for (VertexId w : g.neighbours(v)) s += lab.at(Edge::of(v, w));
  return s;
}

Rational vertex_colour(const Graph& g, const Labelling& lab, VertexId v, Mode mode) {
  return mode == Mode::Product ? vertex_product(g, lab, v) : vertex_sum(g, lab, v);
}

std::vector<Edge> check_proper(const Graph& g, const Labelling& lab, Mode mode) {
  if (!lab.total_on(g)) throw PreconditionError("labelling is not total on the graph");
  std::vector<Rational> colour(g.id_bound());
  for (VertexId v : g.vertices()) colour[v] = vertex_colour(g, lab, v, mode);
  std::vector<Edge> conflicts;
  for (const Edge& e : g.edges())
    if (colour[e.u] == colour[e.v]) conflicts.push_back(e);
  return conflicts;
}

std::optional<Edge> first_list_violation(const Graph& g, const Labelling& lab, const ListAssignment& la) {
  for (const Edge& e : g.edges()) {
    if (!lab.contains(e) || !la.contains(e)) return e;
    const auto& list = la.at(e);
    if (!std::binary_search(list.begin(), list.end(), lab.at(e), label_less)) return e;
  }
  return std::nullopt;
}

ListAssignment strip_zero(const ListAssignment& la) {
  ListAssignment out;
  for (const auto& [e, list] : la.lists()) {
    std::vector<Rational> kept;
    for (const Rational& x : list)
      if (x != 0) kept.push_back(x);
    if (kept.empty()) throw PreconditionError("list on edge " + edge_key(e) + " is {0}");
    out.set(e, std::move(kept));
  }
  return out;
}

}  // namespace prodlab

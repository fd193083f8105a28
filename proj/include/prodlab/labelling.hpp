#pragma once

#include "prodlab/graph.hpp"
#include "prodlab/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace prodlab {

enum class Mode { Sum, Product };

std::string_view mode_name(Mode mode);
/// Accepts "sum" or "product".
Mode parse_mode(std::string_view text);

/// Per-edge finite label sets. Each list is kept sorted in label order
/// without duplicates, so "smallest label" is always `at(e).front()`.
class ListAssignment {
 public:
  ListAssignment() = default;

  /// Same list on every edge of `g`.
  static ListAssignment uniform(const Graph& g, std::vector<Rational> labels);

  /// Throws PreconditionError on an empty list.
  void set(const Edge& e, std::vector<Rational> labels);
  const std::vector<Rational>& at(const Edge& e) const;
  bool contains(const Edge& e) const { return lists_.contains(e); }

  const std::map<Edge, std::vector<Rational>>& lists() const { return lists_; }
  std::size_t size() const { return lists_.size(); }

  /// The common list size, nullopt when sizes differ or there are no lists.
  std::optional<std::size_t> uniform_size() const;
  /// Smallest list size over the edges of `g` (0 when g has no edges).
  std::size_t min_size(const Graph& g) const;
  bool covers(const Graph& g) const;
  /// No list contains 0.
  bool zero_free() const;

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  std::map<Edge, std::vector<Rational>> lists_;
};

/// Edge -> label map. Built incrementally by the algorithms; `total_on`
/// reports whether it covers a graph.
class Labelling {
 public:
  void set(const Edge& e, Rational label) { labels_[e] = std::move(label); }
  const Rational& at(const Edge& e) const;
  bool contains(const Edge& e) const { return labels_.contains(e); }
  void erase(const Edge& e) { labels_.erase(e); }
  std::size_t size() const { return labels_.size(); }
  const std::map<Edge, Rational>& labels() const { return labels_; }

  bool total_on(const Graph& g) const;
  /// Copies every label of `other` (overwriting on shared edges).
  void merge(const Labelling& other);
  /// Labels of the edges of `g` only.
  Labelling restricted_to(const Graph& g) const;

  friend bool operator==(const Labelling&, const Labelling&) = default;

 private:
  std::map<Edge, Rational> labels_;
};

/// Product of labels on edges at v; 1 for an isolated vertex.
Rational vertex_product(const Graph& g, const Labelling& lab, VertexId v);
/// Sum of labels on edges at v; 0 for an isolated vertex.
Rational vertex_sum(const Graph& g, const Labelling& lab, VertexId v);
Rational vertex_colour(const Graph& g, const Labelling& lab, VertexId v, Mode mode);

/// Edges whose endpoints receive equal colours; empty iff `lab` is proper.
/// Throws PreconditionError when `lab` is not total on `g`.
std::vector<Edge> check_proper(const Graph& g, const Labelling& lab, Mode mode);

/// Every edge of `g` is labelled from its list. Returns the first offending
/// edge, if any.
std::optional<Edge> first_list_violation(const Graph& g, const Labelling& lab, const ListAssignment& la);

/// Removes 0 from every list.
ListAssignment strip_zero(const ListAssignment& la);

}  // namespace prodlab

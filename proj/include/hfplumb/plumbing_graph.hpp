#pragma once

#include "hfplumb/exact_linalg.hpp"
#include "hfplumb/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hfplumb {

/// A weighted plumbing tree. Vertex order is fixed at construction and
/// defines the coordinates of the intersection form.
class PlumbingGraph {
 public:
  using Vertex = std::pair<std::string, long long>;  // (label, weight)

  // Throws InputError on duplicate labels, dangling or duplicate edges,
  // self-loops, or an empty vertex list.
  PlumbingGraph(std::vector<Vertex> vertices,
                const std::vector<std::pair<std::string, std::string>>& edges);

  int size() const { return static_cast<int>(weights_.size()); }
  const std::string& label(int v) const { return labels_[v]; }
  long long weight(int v) const { return weights_[v]; }
  const std::vector<long long>& weights() const { return weights_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int index_of(const std::string& label) const;  // -1 if absent

 private:
  std::vector<std::string> labels_;
  std::vector<long long> weights_;
  std::vector<std::pair<int, int>> edges_;  // i < j
  std::vector<std::vector<int>> adj_;
};

struct IntersectionForm {
  std::vector<std::vector<long long>> q;  // Qii = m(vi), Qij = 1 iff edge
  BigInt det;

  long long at(int i, int j) const { return q[i][j]; }
  int size() const { return static_cast<int>(q.size()); }
  IntMatrix as_big() const;
};

IntersectionForm intersection_form(const PlumbingGraph& g);

struct ValidationReport {
  bool is_tree = false;
  bool is_negative_definite = false;
  BigInt determinant;
  std::vector<std::string> bad_vertices;  // m(v) > -degree(v)
  bool algorithm_applicable = false;
};

ValidationReport validate(const PlumbingGraph& g);

// Star-shaped negative-definite plumbing bounding the Brieskorn sphere
// Sigma(p,q,r). Central vertex first, then each arm from the center out.
// Throws InputError unless p,q,r >= 2 are pairwise coprime.
PlumbingGraph brieskorn_graph(long long p, long long q, long long r);

}  // namespace hfplumb

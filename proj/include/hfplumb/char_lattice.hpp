#pragma once

#include "hfplumb/plumbing_graph.hpp"
#include "hfplumb/rational.hpp"

#include <cstdint>
#include <vector>

namespace hfplumb {

// A characteristic covector in dual coordinates, xi[i] = <K, [v_i]>.
using CharVec = std::vector<long long>;

constexpr std::size_t kDefaultBoxCap = std::size_t{1} << 20;

/// Immutable per-graph context: the intersection form, its validation
/// report and the cached exact inverse used for squares and gradings.
class LatticeContext {
 public:
  explicit LatticeContext(PlumbingGraph graph);

  const PlumbingGraph& graph() const { return graph_; }
  const IntersectionForm& form() const { return form_; }
  const ValidationReport& report() const { return report_; }
  int size() const { return graph_.size(); }
  bool unimodular() const { return unimodular_; }

  // Parity test xi_i == m(v_i) (mod 2) at every vertex.
  bool is_characteristic(const CharVec& xi) const;

  // All characteristic vectors with m(v)+2 <= xi_v <= -m(v), in
  // lexicographic order. Count is the product of |m(v)|.
  std::vector<CharVec> basic_box(std::size_t cap = kDefaultBoxCap) const;
  std::size_t box_size() const;  // product of |m(v)| (0 if any weight is 0)

  // xi' = xi + 2 Q e_v.
  CharVec add_2pd(const CharVec& xi, int v) const;

  // K.K = xi^T Q^{-1} xi, exact.
  Rational square(const CharVec& xi) const;

  // The unique x with Q x = xi.
  std::vector<Rational> dual_to_primal(const CharVec& xi) const;

  // Grading of the generator detected by U^m (x) K: 2m - (K.K + |G|)/4.
  Rational hf_grading(const CharVec& xi, long long m) const;

 private:
  void require_length(const CharVec& xi) const;

  PlumbingGraph graph_;
  IntersectionForm form_;
  ValidationReport report_;
  bool unimodular_ = false;
  bool invertible_ = false;
  RatMatrix inverse_;                               // exact Q^{-1}
  std::vector<std::vector<long long>> int_inverse_; // when |det| = 1
};

}  // namespace hfplumb

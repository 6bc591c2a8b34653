#pragma once

#include "hfplumb/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hfplumb {

/// Finite description of a graded U-module: a multiset of towers
/// T+(s) = Z at gradings s, s+2, s+4, ... (U shifts down by 2, kills the
/// bottom) plus a multiset of finite summands Z(g) on which U acts as zero.
class GradedUModule {
 public:
  GradedUModule() = default;
  GradedUModule(std::vector<Rational> towers, std::vector<Rational> finites);

  static GradedUModule zero() { return {}; }

  const std::vector<Rational>& towers() const { return towers_; }
  const std::vector<Rational>& finites() const { return finites_; }
  bool is_zero() const { return towers_.empty() && finites_.empty(); }

  long long rank_at(const Rational& g) const;

  GradedUModule reversed() const;                 // towers s -> -s, finites g -> -g-1
  GradedUModule shifted(const Rational& d) const; // add d to every grading

  // Bottom grading of the unique tower; throws InputError unless there is
  // exactly one tower.
  Rational d_invariant() const;

  // Canonical text form: "T+(0) + Z(-1) + Z(-1)", "0" for the zero module.
  std::string render() const;
  static GradedUModule parse(std::string_view text);

  bool operator==(const GradedUModule&) const = default;
  bool operator<(const GradedUModule& o) const;

 private:
  std::vector<Rational> towers_;   // sorted ascending
  std::vector<Rational> finites_;  // sorted ascending
};

/// U-equivariant maps between graded U-modules, represented symbolically
/// by kind + parameters; matrices on any grading slice are derived on demand.
class ModuleMap {
 public:
  enum class Kind { identity, zero, tower_projection, tower_inclusion, generator_swap, composite };

  static ModuleMap identity(GradedUModule m);
  static ModuleMap zero_map(GradedUModule source, GradedUModule target, Rational degree = 0);

  // Kills every finite summand and every tower except the lowest;
  // target is that tower, regraded to target_bottom (degree = regrade shift).
  static ModuleMap tower_projection(GradedUModule m);
  static ModuleMap tower_projection_to(GradedUModule m, Rational target_bottom);

  // T+(source_bottom) -> m, hitting the tower with index tower_index
  // (in sorted order); degree = bottom(tower_index) - source_bottom.
  static ModuleMap tower_inclusion(GradedUModule m, int tower_index);
  static ModuleMap tower_inclusion_from(GradedUModule m, int tower_index, Rational source_bottom);

  // Automorphism exchanging the bottom generator of the tower whose bottom
  // equals the grading of finites()[finite_index] with that finite generator.
  static ModuleMap generator_swap(GradedUModule m, int finite_index);

  // compose(f, g) = f o g (g applied first). Throws on boundary mismatch.
  static ModuleMap compose(const ModuleMap& f, const ModuleMap& g);
  static ModuleMap compose(const std::vector<ModuleMap>& maps);

  const GradedUModule& source() const { return source_; }
  const GradedUModule& target() const { return target_; }
  const Rational& degree() const { return degree_; }
  Kind kind() const { return kind_; }

  // Basis at grading g: active towers in sorted order, then finites at g.
  // Rows index the target basis at g + degree, columns the source basis at g.
  std::vector<std::vector<long long>> matrix_at(const Rational& g) const;
  long long rank_at(const Rational& g) const;

  // Rank-level U-equivariance: U_target * M(g) == M(g-2) * U_source for all
  // gradings in [lo, hi].
  bool u_equivariant_on(const Rational& lo, const Rational& hi) const;

 private:
  ModuleMap() = default;

  Kind kind_ = Kind::zero;
  GradedUModule source_, target_;
  Rational degree_ = 0;
  int param_tower_ = -1;   // projection/inclusion/swap: tower index in source or target
  int param_finite_ = -1;  // swap: finite index
  std::vector<ModuleMap> parts_;  // composite, outermost first
};

// Matrices of f and g agree on every grading slice (checked across the
// support of the modules plus two U-periods).
bool map_equal(const ModuleMap& f, const ModuleMap& g);

}  // namespace hfplumb

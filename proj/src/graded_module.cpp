#include "hfplumb/graded_module.hpp"

#include "hfplumb/errors.hpp"

#include <algorithm>
#include <sstream>

namespace hfplumb {

GradedUModule::GradedUModule(std::vector<Rational> towers, std::vector<Rational> finites)
    : towers_(std::move(towers)), finites_(std::move(finites)) {
  std::sort(towers_.begin(), towers_.end());
  std::sort(finites_.begin(), finites_.end());
}

long long GradedUModule::rank_at(const Rational& g) const {
  long long r = 0;
  for (const Rational& s : towers_)
    if (s <= g && even_difference(g, s)) ++r;
  for (const Rational& f : finites_)
    if (f == g) ++r;
  return r;
}

GradedUModule GradedUModule::reversed() const {
  std::vector<Rational> t, f;
  t.reserve(towers_.size());
  f.reserve(finites_.size());
  for (const Rational& s : towers_) t.push_back(-s);
  for (const Rational& g : finites_) f.push_back(-g - 1);
  return GradedUModule(std::move(t), std::move(f));
}

GradedUModule GradedUModule::shifted(const Rational& d) const {
  std::vector<Rational> t, f;
  t.reserve(towers_.size());
  f.reserve(finites_.size());
  for (const Rational& s : towers_) t.push_back(s + d);
  for (const Rational& g : finites_) f.push_back(g + d);
  return GradedUModule(std::move(t), std::move(f));
}

Rational GradedUModule::d_invariant() const {
  if (towers_.size() != 1)
    throw InputError("d-invariant requires exactly one tower, found " +
                     std::to_string(towers_.size()));
  return towers_[0];
}

std::string GradedUModule::render() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Rational& s : towers_) {
    if (!first) out << " + ";
    out << "T+(" << to_string(s) << ")";
    first = false;
  }
  for (const Rational& g : finites_) {
    if (!first) out << " + ";
    out << "Z(" << to_string(g) << ")";
    first = false;
  }
  return out.str();
}

GradedUModule GradedUModule::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
  };
  std::string_view body = trim(text);
  if (body.empty()) throw InputError("empty module string");
  if (body == "0") return zero();
  std::vector<Rational> towers, finites;
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t next = body.find(" + ", pos);
    std::string_view term = trim(body.substr(pos, next == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : next - pos));
    bool tower = false;
    std::string_view inner;
    if (term.size() >= 5 && term.substr(0, 3) == "T+(" && term.back() == ')') {
      tower = true;
      inner = term.substr(3, term.size() - 4);
    } else if (term.size() >= 4 && term.substr(0, 2) == "Z(" && term.back() == ')') {
      inner = term.substr(2, term.size() - 3);
    } else {
      throw InputError("bad module term '" + std::string(term) + "'");
    }
    Rational g = parse_rational(inner);
    (tower ? towers : finites).push_back(g);
    if (next == std::string_view::npos) break;
    pos = next + 3;
  }
  return GradedUModule(std::move(towers), std::move(finites));
}

bool GradedUModule::operator<(const GradedUModule& o) const {
  if (towers_ != o.towers_) return towers_ < o.towers_;
  return finites_ < o.finites_;
}

namespace {

// Basis slot at a grading: tower index (kind 0) or finite index (kind 1),
// in the order used by ModuleMap::matrix_at.
struct Slot {
  int kind;  // 0 tower, 1 finite
  int index;
};

std::vector<Slot> basis_at(const GradedUModule& m, const Rational& g) {
  std::vector<Slot> slots;
  const auto& t = m.towers();
  for (int i = 0; i < static_cast<int>(t.size()); ++i)
    if (t[i] <= g && even_difference(g, t[i])) slots.push_back({0, i});
  const auto& f = m.finites();
  for (int i = 0; i < static_cast<int>(f.size()); ++i)
    if (f[i] == g) slots.push_back({1, i});
  return slots;
}

using Matrix = std::vector<std::vector<long long>>;

Matrix zero_matrix(size_t rows, size_t cols) {
  return Matrix(rows, std::vector<long long>(cols, 0));
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const size_t n = a.size();
  const size_t k = b.size();
  const size_t m = k ? b[0].size() : 0;
  Matrix out = zero_matrix(n, m);
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

// U on module m, from the slice at g to the slice at g-2: towers persist
// unless g is the bottom, finites die.
Matrix u_matrix(const GradedUModule& m, const Rational& g) {
  const auto src = basis_at(m, g);
  const auto dst = basis_at(m, g - 2);
  Matrix out = zero_matrix(dst.size(), src.size());
  for (size_t j = 0; j < src.size(); ++j) {
    if (src[j].kind != 0) continue;
    for (size_t i = 0; i < dst.size(); ++i)
      if (dst[i].kind == 0 && dst[i].index == src[j].index) out[i][j] = 1;
  }
  return out;
}

long long matrix_rank(Matrix a) {
  size_t rank = 0;
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][c] == 0) continue;
      // entries stay tiny (0/±1 products); exact integer elimination
      long long f1 = a[rank][c], f2 = a[i][c];
      for (size_t j = 0; j < cols; ++j) a[i][j] = a[i][j] * f1 - a[rank][j] * f2;
    }
    ++rank;
  }
  return static_cast<long long>(rank);
}

}  // namespace

ModuleMap ModuleMap::identity(GradedUModule m) {
  ModuleMap f;
  f.kind_ = Kind::identity;
  f.source_ = m;
  f.target_ = std::move(m);
  return f;
}

ModuleMap ModuleMap::zero_map(GradedUModule source, GradedUModule target, Rational degree) {
  ModuleMap f;
  f.kind_ = Kind::zero;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.degree_ = std::move(degree);
  return f;
}

ModuleMap ModuleMap::tower_projection(GradedUModule m) {
  if (m.towers().empty()) throw InputError("tower_projection: module has no tower");
  Rational bottom = m.towers().front();
  return tower_projection_to(std::move(m), std::move(bottom));
}

ModuleMap ModuleMap::tower_projection_to(GradedUModule m, Rational target_bottom) {
  if (m.towers().empty()) throw InputError("tower_projection: module has no tower");
  if (!even_difference(target_bottom, m.towers().front()))
    throw InputError("tower_projection: target bottom has wrong parity");
  ModuleMap f;
  f.kind_ = Kind::tower_projection;
  f.param_tower_ = 0;  // lowest tower
  f.degree_ = target_bottom - m.towers().front();
  f.source_ = std::move(m);
  f.target_ = GradedUModule({std::move(target_bottom)}, {});
  return f;
}

ModuleMap ModuleMap::tower_inclusion(GradedUModule m, int tower_index) {
  if (tower_index < 0 || tower_index >= static_cast<int>(m.towers().size()))
    throw InputError("tower_inclusion: bad tower index");
  return tower_inclusion_from(std::move(m), tower_index, m.towers()[tower_index]);
}

ModuleMap ModuleMap::tower_inclusion_from(GradedUModule m, int tower_index,
                                          Rational source_bottom) {
  if (tower_index < 0 || tower_index >= static_cast<int>(m.towers().size()))
    throw InputError("tower_inclusion: bad tower index");
  if (!even_difference(m.towers()[tower_index], source_bottom))
    throw InputError("tower_inclusion: source bottom has wrong parity");
  ModuleMap f;
  f.kind_ = Kind::tower_inclusion;
  f.param_tower_ = tower_index;
  f.degree_ = m.towers()[tower_index] - source_bottom;
  f.source_ = GradedUModule({std::move(source_bottom)}, {});
  f.target_ = std::move(m);
  return f;
}

ModuleMap ModuleMap::generator_swap(GradedUModule m, int finite_index) {
  if (finite_index < 0 || finite_index >= static_cast<int>(m.finites().size()))
    throw InputError("generator_swap: bad finite index");
  const Rational g = m.finites()[finite_index];
  int tower = -1;
  for (int i = 0; i < static_cast<int>(m.towers().size()); ++i) {
    if (m.towers()[i] == g) {
      tower = i;
      break;
    }
  }
  if (tower < 0)
    throw InputError("generator_swap: no tower bottom at grading " + to_string(g));
  ModuleMap f;
  f.kind_ = Kind::generator_swap;
  f.param_tower_ = tower;
  f.param_finite_ = finite_index;
  f.source_ = m;
  f.target_ = std::move(m);
  return f;
}

ModuleMap ModuleMap::compose(const ModuleMap& f, const ModuleMap& g) {
  if (!(g.target_ == f.source_))
    throw InputError("compose: target of inner map does not match source of outer map");
  ModuleMap h;
  h.kind_ = Kind::composite;
  h.source_ = g.source_;
  h.target_ = f.target_;
  h.degree_ = f.degree_ + g.degree_;
  h.parts_ = {f, g};
  return h;
}

ModuleMap ModuleMap::compose(const std::vector<ModuleMap>& maps) {
  if (maps.empty()) throw InputError("compose: no maps");
  ModuleMap acc = maps.back();
  for (auto it = maps.rbegin() + 1; it != maps.rend(); ++it)
    acc = compose(*it, acc);
  return acc;
}

std::vector<std::vector<long long>> ModuleMap::matrix_at(const Rational& g) const {
  const auto src = basis_at(source_, g);
  const auto dst = basis_at(target_, g + degree_);
  Matrix out = zero_matrix(dst.size(), src.size());
  switch (kind_) {
    case Kind::zero:
      break;
    case Kind::identity:
      for (size_t i = 0; i < dst.size(); ++i)
        for (size_t j = 0; j < src.size(); ++j)
          if (dst[i].kind == src[j].kind && dst[i].index == src[j].index) out[i][j] = 1;
      break;
    case Kind::tower_projection:
      for (size_t i = 0; i < dst.size(); ++i)
        for (size_t j = 0; j < src.size(); ++j)
          if (dst[i].kind == 0 && src[j].kind == 0 && src[j].index == param_tower_)
            out[i][j] = 1;
      break;
    case Kind::tower_inclusion:
      for (size_t i = 0; i < dst.size(); ++i)
        for (size_t j = 0; j < src.size(); ++j)
          if (src[j].kind == 0 && dst[i].kind == 0 && dst[i].index == param_tower_)
            out[i][j] = 1;
      break;
    case Kind::generator_swap: {
      const Rational swap_grading = source_.finites()[param_finite_];
      for (size_t i = 0; i < dst.size(); ++i) {
        for (size_t j = 0; j < src.size(); ++j) {
          Slot s = src[j], d = dst[i];
          if (g == swap_grading) {
            // exchange the tower bottom with the chosen finite generator
            if (s.kind == 0 && s.index == param_tower_) s = {1, param_finite_};
            else if (s.kind == 1 && s.index == param_finite_) s = {0, param_tower_};
          }
          if (d.kind == s.kind && d.index == s.index) out[i][j] = 1;
        }
      }
      break;
    }
    case Kind::composite: {
      // parts_ = {outer, inner}; matrix = outer(g + deg_inner) * inner(g)
      Matrix m = parts_[1].matrix_at(g);
      Matrix o = parts_[0].matrix_at(g + parts_[1].degree_);
      out = multiply(o, m);
      break;
    }
  }
  return out;
}

long long ModuleMap::rank_at(const Rational& g) const {
  return matrix_rank(matrix_at(g));
}

bool ModuleMap::u_equivariant_on(const Rational& lo, const Rational& hi) const {
  for (Rational g = lo; g <= hi; g += Rational(1, 2)) {
    Matrix lhs = multiply(u_matrix(target_, g + degree_), matrix_at(g));
    Matrix rhs = multiply(matrix_at(g - 2), u_matrix(source_, g));
    if (lhs != rhs) return false;
  }
  return true;
}

bool map_equal(const ModuleMap& f, const ModuleMap& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target()) ||
      f.degree() != g.degree())
    return false;
  std::vector<Rational> anchors;
  for (const auto& m : {f.source(), f.target()}) {
    for (const Rational& s : m.towers()) anchors.push_back(s);
    for (const Rational& x : m.finites()) anchors.push_back(x);
  }
  if (anchors.empty()) return true;
  const Rational lo = *std::min_element(anchors.begin(), anchors.end()) - 2;
  const Rational hi = *std::max_element(anchors.begin(), anchors.end()) + 4;
  for (Rational x = lo; x <= hi; x += Rational(1, 2))
    if (f.matrix_at(x) != g.matrix_at(x)) return false;
  return true;
}

}  // namespace hfplumb

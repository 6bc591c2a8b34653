#include "hfplumb/char_lattice.hpp"

#include "hfplumb/errors.hpp"

#include <cstdlib>
#include <string>

namespace hfplumb {

LatticeContext::LatticeContext(PlumbingGraph graph)
    : graph_(std::move(graph)),
      form_(intersection_form(graph_)),
      report_(validate(graph_)) {
  if (form_.det != 0) {
    invertible_ = true;
    inverse_ = invert_exact(form_.as_big());
    unimodular_ = (abs(form_.det) == 1);
    if (unimodular_) {
      const int n = size();
      int_inverse_.assign(n, std::vector<long long>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          int_inverse_[i][j] = to_long(numerator(inverse_[i][j]));
    }
  }
}

void LatticeContext::require_length(const CharVec& xi) const {
  if (static_cast<int>(xi.size()) != size())
    throw InputError("vector length " + std::to_string(xi.size()) +
                     " does not match graph size " + std::to_string(size()));
}

bool LatticeContext::is_characteristic(const CharVec& xi) const {
  require_length(xi);
  for (int i = 0; i < size(); ++i) {
    if (((xi[i] - graph_.weight(i)) % 2 + 2) % 2 != 0) return false;
  }
  return true;
}

std::size_t LatticeContext::box_size() const {
  std::size_t count = 1;
  for (int i = 0; i < size(); ++i) {
    count *= static_cast<std::size_t>(std::llabs(graph_.weight(i)));
  }
  return count;
}

std::vector<CharVec> LatticeContext::basic_box(std::size_t cap) const {
  if (!report_.is_negative_definite)
    throw NotApplicableError("basic box requires a negative definite form");
  const int n = size();
  const std::size_t count = box_size();
  if (count > cap)
    throw CapExceededError("box size " + std::to_string(count) +
                           " exceeds cap " + std::to_string(cap));
  std::vector<long long> radix(n);
  CharVec lo(n);
  for (int i = 0; i < n; ++i) {
    radix[i] = -graph_.weight(i);
    lo[i] = graph_.weight(i) + 2;
  }
  std::vector<CharVec> out;
  out.reserve(count);
  std::vector<long long> digit(n, 0);
  CharVec cur = lo;
  while (true) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0) {
      if (++digit[i] < radix[i]) {
        cur[i] += 2;
        break;
      }
      digit[i] = 0;
      cur[i] = lo[i];
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

CharVec LatticeContext::add_2pd(const CharVec& xi, int v) const {
  require_length(xi);
  if (v < 0 || v >= size()) throw InputError("vertex index out of range");
  CharVec out = xi;
  out[v] += 2 * graph_.weight(v);
  for (int w : graph_.neighbors(v)) out[w] += 2;
  return out;
}

Rational LatticeContext::square(const CharVec& xi) const {
  require_length(xi);
  if (!invertible_) throw SingularFormError("intersection form is singular");
  const int n = size();
  if (unimodular_) {
    long long acc = 0;
    for (int i = 0; i < n; ++i) {
      long long row = 0;
      for (int j = 0; j < n; ++j) row += int_inverse_[i][j] * xi[j];
      acc += xi[i] * row;
    }
    return Rational(acc);
  }
  Rational acc(0);
  for (int i = 0; i < n; ++i) {
    Rational row(0);
    for (int j = 0; j < n; ++j) row += inverse_[i][j] * xi[j];
    acc += Rational(xi[i]) * row;
  }
  return acc;
}

std::vector<Rational> LatticeContext::dual_to_primal(const CharVec& xi) const {
  require_length(xi);
  if (!invertible_) throw SingularFormError("intersection form is singular");
  const int n = size();
  std::vector<Rational> x(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x[i] += inverse_[i][j] * xi[j];
  return x;
}

Rational LatticeContext::hf_grading(const CharVec& xi, long long m) const {
  return Rational(2 * m) - (square(xi) + size()) / 4;
}

}  // namespace hfplumb

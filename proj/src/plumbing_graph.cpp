#include "hfplumb/plumbing_graph.hpp"

#include "hfplumb/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <unordered_map>

namespace hfplumb {

PlumbingGraph::PlumbingGraph(std::vector<Vertex> vertices,
                             const std::vector<std::pair<std::string, std::string>>& edges) {
  if (vertices.empty()) throw InputError("no vertices");
  std::unordered_map<std::string, int> index;
  for (auto& [label, weight] : vertices) {
    if (index.count(label)) throw InputError("duplicate label '" + label + "'");
    index[label] = static_cast<int>(labels_.size());
    labels_.push_back(label);
    weights_.push_back(weight);
  }
  adj_.resize(labels_.size());
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw InputError("edge references unknown vertex '" + a + "'");
    if (ib == index.end()) throw InputError("edge references unknown vertex '" + b + "'");
    int i = ia->second, j = ib->second;
    if (i == j) throw InputError("self-loop at '" + a + "'");
    if (i > j) std::swap(i, j);
    if (!seen.insert({i, j}).second)
      throw InputError("duplicate edge " + a + "-" + b);
    edges_.push_back({i, j});
    adj_[i].push_back(j);
    adj_[j].push_back(i);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int PlumbingGraph::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return -1;
}

IntMatrix IntersectionForm::as_big() const {
  const size_t n = q.size();
  IntMatrix a(n, std::vector<BigInt>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = q[i][j];
  return a;
}

IntersectionForm intersection_form(const PlumbingGraph& g) {
  const int n = g.size();
  IntersectionForm f;
  f.q.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) f.q[i][i] = g.weight(i);
  for (const auto& [i, j] : g.edges()) {
    f.q[i][j] = 1;
    f.q[j][i] = 1;
  }
  f.det = determinant(f.as_big());
  return f;
}

ValidationReport validate(const PlumbingGraph& g) {
  ValidationReport r;
  const int n = g.size();

  // connected + acyclic; disconnected forests are rejected here
  std::vector<int> stack{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  r.is_tree = (reached == n) && (static_cast<int>(g.edges().size()) == n - 1);

  const IntersectionForm f = intersection_form(g);
  r.determinant = f.det;
  r.is_negative_definite = is_negative_definite(f.as_big());

  for (int v = 0; v < n; ++v) {
    if (g.weight(v) > -static_cast<long long>(g.degree(v)))
      r.bad_vertices.push_back(g.label(v));
  }
  r.algorithm_applicable = r.is_tree && r.is_negative_definite &&
                           abs(r.determinant) == 1 && r.bad_vertices.size() <= 1;
  return r;
}

namespace {

// Negative continued fraction a/b = c1 - 1/(c2 - 1/(...)), all ci >= 2.
std::vector<long long> neg_continued_fraction(long long a, long long b) {
  std::vector<long long> cs;
  while (b > 0) {
    long long c = (a + b - 1) / b;  // ceil
    cs.push_back(c);
    long long na = b;
    long long nb = c * b - a;
    a = na;
    b = nb;
  }
  return cs;
}

}  // namespace

PlumbingGraph brieskorn_graph(long long p, long long q, long long r) {
  const long long a[3] = {p, q, r};
  for (long long x : a)
    if (x < 2) throw InputError("brieskorn: p,q,r must be >= 2");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::gcd(a[i], a[j]) != 1)
        throw InputError("brieskorn: p,q,r must be pairwise coprime");

  const long long prod = p * q * r;
  long long b[3];
  for (int i = 0; i < 3; ++i) {
    const long long m = prod / a[i];
    b[i] = -1;
    for (long long c = 1; c < a[i]; ++c) {
      if ((c * m) % a[i] == (a[i] - 1) % a[i]) {
        b[i] = c;
        break;
      }
    }
    if (b[i] < 0) throw InputError("brieskorn: no modular inverse (non-coprime input?)");
  }
  long long num = -1;
  for (int i = 0; i < 3; ++i) num -= b[i] * (prod / a[i]);
  if (num % prod != 0) throw InputError("brieskorn: central weight is not integral");
  const long long e0 = num / prod;

  std::vector<PlumbingGraph::Vertex> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  vertices.push_back({"v1", e0});
  int next = 2;
  for (int i = 0; i < 3; ++i) {
    std::string prev = "v1";
    for (long long c : neg_continued_fraction(a[i], b[i])) {
      std::string name = "v" + std::to_string(next++);
      vertices.push_back({name, -c});
      edges.push_back({prev, name});
      prev = name;
    }
  }
  PlumbingGraph g(std::move(vertices), edges);
  const ValidationReport rep = validate(g);
  if (!rep.is_negative_definite || abs(rep.determinant) != 1)
    throw std::logic_error("brieskorn: constructed form is not unimodular negative definite");
  return g;
}

}  // namespace hfplumb

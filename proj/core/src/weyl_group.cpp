#include "trigopt/weyl_group.hpp"

#include "trigopt/errors.hpp"

#include <algorithm>
#include <set>

namespace trigopt {

IntMat imat_identity(int n) {
  IntMat m(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat imat_mul(const IntMat& a, const IntMat& b) {
  const int n = static_cast<int>(a.size());
  IntMat r(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

IntMat imat_transpose(const IntMat& a) {
  const int n = static_cast<int>(a.size());
  IntMat r(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[j][i] = a[i][j];
  return r;
}

IntMat imat_inverse(const IntMat& a) {
  const int n = static_cast<int>(a.size());
  RatMat ra(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ra[i][j] = Rational(a[i][j]);
  RatMat inv = inverse(ra);
  IntMat r(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (inv[i][j].denominator() != 1)
        throw Error("imat_inverse: inverse is not integral");
      r[i][j] = inv[i][j].numerator();
    }
  return r;
}

GroupElement simple_reflection(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank()) throw Error("simple_reflection: index out of range");
  const RatVec& root = rs.base()[i - 1];
  const RatVec& coroot = rs.coroots()[i - 1];
  const int n = rs.rank();
  GroupElement g;
  g.mat.assign(n, std::vector<std::int64_t>(n, 0));
  for (int j = 0; j < n; ++j) {
    RatVec img = sub(rs.fweights()[j], scale(dot(rs.fweights()[j], coroot), root));
    RatVec coords = rs.weight_coords(img);
    for (int k = 0; k < n; ++k) {
      if (coords[k].denominator() != 1)
        throw Error("simple_reflection: non-integral weight coordinates");
      g.mat[j][k] = coords[k].numerator();
    }
  }
  g.inv_mat = g.mat;  // involution
  g.word = {i};
  return g;
}

Weight act_weight(const GroupElement& g, const Weight& w) {
  const int n = static_cast<int>(w.size());
  Weight r;
  r.c.assign(n, 0);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) r.c[k] += w.c[j] * g.mat[j][k];
  return r;
}

Point act_point(const GroupElement& g, const Point& u) {
  const int n = static_cast<int>(u.size());
  Point r;
  r.c.assign(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.c[i] += static_cast<double>(g.inv_mat[i][j]) * u.c[j];
  return r;
}

WeylGroup WeylGroup::generate(const RootSystem& rs, std::size_t cap) {
  WeylGroup w;
  w.rs_ = rs;
  const int n = rs.rank();

  std::vector<GroupElement> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(simple_reflection(rs, i));

  GroupElement id;
  id.mat = imat_identity(n);
  id.inv_mat = id.mat;
  w.elements_.push_back(id);
  w.index_[id.mat] = 0;

  // Breadth-first closure; first occurrence of a matrix gets the
  // lexicographically smallest word of minimal length.
  std::vector<int> frontier = {0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int e : frontier) {
      for (int i = 0; i < n; ++i) {
        IntMat m = imat_mul(gens[i].mat, w.elements_[e].mat);  // e o s_{i+1}
        if (w.index_.count(m)) continue;
        if (w.elements_.size() >= cap)
          throw GroupTooLarge("Weyl group exceeds cap of " + std::to_string(cap));
        GroupElement g;
        g.mat = m;
        g.inv_mat = imat_inverse(m);
        g.word = w.elements_[e].word;
        g.word.push_back(i + 1);
        w.index_[g.mat] = static_cast<int>(w.elements_.size());
        next.push_back(static_cast<int>(w.elements_.size()));
        w.elements_.push_back(std::move(g));
      }
    }
    frontier = std::move(next);
  }

  w.generator_index_.resize(n);
  for (int i = 0; i < n; ++i) w.generator_index_[i] = w.index_.at(gens[i].mat);

  const int order = w.size();
  w.product_.assign(order, std::vector<int>(order, -1));
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h)
      w.product_[g][h] = w.index_.at(imat_mul(w.elements_[h].mat, w.elements_[g].mat));
  w.inverse_.resize(order);
  for (int g = 0; g < order; ++g) w.inverse_[g] = w.index_.at(w.elements_[g].inv_mat);

  // Conjugacy classes by pairwise conjugation; ordered by smallest member.
  w.class_of_.assign(order, -1);
  for (int g = 0; g < order; ++g) {
    if (w.class_of_[g] >= 0) continue;
    std::set<int> cls;
    for (int h = 0; h < order; ++h)
      cls.insert(w.product_[h][w.product_[g][w.inverse_[h]]]);
    const int ci = static_cast<int>(w.classes_.size());
    w.classes_.emplace_back(cls.begin(), cls.end());
    for (int e : w.classes_.back()) w.class_of_[e] = ci;
  }
  return w;
}

int WeylGroup::index_of(const IntMat& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw Error("WeylGroup: matrix is not a group element");
  return it->second;
}

int WeylGroup::element_order(int g) const {
  int k = 1;
  int cur = g;
  while (cur != identity()) {
    cur = product(cur, g);
    ++k;
    if (k > size()) throw Error("element_order: runaway");
  }
  return k;
}

std::vector<Weight> WeylGroup::orbit(const Weight& w) const {
  std::set<Weight> seen;
  for (const auto& g : elements_) seen.insert(act_weight(g, w));
  return {seen.begin(), seen.end()};
}

}  // namespace trigopt

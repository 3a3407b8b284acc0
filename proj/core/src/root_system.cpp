#include "trigopt/root_system.hpp"

#include "trigopt/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace trigopt {

RatVec solve(RatMat a, RatVec b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == Rational(0)) ++piv;
    if (piv == n) throw Error("solve: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == Rational(0)) continue;
      Rational f = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

RatMat inverse(const RatMat& a) {
  const std::size_t n = a.size();
  RatMat inv(n, RatVec(n, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) {
    RatVec e(n, Rational(0));
    e[j] = Rational(1);
    RatVec col = solve(a, e);
    for (std::size_t i = 0; i < n; ++i) inv[i][j] = col[i];
  }
  return inv;
}

bool Weight::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x == 0; });
}

Weight Weight::operator-() const {
  Weight r(*this);
  for (auto& x : r.c) x = -x;
  return r;
}

Weight Weight::operator+(const Weight& o) const {
  Weight r(*this);
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  Weight r(*this);
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
  return r;
}

std::size_t WeightHash::operator()(const Weight& w) const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (auto x : w.c) h = h * 1099511628211ull ^ static_cast<std::size_t>(x + 0x7fffffff);
  return h;
}

RootSystemId RootSystemId::parse(std::string_view s) {
  RootSystemId id;
  std::size_t pos = 0;
  while (pos < s.size()) {
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[pos])));
    if (fam != 'A' && fam != 'B' && fam != 'C' && fam != 'G')
      throw UnsupportedType("unknown root system family in '" + std::string(s) + "'");
    ++pos;
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw UnsupportedType("missing rank in '" + std::string(s) + "'");
    int rank = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      rank = rank * 10 + (s[pos++] - '0');
    const bool ok = (fam == 'A' && (rank == 1 || rank == 2)) ||
                    ((fam == 'B' || fam == 'C' || fam == 'G') && rank == 2);
    if (!ok)
      throw UnsupportedType(std::string(1, fam) + std::to_string(rank) +
                            " is not supported (supported: A1, A2, B2, C2, G2)");
    id.components.push_back({static_cast<Family>(fam), rank});
    if (pos < s.size()) {
      char sep = static_cast<char>(std::tolower(static_cast<unsigned char>(s[pos])));
      if (sep != 'x') throw UnsupportedType("expected 'x' separator in '" + std::string(s) + "'");
      ++pos;
      if (pos == s.size()) throw UnsupportedType("trailing separator in '" + std::string(s) + "'");
    }
  }
  if (id.components.empty()) throw UnsupportedType("empty root system id");
  return id;
}

std::string RootSystemId::str() const {
  std::string s;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += 'x';
    s += static_cast<char>(components[i].family);
    s += std::to_string(components[i].rank);
  }
  return s;
}

int RootSystemId::rank() const {
  int n = 0;
  for (const auto& comp : components) n += comp.rank;
  return n;
}

namespace {

RatVec vec(std::initializer_list<Rational> xs) { return RatVec(xs); }

// Project onto the complement of [1,...,1]; the quotient-space representatives
// from the plates are already sum-zero, so this normalizes rather than changes them.
RatVec project_sum_zero(RatVec v) {
  Rational mean(0);
  for (const auto& x : v) mean += x;
  mean /= Rational(static_cast<long long>(v.size()));
  for (auto& x : v) x -= mean;
  return v;
}

struct PlateData {
  int ambient;
  std::vector<RatVec> base;
  std::vector<RatVec> fweights;
  RatVec highest;
  bool quotient;  // lives in R^3 / <[1,1,1]>
};

PlateData plate(RootSystemId::Component t) {
  switch (t.family) {
    case Family::A:
      if (t.rank == 1)
        return {1, {vec({rat(2)})}, {vec({rat(1)})}, vec({rat(2)}), false};
      return {3,
              {vec({rat(1), rat(-1), rat(0)}), vec({rat(0), rat(1), rat(-1)})},
              {vec({rat(2, 3), rat(-1, 3), rat(-1, 3)}), vec({rat(1, 3), rat(1, 3), rat(-2, 3)})},
              vec({rat(1), rat(0), rat(-1)}),
              true};
    case Family::B:
      return {2,
              {vec({rat(1), rat(-1)}), vec({rat(0), rat(1)})},
              {vec({rat(1), rat(0)}), vec({rat(1, 2), rat(1, 2)})},
              vec({rat(1), rat(1)}),
              false};
    case Family::C:
      return {2,
              {vec({rat(1), rat(-1)}), vec({rat(0), rat(2)})},
              {vec({rat(1), rat(0)}), vec({rat(1), rat(1)})},
              vec({rat(2), rat(0)}),
              false};
    case Family::G:
      return {3,
              {vec({rat(1), rat(-1), rat(0)}), vec({rat(-2), rat(1), rat(1)})},
              {vec({rat(0), rat(-1), rat(1)}), vec({rat(-1), rat(-1), rat(2)})},
              vec({rat(-1), rat(-1), rat(2)}),
              true};
  }
  throw UnsupportedType("unknown family");
}

RatVec coroot_of(const RatVec& root) {
  return scale(Rational(2) / dot(root, root), root);
}

// Reflection closure of the base: s_rho(v) = v - <v, rho^vee> rho.
std::vector<RatVec> close_roots(const std::vector<RatVec>& base) {
  std::vector<RatVec> roots = base;
  auto contains = [&roots](const RatVec& v) {
    return std::any_of(roots.begin(), roots.end(), [&](const RatVec& r) { return r == v; });
  };
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      for (const auto& b : base) {
        RatVec bv = coroot_of(b);
        RatVec img = sub(roots[i], scale(dot(roots[i], bv), b));
        if (!contains(img)) {
          roots.push_back(img);
          grew = true;
        }
        RatVec neg = scale(Rational(-1), roots[i]);
        if (!contains(neg)) {
          roots.push_back(neg);
          grew = true;
        }
      }
    }
    if (roots.size() > 64) throw Error("root closure did not terminate");
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

RootSystemId single(RootSystemId::Component t) {
  RootSystemId id;
  id.components.push_back(t);
  return id;
}

}  // namespace

Rational RootSystem::norm_sq(const Weight& w) const {
  Rational s(0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      s += gram_[i][j] * Rational(w.c[i]) * Rational(w.c[j]);
  return s;
}

RatVec RootSystem::weight_coords(const RatVec& ambient) const {
  RatVec c(rank_);
  for (int k = 0; k < rank_; ++k) c[k] = dot(ambient, coroots_[k]);
  return c;
}

RootSystem build_root_system(const RootSystemId& id) {
  if (id.components.empty()) throw UnsupportedType("empty root system id");

  auto build_component = [](RootSystemId::Component t) {
    PlateData p = plate(t);
    RootSystem rs;
    rs.id_ = single(t);
    rs.rank_ = t.rank;
    rs.ambient_dim_ = p.ambient;
    rs.base_ = p.base;
    rs.fweights_ = p.fweights;
    rs.highest_root_ = p.highest;
    if (p.quotient) {
      for (auto& v : rs.base_) v = project_sum_zero(v);
      for (auto& v : rs.fweights_) v = project_sum_zero(v);
      rs.highest_root_ = project_sum_zero(rs.highest_root_);
    }
    for (const auto& b : rs.base_) rs.coroots_.push_back(coroot_of(b));
    rs.roots_ = close_roots(rs.base_);

    const int n = rs.rank_;
    rs.cartan_.assign(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational a = dot(rs.base_[i], rs.coroots_[j]);
        if (a.denominator() != 1) throw Error("Cartan entry not integral");
        rs.cartan_[i][j] = a.numerator();
      }
    rs.gram_.assign(n, RatVec(n));
    rs.coroot_gram_.assign(n, RatVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        rs.gram_[i][j] = dot(rs.fweights_[i], rs.fweights_[j]);
        rs.coroot_gram_[i][j] = dot(rs.coroots_[i], rs.coroots_[j]);
      }

    RootSystem::Component comp;
    comp.type = t;
    comp.coord_begin = 0;
    comp.coord_end = n;
    comp.weight_gram = rs.gram_;
    if (t.rank == 1) {
      // Periodicity lattice Z*rho = 2 Z: the cell [-1,1] gives Omega_d = {-d..d}.
      comp.period_in_coroot = {{2}};
    } else {
      comp.period_in_coroot = {{1, 0}, {0, 1}};
    }
    const int m = static_cast<int>(comp.period_in_coroot.size());
    comp.period_gram.assign(m, RatVec(m, Rational(0)));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            comp.period_gram[i][j] += Rational(comp.period_in_coroot[i][a]) *
                                      rs.coroot_gram_[a][b] *
                                      Rational(comp.period_in_coroot[j][b]);
    rs.components_ = {comp};
    return rs;
  };

  RootSystem rs = build_component(id.components[0]);
  for (std::size_t i = 1; i < id.components.size(); ++i)
    rs = direct_sum(rs, build_component(id.components[i]));
  return rs;
}

RootSystem direct_sum(const RootSystem& a, const RootSystem& b) {
  RootSystem rs;
  rs.id_.components = a.id_.components;
  rs.id_.components.insert(rs.id_.components.end(), b.id_.components.begin(),
                           b.id_.components.end());
  rs.rank_ = a.rank_ + b.rank_;
  rs.ambient_dim_ = a.ambient_dim_ + b.ambient_dim_;

  auto embed_left = [&](const RatVec& v) {
    RatVec r(rs.ambient_dim_, Rational(0));
    std::copy(v.begin(), v.end(), r.begin());
    return r;
  };
  auto embed_right = [&](const RatVec& v) {
    RatVec r(rs.ambient_dim_, Rational(0));
    std::copy(v.begin(), v.end(), r.begin() + a.ambient_dim_);
    return r;
  };

  for (const auto& v : a.roots_) rs.roots_.push_back(embed_left(v));
  for (const auto& v : b.roots_) rs.roots_.push_back(embed_right(v));
  for (const auto& v : a.base_) rs.base_.push_back(embed_left(v));
  for (const auto& v : b.base_) rs.base_.push_back(embed_right(v));
  for (const auto& v : a.coroots_) rs.coroots_.push_back(embed_left(v));
  for (const auto& v : b.coroots_) rs.coroots_.push_back(embed_right(v));
  for (const auto& v : a.fweights_) rs.fweights_.push_back(embed_left(v));
  for (const auto& v : b.fweights_) rs.fweights_.push_back(embed_right(v));
  // A direct sum is reducible, so there is no single highest root; keep the
  // first component's one (unused for sums).
  rs.highest_root_ = embed_left(a.highest_root_);

  const int n = rs.rank_;
  rs.cartan_.assign(n, std::vector<std::int64_t>(n, 0));
  rs.gram_.assign(n, RatVec(n, Rational(0)));
  rs.coroot_gram_.assign(n, RatVec(n, Rational(0)));
  for (int i = 0; i < a.rank_; ++i)
    for (int j = 0; j < a.rank_; ++j) {
      rs.cartan_[i][j] = a.cartan_[i][j];
      rs.gram_[i][j] = a.gram_[i][j];
      rs.coroot_gram_[i][j] = a.coroot_gram_[i][j];
    }
  for (int i = 0; i < b.rank_; ++i)
    for (int j = 0; j < b.rank_; ++j) {
      rs.cartan_[a.rank_ + i][a.rank_ + j] = b.cartan_[i][j];
      rs.gram_[a.rank_ + i][a.rank_ + j] = b.gram_[i][j];
      rs.coroot_gram_[a.rank_ + i][a.rank_ + j] = b.coroot_gram_[i][j];
    }

  rs.components_ = a.components_;
  for (auto comp : b.components_) {
    comp.coord_begin += a.rank_;
    comp.coord_end += a.rank_;
    rs.components_.push_back(comp);
  }
  return rs;
}

double pairing(const RootSystem& rs, const Weight& w, const Point& u) {
  if (static_cast<int>(w.size()) != rs.rank() || static_cast<int>(u.size()) != rs.rank())
    throw DimensionMismatch("pairing: coordinate length does not match rank");
  double s = 0.0;
  for (int i = 0; i < rs.rank(); ++i) s += static_cast<double>(w.c[i]) * u.c[i];
  return s;
}

Eigen::MatrixXd weight_gram(const RootSystem& rs) {
  Eigen::MatrixXd g(rs.rank(), rs.rank());
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j) g(i, j) = to_double(rs.gram()[i][j]);
  return g;
}

double weight_norm_sq(const RootSystem& rs, const Weight& w) {
  if (static_cast<int>(w.size()) != rs.rank())
    throw DimensionMismatch("weight_norm_sq: coordinate length does not match rank");
  return to_double(rs.norm_sq(w));
}

}  // namespace trigopt

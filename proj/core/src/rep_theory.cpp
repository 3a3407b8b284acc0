#include "trigopt/rep_theory.hpp"

#include "trigopt/errors.hpp"

#include <cmath>
#include <numbers>

namespace trigopt {

Eigen::MatrixXd PermRep::matrix(int g) const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(set_size, set_size);
  for (int k = 0; k < set_size; ++k) m(perm[g][k], k) = 1.0;
  return m;
}

int PermRep::fixed_points(int g) const {
  int n = 0;
  for (int k = 0; k < set_size; ++k)
    if (perm[g][k] == k) ++n;
  return n;
}

PermRep build_perm_rep(const WeylGroup& W, const WeightSet& ws) {
  PermRep rep;
  rep.group_size = W.size();
  rep.set_size = ws.size();
  rep.perm.assign(W.size(), std::vector<int>(ws.size(), -1));
  for (int g = 0; g < W.size(); ++g) {
    for (int k = 0; k < ws.size(); ++k) {
      Weight img = W.act(g, ws.weight(k));
      if (!ws.contains(img))
        throw WeightSetNotStable("build_perm_rep: weight set is not W-stable");
      rep.perm[g][k] = ws.index_of(img);
    }
  }
  rep.inv.resize(W.size());
  for (int g = 0; g < W.size(); ++g) rep.inv[g] = W.inverse(g);
  return rep;
}

namespace {

// Per-component irrep descriptor. TwoDim(j) is the 2-dimensional dihedral
// irrep whose rotation generator maps to the planar rotation by 2*pi*j/m.
struct IrrepDesc {
  enum Kind { Sign, TwoDim, PlusMinus, MinusPlus, Trivial } kind;
  int j = 0;

  int dim() const { return kind == TwoDim ? 2 : 1; }
};

int dihedral_order(RootSystemId::Component t) {
  switch (t.family) {
    case Family::A: return 3;  // rank 2 only; rank 1 handled separately
    case Family::B:
    case Family::C: return 4;
    case Family::G: return 6;
  }
  throw UnsupportedGroup("unknown family");
}

std::vector<IrrepDesc> component_irreps(const RootSystem::Component& comp) {
  std::vector<IrrepDesc> list;
  if (comp.type.rank == 1) {
    list.push_back({IrrepDesc::Sign, 0});
    list.push_back({IrrepDesc::Trivial, 0});
    return list;
  }
  const int m = dihedral_order(comp.type);
  list.push_back({IrrepDesc::Sign, 0});
  for (int j = 1; 2 * j < m; ++j) list.push_back({IrrepDesc::TwoDim, j});
  if (m % 2 == 0) {
    list.push_back({IrrepDesc::PlusMinus, 0});
    list.push_back({IrrepDesc::MinusPlus, 0});
  }
  list.push_back({IrrepDesc::Trivial, 0});
  return list;
}

// Letters of the reduced word that belong to one component's generators.
struct WordSplit {
  int total = 0;   // letters in the component
  int second = 0;  // letters equal to the component's second generator
  int first = 0;
};

WordSplit split_word(const RootSystem::Component& comp, const std::vector<int>& word) {
  WordSplit s;
  for (int letter : word) {
    const int idx = letter - 1;
    if (idx < comp.coord_begin || idx >= comp.coord_end) continue;
    ++s.total;
    if (idx == comp.coord_begin) ++s.first;
    else ++s.second;
  }
  return s;
}

// Character of one component irrep on a group element. For 1-dim irreps the
// value is a product over the element's word letters; for 2-dim irreps it is
// read off the element's block matrix (det/trace classify rotation vs
// reflection and the rotation angle).
double component_char(const RootSystem::Component& comp, const IrrepDesc& ir,
                      const GroupElement& g) {
  WordSplit wsplit = split_word(comp, g.word);
  switch (ir.kind) {
    case IrrepDesc::Trivial: return 1.0;
    case IrrepDesc::Sign: return (wsplit.total % 2 == 0) ? 1.0 : -1.0;
    case IrrepDesc::PlusMinus: return (wsplit.second % 2 == 0) ? 1.0 : -1.0;
    case IrrepDesc::MinusPlus: return (wsplit.first % 2 == 0) ? 1.0 : -1.0;
    case IrrepDesc::TwoDim: break;
  }
  const int b = comp.coord_begin;
  const std::int64_t det = g.mat[b][b] * g.mat[b + 1][b + 1] - g.mat[b][b + 1] * g.mat[b + 1][b];
  if (det == -1) return 0.0;  // reflection
  if (det != 1) throw UnsupportedGroup("component block has |det| != 1");
  const std::int64_t tr = g.mat[b][b] + g.mat[b + 1][b + 1];
  const int m = dihedral_order(comp.type);
  // tr = 2 cos(2 pi k / m); recover k in [0, m/2].
  double angle = std::acos(std::clamp(static_cast<double>(tr) / 2.0, -1.0, 1.0));
  const int k = static_cast<int>(std::lround(angle * m / (2.0 * std::numbers::pi)));
  return 2.0 * std::cos(2.0 * std::numbers::pi * ir.j * k / m);
}

std::vector<std::vector<IrrepDesc>> full_irrep_list(const RootSystem& rs) {
  std::vector<std::vector<IrrepDesc>> list = {{}};
  for (const auto& comp : rs.components()) {
    std::vector<std::vector<IrrepDesc>> next;
    for (const auto& prefix : list)
      for (const auto& ir : component_irreps(comp)) {
        auto xs = prefix;
        xs.push_back(ir);
        next.push_back(std::move(xs));
      }
    list = std::move(next);
  }
  return list;
}

Eigen::MatrixXcd rot2(double angle) {
  Eigen::MatrixXcd r(2, 2);
  r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return r;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

// Unitary image of the component's generator s_local (1-based within the
// component) under the component irrep.
Eigen::MatrixXcd component_generator_image(const RootSystem::Component& comp,
                                           const IrrepDesc& ir, int s_local) {
  auto scalar = [](double v) {
    Eigen::MatrixXcd m(1, 1);
    m(0, 0) = v;
    return m;
  };
  switch (ir.kind) {
    case IrrepDesc::Trivial: return scalar(1.0);
    case IrrepDesc::Sign: return scalar(-1.0);
    case IrrepDesc::PlusMinus: return scalar(s_local == 1 ? 1.0 : -1.0);
    case IrrepDesc::MinusPlus: return scalar(s_local == 1 ? -1.0 : 1.0);
    case IrrepDesc::TwoDim: break;
  }
  const int m = dihedral_order(comp.type);
  Eigen::MatrixXcd refl(2, 2);
  refl << 1.0, 0.0, 0.0, -1.0;
  if (s_local == 1) return refl;
  return refl * rot2(2.0 * std::numbers::pi * ir.j / m);  // D(s2) = D(s1) D(r)
}

}  // namespace

CharacterTable character_table(const WeylGroup& W) {
  const RootSystem& rs = W.root_system();
  for (const auto& comp : rs.components())
    if (comp.type.rank == 2) {
      const int m = dihedral_order(comp.type);
      if (m != 3 && m != 4 && m != 6)
        throw UnsupportedGroup("dihedral order outside {3,4,6}");
    }

  CharacterTable ct;
  ct.classes = W.conjugacy_classes();
  ct.class_of.resize(W.size());
  for (int g = 0; g < W.size(); ++g) ct.class_of[g] = W.class_of(g);

  auto irreps = full_irrep_list(rs);
  if (static_cast<int>(irreps.size()) != static_cast<int>(ct.classes.size()))
    throw UnsupportedGroup("irrep count does not match class count");

  const int h = static_cast<int>(irreps.size());
  ct.chars.resize(h, h);
  ct.dims.resize(h);
  for (int i = 0; i < h; ++i) {
    int d = 1;
    for (const auto& ir : irreps[i]) d *= ir.dim();
    ct.dims[i] = d;
    for (int c = 0; c < h; ++c) {
      const GroupElement& g = W.element(ct.classes[c][0]);
      double v = 1.0;
      for (std::size_t k = 0; k < rs.components().size(); ++k)
        v *= component_char(rs.components()[k], irreps[i][k], g);
      ct.chars(i, c) = v;
    }
  }
  return ct;
}

IrrepMatrices irrep_matrices(const WeylGroup& W, const CharacterTable& ct) {
  const RootSystem& rs = W.root_system();
  auto irreps = full_irrep_list(rs);
  if (static_cast<int>(irreps.size()) != ct.h())
    throw UnsupportedGroup("irrep list does not match character table");

  IrrepMatrices out;
  out.mats.resize(irreps.size());
  const int n = rs.rank();

  for (std::size_t i = 0; i < irreps.size(); ++i) {
    // Full-group generator images: Kronecker product over components, with
    // the identity in components the generator does not touch.
    std::vector<Eigen::MatrixXcd> gen_img(n);
    for (int s = 1; s <= n; ++s) {
      Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(1, 1);
      for (std::size_t c = 0; c < rs.components().size(); ++c) {
        const auto& comp = rs.components()[c];
        const int dc = irreps[i][c].dim();
        Eigen::MatrixXcd factor;
        if (s - 1 >= comp.coord_begin && s - 1 < comp.coord_end)
          factor = component_generator_image(comp, irreps[i][c], s - comp.coord_begin);
        else
          factor = Eigen::MatrixXcd::Identity(dc, dc);
        acc = kron(acc, factor);
      }
      gen_img[s - 1] = acc;
    }

    const int di = ct.dims[i];
    out.mats[i].assign(W.size(), Eigen::MatrixXcd());
    for (int g = 0; g < W.size(); ++g) {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(di, di);
      for (int letter : W.element(g).word) m = (m * gen_img[letter - 1]).eval();
      out.mats[i][g] = std::move(m);
    }
  }
  return out;
}

std::vector<int> multiplicities(const PermRep& rep, const CharacterTable& ct) {
  const int h = ct.h();
  std::vector<int> m(h);
  int total = 0;
  for (int i = 0; i < h; ++i) {
    Complex s(0.0);
    for (std::size_t c = 0; c < ct.classes.size(); ++c) {
      const int repr = ct.classes[c][0];
      s += std::conj(ct.chars(i, static_cast<int>(c))) *
           static_cast<double>(ct.classes[c].size() * rep.fixed_points(repr));
    }
    s /= static_cast<double>(rep.group_size);
    const double rounded = std::round(s.real());
    if (std::abs(s.real() - rounded) > 1e-8 || std::abs(s.imag()) > 1e-8)
      throw NonIntegralMultiplicity("multiplicity " + std::to_string(i) +
                                    " is not a nonnegative integer");
    m[i] = static_cast<int>(rounded);
    if (m[i] < 0) throw NonIntegralMultiplicity("negative multiplicity");
    total += m[i] * ct.dims[i];
  }
  if (total != rep.set_size)
    throw NonIntegralMultiplicity("sum d_i m_i != |Omega_d|");
  return m;
}

Eigen::MatrixXcd isotypic_projection(const PermRep& rep, const CharacterTable& ct, int irrep) {
  const int n = rep.set_size;
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
  for (int g = 0; g < rep.group_size; ++g) {
    const Complex coeff = ct.value(irrep, rep.inv[g]);
    if (coeff == Complex(0.0)) continue;
    for (int k = 0; k < n; ++k) p(rep.perm[g][k], k) += coeff;
  }
  p *= static_cast<double>(ct.dims[irrep]) / static_cast<double>(rep.group_size);
  return p;
}

}  // namespace trigopt

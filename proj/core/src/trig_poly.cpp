#include "trigopt/trig_poly.hpp"

#include "trigopt/errors.hpp"

#include <cmath>
#include <numbers>

namespace trigopt {

TrigPoly TrigPoly::from_terms(int rank,
                              const std::vector<std::pair<Weight, Complex>>& terms) {
  TrigPoly f(rank);
  std::map<Weight, Complex> acc;
  for (const auto& [w, v] : terms) {
    if (static_cast<int>(w.size()) != rank)
      throw DimensionMismatch("from_terms: weight length does not match rank");
    acc[w] += v;
  }
  for (const auto& [w, v] : acc) {
    auto it = acc.find(-w);
    if (it == acc.end()) {
      f.coeffs_[w] = v;
      f.coeffs_[-w] = std::conj(v);
    } else {
      if (std::abs(it->second - std::conj(v)) > 1e-12 * (1.0 + std::abs(v)))
        throw NotConjugateSymmetric("from_terms: f_{-w} != conj(f_w)");
      f.coeffs_[w] = w.is_zero() ? Complex(v.real(), 0.0) : v;
    }
  }
  f.prune(0.0);
  return f;
}

Complex TrigPoly::coeff(const Weight& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Complex(0.0) : it->second;
}

void TrigPoly::set_coeff(const Weight& w, Complex v) {
  if (v == Complex(0.0)) {
    coeffs_.erase(w);
    coeffs_.erase(-w);
    return;
  }
  if (w.is_zero()) v = Complex(v.real(), 0.0);
  coeffs_[w] = v;
  coeffs_[-w] = std::conj(v);
}

void TrigPoly::prune(double tol) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (std::abs(it->second) <= tol)
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
  for (const auto& [w, v] : o.coeffs_) {
    auto c = coeffs_[w] + v;
    if (c == Complex(0.0))
      coeffs_.erase(w);
    else
      coeffs_[w] = c;
  }
  return *this;
}

TrigPoly& TrigPoly::operator*=(double s) {
  if (s == 0.0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [w, v] : coeffs_) v *= s;
  return *this;
}

double evaluate(const RootSystem& rs, const TrigPoly& f, const Point& u) {
  Complex sum(0.0);
  double l1 = 0.0;
  for (const auto& [w, v] : f.coeffs()) {
    const double phase = 2.0 * std::numbers::pi * pairing(rs, w, u);
    sum += v * Complex(std::cos(phase), std::sin(phase));
    l1 += std::abs(v);
  }
  if (std::abs(sum.imag()) >= 1e-10 * (1.0 + l1))
    throw Error("evaluate: non-real value; polynomial is not conjugate-symmetric");
  return sum.real();
}

TrigPoly act(const GroupElement& g, const TrigPoly& f) {
  TrigPoly out(f.rank());
  for (const auto& [w, v] : f.coeffs()) out.set_coeff(act_weight(g, w), v);
  return out;
}

bool is_invariant(const WeylGroup& W, const TrigPoly& f, double tol) {
  for (int i = 1; i <= W.num_generators(); ++i) {
    const GroupElement& s = W.element(W.generator(i));
    TrigPoly sf = act(s, f);
    for (const auto& [w, v] : f.coeffs())
      if (std::abs(sf.coeff(w) - v) > tol) return false;
    for (const auto& [w, v] : sf.coeffs())
      if (std::abs(f.coeff(w) - v) > tol) return false;
  }
  return true;
}

TrigPoly symmetrize(const WeylGroup& W, const TrigPoly& f) {
  TrigPoly avg(f.rank());
  for (const auto& g : W.elements()) avg += act(g, f);
  avg *= 1.0 / W.size();
  double maxc = 0.0;
  for (const auto& [w, v] : avg.coeffs()) maxc = std::max(maxc, std::abs(v));
  avg.prune(1e-14 * maxc);
  return avg;
}

}  // namespace trigopt

#include "expasym/exactalg/moment_poly.hpp"

#include <sstream>

namespace expasym {

MomentPoly::MomentPoly(const Rat& c) {
  if (c != 0) terms_.emplace(0, RatFuncN(c));
}

MomentPoly::MomentPoly(const RatFuncN& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

MomentPoly MomentPoly::from_x(const Poly& p) {
  MomentPoly m;
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coefficient(k) != 0) m.terms_.emplace(k, RatFuncN(p.coefficient(k)));
  return m;
}

MomentPoly MomentPoly::term(const RatFuncN& c, int k) {
  MomentPoly m;
  if (!c.is_zero()) m.terms_.emplace(k, c);
  return m;
}

RatFuncN MomentPoly::coefficient(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? RatFuncN() : it->second;
}

void MomentPoly::add_term(int k, const RatFuncN& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MomentPoly MomentPoly::dx() const {
  MomentPoly d;
  for (const auto& [k, c] : terms_)
    if (k > 0) d.add_term(k - 1, c * RatFuncN(Rat(k)));
  return d;
}

MomentPoly MomentPoly::dx(int order) const {
  MomentPoly m = *this;
  for (int i = 0; i < order && !m.is_zero(); ++i) m = m.dx();
  return m;
}

Rat MomentPoly::operator()(const Rat& n, const Rat& x) const { return at_n(n)(x); }

Poly MomentPoly::at_n(const Rat& n) const {
  std::vector<Rat> coeffs(terms_.empty() ? 0 : static_cast<std::size_t>(x_degree()) + 1);
  for (const auto& [k, c] : terms_) coeffs[static_cast<std::size_t>(k)] = c(n);
  return Poly(std::move(coeffs));
}

std::map<int, Poly> MomentPoly::expand(int order) const {
  std::map<int, std::vector<Rat>> by_j;
  const std::size_t width = terms_.empty() ? 0 : static_cast<std::size_t>(x_degree()) + 1;
  for (const auto& [k, c] : terms_) {
    for (const auto& [j, value] : laurent_at_infinity(c, order).terms()) {
      auto& row = by_j[j];
      row.resize(width);
      row[static_cast<std::size_t>(k)] = value;
    }
  }
  std::map<int, Poly> out;
  for (auto& [j, row] : by_j) {
    Poly g(std::move(row));
    if (!g.is_zero()) out.emplace(j, std::move(g));
  }
  return out;
}

MomentPoly& MomentPoly::operator+=(const MomentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

MomentPoly& MomentPoly::operator-=(const MomentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

MomentPoly& MomentPoly::operator*=(const MomentPoly& o) {
  MomentPoly prod;
  for (const auto& [i, a] : terms_)
    for (const auto& [j, b] : o.terms_) prod.add_term(i + j, a * b);
  *this = std::move(prod);
  return *this;
}

MomentPoly& MomentPoly::operator*=(const RatFuncN& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

MomentPoly MomentPoly::operator-() const {
  MomentPoly m = *this;
  for (auto& [k, v] : m.terms_) v = -v;
  return m;
}

std::string MomentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")";
    if (k == 1) out << "*x";
    if (k > 1) out << "*x^" << k;
  }
  return out.str();
}

}  // namespace expasym

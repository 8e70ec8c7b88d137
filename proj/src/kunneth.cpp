#include "tc/kunneth.hpp"

#include "tc/errors.hpp"

namespace tc {

SquareRing::SquareRing(RingPtr base, const RingLimits& limits, Exec policy)
    : base_(std::move(base)) {
  if (!base_) throw ComputeError("null base ring");
  n_ = base_->size();
  const int N = n_ * n_;

  std::vector<BasisElement> basis;
  basis.reserve(N);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      std::string lab = (i == 0 && j == 0)
                            ? "1"
                            : base_->label(i) + "⊗" + base_->label(j);
      basis.push_back({std::move(lab), base_->degree(i) + base_->degree(j)});
    }

  // Row-parallel table build: bucket per left factor, merged in order.
  std::vector<std::map<std::pair<int, int>, Coords>> rows(N);
  const CoeffRing coeff = base_->coeff();
  for_each_index(policy, N, [&](std::ptrdiff_t p) {
    if (p == 0) return;  // unit row
    const auto [i, j] = unflat(static_cast<int>(p));
    auto& out = rows[p];
    for (int q = static_cast<int>(p); q < N; ++q) {
      const auto [k, l] = unflat(q);
      const Coords left = base_->basis_product(i, k);
      if (left.empty()) continue;
      const Coords right = base_->basis_product(j, l);
      if (right.empty()) continue;
      const bool neg = base_->degree(j) % 2 != 0 && base_->degree(k) % 2 != 0;
      Coords acc;
      for (const auto& [r, cr] : left)
        for (const auto& [s, cs] : right) {
          Scalar v = cr * cs;
          if (neg) v = -v;
          auto it = acc.find(flat(r, s));
          if (it == acc.end()) {
            if (!v.is_zero()) acc.emplace(flat(r, s), v);
          } else {
            it->second = it->second + v;
            if (it->second.is_zero()) acc.erase(it);
          }
        }
      if (!acc.empty()) out.emplace(std::make_pair(static_cast<int>(p), q),
                                    std::move(acc));
    }
  });

  RawTable raw;
  for (auto& row : rows)
    for (auto& [key, coords] : row) raw.emplace(key, std::move(coords));

  std::optional<int> dim;
  if (base_->formal_dim()) dim = 2 * *base_->formal_dim();
  RingLimits lim = limits;
  lim.max_basis = std::max<std::size_t>(lim.max_basis, N);
  prod_ = make_ring(base_->name().empty() ? "square" : base_->name() + "_sq",
                    coeff, std::move(basis), raw, dim, lim, policy);
}

Element SquareRing::tensor(const Element& a, const Element& b) const {
  if (a.ring() != base_ || b.ring() != base_)
    throw ComputeError("tensor factors must come from the base ring");
  Coords out;
  for (const auto& [i, ci] : a.coords())
    for (const auto& [j, cj] : b.coords()) {
      const Scalar v = ci * cj;
      if (!v.is_zero()) out.emplace(flat(i, j), v);
    }
  return Element::make(prod_, std::move(out));
}

Element SquareRing::diagonal(const Element& e) const {
  if (e.ring() != prod_)
    throw ComputeError("diagonal expects an element of the square");
  Coords acc;
  for (const auto& [f, c] : e.coords()) {
    const auto [i, j] = unflat(f);
    for (const auto& [r, cr] : base_->basis_product(i, j)) {
      const Scalar v = cr * c;
      auto it = acc.find(r);
      if (it == acc.end()) {
        if (!v.is_zero()) acc.emplace(r, v);
      } else {
        it->second = it->second + v;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }
  return Element::make(base_, std::move(acc));
}

Element SquareRing::zero_divisor(const Element& u) const {
  if (u.ring() != base_)
    throw ComputeError("zero_divisor expects an element of the base ring");
  const auto deg = u.homogeneous_degree();
  if (!deg || *deg <= 0)
    throw ComputeError(
        "zero_divisor needs a homogeneous element of positive degree");
  Coords out;
  for (const auto& [i, c] : u.coords()) {
    out.emplace(flat(i, 0), c);   // u (x) 1
    out.emplace(flat(0, i), -c);  // - 1 (x) u
  }
  return Element::make(prod_, std::move(out));
}

std::vector<Element> SquareRing::zero_divisor_generators() const {
  std::vector<Element> out;
  for (int i = 1; i < n_; ++i)
    out.push_back(zero_divisor(Element::basis(base_, i)));
  return out;
}

}  // namespace tc

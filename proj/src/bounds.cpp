#include "tc/bounds.hpp"

#include <algorithm>

#include "tc/errors.hpp"

namespace tc {

namespace {

struct Entry {
  std::vector<int> factors;  // nondecreasing generator indices
  Element value;
  int deg = 0;
};

// One frontier step: extend every nonzero k-fold product by generators
// >= its last factor, keeping lexicographic order (children inherit the
// parent's position, then ascend).  Products whose degree would exceed the
// largest basis degree are zero and are pruned without multiplying.
std::vector<Entry> extend(const std::vector<Entry>& frontier,
                          const std::vector<Element>& gens,
                          const std::vector<int>& gdeg, int maxdeg,
                          Exec policy) {
  std::vector<std::vector<Entry>> buckets(frontier.size());
  for_each_index(policy, static_cast<std::ptrdiff_t>(frontier.size()),
                 [&](std::ptrdiff_t t) {
                   const Entry& e = frontier[t];
                   for (int g = e.factors.back();
                        g < static_cast<int>(gens.size()); ++g) {
                     if (e.deg + gdeg[g] > maxdeg) continue;
                     Element v = e.value * gens[g];
                     if (v.is_zero()) continue;
                     Entry child{e.factors, std::move(v), e.deg + gdeg[g]};
                     child.factors.push_back(g);
                     buckets[t].push_back(std::move(child));
                   }
                 });
  std::vector<Entry> out;
  for (auto& b : buckets)
    for (auto& e : b) out.push_back(std::move(e));
  return out;
}

Witness to_witness(const Entry& e, const std::vector<std::string>& names) {
  Witness w;
  w.factor_indices = e.factors;
  for (int g : e.factors) w.factors.push_back(names[g]);
  w.product = e.value;
  return w;
}

std::vector<Entry> seed(const std::vector<Element>& gens) {
  std::vector<Entry> frontier;
  for (int i = 0; i < static_cast<int>(gens.size()); ++i)
    if (!gens[i].is_zero())
      frontier.push_back({{i}, gens[i], *gens[i].homogeneous_degree()});
  return frontier;
}

// Least k such that every k-fold product of gens vanishes, plus the
// lexicographically first nonzero (k-1)-fold product as certificate.
//
// Ranging over generator multisets is enough: a k-fold product of
// arbitrary ideal elements expands by bilinearity and graded commutativity
// into ring multiples of pure generator products, so all of the former
// vanish exactly when all of the latter do.  A nonzero product has nonzero
// prefixes, so the frontier of nonzero products reaches every certificate.
NilResult run_nil(const std::vector<Element>& gens,
                  const std::vector<std::string>& names, int maxdeg,
                  const SearchOptions& opts) {
  NilResult res;
  std::vector<Entry> frontier = seed(gens);
  std::vector<int> gdeg;
  for (const auto& g : gens)
    gdeg.push_back(g.is_zero() ? 1 : *g.homogeneous_degree());
  int k = 1;
  while (!frontier.empty()) {
    res.nil = k + 1;
    res.witness = to_witness(frontier.front(), names);
    if (k >= opts.max_k)
      throw ComputeError("no vanishing stage up to the length cap " +
                         std::to_string(opts.max_k));
    frontier = extend(frontier, gens, gdeg, maxdeg, opts.policy);
    ++k;
  }
  return res;
}

std::vector<std::string> hat_names(const SquareRing& sq) {
  std::vector<std::string> names;
  for (int i = 1; i < sq.base_size(); ++i)
    names.push_back("hat(" + sq.base()->label(i) + ")");
  return names;
}

}  // namespace

NilResult zero_divisor_nilpotency(const SquareRing& sq,
                                  const SearchOptions& opts) {
  return run_nil(sq.zero_divisor_generators(), hat_names(sq),
                 sq.product()->max_degree(), opts);
}

std::optional<Witness> find_witness(const SquareRing& sq, int k,
                                    const SearchOptions& opts) {
  if (k < 1) throw ComputeError("witness length must be at least 1");
  const auto gens = sq.zero_divisor_generators();
  const auto names = hat_names(sq);
  std::vector<int> gdeg;
  for (const auto& g : gens)
    gdeg.push_back(g.is_zero() ? 1 : *g.homogeneous_degree());
  std::vector<Entry> frontier = seed(gens);
  for (int stage = 1; stage < k && !frontier.empty(); ++stage)
    frontier = extend(frontier, gens, gdeg, sq.product()->max_degree(),
                      opts.policy);
  if (frontier.empty()) return std::nullopt;
  return to_witness(frontier.front(), names);
}

NilResult cuplength_nilpotency(const RingPtr& ring, const SearchOptions& opts) {
  if (!ring) throw ComputeError("null ring");
  std::vector<Element> gens;
  std::vector<std::string> names;
  for (int i = 1; i < ring->size(); ++i) {
    gens.push_back(Element::basis(ring, i));
    names.push_back(ring->label(i));
  }
  return run_nil(gens, names, ring->max_degree(), opts);
}

namespace {

// Reduced row space over a field; add() returns whether the row enlarged it.
class RowSpace {
 public:
  explicit RowSpace(int cols) : cols_(cols) {}

  bool add(std::vector<Scalar> r) {
    for (std::size_t t = 0; t < rows_.size(); ++t) {
      const int pc = pivots_[t];
      if (r[pc].is_zero()) continue;
      const Scalar f = r[pc];
      for (int j = 0; j < cols_; ++j) r[j] = r[j] - f * rows_[t][j];
    }
    int pc = -1;
    for (int j = 0; j < cols_; ++j)
      if (!r[j].is_zero()) {
        pc = j;
        break;
      }
    if (pc < 0) return false;
    const Scalar inv = r[pc].inverse();
    for (int j = pc; j < cols_; ++j) r[j] = r[j] * inv;
    rows_.push_back(std::move(r));
    pivots_.push_back(pc);
    return true;
  }

  const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }

 private:
  int cols_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<int> pivots_;
};

}  // namespace

int nilpotency_oracle(const SquareRing& sq) {
  const RingPtr& P = sq.product();
  if (!P->coeff().is_field())
    throw ComputeError("nilpotency_oracle needs field coefficients");
  const int N = P->size();
  const auto gens = sq.zero_divisor_generators();

  auto dense = [&](const Element& e) {
    std::vector<Scalar> row(N, Scalar::zero(P->coeff()));
    for (const auto& [i, c] : e.coords()) row[i] = c;
    return row;
  };
  auto to_element = [&](const std::vector<Scalar>& row) {
    Coords c;
    for (int i = 0; i < N; ++i)
      if (!row[i].is_zero()) c.emplace(i, row[i]);
    return Element::make(P, std::move(c));
  };

  // I^1 = span{ x * hat(u) : x basis element, u generator }, since the
  // zero-divisor ideal is generated by the hats.  Because each power I^j
  // is itself an ideal, I^(j+1) = span{ w * hat(u) : w row basis of I^j }.
  RowSpace space(N);
  for (int x = 0; x < N; ++x)
    for (const auto& g : gens) {
      Element w = Element::basis(P, x) * g;
      if (!w.is_zero()) space.add(dense(w));
    }

  int j = 1;
  const int guard = P->max_degree() + 2;
  while (!space.empty()) {
    if (j > guard) throw ComputeError("ideal powers failed to vanish");
    RowSpace next(N);
    for (const auto& row : space.rows())
      for (const auto& g : gens) {
        Element w = to_element(row) * g;
        if (!w.is_zero()) next.add(dense(w));
      }
    space = std::move(next);
    ++j;
  }
  return j;
}

BoundReport tc_lower_bound(const RingPtr& ring, const SearchOptions& opts) {
  if (!ring) throw ComputeError("null ring");
  SquareRing sq(ring, opts.limits, opts.policy);
  NilResult z = zero_divisor_nilpotency(sq, opts);
  NilResult c = cuplength_nilpotency(ring, opts);
  if (ring->formal_dim() && z.nil > 2 * *ring->formal_dim() + 1)
    throw ComputeError("nilpotency exceeded the dimension bound");
  BoundReport rep;
  rep.ring_name = ring->name();
  rep.coeff = ring->coeff();
  rep.zcl = z.nil;
  rep.tc_lower_bound = z.nil;
  rep.cup_nil = c.nil;
  rep.cat_lower_bound = c.nil;
  rep.zcl_witness = std::move(z.witness);
  rep.cup_witness = std::move(c.witness);
  return rep;
}

}  // namespace tc

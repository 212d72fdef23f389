// SPDX-License-Identifier: Apache-2.0
#include "gkdim/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace gkdim::gb {

namespace {

std::int64_t total_deg(const Expvec& e) {
  return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

bool grlex_less_block(const Expvec& a, const Expvec& b, const std::vector<bool>& mask,
                      bool in_mask) {
  std::int64_t da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (mask[i] == in_mask) {
      da += a[i];
      db += b[i];
    }
  }
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (mask[i] != in_mask) continue;
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool divides(const Expvec& a, const Expvec& b) {  // a | b
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Expvec exp_sub(const Expvec& a, const Expvec& b) {
  Expvec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Expvec exp_lcm(const Expvec& a, const Expvec& b) {
  Expvec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool exp_disjoint(const Expvec& a, const Expvec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

}  // namespace

bool ElimOrder::less(const Expvec& a, const Expvec& b) const {
  if (grlex_less_block(a, b, eliminated, true)) return true;
  if (grlex_less_block(b, a, eliminated, true)) return false;
  return grlex_less_block(a, b, eliminated, false);
}

void GBPoly::add_term(const Expvec& e, const Scalar& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw Error(ErrorKind::Internal, "exponent length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int GBPoly::total_degree() const {
  std::int64_t d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_deg(e));
  return static_cast<int>(d);
}

const Expvec& GBPoly::leading_monomial(const ElimOrder& order) const {
  if (terms_.empty()) throw Error(ErrorKind::Internal, "leading monomial of zero");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return best->first;
}

const Scalar& GBPoly::coeff_at(const Expvec& e) const { return terms_.at(e); }

GBPoly GBPoly::scaled(const Scalar& c) const {
  GBPoly r(nvars_, field_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

void GBPoly::add_scaled_shifted(const GBPoly& q, const Expvec& shift, const Scalar& c) {
  Expvec e(nvars_);
  for (const auto& [eq, v] : q.terms_) {
    for (int i = 0; i < nvars_; ++i) e[i] = eq[i] + shift[i];
    add_term(e, v * c);
  }
}

GBPoly normal_form(GBPoly p, const std::vector<GBPoly>& basis, const ElimOrder& order) {
  GBPoly rem(p.nvars(), p.field());
  while (!p.is_zero()) {
    const Expvec lt = p.leading_monomial(order);
    const Scalar lc = p.coeff_at(lt);
    bool reduced = false;
    for (const GBPoly& g : basis) {
      if (g.is_zero()) continue;
      const Expvec& lg = g.leading_monomial(order);
      if (!divides(lg, lt)) continue;
      // g is monic: p -= lc * X^(lt-lg) * g
      p.add_scaled_shifted(g, exp_sub(lt, lg), -lc);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(lt, lc);
      p.add_term(lt, -lc);
    }
  }
  return rem;
}

std::vector<GBPoly> buchberger(std::vector<GBPoly> gens, const ElimOrder& order,
                               int degree_cap) {
  std::vector<GBPoly> basis;
  for (GBPoly& g : gens) {
    if (g.is_zero()) continue;
    if (g.total_degree() > degree_cap)
      throw Error(ErrorKind::ResourceLimit, "generator exceeds Groebner degree cap");
    basis.push_back(g.scaled(g.coeff_at(g.leading_monomial(order)).inverse()));
  }

  // Pair queue keyed by (lcm degree, i, j) for a deterministic normal
  // selection strategy.
  using PairKey = std::tuple<std::int64_t, std::size_t, std::size_t>;
  std::set<PairKey> pairs;
  auto push_pairs_for = [&](std::size_t j) {
    const Expvec& lj = basis[j].leading_monomial(order);
    for (std::size_t i = 0; i < j; ++i) {
      const Expvec& li = basis[i].leading_monomial(order);
      pairs.emplace(total_deg(exp_lcm(li, lj)), i, j);
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) push_pairs_for(j);

  while (!pairs.empty()) {
    auto [deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    const Expvec& li = basis[i].leading_monomial(order);
    const Expvec& lj = basis[j].leading_monomial(order);
    if (exp_disjoint(li, lj)) continue;  // product criterion
    if (deg > degree_cap)
      throw Error(ErrorKind::ResourceLimit,
                  "S-pair degree " + std::to_string(deg) + " exceeds Groebner cap " +
                      std::to_string(degree_cap));

    const Expvec lcm = exp_lcm(li, lj);
    GBPoly s(basis[i].nvars(), basis[i].field());
    s.add_scaled_shifted(basis[i], exp_sub(lcm, li), Scalar::one(basis[i].field()));
    s.add_scaled_shifted(basis[j], exp_sub(lcm, lj), -Scalar::one(basis[j].field()));

    GBPoly r = normal_form(std::move(s), basis, order);
    if (r.is_zero()) continue;
    if (r.total_degree() > degree_cap)
      throw Error(ErrorKind::ResourceLimit, "reduction exceeds Groebner degree cap");
    basis.push_back(r.scaled(r.coeff_at(r.leading_monomial(order)).inverse()));
    push_pairs_for(basis.size() - 1);
  }

  // Minimize: drop elements whose leading monomial is divisible by another
  // retained leading monomial.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!keep[i]) continue;
    const Expvec& li = basis[i].leading_monomial(order);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      const Expvec& lj = basis[j].leading_monomial(order);
      if (divides(lj, li) && !(li == lj && j > i)) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<GBPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(basis[i]));

  // Inter-reduce to the reduced basis and sort for canonical output.
  std::vector<GBPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<GBPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    GBPoly r = normal_form(minimal[i], others, order);
    if (!r.is_zero())
      reduced.push_back(r.scaled(r.coeff_at(r.leading_monomial(order)).inverse()));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const GBPoly& a, const GBPoly& b) {
    return order.less(a.leading_monomial(order), b.leading_monomial(order));
  });
  return reduced;
}

}  // namespace gkdim::gb

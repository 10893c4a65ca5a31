#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tpolar/errors.hpp"
#include "tpolar/monomial.hpp"
#include "tpolar/polynomial.hpp"

namespace tpolar {

/// Ideal given by generators. Zero generators are dropped, so an empty
/// generator list is the zero ideal.
class Ideal {
 public:
  Ideal(PrimeField field, std::size_t arity, std::vector<Polynomial> generators = {})
      : field_(field), arity_(arity) {
    for (auto& g : generators) add(std::move(g));
  }

  explicit Ideal(std::vector<Polynomial> generators)
      : field_(require_nonempty(generators).field()), arity_(generators.front().arity()) {
    for (auto& g : generators) add(std::move(g));
  }

  void add(Polynomial g) {
    if (g.arity() != arity_ || !(g.field() == field_)) throw PreconditionError("generator ring mismatch");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return arity_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  bool is_zero() const noexcept { return generators_.empty(); }

  bool is_homogeneous() const noexcept {
    return std::all_of(generators_.begin(), generators_.end(),
                       [](const Polynomial& g) { return g.is_homogeneous(); });
  }

  Ideal with_arity(std::size_t arity) const {
    Ideal r(field_, arity);
    for (const auto& g : generators_) r.add(g.with_arity(arity));
    return r;
  }

 private:
  static const Polynomial& require_nonempty(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw PreconditionError("ideal from an empty generator list needs an explicit ring");
    return gens.front();
  }

  PrimeField field_;
  std::size_t arity_;
  std::vector<Polynomial> generators_;
};

/// Reduced Groebner basis: monic elements sorted by increasing leading
/// monomial under `order`.
struct GroebnerBasis {
  MonomialOrder order;
  PrimeField field;
  std::size_t arity;
  std::vector<Polynomial> elements;

  bool is_unit() const noexcept {
    return elements.size() == 1 && elements.front().is_constant() && !elements.front().is_zero();
  }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(elements.size());
    for (const auto& e : elements) out.push_back(e.leading_term(order).m);
    return out;
  }

  Ideal ideal() const { return Ideal(field, arity, elements); }
};

namespace detail {

using TermVec = std::vector<Term>;

inline TermVec sorted_terms(const Polynomial& f, const MonomialOrder& order) {
  TermVec t = f.terms();
  if (order.kind() != MonomialOrder::Kind::GradedReverseLex) {
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.compare(a.m, b.m) > 0; });
  }
  return t;
}

/// p[from..] - c * m * g[1..], merged in `order`. The leading term of g
/// times m is assumed to cancel p[from - 1].
inline TermVec subtract_multiple(const TermVec& p, std::size_t from, Residue c, const Monomial& m,
                                 const TermVec& g, const MonomialOrder& order, const PrimeField& F) {
  TermVec out;
  out.reserve(p.size() - from + g.size());
  std::size_t i = from, j = 1;
  const Residue nc = F.neg(c);
  while (i < p.size() && j < g.size()) {
    Monomial gm = g[j].m * m;
    int cmp = order.compare(p[i].m, gm);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, F.mul(nc, g[j].c)});
      ++j;
    } else {
      Residue v = F.add(p[i].c, F.mul(nc, g[j].c));
      if (v) out.push_back({gm, v});
      ++i;
      ++j;
    }
  }
  for (; i < p.size(); ++i) out.push_back(p[i]);
  for (; j < g.size(); ++j) out.push_back({g[j].m * m, F.mul(nc, g[j].c)});
  return out;
}

struct Reducer {
  const TermVec* terms;
  Monomial lead;
  std::uint32_t mask;
  int sugar;
};

/// Full reduction of p modulo monic reducers. Updates `sugar` if non-null.
inline TermVec reduce_full(TermVec p, const std::vector<Reducer>& reducers, const MonomialOrder& order,
                           const PrimeField& F, int* sugar = nullptr, bool top_only = false) {
  TermVec result;
  std::size_t pos = 0;
  while (pos < p.size()) {
    const Term lt = p[pos];
    const std::uint32_t lt_mask = lt.m.support_mask();
    const Reducer* hit = nullptr;
    for (const auto& r : reducers) {
      if ((r.mask & ~lt_mask) == 0 && r.lead.divides(lt.m)) {
        hit = &r;
        break;
      }
    }
    if (!hit) {
      if (top_only) {
        result.insert(result.end(), p.begin() + static_cast<std::ptrdiff_t>(pos), p.end());
        return result;
      }
      result.push_back(lt);
      ++pos;
      continue;
    }
    Monomial m = lt.m / hit->lead;
    if (sugar) *sugar = std::max(*sugar, hit->sugar + m.degree());
    p = subtract_multiple(p, pos + 1, lt.c, m, *hit->terms, order, F);
    pos = 0;
  }
  return result;
}

inline void make_monic(TermVec& t, const PrimeField& F) {
  if (t.empty() || t.front().c == 1) return;
  Residue inv = F.inv(t.front().c);
  for (auto& x : t) x.c = F.mul(x.c, inv);
}

inline Polynomial to_polynomial(TermVec t, const PrimeField& F, std::size_t arity) {
  return Polynomial::from_terms(F, arity, std::move(t));
}

inline int max_term_degree(const TermVec& t) {
  int d = 0;
  for (const auto& x : t) d = std::max(d, x.m.degree());
  return d;
}

/// Buchberger's algorithm with the Gebauer-Moeller installation of the
/// product and chain criteria; pairs are selected by lowest sugar degree,
/// ties broken by the smaller lcm.
class BuchbergerEngine {
 public:
  BuchbergerEngine(const MonomialOrder& order, const PrimeField& field) : order_(order), F_(field) {}

  /// Returns false once the unit ideal is detected.
  bool add_generator(TermVec p) {
    int sugar = max_term_degree(p);
    return insert(reduce_full(std::move(p), reducers(), order_, F_, &sugar), sugar);
  }

  bool run() {
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        return order_.compare(a.lcm, b.lcm) < 0;
      });
      Pair pr = *best;
      *best = pairs_.back();
      pairs_.pop_back();
      int sugar = pr.sugar;
      TermVec s = s_polynomial(pr.i, pr.j);
      if (!insert(reduce_full(std::move(s), reducers(), order_, F_, &sugar), sugar)) return false;
    }
    return true;
  }

  /// Reduced basis, sorted by increasing leading monomial.
  std::vector<TermVec> reduced_basis() const {
    std::vector<std::size_t> act;
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (elems_[i].active) act.push_back(i);
    std::sort(act.begin(), act.end(), [&](std::size_t a, std::size_t b) {
      return order_.compare(elems_[a].lead, elems_[b].lead) < 0;
    });
    std::vector<TermVec> out;
    out.reserve(act.size());
    for (std::size_t k = 0; k < act.size(); ++k) {
      std::vector<Reducer> others;
      for (std::size_t l = 0; l < act.size(); ++l) {
        if (l == k) continue;
        const auto& e = elems_[act[l]];
        others.push_back({&e.terms, e.lead, e.mask, e.sugar});
      }
      const auto& e = elems_[act[k]];
      TermVec tail(e.terms.begin() + 1, e.terms.end());
      TermVec red = reduce_full(std::move(tail), others, order_, F_);
      red.insert(red.begin(), e.terms.front());
      out.push_back(std::move(red));
    }
    return out;
  }

 private:
  struct Elem {
    TermVec terms;
    Monomial lead;
    std::uint32_t mask;
    int sugar;
    bool active;
  };
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int sugar;
  };

  std::vector<Reducer> reducers() const {
    std::vector<Reducer> out;
    for (const auto& e : elems_)
      if (e.active) out.push_back({&e.terms, e.lead, e.mask, e.sugar});
    return out;
  }

  TermVec s_polynomial(std::size_t i, std::size_t j) const {
    const auto& a = elems_[i];
    const auto& b = elems_[j];
    Monomial l = lcm(a.lead, b.lead);
    Monomial ma = l / a.lead, mb = l / b.lead;
    TermVec pa;
    pa.reserve(a.terms.size());
    for (std::size_t k = 1; k < a.terms.size(); ++k) pa.push_back({a.terms[k].m * ma, a.terms[k].c});
    // pa - 1 * mb * b (the leading terms cancel).
    TermVec shifted;
    shifted.reserve(pa.size() + 1);
    shifted.push_back({l, 1});
    shifted.insert(shifted.end(), pa.begin(), pa.end());
    return subtract_multiple(shifted, 1, 1, mb, b.terms, order_, F_);
  }

  int pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    const int dl = l.degree();
    return std::max(elems_[i].sugar + dl - elems_[i].lead.degree(), elems_[j].sugar + dl - elems_[j].lead.degree());
  }

  bool insert(TermVec h, int sugar) {
    if (h.empty()) return true;
    make_monic(h, F_);
    const Monomial lead = h.front().m;
    if (lead.is_one()) {
      unit_ = true;
      elems_.clear();
      pairs_.clear();
      elems_.push_back({std::move(h), lead, 0, 0, true});
      return false;
    }
    const std::size_t hi = elems_.size();
    elems_.push_back({std::move(h), lead, lead.support_mask(), sugar, false});

    // Gebauer-Moeller update.
    std::vector<Pair> cand;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!elems_[g].active) continue;
      Monomial l = lcm(elems_[g].lead, lead);
      cand.push_back({g, hi, l, pair_sugar(g, hi, l)});
    }
    std::vector<Pair> kept;
    for (std::size_t c = 0; c < cand.size(); ++c) {
      const Pair& p = cand[c];
      bool keep = coprime(elems_[p.i].lead, lead);
      if (!keep) {
        keep = true;
        for (std::size_t d = c + 1; d < cand.size() && keep; ++d)
          if (cand[d].lcm.divides(p.lcm)) keep = false;
        for (std::size_t d = 0; d < kept.size() && keep; ++d)
          if (kept[d].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }
    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (const auto& p : pairs_) {
      bool drop = lead.divides(p.lcm) && !(lcm(elems_[p.i].lead, lead) == p.lcm) &&
                  !(lcm(elems_[p.j].lead, lead) == p.lcm);
      if (!drop) next.push_back(p);
    }
    for (const auto& p : kept)
      if (!coprime(elems_[p.i].lead, lead)) next.push_back(p);
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < hi; ++g)
      if (elems_[g].active && lead.divides(elems_[g].lead)) elems_[g].active = false;
    elems_[hi].active = true;
    return true;
  }

  MonomialOrder order_;
  PrimeField F_;
  std::vector<Elem> elems_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
};

}  // namespace detail

/// Reduced Groebner basis of `ideal` under `order`. The zero ideal has an
/// empty basis; the unit ideal has basis {1}.
inline GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order) {
  const auto& F = ideal.field();
  GroebnerBasis gb{order, F, ideal.arity(), {}};
  detail::BuchbergerEngine engine(order, F);
  bool ok = true;
  for (const auto& g : ideal.generators()) {
    if (!engine.add_generator(detail::sorted_terms(g, order))) {
      ok = false;
      break;
    }
  }
  if (ok) ok = engine.run();
  if (!ok) {
    gb.elements.push_back(Polynomial::constant(F, ideal.arity(), 1));
    return gb;
  }
  for (auto& t : engine.reduced_basis()) gb.elements.push_back(detail::to_polynomial(std::move(t), F, ideal.arity()));
  return gb;
}

/// Remainder of f on full reduction by the basis elements.
inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (f.arity() != gb.arity) throw PreconditionError("normal form: arity mismatch");
  std::vector<detail::TermVec> sorted;
  sorted.reserve(gb.elements.size());
  for (const auto& e : gb.elements) {
    sorted.push_back(detail::sorted_terms(e, gb.order));
    detail::make_monic(sorted.back(), gb.field);
  }
  std::vector<detail::Reducer> reducers;
  for (const auto& t : sorted) reducers.push_back({&t, t.front().m, t.front().m.support_mask(), 0});
  return detail::to_polynomial(detail::reduce_full(detail::sorted_terms(f, gb.order), reducers, gb.order, gb.field),
                               gb.field, gb.arity);
}

inline bool ideal_contains(const GroebnerBasis& gb, const Polynomial& f) { return normal_form(f, gb).is_zero(); }

/// Whether every S-polynomial of the elements reduces to zero.
inline bool is_groebner_basis(const GroebnerBasis& gb) {
  const auto& F = gb.field;
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
      Term a = gb.elements[i].leading_term(gb.order);
      Term b = gb.elements[j].leading_term(gb.order);
      Monomial l = lcm(a.m, b.m);
      Polynomial s = gb.elements[i].multiply_monomial(l / a.m, F.inv(a.c)) -
                     gb.elements[j].multiply_monomial(l / b.m, F.inv(b.c));
      if (!normal_form(s, gb).is_zero()) return false;
    }
  }
  return true;
}

/// Whether no term of any element is divisible by another element's leading monomial.
inline bool is_reduced(const GroebnerBasis& gb) {
  auto leads = gb.leading_monomials();
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    if (gb.elements[i].leading_term(gb.order).c != 1) return false;
    for (const auto& t : gb.elements[i].terms())
      for (std::size_t j = 0; j < leads.size(); ++j)
        if (j != i && leads[j].divides(t.m)) return false;
  }
  return true;
}

/// Generators of I intersected with the subring free of the variables in
/// `drop_mask`. The result keeps the ring arity.
inline Ideal eliminate(const Ideal& ideal, std::uint32_t drop_mask) {
  const std::uint32_t all = static_cast<std::uint32_t>((1ULL << ideal.arity()) - 1);
  if ((drop_mask & ~all) != 0 || (drop_mask & all) == all) {
    throw PreconditionError("eliminate: dropped variables must be a proper subset of the ring variables");
  }
  GroebnerBasis gb = buchberger(ideal, MonomialOrder::elimination(drop_mask));
  Ideal out(ideal.field(), ideal.arity());
  for (const auto& e : gb.elements)
    if ((e.variable_mask() & drop_mask) == 0) out.add(e);
  return out;
}

inline Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop) {
  std::uint32_t mask = 0;
  for (auto v : drop) {
    if (v >= ideal.arity()) throw PreconditionError("eliminate: variable index out of range");
    mask |= 1u << v;
  }
  return eliminate(ideal, mask);
}

/// I : g^infinity, via an auxiliary variable t, the extra generator 1 - t*g,
/// and elimination of t.
inline Ideal saturate(const Ideal& ideal, const Polynomial& g) {
  if (g.is_zero()) throw PreconditionError("saturation by zero");
  if (g.arity() != ideal.arity()) throw PreconditionError("saturate: arity mismatch");
  const std::size_t n = ideal.arity();
  if (g.is_constant()) return ideal;
  if (ideal.is_zero()) return ideal;
  if (n + 1 > kMaxVars) throw PreconditionError("saturate: no room for an auxiliary variable");
  const auto& F = ideal.field();
  Ideal ext = ideal.with_arity(n + 1);
  Polynomial t = Polynomial::variable(F, n + 1, n);
  ext.add(Polynomial::constant(F, n + 1, 1) - t * g.with_arity(n + 1));
  Ideal elim = eliminate(ext, 1u << n);
  return elim.with_arity(n);
}

/// I intersect J, via t*I + (1-t)*J and elimination of t.
inline Ideal intersect(const Ideal& a, const Ideal& b) {
  if (a.arity() != b.arity() || !(a.field() == b.field())) throw PreconditionError("intersect: ring mismatch");
  const std::size_t n = a.arity();
  if (a.is_zero() || b.is_zero()) return Ideal(a.field(), n);
  if (n + 1 > kMaxVars) throw PreconditionError("intersect: no room for an auxiliary variable");
  const auto& F = a.field();
  Polynomial t = Polynomial::variable(F, n + 1, n);
  Polynomial one_minus_t = Polynomial::constant(F, n + 1, 1) - t;
  Ideal ext(F, n + 1);
  for (const auto& g : a.generators()) ext.add(t * g.with_arity(n + 1));
  for (const auto& g : b.generators()) ext.add(one_minus_t * g.with_arity(n + 1));
  return eliminate(ext, 1u << n).with_arity(n);
}

/// Same ideal test via reduced grevlex bases.
inline bool same_ideal(const Ideal& a, const Ideal& b) {
  auto ga = buchberger(a, MonomialOrder::grevlex());
  auto gb = buchberger(b, MonomialOrder::grevlex());
  return ga.elements == gb.elements;
}

}  // namespace tpolar

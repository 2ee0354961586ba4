#include "invcurve/groebner.hpp"

#include <algorithm>
#include <sstream>

#include "invcurve/errors.hpp"

namespace invcurve {

namespace detail {

struct MTerm {
  Monomial m;
  std::uint32_t pos;
  Scalar c;
};
using SVec = std::vector<MTerm>;

struct GbData {
  ModuleOrder order;
  std::size_t rank = 0;
  FieldSpec field;
  std::vector<SVec> elems;
  std::vector<LeadingTerm> leads;
  std::vector<ModuleVector> gens;
  bool tracked = false;
  std::vector<ModuleVector> inputs;
  std::vector<std::vector<Polynomial>> transform;
};

}  // namespace detail

using detail::MTerm;
using detail::SVec;

// ---------------------------------------------------------------------------
// ModuleVector

ModuleVector ModuleVector::zero(std::size_t rank, const FieldSpec& field) {
  return ModuleVector(std::vector<Polynomial>(rank, Polynomial(field)));
}

OneForm ModuleVector::to_form() const {
  if (rank() != 2) throw RankMismatch("a one-form needs a rank-2 vector");
  return OneForm(components[0], components[1]);
}

bool ModuleVector::is_zero() const noexcept {
  return std::all_of(components.begin(), components.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

FieldSpec ModuleVector::field() const {
  FieldSpec f;
  for (const auto& p : components) f = common_field(f, p.field());
  return f;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  if (rank() != o.rank()) throw RankMismatch("adding vectors of different rank");
  for (std::size_t k = 0; k < rank(); ++k) components[k] += o.components[k];
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
  if (rank() != o.rank()) throw RankMismatch("subtracting vectors of different rank");
  for (std::size_t k = 0; k < rank(); ++k) components[k] -= o.components[k];
  return *this;
}

ModuleVector operator*(const Polynomial& c, const ModuleVector& v) {
  ModuleVector r = v;
  for (auto& p : r.components) p = c * p;
  return r;
}

std::string ModuleVector::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < components.size(); ++k) {
    if (k) s += ", ";
    s += components[k].to_string();
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// Sparse module arithmetic

namespace {

struct TermOrder {
  const ModuleOrder* ord;
  bool operator()(const MTerm& a, const MTerm& b) const {
    return ord->compare(a.m, a.pos, b.m, b.pos) > 0;
  }
};

SVec to_svec(const ModuleVector& v, const ModuleOrder& ord, const FieldSpec& field) {
  SVec out;
  for (std::size_t k = 0; k < v.components.size(); ++k)
    for (const auto& t : v.components[k].terms())
      out.push_back({t.m, static_cast<std::uint32_t>(k), t.c.in(field)});
  std::sort(out.begin(), out.end(), TermOrder{&ord});
  return out;
}

ModuleVector to_module(const SVec& v, std::size_t rank, const FieldSpec& field) {
  std::vector<std::vector<Term>> comps(rank);
  for (const auto& t : v) comps[t.pos].push_back({t.m, t.c});
  std::vector<Polynomial> out;
  out.reserve(rank);
  for (auto& c : comps) out.emplace_back(field, std::move(c));
  return ModuleVector(std::move(out));
}

SVec unit_vector(std::uint32_t pos, const FieldSpec& field) {
  return SVec{{Monomial{}, pos, Scalar::one(field)}};
}

// h[start:] - c * m * g
SVec axpy(const SVec& h, std::size_t start, const Scalar& c, const Monomial& m, const SVec& g,
          const ModuleOrder& ord) {
  SVec out;
  out.reserve(h.size() - start + g.size());
  std::size_t a = start, b = 0;
  while (a < h.size() && b < g.size()) {
    Monomial gm = g[b].m * m;
    int cmp = ord.compare(h[a].m, h[a].pos, gm, g[b].pos);
    if (cmp > 0) {
      out.push_back(h[a++]);
    } else if (cmp < 0) {
      out.push_back({gm, g[b].pos, -(c * g[b].c)});
      ++b;
    } else {
      Scalar s = h[a].c - c * g[b].c;
      if (!s.is_zero()) out.push_back({gm, h[a].pos, std::move(s)});
      ++a;
      ++b;
    }
  }
  for (; a < h.size(); ++a) out.push_back(h[a]);
  for (; b < g.size(); ++b) out.push_back({g[b].m * m, g[b].pos, -(c * g[b].c)});
  return out;
}

SVec shifted(const SVec& g, const Scalar& c, const Monomial& m) {
  SVec out;
  out.reserve(g.size());
  for (const auto& t : g) out.push_back({t.m * m, t.pos, t.c * c});
  return out;
}

void scale(SVec& v, const Scalar& c) {
  for (auto& t : v) t.c *= c;
}

LeadingTerm lead_of(const SVec& v) { return {v.front().m, v.front().pos}; }

bool lead_divides(const LeadingTerm& d, const MTerm& t) {
  return d.pos == t.pos && d.m.divides(t.m);
}

// Reduces h against monic `basis` (restricted to `usable` when given).
// Optional row tracking applies the same operations to hrow using `rows`.
// Optional cofactor collection records the quotient terms per basis element.
void reduce(SVec& h, SVec* hrow, const std::vector<SVec>& basis, const std::vector<LeadingTerm>& leads,
            const std::vector<SVec>* rows, const std::vector<bool>* usable,
            std::vector<std::vector<Term>>* cofactors, bool full, const ModuleOrder& ord,
            const ModuleOrder& row_ord) {
  SVec rem;
  std::size_t start = 0;
  while (start < h.size()) {
    const MTerm& lt = h[start];
    std::size_t k = 0;
    for (; k < basis.size(); ++k) {
      if (usable && !(*usable)[k]) continue;
      if (lead_divides(leads[k], lt)) break;
    }
    if (k == basis.size()) {
      if (!full) break;
      rem.push_back(lt);
      ++start;
      continue;
    }
    Monomial m = lt.m / leads[k].m;
    Scalar c = lt.c;
    if (cofactors) (*cofactors)[k].push_back({m, c});
    if (hrow) *hrow = axpy(*hrow, 0, c, m, (*rows)[k], row_ord);
    h = axpy(h, start, c, m, basis[k], ord);
    start = 0;
  }
  if (full) {
    h = std::move(rem);
  } else if (start > 0) {
    h.erase(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(start));
  }
}

void check_ranks(const std::vector<ModuleVector>& gens) {
  if (gens.empty()) throw RankMismatch("no generators given");
  for (const auto& g : gens)
    if (g.rank() != gens.front().rank() || g.rank() == 0)
      throw RankMismatch("generators have different ranks");
}

FieldSpec common_field_of(const std::vector<ModuleVector>& gens) {
  FieldSpec f;
  for (const auto& g : gens) f = common_field(f, g.field());
  return f;
}

struct Pair {
  std::size_t i, j;  // i < j
  Monomial lcm;
  std::uint32_t pos;
};

}  // namespace

// ---------------------------------------------------------------------------
// GroebnerBasis accessors

namespace {
const detail::GbData& empty_data() {
  static const detail::GbData d;
  return d;
}
}  // namespace

#define GB_DATA (data_ ? *data_ : empty_data())

const std::vector<ModuleVector>& GroebnerBasis::generators() const { return GB_DATA.gens; }
std::vector<LeadingTerm> GroebnerBasis::leading_terms() const { return GB_DATA.leads; }
const ModuleOrder& GroebnerBasis::order() const { return GB_DATA.order; }
std::size_t GroebnerBasis::rank() const { return GB_DATA.rank; }
const FieldSpec& GroebnerBasis::field() const { return GB_DATA.field; }
bool GroebnerBasis::has_transform() const { return GB_DATA.tracked; }
const std::vector<std::vector<Polynomial>>& GroebnerBasis::transform() const {
  return GB_DATA.transform;
}
std::size_t GroebnerBasis::input_count() const { return GB_DATA.inputs.size(); }

bool GroebnerBasis::is_whole_module() const {
  const auto& d = GB_DATA;
  for (std::size_t p = 0; p < d.rank; ++p) {
    bool found = false;
    for (const auto& l : d.leads)
      if (l.pos == p && l.m == Monomial{}) found = true;
    if (!found) return false;
  }
  return true;
}

#undef GB_DATA

// ---------------------------------------------------------------------------
// Buchberger

GroebnerBasis buchberger(const std::vector<ModuleVector>& gens, const ModuleOrder& ord,
                         bool track) {
  check_ranks(gens);
  const std::size_t rank = gens.front().rank();
  const std::size_t s = gens.size();
  const FieldSpec field = common_field_of(gens);
  const bool ideal = rank == 1;
  const ModuleOrder row_ord(ord.base);

  std::vector<SVec> G, rows;
  std::vector<LeadingTerm> leads;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto update = [&](std::size_t k) {
    const LeadingTerm lk = leads[k];
    struct Cand {
      std::size_t i;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> C;
    for (std::size_t i = 0; i < k; ++i) {
      if (!active[i] || leads[i].pos != lk.pos) continue;
      C.push_back({i, Monomial::lcm(leads[i].m, lk.m), ideal && leads[i].m.coprime_with(lk.m)});
    }
    // Gebauer-Moeller: chain criterion on the new pairs
    std::vector<Cand> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Cand& p = C[a];
      bool keep = p.coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (C[b].lcm.divides(p.lcm)) keep = false;
        for (const auto& q : D)
          if (keep && q.lcm.divides(p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    // old pairs made redundant by the new leading term
    std::erase_if(pairs, [&](const Pair& p) {
      if (p.pos != lk.pos || !lk.m.divides(p.lcm)) return false;
      return Monomial::lcm(leads[p.i].m, lk.m) != p.lcm &&
             Monomial::lcm(leads[p.j].m, lk.m) != p.lcm;
    });
    // product criterion (ideals only)
    for (const auto& p : D)
      if (!p.coprime) pairs.push_back({p.i, k, p.lcm, lk.pos});
    for (std::size_t i = 0; i < k; ++i)
      if (active[i] && leads[i].pos == lk.pos && lk.m.divides(leads[i].m)) active[i] = false;
  };

  auto insert = [&](SVec h, SVec row) {
    reduce(h, track ? &row : nullptr, G, leads, &rows, &active, nullptr, true, ord, row_ord);
    if (h.empty()) return;
    Scalar inv = h.front().c.inverse();
    scale(h, inv);
    if (track) scale(row, inv);
    leads.push_back(lead_of(h));
    G.push_back(std::move(h));
    rows.push_back(std::move(row));
    active.push_back(true);
    update(G.size() - 1);
  };

  // inputs in ascending order of leading term
  std::vector<std::pair<SVec, SVec>> start;
  for (std::size_t i = 0; i < s; ++i) {
    SVec v = to_svec(gens[i], ord, field);
    if (v.empty()) continue;
    start.emplace_back(std::move(v), track ? unit_vector(static_cast<std::uint32_t>(i), field) : SVec{});
  }
  std::stable_sort(start.begin(), start.end(), [&](const auto& a, const auto& b) {
    return ord.compare(a.first.front().m, a.first.front().pos, b.first.front().m,
                       b.first.front().pos) < 0;
  });
  for (auto& [v, row] : start) insert(std::move(v), std::move(row));

  while (!pairs.empty()) {
    // normal strategy: smallest lcm first, oldest pair on ties
    auto best = pairs.begin();
    for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
      int c = ord.compare(it->lcm, it->pos, best->lcm, best->pos);
      if (c < 0 || (c == 0 && std::tie(it->j, it->i) < std::tie(best->j, best->i))) best = it;
    }
    Pair p = *best;
    pairs.erase(best);
    Monomial mi = p.lcm / leads[p.i].m, mj = p.lcm / leads[p.j].m;
    Scalar one = Scalar::one(field);
    SVec h = axpy(shifted(G[p.i], one, mi), 0, one, mj, G[p.j], ord);
    SVec row;
    if (track) row = axpy(shifted(rows[p.i], one, mi), 0, one, mj, rows[p.j], row_ord);
    insert(std::move(h), std::move(row));
  }

  // reduced basis: active elements, tails reduced by the others
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < G.size(); ++k)
    if (active[k]) keep.push_back(k);
  std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
    return ord.compare(leads[a].m, leads[a].pos, leads[b].m, leads[b].pos) < 0;
  });
  auto data = std::make_shared<detail::GbData>();
  data->order = ord;
  data->rank = rank;
  data->field = field;
  data->tracked = track;
  data->inputs = gens;
  for (std::size_t k : keep) {
    SVec tail(G[k].begin() + 1, G[k].end());
    SVec row = rows[k];
    std::vector<bool> others = active;
    others[k] = false;
    reduce(tail, track ? &row : nullptr, G, leads, &rows, &others, nullptr, true, ord, row_ord);
    SVec full{G[k].front()};
    full.insert(full.end(), tail.begin(), tail.end());
    data->leads.push_back(leads[k]);
    data->gens.push_back(to_module(full, rank, field));
    if (track) {
      ModuleVector r = to_module(row, s, field);
      data->transform.push_back(std::move(r.components));
    }
    data->elems.push_back(std::move(full));
  }
  GroebnerBasis gb;
  gb.data_ = std::move(data);
  return gb;
}

// ---------------------------------------------------------------------------
// Normal forms, membership, syzygies

struct NormalFormAccess {
  static const detail::GbData& data(const GroebnerBasis& gb) {
    static const detail::GbData empty;
    return gb.data_ ? *gb.data_ : empty;
  }
};

NormalForm normal_form(const ModuleVector& v, const GroebnerBasis& gb, bool track) {
  const auto& d = NormalFormAccess::data(gb);
  if (v.rank() != d.rank) throw RankMismatch("vector rank does not match the basis");
  FieldSpec field = common_field(d.field, v.field());
  SVec h = to_svec(v, d.order, field);
  std::vector<std::vector<Term>> cof(d.elems.size());
  reduce(h, nullptr, d.elems, d.leads, nullptr, nullptr, track ? &cof : nullptr, true, d.order,
         d.order);
  NormalForm nf;
  nf.remainder = to_module(h, d.rank, field);
  if (track)
    for (auto& c : cof) nf.cofactors.emplace_back(field, std::move(c));
  return nf;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  return normal_form(ModuleVector({p}), gb).remainder.components.front();
}

Membership membership(const ModuleVector& v, const GroebnerBasis& gb) {
  const auto& d = NormalFormAccess::data(gb);
  if (!d.tracked) throw Error("membership certificates need a tracked basis");
  NormalForm nf = normal_form(v, gb, true);
  Membership out;
  if (!nf.remainder.is_zero()) return out;
  FieldSpec field = common_field(d.field, v.field());
  out.member = true;
  out.certificate.assign(d.inputs.size(), Polynomial(field));
  for (std::size_t k = 0; k < nf.cofactors.size(); ++k) {
    if (nf.cofactors[k].is_zero()) continue;
    for (std::size_t i = 0; i < d.inputs.size(); ++i)
      out.certificate[i] += nf.cofactors[k] * d.transform[k][i];
  }
  ModuleVector check = ModuleVector::zero(v.rank(), field);
  for (std::size_t i = 0; i < d.inputs.size(); ++i) check += out.certificate[i] * d.inputs[i];
  if (!(check == v)) throw InvariantViolation("membership certificate does not recombine");
  return out;
}

Membership membership(const ModuleVector& v, const std::vector<ModuleVector>& gens,
                      const ModuleOrder& order) {
  check_ranks(gens);
  if (v.rank() != gens.front().rank()) throw RankMismatch("vector rank does not match generators");
  return membership(v, buchberger(gens, order, true));
}

std::vector<ModuleVector> syzygies(const std::vector<ModuleVector>& gens, const MonomialOrder& base) {
  check_ranks(gens);
  const std::size_t r = gens.front().rank(), s = gens.size();
  const FieldSpec field = common_field_of(gens);
  std::vector<ModuleVector> aug;
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<Polynomial> comps = gens[i].components;
    for (std::size_t k = 0; k < s; ++k)
      comps.push_back(k == i ? Polynomial::constant(Scalar::one(field)) : Polynomial(field));
    aug.emplace_back(std::move(comps));
  }
  GroebnerBasis gb = buchberger(aug, ModuleOrder(base, r), false);
  std::vector<ModuleVector> out;
  const auto leads = gb.leading_terms();
  for (std::size_t k = 0; k < gb.size(); ++k) {
    if (leads[k].pos < r) continue;
    const auto& comps = gb.generators()[k].components;
    ModuleVector syz(std::vector<Polynomial>(comps.begin() + static_cast<std::ptrdiff_t>(r), comps.end()));
    ModuleVector check = ModuleVector::zero(r, field);
    for (std::size_t i = 0; i < s; ++i) check += syz.components[i] * gens[i];
    if (!check.is_zero()) throw InvariantViolation("syzygy does not annihilate the generators");
    out.push_back(std::move(syz));
  }
  return out;
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  const auto& d = NormalFormAccess::data(gb);
  Scalar one = Scalar::one(d.field);
  for (std::size_t i = 0; i < d.elems.size(); ++i) {
    for (std::size_t j = i + 1; j < d.elems.size(); ++j) {
      if (d.leads[i].pos != d.leads[j].pos) continue;
      Monomial l = Monomial::lcm(d.leads[i].m, d.leads[j].m);
      SVec h = axpy(shifted(d.elems[i], one, l / d.leads[i].m), 0, one, l / d.leads[j].m,
                    d.elems[j], d.order);
      reduce(h, nullptr, d.elems, d.leads, nullptr, nullptr, nullptr, true, d.order, d.order);
      if (!h.empty()) return false;
    }
  }
  return true;
}

}  // namespace invcurve

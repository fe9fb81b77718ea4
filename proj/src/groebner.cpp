#include "fsing/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace fsing {

namespace {

struct Term {
  ExponentVector e;
  u64 c;
};
// Terms in strictly descending order for the active monomial order.
using Row = std::vector<Term>;

Row to_row(const Poly& f, MonomialOrder ord) {
  Row r;
  r.reserve(f.size());
  for (const auto& t : f.terms()) r.push_back({t.exp, t.coeff});
  if (ord.kind() != MonomialOrder::Kind::grevlex) {
    std::sort(r.begin(), r.end(), [&](const Term& a, const Term& b) { return ord.compare(a.e, b.e) > 0; });
  }
  return r;
}

Poly to_poly(const FpRingPtr& ring, const Row& r) {
  std::vector<Poly::Term> terms;
  terms.reserve(r.size());
  for (const auto& t : r) terms.push_back({t.e, t.c});
  return Poly::from_terms(ring, std::move(terms));
}

void make_monic(Row& r, const PrimeField& F) {
  if (r.empty() || r[0].c == 1) return;
  u64 inv = F.inv(r[0].c);
  for (auto& t : r) t.c = F.mul(t.c, inv);
}

// a - c * x^m * b, with terms of a from index `from` onwards.
Row sub_scaled(const Row& a, std::size_t from, u64 c, const ExponentVector& m, const Row& b,
               MonomialOrder ord, const PrimeField& F) {
  Row out;
  out.reserve(a.size() - from + b.size());
  std::size_t i = from, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    ExponentVector be = b[j].e + m;
    int cmp = i == a.size() ? -1 : ord.compare(a[i].e, be);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({be, F.neg(F.mul(c, b[j].c))});
      ++j;
    } else {
      u64 v = F.sub(a[i].c, F.mul(c, b[j].c));
      if (v) out.push_back({be, v});
      ++i;
      ++j;
    }
  }
  return out;
}

struct Basis {
  std::vector<Row> rows;  // monic
  const Row* reducer_for(const ExponentVector& e, std::size_t skip = SIZE_MAX) const {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == skip || rows[k].empty()) continue;
      if (rows[k][0].e.divides(e)) return &rows[k];
    }
    return nullptr;
  }
};

// Full reduction of f against the monic rows of G (ignoring row `skip`).
Row reduce_full(Row f, const Basis& G, MonomialOrder ord, const PrimeField& F,
                std::size_t skip = SIZE_MAX) {
  Row rem;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const Term lead = f[pos];
    const Row* g = G.reducer_for(lead.e, skip);
    if (!g) {
      rem.push_back(lead);
      ++pos;
      continue;
    }
    f = sub_scaled(f, pos, lead.c, lead.e - (*g)[0].e, *g, ord, F);
    pos = 0;
  }
  return rem;
}

Row s_polynomial(const Row& a, const Row& b, MonomialOrder ord, const PrimeField& F) {
  ExponentVector l = a[0].e.lcm(b[0].e);
  ExponentVector ma = l - a[0].e, mb = l - b[0].e;
  Row sa;
  sa.reserve(a.size());
  for (const auto& t : a) sa.push_back({t.e + ma, t.c});
  return sub_scaled(sa, 0, 1, mb, b, ord, F);
}

bool coprime(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

}  // namespace

IdealGens::IdealGens(FpRingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    ring_->check_compatible(*g.ring());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

IdealGens IdealGens::unit(FpRingPtr ring) {
  auto one = Poly::constant(ring, 1);
  IdealGens I(ring, {one});
  I.order_ = MonomialOrder::grevlex();
  return I;
}

std::string IdealGens::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

IdealGens groebner_basis(const IdealGens& I, MonomialOrder ord, const GroebnerLimits& limits) {
  if (I.groebner_order() == ord) return I;
  const PrimeField& F = I.ring()->domain().field;

  Basis G;
  auto add_row = [&](Row r) {
    make_monic(r, F);
    G.rows.push_back(std::move(r));
    if (G.rows.size() > limits.max_basis) throw ResourceExceeded("Groebner basis size limit");
  };

  // Monomial inputs have their minimal generators as reduced basis.
  bool all_monomial = std::all_of(I.generators().begin(), I.generators().end(),
                                  [](const Poly& g) { return g.is_monomial(); });
  if (all_monomial) {
    std::vector<ExponentVector> exps;
    for (const auto& g : I.generators()) exps.push_back(g.terms()[0].exp);
    MonomialIdeal M(I.ring()->arity(), exps);
    IdealGens out = M.to_ideal(I.ring());
    if (ord.kind() != MonomialOrder::Kind::grevlex) {
      std::sort(out.gens_.begin(), out.gens_.end(), [&](const Poly& a, const Poly& b) {
        return ord.compare(to_row(a, ord)[0].e, to_row(b, ord)[0].e) > 0;
      });
    }
    out.order_ = ord;
    return out;
  }

  for (const auto& g : I.generators()) {
    Row r = reduce_full(to_row(g, ord), G, ord, F);
    if (!r.empty()) add_row(std::move(r));
  }

  using Pair = std::pair<std::size_t, std::size_t>;
  struct Entry {
    ExponentVector lcm;
    Pair ij;
  };
  auto by_lcm = [ord](const Entry& a, const Entry& b) {
    int c = ord.compare(a.lcm, b.lcm);
    return c != 0 ? c < 0 : a.ij < b.ij;
  };
  std::set<Entry, decltype(by_lcm)> queue(by_lcm);  // normal selection strategy
  std::set<Pair> pending;
  auto push_pair = [&](std::size_t i, std::size_t j) {
    queue.insert({G.rows[i][0].e.lcm(G.rows[j][0].e), {i, j}});
    pending.insert({i, j});
  };
  for (std::size_t j = 0; j < G.rows.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

  std::size_t processed = 0;
  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!queue.empty()) {
    Entry next = *queue.begin();
    queue.erase(queue.begin());
    pending.erase(next.ij);
    auto [i, j] = next.ij;
    const ExponentVector& li = G.rows[i][0].e;
    const ExponentVector& lj = G.rows[j][0].e;
    if (coprime(li, lj)) continue;  // first criterion
    bool chain = false;             // second criterion
    for (std::size_t k = 0; k < G.rows.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (G.rows[k][0].e.divides(next.lcm) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
    }
    if (chain) continue;

    if (++processed > limits.max_pairs) throw ResourceExceeded("S-pair limit");
    Row h = reduce_full(s_polynomial(G.rows[i], G.rows[j], ord, F), G, ord, F);
    if (h.empty()) continue;
    add_row(std::move(h));
    std::size_t fresh = G.rows.size() - 1;
    if (G.rows[fresh][0].e.is_zero()) {
      G.rows = {G.rows[fresh]};
      break;
    }
    for (std::size_t k = 0; k < fresh; ++k) push_pair(k, fresh);
  }

  // minimize
  std::vector<Row> minimal;
  for (std::size_t k = 0; k < G.rows.size(); ++k) {
    const Row& r = G.rows[k];
    if (r.empty()) continue;
    bool redundant = false;
    for (std::size_t m = 0; m < G.rows.size() && !redundant; ++m) {
      if (m == k || G.rows[m].empty()) continue;
      if (G.rows[m][0].e.divides(r[0].e)) {
        // among equal leading monomials keep the first
        redundant = !(G.rows[m][0].e == r[0].e) || m < k;
      }
    }
    if (!redundant) minimal.push_back(r);
  }
  // interreduce
  Basis M{std::move(minimal)};
  for (std::size_t k = 0; k < M.rows.size(); ++k) {
    Row tail(M.rows[k].begin() + 1, M.rows[k].end());
    Row red = reduce_full(std::move(tail), M, ord, F, k);
    red.insert(red.begin(), M.rows[k][0]);
    M.rows[k] = std::move(red);
  }
  std::sort(M.rows.begin(), M.rows.end(), [&](const Row& a, const Row& b) { return ord.compare(a[0].e, b[0].e) > 0; });

  std::vector<Poly> gens;
  for (const auto& r : M.rows) gens.push_back(to_poly(I.ring(), r));
  IdealGens out(I.ring(), std::move(gens));
  out.order_ = ord;
  return out;
}

Poly normal_form(const Poly& f, const IdealGens& I) {
  I.ring()->check_compatible(*f.ring());
  IdealGens G = I.groebner_order() ? I : groebner_basis(I);
  MonomialOrder ord = *G.groebner_order();
  Basis B;
  for (const auto& g : G.generators()) B.rows.push_back(to_row(g, ord));
  return to_poly(f.ring(), reduce_full(to_row(f, ord), B, ord, f.domain().field));
}

bool ideal_member(const Poly& f, const IdealGens& I) {
  if (f.is_zero()) return true;
  if (I.is_zero()) return false;
  return normal_form(f, I).is_zero();
}

bool ideal_contained(const IdealGens& I, const IdealGens& J) {
  I.ring()->check_compatible(*J.ring());
  if (I.is_zero()) return true;
  if (J.is_zero()) return false;
  IdealGens G = J.groebner_order() ? J : groebner_basis(J);
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [&](const Poly& g) { return normal_form(g, G).is_zero(); });
}

bool ideal_equal(const IdealGens& I, const IdealGens& J) {
  return ideal_contained(I, J) && ideal_contained(J, I);
}

bool is_unit_ideal(const IdealGens& I) {
  if (I.is_zero()) return false;
  for (const auto& g : I.generators())
    if (g.is_constant()) return true;
  IdealGens G = groebner_basis(I);
  return G.size() == 1 && G.generators()[0].is_constant();
}

bool inside_maximal_ideal(const IdealGens& I) {
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [](const Poly& g) { return g.constant_term() == 0; });
}

IdealGens ideal_sum(const IdealGens& I, const IdealGens& J) {
  I.ring()->check_compatible(*J.ring());
  std::vector<Poly> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return IdealGens(I.ring(), std::move(gens));
}

IdealGens ideal_product(const IdealGens& I, const IdealGens& J) {
  I.ring()->check_compatible(*J.ring());
  std::vector<Poly> gens;
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) gens.push_back(a * b);
  return IdealGens(I.ring(), std::move(gens));
}

IdealGens ideal_scale(const Poly& f, const IdealGens& I) {
  std::vector<Poly> gens;
  for (const auto& g : I.generators()) gens.push_back(f * g);
  return IdealGens(I.ring(), std::move(gens));
}

// ---------------------------------------------------------------------------
// MonomialIdeal

MonomialIdeal::MonomialIdeal(std::size_t arity, std::vector<ExponentVector> gens) : arity_(arity) {
  for (const auto& g : gens)
    if (g.arity() != arity) throw ArityMismatch("monomial generator arity differs");
  std::sort(gens.begin(), gens.end(),
            [](const ExponentVector& a, const ExponentVector& b) { return compare_grevlex(a, b) < 0; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // ascending degree: a generator can only be divided by earlier ones
  for (const auto& g : gens) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& h) { return h.divides(g); });
    if (!redundant) gens_.push_back(g);
  }
  std::reverse(gens_.begin(), gens_.end());
}

MonomialIdeal MonomialIdeal::unit(std::size_t arity) { return MonomialIdeal(arity, {ExponentVector(arity)}); }

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_[0].is_zero(); }

bool MonomialIdeal::contains(const ExponentVector& u) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& g) { return g.divides(u); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const ExponentVector& g) { return contains(g); });
}

MonomialIdeal MonomialIdeal::operator*(const MonomialIdeal& o) const {
  std::vector<ExponentVector> prod;
  for (const auto& a : gens_)
    for (const auto& b : o.gens_) prod.push_back(a + b);
  return MonomialIdeal(arity_, std::move(prod));
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& o) const {
  std::vector<ExponentVector> all = gens_;
  all.insert(all.end(), o.gens_.begin(), o.gens_.end());
  return MonomialIdeal(arity_, std::move(all));
}

MonomialIdeal MonomialIdeal::power(unsigned k) const {
  MonomialIdeal r = unit(arity_);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

IdealGens MonomialIdeal::to_ideal(const FpRingPtr& ring) const {
  if (ring->arity() != arity_) throw ArityMismatch("monomial ideal arity differs from ring");
  std::vector<Poly> gens;
  for (const auto& g : gens_) gens.push_back(Poly::monomial(ring, g, 1));
  return IdealGens(ring, std::move(gens));
}

std::string MonomialIdeal::to_string(const std::vector<std::string>& names) const {
  if (gens_.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    std::string m = render_monomial(gens_[i], names);
    s += m.empty() ? "1" : m;
  }
  return s + ")";
}

MonomialIdeal monomial_root(const MonomialIdeal& I, u64 q) {
  std::vector<ExponentVector> out;
  for (const auto& g : I.generators()) {
    ExponentVector r(I.arity());
    for (std::size_t i = 0; i < I.arity(); ++i) r[i] = static_cast<std::uint32_t>(g[i] / q);
    out.push_back(r);
  }
  return MonomialIdeal(I.arity(), std::move(out));
}

std::optional<MonomialIdeal> as_monomial(const IdealGens& I) {
  IdealGens G = I.groebner_order() == MonomialOrder::grevlex() ? I : groebner_basis(I);
  std::vector<ExponentVector> exps;
  for (const auto& g : G.generators()) {
    if (!g.is_monomial()) return std::nullopt;
    exps.push_back(g.terms()[0].exp);
  }
  return MonomialIdeal(I.ring()->arity(), std::move(exps));
}

}  // namespace fsing

#include "lk/pgroup.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lk {

PContext::PContext(std::shared_ptr<const FiniteGroup> G, const Bits &S0, int p)
    : G_(std::move(G)), p_(p) {
  elems_ = S0.members();
  if (elems_.size() > 64) throw InstanceTooLarge("Sylow subgroup larger than 64");
  if (elems_.empty() || elems_[0] != G_->identity())
    throw std::invalid_argument("p-subgroup must contain the identity");
  const std::size_t n = elems_.size();
  local_.assign(G_->order(), -1);
  for (std::size_t i = 0; i < n; ++i) local_[std::size_t(elems_[i])] = int(i);
  mul_.resize(n * n);
  inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    inv_[a] = local_[std::size_t(G_->inv(elems_[a]))];
    for (std::size_t b = 0; b < n; ++b) {
      int c = local_[std::size_t(G_->mul(elems_[a], elems_[b]))];
      if (c < 0) throw std::invalid_argument("p-subgroup is not closed");
      mul_[a * n + b] = c;
    }
  }
  cmap_.resize(G_->order() * n);
  for (std::size_t g = 0; g < G_->order(); ++g)
    for (std::size_t s = 0; s < n; ++s)
      cmap_[g * n + s] = int8_t(local_[std::size_t(G_->conj(elems_[s], int(g)))]);
  full_ = n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);

  // subgroups: cyclic ones, then joins with cyclic ones to a fixpoint
  std::vector<Mask> cyc;
  std::vector<Mask> found;
  auto add = [&](Mask m) {
    if (std::find(found.begin(), found.end(), m) == found.end()) found.push_back(m);
  };
  for (std::size_t s = 0; s < n; ++s) {
    Mask c = closure(Mask{1} << s);
    if (std::find(cyc.begin(), cyc.end(), c) == cyc.end()) cyc.push_back(c);
  }
  for (Mask c : cyc) add(c);
  for (std::size_t k = 0; k < found.size(); ++k)
    for (Mask c : cyc)
      if (!mask_le(c, found[k])) add(closure(found[k] | c));
  std::sort(found.begin(), found.end(), [](Mask a, Mask b) {
    int oa = mask_order(a), ob = mask_order(b);
    return oa != ob ? oa < ob : a < b;
  });
  subs_ = std::move(found);
}

Mask PContext::closure(Mask gens) const {
  Mask m = gens | 1;
  bool grown = true;
  while (grown) {
    grown = false;
    Mask add = 0;
    for (Mask a = m; a; a &= a - 1)
      for (Mask b = gens | 1; b; b &= b - 1) {
        int c = mul(std::countr_zero(a), std::countr_zero(b));
        add |= Mask{1} << c;
      }
    if ((add | m) != m) {
      m |= add;
      grown = true;
    }
  }
  return m;
}

bool PContext::is_subgroup(Mask m) const {
  if (!(m & 1)) return false;
  for (Mask a = m; a; a &= a - 1)
    for (Mask b = m; b; b &= b - 1)
      if (!((m >> mul(std::countr_zero(a), std::countr_zero(b))) & 1)) return false;
  return true;
}

std::vector<Mask> PContext::subgroups_of(Mask T) const {
  std::vector<Mask> out;
  for (Mask m : subs_)
    if (mask_le(m, T)) out.push_back(m);
  return out;
}

bool PContext::normalizes(int s, Mask P) const {
  int g = elems_[std::size_t(s)];
  for (Mask a = P; a; a &= a - 1) {
    int c = conj(std::countr_zero(a), g);
    if (c < 0 || !((P >> c) & 1)) return false;
  }
  return true;
}

Mask PContext::normalizer(Mask within, Mask P) const {
  Mask out = 0;
  for (Mask a = within; a; a &= a - 1) {
    int s = std::countr_zero(a);
    if (normalizes(s, P)) out |= Mask{1} << s;
  }
  return out;
}

Mask PContext::centralizer(Mask within, Mask X) const {
  Mask out = 0;
  for (Mask a = within; a; a &= a - 1) {
    int s = std::countr_zero(a);
    bool ok = true;
    for (Mask b = X; b; b &= b - 1) {
      int x = std::countr_zero(b);
      if (mul(s, x) != mul(x, s)) {
        ok = false;
        break;
      }
    }
    if (ok) out |= Mask{1} << s;
  }
  return out;
}

Mask PContext::conj_mask(Mask P, int g) const {
  Mask out = 0;
  for (Mask a = P; a; a &= a - 1) {
    int c = conj(std::countr_zero(a), g);
    if (c < 0) return ~Mask{0};
    out |= Mask{1} << c;
  }
  return out;
}

Bits PContext::to_g(Mask m) const {
  Bits b(G_->order());
  for (; m; m &= m - 1) b.set(std::size_t(elems_[std::size_t(std::countr_zero(m))]));
  return b;
}

Mask PContext::from_g(const Bits &X) const {
  Mask m = 0;
  for (std::size_t s = 0; s < elems_.size(); ++s)
    if (X.test(std::size_t(elems_[s]))) m |= Mask{1} << s;
  return m;
}

std::vector<int> PContext::generators_of(Mask m) const {
  std::vector<int> gens;
  Mask cur = 1;
  for (Mask a = m; a; a &= a - 1) {
    int s = std::countr_zero(a);
    if ((cur >> s) & 1) continue;
    gens.push_back(s);
    cur = closure(cur | (Mask{1} << s));
  }
  return gens;
}

std::string PContext::describe(Mask m) const {
  std::ostringstream os;
  os << "<";
  bool first = true;
  for (int s : generators_of(m)) {
    if (!first) os << ", ";
    os << G_->perm(elems_[std::size_t(s)]).str();
    first = false;
  }
  os << ">";
  return os.str();
}

ObjectSet::ObjectSet(std::vector<Mask> v) : v_(std::move(v)) {
  std::sort(v_.begin(), v_.end());
  v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
}

bool ObjectSet::contains(Mask m) const { return std::binary_search(v_.begin(), v_.end(), m); }

std::vector<Mask> ObjectSet::by_order() const {
  auto out = v_;
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    int oa = mask_order(a), ob = mask_order(b);
    return oa != ob ? oa < ob : a < b;
  });
  return out;
}

bool ObjectSet::subset_of(const ObjectSet &o) const {
  return std::includes(o.v_.begin(), o.v_.end(), v_.begin(), v_.end());
}

ObjectSet overgroup_closure(const PContext &ctx, Mask S, const std::vector<Mask> &seeds) {
  std::vector<Mask> out;
  for (Mask m : ctx.subgroups_of(S))
    for (Mask q : seeds)
      if (mask_le(q, m)) {
        out.push_back(m);
        break;
      }
  return ObjectSet(out);
}

std::optional<std::pair<Mask, Mask>> overgroup_violation(const PContext &ctx, Mask S,
                                                         const ObjectSet &D) {
  auto subs = ctx.subgroups_of(S);
  for (Mask P : D.by_order())
    for (Mask Q : subs)
      if (mask_le(P, Q) && !D.contains(Q)) return std::make_pair(P, Q);
  return std::nullopt;
}

} // namespace lk

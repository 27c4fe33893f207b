#include "lk/normal_structure.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace lk {

namespace {

bool by_size(const Bits &a, const Bits &b) {
  auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a < b;
}

Bits to_parent(const Locality &L, const Locality &sub, const Bits &X) {
  return L.from_g(sub.to_g(X));
}

// normal closure of M ∪ N for M, N already partial normal: only cross products and
// the elements they generate need processing
Bits normal_join(const PartialGroup &PG, const Bits &M, const Bits &N) {
  const std::size_t n = PG.size();
  Bits in = M | N;
  std::vector<int> members = in.members(), queue;
  auto add = [&](int x) {
    if (x >= 0 && !in.test(std::size_t(x))) {
      in.set(std::size_t(x));
      queue.push_back(x);
    }
  };
  auto ns = N.members();
  M.for_each([&](int a) {
    for (int b : ns) {
      add(PG.try_mul(a, b));
      add(PG.try_mul(b, a));
    }
  });
  while (!queue.empty()) {
    int a = queue.back();
    queue.pop_back();
    members.push_back(a);
    add(PG.inv(a));
    for (std::size_t k = 0; k < members.size(); ++k) {
      int b = members[k];
      add(PG.try_mul(a, b));
      add(PG.try_mul(b, a));
    }
    for (std::size_t f = 0; f < n; ++f) add(PG.try_conj(a, int(f)));
  }
  return in;
}

} // namespace

int PNLattice::index_of(const Bits &N) const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i] == N) return int(i);
  return -1;
}

std::vector<int> PNLattice::atoms() const {
  std::vector<int> out(atom_of);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PNLattice pn_lattice(const PartialGroup &PG, std::size_t guard) {
  const std::size_t n = PG.size();
  std::vector<Bits> members;
  std::unordered_map<Bits, int, BitsHash> index;
  auto add = [&](Bits B) {
    auto it = index.find(B);
    if (it != index.end()) return it->second;
    if (members.size() >= guard)
      throw InstanceTooLarge("instance-too-rich: more than " + std::to_string(guard) +
                             " partial normal subgroups");
    int k = int(members.size());
    index.emplace(B, k);
    members.push_back(std::move(B));
    return k;
  };
  add(Bits::of(n, {PG.one()}));

  // ⟨⟨x⟩⟩ is constant on conjugacy classes and under inversion
  std::vector<int> atom_of(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    if (atom_of[x] >= 0) continue;
    int a = add(normal_closure(PG, Bits::of(n, {int(x)})));
    std::vector<int> orbit{int(x)};
    atom_of[x] = a;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      int y = orbit[k];
      auto push = [&](int z) {
        if (z >= 0 && atom_of[std::size_t(z)] < 0) {
          atom_of[std::size_t(z)] = a;
          orbit.push_back(z);
        }
      };
      push(PG.inv(y));
      for (std::size_t f = 0; f < n; ++f) push(PG.try_conj(y, int(f)));
    }
  }
  std::vector<int> atoms(atom_of);
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());

  // every partial normal subgroup is the join of the atoms it contains
  for (std::size_t k = 0; k < members.size(); ++k)
    for (int a : atoms) {
      if (members[std::size_t(a)].subset_of(members[k])) continue;
      add(normal_join(PG, members[k], members[std::size_t(a)]));
    }

  std::vector<int> order(members.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return by_size(members[std::size_t(a)], members[std::size_t(b)]); });
  std::vector<int> rank(members.size());
  PNLattice lat;
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[std::size_t(order[i])] = int(i);
    lat.members.push_back(members[std::size_t(order[i])]);
  }
  lat.atom_of.resize(n);
  for (std::size_t x = 0; x < n; ++x) lat.atom_of[x] = rank[std::size_t(atom_of[x])];
  return lat;
}

bool is_simple(const PartialGroup &PG) { return pn_lattice(PG).size() == 2; }

Bits product_pn(const Locality &L, const Bits &M, const Bits &N) {
  if (auto v = partial_normal_violation(L, M))
    throw PreconditionError("first factor is not partial normal: " + v->what);
  if (auto v = partial_normal_violation(L, N))
    throw PreconditionError("second factor is not partial normal: " + v->what);
  Bits MN = product_set(L, {M, N});
  if (!(MN == product_set(L, {N, M}))) throw InvariantViolation("MN != NM");
  if (auto v = partial_normal_violation(L, MN)) throw InvariantViolation("MN not partial normal: " + v->what);
  const PContext &C = L.ctx();
  if (L.mask_of(MN) != C.join(L.mask_of(M), L.mask_of(N)))
    throw InvariantViolation("(MN) ∩ S != (M ∩ S)(N ∩ S)");
  Bits split(L.size());
  auto ns = N.members();
  M.for_each([&](int m) {
    for (int n : ns) {
      int w[2] = {m, n};
      Mask s = L.s_w(WordView(w, 2));
      if (!L.delta().contains(s)) continue;
      int f = L.product_unchecked(WordView(w, 2));
      if (L.s_f(f) == s) split.set(std::size_t(f));
    }
  });
  if (!MN.subset_of(split)) {
    Bits miss = MN;
    miss.subtract(split);
    throw InvariantViolation("no splitting pair for " + L.name(miss.members().front()));
  }
  return MN;
}

Bits n_perp(const Locality &L, const PNLattice &lat, const Bits &N) {
  Bits u(L.size());
  for (int a : lat.atoms())
    if (commutes(L, lat.members[std::size_t(a)], N)) u |= lat.members[std::size_t(a)];
  if (!(normal_closure(L, u) == u)) throw InvariantViolation("join of commuting atoms grew");
  return u;
}

Bits n_perp(const Locality &L, const Bits &N) { return n_perp(L, pn_lattice(L), N); }

Bits centralizer_in_s(const Locality &L, const Bits &X) {
  return centralizer_p(L, X) & L.sylow_elems();
}

Bits center_of(const Locality &L, const Bits &N) { return N & centralizer_p(L, N); }

Bits n_perp_formula(const Locality &L, const Bits &N) {
  Mask T = L.mask_of(N);
  Bits CSN = centralizer_in_s(L, N);
  auto LT = L.view(L.normalizer_elems(T));
  Bits CT = LT->from_g(L.to_g(L.centralizer_elems(T)));
  Bits K = to_parent(L, *LT, p_residual_alperin(*LT, CT));
  return product_set(L, {CSN, K});
}

Bits p_residual(const Locality &L, const PNLattice &lat, const Bits &N) {
  Bits T = L.elems_of_mask(L.mask_of(N));
  Bits r = N;
  for (const Bits &K : lat.members)
    if (K.subset_of(N) && product_set(L, {T, K}) == N) r &= K;
  return r;
}

Bits p_residual_alperin(const Locality &L, const Bits &N) {
  Bits SN = s_times(L, N);
  Bits U(L.size());
  const ObjectSet rd = r_delta(L, N, SN);
  for (Mask P : rd.masks()) {
    Bits H = L.to_g(N & L.normalizer_elems(P));
    U |= L.from_g(o_upper_p(L.group(), H, L.prime()));
  }
  return normal_closure(L, U);
}

Bits p_prime_residual(const Locality &L, const PNLattice &lat, const Bits &N) {
  Bits T = L.elems_of_mask(L.mask_of(N));
  Bits r = N;
  for (const Bits &K : lat.members)
    if (T.subset_of(K) && K.subset_of(N)) r &= K;
  return r;
}

Bits p_prime_residual_closure(const Locality &L, const Bits &N) {
  return normal_closure(L, L.elems_of_mask(L.mask_of(N)));
}

Bits op_elems(const Locality &L) { return L.elems_of_mask(o_p_locality(L)); }

LocalityPtr normal_locality(const Locality &L, const Bits &N) {
  if (auto v = partial_normal_violation(L, N)) throw PreconditionError("not partial normal: " + v->what);
  const PContext &C = L.ctx();
  Mask T = L.mask_of(N);
  Mask csn = L.mask_of(centralizer_in_s(L, N));
  std::vector<Mask> gamma;
  for (Mask P : C.subgroups_of(T))
    if (L.delta().contains(C.join(P, csn))) gamma.push_back(P);
  if (gamma.empty()) throw PreconditionError("no objects for the partial normal subgroup");
  return L.relocate(N, T, ObjectSet(gamma), "LocalityBacked");
}

LocalityPtr subnormal_locality(const Locality &L, const Subnormal &H) {
  const Locality *cur = &L;
  LocalityPtr hold;
  for (std::size_t i = 1; i < H.chain.size(); ++i) {
    hold = normal_locality(*cur, cur->from_g(L.to_g(H.chain[i])));
    cur = hold.get();
  }
  if (!hold) return L.relocate(Bits::full(L.size()), L.sylow(), L.delta(), L.backend());
  return hold;
}

Bits product_all_orders(const Locality &L, const std::vector<Bits> &factors) {
  if (factors.empty()) return Bits::of(L.size(), {L.one()});
  std::vector<int> idx(factors.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::optional<Bits> first;
  do {
    std::vector<Bits> f;
    for (int i : idx) f.push_back(factors[std::size_t(i)]);
    Bits p = product_set(L, f);
    if (!first) first = p;
    else if (!(p == *first)) throw InvariantViolation("product depends on the order of the factors");
  } while (std::next_permutation(idx.begin(), idx.end()));
  return *first;
}

// ---- Structure ----

Structure::Structure(LocalityPtr L, std::size_t guard)
    : L_(std::move(L)), guard_(guard), lat_(pn_lattice(*L_, guard)) {
  op_ = o_p_locality(*L_);
  op_elems_ = L_->elems_of_mask(op_);
}

Structure::Structure(LocalityPtr L, Seed seed, std::size_t guard) : Structure(std::move(L), guard) {
  F_ = std::move(seed.fusion);
  fs_ = std::move(seed.fs);
  linking_ = seed.linking;
}

const FusionSystem &Structure::fusion() const {
  if (!F_) F_ = fusion_system(*L_);
  return *F_;
}

const ObjectSet &Structure::fs() const {
  if (!fs_) fs_ = subcentric_set(fusion());
  return *fs_;
}

bool Structure::linking() const {
  if (!linking_) linking_ = is_linking(*L_, fusion());
  return *linking_;
}

const Bits &Structure::perp(int idx) const {
  auto it = perp_.find(idx);
  if (it == perp_.end())
    it = perp_.emplace(idx, n_perp(*L_, lat_, lat_.members[std::size_t(idx)])).first;
  return it->second;
}

const Bits &Structure::perp(const Bits &N) const {
  int idx = lat_.index_of(N);
  if (idx < 0) throw PreconditionError("not a partial normal subgroup");
  return perp(idx);
}

Bits Structure::n_perp_formula(const Bits &N) const {
  if (!linking()) throw PreconditionError("locality is not linking");
  if (!delta_f_contained()) throw PreconditionError("δ(F) is not contained in the object set");
  if (lat_.index_of(N) < 0) throw PreconditionError("not a partial normal subgroup");
  return lk::n_perp_formula(*L_, N);
}

Classification Structure::classify(const Bits &N) const {
  Classification c;
  const Bits &pp = perp(N);
  c.perp = lat_.index_of(pp);
  c.centric = pp.subset_of(N);
  c.radical = op_elems_.subset_of(N);
  c.centric_radical = c.centric && c.radical;
  c.op = lat_.index_of(p_residual(N));
  c.op_prime = lat_.index_of(p_prime_residual(N));
  if (linking() && delta_f_contained()) c.perp_is_center = (pp == center_of(*L_, N));
  return c;
}

const Bits &Structure::fstar() const {
  if (!fstar_) {
    if (!linking()) throw PreconditionError("locality is not linking");
    Bits r = lat_.top();
    for (std::size_t i = 0; i < lat_.size(); ++i) {
      const Bits &N = lat_.members[i];
      if (perp(int(i)).subset_of(N) && op_elems_.subset_of(N)) r &= N;
    }
    int idx = lat_.index_of(r);
    if (idx < 0 || !perp(idx).subset_of(r) || !op_elems_.subset_of(r))
      throw InvariantViolation("F*(L) is not centric radical");
    fstar_ = r;
  }
  return *fstar_;
}

const ObjectSet &Structure::delta_f() const {
  if (!delta_f_) delta_f_ = delta_set(fusion(), L_->mask_of(fstar()), fs());
  return *delta_f_;
}

bool Structure::delta_f_contained() const { return delta_f().subset_of(L_->delta()); }
bool Structure::regular() const { return linking() && L_->delta() == delta_f(); }
bool Structure::subcentric() const { return linking() && L_->delta() == fs(); }

std::optional<Mask> Structure::replete_violation(const Bits &N, bool weak) const {
  if (lat_.index_of(N) < 0) throw PreconditionError("not a partial normal subgroup");
  const Locality &L = *L_;
  const PContext &C = L.ctx();
  Mask T = L.mask_of(N);
  Mask cst = C.centralizer(L.sylow(), T);
  std::vector<Mask> qs{L.sylow()};
  if (!weak) {
    auto LT = L.view(L.normalizer_elems(T));
    Bits CT = LT->from_g(L.to_g(L.centralizer_elems(T)));
    qs = r_delta(*LT, CT).masks();
  }
  const ObjectSet rd = r_delta(L, N);
  for (Mask P : rd.masks())
    for (Mask Q : qs) {
      Mask X = C.join(C.join(P & T, Q & cst), op_);
      if (!L.delta().contains(X)) return X;
    }
  return std::nullopt;
}

const std::vector<Subnormal> &Structure::subnormals() const {
  if (subnormals_) return *subnormals_;
  const Locality &L = *L_;
  std::vector<Subnormal> out{Subnormal{lat_.top(), {lat_.top()}}};
  std::unordered_map<Bits, int, BitsHash> seen{{lat_.top(), 0}};
  for (std::size_t k = 0; k < out.size(); ++k) {
    Subnormal H = out[k];
    std::vector<Bits> subs;
    if (k == 0) {
      subs = lat_.members;
    } else {
      auto V = L.view(H.members);
      const PNLattice sub = pn_lattice(*V, guard_);
      for (const Bits &K : sub.members) subs.push_back(to_parent(L, *V, K));
    }
    for (Bits &K : subs) {
      if (seen.count(K)) continue;
      if (out.size() >= guard_) throw InstanceTooLarge("instance-too-rich: subnormal blow-up");
      seen.emplace(K, int(out.size()));
      Subnormal s{K, H.chain};
      s.chain.push_back(K);
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Subnormal &a, const Subnormal &b) { return by_size(a.members, b.members); });
  subnormals_ = std::move(out);
  return *subnormals_;
}

bool Structure::quasisimple() const {
  const Bits &top = lat_.top();
  if (!(p_residual(top) == top)) return false;
  if (!linking()) throw PreconditionError("locality is not linking");
  Bits Z = center_of(*L_, top);
  if (Z.count() == 1) return lat_.size() == 2; // L/1 is L
  return is_simple(*quotient(L_, Z));
}

bool is_quasisimple(const LocalityPtr &L) { return Structure(L).quasisimple(); }

std::vector<Subnormal> Structure::components() const {
  if (!regular()) throw PreconditionError("L-not-regular");
  std::vector<Subnormal> out;
  for (const Subnormal &H : subnormals()) {
    // p-subgroups have trivial p-residual
    if (H.members.subset_of(L_->sylow_elems())) continue;
    if (is_quasisimple(subnormal_locality(*L_, H))) out.push_back(H);
  }
  return out;
}

Bits Structure::layer() const {
  std::vector<Bits> f;
  for (auto &K : components()) f.push_back(K.members);
  Bits E = product_all_orders(*L_, f);
  if (auto v = partial_normal_violation(*L_, E)) throw InvariantViolation("E(L) not partial normal: " + v->what);
  return E;
}

Bits Structure::layer_general() const { return p_residual(fstar()); }

} // namespace lk

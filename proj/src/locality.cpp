#include "lk/locality.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

namespace lk {

Locality::Locality(PContextPtr ctx, Mask S, ObjectSet delta, const Bits &g_elems, std::string tag)
    : ctx_(std::move(ctx)), S_(S), delta_(std::move(delta)), tag_(std::move(tag)), gbits_(g_elems) {
  const FiniteGroup &G = ctx_->group();
  if (!ctx_->is_subgroup(S_)) throw std::invalid_argument("Sylow mask is not a subgroup");
  elems_ = g_elems.members();
  local_.assign(G.order(), -1);
  for (std::size_t i = 0; i < elems_.size(); ++i) local_[std::size_t(elems_[i])] = int(i);
  if (local_[std::size_t(G.identity())] < 0) throw std::invalid_argument("element set misses 1");
  one_ = local_[std::size_t(G.identity())];
  inv_.resize(elems_.size());
  sf_.resize(elems_.size());
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    int g = elems_[i];
    inv_[i] = local_[std::size_t(G.inv(g))];
    if (inv_[i] < 0) throw std::invalid_argument("element set not closed under inversion");
    Mask m = 0;
    for (Mask a = S_; a; a &= a - 1) {
      int s = std::countr_zero(a);
      int c = ctx_->conj(s, g);
      if (c >= 0 && ((S_ >> c) & 1)) m |= Mask{1} << s;
    }
    sf_[i] = m;
  }
  nbytes_ = (ctx_->size() + 7) / 8;
  if (elems_.size() * std::size_t(nbytes_) <= 32768) {
    pre_.assign(elems_.size() * std::size_t(nbytes_) * 256, 0);
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      Mask *t = &pre_[i * std::size_t(nbytes_) * 256];
      for (Mask a = sf_[i]; a; a &= a - 1) {
        int s = std::countr_zero(a);
        int c = ctx_->conj(s, elems_[i]);
        t[(c / 8) * 256 + (1 << (c % 8))] |= Mask{1} << s;
      }
      for (int k = 0; k < nbytes_; ++k)
        for (int v = 1; v < 256; ++v)
          if (v & (v - 1)) t[k * 256 + v] = t[k * 256 + (v & (v - 1))] | t[k * 256 + (v & -v)];
    }
  }
}

Mask Locality::s_w(WordView w) const {
  Mask A = S_;
  if (!pre_.empty()) {
    const auto nb = std::size_t(nbytes_);
    for (std::size_t i = w.size(); i-- > 0;) {
      const Mask *t = &pre_[std::size_t(w[i]) * nb * 256];
      Mask B = 0;
      for (std::size_t k = 0; k < nb && (A >> (8 * k)); ++k) B |= t[k * 256 + ((A >> (8 * k)) & 0xff)];
      A = B;
    }
    return A;
  }
  for (std::size_t i = w.size(); i-- > 0;) {
    auto f = std::size_t(w[i]);
    int g = elems_[f];
    Mask B = 0;
    for (Mask a = sf_[f]; a; a &= a - 1) {
      int s = std::countr_zero(a);
      if ((A >> ctx_->conj(s, g)) & 1) B |= Mask{1} << s;
    }
    A = B;
  }
  return A;
}

int Locality::product_unchecked(WordView w) const {
  const FiniteGroup &G = ctx_->group();
  int r = G.identity();
  for (int x : w) r = G.mul(r, elems_[std::size_t(x)]);
  int l = local_[std::size_t(r)];
  if (l < 0) throw DomainError("product leaves the element set: " + word_name(w));
  return l;
}

void Locality::build_tables() const {
  const std::size_t n = size();
  mul_tab_.assign(n * n, -1);
  conj_tab_.assign(n * n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      int w[2] = {int(a), int(b)};
      if (in_domain(WordView(w, 2))) mul_tab_[a * n + b] = product_unchecked(WordView(w, 2));
      int v[3] = {inv_[b], int(a), int(b)};
      if (in_domain(WordView(v, 3))) conj_tab_[a * n + b] = product_unchecked(WordView(v, 3));
    }
}

bool Locality::tables() const {
  if (size() > table_limit) return false;
  std::call_once(tab_once_, [this] { build_tables(); });
  return true;
}

int Locality::try_mul(int a, int b) const {
  if (tables()) return mul_tab_[std::size_t(a) * size() + std::size_t(b)];
  int w[2] = {a, b};
  if (!in_domain(WordView(w, 2))) return -1;
  return product_unchecked(WordView(w, 2));
}

int Locality::try_conj(int x, int f) const {
  if (tables()) return conj_tab_[std::size_t(x) * size() + std::size_t(f)];
  int w[3] = {inv_[std::size_t(f)], x, f};
  if (!in_domain(WordView(w, 3))) return -1;
  return product_unchecked(WordView(w, 3));
}

std::string Locality::name(int x) const { return ctx_->group().perm(elems_[std::size_t(x)]).str(); }

std::optional<std::string> Locality::exactness_certificate() const {
  if (!delta_.contains(S_)) return std::nullopt;
  if (object_set_defect(*this, delta_, S_)) return std::nullopt;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b) {
      int w[2] = {int(a), int(b)};
      if (!in_domain(WordView(w, 2))) continue;
      int g = ctx_->group().mul(elems_[a], elems_[b]);
      if (local_[std::size_t(g)] < 0) return std::nullopt;
    }
  return "domain given by S_w in an overgroup-closed, conjugation-closed object set; products "
         "are group products and pairwise closed";
}

Bits Locality::from_g(const Bits &X) const {
  Bits out(size());
  X.for_each([&](int g) {
    int l = local_[std::size_t(g)];
    if (l >= 0) out.set(std::size_t(l));
  });
  return out;
}

Bits Locality::to_g(const Bits &X) const {
  Bits out(ctx_->group().order());
  X.for_each([&](int x) { out.set(std::size_t(elems_[std::size_t(x)])); });
  return out;
}

Bits Locality::elems_of_mask(Mask P) const {
  Bits out(size());
  for (; P; P &= P - 1) {
    int l = local_[std::size_t(ctx_->g_of(std::countr_zero(P)))];
    if (l >= 0) out.set(std::size_t(l));
  }
  return out;
}

Mask Locality::mask_of(const Bits &X) const {
  Mask m = 0;
  X.for_each([&](int x) {
    int s = ctx_->s_of(elems_[std::size_t(x)]);
    if (s >= 0 && ((S_ >> s) & 1)) m |= Mask{1} << s;
  });
  return m;
}

Bits Locality::transporter(Mask P, Mask Q) const {
  Bits out(size());
  for (std::size_t f = 0; f < size(); ++f)
    if (mask_le(P, sf_[f]) && mask_le(ctx_->conj_mask(P, elems_[f]), Q)) out.set(f);
  return out;
}

Bits Locality::centralizer_elems(Mask P) const {
  Bits out(size());
  for (std::size_t f = 0; f < size(); ++f) {
    if (!mask_le(P, sf_[f])) continue;
    bool ok = true;
    for (Mask a = P; a && ok; a &= a - 1) {
      int s = std::countr_zero(a);
      ok = ctx_->conj(s, elems_[f]) == s;
    }
    if (ok) out.set(f);
  }
  return out;
}

std::shared_ptr<Locality> Locality::view(const Bits &X, std::string tag) const {
  return std::make_shared<Locality>(ctx_, S_, delta_, to_g(X), std::move(tag));
}

std::shared_ptr<Locality> Locality::relocate(const Bits &X, Mask T, ObjectSet gamma,
                                             std::string tag) const {
  return std::make_shared<Locality>(ctx_, T, std::move(gamma), to_g(X), std::move(tag));
}

// ---- construction and validation ----

std::optional<std::string> object_set_defect(const Locality &L, const ObjectSet &D, Mask S) {
  const PContext &C = L.ctx();
  if (D.empty()) return "object set is empty";
  for (Mask P : D.masks())
    if (!C.is_subgroup(P) || !mask_le(P, S)) return "not a subgroup of S: " + C.describe(P);
  if (auto v = overgroup_violation(C, S, D))
    return "overgroup " + C.describe(v->second) + " of object " + C.describe(v->first) + " missing";
  for (Mask P : D.masks())
    for (std::size_t f = 0; f < L.size(); ++f) {
      if (!mask_le(P, L.s_f(int(f)))) continue;
      Mask Q = L.conj_mask(P, int(f));
      if (!D.contains(Q))
        return "conjugate of " + C.describe(P) + " by " + L.name(int(f)) + " is not an object";
    }
  return std::nullopt;
}

LocalityPtr locality_from_group(PContextPtr ctx, const ObjectSet &delta) {
  Mask S = ctx->full();
  return locality_from_group(std::move(ctx), S, delta);
}

LocalityPtr locality_from_group(PContextPtr ctx, Mask S, const ObjectSet &delta) {
  const FiniteGroup &G = ctx->group();
  for (Mask P : delta.masks())
    if (!ctx->is_subgroup(P) || !mask_le(P, S))
      throw LocalityError("object is not a subgroup of S: " + ctx->describe(P));
  Bits elems(G.order());
  for (std::size_t g = 0; g < G.order(); ++g) {
    Mask m = 0;
    for (Mask a = S; a; a &= a - 1) {
      int s = std::countr_zero(a);
      int c = ctx->conj(s, int(g));
      if (c >= 0 && ((S >> c) & 1)) m |= Mask{1} << s;
    }
    if (delta.contains(m)) elems.set(g);
  }
  if (!elems.test(std::size_t(G.identity()))) throw LocalityError("S is not an object");
  auto L = std::make_shared<Locality>(ctx, S, delta, elems);
  if (auto d = object_set_defect(*L, delta, S)) throw LocalityError("object set not closed: " + *d);
  auto rep = check_locality_axioms(*L);
  if (!rep.ok) throw LocalityError("locality axioms fail (" + rep.failed + "): " + rep.witness);
  return L;
}

bool chain_domain(const Locality &L, WordView w) {
  for (Mask P0 : L.delta().masks()) {
    Mask P = P0;
    bool ok = true;
    for (int f : w) {
      if (!mask_le(P, L.s_f(f))) {
        ok = false;
        break;
      }
      P = L.conj_mask(P, f);
      if (!L.delta().contains(P)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

LocalityReport check_locality_axioms(const Locality &L, int chain_word_len,
                                     std::size_t word_budget) {
  LocalityReport rep;
  auto fail = [&](std::string what, std::string witness) {
    rep.ok = false;
    rep.failed = std::move(what);
    rep.witness = std::move(witness);
    return rep;
  };
  const PContext &C = L.ctx();
  const Mask S = L.sylow();
  if (auto d = object_set_defect(L, L.delta(), S)) return fail("objects", *d);
  if (!L.delta().contains(S)) return fail("objects", "S is not an object");
  if (L.sylow_elems().count() != std::size_t(mask_order(S)))
    return fail("sylow", "S is not contained in the element set");
  // a p-subgroup properly containing S would properly contain S in its normalizer
  std::size_t nls = L.normalizer_elems(S).count();
  if (p_part(nls, L.prime()) != std::size_t(mask_order(S)))
    return fail("maximality", "|N_L(S)| = " + std::to_string(nls) + " has a larger p-part than |S|");
  for (std::size_t a = 0; a < L.size(); ++a)
    for (std::size_t b = 0; b < L.size(); ++b) {
      int w[2] = {int(a), int(b)};
      if (!L.in_domain(WordView(w, 2))) continue;
      int g = L.group().mul(L.g_of(int(a)), L.g_of(int(b)));
      if (L.local_of(g) < 0) return fail("closure", L.word_name(WordView(w, 2)));
    }
  std::vector<int> alphabet(L.size());
  for (std::size_t i = 0; i < L.size(); ++i) alphabet[i] = int(i);
  std::size_t layer = 1;
  for (int len = 1; len <= chain_word_len; ++len) {
    layer *= L.size();
    if (len > 1 && rep.words + layer > word_budget) break;
    std::optional<Word> bad;
    for_each_word(alphabet, len, [&](const Word &w) {
      ++rep.words;
      if (L.in_domain(w) != chain_domain(L, w)) {
        bad = w;
        return false;
      }
      return true;
    });
    if (bad) return fail("domain", L.word_name(*bad));
  }
  (void)C;
  return rep;
}

LocalityPtr restriction(const Locality &L, const ObjectSet &sub) {
  if (!sub.subset_of(L.delta())) throw LocalityError("restriction objects are not objects");
  if (auto d = object_set_defect(L, sub, L.sylow())) throw LocalityError("restriction objects: " + *d);
  Bits X(L.size());
  for (std::size_t f = 0; f < L.size(); ++f)
    if (sub.contains(L.s_f(int(f)))) X.set(f);
  return L.relocate(X, L.sylow(), sub, "LocalityBacked");
}

FusionSystem fusion_system(const Locality &L) {
  std::vector<Morphism> seeds;
  for (std::size_t f = 0; f < L.size(); ++f)
    seeds.push_back(conjugation_morphism(L.ctx(), L.s_f(int(f)), L.g_of(int(f))));
  return generate(L.ctx_ptr(), L.sylow(), seeds);
}

FusionSystem fusion_system_of(const Locality &L, const Bits &H) {
  Mask T = L.mask_of(H);
  std::vector<Morphism> seeds;
  H.for_each([&](int f) {
    Morphism m = conjugation_morphism(L.ctx(), L.s_f(f) & T, L.g_of(f));
    if (!mask_le(m.image, T)) throw std::invalid_argument("subset is not a partial subgroup");
    seeds.push_back(m);
  });
  return generate(L.ctx_ptr(), T, seeds);
}

Mask o_p_locality(const Locality &L) {
  // the intersection of the S_f need not be invariant; shrink it until every f fixes it
  Mask m = L.sylow();
  for (std::size_t f = 0; f < L.size(); ++f) m &= L.s_f(int(f));
  for (;;) {
    Mask next = m;
    for (std::size_t f = 0; f < L.size(); ++f) next &= L.conj_mask(m, int(f));
    if (next == m) return m;
    m = next;
  }
}

Mask o_p_locality_by_normalizers(const Locality &L) {
  auto subs = L.ctx().subgroups_of(L.sylow());
  for (auto it = subs.rbegin(); it != subs.rend(); ++it)
    if (L.normalizer_elems(*it).count() == L.size()) return *it;
  return 1;
}

Bits normalizer_group(const Locality &L, Mask P) {
  if (!L.delta().contains(P)) throw LocalityError("not an object: " + L.ctx().describe(P));
  return L.to_g(L.normalizer_elems(P));
}

bool is_objective_char_p(const Locality &L) {
  for (Mask P : L.delta().masks())
    if (!is_char_p(L.group(), normalizer_group(L, P), L.prime())) return false;
  return true;
}

bool is_linking(const Locality &L, const FusionSystem &F) {
  return is_objective_char_p(L) && fcr_set(F).subset_of(L.delta());
}

bool is_linking(const Locality &L) { return is_linking(L, fusion_system(L)); }

std::optional<PairWitness> commute_strongly_violation(const Locality &L, const Bits &X,
                                                      const Bits &Y) {
  if (auto v = commute_violation(L, X, Y)) return v;
  auto ys = Y.members();
  std::optional<PairWitness> bad;
  X.for_each([&](int x) {
    if (bad) return;
    for (int y : ys) {
      int a[2] = {x, y}, b[2] = {y, x};
      Mask m = L.s_w(WordView(a, 2));
      if (!L.delta().contains(m)) continue;
      if (L.s_w(WordView(b, 2)) != m) {
        bad = PairWitness{x, y};
        return;
      }
    }
  });
  return bad;
}

bool commutes_strongly(const Locality &L, const Bits &X, const Bits &Y) {
  return !commute_strongly_violation(L, X, Y);
}

ObjectSet radical_objects(const Locality &L, const Bits &N) {
  std::vector<Mask> out;
  for (Mask P : L.delta().masks()) {
    Bits H = L.to_g(N & L.normalizer_elems(P));
    if (o_p(L.group(), H, L.prime()).subset_of(L.ctx().to_g(P))) out.push_back(P);
  }
  return ObjectSet(out);
}

Bits s_times(const Locality &L, const Bits &N) { return product_set(L, {L.sylow_elems(), N}); }

ObjectSet r_delta(const Locality &L, const Bits &N) { return r_delta(L, N, s_times(L, N)); }

ObjectSet r_delta(const Locality &L, const Bits &N, const Bits &SN) {
  (void)N;
  std::vector<Mask> out;
  const Mask S = L.sylow();
  for (Mask P : L.delta().masks()) {
    if (P == S) {
      out.push_back(P);
      continue;
    }
    Bits H = L.to_g(SN & L.normalizer_elems(P));
    std::size_t ns = std::size_t(mask_order(L.ctx().normalizer(S, P)));
    if (p_part(H.count(), L.prime()) != ns) continue;
    if (has_strongly_p_embedded_mod(L.group(), H, L.ctx().to_g(P), L.prime())) out.push_back(P);
  }
  return ObjectSet(out);
}

bool up_relation(const Locality &L, const Bits &N, int f, Mask P, int g, Mask Q) {
  const FiniteGroup &G = L.group();
  if (!mask_le(P, L.s_f(f)) || !mask_le(Q, L.s_f(g)))
    throw std::invalid_argument("pair is not in L∘Δ");
  Mask Pf = L.conj_mask(P, f), Qg = L.conj_mask(Q, g);
  Bits Y = N & L.transporter(Pf, Qg);
  bool found = false;
  (N & L.transporter(P, Q)).for_each([&](int x) {
    if (found) return;
    int xg = L.try_mul(x, g);
    if (xg < 0) return;
    int yg = G.mul(G.inv(L.g_of(f)), L.g_of(xg));
    int y = L.local_of(yg);
    if (y >= 0 && Y.test(std::size_t(y)) && L.try_mul(f, y) == xg) found = true;
  });
  return found;
}

bool is_up_maximal(const Locality &L, const Bits &N, int f) {
  const FiniteGroup &G = L.group();
  Mask P = L.s_f(f);
  Mask Pf = L.conj_mask(P, f);
  auto xs = (N & L.transporter(P, L.sylow())).members();
  auto ys = (N & L.transporter(Pf, L.sylow())).members();
  for (int x : xs)
    for (int y : ys) {
      int gg = G.mul(G.mul(G.inv(L.g_of(x)), L.g_of(f)), L.g_of(y));
      int g = L.local_of(gg);
      if (g < 0) continue;
      Mask Q = L.s_f(g);
      if (mask_order(Q) <= mask_order(P)) continue;
      if (!mask_le(L.conj_mask(P, x), Q)) continue;
      if (!mask_le(L.conj_mask(Pf, y), L.conj_mask(Q, g))) continue;
      int a = L.try_mul(x, g);
      if (a >= 0 && a == L.try_mul(f, y)) return false;
    }
  return true;
}

AlperinDecomposition alperin_decompose(const Locality &L, const Bits &N, int n, int depth) {
  const FiniteGroup &G = L.group();
  AlperinDecomposition res;
  const Mask target = L.s_f(n);
  struct Step {
    int value;
    Mask mask;
    int parent; // index into states
    int letter;
    Mask object;
    int depth;
  };
  std::vector<Step> states;
  std::map<std::pair<int, Mask>, int> seen;
  std::deque<int> queue;
  (N & L.sylow_elems()).for_each([&](int t) {
    std::pair<int, Mask> key{t, L.s_f(t)};
    if (seen.count(key)) return;
    seen[key] = int(states.size());
    queue.push_back(int(states.size()));
    states.push_back({t, L.s_f(t), -1, t, 0, 0});
  });
  struct PoolItem {
    int n;
    Mask R;
  };
  std::vector<PoolItem> pool;
  const ObjectSet rd = r_delta(L, N);
  for (Mask R : rd.masks()) {
    Bits Op = o_upper_p(G, L.to_g(N & L.normalizer_elems(R)), L.prime());
    L.from_g(Op).for_each([&](int m) {
      if (L.s_f(m) == R) pool.push_back({m, R});
    });
  }
  const int max_depth = 2 * depth;
  int hit = -1;
  while (!queue.empty() && hit < 0) {
    int k = queue.front();
    queue.pop_front();
    Step st = states[std::size_t(k)];
    if (st.value == n && st.mask == target) {
      hit = k;
      break;
    }
    if (st.depth >= max_depth) continue;
    int gv = L.g_of(st.value);
    for (auto &it : pool) {
      Mask m = 0;
      for (Mask a = st.mask; a; a &= a - 1) {
        int s = std::countr_zero(a);
        if ((L.s_f(it.n) >> L.ctx().conj(s, gv)) & 1) m |= Mask{1} << s;
      }
      if (!L.delta().contains(m)) continue;
      int v = L.local_of(G.mul(gv, L.g_of(it.n)));
      if (v < 0) continue;
      std::pair<int, Mask> key{v, m};
      if (seen.count(key)) continue;
      seen[key] = int(states.size());
      queue.push_back(int(states.size()));
      states.push_back({v, m, k, it.n, it.R, st.depth + 1});
    }
  }
  if (hit < 0) return res;
  res.found = true;
  res.depth_used = states[std::size_t(hit)].depth;
  for (int k = hit; k >= 0; k = states[std::size_t(k)].parent) {
    res.word.push_back(states[std::size_t(k)].letter);
    if (states[std::size_t(k)].parent >= 0) res.objects.push_back(states[std::size_t(k)].object);
  }
  std::reverse(res.word.begin(), res.word.end());
  std::reverse(res.objects.begin(), res.objects.end());
  return res;
}

LocalityPtr im_partial_restriction(const Locality &L, const Bits &H, const ObjectSet &gamma,
                                   Mask X) {
  const PContext &C = L.ctx();
  Mask T = L.mask_of(H);
  if (!C.is_subgroup(T)) throw std::invalid_argument("S ∩ H is not a subgroup");
  if (gamma.empty()) throw std::invalid_argument("empty object set");
  for (Mask P : gamma.masks())
    if (!C.is_subgroup(P) || !mask_le(P, T))
      throw std::invalid_argument("object not a subgroup of S ∩ H: " + C.describe(P));
  if (auto v = overgroup_violation(C, T, gamma))
    throw std::invalid_argument("objects not overgroup-closed in S ∩ H: " + C.describe(v->second));
  auto hs = H.members();
  for (Mask P : gamma.masks())
    for (int h : hs)
      if (mask_le(P, L.s_f(h)) && !gamma.contains(L.conj_mask(P, h)))
        throw std::invalid_argument("objects not closed under H-conjugation");
  for (Mask P : gamma.masks())
    if (!L.delta().contains(C.join(P, X)))
      throw std::invalid_argument("(Q1) fails at " + C.describe(P));
  for (Mask P1 : gamma.masks())
    for (Mask P2 : gamma.masks()) {
      Mask A = C.join(P1, X), B = C.join(P2, X);
      for (int h : hs)
        if (mask_le(P1, L.s_f(h)) && mask_le(L.conj_mask(P1, h), P2) &&
            !(mask_le(A, L.s_f(h)) && mask_le(L.conj_mask(A, h), B)))
          throw std::invalid_argument("(Q2) fails at " + C.describe(P1) + ", " + C.describe(P2));
    }
  Bits E(L.size());
  for (int h : hs)
    if (gamma.contains(L.s_f(h) & T)) E.set(std::size_t(h));
  return L.relocate(E, T, gamma, "ImPartial");
}

} // namespace lk

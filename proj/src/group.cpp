#include "lk/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace lk {

Perm Perm::identity(int degree) {
  Perm p;
  p.images.resize(std::size_t(degree));
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

Perm Perm::parse(const std::string &s, int degree) {
  Perm p = identity(degree);
  std::vector<int> cyc;
  std::string num;
  auto flush_num = [&] {
    if (!num.empty()) {
      cyc.push_back(std::stoi(num));
      num.clear();
    }
  };
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      num.push_back(c);
    } else if (c == '(') {
      cyc.clear();
    } else if (c == ')') {
      flush_num();
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        if (a < 0 || a >= degree || b < 0 || b >= degree)
          throw std::invalid_argument("point out of range in " + s);
        p.images[std::size_t(a)] = b;
      }
      cyc.clear();
    } else {
      flush_num();
    }
  }
  if (!p.valid()) throw std::invalid_argument("not a permutation: " + s);
  return p;
}

bool Perm::valid() const {
  std::vector<char> seen(images.size(), 0);
  for (int x : images) {
    if (x < 0 || x >= degree() || seen[std::size_t(x)]) return false;
    seen[std::size_t(x)] = 1;
  }
  return true;
}

std::string Perm::str() const {
  std::ostringstream os;
  std::vector<char> seen(images.size(), 0);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[std::size_t(i)] || images[std::size_t(i)] == i) continue;
    os << '(';
    int j = i;
    bool first = true;
    while (!seen[std::size_t(j)]) {
      seen[std::size_t(j)] = 1;
      if (!first) os << ' ';
      os << j;
      first = false;
      j = images[std::size_t(j)];
    }
    os << ')';
    any = true;
  }
  if (!any) return "()";
  return os.str();
}

Perm compose(const Perm &a, const Perm &b) {
  Perm r;
  r.images.resize(a.images.size());
  for (std::size_t i = 0; i < a.images.size(); ++i)
    r.images[i] = b.images[std::size_t(a.images[i])];
  return r;
}

Perm inverse(const Perm &a) {
  Perm r;
  r.images.resize(a.images.size());
  for (std::size_t i = 0; i < a.images.size(); ++i) r.images[std::size_t(a.images[i])] = int(i);
  return r;
}

std::size_t FiniteGroup::VecHash::operator()(const std::vector<int> &v) const {
  std::size_t h = v.size();
  for (int x : v) h = h * 1000003u ^ std::size_t(x);
  return h;
}

FiniteGroup FiniteGroup::generate(const std::vector<Perm> &gens, std::size_t bound) {
  FiniteGroup G;
  int deg = gens.empty() ? 1 : gens.front().degree();
  for (auto &g : gens) {
    if (g.degree() != deg) throw std::invalid_argument("generators of different degree");
    if (!g.valid()) throw std::invalid_argument("invalid generator");
  }
  G.degree_ = deg;
  G.gens_ = gens;

  std::unordered_set<std::vector<int>, VecHash> seen;
  std::vector<Perm> found{Perm::identity(deg)};
  seen.insert(found[0].images);
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (auto &g : gens) {
      Perm q = compose(found[k], g);
      if (seen.insert(q.images).second) {
        found.push_back(std::move(q));
        if (found.size() > bound)
          throw InstanceTooLarge("group closure exceeds " + std::to_string(bound) + " elements");
      }
    }
  }
  std::sort(found.begin(), found.end());
  G.elems_ = std::move(found);
  for (std::size_t i = 0; i < G.elems_.size(); ++i) G.index_[G.elems_[i].images] = int(i);

  const std::size_t n = G.elems_.size();
  if (n <= 4096) {
    G.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        G.table_[a * n + b] = uint16_t(G.find(compose(G.elems_[a], G.elems_[b])));
  }
  G.inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a) G.inv_[a] = G.find(inverse(G.elems_[a]));
  G.ord_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    int k = 1, x = int(a);
    while (x != 0) {
      x = G.mul(x, int(a));
      ++k;
    }
    G.ord_[a] = k;
  }
  return G;
}

int FiniteGroup::find(const Perm &p) const {
  auto it = index_.find(p.images);
  return it == index_.end() ? -1 : it->second;
}

int FiniteGroup::slow_mul(int a, int b) const {
  return find(compose(elems_[std::size_t(a)], elems_[std::size_t(b)]));
}

std::vector<Perm> product_generators(const FiniteGroup &a, const FiniteGroup &b) {
  int da = a.degree(), db = b.degree();
  std::vector<Perm> out;
  for (auto &g : a.generators()) {
    Perm p = Perm::identity(da + db);
    for (int i = 0; i < da; ++i) p.images[std::size_t(i)] = g.images[std::size_t(i)];
    out.push_back(p);
  }
  for (auto &g : b.generators()) {
    Perm p = Perm::identity(da + db);
    for (int i = 0; i < db; ++i) p.images[std::size_t(da + i)] = da + g.images[std::size_t(i)];
    out.push_back(p);
  }
  return out;
}

int product_element(const FiniteGroup &prod, const FiniteGroup &a, const FiniteGroup &b, int x,
                    int y) {
  Perm p = Perm::identity(a.degree() + b.degree());
  for (int i = 0; i < a.degree(); ++i) p.images[std::size_t(i)] = a.perm(x).images[std::size_t(i)];
  for (int i = 0; i < b.degree(); ++i)
    p.images[std::size_t(a.degree() + i)] = a.degree() + b.perm(y).images[std::size_t(i)];
  return prod.find(p);
}

std::size_t p_part(std::size_t n, int p) {
  std::size_t r = 1;
  while (n && n % std::size_t(p) == 0) {
    n /= std::size_t(p);
    r *= std::size_t(p);
  }
  return r;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Bits closure(const FiniteGroup &G, const std::vector<int> &gens) {
  Bits out(G.order());
  std::vector<int> list{G.identity()};
  out.set(std::size_t(G.identity()));
  for (std::size_t k = 0; k < list.size(); ++k)
    for (int g : gens) {
      int y = G.mul(list[k], g);
      if (!out.test(std::size_t(y))) {
        out.set(std::size_t(y));
        list.push_back(y);
      }
    }
  return out;
}

Bits closure(const FiniteGroup &G, const Bits &set) { return closure(G, set.members()); }

bool is_subgroup(const FiniteGroup &G, const Bits &X) {
  if (!X.test(std::size_t(G.identity()))) return false;
  auto m = X.members();
  for (int a : m)
    for (int b : m)
      if (!X.test(std::size_t(G.mul(a, b)))) return false;
  return true;
}

bool is_p_element(const FiniteGroup &G, int x, int p) {
  std::size_t o = std::size_t(G.element_order(x));
  return p_part(o, p) == o;
}

bool is_p_group(const FiniteGroup &G, const Bits &X, int p) {
  std::size_t n = X.count();
  return p_part(n, p) == n && is_subgroup(G, X);
}

namespace {

struct SubRec {
  Bits members;
  std::vector<int> gens;
};

bool bits_order_less(const Bits &a, const Bits &b) {
  auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a.members() < b.members();
}

} // namespace

std::vector<Bits> all_subgroups(const FiniteGroup &G, const Bits &H, std::size_t bound) {
  if (H.count() > bound)
    throw InstanceTooLarge("subgroup enumeration bound exceeded (" + std::to_string(H.count()) +
                           " > " + std::to_string(bound) + ")");
  std::unordered_set<Bits, BitsHash> seen;
  std::vector<SubRec> recs;
  std::vector<SubRec> cyclic;
  H.for_each([&](int x) {
    Bits c = closure(G, std::vector<int>{x});
    if (seen.insert(c).second) {
      recs.push_back({c, {x}});
      cyclic.push_back({c, {x}});
    }
  });
  for (std::size_t k = 0; k < recs.size(); ++k) {
    for (auto &c : cyclic) {
      if (c.members.subset_of(recs[k].members)) continue;
      std::vector<int> gens = recs[k].gens;
      gens.push_back(c.gens[0]);
      Bits j = closure(G, gens);
      if (seen.insert(j).second) recs.push_back({j, gens});
    }
  }
  std::vector<Bits> out;
  out.reserve(recs.size());
  for (auto &r : recs) out.push_back(r.members);
  std::sort(out.begin(), out.end(), bits_order_less);
  return out;
}

Bits sylow(const FiniteGroup &G, const Bits &H, int p) {
  Bits P(G.order());
  P.set(std::size_t(G.identity()));
  std::vector<int> gens;
  std::size_t target = p_part(H.count(), p);
  auto elems = H.members();
  bool changed = true;
  while (changed && P.count() < target) {
    changed = false;
    for (int x : elems) {
      if (P.test(std::size_t(x)) || !is_p_element(G, x, p)) continue;
      auto g2 = gens;
      g2.push_back(x);
      Bits J = closure(G, g2);
      std::size_t n = J.count();
      if (p_part(n, p) == n) {
        P = J;
        gens = g2;
        changed = true;
        break;
      }
    }
  }
  return P;
}

Bits conjugate_set(const FiniteGroup &G, const Bits &X, int g) {
  Bits out(G.order());
  X.for_each([&](int x) { out.set(std::size_t(G.conj(x, g))); });
  return out;
}

std::vector<Bits> sylows(const FiniteGroup &G, const Bits &H, int p) {
  Bits P = sylow(G, H, p);
  std::unordered_set<Bits, BitsHash> seen;
  std::vector<Bits> out;
  H.for_each([&](int g) {
    Bits Q = conjugate_set(G, P, g);
    if (seen.insert(Q).second) out.push_back(Q);
  });
  std::sort(out.begin(), out.end(), bits_order_less);
  return out;
}

Bits o_p(const FiniteGroup &G, const Bits &H, int p) {
  auto syl = sylows(G, H, p);
  Bits r = syl.front();
  for (auto &Q : syl) r &= Q;
  return r;
}

Bits o_upper_p(const FiniteGroup &G, const Bits &H, int p) {
  std::vector<int> gens;
  H.for_each([&](int x) {
    if (G.element_order(x) % p != 0) gens.push_back(x);
  });
  return closure(G, gens);
}

Bits centralizer(const FiniteGroup &G, const Bits &H, const Bits &X) {
  Bits out(G.order());
  auto xs = X.members();
  H.for_each([&](int g) {
    for (int x : xs)
      if (G.mul(x, g) != G.mul(g, x)) return;
    out.set(std::size_t(g));
  });
  return out;
}

Bits normalizer(const FiniteGroup &G, const Bits &H, const Bits &X) {
  Bits out(G.order());
  auto xs = X.members();
  H.for_each([&](int g) {
    for (int x : xs)
      if (!X.test(std::size_t(G.conj(x, g)))) return;
    out.set(std::size_t(g));
  });
  return out;
}

Bits normal_closure(const FiniteGroup &G, const Bits &H, const Bits &X) {
  std::vector<int> gens;
  auto hs = H.members();
  Bits seen(G.order());
  X.for_each([&](int x) {
    for (int h : hs) {
      int y = G.conj(x, h);
      if (!seen.test(std::size_t(y))) {
        seen.set(std::size_t(y));
        gens.push_back(y);
      }
    }
  });
  return closure(G, gens);
}

bool is_normal(const FiniteGroup &G, const Bits &H, const Bits &N) {
  if (!N.subset_of(H) || !is_subgroup(G, N)) return false;
  return normalizer(G, H, N) == H;
}

Bits commutator_subgroup(const FiniteGroup &G, const Bits &A, const Bits &B) {
  std::vector<int> gens;
  Bits seen(G.order());
  A.for_each([&](int a) {
    B.for_each([&](int b) {
      int c = G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b));
      if (!seen.test(std::size_t(c))) {
        seen.set(std::size_t(c));
        gens.push_back(c);
      }
    });
  });
  return closure(G, gens);
}

bool is_char_p(const FiniteGroup &G, const Bits &H, int p) {
  Bits O = o_p(G, H, p);
  return centralizer(G, H, O).subset_of(O);
}

std::optional<Bits> strongly_p_embedded_witness(const FiniteGroup &G, const Bits &H, int p) {
  std::size_t n = H.count();
  if (n % std::size_t(p) != 0) return std::nullopt;
  auto subs = all_subgroups(G, H);
  auto hs = H.members();
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
    const Bits &M = *it;
    std::size_t m = M.count();
    if (m == n || m % std::size_t(p) != 0) continue;
    bool ok = true;
    for (int g : hs) {
      if (M.test(std::size_t(g))) continue;
      Bits I = M & conjugate_set(G, M, g);
      if (I.count() % std::size_t(p) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) return M;
  }
  return std::nullopt;
}

bool has_strongly_p_embedded(const FiniteGroup &G, const Bits &H, int p) {
  return strongly_p_embedded_witness(G, H, p).has_value();
}

bool has_strongly_p_embedded_mod(const FiniteGroup &G, const Bits &H, const Bits &P, int p) {
  Bits Q = sylow(G, H, p);
  if (Q.count() == P.count()) return false;
  std::vector<int> gens;
  Bits M(G.order());
  for (auto &R : all_subgroups(G, Q)) {
    if (R.count() == P.count() || !P.subset_of(R)) continue;
    Bits N = normalizer(G, H, R);
    if (N.subset_of(M)) continue;
    N.for_each([&](int x) { gens.push_back(x); });
    M = closure(G, gens);
    if (M == H) return false;
  }
  return M != H;
}

std::string describe(const FiniteGroup &G, const Bits &X) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  X.for_each([&](int x) {
    if (!first) os << ", ";
    os << G.perm(x).str();
    first = false;
  });
  os << "}";
  return os.str();
}

} // namespace lk

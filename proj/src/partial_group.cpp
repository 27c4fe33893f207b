#include "lk/partial_group.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace lk {

// ---- PartialGroup helpers ----

int PartialGroup::product(WordView w) const {
  if (!in_domain(w)) throw DomainError("word not in domain: " + word_name(w));
  return product_unchecked(w);
}

int PartialGroup::try_mul(int a, int b) const {
  int w[2] = {a, b};
  WordView v(w, 2);
  return in_domain(v) ? product_unchecked(v) : -1;
}

int PartialGroup::try_conj(int x, int f) const {
  int w[3] = {inv(f), x, f};
  WordView v(w, 3);
  return in_domain(v) ? product_unchecked(v) : -1;
}

std::string PartialGroup::word_name(WordView w) const {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += name(w[i]);
  }
  return s + ")";
}

std::string PartialGroup::set_name(const Bits &X, std::size_t limit) const {
  std::string s = "{";
  std::size_t k = 0;
  for (int x : X.members()) {
    if (k == limit) {
      s += ", ... (" + std::to_string(X.count()) + " total)";
      break;
    }
    if (k++) s += ", ";
    s += name(x);
  }
  return s + "}";
}

// ---- TablePG ----

TablePG::TablePG(std::vector<int> table, std::size_t n, std::vector<std::string> names)
    : table_(std::move(table)), n_(n), names_(std::move(names)) {
  if (table_.size() != n * n) throw std::invalid_argument("table size mismatch");
  for (std::size_t e = 0; e < n; ++e) {
    bool id = true;
    for (std::size_t x = 0; x < n && id; ++x)
      id = table_[e * n + x] == int(x) && table_[x * n + e] == int(x);
    if (id) {
      one_ = int(e);
      break;
    }
  }
  inv_.assign(n, one_);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (table_[x * n + y] == one_) {
        inv_[x] = int(y);
        break;
      }
}

std::shared_ptr<TablePG> TablePG::from_group(const FiniteGroup &G, const Bits &H) {
  auto elems = H.members();
  std::vector<int> local(G.order(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) local[std::size_t(elems[i])] = int(i);
  std::size_t n = elems.size();
  std::vector<int> table(n * n);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(G.perm(elems[a]).str());
    for (std::size_t b = 0; b < n; ++b) {
      int c = local[std::size_t(G.mul(elems[a], elems[b]))];
      if (c < 0) throw std::invalid_argument("subset is not a subgroup");
      table[a * n + b] = c;
    }
  }
  auto pg = std::make_shared<TablePG>(std::move(table), n, std::move(names));
  pg->embed_ = std::move(elems);
  return pg;
}

int TablePG::product_unchecked(WordView w) const {
  int r = one_;
  for (int x : w) r = table_[std::size_t(r) * n_ + std::size_t(x)];
  return r;
}

std::string TablePG::name(int x) const {
  return names_.empty() ? std::to_string(x) : names_[std::size_t(x)];
}

std::optional<std::string> TablePG::exactness_certificate() const {
  if (n_ * n_ * n_ > 200'000'000) return std::nullopt;
  for (std::size_t x = 0; x < n_; ++x) {
    if (table_[x * n_ + std::size_t(inv_[x])] != one_) return std::nullopt;
    if (table_[std::size_t(one_) * n_ + x] != int(x)) return std::nullopt;
    for (std::size_t y = 0; y < n_; ++y) {
      std::size_t xy = std::size_t(table_[x * n_ + y]);
      for (std::size_t z = 0; z < n_; ++z)
        if (table_[xy * n_ + z] != table_[x * n_ + std::size_t(table_[y * n_ + z])])
          return std::nullopt;
    }
  }
  return "table is a group (associativity checked on all triples)";
}

// ---- SubsetPG ----

SubsetPG::SubsetPG(PGPtr parent, const Bits &X) : parent_(std::move(parent)) {
  elems_ = X.members();
  local_.assign(parent_->size(), -1);
  for (std::size_t i = 0; i < elems_.size(); ++i) local_[std::size_t(elems_[i])] = int(i);
  if (local_[std::size_t(parent_->one())] < 0) throw std::invalid_argument("subset misses 1");
  for (int x : elems_)
    if (local_[std::size_t(parent_->inv(x))] < 0)
      throw std::invalid_argument("subset not closed under inversion");
}

bool SubsetPG::in_domain(WordView w) const {
  Word u(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) u[i] = elems_[std::size_t(w[i])];
  return parent_->in_domain(u);
}

int SubsetPG::product_unchecked(WordView w) const {
  Word u(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) u[i] = elems_[std::size_t(w[i])];
  int r = local_[std::size_t(parent_->product_unchecked(u))];
  if (r < 0) throw DomainError("product leaves the subset: " + parent_->word_name(u));
  return r;
}

std::optional<std::string> SubsetPG::exactness_certificate() const {
  auto pc = parent_->exactness_certificate();
  if (!pc) return std::nullopt;
  Bits X(parent_->size());
  for (int x : elems_) X.set(std::size_t(x));
  if (partial_subgroup_violation(*parent_, X)) return std::nullopt;
  return "partial subgroup of an exact partial group; " + *pc;
}

// ---- QuotientPG ----

QuotientPG::QuotientPG(PGPtr parent, const Bits &N) : parent_(std::move(parent)) {
  const std::size_t n = parent_->size();
  auto nm = N.members();
  std::vector<Bits> cos;
  for (std::size_t f = 0; f < n; ++f) {
    Bits c(n);
    for (int x : nm) {
      int y = parent_->try_mul(x, int(f));
      if (y >= 0) c.set(std::size_t(y));
    }
    cos.push_back(std::move(c));
  }
  std::vector<Bits> maximal;
  for (std::size_t i = 0; i < n; ++i) {
    bool is_max = true;
    for (std::size_t j = 0; j < n && is_max; ++j)
      if (!(cos[j] == cos[i]) && cos[i].subset_of(cos[j])) is_max = false;
    if (is_max && std::find(maximal.begin(), maximal.end(), cos[i]) == maximal.end())
      maximal.push_back(cos[i]);
  }
  std::sort(maximal.begin(), maximal.end(),
            [](const Bits &a, const Bits &b) { return a.members() < b.members(); });
  proj_.assign(n, -1);
  for (std::size_t k = 0; k < maximal.size(); ++k) {
    cosets_.push_back(maximal[k].members());
    for (int g : cosets_.back()) {
      if (proj_[std::size_t(g)] >= 0 && !defect_)
        defect_ = "element " + parent_->name(g) + " lies in two maximal cosets";
      if (proj_[std::size_t(g)] < 0) proj_[std::size_t(g)] = int(k);
    }
  }
  for (std::size_t g = 0; g < n; ++g)
    if (proj_[g] < 0 && !defect_) defect_ = "element " + parent_->name(int(g)) + " in no coset";
}

int QuotientPG::inv(int x) const {
  return proj_[std::size_t(parent_->inv(cosets_[std::size_t(x)][0]))];
}

bool QuotientPG::lift(WordView w, std::size_t i, Word &cur) const {
  if (i == w.size()) return true;
  for (int g : cosets_[std::size_t(w[i])]) {
    cur.push_back(g);
    if (parent_->in_domain(cur) && lift(w, i + 1, cur)) return true;
    cur.pop_back();
  }
  return false;
}

bool QuotientPG::in_domain(WordView w) const {
  Word cur;
  return lift(w, 0, cur);
}

int QuotientPG::product_unchecked(WordView w) const {
  Word cur;
  if (!lift(w, 0, cur)) throw DomainError("quotient word has no lift");
  return proj_[std::size_t(parent_->product_unchecked(cur))];
}

std::string QuotientPG::name(int x) const {
  return "N" + parent_->name(cosets_[std::size_t(x)][0]);
}

std::shared_ptr<QuotientPG> quotient(PGPtr PG, const Bits &N) {
  if (auto v = partial_normal_violation(*PG, N))
    throw std::invalid_argument("not a partial normal subgroup: " + v->what);
  return std::make_shared<QuotientPG>(std::move(PG), N);
}

// ---- ProductPG ----

ProductPG::ProductPG(PGPtr a, PGPtr b) : a_(std::move(a)), b_(std::move(b)) {}

bool ProductPG::in_domain(WordView w) const {
  Word u(w.size()), v(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    u[i] = first(w[i]);
    v[i] = second(w[i]);
  }
  return a_->in_domain(u) && b_->in_domain(v);
}

int ProductPG::product_unchecked(WordView w) const {
  Word u(w.size()), v(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    u[i] = first(w[i]);
    v[i] = second(w[i]);
  }
  return pack(a_->product_unchecked(u), b_->product_unchecked(v));
}

std::string ProductPG::name(int x) const {
  return "[" + a_->name(first(x)) + " | " + b_->name(second(x)) + "]";
}

std::optional<std::string> ProductPG::exactness_certificate() const {
  auto ca = a_->exactness_certificate();
  auto cb = b_->exactness_certificate();
  if (!ca || !cb) return std::nullopt;
  return "coordinatewise: " + *ca + " / " + *cb;
}

std::shared_ptr<ProductPG> direct_product(PGPtr a, PGPtr b) {
  return std::make_shared<ProductPG>(std::move(a), std::move(b));
}

// ---- axioms ----

namespace {

// check one word in D; fills report on failure
bool check_word(const PartialGroup &PG, const Word &w, AxiomReport &rep) {
  auto fail = [&](const char *ax) {
    rep.ok = false;
    rep.failed_axiom = ax;
    rep.witness = w;
    return false;
  };
  const std::size_t n = w.size();
  const int prod = PG.product_unchecked(w);
  if (n == 1 && prod != w[0]) return fail("PG2");
  for (std::size_t k = 0; k < n; ++k) {
    if (!PG.in_domain(WordView(w).subspan(0, k))) return fail("PG1");
    if (!PG.in_domain(WordView(w).subspan(k))) return fail("PG1");
  }
  // words here are short; scratch space stays on the stack
  if (n > 32) throw std::invalid_argument("word too long for the axiom checker");
  int u[32], v[64];
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) {
      if (i == 0 && j == n) continue;
      std::size_t m = 0;
      for (std::size_t k = 0; k < i; ++k) u[m++] = w[k];
      u[m++] = PG.product_unchecked(WordView(w).subspan(i, j - i));
      for (std::size_t k = j; k < n; ++k) u[m++] = w[k];
      if (!PG.in_domain(WordView(u, m)) || PG.product_unchecked(WordView(u, m)) != prod) return fail("PG3");
    }
  for (std::size_t k = 0; k < n; ++k) {
    v[k] = PG.inv(w[n - 1 - k]);
    v[n + k] = w[k];
  }
  if (!PG.in_domain(WordView(v, 2 * n)) || PG.product_unchecked(WordView(v, 2 * n)) != PG.one()) return fail("PG4");
  return true;
}

} // namespace

AxiomReport check_axioms(const PartialGroup &PG, int word_len_bound, std::size_t word_budget) {
  if (word_len_bound < 3) throw std::invalid_argument("word length bound must be at least 3");
  AxiomReport rep;
  rep.bound = word_len_bound;
  const std::size_t n = PG.size();
  for (std::size_t x = 0; x < n; ++x)
    if (PG.inv(PG.inv(int(x))) != int(x)) {
      rep.ok = false;
      rep.failed_axiom = "inversion";
      rep.witness = Word{int(x)};
      return rep;
    }
  if (!PG.in_domain(WordView()) || PG.product_unchecked(WordView()) != PG.one()) {
    rep.ok = false;
    rep.failed_axiom = "PG2";
    rep.witness = Word{};
    return rep;
  }
  std::vector<int> alphabet(n);
  for (std::size_t i = 0; i < n; ++i) alphabet[i] = int(i);
  std::size_t layer = 1;
  for (int len = 1; len <= word_len_bound; ++len) {
    layer *= n;
    if (len > 1 && rep.words + layer > word_budget) break;
    for_each_word(alphabet, len, [&](const Word &w) {
      ++rep.words;
      if (!PG.in_domain(w)) {
        if (len == 1) {
          rep.ok = false;
          rep.failed_axiom = "PG1";
          rep.witness = w;
          return false;
        }
        return true;
      }
      return check_word(PG, w, rep);
    });
    if (!rep.ok) return rep;
    rep.exhaustive_to = len;
  }
  if (auto cert = PG.exactness_certificate()) {
    rep.exact = true;
    rep.note = *cert;
  } else {
    rep.note = "bounded certificate: all words up to length " +
               std::to_string(rep.exhaustive_to);
  }
  return rep;
}

// ---- conjugation, centralizers ----

Bits conj_domain(const PartialGroup &PG, int f) {
  Bits d(PG.size());
  for (std::size_t x = 0; x < PG.size(); ++x)
    if (PG.conj_defined(int(x), f)) d.set(x);
  return d;
}

int conjugate(const PartialGroup &PG, int x, int f) {
  int r = PG.try_conj(x, f);
  if (r < 0) throw DomainError(PG.name(x) + " not in D(" + PG.name(f) + ")");
  return r;
}

Bits centralizer_p(const PartialGroup &PG, const Bits &X) {
  Bits out(PG.size());
  auto xs = X.members();
  for (std::size_t f = 0; f < PG.size(); ++f) {
    bool ok = true;
    for (int x : xs)
      if (PG.try_conj(x, int(f)) != x) {
        ok = false;
        break;
      }
    if (ok) out.set(f);
  }
  return out;
}

Bits normalizer_p(const PartialGroup &PG, const Bits &X) {
  Bits out(PG.size());
  auto xs = X.members();
  for (std::size_t f = 0; f < PG.size(); ++f) {
    Bits img(PG.size());
    bool ok = true;
    for (int x : xs) {
      int y = PG.try_conj(x, int(f));
      if (y < 0 || !X.test(std::size_t(y))) {
        ok = false;
        break;
      }
      img.set(std::size_t(y));
    }
    if (ok && img == X) out.set(f);
  }
  return out;
}

Bits center(const PartialGroup &PG) { return centralizer_p(PG, PG.all()); }

std::optional<PairWitness> commute_violation(const PartialGroup &PG, const Bits &X,
                                             const Bits &Y) {
  auto ys = Y.members();
  std::optional<PairWitness> bad;
  X.for_each([&](int x) {
    if (bad) return;
    for (int y : ys) {
      int xy = PG.try_mul(x, y);
      if (xy < 0) continue;
      if (PG.try_mul(y, x) != xy) {
        bad = PairWitness{x, y};
        return;
      }
    }
  });
  return bad;
}

bool commutes(const PartialGroup &PG, const Bits &X, const Bits &Y) {
  return !commute_violation(PG, X, Y);
}

std::optional<PairWitness> fix_violation(const PartialGroup &PG, const Bits &X, const Bits &Y) {
  auto ys = Y.members();
  std::optional<PairWitness> bad;
  X.for_each([&](int x) {
    if (bad) return;
    for (int y : ys) {
      int c = PG.try_conj(y, x);
      if (c >= 0 && c != y) {
        bad = PairWitness{x, y};
        return;
      }
    }
  });
  return bad;
}

bool fixes_under_conjugation(const PartialGroup &PG, const Bits &X, const Bits &Y) {
  return !fix_violation(PG, X, Y);
}

// ---- closures ----

namespace {

Bits close(const PartialGroup &PG, const Bits &X, bool normal) {
  const std::size_t n = PG.size();
  Bits in(n);
  std::vector<int> members, queue;
  auto add = [&](int x) {
    if (x >= 0 && !in.test(std::size_t(x))) {
      in.set(std::size_t(x));
      queue.push_back(x);
    }
  };
  add(PG.one());
  X.for_each(add);
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
    if (normal)
      for (std::size_t f = 0; f < n; ++f) add(PG.try_conj(a, int(f)));
  }
  return in;
}

} // namespace

Bits partial_subgroup_closure(const PartialGroup &PG, const Bits &X) { return close(PG, X, false); }
Bits normal_closure(const PartialGroup &PG, const Bits &X) { return close(PG, X, true); }

std::optional<Violation> partial_subgroup_violation(const PartialGroup &PG, const Bits &X) {
  if (!X.test(std::size_t(PG.one()))) return Violation{"missing identity", {}};
  auto xs = X.members();
  for (int x : xs)
    if (!X.test(std::size_t(PG.inv(x)))) return Violation{"not closed under inversion", {x}};
  for (int a : xs)
    for (int b : xs) {
      int c = PG.try_mul(a, b);
      if (c >= 0 && !X.test(std::size_t(c))) return Violation{"product leaves subset", {a, b}};
    }
  return std::nullopt;
}

std::optional<Violation> partial_normal_violation(const PartialGroup &PG, const Bits &N) {
  if (auto v = partial_subgroup_violation(PG, N)) return v;
  auto ns = N.members();
  for (std::size_t f = 0; f < PG.size(); ++f)
    for (int x : ns) {
      int c = PG.try_conj(x, int(f));
      if (c >= 0 && !N.test(std::size_t(c)))
        return Violation{"conjugate leaves subset", {PG.inv(int(f)), x, int(f)}};
    }
  return std::nullopt;
}

bool is_partial_subgroup(const PartialGroup &PG, const Bits &X) {
  return !partial_subgroup_violation(PG, X);
}

bool is_partial_normal(const PartialGroup &PG, const Bits &N) {
  return !partial_normal_violation(PG, N);
}

bool is_group_subset(const PartialGroup &PG, const Bits &X) {
  if (!is_partial_subgroup(PG, X)) return false;
  auto xs = X.members();
  bool ok = true;
  for (int len = 2; len <= 3 && ok; ++len)
    for_each_word(xs, len, [&](const Word &w) { return ok = PG.in_domain(w); });
  return ok;
}

// ---- homomorphisms ----

HomReport check_homomorphism(const PartialGroup &A, const PartialGroup &B,
                             const std::vector<int> &map, int word_len_bound,
                             std::size_t word_budget) {
  HomReport rep;
  if (map.size() != A.size()) {
    rep.ok = false;
    rep.what = "map is not total";
    return rep;
  }
  std::vector<int> alphabet(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) alphabet[i] = int(i);
  std::size_t words = 0, layer = 1;
  for (int len = 0; len <= word_len_bound && rep.ok; ++len) {
    if (len > 0) layer *= A.size();
    if (len > 1 && words + layer > word_budget) break;
    for_each_word(alphabet, len, [&](const Word &w) {
      ++words;
      if (!A.in_domain(w)) return true;
      Word v(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) v[i] = map[std::size_t(w[i])];
      if (!B.in_domain(v)) {
        rep = {false, w, "image word not in domain"};
        return false;
      }
      if (map[std::size_t(A.product_unchecked(w))] != B.product_unchecked(v)) {
        rep = {false, w, "products disagree"};
        return false;
      }
      return true;
    });
  }
  return rep;
}

bool is_homomorphism(const PartialGroup &A, const PartialGroup &B, const std::vector<int> &map,
                     int word_len_bound) {
  return check_homomorphism(A, B, map, word_len_bound).ok;
}

bool is_isomorphism(const PartialGroup &A, const PartialGroup &B, const std::vector<int> &map,
                    int word_len_bound) {
  if (A.size() != B.size() || map.size() != A.size()) return false;
  std::vector<int> back(B.size(), -1);
  for (std::size_t i = 0; i < map.size(); ++i) {
    int y = map[i];
    if (y < 0 || std::size_t(y) >= B.size() || back[std::size_t(y)] >= 0) return false;
    back[std::size_t(y)] = int(i);
  }
  return is_homomorphism(A, B, map, word_len_bound) &&
         is_homomorphism(B, A, back, word_len_bound);
}

// ---- central products ----

namespace {

// all tuples (f1,...,fk) with fi in factor i; stops when f returns false
template <class F>
void for_each_tuple(const std::vector<std::vector<int>> &fs, std::size_t i, Word &cur, F &&f,
                    bool &go) {
  if (!go) return;
  if (i == fs.size()) {
    go = f(static_cast<const Word &>(cur));
    return;
  }
  for (int x : fs[i]) {
    cur.push_back(x);
    for_each_tuple(fs, i + 1, cur, f, go);
    cur.pop_back();
    if (!go) return;
  }
}

} // namespace

Bits product_set(const PartialGroup &PG, const std::vector<Bits> &factors) {
  Bits out(PG.size());
  if (factors.empty()) {
    out.set(std::size_t(PG.one()));
    return out;
  }
  std::vector<std::vector<int>> fs;
  for (auto &b : factors) fs.push_back(b.members());
  // depth-first with prefix pruning (PG1)
  std::vector<int> cur;
  auto rec = [&](auto &&self, std::size_t i) -> void {
    if (i == fs.size()) {
      out.set(std::size_t(PG.product_unchecked(cur)));
      return;
    }
    for (int x : fs[i]) {
      cur.push_back(x);
      if (PG.in_domain(cur)) self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

CentralProductReport central_product_check(const PartialGroup &PG,
                                           const std::vector<Bits> &factors, int width_bound,
                                           std::size_t matrix_budget) {
  CentralProductReport rep;
  const std::size_t k = factors.size();
  std::vector<std::vector<int>> fs;
  for (auto &b : factors) fs.push_back(b.members());

  if (!(product_set(PG, factors) == PG.all())) {
    rep.ok = false;
    rep.failed = "P";
    return rep;
  }
  // C1
  {
    Word cur;
    bool go = true;
    for_each_tuple(fs, 0, cur, [&](const Word &t) {
      if (PG.in_domain(t)) return true;
      rep.ok = false;
      rep.failed = "C1";
      rep.witness_rows = {t};
      return false;
    }, go);
    if (!rep.ok) return rep;
  }
  // columns: every tuple with its product
  std::vector<Word> cols;
  std::vector<int> colprod;
  {
    Word cur;
    bool go = true;
    for_each_tuple(fs, 0, cur, [&](const Word &t) {
      cols.push_back(t);
      colprod.push_back(PG.product_unchecked(t));
      return true;
    }, go);
  }
  auto check_matrix = [&](const std::vector<std::size_t> &pick) {
    const std::size_t n = pick.size();
    Word w(n);
    std::vector<Word> rows(k, Word(n));
    for (std::size_t j = 0; j < n; ++j) {
      w[j] = colprod[pick[j]];
      for (std::size_t i = 0; i < k; ++i) rows[i][j] = cols[pick[j]][i];
    }
    bool rows_in = true;
    for (auto &r : rows) rows_in = rows_in && PG.in_domain(r);
    bool w_in = PG.in_domain(w);
    bool good = rows_in == w_in;
    if (good && w_in) {
      Word pr(k);
      for (std::size_t i = 0; i < k; ++i) pr[i] = PG.product_unchecked(rows[i]);
      good = PG.in_domain(pr) && PG.product_unchecked(pr) == PG.product_unchecked(w);
    }
    if (!good) {
      rep.ok = false;
      rep.failed = "C2";
      rep.witness_rows = rows;
    }
    return good;
  };
  const std::size_t m = cols.size();
  std::mt19937_64 rng(0x5eed);
  for (int n = 1; n <= width_bound && rep.ok; ++n) {
    double total = 1;
    for (int j = 0; j < n; ++j) total *= double(m);
    std::vector<std::size_t> pick(std::size_t(n), 0);
    if (total <= double(matrix_budget)) {
      while (true) {
        if (!check_matrix(pick)) return rep;
        int j = n - 1;
        while (j >= 0 && ++pick[std::size_t(j)] == m) pick[std::size_t(j--)] = 0;
        if (j < 0) break;
      }
      rep.width_checked = n;
    } else {
      std::uniform_int_distribution<std::size_t> d(0, m - 1);
      for (std::size_t s = 0; s < matrix_budget; ++s) {
        for (auto &x : pick) x = d(rng);
        if (!check_matrix(pick)) return rep;
      }
      rep.sampled = true;
    }
  }
  return rep;
}

} // namespace lk

#pragma once
// Brute-force reference computations on raw permutations. Nothing here calls into lk.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

using P = std::vector<int>;

inline P parse(const std::string &cycles, int n) {
  P p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[std::size_t(i)] = i;
  std::size_t i = 0;
  while ((i = cycles.find('(', i)) != std::string::npos) {
    std::size_t j = cycles.find(')', i);
    std::istringstream in(cycles.substr(i + 1, j - i - 1));
    std::vector<int> c;
    for (int x; in >> x;) c.push_back(x);
    for (std::size_t k = 0; k < c.size(); ++k) p[std::size_t(c[k])] = c[(k + 1) % c.size()];
    i = j;
  }
  return p;
}

// first a, then b
inline P mul(const P &a, const P &b) {
  P r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[std::size_t(a[i])];
  return r;
}
inline P inv(const P &a) {
  P r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[std::size_t(a[i])] = int(i);
  return r;
}
inline P conj(const P &x, const P &g) { return mul(mul(inv(g), x), g); }

using Set = std::set<P>;

inline Set generate(const std::vector<P> &gens, int n) {
  P e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[std::size_t(i)] = i;
  Set out{e};
  std::vector<P> todo{e};
  while (!todo.empty()) {
    P x = todo.back();
    todo.pop_back();
    for (auto &g : gens) {
      P y = mul(x, g);
      if (out.insert(y).second) todo.push_back(y);
    }
  }
  return out;
}
inline Set from_cycles(const std::vector<std::string> &gens, int n) {
  std::vector<P> g;
  for (auto &s : gens) g.push_back(parse(s, n));
  return generate(g, n);
}
inline Set closure(const Set &X, int n) { return generate(std::vector<P>(X.begin(), X.end()), n); }

inline int order_of(const P &x) {
  P y = x;
  int k = 1;
  while (true) {
    bool id = true;
    for (std::size_t i = 0; i < y.size(); ++i) id &= y[i] == int(i);
    if (id) return k;
    y = mul(y, x);
    ++k;
  }
}

// every subgroup of a group whose subgroups are all 2-generated
inline std::vector<Set> subgroups_2gen(const Set &G, int n) {
  std::set<Set> out;
  std::vector<P> el(G.begin(), G.end());
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i; j < el.size(); ++j) out.insert(generate({el[i], el[j]}, n));
  return {out.begin(), out.end()};
}

inline bool normal_in(const Set &N, const Set &G) {
  for (auto &g : G)
    for (auto &x : N)
      if (!N.count(conj(x, g))) return false;
  return true;
}

inline std::vector<Set> normal_subgroups(const Set &G, int n) {
  std::vector<Set> out;
  for (auto &H : subgroups_2gen(G, n))
    if (normal_in(H, G)) out.push_back(H);
  return out;
}

inline Set centralizer(const Set &G, const Set &X) {
  Set out;
  for (auto &g : G) {
    bool ok = true;
    for (auto &x : X) ok = ok && mul(x, g) == mul(g, x);
    if (ok) out.insert(g);
  }
  return out;
}

inline bool is_p_power(std::size_t k, int p) {
  while (k % std::size_t(p) == 0) k /= std::size_t(p);
  return k == 1;
}

// largest normal p-subgroup as the product of all normal p-subgroups
inline Set o_p(const Set &G, int n, int p) {
  Set acc;
  for (auto &N : normal_subgroups(G, n))
    if (is_p_power(N.size(), p)) acc.insert(N.begin(), N.end());
  return closure(acc, n);
}

// smallest normal subgroup with p-group quotient: intersection of all such
inline Set o_upper_p(const Set &G, int n, int p) {
  Set acc = G;
  for (auto &N : normal_subgroups(G, n))
    if (is_p_power(G.size() / N.size(), p)) {
      Set x;
      for (auto &g : acc)
        if (N.count(g)) x.insert(g);
      acc = x;
    }
  return acc;
}

inline Set derived(const Set &G, int n) {
  Set c;
  for (auto &a : G)
    for (auto &b : G) c.insert(mul(mul(inv(a), inv(b)), mul(a, b)));
  return closure(c, n);
}

inline Set intersect(const Set &a, const Set &b) {
  Set r;
  for (auto &x : a)
    if (b.count(x)) r.insert(x);
  return r;
}

// S_g = {s in S : s^g in S}
inline Set s_of(const Set &S, const P &g) {
  Set r;
  for (auto &s : S)
    if (S.count(conj(s, g))) r.insert(s);
  return r;
}

} // namespace oracle

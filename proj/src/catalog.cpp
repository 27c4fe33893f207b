#include "lk/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <mutex>

#include "lk/fusion.hpp"
#include "lk/normal_structure.hpp"

namespace lk {

using nlohmann::json;

namespace {

const json S4 = {{"group", {"(0 1)", "(0 1 2 3)"}}, {"degree", 4}, {"prime", 2}};
const json A4 = {{"group", {"(0 1 2)", "(0 1)(2 3)"}}, {"degree", 4}, {"prime", 2}};
const json A5 = {{"group", {"(0 1 2 3 4)", "(0 1 2)"}}, {"degree", 5}, {"prime", 2}};
const json SL23 = {{"group", {"(2 3 4)(5 7 6)", "(0 2 1 5)(3 4 7 6)"}}, {"degree", 8}, {"prime", 2}};
const json S3 = {{"group", {"(0 1)", "(0 1 2)"}}, {"degree", 3}, {"prime", 3}};
const json PSL27 = {{"group", {"(0 1 2 3 4 5 6)", "(2 4)(5 6)"}}, {"degree", 7}, {"prime", 2}};
const json PGL27 = {{"group", {"(0 1 2 3 4 5 6)", "(1 3 2 6 4 5)", "(0 7)(1 6)(2 3)(4 5)"}},
                    {"degree", 8},
                    {"prime", 2}};

json with(json base, const std::string &name, json delta) {
  base["name"] = name;
  base["delta"] = std::move(delta);
  return base;
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> c;
  auto add = [&](json spec, std::string note) {
    std::string n = spec.at("name");
    c.push_back({n, std::move(note), std::move(spec)});
  };
  add(with(S4, "S4_p2_all", "all"), "group-locality of S4, characteristic 2");
  add(with(S4, "S4_p2_fcr", "fcr"), "S4 restricted to overgroups of centric radicals");
  add(with(A4, "A4_p2_all", "all"), "group-locality of A4");
  add(with(SL23, "SL23_p2_all", "all"), "group-locality of SL(2,3)");
  add(with(S3, "S3_p3_all", "all"), "group-locality of S3 at p = 3");
  add(with(A5, "A5_p2_nontrivial", "nontrivial"), "A5 with the nontrivial subgroups of V4");
  add({{"name", "A5xA5_p2"}, {"product", {"A5_p2_nontrivial", "A5_p2_nontrivial"}}},
      "direct product of two copies of A5_p2_nontrivial");
  add(with(PSL27, "PSL27_p2_fs", "fs"), "PSL(2,7) on subcentric objects; quasisimple");
  add(with(PSL27, "PSL27_p2_fcr", "fcr"), "PSL(2,7) on overgroups of centric radicals");
  add(with(PGL27, "PGL27_p2_fcr", "fcr"), "PGL(2,7) on overgroups of centric radicals");
  add(with(PGL27, "PGL27_p2_deltaF", "deltaF"), "PGL(2,7) on delta(F); regular, not subcentric");
  add({{"name", "PSL27xA4_p2_fs"}, {"product", {"PSL27_p2_fs", "A4_p2_all"}}, {"delta", "fs"}},
      "PSL(2,7) x A4 on subcentric objects; one component and O_2 = V4");
  add({{"name", "PSL27xC2_p2_fs"},
       {"product", {"PSL27_p2_fs", {{"group", {"(0 1)"}}, {"degree", 2}, {"prime", 2}, {"delta", "all"}}}},
       {"delta", "fs"}},
      "PSL(2,7) x C2 on subcentric objects");
  add({{"name", "S4_p2_corrupt"}, {"base", "S4_p2_all"}, {"ops", {{{"corrupt", {5, 7}}}}}, {"fixture", true}},
      "negative control: S4 table with one wrong entry");
  add({{"name", "A5_p2_notclosed"},
       {"group", A5["group"]},
       {"degree", 5},
       {"prime", 2},
       {"sylow", {"(0 1)(2 3)", "(0 2)(1 3)"}},
       {"delta", {{"(0 1)(2 3)"}, {"(0 1)(2 3)", "(0 2)(1 3)"}}},
       {"fixture", true}},
      "negative control: object set not closed under fusion");
  add({{"name", "S4_p2_nonnormal"}, {"base", "S4_p2_all"}, {"ops", {{{"quotient", {"(0 1)"}}}}}, {"fixture", true}},
      "negative control: quotient by a non-normal subgroup");
  return c;
}

Bits subgroup_of(const FiniteGroup &G, const json &gens, int degree) {
  std::vector<int> idx;
  for (auto &g : gens) {
    Perm p = Perm::parse(g.get<std::string>(), degree);
    int i = G.find(p);
    if (i < 0) throw SpecError("element outside the group: " + g.get<std::string>());
    idx.push_back(i);
  }
  return closure(G, idx);
}

// Δ over the full context of a finite group
ObjectSet resolve_group_delta(const PContextPtr &ctx, const json &kw, int degree) {
  const FiniteGroup &G = ctx->group();
  if (kw.is_array()) {
    std::vector<Mask> v;
    for (auto &gens : kw) {
      Bits H = subgroup_of(G, gens, degree);
      Mask m = ctx->from_g(H);
      if (H.count() != std::size_t(std::popcount(m)))
        throw SpecError("object is not inside the Sylow subgroup");
      v.push_back(m);
    }
    return ObjectSet(v);
  }
  if (!kw.is_string()) throw SpecError("delta must be a keyword or a list of generator lists");
  std::string k = kw;
  if (k == "all") return ObjectSet(ctx->subgroups());
  if (k == "nontrivial") {
    std::vector<Mask> v;
    for (Mask m : ctx->subgroups())
      if (m != 1) v.push_back(m);
    return ObjectSet(v);
  }
  auto F = group_fusion(ctx, ctx->full(), G.all());
  if (k == "fs") return subcentric_set(F);
  ObjectSet fcr = overgroup_closure(*ctx, ctx->full(), fcr_set(F).masks());
  if (k == "fcr") return fcr;
  if (k == "deltaF") {
    // δ(F) does not depend on the linking locality; the F^cr one is the cheapest
    auto L0 = locality_from_group(ctx, fcr);
    Structure st(L0);
    if (!st.linking()) throw CertificationError("deltaF: the F^cr locality is not linking");
    return st.delta_f();
  }
  throw SpecError("unknown delta keyword: " + k);
}

std::shared_ptr<const FiniteGroup> group_of(const json &spec, int &degree) {
  std::vector<Perm> gens;
  degree = 0;
  for (auto &g : spec.at("group")) {
    std::string s = g;
    for (std::size_t i = 0; i < s.size();) {
      if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        degree = std::max(degree, std::stoi(s.substr(i, j - i)) + 1);
        i = j;
      } else {
        ++i;
      }
    }
  }
  if (spec.contains("degree")) {
    int d = spec["degree"];
    if (d < degree) throw SpecError("degree mismatch");
    degree = d;
  }
  for (auto &g : spec.at("group")) gens.push_back(Perm::parse(g.get<std::string>(), degree));
  return std::make_shared<FiniteGroup>(FiniteGroup::generate(gens, 40000));
}

std::mutex cache_mu;
std::map<std::string, InstancePtr> cache;

InstancePtr build_impl(const json &spec);

void finish_locality(Instance &I) {
  I.pg = I.L;
  I.group_backed = I.L->size() == I.G->order() && I.L->delta().size() == I.ctx->subgroups().size();
  if (I.group_backed && I.G->order() <= Locality::table_limit)
    I.table = TablePG::from_group(*I.G, I.G->all());
}

void build_group(Instance &I, const json &spec) {
  int degree = 0;
  I.G = group_of(spec, degree);
  int p = spec.value("prime", 0);
  if (!is_prime(p)) throw SpecError("prime missing or not prime");
  Bits S0 = spec.contains("sylow") ? subgroup_of(*I.G, spec["sylow"], degree) : sylow(*I.G, I.G->all(), p);
  if (p_part(I.G->order(), p) != S0.count()) throw SpecError("given subgroup is not a Sylow subgroup");
  if (S0.count() > 64) throw InstanceTooLarge("Sylow subgroup larger than 64");
  I.ctx = std::make_shared<PContext>(I.G, S0, p);
  ObjectSet delta = resolve_group_delta(I.ctx, spec.value("delta", json("all")), degree);
  I.L = locality_from_group(I.ctx, delta);
  finish_locality(I);
}

void build_product(Instance &I, const json &spec) {
  const json &fs = spec.at("product");
  if (!fs.is_array() || fs.size() != 2) throw SpecError("product takes two factors");
  auto A = build_impl(fs[0]), B = build_impl(fs[1]);
  if (!A->L || !B->L) throw SpecError("product factors must be localities");
  if (A->L->prime() != B->L->prime()) throw SpecError("product factors over different primes");
  const FiniteGroup &GA = *A->G, &GB = *B->G;
  I.G = std::make_shared<FiniteGroup>(FiniteGroup::generate(product_generators(GA, GB), 40000));
  const Locality &LA = *A->L, &LB = *B->L;
  // S = S_A × S_B inside G
  Bits Sg(I.G->order());
  Bits SA = LA.ctx().to_g(LA.sylow()), SB = LB.ctx().to_g(LB.sylow());
  std::vector<int> sa, sb;
  SA.for_each([&](int x) { sa.push_back(x); });
  SB.for_each([&](int y) { sb.push_back(y); });
  for (int x : sa)
    for (int y : sb) Sg.set(std::size_t(product_element(*I.G, GA, GB, x, y)));
  if (Sg.count() > 64) throw InstanceTooLarge("Sylow subgroup larger than 64");
  I.ctx = std::make_shared<PContext>(I.G, Sg, LA.prime());
  const PContext &C = *I.ctx;

  ObjectSet delta;
  if (spec.contains("delta")) {
    delta = resolve_group_delta(I.ctx, spec["delta"], GA.degree() + GB.degree());
  } else {
    // P with P ∩ S_i an object of factor i
    Mask S1 = 0, S2 = 0;
    std::vector<int> to_a(std::size_t(C.size()), -1), to_b(std::size_t(C.size()), -1);
    for (int x : sa) {
      int s = C.s_of(product_element(*I.G, GA, GB, x, GB.identity()));
      S1 |= Mask{1} << s;
      to_a[std::size_t(s)] = LA.ctx().s_of(x);
    }
    for (int y : sb) {
      int s = C.s_of(product_element(*I.G, GA, GB, GA.identity(), y));
      S2 |= Mask{1} << s;
      to_b[std::size_t(s)] = LB.ctx().s_of(y);
    }
    auto back = [](Mask m, const std::vector<int> &tr) {
      Mask r = 0;
      for (; m; m &= m - 1) r |= Mask{1} << tr[std::size_t(std::countr_zero(m))];
      return r;
    };
    std::vector<Mask> v;
    for (Mask P : C.subgroups())
      if (LA.delta().contains(back(P & S1, to_a)) && LB.delta().contains(back(P & S2, to_b)))
        v.push_back(P);
    delta = ObjectSet(v);
  }
  I.L = locality_from_group(I.ctx, delta);
  I.factors = {A, B};
  for (int k = 0; k < 2; ++k) {
    const Locality &Lk = k == 0 ? LA : LB;
    Bits X(I.L->size());
    for (std::size_t f = 0; f < Lk.size(); ++f) {
      int g = k == 0 ? product_element(*I.G, GA, GB, Lk.g_of(int(f)), GB.identity())
                     : product_element(*I.G, GA, GB, GA.identity(), Lk.g_of(int(f)));
      int l = I.L->local_of(g);
      if (l < 0) throw CertificationError("factor copy is not inside the product locality");
      X.set(std::size_t(l));
    }
    I.factor_elems.push_back(X);
  }
  finish_locality(I);
}

void apply_op(Instance &I, const json &op) {
  if (!op.is_object() || op.size() != 1) throw SpecError("malformed directive: " + op.dump());
  auto &[key, arg] = *op.items().begin();
  if (key == "restrict") {
    if (!I.L) throw SpecError("restrict needs a locality");
    ObjectSet sub = resolve_delta(I.L, arg);
    auto R = restriction(*I.L, sub);
    auto rep = check_locality_axioms(*R);
    if (!rep.ok) throw CertificationError("restriction fails (" + rep.failed + "): " + rep.witness);
    I.L = R;
    I.factors.clear();
    I.factor_elems.clear();
    finish_locality(I);
  } else if (key == "corrupt") {
    if (!I.group_backed) throw SpecError("corrupt needs a group-backed instance");
    auto T = TablePG::from_group(*I.G, I.G->all());
    int a = arg.at(0), b = arg.at(1);
    int n = int(T->size());
    if (a < 0 || b < 0 || a >= n || b >= n) throw SpecError("corrupt indices out of range");
    int c = arg.size() > 2 ? arg.at(2).get<int>() : (T->try_mul(a, b) + 1) % n;
    T->corrupt(a, b, c);
    I.pg = T;
    I.L = nullptr;
    I.group_backed = false;
    if (!T->exactness_certificate()) {
      auto rep = check_axioms(*T, 3);
      I.cert_failure = "table is not a group";
      if (!rep.ok && rep.witness) *I.cert_failure += ": " + rep.failed_axiom + " at " + T->word_name(*rep.witness);
    }
  } else if (key == "quotient") {
    if (!I.L) throw SpecError("quotient needs a locality");
    Bits N(I.L->size());
    if (arg == "Op") {
      N = op_elems(*I.L);
    } else if (arg.is_array()) {
      N = I.L->from_g(subgroup_of(I.L->group(), arg, I.L->group().degree()));
      if (auto v = partial_normal_violation(*I.L, N)) {
        I.cert_failure = "quotient by a non-normal subset: " + v->what + " at " + I.L->word_name(v->word);
        I.pg = I.L;
        I.L = nullptr;
        I.group_backed = false;
        return;
      }
    } else {
      throw SpecError("quotient takes \"Op\" or a list of generators");
    }
    auto Q = quotient(I.L, N);
    if (auto d = Q->partition_defect()) throw CertificationError("quotient: " + *d);
    I.pg = Q;
    I.L = nullptr;
    I.group_backed = false;
  } else {
    throw SpecError("unknown directive: " + key);
  }
}

InstancePtr build_impl(const json &in) {
  json spec = in;
  if (in.is_string()) {
    auto s = catalog_spec(in.get<std::string>());
    if (!s) throw SpecError("unknown instance: " + in.get<std::string>());
    spec = *s;
  }
  if (!spec.is_object()) throw SpecError("spec must be an object or a catalog name");
  std::string h = spec_hash(spec);
  {
    std::lock_guard lk(cache_mu);
    if (auto it = cache.find(h); it != cache.end()) return it->second;
  }
  auto I = std::make_shared<Instance>();
  I->spec = spec;
  I->hash = h;
  I->name = spec.value("name", "anonymous");
  I->fixture = spec.value("fixture", false);
  static const std::vector<std::string> known = {"name", "group", "degree", "prime", "delta",
                                                 "sylow", "product", "base", "ops", "fixture"};
  for (auto &[k, v] : spec.items())
    if (std::find(known.begin(), known.end(), k) == known.end())
      throw SpecError("unknown directive: " + k);
  try {
    if (spec.contains("base")) {
      auto B = build_impl(spec["base"]);
      if (B->cert_failure) throw CertificationError(*B->cert_failure);
      *I = *B;
      I->spec = spec;
      I->hash = h;
      I->name = spec.value("name", B->name);
      I->fixture = spec.value("fixture", false);
    } else if (spec.contains("product")) {
      build_product(*I, spec);
    } else if (spec.contains("group")) {
      build_group(*I, spec);
    } else {
      throw SpecError("spec needs group, product or base");
    }
    if (spec.contains("ops"))
      for (auto &op : spec["ops"]) apply_op(*I, op);
  } catch (const LocalityError &e) {
    if (!I->fixture) throw CertificationError(e.what());
    I->cert_failure = e.what();
    I->L = nullptr;
    I->pg = nullptr;
  } catch (const CertificationError &e) {
    if (!I->fixture) throw;
    I->cert_failure = e.what();
  } catch (const std::invalid_argument &e) {
    throw SpecError(e.what());
  }
  if (I->cert_failure && !I->fixture) throw CertificationError(*I->cert_failure);
  std::lock_guard lk(cache_mu);
  return cache.emplace(h, I).first->second;
}

} // namespace

const std::vector<CatalogEntry> &catalog() {
  static const std::vector<CatalogEntry> c = make_catalog();
  return c;
}

std::optional<json> catalog_spec(const std::string &name) {
  for (auto &e : catalog())
    if (e.name == name) return e.spec;
  return std::nullopt;
}

std::string spec_hash(const json &spec) {
  // FNV-1a over the canonical dump; json objects keep sorted keys
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : spec.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

InstancePtr build(const json &spec) { return build_impl(spec); }
InstancePtr build_named(const std::string &name) { return build_impl(json(name)); }

ObjectSet resolve_delta(const LocalityPtr &Lp, const json &kw) {
  const Locality &L = *Lp;
  const PContext &C = L.ctx();
  if (kw.is_array()) {
    std::vector<Mask> v;
    for (auto &gens : kw) {
      Bits H = subgroup_of(L.group(), gens, L.group().degree());
      Mask m = C.from_g(H);
      if (H.count() != std::size_t(std::popcount(m)) || !mask_le(m, L.sylow()))
        throw SpecError("object is not inside the Sylow subgroup");
      v.push_back(m);
    }
    return ObjectSet(v);
  }
  std::string k = kw.is_string() ? kw.get<std::string>() : "";
  if (k == "all") return L.delta();
  if (k == "deltaF") {
    Structure st(Lp);
    if (!st.linking()) throw CertificationError("deltaF: locality is not linking");
    return st.delta_f();
  }
  auto F = fusion_system(L);
  if (k == "fs") return subcentric_set(F);
  if (k == "fcr") return overgroup_closure(C, L.sylow(), fcr_set(F).masks());
  throw SpecError("unknown delta keyword: " + kw.dump());
}

} // namespace lk

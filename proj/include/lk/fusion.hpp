#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lk/pgroup.hpp"

namespace lk {

// Injective homomorphism between subgroups of the ambient p-group, stored pointwise.
struct Morphism {
  Mask dom = 0;
  Mask image = 0;
  std::array<int8_t, 64> img{};

  int operator()(int s) const { return img[std::size_t(s)]; }
  Mask apply(Mask P) const; // image of P ≤ dom
  Morphism restrict(Mask P) const;
  Morphism then(const Morphism &b) const; // first this, then b; image ≤ b.dom
  Morphism inverse() const;
  bool same(const Morphism &o) const; // equal as maps on dom
  bool is_identity() const;
  std::size_t hash() const;
};

Morphism identity_morphism(Mask P);
// c_g restricted to P; P^g must lie in the context
Morphism conjugation_morphism(const PContext &ctx, Mask P, int g);
// nullopt when the pointwise data is not an injective homomorphism
std::optional<std::string> morphism_defect(const PContext &ctx, const Morphism &m);

class FusionSystem {
public:
  FusionSystem() = default;
  FusionSystem(PContextPtr ctx, Mask S) : ctx_(std::move(ctx)), S_(S) {}

  const PContext &ctx() const { return *ctx_; }
  PContextPtr ctx_ptr() const { return ctx_; }
  Mask carrier() const { return S_; }
  int prime() const { return ctx_->prime(); }

  // Hom_F(P, S) for P ≤ S
  const std::vector<Morphism> &hom(Mask P) const;
  std::vector<Morphism> hom(Mask P, Mask Q) const;
  std::vector<Morphism> aut(Mask P) const { return hom(P, P); }
  std::vector<Mask> subgroups() const { return ctx_->subgroups_of(S_); }
  bool contains(const Morphism &m) const;
  std::size_t morphism_count() const;
  bool operator==(const FusionSystem &o) const;

  std::map<Mask, std::vector<Morphism>> &raw() { return hom_; }

private:
  PContextPtr ctx_;
  Mask S_ = 0;
  std::map<Mask, std::vector<Morphism>> hom_;
};

// Least fusion system over S containing the seeds and Inn(S).
FusionSystem generate(PContextPtr ctx, Mask S, const std::vector<Morphism> &seeds);
// F_S(H) for a subgroup H of the ambient group containing S as a p-subgroup
FusionSystem group_fusion(PContextPtr ctx, Mask S, const Bits &H);

std::vector<Mask> f_conjugates(const FusionSystem &F, Mask P);
bool is_fully_normalized(const FusionSystem &F, Mask P);
bool is_fully_centralized(const FusionSystem &F, Mask P);
bool is_fully_automized(const FusionSystem &F, Mask P);
bool is_receptive(const FusionSystem &F, Mask P);
Mask fully_normalized_rep(const FusionSystem &F, Mask P);
Mask fully_centralized_rep(const FusionSystem &F, Mask P);

bool is_saturated(const FusionSystem &F);
std::optional<std::string> saturation_defect(const FusionSystem &F);

FusionSystem normalizer_system(const FusionSystem &F, Mask X);
FusionSystem centralizer_system(const FusionSystem &F, Mask X);

bool is_normal_subgroup(const FusionSystem &F, Mask U);
Mask o_p_fusion(const FusionSystem &F);
bool is_centric(const FusionSystem &F, Mask P);
bool is_constrained(const FusionSystem &F);
bool is_inner(const FusionSystem &F); // F = F_S(S)

ObjectSet centric_set(const FusionSystem &F);
ObjectSet radical_set(const FusionSystem &F);
ObjectSet fcr_set(const FusionSystem &F);
// centric and O_p(Aut_F(P)) = Inn(P)
ObjectSet fcr_set_aut(const FusionSystem &F);
ObjectSet quasicentric_set(const FusionSystem &F);
ObjectSet subcentric_set(const FusionSystem &F);
// subcentric computed via "N_F(Q) constrained"; must agree with subcentric_set
ObjectSet subcentric_set_constrained(const FusionSystem &F);
ObjectSet f_r_c_set(const FusionSystem &F, Mask R);
ObjectSet f_r_c_set_fully_normalized(const FusionSystem &F, Mask R);
// {P ≤ S : P ∩ fstar ∈ F^s}
ObjectSet delta_set(const FusionSystem &F, Mask fstar_cap_s);
ObjectSet delta_set(const FusionSystem &F, Mask fstar_cap_s, const ObjectSet &fs);

bool is_f_closed(const FusionSystem &F, const ObjectSet &D);
bool is_strongly_closed(const FusionSystem &F, Mask T);
bool is_weakly_closed(const FusionSystem &F, Mask T);

Mask focal(const FusionSystem &F);
Mask hyperfocal(const FusionSystem &F);

// F1 * F2 over S1 S2; throws when the carriers do not commute or meet outside the centres
FusionSystem star_product(const FusionSystem &F1, const FusionSystem &F2);

// alpha: S → S~ as a map on local indices of the two contexts
bool induces_isomorphism(const FusionSystem &F, const FusionSystem &G, const std::vector<int> &alpha);

std::string describe_set(const PContext &ctx, const ObjectSet &D);

} // namespace lk

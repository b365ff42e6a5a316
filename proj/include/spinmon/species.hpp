#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "spinmon/axioms.hpp"
#include "spinmon/spin_group.hpp"
#include "spinmon/supervec.hpp"

namespace spinmon {

struct SRepData;

// Induction data of V (x) W: basis (shuffle, v (x) w) ordered evens first.
struct InducedData {
  int i = 0;
  int j = 0;
  std::shared_ptr<const SRepData> left;
  std::shared_ptr<const SRepData> right;
  TensorSpace ts;
  std::vector<Perm> shuffles;
  std::vector<SpinGroupElement> lifts;
  std::map<Perm, int> shuffle_index;
  std::vector<int> pos;  // s * ts.space.dim() + t -> basis index
  std::vector<std::pair<int, int>> items;  // basis index -> (s, t)
};

struct SRepData {
  int n = 0;
  SuperSpace space;
  std::vector<SuperMap> gens;  // gens[i - 1] acts as s~_i
  std::string name;
  std::optional<InducedData> induced;
};

// s-representation of S~_n (standard flavor) with rho(c) = -1.
class SRep {
 public:
  SRep() = default;
  explicit SRep(std::shared_ptr<const SRepData> d) : d_(std::move(d)) {}

  const SRepData& data() const { return *d_; }
  std::shared_ptr<const SRepData> ptr() const { return d_; }
  int n() const { return d_->n; }
  const SuperSpace& space() const { return d_->space; }
  const std::vector<SuperMap>& gens() const { return d_->gens; }
  const std::string& name() const { return d_->name; }
  bool is_induced() const { return d_->induced.has_value(); }
  const InducedData& induced() const { return *d_->induced; }

  // rho(g) applied to a column vector.
  Matrix apply(const SpinGroupElement& g, const Matrix& vec) const;
  SuperMap act(const SpinGroupElement& g) const;

 private:
  std::shared_ptr<const SRepData> d_;
};

// Throws DomainError naming the failed relation unless every action is odd,
// squares to 1, satisfies the braid relation and anticommutes at distance > 1.
SRep make_srep(int n, const SuperSpace& space, std::vector<SuperMap> gens, std::string name);
// k^{1|0} as the rank-0 unit, or the trivial data of rank <= 1.
SRep unit_srep(int n = 0, std::string name = "1");
// k[S~_n]/(c + 1) with basis the canonical lifts in lexicographic order.
SRep regular_srep(int n);
// s~_i -> (alpha_{i+1} - alpha_i)/2 on a Cl_n-module.
SRep clifford_srep(const SuperSpace& space, const std::vector<SuperMap>& actions, std::string name);
// Pi_r^k(V) = V (x) k[1]^{(x) k}, same actions.
SRep pi_r(const SRep& v, long k, const std::string& base_name = "");
// xi_r^{n,m} : Pi_r^n(V) -> Pi_r^m(V), v (x) pi_n -> (-1)^{(m - n)|v|} v (x) pi_m.
SuperMap xi_r(const SRep& v, long n, long m);

// f rho(s~_i) = (-1)^{|f|} rho'(s~_i) f for all i.
bool is_srep_morphism(const SRep& v, const SRep& w, const SuperMap& f);
std::vector<SuperMap> srep_hom_basis(const SRep& v, const SRep& w, int parity);
// x -> (-1)^{|x||h|} x h on the regular representation.
SuperMap regular_right_mult(const SRep& reg, const SpinGroupElement& h);

// Minimal-length (i,j)-shuffles in lexicographic order.
std::vector<Perm> shuffles(int i, int j);
// Ind(V (x) W) of rank i + j.
SRep induce_product(const SRep& v, const SRep& w);
// Coordinates of g (x) x in Ind(V (x) W) for x a vector of V (x) W.
Matrix induced_vector(const SRep& ind, const SpinGroupElement& g, const Matrix& x);

// U (x) (V (x) W) -> (U (x) V) (x) W; the three products are taken as given.
SuperMap species_associator(const SRep& u_vw, const SRep& uv_w);
// f (x) g between products of equal ranks.
SuperMap species_tensor_map(const SRep& src, const SRep& dst, const SuperMap& f, const SuperMap& g);

// V (x) W -> Pi_r^{nm}(W (x) V).
SuperMap species_symmetry(const SRep& vw, const SRep& wv);
// V (x) W -> W (x) V, (-1)^{|v||w| + mn|g| + mn} g tau~^{-1} (x) w (x) v.
SuperMap species_symmetry_ii(const SRep& vw, const SRep& wv);
// (-1)^{binom(mn, 2)} zeta4^{mn}.
CycNumber beta_star_coefficient(int m, int n);

struct SpeciesMorphism {
  SRep src;
  SRep dst;
  SuperMap map;
};

class SpeciesInstance {
 public:
  using Object = SRep;
  using Morphism = SpeciesMorphism;

  // Objects with rank sum at most max_rank in every tuple.
  SpeciesInstance(std::vector<SRep> objects, int max_rank, std::size_t max_arity = 4);
  // Regular representations of ranks 0..3 and Pi_r of rank 1, with seeded
  // right multiplications and Hom bases as generators.
  static SpeciesInstance standard(int max_rank = 5, std::uint64_t seed = 0);

  std::string name() const { return "species"; }
  int modulus() const { return 0; }
  std::vector<Object> objects() const { return objects_; }
  bool admissible(const std::vector<Object>& xs) const;
  Object unit() const { return unit_; }
  long degree(const Object& x) const { return x.n(); }
  std::string label(const Object& x) const { return x.name(); }
  Object tensor(const Object& a, const Object& b) const;
  Morphism tensor(const Morphism& f, const Morphism& g) const;
  Morphism compose(const Morphism& g, const Morphism& f) const { return {f.src, g.dst, g.map * f.map}; }
  Morphism identity(const Object& x) const { return {x, x, SuperMap::identity(x.space())}; }
  Morphism associator(const Object& a, const Object& b, const Object& c) const;
  Morphism associator_inverse(const Object& a, const Object& b, const Object& c) const;
  Morphism left_unitor(const Object& a) const;
  Morphism right_unitor(const Object& a) const;
  int parity(const Morphism& f) const { return f.map.parity; }
  Morphism scaled(const Morphism& f, const CycNumber& s) const { return {f.src, f.dst, f.map.scaled(s)}; }
  std::optional<CycNumber> ratio(const Morphism& x, const Morphism& y) const { return map_ratio(x.map, y.map); }
  std::vector<Generator<Object, Morphism>> generators() const { return generators_; }
  Object pi(const Object& x, long n) const;
  Morphism xi(const Object& x, long n, long m) const;

  // Throws DomainError unless f is a morphism of s-representations.
  void add_generator(const Object& src, const Object& dst, const SuperMap& f, std::string name);

  // Type I with factor A.
  Braiding<SpeciesInstance> braiding() const;
  // The explicit type II form; factor D A.
  Braiding<SpeciesInstance> braiding_ii() const;
  // beta* = (-1)^{binom(mn,2)} zeta4^{mn} beta_II; type II with factor A.
  Braiding<SpeciesInstance> beta_star() const;

 private:
  // Base object and exponent of a Pi_r-shift.
  std::pair<Object, long> base(const Object& x) const;

  Object unit_;
  std::vector<Object> objects_;
  int max_rank_;
  std::size_t max_arity_;
  std::vector<Generator<Object, Morphism>> generators_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

// Each generator of the braiding is an even isomorphism of s-representations.
AxiomReport check_species_symmetry_maps(const SpeciesInstance& c, const Braiding<SpeciesInstance>& br);

struct SergeevCheck {
  int n = 0;
  int d = 0;
  int q_basis = 0;
  int h_generators = 0;
  int failures = 0;         // (X v) h != X (v h)
  int signed_failures = 0;  // (X v) h != (-1)^{|X||h|} X (v h)
  bool pass() const { return failures == 0 && q_basis > 0; }
};
// Left q(n) and right H_d = k[S_d] |x Cl_d actions on (k^{n|n})^{(x) d} supercommute.
SergeevCheck sergeev_commutant_check(int n, int d);

}  // namespace spinmon

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spinmon/axioms.hpp"
#include "spinmon/clifford.hpp"
#include "spinmon/scalars.hpp"
#include "spinmon/spin_group.hpp"
#include "spinmon/supervec.hpp"

namespace spinmon {

// (M; alpha_1, ..., alpha_n) in SVec, graded by Z/q with degree = rank mod 2.
struct CliffordModuleObject {
  SuperSpace base;
  std::vector<SuperMap> actions;
  long degree = 0;
  std::string name;

  int rank() const { return static_cast<int>(actions.size()); }
};

// Throws DomainError unless the actions are odd, square to 2, anticommute and
// the degree has the parity of the rank.
CliffordModuleObject clifford_module(const SuperSpace& base, std::vector<SuperMap> actions, long degree,
                                     std::string name);

// (M (x) N; mu (x) 1, 1 (x) nu), degrees added mod q (q = 0 keeps integers).
CliffordModuleObject evert_tensor(const CliffordModuleObject& m, const CliffordModuleObject& n, int q = 0);

// Image of g under s_i -> (alpha_{i+1} - alpha_i)/2 with alpha_i = actions[i-1].
SuperMap spin_action(const SpinGroupElement& g, const std::vector<SuperMap>& actions, const SuperSpace& v);

// f alpha_i = (-1)^{|f|} alpha'_i f for all i.
bool is_module_map(const CliffordModuleObject& m, const CliffordModuleObject& n, const SuperMap& f);
// Basis of the homogeneous module maps M -> N of the given parity.
std::vector<SuperMap> module_hom_basis(const CliffordModuleObject& m, const CliffordModuleObject& n, int parity);

// beta : M (x) N -> N (x) M followed by tau~_{r,s}^{-1} acting through (mu, nu).
SuperMap evert_symmetry(const SuperMap& beta, const CliffordModuleObject& m, const CliffordModuleObject& n);

// Clifford eversion of super vector spaces graded by Z/q, p = 2, base symmetry tau.
class EvertedInstance {
 public:
  using Object = CliffordModuleObject;
  using Morphism = SuperMap;

  EvertedInstance(int q, std::vector<Object> objects, std::size_t max_arity = 4);
  // k^{1|0}, k^{0|1}, (k^{1|1}, xi), (k^{1|1}, xi') and (k^{1|1}; Cl_2) in degrees 0, 0, 1, 1, 2,
  // with a basis of module maps of each parity as generators.
  static EvertedInstance standard(int q = 4);

  std::string name() const { return "everted svec"; }
  int modulus() const { return q_; }
  std::vector<Object> objects() const { return objects_; }
  bool admissible(const std::vector<Object>& xs) const { return xs.size() <= max_arity_; }
  Object unit() const;
  long degree(const Object& x) const { return q_ ? ((x.degree % q_) + q_) % q_ : x.degree; }
  std::string label(const Object& x) const { return x.name; }
  Object tensor(const Object& a, const Object& b) const { return evert_tensor(a, b, q_); }
  Morphism tensor(const Morphism& f, const Morphism& g) const { return tensor_map(f, g); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return g * f; }
  Morphism identity(const Object& x) const { return SuperMap::identity(x.base); }
  Morphism associator(const Object& a, const Object& b, const Object& c) const;
  Morphism associator_inverse(const Object& a, const Object& b, const Object& c) const;
  Morphism left_unitor(const Object& a) const { return identity(a); }
  Morphism right_unitor(const Object& a) const { return identity(a); }
  bool is_strict() const { return false; }
  int parity(const Morphism& f) const { return f.parity; }
  Morphism scaled(const Morphism& f, const CycNumber& s) const { return f.scaled(s); }
  std::optional<CycNumber> ratio(const Morphism& x, const Morphism& y) const { return map_ratio(x, y); }
  std::vector<Generator<Object, Morphism>> generators() const { return generators_; }
  // Throws DomainError unless f is a module map.
  void add_generator(const Object& src, const Object& dst, const SuperMap& f, std::string name);
  // Adds a basis of module maps of both parities between objects of equal degree.
  void add_module_generators();

  // beta' built from tau; type II with factor D A.
  Braiding<EvertedInstance> braiding() const;

 private:
  int q_;
  std::vector<Object> objects_;
  std::size_t max_arity_;
  std::vector<Generator<Object, Morphism>> generators_;
};

// beta' is a module map on every pair of objects.
AxiomReport check_braiding_module_maps(const EvertedInstance& c, const Braiding<EvertedInstance>& br);

// Phi(M) = (M (x) U_2; mu (x) 1, 1 (x) lambda).
CliffordModuleObject periodicity_shift(const CliffordModuleObject& m, int q = 0);

struct ReorderCheck {
  SuperMap iso;  // Phi(M) (x) N -> Phi(M (x) N)
  bool even = false;
  bool module_map = false;
  bool invertible = false;
  bool pass() const { return even && module_map && invertible; }
};
// The isomorphism through j_{r, 2+s}(1, tau~_{2,s}^{-1}) that moves the
// periodicity generators past those of N.
ReorderCheck periodicity_reorder(const CliffordModuleObject& m, const CliffordModuleObject& n);

struct MoritaCheck {
  SuperSpace reduced;  // eps M
  SuperMap iso;        // eps M (x) U_2 -> M
  bool even = false;
  bool module_map = false;
  bool invertible = false;
  bool pass() const { return even && module_map && invertible; }
};
// Explicit even isomorphism eps M (x) U_2 -> M for a Cl_2-module M.
MoritaCheck morita_check(const CliffordModuleObject& m);
// Seeded Cl_2-module: copies of U_2 and Pi(U_2) conjugated by a random even isomorphism.
CliffordModuleObject random_cl2_module(std::mt19937_64& rng);

struct Cl1Check {
  std::string module;
  bool intertwiner_even = false;
  bool intertwiner_module_map = false;  // 2 - alpha xi : (M (x) k^{1|1}, alpha) -> (M (x) k^{1|1}, xi)
  bool intertwiner_invertible = false;
  bool literal_form_anti = false;       // 2 - xi alpha intertwines alpha with -xi
  bool gf_split = false;                // G F(M) = M (+) Pi(M)
  bool fg_split = false;                // F G(M) = M (+) Pi(M) as Cl_1-modules
  bool pass() const {
    return intertwiner_even && intertwiner_module_map && intertwiner_invertible && literal_form_anti && gf_split &&
           fg_split;
  }
};
// Checks on each rank-1 module of the stock.
std::vector<Cl1Check> cl1_double_check(const std::vector<CliffordModuleObject>& stock);
// (M (x) k^{1|1}, 1 (x) xi).
CliffordModuleObject cl1_free(const SuperSpace& m);

// Element of K_+ (x) Z[1/sqrt 2] on a declared basis of classes.
struct KPlusElement {
  std::map<std::string, QSqrt2> coeffs;

  KPlusElement operator*(const KPlusElement& o) const;
  friend bool operator==(const KPlusElement& a, const KPlusElement& b) { return a.coeffs == b.coeffs; }
  std::string str() const;
};
// K_+(SVec) has the single class [k]; [X] = dim X [k].
KPlusElement kplus_class(const SuperSpace& x);
// i on the eversion: [A] for rank 0, [A] / sqrt 2 for rank 1.
KPlusElement kplus_image(const CliffordModuleObject& x);

struct KPlusRecord {
  std::string left;
  std::string right;
  KPlusElement product;  // i([X][Y])
  KPlusElement expected; // i([X]) i([Y])
  bool swap = true;      // for rank 1 pairs, alpha (x) 1 swaps the two eigenspaces
  bool pass() const { return product == expected && swap; }
};
struct KPlusReport {
  std::vector<KPlusRecord> records;
  bool pass() const;
};
// i([X][Y]) = i([X]) i([Y]) over all pairs of samples of rank 0 and 1.  For two
// rank 1 modules the product class is the zeta4-eigenspace of (alpha (x) 1)(1 (x) alpha') / 2.
KPlusReport kplus_map(const std::vector<CliffordModuleObject>& samples);

}  // namespace spinmon

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spinmon/axioms.hpp"
#include "spinmon/supervec.hpp"

namespace spinmon {

// A super space with an odd involution nu.
struct QueerSpace {
  SuperSpace space;
  SuperMap nu;

  // Throws DomainError unless nu is odd with nu^2 = 1.
  void validate() const;
};

// (k^{n|n}, nu) with nu = [[0, P^{-1}], [P, 0]]; P is the even-to-odd block.
QueerSpace queer_space(const Matrix& p);
QueerSpace standard_queer_space(int n);
// Seeded queer space of dimension (n|n) with a signed weighted permutation as P.
QueerSpace random_queer_space(int n, std::mt19937_64& rng);

// Homogeneous queer morphisms U -> V: f mu = (-1)^{|f|} nu f.  For parity 0,
// block is the even-to-even part; for parity 1, the odd-to-even part.
SuperMap queer_morphism(const QueerSpace& u, const QueerSpace& v, int parity, const Matrix& block);
bool is_queer_morphism(const QueerSpace& u, const QueerSpace& v, const SuperMap& f);

struct HalfTensor {
  SuperSpace space;
  SuperMap inclusion;  // into tensor_space(U, V)
};
// The zeta4-eigenspace of mu (x) nu, spanned by (1 - zeta4 mu nu)/2 applied to U_0 (x) V.
HalfTensor half_tensor(const QueerSpace& u, const QueerSpace& v);
HalfTensor minus_half_tensor(const QueerSpace& u, const QueerSpace& v);

// 1/sqrt(2) with sqrt(2) = zeta8 (1 - zeta4).
CycNumber inv_sqrt2();

// Homogeneous object of Queer, realized as a subspace of the iterated tensor
// product ("flat" space) of the atoms it was built from.
struct QueerObjectData {
  int degree = 0;
  SuperSpace space;
  std::optional<SuperMap> nu;
  SuperSpace flat;
  SuperMap incl;  // space -> flat
  std::optional<SuperMap> nu_flat;
  SuperMap pair_incl;  // space -> left.space (x) right.space, or identity for atoms
  std::string label;
};

class QueerObject {
 public:
  QueerObject() = default;
  explicit QueerObject(std::shared_ptr<const QueerObjectData> d) : d_(std::move(d)) {}
  static QueerObject even_atom(const SuperSpace& v, std::string label);
  static QueerObject odd_atom(const QueerSpace& v, std::string label);

  const QueerObjectData& data() const { return *d_; }
  int degree() const { return d_->degree; }
  const SuperSpace& space() const { return d_->space; }
  const std::string& label() const { return d_->label; }
  QueerSpace queer() const;
  friend bool operator==(const QueerObject& a, const QueerObject& b) { return a.d_ == b.d_ || a.label() == b.label(); }

 private:
  std::shared_ptr<const QueerObjectData> d_;
};

struct QueerMorphism {
  QueerObject src;
  QueerObject dst;
  SuperMap map;
};

// U (.) V following the degree case analysis.
QueerObject queer_tensor(const QueerObject& x, const QueerObject& y);
SuperMap queer_associator(const QueerObject& u, const QueerObject& v, const QueerObject& w);
SuperMap queer_symmetry(const QueerObject& u, const QueerObject& v);

class QueerInstance {
 public:
  using Object = QueerObject;
  using Morphism = QueerMorphism;

  explicit QueerInstance(std::vector<QueerObject> objects, std::size_t max_arity = 4);
  // Unit, k^{1|0}, k^{0|1}, (k^{1|1}, swap) and (k^{1|1}, P = 2).
  static QueerInstance standard();

  std::string name() const { return "queer"; }
  int modulus() const { return 2; }
  std::vector<Object> objects() const { return objects_; }
  bool admissible(const std::vector<Object>& xs) const { return xs.size() <= max_arity_; }
  Object unit() const { return unit_; }
  long degree(const Object& x) const { return x.degree(); }
  std::string label(const Object& x) const { return x.label(); }
  Object tensor(const Object& a, const Object& b) const { return queer_tensor(a, b); }
  Morphism tensor(const Morphism& f, const Morphism& g) const;
  Morphism compose(const Morphism& g, const Morphism& f) const;
  Morphism identity(const Object& x) const { return {x, x, SuperMap::identity(x.space())}; }
  Morphism associator(const Object& a, const Object& b, const Object& c) const;
  Morphism associator_inverse(const Object& a, const Object& b, const Object& c) const;
  Morphism left_unitor(const Object& a) const;
  Morphism right_unitor(const Object& a) const;
  bool is_strict() const { return false; }
  int parity(const Morphism& f) const { return f.map.parity; }
  Morphism scaled(const Morphism& f, const CycNumber& s) const { return {f.src, f.dst, f.map.scaled(s)}; }
  std::optional<CycNumber> ratio(const Morphism& x, const Morphism& y) const { return map_ratio(x.map, y.map); }
  std::vector<Generator<Object, Morphism>> generators() const { return generators_; }
  void add_generator(const Object& src, const Object& dst, const SuperMap& f, std::string name);

  // beta = tau, or zeta16^{-1} (nu (x) 1) tau on two odd objects; type II with factor B.
  Braiding<QueerInstance> braiding() const;

 private:
  Object unit_;
  std::vector<Object> objects_;
  std::size_t max_arity_;
  std::vector<Generator<Object, Morphism>> generators_;
};

struct QueerTrial {
  std::vector<int> dims;  // n for each (n|n) space
  bool square_minus_one = false;
  bool half_dimension = false;
  bool swap_eigenspaces = false;
  bool associator_iso = false;
  bool pentagon_identity = false;
  bool hexagon = false;
  bool double_braiding = false;
  bool naturality = false;

  bool pass() const;
};

struct QueerTrialReport {
  std::uint64_t seed = 0;
  std::vector<QueerTrial> trials;
  bool pass() const;
};

// Seeded trials on random queer spaces of dimension at most (max_n|max_n).
QueerTrialReport queer_trials(int trials, std::uint64_t seed, int max_n = 3);

}  // namespace spinmon

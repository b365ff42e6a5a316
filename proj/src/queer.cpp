#include "spinmon/queer.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace spinmon {

namespace {

Matrix odd_to_even_inverse(const Matrix& p) {
  std::optional<Matrix> inv = p.inverse();
  if (!inv) throw DomainError("queer structure block must be invertible");
  return *inv;
}

Matrix even_to_odd_block(const QueerSpace& q) {
  int n = q.space.even;
  return q.nu.m.block(n, 0, n, n);
}

SuperMap from_coordinates(const SuperSpace& src, const SuperMap& target_incl, const SuperMap& image, int parity) {
  std::optional<Matrix> x = coordinates(target_incl.m, image.m);
  if (!x) throw DomainError("image does not lie in the target subspace");
  return SuperMap(src, target_incl.src, parity, std::move(*x));
}

HalfTensor eigen_half(const QueerSpace& u, const QueerSpace& v, const CycNumber& lambda) {
  TensorSpace t = tensor_space(u.space, v.space);
  SuperMap m = tensor_map(u.nu, v.nu);
  // m^2 = -1, so (1 - lambda m) / 2 projects onto the lambda-eigenspace.
  Matrix proj = (Matrix::identity(t.space.dim()) - m.m.scaled(lambda)).scaled(CycNumber(mpq_class(1, 2)));
  std::vector<int> cols;
  std::vector<int> parities;
  for (int i = 0; i < u.space.even; ++i)
    for (int j = 0; j < v.space.dim(); ++j) {
      int idx = t.index(i, j);
      cols.push_back(idx);
      parities.push_back(t.space.parity(idx));
    }
  GradedBasis gb = graded_basis(parities);
  std::vector<int> ordered(cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) ordered[k] = cols[gb.order[k]];
  return {gb.space, SuperMap(gb.space, t.space, 0, proj.select_cols(ordered))};
}

}  // namespace

void QueerSpace::validate() const {
  if (nu.src != space || nu.tgt != space || nu.parity != 1) throw DomainError("queer structure must be an odd endomorphism");
  if (nu * nu != SuperMap::identity(space)) throw DomainError("queer structure must square to 1");
}

QueerSpace queer_space(const Matrix& p) {
  int n = p.rows();
  if (p.cols() != n) throw DomainError("queer structure block must be square");
  Matrix pinv = odd_to_even_inverse(p);
  Matrix nu(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      nu.at(n + i, j) = p.at(i, j);
      nu.at(i, n + j) = pinv.at(i, j);
    }
  SuperSpace s{n, n};
  return {s, SuperMap(s, s, 1, std::move(nu))};
}

QueerSpace standard_queer_space(int n) { return queer_space(Matrix::identity(n)); }

QueerSpace random_queer_space(int n, std::mt19937_64& rng) {
  static const long weights[] = {1, -1, 2, -2, 3};
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<int> pick(0, 4);
  Matrix p(n, n);
  for (int i = 0; i < n; ++i) p.at(i, perm[i]) = CycNumber(weights[pick(rng)]);
  return queer_space(p);
}

SuperMap queer_morphism(const QueerSpace& u, const QueerSpace& v, int parity, const Matrix& block) {
  int nu_ = u.space.even, nv = v.space.even;
  if (block.rows() != nv || block.cols() != nu_) throw DomainError("queer morphism block has the wrong shape");
  Matrix pu = even_to_odd_block(u), pv = even_to_odd_block(v);
  Matrix f(2 * nv, 2 * nu_);
  if (parity == 0) {
    Matrix d = pv * block * odd_to_even_inverse(pu);
    for (int i = 0; i < nv; ++i)
      for (int j = 0; j < nu_; ++j) {
        f.at(i, j) = block.at(i, j);
        f.at(nv + i, nu_ + j) = d.at(i, j);
      }
  } else {
    Matrix c = -(pv * block * pu);
    for (int i = 0; i < nv; ++i)
      for (int j = 0; j < nu_; ++j) {
        f.at(i, nu_ + j) = block.at(i, j);
        f.at(nv + i, j) = c.at(i, j);
      }
  }
  return SuperMap(u.space, v.space, parity, std::move(f));
}

bool is_queer_morphism(const QueerSpace& u, const QueerSpace& v, const SuperMap& f) {
  SuperMap l = f * u.nu;
  SuperMap r = v.nu * f;
  return f.parity ? l == -r : l == r;
}

HalfTensor half_tensor(const QueerSpace& u, const QueerSpace& v) { return eigen_half(u, v, cyc_root(4, 1)); }

HalfTensor minus_half_tensor(const QueerSpace& u, const QueerSpace& v) { return eigen_half(u, v, cyc_root(4, 3)); }

CycNumber inv_sqrt2() { return (cyc_root(8, 1) * (CycNumber(1) - cyc_root(4, 1))).inv(); }

// Objects

QueerObject QueerObject::even_atom(const SuperSpace& v, std::string label) {
  auto d = std::make_shared<QueerObjectData>();
  d->degree = 0;
  d->space = v;
  d->flat = v;
  d->incl = SuperMap::identity(v);
  d->pair_incl = SuperMap::identity(v);
  d->label = std::move(label);
  return QueerObject(d);
}

QueerObject QueerObject::odd_atom(const QueerSpace& v, std::string label) {
  v.validate();
  auto d = std::make_shared<QueerObjectData>();
  d->degree = 1;
  d->space = v.space;
  d->nu = v.nu;
  d->flat = v.space;
  d->incl = SuperMap::identity(v.space);
  d->nu_flat = v.nu;
  d->pair_incl = SuperMap::identity(v.space);
  d->label = std::move(label);
  return QueerObject(d);
}

QueerSpace QueerObject::queer() const {
  if (degree() != 1) throw DomainError("only degree 1 objects carry a queer structure");
  return {space(), *d_->nu};
}

QueerObject queer_tensor(const QueerObject& x, const QueerObject& y) {
  static std::mutex mu;
  static std::map<std::pair<const void*, const void*>, std::pair<QueerObject, std::pair<QueerObject, QueerObject>>> cache;
  auto key = std::make_pair(static_cast<const void*>(&x.data()), static_cast<const void*>(&y.data()));
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second.first;
  }
  const QueerObjectData& a = x.data();
  const QueerObjectData& b = y.data();
  auto d = std::make_shared<QueerObjectData>();
  d->degree = (a.degree + b.degree) % 2;
  d->label = "(" + a.label + "." + b.label + ")";
  d->flat = tensor_space(a.flat, b.flat).space;
  if (a.degree == 1 && b.degree == 1) {
    HalfTensor h = half_tensor(x.queer(), y.queer());
    d->space = h.space;
    d->pair_incl = h.inclusion;
  } else {
    d->space = tensor_space(a.space, b.space).space;
    d->pair_incl = SuperMap::identity(d->space);
  }
  d->incl = tensor_map(a.incl, b.incl) * d->pair_incl;
  if (a.degree == 1 && b.degree == 0) {
    d->nu = tensor_map(*a.nu, SuperMap::identity(b.space));
    d->nu_flat = tensor_map(*a.nu_flat, SuperMap::identity(b.flat));
  } else if (a.degree == 0 && b.degree == 1) {
    d->nu = tensor_map(SuperMap::identity(a.space), *b.nu);
    d->nu_flat = tensor_map(SuperMap::identity(a.flat), *b.nu_flat);
  }
  QueerObject r(d);
  std::lock_guard<std::mutex> lock(mu);
  // Holding the operands keeps the cache keys alive.
  cache.emplace(key, std::make_pair(r, std::make_pair(x, y)));
  return r;
}

SuperMap queer_associator(const QueerObject& u, const QueerObject& v, const QueerObject& w) {
  QueerObject src = queer_tensor(u, queer_tensor(v, w));
  QueerObject tgt = queer_tensor(queer_tensor(u, v), w);
  const auto &a = u.data(), &b = v.data(), &c = w.data();
  SuperMap t = tensor_associator(a.flat, b.flat, c.flat);
  SuperMap flat_map = t * src.data().incl;
  if (a.degree == 1 && b.degree == 1 && c.degree == 1) {
    SuperSpace bc = tensor_space(b.flat, c.flat).space;
    SuperMap mu = tensor_map(*a.nu_flat, SuperMap::identity(bc));
    SuperMap sigma = tensor_map(SuperMap::identity(a.flat), tensor_map(SuperMap::identity(b.flat), *c.nu_flat));
    SuperMap op = (mu * sigma - SuperMap::identity(src.data().flat)).scaled(inv_sqrt2());
    flat_map = t * op * src.data().incl;
  }
  return from_coordinates(src.space(), tgt.data().incl, flat_map, 0);
}

SuperMap queer_symmetry(const QueerObject& u, const QueerObject& v) {
  QueerObject src = queer_tensor(u, v);
  QueerObject tgt = queer_tensor(v, u);
  const auto &a = u.data(), &b = v.data();
  SuperMap flat_map = symmetry(SymKind::Tau, a.flat, b.flat);
  if (a.degree == 1 && b.degree == 1)
    flat_map = (tensor_map(*b.nu_flat, SuperMap::identity(a.flat)) * flat_map).scaled(cyc_root(16, -1));
  return from_coordinates(src.space(), tgt.data().incl, flat_map * src.data().incl, a.degree * b.degree);
}

// Instance

QueerInstance::QueerInstance(std::vector<QueerObject> objects, std::size_t max_arity)
    : unit_(QueerObject::even_atom(SuperSpace{1, 0}, "1")), objects_(std::move(objects)), max_arity_(max_arity) {}

QueerInstance QueerInstance::standard() {
  Matrix two(1, 1);
  two.at(0, 0) = CycNumber(2);
  QueerSpace q = standard_queer_space(1), r = queer_space(two);
  QueerObject e = QueerObject::even_atom({1, 0}, "E"), o = QueerObject::even_atom({0, 1}, "O");
  QueerObject qo = QueerObject::odd_atom(q, "Q"), ro = QueerObject::odd_atom(r, "R");
  QueerInstance c({e, o, qo, ro});
  for (const auto& x : c.objects()) c.add_generator(x, x, SuperMap::identity(x.space()), "1" + x.label());
  Matrix one(1, 1);
  one.at(0, 0) = CycNumber(1);
  c.add_generator(e, o, SuperMap({1, 0}, {0, 1}, 1, one), "e:E>O");
  c.add_generator(qo, qo, queer_morphism(q, q, 1, one), "j:Q>Q");
  c.add_generator(qo, ro, queer_morphism(q, r, 0, one), "h:Q>R");
  Matrix three(1, 1);
  three.at(0, 0) = CycNumber(3);
  c.add_generator(ro, qo, queer_morphism(r, q, 1, three), "k:R>Q");
  return c;
}

QueerMorphism QueerInstance::tensor(const QueerMorphism& f, const QueerMorphism& g) const {
  QueerObject src = queer_tensor(f.src, g.src), dst = queer_tensor(f.dst, g.dst);
  SuperMap m = tensor_map(f.map, g.map) * src.data().pair_incl;
  return {src, dst, from_coordinates(src.space(), dst.data().pair_incl, m, (f.map.parity + g.map.parity) % 2)};
}

QueerMorphism QueerInstance::compose(const QueerMorphism& g, const QueerMorphism& f) const {
  if (!(g.src == f.dst)) throw DomainError("composition of incompatible queer morphisms");
  return {f.src, g.dst, g.map * f.map};
}

QueerMorphism QueerInstance::associator(const QueerObject& a, const QueerObject& b, const QueerObject& c) const {
  return {queer_tensor(a, queer_tensor(b, c)), queer_tensor(queer_tensor(a, b), c), queer_associator(a, b, c)};
}

QueerMorphism QueerInstance::associator_inverse(const QueerObject& a, const QueerObject& b, const QueerObject& c) const {
  QueerMorphism f = associator(a, b, c);
  std::optional<SuperMap> inv = f.map.inverse();
  if (!inv) throw DomainError("associator is not invertible");
  return {f.dst, f.src, *inv};
}

QueerMorphism QueerInstance::left_unitor(const QueerObject& a) const {
  QueerObject src = queer_tensor(unit_, a);
  return {src, a, from_coordinates(src.space(), a.data().incl, src.data().incl, 0)};
}

QueerMorphism QueerInstance::right_unitor(const QueerObject& a) const {
  QueerObject src = queer_tensor(a, unit_);
  return {src, a, from_coordinates(src.space(), a.data().incl, src.data().incl, 0)};
}

void QueerInstance::add_generator(const QueerObject& src, const QueerObject& dst, const SuperMap& f, std::string name) {
  if (f.src != src.space() || f.tgt != dst.space()) throw DomainError("generator shape mismatch");
  if (src.degree() != dst.degree()) throw DomainError("generator must preserve degree");
  if (src.degree() == 1 && !is_queer_morphism(src.queer(), dst.queer(), f))
    throw DomainError("generator is not a queer morphism");
  generators_.push_back({src, dst, {src, dst, f}, std::move(name)});
}

Braiding<QueerInstance> QueerInstance::braiding() const {
  Braiding<QueerInstance> b;
  b.kind = BraidingKind::TypeII;
  b.map = [](const QueerObject& x, const QueerObject& y) {
    return QueerMorphism{queer_tensor(x, y), queer_tensor(y, x), queer_symmetry(x, y)};
  };
  b.factor = FactorScalars::builtin(BuiltinFactor::B, 2);
  return b;
}

// Trials

bool QueerTrial::pass() const {
  return square_minus_one && half_dimension && swap_eigenspaces && associator_iso && pentagon_identity && hexagon &&
         double_braiding && naturality;
}

bool QueerTrialReport::pass() const {
  for (const auto& t : trials)
    if (!t.pass()) return false;
  return !trials.empty();
}

namespace {

Matrix random_block(int r, int c, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(-2, 2);
  Matrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = CycNumber(pick(rng));
  return m;
}

QueerTrial run_trial(int max_n, std::mt19937_64& rng, int index) {
  std::uniform_int_distribution<int> dim(1, max_n);
  QueerTrial t;
  auto make = [&](int n, const std::string& name) { return QueerObject::odd_atom(random_queer_space(n, rng), name); };
  int n1 = dim(rng), n2 = dim(rng), n3 = dim(rng);
  t.dims = {n1, n2, n3};
  std::string tag = std::to_string(index);
  QueerObject u = make(n1, "U" + tag), v = make(n2, "V" + tag), w = make(n3, "W" + tag);
  QueerSpace qu = u.queer(), qv = v.queer();

  SuperMap m = tensor_map(qu.nu, qv.nu);
  SuperSpace uv = tensor_space(qu.space, qv.space).space;
  t.square_minus_one = m * m == SuperMap::identity(uv).scaled(CycNumber(-1));

  HalfTensor h = half_tensor(qu, qv);
  t.half_dimension = 2 * h.space.dim() == qu.space.dim() * qv.space.dim() && h.inclusion.m.rank() == h.space.dim() &&
                     m * h.inclusion == h.inclusion.scaled(cyc_root(4, 1));
  HalfTensor hm = minus_half_tensor(qu, qv);
  SuperMap swapped = tensor_map(qu.nu, SuperMap::identity(qv.space)) * h.inclusion;
  t.swap_eigenspaces = coordinates(hm.inclusion.m, swapped.m).has_value() && swapped.m.rank() == hm.space.dim();

  QueerInstance inst({u, v, w});
  try {
    QueerMorphism a = inst.associator(u, v, w);
    t.associator_iso = a.map.inverse().has_value() && a.map.parity == 0;
  } catch (const DomainError&) {
    t.associator_iso = false;
  }

  std::vector<int> ns{dim(rng), dim(rng), dim(rng), dim(rng)};
  QueerObject p0 = make(ns[0], "A" + tag), p1 = make(ns[1], "B" + tag), p2 = make(ns[2], "C" + tag),
              p3 = make(ns[3], "D" + tag);
  QueerInstance pent({p0, p1, p2, p3});
  bool pent_ok = pentagon_record(pent, {p0, p1, p2, p3}).pass;
  {
    QueerObject nested = queer_tensor(p0, queer_tensor(p1, queer_tensor(p2, p3)));
    const auto &a = p0.data(), &b = p1.data(), &c = p2.data(), &d = p3.data();
    auto id = [](const SuperSpace& s) { return SuperMap::identity(s); };
    SuperMap mu = tensor_map(*a.nu_flat, id(tensor_space(b.flat, tensor_space(c.flat, d.flat).space).space));
    SuperMap nu = tensor_map(id(a.flat), tensor_map(*b.nu_flat, id(tensor_space(c.flat, d.flat).space)));
    SuperMap sg = tensor_map(id(a.flat), tensor_map(id(b.flat), tensor_map(*c.nu_flat, id(d.flat))));
    SuperMap ta = tensor_map(id(a.flat), tensor_map(id(b.flat), tensor_map(id(c.flat), *d.nu_flat)));
    SuperMap one = id(nested.data().flat);
    SuperMap lhs = (mu * sg - one) * (nu * ta - one) * nested.data().incl;
    pent_ok = pent_ok && lhs == nested.data().incl.scaled(CycNumber(2));
  }
  t.pentagon_identity = pent_ok;

  Braiding<QueerInstance> br = inst.braiding();
  auto hex = hexagon_records(inst, br, {u, v, w});
  t.hexagon = hex[0].pass && hex[1].pass && hex[0].expected == "1";
  AxiomRecord sym = symmetry_record(inst, br, {u, v});
  t.double_braiding = sym.pass && sym.expected == cyc_root(8, 1).str();

  // Naturality against random homogeneous queer morphisms u -> u2, v -> v2.
  QueerObject u2 = make(dim(rng), "U'" + tag), v2 = make(dim(rng), "V'" + tag);
  std::uniform_int_distribution<int> par(0, 1);
  int pf = par(rng), pg = par(rng);
  auto rand_morph = [&](const QueerObject& s, const QueerObject& d, int p) {
    Matrix blk = random_block(d.space().even, s.space().even, rng);
    if (blk.is_zero()) blk.at(0, 0) = CycNumber(1);
    return QueerMorphism{s, d, queer_morphism(s.queer(), d.queer(), p, blk)};
  };
  QueerMorphism f = rand_morph(u, u2, pf), g = rand_morph(v, v2, pg);
  QueerMorphism lhs = inst.compose(inst.tensor(g, f), br.map(u, v));
  QueerMorphism rhs = inst.compose(br.map(u2, v2), inst.tensor(f, g));
  long e = (pf + pg) + pf * pg;
  std::optional<CycNumber> r = map_ratio(lhs.map, rhs.map);
  t.naturality = r && *r == CycNumber(e % 2 ? -1 : 1);
  return t;
}

}  // namespace

QueerTrialReport queer_trials(int trials, std::uint64_t seed, int max_n) {
  if (trials < 0 || max_n < 1) throw DomainError("trial parameters must be positive");
  QueerTrialReport rep;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < trials; ++i) rep.trials.push_back(run_trial(max_n, rng, i));
  return rep;
}

}  // namespace spinmon

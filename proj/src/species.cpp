#include "spinmon/species.hpp"

#include <algorithm>
#include <mutex>

#include "spinmon/eversion.hpp"

namespace spinmon {

namespace {

Matrix unit_vector(int dim, int i) {
  Matrix v(dim, 1);
  v.at(i, 0) = 1;
  return v;
}

int flip_pos(const SuperSpace& v, int i) { return i >= v.even ? i - v.even : v.odd + i; }

// Position in Pi^k(V) of basis vector i of V.
int shifted_pos(const SuperSpace& v, long k, int i) { return (k % 2) ? flip_pos(v, i) : i; }

SRep wrap(SRepData d) { return SRep(std::make_shared<const SRepData>(std::move(d))); }

CycNumber sign_of(long e) { return CycNumber(((e % 2) + 2) % 2 ? -1 : 1); }

void validate_gens(int n, const SuperSpace& space, const std::vector<SuperMap>& gens) {
  if (n < 0) throw DomainError("rank must be nonnegative");
  if (static_cast<int>(gens.size()) != std::max(0, n - 1))
    throw DomainError("expected " + std::to_string(std::max(0, n - 1)) + " generator actions");
  SuperMap id = SuperMap::identity(space);
  for (size_t i = 0; i < gens.size(); ++i) {
    const SuperMap& g = gens[i];
    std::string s = "s" + std::to_string(i + 1);
    if (g.src != space || g.tgt != space) throw DomainError("action of " + s + " has the wrong shape");
    if (g.parity != 1 && !g.is_zero()) throw DomainError("action of " + s + " is not odd");
    if (g * g != id) throw DomainError("relation " + s + "^2 = 1 fails");
    if (i + 1 < gens.size() && g * gens[i + 1] * g != gens[i + 1] * g * gens[i + 1])
      throw DomainError("braid relation fails at " + s);
    for (size_t j = i + 2; j < gens.size(); ++j)
      if (g * gens[j] != -(gens[j] * g))
        throw DomainError("relation " + s + " s" + std::to_string(j + 1) + " = c s" + std::to_string(j + 1) + " " + s +
                          " fails");
  }
}

std::string shift_name(const std::string& base, long k) { return k ? "P" + std::to_string(k) + base : base; }

}  // namespace

Matrix SRep::apply(const SpinGroupElement& g, const Matrix& vec) const {
  if (g.n != n()) throw DomainError("group element has the wrong rank");
  Matrix r = vec;
  std::vector<int> word = canonical_word(g.perm);
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = gens()[*it - 1].m * r;
  return g.sign % 2 ? -r : r;
}

SuperMap SRep::act(const SpinGroupElement& g) const {
  if (g.n != n()) throw DomainError("group element has the wrong rank");
  Matrix r = Matrix::identity(space().dim());
  for (int w : canonical_word(g.perm)) r = r * gens()[w - 1].m;
  if (g.sign % 2) r = -r;
  return {space(), space(), g.parity(), r};
}

SRep make_srep(int n, const SuperSpace& space, std::vector<SuperMap> gens, std::string name) {
  validate_gens(n, space, gens);
  return wrap({n, space, std::move(gens), std::move(name), std::nullopt});
}

SRep unit_srep(int n, std::string name) {
  if (n > 1) throw DomainError("trivial data exists only in rank <= 1");
  return make_srep(n, {1, 0}, {}, std::move(name));
}

SRep regular_srep(int n) {
  std::vector<Perm> perms = all_perms(n);
  std::vector<int> par;
  for (const auto& p : perms) par.push_back(perm_length(p) % 2);
  GradedBasis gb = graded_basis(par);
  std::vector<SuperMap> gens;
  for (int i = 1; i < n; ++i) {
    Matrix m(gb.space.dim(), gb.space.dim());
    SpinGroupElement s = spin_generator(n, i);
    for (size_t k = 0; k < perms.size(); ++k) {
      SpinGroupElement h = group_mul(s, canonical_lift(perms[k]));
      m.at(gb.pos[perm_index(h.perm)], gb.pos[k]) = h.sign % 2 ? -1 : 1;
    }
    gens.emplace_back(gb.space, gb.space, 1, m);
  }
  return make_srep(n, gb.space, std::move(gens), "R" + std::to_string(n));
}

SRep clifford_srep(const SuperSpace& space, const std::vector<SuperMap>& actions, std::string name) {
  int n = static_cast<int>(actions.size());
  std::vector<SuperMap> gens;
  mpq_class half(1, 2);
  for (int i = 1; i < n; ++i) gens.push_back((actions[i] - actions[i - 1]).scaled(CycNumber(half)));
  return make_srep(n, space, std::move(gens), std::move(name));
}

SRep pi_r(const SRep& v, long k, const std::string& base_name) {
  if (k < 0) throw DomainError("Pi exponent must be nonnegative");
  SuperSpace s = pi(v.space(), static_cast<int>(k % 2));
  std::vector<SuperMap> gens;
  for (const auto& g : v.gens()) {
    Matrix m(s.dim(), s.dim());
    for (int c = 0; c < g.m.cols(); ++c)
      for (int r = 0; r < g.m.rows(); ++r)
        if (!g.m.at(r, c).is_zero()) m.at(shifted_pos(v.space(), k, r), shifted_pos(v.space(), k, c)) = g.m.at(r, c);
    gens.emplace_back(s, s, 1, m);
  }
  return wrap({v.n(), s, std::move(gens), shift_name(base_name.empty() ? v.name() : base_name, k), std::nullopt});
}

SuperMap xi_r(const SRep& v, long n, long m) {
  if (n < 0 || m < 0) throw DomainError("Pi exponent must be nonnegative");
  const SuperSpace& b = v.space();
  SuperSpace s = pi(b, static_cast<int>(n % 2)), t = pi(b, static_cast<int>(m % 2));
  Matrix mat(t.dim(), s.dim());
  for (int i = 0; i < b.dim(); ++i) mat.at(shifted_pos(b, m, i), shifted_pos(b, n, i)) = sign_of((m - n) * b.parity(i));
  return {s, t, static_cast<int>(((m - n) % 2 + 2) % 2), mat};
}

bool is_srep_morphism(const SRep& v, const SRep& w, const SuperMap& f) {
  if (v.n() != w.n() || f.src != v.space() || f.tgt != w.space()) return false;
  for (size_t i = 0; i < v.gens().size(); ++i) {
    Matrix lhs = f.m * v.gens()[i].m, rhs = w.gens()[i].m * f.m;
    if (f.parity) rhs = -rhs;
    if (lhs != rhs) return false;
  }
  return true;
}

std::vector<SuperMap> srep_hom_basis(const SRep& v, const SRep& w, int parity) {
  if (v.n() != w.n()) throw DomainError("morphisms need equal ranks");
  CliffordModuleObject a{v.space(), v.gens(), 0, v.name()}, b{w.space(), w.gens(), 0, w.name()};
  return module_hom_basis(a, b, parity);
}

SuperMap regular_right_mult(const SRep& reg, const SpinGroupElement& h) {
  int n = reg.n();
  if (h.n != n || reg.space().dim() != static_cast<int>(factorial(n))) throw DomainError("not a regular representation");
  std::vector<Perm> perms = all_perms(n);
  std::vector<int> par;
  for (const auto& p : perms) par.push_back(perm_length(p) % 2);
  GradedBasis gb = graded_basis(par);
  Matrix m(gb.space.dim(), gb.space.dim());
  for (size_t k = 0; k < perms.size(); ++k) {
    SpinGroupElement x = group_mul(canonical_lift(perms[k]), h);
    int e = x.sign + par[k] * h.parity();
    m.at(gb.pos[perm_index(x.perm)], gb.pos[k]) = sign_of(e);
  }
  return {reg.space(), reg.space(), h.parity(), m};
}

std::vector<Perm> shuffles(int i, int j) {
  int n = i + j;
  std::vector<Perm> out;
  std::vector<int> sel(n, 0);
  std::fill(sel.begin(), sel.begin() + i, 1);
  // Subsets in lexicographic order of their sorted elements.
  do {
    Perm p;
    for (int k = 0; k < n; ++k)
      if (sel[k]) p.push_back(k);
    for (int k = 0; k < n; ++k)
      if (!sel[k]) p.push_back(k);
    out.push_back(p);
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return out;
}

SRep induce_product(const SRep& v, const SRep& w) {
  InducedData ind;
  ind.i = v.n();
  ind.j = w.n();
  ind.left = v.ptr();
  ind.right = w.ptr();
  ind.ts = tensor_space(v.space(), w.space());
  ind.shuffles = shuffles(ind.i, ind.j);
  int d = ind.ts.space.dim();
  std::vector<int> par;
  for (size_t s = 0; s < ind.shuffles.size(); ++s) {
    ind.lifts.push_back(canonical_lift(ind.shuffles[s]));
    ind.shuffle_index[ind.shuffles[s]] = static_cast<int>(s);
    for (int t = 0; t < d; ++t) par.push_back((perm_length(ind.shuffles[s]) + ind.ts.space.parity(t)) % 2);
  }
  GradedBasis gb = graded_basis(par);
  ind.pos = gb.pos;
  ind.items.resize(par.size());
  for (size_t k = 0; k < par.size(); ++k) ind.items[gb.pos[k]] = {static_cast<int>(k) / d, static_cast<int>(k) % d};

  int n = ind.i + ind.j;
  SRepData data{n, gb.space, {}, "(" + v.name() + " " + w.name() + ")", std::move(ind)};
  // Actions are filled in through a provisional handle that already carries the induction data.
  SRep tmp = wrap(data);
  std::vector<SuperMap> gens;
  int dim = gb.space.dim();
  for (int k = 1; k < n; ++k) {
    SpinGroupElement s = spin_generator(n, k);
    Matrix m(dim, dim);
    for (int b = 0; b < dim; ++b) {
      auto [sh, t] = tmp.induced().items[b];
      Matrix col = induced_vector(tmp, group_mul(s, tmp.induced().lifts[sh]), unit_vector(d, t));
      for (int r = 0; r < dim; ++r)
        if (!col.at(r, 0).is_zero()) m.at(r, b) = col.at(r, 0);
    }
    gens.emplace_back(gb.space, gb.space, 1, m);
  }
  data.gens = std::move(gens);
  validate_gens(n, data.space, data.gens);
  return wrap(std::move(data));
}

Matrix induced_vector(const SRep& ind, const SpinGroupElement& g, const Matrix& x) {
  if (!ind.is_induced()) throw DomainError("not an induced representation");
  const InducedData& d = ind.induced();
  int i = d.i, j = d.j, n = i + j;
  if (g.n != n) throw DomainError("group element has the wrong rank");
  std::vector<int> a(g.perm.begin(), g.perm.begin() + i), b(g.perm.begin() + i, g.perm.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  Perm sigma = a;
  sigma.insert(sigma.end(), b.begin(), b.end());
  int s = d.shuffle_index.at(sigma);
  SpinGroupElement rest = group_mul(group_inv(d.lifts[s]), g);
  Perm pa(rest.perm.begin(), rest.perm.begin() + i), pb;
  for (int k = i; k < n; ++k) pb.push_back(rest.perm[k] - i);
  SpinGroupElement ga = canonical_lift(pa), gb = canonical_lift(pb);
  SpinGroupElement jab = j_embed(i, j, ga, gb);
  if (jab.perm != rest.perm) throw DomainError("coset decomposition failed");
  bool flip = (rest.sign + jab.sign) % 2;

  SRep left(d.left), right(d.right);
  const TensorSpace& ts = d.ts;
  int dl = left.space().dim(), dr = right.space().dim(), dt = ts.space.dim();
  Matrix out(ind.space().dim(), 1);
  for (int t = 0; t < dt; ++t) {
    if (x.at(t, 0).is_zero()) continue;
    auto [p, q] = ts.pairs[t];
    Matrix u = left.apply(ga, unit_vector(dl, p)), w = right.apply(gb, unit_vector(dr, q));
    CycNumber c = x.at(t, 0);
    if (flip) c = -c;
    if (left.space().parity(p) && gb.parity()) c = -c;
    for (int k = 0; k < dl; ++k) {
      if (u.at(k, 0).is_zero()) continue;
      CycNumber cu = c * u.at(k, 0);
      for (int l = 0; l < dr; ++l)
        if (!w.at(l, 0).is_zero()) out.at(d.pos[static_cast<size_t>(s) * dt + ts.index(k, l)], 0) += cu * w.at(l, 0);
    }
  }
  return out;
}

namespace {

void require_product(const SRep& x, const char* what) {
  if (!x.is_induced()) throw DomainError(std::string(what) + " is not a product");
}

int identity_shuffle(const InducedData& d) { return d.shuffle_index.at(perm_identity(d.i + d.j)); }

}  // namespace

SuperMap species_associator(const SRep& u_vw, const SRep& uv_w) {
  require_product(u_vw, "source");
  require_product(uv_w, "target");
  const InducedData& a = u_vw.induced();
  const InducedData& b = uv_w.induced();
  SRep vw(a.right), uv(b.left);
  require_product(vw, "inner source factor");
  require_product(uv, "inner target factor");
  const InducedData& inner = vw.induced();
  const InducedData& outer = uv.induced();
  int m = a.i, np = a.j;
  int uv_id = identity_shuffle(outer);
  Matrix mat(uv_w.space().dim(), u_vw.space().dim());
  for (int col = 0; col < u_vw.space().dim(); ++col) {
    auto [s, t] = a.items[col];
    auto [p, y] = a.ts.pairs[t];
    auto [tau, t2] = inner.items[y];
    auto [q, r] = inner.ts.pairs[t2];
    SpinGroupElement g = group_mul(a.lifts[s], j_embed(m, np, spin_identity(m), inner.lifts[tau]));
    int uvpos = outer.pos[static_cast<size_t>(uv_id) * outer.ts.space.dim() + outer.ts.index(p, q)];
    Matrix v = induced_vector(uv_w, g, unit_vector(b.ts.space.dim(), b.ts.index(uvpos, r)));
    bool neg = a.ts.left.parity(p) && perm_length(inner.shuffles[tau]) % 2;
    for (int row = 0; row < v.rows(); ++row)
      if (!v.at(row, 0).is_zero()) mat.at(row, col) = neg ? -v.at(row, 0) : v.at(row, 0);
  }
  return {u_vw.space(), uv_w.space(), 0, mat};
}

namespace {

// (U (x) V) (x) W -> U (x) (V (x) W).
SuperMap species_associator_inverse(const SRep& uv_w, const SRep& u_vw) {
  require_product(u_vw, "target");
  require_product(uv_w, "source");
  const InducedData& a = uv_w.induced();
  const InducedData& b = u_vw.induced();
  SRep uv(a.left), vw(b.right);
  require_product(uv, "inner source factor");
  require_product(vw, "inner target factor");
  const InducedData& inner = uv.induced();
  const InducedData& outer = vw.induced();
  int mn = a.i, p = a.j;
  int vw_id = identity_shuffle(outer);
  Matrix mat(u_vw.space().dim(), uv_w.space().dim());
  for (int col = 0; col < uv_w.space().dim(); ++col) {
    auto [s, t] = a.items[col];
    auto [y, r] = a.ts.pairs[t];
    auto [tau, t2] = inner.items[y];
    auto [u, q] = inner.ts.pairs[t2];
    SpinGroupElement g = group_mul(a.lifts[s], j_embed(mn, p, inner.lifts[tau], spin_identity(p)));
    int vwpos = outer.pos[static_cast<size_t>(vw_id) * outer.ts.space.dim() + outer.ts.index(q, r)];
    Matrix v = induced_vector(u_vw, g, unit_vector(b.ts.space.dim(), b.ts.index(u, vwpos)));
    for (int row = 0; row < v.rows(); ++row)
      if (!v.at(row, 0).is_zero()) mat.at(row, col) = v.at(row, 0);
  }
  return {uv_w.space(), u_vw.space(), 0, mat};
}

}  // namespace

SuperMap species_tensor_map(const SRep& src, const SRep& dst, const SuperMap& f, const SuperMap& g) {
  require_product(src, "source");
  require_product(dst, "target");
  const InducedData& a = src.induced();
  const InducedData& b = dst.induced();
  if (a.i != b.i || a.j != b.j) throw DomainError("tensor of morphisms needs matching ranks");
  if (f.src != a.ts.left || g.src != a.ts.right || f.tgt != b.ts.left || g.tgt != b.ts.right)
    throw DomainError("tensor of morphisms has the wrong shape");
  SuperMap fg = tensor_map(f, g);
  int par = (f.parity + g.parity) % 2;
  int dt = b.ts.space.dim();
  Matrix mat(dst.space().dim(), src.space().dim());
  for (int col = 0; col < src.space().dim(); ++col) {
    auto [s, t] = a.items[col];
    bool neg = par && perm_length(a.shuffles[s]) % 2;
    for (int r = 0; r < dt; ++r) {
      const CycNumber& x = fg.m.at(r, t);
      if (!x.is_zero()) mat.at(b.pos[static_cast<size_t>(s) * dt + r], col) = neg ? -x : x;
    }
  }
  return {src.space(), dst.space(), par, mat};
}

namespace {

// g (x) v (x) w -> sign(g, v, w) g tau~^{-1}_{n,m} (x) w (x) v in W (x) V, placed in Pi^k.
template <class Sign>
SuperMap swap_map(const SRep& vw, const SRep& wv, long k, int parity, Sign sign) {
  require_product(vw, "source");
  require_product(wv, "target");
  const InducedData& a = vw.induced();
  const InducedData& b = wv.induced();
  if (a.i != b.j || a.j != b.i) throw DomainError("braiding needs swapped ranks");
  int n = a.i, m = a.j;
  SpinGroupElement tinv = group_inv(tau_tilde(n, m));
  SuperSpace tgt = pi(wv.space(), static_cast<int>(k % 2));
  Matrix mat(tgt.dim(), vw.space().dim());
  for (int col = 0; col < vw.space().dim(); ++col) {
    auto [s, t] = a.items[col];
    auto [p, q] = a.ts.pairs[t];
    int pv = a.ts.left.parity(p), pw = a.ts.right.parity(q), pg = perm_length(a.shuffles[s]) % 2;
    Matrix v = induced_vector(wv, group_mul(a.lifts[s], tinv), unit_vector(b.ts.space.dim(), b.ts.index(q, p)));
    CycNumber c = sign_of(sign(n, m, pv, pw, pg));
    for (int row = 0; row < v.rows(); ++row)
      if (!v.at(row, 0).is_zero()) mat.at(shifted_pos(wv.space(), k, row), col) = c * v.at(row, 0);
  }
  return {vw.space(), tgt, parity, mat};
}

}  // namespace

SuperMap species_symmetry(const SRep& vw, const SRep& wv) {
  long nm = static_cast<long>(vw.induced().i) * vw.induced().j;
  return swap_map(vw, wv, nm, 0, [](long n, long m, int pv, int pw, int) { return n * m * (pv + pw) + pv * pw; });
}

SuperMap species_symmetry_ii(const SRep& vw, const SRep& wv) {
  long nm = static_cast<long>(vw.induced().i) * vw.induced().j;
  return swap_map(vw, wv, 0, static_cast<int>(nm % 2),
                  [](long n, long m, int pv, int pw, int pg) { return pv * pw + n * m * pg + n * m; });
}

CycNumber beta_star_coefficient(int m, int n) {
  long mn = static_cast<long>(m) * n;
  return sign_of(mn * (mn - 1) / 2) * CycNumber::root(4, mn);
}

struct SpeciesInstance::Cache {
  std::mutex mu;
  std::map<std::pair<std::string, std::string>, SRep> products;
  std::map<std::pair<std::string, long>, SRep> shifts;
  std::map<std::string, std::pair<SRep, long>> shift_base;
};

SpeciesInstance::SpeciesInstance(std::vector<SRep> objects, int max_rank, std::size_t max_arity)
    : unit_(unit_srep(0)), objects_(std::move(objects)), max_rank_(max_rank), max_arity_(max_arity),
      cache_(std::make_shared<Cache>()) {
  for (const auto& x : objects_)
    if (x.n() == 0 && x.space() == unit_.space()) unit_ = x;
}

SpeciesInstance SpeciesInstance::standard(int max_rank, std::uint64_t seed) {
  SRep r0 = regular_srep(0), r1 = regular_srep(1), r2 = regular_srep(2), r3 = regular_srep(3);
  SpeciesInstance c({r0, r1, r2, r3}, max_rank);
  SRep p1 = c.pi(r1, 1);
  c.objects_.push_back(p1);
  std::mt19937_64 rng(seed);
  for (const SRep& r : {r2, r3}) {
    std::vector<Perm> perms = all_perms(r.n());
    for (int parity = 0; parity < 2; ++parity) {
      std::vector<Perm> pool;
      for (const auto& p : perms)
        if (perm_length(p) % 2 == parity) pool.push_back(p);
      std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
      SpinGroupElement h = canonical_lift(pool[pick(rng)]);
      h.sign = static_cast<int>(rng() % 2);
      c.add_generator(r, r, regular_right_mult(r, h), "right " + h.str() + " on " + r.name());
    }
  }
  for (int parity = 0; parity < 2; ++parity)
    for (const SRep& x : {r1, p1})
      for (const SRep& y : {r1, p1}) {
        auto basis = srep_hom_basis(x, y, parity);
        for (size_t k = 0; k < basis.size(); ++k)
          c.add_generator(x, y, basis[k], x.name() + "->" + y.name() + "/" + std::to_string(parity));
      }
  return c;
}

bool SpeciesInstance::admissible(const std::vector<Object>& xs) const {
  if (xs.size() > max_arity_) return false;
  int total = 0;
  for (const auto& x : xs) total += x.n();
  return total <= max_rank_;
}

SpeciesInstance::Object SpeciesInstance::tensor(const Object& a, const Object& b) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto key = std::make_pair(a.name(), b.name());
  auto it = cache_->products.find(key);
  if (it != cache_->products.end()) return it->second;
  SRep p = induce_product(a, b);
  cache_->products.emplace(key, p);
  return p;
}

SpeciesInstance::Morphism SpeciesInstance::tensor(const Morphism& f, const Morphism& g) const {
  Object src = tensor(f.src, g.src), dst = tensor(f.dst, g.dst);
  return {src, dst, species_tensor_map(src, dst, f.map, g.map)};
}

SpeciesInstance::Morphism SpeciesInstance::associator(const Object& a, const Object& b, const Object& c) const {
  Object src = tensor(a, tensor(b, c)), dst = tensor(tensor(a, b), c);
  return {src, dst, species_associator(src, dst)};
}

SpeciesInstance::Morphism SpeciesInstance::associator_inverse(const Object& a, const Object& b,
                                                              const Object& c) const {
  Object src = tensor(tensor(a, b), c), dst = tensor(a, tensor(b, c));
  return {src, dst, species_associator_inverse(src, dst)};
}

SpeciesInstance::Morphism SpeciesInstance::left_unitor(const Object& a) const {
  Object src = tensor(unit_, a);
  const InducedData& d = src.induced();
  Matrix m(a.space().dim(), src.space().dim());
  for (int v = 0; v < a.space().dim(); ++v) m.at(v, d.pos[d.ts.index(0, v)]) = 1;
  return {src, a, SuperMap(src.space(), a.space(), 0, m)};
}

SpeciesInstance::Morphism SpeciesInstance::right_unitor(const Object& a) const {
  Object src = tensor(a, unit_);
  const InducedData& d = src.induced();
  Matrix m(a.space().dim(), src.space().dim());
  for (int v = 0; v < a.space().dim(); ++v) m.at(v, d.pos[d.ts.index(v, 0)]) = 1;
  return {src, a, SuperMap(src.space(), a.space(), 0, m)};
}

std::pair<SpeciesInstance::Object, long> SpeciesInstance::base(const Object& x) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->shift_base.find(x.name());
  if (it != cache_->shift_base.end()) return it->second;
  return {x, 0};
}

SpeciesInstance::Object SpeciesInstance::pi(const Object& x, long n) const {
  if (n < 0) throw DomainError("Pi exponent must be nonnegative");
  auto [b, k] = base(x);
  if (n == 0) return x;
  long e = k + n;
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto key = std::make_pair(b.name(), e);
  auto it = cache_->shifts.find(key);
  if (it != cache_->shifts.end()) return it->second;
  SRep s = pi_r(b, e);
  cache_->shifts.emplace(key, s);
  cache_->shift_base.emplace(s.name(), std::make_pair(b, e));
  return s;
}

SpeciesInstance::Morphism SpeciesInstance::xi(const Object& x, long n, long m) const {
  auto [b, k] = base(x);
  return {pi(x, n), pi(x, m), xi_r(b, k + n, k + m)};
}

void SpeciesInstance::add_generator(const Object& src, const Object& dst, const SuperMap& f, std::string name) {
  if (!is_srep_morphism(src, dst, f)) throw DomainError("generator " + name + " is not a morphism");
  generators_.push_back({src, dst, {src, dst, f}, std::move(name)});
}

Braiding<SpeciesInstance> SpeciesInstance::braiding() const {
  Braiding<SpeciesInstance> br;
  br.kind = BraidingKind::TypeI;
  br.map = [this](const Object& a, const Object& b) {
    Object ab = tensor(a, b), ba = tensor(b, a);
    long k = degree(a) * degree(b);
    Morphism beta{ab, pi(ba, k), species_symmetry(ab, ba)};
    Morphism canon = compose(tensor(xi(b, 0, k), identity(a)), xi(ba, k, 0));
    return compose(canon, beta);
  };
  br.factor = FactorScalars::closed_form(BuiltinFactor::A);
  return br;
}

Braiding<SpeciesInstance> SpeciesInstance::braiding_ii() const {
  Braiding<SpeciesInstance> br;
  br.kind = BraidingKind::TypeII;
  br.map = [this](const Object& a, const Object& b) {
    Object ab = tensor(a, b), ba = tensor(b, a);
    return Morphism{ab, ba, species_symmetry_ii(ab, ba)};
  };
  br.factor = FactorScalars::closed_form(BuiltinFactor::D) * FactorScalars::closed_form(BuiltinFactor::A);
  return br;
}

Braiding<SpeciesInstance> SpeciesInstance::beta_star() const {
  Braiding<SpeciesInstance> br;
  br.kind = BraidingKind::TypeII;
  br.map = [this](const Object& a, const Object& b) {
    Object ab = tensor(a, b), ba = tensor(b, a);
    SuperMap m = species_symmetry_ii(ab, ba).scaled(beta_star_coefficient(a.n(), b.n()));
    return Morphism{ab, ba, m};
  };
  br.factor = FactorScalars::closed_form(BuiltinFactor::A);
  return br;
}

AxiomReport check_species_symmetry_maps(const SpeciesInstance& c, const Braiding<SpeciesInstance>& br) {
  AxiomReport rep;
  for (const auto& a : c.objects())
    for (const auto& b : c.objects()) {
      if (!c.admissible({a, b})) continue;
      auto f = br.map(a, b);
      bool ok = is_srep_morphism(f.src, f.dst, f.map) && f.map.inverse().has_value();
      int expected_parity = br.kind == BraidingKind::TypeII ? static_cast<int>((c.degree(a) * c.degree(b)) % 2) : 0;
      ok = ok && f.map.parity == expected_parity;
      rep.records.push_back({c.name(), "braiding morphism", {a.name(), b.name()}, "invertible morphism",
                             ok ? "invertible morphism" : "failed", ok});
    }
  return rep;
}

SergeevCheck sergeev_commutant_check(int n, int d) {
  if (n < 1 || d < 1) throw DomainError("Sergeev check needs n, d >= 1");
  SergeevCheck out;
  out.n = n;
  out.d = d;
  SuperSpace v{n, n};
  // Basis of V^{(x) d} as digit strings, with graded positions.
  int dim = 1;
  for (int k = 0; k < d; ++k) dim *= 2 * n;
  std::vector<std::vector<int>> digits(dim, std::vector<int>(d));
  std::vector<int> par(dim);
  for (int x = 0; x < dim; ++x) {
    int y = x, p = 0;
    for (int k = d - 1; k >= 0; --k) {
      digits[x][k] = y % (2 * n);
      y /= 2 * n;
      p += v.parity(digits[x][k]);
    }
    par[x] = p % 2;
  }
  GradedBasis gb = graded_basis(par);
  auto index_of = [&](const std::vector<int>& ds) {
    int x = 0;
    for (int k = 0; k < d; ++k) x = x * 2 * n + ds[k];
    return gb.pos[x];
  };
  auto xi = [n](int e) { return e < n ? e + n : e - n; };

  // Right actions h as matrices acting on columns: row = image of column basis vector.
  std::vector<SuperMap> rights;
  for (int i = 0; i < d; ++i) {
    Matrix m(dim, dim);
    for (int x = 0; x < dim; ++x) {
      std::vector<int> ds = digits[x];
      int e = 0;
      for (int k = i + 1; k < d; ++k) e += v.parity(ds[k]);
      ds[i] = xi(ds[i]);
      m.at(index_of(ds), gb.pos[x]) = sign_of(e);
    }
    rights.emplace_back(gb.space, gb.space, 1, m);
  }
  for (int i = 0; i + 1 < d; ++i) {
    Matrix m(dim, dim);
    for (int x = 0; x < dim; ++x) {
      std::vector<int> ds = digits[x];
      std::swap(ds[i], ds[i + 1]);
      m.at(index_of(ds), gb.pos[x]) = sign_of(v.parity(ds[i]) * v.parity(ds[i + 1]));
    }
    rights.emplace_back(gb.space, gb.space, 0, m);
  }
  out.h_generators = static_cast<int>(rights.size());

  // q(n): [[A, B], [B, A]] with A, B elementary.
  std::vector<SuperMap> qs;
  for (int parity = 0; parity < 2; ++parity)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        Matrix x(2 * n, 2 * n);
        if (parity == 0) {
          x.at(r, c) = 1;
          x.at(n + r, n + c) = 1;
        } else {
          x.at(r, n + c) = 1;
          x.at(n + r, c) = 1;
        }
        Matrix m(dim, dim);
        for (int col = 0; col < dim; ++col) {
          int e = 0;
          for (int k = 0; k < d; ++k) {
            int src = digits[col][k];
            for (int dst = 0; dst < 2 * n; ++dst) {
              if (x.at(dst, src).is_zero()) continue;
              std::vector<int> ds = digits[col];
              ds[k] = dst;
              m.at(index_of(ds), gb.pos[col]) += sign_of(parity * e) * x.at(dst, src);
            }
            e += v.parity(src);
          }
        }
        qs.emplace_back(gb.space, gb.space, parity, m);
      }
  out.q_basis = static_cast<int>(qs.size());

  // (X v) h = h(X(v)) and X (v h) = X(h(v)) on column vectors.
  for (const auto& x : qs)
    for (const auto& h : rights) {
      Matrix hx = h.m * x.m, xh = x.m * h.m;
      if (hx != xh) ++out.failures;
      if (hx != (x.parity && h.parity ? -xh : xh)) ++out.signed_failures;
    }
  return out;
}

}  // namespace spinmon

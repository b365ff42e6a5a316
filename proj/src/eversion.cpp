#include "spinmon/eversion.hpp"

#include <algorithm>
#include <bit>

namespace spinmon {

namespace {

SuperMap projection(const SuperMap& inclusion) {
  return SuperMap(inclusion.tgt, inclusion.src, 0, inclusion.m.transpose());
}

std::vector<SuperMap> direct_sum_actions(const DirectSum& d, const std::vector<SuperMap>& a,
                                         const std::vector<SuperMap>& b) {
  std::vector<SuperMap> out;
  for (size_t i = 0; i < a.size(); ++i)
    out.push_back(d.in_left * a[i] * projection(d.in_left) + d.in_right * b[i] * projection(d.in_right));
  return out;
}

// Identification Pi(V) -> V (x) k^{0|1} placed inside V (x) k^{1|1} at e_1, with sign (-1)^{|v|}.
Matrix pi_to_e1(const SuperSpace& v, const TensorSpace& ts) {
  SuperSpace pv = pi(v);
  Matrix m(ts.space.dim(), pv.dim());
  for (int i = 0; i < v.dim(); ++i) {
    int flipped = i >= v.even ? i - v.even : v.odd + i;
    m.at(ts.index(i, 1), flipped) = v.parity(i) ? -1 : 1;
  }
  return m;
}

Matrix random_even_invertible(const SuperSpace& v, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-2, 2);
  for (;;) {
    Matrix g(v.dim(), v.dim());
    for (int i = 0; i < v.dim(); ++i)
      for (int j = 0; j < v.dim(); ++j)
        if (v.parity(i) == v.parity(j)) g.at(i, j) = entry(rng);
    if (g.rank() == v.dim()) return g;
  }
}

}  // namespace

CliffordModuleObject clifford_module(const SuperSpace& base, std::vector<SuperMap> actions, long degree,
                                     std::string name) {
  for (const auto& a : actions)
    if (a.src != base || a.tgt != base) throw DomainError("Clifford action is not an endomorphism of the base");
  if (!satisfies_clifford_relations(actions)) throw DomainError("Clifford relations fail for " + name);
  if ((degree - static_cast<long>(actions.size())) % 2) throw DomainError("degree and rank differ in parity");
  return {base, std::move(actions), degree, std::move(name)};
}

CliffordModuleObject evert_tensor(const CliffordModuleObject& m, const CliffordModuleObject& n, int q) {
  CliffordModuleObject r;
  r.base = tensor_space(m.base, n.base).space;
  SuperMap im = SuperMap::identity(m.base), in = SuperMap::identity(n.base);
  for (const auto& a : m.actions) r.actions.push_back(tensor_map(a, in));
  for (const auto& a : n.actions) r.actions.push_back(tensor_map(im, a));
  r.degree = q ? (m.degree + n.degree) % q : m.degree + n.degree;
  r.name = "(" + m.name + "." + n.name + ")";
  return r;
}

SuperMap spin_action(const SpinGroupElement& g, const std::vector<SuperMap>& actions, const SuperSpace& v) {
  if (g.n != static_cast<int>(actions.size())) throw DomainError("spin element rank does not match the actions");
  CliffordElement x = spin_clifford_image(g);
  if (actions.empty()) return SuperMap::identity(v).scaled(x.coefficient(0));
  return cl_image(x, actions);
}

bool is_module_map(const CliffordModuleObject& m, const CliffordModuleObject& n, const SuperMap& f) {
  if (f.src != m.base || f.tgt != n.base || m.rank() != n.rank()) return false;
  for (int i = 0; i < m.rank(); ++i) {
    SuperMap lhs = f * m.actions[i];
    SuperMap rhs = n.actions[i] * f;
    if (f.parity ? lhs != -rhs : lhs != rhs) return false;
  }
  return true;
}

std::vector<SuperMap> module_hom_basis(const CliffordModuleObject& m, const CliffordModuleObject& n, int parity) {
  if (m.rank() != n.rank()) throw DomainError("module maps need equal ranks");
  const SuperSpace &s = m.base, &t = n.base;
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j)
      if ((t.parity(i) + s.parity(j)) % 2 == parity) slots.emplace_back(i, j);
  if (slots.empty()) return {};
  int cells = t.dim() * s.dim();
  Matrix sys(std::max(1, m.rank() * cells), static_cast<int>(slots.size()));
  CycNumber sign = parity ? CycNumber(-1) : CycNumber(1);
  for (int k = 0; k < m.rank(); ++k) {
    const Matrix& a = m.actions[k].m;
    const Matrix& b = n.actions[k].m;
    // Row (i, j): sum_l f_{il} a_{lj} - sign * sum_l b_{il} f_{lj}.
    for (size_t u = 0; u < slots.size(); ++u) {
      auto [x, y] = slots[u];
      for (int j = 0; j < s.dim(); ++j)
        if (!a.at(y, j).is_zero()) sys.at(k * cells + x * s.dim() + j, static_cast<int>(u)) += a.at(y, j);
      for (int i = 0; i < t.dim(); ++i)
        if (!b.at(i, x).is_zero()) sys.at(k * cells + i * s.dim() + y, static_cast<int>(u)) -= sign * b.at(i, x);
    }
  }
  Matrix ker = sys.kernel();
  std::vector<SuperMap> out;
  for (int c = 0; c < ker.cols(); ++c) {
    Matrix f(t.dim(), s.dim());
    for (size_t u = 0; u < slots.size(); ++u) f.at(slots[u].first, slots[u].second) = ker.at(static_cast<int>(u), c);
    out.emplace_back(s, t, parity, f);
  }
  return out;
}

SuperMap evert_symmetry(const SuperMap& beta, const CliffordModuleObject& m, const CliffordModuleObject& n) {
  if ((m.degree - m.rank()) % 2 || (n.degree - n.rank()) % 2) throw DomainError("rank and degree disagree mod 2");
  SuperSpace nm = tensor_space(n.base, m.base).space;
  if (beta.src != tensor_space(m.base, n.base).space || beta.tgt != nm) throw DomainError("braiding has the wrong shape");
  std::vector<SuperMap> acts;
  SuperMap im = SuperMap::identity(m.base), in = SuperMap::identity(n.base);
  for (const auto& a : m.actions) acts.push_back(tensor_map(in, a));
  for (const auto& a : n.actions) acts.push_back(tensor_map(a, im));
  return spin_action(group_inv(tau_tilde(m.rank(), n.rank())), acts, nm) * beta;
}

// Everted instance

EvertedInstance::EvertedInstance(int q, std::vector<Object> objects, std::size_t max_arity)
    : q_(q), objects_(std::move(objects)), max_arity_(max_arity) {
  if (q < 0 || q % 2) throw DomainError("modulus must be 0 or even");
}

EvertedInstance EvertedInstance::standard(int q) {
  SuperSpace k11{1, 1};
  Matrix xp(2, 2);
  xp.at(1, 0) = 3;
  xp.at(0, 1) = CycNumber(mpq_class(2, 3));
  auto [l1, l2] = cl2_matrix_iso();
  EvertedInstance c(q, {clifford_module({1, 0}, {}, 0, "E"), clifford_module({0, 1}, {}, 0, "O"),
                        clifford_module(k11, {xi_11()}, 1, "X"), clifford_module(k11, {SuperMap(k11, k11, 1, xp)}, 1, "Y"),
                        clifford_module(k11, {l1, l2}, 2, "U")});
  c.add_module_generators();
  return c;
}

CliffordModuleObject EvertedInstance::unit() const { return {SuperSpace{1, 0}, {}, 0, "1"}; }

SuperMap EvertedInstance::associator(const Object& a, const Object& b, const Object& c) const {
  return tensor_associator(a.base, b.base, c.base);
}

SuperMap EvertedInstance::associator_inverse(const Object& a, const Object& b, const Object& c) const {
  return *associator(a, b, c).inverse();
}

void EvertedInstance::add_generator(const Object& src, const Object& dst, const SuperMap& f, std::string name) {
  if (!is_module_map(src, dst, f)) throw DomainError("generator " + name + " is not a module map");
  generators_.push_back({src, dst, f, std::move(name)});
}

void EvertedInstance::add_module_generators() {
  for (const auto& a : objects_)
    for (const auto& b : objects_) {
      if (degree(a) != degree(b) || a.rank() != b.rank()) continue;
      for (int p = 0; p < 2; ++p) {
        auto basis = module_hom_basis(a, b, p);
        for (size_t k = 0; k < basis.size(); ++k)
          add_generator(a, b, basis[k], "f" + std::to_string(p) + "[" + a.name + ">" + b.name + "]" + std::to_string(k));
      }
    }
}

Braiding<EvertedInstance> EvertedInstance::braiding() const {
  if (q_ % 4) throw DomainError("eversion braiding needs 4 | q");
  Braiding<EvertedInstance> b;
  b.kind = BraidingKind::TypeII;
  b.map = [](const Object& x, const Object& y) {
    return evert_symmetry(symmetry(SymKind::Tau, x.base, y.base), x, y);
  };
  b.factor = q_ ? FactorScalars::builtin(BuiltinFactor::D, q_) * FactorScalars::builtin(BuiltinFactor::A, q_)
                : FactorScalars::closed_form(BuiltinFactor::D) * FactorScalars::closed_form(BuiltinFactor::A);
  return b;
}

AxiomReport check_braiding_module_maps(const EvertedInstance& c, const Braiding<EvertedInstance>& br) {
  AxiomReport rep;
  for (const auto& a : c.objects())
    for (const auto& b : c.objects()) {
      bool ok = is_module_map(c.tensor(a, b), c.tensor(b, a), br.map(a, b));
      rep.records.push_back({c.name(), "braiding module map", {a.name, b.name}, "module map",
                             ok ? "module map" : "not a module map", ok});
    }
  return rep;
}

// Periodicity

CliffordModuleObject periodicity_shift(const CliffordModuleObject& m, int q) {
  PeriodicityData pd = periodicity_data(2);
  CliffordModuleObject u{pd.module_u, pd.actions, 0, "U2"};
  CliffordModuleObject r = evert_tensor(m, u, q);
  r.degree = m.degree;
  r.name = "Phi(" + m.name + ")";
  return r;
}

ReorderCheck periodicity_reorder(const CliffordModuleObject& m, const CliffordModuleObject& n) {
  CliffordModuleObject src = evert_tensor(periodicity_shift(m), n);
  CliffordModuleObject dst = periodicity_shift(evert_tensor(m, n));
  SuperSpace u = periodicity_data(2).module_u;
  SuperMap move = tensor_associator(m.base, n.base, u) *
                  tensor_map(SuperMap::identity(m.base), symmetry(SymKind::Tau, u, n.base)) *
                  *tensor_associator(m.base, u, n.base).inverse();
  SuperMap back = *move.inverse();
  std::vector<SuperMap> moved;
  for (const auto& a : src.actions) moved.push_back(move * a * back);
  int r = m.rank(), s = n.rank();
  SpinGroupElement g = j_embed(r, 2 + s, spin_identity(r), group_inv(tau_tilde(2, s)));
  ReorderCheck out;
  out.iso = spin_action(g, moved, dst.base) * move;
  out.even = out.iso.parity == 0;
  out.module_map = is_module_map(src, dst, out.iso);
  out.invertible = out.iso.inverse().has_value();
  return out;
}

MoritaCheck morita_check(const CliffordModuleObject& m) {
  if (m.rank() != 2) throw DomainError("Morita check needs a Cl_2-module");
  PeriodicityData pd = periodicity_data(2);
  Eigenspace v = eigenspace(cl_image(pd.idempotent_eps, m.actions), CycNumber(1));
  SuperSpace u = pd.module_u;
  // Basis lambda_S u_0 of U, with u_0 = e_0 spanning eps U; even masks first.
  std::vector<CliffordMask> masks{0, 3, 1, 2};
  std::vector<CliffordMask> chosen;
  std::vector<Matrix> cols;
  Matrix acc(u.dim(), 0);
  for (CliffordMask s : masks) {
    Matrix img = cl_image(CliffordElement::monomial(2, s), pd.actions).m.select_cols({0});
    Matrix trial(u.dim(), static_cast<int>(chosen.size()) + 1);
    for (size_t c = 0; c < chosen.size(); ++c)
      for (int i = 0; i < u.dim(); ++i) trial.at(i, static_cast<int>(c)) = cols[c].at(i, 0);
    for (int i = 0; i < u.dim(); ++i) trial.at(i, static_cast<int>(chosen.size())) = img.at(i, 0);
    if (trial.rank() == static_cast<int>(chosen.size()) + 1) {
      chosen.push_back(s);
      cols.push_back(img);
    }
  }
  int even_count = 0;
  for (CliffordMask s : chosen) even_count += std::popcount(s) % 2 == 0;
  SuperSpace ub{even_count, static_cast<int>(chosen.size()) - even_count};
  Matrix bm(u.dim(), ub.dim());
  for (int c = 0; c < ub.dim(); ++c)
    for (int i = 0; i < u.dim(); ++i) bm.at(i, c) = cols[c].at(i, 0);
  SuperMap b(ub, u, 0, bm);

  TensorSpace ts = tensor_space(v.space, ub);
  Matrix phi(m.base.dim(), ts.space.dim());
  for (int col = 0; col < ts.space.dim(); ++col) {
    auto [j, k] = ts.pairs[col];
    int sp = std::popcount(chosen[k]) % 2;
    Matrix img = cl_image(CliffordElement::monomial(2, chosen[k]), m.actions).m * v.inclusion.m.select_cols({j});
    CycNumber sign = (v.space.parity(j) && sp) ? CycNumber(-1) : CycNumber(1);
    for (int i = 0; i < m.base.dim(); ++i) phi.at(i, col) = sign * img.at(i, 0);
  }
  MoritaCheck out;
  out.reduced = v.space;
  SuperMap phi_b(ts.space, m.base, 0, phi);
  out.iso = phi_b * *tensor_map(SuperMap::identity(v.space), b).inverse();
  std::vector<SuperMap> acts;
  for (const auto& l : pd.actions) acts.push_back(tensor_map(SuperMap::identity(v.space), l));
  CliffordModuleObject vu{tensor_space(v.space, u).space, acts, m.degree, "epsM.U2"};
  out.even = out.iso.parity == 0;
  out.module_map = is_module_map(vu, m, out.iso);
  out.invertible = out.iso.inverse().has_value();
  return out;
}

CliffordModuleObject random_cl2_module(std::mt19937_64& rng) {
  PeriodicityData pd = periodicity_data(2);
  std::vector<SuperMap> pi_acts;
  for (const auto& l : pd.actions) pi_acts.push_back(pi_map(l));
  std::uniform_int_distribution<int> copies(1, 3), coin(0, 1);
  int k = copies(rng);
  std::vector<SuperMap> acts = coin(rng) ? pd.actions : pi_acts;
  SuperSpace space = acts[0].src;
  for (int i = 1; i < k; ++i) {
    const std::vector<SuperMap>& next = coin(rng) ? pd.actions : pi_acts;
    DirectSum d = direct_sum(space, next[0].src);
    acts = direct_sum_actions(d, acts, next);
    space = d.space;
  }
  SuperMap g(space, space, 0, random_even_invertible(space, rng));
  SuperMap gi = *g.inverse();
  for (auto& a : acts) a = g * a * gi;
  return clifford_module(space, acts, 0, "M" + std::to_string(k));
}

// Cl_1

CliffordModuleObject cl1_free(const SuperSpace& m) {
  return {tensor_space(m, {1, 1}).space, {tensor_map(SuperMap::identity(m), xi_11())}, 1, "F"};
}

std::vector<Cl1Check> cl1_double_check(const std::vector<CliffordModuleObject>& stock) {
  std::vector<Cl1Check> out;
  SuperSpace k11{1, 1};
  for (const auto& mod : stock) {
    if (mod.rank() != 1) throw DomainError("Cl_1 check needs rank 1 modules");
    Cl1Check c;
    c.module = mod.name;
    TensorSpace ts = tensor_space(mod.base, k11);
    SuperMap a = tensor_map(mod.actions[0], SuperMap::identity(k11));
    SuperMap x = tensor_map(SuperMap::identity(mod.base), xi_11());
    SuperMap two = SuperMap::identity(ts.space).scaled(2);
    SuperMap f = two - a * x;
    SuperMap lit = two - x * a;
    CliffordModuleObject with_alpha{ts.space, {a}, mod.degree, mod.name + ".k11"};
    CliffordModuleObject free = cl1_free(mod.base);
    c.intertwiner_even = f.parity == 0;
    c.intertwiner_module_map = is_module_map(with_alpha, free, f);
    c.intertwiner_invertible = f.inverse().has_value();
    c.literal_form_anti = lit * a == -(x * lit) && !is_module_map(with_alpha, free, lit);

    // M (+) Pi(M) -> M (x) k^{1|1}: m -> m (x) e_0, Pi(m) -> (-1)^{|m|} m (x) e_1.
    SuperSpace pm = pi(mod.base);
    DirectSum d = direct_sum(mod.base, pm);
    Matrix left(ts.space.dim(), mod.base.dim());
    for (int i = 0; i < mod.base.dim(); ++i) left.at(ts.index(i, 0), i) = 1;
    SuperMap split = SuperMap(mod.base, ts.space, 0, left) * projection(d.in_left) +
                     SuperMap(pm, ts.space, 0, pi_to_e1(mod.base, ts)) * projection(d.in_right);
    c.gf_split = split.parity == 0 && split.inverse().has_value();
    CliffordModuleObject sum{d.space, direct_sum_actions(d, mod.actions, {pi_map(mod.actions[0])}), mod.degree,
                             mod.name + "+Pi"};
    SuperMap fg = f * split;
    c.fg_split = is_module_map(sum, with_alpha, split) && is_module_map(sum, free, fg) && fg.inverse().has_value();
    out.push_back(c);
  }
  return out;
}

// K_+

KPlusElement KPlusElement::operator*(const KPlusElement& o) const {
  KPlusElement r;
  for (const auto& [a, x] : coeffs)
    for (const auto& [b, y] : o.coeffs) {
      std::string key = a == "[k]" ? b : b == "[k]" ? a : a + "*" + b;
      r.coeffs[key] += x * y;
    }
  std::erase_if(r.coeffs, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

std::string KPlusElement::str() const {
  if (coeffs.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : coeffs) s += (s.empty() ? "" : " + ") + c.str() + k;
  return s;
}

KPlusElement kplus_class(const SuperSpace& x) {
  KPlusElement e;
  if (x.dim()) e.coeffs["[k]"] = QSqrt2(x.dim());
  return e;
}

KPlusElement kplus_image(const CliffordModuleObject& x) {
  if (x.rank() == 0) return kplus_class(x.base);
  if (x.rank() != 1) throw DomainError("K_+ image is defined on ranks 0 and 1");
  KPlusElement e;
  mpq_class half(x.base.dim(), 2);
  half.canonicalize();
  if (x.base.dim()) e.coeffs["[k]"] = QSqrt2(0, half);
  return e;
}

bool KPlusReport::pass() const {
  return !records.empty() && std::all_of(records.begin(), records.end(), [](const auto& r) { return r.pass(); });
}

KPlusReport kplus_map(const std::vector<CliffordModuleObject>& samples) {
  KPlusReport rep;
  CycNumber i4 = cyc_root(4, 1);
  for (const auto& x : samples)
    for (const auto& y : samples) {
      KPlusRecord rec;
      rec.left = x.name;
      rec.right = y.name;
      rec.expected = kplus_image(x) * kplus_image(y);
      CliffordModuleObject p = evert_tensor(x, y);
      if (p.rank() <= 1) {
        rec.product = kplus_image(p);
      } else {
        SuperMap h = (p.actions[0] * p.actions[1]).scaled(CycNumber(mpq_class(1, 2)));
        Eigenspace plus = eigenspace(h, i4);
        Eigenspace minus = eigenspace(h, -i4);
        rec.product = kplus_class(plus.space);
        SuperMap moved = p.actions[0] * plus.inclusion;
        rec.swap = (h * moved + moved.scaled(i4)).is_zero() && moved.m.rank() == plus.space.dim() &&
                   minus.space.dim() == plus.space.dim() &&
                   plus.space.dim() == morita_check(p).reduced.dim();
      }
      rep.records.push_back(rec);
    }
  return rep;
}

}  // namespace spinmon

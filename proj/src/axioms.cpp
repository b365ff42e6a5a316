#include "spinmon/axioms.hpp"

#include <memory>

namespace spinmon {

namespace {

CycNumber sign_of(long e) { return e % 2 ? CycNumber(-1) : CycNumber(1); }
long binom2(long n) { return n * (n - 1) / 2; }

}  // namespace

FactorScalars FactorScalars::from_table(const FactorSystem& f, std::string name) {
  auto t = std::make_shared<const FactorSystem>(f);
  FactorScalars s;
  s.name = std::move(name);
  s.q = f.q;
  s.parity = f.parity;
  s.w1 = [t](long a, long b, long c) { return t->w1(a, b, c); };
  s.w2 = [t](long a, long b, long c) { return t->w2(a, b, c); };
  if (f.has_sharp()) s.ws = [t](long a, long b) { return t->ws(a, b); };
  return s;
}

FactorScalars FactorScalars::builtin(BuiltinFactor which, int q) {
  return from_table(builtin_factor_system(which, q), builtin_factor_name(which));
}

FactorScalars FactorScalars::closed_form(BuiltinFactor which) {
  FactorScalars s;
  s.name = builtin_factor_name(which);
  s.q = 0;
  auto one3 = [](long, long, long) { return CycNumber(1); };
  auto one2 = [](long, long) { return CycNumber(1); };
  s.w1 = one3;
  s.w2 = one3;
  s.ws = one2;
  switch (which) {
    case BuiltinFactor::Trivial: break;
    case BuiltinFactor::A:
      s.parity = 1;
      s.w2 = [](long a, long b, long c) { return sign_of(binom2(c) * a * b); };
      s.ws = [](long a, long b) { return sign_of(binom2(a) * binom2(b)); };
      break;
    case BuiltinFactor::B:
      s.parity = 1;
      s.w2 = [](long a, long b, long c) { return a % 2 && b % 2 && c % 2 ? cyc_root(4, 1) : CycNumber(1); };
      s.ws = [](long a, long b) { return a % 2 && b % 2 ? cyc_root(8, 1) : CycNumber(1); };
      break;
    case BuiltinFactor::C:
    case BuiltinFactor::D:
      s.w1 = [](long a, long b, long c) { return sign_of(a * b * c); };
      s.w2 = s.w1;
      if (which == BuiltinFactor::D) s.ws = [](long a, long b) { return sign_of(a * b); };
      break;
  }
  return s;
}

FactorScalars FactorScalars::operator*(const FactorScalars& o) const {
  if (q != o.q) throw DomainError("factor scalars modulus mismatch");
  FactorScalars s;
  s.name = name + "*" + o.name;
  s.q = q;
  s.parity = (parity + o.parity) % 2;
  auto x = *this;
  s.w1 = [x, o](long a, long b, long c) { return x.w1(a, b, c) * o.w1(a, b, c); };
  s.w2 = [x, o](long a, long b, long c) { return x.w2(a, b, c) * o.w2(a, b, c); };
  if (has_sharp() && o.has_sharp()) s.ws = [x, o](long a, long b) { return x.ws(a, b) * o.ws(a, b); };
  return s;
}

FactorScalars FactorScalars::inverse() const {
  FactorScalars s = *this;
  s.name = name + "^-1";
  auto x = *this;
  s.w1 = [x](long a, long b, long c) { return x.w1(a, b, c).inv(); };
  s.w2 = [x](long a, long b, long c) { return x.w2(a, b, c).inv(); };
  if (has_sharp()) s.ws = [x](long a, long b) { return x.ws(a, b).inv(); };
  return s;
}

std::string braiding_kind_name(BraidingKind kind) {
  switch (kind) {
    case BraidingKind::Ordinary: return "ordinary";
    case BraidingKind::TypeI: return "typeI";
    case BraidingKind::TypeII: return "typeII";
  }
  return "";
}

bool AxiomReport::pass() const { return failures() == 0; }

std::size_t AxiomReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : records) n += r.pass ? 0 : 1;
  return n;
}

const AxiomRecord* AxiomReport::first_failure() const {
  for (const auto& r : records)
    if (!r.pass) return &r;
  return nullptr;
}

void AxiomReport::append(const AxiomReport& o) { records.insert(records.end(), o.records.begin(), o.records.end()); }

std::size_t AxiomReport::count(const std::string& check) const {
  std::size_t n = 0;
  for (const auto& r : records) n += r.check == check ? 1 : 0;
  return n;
}

// S~

StildeInstance::StildeInstance(int q, int max_rank) : q_(q), max_rank_(max_rank) {
  if (q < 0 || q % 2) throw DomainError("modulus must be 0 or even");
  if (max_rank < 0 || max_rank > 8) throw DomainError("rank bound must lie in [0, 8]");
}

std::vector<int> StildeInstance::objects() const {
  std::vector<int> v;
  for (int n = 0; n <= max_rank_; ++n) v.push_back(n);
  return v;
}

bool StildeInstance::admissible(const std::vector<int>& xs) const {
  int s = 0;
  for (int x : xs) s += x;
  return s <= max_rank_;
}

int StildeInstance::parity(const TgaElement& f) const {
  std::optional<int> p = f.parity();
  if (!p) throw DomainError("morphism is not homogeneous");
  return *p;
}

std::optional<CycNumber> StildeInstance::ratio(const TgaElement& x, const TgaElement& y) const {
  if (x.rank() != y.rank() || y.is_zero()) return std::nullopt;
  const auto& [idx, c] = *y.terms().begin();
  auto it = x.terms().find(idx);
  if (it == x.terms().end()) return std::nullopt;
  CycNumber r = it->second / c;
  if (x != y.scaled(r)) return std::nullopt;
  return r;
}

std::vector<Generator<int, TgaElement>> StildeInstance::generators() const {
  std::vector<Generator<int, TgaElement>> g;
  for (int n = 0; n <= max_rank_; ++n) {
    g.push_back({n, n, identity(n), "1" + label(n)});
    for (int i = 1; i < n; ++i)
      g.push_back({n, n, TgaElement::from_group(spin_generator(n, i)), "s" + std::to_string(i) + label(n)});
  }
  return g;
}

Braiding<StildeInstance> StildeInstance::braiding() const {
  if (q_ % 4) throw DomainError("factor system A needs 4 | q");
  Braiding<StildeInstance> b;
  b.kind = BraidingKind::TypeII;
  b.map = [](int n, int m) { return TgaElement::from_group(tau_tilde(n, m)); };
  b.factor = q_ ? FactorScalars::builtin(BuiltinFactor::A, q_) : FactorScalars::closed_form(BuiltinFactor::A);
  return b;
}

Braiding<StildeInstance> StildeInstance::rescaled_braiding() const {
  Braiding<StildeInstance> b;
  b.kind = BraidingKind::TypeII;
  b.map = [](int n, int m) { return TgaElement::from_group(tau_tilde(n, m), phi_a_prime(n, m)); };
  b.factor = q_ ? FactorScalars::builtin(BuiltinFactor::B, q_) : FactorScalars::closed_form(BuiltinFactor::B);
  return b;
}

// SVec

SuperMap tensor_associator(const SuperSpace& a, const SuperSpace& b, const SuperSpace& c) {
  TensorSpace bc = tensor_space(b, c);
  TensorSpace left = tensor_space(a, bc.space);
  TensorSpace ab = tensor_space(a, b);
  TensorSpace right = tensor_space(ab.space, c);
  int d = left.space.dim();
  Matrix m(d, d);
  for (int col = 0; col < d; ++col) {
    auto [i, jk] = left.pairs[col];
    auto [j, k] = bc.pairs[jk];
    m.at(right.index(ab.index(i, j), k), col) = CycNumber(1);
  }
  return SuperMap(left.space, right.space, 0, std::move(m));
}

std::optional<CycNumber> map_ratio(const SuperMap& x, const SuperMap& y) {
  if (x.src != y.src || x.tgt != y.tgt || y.is_zero()) return std::nullopt;
  return x.m.proportional_to(y.m);
}

SVecInstance::SVecInstance(int q, std::vector<SVecObject> objects, std::size_t max_arity)
    : q_(q), objects_(std::move(objects)), max_arity_(max_arity) {
  if (q < 0 || q % 2) throw DomainError("modulus must be 0 or even");
}

SVecObject SVecInstance::unit() const { return SVecObject{SuperSpace{1, 0}, 0, 0, "1"}; }

std::string SVecInstance::label(const SVecObject& x) const {
  if (x.pi_exp == 0) return x.name;
  return "P" + std::to_string(x.pi_exp) + x.name;
}

SVecObject SVecInstance::tensor(const SVecObject& a, const SVecObject& b) const {
  SVecObject r;
  r.base = tensor_space(a.space(), b.space()).space;
  r.degree = q_ ? (a.degree + b.degree) % q_ : a.degree + b.degree;
  r.name = "(" + label(a) + "." + label(b) + ")";
  return r;
}

SuperMap SVecInstance::associator(const SVecObject& a, const SVecObject& b, const SVecObject& c) const {
  return tensor_associator(a.space(), b.space(), c.space());
}

SuperMap SVecInstance::associator_inverse(const SVecObject& a, const SVecObject& b, const SVecObject& c) const {
  return *associator(a, b, c).inverse();
}

std::optional<CycNumber> SVecInstance::ratio(const SuperMap& x, const SuperMap& y) const { return map_ratio(x, y); }

void SVecInstance::add_generator(const SVecObject& src, const SVecObject& dst, const SuperMap& f, std::string name) {
  if (f.src != src.space() || f.tgt != dst.space()) throw DomainError("generator shape mismatch");
  generators_.push_back({src, dst, f, std::move(name)});
}

SVecObject SVecInstance::pi(const SVecObject& x, long n) const {
  SVecObject r = x;
  r.pi_exp += n;
  return r;
}

SuperMap SVecInstance::xi(const SVecObject& x, long n, long m) const {
  SuperMap r = xi_power(static_cast<int>(x.pi_exp + n), static_cast<int>(x.pi_exp + m), x.base);
  return r;
}

Braiding<SVecInstance> SVecInstance::symmetry() const {
  Braiding<SVecInstance> b;
  b.kind = BraidingKind::Ordinary;
  b.map = [](const SVecObject& x, const SVecObject& y) { return spinmon::symmetry(SymKind::Tau, x.space(), y.space()); };
  b.factor = q_ ? FactorScalars::builtin(BuiltinFactor::Trivial, q_) : FactorScalars::closed_form(BuiltinFactor::Trivial);
  return b;
}

}  // namespace spinmon

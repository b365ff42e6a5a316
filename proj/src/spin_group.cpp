#include "spinmon/spin_group.hpp"

#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace spinmon {

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_mul(const Perm& g, const Perm& h) {
  if (g.size() != h.size()) throw DomainError("permutation size mismatch");
  Perm r(g.size());
  for (size_t i = 0; i < g.size(); ++i) r[i] = g[h[i]];
  return r;
}

Perm perm_inv(const Perm& g) {
  Perm r(g.size());
  for (size_t i = 0; i < g.size(); ++i) r[g[i]] = static_cast<int>(i);
  return r;
}

int perm_length(const Perm& g) {
  int l = 0;
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j)
      if (g[i] > g[j]) ++l;
  return l;
}

Perm perm_adjacent(int n, int i) {
  if (i < 1 || i >= n) throw DomainError("adjacent transposition index out of range");
  Perm p = perm_identity(n);
  std::swap(p[i - 1], p[i]);
  return p;
}

Perm perm_tau(int n, int m) {
  Perm p(n + m);
  for (int i = 0; i < n; ++i) p[i] = i + m;
  for (int i = n; i < n + m; ++i) p[i] = i - n;
  return p;
}

Perm perm_direct_sum(const Perm& g, const Perm& h) {
  Perm p = g;
  int n = static_cast<int>(g.size());
  for (int x : h) p.push_back(x + n);
  return p;
}

std::uint32_t factorial(int n) {
  std::uint32_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint32_t>(i);
  return f;
}

std::uint32_t perm_index(const Perm& g) {
  int n = static_cast<int>(g.size());
  std::uint32_t idx = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (g[j] < g[i]) ++smaller;
    idx = idx * static_cast<std::uint32_t>(n - i) + static_cast<std::uint32_t>(smaller);
  }
  return idx;
}

Perm perm_from_index(int n, std::uint32_t idx) {
  std::vector<int> digits(n);
  for (int i = n - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(idx % static_cast<std::uint32_t>(n - i));
    idx /= static_cast<std::uint32_t>(n - i);
  }
  std::vector<int> pool = perm_identity(n);
  Perm p(n);
  for (int i = 0; i < n; ++i) {
    p[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return p;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  for (std::uint32_t i = 0; i < factorial(n); ++i) out.push_back(perm_from_index(n, i));
  return out;
}

std::vector<int> canonical_word(const Perm& g) {
  std::vector<int> word;
  Perm w = g;
  int n = static_cast<int>(w.size());
  for (;;) {
    Perm inv = perm_inv(w);
    int i = 0;
    while (i + 1 < n && inv[i] < inv[i + 1]) ++i;
    if (i + 1 >= n) break;
    word.push_back(i + 1);
    std::swap(inv[i], inv[i + 1]);
    w = perm_inv(inv);
  }
  return word;
}

std::string cycle_notation(const Perm& g) {
  std::ostringstream os;
  std::vector<bool> seen(g.size(), false);
  bool any = false;
  for (size_t i = 0; i < g.size(); ++i) {
    if (seen[i] || g[i] == static_cast<int>(i)) continue;
    any = true;
    os << "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      os << (first ? "" : " ") << j + 1;
      first = false;
      j = static_cast<size_t>(g[j]);
    }
    os << ")";
  }
  return any ? os.str() : "()";
}

SpinFlavor flavor_by_index(int k) {
  static const SpinFlavor table[4] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  if (k < 0 || k > 3) throw DomainError("flavor index must be in 0..3");
  return table[k];
}

std::string SpinGroupElement::str() const { return (sign ? "-" : "+") + cycle_notation(perm); }

SpinGroupElement canonical_lift(const Perm& perm, SpinFlavor flavor) {
  return {static_cast<int>(perm.size()), flavor, perm, 0};
}

SpinGroupElement spin_identity(int n, SpinFlavor flavor) { return canonical_lift(perm_identity(n), flavor); }

SpinGroupElement spin_c(int n, SpinFlavor flavor) {
  SpinGroupElement c = spin_identity(n, flavor);
  c.sign = 1;
  return c;
}

SpinGroupElement spin_generator(int n, int i, SpinFlavor flavor) {
  return canonical_lift(perm_adjacent(n, i), flavor);
}

namespace {

constexpr int kImageMemoMaxRank = 7;
constexpr int kCocycleMemoMaxRank = 6;

std::mutex& memo_mutex() {
  static std::mutex m;
  return m;
}

std::unordered_map<std::uint64_t, CliffordElement>& image_memo() {
  static std::unordered_map<std::uint64_t, CliffordElement> m;
  return m;
}

std::unordered_map<std::uint64_t, int>& cocycle_memo() {
  static std::unordered_map<std::uint64_t, int> m;
  return m;
}

CliffordElement compute_lift_image(const Perm& perm) {
  int n = static_cast<int>(perm.size());
  CliffordElement r = CliffordElement::scalar(n, 1);
  for (int i : canonical_word(perm)) r = r * spin_image(n, i);
  return r;
}

// Exponent for flavor (1,0), read off the faithful Clifford image.
int clifford_cocycle(const Perm& g, const Perm& h) {
  CliffordElement a = lift_clifford_image(g);
  CliffordElement b = lift_clifford_image(h);
  CliffordElement c = lift_clifford_image(perm_mul(g, h));
  auto [mask, target] = *c.terms().begin();
  CycNumber got;
  for (const auto& [s, x] : a.terms()) {
    CycNumber y = b.coefficient(s ^ mask);
    if (y.is_zero()) continue;
    MonomialProduct mp = monomial_product(s, s ^ mask);
    CycNumber t = x * y * CycNumber(1L << mp.twos);
    got += mp.sign < 0 ? -t : t;
  }
  if (got == target) return 0;
  if (got == -target) return 1;
  throw std::logic_error("Clifford image of a lift product is not a signed lift");
}

}  // namespace

CliffordElement lift_clifford_image(const Perm& perm) {
  int n = static_cast<int>(perm.size());
  if (n > kImageMemoMaxRank) return compute_lift_image(perm);
  std::uint64_t key = (static_cast<std::uint64_t>(n) << 32) | perm_index(perm);
  {
    std::lock_guard<std::mutex> lock(memo_mutex());
    auto it = image_memo().find(key);
    if (it != image_memo().end()) return it->second;
  }
  CliffordElement img = compute_lift_image(perm);
  std::lock_guard<std::mutex> lock(memo_mutex());
  image_memo().emplace(key, img);
  return img;
}

CliffordElement spin_clifford_image(const SpinGroupElement& g) {
  if (!(g.flavor == kSpinStandard)) throw DomainError("Clifford image exists for flavor (1,0) only");
  CliffordElement img = lift_clifford_image(g.perm);
  return g.sign ? -img : img;
}

int spin_cocycle(SpinFlavor flavor, const Perm& g, const Perm& h) {
  int k = 0;
  if (flavor.delta) {
    int n = static_cast<int>(g.size());
    if (n <= kCocycleMemoMaxRank) {
      std::uint64_t f = factorial(n);
      std::uint64_t key = ((static_cast<std::uint64_t>(n) * f + perm_index(g)) * f) + perm_index(h);
      std::unique_lock<std::mutex> lock(memo_mutex());
      auto it = cocycle_memo().find(key);
      if (it != cocycle_memo().end()) {
        k = it->second;
      } else {
        lock.unlock();
        k = clifford_cocycle(g, h);
        lock.lock();
        cocycle_memo().emplace(key, k);
      }
    } else {
      k = clifford_cocycle(g, h);
    }
  }
  if (flavor.epsilon) k += (perm_length(g) + perm_length(h) - perm_length(perm_mul(g, h))) / 2;
  return k % 2;
}

SpinGroupElement group_mul(const SpinGroupElement& g, const SpinGroupElement& h) {
  if (g.n != h.n || !(g.flavor == h.flavor)) throw DomainError("spin group rank or flavor mismatch");
  SpinGroupElement r{g.n, g.flavor, perm_mul(g.perm, h.perm), 0};
  r.sign = (g.sign + h.sign + spin_cocycle(g.flavor, g.perm, h.perm)) % 2;
  return r;
}

SpinGroupElement group_inv(const SpinGroupElement& g) {
  Perm inv = perm_inv(g.perm);
  int k = spin_cocycle(g.flavor, g.perm, inv);
  return {g.n, g.flavor, inv, (g.sign + k) % 2};
}

SpinGroupElement group_product(const std::vector<SpinGroupElement>& factors) {
  if (factors.empty()) throw DomainError("empty product needs a rank");
  SpinGroupElement r = factors[0];
  for (size_t i = 1; i < factors.size(); ++i) r = group_mul(r, factors[i]);
  return r;
}

SpinGroupElement sigma_tilde(int total, int n, int i) {
  SpinGroupElement r = spin_identity(total);
  for (int k = i; k <= i + n - 1; ++k) r = group_mul(r, spin_generator(total, k));
  return r;
}

SpinGroupElement tau_tilde(int n, int m) {
  if (n < 0 || m < 0) throw DomainError("tau needs nonnegative block sizes");
  SpinGroupElement r = spin_identity(n + m);
  for (int i = m; i >= 1; --i) r = group_mul(r, sigma_tilde(n + m, n, i));
  return r;
}

SpinGroupElement j_embed(int n, int m, const SpinGroupElement& g, const SpinGroupElement& h) {
  if (g.n != n || h.n != m || !(g.flavor == h.flavor)) throw DomainError("j_embed argument mismatch");
  // Canonical words of g (+) 1 and 1 (+) h are the words of g and h, shifted.
  SpinGroupElement left{n + m, g.flavor, perm_direct_sum(g.perm, perm_identity(m)), g.sign};
  SpinGroupElement right{n + m, g.flavor, perm_direct_sum(perm_identity(n), h.perm), h.sign};
  return group_mul(left, right);
}

TgaElement TgaElement::from_group(const SpinGroupElement& g, const CycNumber& coeff) {
  TgaElement t(g.n);
  t.add_term(perm_index(g.perm), g.sign ? -coeff : coeff);
  return t;
}

TgaElement TgaElement::scalar(int n, const CycNumber& c) {
  TgaElement t(n);
  t.add_term(0, c);
  return t;
}

void TgaElement::add_term(std::uint32_t idx, const CycNumber& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(idx);
  if (it == terms_.end()) {
    terms_.emplace(idx, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CycNumber TgaElement::coefficient(const Perm& p) const {
  auto it = terms_.find(perm_index(p));
  return it == terms_.end() ? CycNumber() : it->second;
}

TgaElement TgaElement::operator*(const TgaElement& o) const {
  if (n_ != o.n_) throw DomainError("twisted group algebra rank mismatch");
  TgaElement r(n_);
  for (const auto& [gi, a] : terms_) {
    Perm g = perm_from_index(n_, gi);
    for (const auto& [hi, b] : o.terms_) {
      Perm h = perm_from_index(n_, hi);
      int k = spin_cocycle(kSpinStandard, g, h);
      CycNumber c = a * b;
      r.add_term(perm_index(perm_mul(g, h)), k ? -c : c);
    }
  }
  return r;
}

TgaElement TgaElement::operator+(const TgaElement& o) const {
  if (n_ != o.n_) throw DomainError("twisted group algebra rank mismatch");
  TgaElement r = *this;
  for (const auto& [i, c] : o.terms_) r.add_term(i, c);
  return r;
}

TgaElement TgaElement::operator-(const TgaElement& o) const { return *this + (-o); }

TgaElement TgaElement::scaled(const CycNumber& c) const {
  TgaElement r(n_);
  for (const auto& [i, a] : terms_) r.add_term(i, a * c);
  return r;
}

std::optional<int> TgaElement::parity() const {
  std::optional<int> p;
  for (const auto& [i, c] : terms_) {
    int q = perm_length(perm_from_index(n_, i)) % 2;
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p ? p : 0;
}

std::string TgaElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c.str() << ")*" << cycle_notation(perm_from_index(n_, i));
    first = false;
  }
  return os.str();
}

TgaElement tga_mul(const TgaElement& a, const TgaElement& b) { return a * b; }

TgaElement tga_tensor(int n, int m, const TgaElement& a, const TgaElement& b) {
  TgaElement r(n + m);
  for (const auto& [gi, x] : a.terms())
    for (const auto& [hi, y] : b.terms()) {
      SpinGroupElement g = canonical_lift(perm_from_index(n, gi));
      SpinGroupElement h = canonical_lift(perm_from_index(m, hi));
      r = r + TgaElement::from_group(j_embed(n, m, g, h), x * y);
    }
  return r;
}

HeckeCliffordElement HeckeCliffordElement::perm(const Perm& w, const CycNumber& c) {
  HeckeCliffordElement h(static_cast<int>(w.size()));
  h.add_term({perm_index(w), 0}, c);
  return h;
}

HeckeCliffordElement HeckeCliffordElement::clifford(const CliffordElement& x) {
  HeckeCliffordElement h(x.rank());
  for (const auto& [s, c] : x.terms()) h.add_term({0, s}, c);
  return h;
}

void HeckeCliffordElement::add_term(const Key& k, const CycNumber& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

HeckeCliffordElement HeckeCliffordElement::operator*(const HeckeCliffordElement& o) const {
  if (n_ != o.n_) throw DomainError("Hecke-Clifford rank mismatch");
  HeckeCliffordElement r(n_);
  for (const auto& [k1, a] : terms_) {
    Perm w = perm_from_index(n_, k1.first);
    for (const auto& [k2, b] : o.terms_) {
      Perm w2 = perm_from_index(n_, k2.first);
      Perm w2inv = perm_inv(w2);
      // alpha_S w2 = w2 prod_{s in S ascending} alpha_{w2^{-1}(s)}.
      int sign = 1;
      CliffordMask acc = 0;
      for (int s = 0; s < n_; ++s) {
        if (!(k1.second >> s & 1)) continue;
        MonomialProduct mp = monomial_product(acc, CliffordMask{1} << w2inv[s]);
        sign *= mp.sign;
        acc = mp.mask;
      }
      MonomialProduct last = monomial_product(acc, k2.second);
      sign *= last.sign;
      CycNumber c = a * b * CycNumber(1L << last.twos);
      r.add_term({perm_index(perm_mul(w, w2)), last.mask}, sign < 0 ? -c : c);
    }
  }
  return r;
}

HeckeCliffordElement HeckeCliffordElement::operator+(const HeckeCliffordElement& o) const {
  if (n_ != o.n_) throw DomainError("Hecke-Clifford rank mismatch");
  HeckeCliffordElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

HeckeCliffordElement HeckeCliffordElement::operator-(const HeckeCliffordElement& o) const { return *this + (-o); }

HeckeCliffordElement HeckeCliffordElement::scaled(const CycNumber& c) const {
  HeckeCliffordElement r(n_);
  for (const auto& [k, a] : terms_) r.add_term(k, a * c);
  return r;
}

std::string HeckeCliffordElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c.str() << ") · " << cycle_notation(perm_from_index(n_, k.first))
       << " · a{";
    bool f = true;
    for (int i = 0; i < n_; ++i)
      if (k.second >> i & 1) {
        os << (f ? "" : ",") << i + 1;
        f = false;
      }
    os << "}";
    first = false;
  }
  return os.str();
}

namespace {

HeckeCliffordElement hecke_generator(int n, int j) {
  CliffordElement diff = CliffordElement::generator(n, j) - CliffordElement::generator(n, j + 1);
  CycNumber coeff = cyc_root(4, 1) * CycNumber(mpq_class(1, 2));
  return HeckeCliffordElement::perm(perm_adjacent(n, j), coeff) * HeckeCliffordElement::clifford(diff);
}

}  // namespace

HeckeCliffordElement hecke_phi(const SpinGroupElement& g) {
  HeckeCliffordElement r = HeckeCliffordElement::perm(perm_identity(g.n));
  for (int j : canonical_word(g.perm)) r = r * hecke_generator(g.n, j);
  return g.sign ? -r : r;
}

HeckeCliffordElement hecke_iso(const TgaElement& x, const CliffordElement& y) {
  if (x.rank() != y.rank()) throw DomainError("Hecke-Clifford rank mismatch");
  HeckeCliffordElement r(x.rank());
  HeckeCliffordElement cy = HeckeCliffordElement::clifford(y);
  for (const auto& [i, c] : x.terms())
    r = r + (hecke_phi(canonical_lift(perm_from_index(x.rank(), i))) * cy).scaled(c);
  return r;
}

HeckeIsoReport hecke_iso_check(int n) {
  HeckeIsoReport rep;
  rep.n = n;
  std::vector<HeckeCliffordElement> phi, alpha;
  for (int j = 1; j < n; ++j) phi.push_back(hecke_phi(spin_generator(n, j)));
  for (int i = 1; i <= n; ++i) alpha.push_back(HeckeCliffordElement::clifford(CliffordElement::generator(n, i)));
  HeckeCliffordElement one = HeckeCliffordElement::perm(perm_identity(n));
  bool ok = true;
  for (size_t a = 0; a < phi.size(); ++a) {
    ok = ok && phi[a] * phi[a] == one;
    for (size_t b = a + 1; b < phi.size(); ++b) {
      if (b == a + 1) ok = ok && phi[a] * phi[b] * phi[a] == phi[b] * phi[a] * phi[b];
      else ok = ok && phi[a] * phi[b] == -(phi[b] * phi[a]);
    }
    for (const auto& al : alpha) ok = ok && phi[a] * al == -(al * phi[a]);
  }
  for (size_t a = 0; a < alpha.size(); ++a) {
    ok = ok && alpha[a] * alpha[a] == one.scaled(2);
    for (size_t b = a + 1; b < alpha.size(); ++b) ok = ok && alpha[a] * alpha[b] == -(alpha[b] * alpha[a]);
  }
  rep.relations = ok;
  SparseEchelon ech;
  CliffordMask full = CliffordMask{1} << n;
  for (const Perm& w : all_perms(n)) {
    HeckeCliffordElement pw = hecke_phi(canonical_lift(w));
    for (CliffordMask s = 0; s < full; ++s) {
      HeckeCliffordElement img = pw * HeckeCliffordElement::clifford(CliffordElement::monomial(n, s));
      SparseEchelon::Vec v;
      for (const auto& [k, c] : img.terms()) v[static_cast<int>(k.first * full + k.second)] = c;
      ech.add(std::move(v));
    }
  }
  rep.rank = ech.rank();
  rep.expected_rank = static_cast<int>(factorial(n) * full);
  return rep;
}

TauFactorizationReport tau_factorization(int m, int n) {
  TauFactorizationReport rep{m, n, false};
  int mn = m * n;
  HeckeCliffordElement lhs = HeckeCliffordElement::perm(perm_tau(m, n));
  SpinGroupElement t = tau_tilde(m, n);
  CycNumber coeff = cyc_root(4, mn);
  if ((mn * (mn - 1) / 2) % 2) coeff = -coeff;
  HeckeCliffordElement rhs = (hecke_phi(t) * HeckeCliffordElement::clifford(spin_clifford_image(t))).scaled(coeff);
  rep.holds = lhs == rhs;
  return rep;
}

}  // namespace spinmon

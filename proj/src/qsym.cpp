#include "spinmon/qsym.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <numeric>

namespace spinmon {

namespace {

Partition normalize(std::vector<int> e) {
  std::sort(e.begin(), e.end(), std::greater<int>());
  while (!e.empty() && e.back() == 0) e.pop_back();
  return e;
}

int total(const std::vector<int>& e) { return std::accumulate(e.begin(), e.end(), 0); }

void gen_partitions(int n, int max_part, int max_parts, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  if (max_parts == 0) return;
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, max_parts - 1, cur, out);
    cur.pop_back();
  }
}

// All distinct rearrangements of mu padded to n entries.
std::vector<std::vector<int>> rearrangements(const Partition& mu, int n) {
  std::vector<int> e(mu);
  e.resize(n, 0);
  std::sort(e.begin(), e.end());
  std::vector<std::vector<int>> out;
  do out.push_back(e);
  while (std::next_permutation(e.begin(), e.end()));
  return out;
}

std::string partition_str(const Partition& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

}  // namespace

StrictPartition::StrictPartition(std::vector<int> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw DomainError("strict partition parts must be positive");
    if (i && parts[i] >= parts[i - 1]) throw DomainError("strict partition parts must decrease: " + str());
  }
}

int StrictPartition::size() const { return total(parts); }

std::string StrictPartition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

std::vector<Partition> partitions(int n, int max_parts) {
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, n, max_parts, cur, out);
  return out;
}

std::vector<StrictPartition> strict_partitions(int n) {
  std::vector<StrictPartition> out;
  for (const auto& p : partitions(n, n)) {
    bool strict = true;
    for (size_t i = 1; i < p.size(); ++i) strict = strict && p[i] < p[i - 1];
    if (strict) out.emplace_back(p);
  }
  return out;
}

SymFun SymFun::constant(int n_vars, const QSqrt2& c) {
  SymFun f(n_vars);
  f.add({}, c);
  return f;
}

SymFun SymFun::monomial(int n_vars, const Partition& mu) {
  Partition p = normalize(mu);
  if (static_cast<int>(p.size()) > n_vars) throw DomainError("too many parts for " + std::to_string(n_vars) + " variables");
  SymFun f(n_vars);
  f.add(p, QSqrt2(1));
  return f;
}

void SymFun::add(const Partition& mu, const QSqrt2& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(mu);
  if (it == terms_.end()) {
    terms_.emplace(mu, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

QSqrt2 SymFun::coefficient(std::vector<int> e) const {
  Partition p = normalize(std::move(e));
  auto it = terms_.find(p);
  return it == terms_.end() ? QSqrt2() : it->second;
}

int SymFun::degree() const {
  int d = 0;
  for (const auto& [mu, c] : terms_) d = std::max(d, total(mu));
  return d;
}

bool SymFun::integral() const {
  for (const auto& [mu, c] : terms_)
    if (!c.is_integer()) return false;
  return true;
}

std::size_t SymFun::monomial_count() const {
  std::size_t count = 0;
  for (const auto& [mu, c] : terms_) count += rearrangements(mu, n_).size();
  return count;
}

std::string SymFun::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  // Lexicographically largest first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += "(" + it->second.str() + ")m" + partition_str(it->first);
  }
  return s;
}

std::string SymFun::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : str()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SymFun SymFun::operator+(const SymFun& o) const {
  if (n_ != o.n_) throw DomainError("variable counts differ");
  SymFun r = *this;
  for (const auto& [mu, c] : o.terms_) r.add(mu, c);
  return r;
}

SymFun SymFun::operator-(const SymFun& o) const { return *this + o.scaled(QSqrt2(-1)); }

SymFun SymFun::scaled(const QSqrt2& c) const {
  SymFun r(n_);
  if (c.is_zero()) return r;
  for (const auto& [mu, x] : terms_) r.terms_.emplace(mu, x * c);
  return r;
}

SymFun SymFun::operator*(const SymFun& o) const {
  if (n_ != o.n_) throw DomainError("variable counts differ");
  SymFun r(n_);
  // Full expansion of this factor, grouped by degree.
  std::map<int, std::vector<std::pair<std::vector<int>, QSqrt2>>> full;
  for (const auto& [mu, c] : terms_)
    for (auto& e : rearrangements(mu, n_)) full[total(mu)].emplace_back(std::move(e), c);
  std::map<int, bool> other_degrees;
  for (const auto& [mu, c] : o.terms_) other_degrees[total(mu)] = true;
  for (const auto& [d1, expansion] : full)
    for (const auto& [d2, unused] : other_degrees) {
      for (const auto& target : partitions(d1 + d2, n_)) {
        std::vector<int> e(target);
        e.resize(n_, 0);
        QSqrt2 acc;
        std::vector<int> diff(n_);
        for (const auto& [a, c] : expansion) {
          bool fits = true;
          for (int i = 0; i < n_ && fits; ++i) {
            diff[i] = e[i] - a[i];
            fits = diff[i] >= 0;
          }
          if (!fits) continue;
          QSqrt2 g = o.coefficient(diff);
          if (!g.is_zero()) acc += c * g;
        }
        r.add(target, acc);
      }
    }
  return r;
}

SymFun q_poly(int k, int n_vars) {
  if (k < 0) throw DomainError("q_k needs k >= 0");
  if (n_vars < k) throw DomainError("q_k needs at least k variables");
  SymFun f(n_vars);
  if (k == 0) return SymFun::constant(n_vars, QSqrt2(1));
  for (const auto& p : partitions(k, n_vars)) f = f + SymFun::monomial(n_vars, p).scaled(QSqrt2(1L << p.size()));
  return f;
}

SymFun Q_pair(int a, int b, int n_vars) {
  if (a < 0 || b < 0) throw DomainError("Q_(a,b) needs a, b >= 0");
  if (n_vars < a + b) throw DomainError("Q_(a,b) needs at least a + b variables");
  SymFun r = q_poly(a, n_vars) * q_poly(b, n_vars);
  for (int i = 1; i <= b; ++i) {
    SymFun t = (q_poly(a + i, n_vars) * q_poly(b - i, n_vars)).scaled(QSqrt2(i % 2 ? -2 : 2));
    r = r + t;
  }
  return r;
}

SymFun Q_lambda(const StrictPartition& lambda, int n_vars) {
  if (n_vars < lambda.size()) throw DomainError("Q_lambda needs at least |lambda| variables");
  std::vector<int> parts = lambda.parts;
  if (parts.size() % 2) parts.push_back(0);
  int n = static_cast<int>(parts.size());
  SymFun zero(n_vars);
  std::vector<std::vector<SymFun>> m(n, std::vector<SymFun>(n, zero));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m[i][j] = Q_pair(parts[i], parts[j], n_vars);
      m[j][i] = -m[i][j];
    }
  return pfaffian(m, zero, SymFun::constant(n_vars, QSqrt2(1)));
}

std::map<StrictPartition, QSqrt2> expand_in_Q_basis(const SymFun& f) {
  std::map<StrictPartition, QSqrt2> out;
  std::map<Partition, SymFun> cache;
  SymFun rem = f;
  while (!rem.is_zero()) {
    const auto& [mu, c] = *rem.terms().rbegin();
    Partition lead = mu;
    QSqrt2 coeff = c;
    for (size_t i = 1; i < lead.size(); ++i)
      if (lead[i] >= lead[i - 1]) throw DomainError("not in the span of the Q-functions: m" + partition_str(lead));
    if (total(lead) > f.n_vars()) throw DomainError("degree exceeds the variable count at m" + partition_str(lead));
    auto it = cache.find(lead);
    if (it == cache.end()) it = cache.emplace(lead, Q_lambda(StrictPartition(lead), f.n_vars())).first;
    QSqrt2 x = coeff / it->second.coefficient(lead);
    out.emplace(StrictPartition(lead), x);
    rem = rem - it->second.scaled(x);
  }
  return out;
}

QSqrt2 class_dictionary(const StrictPartition& lambda, SimpleFlavor flavor) {
  long l = lambda.length();
  if (flavor == SimpleFlavor::L) return QSqrt2::pow_sqrt2(-2 * (l / 2));
  return QSqrt2::pow_sqrt2(lambda.epsilon() - l);
}

bool is_queer_type(const StrictPartition& lambda) { return (lambda.size() - lambda.length()) % 2 == 1; }

}  // namespace spinmon

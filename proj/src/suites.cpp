#include "spinmon/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "spinmon/axioms.hpp"
#include "spinmon/clifford.hpp"
#include "spinmon/eversion.hpp"
#include "spinmon/factor_systems.hpp"
#include "spinmon/qsym.hpp"
#include "spinmon/queer.hpp"
#include "spinmon/species.hpp"
#include "spinmon/spin_group.hpp"

namespace spinmon {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  long cases = 0;
  std::optional<std::string> witness;

  void fail(const std::string& w) {
    if (!witness) witness = w;
  }
  void expect(bool ok, const std::string& w) {
    ++cases;
    if (!ok) fail(w);
  }
};

double since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void run_check(std::vector<CheckRecord>& out, std::string id, std::string anchor, const std::function<void(Outcome&)>& f) {
  auto t0 = Clock::now();
  Outcome o;
  try {
    f(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  out.push_back({std::move(id), std::move(anchor), !o.witness, o.cases, o.witness, since(t0)});
}

// Lower case alphanumerics and underscores, other runs collapsed to '-'.
std::string slug(const std::string& s) {
  std::string out;
  for (unsigned char ch : s) {
    if (ch == '\'')
      out += "_prime";
    else if (std::isalnum(ch) || ch == '_')
      out += static_cast<char>(std::tolower(ch));
    else if (!out.empty() && out.back() != '-')
      out += '-';
  }
  while (!out.empty() && out.back() == '-') out.pop_back();
  return out;
}

std::string tuple_str(const std::vector<std::string>& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + t[i];
  return s + ")";
}

std::string axiom_witness(const AxiomRecord& r) {
  return r.check + " at " + tuple_str(r.tuple) + ": expected " + r.expected + " got " + r.got;
}

// One record per check name, in order of first appearance.
void add_axioms(std::vector<CheckRecord>& out, const std::string& prefix, const std::string& anchor,
                const std::function<AxiomReport()>& f) {
  auto t0 = Clock::now();
  AxiomReport rep;
  try {
    rep = f();
  } catch (const std::exception& e) {
    out.push_back({prefix, anchor, false, 0, std::string("exception: ") + e.what(), since(t0)});
    return;
  }
  double ms = since(t0);
  std::vector<std::string> order;
  std::map<std::string, CheckRecord> groups;
  for (const auto& r : rep.records) {
    auto it = groups.find(r.check);
    if (it == groups.end()) {
      order.push_back(r.check);
      it = groups.emplace(r.check, CheckRecord{prefix + "/" + slug(r.check), anchor, true, 0, std::nullopt, 0}).first;
    }
    ++it->second.cases;
    if (!r.pass && it->second.pass) {
      it->second.pass = false;
      it->second.witness = axiom_witness(r);
    }
  }
  if (order.empty()) {
    out.push_back({prefix, anchor, false, 0, std::string("no cases"), ms});
    return;
  }
  for (const auto& name : order) {
    CheckRecord r = groups.at(name);
    r.millis = ms * static_cast<double>(r.cases) / static_cast<double>(rep.records.size());
    out.push_back(std::move(r));
  }
}

// Passes when the suite finds at least one failure.
void add_rejection(std::vector<CheckRecord>& out, const std::string& id, const std::string& anchor,
                   const std::function<AxiomReport()>& f) {
  run_check(out, id, anchor, [&](Outcome& o) {
    AxiomReport r = f();
    o.cases = static_cast<long>(r.records.size());
    if (r.pass()) o.fail("every case passed");
  });
}

std::string qs(int q) { return "q=" + std::to_string(q); }

// Factor systems.

void factor_systems_suite(const SuiteParams& p, std::vector<CheckRecord>& out) {
  int q = p.q;
  for (BuiltinFactor which : {BuiltinFactor::Trivial, BuiltinFactor::A, BuiltinFactor::B, BuiltinFactor::C, BuiltinFactor::D}) {
    if (which == BuiltinFactor::A && q % 4) continue;
    std::string name = builtin_factor_name(which);
    run_check(out, "factor-systems/check/" + name + "/" + qs(q), "factor system conditions", [&](Outcome& o) {
      FactorCheckReport r = fs_check(builtin_factor_system(which, q));
      o.expect(r.pass, r.str());
      o.expect(r.symmetric, "not symmetric");
    });
  }
  if (q % 4 == 0)
    run_check(out, "factor-systems/A-even-rejected/" + qs(q), "wrong parity rejected", [&](Outcome& o) {
      FactorCheckReport r = fs_check(with_parity(builtin_factor_system(BuiltinFactor::A, q), 0));
      o.expect(!r.pass && r.condition == 3 && r.witness == std::vector<long>{1, 1, 1, 1}, r.str());
    });
  RelationSuiteReport rel = relation_suite(q);
  for (const auto& r : rel.records)
    run_check(out, "factor-systems/relation/" + slug(r.name) + "/" + qs(q), "coboundary relations",
              [&](Outcome& o) { o.expect(r.pass, r.name + " fails"); });
  if (q % 4 == 0)
    run_check(out, "factor-systems/relation/CD/" + qs(q), "coboundary relations", [&](Outcome& o) {
      FactorSystem cd = fs_mul(builtin_factor_system(BuiltinFactor::C, q), builtin_factor_system(BuiltinFactor::D, q));
      FactorSystem phi = coboundary([](long x, long y) { return cyc_root(4, x * y); }, q);
      o.expect(phi == cd, "C D differs from the coboundary of zeta4^{xy}");
    });
}

// Spin groups.

int binom2(int n) { return n * (n - 1) / 2; }

SpinGroupElement with_c(SpinGroupElement g, int k) {
  g.sign = (g.sign + k) % 2;
  return g;
}

void spin_suite(const SuiteParams& p, std::vector<CheckRecord>& out) {
  int r = p.max_rank;
  run_check(out, "spin/tau-double-product", "tau double product", [&](Outcome& o) {
    for (int n = 0; n <= r; ++n)
      for (int m = 0; n + m <= r; ++m) {
        SpinGroupElement prod = group_mul(tau_tilde(n, m), tau_tilde(m, n));
        SpinGroupElement want = with_c(spin_identity(n + m), (binom2(n) * binom2(m)) % 2);
        o.expect(prod == want, "(n,m)=(" + std::to_string(n) + "," + std::to_string(m) + "): " + prod.str());
      }
  });
  run_check(out, "spin/tau-conjugation", "conjugation by tau", [&](Outcome& o) {
    for (int n = 1; n < r; ++n)
      for (int m = 1; n + m <= r; ++m) {
        SpinGroupElement t = tau_tilde(n, m), ti = group_inv(t);
        std::vector<SpinGroupElement> gs{spin_identity(n)}, hs{spin_identity(m)};
        for (int i = 1; i < n; ++i) gs.push_back(spin_generator(n, i));
        for (int i = 1; i < m; ++i) hs.push_back(spin_generator(m, i));
        for (const auto& g : gs)
          for (const auto& h : hs) {
            SpinGroupElement lhs = group_product({t, j_embed(n, m, g, h), ti});
            int k = n * m * g.parity() + n * m * h.parity() + g.parity() * h.parity();
            o.expect(lhs == with_c(j_embed(m, n, h, g), k % 2),
                     "(n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ") g=" + g.str() + " h=" + h.str());
          }
      }
  });
  run_check(out, "spin/tau-composition", "tau composition", [&](Outcome& o) {
    for (int n = 0; n <= r; ++n)
      for (int m = 0; n + m <= r; ++m)
        for (int q = 0; n + m + q <= r; ++q) {
          SpinGroupElement a = j_embed(n, m + q, spin_identity(n), tau_tilde(m, q));
          SpinGroupElement b = j_embed(n + m, q, tau_tilde(m, n), spin_identity(q));
          o.expect(group_mul(a, b) == tau_tilde(m, n + q),
                   "(n,m,p)=(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(q) + ")");
        }
  });
}

// The category S~.

void stilde_suite(const SuiteParams& p, std::vector<CheckRecord>& out) {
  if (p.q % 4 == 0) {
    StildeInstance c(p.q, p.max_rank);
    auto br = c.braiding();
    std::string prefix = "stilde/" + qs(p.q);
    add_axioms(out, prefix, "type II axioms with factor A", [&] { return check_all(c, br); });
    add_rejection(out, prefix + "/flipped-sign-rejected", "sign flip detected",
                  [&] { return check_all(c, flip_braiding_sign(c, br, c.label(1), c.label(1))); });
  }
  StildeInstance c2(2, p.max_rank);
  auto rb = c2.rescaled_braiding();
  add_axioms(out, "stilde/rescaled/q=2", "rescaled braiding with factor B", [&] { return check_all(c2, rb); });
  add_rejection(out, "stilde/rescaled/q=2/unrescaled-rejected", "rescaling needed", [&] {
    auto plain = rb;
    plain.map = [](int n, int m) { return TgaElement::from_group(tau_tilde(n, m)); };
    return check_all(c2, plain);
  });
}

// Clifford algebras.

void clifford_suite(const SuiteParams& p, std::vector<CheckRecord>& out) {
  int r = p.max_rank;
  run_check(out, "clifford/spin-relations", "spin relations in Cl_n", [&](Outcome& o) {
    for (int n = 2; n <= r; ++n) {
      CliffordElement one = CliffordElement::scalar(n, 1);
      for (int i = 1; i < n; ++i) {
        CliffordElement si = spin_image(n, i);
        std::string at = "n=" + std::to_string(n) + " i=" + std::to_string(i);
        o.expect(si * si == one, at + " square");
        for (int j = i + 1; j < n; ++j) {
          CliffordElement sj = spin_image(n, j);
          if (j == i + 1) o.expect(si * sj * si == sj * si * sj, at + " braid");
          if (j > i + 1) o.expect(si * sj == -(sj * si), at + " far");
        }
      }
    }
  });
  run_check(out, "clifford/generator-conjugation", "permutation of generators", [&](Outcome& o) {
    for (int n = 2; n <= r; ++n)
      for (int j = 1; j < n; ++j)
        for (int i = 1; i <= n; ++i) {
          int si = i == j ? j + 1 : (i == j + 1 ? j : i);
          CliffordElement a = CliffordElement::generator(n, i), b = CliffordElement::generator(n, si);
          o.expect(spin_image(n, j) * a == -(b * spin_image(n, j)),
                   "n=" + std::to_string(n) + " j=" + std::to_string(j) + " i=" + std::to_string(i));
        }
  });
  run_check(out, "clifford/spin-image-injective", "spin group embeds", [&](Outcome& o) {
    for (int n = 1; n <= std::min(r, 6); ++n) {
      std::set<std::string> seen;
      for (const Perm& g : all_perms(n))
        for (int sign = 0; sign < 2; ++sign)
          o.expect(seen.insert(spin_clifford_image(SpinGroupElement{n, kSpinStandard, g, sign}).str()).second,
                   "n=" + std::to_string(n) + " collision at " + cycle_notation(g));
    }
  });
  std::pair<SmallIso, const char*> isos[] = {{SmallIso::Cl1TensorCl1op, "cl1-tensor-cl1op"},
                                                    {SmallIso::Cl3Quaternion, "cl3-quaternion"},
                                                    {SmallIso::Cl4QuaternionMatrix, "cl4-quaternion-matrix"}};
  for (auto [which, name] : isos)
    run_check(out, std::string("clifford/iso/") + name, "explicit small isomorphism", [&](Outcome& o) {
      SmallIsoReport a = small_iso_verify(which);
      o.expect(a.homomorphism, "relations fail");
      o.expect(a.rank == a.expected_rank,
               "rank " + std::to_string(a.rank) + " expected " + std::to_string(a.expected_rank));
    });
}

// Bott periodicity.

void bott_suite(const SuiteParams& p, std::vector<CheckRecord>& out) {
  run_check(out, "bott/cl2-matrix", "Cl_2 matrix algebra", [&](Outcome& o) {
    auto [x, y] = cl2_matrix_iso();
    o.expect(satisfies_clifford_relations({x, y}), "relations fail");
    int rank = monomial_image_rank({x, y});
    o.expect(rank == 4, "rank " + std::to_string(rank));
  });
  run_check(out, "bott/cl8-matrix", "Cl_8 matrix algebra", [&](Outcome& o) {
    auto gens = cl8_matrix_iso();
    o.expect(gens.size() == 8, "generator count " + std::to_string(gens.size()));
    for (const auto& g : gens) {
      o.expect(g.parity == 1 && g.src == SuperSpace{8, 8}, "generator not odd on k^{8|8}");
      bool rational = true;
      for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) rational = rational && g.m.at(i, j).is_rational();
      o.expect(rational, "irrational entry");
    }
    o.expect(satisfies_clifford_relations(gens), "relations fail");
    int rank = monomial_image_rank(gens);
    o.expect(rank == 256, "rank " + std::to_string(rank));
  });
  for (int per : {2, 8})
    run_check(out, "bott/idempotent/p=" + std::to_string(per), "Morita idempotent", [&](Outcome& o) {
      PeriodicityData d = periodicity_data(per);
      const CliffordElement& e = d.idempotent_eps;
      o.expect(e * e == e, "not idempotent");
      o.expect(e.parity() == 0, "not even");
      int half = per == 2 ? 1 : 8;
      o.expect(d.module_u == SuperSpace{half, half}, "module of dimension " + std::to_string(d.module_u.dim()));
    });
  run_check(out, "bott/cl2-morita", "rank 2 modules are eps M (x) U_2", [&](Outcome& o) {
    std::mt19937_64 rng(p.seed);
    for (int t = 0; t < 10; ++t) {
      CliffordModuleObject m = random_cl2_module(rng);
      MoritaCheck r = morita_check(m);
      o.expect(r.pass() && 2 * r.reduced.dim() == m.base.dim(), "sample " + std::to_string(t));
    }
  });
}

// Hecke-Clifford algebras.

void hecke_suite(const SuiteParams& p, std::vector<CheckRecord>& out) {
  for (int n = 1; n <= std::min(p.max_rank, 4); ++n)
    run_check(out, "hecke/iso/n=" + std::to_string(n), "Hecke-Clifford isomorphism", [&](Outcome& o) {
      HeckeIsoReport r = hecke_iso_check(n);
      o.expect(r.relations, "relations fail");
      o.expect(r.rank == r.expected_rank,
               "rank " + std::to_string(r.rank) + " expected " + std::to_string(r.expected_rank));
    });
  run_check(out, "hecke/tau-factorization", "tau factorization", [&](Outcome& o) {
    for (int m = 0; m <= p.max_rank; ++m)
      for (int n = 0; m + n <= p.max_rank; ++n)
        o.expect(tau_factorization(m, n).holds, "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")");
  });
}

// Queer spaces.

void queer_suite(const SuiteParams& p, std::vector<CheckRecord>& out) {
  QueerInstance c = QueerInstance::standard();
  add_axioms(out, "queer/standard", "type II axioms with factor B", [&] { return check_all(c, c.braiding()); });
  auto t0 = Clock::now();
  QueerTrialReport rep = queer_trials(p.trials, p.seed);
  double ms = since(t0);
  std::pair<const char*, bool QueerTrial::*> props[] = {
      {"square-minus-one", &QueerTrial::square_minus_one}, {"half-dimension", &QueerTrial::half_dimension},
      {"swap-eigenspaces", &QueerTrial::swap_eigenspaces}, {"associator-iso", &QueerTrial::associator_iso},
      {"pentagon-identity", &QueerTrial::pentagon_identity}, {"hexagon", &QueerTrial::hexagon},
      {"double-braiding", &QueerTrial::double_braiding},   {"naturality", &QueerTrial::naturality}};
  for (auto [name, field] : props) {
    CheckRecord r{std::string("queer/trials/") + name, "seeded queer trials", true, 0, std::nullopt, ms / 8};
    for (size_t t = 0; t < rep.trials.size(); ++t) {
      ++r.cases;
      if (!(rep.trials[t].*field) && r.pass) {
        r.pass = false;
        std::string dims;
        for (int d : rep.trials[t].dims) dims += (dims.empty() ? "" : ",") + std::to_string(d);
        r.witness = "trial " + std::to_string(t) + " dims (" + dims + ")";
      }
    }
    if (!r.cases) {
      r.pass = false;
      r.witness = "no trials";
    }
    out.push_back(std::move(r));
  }
}

// Species.

void species_suite(const SuiteParams& p, std::vector<CheckRecord>& out) {
  SpeciesInstance c = SpeciesInstance::standard(std::min(p.max_rank, 5), p.seed);
  auto br = c.braiding();
  add_axioms(out, "species/type-i", "type I axioms with factor A", [&] { return check_all(c, br); });
  add_axioms(out, "species/maps", "even isomorphisms of s-representations",
             [&] { return check_species_symmetry_maps(c, br); });
  auto br2 = c.braiding_ii();
  add_axioms(out, "species/type-ii", "type II axioms with factor DA", [&] { return check_all(c, br2); });
  add_axioms(out, "species/beta-star", "type II axioms with factor A", [&] { return check_all(c, c.beta_star()); });
  add_axioms(out, "species/conversion", "type I to type II conversion",
             [&] { return compare_braidings(c, convert_I_to_II(c, br), br2); });
}

// Eversion.

CliffordModuleObject object_named(const EvertedInstance& c, const std::string& name) {
  for (const auto& x : c.objects())
    if (x.name == name) return x;
  throw DomainError("no object " + name);
}

void eversion_suite(const SuiteParams&, std::vector<CheckRecord>& out) {
  EvertedInstance c = EvertedInstance::standard(4);
  auto br = c.braiding();
  add_axioms(out, "eversion", "type II axioms with factor DA", [&] { return check_all(c, br); });
  add_axioms(out, "eversion/module-maps", "braiding by module maps", [&] { return check_braiding_module_maps(c, br); });
  add_rejection(out, "eversion/factor-A-rejected", "factor DA needed", [&] {
    auto a_only = br;
    a_only.factor = FactorScalars::builtin(BuiltinFactor::A, 4);
    return check_all(c, a_only);
  });
  run_check(out, "eversion/periodicity-reorder", "periodicity shift reordering", [&](Outcome& o) {
    for (const auto& m : c.objects())
      for (const auto& n : c.objects()) o.expect(periodicity_reorder(m, n).pass(), m.name + "," + n.name);
  });
  run_check(out, "eversion/cl1-functors", "free and forgetful Cl_1 functors", [&](Outcome& o) {
    auto x = object_named(c, "X"), y = object_named(c, "Y"), od = object_named(c, "O");
    std::vector<CliffordModuleObject> stock{x, y, evert_tensor(od, x), evert_tensor(x, od), evert_tensor(y, c.unit())};
    for (const auto& ch : cl1_double_check(stock)) o.expect(ch.pass(), ch.module);
  });
  run_check(out, "eversion/kplus", "K_+ multiplicativity", [&](Outcome& o) {
    auto x = object_named(c, "X"), y = object_named(c, "Y");
    auto big = clifford_module({2, 1}, {}, 0, "V");
    std::vector<CliffordModuleObject> samples{object_named(c, "E"), object_named(c, "O"), big, x, y, evert_tensor(big, x)};
    KPlusReport r = kplus_map(samples);
    for (const auto& rec : r.records)
      o.expect(rec.pass(), rec.left + "," + rec.right + ": " + rec.product.str() + " vs " + rec.expected.str());
  });
}

// Sergeev duality.

void sergeev_suite(const SuiteParams&, std::vector<CheckRecord>& out) {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}})
    run_check(out, "sergeev/n=" + std::to_string(n) + "/d=" + std::to_string(d), "supercommuting actions",
              [&](Outcome& o) {
                SergeevCheck r = sergeev_commutant_check(n, d);
                o.cases = static_cast<long>(r.q_basis) * r.h_generators;
                if (!r.pass() || r.q_basis != 2 * n * n)
                  o.fail(std::to_string(r.failures) + " failures over " + std::to_string(r.q_basis) + " q(n) elements");
              });
}

// Q-functions.

void qsym_suite(const SuiteParams&, std::vector<CheckRecord>& out) {
  run_check(out, "qsym/q-relation", "q-function relation", [&](Outcome& o) {
    int nv = 10;
    std::vector<SymFun> q;
    for (int k = 0; k <= nv; ++k) q.push_back(q_poly(k, nv));
    for (int n = 1; n <= nv; ++n) {
      SymFun s(nv);
      for (int i = 0; i <= n; ++i) s = i % 2 ? s - q[i] * q[n - i] : s + q[i] * q[n - i];
      o.expect(s.is_zero(), "n=" + std::to_string(n));
    }
  });
  run_check(out, "qsym/pair-antisymmetry", "Q pair antisymmetry", [&](Outcome& o) {
    for (int a = 0; a <= 8; ++a)
      for (int b = 0; a + b <= 8; ++b) {
        if (a == 0 && b == 0) continue;
        o.expect(Q_pair(b, a, 8) == -Q_pair(a, b, 8), "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
  });
  run_check(out, "qsym/structure-constants", "integral structure constants", [&](Outcome& o) {
    int nv = 8;
    std::vector<StrictPartition> all;
    for (int d = 1; d < nv; ++d)
      for (const auto& l : strict_partitions(d)) all.push_back(l);
    std::map<StrictPartition, SymFun> cache;
    for (const auto& l : all) cache.emplace(l, Q_lambda(l, nv));
    for (const auto& a : all)
      for (const auto& b : all) {
        if (a.size() + b.size() > nv || b < a) continue;
        for (const auto& [l, coeff] : expand_in_Q_basis(cache.at(a) * cache.at(b)))
          o.expect(coeff.is_integer(), a.str() + "*" + b.str() + " at " + l.str() + ": " + coeff.str());
      }
  });
  run_check(out, "qsym/dictionary-ratio", "class dictionary ratios", [&](Outcome& o) {
    for (int d = 1; d <= 7; ++d)
      for (const auto& l : strict_partitions(d)) {
        QSqrt2 r = class_dictionary(l, SimpleFlavor::L) / class_dictionary(l, SimpleFlavor::N);
        QSqrt2 want = d % 2 == 0 ? QSqrt2(1) : l.length() % 2 == 0 ? QSqrt2(0, mpq_class(1, 2)) : QSqrt2::sqrt2();
        o.expect(r == want, l.str() + ": " + r.str());
      }
  });
}

using SuiteFn = void (*)(const SuiteParams&, std::vector<CheckRecord>&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"factor-systems", factor_systems_suite}, {"spin", spin_suite},         {"stilde", stilde_suite},
      {"clifford", clifford_suite},             {"bott", bott_suite},         {"hecke", hecke_suite},
      {"queer", queer_suite},                   {"species", species_suite},   {"eversion", eversion_suite},
      {"sergeev", sergeev_suite},               {"qsym", qsym_suite}};
  return r;
}

std::string fmt_millis(double ms) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(1);
  s << ms;
  return s.str();
}

}  // namespace

bool SuiteReport::pass() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

void validate_params(const std::string& suite, const SuiteParams& p) {
  const auto& names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
    throw DomainError("unknown suite: " + suite);
  if (p.q != 2 && p.q != 4 && p.q != 8 && p.q != 16) throw DomainError("q must be one of 2, 4, 8, 16");
  if (p.max_rank < 1 || p.max_rank > 8) throw DomainError("max-rank must lie in [1, 8]");
  if (p.trials < 1 || p.trials > 1000) throw DomainError("trials must lie in [1, 1000]");
}

SuiteReport run_suite(const std::string& suite, const SuiteParams& p) {
  validate_params(suite, p);
  SuiteReport rep{suite, p, {}};
  for (const auto& [name, fn] : registry())
    if (suite == "all" || suite == name) fn(p, rep.records);
  return rep;
}

nlohmann::ordered_json report_json(const SuiteReport& r, bool timings) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["suite"] = r.suite;
  j["parameters"] = {{"q", r.params.q}, {"max_rank", r.params.max_rank}, {"trials", r.params.trials}, {"seed", r.params.seed}};
  auto recs = nlohmann::ordered_json::array();
  for (const auto& c : r.records) {
    nlohmann::ordered_json x;
    x["id"] = c.id;
    x["anchor"] = c.anchor;
    x["status"] = c.pass ? "pass" : "fail";
    x["cases"] = c.cases;
    if (c.witness) x["witness"] = *c.witness;
    if (timings) x["millis"] = std::round(c.millis * 10) / 10;
    recs.push_back(std::move(x));
  }
  j["records"] = std::move(recs);
  j["status"] = r.pass() ? "pass" : "fail";
  return j;
}

std::string report_text(const SuiteReport& r, bool timings) {
  std::string s;
  for (const auto& c : r.records) {
    s += (c.pass ? "✓ " : "✗ ") + c.id + " [" + c.anchor + "] cases=" + std::to_string(c.cases);
    if (timings) s += " " + fmt_millis(c.millis) + "ms";
    if (c.witness) s += " witness: " + *c.witness;
    s += "\n";
  }
  std::size_t bad = std::count_if(r.records.begin(), r.records.end(), [](const CheckRecord& c) { return !c.pass; });
  s += r.suite + ": " + (r.pass() ? "pass" : "fail") + " (" + std::to_string(r.records.size() - bad) + "/" +
       std::to_string(r.records.size()) + " checks)\n";
  return s;
}

const std::vector<std::string>& table_kinds() {
  static const std::vector<std::string> k{"qfun", "tau", "dictionary"};
  return k;
}

Table make_table(const std::string& kind, int max_degree) {
  Table t{kind, max_degree, {}, {}};
  if (kind == "qfun") {
    if (max_degree < 0 || max_degree > 12) throw DomainError("qfun tables need max-degree in [0, 12]");
    t.columns = {"k", "variables", "terms", "expansion"};
    int nv = std::max(max_degree, 1);
    for (int k = 0; k <= max_degree; ++k) {
      SymFun f = q_poly(k, nv);
      t.rows.push_back({k, nv, static_cast<long>(f.terms().size()), f.str()});
    }
  } else if (kind == "tau") {
    if (max_degree < 0 || max_degree > 10) throw DomainError("tau tables need max-degree in [0, 10]");
    t.columns = {"n", "m", "word", "c_power"};
    for (int n = 0; n <= max_degree; ++n)
      for (int m = 0; n + m <= max_degree; ++m) {
        SpinGroupElement tau = tau_tilde(n, m);
        std::string word = tau.sign ? "c" : "";
        for (int i : canonical_word(tau.perm)) word += (word.empty() ? "s" : " s") + std::to_string(i);
        SpinGroupElement sq = group_mul(tau, tau_tilde(m, n));
        if (sq.perm != perm_identity(n + m)) throw std::logic_error("tau double product is not central");
        t.rows.push_back({n, m, word.empty() ? "1" : word, sq.sign});
      }
  } else if (kind == "dictionary") {
    if (max_degree < 1 || max_degree > 8) throw DomainError("dictionary tables need max-degree in [1, 8]");
    t.columns = {"lambda", "length", "epsilon", "L", "N", "queer", "expansion_hash"};
    for (int d = 1; d <= max_degree; ++d)
      for (const auto& l : strict_partitions(d))
        t.rows.push_back({l.str(), l.length(), l.epsilon(), class_dictionary(l, SimpleFlavor::L).str(),
                          class_dictionary(l, SimpleFlavor::N).str(), is_queer_type(l), Q_lambda(l, d).hash()});
  } else {
    throw DomainError("unknown table kind: " + kind);
  }
  return t;
}

nlohmann::ordered_json table_json(const Table& t) {
  nlohmann::ordered_json j;
  j["schema"] = kTableSchema;
  j["kind"] = t.kind;
  j["max_degree"] = t.max_degree;
  j["columns"] = t.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json x;
    for (size_t i = 0; i < row.size(); ++i) x[t.columns[i]] = row[i];
    rows.push_back(std::move(x));
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string table_csv(const Table& t) {
  auto cell = [](const nlohmann::ordered_json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  std::string s;
  for (size_t i = 0; i < t.columns.size(); ++i) s += (i ? "," : "") + t.columns[i];
  s += "\n";
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + cell(row[i]);
    s += "\n";
  }
  return s;
}

}  // namespace spinmon

#include "spechtvar/acceptance.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "spechtvar/error.hpp"
#include "spechtvar/jordan.hpp"
#include "spechtvar/partitions.hpp"
#include "spechtvar/phimap.hpp"
#include "spechtvar/table9.hpp"
#include "spechtvar/variety.hpp"
#include "spechtvar/youngdec.hpp"

namespace spechtvar {

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << "FAILED: " << what << "; ";
    }
  }
};

/// Restricted actions built once per (mu, n, p, kind) within a run.
class ModuleStore {
 public:
  const RestrictedActions& specht(const Partition& mu, unsigned n, unsigned p) {
    return get("S" + mu.to_string() + std::to_string(n) + "/" + std::to_string(p), [&] { return restricted_actions(mu, n, p, true); });
  }
  const RestrictedActions& permutation(const Partition& mu, unsigned n, unsigned p) {
    return get("M" + mu.to_string() + std::to_string(n) + "/" + std::to_string(p), [&] { return perm_module_actions(mu, n, p); });
  }

 private:
  const RestrictedActions& get(const std::string& key, const std::function<RestrictedActions()>& build) {
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, build()).first;
    return it->second;
  }
  std::map<std::string, RestrictedActions> cache_;
};

GenericTypeReport random_generic(const RestrictedActions& acts, const AcceptanceOptions& options) {
  GenericOptions g;
  g.seed = options.seed;
  g.threads = options.threads;
  return generic_type(acts, g);
}

void ac1(Outcome& out, const AcceptanceOptions& options) {
  const auto rows = compute_table9(options.threads);
  std::size_t agree = 0;
  for (const auto& row : rows) {
    agree += row.agrees;
    out.require(row.agrees, row.mu.to_string() + " classified " + class_label(row.observed) + " dim " +
                                std::to_string(row.estimate.dim) + ", expected " + std::string(to_string(row.expected)));
    out.require(row.total_points == 757, row.mu.to_string() + " swept " + std::to_string(row.total_points) + " points");
  }
  out.detail << agree << "/" << rows.size() << " classes agree over GF(27)";
}

ff::MultiPoly reference_quartic() {
  ff::MultiPoly f(3, 3);
  f.add_term(std::vector<unsigned>{2, 2, 0}, 1);
  f.add_term(std::vector<unsigned>{0, 2, 2}, 1);
  f.add_term(std::vector<unsigned>{2, 0, 2}, 1);
  return f;
}

void ac2(Outcome& out, ModuleStore& store, const AcceptanceOptions& options) {
  const auto sample = enumerate_locus(store.specht(Partition({3, 3, 3}), 3, 3), 3, options.threads);
  const auto forms = interpolate_forms(sample, 4);
  out.require(forms.size() == 1, "degree-4 space has dimension " + std::to_string(forms.size()));
  if (forms.size() != 1) return;
  const auto& f = forms.front();
  const auto g = reference_quartic();
  out.require(f == g || f == g.scaled(2), "form is " + f.to_string());
  const auto t = template_check(f, 3);
  out.require(t.matches && t.n == 1 && t.ftilde && t.ftilde->is_zero(), "template fit");
  out.require(t.degree_divisible && f.total_degree() % 4 == 0, "degree divisible by (p-1)^2");
  out.detail << "form " << f.to_string() << ", n=" << t.n << ", ftilde=" << (t.ftilde ? t.ftilde->to_string() : "none");
}

void ac3(Outcome& out, ModuleStore& store, const AcceptanceOptions& options) {
  const auto& acts = store.specht(Partition({3, 3, 3}), 3, 3);
  const auto est = estimate_dimension(acts, {1, 2, 3}, options.threads);
  out.require(est.dim == 2, "estimated dimension " + std::to_string(est.dim));
  out.require(est.divides && acts.dim == 42 && variety_dimension_divides(42, 3, 3, 2), "3^(3-2) divides 42");
  out.detail << "counts";
  for (auto c : est.affine_counts) out.detail << ' ' << c;
  out.detail << ", fitted slope " << est.fitted_slope << ", dim " << est.dim;
}

void ac4(Outcome& out, ModuleStore& store, const AcceptanceOptions& options) {
  const std::vector<std::pair<Partition, unsigned>> cases = {
      {Partition({9}), 3}, {Partition({6, 3}), 3}, {Partition({3, 3, 3}), 3}, {Partition({4, 2}), 2}, {Partition({2, 2, 2}), 2}};
  for (const auto& [mu, p] : cases) {
    const unsigned n = static_cast<unsigned>(mu.size()) / p;
    const auto& acts = store.permutation(mu, n, p);
    const auto empirical = random_generic(acts, options).type;
    const auto formula = perm_generic_type_formula(mu, n, p);
    out.require(empirical == formula, "M" + mu.to_string() + " empirical " + empirical.to_string() + " vs formula " + formula.to_string());
    out.require(fixed_tabloid_count(mu, n, p) == formula.count(1), "M" + mu.to_string() + " fixed tabloids");
    out.detail << "M" << mu.to_string() << " p=" << p << ": " << empirical.to_string() << "; ";
  }
}

void ac5(Outcome& out, ModuleStore& store, const AcceptanceOptions& options) {
  for (unsigned n : {3U, 4U, 5U}) {
    const Partition mu({static_cast<int>(2 * n - 2), 2});
    const auto t = random_generic(store.specht(mu, n, 2), options).type;
    out.require(t.count(1) == n - 2, "p=2 " + mu.to_string() + " n(1)=" + std::to_string(t.count(1)));
    out.detail << mu.to_string() << ": " << t.to_string() << "; ";
  }
  for (unsigned n : {2U, 3U}) {
    const Partition mu({static_cast<int>(3 * n - 3), 3});
    const auto st = stable_type(random_generic(store.specht(mu, n, 3), options).type);
    const std::size_t n1 = st.count(1);
    const std::size_t n2 = st.count(2);
    out.require(n1 + 2 >= n && n1 <= n + 1, "p=3 " + mu.to_string() + " n(1)=" + std::to_string(n1));
    // (a) (2,1^{n+1}), (b) (2,2,1^{n-1}), (c) (1^n), (d) (2,1^{n-2}).
    std::string which;
    if (n2 == 1 && n1 == n + 1) which = "a";
    if (n2 == 2 && n1 == n - 1) which = "b";
    if (n2 == 0 && n1 == n) which = "c";
    if (n2 == 1 && n1 == n - 2) which = "d";
    out.require(!which.empty(), "p=3 " + mu.to_string() + " stable type " + st.to_string() + " is none of the four cases");
    out.detail << mu.to_string() << ": stable " << st.to_string() << " case " << (which.empty() ? "?" : which) << "; ";
  }
}

void ac6(Outcome& out, ModuleStore& store, const AcceptanceOptions& options) {
  std::size_t checked = 0;
  std::size_t equal_types = 0;
  for (const auto& mu : partitions_of(9)) {
    if (mu.length() > 3 || !p_core_weight(mu, 3).core.empty()) continue;
    const Partition next = phi_step(mu, 3);
    if (next == mu) continue;
    const auto a = stable_type(random_generic(store.specht(mu, 3, 3), options).type);
    const auto b = stable_type(random_generic(store.specht(next, 3, 3), options).type);
    const bool ok = complementary_check(a, b, 3);
    if (!ok && a == b) ++equal_types;
    out.require(ok, mu.to_string() + " " + a.to_string() + " vs " + next.to_string() + " " + b.to_string());
    ++checked;
  }
  for (const char* start : {"(4,3,2)", "(5,2,2)", "(4,4,1)", "(6,2,1)", "(5,4)"}) {
    const auto chain = phi_chain(Partition::parse(start), 3);
    out.require(chain.size() >= 2, std::string(start) + " is already fixed by phi");
    out.detail << start;
    for (std::size_t i = 1; i < chain.size(); ++i) out.detail << "->" << chain[i].to_string();
    out.detail << "; ";
  }
  out.detail << checked << " pairs checked";
  if (equal_types > 0) out.detail << ", " << equal_types << " pairs had equal instead of complementary types";
}

void ac7(Outcome& out) {
  std::size_t parts = 0;
  for (int m = 1; m <= 9; ++m) {
    for (const auto& mu : partitions_of(m)) {
      out.require(dim_specht(mu) == syt_count(mu), "hook formula vs tableau count at " + mu.to_string());
      ++parts;
    }
  }
  out.require(partitions_of(9).size() == 30, "30 partitions of 9");
  for (const auto& mu : partitions_of(9)) {
    std::uint64_t sum = 0;
    for (const auto& nu : branching_set(mu)) sum += dim_specht(nu);
    out.require(sum == dim_specht(mu), "branching at " + mu.to_string());
  }
  for (unsigned p : {2U, 3U, 5U}) {
    std::vector<unsigned> row{1};
    for (unsigned n = 0; n <= 200; ++n) {
      for (unsigned m = 0; m <= n; ++m) {
        if (contained_p(m, n, p) != (row[m] != 0)) {
          out.require(false, "containment vs binomial at (" + std::to_string(m) + "," + std::to_string(n) + ") p=" + std::to_string(p));
        }
      }
      std::vector<unsigned> next(row.size() + 1, 0);
      for (std::size_t i = 0; i < row.size(); ++i) {
        next[i] = (next[i] + row[i]) % p;
        next[i + 1] = (next[i + 1] + row[i]) % p;
      }
      row = std::move(next);
    }
  }
  const auto c3 = verify_cor_psquare(3);
  const auto c5 = verify_cor_psquare(5);
  const auto mult = verify_cor_multiple_sweep(3, 12);
  out.require(c3.all_hold() && c3.cases.size() == 1, "psquare p=3");
  out.require(c5.all_hold() && c5.cases.size() == 7, "psquare p=5");
  out.require(mult.all_hold(), "multiple p=3, n<=12");
  std::size_t skipped = 0;
  for (const auto& c : mult.cases) skipped += c.skipped;
  out.detail << parts << " partitions, Lucas n<=200, corollary cases " << c3.cases.size() << "+" << c5.cases.size() << "+"
             << mult.cases.size() - skipped << " (" << skipped << " outside hypothesis)";
}

void ac8(Outcome& out, ModuleStore& store, const AcceptanceOptions& options) {
  struct Module {
    const RestrictedActions* acts;
    RankVector generic;
  };
  std::vector<Module> modules;
  auto add = [&](const RestrictedActions& acts) { modules.push_back({&acts, random_generic(acts, options).ranks}); };
  for (const auto& mu : partitions_of(9)) add(store.specht(mu, 3, 3));
  for (const auto& mu : partitions_of(6)) add(store.specht(mu, 3, 2));
  for (const auto& mu : partitions_of(8)) add(store.specht(mu, 4, 2));
  for (const char* mu : {"(9)", "(6,3)", "(3,3,3)"}) add(store.permutation(Partition::parse(mu), 3, 3));
  for (const char* mu : {"(4,2)", "(2,2,2)"}) add(store.permutation(Partition::parse(mu), 3, 2));

  std::mt19937_64 rng(options.seed ^ 0x5eedULL);
  auto random_point = [&](const ff::Field& field, unsigned n) {
    std::uniform_int_distribution<ff::Elem> draw(0, field.order() - 1);
    Point alpha(n, 0);
    while (std::all_of(alpha.begin(), alpha.end(), [](ff::Elem a) { return a == 0; })) {
      for (auto& a : alpha) a = draw(rng);
    }
    return alpha;
  };
  auto pick = [&]() -> const Module& { return modules[std::uniform_int_distribution<std::size_t>(0, modules.size() - 1)(rng)]; };

  std::size_t shape_failures = 0;
  for (std::size_t i = 0; i < 500; ++i) {
    const Module& m = modules[i % modules.size()];
    const ff::Field field(m.acts->p, 3);
    const auto rv = rank_vector_at(*m.acts, field, random_point(field, m.acts->n));
    bool dominated = true;
    for (std::size_t j = 0; j < rv.r.size(); ++j) dominated = dominated && rv.r[j] <= m.generic.r[j];
    if (!rv.is_valid() || !dominated) ++shape_failures;
  }
  out.require(shape_failures == 0, std::to_string(shape_failures) + " rank vectors not monotone, convex and dominated");

  std::size_t scale_failures = 0;
  std::size_t perm_failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Module& m = pick();
    const ff::Field field(m.acts->p, 3);
    const Point alpha = random_point(field, m.acts->n);
    const ff::Elem c = std::uniform_int_distribution<ff::Elem>(1, field.order() - 1)(rng);
    Point scaled = alpha;
    for (auto& a : scaled) a = field.mul(a, c);
    scale_failures += !(jordan_at_point(*m.acts, field, alpha) == jordan_at_point(*m.acts, field, scaled));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const Module& m = pick();
    const ff::Field field(m.acts->p, 3);
    const Point alpha = random_point(field, m.acts->n);
    Point permuted = alpha;
    std::shuffle(permuted.begin(), permuted.end(), rng);
    perm_failures += !(jordan_at_point(*m.acts, field, alpha) == jordan_at_point(*m.acts, field, permuted));
  }
  out.require(scale_failures == 0, std::to_string(scale_failures) + " scaling trials changed the type");
  out.require(perm_failures == 0, std::to_string(perm_failures) + " coordinate permutations changed the type");

  std::size_t exact_checked = 0;
  for (const auto& m : modules) {
    if (m.acts->dim > 32) continue;
    const RankVector exact = exact_generic_ranks(*m.acts);
    out.require(exact == m.generic, "exact vs random ranks for " + std::string(m.acts->permutation_module ? "M" : "S") + m.acts->mu.to_string());
    ++exact_checked;
  }

  std::size_t free_checked = 0;
  for (const auto& mu : partitions_of(9)) {
    if (p_core_weight(mu, 3).core.empty()) continue;
    const auto t = random_generic(store.specht(mu, 3, 3), options).type;
    out.require(t.count(1) == 0 && t.count(2) == 0, mu.to_string() + " not generically free: " + t.to_string());
    ++free_checked;
  }
  out.detail << modules.size() << " modules, 500 points, 100+100 invariance trials, " << exact_checked
             << " exact comparisons, " << free_checked << " generically free";
}

}  // namespace

std::vector<std::string> criterion_ids() { return {"AC1", "AC2", "AC3", "AC4", "AC5", "AC6", "AC7", "AC8"}; }

namespace {

const std::map<std::string, std::string>& titles() {
  static const std::map<std::string, std::string> t = {
      {"AC1", "table of varieties for p=3, |mu|=9"},
      {"AC2", "quartic identification"},
      {"AC3", "dimension of the (3,3,3) variety"},
      {"AC4", "permutation-module generic types"},
      {"AC5", "generic types of (np-p,p)"},
      {"AC6", "complementary stable types along phi"},
      {"AC7", "combinatorial oracles and corollary sweeps"},
      {"AC8", "property suites"},
  };
  return t;
}

CriterionResult run_one(const std::string& id, ModuleStore& store, const AcceptanceOptions& options) {
  CriterionResult result;
  result.id = id;
  result.title = titles().at(id);
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    if (id == "AC1") ac1(out, options);
    if (id == "AC2") ac2(out, store, options);
    if (id == "AC3") ac3(out, store, options);
    if (id == "AC4") ac4(out, store, options);
    if (id == "AC5") ac5(out, store, options);
    if (id == "AC6") ac6(out, store, options);
    if (id == "AC7") ac7(out);
    if (id == "AC8") ac8(out, store, options);
  } catch (const std::exception& e) {
    out.passed = false;
    out.detail << "error: " << e.what();
  }
  result.passed = out.passed;
  result.detail = out.detail.str();
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

CriterionResult run_criterion(const std::string& id, const AcceptanceOptions& options) {
  if (!titles().contains(id)) throw Error(ErrorCode::Usage, "unknown criterion " + id);
  ModuleStore store;
  return run_one(id, store, options);
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  ModuleStore store;
  std::vector<CriterionResult> out;
  for (const auto& id : criterion_ids()) out.push_back(run_one(id, store, options));
  return out;
}

}  // namespace spechtvar

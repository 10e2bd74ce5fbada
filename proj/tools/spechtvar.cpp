// Command-line front end: JSON reports for structured results, TSV for tables.
#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "spechtvar/acceptance.hpp"
#include "spechtvar/error.hpp"
#include "spechtvar/jordan.hpp"
#include "spechtvar/parallel.hpp"
#include "spechtvar/partitions.hpp"
#include "spechtvar/phimap.hpp"
#include "spechtvar/spechtmod.hpp"
#include "spechtvar/table9.hpp"
#include "spechtvar/variety.hpp"
#include "spechtvar/version.hpp"
#include "spechtvar/youngdec.hpp"

using nlohmann::ordered_json;
using namespace spechtvar;

namespace {

struct RunConfig {
  unsigned p = 3;
  unsigned ext_degree = 3;
  unsigned samples = 5;
  std::uint64_t seed = 0;
  std::string mode = "random";
  unsigned threads = 1;
  std::string cache_dir;
};

ordered_json config_json(const RunConfig& c) {
  ordered_json j;
  j["version"] = std::string(kVersion);
  j["p"] = c.p;
  j["ext_degree"] = c.ext_degree;
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  j["mode"] = c.mode;
  j["threads"] = c.threads;
  j["cache_dir"] = c.cache_dir.empty() ? ordered_json(nullptr) : ordered_json(c.cache_dir);
  return j;
}

ordered_json parts_json(const Partition& mu) {
  ordered_json j = ordered_json::array();
  for (int part : mu.parts()) j.push_back(part);
  return j;
}

ordered_json type_json(const JordanType& t) {
  ordered_json blocks = ordered_json::object();
  for (unsigned s = t.p(); s >= 1; --s) {
    if (t.count(s) > 0) blocks[std::to_string(s)] = t.count(s);
  }
  return {{"text", t.to_string()}, {"blocks", blocks}, {"dim", t.dim()}};
}

void require_prime(unsigned p) {
  if (!ff::is_prime(p)) throw Error(ErrorCode::Usage, std::to_string(p) + " is not a prime");
}

// Module construction is supported for these primes only.
void require_module_prime(unsigned p) {
  if (p != 2 && p != 3 && p != 5) throw Error(ErrorCode::Usage, "module commands accept p in {2,3,5}");
}

unsigned rank_of(const Partition& mu, unsigned p) {
  if (mu.size() % static_cast<int>(p) != 0) {
    throw Error(ErrorCode::PreconditionViolated, mu.to_string() + " is not a partition of a multiple of p");
  }
  return static_cast<unsigned>(mu.size()) / p;
}

std::optional<std::filesystem::path> cache_dir(const RunConfig& c) {
  if (!c.cache_dir.empty()) return std::filesystem::path(c.cache_dir);
  return cache_dir_from_env();
}

RestrictedActions build_module(const Partition& mu, const RunConfig& c, bool permutation) {
  require_module_prime(c.p);
  const unsigned n = rank_of(mu, c.p);
  return permutation ? cached_perm_module_actions(mu, n, c.p, cache_dir(c))
                     : cached_restricted_actions(mu, n, c.p, true, cache_dir(c));
}

ordered_json core_json(const CoreData& core) {
  return {{"core", core.core.to_string()}, {"weight", core.weight}};
}

ordered_json prediction_json(const Prediction& pr) {
  ordered_json j;
  j["hypothesis"] = std::string(to_string(pr.hypothesis));
  j["classified_on"] = pr.classified_on ? ordered_json(pr.classified_on->to_string()) : ordered_json(nullptr);
  j["variety"] = std::string(to_string(pr.variety));
  j["complexity"] = pr.complexity ? ordered_json(*pr.complexity) : ordered_json("unknown");
  if (pr.defect_condition) j["defect_condition"] = *pr.defect_condition;
  return j;
}

int cmd_info(const std::string& mu_text, const RunConfig& c) {
  require_prime(c.p);
  const Partition mu = Partition::parse(mu_text);
  const CoreData core = p_core_weight(mu, c.p);
  ordered_json j;
  j["config"] = config_json(c);
  j["mu"] = mu.to_string();
  j["parts"] = parts_json(mu);
  j["size"] = mu.size();
  j["conjugate"] = conjugate(mu).to_string();
  j["core"] = core.core.to_string();
  j["weight"] = core.weight;
  j["dim"] = dim_specht(mu);
  j["tabloids"] = tabloid_count(mu);
  j["beta_numbers"] = beta_numbers(mu);
  j["pxp_blocks"] = is_pxp_blocks(mu, c.p);
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_phi(const std::string& mu_text, const RunConfig& c) {
  require_prime(c.p);
  const Partition mu = Partition::parse(mu_text);
  const auto chain = phi_chain(mu, c.p);
  ordered_json j;
  j["config"] = config_json(c);
  j["mu"] = mu.to_string();
  j.update(core_json(p_core_weight(mu, c.p)));
  ordered_json steps = ordered_json::array();
  for (const auto& nu : chain) steps.push_back(nu.to_string());
  j["phi_chain"] = steps;
  j["Phi"] = chain.back().to_string();
  j["hypothesis"] = std::string(to_string(classify_hypothesis(mu, c.p, rank_of(mu, c.p))));
  j["prediction"] = prediction_json(predict(mu, c.p));
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_predict(const std::string& mu_text, const RunConfig& c) {
  require_prime(c.p);
  const Partition mu = Partition::parse(mu_text);
  ordered_json j;
  j["config"] = config_json(c);
  j["mu"] = mu.to_string();
  j.update(core_json(p_core_weight(mu, c.p)));
  j["prediction"] = prediction_json(predict(mu, c.p));
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_jordan(const std::string& mu_text, bool permutation, const std::vector<unsigned>& alpha, const RunConfig& c) {
  const Partition mu = Partition::parse(mu_text);
  const RestrictedActions acts = build_module(mu, c, permutation);
  ordered_json j;
  j["config"] = config_json(c);
  j["module"] = (permutation ? "M" : "S") + mu.to_string();
  j["built_from"] = acts.built_from.to_string();
  j["n"] = acts.n;
  j["dim"] = acts.dim;
  if (!alpha.empty()) {
    const ff::Field field(c.p, c.ext_degree);
    Point point;
    for (unsigned a : alpha) {
      if (a >= field.order()) throw Error(ErrorCode::Usage, "coordinate " + std::to_string(a) + " is not an element of the field");
      point.push_back(a);
    }
    const RankVector rv = rank_vector_at(acts, field, point);
    j["alpha"] = alpha;
    j["ranks"] = rv.r;
    j["type"] = type_json(JordanType::from_ranks(rv));
    j["free"] = is_free_at(acts, field, point).free;
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  GenericOptions g;
  g.mode = c.mode == "exact" ? GenericMode::Exact : GenericMode::Random;
  g.seed = c.seed;
  g.samples = c.samples;
  g.threads = c.threads;
  const GenericTypeReport report = generic_type(acts, g);
  j["mode"] = std::string(to_string(report.mode));
  j["samples"] = report.samples;
  j["field"] = {{"p", report.field_p}, {"k", report.field_k}};
  j["certified_by_single_sample"] = report.certified_by_single_sample;
  j["ranks"] = report.ranks.r;
  j["type"] = type_json(report.type);
  j["stable_type"] = type_json(stable_type(report.type));
  std::cout << j.dump(2) << '\n';
  return 0;
}

std::vector<std::string> point_strings(const ff::Field& field, const Point& point) {
  std::vector<std::string> out;
  for (auto a : point) out.push_back(field.to_string(a));
  return out;
}

int cmd_variety(const std::string& mu_text, const std::string& format, const RunConfig& c) {
  const Partition mu = Partition::parse(mu_text);
  const RestrictedActions acts = build_module(mu, c, false);
  const ff::Field field(c.p, c.ext_degree);
  if (format == "tsv") {
    std::ostringstream os;
    for (unsigned i = 1; i <= acts.n; ++i) os << 'x' << i << '\t';
    os << "free";
    for (unsigned j = 0; j <= acts.p; ++j) os << "\tr" << j;
    os << '\n';
    for (const auto& rec : sweep_points(acts, c.ext_degree, c.threads)) {
      for (const auto& s : point_strings(field, rec.point)) os << s << '\t';
      os << (rec.free ? 1 : 0);
      for (auto r : rec.ranks.r) os << '\t' << r;
      os << '\n';
    }
    std::cout << os.str();
    return 0;
  }
  const LocusSample sample = enumerate_locus(acts, c.ext_degree, c.threads);
  const VarietyClass cls = classify(sample);
  ordered_json j;
  j["config"] = config_json(c);
  j["mu"] = mu.to_string();
  j["built_from"] = acts.built_from.to_string();
  j["n"] = acts.n;
  j["dim"] = acts.dim;
  j["field"] = {{"p", c.p}, {"k", c.ext_degree}, {"modulus", field.modulus()}};
  j["total_projective_points"] = sample.total_projective;
  j["locus_size"] = sample.points.size();
  ordered_json pts = ordered_json::array();
  for (const auto& pt : sample.points) pts.push_back(point_strings(field, pt));
  j["locus"] = pts;
  j["class"] = std::string(to_string(cls.kind));
  j["form"] = cls.form ? ordered_json(cls.form->to_string()) : ordered_json(nullptr);
  j["est_dim"] = cls.est_dim;
  if (cls.form) {
    const TemplateResult t = template_check(*cls.form, c.p);
    j["template"] = {{"matches", t.matches}, {"n", t.n}, {"degree_divisible", t.degree_divisible},
                     {"ftilde", t.ftilde ? ordered_json(t.ftilde->to_string()) : ordered_json(nullptr)}};
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_table9(const RunConfig& c) {
  const auto rows = compute_table9(c.threads);
  std::cout << table9_tsv(rows);
  for (const auto& row : rows) {
    if (!row.agrees) return 1;
  }
  return 0;
}

ordered_json summands_json(const SummandSet& s) {
  return {{"r", s.r}, {"m", s.m}, {"p", s.p}, {"s_values", s.s_values}};
}

int cmd_young(unsigned r, unsigned m, const RunConfig& c) {
  require_prime(c.p);
  ordered_json j;
  j["config"] = config_json(c);
  j["summands"] = summands_json(young_summands(r, m, c.p));
  std::cout << j.dump(2) << '\n';
  return 0;
}

ordered_json corollary_json(const CorollaryReport& report) {
  ordered_json cases = ordered_json::array();
  for (const auto& cs : report.cases) {
    ordered_json j = {{"r", cs.r}, {"m_small", cs.m_small}, {"m_large", cs.m_large},
                      {"small", cs.small.s_values}, {"large", cs.large.s_values},
                      {"skipped", cs.skipped}, {"holds", cs.holds}};
    if (cs.n > 0) j["n"] = cs.n;
    if (!cs.note.empty()) j["note"] = cs.note;
    cases.push_back(j);
  }
  ordered_json factors = ordered_json::array();
  for (const auto& f : report.filtration_factors) factors.push_back(f.to_string());
  return {{"name", report.name}, {"p", report.p}, {"all_hold", report.all_hold()}, {"filtration_factors", factors}, {"cases", cases}};
}

int cmd_verify(const std::vector<std::string>& only, const RunConfig& c) {
  AcceptanceOptions options;
  options.threads = c.threads;
  options.seed = c.seed;
  ordered_json j;
  j["config"] = config_json(c);
  ordered_json cor = ordered_json::array();
  cor.push_back(corollary_json(verify_cor_psquare(3)));
  cor.push_back(corollary_json(verify_cor_psquare(5)));
  cor.push_back(corollary_json(verify_cor_multiple_sweep(3, 12)));
  j["corollaries"] = cor;
  bool all = true;
  ordered_json results = ordered_json::array();
  const auto ids = only.empty() ? criterion_ids() : only;
  for (const auto& id : ids) {
    const CriterionResult r = run_criterion(id, options);
    all = all && r.passed;
    results.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
  }
  for (const auto& cr : cor) all = all && cr["all_hold"].get<bool>();
  j["acceptance"] = results;
  j["all_passed"] = all;
  std::cout << j.dump(2) << '\n';
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Specht modules restricted to elementary abelian subgroups: Jordan types and rank varieties"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig config;
  config.threads = 1;
  app.add_option("--seed", config.seed, "Random seed")->capture_default_str();
  app.add_option("--threads", config.threads, "Worker threads for point sweeps")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--cache-dir", config.cache_dir, "Cache directory for restricted actions (default: $SPECHTVAR_CACHE)");

  std::string mu;
  auto add_mu = [&](CLI::App* sub) { sub->add_option("--mu", mu, "Partition, e.g. \"(3,3,2)\"")->required(); };
  auto add_p = [&](CLI::App* sub) { sub->add_option("--p", config.p, "Prime")->capture_default_str(); };

  auto* info = app.add_subcommand("info", "Partition data: conjugate, core, weight, dimension");
  add_mu(info);
  add_p(info);

  auto* phi = app.add_subcommand("phi", "phi chain, its limit and the hypothesis class");
  add_mu(phi);
  add_p(phi);

  auto* pred = app.add_subcommand("predict", "Predicted variety and complexity");
  add_mu(pred);
  add_p(pred);

  bool permutation = false;
  std::vector<unsigned> alpha;
  auto* jordan = app.add_subcommand("jordan", "Generic Jordan type, or the type at one point with --alpha");
  add_mu(jordan);
  add_p(jordan);
  jordan->add_option("--mode", config.mode, "random or exact")->check(CLI::IsMember({"random", "exact"}))->capture_default_str();
  jordan->add_option("--samples", config.samples, "Random samples")->check(CLI::PositiveNumber)->capture_default_str();
  jordan->add_flag("--perm", permutation, "Use the permutation module M^mu");
  jordan->add_option("--alpha", alpha, "Point as packed field elements over GF(p^ext)")->delimiter(',');
  jordan->add_option("--ext", config.ext_degree, "Extension degree for --alpha")->check(CLI::PositiveNumber)->capture_default_str();

  std::string format = "json";
  auto* variety = app.add_subcommand("variety", "Non-free locus over GF(p^ext) and its class");
  add_mu(variety);
  add_p(variety);
  variety->add_option("--ext", config.ext_degree, "Extension degree")->check(CLI::PositiveNumber)->capture_default_str();
  variety->add_option("--out", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}))->capture_default_str();

  auto* table9 = app.add_subcommand("table9", "Varieties of all S^mu, mu of 9, at p = 3 (TSV)");

  unsigned r = 0;
  unsigned m = 0;
  auto* young = app.add_subcommand("young", "Two-part Young summands of M^(r-m,m)");
  young->add_option("--r", r, "Degree")->required();
  young->add_option("--m", m, "Second part")->required();
  add_p(young);

  std::vector<std::string> only;
  auto* verify = app.add_subcommand("verify", "Corollary sweeps and the acceptance suite");
  verify->add_option("--only", only, "Criterion ids, e.g. AC2,AC3")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*info) return cmd_info(mu, config);
    if (*phi) return cmd_phi(mu, config);
    if (*pred) return cmd_predict(mu, config);
    if (*jordan) return cmd_jordan(mu, permutation, alpha, config);
    if (*variety) return cmd_variety(mu, format, config);
    if (*table9) {
      config.ext_degree = 3;
      return cmd_table9(config);
    }
    if (*young) return cmd_young(r, m, config);
    if (*verify) return cmd_verify(only, config);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::Usage ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

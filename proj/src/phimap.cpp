#include "spechtvar/phimap.hpp"

#include <string>

#include "spechtvar/error.hpp"

namespace spechtvar {

namespace {

int mod(int a, int p) {
  const int r = a % p;
  return r < 0 ? r + p : r;
}

void require_domain(const Partition& mu, unsigned p) {
  if (mu.length() > p) {
    throw Error(ErrorCode::PreconditionViolated, mu.to_string() + " has more than p parts");
  }
  if (!p_core_weight(mu, p).core.empty()) {
    throw Error(ErrorCode::PreconditionViolated, mu.to_string() + " has non-empty p-core");
  }
}

int p_adic_valuation(std::uint64_t v, unsigned p) {
  int e = 0;
  while (v > 0 && v % p == 0) {
    v /= p;
    ++e;
  }
  return e;
}

}  // namespace

std::optional<PhiStepData> find_ab(const Partition& mu, unsigned p) {
  require_domain(mu, p);
  const int ip = static_cast<int>(p);
  const int s = static_cast<int>(mu.length());
  int b = 0;
  for (int i = s; i >= 1; --i) {
    if (mod(mu.part(static_cast<std::size_t>(i - 1)), ip) != 0) {
      b = i;
      break;
    }
  }
  if (b == 0) return std::nullopt;

  const int target = mod(mu.part(static_cast<std::size_t>(b - 1)) - 1 - b, ip);
  int a = 0;
  int matches = 0;
  for (int i = 1; i < b; ++i) {
    if (mod(mu.part(static_cast<std::size_t>(i - 1)) - i, ip) == target) {
      a = i;
      ++matches;
    }
  }
  if (matches != 1) {
    throw Error(ErrorCode::NonUniqueA, mu.to_string() + ": expected exactly one row a, found " + std::to_string(matches));
  }

  std::vector<int> eta(mu.parts().begin(), mu.parts().end());
  --eta[static_cast<std::size_t>(b - 1)];
  PhiStepData data;
  data.a = a;
  data.b = b;
  data.eta = Partition(eta);
  ++eta[static_cast<std::size_t>(a - 1)];
  data.result = Partition(eta);
  return data;
}

Partition phi_step(const Partition& mu, unsigned p) {
  const auto data = find_ab(mu, p);
  if (!data) return mu;
  if (!p_core_weight(data->result, p).core.empty()) {
    throw Error(ErrorCode::InvariantViolated, "phi(" + mu.to_string() + ") has non-empty p-core");
  }
  return data->result;
}

std::vector<Partition> phi_chain(const Partition& mu, unsigned p) {
  std::vector<Partition> chain{mu};
  const std::size_t limit = static_cast<std::size_t>(mu.size()) * p;
  for (std::size_t step = 0; step <= limit; ++step) {
    Partition next = phi_step(chain.back(), p);
    if (next == chain.back()) return chain;
    chain.push_back(std::move(next));
  }
  throw Error(ErrorCode::NonTermination, "phi iteration on " + mu.to_string() + " did not stabilise");
}

Partition phi_limit(const Partition& mu, unsigned p) { return phi_chain(mu, p).back(); }

std::string_view to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::H1: return "H1";
    case Hypothesis::H2: return "H2";
    case Hypothesis::H3: return "H3";
    case Hypothesis::H4: return "H4";
    case Hypothesis::None: return "none";
  }
  return "none";
}

std::string_view to_string(VarietyPrediction v) {
  switch (v) {
    case VarietyPrediction::FullRankN: return "full-rank-n";
    case VarietyPrediction::DefectDim: return "defect-dim-w";
    case VarietyPrediction::Unknown: return "unknown";
  }
  return "unknown";
}

Hypothesis classify_hypothesis(const Partition& mu, unsigned p, unsigned n) {
  if (mu.size() != static_cast<int>(n * p)) {
    throw Error(ErrorCode::PreconditionViolated, mu.to_string() + " is not a partition of n*p");
  }
  require_domain(mu, p);
  const Partition phi = phi_limit(mu, p);
  const int ip = static_cast<int>(p);
  const int np = static_cast<int>(n * p);
  const bool two_part = phi.length() == 2;

  auto is_pair = [&](int first, int second) {
    return two_part && phi.part(0) == first && phi.part(1) == second;
  };

  if (phi == Partition{np}) return Hypothesis::H3;
  if (p % 2 == 1) {
    for (int eps : {1, 2}) {
      if (is_pair(np - eps * ip, eps * ip) && n % p != 2) return Hypothesis::H2;
    }
    if (n == p) {
      for (int m = 1; 2 * m < ip; ++m) {
        if (is_pair(ip * ip - m * ip, m * ip)) return Hypothesis::H1;
      }
    }
  }
  if (p == 2) {
    const int n2 = 2 * static_cast<int>(n);
    if (is_pair(n2 - 2, 2) && n2 - 2 != 2) return Hypothesis::H4;
    if (is_pair(n2 - 4, 4) && n2 - 4 != 4) return Hypothesis::H4;
  }
  return Hypothesis::None;
}

Prediction predict(const Partition& mu, unsigned p) {
  Prediction out;
  out.mu = mu;
  out.core = p_core_weight(mu, p);
  const int w = out.core.weight;

  if (w < static_cast<int>(p)) {
    // Abelian defect: D is a Sylow p-subgroup of S_{wp}, of order p^w.
    std::uint64_t fact_val = 0;
    for (int v = 2; v <= mu.size(); ++v) fact_val += static_cast<std::uint64_t>(p_adic_valuation(static_cast<std::uint64_t>(v), p));
    const int dim_val = p_adic_valuation(dim_specht(mu), p);
    out.defect_condition = (w + dim_val == static_cast<int>(fact_val));
    out.complexity = w;
    out.variety = *out.defect_condition ? VarietyPrediction::DefectDim : VarietyPrediction::Unknown;
    return out;
  }

  if (mu.size() % static_cast<int>(p) != 0 || !out.core.core.empty()) return out;
  const auto n = static_cast<unsigned>(mu.size()) / p;
  std::optional<Partition> candidate;
  if (mu.length() <= p) {
    candidate = mu;
  } else if (conjugate(mu).length() <= p) {
    candidate = conjugate(mu);
  }
  if (!candidate) return out;
  out.classified_on = candidate;
  out.hypothesis = classify_hypothesis(*candidate, p, n);
  if (out.hypothesis != Hypothesis::None) {
    out.variety = VarietyPrediction::FullRankN;
    out.complexity = static_cast<int>(n);
  }
  return out;
}

}  // namespace spechtvar

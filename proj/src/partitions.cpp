#include "spechtvar/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "spechtvar/error.hpp"

namespace spechtvar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw Error(ErrorCode::PreconditionViolated, "not a partition: parts must be positive and weakly decreasing");
    }
  }
}

Partition Partition::parse(std::string_view text) {
  std::string body;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) body.push_back(c);
  }
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw Error(ErrorCode::Usage, "unbalanced parentheses in partition '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> parts;
  if (!body.empty()) {
    std::size_t start = 0;
    while (start <= body.size()) {
      const std::size_t comma = body.find(',', start);
      const std::string token = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw Error(ErrorCode::Usage, "malformed partition '" + std::string(text) + "'");
      }
      if (token.size() > 6) throw Error(ErrorCode::Usage, "part too large in '" + std::string(text) + "'");
      parts.push_back(std::stoi(token));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  if (std::find(parts.begin(), parts.end(), 0) != parts.end()) {
    throw Error(ErrorCode::Usage, "partition parts must be positive: '" + std::string(text) + "'");
  }
  try {
    return Partition(std::move(parts));
  } catch (const Error&) {
    throw Error(ErrorCode::Usage, "parts must be weakly decreasing: '" + std::string(text) + "'");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

Partition conjugate(const Partition& mu) {
  std::vector<int> out;
  const int cols = mu.empty() ? 0 : mu.part(0);
  for (int j = 0; j < cols; ++j) {
    int len = 0;
    for (int part : mu.parts()) {
      if (part > j) ++len;
    }
    out.push_back(len);
  }
  return Partition(std::move(out));
}

std::map<std::pair<int, int>, int> hook_lengths(const Partition& mu) {
  const Partition conj = conjugate(mu);
  std::map<std::pair<int, int>, int> hooks;
  for (std::size_t i = 0; i < mu.length(); ++i) {
    for (int j = 0; j < mu.part(i); ++j) {
      const int arm = mu.part(i) - j - 1;
      const int leg = conj.part(static_cast<std::size_t>(j)) - static_cast<int>(i) - 1;
      hooks[{static_cast<int>(i) + 1, j + 1}] = arm + leg + 1;
    }
  }
  return hooks;
}

namespace {

// Exponent vector of n! (index = prime) minus the product of the given factors.
std::uint64_t ratio_of_factorials(int n, const std::vector<int>& denominators) {
  std::vector<int> exponent(static_cast<std::size_t>(n) + 1, 0);
  auto add_factorised = [&](int v, int sign) {
    for (int d = 2; v > 1; ++d) {
      while (v % d == 0) {
        exponent[static_cast<std::size_t>(d)] += sign;
        v /= d;
      }
    }
  };
  for (int v = 2; v <= n; ++v) add_factorised(v, 1);
  for (int v : denominators) add_factorised(v, -1);
  std::uint64_t result = 1;
  for (std::size_t d = 2; d < exponent.size(); ++d) {
    if (exponent[d] < 0) throw Error(ErrorCode::InvariantViolated, "non-integral factorial ratio");
    for (int e = 0; e < exponent[d]; ++e) {
      if (result > UINT64_MAX / d) throw Error(ErrorCode::TooLarge, "integer overflow");
      result *= d;
    }
  }
  return result;
}

}  // namespace

std::uint64_t dim_specht(const Partition& mu) {
  if (mu.size() > 30) throw Error(ErrorCode::TooLarge, "dim_specht supports |mu| <= 30");
  std::vector<int> hooks;
  for (const auto& [node, h] : hook_lengths(mu)) hooks.push_back(h);
  return ratio_of_factorials(mu.size(), hooks);
}

std::uint64_t tabloid_count(const Partition& mu) {
  if (mu.size() > 30) throw Error(ErrorCode::TooLarge, "tabloid_count supports |mu| <= 30");
  std::vector<int> denominators;
  for (int part : mu.parts()) {
    for (int v = 2; v <= part; ++v) denominators.push_back(v);
  }
  return ratio_of_factorials(mu.size(), denominators);
}

std::uint64_t syt_count(const Partition& mu) {
  if (mu.size() > 16) throw Error(ErrorCode::TooLarge, "syt_count supports |mu| <= 16");
  std::vector<int> filled(mu.length(), 0);
  const int total = mu.size();
  std::function<std::uint64_t(int)> place = [&](int placed) -> std::uint64_t {
    if (placed == total) return 1;
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < filled.size(); ++i) {
      if (filled[i] == mu.part(i)) continue;
      if (i > 0 && filled[i - 1] <= filled[i]) continue;
      ++filled[i];
      count += place(placed + 1);
      --filled[i];
    }
    return count;
  };
  return place(0);
}

std::vector<int> beta_numbers(const Partition& mu) {
  const int s = static_cast<int>(mu.length());
  std::vector<int> beads;
  for (int i = 0; i < s; ++i) beads.push_back(mu.part(static_cast<std::size_t>(i)) + (s - 1 - i));
  return beads;
}

Partition from_beta_numbers(std::vector<int> beads) {
  std::sort(beads.rbegin(), beads.rend());
  const int s = static_cast<int>(beads.size());
  std::vector<int> parts;
  for (int i = 0; i < s; ++i) {
    const int part = beads[static_cast<std::size_t>(i)] - (s - 1 - i);
    if (part < 0) throw Error(ErrorCode::PreconditionViolated, "bead positions must be distinct and non-negative");
    parts.push_back(part);
  }
  return Partition(std::move(parts));
}

CoreData p_core_weight(const Partition& mu, unsigned p) {
  const auto beads = beta_numbers(mu);
  std::vector<std::vector<int>> runners(p);
  for (int b : beads) runners[static_cast<std::size_t>(b) % p].push_back(b);
  std::vector<int> settled;
  int weight = 0;
  for (unsigned r = 0; r < p; ++r) {
    auto& runner = runners[r];
    std::sort(runner.begin(), runner.end());
    for (std::size_t level = 0; level < runner.size(); ++level) {
      const int target = static_cast<int>(r + level * p);
      weight += (runner[level] - target) / static_cast<int>(p);
      settled.push_back(target);
    }
  }
  return {from_beta_numbers(std::move(settled)), weight};
}

bool contained_p(std::uint64_t m, std::uint64_t n, unsigned p) {
  if (m > n) return false;
  while (m > 0 || n > 0) {
    if (m % p > n % p) return false;
    m /= p;
    n /= p;
  }
  return true;
}

std::vector<Partition> branching_set(const Partition& mu) {
  std::vector<Partition> out;
  for (std::size_t i = 0; i < mu.length(); ++i) {
    if (mu.part(i) > mu.part(i + 1)) {
      std::vector<int> parts(mu.parts().begin(), mu.parts().end());
      --parts[i];
      out.emplace_back(std::move(parts));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_pxp_blocks(const Partition& mu, unsigned p) {
  const auto parts = mu.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (parts[i] % static_cast<int>(p) != 0 || (j - i) % p != 0) return false;
    i = j;
  }
  return true;
}

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> build = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      build(remaining - part, part);
      current.pop_back();
    }
  };
  build(m, m);
  return out;
}

}  // namespace spechtvar

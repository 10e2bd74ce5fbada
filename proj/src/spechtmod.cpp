#include "spechtvar/spechtmod.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "spechtvar/error.hpp"
#include "spechtvar/hash.hpp"
#include "spechtvar/version.hpp"

namespace spechtvar {

Permutation identity_permutation(int m) {
  Permutation sigma(static_cast<std::size_t>(m));
  std::iota(sigma.begin(), sigma.end(), 1);
  return sigma;
}

Permutation cycle_permutation(int m, const std::vector<int>& cycle) {
  Permutation sigma = identity_permutation(m);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const int from = cycle[i];
    const int to = cycle[(i + 1) % cycle.size()];
    if (from < 1 || from > m) throw Error(ErrorCode::PreconditionViolated, "cycle letter out of range");
    sigma[static_cast<std::size_t>(from - 1)] = to;
  }
  return sigma;
}

Permutation inverse(const Permutation& sigma) {
  Permutation inv(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) inv[static_cast<std::size_t>(sigma[i] - 1)] = static_cast<int>(i) + 1;
  return inv;
}

Permutation block_cycle(int m, unsigned p, unsigned i) {
  std::vector<int> letters;
  for (unsigned j = 1; j <= p; ++j) letters.push_back(static_cast<int>((i - 1) * p + j));
  return cycle_permutation(m, letters);
}

TabloidSpace::TabloidSpace(const Partition& mu) : mu_(mu), letters_(mu.size()) {
  if (letters_ > 16) throw Error(ErrorCode::TooLarge, "tabloids supported for |mu| <= 16");
  if (tabloid_count(mu) > kMaxTabloids) throw Error(ErrorCode::TooLarge, "more than 10^6 tabloids for " + mu.to_string());
  codes_.reserve(tabloid_count(mu));

  std::vector<std::uint8_t> row_of(static_cast<std::size_t>(letters_), 0);
  std::vector<bool> used(static_cast<std::size_t>(letters_), false);
  // Row r takes each size-mu_r subset of the unused letters in lex order.
  std::function<void(std::size_t)> fill_row;
  std::function<void(std::size_t, int, int)> choose = [&](std::size_t row, int start, int left) {
    if (left == 0) {
      fill_row(row + 1);
      return;
    }
    for (int letter = start; letter < letters_; ++letter) {
      if (used[static_cast<std::size_t>(letter)]) continue;
      used[static_cast<std::size_t>(letter)] = true;
      row_of[static_cast<std::size_t>(letter)] = static_cast<std::uint8_t>(row);
      choose(row, letter + 1, left - 1);
      used[static_cast<std::size_t>(letter)] = false;
    }
  };
  fill_row = [&](std::size_t row) {
    if (row == mu_.length()) {
      codes_.push_back(encode(row_of));
      return;
    }
    choose(row, 0, mu_.part(row));
  };
  fill_row(0);

  index_.reserve(codes_.size());
  for (std::size_t i = 0; i < codes_.size(); ++i) index_.emplace(codes_[i], static_cast<std::uint32_t>(i));
}

std::uint64_t TabloidSpace::encode(const std::vector<std::uint8_t>& row_of) const {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < row_of.size(); ++i) code |= std::uint64_t{row_of[i]} << (4 * i);
  return code;
}

Tabloid TabloidSpace::tabloid(std::size_t index) const {
  Tabloid t;
  t.rows.resize(mu_.length());
  const std::uint64_t code = codes_.at(index);
  for (int i = 0; i < letters_; ++i) t.rows[(code >> (4 * i)) & 0xf].push_back(i + 1);
  return t;
}

std::size_t TabloidSpace::index_of(const std::vector<std::uint8_t>& row_of) const {
  const auto it = index_.find(encode(row_of));
  if (it == index_.end()) throw Error(ErrorCode::InvariantViolated, "row assignment is not a tabloid of this shape");
  return it->second;
}

std::size_t TabloidSpace::act(const Permutation& sigma, std::size_t index) const {
  const std::uint64_t code = codes_[index];
  std::uint64_t image = 0;
  for (int i = 0; i < letters_; ++i) {
    const std::uint64_t row = (code >> (4 * i)) & 0xf;
    image |= row << (4 * (sigma[static_cast<std::size_t>(i)] - 1));
  }
  return index_.at(image);
}

std::vector<Tabloid> enumerate_tabloids(const Partition& mu) {
  const TabloidSpace space(mu);
  std::vector<Tabloid> out;
  out.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) out.push_back(space.tabloid(i));
  return out;
}

ff::SparseMatrix perm_action_sparse(const Permutation& sigma, const Partition& mu) {
  if (static_cast<int>(sigma.size()) != mu.size()) throw Error(ErrorCode::ArityMismatch, "permutation degree differs from |mu|");
  const TabloidSpace space(mu);
  ff::SparseMatrix m(space.size(), space.size());
  std::vector<std::vector<ff::SparseMatrix::Entry>> rows(space.size());
  for (std::size_t t = 0; t < space.size(); ++t) rows[space.act(sigma, t)].push_back({static_cast<std::uint32_t>(t), 1});
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, std::move(rows[r]));
  return m;
}

std::vector<std::vector<std::vector<int>>> standard_tableaux(const Partition& mu) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> rows(mu.length());
  const int total = mu.size();
  std::function<void(int)> place = [&](int next) {
    if (next > total) {
      out.push_back(rows);
      return;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(rows[i].size()) == mu.part(i)) continue;
      if (i > 0 && rows[i - 1].size() <= rows[i].size()) continue;
      rows[i].push_back(next);
      place(next + 1);
      rows[i].pop_back();
    }
  };
  place(1);
  auto reading_word = [](const std::vector<std::vector<int>>& t) {
    std::vector<int> w;
    for (const auto& r : t) w.insert(w.end(), r.begin(), r.end());
    return w;
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return reading_word(a) < reading_word(b); });
  return out;
}

namespace {

struct SignedPermutation {
  std::vector<int> perm;
  bool odd;
};

std::vector<SignedPermutation> signed_permutations(int length) {
  std::vector<SignedPermutation> out;
  std::vector<int> perm(static_cast<std::size_t>(length));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < length; ++i) {
      for (int j = i + 1; j < length; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    }
    out.push_back({perm, inversions % 2 == 1});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

SpechtBasis build_basis(const TabloidSpace& space, unsigned p) {
  const Partition& mu = space.shape();
  const Partition columns = conjugate(mu);
  std::uint64_t terms = 1;
  std::vector<std::vector<SignedPermutation>> column_perms;
  for (int len : columns.parts()) {
    for (int v = 2; v <= len; ++v) terms *= static_cast<std::uint64_t>(v);
    if (terms > 10'000'000) throw Error(ErrorCode::TooLarge, "column stabiliser of " + mu.to_string() + " exceeds 10^7");
    column_perms.push_back(signed_permutations(len));
  }

  const ff::Field field(p);
  SpechtBasis out;
  out.mu = mu;
  out.p = p;
  out.tabloid_count = space.size();
  out.tableaux = standard_tableaux(mu);
  out.dim = out.tableaux.size();

  std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, ff::Elem>> triplets;
  std::vector<std::uint8_t> row_of(static_cast<std::size_t>(mu.size()));
  for (std::size_t col = 0; col < out.tableaux.size(); ++col) {
    const auto& t = out.tableaux[col];
    for (std::size_t r = 0; r < t.size(); ++r) {
      for (int letter : t[r]) row_of[static_cast<std::size_t>(letter - 1)] = static_cast<std::uint8_t>(r);
    }
    out.leading_rows.push_back(static_cast<std::uint32_t>(space.index_of(row_of)));

    // Mixed-radix walk over one permutation per column.
    std::vector<std::size_t> choice(column_perms.size(), 0);
    while (true) {
      bool odd = false;
      for (std::size_t j = 0; j < column_perms.size(); ++j) {
        const auto& sp = column_perms[j][choice[j]];
        odd ^= sp.odd;
        for (std::size_t r = 0; r < sp.perm.size(); ++r) {
          const int letter = t[static_cast<std::size_t>(sp.perm[r])][j];
          row_of[static_cast<std::size_t>(letter - 1)] = static_cast<std::uint8_t>(r);
        }
      }
      triplets.push_back({{static_cast<std::uint32_t>(space.index_of(row_of)), static_cast<std::uint32_t>(col)},
                          odd ? field.neg(1) : ff::Elem{1}});
      std::size_t j = 0;
      while (j < choice.size() && ++choice[j] == column_perms[j].size()) choice[j++] = 0;
      if (j == choice.size()) break;
    }
  }
  out.basis = ff::SparseMatrix::from_triplets(field, space.size(), out.dim, std::move(triplets));

  ff::Matrix lead(out.dim, out.dim);
  for (std::size_t i = 0; i < out.dim; ++i) {
    const auto row = out.basis.row(out.leading_rows[i]);
    for (const auto& e : row) lead(i, e.col) = e.value;
  }
  if (ff::rank(field, lead) != out.dim) {
    throw Error(ErrorCode::RankCheckFailed, "polytabloid basis of " + mu.to_string() + " is not of full rank");
  }
  return out;
}

void check_degree(const Partition& mu, unsigned n, unsigned p) {
  if (mu.size() != static_cast<int>(n * p)) {
    throw Error(ErrorCode::PreconditionViolated, mu.to_string() + " is not a partition of n*p = " + std::to_string(n * p));
  }
}

}  // namespace

SpechtBasis standard_basis(const Partition& mu, unsigned p) {
  const TabloidSpace space(mu);
  return build_basis(space, p);
}

void compute_blocks(RestrictedActions& acts) {
  std::vector<std::uint32_t> parent(acts.dim);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : acts.actions) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (const auto& e : a.row(i)) parent[find(static_cast<std::uint32_t>(i))] = find(e.col);
    }
  }
  std::vector<std::vector<std::uint32_t>> groups;
  std::vector<std::int64_t> group_of(acts.dim, -1);
  for (std::uint32_t i = 0; i < acts.dim; ++i) {
    const auto root = find(i);
    if (group_of[root] < 0) {
      group_of[root] = static_cast<std::int64_t>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(group_of[root])].push_back(i);
  }

  acts.blocks.clear();
  std::vector<std::uint32_t> local(acts.dim);
  for (auto& idx : groups) {
    ActionBlock block;
    for (std::size_t k = 0; k < idx.size(); ++k) local[idx[k]] = static_cast<std::uint32_t>(k);
    for (const auto& a : acts.actions) {
      ff::Matrix m(idx.size(), idx.size());
      for (std::size_t k = 0; k < idx.size(); ++k) {
        for (const auto& e : a.row(idx[k])) m(k, local[e.col]) = e.value;
      }
      block.actions.push_back(std::move(m));
    }
    block.indices = std::move(idx);
    acts.blocks.push_back(std::move(block));
  }
}

RestrictedActions restricted_actions(const Partition& mu, unsigned n, unsigned p, bool use_conjugate) {
  check_degree(mu, n, p);
  RestrictedActions out;
  out.mu = mu;
  out.built_from = mu;
  out.n = n;
  out.p = p;
  if (use_conjugate) {
    const Partition conj = conjugate(mu);
    if (tabloid_count(conj) < tabloid_count(mu)) {
      out.built_from = conj;
      out.conjugated = true;
    }
  }

  const TabloidSpace space(out.built_from);
  const SpechtBasis sb = build_basis(space, p);
  const ff::Field field(p);
  const std::size_t d = sb.dim;
  out.dim = d;

  const ff::Matrix dense = sb.basis.to_dense();
  ff::Matrix lead(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto src = dense.row(sb.leading_rows[i]);
    std::copy(src.begin(), src.end(), lead.row(i).begin());
  }

  const int m = mu.size();
  for (unsigned i = 1; i <= n; ++i) {
    const Permutation g = block_cycle(m, p, i);
    // C = (g - 1) B; row g.t of P_g B is row t of B.
    ff::Matrix c(space.size(), d);
    for (std::size_t t = 0; t < space.size(); ++t) {
      field.axpy(c.row(space.act(g, t)), 1, dense.row(t));
      field.axpy(c.row(t), field.neg(1), dense.row(t));
    }
    ff::Matrix c_lead(d, d);
    for (std::size_t r = 0; r < d; ++r) {
      const auto src = c.row(sb.leading_rows[r]);
      std::copy(src.begin(), src.end(), c_lead.row(r).begin());
    }
    ff::Matrix x = ff::solve_columns(field, lead, c_lead);
    if (!(ff::multiply(field, sb.basis, x) == c)) {
      throw Error(ErrorCode::NoSolution, "S^" + out.built_from.to_string() + " is not invariant under generator " + std::to_string(i));
    }
    out.actions.push_back(ff::SparseMatrix::from_dense(x));
  }
  compute_blocks(out);
  return out;
}

RestrictedActions perm_module_actions(const Partition& mu, unsigned n, unsigned p) {
  check_degree(mu, n, p);
  const TabloidSpace space(mu);
  const ff::Field field(p);
  RestrictedActions out;
  out.mu = mu;
  out.built_from = mu;
  out.permutation_module = true;
  out.n = n;
  out.p = p;
  out.dim = space.size();
  for (unsigned i = 1; i <= n; ++i) {
    const Permutation g = block_cycle(mu.size(), p, i);
    std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, ff::Elem>> triplets;
    for (std::size_t t = 0; t < space.size(); ++t) {
      const auto col = static_cast<std::uint32_t>(t);
      triplets.push_back({{static_cast<std::uint32_t>(space.act(g, t)), col}, 1});
      triplets.push_back({{col, col}, field.neg(1)});
    }
    out.actions.push_back(ff::SparseMatrix::from_triplets(field, space.size(), space.size(), std::move(triplets)));
  }
  compute_blocks(out);
  return out;
}

std::size_t fixed_tabloid_count(const Partition& mu, unsigned n, unsigned p) {
  check_degree(mu, n, p);
  const TabloidSpace space(mu);
  std::vector<Permutation> gens;
  for (unsigned i = 1; i <= n; ++i) gens.push_back(block_cycle(mu.size(), p, i));
  std::size_t count = 0;
  for (std::size_t t = 0; t < space.size(); ++t) {
    if (std::all_of(gens.begin(), gens.end(), [&](const Permutation& g) { return space.act(g, t) == t; })) ++count;
  }
  return count;
}

std::optional<std::filesystem::path> cache_dir_from_env() {
  const char* dir = std::getenv("SPECHTVAR_CACHE");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir);
}

namespace {

std::string cache_key(std::string_view kind, const Partition& mu, unsigned n, unsigned p, bool use_conjugate) {
  std::ostringstream key;
  key << "spechtvar|" << kVersion << '|' << kind << '|' << mu.to_string() << '|' << n << '|' << p << '|' << use_conjugate;
  return key.str();
}

void write_u32(std::ostream& os, std::uint32_t v) { os.write(reinterpret_cast<const char*>(&v), sizeof v); }

std::uint32_t read_u32(std::istream& is) {
  std::uint32_t v = 0;
  is.read(reinterpret_cast<char*>(&v), sizeof v);
  if (!is) throw std::runtime_error("truncated cache file");
  return v;
}

void write_partition(std::ostream& os, const Partition& mu) {
  write_u32(os, static_cast<std::uint32_t>(mu.length()));
  for (int part : mu.parts()) write_u32(os, static_cast<std::uint32_t>(part));
}

Partition read_partition(std::istream& is) {
  std::vector<int> parts(read_u32(is));
  for (auto& part : parts) part = static_cast<int>(read_u32(is));
  return Partition(std::move(parts));
}

void save(const std::filesystem::path& file, const std::string& key, const RestrictedActions& acts) {
  std::filesystem::create_directories(file.parent_path());
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary);
    write_u32(os, static_cast<std::uint32_t>(key.size()));
    os.write(key.data(), static_cast<std::streamsize>(key.size()));
    write_partition(os, acts.mu);
    write_partition(os, acts.built_from);
    write_u32(os, acts.conjugated);
    write_u32(os, acts.permutation_module);
    write_u32(os, acts.n);
    write_u32(os, acts.p);
    write_u32(os, static_cast<std::uint32_t>(acts.dim));
    write_u32(os, static_cast<std::uint32_t>(acts.actions.size()));
    for (const auto& a : acts.actions) {
      write_u32(os, static_cast<std::uint32_t>(a.rows()));
      write_u32(os, static_cast<std::uint32_t>(a.cols()));
      for (std::size_t i = 0; i < a.rows(); ++i) {
        write_u32(os, static_cast<std::uint32_t>(a.row(i).size()));
        for (const auto& e : a.row(i)) {
          write_u32(os, e.col);
          write_u32(os, e.value);
        }
      }
    }
  }
  std::filesystem::rename(tmp, file);
}

std::optional<RestrictedActions> load(const std::filesystem::path& file, const std::string& key) {
  std::ifstream is(file, std::ios::binary);
  if (!is) return std::nullopt;
  try {
    std::string stored(read_u32(is), '\0');
    is.read(stored.data(), static_cast<std::streamsize>(stored.size()));
    if (stored != key) return std::nullopt;
    RestrictedActions acts;
    acts.mu = read_partition(is);
    acts.built_from = read_partition(is);
    acts.conjugated = read_u32(is) != 0;
    acts.permutation_module = read_u32(is) != 0;
    acts.n = read_u32(is);
    acts.p = read_u32(is);
    acts.dim = read_u32(is);
    const std::uint32_t count = read_u32(is);
    for (std::uint32_t k = 0; k < count; ++k) {
      const std::uint32_t rows = read_u32(is);
      const std::uint32_t cols = read_u32(is);
      ff::SparseMatrix a(rows, cols);
      for (std::uint32_t i = 0; i < rows; ++i) {
        std::vector<ff::SparseMatrix::Entry> entries(read_u32(is));
        for (auto& e : entries) {
          e.col = read_u32(is);
          e.value = read_u32(is);
        }
        a.set_row(i, std::move(entries));
      }
      if (!a.is_valid()) return std::nullopt;
      acts.actions.push_back(std::move(a));
    }
    compute_blocks(acts);
    return acts;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

template <typename Build>
RestrictedActions with_cache(const std::string& key, const std::optional<std::filesystem::path>& dir, Build build) {
  if (!dir) return build();
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.bin", static_cast<unsigned long long>(fnv1a(key)));
  const auto file = *dir / name;
  if (auto hit = load(file, key)) return std::move(*hit);
  RestrictedActions acts = build();
  try {
    save(file, key, acts);
  } catch (const std::exception&) {
    // An unwritable cache only costs recomputation.
  }
  return acts;
}

}  // namespace

RestrictedActions cached_restricted_actions(const Partition& mu, unsigned n, unsigned p, bool use_conjugate,
                                            const std::optional<std::filesystem::path>& cache_dir) {
  return with_cache(cache_key("specht", mu, n, p, use_conjugate), cache_dir,
                    [&] { return restricted_actions(mu, n, p, use_conjugate); });
}

RestrictedActions cached_perm_module_actions(const Partition& mu, unsigned n, unsigned p,
                                             const std::optional<std::filesystem::path>& cache_dir) {
  return with_cache(cache_key("permutation", mu, n, p, false), cache_dir,
                    [&] { return perm_module_actions(mu, n, p); });
}

}  // namespace spechtvar

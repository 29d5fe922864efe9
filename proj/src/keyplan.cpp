/*
 * Copyright 2026 The gsa Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "gsa/keyplan.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "gsa/errors.hpp"
#include "gsa/rng.hpp"

namespace gsa {

namespace {

// <b>_a with representatives in {1,...,a}.
int wrap1(int b, int a) { return (b - 1) % a + 1; }

// C(n,r) capped at `cap` to avoid overflow; enough for budget comparisons.
long binom_capped(int n, int r, long cap) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 v = 1;
  for (int i = 1; i <= r; ++i) {
    v = v * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (v > static_cast<unsigned __int128>(cap)) return cap + 1;
  }
  return static_cast<long>(v);
}

std::uint64_t dot(const PrimeField& f, const std::vector<std::uint64_t>& a,
                  const std::vector<std::uint64_t>& b) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

std::vector<int> range1(int lo, int hi) {  // [lo..hi], empty when lo > hi
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

KeyGroup make_group(std::vector<int> members) {
  std::sort(members.begin(), members.end());
  return KeyGroup{std::move(members)};
}

}  // namespace

void SystemParams::validate() const {
  if (num_users < 2)
    throw std::invalid_argument("params: need at least 2 users");
  if (min_survivors < 1 || min_survivors > num_users - 1)
    throw std::invalid_argument("params: U must satisfy 1 <= U <= K-1");
  if (group_size < 1 || group_size > num_users)
    throw std::invalid_argument("params: S must satisfy 1 <= S <= K");
  if (input_len < 1) throw std::invalid_argument("params: L must be >= 1");
  (void)field();  // validates primality of q
}

bool KeyGroup::contains(int user) const {
  return std::binary_search(members.begin(), members.end(), user);
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::CyclicRandom: return "cyclic";
    case Regime::PairwiseUnit: return "pairwise";
    case Regime::ThreeStep: return "threestep";
  }
  return "?";
}

std::vector<int> KeyPlan::group_indices_of_user(int user) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(groups.size()); ++i)
    if (groups[i].contains(user)) out.push_back(i);
  return out;
}

std::vector<int> KeyPlan::group_indices_without_user(int user) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(groups.size()); ++i)
    if (!groups[i].contains(user)) out.push_back(i);
  return out;
}

FMatrix KeyPlan::columns_matrix(const std::vector<int>& group_indices) const {
  std::vector<std::vector<std::uint64_t>> cols;
  cols.reserve(group_indices.size());
  for (int i : group_indices) cols.push_back(coeffs[i]);
  return FMatrix::from_columns(field(), cols, params.min_survivors);
}

SystemParams effective_params(const SystemParams& p) {
  p.validate();
  const int k = p.num_users, u = p.min_survivors;
  SystemParams e = p;
  if (p.group_size > k - u + 1) {
    e.group_size = k - u + 1;
    return e;
  }
  if (p.group_size == k - u + 1) return e;
  // S <= K-U: S = 1 admits no secure scheme at all; 2 <= S <= K-U carries a
  // strict rate penalty and no construction is provided.
  throw UnsupportedRegimeError(
      "no construction for S <= K-U (K=" + std::to_string(k) +
      " U=" + std::to_string(u) + " S=" + std::to_string(p.group_size) +
      "); groupwise keys need S >= K-U+1");
}

Regime regime_for(const SystemParams& effective) {
  const int k = effective.num_users, u = effective.min_survivors;
  if (u <= k - u + 1) return Regime::CyclicRandom;
  if (u == k - 1) return Regime::PairwiseUnit;
  return Regime::ThreeStep;
}

std::vector<KeyGroup> cyclic_sets(int num_users, int min_survivors) {
  const int k = num_users, u = min_survivors;
  std::vector<KeyGroup> out;
  out.reserve(k);
  for (int i = 1; i <= k; ++i) {
    std::vector<int> members;
    for (int t = 0; t <= k - u; ++t) members.push_back(wrap1(i + t, k));
    out.push_back(make_group(std::move(members)));
  }
  return out;
}

GFamilies g_families(int num_users, int min_survivors) {
  const int k = num_users, u = min_survivors;
  if (!(u > k - u + 1 && u < k - 1))
    throw std::invalid_argument("g_families: requires K-U+1 < U < K-1");
  GFamilies fam;
  // G1: [K-U] plus one tail element; the a-vectors are the unit vectors.
  for (int j = k - u + 1; j <= k; ++j) {
    std::vector<int> m = range1(1, k - u);
    m.push_back(j);
    fam.g1.push_back(make_group(std::move(m)));
  }
  // G2: the middle run [K-U+1:2K-2U] plus one element from either side.
  std::vector<int> g2_tails = range1(1, k - u);
  for (int j = 2 * k - 2 * u + 1; j <= k; ++j) g2_tails.push_back(j);
  for (int j : g2_tails) {
    std::vector<int> m = range1(k - u + 1, 2 * k - 2 * u);
    m.push_back(j);
    fam.g2.push_back(make_group(std::move(m)));
  }
  // G3: [K-U+1:2K-2U-1] plus a pair T from the two side ranges, at least one
  // element of T above 2K-2U.
  std::vector<int> side = range1(1, k - u);
  for (int j = 2 * k - 2 * u + 1; j <= k; ++j) side.push_back(j);
  for (std::size_t a = 0; a < side.size(); ++a) {
    for (std::size_t b = a + 1; b < side.size(); ++b) {
      if (side[b] <= 2 * k - 2 * u) continue;  // T must touch the top range
      std::vector<int> m = range1(k - u + 1, 2 * k - 2 * u - 1);
      m.push_back(side[a]);
      m.push_back(side[b]);
      fam.g3.push_back(make_group(std::move(m)));
    }
  }
  return fam;
}

namespace {

// Fills groups+coeffs for one construction attempt.
void construct_vectors(KeyPlan& plan, const SystemParams& eff, SeededRng& rng) {
  const int k = eff.num_users, u = eff.min_survivors;
  const PrimeField f = eff.field();
  plan.groups.clear();
  plan.coeffs.clear();

  switch (plan.regime) {
    case Regime::CyclicRandom: {
      plan.groups = cyclic_sets(k, u);
      for (std::size_t i = 0; i < plan.groups.size(); ++i)
        plan.coeffs.push_back(rng.uniform_block(f, u));
      break;
    }
    case Regime::PairwiseUnit: {
      // a_{1,j} = e_{j-1}; a_{i,j} = a_{1,i} - a_{1,j}. Fully deterministic.
      for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
          plan.groups.push_back(make_group({i, j}));
          std::vector<std::uint64_t> a(u, 0);
          if (i == 1) {
            a[j - 2] = 1;
          } else {
            a[i - 2] = 1;
            a[j - 2] = f.from_signed(-1);
          }
          plan.coeffs.push_back(std::move(a));
        }
      }
      break;
    }
    case Regime::ThreeStep: {
      GFamilies fam = g_families(k, u);
      // G1: unit vectors.
      for (std::size_t t = 0; t < fam.g1.size(); ++t) {
        plan.groups.push_back(fam.g1[t]);
        std::vector<std::uint64_t> a(u, 0);
        a[t] = 1;
        plan.coeffs.push_back(std::move(a));
      }
      // G2: random combinations. Tail j in [K-U] spans e_1..e_{K-U}; tail j in
      // [2K-2U+1:K] additionally carries e_{j-K+U}.
      const int g1_count = static_cast<int>(fam.g1.size());
      auto g2_index = [&](int j) {
        // groups in fam.g2 are ordered: j = 1..K-U, then j = 2K-2U+1..K
        if (j <= k - u) return g1_count + (j - 1);
        return g1_count + (k - u) + (j - (2 * k - 2 * u + 1));
      };
      {
        int t = 0;
        std::vector<int> tails = range1(1, k - u);
        for (int j = 2 * k - 2 * u + 1; j <= k; ++j) tails.push_back(j);
        for (int j : tails) {
          plan.groups.push_back(fam.g2[t++]);
          std::vector<std::uint64_t> a(u, 0);
          for (int m = 0; m < k - u; ++m) a[m] = rng.uniform_residue(f);
          if (j > 2 * k - 2 * u) a[j - k + u - 1] = rng.uniform_residue(f);
          plan.coeffs.push_back(std::move(a));
        }
      }
      // G3: zero-force the e_{K-U} component out of the two G2 parents.
      const int zf = k - u - 1;  // 0-based index of e_{K-U}
      for (const KeyGroup& v : fam.g3) {
        // The pair T is v's members outside [K-U+1:2K-2U-1].
        std::vector<int> t;
        for (int m : v.members)
          if (m <= k - u || m >= 2 * k - 2 * u) t.push_back(m);
        const auto& a1 = plan.coeffs[g2_index(t[0])];
        const auto& a2 = plan.coeffs[g2_index(t[1])];
        std::vector<std::uint64_t> a(u, 0);
        for (int m = 0; m < u; ++m) {
          a[m] = f.sub(f.mul(a2[zf], a1[m]), f.mul(a1[zf], a2[m]));
        }
        plan.groups.push_back(v);
        plan.coeffs.push_back(std::move(a));
      }
      break;
    }
  }
}

bool derive_srows(KeyPlan& plan) {
  const int k = plan.params.num_users;
  plan.srows.assign(k, {});
  for (int user = 1; user <= k; ++user) {
    FMatrix comp = plan.columns_matrix(plan.group_indices_without_user(user));
    auto basis = left_null_space(comp);
    if (basis.size() != 1) return false;  // complement rank is not U-1
    plan.srows[user - 1] = std::move(basis[0]);
  }
  return true;
}

}  // namespace

KeyPlan build_key_plan(const SystemParams& p, std::uint64_t seed,
                       int max_attempts, long subset_budget) {
  SystemParams eff = effective_params(p);
  KeyPlan plan;
  plan.params = p;
  plan.params.group_size = p.group_size;  // original S kept for reporting
  plan.effective_group_size = eff.group_size;
  plan.regime = regime_for(eff);
  plan.seed = seed;

  const bool randomized = plan.regime != Regime::PairwiseUnit;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    SeededRng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    construct_vectors(plan, eff, rng);
    if (derive_srows(plan)) {
      ConstraintReport rep = verify_constraints(plan, subset_budget);
      if (rep.pass) {
        plan.attempts_used = attempt + 1;
        return plan;
      }
    }
    if (!randomized) {
      throw ConstructionFailedError(
          "deterministic pairwise construction failed verification");
    }
  }
  throw ConstructionFailedError(
      "no verified plan after " + std::to_string(max_attempts) +
      " attempts (K=" + std::to_string(p.num_users) +
      " U=" + std::to_string(p.min_survivors) +
      " q=" + std::to_string(p.modulus) + ")");
}

ConstraintReport verify_constraints(const KeyPlan& plan, long subset_budget) {
  const SystemParams& p = plan.params;
  const int k = p.num_users, u = p.min_survivors;
  const PrimeField f = plan.field();
  ConstraintReport rep;

  for (int user = 1; user <= k; ++user) {
    FMatrix mask = plan.columns_matrix(plan.group_indices_of_user(user));
    if (rank(mask) != u) {
      rep.failures.push_back({"mask-rank", user, {},
                              "coefficient matrix of user's keys has rank < U"});
      break;
    }
  }
  for (int user = 1; user <= k; ++user) {
    FMatrix comp = plan.columns_matrix(plan.group_indices_without_user(user));
    if (rank(comp) != u - 1) {
      rep.failures.push_back({"complement-rank", user, {},
                              "unknown-key matrix rank differs from U-1"});
      break;
    }
  }
  // Encodability: s_k annihilates every group the user is not in.
  for (int user = 1; user <= k && rep.failures.empty(); ++user) {
    if (static_cast<int>(plan.srows[user - 1].size()) != u) {
      rep.failures.push_back({"encodability", user, {}, "missing s row"});
      break;
    }
    for (int gi : plan.group_indices_without_user(user)) {
      if (dot(f, plan.srows[user - 1], plan.coeffs[gi]) != 0) {
        rep.failures.push_back({"encodability", user, {},
                                "s row does not annihilate an unknown key"});
        break;
      }
    }
  }

  // Decodability: every U-subset of s rows independent.
  auto subset_ok = [&](const std::vector<int>& users) {
    std::vector<std::vector<std::uint64_t>> rows;
    for (int usr : users) rows.push_back(plan.srows[usr - 1]);
    FMatrix m = FMatrix::from_columns(f, rows, u);  // columns = s rows; rank equal
    return rank(m) == u;
  };

  const long total = binom_capped(k, u, subset_budget);
  if (total <= subset_budget) {
    rep.subset_check_exhaustive = true;
    std::vector<int> sel(u);
    std::iota(sel.begin(), sel.end(), 1);
    for (;;) {
      ++rep.subsets_checked;
      if (!subset_ok(sel)) {
        rep.failures.push_back({"decodability", 0, sel, "dependent s rows"});
        break;
      }
      // next combination
      int i = u - 1;
      while (i >= 0 && sel[i] == k - (u - 1 - i)) --i;
      if (i < 0) break;
      ++sel[i];
      for (int j = i + 1; j < u; ++j) sel[j] = sel[j - 1] + 1;
    }
  } else {
    rep.subset_check_exhaustive = false;
    // All contiguous windows first, then uniform samples.
    for (int i = 1; i <= k && rep.failures.empty(); ++i) {
      std::vector<int> sel;
      for (int t = 0; t < u; ++t) sel.push_back(wrap1(i + t, k));
      std::sort(sel.begin(), sel.end());
      ++rep.subsets_checked;
      if (!subset_ok(sel))
        rep.failures.push_back({"decodability", 0, sel, "dependent s rows (window)"});
    }
    SeededRng rng(derive_seed(plan.seed, 0x5b5e7ULL));
    std::vector<int> pool(k);
    for (long it = 0; it < subset_budget && rep.failures.empty(); ++it) {
      std::iota(pool.begin(), pool.end(), 1);
      for (int t = 0; t < u; ++t) {
        std::size_t j = t + static_cast<std::size_t>(rng.uniform_below(k - t));
        std::swap(pool[t], pool[j]);
      }
      std::vector<int> sel(pool.begin(), pool.begin() + u);
      std::sort(sel.begin(), sel.end());
      ++rep.subsets_checked;
      if (!subset_ok(sel))
        rep.failures.push_back({"decodability", 0, sel, "dependent s rows (sampled)"});
    }
  }

  rep.pass = rep.failures.empty();
  return rep;
}

std::string ConstraintReport::summary() const {
  std::ostringstream os;
  os << (pass ? "PASS" : "FAIL") << " (subset check "
     << (subset_check_exhaustive ? "exhaustive" : "sampled") << ", "
     << subsets_checked << " subsets)";
  for (const auto& fl : failures) {
    os << "\n  " << fl.family;
    if (fl.user > 0) os << " user " << fl.user;
    if (!fl.subset.empty()) {
      os << " subset {";
      for (std::size_t i = 0; i < fl.subset.size(); ++i)
        os << (i ? "," : "") << fl.subset[i];
      os << "}";
    }
    os << ": " << fl.detail;
  }
  return os.str();
}

KeyCensus key_census(const KeyPlan& plan) {
  const SystemParams& p = plan.params;
  KeyCensus c;
  c.group_count = static_cast<long>(plan.groups.size());
  c.symbols_per_key =
      static_cast<long>(p.num_users - p.min_survivors + 1) * p.block_len();
  c.total_key_symbols = c.group_count * c.symbols_per_key;
  return c;
}

std::string format_plan(const KeyPlan& plan) {
  std::ostringstream os;
  const SystemParams& p = plan.params;
  os << "GSA-PLAN v1 K=" << p.num_users << " U=" << p.min_survivors
     << " S=" << p.group_size << " q=" << p.modulus << " seed=0x" << std::hex
     << plan.seed << std::dec << "\n";
  for (std::size_t g = 0; g < plan.groups.size(); ++g) {
    os << "G {";
    const auto& m = plan.groups[g].members;
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << "} a=[";
    const auto& a = plan.coeffs[g];
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << "]\n";
  }
  for (int u = 1; u <= p.num_users; ++u) {
    os << "S " << u << "=[";
    const auto& s = plan.srows[u - 1];
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "]\n";
  }
  return os.str();
}

namespace {

std::uint64_t parse_u64(const std::string& tok, long line, int base = 10) {
  std::uint64_t v = 0;
  auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), v, base);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("bad integer '" + tok + "'", line);
  return v;
}

std::vector<std::uint64_t> parse_bracket_list(const std::string& s, long line,
                                              std::uint64_t q) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("expected [..] list", line);
  std::vector<std::uint64_t> out;
  std::string body = s.substr(1, s.size() - 2);
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::uint64_t v = parse_u64(tok, line);
    if (v >= q) throw ParseError("residue not canonical (>= q)", line);
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty coefficient list", line);
  return out;
}

}  // namespace

KeyPlan parse_plan(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  long lineno = 0;

  if (!std::getline(in, line)) throw ParseError("empty plan file", 1);
  ++lineno;
  std::istringstream hs(line);
  std::string magic, ver, kkv, ukv, skv, qkv, seedkv;
  hs >> magic >> ver >> kkv >> ukv >> skv >> qkv >> seedkv;
  if (magic != "GSA-PLAN" || ver != "v1")
    throw ParseError("bad header, expected 'GSA-PLAN v1 ...'", lineno);
  auto kv = [&](const std::string& tok, const char* key) {
    std::string prefix = std::string(key) + "=";
    if (tok.rfind(prefix, 0) != 0)
      throw ParseError("expected '" + prefix + "...'", lineno);
    return tok.substr(prefix.size());
  };
  KeyPlan plan;
  plan.params.num_users = static_cast<int>(parse_u64(kv(kkv, "K"), lineno));
  plan.params.min_survivors = static_cast<int>(parse_u64(kv(ukv, "U"), lineno));
  plan.params.group_size = static_cast<int>(parse_u64(kv(skv, "S"), lineno));
  plan.params.modulus = parse_u64(kv(qkv, "q"), lineno);
  std::string seedtok = kv(seedkv, "seed");
  if (seedtok.rfind("0x", 0) != 0) throw ParseError("seed must be 0x-hex", lineno);
  plan.seed = parse_u64(seedtok.substr(2), lineno, 16);

  SystemParams eff = effective_params(plan.params);  // validates, throws
  plan.effective_group_size = eff.group_size;
  plan.regime = regime_for(eff);
  const int k = plan.params.num_users;
  const int u = plan.params.min_survivors;
  const std::uint64_t q = plan.params.modulus;

  std::vector<bool> seen_s(k, false);
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "G") {
      std::string members, avec;
      ls >> members >> avec;
      if (members.size() < 2 || members.front() != '{' || members.back() != '}')
        throw ParseError("expected {members}", lineno);
      KeyGroup grp;
      std::stringstream ms(members.substr(1, members.size() - 2));
      std::string tok;
      while (std::getline(ms, tok, ',')) {
        int m = static_cast<int>(parse_u64(tok, lineno));
        if (m < 1 || m > k) throw ParseError("member out of range", lineno);
        grp.members.push_back(m);
      }
      if (!std::is_sorted(grp.members.begin(), grp.members.end()))
        throw ParseError("group members not sorted", lineno);
      if (static_cast<int>(grp.members.size()) != plan.effective_group_size)
        throw ParseError("group size differs from K-U+1", lineno);
      if (avec.rfind("a=", 0) != 0) throw ParseError("expected a=[..]", lineno);
      auto a = parse_bracket_list(avec.substr(2), lineno, q);
      if (static_cast<int>(a.size()) != u)
        throw ParseError("coefficient vector length differs from U", lineno);
      plan.groups.push_back(std::move(grp));
      plan.coeffs.push_back(std::move(a));
    } else if (tag == "S") {
      std::string rest;
      ls >> rest;
      auto eq = rest.find('=');
      if (eq == std::string::npos) throw ParseError("expected S k=[..]", lineno);
      int usr = static_cast<int>(parse_u64(rest.substr(0, eq), lineno));
      if (usr < 1 || usr > k) throw ParseError("user out of range", lineno);
      if (seen_s[usr - 1]) throw ParseError("duplicate S row", lineno);
      auto s = parse_bracket_list(rest.substr(eq + 1), lineno, q);
      if (static_cast<int>(s.size()) != u)
        throw ParseError("s row length differs from U", lineno);
      if (plan.srows.empty()) plan.srows.assign(k, {});
      plan.srows[usr - 1] = std::move(s);
      seen_s[usr - 1] = true;
    } else {
      throw ParseError("unknown record '" + tag + "'", lineno);
    }
  }
  if (plan.groups.empty()) throw ParseError("plan has no groups", lineno);
  for (int usr = 1; usr <= k; ++usr) {
    if (!seen_s[usr - 1])
      throw ParseError("missing S row for user " + std::to_string(usr), lineno);
  }
  return plan;
}

void save_plan(const KeyPlan& plan, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << format_plan(plan);
  if (!out) throw std::runtime_error("write failed: " + path);
}

LoadedPlan load_plan(const std::string& path, long subset_budget) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  LoadedPlan lp{parse_plan(ss.str()), {}};
  lp.report = verify_constraints(lp.plan, subset_budget);
  return lp;
}

AppendixWitness build_appendix_witness(int num_users, int min_survivors,
                                       const std::vector<int>& decoding_set,
                                       const PrimeField& f) {
  const int k = num_users, u = min_survivors;
  if (!(u > k - u + 1 && u < k - 1))
    throw std::invalid_argument("witness: requires the zero-forcing regime");
  std::vector<int> a = decoding_set;
  std::sort(a.begin(), a.end());
  if (static_cast<int>(a.size()) != u)
    throw std::invalid_argument("witness: |A| must equal U");

  int x = 0, y = 0, low = 0;
  for (int m : a) {
    if (m <= k - u) ++low;
    else if (m <= 2 * k - 2 * u) ++x;
    else ++y;
  }
  // Canonical position: each slice is an initial run of its range.
  auto is_prefix = [&](int count, int base) {
    for (int t = 0; t < count; ++t)
      if (!std::binary_search(a.begin(), a.end(), base + t)) return false;
    return true;
  };
  if (low != u - x - y || !is_prefix(low, 1) || !is_prefix(x, k - u + 1) ||
      !is_prefix(y, 2 * k - 2 * u + 1))
    throw std::invalid_argument(
        "witness: decoding set not in canonical position");

  const int g1 = k - u - x;
  const int g2 = x + y - 2 * u + k;
  const int t3 = 2 * u - k - y;
  if (g2 < 0)
    throw std::invalid_argument("witness: x+y below 2U-K is impossible");

  const std::uint64_t one = 1, negone = f.from_signed(-1);

  // Column offsets: [g1 | t3 | g2 | y | t3]; row offsets: [t3 | g2 | g1 | y | t3].
  FMatrix g(f, u, u);
  const int c0 = 0, c1 = g1, c2 = g1 + t3, c3 = g1 + t3 + g2, c4 = c3 + y;
  int r = 0;
  for (int i = 0; i < t3; ++i, ++r) {  // [0 | I | 0 | 0 | -I]
    g.at(r, c1 + i) = one;
    g.at(r, c4 + i) = negone;
  }
  for (int i = 0; i < g2; ++i, ++r) {  // [0 | 0 | I | 0 | 0]
    g.at(r, c2 + i) = one;
  }
  for (int i = 0; i < g1; ++i, ++r) {  // [I | -1 | -1 | 1 | 1]
    g.at(r, c0 + i) = one;
    for (int j = 0; j < t3; ++j) g.at(r, c1 + j) = negone;
    for (int j = 0; j < g2; ++j) g.at(r, c2 + j) = negone;
    for (int j = 0; j < y; ++j) g.at(r, c3 + j) = one;
    for (int j = 0; j < t3; ++j) g.at(r, c4 + j) = one;
  }
  for (int i = 0; i < y; ++i, ++r) g.at(r, c3 + i) = one;
  for (int i = 0; i < t3; ++i, ++r) g.at(r, c4 + i) = one;

  // Row-space segments of the s vectors follow G's row blocks: [t3|g2|g1|y|t3].
  const int s0 = 0, s1 = t3, s2 = t3 + g2, s3 = t3 + g2 + g1, s4 = s3 + y;
  FMatrix stack(f, u, u);
  int row = 0;
  for (int m : a) {
    if (m <= k - u) {
      if (m <= g1) {
        // [1...1 | 1...1 | e_m | -1...-1 | 0...0]
        for (int j = 0; j < t3; ++j) stack.at(row, s0 + j) = one;
        for (int j = 0; j < g2; ++j) stack.at(row, s1 + j) = one;
        stack.at(row, s2 + (m - 1)) = one;
        for (int j = 0; j < y; ++j) stack.at(row, s3 + j) = negone;
      } else {
        // [e_{m-g1} | 0 | 0 | 0 | e_{m-g1}]
        stack.at(row, s0 + (m - g1 - 1)) = one;
        stack.at(row, s4 + (m - g1 - 1)) = one;
      }
    } else {
      stack.at(row, m - k + u - 1) = one;  // unit decoding row
    }
    ++row;
  }
  return {std::move(g), std::move(stack)};
}

}  // namespace gsa

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

#ifndef GSA_KEYPLAN_HPP_
#define GSA_KEYPLAN_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsa/field.hpp"
#include "gsa/linalg.hpp"

namespace gsa {

/// System parameters: K users, decoding threshold U, key-group size S,
/// field modulus q, input length L (symbols). User indices are 1-based
/// everywhere, matching the serialized formats.
struct SystemParams {
  int num_users = 0;        // K
  int min_survivors = 0;    // U
  int group_size = 0;       // S
  std::uint64_t modulus = PrimeField::kMersenne61;  // q
  long input_len = 1;       // L

  void validate() const;    // throws std::invalid_argument
  PrimeField field() const { return PrimeField(modulus); }

  /// Smallest multiple of U that is >= L; inputs are zero-padded to this.
  long padded_len() const {
    long u = min_survivors;
    return ((input_len + u - 1) / u) * u;
  }
  long block_len() const { return padded_len() / min_survivors; }
};

/// A key group: the sorted set of users sharing one key. Regime-a plans on
/// degenerate parameters (U = 1) may hold several groups with identical
/// member sets; they carry independent keys.
struct KeyGroup {
  std::vector<int> members;  // sorted ascending, 1-based

  bool contains(int user) const;
  bool operator==(const KeyGroup& o) const { return members == o.members; }
};

enum class Regime { CyclicRandom, PairwiseUnit, ThreeStep };

const char* regime_name(Regime r);

/// The combinatorial design: ordered key groups, one coefficient vector a_V
/// per group, and one decoding row s_k per user. Immutable once built.
struct KeyPlan {
  SystemParams params;      // original parameters (S as requested)
  int effective_group_size = 0;  // K-U+1 after reduction
  Regime regime = Regime::CyclicRandom;
  std::uint64_t seed = 0;
  int attempts_used = 1;    // construction attempts until verification passed

  std::vector<KeyGroup> groups;
  std::vector<std::vector<std::uint64_t>> coeffs;  // a_V, length U each
  std::vector<std::vector<std::uint64_t>> srows;   // s_k, K rows of length U

  PrimeField field() const { return params.field(); }

  std::vector<int> group_indices_of_user(int user) const;
  std::vector<int> group_indices_without_user(int user) const;

  /// Matrix whose columns are {a_V : selector indices}.
  FMatrix columns_matrix(const std::vector<int>& group_indices) const;
};

struct ConstraintReport {
  struct Failure {
    std::string family;        // "mask-rank" | "complement-rank" | "decodability" | "encodability"
    int user = 0;              // offending user (mask/complement/encodability)
    std::vector<int> subset;   // offending U-subset (decodability)
    std::string detail;
  };

  bool pass = false;
  bool subset_check_exhaustive = true;
  long subsets_checked = 0;
  std::vector<Failure> failures;

  std::string summary() const;
};

/// S > K-U+1 reduces to S_eff = K-U+1 (a larger group can always emulate a
/// smaller one by discarding symbols); S <= K-U has no supported
/// construction and throws UnsupportedRegimeError.
SystemParams effective_params(const SystemParams& p);

Regime regime_for(const SystemParams& effective);

/// Cyclic groups C(i) = {i, <i+1>_K, ..., <i+K-U>_K}, i in [K]; the modulo
/// convention keeps representatives in {1,...,K}.
std::vector<KeyGroup> cyclic_sets(int num_users, int min_survivors);

struct GFamilies {
  std::vector<KeyGroup> g1;
  std::vector<KeyGroup> g2;
  std::vector<KeyGroup> g3;
};

/// The three group families of the zero-forcing construction
/// (requires K-U+1 < U < K-1).
GFamilies g_families(int num_users, int min_survivors);

/// Builds a verified plan. Randomized regimes resample from
/// derive_seed(seed, attempt) until verify_constraints passes, up to
/// max_attempts, then throw ConstructionFailedError.
KeyPlan build_key_plan(const SystemParams& p, std::uint64_t seed,
                       int max_attempts = 32, long subset_budget = 100000);

/// Checks the three constraint families plus encodability (s_k orthogonal to
/// every group not containing k). The U-subset independence check is
/// exhaustive when C(K,U) <= subset_budget; otherwise subset_budget sampled
/// subsets plus all K contiguous windows, and the report says so.
ConstraintReport verify_constraints(const KeyPlan& plan, long subset_budget = 100000);

struct KeyCensus {
  long group_count = 0;
  long symbols_per_key = 0;   // (K-U+1) * L'/U
  long total_key_symbols = 0;
};

KeyCensus key_census(const KeyPlan& plan);

/// Plan file round trip. Format (UTF-8 text, decimal canonical residues):
///   GSA-PLAN v1 K=<k> U=<u> S=<s> q=<q> seed=<hex>
///   G {m1,m2,...} a=[c1,...,cU]     one line per group
///   S k=[c1,...,cU]                 one line per user
void save_plan(const KeyPlan& plan, const std::string& path);

struct LoadedPlan {
  KeyPlan plan;
  ConstraintReport report;  // verification outcome; loading never hides failures
};

LoadedPlan load_plan(const std::string& path, long subset_budget = 100000);

KeyPlan parse_plan(const std::string& text);  // structural parse only
std::string format_plan(const KeyPlan& plan);

/// Concrete full-rank witness for the decodability argument of the
/// zero-forcing regime, for a decoding set A in canonical position
/// (A cap [K-U] = [U-x-y], then x users from [K-U+1:2K-2U], then y users
/// from [2K-2U+1:K]). Non-canonical sets are rejected; symmetry covers them.
struct AppendixWitness {
  FMatrix g;        // the U x U block realization (columns independent)
  FMatrix s_stack;  // the U derived decoding rows, one per user in A
};

AppendixWitness build_appendix_witness(int num_users, int min_survivors,
                                       const std::vector<int>& decoding_set,
                                       const PrimeField& f = PrimeField());

}  // namespace gsa

#endif  // GSA_KEYPLAN_HPP_

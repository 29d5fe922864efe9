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

#ifndef GSA_PROTOCOL_HPP_
#define GSA_PROTOCOL_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "gsa/keyplan.hpp"
#include "gsa/rng.hpp"

namespace gsa {

using Block = std::vector<std::uint64_t>;  // L'/U field symbols

/// One user's input, zero-padded from L to L' = U*ceil(L/U) symbols.
struct InputVector {
  int owner = 0;
  long original_len = 0;
  std::vector<std::uint64_t> symbols;  // length L'

  Block piece(const SystemParams& p, int j) const;  // j in [0, U)
};

InputVector make_random_input(const SystemParams& p, std::uint64_t seed, int owner);
InputVector make_input(const SystemParams& p, int owner,
                       std::vector<std::uint64_t> symbols);  // pads, reduces

/// All sub-keys of a plan: sub[g][m] is the block held under group g for its
/// m-th member (order of KeyGroup::members). Every block is uniform i.i.d.
struct KeyMaterial {
  long block_len = 0;
  std::vector<std::vector<Block>> sub;
};

KeyMaterial generate_keys(const KeyPlan& plan, std::uint64_t seed);

/// Key material visible to one user: exactly the groups containing it, each
/// with the full member-indexed sub-key list (a shared key is known in full
/// by every member). Encoders accept only this view, so a foreign group can
/// never be read.
struct UserKeyView {
  struct Entry {
    int group_index = -1;
    const KeyGroup* group = nullptr;
    const std::vector<Block>* member_blocks = nullptr;
  };
  int user = 0;
  long block_len = 0;
  std::vector<Entry> entries;
};

UserKeyView view_for(const KeyPlan& plan, const KeyMaterial& keys, int user);

struct Round1Msg {
  int sender = 0;
  std::vector<Block> blocks;  // U blocks, L' symbols total
  long symbol_count() const;
};

struct Round2Msg {
  int sender = 0;
  Block block;  // L'/U symbols
};

/// X_{k,j} = W_{k,j} + sum over groups V containing k of a_{V,j} * Z_{V,k}.
Round1Msg round1_encode(int user, const InputVector& w, const UserKeyView& view,
                        const KeyPlan& plan);

/// Coded key for one group under survivor set u1: the sum of the surviving
/// members' sub-keys.
Block coded_key(const KeyPlan& plan, const UserKeyView::Entry& entry,
                const std::vector<int>& u1, long block_len);

/// Y_k = sum over groups V containing k of (s_k . a_V) * coded key of V.
/// Computed purely from the user's own view; equals s_k * [F_1;...;F_U].
Round2Msg round2_encode(int user, const UserKeyView& view, const KeyPlan& plan,
                        const std::vector<int>& u1);

enum class RowSelection { LowestIndexed, Random };

/// Recovers sum over U1 of W_k from round-1 messages of U1 and any >= U
/// round-2 messages of U2. Throws ProtocolError when |U2| < U and
/// SingularMatrixError if the selected s rows are dependent (cannot happen
/// for a verified plan).
std::vector<std::uint64_t> server_decode(
    const KeyPlan& plan, const std::vector<int>& u1,
    const std::vector<Round1Msg>& msgs1, const std::vector<int>& u2,
    const std::vector<Round2Msg>& msgs2,
    RowSelection sel = RowSelection::LowestIndexed,
    std::uint64_t selection_seed = 0);

/// Full session record for audits: header, dropout bitmaps, all round-1
/// messages (including late users') and the round-2 messages of U1.
struct Transcript {
  SystemParams params;
  std::vector<int> u1;
  std::vector<int> u2;
  std::vector<Round1Msg> round1;  // K entries, user order
  std::vector<Round2Msg> round2;  // |U1| entries, user order
};

/// Binary transcript dump, little-endian:
/// [K,U,S,q,L,L' as u64][U1 bitmap][X blocks in user order]
/// [U2 bitmap][Y blocks in user order].
std::vector<std::uint8_t> serialize_transcript(const Transcript& t);
Transcript parse_transcript(const std::vector<std::uint8_t>& bytes);

void save_transcript(const Transcript& t, const std::string& path);

}  // namespace gsa

#endif  // GSA_PROTOCOL_HPP_

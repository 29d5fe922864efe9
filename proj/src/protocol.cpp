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

#include "gsa/protocol.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>

#include "gsa/errors.hpp"
#include "gsa/kernels.hpp"

namespace gsa {

namespace {

bool contains(const std::vector<int>& sorted, int v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void check_user_set(const std::vector<int>& s, int k, const char* name) {
  if (!std::is_sorted(s.begin(), s.end()) ||
      std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument(std::string(name) + " must be sorted and unique");
  if (!s.empty() && (s.front() < 1 || s.back() > k))
    throw std::invalid_argument(std::string(name) + " out of range");
}

}  // namespace

Block InputVector::piece(const SystemParams& p, int j) const {
  const long b = p.block_len();
  return Block(symbols.begin() + j * b, symbols.begin() + (j + 1) * b);
}

InputVector make_input(const SystemParams& p, int owner,
                       std::vector<std::uint64_t> symbols) {
  if (static_cast<long>(symbols.size()) != p.input_len)
    throw std::invalid_argument("input length differs from L");
  InputVector w;
  w.owner = owner;
  w.original_len = p.input_len;
  const std::uint64_t q = p.modulus;
  for (auto& v : symbols) v %= q;
  symbols.resize(p.padded_len(), 0);
  w.symbols = std::move(symbols);
  return w;
}

InputVector make_random_input(const SystemParams& p, std::uint64_t seed, int owner) {
  SeededRng rng(derive_seed(seed, 0x11a0000ULL + static_cast<std::uint64_t>(owner)));
  PrimeField f = p.field();
  std::vector<std::uint64_t> sym(p.input_len);
  for (auto& v : sym) v = rng.uniform_residue(f);
  return make_input(p, owner, std::move(sym));
}

KeyMaterial generate_keys(const KeyPlan& plan, std::uint64_t seed) {
  const SystemParams& p = plan.params;
  PrimeField f = p.field();
  KeyMaterial km;
  km.block_len = p.block_len();
  km.sub.resize(plan.groups.size());
  for (std::size_t g = 0; g < plan.groups.size(); ++g) {
    const auto& members = plan.groups[g].members;
    km.sub[g].resize(members.size());
    for (std::size_t m = 0; m < members.size(); ++m) {
      // one independent stream per (group index, member) so streams never alias
      SeededRng stream(derive_seed(derive_seed(seed, g + 1), members[m]));
      km.sub[g][m] = stream.uniform_block(f, km.block_len);
    }
  }
  return km;
}

UserKeyView view_for(const KeyPlan& plan, const KeyMaterial& keys, int user) {
  UserKeyView view;
  view.user = user;
  view.block_len = keys.block_len;
  for (int gi : plan.group_indices_of_user(user)) {
    view.entries.push_back({gi, &plan.groups[gi], &keys.sub[gi]});
  }
  return view;
}

long Round1Msg::symbol_count() const {
  long n = 0;
  for (const auto& b : blocks) n += static_cast<long>(b.size());
  return n;
}

Round1Msg round1_encode(int user, const InputVector& w, const UserKeyView& view,
                        const KeyPlan& plan) {
  if (w.owner != user)
    throw std::invalid_argument("round1_encode: input vector owned by another user");
  if (view.user != user)
    throw std::invalid_argument("round1_encode: key view of another user");
  const SystemParams& p = plan.params;
  const std::uint64_t q = p.modulus;
  const long b = p.block_len();

  Round1Msg msg;
  msg.sender = user;
  msg.blocks.resize(p.min_survivors);
  for (int j = 0; j < p.min_survivors; ++j) {
    Block x(w.symbols.begin() + j * b, w.symbols.begin() + (j + 1) * b);
    for (const auto& e : view.entries) {
      // user's own sub-key within this group
      const auto& members = e.group->members;
      auto it = std::find(members.begin(), members.end(), user);
      const Block& z = (*e.member_blocks)[it - members.begin()];
      kernels::axpy(x.data(), plan.coeffs[e.group_index][j], z.data(), x.size(), q);
    }
    msg.blocks[j] = std::move(x);
  }
  return msg;
}

Block coded_key(const KeyPlan& plan, const UserKeyView::Entry& entry,
                const std::vector<int>& u1, long block_len) {
  const std::uint64_t q = plan.params.modulus;
  Block z(block_len, 0);
  const auto& members = entry.group->members;
  for (std::size_t m = 0; m < members.size(); ++m) {
    if (contains(u1, members[m])) {
      kernels::add_inplace(z.data(), (*entry.member_blocks)[m].data(), z.size(), q);
    }
  }
  return z;
}

Round2Msg round2_encode(int user, const UserKeyView& view, const KeyPlan& plan,
                        const std::vector<int>& u1) {
  const SystemParams& p = plan.params;
  check_user_set(u1, p.num_users, "U1");
  if (!contains(u1, user))
    throw ProtocolError("round2_encode: user is not in U1");
  if (static_cast<int>(u1.size()) < p.min_survivors)
    throw ProtocolError("round2_encode: |U1| < U");
  if (view.user != user)
    throw std::invalid_argument("round2_encode: key view of another user");

  const PrimeField f = p.field();
  const std::uint64_t q = p.modulus;
  const auto& s = plan.srows[user - 1];

  Round2Msg msg;
  msg.sender = user;
  msg.block.assign(p.block_len(), 0);
  for (const auto& e : view.entries) {
    // coefficient of this group's coded key in Y_k is s_k . a_V
    std::uint64_t c = 0;
    const auto& a = plan.coeffs[e.group_index];
    for (int j = 0; j < p.min_survivors; ++j) c = f.add(c, f.mul(s[j], a[j]));
    if (c == 0) continue;
    Block z = coded_key(plan, e, u1, p.block_len());
    kernels::axpy(msg.block.data(), c, z.data(), z.size(), q);
  }
  return msg;
}

std::vector<std::uint64_t> server_decode(const KeyPlan& plan,
                                         const std::vector<int>& u1,
                                         const std::vector<Round1Msg>& msgs1,
                                         const std::vector<int>& u2,
                                         const std::vector<Round2Msg>& msgs2,
                                         RowSelection sel,
                                         std::uint64_t selection_seed) {
  const SystemParams& p = plan.params;
  const int u = p.min_survivors;
  const std::uint64_t q = p.modulus;
  const long b = p.block_len();
  const PrimeField f = p.field();

  check_user_set(u1, p.num_users, "U1");
  check_user_set(u2, p.num_users, "U2");
  if (!is_subset(u2, u1)) throw ProtocolError("decode: U2 must be a subset of U1");
  if (static_cast<int>(u2.size()) < u)
    throw ProtocolError("decode: insufficient survivors (|U2| < U)");
  if (msgs1.size() != u1.size() || msgs2.size() != u2.size())
    throw std::invalid_argument("decode: message count mismatch");

  // Sum of the received round-1 messages, blockwise.
  std::vector<Block> sum_x(u, Block(b, 0));
  for (const auto& m : msgs1) {
    if (static_cast<int>(m.blocks.size()) != u)
      throw std::invalid_argument("decode: malformed round-1 message");
    for (int j = 0; j < u; ++j)
      kernels::add_inplace(sum_x[j].data(), m.blocks[j].data(), b, q);
  }

  // Pick U round-2 responders: lowest-indexed by default, or a seeded random
  // choice to widen test coverage.
  std::vector<int> chosen(u2.size());
  for (std::size_t i = 0; i < u2.size(); ++i) chosen[i] = static_cast<int>(i);
  if (sel == RowSelection::Random) {
    SeededRng rng(derive_seed(selection_seed, 0xdec0deULL));
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      std::size_t j = i + rng.uniform_below(chosen.size() - i);
      std::swap(chosen[i], chosen[j]);
    }
  }
  chosen.resize(u);

  // Solve the s-row system for the mask aggregates F_1..F_U.
  FMatrix srows(f, u, u);
  for (int r = 0; r < u; ++r) {
    const auto& s = plan.srows[u2[chosen[r]] - 1];
    for (int c = 0; c < u; ++c) srows.at(r, c) = s[c];
  }
  FMatrix inv(f, u, u);
  try {
    inv = invert(srows);
  } catch (const SingularMatrixError&) {
    throw SingularMatrixError(
        "decode: selected s rows are dependent; plan integrity violated");
  }
  // F = inv * Y, computed blockwise.
  std::vector<Block> fblocks(u, Block(b, 0));
  for (int j = 0; j < u; ++j) {
    for (int i = 0; i < u; ++i) {
      kernels::axpy(fblocks[j].data(), inv.at(j, i),
                    msgs2[chosen[i]].block.data(), b, q);
    }
  }

  // Result_j = sum X_j - F_j; concatenate and truncate to L.
  std::vector<std::uint64_t> out;
  out.reserve(p.padded_len());
  for (int j = 0; j < u; ++j) {
    kernels::sub_inplace(sum_x[j].data(), fblocks[j].data(), b, q);
    out.insert(out.end(), sum_x[j].begin(), sum_x[j].end());
  }
  // Inputs are zero-padded, so the decoded tail must be zero.
  for (long i = p.input_len; i < p.padded_len(); ++i) {
    if (out[i] != 0)
      throw ProtocolError("decode: nonzero padding tail; plan integrity violated");
  }
  out.resize(p.input_len);
  return out;
}

namespace {

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_u64(const std::vector<std::uint8_t>& in, std::size_t& pos) {
  if (pos + 8 > in.size()) throw ParseError("transcript truncated", 0);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(in[pos + i]) << (8 * i);
  pos += 8;
  return v;
}

void put_bitmap(std::vector<std::uint8_t>& out, const std::vector<int>& set, int k) {
  std::vector<std::uint8_t> bits((k + 7) / 8, 0);
  for (int usr : set) bits[(usr - 1) / 8] |= static_cast<std::uint8_t>(1u << ((usr - 1) % 8));
  out.insert(out.end(), bits.begin(), bits.end());
}

std::vector<int> get_bitmap(const std::vector<std::uint8_t>& in, std::size_t& pos, int k) {
  std::size_t nbytes = (k + 7) / 8;
  if (pos + nbytes > in.size()) throw ParseError("transcript truncated", 0);
  std::vector<int> set;
  for (int usr = 1; usr <= k; ++usr) {
    if (in[pos + (usr - 1) / 8] & (1u << ((usr - 1) % 8))) set.push_back(usr);
  }
  pos += nbytes;
  return set;
}

}  // namespace

std::vector<std::uint8_t> serialize_transcript(const Transcript& t) {
  const SystemParams& p = t.params;
  std::vector<std::uint8_t> out;
  put_u64(out, p.num_users);
  put_u64(out, p.min_survivors);
  put_u64(out, p.group_size);
  put_u64(out, p.modulus);
  put_u64(out, p.input_len);
  put_u64(out, p.padded_len());
  put_bitmap(out, t.u1, p.num_users);
  for (const auto& m : t.round1)
    for (const auto& blk : m.blocks)
      for (std::uint64_t v : blk) put_u64(out, v);
  put_bitmap(out, t.u2, p.num_users);
  for (const auto& m : t.round2)
    for (std::uint64_t v : m.block) put_u64(out, v);
  return out;
}

Transcript parse_transcript(const std::vector<std::uint8_t>& bytes) {
  std::size_t pos = 0;
  Transcript t;
  t.params.num_users = static_cast<int>(get_u64(bytes, pos));
  t.params.min_survivors = static_cast<int>(get_u64(bytes, pos));
  t.params.group_size = static_cast<int>(get_u64(bytes, pos));
  t.params.modulus = get_u64(bytes, pos);
  t.params.input_len = static_cast<long>(get_u64(bytes, pos));
  const long padded = static_cast<long>(get_u64(bytes, pos));
  t.params.validate();
  if (padded != t.params.padded_len()) throw ParseError("bad padded length", 0);

  const int k = t.params.num_users;
  const int u = t.params.min_survivors;
  const long b = t.params.block_len();
  t.u1 = get_bitmap(bytes, pos, k);
  t.round1.resize(k);
  for (int usr = 1; usr <= k; ++usr) {
    Round1Msg m;
    m.sender = usr;
    m.blocks.assign(u, Block(b));
    for (int j = 0; j < u; ++j)
      for (long i = 0; i < b; ++i) m.blocks[j][i] = get_u64(bytes, pos);
    t.round1[usr - 1] = std::move(m);
  }
  t.u2 = get_bitmap(bytes, pos, k);
  for (int usr : t.u1) {
    Round2Msg m;
    m.sender = usr;
    m.block.resize(b);
    for (long i = 0; i < b; ++i) m.block[i] = get_u64(bytes, pos);
    t.round2.push_back(std::move(m));
  }
  if (pos != bytes.size()) throw ParseError("trailing transcript bytes", 0);
  return t;
}

void save_transcript(const Transcript& t, const std::string& path) {
  auto bytes = serialize_transcript(t);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace gsa

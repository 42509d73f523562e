// Copyright 2026 The wlbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WLBOUND_DIGEST_H_
#define WLBOUND_DIGEST_H_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wlbound {

// 128-bit content digest. Ordered by (hi, lo).
struct ColorId {
  uint64_t hi = 0;
  uint64_t lo = 0;
  auto operator<=>(const ColorId&) const = default;

  std::string Hex() const;
};

struct ColorIdHash {
  size_t operator()(const ColorId& c) const { return c.lo ^ (c.hi * 31); }
};

// Accumulates a byte key and digests it with seedless XXH3-128.
class KeyBuilder {
 public:
  explicit KeyBuilder(uint8_t tag) { buf_.push_back(static_cast<char>(tag)); }

  KeyBuilder& Add(const ColorId& c) {
    AddU64(c.hi);
    AddU64(c.lo);
    return *this;
  }
  KeyBuilder& AddU64(uint64_t x) {
    char bytes[8];
    for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>(x >> (8 * i));
    buf_.append(bytes, 8);
    return *this;
  }
  // Length-prefixed so that token boundaries are part of the key.
  KeyBuilder& AddString(std::string_view s) {
    AddU64(s.size());
    buf_.append(s);
    return *this;
  }
  KeyBuilder& AddColors(std::span<const ColorId> cs) {
    AddU64(cs.size());
    for (const ColorId& c : cs) Add(c);
    return *this;
  }
  void Clear(uint8_t tag) {
    buf_.clear();
    buf_.push_back(static_cast<char>(tag));
  }

  ColorId Digest() const;

 private:
  std::string buf_;
};

ColorId DigestBytes(std::string_view bytes);

// Digest of the ascending-sorted colors; the input is copied.
ColorId SortedDigest(uint8_t tag, std::vector<ColorId> colors);

// Key tags keep distinct key families from colliding.
namespace tag {
inline constexpr uint8_t kAttrTuple = 1;
inline constexpr uint8_t kRefine = 2;
inline constexpr uint8_t kRefineEdge = 3;
inline constexpr uint8_t kCertificate = 4;
inline constexpr uint8_t kAtomicPair = 5;
inline constexpr uint8_t kTupleInit = 6;
inline constexpr uint8_t kTupleRefine = 7;
inline constexpr uint8_t kFolkloreRefine = 8;
inline constexpr uint8_t kLink = 9;
inline constexpr uint8_t kEdgePair = 10;
}  // namespace tag

}  // namespace wlbound

#endif  // WLBOUND_DIGEST_H_

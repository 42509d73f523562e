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

#include "wlbound/digest.h"

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#define XXH_INLINE_ALL
#include "xxhash.h"

namespace wlbound {

std::string ColorId::Hex() const {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%016llx%016llx",
                static_cast<unsigned long long>(hi),
                static_cast<unsigned long long>(lo));
  return buf;
}

ColorId DigestBytes(std::string_view bytes) {
  XXH128_hash_t h = XXH3_128bits(bytes.data(), bytes.size());
  return ColorId{h.high64, h.low64};
}

ColorId KeyBuilder::Digest() const { return DigestBytes(buf_); }

ColorId SortedDigest(uint8_t tag, std::vector<ColorId> colors) {
  std::sort(colors.begin(), colors.end());
  KeyBuilder key(tag);
  key.AddColors(colors);
  return key.Digest();
}

}  // namespace wlbound

// Copyright 2026 The ctxlem Authors
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

#include "ctxlem/unicode.hpp"

#include <algorithm>
#include <cstdint>

#include "ctxlem/error.hpp"

namespace ctxlem {
namespace {

struct DecompEntry {
  char32_t cp;
  std::uint32_t offset;
  std::uint32_t len;
};
struct CompEntry {
  std::uint64_t key;  // first << 32 | second
  char32_t composed;
};
struct CccEntry {
  char32_t cp;
  std::uint8_t ccc;
};
struct CpRange {
  char32_t lo;
  char32_t hi;
};

#include "generated/unicode_tables.inc"

// Hangul syllable composition constants (UAX #15).
constexpr char32_t kSBase = 0xAC00, kLBase = 0x1100, kVBase = 0x1161,
                   kTBase = 0x11A7;
constexpr int kLCount = 19, kVCount = 21, kTCount = 28;
constexpr int kNCount = kVCount * kTCount;
constexpr int kSCount = kLCount * kNCount;

const DecompEntry* find_decomp(char32_t cp) {
  auto it = std::lower_bound(
      std::begin(kDecomp), std::end(kDecomp), cp,
      [](const DecompEntry& e, char32_t v) { return e.cp < v; });
  return (it != std::end(kDecomp) && it->cp == cp) ? &*it : nullptr;
}

int combining_class(char32_t cp) {
  auto it =
      std::lower_bound(std::begin(kCcc), std::end(kCcc), cp,
                       [](const CccEntry& e, char32_t v) { return e.cp < v; });
  return (it != std::end(kCcc) && it->cp == cp) ? it->ccc : 0;
}

char32_t compose_pair(char32_t a, char32_t b) {
  // Hangul L+V and LV+T compose algorithmically.
  if (a >= kLBase && a < kLBase + kLCount && b >= kVBase &&
      b < kVBase + kVCount) {
    return kSBase + ((a - kLBase) * kVCount + (b - kVBase)) * kTCount;
  }
  if (a >= kSBase && a < kSBase + kSCount && (a - kSBase) % kTCount == 0 &&
      b > kTBase && b < kTBase + kTCount) {
    return a + (b - kTBase);
  }
  const std::uint64_t key =
      (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
  auto it = std::lower_bound(
      std::begin(kComp), std::end(kComp), key,
      [](const CompEntry& e, std::uint64_t v) { return e.key < v; });
  return (it != std::end(kComp) && it->key == key) ? it->composed : 0;
}

void decompose_into(char32_t cp, std::vector<char32_t>& out) {
  if (cp >= kSBase && cp < kSBase + kSCount) {
    const int index = static_cast<int>(cp - kSBase);
    out.push_back(kLBase + index / kNCount);
    out.push_back(kVBase + (index % kNCount) / kTCount);
    if (index % kTCount) out.push_back(kTBase + index % kTCount);
    return;
  }
  if (const DecompEntry* e = find_decomp(cp)) {
    for (std::uint32_t i = 0; i < e->len; ++i)
      out.push_back(kDecompPool[e->offset + i]);
    return;
  }
  out.push_back(cp);
}

bool in_ranges(const CpRange* begin, const CpRange* end, char32_t cp) {
  auto it = std::upper_bound(
      begin, end, cp, [](char32_t v, const CpRange& r) { return v < r.lo; });
  return it != begin && cp <= (it - 1)->hi;
}

}  // namespace

std::vector<char32_t> decode_utf8(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char b0 = static_cast<unsigned char>(s[i]);
    char32_t cp = 0;
    std::size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      throw DecodeError("invalid UTF-8 lead byte", i);
    }
    if (i + len > s.size()) throw DecodeError("truncated UTF-8 sequence", i);
    for (std::size_t k = 1; k < len; ++k) {
      const unsigned char b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80)
        throw DecodeError("invalid UTF-8 continuation byte", i + k);
      cp = (cp << 6) | (b & 0x3F);
    }
    static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (len > 1 && cp < kMin[len])
      throw DecodeError("overlong UTF-8 sequence", i);
    if (cp >= 0xD800 && cp <= 0xDFFF)
      throw DecodeError("UTF-8 encoded surrogate", i);
    if (cp > 0x10FFFF) throw DecodeError("codepoint out of range", i);
    out.push_back(cp);
    i += len;
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode_utf8(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append_utf8(out, cp);
  return out;
}

std::vector<char32_t> to_nfc(const std::vector<char32_t>& cps) {
  // Codepoints below U+0300 have no combining marks, no decompositions that
  // fail to recompose, and nothing that composes with a preceding starter.
  bool trivial = true;
  for (char32_t cp : cps) {
    if (cp >= 0x300) {
      trivial = false;
      break;
    }
  }
  if (trivial) return cps;

  // 1. Full canonical decomposition.
  std::vector<char32_t> buf;
  buf.reserve(cps.size() + 8);
  for (char32_t cp : cps) decompose_into(cp, buf);

  // 2. Canonical ordering: stable sort of nonzero-ccc runs by ccc.
  for (std::size_t i = 1; i < buf.size(); ++i) {
    const int ccc = combining_class(buf[i]);
    if (ccc == 0) continue;
    std::size_t j = i;
    while (j > 0 && combining_class(buf[j - 1]) > ccc) {
      std::swap(buf[j - 1], buf[j]);
      --j;
    }
  }

  // 3. Canonical composition (UAX #15 algorithm). prev_ccc is the combining
  // class of the last retained codepoint after the starter; -1 means the
  // candidate directly follows the starter, so it is never blocked.
  std::vector<char32_t> out;
  out.reserve(buf.size());
  std::ptrdiff_t last_starter = -1;
  int prev_ccc = -1;
  for (char32_t cp : buf) {
    const int ccc = combining_class(cp);
    if (last_starter >= 0 && prev_ccc < ccc) {
      if (char32_t comp = compose_pair(out[last_starter], cp)) {
        out[last_starter] = comp;
        continue;  // prev_ccc unchanged: the composed mark is removed
      }
    }
    out.push_back(cp);
    if (ccc == 0) {
      last_starter = static_cast<std::ptrdiff_t>(out.size()) - 1;
      prev_ccc = -1;
    } else {
      prev_ccc = ccc;
    }
  }
  return out;
}

std::string to_nfc(std::string_view utf8) {
  return encode_utf8(to_nfc(decode_utf8(utf8)));
}

std::vector<std::string> nfc_characters(std::string_view utf8) {
  std::vector<char32_t> cps = to_nfc(decode_utf8(utf8));
  std::vector<std::string> out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    std::string ch;
    append_utf8(ch, cp);
    out.push_back(std::move(ch));
  }
  return out;
}

bool is_uppercase(char32_t cp) {
  return in_ranges(std::begin(kUppercase), std::end(kUppercase), cp);
}

bool is_digit(char32_t cp) {
  return in_ranges(std::begin(kDigit), std::end(kDigit), cp);
}

bool is_punct(char32_t cp) {
  return in_ranges(std::begin(kPunct), std::end(kPunct), cp);
}

}  // namespace ctxlem

#!/usr/bin/env python3
"""Regenerates src/generated/unicode_tables.inc from the Python unicodedata
database. Run from the repository root:

    python3 scripts/gen_unicode_tables.py > src/generated/unicode_tables.inc

The tables cover canonical (NFC/NFD) normalization data plus the general
category ranges the tokenizer and sentence splitter need. Hangul syllables
are intentionally absent from the decomposition/composition tables; the C++
side handles them algorithmically.
"""

import sys
import unicodedata

HANGUL_S_BASE = 0xAC00
HANGUL_S_COUNT = 11172


def is_hangul_syllable(cp):
    return HANGUL_S_BASE <= cp < HANGUL_S_BASE + HANGUL_S_COUNT


def canonical_decomposition(cp):
    """One-level canonical decomposition, or None."""
    if is_hangul_syllable(cp):
        return None
    d = unicodedata.decomposition(chr(cp))
    if not d or d.startswith("<"):
        return None
    return [int(x, 16) for x in d.split()]


def full_decomposition(cp, memo):
    if cp in memo:
        return memo[cp]
    d = canonical_decomposition(cp)
    if d is None:
        memo[cp] = [cp]
        return memo[cp]
    out = []
    for part in d:
        out.extend(full_decomposition(part, memo))
    memo[cp] = out
    return out


def ranges_of(predicate):
    out = []
    start = None
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            ok = False
        else:
            ok = predicate(cp)
        if ok and start is None:
            start = cp
        elif not ok and start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, 0x10FFFF))
    return out


def main():
    memo = {}
    decomp_entries = []  # (cp, offset, len)
    pool = []
    comp_pairs = []  # (first, second, composed)
    ccc_entries = []  # (cp, ccc)

    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        ccc = unicodedata.combining(chr(cp))
        if ccc:
            ccc_entries.append((cp, ccc))
        d = canonical_decomposition(cp)
        if d is None:
            continue
        full = full_decomposition(cp, memo)
        decomp_entries.append((cp, len(pool), len(full)))
        pool.extend(full)
        if len(d) == 2:
            # Primary composite iff NFC recombines the pair into cp.
            if unicodedata.normalize("NFC", chr(d[0]) + chr(d[1])) == chr(cp):
                comp_pairs.append((d[0], d[1], cp))

    comp_pairs.sort(key=lambda t: (t[0], t[1]))

    upper = ranges_of(lambda cp: unicodedata.category(chr(cp)) == "Lu")
    digit = ranges_of(lambda cp: unicodedata.category(chr(cp)) == "Nd")
    punct = ranges_of(lambda cp: unicodedata.category(chr(cp)).startswith("P"))

    w = sys.stdout.write
    w("// Generated by scripts/gen_unicode_tables.py (unicodedata %s). Do not edit.\n"
      % unicodedata.unidata_version)
    w("// clang-format off\n")

    w("static const DecompEntry kDecomp[] = {\n")
    for cp, off, ln in decomp_entries:
        w("  {0x%X,%d,%d},\n" % (cp, off, ln))
    w("};\n")

    w("static const char32_t kDecompPool[] = {\n")
    for i in range(0, len(pool), 16):
        w("  " + ",".join("0x%X" % c for c in pool[i:i + 16]) + ",\n")
    w("};\n")

    w("static const CompEntry kComp[] = {\n")
    for a, b, c in comp_pairs:
        w("  {0x%XULL<<32|0x%X,0x%X},\n" % (a, b, c))
    w("};\n")

    w("static const CccEntry kCcc[] = {\n")
    for cp, ccc in ccc_entries:
        w("  {0x%X,%d},\n" % (cp, ccc))
    w("};\n")

    for name, rng in (("kUppercase", upper), ("kDigit", digit), ("kPunct", punct)):
        w("static const CpRange %s[] = {\n" % name)
        for lo, hi in rng:
            w("  {0x%X,0x%X},\n" % (lo, hi))
        w("};\n")

    w("// clang-format on\n")


if __name__ == "__main__":
    main()

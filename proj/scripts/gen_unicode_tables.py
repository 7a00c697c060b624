#!/usr/bin/env python3
# Copyright 2026 The namematch Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates include/namematch/detail/unicode_data.hpp from Python's
unicodedata module.

Emitted tables:
  - canonical decompositions (1- or 2-codepoint, Hangul excluded; Hangul is
    handled algorithmically in C++)
  - canonical combining classes, range-compressed
  - primary composition pairs (composition exclusions filtered out by
    round-tripping through unicodedata.normalize)
  - simple one-to-one lowercase mappings

Run from the repository root:
    python3 scripts/gen_unicode_tables.py > include/namematch/detail/unicode_data.hpp
"""

import sys
import unicodedata

MAX_CP = 0x110000
HANGUL_S_BASE = 0xAC00
HANGUL_S_COUNT = 11172


def is_hangul_syllable(cp: int) -> bool:
    return HANGUL_S_BASE <= cp < HANGUL_S_BASE + HANGUL_S_COUNT


def canonical_decompositions():
    out = []
    for cp in range(MAX_CP):
        if is_hangul_syllable(cp):
            continue
        d = unicodedata.decomposition(chr(cp))
        if not d or d.startswith("<"):
            continue  # none, or a compatibility decomposition
        parts = [int(p, 16) for p in d.split()]
        if len(parts) == 1:
            out.append((cp, parts[0], 0))
        elif len(parts) == 2:
            out.append((cp, parts[0], parts[1]))
        else:
            raise AssertionError(f"canonical decomposition with >2 parts: {cp:X}")
    return out


def combining_class_ranges():
    ranges = []
    start = None
    prev_ccc = 0
    for cp in range(MAX_CP):
        ccc = unicodedata.combining(chr(cp))
        if ccc != prev_ccc:
            if prev_ccc != 0:
                ranges.append((start, cp - 1, prev_ccc))
            start = cp
            prev_ccc = ccc
    if prev_ccc != 0:
        ranges.append((start, MAX_CP - 1, prev_ccc))
    return ranges


def composition_pairs(decomps):
    pairs = []
    for cp, a, b in decomps:
        if b == 0:
            continue  # singleton decompositions never recompose
        if unicodedata.combining(chr(a)) != 0:
            continue  # non-starter decomposition
        # Composition exclusions (and anything else NFC keeps decomposed)
        # round-trip to the decomposed form, not back to cp.
        if unicodedata.normalize("NFC", chr(a) + chr(b)) != chr(cp):
            continue
        pairs.append((a, b, cp))
    pairs.sort()
    return pairs


def lowercase_mappings():
    out = []
    for cp in range(MAX_CP):
        lo = chr(cp).lower()
        if len(lo) == 1 and ord(lo) != cp:
            out.append((cp, ord(lo)))
    return out


def emit(rows, name, cols, out):
    out.write(f"inline constexpr uint32_t {name}[][{cols}] = {{\n")
    for i in range(0, len(rows), 6):
        chunk = rows[i : i + 6]
        line = ", ".join("{" + ",".join(f"0x{v:X}" for v in r) + "}" for r in chunk)
        out.write("    " + line + ",\n")
    out.write("};\n\n")


def main():
    out = sys.stdout
    decomps = canonical_decompositions()
    ccc = combining_class_ranges()
    comps = composition_pairs(decomps)
    lowers = lowercase_mappings()

    out.write(
        "// Copyright 2026 The namematch Authors\n"
        "//\n"
        '// Licensed under the Apache License, Version 2.0 (the "License");\n'
        "// you may not use this file except in compliance with the License.\n"
        "// You may obtain a copy of the License at\n"
        "//\n"
        "//     http://www.apache.org/licenses/LICENSE-2.0\n"
        "//\n"
        "// Unless required by applicable law or agreed to in writing, software\n"
        '// distributed under the License is distributed on an "AS IS" BASIS,\n'
        "// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.\n"
        "// See the License for the specific language governing permissions and\n"
        "// limitations under the License.\n"
        "\n"
        "// Generated by scripts/gen_unicode_tables.py -- do not edit by hand.\n"
        f"// Unicode character database version {unicodedata.unidata_version}.\n"
        "\n"
        "#ifndef NAMEMATCH_DETAIL_UNICODE_DATA_HPP\n"
        "#define NAMEMATCH_DETAIL_UNICODE_DATA_HPP\n"
        "\n"
        "#include <cstdint>\n"
        "\n"
        "namespace namematch::detail {\n"
        "\n"
    )
    out.write("// {codepoint, first, second}; second==0 marks a singleton.\n")
    emit(decomps, "kCanonicalDecomp", 3, out)
    out.write("// {first, last, combining class}; zero-class ranges omitted.\n")
    emit(ccc, "kCombiningClassRanges", 3, out)
    out.write("// {starter, combiner, composite}, sorted; exclusions filtered.\n")
    emit(comps, "kCompositionPairs", 3, out)
    out.write("// {upper, lower}; only one-to-one mappings.\n")
    emit(lowers, "kSimpleLowercase", 2, out)
    out.write("}  // namespace namematch::detail\n\n#endif  // NAMEMATCH_DETAIL_UNICODE_DATA_HPP\n")


if __name__ == "__main__":
    main()

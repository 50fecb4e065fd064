"""Independent reference calculators used to freeze expected test values.

Each oracle is written from the published definition it implements (WCAG 2.1
relative luminance, the Flesch-Kincaid grade formula, the Mann-Whitney null
distribution) and deliberately shares no code with the package under test.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from itertools import combinations

# --- WCAG 2.1 contrast -------------------------------------------------------


def wcag_relative_luminance(hex_color: str) -> float:
    raw = hex_color.lstrip("#")
    channels = [int(raw[i : i + 2], 16) / 255.0 for i in (0, 2, 4)]
    linear = [
        c / 12.92 if c <= 0.03928 else ((c + 0.055) / 1.055) ** 2.4 for c in channels
    ]
    r, g, b = linear
    return 0.2126 * r + 0.7152 * g + 0.0722 * b


def wcag_contrast(color_a: str, color_b: str) -> float:
    la = wcag_relative_luminance(color_a)
    lb = wcag_relative_luminance(color_b)
    lighter, darker = max(la, lb), min(la, lb)
    return (lighter + 0.05) / (darker + 0.05)


# --- Flesch-Kincaid grade ----------------------------------------------------

# Word: maximal run of alphanumerics/apostrophes containing at least one
# alphanumeric. Sentence: terminator-delimited segment containing >= 1 word.
_WORD_RE = re.compile(r"[^\W_]+(?:['’][^\W_]+)*", re.UNICODE)
_VOWEL_RUN_RE = re.compile(r"[aeiouy]+")


def oracle_words(text: str) -> list[str]:
    return _WORD_RE.findall(text)


def oracle_sentence_count(text: str) -> int:
    segments = re.split(r"[.!?]", text)
    return sum(1 for seg in segments if _WORD_RE.search(seg))


def oracle_syllables(word: str) -> int:
    bare = word.lower().replace("'", "").replace("’", "")
    groups = _VOWEL_RUN_RE.findall(bare)
    count = len(groups)
    if bare.endswith("e") and not bare.endswith("le") and count > 0:
        count -= 1
    return max(1, count)


def oracle_fk_grade(text: str) -> float:
    words = oracle_words(text)
    sentences = oracle_sentence_count(text)
    if not words or sentences == 0:
        raise ValueError("no words")
    syllables = sum(oracle_syllables(w) for w in words)
    raw = 0.39 * (len(words) / sentences) + 11.8 * (syllables / len(words)) - 15.59
    return max(0.0, raw)


# --- Exact Mann-Whitney ------------------------------------------------------


def _midranks(pooled: list[float]) -> list[Fraction]:
    order = sorted(range(len(pooled)), key=lambda i: pooled[i])
    ranks: list[Fraction] = [Fraction(0)] * len(pooled)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and pooled[order[j + 1]] == pooled[order[i]]:
            j += 1
        shared = Fraction(i + 1 + j + 1, 2)
        for k in range(i, j + 1):
            ranks[order[k]] = shared
        i = j + 1
    return ranks


def mwu_oracle(xs: list[float], ys: list[float]) -> tuple[float, float]:
    """Brute-force exact two-sided Mann-Whitney by subset enumeration."""
    n1, n2 = len(xs), len(ys)
    pooled = list(xs) + list(ys)
    ranks = _midranks(pooled)
    r1_obs = sum(ranks[:n1], Fraction(0))
    u1_obs = r1_obs - Fraction(n1 * (n1 + 1), 2)
    u2_obs = Fraction(n1 * n2) - u1_obs

    total = 0
    count_le = 0
    count_ge = 0
    for subset in combinations(range(n1 + n2), n1):
        u1 = sum((ranks[i] for i in subset), Fraction(0)) - Fraction(n1 * (n1 + 1), 2)
        total += 1
        if u1 <= u1_obs:
            count_le += 1
        if u1 >= u1_obs:
            count_ge += 1
    p = 2 * Fraction(min(count_le, count_ge), total)
    p = min(p, Fraction(1))
    return float(min(u1_obs, u2_obs)), float(p)


def normal_sf(z: float) -> float:
    return 0.5 * math.erfc(z / math.sqrt(2.0))

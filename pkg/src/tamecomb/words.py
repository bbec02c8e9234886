"""Words over the generators of F.

A letter is a pair ``(index, exponent)`` where ``index`` 0 and 1 are the finite
generators x0, x1 and ``index >= 2`` is the infinite-presentation generator
x_index.  The exponent is +1 or -1.  A word is a tuple of letters.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

Letter = tuple[int, int]
Word = tuple[Letter, ...]

X0: Letter = (0, 1)
X0_INV: Letter = (0, -1)
X1: Letter = (1, 1)
X1_INV: Letter = (1, -1)
FINITE_LETTERS: tuple[Letter, ...] = (X0, X0_INV, X1, X1_INV)

_TOKEN = re.compile(r"^x(\d+)(?:\^(-?\d+))?$")


class WordSyntaxError(ValueError):
    """Raised for malformed element literals."""


def parse_word(text: str) -> Word:
    """Parse ``"x0 x1^-1 x5^-2"`` into a word, expanding integer powers.

    ``"e"``, ``"1"`` and the empty string all denote the empty word.
    """
    letters: list[Letter] = []
    for col, token in _tokens(text.replace(",", " ")):
        if token in ("e", "1", "eps"):
            continue
        m = _TOKEN.match(token)
        if m is None:
            raise WordSyntaxError(f"bad generator token {token!r} at column {col}")
        index = int(m.group(1))
        power = int(m.group(2)) if m.group(2) is not None else 1
        if power == 0:
            continue
        sign = 1 if power > 0 else -1
        letters.extend([(index, sign)] * abs(power))
    return tuple(letters)


def _tokens(text: str):
    """Whitespace-separated tokens with their 1-based columns."""
    for m in re.finditer(r"\S+", text):
        yield m.start() + 1, m.group()


def format_word(word: Sequence[Letter]) -> str:
    """Render a word, collapsing runs: ``x0^-2 x1``.  Empty word is ``e``."""
    if not word:
        return "e"
    parts = []
    i = 0
    while i < len(word):
        index, sign = word[i]
        run = 1
        while i + run < len(word) and word[i + run] == word[i]:
            run += 1
        power = sign * run
        parts.append(f"x{index}" if power == 1 else f"x{index}^{power}")
        i += run
    return " ".join(parts)


def inverse(word: Sequence[Letter]) -> Word:
    return tuple((g, -e) for g, e in reversed(word))


def free_reduce(word: Iterable[Letter]) -> Word:
    """Cancel adjacent inverse pairs until none remain (single stack pass)."""
    stack: list[Letter] = []
    for g, e in word:
        if stack and stack[-1] == (g, -e):
            stack.pop()
        else:
            stack.append((g, e))
    return tuple(stack)


def expand_infinite(word: Iterable[Letter]) -> Word:
    """Rewrite x_i (i >= 2) as x0^-(i-1) x1 x0^(i-1)."""
    out: list[Letter] = []
    for g, e in word:
        if g <= 1:
            out.append((g, e))
        else:
            k = g - 1
            out.extend([X0_INV] * k)
            out.append((1, e))
            out.extend([X0] * k)
    return tuple(out)


def x0_exponent_sums(word: Sequence[Letter]) -> list[int]:
    """Running x0-exponent sum after each prefix (length len(word))."""
    sums = []
    total = 0
    for g, e in word:
        if g == 0:
            total += e
        sums.append(total)
    return sums

"""Brute-force tableau oracle for unrestricted Kostka polynomials.

Semistandard tableaux on two-row shapes are enumerated directly and graded by
the Lascoux-Schutzenberger charge statistic; the generating function is the
Kostka-Foulkes polynomial, and a degree reversal bridges it to the
weight-indexed polynomials the production routes compute. Everything here is
deliberately naive: it is the independent check, not the fast path.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .compositions import (
    CompositionLike,
    ShapeContent,
    as_composition,
    bridge_to_partition,
    norm_ss,
    weighted_size,
)
from .qexact import QPolynomial

Tableau = tuple[tuple[int, ...], tuple[int, ...]]


def enumerate_ssyt(sc: ShapeContent) -> list[Tableau]:
    """All semistandard tableaux of the given two-row shape and content.

    content[v-1] is the number of entries equal to v. Rows weakly increase,
    columns strictly increase. Returns [] when the counts cannot fill the
    shape.
    """
    len1, len2 = sc.shape
    counts = list(sc.content)
    if sum(counts) != len1 + len2:
        return []
    letters = len(counts)
    results: list[Tableau] = []
    row1 = [0] * len1
    row2 = [0] * len2

    def fill_row1(i: int) -> None:
        if i == len1:
            fill_row2(0)
            return
        lo = row1[i - 1] if i else 1
        for v in range(lo, letters + 1):
            if counts[v - 1]:
                counts[v - 1] -= 1
                row1[i] = v
                fill_row1(i + 1)
                counts[v - 1] += 1

    def fill_row2(i: int) -> None:
        if i == len2:
            results.append((tuple(row1), tuple(row2)))
            return
        lo = max(row2[i - 1] if i else 1, row1[i] + 1)
        for v in range(lo, letters + 1):
            if counts[v - 1]:
                counts[v - 1] -= 1
                row2[i] = v
                fill_row2(i + 1)
                counts[v - 1] += 1

    fill_row1(0)
    return results


def reading_word(t: Tableau) -> tuple[int, ...]:
    # Bottom row first, each row left to right; any consistent convention
    # gives the same generating function, this one is fixed for determinism.
    return t[1] + t[0]


def charge(word: Sequence[int]) -> int:
    """Charge of a word with partition content.

    Standard subwords are extracted repeatedly: take the rightmost 1, then
    scan cyclically leftward for the first 2, then the first 3, and so on.
    Within a subword the letter r+1 contributes index(r)+1 when it sits to
    the right of the chosen r and index(r) otherwise, starting from
    index(1) = 0. The charge is the sum of all indices over all subwords.
    """
    if not word:
        return 0
    maxletter = max(word)
    counts = [0] * maxletter
    for v in word:
        if v < 1:
            raise ValueError("letters must be positive")
        counts[v - 1] += 1
    if any(counts[i] < counts[i + 1] for i in range(maxletter - 1)):
        raise ValueError("charge needs partition content")

    remaining = list(word)
    total = 0
    while remaining:
        n = len(remaining)
        pos = max(i for i in range(n) if remaining[i] == 1)
        chosen = [pos]
        letter = 2
        while letter <= max(remaining):
            found = -1
            for step in range(1, n):
                i = (pos - step) % n
                if remaining[i] == letter:
                    found = i
                    break
            if found < 0:
                break
            chosen.append(found)
            pos = found
            letter += 1
        index = 0
        for a in range(1, len(chosen)):
            if chosen[a] > chosen[a - 1]:
                index += 1
            total += index
        for i in sorted(chosen, reverse=True):
            del remaining[i]
    return total


def kostka_foulkes(sc: ShapeContent) -> QPolynomial:
    """Sum of q**charge over all semistandard tableaux of the shape/content."""
    out = QPolynomial.zero()
    for t in enumerate_ssyt(sc):
        out = out + QPolynomial.q_power(charge(reading_word(t)))
    return out


@lru_cache(maxsize=None)
def _oracle_cached(l: int, parts: tuple[int, ...]) -> QPolynomial:
    m = as_composition(parts)
    size = weighted_size(m)
    if l < 0 or l > size or (size - l) % 2:
        return QPolynomial.zero()
    sc = bridge_to_partition(m, l)
    kf = kostka_foulkes(sc)
    out = kf.substitute_inverse().shifted(norm_ss(m))
    if not out.is_zero() and out.min_exponent() < 0:
        raise AssertionError("reversal produced a negative exponent")
    return out


def kostka_sl2_oracle(l: int, m: CompositionLike) -> QPolynomial:
    """Unrestricted Kostka polynomial K_{l,m} from the tableau model.

    Zero when the weight is out of range or has the wrong parity; otherwise
    q**norm times the degree-reversed Kostka-Foulkes polynomial of the
    bridged shape and content.
    """
    return _oracle_cached(l, as_composition(m).trimmed().parts)

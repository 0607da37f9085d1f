"""Multiplicity-vector combinatorics for fusion products.

A composition m = (m_1, ..., m_k) records how many factors of each spin enter
a fusion product: m_a copies of the (a+1)-dimensional evaluation module. The
statistics here (weighted size, the min-form, the norm, the suffix-parity
count, the top degree) all feed the Kostka-polynomial routes, and the bridge
turns (l, m) into the two-row shape/content pair the tableau oracle consumes.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class InvalidWeightError(ValueError):
    """Raised when a weight is incompatible with a composition (parity/range)."""


class Composition:
    """Immutable vector of nonnegative multiplicities m_1..m_k."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        if len(parts) == 0:
            parts = (0,)
        if any(p < 0 for p in parts):
            raise ValueError("multiplicities must be nonnegative")
        self.parts = parts

    @property
    def width(self) -> int:
        return len(self.parts)

    def padded(self, width: int) -> "Composition":
        if width < len(self.parts):
            raise ValueError("cannot pad to a smaller width")
        return Composition(self.parts + (0,) * (width - len(self.parts)))

    def trimmed(self) -> "Composition":
        """Drop trailing zero multiplicities (keeping width at least 1)."""
        parts = list(self.parts)
        while len(parts) > 1 and parts[-1] == 0:
            parts.pop()
        return Composition(parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Composition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __repr__(self) -> str:
        return f"Composition({list(self.parts)})"


CompositionLike = Composition | Sequence[int]


def as_composition(m: CompositionLike) -> Composition:
    return m if isinstance(m, Composition) else Composition(m)


def composition_from_factors(factors: Iterable[int]) -> Composition:
    """Build the multiplicity vector from a list of factor spins.

    composition_from_factors([1, 1, 1, 1]) is (4,): four spin-1 factors.
    composition_from_factors([1, 1, 2]) is (2, 1).
    """
    factors = list(factors)
    if not factors:
        return Composition((0,))
    if any(a < 1 for a in factors):
        raise ValueError("factor spins must be positive integers")
    width = max(factors)
    parts = [0] * width
    for a in factors:
        parts[a - 1] += 1
    return Composition(parts)


def parse_factor_list(text: str) -> Composition:
    """Parse a comma-separated factor list such as "2,1" or "1^4,2".

    Each entry names one factor by its spin; "a^e" repeats spin a e times,
    so "1^4,2" means four spin-1 factors and one spin-2 factor. The result
    is the multiplicity vector of the multiset.
    """
    factors: list[int] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            raise ValueError(f"empty entry in factor list {text!r}")
        if "^" in token:
            base_s, _, count_s = token.partition("^")
            base, count = int(base_s), int(count_s)
            if count < 0:
                raise ValueError(f"negative repeat in {token!r}")
            factors.extend([base] * count)
        else:
            factors.append(int(token))
    return composition_from_factors(factors)


def weighted_size(m: CompositionLike) -> int:
    """|m| = sum_a a*m_a, the total number of boxes (spins counted with weight)."""
    parts = as_composition(m).parts
    return sum(a * p for a, p in enumerate(parts, start=1))


def min_form(m: CompositionLike, n: CompositionLike) -> int:
    """The bilinear form sum_{a,b} min(a,b) m_a n_b on equal-width vectors."""
    mp = as_composition(m).parts
    np_ = as_composition(n).parts
    if len(mp) != len(np_):
        raise ValueError("width mismatch in min form")
    total = 0
    for a, ma in enumerate(mp, start=1):
        if ma == 0:
            continue
        for b, nb in enumerate(np_, start=1):
            if nb:
                total += min(a, b) * ma * nb
    return total

def norm_ss(m: CompositionLike) -> int:
    """The norm with 2*norm = -|m| + mAm; always an even difference."""
    c = as_composition(m)
    twice = -weighted_size(c) + min_form(c, c)
    assert twice % 2 == 0, "mAm - |m| must be even"
    return twice // 2


def parity_count(m: CompositionLike) -> int:
    """Number of positions a whose suffix sum m_a + ... + m_k is odd."""
    parts = as_composition(m).parts
    count = 0
    suffix = 0
    for p in reversed(parts):
        suffix += p
        if suffix % 2:
            count += 1
    return count


def top_degree_h(m: CompositionLike) -> int:
    """h(m) = (mAm - p(m))/4, the top q-degree of the fusion product.

    The difference is always divisible by 4; that integrality is itself one
    of the tested invariants, so it is asserted here.
    """
    c = as_composition(m)
    num = min_form(c, c) - parity_count(c)
    assert num % 4 == 0, "mAm - p(m) must be divisible by 4"
    return num // 4


class ShapeContent:
    """A two-row shape with a partition content vector for the tableau oracle."""

    __slots__ = ("shape", "content")

    def __init__(self, shape: Sequence[int], content: Sequence[int]):
        shape = tuple(int(x) for x in shape)
        content = tuple(int(x) for x in content)
        if len(shape) != 2 or shape[0] < shape[1] or shape[1] < 0:
            raise ValueError("shape must be a two-row partition")
        if sum(shape) != sum(content):
            raise ValueError("content size must match the shape")
        self.shape = shape
        self.content = content

    def __eq__(self, other) -> bool:
        if not isinstance(other, ShapeContent):
            return NotImplemented
        return self.shape == other.shape and self.content == other.content

    def __hash__(self) -> int:
        return hash((self.shape, self.content))

    def __repr__(self) -> str:
        return f"ShapeContent(shape={self.shape}, content={self.content})"


def bridge_to_partition(m: CompositionLike, l: int) -> ShapeContent:
    """Translate (weight l, composition m) to the shape/content of the tableau model.

    The shape is ((|m|+l)/2, (|m|-l)/2) and the content lists the factor
    spins in weakly decreasing order, so m = (2, 1) gives content (2, 1, 1).
    """
    c = as_composition(m)
    size = weighted_size(c)
    if l < 0 or l > size or (size - l) % 2:
        raise InvalidWeightError(f"weight {l} invalid for |m| = {size}")
    shape = ((size + l) // 2, (size - l) // 2)
    content: list[int] = []
    for a in range(len(c.parts), 0, -1):
        content.extend([a] * c.parts[a - 1])
    return ShapeContent(shape, tuple(content))

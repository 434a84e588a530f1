"""Integer partitions and their binary boundary words.

Words are plain ``str`` objects over ``"01"``, read left to right exactly as
they are printed: a ``0`` for every column step and a ``1`` for every row step
of the Young diagram boundary, traversed clockwise.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator


class PartitionError(ValueError):
    pass


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    >>> Partition((8, 6, 4, 3)).size()
    21
    >>> str(Partition((4, 2)))
    '4,2'
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise PartitionError(f"part {p!r} is not an integer")
            if p < 1:
                raise PartitionError(f"part {p} is not positive")
        for prev, nxt in zip(parts, parts[1:]):
            if nxt > prev:
                raise PartitionError(f"parts not weakly decreasing at {nxt}")
        return super().__new__(cls, parts)

    def size(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def first(self) -> int:
        """Largest part, 0 for the empty partition."""
        return self[0] if self else 0

    def multiplicities(self) -> dict[int, int]:
        """Map part -> number of occurrences (the exponent form 1^m1 2^m2 ...)."""
        return dict(sorted(Counter(self).items()))

    def part(self, i: int) -> int:
        """The i-th part (0-based), 0 beyond the length."""
        return self[i] if i < len(self) else 0

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(b <= a for a, b in zip(self, other))

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


EMPTY = Partition()


def parse_partition(text: str) -> Partition:
    """Parse ``"8,6,4,3"`` into a partition; the empty string gives the empty partition."""
    text = text.strip()
    if not text:
        return EMPTY
    parts = []
    for token in text.split(","):
        token = token.strip()
        if not token.isdigit():
            raise PartitionError(f"invalid part {token!r}: not a positive integer")
        value = int(token)
        if value < 1:
            raise PartitionError(f"invalid part {token!r}: not a positive integer")
        if parts and value > parts[-1]:
            raise PartitionError(f"parts not weakly decreasing at {token!r}")
        parts.append(value)
    return Partition(parts)


def parse_content(text: str) -> tuple[int, ...]:
    """Parse a comma-separated sequence of positive integers in any order."""
    text = text.strip()
    if not text:
        return ()
    content = []
    for token in text.split(","):
        token = token.strip()
        if not token.isdigit() or int(token) < 1:
            raise PartitionError(f"invalid content entry {token!r}: not a positive integer")
        content.append(int(token))
    return tuple(content)


def parse_word(text: str) -> str:
    text = text.strip()
    if set(text) - {"0", "1"}:
        raise PartitionError(f"word {text!r} contains characters other than 0 and 1")
    return text


def word(lam: Partition) -> str:
    """The boundary word of ``lam``: starts with 0, ends with 1, length lam_1 + len(lam)."""
    lam = Partition(lam)
    bits = []
    for i in range(len(lam) - 1, -1, -1):
        bits.append("0" * (lam[i] - lam.part(i + 1)))
        bits.append("1")
    return "".join(bits)


def shape_of(beta: str) -> Partition:
    """Shape of an arbitrary binary word: each 1 contributes a part equal to the 0s on its left."""
    parts = []
    zeros = 0
    for bit in beta:
        if bit == "0":
            zeros += 1
        elif zeros:
            parts.append(zeros)
    parts.reverse()
    return Partition(parts)


def normalize(beta: str) -> str:
    """Strip leading 1s and trailing 0s, giving the canonical word of the same shape."""
    return beta.lstrip("1").rstrip("0")


def pad_word(lam: Partition, ambient: Partition) -> str:
    """Word of ``lam`` padded to the width of ``ambient``'s word.

    Prepends ``len(ambient) - len(lam)`` ones and appends ``ambient_1 - lam_1`` zeros.
    """
    lam, ambient = Partition(lam), Partition(ambient)
    if not ambient.contains(lam):
        raise PartitionError(f"({lam}) does not fit inside ({ambient})")
    return "1" * (len(ambient) - len(lam)) + word(lam) + "0" * (ambient.first() - lam.first())


def _check_factor(d: int) -> None:
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"scale factor must be a positive integer, got {d!r}")


def dilate_parts(lam: Partition, d: int) -> Partition:
    """d.lam: every part multiplied by d."""
    _check_factor(d)
    return Partition(d * p for p in lam)


def subdivide(lam: Partition, d: int) -> Partition:
    """Cut every square into d x d squares: part p becomes d copies of d*p."""
    _check_factor(d)
    return Partition(d * p for p in lam for _ in range(d))


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order, (n) first and (1^n) last."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return tuple(Partition(p) for p in _partitions_bounded(n, n))


def compositions_of(n: int, step: int = 1) -> Iterator[tuple[int, ...]]:
    """All ordered sequences of positive multiples of ``step`` summing to n."""
    if n == 0:
        yield ()
        return
    for first in range(step, n + 1, step):
        for rest in compositions_of(n - first, step):
            yield (first,) + rest


def centralizer_order(mu: Partition) -> int:
    """z_mu = prod i^m_i * m_i!, the order of the centralizer of a permutation of cycle type mu."""
    return prod(i**m * factorial(m) for i, m in Partition(mu).multiplicities().items())


def class_size(mu: Partition) -> int:
    return factorial(sum(mu)) // centralizer_order(mu)

"""Rim hook removal on boundary words, rim hook tableaux and the tableau-sum character formula."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .partitions import EMPTY, Partition, shape_of, word


def hook_swaps(beta: str, k: int) -> Iterator[tuple[int, str, int]]:
    """Every swap of a 0 with the 1 exactly ``k`` places to its right.

    Yields ``(a, swapped_word, rows)`` with ``a`` the 0-based index of the 0,
    ascending.  ``rows`` is the number of 1s weakly between the pair, which is
    the number of rows occupied by the removed rim hook.
    """
    for a in range(len(beta) - k):
        if beta[a] == "0" and beta[a + k] == "1":
            rows = beta.count("1", a, a + k + 1)
            yield a, beta[:a] + "1" + beta[a + 1 : a + k] + "0" + beta[a + k + 1 :], rows


def remove_hooks(lam: Partition, k: int) -> list[tuple[Partition, int]]:
    """Shapes left after removing a size-k rim hook from ``lam``, with rows occupied."""
    if k < 1:
        raise ValueError("hook size must be positive")
    return [(shape_of(w), rows) for _, w, rows in hook_swaps(word(Partition(lam)), k)]


@dataclass(frozen=True)
class RimHookTableau:
    """A chain lam = T_1 > T_2 > ... > T_{m+1} = () of rim hook removals."""

    ambient: Partition
    chain: tuple[Partition, ...]
    rows_occupied: tuple[int, ...]

    def __post_init__(self):
        if not self.chain or self.chain[0] != self.ambient or self.chain[-1] != EMPTY:
            raise ValueError("chain must run from the ambient shape down to the empty partition")
        if len(self.rows_occupied) != len(self.chain) - 1:
            raise ValueError("need one row count per removal step")

    @property
    def content(self) -> tuple[int, ...]:
        return tuple(a.size() - b.size() for a, b in zip(self.chain, self.chain[1:]))

    def weight(self) -> int:
        return weight_tableau(self)

    def label_grid(self) -> list[list[int]]:
        """Label of every square: squares removed at step i carry label i (1-based)."""
        grid = [[0] * row for row in self.ambient]
        for label, (outer, inner) in enumerate(zip(self.chain, self.chain[1:]), start=1):
            for r in range(len(outer)):
                for c in range(inner.part(r), outer[r]):
                    grid[r][c] = label
        return grid

    def render(self) -> str:
        grid = self.label_grid()
        width = len(str(len(self.rows_occupied))) if self.rows_occupied else 1
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in grid)


def enumerate_tableaux(lam: Partition, content: Sequence[int]) -> Iterator[RimHookTableau]:
    """Lazily yield all rim hook tableaux of shape ``lam`` and the given content.

    At each step candidate hooks are tried in order of the swapped 0's position.
    Nothing is yielded when the sizes do not match.
    """
    lam = Partition(lam)
    content = tuple(content)
    if lam.size() != sum(content):
        return

    def extend(beta: str, step: int, chain: list, rows: list):
        if step == len(content):
            yield RimHookTableau(lam, tuple(chain), tuple(rows))
            return
        for _, nxt, r in hook_swaps(beta, content[step]):
            chain.append(shape_of(nxt))
            rows.append(r)
            yield from extend(nxt, step + 1, chain, rows)
            chain.pop()
            rows.pop()

    yield from extend(word(lam), 0, [lam], [])


def weight_tableau(tableau: RimHookTableau) -> int:
    """Product of (-1)^(rows - 1) over the rim hooks."""
    return -1 if sum(r - 1 for r in tableau.rows_occupied) % 2 else 1


def mn_sum_tableaux(lam: Partition, content: Sequence[int]) -> int:
    """chi_lam(mu) as the signed count of rim hook tableaux, mu any rearrangement of ``content``."""
    if Partition(lam).size() != sum(content):
        raise ValueError(f"size mismatch: |{lam}| != sum of content {tuple(content)}")
    return sum(weight_tableau(t) for t in enumerate_tableaux(lam, content))

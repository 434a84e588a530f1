"""Exact character values of symmetric groups from rim hook removals on boundary words."""
from __future__ import annotations

import csv
import io
import json
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import factorial, prod
from typing import Callable, Iterable, Sequence

from .partitions import Partition, centralizer_order, normalize, parse_partition, partitions_of, word
from .rimhook import hook_swaps

DEFAULT_MAX_N = int(os.environ.get("MNCASCADE_MAX_N", "16"))


class ResourceLimitError(RuntimeError):
    """A configured size bound was exceeded before any work started."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


def character_value(lam: Partition, mu: Sequence[int], memo: bool = True) -> int:
    """chi_lam(mu), exact.

    ``mu`` may be given in any order; parts are removed largest first.  With
    ``memo`` the computation runs level by level, merging every branch that
    reaches the same canonical word after the same number of removals, so
    each (word, content index) pair is expanded once.  Without it the plain
    recursion tree is walked.
    """
    lam = Partition(lam)
    content = sorted(mu, reverse=True)
    if lam.size() != sum(content):
        raise ValueError(f"size mismatch: |{lam}| = {lam.size()} but |mu| = {sum(content)}")
    if not memo:
        return _expand(word(lam), content, 0)
    states = {word(lam): 1}
    for k in content:
        nxt: dict[str, int] = defaultdict(int)
        for beta, coeff in states.items():
            for _, swapped, rows in hook_swaps(beta, k):
                nxt[normalize(swapped)] += coeff if rows % 2 else -coeff
        states = {w: c for w, c in nxt.items() if c}
        if not states:
            return 0
    return states.get("", 0)


def _expand(beta: str, content: list, step: int) -> int:
    if step == len(content):
        return 1
    total = 0
    for _, swapped, rows in hook_swaps(beta, content[step]):
        value = _expand(normalize(swapped), content, step + 1)
        total += value if rows % 2 else -value
    return total


def degree(lam: Partition) -> int:
    """chi_lam(1^n) by the hook length formula."""
    lam = Partition(lam)
    conj = [sum(1 for p in lam if p > j) for j in range(lam.first())]
    hooks = prod(lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i]))
    return factorial(lam.size()) // hooks


def parallel_map(func: Callable, items: Iterable, workers: int = 1) -> list:
    """Order-preserving map, in worker processes when ``workers`` > 1."""
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items, chunksize=max(1, len(items) // (4 * workers))))


def _cell(args):
    lam, mu = args
    return character_value(lam, mu)


@dataclass(frozen=True)
class CharacterTable:
    n: int
    rows: tuple[Partition, ...]
    cols: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]

    def __getitem__(self, key: tuple[Partition, Partition]) -> int:
        lam, mu = key
        return self.values[self.rows.index(tuple(lam))][self.cols.index(tuple(mu))]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "rows": [str(p) for p in self.rows],
            "cols": [str(p) for p in self.cols],
            "values": [[str(v) for v in row] for row in self.values],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        out = csv.writer(buf, lineterminator="\n")
        out.writerow(["lambda\\mu"] + [str(p) for p in self.cols])
        for lam, row in zip(self.rows, self.values):
            out.writerow([str(lam)] + [str(v) for v in row])
        return buf.getvalue()

    def to_text(self) -> str:
        cells = [[""] + [str(p) for p in self.cols]]
        cells += [[str(lam)] + [str(v) for v in row] for lam, row in zip(self.rows, self.values)]
        widths = [max(len(r[j]) for r in cells) for j in range(len(cells[0]))]
        return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells)


def character_table(n: int, max_n: int | None = None, workers: int = 1) -> CharacterTable:
    """The full character table of S_n, rows and columns in reverse-lex order."""
    bound = DEFAULT_MAX_N if max_n is None else max_n
    if n < 1:
        raise ValueError("n must be positive")
    if n > bound:
        raise ResourceLimitError(f"n={n} exceeds the table bound {bound} (set MNCASCADE_MAX_N)")
    parts = partitions_of(n)
    flat = parallel_map(_cell, [(lam, mu) for lam in parts for mu in parts], workers)
    k = len(parts)
    values = tuple(tuple(flat[i * k : (i + 1) * k]) for i in range(k))
    return CharacterTable(n, parts, parts, values)


def table_from_dict(data: dict) -> CharacterTable:
    """Inverse of ``CharacterTable.to_dict``."""
    return CharacterTable(
        int(data["n"]),
        tuple(parse_partition(p) for p in data["rows"]),
        tuple(parse_partition(p) for p in data["cols"]),
        tuple(tuple(int(v) for v in row) for row in data["values"]),
    )


def orthogonality_holds(table: CharacterTable) -> bool:
    """Both orthogonality relations, exactly, with class sizes n!/z_mu."""
    n_fact = factorial(table.n)
    z = [centralizer_order(mu) for mu in table.cols]
    vals = table.values
    k = len(vals)
    for a in range(k):
        for b in range(k):
            row_sum = sum(n_fact // z[j] * vals[a][j] * vals[b][j] for j in range(k))
            if row_sum != (n_fact if a == b else 0):
                return False
            col_sum = sum(vals[i][a] * vals[i][b] for i in range(k))
            if col_sum != (z[a] if a == b else 0):
                return False
    return True

"""Cascades: binary matrices whose rows walk a boundary word down to the empty shape.

Row and column indices in everything user-facing (swaps, paths, permutations)
are 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence
from xml.sax.saxutils import escape

from .partitions import Partition, pad_word, shape_of, word
from .rimhook import RimHookTableau, hook_swaps


class CascadeError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Cascade:
    rows: tuple[str, ...]
    swaps: tuple[tuple[int, int], ...]

    @property
    def shape(self) -> Partition:
        return shape_of(self.rows[0])

    @property
    def content(self) -> tuple[int, ...]:
        return tuple(b - a for a, b in self.swaps)

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    @property
    def num_cols(self) -> int:
        return len(self.rows[0])

    def column(self, j: int) -> str:
        """Column j (1-based) read top to bottom."""
        return "".join(row[j - 1] for row in self.rows)

    def __str__(self) -> str:
        return "\n".join(self.rows)


def _as_rows(matrix) -> tuple[str, ...]:
    rows = []
    for r in matrix:
        text = r if isinstance(r, str) else "".join(str(int(x)) for x in r)
        if set(text) - {"0", "1"}:
            raise CascadeError(f"row {len(rows) + 1} is not binary: {text!r}")
        rows.append(text)
    return tuple(rows)


def validate(matrix) -> Cascade:
    """Check the three cascade conditions and return the cascade with its swaps.

    ``matrix`` is a sequence of rows, each a ``"0101"`` string or a sequence of 0/1 ints.
    """
    rows = _as_rows(matrix)
    if len(rows) < 2 or not rows[0]:
        raise CascadeError("a cascade needs at least two non-empty rows")
    width = len(rows[0])
    for i, row in enumerate(rows, start=1):
        if len(row) != width:
            raise CascadeError(f"row {i} has length {len(row)}, expected {width}")
    if rows[0][0] != "0" or rows[0][-1] != "1":
        raise CascadeError("condition 1 violated: row 1 must start with 0 and end with 1")
    swaps = []
    for i, (cur, nxt) in enumerate(zip(rows, rows[1:]), start=1):
        diff = [j for j in range(width) if cur[j] != nxt[j]]
        if len(diff) != 2 or cur[diff[0]] != "0" or cur[diff[1]] != "1":
            raise CascadeError(
                f"condition 2 violated at row {i}: rows {i} and {i + 1} must differ "
                "by moving a single 1 to the left"
            )
        swaps.append((diff[0] + 1, diff[1] + 1))
    ones = rows[0].count("1")
    if rows[-1] != "1" * ones + "0" * (width - ones):
        raise CascadeError(f"condition 3 violated at row {len(rows)}: last row must be 1s then 0s")
    return Cascade(rows, tuple(swaps))


def parse_matrix(text: str) -> Cascade:
    """Parse one row of 0/1 characters per line; blank lines are ignored."""
    return validate([line.strip() for line in text.splitlines() if line.strip()])


def enumerate_cascades(lam: Partition, content: Sequence[int]) -> Iterator[Cascade]:
    """Lazily yield all cascades of shape ``lam`` and the given content."""
    lam = Partition(lam)
    content = tuple(content)
    if not lam or lam.size() != sum(content):
        return

    def extend(rows: list, swaps: list):
        step = len(swaps)
        if step == len(content):
            yield Cascade(tuple(rows), tuple(swaps))
            return
        k = content[step]
        for a, nxt, _ in hook_swaps(rows[-1], k):
            rows.append(nxt)
            swaps.append((a + 1, a + k + 1))
            yield from extend(rows, swaps)
            rows.pop()
            swaps.pop()

    yield from extend([word(lam)], [])


def row_crossings(c: Cascade) -> tuple[int, ...]:
    """Per-row count of 1s strictly between the swapped positions."""
    return tuple(row.count("1", a, b - 1) for row, (a, b) in zip(c.rows, c.swaps))


def crossings(c: Cascade) -> int:
    return sum(row_crossings(c))


def weight(c: Cascade) -> int:
    return -1 if crossings(c) % 2 else 1


def _transpose(j: int, pair: tuple[int, int]) -> int:
    a, b = pair
    return b if j == a else a if j == b else j


def paths(c: Cascade) -> tuple[tuple[int, ...], ...]:
    """One path per 1 in the first row, ordered by starting column."""
    result = []
    for j, bit in enumerate(c.rows[0], start=1):
        if bit == "1":
            path = [j]
            for pair in c.swaps:
                path.append(_transpose(path[-1], pair))
            result.append(tuple(path))
    return tuple(result)


def pair_crossings(p: Sequence[int], q: Sequence[int]) -> int:
    """Number of rows at which two paths swap their left-right order."""
    return sum(
        1
        for i in range(len(p) - 1)
        if (p[i] < q[i]) != (p[i + 1] < q[i + 1])
    )


def permutation_of(c: Cascade) -> tuple[int, ...]:
    """pi_C in one-line notation: path i (by start) ends in column pi_C(i)."""
    return tuple(p[-1] for p in paths(c))


def permutation_via_transpositions(c: Cascade) -> tuple[int, ...]:
    """pi_C from sigma_C = tau_{m-1} ... tau_1 applied to the first-row 1 positions."""
    images = []
    for j, bit in enumerate(c.rows[0], start=1):
        if bit == "1":
            for pair in c.swaps:
                j = _transpose(j, pair)
            images.append(j)
    return tuple(images)


def inversions(perm: Sequence[int]) -> int:
    return sum(1 for i, j in combinations(range(len(perm)), 2) if perm[j] < perm[i])


def sign(perm: Sequence[int]) -> int:
    return -1 if inversions(perm) % 2 else 1


def cycles(perm: Sequence[int]) -> list[tuple[int, ...]]:
    """Non-trivial cycles of a 1-based one-line permutation."""
    seen = set()
    out = []
    for start in range(1, len(perm) + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        j = perm[start - 1]
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = perm[j - 1]
        if len(cyc) > 1:
            out.append(tuple(cyc))
    return out


def format_cycles(perm: Sequence[int]) -> str:
    cyc = cycles(perm)
    if not cyc:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def theta(c: Cascade) -> RimHookTableau:
    """The rim hook tableau whose chain is the shapes of the cascade rows."""
    chain = tuple(shape_of(row) for row in c.rows)
    return RimHookTableau(chain[0], chain, tuple(x + 1 for x in row_crossings(c)))


def theta_inverse(t: RimHookTableau) -> Cascade:
    return validate([pad_word(shape, t.ambient) for shape in t.chain])


def mn_sum_cascades(lam: Partition, content: Sequence[int]) -> int:
    """chi_lam(mu) as the signed count of cascades, weight (-1)^crossings."""
    if Partition(lam).size() != sum(content):
        raise ValueError(f"size mismatch: |{lam}| != sum of content {tuple(content)}")
    return sum(weight(c) for c in enumerate_cascades(lam, content))


def render_diagram(c: Cascade, fmt: str = "ascii") -> str:
    """Strand diagram: a node per 1, edges between adjacent rows.

    In ascii, ``o`` is a node and ``.`` a 0; between two rows ``|`` joins nodes
    sharing a column, and the moving strand runs from ``/`` to ``/`` with ``+``
    wherever it passes over a vertical strand.  Top and bottom nodes are
    numbered left to right.
    """
    if fmt == "ascii":
        return _render_ascii(c)
    if fmt == "svg":
        return _render_svg(c)
    raise ValueError(f"unknown diagram format {fmt!r}; expected 'ascii' or 'svg'")


def _render_ascii(c: Cascade) -> str:
    k = c.rows[0].count("1")
    w = len(str(k)) + 1
    width = c.num_cols * w

    def numbering(row: str) -> str:
        cells = [" " * w] * len(row)
        for rank, j in enumerate((j for j, bit in enumerate(row) if bit == "1"), start=1):
            cells[j] = str(rank).ljust(w)
        return "".join(cells).rstrip()

    lines = [numbering(c.rows[0])]
    for i, row in enumerate(c.rows):
        lines.append("".join(("o" if bit == "1" else ".").ljust(w) for bit in row).rstrip())
        if i == len(c.swaps):
            break
        a, b = c.swaps[i]
        link = [" "] * width
        for j, bit in enumerate(row, start=1):
            if bit == "1" and j != b:
                link[(j - 1) * w] = "|"
        for x in range((a - 1) * w + 1, (b - 1) * w):
            link[x] = "+" if link[x] == "|" else "-"
        link[(a - 1) * w] = "/"
        link[(b - 1) * w] = "/"
        lines.append("".join(link).rstrip())
    lines.append(numbering(c.rows[-1]))
    return "\n".join(lines)


def _render_svg(c: Cascade, unit: int = 20, radius: int = 4) -> str:
    m, l = c.num_rows, c.num_cols
    # rows 1..m at y = unit*(i+1), leaving a unit above and below for numbering
    def xy(i: int, j: int) -> tuple[int, int]:
        return unit * j, unit * (i + 1)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{unit * (l + 1)}" '
        f'height="{unit * (m + 2)}" viewBox="0 0 {unit * (l + 1)} {unit * (m + 2)}">'
    ]
    for i, (a, b) in enumerate(c.swaps, start=1):
        row = c.rows[i - 1]
        for j, bit in enumerate(row, start=1):
            if bit != "1":
                continue
            x1, y1 = xy(i, j)
            x2, y2 = xy(i + 1, a if j == b else j)
            parts.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black"/>')
    for i, row in enumerate(c.rows, start=1):
        for j, bit in enumerate(row, start=1):
            if bit == "1":
                x, y = xy(i, j)
                parts.append(f'<circle cx="{x}" cy="{y}" r="{radius}" fill="black"/>')
    for i, row, dy in ((1, c.rows[0], -unit // 2), (m, c.rows[-1], unit // 2 + 4)):
        ones = [j for j, bit in enumerate(row, start=1) if bit == "1"]
        for rank, j in enumerate(ones, start=1):
            x, y = xy(i, j)
            parts.append(
                f'<text x="{x}" y="{y + dy}" font-size="{unit // 2}" '
                f'text-anchor="middle">{escape(str(rank))}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts)

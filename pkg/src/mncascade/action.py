"""The S_d action on cascades of subdivided shapes by permuting columns within blocks of d."""
from __future__ import annotations

from itertools import permutations
from math import factorial
from typing import Iterable, Sequence

from .cascade import Cascade, CascadeError, theta, theta_inverse, validate, weight
from .partitions import Partition
from .rimhook import RimHookTableau


class ActionError(ValueError):
    pass


class ProjectionError(ValueError):
    pass


def symmetric_group(d: int) -> list[tuple[int, ...]]:
    """All of S_d in one-line notation, lexicographic order (identity first)."""
    return list(permutations(range(1, d + 1)))


def compose(sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    """(sigma tau)(i) = sigma(tau(i))."""
    return tuple(sigma[t - 1] for t in tau)


def inverse(sigma: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma, start=1):
        inv[s - 1] = i
    return tuple(inv)


def block_extend(sigma: Sequence[int], blocks: int) -> tuple[int, ...]:
    """The permutation i + dk -> sigma(i) + dk on ``blocks`` blocks of size d."""
    d = len(sigma)
    return tuple(sigma[i] + d * k for k in range(blocks) for i in range(d))


def _check(c: Cascade, d: int) -> None:
    if d < 1:
        raise ActionError(f"d must be positive, got {d}")
    if c.num_cols % d:
        raise ActionError(f"column count {c.num_cols} is not divisible by d={d}")
    bad = [k for k in c.content if k % d]
    if bad:
        raise ActionError(f"content entries {bad} are not divisible by d={d}")
    first = c.rows[0]
    if any(len(set(first[s : s + d])) != 1 for s in range(0, len(first), d)):
        raise ActionError(f"first row {first} is not constant on blocks of {d}; shape is not subdivided")


def _check_sigma(sigma: Sequence[int], d: int) -> None:
    if sorted(sigma) != list(range(1, d + 1)):
        raise ActionError(f"{tuple(sigma)} is not a permutation of 1..{d}")


def act(sigma: Sequence[int], c: Cascade, d: int) -> Cascade:
    """sigma.C: column i + dk of C becomes column sigma(i) + dk of the result."""
    _check(c, d)
    _check_sigma(sigma, d)
    gamma_inv = inverse(block_extend(sigma, c.num_cols // d))
    rows = tuple("".join(row[g - 1] for g in gamma_inv) for row in c.rows)
    try:
        return validate(rows)
    except CascadeError as exc:  # pragma: no cover - excluded by the checks above
        raise ActionError(str(exc)) from exc


def orbit(c: Cascade, d: int) -> list[Cascade]:
    """The orbit of ``c`` as a list indexed like ``symmetric_group(d)``."""
    _check(c, d)
    return [act(sigma, c, d) for sigma in symmetric_group(d)]


def orbits(cascades: Iterable[Cascade], d: int) -> list[list[Cascade]]:
    """Split a set of cascades into S_d orbits.

    Each orbit is sorted, and orbits are ordered by their smallest member.
    """
    seen: set[Cascade] = set()
    out = []
    for c in cascades:
        if c in seen:
            continue
        members = sorted(set(orbit(c, d)))
        seen.update(members)
        out.append(members)
    out.sort(key=lambda members: members[0])
    return out


def z_vector(c: Cascade, d: int) -> tuple[int, ...]:
    """Number of 0s in each of the first d columns."""
    _check(c, d)
    return tuple(c.column(i).count("0") for i in range(1, d + 1))


def act_tableau(sigma: Sequence[int], t: RimHookTableau, d: int) -> RimHookTableau:
    return theta(act(sigma, theta_inverse(t), d))


def project(c: Cascade, d: int) -> Cascade:
    """Keep columns 1, d+1, 2d+1, ... and drop rows equal to their predecessor."""
    if d < 1 or c.num_cols % d:
        raise ProjectionError(f"column count {c.num_cols} is not divisible by d={d}")
    kept = [row[::d] for row in c.rows]
    rows = [kept[0]]
    for row in kept[1:]:
        if row != rows[-1]:
            rows.append(row)
    try:
        return validate(rows)
    except CascadeError as exc:
        raise ProjectionError(f"projection is not a cascade: {exc}") from exc


def orbit_report(lam, d: int, content: Sequence[int], cascades: Iterable[Cascade]) -> dict:
    """JSON-ready orbit summary; ``lam`` is the base shape before subdivision."""
    lam = Partition(lam)
    found = orbits(cascades, d)
    report_orbits = []
    for members in found:
        weights = {weight(m) for m in members}
        report_orbits.append(
            {
                "size": len(members),
                "weight": weights.pop() if len(weights) == 1 else None,
                "content": list(members[0].content),
                "members": [list(m.rows) for m in members],
            }
        )
    return {
        "lambda": str(lam),
        "d": d,
        "content": list(content),
        "columns": d * (lam.first() + lam.length()),
        "notes": ["column count of the subdivided word is d*(lambda_1 + len(lambda))"],
        "orbit_size_expected": factorial(d),
        "all_free": all(o["size"] == factorial(d) for o in report_orbits),
        "all_weight_constant": all(o["weight"] is not None for o in report_orbits),
        "orbits": report_orbits,
    }

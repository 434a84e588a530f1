"""Exhaustive checks of the d!-divisibility and vanishing statements, with JSON reports.

Every ``check_*`` function returns a :class:`VerificationReport` whose cases
cover the full declared range in a fixed order, so reports are byte-identical
for any number of worker processes.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from math import factorial

from .action import orbits
from .cascade import enumerate_cascades, mn_sum_cascades, weight
from .engine import ResourceLimitError, character_value, parallel_map
from .partitions import Partition, dilate_parts, partitions_of, subdivide
from .rimhook import mn_sum_tableaux

DEFAULT_MAX_SIZE = int(os.environ.get("MNCASCADE_MAX_SIZE", "64"))

BLOCK_NOTE = "subdivided shapes have words of length d*(lambda_1 + len(lambda))"


@dataclass
class VerificationReport:
    claim: str
    parameters: dict
    cases: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    partial: bool = False

    @property
    def all_passed(self) -> bool:
        return not self.partial and all(case["pass"] for case in self.cases)

    def to_dict(self) -> dict:
        out = {"claim": self.claim, **self.parameters, "cases": self.cases}
        if self.notes:
            out["notes"] = self.notes
        if self.partial:
            out["partial"] = True
        out["all_passed"] = self.all_passed
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _guard(report: VerificationReport, size: int, max_size: int | None) -> None:
    bound = DEFAULT_MAX_SIZE if max_size is None else max_size
    if size > bound:
        report.partial = True
        raise ResourceLimitError(
            f"shapes of size {size} exceed the bound {bound} (set MNCASCADE_MAX_SIZE)", report
        )


def _check_positive(**kwargs) -> None:
    for name, value in kwargs.items():
        if not isinstance(value, int) or value < 1:
            raise ValueError(f"{name} must be a positive integer, got {value!r}")


def _orbit_evidence(lam: Partition, content, d: int, value: int) -> dict:
    groups = orbits(enumerate_cascades(lam, content), d)
    free = all(len(g) == factorial(d) for g in groups)
    constant = all(len({weight(c) for c in g}) == 1 for g in groups)
    orbit_value = factorial(d) * sum(weight(g[0]) for g in groups)
    return {
        "orbits": len(groups),
        "orbit_value": str(orbit_value),
        "orbit_pass": free and constant and orbit_value == value,
    }


def _subdivided_case(args) -> dict:
    lam, mu, d, with_orbits = args
    shape, cls = subdivide(lam, d), subdivide(mu, d)
    nu = Partition(p for p in mu for _ in range(d))
    # the subdivided class is the scaled class of nu, so this case is also a scaled case
    assert dilate_parts(nu, d) == cls
    value = character_value(shape, cls)
    case = {
        "lambda": str(lam),
        "mu": str(mu),
        "character": str(shape),
        "class": str(cls),
        "nu": str(nu),
        "value": str(value),
        "pass": value % factorial(d) == 0,
    }
    if with_orbits:
        evidence = _orbit_evidence(shape, cls, d, value)
        case.update(evidence)
        case["pass"] = case["pass"] and evidence["orbit_pass"]
    return case


def check_subdivided(
    n: int, d: int, workers: int = 1, with_orbits: bool = False, max_size: int | None = None
) -> VerificationReport:
    """d! divides chi at the subdivided shape and subdivided class, for all lambda, mu of n.

    With ``with_orbits`` every value is also rebuilt as d! times the signed
    number of S_d orbits of cascades.
    """
    _check_positive(n=n, d=d)
    report = VerificationReport("subdivided_congruence", {"n": n, "d": d}, notes=[BLOCK_NOTE])
    _guard(report, d * d * n, max_size)
    parts = partitions_of(n)
    jobs = [(lam, mu, d, with_orbits) for lam in parts for mu in parts]
    report.cases = parallel_map(_subdivided_case, jobs, workers)
    return report


def _scaled_case(args) -> dict:
    lam, mu, d = args
    shape, cls = subdivide(lam, d), dilate_parts(mu, d)
    value = character_value(shape, cls)
    return {
        "lambda": str(lam),
        "mu": str(mu),
        "character": str(shape),
        "class": str(cls),
        "value": str(value),
        "pass": value % factorial(d) == 0,
    }


def check_scaled(n: int, d: int, workers: int = 1, max_size: int | None = None) -> VerificationReport:
    """d! divides chi at the subdivided shape of lambda (of n) and the class d.mu, mu of d*n."""
    _check_positive(n=n, d=d)
    report = VerificationReport("scaled_congruence", {"n": n, "d": d}, notes=[BLOCK_NOTE])
    _guard(report, d * d * n, max_size)
    jobs = [(lam, mu, d) for lam in partitions_of(n) for mu in partitions_of(d * n)]
    report.cases = parallel_map(_scaled_case, jobs, workers)
    return report


def _vanishing_case(args) -> dict:
    lam, mu, d = args
    shape, cls = subdivide(lam, d), dilate_parts(mu, d * d)
    value = character_value(shape, cls)
    count = sum(1 for _ in enumerate_cascades(shape, cls))
    return {
        "lambda": str(lam),
        "mu": str(mu),
        "character": str(shape),
        "class": str(cls),
        "value": str(value),
        "cascades": count,
        "pass": value == 0 and count == 0,
    }


def check_vanishing(n: int, d: int, workers: int = 1, max_size: int | None = None) -> VerificationReport:
    """When d does not divide n, chi vanishes at class d^2.mu and no cascade exists at all."""
    _check_positive(n=n, d=d)
    report = VerificationReport("ordinary_vanishing", {"n": n, "d": d})
    if n % d == 0:
        report.notes.append(f"hypothesis not met: d={d} divides n={n}; vacuous pass")
        return report
    _guard(report, d * d * n, max_size)
    parts = partitions_of(n)
    report.cases = parallel_map(_vanishing_case, [(lam, mu, d) for lam in parts for mu in parts], workers)
    return report


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p**0.5) + 1))


def prime_breaks(mu: Partition, p: int) -> list[tuple[int, Partition]]:
    """Each distinct part m divisible by p, with the partition where one m becomes p parts m/p."""
    out = []
    for m in sorted(set(mu), reverse=True):
        if m % p == 0:
            rest = list(mu)
            rest.remove(m)
            out.append((m, Partition(sorted(rest + [m // p] * p, reverse=True))))
    return out


def _prime_case(args) -> dict:
    lam, mu, nu, p = args
    a, b = character_value(lam, mu), character_value(lam, nu)
    return {
        "lambda": str(lam),
        "mu": str(mu),
        "nu": str(nu),
        "value": str(a),
        "value_nu": str(b),
        "pass": (a - b) % p == 0,
    }


def check_prime_break(n: int, p: int, workers: int = 1, max_size: int | None = None) -> VerificationReport:
    """chi_lam(mu) = chi_lam(nu) mod p whenever nu breaks a part of mu into p equal parts."""
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if n < 2:
        raise ValueError("n must be at least 2")
    report = VerificationReport("prime_break", {"n": n, "p": p})
    _guard(report, n, max_size)
    parts = partitions_of(n)
    jobs = [(lam, mu, nu, p) for lam in parts for mu in parts for _, nu in prime_breaks(mu, p)]
    report.cases = parallel_map(_prime_case, jobs, workers)
    return report


def _equivalence_case(args) -> dict:
    lam, mu = args
    values = (mn_sum_tableaux(lam, mu), mn_sum_cascades(lam, mu), character_value(lam, mu))
    return {
        "lambda": str(lam),
        "mu": str(mu),
        "value": str(values[2]),
        "tableaux": str(values[0]),
        "cascades": str(values[1]),
        "pass": len(set(values)) == 1,
    }


def check_equivalence(n: int, workers: int = 1, max_size: int | None = None) -> VerificationReport:
    """Tableau sum, cascade sum and word recursion agree on every entry of the S_n table."""
    _check_positive(n=n)
    report = VerificationReport("mn_equivalence", {"n": n})
    _guard(report, n, max_size)
    parts = partitions_of(n)
    report.cases = parallel_map(_equivalence_case, [(lam, mu) for lam in parts for mu in parts], workers)
    return report

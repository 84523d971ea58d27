"""Randomized audit of the metric axioms on seeded tuple corpora.

Each sample draws a triple of coprime tuples (uniform entries with
rejection until the gcd is 1) and checks, in exact integer arithmetic:

  submultiplicativity   q_C(A) <= q_B(A) * q_C(B)
  triangle (max-q form) max_q(A,C) <= max_q(A,B) * max_q(B,C)
  symmetry              max_q(A,B) == max_q(B,A)
  identity              max_q(A,A) == 1, and max_q(A,B) > 1 when A != B
  membership            q_B(t) == 1  iff  t in B, for probe targets t

Violations are recorded verbatim so a failing run is reproducible from
the printed seed alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .metric import CoprimeTuple, make_tuple, q_point, q_tuple

CHECKS = ("submultiplicativity", "triangle", "symmetry", "identity", "membership")


@dataclass(frozen=True)
class Violation:
    check: str
    detail: str


@dataclass
class AxiomAudit:
    samples: int
    max_value: int
    ell: int
    seed: int
    checks_run: dict[str, int] = field(default_factory=dict)
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def random_coprime_tuple(rng: random.Random, ell: int, max_value: int) -> CoprimeTuple:
    """Uniform draws from [1, max_value], redrawn until the set is coprime.

    Duplicate draws collapse, so the result can have fewer than ell
    elements (the singleton {1} included).
    """
    while True:
        values = sorted({rng.randint(1, max_value) for _ in range(ell)})
        from math import gcd

        if gcd(*values) == 1:
            return make_tuple(values)


def run_axiom_audit(samples: int, max_value: int, ell: int, seed: int) -> AxiomAudit:
    if samples < 0:
        raise ValueError(f"sample count must be >= 0, got {samples}")
    if max_value < 1 or ell < 1:
        raise ValueError(f"need max_value >= 1 and ell >= 1, got {max_value}, {ell}")
    rng = random.Random(seed)
    audit = AxiomAudit(samples=samples, max_value=max_value, ell=ell, seed=seed)
    counts = dict.fromkeys(CHECKS, 0)
    bad = audit.violations.append

    for _ in range(samples):
        a = random_coprime_tuple(rng, ell, max_value)
        b = random_coprime_tuple(rng, ell, max_value)
        c = random_coprime_tuple(rng, ell, max_value)

        q_ba = q_tuple(b, a)  # generators b, targets a
        q_cb = q_tuple(c, b)
        q_ca = q_tuple(c, a)
        q_ab = q_tuple(a, b)
        q_ac = q_tuple(a, c)
        q_bc = q_tuple(b, c)

        counts["submultiplicativity"] += 1
        if q_ca > q_ba * q_cb:
            bad(Violation(
                "submultiplicativity",
                f"A={a} B={b} C={c}: q_C(A)={q_ca} > q_B(A)*q_C(B)={q_ba}*{q_cb}",
            ))

        d_ab = max(q_ba, q_ab)
        d_bc = max(q_cb, q_bc)
        d_ac = max(q_ca, q_ac)
        counts["triangle"] += 1
        if d_ac > d_ab * d_bc:
            bad(Violation(
                "triangle",
                f"A={a} B={b} C={c}: max_q(A,C)={d_ac} > {d_ab}*{d_bc}",
            ))

        counts["symmetry"] += 1
        if max(q_ba, q_ab) != max(q_ab, q_ba):
            bad(Violation("symmetry", f"A={a} B={b}: asymmetric max_q"))

        counts["identity"] += 1
        if q_tuple(a, a) != 1:
            bad(Violation("identity", f"A={a}: max_q(A,A) != 1"))
        if a != b and d_ab <= 1:
            bad(Violation("identity", f"A={a} B={b}: distinct tuples at distance 0"))

        counts["membership"] += 1
        probes = set(a.elements) | set(b.elements) | {rng.randint(1, max_value)}
        for t in sorted(probes):
            if (q_point(b, t).value == 1) != (t in b):
                bad(Violation(
                    "membership",
                    f"B={b} t={t}: q={q_point(b, t).value}, member={t in b}",
                ))

    audit.checks_run = counts
    return audit

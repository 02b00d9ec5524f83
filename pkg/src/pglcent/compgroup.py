"""Component groups pi_0 of PGL_n centralizers.

The identity component of the centralizer is the untwisted stratum (the unit
group of the commutant algebra, which is connected), and every witnessed
twisted stratum is one coset of it.  So pi_0 is the group of twist tuples
whose stratum contains an invertible matrix, a subgroup of (Z/mZ)^k.  Its
isomorphism type comes from a Smith normal form computation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exactla import Matrix
from .twistcent import (
    DEFAULT_COEFF_BOUND,
    DEFAULT_TRIALS,
    GeneratorSet,
    Stratum,
    all_twists,
    solve_stratum,
)

__all__ = [
    "ComponentGroupReport",
    "ClosureError",
    "component_group",
    "classify_label",
    "smith_normal_form",
    "subgroup_structure",
]


class ClosureError(RuntimeError):
    """The witnessed twists do not form a subgroup; indicates an engine bug."""


@dataclass(frozen=True)
class ComponentGroupReport:
    n: int
    order: int
    strata: tuple[Stratum, ...]
    nonempty_twists: tuple[tuple[int, ...], ...]
    subgroup_generators: tuple[tuple[int, ...], ...]
    invariant_factors: tuple[int, ...]
    iso_label: str
    centralizer_dim: int

    @property
    def witnesses(self) -> dict[tuple[int, ...], Matrix]:
        return {s.twist: s.witness for s in self.strata if s.witness is not None}

    @property
    def group_order(self) -> int:
        return len(self.nonempty_twists)

    def stratum(self, twist) -> Stratum:
        twist = tuple(twist)
        for s in self.strata:
            if s.twist == twist:
                return s
        raise KeyError(twist)


def smith_normal_form(rows):
    """Smith normal form of an integer matrix.

    Returns ``(diagonal, qinv)`` where ``diagonal`` lists the nonzero invariant
    factors d_1 | d_2 | ... and ``qinv`` is a unimodular matrix whose rows form
    a basis of Z^c adapted to the row lattice: that lattice is spanned by
    ``d_i * qinv[i]``.
    """
    A = [list(r) for r in rows]
    nr = len(A)
    nc = len(A[0]) if A else 0
    qinv = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def swap_cols(a, b):
        for r in A:
            r[a], r[b] = r[b], r[a]
        qinv[a], qinv[b] = qinv[b], qinv[a]

    def add_col(src, dst, t):
        # col_dst += t * col_src; inverse row operation on qinv
        for r in A:
            r[dst] += t * r[src]
        qinv[src] = [x - t * y for x, y in zip(qinv[src], qinv[dst])]

    t = 0
    while t < min(nr, nc):
        nonzero = [(abs(A[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if A[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        A[t], A[pi] = A[pi], A[t]
        swap_cols(t, pj)
        while True:
            done = True
            for i in range(t + 1, nr):
                q = A[i][t] // A[t][t]
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                if A[i][t]:
                    A[t], A[i] = A[i], A[t]
                    done = False
            for j in range(t + 1, nc):
                q = A[t][j] // A[t][t]
                if q:
                    add_col(t, j, -q)
                if A[t][j]:
                    swap_cols(t, j)
                    done = False
            if not done:
                continue
            # the pivot must divide the rest of the trailing block
            bad = next(
                (i for i in range(t + 1, nr) for j in range(t + 1, nc) if A[i][j] % A[t][t]),
                None,
            )
            if bad is None:
                break
            A[t] = [x + y for x, y in zip(A[t], A[bad])]
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
        t += 1
    return [A[i][i] for i in range(t)], qinv


def subgroup_structure(elements, m: int, k: int):
    """Invariant factors and matching generators of a subgroup of (Z/mZ)^k."""
    lattice = [list(e) for e in elements] + [
        [m if i == j else 0 for j in range(k)] for i in range(k)
    ]
    diagonal, qinv = smith_normal_form(lattice)
    pairs = []
    for d, basis_row in zip(diagonal, qinv):
        factor = m // d
        if factor > 1:
            pairs.append((factor, tuple((d * x) % m for x in basis_row)))
    pairs.sort(key=lambda p: p[0])
    return [f for f, _ in pairs], [g for _, g in pairs]


def classify_label(invariant_factors) -> str:
    factors = list(invariant_factors)
    if not factors:
        return "trivial"
    return " x ".join(f"Z/{d}Z" for d in factors)


def _check_closure(twists, m):
    s = set(twists)
    k = len(next(iter(s)))
    if (0,) * k not in s:
        raise ClosureError("the zero twist has no invertible witness")
    for a in s:
        for b in s:
            c = tuple((x + y) % m for x, y in zip(a, b))
            if c not in s:
                raise ClosureError(f"twists {a} and {b} are witnessed but {c} is not")


def component_group(
    gens: GeneratorSet,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    coeff_bound: int = DEFAULT_COEFF_BOUND,
) -> ComponentGroupReport:
    """Solve all m^k strata and assemble pi_0 of the PGL_n centralizer."""
    m, k = gens.m, gens.k
    strata = tuple(
        solve_stratum(gens, t, seed=seed, trials=trials, coeff_bound=coeff_bound)
        for t in all_twists(m, k)
    )
    nonempty = tuple(s.twist for s in strata if s.nonempty)
    _check_closure(nonempty, m)
    factors, generators = subgroup_structure(nonempty, m, k)
    if math.prod(factors) != len(nonempty):
        raise ClosureError(
            f"invariant factors {factors} disagree with {len(nonempty)} witnessed twists"
        )
    return ComponentGroupReport(
        n=gens.n,
        order=m,
        strata=strata,
        nonempty_twists=nonempty,
        subgroup_generators=tuple(generators),
        invariant_factors=tuple(factors),
        iso_label=classify_label(factors),
        centralizer_dim=strata[0].dim,
    )

"""Generator presentations for the non-supercuspidal tempered parameters of SL_3.

Each family is a finite set of matrices standing in for the (usually
infinite) image of an L-parameter in PGL_3.  Character values enter only as
exact field elements.

=================  ==========  =================================================
family             params      generators
=================  ==========  =================================================
principal-series   a1, a2      diag(a1, a2, 1)
steinberg3         (none)      Sym^2 of diag(2, 1/2) and of [[1,1],[1,2]]
dihedral-chi       c           [[0,1,0],[1,0,0],[0,0,c]], diag(-1, 1, c)
tetrahedral-chi    c           [[0,1,0],[2,0,0],[0,0,c]], [[1,1,0],[0,1,0],[0,0,c]]
octahedral-chi     c           same as tetrahedral-chi (A_4 sits inside S_4)
steinberg2-chi     k           diag(2,1/2,1) and the two unipotent shears
=================  ==========  =================================================
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cyclofield import CycNum
from .exactla import Matrix, diag
from .twistcent import (
    DEFAULT_COEFF_BOUND,
    DEFAULT_TRIALS,
    GeneratorSet,
    all_twists,
    solve_stratum,
)

__all__ = [
    "FAMILY_IDS",
    "FAMILY_PARAMS",
    "FamilySpec",
    "FamilyError",
    "build_family",
    "sym2",
    "stabilize",
]

FAMILY_IDS = (
    "principal-series",
    "steinberg3",
    "dihedral-chi",
    "tetrahedral-chi",
    "octahedral-chi",
    "steinberg2-chi",
)

# parameter names and their defaults (None = required)
FAMILY_PARAMS = {
    "principal-series": {"a1": None, "a2": None},
    "steinberg3": {},
    "dihedral-chi": {"c": 5},
    "tetrahedral-chi": {"c": 5},
    "octahedral-chi": {"c": 5},
    "steinberg2-chi": {"k": 5},
}


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    family_id: str
    params: dict = field(default_factory=dict)
    expected: str | None = None
    order: int = 3

    def __post_init__(self):
        if self.family_id not in FAMILY_PARAMS:
            raise FamilyError(
                f"unknown family {self.family_id!r}; expected one of {', '.join(FAMILY_IDS)}"
            )
        known = FAMILY_PARAMS[self.family_id]
        params = {}
        for name, value in self.params.items():
            if name not in known:
                raise FamilyError(f"family {self.family_id} has no parameter {name!r}")
            params[name] = _as_cyc(self.order, value)
        for name, default in known.items():
            if name not in params:
                if default is None:
                    raise FamilyError(f"family {self.family_id} needs parameter {name!r}")
                params[name] = CycNum.rational(self.order, default)
        object.__setattr__(self, "params", params)
        _validate(self.family_id, params)


def _as_cyc(order, value):
    if isinstance(value, CycNum):
        if value.order != order:
            raise FamilyError(f"parameter lives in Q(zeta_{value.order}), expected order {order}")
        return value
    return Matrix([[value]], order).rows[0][0]


def _validate(fid, p):
    if fid == "principal-series":
        a1, a2 = p["a1"], p["a2"]
        one = CycNum.one(a1.order)
        if a1.is_zero() or a2.is_zero():
            raise FamilyError("principal-series needs a1 and a2 nonzero")
        if a1 == a2 or a1 == one or a2 == one:
            raise FamilyError("principal-series needs a1, a2, 1 pairwise distinct")
    elif fid in ("dihedral-chi", "tetrahedral-chi", "octahedral-chi"):
        c = p["c"]
        a = 1 if fid == "dihedral-chi" else 2
        if c.is_zero():
            raise FamilyError(f"{fid} needs c nonzero")
        if c.is_one():
            raise FamilyError(f"{fid} needs c != 1 (c is a character value)")
        if c == a * a:
            raise FamilyError(f"{fid} needs c != {a * a} (the degenerate c = a^2 case)")
    elif fid == "steinberg2-chi":
        k = p["k"]
        if k.is_zero() or k.is_one():
            raise FamilyError("steinberg2-chi needs k != 0 and k != 1")


def sym2(a, b, c, d, order: int = 3) -> Matrix:
    """Symmetric square of [[a, b], [c, d]] in the monomial basis x^2, xy, y^2."""
    return Matrix(
        [
            [a * a, a * b, b * b],
            [2 * a * c, a * d + b * c, 2 * b * d],
            [c * c, c * d, d * d],
        ],
        order,
    )


def build_family(spec: FamilySpec) -> GeneratorSet:
    m = spec.order
    p = spec.params
    fid = spec.family_id
    if fid == "principal-series":
        gens = [diag([p["a1"], p["a2"], 1], m)]
    elif fid == "steinberg3":
        gens = [sym2(2, 0, 0, Fraction(1, 2), m), sym2(1, 1, 1, 2, m)]
    elif fid == "dihedral-chi":
        c = p["c"]
        gens = [
            Matrix([[0, 1, 0], [1, 0, 0], [0, 0, c]], m),
            Matrix([[-1, 0, 0], [0, 1, 0], [0, 0, c]], m),
        ]
    elif fid in ("tetrahedral-chi", "octahedral-chi"):
        c = p["c"]
        gens = [
            Matrix([[0, 1, 0], [2, 0, 0], [0, 0, c]], m),
            Matrix([[1, 1, 0], [0, 1, 0], [0, 0, c]], m),
        ]
    elif fid == "steinberg2-chi":
        # k only rescales the image; strata are invariant under scaling
        gens = [
            diag(["2", "1/2", 1], m),
            Matrix([[1, 1, 0], [0, 1, 0], [0, 0, 1]], m),
            Matrix([[1, 0, 0], [1, 1, 0], [0, 0, 1]], m),
        ]
    else:  # pragma: no cover - FamilySpec rejects unknown ids
        raise FamilyError(fid)
    return GeneratorSet(tuple(gens), m)


def _profile(gens, **kw):
    return {t: solve_stratum(gens, t, **kw).dim for t in all_twists(gens.m, gens.k)}


def _changes(old, new):
    # a probe changes nothing when every old stratum survives intact in some extension
    best = {}
    for t, d in new.items():
        best[t[:-1]] = max(best.get(t[:-1], 0), d)
    return any(best[t] != d for t, d in old.items())


def stabilize(
    gens: GeneratorSet,
    extra,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    coeff_bound: int = DEFAULT_COEFF_BOUND,
) -> GeneratorSet:
    """Append probe matrices that still cut down some stratum, until none do.

    Probes that leave every stratum dimension unchanged are dropped, so an
    already stable surrogate is returned as is.
    """
    kw = dict(seed=seed, trials=trials, coeff_bound=coeff_bound)
    pending = list(extra)
    current = gens
    profile = _profile(current, **kw)
    while True:
        kept = False
        remaining = []
        for X in pending:
            candidate = current.appended(X)
            new = _profile(candidate, **kw)
            if _changes(profile, new):
                current, profile, kept = candidate, new, True
            else:
                remaining.append(X)
        pending = remaining
        if not kept or not pending:
            return current

"""Line-oriented problem files.

::

    # diag(z, z^2, 1) in PGL_3 over Q(zeta_3)
    order = 3
    dim = 3
    gen = [[z,0,0],[0,z^2,0],[0,0,1]]
    expected = Z/3Z

or, for a built-in family::

    family = principal-series; param.a1 = 2; param.a2 = 3

Statements end at a newline or ``;``; a matrix literal may continue over
several lines while its brackets are open.  ``#`` starts a comment.  Family
parameters may be written ``param.<name>`` or just ``<name>``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclofield import CycSyntaxError, parse_cyc
from .exactla import Matrix, mat_det
from .families import FamilyError, FamilySpec, build_family
from .twistcent import GeneratorSet

__all__ = [
    "ProblemFile",
    "ProblemSyntaxError",
    "ProblemValidationError",
    "parse_problem",
    "format_problem",
]

_RESERVED = ("order", "dim", "gen", "family", "expected", "seed")


class ProblemSyntaxError(ValueError):
    def __init__(self, msg, line, col):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.msg = msg
        self.line = line
        self.col = col


class ProblemValidationError(ValueError):
    pass


@dataclass(frozen=True)
class ProblemFile:
    order: int
    dim: int
    generators: tuple[Matrix, ...] | None = None
    family: FamilySpec | None = None
    expected: str | None = None
    seed: int | None = None

    def generator_set(self) -> GeneratorSet:
        if self.family is not None:
            return build_family(self.family)
        return GeneratorSet(self.generators, self.order)

    @property
    def name(self) -> str:
        """Report label: ``custom``, or the family id with its parameter values."""
        if self.family is None:
            return "custom"
        params = ", ".join(f"{k}={v}" for k, v in self.family.params.items())
        return f"{self.family.family_id}({params})" if params else self.family.family_id


def _statements(text):
    """Split into statements: lists of (char, line, col), 1-based positions."""
    stmts, cur = [], []
    depth = 0
    opened = None
    line, col = 1, 0
    in_comment = False
    for ch in text:
        col += 1
        if ch == "\n":
            in_comment = False
            if depth == 0:
                stmts.append(cur)
                cur = []
            line, col = line + 1, 0
            continue
        if in_comment:
            continue
        if ch == "#":
            in_comment = True
            continue
        if ch == ";" and depth == 0:
            stmts.append(cur)
            cur = []
            continue
        if ch == "[":
            if depth == 0:
                opened = (line, col)
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise ProblemSyntaxError("unbalanced ']'", line, col)
        cur.append((ch, line, col))
    if depth:
        raise ProblemSyntaxError("'[' is never closed", *opened)
    stmts.append(cur)
    return [s for s in stmts if any(not c.isspace() for c, _, _ in s)]


def _strip(chars):
    i, j = 0, len(chars)
    while i < j and chars[i][0].isspace():
        i += 1
    while j > i and chars[j - 1][0].isspace():
        j -= 1
    return chars[i:j]


def _text(chars):
    return "".join(c for c, _, _ in chars)


def _pos(chars, idx=0, fallback=(1, 1)):
    if not chars:
        return fallback
    idx = min(idx, len(chars) - 1)
    return chars[idx][1], chars[idx][2]


def _expr(order, chars):
    text = _text(chars)
    try:
        return parse_cyc(order, text)
    except CycSyntaxError as exc:
        line, col = _pos(chars, exc.pos)
        raise ProblemSyntaxError(f"bad expression {text.strip()!r}: {exc.msg}", line, col) from None


def _int(chars):
    text = _text(chars).strip()
    try:
        return int(text)
    except ValueError:
        raise ProblemSyntaxError(f"expected an integer, got {text!r}", *_pos(chars)) from None


def _matrix_entries(chars):
    """Parse ``[[e, e], [e, e]]`` into a list of rows of char slices."""
    chars = [c for c in chars]
    i = 0

    def skip():
        nonlocal i
        while i < len(chars) and chars[i][0].isspace():
            i += 1

    def expect(ch):
        nonlocal i
        skip()
        if i >= len(chars) or chars[i][0] != ch:
            got = repr(chars[i][0]) if i < len(chars) else "end of matrix"
            raise ProblemSyntaxError(f"expected {ch!r}, got {got}", *_pos(chars, i))
        i += 1

    def peek():
        skip()
        return chars[i][0] if i < len(chars) else ""

    rows = []
    expect("[")
    while True:
        expect("[")
        row = []
        while True:
            start = i
            depth = 0
            while i < len(chars):
                ch = chars[i][0]
                if ch == "(":
                    depth += 1
                elif ch == ")":
                    depth -= 1
                elif depth == 0 and ch in ",]":
                    break
                elif ch == "[":
                    raise ProblemSyntaxError("unexpected '['", *_pos(chars, i))
                i += 1
            entry = chars[start:i]
            if not _text(entry).strip():
                raise ProblemSyntaxError("empty matrix entry", *_pos(chars, start))
            row.append(entry)
            if peek() == ",":
                i += 1
                continue
            expect("]")
            break
        rows.append(row)
        if peek() == ",":
            i += 1
            continue
        expect("]")
        break
    skip()
    if i < len(chars):
        raise ProblemSyntaxError("trailing characters after matrix", *_pos(chars, i))
    return rows


def parse_problem(text: str) -> ProblemFile:
    """Parse and validate a problem file.

    Raises ProblemSyntaxError (with line and column) for malformed text and
    ProblemValidationError for well-formed files describing invalid input.
    """
    settings = {}
    gens_raw = []
    params = {}
    for stmt in _statements(text):
        stmt = _strip(stmt)
        eq = next((k for k, (c, _, _) in enumerate(stmt) if c == "="), None)
        if eq is None:
            raise ProblemSyntaxError("expected 'key = value'", *_pos(stmt))
        key = _text(stmt[:eq]).strip()
        value = _strip(stmt[eq + 1 :])
        kpos = _pos(stmt)
        if not value:
            raise ProblemSyntaxError(f"missing value for {key!r}", *_pos(stmt, eq))
        if key == "gen":
            gens_raw.append(value)
        elif key in _RESERVED:
            if key in settings:
                raise ProblemSyntaxError(f"duplicate key {key!r}", *kpos)
            settings[key] = value
        else:
            name = key[len("param.") :] if key.startswith("param.") else key
            if not name.isidentifier():
                raise ProblemSyntaxError(f"bad key {key!r}", *kpos)
            if name in params:
                raise ProblemSyntaxError(f"duplicate parameter {name!r}", *kpos)
            params[name] = value

    family_id = _text(settings["family"]).strip() if "family" in settings else None
    if family_id is None and params:
        name = next(iter(params))
        raise ProblemSyntaxError(f"unknown key {name!r}", *_pos(params[name]))
    dim = _int(settings["dim"]) if "dim" in settings else None
    order = _int(settings["order"]) if "order" in settings else None
    seed = _int(settings["seed"]) if "seed" in settings else None
    if (family_id is None) == (not gens_raw):
        raise ProblemValidationError("give exactly one of: gen lines, or a family")

    if order is not None and order < 1:
        raise ProblemValidationError(f"order must be positive, got {order}")
    if dim is not None and dim < 1:
        raise ProblemValidationError(f"dim must be positive, got {dim}")
    expected = _text(settings["expected"]).strip() if "expected" in settings else None

    if family_id is not None:
        if dim not in (None, 3):
            raise ProblemValidationError(f"family {family_id} lives in dimension 3, not {dim}")
        order = 3 if order is None else order
        values = {name: _expr(order, chars) for name, chars in params.items()}
        try:
            spec = FamilySpec(family_id, values, expected=expected, order=order)
        except FamilyError as exc:
            raise ProblemValidationError(str(exc)) from None
        return ProblemFile(order, 3, None, spec, expected, seed)

    parsed = [_matrix_entries(chars) for chars in gens_raw]
    if dim is None:
        dim = len(parsed[0])
    if order is None:
        order = dim
    gens = []
    for idx, (rows, chars) in enumerate(zip(parsed, gens_raw)):
        line = chars[0][1]
        if len(rows) != dim or any(len(r) != dim for r in rows):
            shape = f"{len(rows)}x{max(len(r) for r in rows)}"
            raise ProblemValidationError(
                f"line {line}: generator {idx} is {shape}, expected {dim}x{dim}"
            )
        A = Matrix([[_expr(order, e) for e in r] for r in rows], order)
        if mat_det(A).is_zero():
            raise ProblemValidationError(f"line {line}: generator {idx} is singular (det = 0)")
        gens.append(A)
    return ProblemFile(order, dim, tuple(gens), None, expected, seed)


def format_problem(problem: ProblemFile) -> str:
    lines = [f"order = {problem.order}", f"dim = {problem.dim}"]
    if problem.family is not None:
        lines.append(f"family = {problem.family.family_id}")
        for name, value in problem.family.params.items():
            lines.append(f"param.{name} = {value}")
    else:
        for A in problem.generators:
            lines.append(f"gen = {A.to_text()}")
    if problem.expected is not None:
        lines.append(f"expected = {problem.expected}")
    if problem.seed is not None:
        lines.append(f"seed = {problem.seed}")
    return "\n".join(lines) + "\n"

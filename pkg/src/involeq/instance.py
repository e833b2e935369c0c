"""Reading and writing equation instances in the line-oriented text format.

    # comment
    semigroup 3          | cyclic <n>
    0 1 2                  (n table rows follow "semigroup <n>")
    ...
    sigma identity       | sigma negation | sigma <n indices>
    tau identity         | ...
    carrier gf <q>       | carrier zmod <n>
    equation dalembert   | jensen | quadratic
"""

from __future__ import annotations

from pathlib import Path

from .algebra import (
    KINDS,
    EquationInstance,
    FiniteSemigroup,
    Involution,
    build_semigroup,
    cyclic,
    identity_involution,
    make_carrier,
    make_involution,
    negation,
)
from .errors import AlgebraError, InstanceParseError


def _ints(words, line):
    try:
        return [int(w) for w in words]
    except ValueError:
        raise InstanceParseError(line, f"expected integers, got {' '.join(words)!r}") from None


def _strip(raw):
    return raw.split("#", 1)[0].split()


def parse_instance(text: str) -> EquationInstance:
    lines = text.splitlines()
    directives = {}
    S = None
    i = 0
    while i < len(lines):
        lineno = i + 1
        words = _strip(lines[i])
        i += 1
        if not words:
            continue
        key, args = words[0], words[1:]
        if key in directives or (key in ("semigroup", "cyclic") and S is not None):
            raise InstanceParseError(lineno, f"duplicate directive {key!r}")
        if key == "semigroup":
            if len(args) != 1:
                raise InstanceParseError(lineno, "usage: semigroup <n>")
            (n,) = _ints(args, lineno)
            if n < 1:
                raise InstanceParseError(lineno, "semigroup size must be positive")
            rows = []
            while len(rows) < n:
                if i >= len(lines):
                    raise InstanceParseError(i, f"expected {n} table rows, got {len(rows)}")
                row_words = _strip(lines[i])
                i += 1
                if not row_words:
                    continue
                row = _ints(row_words, i)
                if len(row) != n:
                    raise InstanceParseError(i, f"table row needs {n} entries, got {len(row)}")
                rows.append(row)
            try:
                S = build_semigroup(n, rows)
            except AlgebraError as exc:
                raise InstanceParseError(lineno, str(exc)) from None
        elif key == "cyclic":
            if len(args) != 1:
                raise InstanceParseError(lineno, "usage: cyclic <n>")
            (n,) = _ints(args, lineno)
            if n < 1:
                raise InstanceParseError(lineno, "cyclic order must be positive")
            S = cyclic(n)
        elif key in ("sigma", "tau", "carrier", "equation"):
            if not args:
                raise InstanceParseError(lineno, f"{key} needs an argument")
            directives[key] = (lineno, args)
        else:
            raise InstanceParseError(lineno, f"unknown directive {key!r}")

    end = len(lines) + 1
    if S is None:
        raise InstanceParseError(end, "missing semigroup or cyclic directive")
    for key in ("sigma", "tau", "carrier", "equation"):
        if key not in directives:
            raise InstanceParseError(end, f"missing {key} directive")

    lineno, args = directives["carrier"]
    if len(args) != 2 or args[0] not in ("gf", "zmod"):
        raise InstanceParseError(lineno, "usage: carrier gf <q> | carrier zmod <n>")
    try:
        carrier = make_carrier(args[0], _ints(args[1:], lineno)[0])
    except AlgebraError as exc:
        raise InstanceParseError(lineno, str(exc)) from None

    sigma = _parse_involution(S, *directives["sigma"])
    tau = _parse_involution(S, *directives["tau"])

    lineno, args = directives["equation"]
    if len(args) != 1 or args[0] not in KINDS:
        raise InstanceParseError(lineno, "usage: equation dalembert | jensen | quadratic")
    try:
        return EquationInstance(S, sigma, tau, carrier, args[0])
    except AlgebraError as exc:
        raise InstanceParseError(lineno, str(exc)) from None


def _parse_involution(S: FiniteSemigroup, lineno, args) -> Involution:
    try:
        if args == ["identity"]:
            return identity_involution(S)
        if args == ["negation"]:
            return negation(S)
        return make_involution(S, _ints(args, lineno))
    except AlgebraError as exc:
        raise InstanceParseError(lineno, str(exc)) from None


def load_instance(path) -> EquationInstance:
    return parse_instance(Path(path).read_text())


def format_instance(inst: EquationInstance, comment: str | None = None) -> str:
    S = inst.S
    out = []
    if comment:
        out.append(f"# {comment}")
    if S == cyclic(S.size):
        out.append(f"cyclic {S.size}")
    else:
        out.append(f"semigroup {S.size}")
        out.extend(" ".join(map(str, row)) for row in S.op)
    for name, inv in (("sigma", inst.sigma), ("tau", inst.tau)):
        if inv.is_identity:
            out.append(f"{name} identity")
        elif S.is_group and inv == negation(S):
            out.append(f"{name} negation")
        else:
            out.append(f"{name} " + " ".join(map(str, inv.map)))
    kind, order = (inst.carrier.name.split() + [""])[:2]
    if kind not in ("gf", "zmod"):
        raise ValueError(f"carrier {inst.carrier.name} has no text form")
    out.append(f"carrier {kind} {order}")
    out.append(f"equation {inst.kind}")
    return "\n".join(out) + "\n"


def parse_rows(text: str, width: int) -> list[tuple[int, ...]]:
    """Function rows from a solutions listing; header lines (``key: value``) and
    comments are skipped.  Raises InstanceParseError on a row of the wrong width.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        words = _strip(raw)
        if not words or words[0].endswith(":"):
            continue
        row = _ints(words, lineno)
        if len(row) != width:
            raise InstanceParseError(lineno, f"row has {len(row)} values, expected {width}")
        rows.append(tuple(row))
    return rows

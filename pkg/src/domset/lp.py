"""Linear-programming relaxation of the dominating-set problem.

:func:`emit_lp` writes the relaxation in LP-format text (``Minimize`` /
``Subject To`` / ``Bounds`` / ``End``) so any common solver can process it;
no solver is embedded here.  :func:`parse_lp` reads the same dialect back,
and :func:`ingest_bound` turns a solver's optimum into a usable lower bound.

The emitted grammar, byte for byte:

- Section keywords ``Minimize``, ``Subject To``, ``Bounds``, ``End`` start
  at column 0, each on its own line.
- The objective line is `` obj: <terms>``; constraint ``i`` is
  `` c<i>: <terms> >= 1``; terms are joined by `` + `` and a term is either
  ``x<i>`` or ``<coeff> x<i>`` with a non-unit coefficient.
- Long expressions wrap at 200 columns; continuation lines are indented with
  two spaces and never split a token.
- Bounds lines are `` 0 <= x<i> <= 1``, one per variable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .graph import Graph

__all__ = [
    "LpModel",
    "emit_lp",
    "ingest_bound",
    "parse_lp",
    "read_bound_file",
    "write_lp_file",
]

_WRAP_COLUMN = 200

#: Slack subtracted before taking the ceiling of a fractional LP value, so
#: that solver noise slightly above an integer does not round up past it.
EPSILON = 1e-6


def _fmt_coeff(x: float) -> str:
    if x == int(x):
        return str(int(x))
    return repr(x)


def _wrap(prefix: str, tokens: List[str], out: List[str]) -> None:
    """Append ``prefix`` followed by tokens, wrapping long lines."""
    line = prefix
    for tok in tokens:
        if line and len(line) + 1 + len(tok) > _WRAP_COLUMN:
            out.append(line)
            line = "  " + tok
        elif line:
            line = line + " " + tok
        else:
            line = "  " + tok
    out.append(line)


def _terms(pairs: List[Tuple[int, float]]) -> List[str]:
    tokens: List[str] = []
    for idx, (v, coeff) in enumerate(pairs):
        if idx > 0:
            tokens.append("+")
        if coeff == 1.0:
            tokens.append(f"x{v}")
        else:
            tokens.extend([_fmt_coeff(coeff), f"x{v}"])
    return tokens


def emit_lp(g: Graph) -> str:
    """Render the dominating-set LP relaxation as LP-format text.

    Minimizes the (weighted) sum of the vertex variables subject to one
    closed-neighborhood covering constraint per vertex, with every variable
    boxed to [0, 1].
    """
    n = g.n
    lines: List[str] = ["Minimize"]
    if g.weights is not None:
        obj = [(v, float(g.weights[v])) for v in range(n)]
    else:
        obj = [(v, 1.0) for v in range(n)]
    _wrap(" obj:", _terms(obj), lines)
    lines.append("Subject To")
    for v in range(n):
        pairs = [(v, 1.0)] + [(int(u), 1.0) for u in g.neighbors(v)]
        _wrap(f" c{v}:", _terms(pairs) + [">=", "1"], lines)
    lines.append("Bounds")
    for v in range(n):
        lines.append(f" 0 <= x{v} <= 1")
    lines.append("End")
    return "\n".join(lines) + "\n"


@dataclass
class LpModel:
    """Parsed LP-format model: objective, constraints, and variable boxes."""

    minimize: bool = True
    objective: Dict[str, float] = field(default_factory=dict)
    constraints: List[Tuple[str, Dict[str, float], str, float]] = field(
        default_factory=list
    )
    bounds: Dict[str, Tuple[float, float]] = field(default_factory=dict)

    def variables(self) -> List[str]:
        """All variable names, objective first, in first-seen order."""
        seen: Dict[str, None] = {}
        for v in self.objective:
            seen.setdefault(v)
        for _, coeffs, _, _ in self.constraints:
            for v in coeffs:
                seen.setdefault(v)
        for v in self.bounds:
            seen.setdefault(v)
        return list(seen)


def _parse_expr(tokens: List[str]) -> Dict[str, float]:
    coeffs: Dict[str, float] = {}
    sign = 1.0
    pending: Optional[float] = None
    for tok in tokens:
        if tok == "+":
            sign = 1.0
        elif tok == "-":
            sign = -1.0
        else:
            try:
                value = float(tok)
            except ValueError:
                coeff = sign * (1.0 if pending is None else pending)
                coeffs[tok] = coeffs.get(tok, 0.0) + coeff
                sign = 1.0
                pending = None
            else:
                pending = value
    if pending is not None:
        raise ValueError("dangling coefficient in LP expression")
    return coeffs


def parse_lp(text: str) -> LpModel:
    """Parse LP-format text of the dialect written by :func:`emit_lp`.

    Understands ``Minimize``/``Maximize``, ``Subject To``, ``Bounds`` and
    ``End`` sections, named expressions with ``<=``/``>=``/``=`` senses,
    continuation lines, and ``lo <= var <= hi`` bounds rows.
    """
    model = LpModel()
    section = None
    current: Optional[List[str]] = None
    current_name = ""

    def flush() -> None:
        nonlocal current
        if current is None:
            return
        tokens = current
        current = None
        if section == "objective":
            model.objective = _parse_expr(tokens)
            return
        for sense in ("<=", ">=", "="):
            if sense in tokens:
                k = tokens.index(sense)
                lhs = _parse_expr(tokens[:k])
                rhs = float(tokens[k + 1])
                model.constraints.append((current_name, lhs, sense, rhs))
                return
        raise ValueError(f"constraint {current_name!r} has no sense")

    for raw in text.splitlines():
        line = raw.split("\\", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        keyword = stripped.lower()
        if keyword in ("minimize", "maximize", "min", "max"):
            flush()
            section = "objective"
            model.minimize = keyword.startswith("min")
            current = None
            continue
        if keyword in ("subject to", "st", "s.t.", "such that"):
            flush()
            section = "constraints"
            continue
        if keyword == "bounds":
            flush()
            section = "bounds"
            continue
        if keyword == "end":
            flush()
            section = "end"
            continue
        if section == "bounds":
            tokens = stripped.split()
            if len(tokens) == 5 and tokens[1] == "<=" and tokens[3] == "<=":
                model.bounds[tokens[2]] = (float(tokens[0]), float(tokens[4]))
            elif len(tokens) == 3 and tokens[1] in ("<=", ">="):
                lo, hi = (0.0, float(tokens[2]))
                if tokens[1] == ">=":
                    lo, hi = (float(tokens[2]), math.inf)
                model.bounds[tokens[0]] = (lo, hi)
            else:
                raise ValueError(f"unsupported bounds line: {stripped!r}")
            continue
        if section not in ("objective", "constraints"):
            raise ValueError(f"unexpected line outside any section: {stripped!r}")
        head, colon, rest = stripped.partition(":")
        if colon and " " not in head:
            flush()
            current_name = head
            current = rest.split()
        else:
            if current is None:
                current = []
            current.extend(stripped.split())
    flush()
    return model


def ingest_bound(value: float, problem: str = "mds"):
    """Convert an LP optimum into a lower bound for the integer problem.

    For the unweighted problem the optimum is rounded up to the nearest
    integer (the true objective is integral), with a small epsilon guard so
    that values like ``4.0000001`` ingest as 4 rather than 5.  For the
    weighted problem the value passes through unchanged.
    """
    if problem not in ("mds", "mwds"):
        raise ValueError("problem must be 'mds' or 'mwds'")
    if value < 0:
        raise ValueError("bound value must be non-negative")
    if problem == "mds":
        return math.ceil(value - EPSILON)
    return float(value)


def write_lp_file(g: Graph, path) -> None:
    """Write :func:`emit_lp` output to ``path``."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit_lp(g))


def read_bound_file(path) -> float:
    """Read a solver-produced bound: the first number in the file.

    Lines starting with ``#`` are ignored, as is anything after the number.
    """
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            return float(line.split()[0])
    raise ValueError(f"no bound value found in {path}")

"""Global monomial orderings and weight separation.

Every ordering here satisfies the global-ordering axioms: it is a total order
on monomials, 1 is least, and s < t implies s*u < t*u.  Lex, GrLex and
GrevLex take an optional priority permutation of a prefix x1..xk; variables
beyond the declared prefix compare after all declared ones, among themselves
by ascending index, so each ordering extends to arbitrarily many variables.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import InternalInconsistencyError, ParseError
from .monomials import Monomial
from .polynomials import Polynomial, trailing_term


class MonomialOrdering:
    def compare(self, s: Monomial, t: Monomial) -> int:
        """-1, 0 or 1 as s <, ==, > t."""
        raise NotImplementedError

    def less(self, s: Monomial, t: Monomial) -> bool:
        return self.compare(s, t) < 0

    def sort(self, monomials: Iterable[Monomial]) -> list[Monomial]:
        """Ascending: least monomial first."""
        return sorted(monomials, key=functools.cmp_to_key(self.compare))

    def min(self, monomials: Iterable[Monomial]) -> Monomial:
        return functools.reduce(lambda a, b: b if self.compare(b, a) < 0 else a, monomials)

    def max(self, monomials: Iterable[Monomial]) -> Monomial:
        return functools.reduce(lambda a, b: b if self.compare(b, a) > 0 else a, monomials)

    def to_text(self) -> str:
        raise NotImplementedError

    def __repr__(self) -> str:
        return self.to_text()

    def __ne__(self, other) -> bool:
        return not self.__eq__(other)


def _check_priority(priority: Sequence[int]) -> tuple[int, ...]:
    priority = tuple(priority)
    if sorted(priority) != list(range(1, len(priority) + 1)):
        raise ValueError(f"priority must be a permutation of 1..k, got {priority}")
    return priority


class _PriorityOrdering(MonomialOrdering):
    name = ""

    def __init__(self, priority: Sequence[int] = ()):
        self.priority = _check_priority(priority)

    def _sequence(self, s: Monomial, t: Monomial) -> list[int]:
        upto = max(s.max_index(), t.max_index())
        seq = list(self.priority)
        seq.extend(range(len(self.priority) + 1, upto + 1))
        return seq

    def to_text(self) -> str:
        if not self.priority:
            return self.name
        return f"{self.name}:{'>'.join(f'x{i}' for i in self.priority)}"

    def __eq__(self, other):
        return type(other) is type(self) and other.priority == self.priority

    def __hash__(self):
        return hash((self.name, self.priority))


class Lex(_PriorityOrdering):
    name = "lex"

    def compare(self, s: Monomial, t: Monomial) -> int:
        if s.exps == t.exps:
            return 0
        for i in self._sequence(s, t):
            es, et = s.exponent(i), t.exponent(i)
            if es != et:
                return 1 if es > et else -1
        return 0


class GrLex(_PriorityOrdering):
    name = "grlex"

    def compare(self, s: Monomial, t: Monomial) -> int:
        if s.degree != t.degree:
            return 1 if s.degree > t.degree else -1
        if s.exps == t.exps:
            return 0
        for i in self._sequence(s, t):
            es, et = s.exponent(i), t.exponent(i)
            if es != et:
                return 1 if es > et else -1
        return 0


class GrevLex(_PriorityOrdering):
    name = "grevlex"

    def compare(self, s: Monomial, t: Monomial) -> int:
        if s.degree != t.degree:
            return 1 if s.degree > t.degree else -1
        if s.exps == t.exps:
            return 0
        # Equal degree: the last position where they differ decides, and the
        # monomial with the smaller exponent there is the greater one.
        for i in reversed(self._sequence(s, t)):
            es, et = s.exponent(i), t.exponent(i)
            if es != et:
                return 1 if es < et else -1
        return 0


class WeightedLex(MonomialOrdering):
    """Compare by total weight, ties broken by Lex.

    Declared weights must be positive rationals; variables beyond the declared
    vector get weight 1.
    """

    def __init__(self, weights: Sequence, priority: Sequence[int] = ()):
        ws = tuple(Fraction(w) for w in weights)
        if not ws:
            raise ValueError("need at least one weight")
        if any(w <= 0 for w in ws):
            raise ValueError(f"weights must be positive, got {ws}")
        self.weights = ws
        self.tiebreak = Lex(priority)

    def weight(self, m: Monomial) -> Fraction:
        total = Fraction(0)
        for i, e in m:
            w = self.weights[i - 1] if i <= len(self.weights) else Fraction(1)
            total += w * e
        return total

    def compare(self, s: Monomial, t: Monomial) -> int:
        ws, wt = self.weight(s), self.weight(t)
        if ws != wt:
            return 1 if ws > wt else -1
        return self.tiebreak.compare(s, t)

    def to_text(self) -> str:
        body = ",".join(str(w) for w in self.weights)
        if self.tiebreak.priority:
            body += ":" + ">".join(f"x{i}" for i in self.tiebreak.priority)
        return f"wlex:{body}"

    def __eq__(self, other):
        return (
            type(other) is WeightedLex
            and other.weights == self.weights
            and other.tiebreak == self.tiebreak
        )

    def __hash__(self):
        return hash(("wlex", self.weights, self.tiebreak))


class MatrixOrder(MonomialOrdering):
    """Rational matrix rows applied lexicographically to exponent vectors.

    Construction enforces the global axioms: the first nonzero entry of every
    column must be positive (so 1 is least) and the columns must be linearly
    independent over Q (so the order is total).  Monomials mentioning a
    variable beyond the declared columns are rejected at comparison time.
    """

    def __init__(self, rows: Sequence[Sequence]):
        mat = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if not mat or not mat[0]:
            raise ValueError("matrix must be nonempty")
        ncols = len(mat[0])
        if any(len(row) != ncols for row in mat):
            raise ValueError("ragged matrix")
        for j in range(ncols):
            col = [row[j] for row in mat]
            first = next((x for x in col if x != 0), None)
            if first is None or first < 0:
                raise ValueError(
                    f"column {j + 1}: first nonzero entry must be positive"
                )
        if _rational_rank(mat) != ncols:
            raise ValueError("matrix columns must be linearly independent")
        self.rows = mat
        self.ncols = ncols

    def compare(self, s: Monomial, t: Monomial) -> int:
        if s.exps == t.exps:
            return 0
        upto = max(s.max_index(), t.max_index())
        if upto > self.ncols:
            raise ValueError(
                f"monomial uses x{upto} but the ordering matrix has {self.ncols} columns"
            )
        for row in self.rows:
            d = Fraction(0)
            for i, e in s:
                d += row[i - 1] * e
            for i, e in t:
                d -= row[i - 1] * e
            if d != 0:
                return 1 if d > 0 else -1
        return 0

    def to_text(self) -> str:
        body = ",".join("[" + ",".join(str(x) for x in row) + "]" for row in self.rows)
        return f"matrix:[{body}]"

    def __eq__(self, other):
        return type(other) is MatrixOrder and other.rows == self.rows

    def __hash__(self):
        return hash(("matrix", self.rows))


def _rational_rank(mat: tuple[tuple[Fraction, ...], ...]) -> int:
    rows = [list(r) for r in mat]
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def is_submonic(f: Polynomial, ordering: MonomialOrdering) -> bool:
    """True when f is nonzero and its ordering-least monomial has coefficient 1."""
    if f.is_zero():
        return False
    _, c = trailing_term(f, ordering)
    return f.ring.is_one(c)


def is_weight_graded(ordering: MonomialOrdering, nvars: int) -> Optional[tuple[int, ...]]:
    """Positive integer weights the ordering refines, or None when none exist.

    GrLex and GrevLex are graded by total degree; WeightedLex by its own
    weights (scaled to integers); Lex is not weight-graded (x2^k below x1 for
    every k forces a nonpositive weight); a Matrix ordering is graded by its
    first row exactly when that row is strictly positive.
    """
    if nvars < 1:
        raise ValueError("nvars must be >= 1")
    if isinstance(ordering, (GrLex, GrevLex)):
        return (1,) * nvars
    if isinstance(ordering, WeightedLex):
        ws = [
            ordering.weights[i] if i < len(ordering.weights) else Fraction(1)
            for i in range(nvars)
        ]
        return _scale_to_integers(ws)
    if isinstance(ordering, MatrixOrder):
        if nvars > ordering.ncols:
            raise ValueError(
                f"ordering matrix has {ordering.ncols} columns, asked about {nvars} variables"
            )
        row = list(ordering.rows[0][:nvars])
        if all(x > 0 for x in row):
            return _scale_to_integers(row)
        return None
    return None


def _scale_to_integers(ws: list[Fraction]) -> tuple[int, ...]:
    scale = 1
    for w in ws:
        scale = scale * w.denominator // _gcd(scale, w.denominator)
    return tuple(int(w * scale) for w in ws)


def ordering_from_text(text: str) -> MonomialOrdering:
    """Parse the CLI ordering syntax.

    Forms: "lex", "grlex", "grevlex", optionally with a priority suffix
    ":x2>x1"; "wlex:2,3" with positive rational weights (optional priority as
    a second suffix); "matrix:[[1,1],[1,0]]" with rational entries.
    """
    import re

    from .errors import ParseError

    s = text.strip()
    m = re.fullmatch(r"(lex|grlex|grevlex)(?::([xX\d>\s]+))?", s)
    if m:
        cls = {"lex": Lex, "grlex": GrLex, "grevlex": GrevLex}[m.group(1)]
        try:
            return cls(_parse_priority(m.group(2)) if m.group(2) else ())
        except ValueError as exc:
            raise ParseError(str(exc), 0) from None
    m = re.fullmatch(r"wlex:([\d,/\s]+)(?::([xX\d>\s]+))?", s)
    if m:
        try:
            weights = tuple(Fraction(x.strip()) for x in m.group(1).split(","))
            priority = _parse_priority(m.group(2)) if m.group(2) else ()
            return WeightedLex(weights, priority)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(str(exc), 0) from None
    m = re.fullmatch(r"matrix:\[(.*)\]", s)
    if m:
        body = m.group(1)
        rows = re.findall(r"\[([^\[\]]*)\]", body)
        if not rows:
            raise ParseError(f"no rows in {text!r}", 0)
        try:
            parsed = [[Fraction(x.strip()) for x in row.split(",")] for row in rows]
            return MatrixOrder(parsed)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(str(exc), 0) from None
    raise ParseError(f"unknown ordering {text!r}", 0)


def _parse_priority(body: str) -> tuple[int, ...]:
    parts = [p.strip() for p in body.split(">")]
    priority = []
    for p in parts:
        if not p or p[0] not in "xX" or not p[1:].isdigit():
            raise ValueError(f"bad priority entry {p!r}; expected x<index>")
        priority.append(int(p[1:]))
    return tuple(priority)


# Weight separation: find positive integer weights w with
# w(trailing) < w(m) for every m in above.  Feasibility is decided exactly by
# Fourier-Motzkin elimination over Q; the returned integer vector minimizes
# max(w) and is lexicographically least among those.


def separating_weights(
    trailing: Monomial, above: Sequence[Monomial], ordering: MonomialOrdering
) -> tuple[int, ...]:
    for m in above:
        if ordering.compare(trailing, m) >= 0:
            raise ValueError(
                f"precondition violated: {m} is not strictly above {trailing}"
            )
    n = max(
        [trailing.max_index()] + [m.max_index() for m in above] + [1]
    )
    # Integer exponent gaps; separation means dot(delta, w) >= 1 for each row.
    deltas = []
    for m in above:
        deltas.append([m.exponent(i) - trailing.exponent(i) for i in range(1, n + 1)])

    rational = _fourier_motzkin_point(deltas, n)
    if rational is None:
        raise InternalInconsistencyError(
            "no separating weights exist although the ordering ranks the "
            "monomials strictly; global orderings make this impossible"
        )
    scale = 1
    for w in rational:
        scale = scale * w.denominator // _gcd(scale, w.denominator)
    upper = max(int(w * scale) for w in rational)

    lo, hi = 1, upper
    while lo < hi:
        mid = (lo + hi) // 2
        if _box_lex_min(deltas, n, mid) is not None:
            hi = mid
        else:
            lo = mid + 1
    found = _box_lex_min(deltas, n, lo)
    if found is None:
        raise InternalInconsistencyError("integer refinement lost feasibility")
    return tuple(found)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _fourier_motzkin_point(deltas: list[list[int]], n: int) -> Optional[list[Fraction]]:
    """A rational point with every w_i >= 1 satisfying dot(delta, w) >= 1, or None."""
    constraints: list[tuple[list[Fraction], Fraction]] = []
    for d in deltas:
        constraints.append(([Fraction(x) for x in d], Fraction(1)))
    for i in range(n):
        unit = [Fraction(0)] * n
        unit[i] = Fraction(1)
        constraints.append((unit, Fraction(1)))

    stack = []
    current = constraints
    for k in range(n - 1, 0, -1):
        pos = [c for c in current if c[0][k] > 0]
        neg = [c for c in current if c[0][k] < 0]
        rest = [c for c in current if c[0][k] == 0]
        stack.append((k, pos, neg))
        combined = list(rest)
        for cp, rp in pos:
            for cq, rq in neg:
                a, b = -cq[k], cp[k]
                coeffs = [a * x + b * y for x, y in zip(cp, cq)]
                combined.append((coeffs, a * rp + b * rq))
        current = combined

    lo = Fraction(1)
    hi = None
    for coeffs, rhs in current:
        c0 = coeffs[0]
        if c0 == 0:
            if rhs > 0:
                return None
        elif c0 > 0:
            lo = max(lo, rhs / c0)
        else:
            bound = rhs / c0
            hi = bound if hi is None else min(hi, bound)
    if hi is not None and lo > hi:
        return None

    point: list[Optional[Fraction]] = [None] * n
    point[0] = lo
    for k, pos, neg in reversed(stack):
        lo_k = Fraction(1)
        hi_k = None
        for coeffs, rhs in pos:
            rest = sum(coeffs[i] * point[i] for i in range(len(coeffs)) if i != k and coeffs[i] != 0)
            lo_k = max(lo_k, (rhs - rest) / coeffs[k])
        for coeffs, rhs in neg:
            rest = sum(coeffs[i] * point[i] for i in range(len(coeffs)) if i != k and coeffs[i] != 0)
            bound = (rhs - rest) / coeffs[k]
            hi_k = bound if hi_k is None else min(hi_k, bound)
        if hi_k is not None and lo_k > hi_k:
            return None
        point[k] = lo_k
    return point  # type: ignore[return-value]


def _box_lex_min(deltas: list[list[int]], n: int, cap: int) -> Optional[list[int]]:
    """Lexicographically least w in [1, cap]^n with dot(delta, w) >= 1 for all
    rows, or None.  Depth-first with an optimistic interval bound per row."""
    assigned = [1] * n

    def remaining_max(row: list[int], depth: int) -> int:
        total = sum(row[i] * assigned[i] for i in range(depth))
        for i in range(depth, n):
            total += row[i] * (cap if row[i] > 0 else 1)
        return total

    def dfs(depth: int) -> bool:
        if depth == n:
            return all(
                sum(row[i] * assigned[i] for i in range(n)) >= 1 for row in deltas
            )
        for v in range(1, cap + 1):
            assigned[depth] = v
            if all(remaining_max(row, depth + 1) >= 1 for row in deltas):
                if dfs(depth + 1):
                    return True
        assigned[depth] = 1
        return False

    return list(assigned) if dfs(0) else None

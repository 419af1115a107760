"""Linear codes over a field context: duals, hulls, LCD tests, minimum
distance, shortening/puncturing, and a JSONL record store.

A code is held as a full-rank generator matrix.  ``from_generator``
row-reduces arbitrary input to a canonical basis; construction routines
that care about the *shape* of a generator (orthogonal rows, block
structure) use ``from_basis`` to keep their matrix as built.  Code
identity is always compared through the canonical reduced form, so the
two paths agree on what the code is.

The LCD test follows the determinant criterion: C intersects its dual
trivially exactly when det(G G^T) is nonzero, and more generally
dim(C meet C^perp) = k - rank(G G^T).  ``brute_hull`` re-derives the hull
by enumerating codewords, which is the oracle the fast path is tested
against.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, NamedTuple, Optional, Sequence

from . import gf
from .errors import (
    BudgetExceeded,
    ContextMismatch,
    DistanceNotExact,
    EmptyResult,
    ParseError,
    ZeroMatrix,
)
from .matfq import MatrixFq

EXACT = "exact"
LOWER_BOUND = "lower_bound"

DEFAULT_DISTANCE_BUDGET = 1 << 26
DEFAULT_HULL_BUDGET = 1 << 16


class DistanceResult(NamedTuple):
    value: int
    status: str
    upper: Optional[int] = None


class LinearCode:
    """[n, k] linear code held as a full-rank generator matrix."""

    __slots__ = ("ctx", "n", "k", "G", "_canon", "_dist")

    def __init__(self, G: MatrixFq):
        # internal; use from_generator / from_basis
        self.ctx = G.ctx
        self.n = G.c
        self.k = G.r
        self.G = G
        self._canon = None
        self._dist = None

    @classmethod
    def from_generator(cls, G: MatrixFq) -> "LinearCode":
        """Row-reduce arbitrary input to a canonical full-rank basis."""
        if G.is_zero():
            raise ZeroMatrix("generator matrix is all zeros")
        red, pivots = G.rref()
        basis = red.take_rows(range(len(pivots)))
        code = cls(basis)
        code._canon = basis
        return code

    @classmethod
    def from_basis(cls, G: MatrixFq, verify_rank: bool = True) -> "LinearCode":
        """Wrap a known-independent set of rows without reshaping it."""
        if verify_rank and G.rank() != G.r:
            raise ZeroMatrix("rows are linearly dependent")
        return cls(G)

    @classmethod
    def zero(cls, ctx: gf.FieldCtx, n: int) -> "LinearCode":
        return cls(MatrixFq(ctx, 0, n, ()))

    @classmethod
    def full(cls, ctx: gf.FieldCtx, n: int) -> "LinearCode":
        return cls(MatrixFq.identity(ctx, n))

    # -- structure ----------------------------------------------------------

    def canonical(self) -> MatrixFq:
        if self._canon is None:
            red, pivots = self.G.rref()
            self._canon = red.take_rows(range(len(pivots)))
        return self._canon

    def dual(self) -> "LinearCode":
        if self.k == 0:
            return LinearCode.full(self.ctx, self.n)
        H = self.canonical().nullspace()
        if H.r == 0:
            return LinearCode.zero(self.ctx, self.n)
        return LinearCode.from_basis(H, verify_rank=False)

    def gram(self) -> MatrixFq:
        return self.G.gram()

    def hull_dim(self) -> int:
        """dim(C meet C^perp) = k - rank(G G^T)."""
        if self.k == 0:
            return 0
        return self.k - self.gram().rank()

    def is_lcd(self) -> bool:
        if self.k == 0:
            return True
        return self.gram().det() != 0

    def encode(self, message: Sequence[int]) -> tuple[int, ...]:
        ctx = self.ctx
        out = [0] * self.n
        for m, row in zip(message, self.G.rows()):
            if m:
                out = [ctx.add(o, ctx.mul(m, v)) for o, v in zip(out, row)]
        return tuple(out)

    def codewords(self, budget: int = DEFAULT_HULL_BUDGET) -> Iterator[tuple[int, ...]]:
        """All q^k codewords, zero included."""
        if self.ctx.q ** self.k > budget:
            raise BudgetExceeded(f"q^k exceeds {budget}")
        yield from _span_iter(self.G.rows(), self.ctx, self.n)

    def brute_hull(self, budget: int = DEFAULT_HULL_BUDGET) -> MatrixFq:
        """Hull basis by exhaustive enumeration; the oracle for hull_dim."""
        ctx = self.ctx
        grows = self.G.rows()
        members = []
        for w in self.codewords(budget):
            if any(w) and all(_dot(ctx, w, g) == 0 for g in grows):
                members.append(w)
        if not members:
            return MatrixFq(ctx, 0, self.n, ())
        red, pivots = MatrixFq.from_rows(ctx, members).rref()
        return red.take_rows(range(len(pivots)))

    # -- minimum distance --------------------------------------------------

    def distance(self, budget: int = DEFAULT_DISTANCE_BUDGET) -> DistanceResult:
        """Exact d by message enumeration when q^k <= budget, else by
        parity-check column subsets; a budget blow-up there degrades to a
        certified lower bound plus a generator-row upper bound."""
        if self.k == 0:
            raise EmptyResult("zero code has no minimum distance")
        if self._dist is not None and self._dist.status == EXACT:
            return self._dist
        if self.k == self.n:
            result = DistanceResult(1, EXACT)
        elif self.ctx.q ** self.k <= budget:
            result = DistanceResult(
                _distance_by_enumeration(self.G.rows(), self.ctx, self.n),
                EXACT)
        else:
            H = self.dual().G
            value, exact = _distance_by_column_subsets(H, self.n, budget)
            if exact:
                result = DistanceResult(value, EXACT)
            else:
                upper = min(sum(1 for v in row if v) for row in self.G.rows())
                result = DistanceResult(value, LOWER_BOUND, upper)
        self._dist = result
        return result

    def classify(self) -> str:
        """Singleton classification; needs an exactly known distance."""
        if self._dist is None or self._dist.status != EXACT:
            raise DistanceNotExact("compute an exact distance first")
        d = self._dist.value
        if d == self.n - self.k + 1:
            return "MDS"
        if d == self.n - self.k:
            return "almost_MDS"
        return "other"

    # -- coordinate surgery ---------------------------------------------------

    def shorten(self, positions: Sequence[int]) -> "LinearCode":
        """Subcode vanishing on the given coordinates, those columns deleted."""
        pos = sorted(set(positions))
        if any(not 0 <= p < self.n for p in pos):
            raise ValueError("position out of range")
        if not pos:
            return self
        A = self.G.take_cols(pos)
        M = A.transpose().nullspace()  # messages whose codeword dies on pos
        if M.r == 0:
            raise EmptyResult("shortening empties the code")
        newG = (M @ self.G).drop_cols(pos)
        return LinearCode.from_generator(newG)

    def puncture(self, positions: Sequence[int]) -> "LinearCode":
        """Delete the given coordinates."""
        pos = sorted(set(positions))
        if any(not 0 <= p < self.n for p in pos):
            raise ValueError("position out of range")
        if not pos:
            return self
        newG = self.G.drop_cols(pos)
        if newG.c == 0 or newG.is_zero():
            raise EmptyResult("puncturing empties the code")
        return LinearCode.from_generator(newG)

    # -- value semantics -------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, LinearCode) and self.ctx == other.ctx
                and self.n == other.n and self.k == other.k
                and self.canonical() == other.canonical())

    def __hash__(self) -> int:
        return hash((self.n, self.k, self.canonical().entries))

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}] over GF({self.ctx.descriptor}))"


# ---------------------------------------------------------------------------
# distance internals (each usable on its own, so they cross-check each other)

def _dot(ctx: gf.FieldCtx, u: Sequence[int], v: Sequence[int]) -> int:
    s = 0
    for a, b in zip(u, v):
        if a and b:
            s = ctx.add(s, ctx.mul(a, b))
    return s


def _span_iter(rows: Sequence[Sequence[int]], ctx: gf.FieldCtx,
               n: int) -> Iterator[tuple[int, ...]]:
    """All vectors in the row span, zero first, via DFS over coefficients."""
    q = ctx.q
    add = ctx.add
    scaled = [[tuple(ctx.mul(c, v) for v in row) for c in range(q)]
              for row in rows]

    def rec(i: int, vec: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i == len(rows):
            yield vec
            return
        for c in range(q):
            if c == 0:
                yield from rec(i + 1, vec)
            else:
                srow = scaled[i][c]
                yield from rec(i + 1,
                               tuple(add(a, b) for a, b in zip(vec, srow)))

    yield from rec(0, (0,) * n)


def _distance_by_enumeration(rows: Sequence[Sequence[int]], ctx: gf.FieldCtx,
                             n: int) -> int:
    """Minimum weight over one representative per scalar class: messages are
    scanned with their first nonzero coefficient pinned to 1."""
    q = ctx.q
    k = len(rows)
    add_flat = mul_flat = None
    if ctx.q <= 1 << 10:
        add_flat, _ = ctx.tables()
    scaled = [[tuple(ctx.mul(c, v) for v in row) for c in range(q)]
              for row in rows]
    best = n + 1

    def rec(i: int, vec):
        nonlocal best
        if i == k:
            w = n - vec.count(0)
            if w < best:
                best = w
            return
        rec(i + 1, vec)
        for c in range(1, q):
            srow = scaled[i][c]
            if add_flat is not None:
                nxt = tuple(add_flat[a * q + b] for a, b in zip(vec, srow))
            else:
                nxt = tuple(ctx.add(a, b) for a, b in zip(vec, srow))
            rec(i + 1, nxt)

    for lead in range(k):
        rec(lead + 1, scaled[lead][1])
    return best


def _distance_by_column_subsets(H: MatrixFq, n: int,
                                budget: int) -> tuple[int, bool]:
    """Smallest number of linearly dependent parity-check columns.

    Scans subset sizes upward, lexicographically within a size.  Returns
    (d, True) when certified; (w, False) means only d >= w was certified
    before the cost budget ran out.
    """
    from itertools import combinations

    rows_h = H.r
    if rows_h == 0:
        return 1, True
    ctx = H.ctx
    cols = [H.col(j) for j in range(n)]
    ops = 0
    for w in range(1, n + 1):
        if w > rows_h:
            # every size-w subset is dependent once w exceeds rank(H)
            return w, True
        for subset in combinations(range(n), w):
            ops += rows_h * w * w
            if ops > budget:
                return w, False
            if _cols_dependent(ctx, [cols[j] for j in subset], rows_h):
                return w, True
    return n + 1, True


def _cols_dependent(ctx: gf.FieldCtx, cols: list[tuple[int, ...]],
                    height: int) -> bool:
    """Rank of the column set, compared against its size."""
    w = len(cols)
    rows = [[col[i] for col in cols] for i in range(height)]
    rank = 0
    for col in range(w):
        pivot = next((i for i in range(rank, height) if rows[i][col]), None)
        if pivot is None:
            return True
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = ctx.inv(rows[rank][col])
        for i in range(rank + 1, height):
            if rows[i][col]:
                f = ctx.mul(rows[i][col], inv)
                rows[i] = [ctx.sub(a, ctx.mul(f, b))
                           for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == w:
            return False
    return rank < w


# ---------------------------------------------------------------------------
# persistent records

RECORD_TAGS = ("rows", "scaled", "rotated", "extended", "matrix_product",
               "projection", "rs_lemma3")


@dataclass
class CodeRecord:
    """One discovered code: parameters, provenance, and its generator text.

    The timestamp defaults to 0 so same-seed runs write byte-identical
    files; callers that want wall-clock stamps opt in explicitly.
    """

    field: str
    n: int
    k: int
    d: Optional[int]
    d_status: str
    tag: str
    provenance: dict = field(default_factory=dict)
    matrix: str = ""
    timestamp: int = 0

    def key(self) -> tuple[str, int, int]:
        return (self.field, self.n, self.k)

    def generator(self) -> MatrixFq:
        return MatrixFq.from_text(self.matrix)

    def code(self) -> LinearCode:
        return LinearCode.from_basis(self.generator())

    def supersedes(self, other: "CodeRecord") -> bool:
        """Dedupe order: exact beats bounded, then larger d; ties keep the
        earlier record."""
        mine = (self.d_status == EXACT, self.d if self.d is not None else -1)
        theirs = (other.d_status == EXACT,
                  other.d if other.d is not None else -1)
        return mine > theirs

    def to_json(self) -> str:
        payload = {
            "field": self.field, "n": self.n, "k": self.k, "d": self.d,
            "d_status": self.d_status, "tag": self.tag,
            "provenance": self.provenance, "matrix": self.matrix,
            "timestamp": self.timestamp,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "CodeRecord":
        try:
            raw = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad record line: {exc}") from None
        missing = {"field", "n", "k", "d", "d_status", "tag",
                   "provenance", "matrix"} - set(raw)
        if missing:
            raise ParseError(f"record missing fields {sorted(missing)}")
        return cls(field=raw["field"], n=raw["n"], k=raw["k"], d=raw["d"],
                   d_status=raw["d_status"], tag=raw["tag"],
                   provenance=raw["provenance"], matrix=raw["matrix"],
                   timestamp=raw.get("timestamp", 0))

    @classmethod
    def from_code(cls, code: LinearCode, tag: str, provenance: dict,
                  timestamp: int = 0) -> "CodeRecord":
        dist = code.distance()
        return cls(field=code.ctx.descriptor, n=code.n, k=code.k,
                   d=dist.value, d_status=dist.status, tag=tag,
                   provenance=provenance, matrix=code.G.to_text(),
                   timestamp=timestamp)


class RecordStore:
    """JSONL store keyed on (field, n, k), keeping the best record per key.

    ``save`` rewrites the whole file with keys sorted, so equal runs
    produce equal bytes.
    """

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self.records: dict[tuple[str, int, int], CodeRecord] = {}
        if self.path.exists():
            for line in self.path.read_text().splitlines():
                if line.strip():
                    self.add(CodeRecord.from_json(line))

    def add(self, record: CodeRecord) -> bool:
        """Insert under the dedupe policy; True when the store changed."""
        key = record.key()
        held = self.records.get(key)
        if held is None or record.supersedes(held):
            self.records[key] = record
            return True
        return False

    def get(self, field: str, n: int, k: int) -> Optional[CodeRecord]:
        return self.records.get((field, n, k))

    def __len__(self) -> int:
        return len(self.records)

    def save(self) -> None:
        lines = [self.records[key].to_json()
                 for key in sorted(self.records)]
        self.path.write_text("\n".join(lines) + ("\n" if lines else ""))

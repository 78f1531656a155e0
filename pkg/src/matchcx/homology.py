"""Reduced simplicial homology over Q and prime fields.

Boundary maps of the augmented oriented chain complex are built with the
vertices of each face in increasing order. Ranks go through a compiled
kernel when the extension is built, otherwise through the pure-Python one;
set ``MATCHCX_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .complexes import SimplicialComplex, vertices_of
from .errors import InvalidInputError

if os.environ.get("MATCHCX_PURE_PYTHON"):
    from . import _rank as _kernel
    BACKEND = "python"
else:
    try:
        from . import _rank_ext as _kernel
        BACKEND = "cython"
    except ImportError:
        from . import _rank as _kernel
        BACKEND = "python"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``p == 0`` means Q, otherwise GF(p)."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not _is_prime(self.p):
            raise InvalidInputError(f"{self.p} is not prime")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Accepts ``q`` or ``gf:p``."""
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls(0)
        if t.startswith("gf:"):
            try:
                return cls(int(t[3:]))
            except ValueError:
                pass
        raise InvalidInputError(f"unrecognised field {text!r} (use 'q' or 'gf:p')")

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    def __str__(self) -> str:
        return "q" if self.p == 0 else f"gf:{self.p}"


QQ = FieldSpec(0)


def GF(p: int) -> FieldSpec:
    return FieldSpec(p)


@dataclass(frozen=True)
class BoundaryMatrix:
    """Sparse matrix of the boundary map from d-faces to (d-1)-faces.

    ``columns[j]`` lists ``(row, sign)`` for the column of ``cols[j]``.
    """

    d: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    columns: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * len(self.cols) for _ in self.rows]
        for j, col in enumerate(self.columns):
            for r, s in col:
                out[r][j] = s
        return out


def boundary_matrix(cx: SimplicialComplex, d: int) -> BoundaryMatrix:
    rows = tuple(cx.faces(d)) if d >= 0 else ()
    cols = tuple(cx.faces(d + 1))
    index = {f: i for i, f in enumerate(rows)}
    columns = []
    if d >= 0:
        for f in cols:
            col = []
            for i, v in enumerate(vertices_of(f)):
                col.append((index[f ^ (1 << v)], -1 if i & 1 else 1))
            columns.append(tuple(col))
    else:
        columns = [()] * len(cols)
    return BoundaryMatrix(d, rows, cols, tuple(columns))


def rank(matrix: BoundaryMatrix, field: FieldSpec = QQ) -> int:
    return matrix_rank(len(matrix.rows), matrix.columns, field)


def matrix_rank(nrows: int, columns, field: FieldSpec = QQ) -> int:
    """Exact rank of a sparse integer matrix given column-wise."""
    cols = [list(c) for c in columns]
    if not cols or nrows == 0:
        return 0
    if field.is_rational:
        return _kernel.rank_rational(nrows, cols)
    return _kernel.rank_mod_p(nrows, cols, field.p)


@dataclass(frozen=True)
class BettiTable:
    """Reduced Betti numbers for dimensions ``-1..dim``; ``table[i]`` is dimension ``i``."""

    field: FieldSpec
    values: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        k = i + 1
        if 0 <= k < len(self.values):
            return self.values[k]
        return 0

    def as_dict(self) -> dict[int, int]:
        return {i - 1: b for i, b in enumerate(self.values)}

    def euler_characteristic(self) -> int:
        return sum((-1) ** (i - 1) * b for i, b in enumerate(self.values))


def reduced_betti(cx: SimplicialComplex, field: FieldSpec = QQ) -> BettiTable:
    """``betti[i] = dim C_i - rank d_i - rank d_{i+1}``, for ``i = -1..dim``."""
    top = cx.dim
    counts = [len(cx.faces(k)) for k in range(top + 2)]
    ranks = [0] * (top + 3)  # ranks[i + 1] = rank of d_i, d_{-1} = 0
    for d in range(0, top + 1):
        ranks[d + 1] = rank(boundary_matrix(cx, d), field)
    values = tuple(counts[i + 1] - ranks[i + 1] - ranks[i + 2] for i in range(-1, top + 1))
    return BettiTable(field, values)

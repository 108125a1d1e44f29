# =============================================================================
# classes/exact_math.py
# Exact integer linear algebra: ranks, solves, Smith forms, indices
# =============================================================================
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import List, Optional, Sequence, Tuple, Union

from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp

logger = logging.getLogger(__name__)

Rational = Fraction
IntVector = Tuple[int, ...]

INFINITE_INDEX = math.inf


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored row-major"""
    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(f"IntMatrix expects {self.rows * self.cols} entries, got {len(self.entries)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> 'IntMatrix':
        rows = [tuple(int(x) for x in row) for row in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise ValueError(f"Ragged matrix row of length {len(row)}, expected {cols}")
        return cls(len(rows), cols, tuple(x for row in rows for x in row))

    @classmethod
    def identity(cls, n: int) -> 'IntMatrix':
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    def row(self, i: int) -> IntVector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> List[IntVector]:
        return [self.row(i) for i in range(self.rows)]

    def column(self, j: int) -> IntVector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def __matmul__(self, other: 'IntMatrix') -> 'IntMatrix':
        if self.cols != other.rows:
            raise ValueError(f"Shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols = [other.column(j) for j in range(other.cols)]
        return IntMatrix.from_rows(
            [[dot(self.row(i), c) for c in cols] for i in range(self.rows)], cols=other.cols
        )

    def is_diagonal(self) -> bool:
        return all(self.entries[i * self.cols + j] == 0
                   for i in range(self.rows) for j in range(self.cols) if i != j)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def primitive(v: Sequence[int]) -> IntVector:
    """Divide an integer vector by the gcd of its entries"""
    g = reduce(math.gcd, v, 0)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def _as_rows(m: Union[IntMatrix, Sequence[Sequence[int]]]) -> Tuple[List[List[int]], int]:
    if isinstance(m, IntMatrix):
        return [list(r) for r in m.to_rows()], m.cols
    rows = [list(r) for r in m]
    return rows, (len(rows[0]) if rows else 0)


def _bareiss_echelon(rows: List[List[int]], ncols: int) -> Tuple[List[List[int]], List[int]]:
    """Fraction-free forward elimination. Returns (echelon rows, pivot columns).

    Every intermediate entry is a minor of the input, so the divisions by the
    previous pivot are exact.
    """
    a = [list(r) for r in rows]
    m = len(a)
    prev = 1
    r = 0
    pivots: List[int] = []
    for c in range(ncols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, m):
            f = a[i][c]
            row_i = a[i]
            row_r = a[r]
            for j in range(c + 1, ncols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: Union[IntMatrix, Sequence[Sequence[int]]]) -> int:
    """Rank over Q by Bareiss elimination"""
    rows, ncols = _as_rows(m)
    if not rows or ncols == 0:
        return 0
    _, pivots = _bareiss_echelon(rows, ncols)
    return len(pivots)


def solve_rational(m: Union[IntMatrix, Sequence[Sequence[int]]],
                   rhs: Sequence[Union[int, Fraction]]) -> Optional[Tuple[Fraction, ...]]:
    """One exact solution of m·x = rhs, or None when the system is inconsistent.

    Free variables are set to zero.
    """
    rows, ncols = _as_rows(m)
    if len(rhs) != len(rows):
        raise ValueError(f"rhs has length {len(rhs)}, matrix has {len(rows)} rows")
    rhs = [Fraction(b) for b in rhs]
    scale = reduce(lambda x, y: x * y // math.gcd(x, y), (b.denominator for b in rhs), 1)
    augmented = [row + [int(b * scale)] for row, b in zip(rows, rhs)]
    echelon, pivots = _bareiss_echelon(augmented, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        acc = Fraction(echelon[r][ncols])
        for j in range(c + 1, ncols):
            if echelon[r][j]:
                acc -= echelon[r][j] * x[j]
        x[c] = acc / echelon[r][c]
    return tuple(v / scale for v in x)


def _domain_matrix(m: IntMatrix) -> DomainMatrix:
    return DomainMatrix([[ZZ(x) for x in row] for row in m.to_rows()], (m.rows, m.cols), ZZ)


def _int_rows(dm: DomainMatrix) -> List[List[int]]:
    return [[int(x) for x in row] for row in dm.to_Matrix().tolist()]


def unimodular_inverse(m: IntMatrix) -> IntMatrix:
    """Integer inverse of a square matrix with determinant ±1"""
    if m.rows != m.cols:
        raise ValueError("inverse needs a square matrix")
    if m.rows == 0:
        return m
    dm = _domain_matrix(m)
    if abs(int(dm.det())) != 1:
        raise ValueError("matrix is not unimodular")
    inv = dm.convert_to(QQ).inv().convert_to(ZZ)
    return IntMatrix.from_rows(_int_rows(inv), cols=m.cols)


def smith_normal_form(m: IntMatrix) -> Tuple[List[int], IntMatrix, IntMatrix]:
    """Smith normal form with unimodular transforms.

    Returns (diagonal, left, right) such that left·m·right is diagonal with
    nonnegative entries d_1 | d_2 | ...; the diagonal has min(rows, cols) entries.
    """
    if m.rows == 0 or m.cols == 0:
        return [], IntMatrix.identity(m.rows), IntMatrix.identity(m.cols)
    smf, s, t = smith_normal_decomp(_domain_matrix(m))
    smf_rows = _int_rows(smf)
    left_rows = _int_rows(s)
    right = IntMatrix.from_rows(_int_rows(t), cols=m.cols)

    diagonal = []
    for i in range(min(m.rows, m.cols)):
        d = smf_rows[i][i]
        if d < 0:
            left_rows[i] = [-x for x in left_rows[i]]
            d = -d
        diagonal.append(d)
    left = IntMatrix.from_rows(left_rows, cols=m.rows)
    logger.debug(f"Smith form of {m.rows}x{m.cols} matrix: {diagonal}")
    return diagonal, left, right


def lattice_index(generators: IntMatrix) -> Union[int, float]:
    """Index of the span of the generator rows inside Z^cols, or INFINITE_INDEX"""
    if generators.cols == 0:
        return 1
    if generators.rows == 0 or rank(generators) < generators.cols:
        return INFINITE_INDEX
    diagonal, _, _ = smith_normal_form(generators)
    return reduce(lambda x, y: x * y, diagonal, 1)


def saturated_row_basis(rows: Sequence[Sequence[int]], ncols: int) -> Tuple[IntMatrix, IntMatrix]:
    """Z-basis of (Q-span of rows) ∩ Z^ncols and a unimodular completion.

    Returns (basis, completion) where completion is a unimodular ncols×ncols
    matrix whose first rank rows are the basis.
    """
    rows = [tuple(int(x) for x in r) for r in rows if any(r)]
    if not rows:
        return IntMatrix(0, ncols, ()), IntMatrix.identity(ncols)
    a = IntMatrix.from_rows(rows, cols=ncols)
    diagonal, _, right = smith_normal_form(a)
    k = sum(1 for d in diagonal if d != 0)
    # row space of a equals the row space of D·right^{-1}
    completion = unimodular_inverse(right)
    basis = IntMatrix.from_rows(completion.to_rows()[:k], cols=ncols)
    return basis, completion

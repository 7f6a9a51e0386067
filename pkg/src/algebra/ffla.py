"""
Dense linear algebra over prime fields F_q.

Matrices are numpy int64 arrays whose entries are kept reduced to [0, q).
Row reduction follows the usual pivot-list Gaussian elimination; every
enumeration here is deterministic so that iso-class ids derived from it are
stable across runs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from src.utils.errors import ConsistencyError, ContractError, FieldError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, int(n ** 0.5) + 1):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field F_q for a prime q"""

    q: int

    def __post_init__(self):
        if not is_prime(self.q):
            raise FieldError(f"field order must be prime, got {self.q}")

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def neg(self, a: int) -> int:
        return (-a) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise FieldError("inversion of zero")
        return pow(a, self.q - 2, self.q)


_FIELD_OPS = ("add", "mul", "inv", "neg")


def field_arith(q: int, op: str, a: int, b: int = 0) -> int:
    """Single field operation on residues a, b < q"""
    field = PrimeField(q)
    if op not in _FIELD_OPS:
        raise ContractError(f"unknown field operation {op!r}")
    if not (0 <= a < q and 0 <= b < q):
        raise ContractError(f"operands must be residues modulo {q}")
    if op in ("inv", "neg"):
        return getattr(field, op)(a)
    return getattr(field, op)(a, b)


@dataclass(frozen=True)
class FqMatrix:
    """Row-major matrix of residues, the serializable form of a linear map"""

    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ContractError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        if any(e < 0 for e in self.entries):
            raise ContractError("matrix entries must be non-negative residues")

    def check_field(self, q: int) -> None:
        if any(e >= q for e in self.entries):
            raise ContractError(f"matrix entry out of range for F_{q}")

    def to_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.rows, self.cols)

    @classmethod
    def from_array(cls, array: np.ndarray) -> "FqMatrix":
        array = np.asarray(array, dtype=np.int64)
        return cls(int(array.shape[0]), int(array.shape[1]), tuple(int(x) for x in array.reshape(-1)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "FqMatrix":
        rows = [list(r) for r in rows]
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        if any(len(r) != width for r in rows):
            raise ContractError("ragged matrix rows")
        return cls(len(rows), width, tuple(int(x) for r in rows for x in r))


def as_matrix(values, q: int, shape: Optional[Tuple[int, int]] = None) -> np.ndarray:
    """Coerce nested lists or arrays into a reduced int64 matrix"""
    array = np.asarray(values, dtype=np.int64)
    if shape is not None:
        if array.size == 0:
            array = np.zeros(shape, dtype=np.int64)
        elif array.shape != shape:
            raise ContractError(f"expected a {shape[0]}x{shape[1]} matrix, got shape {array.shape}")
    return array % q


def matmul(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ContractError(f"cannot multiply {a.shape} by {b.shape}")
    return (a @ b) % q


def row_echelon(matrix: np.ndarray, q: int, n_pivot_cols: Optional[int] = None) -> Tuple[np.ndarray, List[int]]:
    """Reduced row-echelon form over F_q.

    Args:
        matrix: m x n matrix.
        q: field order.
        n_pivot_cols: only search for pivots in the first *n_pivot_cols*
            columns; row operations still apply to the full row width.

    Returns:
        (R, pivot_cols) with R reduced, rows beyond the rank all zero.
    """
    R = (np.asarray(matrix, dtype=np.int64) % q).copy()
    m, n = R.shape
    if n_pivot_cols is None:
        n_pivot_cols = n

    pivot_cols: List[int] = []
    pivot_row = 0

    for col in range(n_pivot_cols):
        if pivot_row >= m:
            break
        nonzero = np.nonzero(R[pivot_row:, col])[0]
        if nonzero.size == 0:
            continue
        found = pivot_row + int(nonzero[0])

        if found != pivot_row:
            R[[pivot_row, found]] = R[[found, pivot_row]]

        inverse = pow(int(R[pivot_row, col]), q - 2, q)
        R[pivot_row] = (R[pivot_row] * inverse) % q

        for row in range(m):
            if row != pivot_row and R[row, col]:
                R[row] = (R[row] - R[row, col] * R[pivot_row]) % q

        pivot_cols.append(col)
        pivot_row += 1

    return R, pivot_cols


def rank(matrix: np.ndarray, q: int) -> int:
    if matrix.size == 0:
        return 0
    _, pivots = row_echelon(matrix, q)
    return len(pivots)


def nullspace(matrix: np.ndarray, q: int) -> np.ndarray:
    """Basis of {x : matrix @ x = 0}, one basis vector per row"""
    m, n = matrix.shape
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if m == 0:
        return np.eye(n, dtype=np.int64)
    R, pivots = row_echelon(matrix, q)
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, p in enumerate(pivots):
            basis[k, p] = (-R[i, f]) % q
    return basis


def row_space(matrix: np.ndarray, q: int) -> np.ndarray:
    """Reduced echelon basis of the span of the rows"""
    if matrix.shape[0] == 0:
        return np.zeros((0, matrix.shape[1]), dtype=np.int64)
    R, pivots = row_echelon(matrix, q)
    return R[: len(pivots)]


def column_space(matrix: np.ndarray, q: int) -> np.ndarray:
    """Reduced echelon basis (as rows) of the image of a column-acting matrix"""
    return row_space(matrix.T, q)


@dataclass(frozen=True)
class SolveResult:
    solution: np.ndarray
    kernel: np.ndarray
    rank: int


def linear_solve(A: np.ndarray, b: np.ndarray, q: int, verify: bool = False) -> Optional[SolveResult]:
    """Solve A x = b over F_q.

    Returns a particular solution with a kernel basis, or None when the
    system is inconsistent. With *verify* the solution is checked by
    substitution.
    """
    A = np.asarray(A, dtype=np.int64) % q
    b = np.asarray(b, dtype=np.int64).reshape(-1) % q
    m, n = A.shape
    if b.shape[0] != m:
        raise ContractError(f"right-hand side has length {b.shape[0]}, system has {m} rows")

    augmented = np.concatenate([A, b.reshape(m, 1)], axis=1)
    R, pivots = row_echelon(augmented, q, n_pivot_cols=n)
    for row in range(len(pivots), m):
        if R[row, n]:
            return None

    solution = np.zeros(n, dtype=np.int64)
    for i, p in enumerate(pivots):
        solution[p] = R[i, n]

    result = SolveResult(solution=solution, kernel=nullspace(A, q), rank=len(pivots))
    if verify and m and not np.array_equal(matmul(A, solution.reshape(n, 1), q).reshape(-1), b):
        raise ConsistencyError("linear_solve produced a vector that does not satisfy the system")
    return result


def inverse(matrix: np.ndarray, q: int) -> np.ndarray:
    n = matrix.shape[0]
    if matrix.shape != (n, n):
        raise ContractError(f"only square matrices are invertible, got {matrix.shape}")
    augmented = np.concatenate([matrix % q, np.eye(n, dtype=np.int64)], axis=1)
    R, pivots = row_echelon(augmented, q, n_pivot_cols=n)
    if len(pivots) != n:
        raise FieldError("matrix is singular")
    return R[:, n:]


def is_invertible(matrix: np.ndarray, q: int) -> bool:
    n = matrix.shape[0]
    return matrix.shape == (n, n) and rank(matrix, q) == n


def complete_basis(rows: np.ndarray, n: int, q: int) -> np.ndarray:
    """Extend independent rows to a basis of F_q^n.

    Standard basis vectors are appended in index order and kept when they
    enlarge the span; the given rows come first.
    """
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    basis = np.asarray(rows, dtype=np.int64).reshape(-1, n) % q
    current = rank(basis, q)
    for i in range(n):
        if current == n:
            break
        candidate = np.concatenate([basis, np.eye(n, dtype=np.int64)[i : i + 1]], axis=0)
        r = rank(candidate, q)
        if r > current:
            basis, current = candidate, r
    return basis


def subspace_enumerate(n: int, d: int, q: int) -> Iterator[np.ndarray]:
    """Yield every d-dimensional subspace of F_q^n exactly once.

    Each subspace is a d x n reduced row-echelon basis. Order is
    lexicographic in the pivot pattern, then in the free entries.
    """
    PrimeField(q)
    if d < 0 or d > n:
        return
    for pivots in itertools.combinations(range(n), d):
        pivot_set = set(pivots)
        free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, n) if j not in pivot_set]
        for values in itertools.product(range(q), repeat=len(free)):
            basis = np.zeros((d, n), dtype=np.int64)
            for i, p in enumerate(pivots):
                basis[i, p] = 1
            for (i, j), v in zip(free, values):
                basis[i, j] = v
            yield basis


def gaussian_binomial(n: int, d: int, q: int) -> int:
    if d < 0 or d > n:
        return 0
    num = 1
    den = 1
    for i in range(d):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def gl_order(n: int, q: int) -> int:
    """|GL_n(F_q)|"""
    order = 1
    for i in range(n):
        order *= q ** n - q ** i
    return order

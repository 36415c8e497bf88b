"""Exact rational linear algebra over Minkowski 4-space.

Scalars are ``fractions.Fraction`` throughout; nothing in this module touches
floating point.  Vectors are 4-tuples of Fractions, matrices are tuples of row
tuples.  The signature convention is (+, +, +, -) with ``eta`` the diagonal
form matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence


class DependentBasisError(ValueError):
    """Raised when an operation requires linearly independent input vectors."""


class DimensionMismatchError(ValueError):
    """Raised when matrix/vector shapes are inconsistent."""


def frac(x) -> Fraction:
    """Coerce ints, strings like ``"3/4"``, and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def vec4(a, b, c, d):
    return (frac(a), frac(b), frac(c), frac(d))


ZERO4 = vec4(0, 0, 0, 0)
E1 = vec4(1, 0, 0, 0)
E2 = vec4(0, 1, 0, 0)
E3 = vec4(0, 0, 1, 0)
E4 = vec4(0, 0, 0, 1)
ELL = vec4(0, 0, 1, -1)  # generator of the null line spanned by e3 - e4


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u):
    c = frac(c)
    return tuple(c * a for a in u)


def vneg(u):
    return tuple(-a for a in u)


def is_zero_vec(u) -> bool:
    return all(a == 0 for a in u)


def mat(rows) -> tuple:
    """Build an immutable exact matrix from an iterable of rows."""
    out = tuple(tuple(frac(x) for x in row) for row in rows)
    width = len(out[0]) if out else 0
    if any(len(row) != width for row in out):
        raise DimensionMismatchError("ragged rows")
    return out


IDENTITY4 = mat([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
ETA = mat([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]])
ZERO_MAT4 = mat([[0] * 4 for _ in range(4)])


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, a):
    c = frac(c)
    return tuple(tuple(c * x for x in row) for row in a)


def matmul(a, b):
    if len(a[0]) != len(b):
        raise DimensionMismatchError("inner dimensions differ")
    bt = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(a, v):
    if len(a[0]) != len(v):
        raise DimensionMismatchError("matrix width != vector length")
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def transpose(a):
    return tuple(zip(*a))


def mat_is_zero(a) -> bool:
    return all(x == 0 for row in a for x in row)


def trace(a):
    return sum(a[i][i] for i in range(len(a)))


def mink_inner(u, v) -> Fraction:
    """Minkowski inner product u1*v1 + u2*v2 + u3*v3 - u4*v4."""
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] - u[3] * v[3]


# ---------------------------------------------------------------------------
# Row reduction and linear solving
# ---------------------------------------------------------------------------


def rref(rows):
    """Reduced row echelon form with leftmost-column-first pivoting.

    Returns ``(reduced_rows, pivot_columns)``.  Input is not mutated.  The
    leftmost-pivot rule keeps kernel bases reproducible across runs.
    """
    work = [list(r) for r in rows]
    nrows = len(work)
    ncols = len(work[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if work[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = Fraction(1) / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(nrows):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return [tuple(row) for row in work], pivots


def rank_of(rows) -> int:
    if not rows:
        return 0
    _, pivots = rref(rows)
    return len(pivots)


def echelon_basis(vectors):
    """Deterministic echelonized basis of the span of ``vectors``."""
    if not vectors:
        return []
    reduced, pivots = rref(vectors)
    return [reduced[i] for i in range(len(pivots))]


def span_contains(vectors, v):
    """Coefficients expressing ``v`` in ``vectors``, or None if outside the span."""
    if not vectors:
        return None if not is_zero_vec(v) else ()
    cols = [list(w) for w in vectors]
    a = [tuple(col[i] for col in cols) for i in range(len(v))]
    sol = solve_linear(a, v)
    return sol.particular


def spans_equal(vs, ws) -> bool:
    if not vs and not ws:
        return True
    ra = echelon_basis(list(vs)) if vs else []
    rb = echelon_basis(list(ws)) if ws else []
    return ra == rb


@dataclass(frozen=True)
class LinearSolution:
    """Exact affine solution set of A x = b.

    ``particular`` is None when the system is inconsistent; otherwise
    particular + span(kernel) is the full solution set.
    """

    particular: tuple | None
    kernel: tuple
    rank: int


def solve_linear(a, b) -> LinearSolution:
    """Solve A x = b exactly; also used as the kernel/rank workhorse."""
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    if len(b) != nrows:
        raise DimensionMismatchError(f"A has {nrows} rows but b has {len(b)} entries")
    aug = [list(row) + [bv] for row, bv in zip(a, b)]
    if not aug:
        return LinearSolution(particular=(), kernel=(), rank=0)
    reduced, pivots = rref(aug)
    inconsistent = ncols in pivots
    pivots = [p for p in pivots if p < ncols]
    rank = len(pivots)
    kernel = _kernel_from_rref(reduced, pivots, ncols)
    if inconsistent:
        return LinearSolution(particular=None, kernel=kernel, rank=rank)
    particular = [Fraction(0)] * ncols
    for row_idx, p in enumerate(pivots):
        particular[p] = reduced[row_idx][ncols]
    return LinearSolution(particular=tuple(particular), kernel=kernel, rank=rank)


def _kernel_from_rref(reduced, pivots, ncols):
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row_idx, p in enumerate(pivots):
            v[p] = -reduced[row_idx][f]
        basis.append(tuple(v))
    return tuple(basis)


def kernel_of(a):
    """Basis of the null space of A (deterministic free-variable order)."""
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    if nrows == 0:
        return tuple()
    reduced, pivots = rref(a)
    return _kernel_from_rref(reduced, pivots, ncols)


# ---------------------------------------------------------------------------
# Characteristic polynomial (Faddeev-LeVerrier, exact)
# ---------------------------------------------------------------------------


def char_poly(m):
    """Coefficients (1, c1, c2, c3, c4) of det(lambda*I - M) for a 4x4 M."""
    n = len(m)
    coeffs = [Fraction(1)]
    mk = m
    ident = mat([[1 if i == j else 0 for j in range(n)] for i in range(n)])
    for k in range(1, n + 1):
        ck = -trace(mk) / k
        coeffs.append(ck)
        if k < n:
            mk = matmul(m, mat_add(mk, mat_scale(ck, ident)))
    return tuple(coeffs)


# ---------------------------------------------------------------------------
# Causal classification (Sylvester signature, no square roots)
# ---------------------------------------------------------------------------


class CausalKind(Enum):
    SPACELIKE = "Spacelike"
    TIMELIKE = "Timelike"
    LIGHTLIKE = "Lightlike"
    LORENTZIAN = "Lorentzian"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class CausalClass:
    kind: CausalKind
    n_plus: int
    n_minus: int
    n_zero: int

    def __str__(self):
        return f"{self.kind.value} ({self.n_plus},{self.n_minus},{self.n_zero})"


def sylvester_signature(gram):
    """Signature (n_plus, n_minus, n_zero) of a symmetric rational matrix.

    Symmetric congruence reduction; stays in the rationals (never eigenvalues).
    A zero diagonal with a nonzero off-diagonal entry is repaired by the usual
    row+column addition before pivoting.
    """
    n = len(gram)
    work = [list(row) for row in gram]
    for i in range(n):
        if work[i][i] == 0:
            swap = next((j for j in range(i + 1, n) if work[j][j] != 0), None)
            if swap is not None:
                work[i], work[swap] = work[swap], work[i]
                for row in work:
                    row[i], row[swap] = row[swap], row[i]
            else:
                j = next((j for j in range(i + 1, n) if work[i][j] != 0), None)
                if j is not None:
                    for c in range(n):
                        work[i][c] += work[j][c]
                    for r in range(n):
                        work[r][i] += work[r][j]
        d = work[i][i]
        if d == 0:
            continue
        for j in range(i + 1, n):
            if work[j][i] != 0:
                f = work[j][i] / d
                for c in range(n):
                    work[j][c] -= f * work[i][c]
                for r in range(n):
                    work[r][j] -= f * work[r][i]
    n_plus = sum(1 for i in range(n) if work[i][i] > 0)
    n_minus = sum(1 for i in range(n) if work[i][i] < 0)
    return n_plus, n_minus, n - n_plus - n_minus


def classify_signature(n_plus, n_minus, n_zero) -> CausalClass:
    dim = n_plus + n_minus + n_zero
    if n_minus > 1:
        raise ValueError(f"impossible signature in (3,1): ({n_plus},{n_minus},{n_zero})")
    if n_minus == 1:
        if n_zero:
            raise ValueError("a subspace cannot carry both a radical and a timelike direction")
        kind = CausalKind.TIMELIKE if dim == 1 else CausalKind.LORENTZIAN
    elif n_zero == 1:
        kind = CausalKind.LIGHTLIKE if dim == 1 else CausalKind.DEGENERATE
    elif n_zero > 1:
        raise ValueError("radical dimension exceeds 1 in Lorentz signature")
    else:
        kind = CausalKind.SPACELIKE  # includes the trivial subspace (0,0,0)
    return CausalClass(kind, n_plus, n_minus, n_zero)


def causal_type(basis: Sequence) -> CausalClass:
    """Causal class of the subspace spanned by an independent basis."""
    basis = list(basis)
    if not basis:
        return CausalClass(CausalKind.SPACELIKE, 0, 0, 0)
    if rank_of(basis) != len(basis):
        raise DependentBasisError("causal_type requires an independent basis")
    gram = [[mink_inner(u, v) for v in basis] for u in basis]
    return classify_signature(*sylvester_signature(gram))

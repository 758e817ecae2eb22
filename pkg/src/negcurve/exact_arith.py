"""Exact scalars (rationals or prime residues) and exact linear algebra.

No floating point anywhere: rationals are `fractions.Fraction`, prime fields
are ints in [0, p).  Elimination over Q is fraction-free (Bareiss) so entries
stay integral until the final back-substitution; over F_p it is ordinary
Gauss-Jordan.  Pivoting is deterministic (first nonzero in row-major order),
so kernel bases are reproducible across runs.
"""

from fractions import Fraction
from math import comb, gcd


class CharMismatch(ValueError):
    """Raised when arithmetic would mix characteristics."""


def binomial(n, k):
    """Generalized binomial: n(n-1)...(n-k+1)/k!, exact for any integer n."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if n >= 0:
        return comb(n, k)
    # binomial(n,k) = (-1)^k binomial(k-n-1, k) for n < 0
    return (-1) ** k * comb(k - n - 1, k)


def _residue(value, p):
    """Reduce an int or Fraction to a residue in [0, p)."""
    if isinstance(value, Fraction):
        if value.denominator % p == 0:
            raise CharMismatch("denominator %d not invertible mod %d" % (value.denominator, p))
        return value.numerator * pow(value.denominator, -1, p) % p
    return value % p


class Scalar:
    """A field element: Fraction at char 0, residue in [0, p) at char p."""

    __slots__ = ("char", "val")

    def __init__(self, value, char=0):
        if isinstance(value, Scalar):
            if value.char != char:
                raise CharMismatch("scalar of char %s used at char %s" % (value.char, char))
            value = value.val
        self.char = char
        self.val = Fraction(value) if char == 0 else _residue(value, char)

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.char != self.char:
                raise CharMismatch("cannot mix char %s and char %s" % (self.char, other.char))
            return other
        return Scalar(other, self.char)

    def __add__(self, other):
        other = self._coerce(other)
        return Scalar(self.val + other.val, self.char)

    def __sub__(self, other):
        other = self._coerce(other)
        return Scalar(self.val - other.val, self.char)

    def __mul__(self, other):
        other = self._coerce(other)
        return Scalar(self.val * other.val, self.char)

    def __truediv__(self, other):
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero scalar")
        if self.char == 0:
            return Scalar(self.val / other.val, 0)
        return Scalar(self.val * pow(other.val, -1, self.char), self.char)

    def __neg__(self):
        return Scalar(-self.val, self.char)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __bool__(self):
        return self.val != 0

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.char == other.char and self.val == other.val
        return self.val == (Fraction(other) if self.char == 0 else other % self.char)

    def __hash__(self):
        return hash((self.char, self.val))

    def __repr__(self):
        if self.char == 0:
            return "Scalar(%s)" % self.val
        return "Scalar(%d mod %d)" % (self.val, self.char)


class Matrix:
    """Dense matrix of Scalars sharing one characteristic."""

    __slots__ = ("rows", "cols", "char", "entries")

    def __init__(self, entries, char=0):
        self.entries = [[Scalar(e, char) for e in row] for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(row) != self.cols for row in self.entries):
            raise ValueError("ragged matrix")
        self.char = char

    def raw(self):
        """Entries as plain ints/Fractions."""
        return [[e.val for e in row] for row in self.entries]


def _bareiss_ref(rows, ncols):
    """Fraction-free row echelon form of an integer matrix, in place.

    Returns the list of pivot (row, col) pairs.  Divisions are exact: every
    working entry is a minor of the original matrix up to sign.
    """
    prev = 1
    pr = 0
    pivots = []
    nrows = len(rows)
    for pc in range(ncols):
        pivot = None
        for i in range(pr, nrows):
            if rows[i][pc]:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != pr:
            rows[pr], rows[pivot] = rows[pivot], rows[pr]
        piv = rows[pr][pc]
        for i in range(pr + 1, nrows):
            ri = rows[i]
            f = ri[pc]
            rp = rows[pr]
            for j in range(pc, ncols):
                ri[j] = (piv * ri[j] - f * rp[j]) // prev
        prev = piv
        pivots.append((pr, pc))
        pr += 1
        if pr == nrows:
            break
    return pivots


def _kernel_from_ref(rows, ncols, pivots):
    """Kernel basis (lists of Fractions) from an integer REF."""
    pivot_cols = [pc for _, pc in pivots]
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for f in free_cols:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for i in range(len(pivots) - 1, -1, -1):
            pr, pc = pivots[i]
            s = Fraction(0)
            row = rows[pr]
            for j in range(pc + 1, ncols):
                if vec[j]:
                    s += row[j] * vec[j]
            vec[pc] = -s / row[pc]
        basis.append(vec)
    return basis


def _kernel_mod_p(rows, ncols, p):
    """Kernel basis over F_p by Gauss-Jordan; rows is a list of int lists."""
    rows = [[x % p for x in row] for row in rows]
    pr = 0
    pivots = []
    for pc in range(ncols):
        pivot = None
        for i in range(pr, len(rows)):
            if rows[i][pc]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[pr], rows[pivot] = rows[pivot], rows[pr]
        inv = pow(rows[pr][pc], -1, p)
        rows[pr] = [x * inv % p for x in rows[pr]]
        for i in range(len(rows)):
            if i != pr and rows[i][pc]:
                f = rows[i][pc]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[pr])]
        pivots.append((pr, pc))
        pr += 1
        if pr == len(rows):
            break
    pivot_cols = [pc for _, pc in pivots]
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for f in free_cols:
        vec = [0] * ncols
        vec[f] = 1
        for pr, pc in pivots:
            vec[pc] = -rows[pr][f] % p
        basis.append(vec)
    return basis


def nullspace(M):
    """Exact basis of the right kernel of a Matrix.

    Basis vectors are scaled so the first nonzero entry is 1; order follows
    ascending free column, which is deterministic for fixed input.
    """
    if M.cols == 0:
        return []
    out = []
    if M.char == 0:
        # clear denominators row by row so Bareiss sees integers
        rows = []
        for row in M.entries:
            den = 1
            for e in row:
                den = den * e.val.denominator // gcd(den, e.val.denominator)
            rows.append([int(e.val * den) for e in row])
        pivots = _bareiss_ref(rows, M.cols)
        for vec in _kernel_from_ref(rows, M.cols, pivots):
            lead = next(x for x in vec if x)
            out.append([Scalar(x / lead, 0) for x in vec])
    else:
        p = M.char
        for vec in _kernel_mod_p([[e.val for e in row] for row in M.entries], M.cols, p):
            lead = next(x for x in vec if x)
            inv = pow(lead, -1, p)
            out.append([Scalar(x * inv, p) for x in vec])
    return out


def rank_mod_p(int_rows, p):
    """Rank of an integer matrix reduced mod p."""
    rows = [[x % p for x in row] for row in int_rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    pr = 0
    for pc in range(ncols):
        pivot = None
        for i in range(pr, len(rows)):
            if rows[i][pc]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[pr], rows[pivot] = rows[pivot], rows[pr]
        inv = pow(rows[pr][pc], -1, p)
        for i in range(pr + 1, len(rows)):
            if rows[i][pc]:
                f = rows[i][pc] * inv % p
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[pr])]
        pr += 1
        if pr == len(rows):
            break
    return pr


def rational_rank(int_rows):
    """Rank over Q of an integer matrix (Bareiss)."""
    if not int_rows:
        return 0
    rows = [list(r) for r in int_rows]
    return len(_bareiss_ref(rows, len(rows[0])))


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(int_rows):
    """Smith normal form with recorded transforms.

    Returns (diag, U, V) with U*M*V diagonal, diag[i] | diag[i+1], U and V
    unimodular.  diag has length min(rows, cols); trailing zeros allowed.
    """
    A = [list(r) for r in int_rows]
    n = len(A)
    m = len(A[0]) if n else 0
    U = _identity(n)
    V = _identity(m)

    def row_op(i, j, q):  # row_i -= q*row_j
        A[i] = [a - q * b for a, b in zip(A[i], A[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, q):  # col_i -= q*col_j
        for row in A:
            row[i] -= q * row[j]
        for row in V:
            row[i] -= q * row[j]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(n, m):
        # locate a nonzero entry of minimal absolute value in the submatrix
        best = None
        for i in range(t, n):
            for j in range(t, m):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            reduced = True
            for i in range(t + 1, n):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    row_op(i, t, q)
                    if A[i][t]:  # remainder smaller than pivot: promote it
                        swap_rows(t, i)
                        reduced = False
            for j in range(t + 1, m):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    col_op(j, t, q)
                    if A[t][j]:
                        swap_cols(t, j)
                        reduced = False
            if reduced and all(A[i][t] == 0 for i in range(t + 1, n)) \
                    and all(A[t][j] == 0 for j in range(t + 1, m)):
                break
        # divisibility: pivot must divide every remaining entry
        fixed = True
        for i in range(t + 1, n):
            for j in range(t + 1, m):
                if A[i][j] % A[t][t]:
                    row_op(t, i, -1)  # fold row i into row t, restart block
                    fixed = False
                    break
            if not fixed:
                break
        if fixed:
            t += 1
    diag = []
    for i in range(min(n, m)):
        d = A[i][i]
        if d < 0:
            A[i] = [-x for x in A[i]]
            U[i] = [-x for x in U[i]]
            d = -d
        diag.append(d)
    return diag, U, V


def rat_str(x):
    """Serialize an exact rational as "num/den" (or "num" when integral)."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def parse_rat(s):
    """Parse "num/den" / "num" strings (ints pass through) to Fraction."""
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(str(s))


def mat_mul(A, B):
    """Integer matrix product."""
    if not A or not B:
        return []
    m = len(B)
    return [[sum(row[k] * B[k][j] for k in range(m)) for j in range(len(B[0]))]
            for row in A]


def det2(u, v):
    """Determinant of the 2x2 matrix with rows u, v."""
    return u[0] * v[1] - u[1] * v[0]

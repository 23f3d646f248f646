"""Dense exact matrices over a Ring, with Gaussian elimination."""
from __future__ import annotations

from .field import Ring, RingMismatch, Singular, scalar_from_json, scalar_to_json


class Matrix:
    __slots__ = ("rows", "nrows", "ncols", "ring")

    def __init__(self, rows, ring: Ring, _raw=False, ncols: int = 0):
        self.ring = ring
        if _raw:
            self.rows = rows
        else:
            self.rows = [[ring(x) for x in r] for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else ncols

    # construction
    @classmethod
    def zeros(cls, r: int, c: int, ring: Ring) -> "Matrix":
        z = ring.zero()
        return cls([[z] * c for _ in range(r)], ring, _raw=True, ncols=c)

    @classmethod
    def identity(cls, n: int, ring: Ring) -> "Matrix":
        m = cls.zeros(n, n, ring)
        one = ring.one()
        for i in range(n):
            m.rows[i][i] = one
        return m

    @classmethod
    def diag(cls, entries, ring: Ring) -> "Matrix":
        m = cls.zeros(len(entries), len(entries), ring)
        for i, x in enumerate(entries):
            m.rows[i][i] = ring(x)
        return m

    @classmethod
    def from_columns(cls, cols, ring: Ring, nrows: int | None = None) -> "Matrix":
        if not cols:
            return cls.zeros(nrows or 0, 0, ring)
        n = len(cols[0])
        return cls([[ring(c[i]) for c in cols] for i in range(n)], ring, _raw=True)

    def copy(self) -> "Matrix":
        return Matrix([list(r) for r in self.rows], self.ring, _raw=True)

    def over(self, ring: Ring) -> "Matrix":
        """Same matrix viewed in a larger ring."""
        if ring == self.ring:
            return self
        return Matrix(self.rows, ring)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def col(self, j: int) -> list:
        return [r[j] for r in self.rows]

    def columns(self) -> list:
        return [self.col(j) for j in range(self.ncols)]

    # arithmetic
    def _check(self, other: "Matrix"):
        if self.ring != other.ring:
            raise RingMismatch("matrices over different rings")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.ring, _raw=True)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.ring, _raw=True)

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self.rows], self.ring, _raw=True)

    def scale(self, c) -> "Matrix":
        c = self.ring(c)
        return Matrix([[c * a if a else a for a in r] for r in self.rows], self.ring, _raw=True)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self.matmul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __matmul__(self, other):
        return self.matmul(other)

    def matmul(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        z = self.ring.zero()
        orows = other.rows
        out = []
        for r in self.rows:
            acc = [z] * other.ncols
            for k, a in enumerate(r):
                if a:
                    for j, b in enumerate(orows[k]):
                        if b:
                            acc[j] = acc[j] + a * b
            out.append(acc)
        return Matrix(out, self.ring, _raw=True)

    def apply(self, v) -> list:
        z = self.ring.zero()
        out = []
        for r in self.rows:
            acc = z
            for a, b in zip(r, v):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return out

    def __pow__(self, e: int) -> "Matrix":
        if e < 0:
            return self.inverse() ** (-e)
        result = Matrix.identity(self.nrows, self.ring)
        base = self
        while e:
            if e & 1:
                result = result @ base
            e >>= 1
            if e:
                base = base @ base
        return result

    @property
    def T(self) -> "Matrix":
        if not self.ncols or not self.nrows:
            return Matrix.zeros(self.ncols, self.nrows, self.ring)
        return Matrix([list(c) for c in zip(*self.rows)], self.ring, _raw=True)

    def kron(self, other: "Matrix") -> "Matrix":
        self._check(other)
        z = self.ring.zero()
        out = []
        for r in self.rows:
            for s in other.rows:
                out.append([a * b if a and b else z for a in r for b in s])
        return Matrix(out, self.ring, _raw=True)

    def trace(self):
        t = self.ring.zero()
        for i in range(min(self.nrows, self.ncols)):
            t = t + self.rows[i][i]
        return t

    def is_zero(self) -> bool:
        return not any(a for r in self.rows for a in r)

    def is_diagonal(self) -> bool:
        return all(not a for i, r in enumerate(self.rows) for j, a in enumerate(r) if i != j)

    def diagonal(self) -> list:
        return [self.rows[i][i] for i in range(min(self.nrows, self.ncols))]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.rows))

    def submatrix(self, rows, cols) -> "Matrix":
        return Matrix([[self.rows[i][j] for j in cols] for i in rows], self.ring, _raw=True)

    def __repr__(self):
        body = "; ".join(", ".join(str(a) for a in r) for r in self.rows)
        return f"Matrix[{self.nrows}x{self.ncols}]({body})"

    # elimination
    def rref(self):
        """Reduced row echelon form and the list of pivot columns."""
        m = [list(r) for r in self.rows]
        pivots = []
        prow = 0
        for c in range(self.ncols):
            if prow >= self.nrows:
                break
            piv = None
            for r in range(prow, self.nrows):
                if m[r][c]:
                    piv = r
                    break
            if piv is None:
                continue
            m[prow], m[piv] = m[piv], m[prow]
            inv = m[prow][c].inv()
            m[prow] = [a * inv if a else a for a in m[prow]]
            pr = m[prow]
            nz = [j for j in range(c, self.ncols) if pr[j]]
            for r in range(self.nrows):
                if r != prow:
                    f = m[r][c]
                    if f:
                        row = m[r]
                        for j in nz:
                            row[j] = row[j] - f * pr[j]
            pivots.append(c)
            prow += 1
        return Matrix(m, self.ring, _raw=True), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> list:
        """Basis of the right null space, as column vectors (lists)."""
        R, pivots = self.rref()
        free = [j for j in range(self.ncols) if j not in set(pivots)]
        z, one = self.ring.zero(), self.ring.one()
        basis = []
        for f in free:
            v = [z] * self.ncols
            v[f] = one
            for i, p in enumerate(pivots):
                a = R.rows[i][f]
                if a:
                    v[p] = -a
            basis.append(v)
        return basis

    def nullity(self) -> int:
        return self.ncols - self.rank()

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("det of non-square matrix")
        m = [list(r) for r in self.rows]
        n = self.nrows
        d = self.ring.one()
        for c in range(n):
            piv = next((r for r in range(c, n) if m[r][c]), None)
            if piv is None:
                return self.ring.zero()
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                d = -d
            d = d * m[c][c]
            inv = m[c][c].inv()
            for r in range(c + 1, n):
                f = m[r][c]
                if f:
                    f = f * inv
                    m[r] = [a - f * b if b else a for a, b in zip(m[r], m[c])]
        return d

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of non-square matrix")
        n = self.nrows
        aug = Matrix([r + e for r, e in zip(self.rows, Matrix.identity(n, self.ring).rows)],
                     self.ring, _raw=True)
        R, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise Singular("matrix is singular")
        return Matrix([r[n:] for r in R.rows], self.ring, _raw=True)

    def solve(self, b):
        """One solution x of self @ x = b; b is a Matrix or a column list."""
        as_list = not isinstance(b, Matrix)
        B = Matrix.from_columns([b], self.ring) if as_list else b
        if B.nrows != self.nrows:
            raise ValueError("shape mismatch")
        aug = Matrix([r + s for r, s in zip(self.rows, B.rows)], self.ring, _raw=True)
        R, pivots = aug.rref()
        if any(p >= self.ncols for p in pivots):
            raise Singular("system is inconsistent")
        X = Matrix.zeros(self.ncols, B.ncols, self.ring)
        for i, p in enumerate(pivots):
            X.rows[p] = R.rows[i][self.ncols:]
        return X.col(0) if as_list else X

    # serialization
    def to_json(self) -> list:
        return [[scalar_to_json(a) for a in r] for r in self.rows]

    @classmethod
    def from_json(cls, obj, ring: Ring) -> "Matrix":
        return cls([[scalar_from_json(a) for a in r] for r in obj], ring)


def block_diag(mats, ring: Ring) -> Matrix:
    n = sum(m.nrows for m in mats)
    c = sum(m.ncols for m in mats)
    out = Matrix.zeros(n, c, ring)
    i = j = 0
    for m in mats:
        for r in range(m.nrows):
            out.rows[i + r][j:j + m.ncols] = m.rows[r]
        i += m.nrows
        j += m.ncols
    return out


def span_basis(vectors, ring: Ring) -> list:
    """Row-reduced basis of the span of column vectors."""
    if not vectors:
        return []
    R, piv = Matrix(vectors, ring, _raw=True).rref()
    return [R.rows[i] for i in range(len(piv))]


def mat_solve(kind: str, A: Matrix, b=None):
    if kind == "rref":
        return A.rref()
    if kind == "kernel":
        return A.kernel()
    if kind == "solve":
        return A.solve(b)
    if kind == "det":
        return A.det()
    if kind == "rank":
        return A.rank()
    if kind == "inverse":
        return A.inverse()
    raise ValueError(f"unknown kind {kind!r}")

"""Exact vectors, linear maps, and sparse bilinear maps (structure tensors).

Vectors are plain tuples of field scalars.  LinMap is a dense matrix; BilMap
is a sparse order-3 tensor c[k][i][j] holding the structure constants of a
bilinear map A x B -> C, stored with canonical lexicographic (k, i, j) key
order so that equal tensors are identical objects under == and serialize
byte-identically.  Everything is immutable after construction.
"""

from __future__ import annotations

from .errors import DimError, FieldMismatch


def vzero(field, n):
    z = field.zero()
    return (z,) * n


def vbasis(field, n, i):
    z, o = field.zero(), field.one()
    return tuple(o if j == i else z for j in range(n))


def vadd(field, a, b):
    if len(a) != len(b):
        raise DimError(f"vector lengths differ: {len(a)} vs {len(b)}")
    add = field.add
    return tuple(add(x, y) for x, y in zip(a, b))


def vsub(field, a, b):
    if len(a) != len(b):
        raise DimError(f"vector lengths differ: {len(a)} vs {len(b)}")
    sub = field.sub
    return tuple(sub(x, y) for x, y in zip(a, b))


def vneg(field, a):
    neg = field.neg
    return tuple(neg(x) for x in a)


def vscale(field, c, a):
    mul = field.mul
    return tuple(mul(c, x) for x in a)


def is_zero_vec(field, a):
    z = field.zero()
    return all(x == z for x in a)


class LinMap:
    """Dense cod_dim x dom_dim matrix over an exact field."""

    __slots__ = ("field", "rows", "cols", "entries", "_hash")

    def __init__(self, field, rows, cols, entries):
        if rows < 0 or cols < 0:
            raise DimError("negative dimension")
        entries = tuple(tuple(r) for r in entries)
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise DimError(f"entries are not a {rows}x{cols} matrix")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *_):
        raise AttributeError("LinMap is immutable")

    @classmethod
    def zero(cls, field, rows, cols):
        z = field.zero()
        return cls(field, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero(), field.one()
        return cls(field, n, n, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, field, cols_list, rows):
        """Build from a list of column vectors."""
        cols = len(cols_list)
        for c in cols_list:
            if len(c) != rows:
                raise DimError("column length mismatch")
        return cls(field, rows, cols, [[cols_list[j][i] for j in range(cols)] for i in range(rows)])

    def column(self, j):
        return tuple(self.entries[i][j] for i in range(self.rows))

    def apply(self, v):
        if len(v) != self.cols:
            raise DimError(f"LinMap domain dim {self.cols}, got vector of length {len(v)}")
        f = self.field
        add, mul, z = f.add, f.mul, f.zero()
        out = []
        for row in self.entries:
            acc = z
            for a, x in zip(row, v):
                if a != z and x != z:
                    acc = add(acc, mul(a, x))
            out.append(acc)
        return tuple(out)

    def compose(self, other):
        """self o other (apply other first)."""
        if self.field != other.field:
            raise FieldMismatch("composing maps over different fields")
        if self.cols != other.rows:
            raise DimError(f"cannot compose {self.rows}x{self.cols} after {other.rows}x{other.cols}")
        cols = [self.apply(other.column(j)) for j in range(other.cols)]
        return LinMap.from_columns(self.field, cols, self.rows)

    def add_map(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimError("adding maps of different shapes")
        f = self.field
        return LinMap(f, self.rows, self.cols,
                      [[f.add(a, b) for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.entries, other.entries)])

    def is_zero(self):
        z = self.field.zero()
        return all(a == z for row in self.entries for a in row)

    def __eq__(self, other):
        return (isinstance(other, LinMap) and self.field == other.field
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash((self.field, self.rows, self.cols, self.entries))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"LinMap({self.field.name}, {self.rows}x{self.cols})"


class BilMap:
    """Sparse structure-constant tensor of a bilinear map A x B -> C.

    coeffs maps (k, i, j) -> scalar with eval(e_i, e_j)_k = coeffs[k, i, j];
    zero entries are never stored and keys are kept in sorted order.
    """

    __slots__ = ("field", "dim_a", "dim_b", "dim_c", "items", "_by_ij", "_hash")

    def __init__(self, field, dim_a, dim_b, dim_c, coeffs):
        if min(dim_a, dim_b, dim_c) < 0:
            raise DimError("negative dimension")
        z = field.zero()
        cleaned = {}
        for (k, i, j), val in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
            if not (0 <= k < dim_c and 0 <= i < dim_a and 0 <= j < dim_b):
                raise DimError(f"coefficient index {(k, i, j)} out of range for "
                               f"{dim_a}x{dim_b}->{dim_c}")
            if val != z:
                cleaned[(k, i, j)] = val
        items = tuple(sorted((k, i, j, v) for (k, i, j), v in cleaned.items()))
        by_ij = {}
        for k, i, j, v in items:
            by_ij.setdefault((i, j), []).append((k, v))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dim_a", dim_a)
        object.__setattr__(self, "dim_b", dim_b)
        object.__setattr__(self, "dim_c", dim_c)
        object.__setattr__(self, "items", items)
        object.__setattr__(self, "_by_ij", {ij: tuple(kv) for ij, kv in by_ij.items()})
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *_):
        raise AttributeError("BilMap is immutable")

    @classmethod
    def zero(cls, field, dim_a, dim_b, dim_c):
        return cls(field, dim_a, dim_b, dim_c, {})

    @classmethod
    def from_basis_function(cls, field, dim_a, dim_b, dim_c, fn):
        """fn(i, j) returns the image vector of (e_i, e_j)."""
        coeffs = {}
        z = field.zero()
        for i in range(dim_a):
            for j in range(dim_b):
                vec = fn(i, j)
                if len(vec) != dim_c:
                    raise DimError("basis image has wrong length")
                for k, val in enumerate(vec):
                    if val != z:
                        coeffs[(k, i, j)] = val
        return cls(field, dim_a, dim_b, dim_c, coeffs)

    def eval_bb(self, i, j):
        """Image of the basis pair (e_i, e_j)."""
        out = [self.field.zero()] * self.dim_c
        for k, v in self._by_ij.get((i, j), ()):
            out[k] = v
        return tuple(out)

    def eval(self, a, b):
        if len(a) != self.dim_a or len(b) != self.dim_b:
            raise DimError(f"BilMap expects ({self.dim_a},{self.dim_b}), got "
                           f"({len(a)},{len(b)})")
        f = self.field
        z, add, mul = f.zero(), f.add, f.mul
        out = [z] * self.dim_c
        by_ij = self._by_ij
        for i, ai in enumerate(a):
            if ai == z:
                continue
            for j, bj in enumerate(b):
                if bj == z:
                    continue
                pairs = by_ij.get((i, j))
                if not pairs:
                    continue
                s = mul(ai, bj)
                for k, v in pairs:
                    out[k] = add(out[k], mul(v, s))
        return tuple(out)

    def is_zero(self):
        return not self.items

    def __eq__(self, other):
        return (isinstance(other, BilMap) and self.field == other.field
                and self.dim_a == other.dim_a and self.dim_b == other.dim_b
                and self.dim_c == other.dim_c and self.items == other.items)

    def __hash__(self):
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash((self.field, self.dim_a, self.dim_b, self.dim_c, self.items))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return (f"BilMap({self.field.name}, {self.dim_a}x{self.dim_b}->{self.dim_c}, "
                f"{len(self.items)} entries)")


class TwoVectorSpace:
    """A pair of spaces with a connecting linear map d: dim1 -> dim0."""

    __slots__ = ("dim1", "dim0", "d")

    def __init__(self, dim1, dim0, d: LinMap):
        if d.cols != dim1 or d.rows != dim0:
            raise DimError(f"d must be {dim0}x{dim1}, got {d.rows}x{d.cols}")
        object.__setattr__(self, "dim1", dim1)
        object.__setattr__(self, "dim0", dim0)
        object.__setattr__(self, "d", d)

    def __setattr__(self, *_):
        raise AttributeError("TwoVectorSpace is immutable")

    def __eq__(self, other):
        return (isinstance(other, TwoVectorSpace) and self.dim1 == other.dim1
                and self.dim0 == other.dim0 and self.d == other.d)

    def __hash__(self):
        return hash((self.dim1, self.dim0, self.d))


# Gaussian elimination utilities (exact, desk scale).

def rref(field, rows):
    """Reduced row-echelon form; returns (rows, pivot column list)."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    z = field.zero()
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c] != z:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != z:
                factor = rows[i][c]
                rows[i] = [field.sub(x, field.mul(factor, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return [tuple(row) for row in rows], pivots


def rank(m: LinMap):
    _, pivots = rref(m.field, m.entries)
    return len(pivots)


def inverse(m: LinMap):
    """Exact inverse of a square LinMap; returns None if singular."""
    if m.rows != m.cols:
        return None
    n = m.rows
    f = m.field
    ident = LinMap.identity(f, n).entries
    aug = [list(m.entries[i]) + list(ident[i]) for i in range(n)]
    red, pivots = rref(f, aug)
    if pivots != list(range(n)):
        return None
    return LinMap(f, n, n, [row[n:] for row in red])


def kernel_basis(m: LinMap):
    """Basis of ker(m) as a list of domain vectors, in deterministic order."""
    f = m.field
    red, pivots = rref(f, m.entries)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    z, o = f.zero(), f.one()
    for fc in free:
        vec = [z] * m.cols
        vec[fc] = o
        for r, pc in enumerate(pivots):
            if r < len(red):
                vec[pc] = f.neg(red[r][fc])
        basis.append(tuple(vec))
    return basis


def solve(m: LinMap, b):
    """One solution of m x = b, or None if inconsistent."""
    if len(b) != m.rows:
        raise DimError("rhs length mismatch")
    f = m.field
    aug = [list(m.entries[i]) + [b[i]] for i in range(m.rows)]
    red, pivots = rref(f, aug)
    z = f.zero()
    for row, pc in zip(red, pivots):
        if pc == m.cols:
            return None
    # also catch inconsistent rows past the recorded pivots
    for row in red:
        if row[-1] != z and all(x == z for x in row[:-1]):
            return None
    x = [z] * m.cols
    for r, pc in enumerate(pivots):
        if pc < m.cols:
            x[pc] = red[r][-1]
    return tuple(x)

"""Exact linear algebra over the scalar types of :mod:`nalg.fields`.

Everything here is deterministic: row reduction always picks the first
nonzero entry in column order as pivot, and every subspace is stored in
reduced row echelon form (pivots 1, pivot columns increasing, zero rows
dropped), so two equal subspaces produce bit-identical bases.

Operators act on row vectors from the right, ``v |-> v @ M``; row ``i`` of
an operator matrix is the image of the ``i``-th basis vector.  Composition
"first M then N" is therefore the plain matrix product ``M @ N``.
"""

from __future__ import annotations


def _reduce_row_against(row, pivot_rows):
    # pivot_rows: list of (pivot_col, row) sorted by pivot_col
    row = list(row)
    for pc, prow in pivot_rows:
        c = row[pc]
        if c != 0:
            for k in range(pc, len(row)):
                row[k] = row[k] - c * prow[k]
    return row


class RowSpace:
    """A growing row space kept in reduced row echelon form."""

    def __init__(self, field, ncols):
        self.field = field
        self.ncols = ncols
        self._rows = []  # list of (pivot_col, row list), sorted by pivot_col

    @property
    def rank(self):
        return len(self._rows)

    def insert(self, row):
        """Add one vector; returns True when it enlarged the space."""
        if len(row) != self.ncols:
            raise ValueError("expected %d entries, got %d" % (self.ncols, len(row)))
        row = _reduce_row_against(row, self._rows)
        pc = next((k for k, c in enumerate(row) if c != 0), None)
        if pc is None:
            return False
        inv = self.field.one / row[pc]
        row = [c * inv for c in row]
        for _, prow in self._rows:
            c = prow[pc]
            if c != 0:
                for k in range(pc, self.ncols):
                    prow[k] = prow[k] - c * row[k]
        self._rows.append((pc, row))
        self._rows.sort(key=lambda item: item[0])
        return True

    def contains(self, row):
        return all(c == 0 for c in _reduce_row_against(row, self._rows))

    def rows(self):
        return [list(r) for _, r in self._rows]

    def pivots(self):
        return [pc for pc, _ in self._rows]


class Matrix:
    """Dense exact matrix; rows is a tuple of tuples of scalars."""

    __slots__ = ("field", "rows")

    def __init__(self, field, rows):
        rows = tuple(tuple(field.of(c) for c in r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        self.field = field
        self.rows = rows

    @classmethod
    def zeros(cls, field, nrows, ncols):
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, field, nrows, ncols, i, j):
        z = field.zero
        rows = [[z] * ncols for _ in range(nrows)]
        rows[i][j] = field.one
        return cls(field, rows)

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _check_shape(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError(
                "shape mismatch: %dx%d vs %dx%d"
                % (self.nrows, self.ncols, other.nrows, other.ncols)
            )

    def __add__(self, other):
        self._check_shape(other)
        return Matrix(
            self.field,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def __sub__(self, other):
        self._check_shape(other)
        return Matrix(
            self.field,
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def __neg__(self):
        return Matrix(self.field, [[-a for a in r] for r in self.rows])

    def scale(self, c):
        c = self.field.of(c)
        return Matrix(self.field, [[c * a for a in r] for r in self.rows])

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in product")
        cols = other.ncols
        zero = self.field.zero
        out = []
        for ra in self.rows:
            row = [zero] * cols
            for k, a in enumerate(ra):
                if a != 0:
                    rb = other.rows[k]
                    for j in range(cols):
                        b = rb[j]
                        if b != 0:
                            row[j] = row[j] + a * b
            out.append(row)
        return Matrix(self.field, out)

    def apply(self, v):
        """Row vector times matrix: the action of the operator on coords."""
        if len(v) != self.nrows:
            raise ValueError("vector length %d, expected %d" % (len(v), self.nrows))
        zero = self.field.zero
        out = [zero] * self.ncols
        for i, c in enumerate(v):
            if c != 0:
                row = self.rows[i]
                for j in range(self.ncols):
                    a = row[j]
                    if a != 0:
                        out[j] = out[j] + c * a
        return tuple(out)

    def transpose(self):
        return Matrix(self.field, list(zip(*self.rows)))

    def commutator(self, other):
        return self @ other - other @ self

    def is_zero(self):
        return all(c == 0 for r in self.rows for c in r)

    def flatten(self):
        """Row-major flattening, entry (i, j) at position i*ncols + j."""
        return tuple(c for r in self.rows for c in r)

    @classmethod
    def from_flat(cls, field, nrows, ncols, flat):
        if len(flat) != nrows * ncols:
            raise ValueError("flat length mismatch")
        return cls(
            field,
            [flat[i * ncols : (i + 1) * ncols] for i in range(nrows)],
        )

    def rref(self):
        space = RowSpace(self.field, self.ncols)
        for r in self.rows:
            space.insert(list(r))
        return Matrix(self.field, space.rows()), space.pivots()

    def rank(self):
        space = RowSpace(self.field, self.ncols)
        for r in self.rows:
            space.insert(list(r))
        return space.rank

    def nullspace(self):
        """Canonical basis of {v : v satisfies M v^T = 0}, as a SubspaceBasis."""
        red, pivots = self.rref()
        n = self.ncols
        pivot_set = set(pivots)
        free = [j for j in range(n) if j not in pivot_set]
        vecs = []
        zero, one = self.field.zero, self.field.one
        for f in free:
            v = [zero] * n
            v[f] = one
            for i, pc in enumerate(pivots):
                v[pc] = -red.rows[i][f]
            vecs.append(v)
        return SubspaceBasis.from_vectors(self.field, n, vecs)

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        rows = [list(r) for r in self.rows]
        sign = 1
        det = self.field.one
        for col in range(n):
            piv = next((i for i in range(col, n) if rows[i][col] != 0), None)
            if piv is None:
                return self.field.zero
            if piv != col:
                rows[col], rows[piv] = rows[piv], rows[col]
                sign = -sign
            p = rows[col][col]
            det = det * p
            for i in range(col + 1, n):
                c = rows[i][col]
                if c != 0:
                    f = c / p
                    for k in range(col, n):
                        rows[i][k] = rows[i][k] - f * rows[col][k]
        return det if sign == 1 else -det

    def inverse(self):
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        aug = Matrix(
            self.field,
            [list(self.rows[i]) + list(Matrix.identity(self.field, n).rows[i]) for i in range(n)],
        )
        red, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise ValueError("matrix is singular")
        return Matrix(self.field, [r[n:] for r in red.rows])

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        return "Matrix(%r)" % (
            [[str(c) for c in r] for r in self.rows],
        )


class SubspaceBasis:
    """A subspace of F^n held by its canonical reduced row echelon basis."""

    __slots__ = ("field", "ambient", "vectors")

    def __init__(self, field, ambient, vectors):
        self.field = field
        self.ambient = ambient
        self.vectors = tuple(tuple(v) for v in vectors)

    @classmethod
    def from_vectors(cls, field, ambient, vectors):
        space = RowSpace(field, ambient)
        for v in vectors:
            space.insert([field.of(c) for c in v])
        return cls(field, ambient, space.rows())

    @classmethod
    def zero(cls, field, ambient):
        return cls(field, ambient, [])

    @classmethod
    def full(cls, field, ambient):
        return cls.from_vectors(
            field, ambient, Matrix.identity(field, ambient).rows
        )

    @property
    def dim(self):
        return len(self.vectors)

    def is_zero(self):
        return self.dim == 0

    def is_full(self):
        return self.dim == self.ambient

    def _space(self):
        space = RowSpace(self.field, self.ambient)
        for v in self.vectors:
            space.insert(list(v))
        return space

    def contains_vector(self, v):
        if len(v) != self.ambient:
            raise ValueError("ambient mismatch")
        return self._space().contains([self.field.of(c) for c in v])

    def contains(self, other):
        self._check_ambient(other)
        space = self._space()
        return all(space.contains(list(v)) for v in other.vectors)

    def sum(self, other):
        self._check_ambient(other)
        return SubspaceBasis.from_vectors(
            self.field, self.ambient, list(self.vectors) + list(other.vectors)
        )

    def intersect(self, other):
        """Zassenhaus: reduce [A|A] stacked on [B|0]; rows with zero left
        half carry an intersection basis in their right half."""
        self._check_ambient(other)
        n = self.ambient
        zero = self.field.zero
        stacked = [list(v) + list(v) for v in self.vectors]
        stacked += [list(v) + [zero] * n for v in other.vectors]
        space = RowSpace(self.field, 2 * n)
        for row in stacked:
            space.insert(row)
        out = [
            row[n:]
            for row in space.rows()
            if all(c == 0 for c in row[:n])
        ]
        return SubspaceBasis.from_vectors(self.field, n, out)

    def __eq__(self, other):
        return (
            isinstance(other, SubspaceBasis)
            and self.field == other.field
            and self.ambient == other.ambient
            and self.vectors == other.vectors
        )

    def __hash__(self):
        return hash((self.field, self.ambient, self.vectors))

    def __iter__(self):
        return iter(self.vectors)

    def _check_ambient(self, other):
        if self.ambient != other.ambient or self.field != other.field:
            raise ValueError("subspaces live in different ambient spaces")

    def __repr__(self):
        return "SubspaceBasis(dim=%d, ambient=%d)" % (self.dim, self.ambient)


def matrix_algebra_closure(field, dim, generators):
    """Smallest subspace of d x d matrices containing the generators and
    closed under matrix product.  Returns (SubspaceBasis of flattened
    matrices, list of Matrix spanning it).

    When the generators act irreducibly the closure reaches the full
    dim^2; that is the Burnside certificate used by the simplicity test.
    """
    gens = [g for g in generators]
    for g in gens:
        if g.nrows != dim or g.ncols != dim:
            raise ValueError("generator shape mismatch")
    space = RowSpace(field, dim * dim)
    basis = []
    fresh = []
    for g in gens:
        if space.insert(list(g.flatten())):
            basis.append(g)
            fresh.append(g)
    while fresh:
        new = []
        for a in basis:
            for b in fresh:
                for prod in (a @ b, b @ a):
                    if space.insert(list(prod.flatten())):
                        new.append(prod)
        basis.extend(new)
        fresh = new
        if space.rank == dim * dim:
            break
    sub = SubspaceBasis(field, dim * dim, space.rows())
    mats = [Matrix.from_flat(field, dim, dim, v) for v in sub.vectors]
    return sub, mats

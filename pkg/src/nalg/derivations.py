"""Derivations of an n-ary algebra as exact operator spaces.

An operator D is a derivation when the Leibniz rule
``D(product(z1..zn)) = sum_s product(z1, ..., D(z_s), ..., zn)`` holds;
by multilinearity it is enough to impose it on basis tuples, and for a
totally commutative product one tuple per orbit already generates all
the equations.  The full derivation space is the nullspace of that
linear system in the d^2 operator entries, flattened row-major (entry
(i, j) at position i*d + j, row convention as everywhere else).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from .algebra import Element
from .checks import Verdict, Witness
from .linalg import Matrix, RowSpace, SubspaceBasis


@dataclass(frozen=True)
class OperatorSpace:
    """Subspace of d x d operators, canonical basis of flattened matrices."""

    field: object
    dim: int
    basis: SubspaceBasis

    @property
    def rank(self):
        return self.basis.dim

    def matrices(self):
        return [
            Matrix.from_flat(self.field, self.dim, self.dim, v)
            for v in self.basis.vectors
        ]

    def contains_matrix(self, m):
        return self.basis.contains_vector(m.flatten())

    @classmethod
    def from_matrices(cls, field, dim, mats):
        sub = SubspaceBasis.from_vectors(
            field, dim * dim, [m.flatten() for m in mats]
        )
        return cls(field, dim, sub)


def _constraint_tuples(alg):
    if alg.symmetry == "total":
        return list(combinations_with_replacement(range(alg.dim), alg.arity))
    return list(product(range(alg.dim), repeat=alg.arity))


def derivation_algebra(alg):
    """All derivations, as the nullspace of the Leibniz system."""
    d = alg.dim
    n = alg.arity
    zero = alg.field.zero
    rows = []
    for t in _constraint_tuples(alg):
        w = alg.product_of_basis(t)
        for k in range(d):
            row = [zero] * (d * d)
            for i in range(d):
                if w[i] != 0:
                    row[i * d + k] = row[i * d + k] + w[i]
            for s in range(n):
                base = t[s] * d
                for j in range(d):
                    v = alg.product_of_basis(t[:s] + (j,) + t[s + 1 :])[k]
                    if v != 0:
                        row[base + j] = row[base + j] - v
            rows.append(row)
    system = Matrix(alg.field, rows) if rows else Matrix.zeros(alg.field, 1, d * d)
    return OperatorSpace(alg.field, d, system.nullspace())


def inner_derivation_space(alg):
    """Span of the commutators [R_x, R_y] over basis argument tuples.

    D_{y,x} = -D_{x,y}, so unordered pairs span everything; for a totally
    commutative product the defining tuples may be taken sorted.
    """
    from .checks import _basis_right_operator, _dxy_tuples

    d = alg.dim
    tuples = _dxy_tuples(alg)
    ops = [_basis_right_operator(alg, t) for t in tuples]
    space = RowSpace(alg.field, d * d)
    for a in range(len(ops)):
        for b in range(a + 1, len(ops)):
            dm = ops[a] @ ops[b] - ops[b] @ ops[a]
            space.insert(list(dm.flatten()))
    return OperatorSpace(alg.field, d, SubspaceBasis(alg.field, d * d, space.rows()))


def is_derivation(alg, op):
    """Leibniz rule for one operator, scanned over basis tuples."""
    if op.nrows != alg.dim or op.ncols != alg.dim:
        raise ValueError("operator shape does not match the algebra")
    n = alg.arity
    for t in _constraint_tuples(alg):
        w = alg.product_of_basis(t)
        lhs = op.apply(w)
        acc = [alg.field.zero] * alg.dim
        for s in range(n):
            drow = op.rows[t[s]]
            for j, c in enumerate(drow):
                if c != 0:
                    part = alg.product_of_basis(t[:s] + (j,) + t[s + 1 :])
                    for k2, v in enumerate(part):
                        if v != 0:
                            acc[k2] = acc[k2] + c * v
        if list(lhs) != acc:
            data = {
                "operator": op,
                "args": tuple(alg.basis_element(i) for i in t),
            }
            return Verdict(
                False, Witness("derivation", data, Element(lhs), Element(tuple(acc)))
            )
    return Verdict(True)


def skew_space(field, dim):
    """Operators with M[i][j] = -M[j][i] and zero diagonal: the span of
    the elementary differences e_ij - e_ji, i < j."""
    mats = [
        Matrix.unit(field, dim, dim, i, j) - Matrix.unit(field, dim, dim, j, i)
        for i in range(dim)
        for j in range(i + 1, dim)
    ]
    return OperatorSpace.from_matrices(field, dim, mats)


def compare(a, b):
    """Four-way comparison of two operator spaces."""
    left = b.basis.contains(a.basis)
    right = a.basis.contains(b.basis)
    if left and right:
        return "equal"
    if left:
        return "left_in_right"
    if right:
        return "right_in_left"
    return "incomparable"


def d2_decompose(invol, op):
    """Split a derivation D of the conjugation triple product of a
    4-dimensional involutive algebra into D = Phi + Psi where
    Psi(x) = x * D(1) with D(1) in the skew part, and Phi is a
    derivation of the binary product.

    Raises ValueError naming the verification that broke; returns the
    pair (Phi, Psi) of operator matrices.
    """
    from .catalog import conj_triple, skew_part

    alg = invol.algebra
    ternary = conj_triple(invol)
    check = is_derivation(ternary, op)
    if not check.passed:
        raise ValueError("operator is not a derivation of the triple product")

    d_of_unit = Element(op.apply(invol.unit.coords))
    if not skew_part(invol).contains_vector(d_of_unit.coords):
        raise ValueError("D(1) is not in the skew part")

    psi = Matrix(
        alg.field,
        [
            alg.multiply(alg.basis_element(j), d_of_unit).coords
            for j in range(alg.dim)
        ],
    )
    phi = op - psi
    if any(c != 0 for c in phi.apply(invol.unit.coords)):
        raise ValueError("Phi does not kill the unit")
    check = is_derivation(alg, phi)
    if not check.passed:
        raise ValueError("Phi is not a derivation of the binary product")
    return phi, psi

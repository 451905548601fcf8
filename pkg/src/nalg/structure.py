"""Ideals, simplicity and subalgebras of an n-ary algebra.

The simplicity test has three outcomes.  A zero product means abelian,
hence not simple.  Otherwise a deterministic list of candidate vectors is
spun up to ideals; a proper nonzero closure is a checkable
non-simplicity certificate.  If no candidate works, closing the
one-slot multiplication operators under products to the full operator
algebra certifies simplicity (a proper nonzero ideal would be a common
invariant subspace, which the full matrix algebra does not have).  When
neither side lands, the report says undetermined rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .linalg import RowSpace, SubspaceBasis, matrix_algebra_closure


def ideal_closure(alg, generators):
    """Smallest ideal containing the generators: the span is saturated
    under every one-slot multiplication operator (multilinearity reduces
    arbitrary other arguments to basis elements)."""
    field = alg.field
    d = alg.dim
    ops = alg.slot_multiplication_operators()
    space = RowSpace(field, d)
    stack = []
    for g in generators:
        coords = g.coords if hasattr(g, "coords") else tuple(field.of(c) for c in g)
        if space.insert(list(coords)):
            stack.append(coords)
    while stack:
        v = stack.pop()
        for op in ops:
            w = op.apply(v)
            if space.insert(list(w)):
                stack.append(w)
    return SubspaceBasis(field, d, space.rows())


@dataclass(frozen=True)
class SimplicityReport:
    status: str  # "simple" | "not_simple" | "undetermined"
    certificate: str  # "abelian" | "witness_spin" | "burnside(k)" | "none"
    ideal: SubspaceBasis | None = None
    operator_dim: int | None = None


def _candidate_vectors(alg):
    """Deterministic ideal seeds: basis vectors, two-term sums and
    differences, then kernel vectors of the slot operators and of their
    pairwise commutators."""
    field = alg.field
    d = alg.dim
    cands = []
    for i in range(d):
        cands.append(alg.basis_element(i).coords)
    for i in range(d):
        for j in range(i + 1, d):
            bi, bj = alg.basis_element(i), alg.basis_element(j)
            cands.append((bi + bj).coords)
            if field.char != 2:
                cands.append((bi - bj).coords)
    ops = alg.slot_multiplication_operators()
    for op in ops:
        for v in op.nullspace():
            cands.append(v)
    for a in range(len(ops)):
        for b in range(a + 1, len(ops)):
            for v in ops[a].commutator(ops[b]).nullspace():
                cands.append(v)
    seen = set()
    out = []
    for v in cands:
        lead = next((c for c in v if c != 0), None)
        if lead is None:
            continue
        key = tuple(c / lead for c in v)
        if key not in seen:
            seen.add(key)
            out.append(v)
    return out


def simplicity(alg):
    d = alg.dim
    if alg.is_zero_algebra():
        ideal = None
        if d >= 2:
            ideal = SubspaceBasis.from_vectors(
                alg.field, d, [alg.basis_element(0).coords]
            )
        return SimplicityReport("not_simple", "abelian", ideal)

    for v in _candidate_vectors(alg):
        closure = ideal_closure(alg, [alg.element(v)])
        if 0 < closure.dim < d:
            return SimplicityReport("not_simple", "witness_spin", closure)

    closure, _ = matrix_algebra_closure(
        alg.field, d, alg.slot_multiplication_operators()
    )
    if closure.dim == d * d:
        return SimplicityReport(
            "simple", "burnside(%d)" % closure.dim, None, closure.dim
        )
    return SimplicityReport("undetermined", "none", None, closure.dim)


def subalgebra_closure(alg, generators):
    """Smallest subalgebra containing the generators, plus the induced
    algebra in the canonical basis of that subspace."""
    from .algebra import NAryAlgebra

    field = alg.field
    d = alg.dim
    space = RowSpace(field, d)
    for g in generators:
        coords = g.coords if hasattr(g, "coords") else tuple(field.of(c) for c in g)
        space.insert(list(coords))
    while True:
        vecs = [alg.element(v) for v in space.rows()]
        grew = False
        for args in product(vecs, repeat=alg.arity):
            w = alg.multiply(*args)
            if space.insert(list(w.coords)):
                grew = True
        if not grew:
            break
    sub = SubspaceBasis(field, d, space.rows())
    if sub.dim == 0:
        raise ValueError("subalgebra closure needs a nonzero generator")
    pivots = space.pivots()

    def sub_coords(vec):
        # pivot columns of a reduced echelon basis are unit columns, so
        # membership coordinates can be read off directly
        coords = tuple(vec[p] for p in pivots)
        recon = [field.zero] * d
        for c, bv in zip(coords, sub.vectors):
            for k in range(d):
                recon[k] = recon[k] + c * bv[k]
        if tuple(recon) != tuple(vec):
            raise ValueError("product left the subspace; closure is broken")
        return coords

    labels = []
    for k, v in enumerate(sub.vectors):
        hot = [j for j, c in enumerate(v) if c != 0]
        if len(hot) == 1 and v[hot[0]] == field.one:
            labels.append(alg.labels[hot[0]])
        else:
            labels.append("s%d" % (k + 1))

    entries = {}
    k = sub.dim
    for idx in product(range(k), repeat=alg.arity):
        args = [alg.element(sub.vectors[i]) for i in idx]
        w = alg.multiply(*args)
        vec = sub_coords(w.coords)
        if any(c != 0 for c in vec):
            entries[idx] = vec
    induced = NAryAlgebra(
        field,
        alg.arity,
        k,
        labels,
        entries,
        "total" if alg.symmetry == "total" else "none",
    )
    return sub, induced

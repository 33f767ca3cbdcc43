"""Lie algebras given by structure constants, and their adjoint data.

Convention: ``structure[i][j][k]`` is the coefficient of ``e_k`` in
``[e_i, e_j]``.  Polynomial variables carry the basis labels and transform
like the basis elements themselves, so the adjoint derivation of ``e_i``
sends the variable ``e_j`` to ``sum_k c_ij^k e_k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Sequence

from .exactmath import (
    Polynomial,
    RatMatrix,
    SingularMatrix,
    as_fraction,
    solve_linear,
)


class LieAlgebraError(ValueError):
    """Input does not define a valid Lie algebra for the method."""


class NotSemisimple(ArithmeticError):
    pass


class NotNilpotent(ArithmeticError):
    pass


Vector = tuple[Fraction, ...]


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    name: str
    labels: tuple[str, ...]
    structure: tuple[tuple[Vector, ...], ...]
    cartan: tuple[int, ...]
    triples: tuple[tuple[int, int, int], ...] = ()

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def variables(self) -> tuple[str, ...]:
        return self.labels

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def basis_vector(self, i: int) -> Vector:
        return tuple(Fraction(int(k == i)) for k in range(self.dim))

    def bracket(self, u: Sequence, v: Sequence) -> Vector:
        out = [Fraction(0)] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(self.structure[i][j]):
                    if c:
                        out[k] += ab * c
        return tuple(out)

    def ad_matrix(self, i: int) -> RatMatrix:
        """Column-convention matrix of ad(e_i): entry [k][j] = c_ij^k."""
        return RatMatrix([[self.structure[i][j][k] for j in range(self.dim)] for k in range(self.dim)])

    def validate(self) -> None:
        """Raise LieAlgebraError naming the first violated identity."""
        n = self.dim
        c = self.structure
        if len(c) != n or any(len(r) != n or any(len(v) != n for v in r) for r in c):
            raise LieAlgebraError(f"structure tensor must be {n}x{n}x{n}")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if c[i][j][k] != -c[j][i][k]:
                        raise LieAlgebraError(f"antisymmetry fails at ({i},{j},{k})")
        # sum over m of c_ij^m c_mk^l + cyclic = 0
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    for l in range(n):
                        s = Fraction(0)
                        for m in range(n):
                            s += c[i][j][m] * c[m][k][l] + c[j][k][m] * c[m][i][l] + c[k][i][m] * c[m][j][l]
                        if s:
                            raise LieAlgebraError(f"Jacobi fails at ({i},{j},{k})")
        for a in self.cartan:
            if not 0 <= a < n:
                raise LieAlgebraError(f"cartan index {a} out of range")
            for b in self.cartan:
                if any(c[a][b]):
                    raise LieAlgebraError(f"cartan elements {self.labels[a]}, {self.labels[b]} do not commute")
        for t in self.triples:
            x, y, h = t
            if any(not 0 <= q < n for q in t):
                raise LieAlgebraError(f"triple {t} index out of range")
            e = self.basis_vector
            checks = [
                (self.bracket(e(x), e(y)), e(h), "[x,y]=h"),
                (self.bracket(e(h), e(x)), tuple(2 * q for q in e(x)), "[h,x]=2x"),
                (self.bracket(e(h), e(y)), tuple(-2 * q for q in e(y)), "[h,y]=-2y"),
            ]
            for got, want, rel in checks:
                if got != want:
                    raise LieAlgebraError(f"triple {tuple(self.labels[q] for q in t)} violates {rel}")


def make_algebra(name: str, labels: Sequence[str], structure, cartan: Sequence[int],
                 triples: Sequence[Sequence[int]] = (), validate: bool = True) -> LieAlgebra:
    g = LieAlgebra(
        name=name,
        labels=tuple(labels),
        structure=tuple(tuple(tuple(as_fraction(x) for x in v) for v in r) for r in structure),
        cartan=tuple(int(i) for i in cartan),
        triples=tuple(tuple(int(i) for i in t) for t in triples),
    )
    if validate:
        g.validate()
    return g


# ---------------------------------------------------------------------------
# sl(n) from matrix units


def _unit(n, i, j):
    m = [[0] * n for _ in range(n)]
    m[i][j] = 1
    return m


def _commutator(a, b):
    n = len(a)
    ab = [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    ba = [[sum(b[i][k] * a[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return [[ab[i][j] - ba[i][j] for j in range(n)] for i in range(n)]


def _flat(m):
    return {(i, j): x for i, r in enumerate(m) for j, x in enumerate(r) if x}


def build_sl(n: int) -> LieAlgebra:
    """sl(n) in a Chevalley-type basis: (y, x) pairs per positive root, then the H's.

    Positive roots are ordered simple ones first, then by height; for n=3 this
    gives y1,x1,y2,x2,y3,x3,h1,h2 with x3=[x1,x2]=E13 and y3=[y2,y1]=E31.
    """
    if n < 2:
        raise ValueError("sl(n) needs n >= 2")
    roots = sorted(((i, j) for i in range(n) for j in range(i + 1, n)), key=lambda r: (r[1] - r[0], r[0]))
    mats, labels = [], []
    for k, (i, j) in enumerate(roots, start=1):
        suffix = "" if n == 2 else str(k)
        mats += [_unit(n, j, i), _unit(n, i, j)]
        labels += [f"y{suffix}", f"x{suffix}"]
    for k in range(n - 1):
        h = [[0] * n for _ in range(n)]
        h[k][k], h[k + 1][k + 1] = 1, -1
        mats.append(h)
        labels.append("h" if n == 2 else f"h{k + 1}")
    dim = len(mats)
    columns = [_flat(m) for m in mats]
    structure = []
    for a in range(dim):
        row = []
        for b in range(dim):
            coords = solve_linear(columns, _flat(_commutator(mats[a], mats[b])))
            if coords is None:
                raise RuntimeError("commutator left the span")  # unreachable for sl(n)
            row.append(coords)
        structure.append(row)
    cartan = list(range(2 * len(roots), dim))
    triples = [(2 * k + 1, 2 * k, 2 * len(roots) + k) for k in range(n - 1)]
    return make_algebra(f"sl{n}", labels, structure, cartan, triples)


# ---------------------------------------------------------------------------
# adjoint data


@dataclass(frozen=True, eq=False)
class AdjointData:
    A: tuple[RatMatrix, ...]
    chi: RatMatrix
    chi_inv: RatMatrix
    A_tilde: tuple[RatMatrix, ...]


def cartan_metric(g: LieAlgebra) -> RatMatrix:
    """chi_ij = c_ip^q c_jq^p."""
    n, c = g.dim, g.structure
    return RatMatrix([[sum((c[i][p][q] * c[j][q][p] for p in range(n) for q in range(n)), Fraction(0))
                       for j in range(n)] for i in range(n)])


def adjoint_data(g: LieAlgebra) -> AdjointData:
    n, c = g.dim, g.structure
    # (A_i)_j^k = -c_ij^k, row j, column k
    A = tuple(RatMatrix([[-c[i][j][k] for k in range(n)] for j in range(n)]) for i in range(n))
    chi = RatMatrix([[(A[i] @ A[j]).trace() for j in range(n)] for i in range(n)])
    try:
        chi_inv = chi.inverse()
    except SingularMatrix:
        raise NotSemisimple(f"{g.name}: Cartan metric is singular; algebra not semisimple for this method") from None
    A_tilde = tuple(chi_inv @ a @ chi for a in A)
    return AdjointData(A=A, chi=chi, chi_inv=chi_inv, A_tilde=A_tilde)


_ADJ_CACHE: dict[int, tuple[LieAlgebra, AdjointData]] = {}


def cached_adjoint(g: LieAlgebra) -> AdjointData:
    hit = _ADJ_CACHE.get(id(g))
    if hit is None or hit[0] is not g:
        hit = (g, adjoint_data(g))
        _ADJ_CACHE[id(g)] = hit
    return hit[1]


def _images(g: LieAlgebra, m: RatMatrix) -> list[Polynomial]:
    """Column j of m read as the image of variable j."""
    return [Polynomial.linear(g.labels, m.column(j)) for j in range(g.dim)]


def derivation(g: LieAlgebra, i: int, p: Polynomial, ad: AdjointData | None = None) -> Polynomial:
    """Leibniz extension of e_j -> sum_k (A~_i)^k_j e_k: the t-linear part of exp(t A~_i) acting on p."""
    if p.variables != g.labels:
        raise ValueError("polynomial is not over the algebra's variables")
    ad = ad or cached_adjoint(g)
    images = _images(g, ad.A_tilde[i])
    result = Polynomial.zero(g.labels)
    for j in range(g.dim):
        if not images[j]:
            continue
        dp = p.diff(j)
        if dp:
            result = result + dp * images[j]
    return result


def nilpotent_exp(m: RatMatrix, name: str = "matrix") -> RatMatrix:
    """exp(m) as the finite series sum m^k/k!; m must be nilpotent."""
    n = m.nrows
    if n != m.ncols:
        raise ValueError("square matrix required")
    total = RatMatrix.identity(n)
    power = RatMatrix.identity(n)
    for k in range(1, n + 1):
        power = power @ m
        if power.is_zero():
            return total
        total = total + power.scale(Fraction(1, factorial(k)))
    raise NotNilpotent(f"exp of {name}: matrix is not nilpotent (power {n} is nonzero)")


def check_automorphism(g: LieAlgebra, s: RatMatrix) -> bool:
    """s([a,b]) == [s a, s b] on all basis pairs; s acts on column vectors."""
    if s.shape != (g.dim, g.dim):
        raise ValueError("operator has wrong size")
    cols = [s.column(j) for j in range(g.dim)]
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = s.apply(g.structure[i][j])
            rhs = g.bracket(cols[i], cols[j])
            if lhs != rhs:
                return False
    return True


# ---------------------------------------------------------------------------
# subalgebra embeddings


@dataclass(frozen=True, eq=False)
class SubgroupEmbedding:
    """Basis change of a parent algebra adapted to a subalgebra.

    ``basis_change`` row a expresses new basis element a in the parent
    basis.  ``generator_indices``, ``sub_cartan`` and ``triples`` index the
    new basis.
    """

    name: str
    basis_change: RatMatrix
    labels: tuple[str, ...]
    generator_indices: tuple[int, ...]
    sub_cartan: tuple[int, ...]
    triples: tuple[tuple[int, int, int], ...] | None = None


def _find_triples(g: LieAlgebra, indices: Sequence[int]) -> tuple[tuple[int, int, int], ...]:
    found = []
    for x, y, h in permutations(indices, 3):
        e = g.basis_vector
        if (g.bracket(e(x), e(y)) == e(h)
                and g.bracket(e(h), e(x)) == tuple(2 * q for q in e(x))
                and g.bracket(e(h), e(y)) == tuple(-2 * q for q in e(y))):
            found.append((x, y, h))
    return tuple(found)


def embed_subalgebra(g: LieAlgebra, emb: SubgroupEmbedding) -> LieAlgebra:
    """The parent algebra rewritten in the embedding's basis, scoped to the subalgebra."""
    B = emb.basis_change
    n = g.dim
    if B.shape != (n, n):
        raise LieAlgebraError(f"basis_change must be {n}x{n}")
    try:
        Binv = B.inverse()
    except SingularMatrix:
        raise LieAlgebraError("basis_change is singular") from None
    if len(emb.labels) != n:
        raise LieAlgebraError("embedding labels must match the algebra dimension")
    new = [B.rows[a] for a in range(n)]
    structure = []
    for a in range(n):
        row = []
        for b in range(n):
            old = g.bracket(new[a], new[b])
            # old-basis coordinates -> new-basis coordinates: x_new = x_old @ Binv
            row.append(tuple(sum((old[k] * Binv[k, c] for k in range(n)), Fraction(0)) for c in range(n)))
        structure.append(row)
    h = make_algebra(f"{g.name}:{emb.name}", emb.labels, structure, emb.sub_cartan, (), validate=True)
    triples = emb.triples if emb.triples is not None else _find_triples(h, emb.generator_indices)
    h = LieAlgebra(h.name, h.labels, h.structure, h.cartan, tuple(triples))
    h.validate()
    return h


def transport_polynomial(p: Polynomial, emb: SubgroupEmbedding) -> Polynomial:
    """Rewrite a polynomial in parent variables over the embedding's variables.

    Variables behave like basis vectors: e_k = sum_a (B^-1)[k][a] f_a.
    """
    Binv = emb.basis_change.inverse()
    images = [Polynomial.linear(emb.labels, Binv.rows[k]) for k in range(Binv.nrows)]
    return p.substitute(images, emb.labels)


def sl2_in_sl3() -> SubgroupEmbedding:
    """sl(2) = <y1, x1, h1> in sl(3); basis reordered by sl(2)-modules, h0 = h1/2 + h2."""
    g = build_sl(3)
    order = ["y1", "x1", "h1", "y2", "y3", "x2", "x3"]
    rows = []
    for lab in order:
        r = [0] * g.dim
        r[g.index(lab)] = 1
        rows.append(r)
    h0 = [Fraction(0)] * g.dim
    h0[g.index("h1")] = Fraction(1, 2)
    h0[g.index("h2")] = Fraction(1)
    rows.append(h0)
    return SubgroupEmbedding(
        name="sl2",
        basis_change=RatMatrix(rows),
        labels=tuple(order + ["h0"]),
        generator_indices=(0, 1, 2),
        sub_cartan=(2,),
    )

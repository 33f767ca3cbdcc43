"""Invariance linear systems, invariants, syzygies and Hironaka decompositions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactmath import (
    Monomial,
    Polynomial,
    RatMatrix,
    independent_subset,
    kernel_basis,
    kernel_from_sparse,
    solve_linear,
)
from .liealg import LieAlgebra, cached_adjoint, derivation
from .weyl import WeylBlock


class InconsistentInvariant(RuntimeError):
    """A kernel vector failed re-verification; indicates an internal bug."""


class NotInSpan(ValueError):
    pass


def delta(g: LieAlgebra, k: int, w: Polynomial) -> Polynomial:
    """t-linear part of the one-parameter group generated by e_k acting on w."""
    return derivation(g, k, w)


@dataclass(frozen=True, eq=False)
class InvariantSystem:
    g: LieAlgebra
    generators: tuple[int, ...]
    blocks: tuple[WeylBlock, ...]
    row_keys: tuple[tuple[int, Monomial], ...]
    matrix: RatMatrix

    @property
    def degree(self) -> int | None:
        return self.blocks[0].degree if self.blocks else None


@dataclass(frozen=True)
class Invariant:
    name: str
    degree: int
    poly: Polynomial
    kernel_vector: tuple[int, ...] = ()
    block_ids: tuple[tuple[int, int], ...] = ()

    def renamed(self, name: str) -> "Invariant":
        return Invariant(name, self.degree, self.poly, self.kernel_vector, self.block_ids)


@dataclass(frozen=True)
class Syzygy:
    relation: Polynomial  # over the invariant names
    degree: int  # weighted by the invariants' degrees

    def expand(self, invariants: Sequence[Invariant]) -> Polynomial:
        return expand_in(self.relation, invariants)


@dataclass(frozen=True)
class Decomposition:
    target: str
    expression: Polynomial  # over primary + secondary names
    primaries: tuple[str, ...]
    secondaries: tuple[str, ...]

    def coefficients(self) -> dict[str, Fraction]:
        """Coefficient per printed term, e.g. {'I1^2': 1, 'I2': 3/4}."""
        out = {}
        for m, c in self.expression.sorted_terms():
            out[str(Polynomial.monomial(self.expression.variables, m))] = c
        return out


def build_system(g: LieAlgebra, generators: Sequence[int], blocks: Sequence[WeylBlock]) -> InvariantSystem:
    """One row per (generator k, monomial d) of the Delta polynomials; one column per block."""
    blocks = tuple(blocks)
    if len({b.degree for b in blocks}) > 1:
        raise ValueError("blocks must share one degree")
    ad = cached_adjoint(g)
    coeffs: dict[tuple[int, Monomial], dict[int, Fraction]] = {}
    for k in generators:
        for j, b in enumerate(blocks):
            for m, c in derivation(g, k, b.poly, ad).terms.items():
                coeffs.setdefault((k, m), {})[j] = c
    keys = sorted(coeffs, key=lambda km: (km[0], tuple(-x for x in km[1])))
    rows = [[coeffs[key].get(j, 0) for j in range(len(blocks))] for key in keys]
    if not rows:
        rows = [[0] * len(blocks)]
        keys = []
    return InvariantSystem(g, tuple(generators), blocks, tuple(keys), RatMatrix(rows, ncols=len(blocks)))


def solve_invariants(sys: InvariantSystem, prefix: str = "C") -> list[Invariant]:
    """Kernel vectors of the system contracted against the blocks, each re-verified."""
    if not sys.blocks:
        return []
    vectors = kernel_basis(sys.matrix)
    d = sys.degree
    out = []
    for idx, v in enumerate(vectors, start=1):
        poly = Polynomial.zero(sys.g.labels)
        for c, b in zip(v, sys.blocks):
            if c:
                poly = poly + b.poly * c
        for k in sys.generators:
            if derivation(sys.g, k, poly):
                raise InconsistentInvariant(f"kernel vector {v} is not invariant under {sys.g.labels[k]}")
        name = f"{prefix}{d}" if len(vectors) == 1 else f"{prefix}{d}_{idx}"
        out.append(Invariant(name, d, poly, v, tuple(b.id for b in sys.blocks)))
    return out


# ---------------------------------------------------------------------------
# monomials in named invariants


def weighted_monomials(degrees: Sequence[int], total: int) -> list[Monomial]:
    """Exponent vectors e with sum(e_i * degrees[i]) == total, in a fixed order."""
    out = []
    n = len(degrees)

    def rec(i, remaining, acc):
        if i == n:
            if remaining == 0:
                out.append(tuple(acc))
            return
        for e in range(remaining // degrees[i], -1, -1):
            acc.append(e)
            rec(i + 1, remaining - e * degrees[i], acc)
            acc.pop()

    if any(d <= 0 for d in degrees):
        raise ValueError("invariant degrees must be positive")
    rec(0, total, [])
    return out


class _Expander:
    """Memoized expansion of monomials in invariants into base variables."""

    def __init__(self, polys: Sequence[Polynomial]):
        self.polys = list(polys)
        self.memo: dict[Monomial, Polynomial] = {}

    def __call__(self, m: Monomial) -> Polynomial:
        hit = self.memo.get(m)
        if hit is not None:
            return hit
        i = next((i for i, e in enumerate(m) if e), None)
        if i is None:
            res = Polynomial.constant(self.polys[0].variables, 1)
        else:
            rest = list(m)
            rest[i] -= 1
            res = self(tuple(rest)) * self.polys[i]
        self.memo[m] = res
        return res


def expand_in(relation: Polynomial, invariants: Sequence[Invariant]) -> Polynomial:
    names = tuple(inv.name for inv in invariants)
    rel = relation.with_variables(names) if relation.variables != names else relation
    return rel.substitute([inv.poly for inv in invariants], invariants[0].poly.variables)


def find_syzygies(invs: Sequence[Invariant], weighted_degree_cap: int) -> list[Syzygy]:
    """New polynomial relations among the invariants, weighted degree by degree.

    At each weighted degree the kernel of the expansion map is computed and
    reduced modulo multiples of relations found at lower degrees.
    """
    invs = list(invs)
    if not invs:
        return []
    names = tuple(inv.name for inv in invs)
    degs = [inv.degree for inv in invs]
    expand = _Expander([inv.poly for inv in invs])
    found: list[Syzygy] = []
    for D in range(1, weighted_degree_cap + 1):
        monos = weighted_monomials(degs, D)
        if not monos:
            continue
        col = {m: j for j, m in enumerate(monos)}
        rows: dict[Monomial, dict[int, Fraction]] = {}
        for j, m in enumerate(monos):
            for bm, c in expand(m).terms.items():
                rows.setdefault(bm, {})[j] = c
        kernel = kernel_from_sparse(rows.values(), len(monos))
        if not kernel:
            continue
        implied = []
        for s in found:
            for mult in weighted_monomials(degs, D - s.degree):
                vec = {}
                for sm, c in s.relation.terms.items():
                    vec[col[tuple(a + b for a, b in zip(sm, mult))]] = c
                implied.append(vec)
        kvecs = [{j: Fraction(x) for j, x in enumerate(v) if x} for v in kernel]
        for pos in independent_subset(kvecs, start=implied):
            v = kernel[pos]
            rel = Polynomial(names, {monos[j]: x for j, x in enumerate(v) if x})
            found.append(Syzygy(rel.normalized(), D))
    return found


def decompose(target: Invariant, primaries: Sequence[Invariant], secondaries: Sequence[Invariant] = ()) -> Decomposition:
    """Write target = p(primaries) + sum_s s * q_s(primaries) by a linear ansatz."""
    allinv = list(primaries) + list(secondaries)
    names = tuple(inv.name for inv in allinv)
    np_ = len(primaries)
    pdegs = [inv.degree for inv in primaries]
    expand = _Expander([inv.poly for inv in allinv])
    result = Polynomial.zero(names)
    by_degree: dict[int, dict] = {}
    for m, c in target.poly.terms.items():
        by_degree.setdefault(sum(m), {})[m] = c
    for d, part in sorted(by_degree.items()):
        ansatz: list[Monomial] = []
        for pm in weighted_monomials(pdegs, d):
            ansatz.append(tuple(pm) + (0,) * len(secondaries))
        for s, sec in enumerate(secondaries):
            if sec.degree <= d:
                for pm in weighted_monomials(pdegs, d - sec.degree):
                    e = [0] * len(secondaries)
                    e[s] = 1
                    ansatz.append(tuple(pm) + tuple(e))
        columns = [expand(m).terms for m in ansatz]
        x = solve_linear(columns, part)
        if x is None:
            raise NotInSpan(f"{target.name}: degree-{d} part is not in the module span")
        result = result + Polynomial(names, {m: c for m, c in zip(ansatz, x) if c})
    return Decomposition(target.name, result, names[:np_], names[np_:])


def select_generators(kernels: dict[int, Sequence[Invariant]], prefix: str = "I",
                      numbered: bool = True) -> list[Invariant]:
    """Pick, degree by degree, kernel invariants not generated by earlier picks.

    With ``numbered`` the picks are renamed prefix1, prefix2, ... in
    discovery order; otherwise they keep their names.
    """
    chosen: list[Invariant] = []
    for d in sorted(kernels):
        cands = list(kernels[d])
        if not cands:
            continue
        products = []
        if chosen:
            expand = _Expander([c.poly for c in chosen])
            for m in weighted_monomials([c.degree for c in chosen], d):
                products.append(expand(m).terms)
        for pos in independent_subset([c.poly.terms for c in cands], start=products):
            inv = cands[pos]
            if numbered:
                inv = inv.renamed(f"{prefix}{len(chosen) + 1}")
            chosen.append(inv)
    return chosen


def span_coordinates(target: Polynomial, basis: Sequence[Polynomial]) -> list[Fraction] | None:
    """Coordinates of target in the span of basis, or None if outside it."""
    return solve_linear([b.terms for b in basis], target.terms)


def dimension_of_span(polys: Sequence[Polynomial]) -> int:
    return len(independent_subset([p.terms for p in polys]))


"""Torus weights and Hilbert bases of torus-invariant monomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactmath import Monomial, Polynomial, monomial_divides
from .liealg import LieAlgebra, LieAlgebraError

Weight = tuple[int, ...]


@dataclass(frozen=True)
class TorusAction:
    variables: tuple[str, ...]
    weights: tuple[Weight, ...]

    def __post_init__(self):
        if len(self.variables) != len(self.weights):
            raise ValueError("one weight per variable required")
        if len({len(w) for w in self.weights}) > 1:
            raise ValueError("weights must all have the torus dimension")

    @property
    def dim(self) -> int:
        return len(self.weights[0]) if self.weights else 0


@dataclass(frozen=True)
class HilbertBasis:
    variables: tuple[str, ...]
    monomials: tuple[Monomial, ...]
    degree_cap: int
    truncated: bool

    def polynomials(self) -> list[Polynomial]:
        return [Polynomial.monomial(self.variables, m) for m in self.monomials]

    def max_degree(self) -> int:
        return max((sum(m) for m in self.monomials), default=0)

    def __len__(self):
        return len(self.monomials)


def weights_from_cartan(g: LieAlgebra) -> TorusAction:
    """Read alpha(H_j) off [H_j, e_i] = alpha(H_j) e_i for every basis element."""
    weights = []
    for i in range(g.dim):
        w = []
        for hj in g.cartan:
            v = g.structure[hj][i]
            if any(x for k, x in enumerate(v) if k != i):
                raise LieAlgebraError(f"basis is not a weight basis: {g.labels[i]} is not an eigenvector of ad {g.labels[hj]}")
            lam = v[i]
            if Fraction(lam).denominator != 1:
                raise LieAlgebraError(f"non-integral weight {lam} of {g.labels[i]} under {g.labels[hj]}")
            w.append(int(lam))
        weights.append(tuple(w))
    return TorusAction(g.labels, tuple(weights))


def monomial_weight(t: TorusAction, m: Monomial) -> Weight:
    d = t.dim
    return tuple(sum(n * w[c] for n, w in zip(m, t.weights)) for c in range(d))


def _reachable(weight: Weight, steps: int, pos: list[int], neg: list[int]) -> bool:
    """Can `steps` more variables bring every coordinate back to 0 (coordinatewise bound)?"""
    for c, x in enumerate(weight):
        if x > 0 and x > steps * neg[c]:
            return False
        if x < 0 and -x > steps * pos[c]:
            return False
    return True


def hilbert_basis(t: TorusAction, degree_cap: int = 3) -> HilbertBasis:
    """Minimal weight-zero monomials up to ``degree_cap``, grown degree by degree.

    Each reached weight keeps every monomial not divisible by an earlier one
    of the same weight; only newly stored monomials are extended.  Partial
    monomials that cannot return to weight zero within the cap, or that
    already contain a weight-zero generator, are dropped.
    """
    if degree_cap < 1:
        raise ValueError("degree_cap must be >= 1")
    n, d = len(t.variables), t.dim
    pos = [max([w[c] for w in t.weights if w[c] > 0], default=0) for c in range(d)]
    neg = [max([-w[c] for w in t.weights if w[c] < 0], default=0) for c in range(d)]
    zero = (0,) * d
    boxes: dict[Weight, list[Monomial]] = {}
    generators: list[Monomial] = []
    frontier: list[tuple[Monomial, Weight]] = [((0,) * n, zero)]
    last_new_degree = 0
    for degree in range(1, degree_cap + 1):
        new: list[tuple[Monomial, Weight]] = []
        seen: set[Monomial] = set()
        for m, w in frontier:
            for i in range(n):
                e = list(m)
                e[i] += 1
                e = tuple(e)
                if e in seen:
                    continue
                seen.add(e)
                we = tuple(a + b for a, b in zip(w, t.weights[i]))
                if not _reachable(we, degree_cap - degree, pos, neg):
                    continue
                if any(monomial_divides(g, e) for g in generators):
                    continue
                box = boxes.setdefault(we, [])
                if any(monomial_divides(b, e) for b in box):
                    continue
                new.append((e, we))
        # insert after the sweep so same-degree monomials never block each other
        for e, we in new:
            boxes[we].append(e)
            if we == zero:
                generators.append(e)
                last_new_degree = degree
        frontier = [(e, we) for e, we in new if we != zero]
        if not frontier:
            break
    generators = sorted(generators, key=lambda m: (sum(m), tuple(-x for x in m)))
    return HilbertBasis(t.variables, tuple(generators), degree_cap, last_new_degree == degree_cap)

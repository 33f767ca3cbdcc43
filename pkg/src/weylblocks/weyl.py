"""Weyl reflections lifted to algebra automorphisms, the Reynolds sum, Weyl blocks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence

from .exactmath import Polynomial, RatMatrix, independent_subset
from .liealg import AdjointData, LieAlgebra, cached_adjoint, nilpotent_exp
from .torus import HilbertBasis, weights_from_cartan


class ClosureBoundExceeded(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class WeylOperator:
    name: str
    matrix: RatMatrix
    word: tuple[int, ...]  # indices into the generator list, applied as a matrix product

    def images(self, variables: Sequence[str]) -> list[Polynomial]:
        return [Polynomial.linear(variables, self.matrix.column(j)) for j in range(self.matrix.ncols)]

    def act(self, p: Polynomial) -> Polynomial:
        """Substitute e_j -> sum_k S[k][j] e_k."""
        return p.substitute(self.images(p.variables), p.variables)


@dataclass(frozen=True, eq=False)
class WeylOperatorSet:
    generators: tuple[WeylOperator, ...]
    ops: tuple[WeylOperator, ...]

    def __len__(self):
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)


@dataclass(frozen=True)
class WeylBlock:
    degree: int
    index: int
    poly: Polynomial
    provenance: tuple[str, ...]
    initial: bool = False

    @property
    def id(self) -> tuple[int, int]:
        return (self.degree, self.index)

    @property
    def name(self) -> str:
        return f"w{self.degree},{self.index}"


def _word_name(word: Sequence[int]) -> str:
    return "".join(f"S{i + 1}" for i in word) if word else "I"


def _cartan_part(s: RatMatrix, cartan: Sequence[int]) -> tuple:
    return tuple(tuple(s[k, j] for k in cartan) for j in cartan)


def reflection_generators(g: LieAlgebra, ad: AdjointData | None = None) -> list[WeylOperator]:
    """exp(A~_x) exp(-A~_y) exp(A~_x) for each sl(2)-triple (x, y, h)."""
    ad = ad or cached_adjoint(g)
    gens = []
    for k, (x, y, _h) in enumerate(g.triples):
        ex = nilpotent_exp(ad.A_tilde[x], name=f"ad {g.labels[x]}")
        ey = nilpotent_exp(-ad.A_tilde[y], name=f"ad {g.labels[y]}")
        gens.append(WeylOperator(f"S{k + 1}", ex @ ey @ ex, (k,)))
    return gens


def build_weyl_operators(g: LieAlgebra, ad: AdjointData | None = None, closure: bool = False,
                         bound: int = 1000) -> WeylOperatorSet:
    """Identity, the reflection lifts, and one shortest word per Weyl group element.

    Words are enumerated in shortlex order and kept when their action on the
    Cartan span is new.  With ``closure=True`` the full matrix group
    generated by the lifts is returned instead.
    """
    gens = reflection_generators(g, ad)
    n = g.dim
    ident = WeylOperator("I", RatMatrix.identity(n), ())
    if closure:
        return WeylOperatorSet(tuple(gens), tuple(_closure(gens, n, bound)))
    ops = [ident]
    seen = {_cartan_part(ident.matrix, g.cartan)}
    layer = [ident]
    while layer:
        nxt = []
        for op in layer:
            for k, s in enumerate(gens):
                if op.word and op.word[-1] == k:
                    continue
                m = op.matrix @ s.matrix
                key = _cartan_part(m, g.cartan)
                if key in seen:
                    continue
                seen.add(key)
                word = op.word + (k,)
                new = WeylOperator(_word_name(word), m, word)
                ops.append(new)
                nxt.append(new)
        if len(ops) > bound:
            raise ClosureBoundExceeded(f"Weyl word enumeration exceeded {bound} elements")
        layer = nxt
    return WeylOperatorSet(tuple(gens), tuple(ops))


def _closure(gens: Sequence[WeylOperator], n: int, bound: int) -> list[WeylOperator]:
    ident = RatMatrix.identity(n)
    found = {ident: ()}
    order = [ident]
    queue = [ident]
    while queue:
        nxt = []
        for m in queue:
            for k, s in enumerate(gens):
                p = m @ s.matrix
                if p not in found:
                    found[p] = found[m] + (k,)
                    order.append(p)
                    nxt.append(p)
                    if len(found) > bound:
                        raise ClosureBoundExceeded(f"closure bound exceeded ({bound})")
        queue = nxt
    return [WeylOperator(_word_name(found[m]), m, found[m]) for m in order]


def group_closure_order(ops: WeylOperatorSet | Sequence[WeylOperator], bound: int = 1000) -> int:
    """Order of the matrix group generated by the given operators."""
    gens = list(ops.generators) if isinstance(ops, WeylOperatorSet) else list(ops)
    if not gens:
        return 1
    return len(_closure(gens, gens[0].matrix.nrows, bound))


# ---------------------------------------------------------------------------
# comparison with reflections on the root system


@dataclass(frozen=True)
class CartanCheckEntry:
    generator: str
    kind: str  # "coroot" or "weight-space"
    root: tuple[int, ...]
    reflected: tuple[int, ...]
    image: str
    expected: str
    ok: bool


@dataclass(frozen=True)
class CartanCheckReport:
    entries: tuple[CartanCheckEntry, ...]

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def mismatches(self) -> list[CartanCheckEntry]:
        return [e for e in self.entries if not e.ok]


def cartan_consistency_check(ops: WeylOperatorSet, g: LieAlgebra) -> CartanCheckReport:
    """Compare each lift with the reflection it should extend.

    For a triple (x, y, h) with simple root a = weight(x), the reflection is
    b -> b - b(h) a.  Two things are checked: the lift maps every weight
    space L_b into L_{sigma(b)}, and it maps the coroot of each root b
    (normalised [e_b, e_-b]) to the coroot of sigma(b).
    """
    t = weights_from_cartan(g)
    weights = t.weights
    cartan_pos = {h: c for c, h in enumerate(g.cartan)}
    by_weight: dict[tuple[int, ...], list[int]] = {}
    for i, w in enumerate(weights):
        by_weight.setdefault(w, []).append(i)
    zero = (0,) * t.dim

    coroots = {}
    for i, wi in enumerate(weights):
        if wi == zero:
            continue
        for j in by_weight.get(tuple(-x for x in wi), []):
            v = g.bracket(g.basis_vector(i), g.basis_vector(j))
            if not any(v) or any(x for k, x in enumerate(v) if k not in cartan_pos):
                continue
            # b(H) for H = sum_h v_h h
            val = sum((v[h] * weights[i][cartan_pos[h]] for h in g.cartan), Fraction(0))
            if val:
                coroots[wi] = tuple(2 * x / val for x in v)
            break

    def fmt(vec):
        return str(Polynomial.linear(g.labels, vec))

    entries = []
    for gen, (x, _y, h) in zip(ops.generators, g.triples):
        alpha = weights[x]
        hpos = cartan_pos.get(h)
        if hpos is None:
            raise ValueError(f"triple element {g.labels[h]} is not in the Cartan subalgebra")

        def sigma(b):
            # b(h) is the weight component along the triple's own h
            bh = b[hpos]
            return tuple(bc - bh * ac for bc, ac in zip(b, alpha))

        s = gen.matrix
        for w, idxs in sorted(by_weight.items()):
            target = sigma(w)
            allowed = set(by_weight.get(target, []))
            for i in idxs:
                col = s.column(i)
                ok = all(not c or k in allowed for k, c in enumerate(col))
                entries.append(CartanCheckEntry(gen.name, "weight-space", w, target, fmt(col),
                                                "span(" + ", ".join(g.labels[k] for k in sorted(allowed)) + ")", ok))
        for b, cb in sorted(coroots.items()):
            target = sigma(b)
            img = s.apply(cb)
            want = coroots.get(target)
            ok = want is not None and img == want
            entries.append(CartanCheckEntry(gen.name, "coroot", b, target, fmt(img),
                                            fmt(want) if want is not None else "?", ok))
    return CartanCheckReport(tuple(entries))


# ---------------------------------------------------------------------------
# Reynolds operator and blocks


def reynolds(ops: WeylOperatorSet | Sequence[WeylOperator], p: Polynomial, normalize: bool = False) -> Polynomial:
    """Sum of S(p) over the listed operators (no division by their number)."""
    total = Polynomial.zero(p.variables)
    for op in ops:
        total = total + op.act(p)
    return total.normalized() if normalize else total


def generate_weyl_blocks(ops: WeylOperatorSet, hb: HilbertBasis, max_degree: int | None = None) -> list[WeylBlock]:
    """Reynolds images of Hilbert-basis elements and their products, reduced per degree.

    Within each degree, images of single basis elements (initial blocks)
    come first, then products in lexicographic order of their factor
    indices.  Images are content-normalized; those already in the span of
    earlier blocks of the same degree are dropped.
    """
    if max_degree is None:
        max_degree = hb.max_degree()
    gens = hb.polynomials()
    degs = [sum(m) for m in hb.monomials]
    candidates: dict[int, list[tuple[tuple[int, ...], Polynomial]]] = {}
    for k in range(1, max_degree + 1):
        for combo in combinations_with_replacement(range(len(gens)), k):
            d = sum(degs[i] for i in combo)
            if d <= max_degree:
                candidates.setdefault(d, []).append(combo)
    blocks: list[WeylBlock] = []
    for d in sorted(candidates):
        combos = sorted(candidates[d], key=lambda c: (len(c) > 1, c))
        images = []
        for combo in combos:
            prod = gens[combo[0]]
            for i in combo[1:]:
                prod = prod * gens[i]
            img = reynolds(ops, prod)
            if img:
                images.append((combo, img.normalized()))
        keep = independent_subset([img.terms for _, img in images])
        for idx, pos in enumerate(keep, start=1):
            combo, img = images[pos]
            prov = tuple(str(gens[i]) for i in combo)
            blocks.append(WeylBlock(d, idx, img, prov, initial=len(combo) == 1))
    return blocks


def restrict_to_cartan(p: Polynomial, g: LieAlgebra, prefix: str = "alpha") -> Polynomial:
    """Set non-Cartan variables to zero and rename Cartan variables alpha_i."""
    names = tuple(f"{prefix}{k + 1}" for k in range(len(g.cartan)))
    pos = {h: k for k, h in enumerate(g.cartan)}
    terms = {}
    for m, c in p.terms.items():
        if any(e for i, e in enumerate(m) if i not in pos):
            continue
        e = [0] * len(names)
        for h, k in pos.items():
            e[k] = m[h]
        e = tuple(e)
        terms[e] = terms.get(e, 0) + c
    return Polynomial(names, terms)

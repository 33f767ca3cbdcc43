"""End-to-end construction: weights, torus basis, lifts, blocks, systems, invariants."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

from .exactmath import Polynomial, parse_polynomial
from .liealg import LieAlgebra, SubgroupEmbedding, cached_adjoint, embed_subalgebra, transport_polynomial
from .series import molien_coefficients_su2
from .solver import (
    Invariant,
    InvariantSystem,
    NotInSpan,
    Syzygy,
    build_system,
    decompose,
    find_syzygies,
    select_generators,
    solve_invariants,
    span_coordinates,
)
from .torus import HilbertBasis, TorusAction, hilbert_basis, weights_from_cartan
from .weyl import (
    CartanCheckReport,
    WeylBlock,
    WeylOperatorSet,
    build_weyl_operators,
    cartan_consistency_check,
    generate_weyl_blocks,
    group_closure_order,
)
from . import reference


@dataclass
class PipelineResult:
    algebra: LieAlgebra
    scope: str
    group_generators: tuple[int, ...]
    torus: TorusAction
    hilbert: HilbertBasis
    ops: WeylOperatorSet
    closure_order: int
    cartan_check: CartanCheckReport
    blocks: list[WeylBlock]
    systems: dict[int, InvariantSystem]
    kernels: dict[int, list[Invariant]]
    generators: list[Invariant]
    syzygies: list[Syzygy] | None = None
    molien: list[int] | None = None
    alignment: list[dict] | None = None
    timing: dict[str, float] = field(default_factory=dict)


def scoped_algebra(g: LieAlgebra, embeddings: dict[str, SubgroupEmbedding],
                   embedding: str | None) -> tuple[LieAlgebra, tuple[int, ...], str, SubgroupEmbedding | None]:
    if embedding is None:
        return g, tuple(range(g.dim)), "full", None
    if embedding not in embeddings:
        raise KeyError(f"algebra {g.name} has no embedding {embedding!r} (available: {sorted(embeddings)})")
    emb = embeddings[embedding]
    return embed_subalgebra(g, emb), emb.generator_indices, embedding, emb


def run_pipeline(g: LieAlgebra, generators: Sequence[int], scope: str = "full", *,
                 max_degree: int | None = None, degree_cap: int = 3, closure: bool = False,
                 syzygy_cap: int | None = None, series_degree: int | None = None) -> PipelineResult:
    clock = {}
    t0 = time.perf_counter()
    cached_adjoint(g)
    torus = weights_from_cartan(g)
    hb = hilbert_basis(torus, degree_cap)
    clock["torus"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    ops = build_weyl_operators(g, closure=closure)
    order = group_closure_order(ops)
    check = cartan_consistency_check(ops, g)
    if max_degree is None:
        max_degree = hb.max_degree()
    blocks = generate_weyl_blocks(ops, hb, max_degree)
    clock["weyl"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    systems, kernels = {}, {}
    prefix = "C" if scope == "full" else "K"
    for d in range(1, max_degree + 1):
        deg_blocks = [b for b in blocks if b.degree == d]
        if not deg_blocks:
            continue
        systems[d] = build_system(g, generators, deg_blocks)
        kernels[d] = solve_invariants(systems[d], prefix=prefix)
    if scope == "full":
        gens = select_generators(kernels, numbered=False)
    else:
        gens = select_generators(kernels, prefix="I")
    clock["solve"] = time.perf_counter() - t0

    result = PipelineResult(g, scope, tuple(generators), torus, hb, ops, order, check, blocks,
                            systems, kernels, gens, timing=clock)
    if syzygy_cap is not None:
        t0 = time.perf_counter()
        result.syzygies = find_syzygies(gens, syzygy_cap)
        clock["syzygies"] = time.perf_counter() - t0
    if series_degree is not None and torus.dim == 1:
        result.molien = molien_coefficients_su2([w[0] for w in torus.weights], series_degree)
    return result


def reference_invariants(g: LieAlgebra, scope: str) -> dict[str, Polynomial] | None:
    """Known invariants for the built-in sl3 scopes, keyed by their usual names."""
    if g.name == "sl3" and scope == "full":
        return {k: parse_polynomial(v, g.labels) for k, v in reference.SL3_CASIMIRS.items()}
    if g.name == "sl3:sl2" and scope == "sl2":
        return {k: parse_polynomial(v, g.labels) for k, v in reference.SL2_INVARIANTS.items()}
    return None


def align(result: PipelineResult, known: dict[str, Polynomial]) -> list[dict]:
    """Locate each known invariant in the computed kernel and in the computed generators."""
    out = []
    for name, poly in known.items():
        d = poly.degree()
        kernel = result.kernels.get(d, [])
        in_span = bool(kernel) and span_coordinates(poly, [k.poly for k in kernel]) is not None
        entry = {"name": name, "degree": d, "in_kernel_span": in_span, "expression": None}
        if result.generators:
            try:
                dec = decompose(Invariant(name, d, poly), result.generators)
                entry["expression"] = str(dec.expression)
            except NotInSpan:
                pass
        out.append(entry)
    return out


def transport_reference_casimirs(emb: SubgroupEmbedding, parent_labels) -> dict[str, Polynomial]:
    return {k: transport_polynomial(parse_polynomial(v, parent_labels), emb)
            for k, v in reference.SL3_CASIMIRS.items()}

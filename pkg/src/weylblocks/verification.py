"""Self-checks of the built-in sl(3) and sl(2)-in-sl(3) computations against stored results."""

from __future__ import annotations

from dataclasses import dataclass

from . import reference as ref
from .algebra_io import resolve_algebra
from .exactmath import Polynomial, RatMatrix, parse_polynomial
from .liealg import check_automorphism, derivation
from .pipeline import run_pipeline, scoped_algebra, transport_reference_casimirs
from .series import (
    check_functional_equation,
    expand_series,
    hilbert_series_from_degrees,
    molien_coefficients_su2,
    molien_sl2_adjoint_sl3,
)
from .solver import Invariant, decompose, expand_in, find_syzygies, span_coordinates
from .weyl import restrict_to_cartan


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def _same_up_to_positive_scalar(a: Polynomial, b: Polynomial) -> bool:
    return a.normalized() == b.normalized()


def run_checks(series_degree: int = 20) -> list[Check]:
    checks: list[Check] = []

    def add(name, ok, detail=""):
        checks.append(Check(name, bool(ok), detail))

    g, embeddings = resolve_algebra("sl3")
    full = run_pipeline(g, range(g.dim), "full")
    P = lambda text, labels=g.labels: parse_polynomial(text, labels)

    weights = {v: tuple(w) for v, w in zip(g.labels, full.torus.weights)}
    add("sl3 weights", weights == ref.SL3_WEIGHTS)
    got = {str(p) for p in full.hilbert.polynomials()}
    want = {str(P(t)) for t in ref.SL3_TORUS_BASIS}
    add("sl3 torus Hilbert basis", got == want, f"{len(got)} monomials")

    s1, s2 = full.ops.generators
    for op, table in ((s1, ref.SL3_S1), (s2, ref.SL3_S2)):
        images = dict(zip(g.labels, op.images(g.labels)))
        add(f"{op.name} table", all(images[v] == P(t) for v, t in table.items()))
        add(f"{op.name} is an automorphism", check_automorphism(g, op.matrix))
    add("Cartan restriction consistency", full.cartan_check.ok, f"{len(full.cartan_check.entries)} comparisons")
    add("closure order", full.closure_order == ref.SL3_CLOSURE_ORDER, str(full.closure_order))

    by_name = {b.name: b.poly for b in full.blocks}
    add("sl3 Weyl blocks", all(n in by_name and _same_up_to_positive_scalar(by_name[n], P(t))
                               for n, t in ref.SL3_BLOCKS.items()))
    kernels = {d: [k.kernel_vector for k in ks] for d, ks in full.kernels.items() if d in ref.SL3_KERNELS}
    add("sl3 kernel vectors", kernels == {d: [v] for d, v in ref.SL3_KERNELS.items()}, str(kernels))
    cas = {inv.name: inv.poly for inv in full.generators}
    add("Casimirs", all(cas.get(n) == P(t) for n, t in ref.SL3_CASIMIRS.items()))
    add("Casimirs annihilated by all generators",
        all(not derivation(g, k, p) for p in cas.values() for k in range(g.dim)))
    weyl_inv = {n: restrict_to_cartan(cas[n], g) for n in ref.SL3_WEYL_INVARIANTS}
    add("Cartan restriction of Casimirs", all(
        _same_up_to_positive_scalar(weyl_inv[n], parse_polynomial(t, weyl_inv[n].variables))
        for n, t in ref.SL3_WEYL_INVARIANTS.items()))

    sub, gens, scope, emb = scoped_algebra(g, embeddings, "sl2")
    res = run_pipeline(sub, gens, scope, syzygy_cap=6)
    Q = lambda text: parse_polynomial(text, sub.labels)
    add("sl2 weights", tuple(w[0] for w in res.torus.weights) == ref.SL2_WEIGHTS)
    add("sl2 s1 matrix", res.ops.generators[0].matrix == RatMatrix(ref.SL2_S1_MATRIX))
    new_counts = [sum(1 for i in res.generators if i.degree == d) for d in (1, 2, 3)]
    add("sl2 new invariants per degree", new_counts == [1, 2, 3], str(new_counts))
    known = [Invariant(n, Q(t).degree(), Q(t)) for n, t in ref.SL2_INVARIANTS.items()]
    add("sl2 known invariants in computed spans", all(
        span_coordinates(k.poly, [x.poly for x in res.kernels[k.degree]]) is not None for k in known))
    add("sl2 known invariants annihilated", all(not derivation(sub, k, i.poly) for i in known for k in gens))

    syz = find_syzygies(known, 6)
    want_syz = parse_polynomial(ref.SL2_SYZYGY, [k.name for k in known])
    add("syzygy among I1..I6", len(syz) == 1 and _same_up_to_positive_scalar(syz[0].relation, want_syz),
        "; ".join(str(s.relation) for s in syz))
    add("no syzygy among I1..I5", not find_syzygies(known[:5], 6))
    initial = [Invariant(n, Q(t).degree(), Q(t)) for n, t in ref.SL2_INITIAL_PARTS.items()]
    add("initial-block parts obey the syzygy", not expand_in(want_syz, initial))
    add("syzygy of computed generators", res.syzygies is not None and len(res.syzygies) == 1
        and not res.syzygies[0].expand(res.generators))

    prim = known[:5]
    sec = known[5:]
    for name, poly in transport_reference_casimirs(emb, g.labels).items():
        dec = decompose(Invariant(name, poly.degree(), poly), prim, sec)
        want_dec = parse_polynomial(ref.SL2_DECOMPOSITIONS[name], dec.expression.variables)
        add(f"{name} decomposition", dec.expression == want_dec, str(dec.expression))

    m = molien_coefficients_su2(ref.SU2_U3_WEIGHTS, series_degree)
    add("Molien series u(3)", m == expand_series(molien_sl2_adjoint_sl3(), series_degree))
    h_form = hilbert_series_from_degrees(ref.SL2_PRIMARY_DEGREES, ref.SL2_SECONDARY_DEGREES)
    h = molien_coefficients_su2(ref.SL2_WEIGHTS, series_degree)
    add("Hilbert series sl(3)", h == expand_series(h_form, series_degree), str(h[:7]))
    add("functional equation", check_functional_equation(molien_sl2_adjoint_sl3(), ref.MOLIEN_FUNCTIONAL_DEGREE))
    return checks

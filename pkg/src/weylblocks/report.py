"""InvariantReport: deterministic JSON, LaTeX and text renderings of a pipeline run."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .exactmath import Polynomial, latex_symbol
from .pipeline import PipelineResult

SCHEMA_VERSION = 1


def poly_to_json(p: Polynomial) -> dict:
    return {
        "variables": list(p.variables),
        "terms": [[list(m), str(c)] for m, c in p.sorted_terms()],
        "text": str(p),
    }


def poly_from_json(d: dict) -> Polynomial:
    return Polynomial(d["variables"], {tuple(m): Fraction(c) for m, c in d["terms"]})


@dataclass
class BlockEntry:
    id: tuple[int, int]
    poly: Polynomial
    provenance: list[str]
    initial: bool


@dataclass
class InvariantEntry:
    name: str
    degree: int
    poly: Polynomial
    kernel_vector: list[int]
    block_ids: list[tuple[int, int]]


@dataclass
class InvariantReport:
    algebra: str
    scope: str
    variables: list[str]
    group_generators: list[str]
    weights: list[list[int]]
    hilbert_basis: dict
    weyl_operators: list[dict]
    closure_order: int
    cartan_check_ok: bool
    blocks: list[BlockEntry]
    systems: list[dict]
    invariants: list[InvariantEntry]
    invariant_dimensions: dict[str, int]
    syzygies: list[dict] | None = None
    series: dict | None = None
    alignment: list[dict] | None = None
    timing: dict | None = None
    schema_version: int = SCHEMA_VERSION

    # -- construction ------------------------------------------------------
    @classmethod
    def from_result(cls, r: PipelineResult, include_timing: bool = False) -> "InvariantReport":
        g = r.algebra
        systems = []
        for d, sys in sorted(r.systems.items()):
            systems.append({
                "degree": d,
                "blocks": [f"w{b.degree},{b.index}" for b in sys.blocks],
                "equations": len(sys.row_keys),
                "rank": sys.matrix.rank(),
                "kernel": [list(k.kernel_vector) for k in r.kernels[d]],
            })
        series = None
        top = min(max(r.kernels, default=0), len(r.molien or ()) - 1)
        if r.molien is not None:
            series = {"molien_su2": r.molien,
                      "invariant_dimensions": [1] + [len(r.kernels.get(n, [])) for n in range(1, top + 1)]}
        return cls(
            algebra=g.name,
            scope=r.scope,
            variables=list(g.labels),
            group_generators=[g.labels[i] for i in r.group_generators],
            weights=[list(w) for w in r.torus.weights],
            hilbert_basis={
                "degree_cap": r.hilbert.degree_cap,
                "truncated": r.hilbert.truncated,
                "monomials": [str(p) for p in r.hilbert.polynomials()],
            },
            weyl_operators=[{"name": op.name, "word": list(op.word)} for op in r.ops],
            closure_order=r.closure_order,
            cartan_check_ok=r.cartan_check.ok,
            blocks=[BlockEntry((b.degree, b.index), b.poly, list(b.provenance), b.initial) for b in r.blocks],
            systems=systems,
            invariants=[InvariantEntry(i.name, i.degree, i.poly, list(i.kernel_vector), [tuple(b) for b in i.block_ids])
                        for i in r.generators],
            invariant_dimensions={str(d): len(k) for d, k in sorted(r.kernels.items())},
            syzygies=None if r.syzygies is None else [
                {"relation": poly_to_json(s.relation), "degree": s.degree} for s in r.syzygies],
            series=series,
            alignment=r.alignment,
            timing={k: round(v, 6) for k, v in r.timing.items()} if include_timing else None,
        )

    # -- JSON --------------------------------------------------------------
    def to_dict(self) -> dict:
        d = {
            "schema_version": self.schema_version,
            "algebra": self.algebra,
            "scope": self.scope,
            "variables": self.variables,
            "group_generators": self.group_generators,
            "weights": self.weights,
            "hilbert_basis": self.hilbert_basis,
            "weyl_operators": self.weyl_operators,
            "closure_order": self.closure_order,
            "cartan_check_ok": self.cartan_check_ok,
            "blocks": [{"id": list(b.id), "poly": poly_to_json(b.poly), "provenance": b.provenance,
                        "initial": b.initial} for b in self.blocks],
            "systems": self.systems,
            "invariants": [{"name": i.name, "degree": i.degree, "poly": poly_to_json(i.poly),
                            "kernel_vector": i.kernel_vector, "block_ids": [list(b) for b in i.block_ids]}
                           for i in self.invariants],
            "invariant_dimensions": self.invariant_dimensions,
            "syzygies": self.syzygies,
            "series": self.series,
            "alignment": self.alignment,
        }
        if self.timing is not None:
            d["timing"] = self.timing
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "InvariantReport":
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema_version {d.get('schema_version')!r}")
        return cls(
            algebra=d["algebra"],
            scope=d["scope"],
            variables=d["variables"],
            group_generators=d["group_generators"],
            weights=d["weights"],
            hilbert_basis=d["hilbert_basis"],
            weyl_operators=d["weyl_operators"],
            closure_order=d["closure_order"],
            cartan_check_ok=d["cartan_check_ok"],
            blocks=[BlockEntry(tuple(b["id"]), poly_from_json(b["poly"]), b["provenance"], b["initial"])
                    for b in d["blocks"]],
            systems=d["systems"],
            invariants=[InvariantEntry(i["name"], i["degree"], poly_from_json(i["poly"]), i["kernel_vector"],
                                       [tuple(b) for b in i["block_ids"]]) for i in d["invariants"]],
            invariant_dimensions=d["invariant_dimensions"],
            syzygies=d.get("syzygies"),
            series=d.get("series"),
            alignment=d.get("alignment"),
            timing=d.get("timing"),
            schema_version=d["schema_version"],
        )

    @classmethod
    def from_json(cls, text: str) -> "InvariantReport":
        return cls.from_dict(json.loads(text))

    # -- LaTeX -------------------------------------------------------------
    def to_latex(self) -> str:
        lines = [f"% invariants of {self.algebra} ({self.scope})", r"\begin{align*}"]
        body = []
        for b in self.blocks:
            body.append(rf"w_{{{b.id[0]},{b.id[1]}}} &= {b.poly.to_latex()}")
        for i in self.invariants:
            body.append(rf"{latex_symbol(i.name)} &= {i.poly.to_latex()}")
        for s in self.syzygies or []:
            body.append(rf"0 &= {poly_from_json(s['relation']).to_latex()}")
        lines.append(" \\\\\n".join(body))
        lines.append(r"\end{align*}")
        return "\n".join(lines) + "\n"

    # -- text --------------------------------------------------------------
    def to_text(self) -> str:
        out = [f"algebra {self.algebra}, scope {self.scope}",
               f"group generators: {', '.join(self.group_generators)}",
               "weights: " + ", ".join(f"{v}{tuple(w)}" for v, w in zip(self.variables, self.weights)),
               f"torus Hilbert basis (cap {self.hilbert_basis['degree_cap']}"
               f"{', truncated' if self.hilbert_basis['truncated'] else ''}): "
               + ", ".join(self.hilbert_basis["monomials"]),
               f"Weyl operators: {', '.join(o['name'] for o in self.weyl_operators)}"
               f"  (generated group order {self.closure_order}; Cartan check {'ok' if self.cartan_check_ok else 'FAILED'})",
               "Weyl blocks:"]
        for b in self.blocks:
            mark = " (initial)" if b.initial else ""
            out.append(f"  w{b.id[0]},{b.id[1]} = {b.poly}{mark}")
        for s in self.systems:
            out.append(f"degree {s['degree']}: {s['equations']} equations, rank {s['rank']}, "
                       f"kernel {[tuple(k) for k in s['kernel']]}")
        out.append("invariants:")
        for i in self.invariants:
            out.append(f"  {i.name} = {i.poly}   [kernel {tuple(i.kernel_vector)}]")
        if self.syzygies is not None:
            out.append("syzygies:" if self.syzygies else "syzygies: none")
            for s in self.syzygies:
                out.append(f"  {s['relation']['text']} = 0   (weighted degree {s['degree']})")
        if self.series:
            out.append(f"Molien (SU(2)) coefficients: {self.series['molien_su2']}")
            out.append(f"invariant dimensions:        {self.series['invariant_dimensions']}")
        if self.alignment:
            out.append("alignment with known invariants:")
            for a in self.alignment:
                expr = a["expression"] if a["expression"] is not None else "not in the generated subring"
                out.append(f"  known {a['name']}: in kernel span {a['in_kernel_span']}; as computed generators: {expr}")
        if self.timing:
            out.append("timing: " + ", ".join(f"{k} {v:.3f}s" for k, v in self.timing.items()))
        return "\n".join(out) + "\n"


__all__ = ["InvariantReport", "SCHEMA_VERSION", "poly_from_json", "poly_to_json"]

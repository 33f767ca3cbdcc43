"""Molien series for rank-one torus weights, Hilbert series of graded rings.

For SU(2) the Weyl integration formula turns the Haar integral into an
integral over the maximal torus with density (1/pi) sin^2(phi) dphi.  In
terms of z = exp(i phi) that density is (2 - z^2 - z^-2) / (4 pi), so

    integral of z^w dmu = [w == 0] - ([w == 2] + [w == -2]) / 2.

Expanding 1/det(1 - q rho(z)) as a sum over monomials, the coefficient of
q^n in the Molien series is N_0(n) - (N_2(n) + N_-2(n)) / 2, where N_w(n)
counts degree-n monomials of total z-weight w.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class RationalSeriesForm:
    """numerator(q) / prod (1 - q^a)^m, numerator as coefficient list from q^0."""

    numerator: tuple[int, ...]
    denominator_factors: tuple[tuple[int, int], ...]

    def __str__(self):
        num = " + ".join(
            ("1" if k == 0 else (f"q^{k}" if k > 1 else "q")) if c == 1 else f"{c}*q^{k}"
            for k, c in enumerate(self.numerator) if c
        ) or "0"
        den = "".join(
            (f"(1-q^{a})" if a > 1 else "(1-q)") + (f"^{m}" if m > 1 else "")
            for a, m in self.denominator_factors
        )
        return f"({num})/({den})" if den else num

    @property
    def krull_dimension(self) -> int:
        return sum(m for _a, m in self.denominator_factors)


def weight_counts(weights: Sequence[int], max_degree: int) -> list[dict[int, int]]:
    """table[n][w] = number of degree-n monomials of total weight w."""
    # dp over variables: adding variable i any number of times
    table = [dict() for _ in range(max_degree + 1)]
    table[0][0] = 1
    for w in weights:
        # unbounded knapsack: iterate degrees upward so a variable may repeat
        for n in range(1, max_degree + 1):
            prev = table[n - 1]
            cur = table[n]
            for wt, c in prev.items():
                cur[wt + w] = cur.get(wt + w, 0) + c
    return table


def molien_coefficients_su2(weights: Sequence[int], max_degree: int) -> list[int]:
    """Dimensions of degree-n SU(2) invariants for a diagonal torus action with these z-exponents."""
    out = []
    for row in weight_counts(weights, max_degree):
        v = Fraction(row.get(0, 0)) - Fraction(row.get(2, 0) + row.get(-2, 0), 2)
        if v.denominator != 1:
            raise ArithmeticError("non-integral Molien coefficient; weights are not closed under negation")
        out.append(int(v))
    return out


def expand_series(f: RationalSeriesForm, max_degree: int) -> list[int]:
    coeffs = [0] * (max_degree + 1)
    for k, c in enumerate(f.numerator[: max_degree + 1]):
        coeffs[k] = c
    for a, m in f.denominator_factors:
        for _ in range(m):
            # multiply by 1/(1 - q^a) in place
            for n in range(a, max_degree + 1):
                coeffs[n] += coeffs[n - a]
    return coeffs


def hilbert_series_from_degrees(primary_degrees: Sequence[int], secondary_degrees: Sequence[int] = ()) -> RationalSeriesForm:
    """Series of a free module over k[primaries] with basis 1 and the secondaries."""
    if any(d < 1 for d in primary_degrees) or any(d < 1 for d in secondary_degrees):
        raise ValueError("degrees must be positive")
    top = max([0, *secondary_degrees])
    num = [0] * (top + 1)
    num[0] = 1
    for d in secondary_degrees:
        num[d] += 1
    factors: dict[int, int] = {}
    for d in primary_degrees:
        factors[d] = factors.get(d, 0) + 1
    return RationalSeriesForm(tuple(num), tuple(sorted(factors.items())))


def multiply_by_denominator(coeffs: Sequence[int], factors: Sequence[tuple[int, int]]) -> list[int]:
    """Truncated product of a power series with prod (1 - q^a)^m."""
    out = list(coeffs)
    for a, m in factors:
        for _ in range(m):
            for n in range(len(out) - 1, a - 1, -1):
                out[n] -= out[n - a]
    return out


# ---------------------------------------------------------------------------
# functional equation


def _laurent_mul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def _denominator_laurent(factors, invert: bool) -> dict[int, int]:
    d = {0: 1}
    for a, m in factors:
        f = {0: 1, (-a if invert else a): -1}
        for _ in range(m):
            d = _laurent_mul(d, f)
    return d


def check_functional_equation(f: RationalSeriesForm, n: int, sign: int | None = None) -> bool:
    """Is f(1/q) == sign * q^n * f(q) as rational functions?

    ``sign`` defaults to (-1)^d with d the number of denominator factors,
    the form taken by Gorenstein Hilbert series.  Checked by cross
    multiplication of Laurent polynomials.
    """
    if sign is None:
        sign = -1 if f.krull_dimension % 2 else 1
    num = {k: c for k, c in enumerate(f.numerator) if c}
    num_inv = {-k: c for k, c in num.items()}
    den = _denominator_laurent(f.denominator_factors, invert=False)
    den_inv = _denominator_laurent(f.denominator_factors, invert=True)
    lhs = _laurent_mul(num_inv, den)
    rhs = _laurent_mul({n: sign}, _laurent_mul(num, den_inv))
    return lhs == rhs


def molien_sl2_adjoint_sl3() -> RationalSeriesForm:
    """Closed form of the SU(2) Molien series on the 9-dimensional u(3) module."""
    return RationalSeriesForm((1, 0, 0, 1), ((1, 2), (2, 2), (3, 2)))


def series_divide_by_one_minus_q(coeffs: Sequence[int]) -> list[int]:
    """Partial sums, i.e. the coefficients of f(q)/(1-q)."""
    out, acc = [], 0
    for c in coeffs:
        acc += c
        out.append(acc)
    return out

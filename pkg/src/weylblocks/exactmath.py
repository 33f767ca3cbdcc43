"""Exact rational arithmetic: sparse polynomials, dense matrices, kernels.

Rationals are :class:`fractions.Fraction`.  Monomials are tuples of
non-negative exponents aligned with a polynomial's variable tuple.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from itertools import combinations_with_replacement
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]


class VariableMismatch(ValueError):
    pass


class SingularMatrix(ArithmeticError):
    pass


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def grlex_key(m: Monomial):
    return (sum(m), m)


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomials_of_degree(nvars: int, degree: int) -> list[Monomial]:
    """All exponent vectors of the given total degree, grlex descending."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=grlex_key, reverse=True)
    return out


class Polynomial:
    """Sparse multivariate polynomial with Fraction coefficients.

    Instances are treated as immutable.  ``terms`` maps exponent tuples to
    nonzero coefficients.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Monomial, object] | None = None):
        self.variables = tuple(variables)
        clean: dict[Monomial, Fraction] = {}
        n = len(self.variables)
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != n:
                raise ValueError(f"monomial {m} has wrong length for {n} variables")
            c = as_fraction(c)
            if c:
                clean[m] = clean.get(m, 0) + c
                if not clean[m]:
                    del clean[m]
        self.terms = clean

    @classmethod
    def _raw(cls, variables: tuple[str, ...], terms: dict[Monomial, Fraction]) -> "Polynomial":
        p = object.__new__(cls)
        p.variables = variables
        p.terms = terms
        return p

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, variables: Sequence[str]) -> "Polynomial":
        return cls._raw(tuple(variables), {})

    @classmethod
    def constant(cls, variables: Sequence[str], c) -> "Polynomial":
        variables = tuple(variables)
        c = as_fraction(c)
        return cls._raw(variables, {(0,) * len(variables): c} if c else {})

    @classmethod
    def var(cls, variables: Sequence[str], name: str | int) -> "Polynomial":
        variables = tuple(variables)
        i = variables.index(name) if isinstance(name, str) else name
        e = [0] * len(variables)
        e[i] = 1
        return cls._raw(variables, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, variables: Sequence[str], exps: Monomial, c=1) -> "Polynomial":
        return cls(variables, {tuple(exps): c})

    @classmethod
    def linear(cls, variables: Sequence[str], coeffs: Sequence) -> "Polynomial":
        """Degree-1 form sum(coeffs[k] * variables[k])."""
        variables = tuple(variables)
        n = len(variables)
        terms = {}
        for k, c in enumerate(coeffs):
            c = as_fraction(c)
            if c:
                e = [0] * n
                e[k] = 1
                terms[tuple(e)] = c
        return cls._raw(variables, terms)

    # -- basic protocol -------------------------------------------------
    def _check(self, other: "Polynomial"):
        if self.variables != other.variables:
            raise VariableMismatch(f"variable sets differ: {self.variables} vs {other.variables}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.variables, other)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.variables, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial._raw(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.variables, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = as_fraction(other)
            if not c:
                return Polynomial.zero(self.variables)
            return Polynomial._raw(self.variables, {m: c * v for m, v in self.terms.items()})
        self._check(other)
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = terms.get(m, 0) + c1 * c2
        return Polynomial._raw(self.variables, {m: c for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (1 / as_fraction(c))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- inspection -----------------------------------------------------
    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in graded lexicographic order, largest first."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def leading_coefficient(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        return self.sorted_terms()[0][1]

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def used_variables(self) -> set[int]:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def normalized(self) -> "Polynomial":
        """Divide by the rational content; make the grlex-leading coefficient positive."""
        if not self.terms:
            return self
        nums = [c.numerator for c in self.terms.values()]
        dens = [c.denominator for c in self.terms.values()]
        g = 0
        for x in nums:
            g = gcd(g, x)
        content = Fraction(g, lcm(*dens))
        if self.leading_coefficient() < 0:
            content = -content
        return self / content

    # -- calculus and substitution ---------------------------------------
    def diff(self, var: int | str) -> "Polynomial":
        i = self.variables.index(var) if isinstance(var, str) else var
        terms = {}
        for m, c in self.terms.items():
            if m[i]:
                e = list(m)
                e[i] -= 1
                terms[tuple(e)] = c * m[i]
        return Polynomial._raw(self.variables, terms)

    def substitute(self, images: Mapping[str, "Polynomial"] | Sequence["Polynomial"],
                   target_variables: Sequence[str] | None = None) -> "Polynomial":
        """Ring-homomorphic substitution of every variable by a polynomial.

        ``images`` is either a sequence aligned with ``self.variables`` or a
        mapping from variable names; all images share one variable set.
        """
        if isinstance(images, Mapping):
            missing = [v for v in self.variables if v not in images]
            if missing:
                raise KeyError(f"no image for variable(s) {missing}")
            seq = [images[v] for v in self.variables]
        else:
            seq = list(images)
            if len(seq) != len(self.variables):
                raise KeyError("image count does not match variable count")
        if target_variables is None:
            if not seq:
                raise ValueError("cannot infer target variables")
            target_variables = seq[0].variables
        target_variables = tuple(target_variables)
        for q in seq:
            if q.variables != target_variables:
                raise VariableMismatch("images must share one variable set")
        cache: dict[tuple[int, int], Polynomial] = {}

        def power(i, e):
            key = (i, e)
            if key not in cache:
                cache[key] = seq[i] ** e
            return cache[key]

        result = Polynomial.zero(target_variables)
        one = Polynomial.constant(target_variables, 1)
        for m, c in self.terms.items():
            term = one
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            result = result + term * c
        return result

    def with_variables(self, variables: Sequence[str]) -> "Polynomial":
        """Re-express over a superset (or reordering) of the used variables."""
        variables = tuple(variables)
        pos = {v: k for k, v in enumerate(variables)}
        terms = {}
        for m, c in self.terms.items():
            e = [0] * len(variables)
            for i, x in enumerate(m):
                if x:
                    if self.variables[i] not in pos:
                        raise VariableMismatch(f"variable {self.variables[i]} not in target set")
                    e[pos[self.variables[i]]] = x
            terms[tuple(e)] = c
        return Polynomial._raw(variables, terms)

    # -- printing -------------------------------------------------------
    def _monomial_text(self, m: Monomial, sep="*", power="^", fmt=None) -> str:
        parts = []
        for v, e in zip(self.variables, m):
            if not e:
                continue
            name = fmt(v) if fmt else v
            parts.append(name if e == 1 else f"{name}{power}{e}")
        return sep.join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for k, (m, c) in enumerate(self.sorted_terms()):
            mono = self._monomial_text(m)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if k == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, variables={self.variables})"

    def latex_terms(self) -> list[str]:
        """One signed LaTeX string per term, grlex descending."""
        out = []
        for m, c in self.sorted_terms():
            mono = self._monomial_text(m, sep=" ", power="^", fmt=latex_symbol)
            a = abs(c)
            if a.denominator != 1:
                coef = rf"\tfrac{{{a.numerator}}}{{{a.denominator}}}"
            elif a != 1 or not mono:
                coef = str(a)
            else:
                coef = ""
            body = f"{coef} {mono}".strip() if coef and mono else (coef or mono)
            out.append(("-" if c < 0 else "+") + body)
        return out

    def to_latex(self) -> str:
        terms = self.latex_terms()
        if not terms:
            return "0"
        s = terms[0][1:] if terms[0][0] == "+" else terms[0]
        for t in terms[1:]:
            s += f" {t[0]} {t[1:]}"
        return s


def latex_symbol(name: str) -> str:
    """y1 -> y_{1}, alpha2 -> \\alpha_{2}, C2_1 -> C_{2,1}, h -> h."""
    head = name.rstrip("0123456789_")
    tail = name[len(head):].replace("_", ",")
    if head in ("alpha", "beta", "mu"):
        head = "\\" + head
    return f"{head}_{{{tail}}}" if tail else head


def parse_polynomial(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse an arithmetic expression over ``variables`` (``^`` or ``**`` powers)."""
    variables = tuple(variables)
    tree = ast.parse(text.replace("^", "**"), mode="eval")

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Polynomial.constant(variables, node.value)
        if isinstance(node, ast.Name):
            if node.id not in variables:
                raise ValueError(f"unknown variable {node.id!r}")
            return Polynomial.var(variables, node.id)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                if b.degree() > 0:
                    raise ValueError("division by a non-constant")
                return a / b.coefficient((0,) * len(variables))
            if isinstance(node.op, ast.Pow):
                if b.degree() > 0:
                    raise ValueError("non-constant exponent")
                k = b.coefficient((0,) * len(variables))
                if k.denominator != 1 or k < 0:
                    raise ValueError("exponent must be a non-negative integer")
                return a ** int(k)
        raise ValueError(f"unsupported syntax in polynomial: {ast.dump(node)}")

    return ev(tree)


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    a._check(b)
    return a + b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    a._check(b)
    return a * b


def poly_substitute_linear(p: Polynomial, images: Mapping[str, Polynomial]) -> Polynomial:
    """Substitute each variable by a homogeneous degree-1 polynomial."""
    for v in p.variables:
        if v not in images:
            raise KeyError(f"no image for variable {v!r}")
        q = images[v]
        if q.variables != p.variables:
            raise VariableMismatch("linear images must live over the same variable set")
        if any(sum(m) != 1 for m in q.terms):
            raise ValueError(f"image of {v!r} is not homogeneous of degree 1")
    return p.substitute(images)


# ---------------------------------------------------------------------------
# dense matrices


class RatMatrix:
    """Dense matrix of Fractions; immutable and hashable."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        self.rows = tuple(tuple(as_fraction(x) for x in r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int) -> "RatMatrix":
        return cls([[0] * c for _ in range(r)])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.rows)

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "RatMatrix([" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "])"

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return RatMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "RatMatrix":
        c = as_fraction(c)
        return RatMatrix([[c * x for x in r] for r in self.rows])

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        return mat_mul(self, other)

    def transpose(self) -> "RatMatrix":
        if not self.rows:
            return RatMatrix([[]] * self.ncols, ncols=0)
        return RatMatrix(zip(*self.rows))

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(min(self.shape))), Fraction(0))

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def apply(self, v: Sequence) -> tuple[Fraction, ...]:
        return tuple(sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in self.rows)

    def inverse(self) -> "RatMatrix":
        return mat_inverse(self)

    def rank(self) -> int:
        return len(row_reduce(_sparse_rows(self.rows))[1])


def mat_mul(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    if a.ncols != b.nrows:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    bt = list(zip(*b.rows)) if b.rows else [()] * b.ncols
    out = []
    for r in a.rows:
        nz = [(k, x) for k, x in enumerate(r) if x]
        out.append([sum((x * col[k] for k, x in nz), Fraction(0)) for col in bt])
    return RatMatrix(out, ncols=b.ncols)


def mat_inverse(a: RatMatrix) -> RatMatrix:
    n = a.nrows
    if n != a.ncols:
        raise ValueError(f"cannot invert non-square matrix {a.shape}")
    m = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(a.rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise SingularMatrix("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return RatMatrix([r[n:] for r in m])


# ---------------------------------------------------------------------------
# sparse row reduction, kernels, solving

SparseRow = dict[int, Fraction]


def _sparse_rows(rows: Iterable[Sequence]) -> list[SparseRow]:
    return [{j: as_fraction(x) for j, x in enumerate(r) if x} for r in rows]


def row_reduce(rows: Iterable[SparseRow]) -> tuple[list[SparseRow], list[int]]:
    """Reduced row echelon form of sparse rows.

    Returns ``(reduced, pivots)`` with ``reduced[r]`` having a leading 1 in
    column ``pivots[r]``; pivot columns are cleared in every other row.
    """
    basis: dict[int, SparseRow] = {}
    for row in rows:
        row = {j: x for j, x in row.items() if x}
        for p, prow in basis.items():
            f = row.get(p)
            if f:
                for j, x in prow.items():
                    v = row.get(j, 0) - f * x
                    if v:
                        row[j] = v
                    else:
                        row.pop(j, None)
        if not row:
            continue
        p = min(row)
        inv = 1 / row[p]
        row = {j: x * inv for j, x in row.items()}
        for q, qrow in basis.items():
            f = qrow.get(p)
            if f:
                for j, x in row.items():
                    v = qrow.get(j, 0) - f * x
                    if v:
                        qrow[j] = v
                    else:
                        qrow.pop(j, None)
        basis[p] = row
    pivots = sorted(basis)
    return [basis[p] for p in pivots], pivots


def primitive_integer_vector(v: Sequence) -> tuple[int, ...]:
    """Scale to coprime integers with the first nonzero entry positive."""
    v = [as_fraction(x) for x in v]
    nz = [x for x in v if x]
    if not nz:
        return tuple(0 for _ in v)
    den = lcm(*(x.denominator for x in nz))
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if nz[0] < 0:
        g = -g
    return tuple(x // g for x in ints)


def kernel_from_sparse(rows: Iterable[SparseRow], ncols: int) -> list[tuple[int, ...]]:
    reduced, pivots = row_reduce(rows)
    pivset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for p, row in zip(pivots, reduced):
            x = row.get(f)
            if x:
                v[p] = -x
        out.append(primitive_integer_vector(v))
    return out


def kernel_basis(m: RatMatrix) -> list[tuple[int, ...]]:
    """Right null space of ``m`` as primitive integer vectors."""
    return kernel_from_sparse(_sparse_rows(m.rows), m.ncols)


def solve_linear(columns: Sequence[Mapping], target: Mapping) -> list[Fraction] | None:
    """Find x with sum_j x_j * columns[j] == target (vectors as sparse maps).

    Keys of the mappings index rows.  Returns the particular solution with
    free variables set to zero, or None if inconsistent.
    """
    keys = set(target)
    for c in columns:
        keys.update(c)
    n = len(columns)
    rows = []
    for key in sorted(keys, key=repr):
        row = {j: as_fraction(c[key]) for j, c in enumerate(columns) if c.get(key)}
        t = target.get(key)
        if t:
            row[n] = as_fraction(t)
        if row:
            rows.append(row)
    reduced, pivots = row_reduce(rows)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for p, row in zip(pivots, reduced):
        x[p] = row.get(n, Fraction(0))
    return x


def independent_subset(vectors: Sequence[Mapping], start: Sequence[Mapping] = ()) -> list[int]:
    """Indices of ``vectors`` that increase the rank of span(start + chosen)."""
    basis: dict = {}

    def reduce(v):
        v = {k: as_fraction(x) for k, x in v.items() if x}
        changed = True
        while v and changed:
            changed = False
            for p in list(v):
                if p in basis and v.get(p):
                    f = v[p]
                    for k, x in basis[p].items():
                        y = v.get(k, 0) - f * x
                        if y:
                            v[k] = y
                        else:
                            v.pop(k, None)
                    changed = True
        return v

    def insert(v):
        v = reduce(v)
        if not v:
            return False
        p = min(v, key=repr)
        inv = 1 / v[p]
        v = {k: x * inv for k, x in v.items()}
        for q, row in basis.items():
            f = row.get(p)
            if f:
                for k, x in v.items():
                    y = row.get(k, 0) - f * x
                    if y:
                        row[k] = y
                    else:
                        row.pop(k, None)
        basis[p] = v
        return True

    for v in start:
        insert(v)
    return [i for i, v in enumerate(vectors) if insert(v)]

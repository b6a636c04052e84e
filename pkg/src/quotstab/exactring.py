"""Exact arithmetic in the Lefschetz class L.

Three value types live here:

* ``LPolynomial`` -- an element of Z[L], dense coefficient tuple.
* ``TruncatedLSeries`` -- an element of Z[[L]] known modulo L^N.
* ``MultiTruncatedSeries`` -- a series in t_1..t_l whose coefficients are
  truncated L-series, itself truncated in total t-degree.

All three are immutable. Coefficients are Python ints, so nothing overflows.
The same types are reused for Poincare polynomials, with the variable read
as z (see ``render(var=...)``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import islice, zip_longest
from typing import Iterable, Mapping, Sequence

DEFAULT_ORDER = 32
DEFAULT_TDEG = 12


class InexactDivision(ArithmeticError):
    pass


class NotInvertible(ArithmeticError):
    pass


class VariableCountMismatch(ValueError):
    pass


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _render_terms(coeffs: Sequence[int], var: str) -> list[tuple[int, str]]:
    # (sign, body) pairs for the nonzero terms, increasing degree
    out = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        out.append((1 if c > 0 else -1, body))
    return out


def _join_terms(terms: list[tuple[int, str]]) -> str:
    if not terms:
        return "0"
    sign, body = terms[0]
    s = body if sign > 0 else f"-{body}"
    for sign, body in terms[1:]:
        s += (" + " if sign > 0 else " - ") + body
    return s


def _mul_dense(a: Sequence[int], b: Sequence[int], cap: int | None = None) -> list[int]:
    if not a or not b:
        return []
    size = len(a) + len(b) - 1
    if cap is not None:
        size = min(size, cap)
    out = [0] * size
    for i, x in enumerate(a):
        if x == 0 or i >= size:
            continue
        for j, y in enumerate(b):
            if i + j >= size:
                break
            out[i + j] += x * y
    return out


@dataclass(frozen=True)
class LPolynomial:
    """Integer polynomial in L; ``coeffs[k]`` is the coefficient of L^k."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "LPolynomial":
        if k < 0:
            raise ValueError(f"negative exponent {k}")
        return cls((0,) * k + (c,))

    @classmethod
    def constant(cls, c: int) -> "LPolynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    # ring operations

    def _coerce(self, other):
        if isinstance(other, LPolynomial):
            return other
        if isinstance(other, int):
            return LPolynomial((other,))
        return None

    def __add__(self, other):
        if isinstance(other, TruncatedLSeries):
            return other + self
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return LPolynomial(x + y for x, y in zip_longest(self.coeffs, o.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return LPolynomial(-x for x in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, TruncatedLSeries):
            return -other + self
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedLSeries):
            return other * self
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return LPolynomial(_mul_dense(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = LPolynomial((1,))
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift(self, k: int) -> "LPolynomial":
        """Multiply by L^k."""
        if k < 0:
            raise ValueError(f"negative shift {k}")
        if self.is_zero():
            return self
        return LPolynomial((0,) * k + self.coeffs)

    def divmod(self, other: "LPolynomial") -> tuple["LPolynomial", "LPolynomial"]:
        """Division with remainder over Z; the divisor must be monic up to sign."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead = other.coeffs[-1]
        if lead not in (1, -1):
            raise NotInvertible(f"leading coefficient {lead} is not a unit")
        rem = list(self.coeffs)
        db = other.degree
        quot = [0] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k] * lead
            if c == 0:
                continue
            quot[k - db] = c
            for j, y in enumerate(other.coeffs):
                rem[k - db + j] -= c * y
        return LPolynomial(quot), LPolynomial(rem)

    def divide_exact(self, other: "LPolynomial") -> "LPolynomial":
        q, rem = self.divmod(other)
        if not rem.is_zero():
            raise InexactDivision(f"({self}) / ({other}) leaves remainder {rem}")
        return q

    def divisible_by_power(self, k: int) -> bool:
        """True iff L^k divides self, i.e. coefficients of L^0..L^{k-1} vanish."""
        return all(self[i] == 0 for i in range(k))

    def eval(self, v: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def substitute(self, image_degree: int) -> "LPolynomial":
        """Send L to w^image_degree; the result is read as a polynomial in w."""
        if image_degree < 1:
            raise ValueError("image_degree must be positive")
        if self.is_zero():
            return self
        out = [0] * (self.degree * image_degree + 1)
        for k, c in enumerate(self.coeffs):
            out[k * image_degree] = c
        return LPolynomial(out)

    def truncate(self, order: int) -> "TruncatedLSeries":
        return TruncatedLSeries(order, self.coeffs)

    # rendering

    def render(self, var: str = "L") -> str:
        return _join_terms(_render_terms(self.coeffs, var))

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs), "order": None}

    def __str__(self):
        return self.render()


ZERO = LPolynomial()
ONE = LPolynomial((1,))
L = LPolynomial((0, 1))


@dataclass(frozen=True)
class TruncatedLSeries:
    """Element of Z[[L]] modulo L^order.

    ``coeffs`` always has exactly ``order`` entries. Mixing two series keeps
    the smaller order.
    """

    order: int
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        c = [int(x) for x in islice(self.coeffs, self.order)]
        c.extend([0] * (self.order - len(c)))
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def one(cls, order: int) -> "TruncatedLSeries":
        return cls(order, (1,))

    def __getitem__(self, k: int) -> int:
        if k >= self.order:
            raise IndexError(f"coefficient of L^{k} unknown at order {self.order}")
        return self.coeffs[k] if k >= 0 else 0

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _lift(self, other):
        if isinstance(other, TruncatedLSeries):
            return other
        if isinstance(other, LPolynomial):
            return TruncatedLSeries(self.order, other.coeffs)
        if isinstance(other, int):
            return TruncatedLSeries(self.order, (other,))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return TruncatedLSeries(n, (self.coeffs[k] + o.coeffs[k] for k in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedLSeries(self.order, (-x for x in self.coeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return TruncatedLSeries(n, _mul_dense(self.coeffs[:n], o.coeffs[:n], cap=n))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, TruncatedLSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (LPolynomial, int)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def shift(self, k: int) -> "TruncatedLSeries":
        if k < 0:
            raise ValueError(f"negative shift {k}")
        return TruncatedLSeries(self.order, (0,) * k + self.coeffs)

    def truncate(self, order: int) -> "TruncatedLSeries":
        return TruncatedLSeries(min(order, self.order), self.coeffs)

    def congruent(self, other, order: int | None = None) -> bool:
        """Agreement modulo L^order (default: the common known order)."""
        o = self._lift(other)
        n = min(self.order, o.order)
        if order is not None:
            if order > n:
                raise ValueError(f"cannot compare modulo L^{order} at known order {n}")
            n = order
        return self.coeffs[:n] == o.coeffs[:n]

    def substitute(self, image_degree: int) -> "TruncatedLSeries":
        """Send L to w^image_degree; order N becomes order N*image_degree."""
        if image_degree < 1:
            raise ValueError("image_degree must be positive")
        out = [0] * (self.order * image_degree)
        for k, c in enumerate(self.coeffs):
            out[k * image_degree] = c
        return TruncatedLSeries(self.order * image_degree, out)

    def polynomial(self) -> LPolynomial:
        """The canonical representative of degree < order."""
        return LPolynomial(self.coeffs)

    def render(self, var: str = "L") -> str:
        terms = _render_terms(self.coeffs, var)
        return f"{_join_terms(terms)} + O({var}^{self.order})"

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs), "order": self.order}

    def __str__(self):
        return self.render()


def geometric_inverse(c: LPolynomial, order: int) -> TruncatedLSeries:
    """Inverse of ``c`` in Z[[L]] modulo L^order; needs constant term +-1."""
    c0 = c[0]
    if c0 not in (1, -1):
        raise NotInvertible(f"constant term {c0} of {c} is not a unit of Z")
    out = [0] * order
    for k in range(order):
        acc = 1 if k == 0 else 0
        for j in range(1, min(k, c.degree) + 1):
            acc -= c[j] * out[k - j]
        out[k] = acc * c0
    return TruncatedLSeries(order, out)


def lpoly_arith(a: LPolynomial, b: LPolynomial, op: str) -> LPolynomial:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


Exponent = tuple[int, ...]


@dataclass(frozen=True)
class MultiTruncatedSeries:
    """Sparse series in t_1..t_l over Z[[L]]/L^order, exact in total t-degree < bound."""

    num_vars: int
    bound: int
    order: int
    terms: Mapping[Exponent, TruncatedLSeries] = field(default_factory=dict)

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("need at least one variable")
        clean = {}
        for e, c in self.terms.items():
            e = tuple(int(x) for x in e)
            if len(e) != self.num_vars:
                raise VariableCountMismatch(f"exponent {e} has wrong length for {self.num_vars} variables")
            if sum(e) >= self.bound:
                continue
            if not isinstance(c, TruncatedLSeries):
                c = TruncatedLSeries(self.order, ONE._coerce(c).coeffs)
            c = c.truncate(self.order)
            if c.order < self.order:
                raise ValueError(f"coefficient at {e} known only to order {c.order}")
            if not c.is_zero():
                clean[e] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    @classmethod
    def one(cls, num_vars: int, bound: int, order: int) -> "MultiTruncatedSeries":
        return cls(num_vars, bound, order, {(0,) * num_vars: TruncatedLSeries.one(order)})

    def coefficient(self, exps: Sequence[int]) -> TruncatedLSeries:
        exps = tuple(exps)
        if len(exps) != self.num_vars:
            raise VariableCountMismatch(f"{len(exps)} exponents for {self.num_vars} variables")
        if sum(exps) >= self.bound:
            raise IndexError(f"total degree {sum(exps)} beyond bound {self.bound}")
        return self.terms.get(exps, TruncatedLSeries(self.order))

    def _check(self, other: "MultiTruncatedSeries"):
        if self.num_vars != other.num_vars:
            raise VariableCountMismatch(f"{self.num_vars} vs {other.num_vars} variables")

    def __add__(self, other: "MultiTruncatedSeries") -> "MultiTruncatedSeries":
        self._check(other)
        bound = min(self.bound, other.bound)
        order = min(self.order, other.order)
        out: dict[Exponent, TruncatedLSeries] = {}
        for src in (self.terms, other.terms):
            for e, c in src.items():
                c = c.truncate(order)
                out[e] = out[e] + c if e in out else c
        return MultiTruncatedSeries(self.num_vars, bound, order, out)

    def __neg__(self):
        return MultiTruncatedSeries(self.num_vars, self.bound, self.order, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "MultiTruncatedSeries") -> "MultiTruncatedSeries":
        self._check(other)
        bound = min(self.bound, other.bound)
        order = min(self.order, other.order)
        out: dict[Exponent, TruncatedLSeries] = {}
        for e1, c1 in self.terms.items():
            s1 = sum(e1)
            for e2, c2 in other.terms.items():
                if s1 + sum(e2) >= bound:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1.truncate(order) * c2.truncate(order)
                out[e] = out[e] + p if e in out else p
        return MultiTruncatedSeries(self.num_vars, bound, order, out)

    def __eq__(self, other):
        if not isinstance(other, MultiTruncatedSeries):
            return NotImplemented
        return (self.num_vars, self.bound, self.order, self.terms) == (
            other.num_vars, other.bound, other.order, other.terms)

    def __hash__(self):
        return hash((self.num_vars, self.bound, self.order, tuple(self.terms.items())))

    def render(self, var: str = "L") -> str:
        if not self.terms:
            return f"0 + O(t^{self.bound})"
        parts = []
        for e, c in self.terms.items():
            mono = "*".join(
                f"t{i + 1}" if k == 1 else f"t{i + 1}^{k}"
                for i, k in enumerate(e) if k
            )
            body = _join_terms(_render_terms(c.coeffs, var))
            parts.append(f"({body})*{mono}" if mono else f"({body})")
        return " + ".join(parts) + f" + O(t^{self.bound}, {var}^{self.order})"

    def to_json(self) -> dict:
        return {
            "num_vars": self.num_vars,
            "tdeg": self.bound,
            "order": self.order,
            "terms": [{"exponent": list(e), "coeffs": list(c.coeffs)} for e, c in self.terms.items()],
        }

    def __str__(self):
        return self.render()


def geometric_factor(num_vars: int, exps: Sequence[int], lpower: int, bound: int, order: int) -> MultiTruncatedSeries:
    """The series 1/(1 - L^lpower * t^exps), cut at total degree < bound and L^order."""
    exps = tuple(exps)
    step = sum(exps)
    if step == 0:
        raise NotInvertible("geometric factor needs a monomial of positive t-degree")
    terms = {}
    m = 0
    while m * step < bound and m * lpower < order:
        terms[tuple(m * x for x in exps)] = TruncatedLSeries(order, (0,) * (m * lpower) + (1,))
        m += 1
    return MultiTruncatedSeries(num_vars, bound, order, terms)

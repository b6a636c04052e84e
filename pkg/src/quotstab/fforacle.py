"""Brute-force point counts over small prime fields.

The oracle never looks at a motive formula when counting. Points of a
punctual Quot scheme over F_q are codimension-d subspaces K of the ambient
(R/m^k)^r, R = F_q[x_1..x_n], stable under multiplication by every x_a.
Subspaces are always stored in reduced row echelon form, which is the
canonical representative, so equality of subspaces is equality of tuples.

Two enumeration strategies are available:

``descent``
    Every codim-c submodule K sits as a hyperplane in a codim-(c-1)
    submodule K' with m*K' contained in K, so the children of K' are the
    hyperplanes of K' containing m*K'. Children are deduplicated by their
    echelon form.
``echelon``
    Walk every echelon pattern of the right codimension containing m^c M
    and keep the stable ones. Exponentially slower; kept as a cross-check.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Sequence

from . import _hooks
from .motives import FlagDimensions
from .quotmotives import (
    HilbertSamuelFunction,
    enumerate_linear_hs,
    lquot_motive,
    nonlinear_divisibility_exponent,
    stratum_motive,
)
from .report import CongruenceViolation, OracleMismatch, Report

SUPPORTED_PRIMES = (2, 3, 5)
MAX_CANDIDATES = 10**8        # echelon fill-ins walked by subspace counters
MAX_ECHELON_CANDIDATES = 10**7
MAX_AMBIENT_DIM = 20
MAX_SUBMODULES = 10**6        # submodules visited by the descent enumerator

Vector = tuple[int, ...]
Echelon = tuple[Vector, ...]


class InfeasibleSize(RuntimeError):
    pass


@dataclass(frozen=True)
class PrimeField:
    q: int

    def __post_init__(self):
        if self.q not in SUPPORTED_PRIMES:
            raise ValueError(f"q = {self.q} is not one of the supported primes {SUPPORTED_PRIMES}")

    def inv(self, x: int) -> int:
        return pow(x, -1, self.q)


def _field(q: int) -> PrimeField:
    return PrimeField(q)


# linear algebra over F_p


def rref(rows: Sequence[Sequence[int]], p: int) -> Echelon:
    """Reduced row echelon form of the row span, zero rows dropped."""
    m = [[x % p for x in r] for r in rows]
    if not m:
        return ()
    ncols = len(m[0])
    top = 0
    for col in range(ncols):
        piv = next((i for i in range(top, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[top], m[piv] = m[piv], m[top]
        inv = pow(m[top][col], -1, p)
        m[top] = [(x * inv) % p for x in m[top]]
        for i in range(len(m)):
            if i != top and m[i][col]:
                f = m[i][col]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[top])]
        top += 1
        if top == len(m):
            break
    return tuple(tuple(r) for r in m[:top])


def _pivots(ech: Echelon) -> list[int]:
    return [next(j for j, x in enumerate(r) if x) for r in ech]


def _reduce(v: Sequence[int], ech: Echelon, pivots: Sequence[int], p: int) -> list[int]:
    w = [x % p for x in v]
    for row, c in zip(ech, pivots):
        f = w[c]
        if f:
            w = [(a - f * b) % p for a, b in zip(w, row)]
    return w


def in_span(v: Sequence[int], ech: Echelon, p: int, pivots: Sequence[int] | None = None) -> bool:
    if pivots is None:
        pivots = _pivots(ech)
    return not any(_reduce(v, ech, pivots, p))


def is_subspace(small: Echelon, big: Echelon, p: int) -> bool:
    piv = _pivots(big)
    return all(in_span(v, big, p, piv) for v in small)


def _echelon_patterns(d: int, n: int):
    # (pivot columns, free (row, col) slots) for each d x n reduced echelon shape
    for pivots in combinations(range(n), d):
        pset = set(pivots)
        free = [(i, j) for i, c in enumerate(pivots) for j in range(c + 1, n) if j not in pset]
        yield pivots, free


def count_echelon_candidates(d: int, n: int, q: int) -> int:
    """How many matrices ``iter_subspaces`` would produce, from pattern sizes alone."""
    if d < 0 or d > n:
        return 0
    return sum(q ** len(free) for _, free in _echelon_patterns(d, n))


def iter_subspaces(d: int, n: int, q: int) -> Iterator[Echelon]:
    """Every d-dimensional subspace of F_q^n, once, as its echelon form."""
    if d < 0 or d > n:
        return
    for pivots, free in _echelon_patterns(d, n):
        for fill in product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(d)]
            for i, c in enumerate(pivots):
                rows[i][c] = 1
            for (i, j), x in zip(free, fill):
                rows[i][j] = x
            yield tuple(tuple(r) for r in rows)


def count_grassmannian_points(d: int, n: int, q: int, limit: int = MAX_CANDIDATES) -> int:
    _field(q)
    size = count_echelon_candidates(d, n, q)
    if size > limit:
        raise InfeasibleSize(f"Gr({d},{n})(F_{q}) has {size} candidates, limit {limit}")
    return sum(1 for _ in iter_subspaces(d, n, q))


def _extensions(base: Echelon, m: int, n: int, q: int) -> Iterator[Echelon]:
    """Subspaces W containing ``base`` with dim W/base = m.

    W/base is identified with a subspace of F_q^{n - dim base} through the
    non-pivot coordinates; lifting puts zeros in the pivot columns.
    """
    piv = set(_pivots(base))
    rest = [j for j in range(n) if j not in piv]
    for sub in iter_subspaces(m, len(rest), q):
        lifted = []
        for u in sub:
            v = [0] * n
            for j, x in zip(rest, u):
                v[j] = x
            lifted.append(v)
        yield rref(list(base) + lifted, q)


def iter_flags(dims: Sequence[int], n: int, q: int) -> Iterator[tuple[Echelon, ...]]:
    f = FlagDimensions(tuple(dims), n)

    def grow(chain, prev_dim, rest):
        if not rest:
            yield tuple(chain)
            return
        base = chain[-1] if chain else ()
        for w in _extensions(base, rest[0] - prev_dim, n, q):
            yield from grow(chain + [w], rest[0], rest[1:])

    yield from grow([], 0, list(f.dims))


def count_flag_points(dims: Sequence[int], n: int, q: int, limit: int = MAX_CANDIDATES) -> int:
    _field(q)
    f = FlagDimensions(tuple(dims), n)
    size = 1
    for d_prev, d_next in zip((0,) + f.dims, f.dims):
        size *= count_echelon_candidates(d_next - d_prev, n - d_prev, q)
    if size > limit:
        raise InfeasibleSize(f"Fl{f.dims}(F_{q}^{n}) has {size} candidates, limit {limit}")
    return sum(1 for _ in iter_flags(f.dims, n, q))


# the ambient module (R/m^k)^r


def _monomials(n: int, k: int) -> list[tuple[int, ...]]:
    mons = []
    for deg in range(k):
        layer = [e for e in product(range(deg + 1), repeat=n) if sum(e) == deg]
        layer.sort(reverse=True)  # x_1 before x_2 before ...
        mons.extend(layer)
    return mons


@dataclass(frozen=True)
class FiniteModulePresentation:
    """(R/m^k)^r over F_q with its monomial basis and the n multiplication maps.

    The basis is ordered by total degree, then lexicographically (x_1 > x_2 >
    ...), then by summand. ``degree_starts[i]`` is the index of the first
    basis vector of degree >= i, so m^i M is spanned by the tail from there.
    ``targets[a][j]`` is the basis index of x_a * e_j, or -1 when it vanishes.
    """

    n: int
    r: int
    k: int
    q: int
    basis: tuple[tuple[int, tuple[int, ...]], ...]
    targets: tuple[tuple[int, ...], ...]
    degree_starts: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def apply(self, a: int, v: Sequence[int]) -> Vector:
        w = [0] * self.dimension
        for j, x in enumerate(v):
            t = self.targets[a][j]
            if x and t >= 0:
                w[t] = (w[t] + x) % self.q
        return tuple(w)

    def matrix(self, a: int) -> tuple[tuple[int, ...], ...]:
        """Matrix of x_a acting on column vectors."""
        D = self.dimension
        m = [[0] * D for _ in range(D)]
        for j, t in enumerate(self.targets[a]):
            if t >= 0:
                m[t][j] = 1
        return tuple(tuple(r) for r in m)

    def filtration_start(self, i: int) -> int:
        return self.degree_starts[min(i, self.k)]

    def is_stable(self, ech: Echelon) -> bool:
        piv = _pivots(ech)
        return all(in_span(self.apply(a, v), ech, self.q, piv) for v in ech for a in range(self.n))


def build_ambient(n: int, r: int, k: int, q: int) -> FiniteModulePresentation:
    _field(q)
    if n < 1 or r < 1 or k < 0:
        raise ValueError(f"bad ambient parameters n={n}, r={r}, k={k}")
    D = r * math.comb(n + k - 1, n)
    if D > MAX_AMBIENT_DIM:
        raise InfeasibleSize(f"ambient (R/m^{k})^{r} in {n} variables has dimension {D} > {MAX_AMBIENT_DIM}")
    mons = _monomials(n, k)
    basis = tuple((c, e) for e in mons for c in range(r))
    index = {b: j for j, b in enumerate(basis)}
    targets = []
    for a in range(n):
        row = []
        for c, e in basis:
            up = tuple(x + (i == a) for i, x in enumerate(e))
            row.append(index.get((c, up), -1))
        targets.append(tuple(row))
    starts = []
    for i in range(k + 1):
        starts.append(next((j for j, (_, e) in enumerate(basis) if sum(e) >= i), D))
    return FiniteModulePresentation(n, r, k, q, basis, tuple(targets), tuple(starts))


@dataclass(frozen=True)
class SubmoduleWitness:
    basis: Echelon
    codim: int


def _projective_points(s: int, q: int) -> Iterator[tuple[int, ...]]:
    # nonzero vectors in F_q^s with first nonzero entry 1
    for lead in range(s):
        for tail in product(range(q), repeat=s - lead - 1):
            yield (0,) * lead + (1,) + tail


def _children(M: FiniteModulePresentation, K: Echelon) -> set[Echelon]:
    p = M.q
    mK = rref([M.apply(a, v) for v in K for a in range(M.n)], p)
    # complete mK to a basis of K
    span, comp = mK, []
    for v in K:
        if not in_span(v, span, p):
            comp.append(v)
            span = rref(list(span) + [v], p)
    out = set()
    for phi in _projective_points(len(comp), p):
        j0 = phi.index(1)
        kernel = [
            tuple((x - f * y) % p for x, y in zip(comp[j], comp[j0]))
            for j, f in enumerate(phi) if j != j0
        ]
        out.add(rref(list(mK) + kernel, p))
    return out


def submodule_levels(M: FiniteModulePresentation, max_codim: int,
                     limit: int = MAX_SUBMODULES) -> list[list[Echelon]]:
    """All stable subspaces of codimension 0..max_codim, each level sorted."""
    D = M.dimension
    whole = tuple(tuple(int(i == j) for j in range(D)) for i in range(D))
    levels = [[whole]]
    seen = 1
    for _ in range(max_codim):
        nxt: set[Echelon] = set()
        for K in levels[-1]:
            nxt |= _children(M, K)
            if seen + len(nxt) > limit:
                raise InfeasibleSize(f"more than {limit} submodules in a {D}-dimensional ambient")
        seen += len(nxt)
        levels.append(sorted(nxt))
    return levels


def _enumerate_by_echelon(M: FiniteModulePresentation, codim: int, limit: int) -> list[Echelon]:
    # a codim-c submodule contains m^c M, which is a coordinate tail
    D = M.dimension
    head = M.filtration_start(codim)
    tail = [tuple(int(i == j) for j in range(D)) for i in range(head, D)]
    dim_head = head - codim
    size = count_echelon_candidates(dim_head, head, M.q)
    if size > limit:
        raise InfeasibleSize(f"{size} echelon candidates, limit {limit}")
    out = []
    for sub in iter_subspaces(dim_head, head, M.q):
        rows = [tuple(v) + (0,) * (D - head) for v in sub] + tail
        K = rref(rows, M.q)
        if M.is_stable(K):
            out.append(K)
    return sorted(out)


def enumerate_submodules(M: FiniteModulePresentation, codim: int, method: str = "descent",
                         limit: int | None = None) -> list[SubmoduleWitness]:
    """Every operator-stable subspace of codimension ``codim``, in canonical order."""
    if codim < 0 or codim > M.dimension:
        return []
    if method == "descent":
        found = submodule_levels(M, codim, limit or MAX_SUBMODULES)[codim]
    elif method == "echelon":
        found = _enumerate_by_echelon(M, codim, limit or MAX_ECHELON_CANDIDATES)
    else:
        raise ValueError(f"unknown method {method!r}")
    return [SubmoduleWitness(K, codim) for K in found]


def hs_function_of(w: SubmoduleWitness | Echelon, M: FiniteModulePresentation) -> HilbertSamuelFunction:
    """Hilbert-Samuel function of T = M/K: h(i) = dim m^i T - dim m^{i+1} T."""
    K = w.basis if isinstance(w, SubmoduleWitness) else w
    # dim (K + m^i M)/K = dim M/K - dim M/(K + m^i M); the latter is the
    # codimension of K's projection onto the head coordinates
    D = M.dimension
    quotient_dim = D - len(K)
    dims = []
    for i in range(M.k + 1):
        head = M.filtration_start(i)
        proj = rref([v[:head] for v in K], M.q) if head else ()
        dims.append(quotient_dim - (head - len(proj)))
    return HilbertSamuelFunction(tuple(a - b for a, b in zip(dims, dims[1:])))


def count_punctual_quot(d: int, r: int, n: int, q: int, method: str = "descent") -> int:
    if d == 0:
        return 1
    M = build_ambient(n, r, d, q)
    return len(enumerate_submodules(M, d, method))


def stratum_counts(d: int, r: int, n: int, q: int, k: int | None = None) -> Counter:
    """Counter from HS function to number of F_q-points, over the ambient truncated at m^k (default k = d)."""
    M = build_ambient(n, r, d if k is None else k, q)
    return Counter(hs_function_of(w, M) for w in enumerate_submodules(M, d))


def count_stratum(h: HilbertSamuelFunction | Sequence[int], r: int, n: int, q: int) -> int:
    if not isinstance(h, HilbertSamuelFunction):
        h = HilbertSamuelFunction(tuple(h))
    if h.size == 0:
        return 1
    return stratum_counts(h.size, r, n, q, k=h.length + 1)[h]


def verify_stratum_motives(d: int, r: int, n: int, q: int, strict: bool = True) -> Report:
    """Oracle checks of the stratification of Quot^d(O^r, A^n)_0 over F_q.

    Linear strata must match their motives exactly, nonlinear strata must be
    divisible by the expected power of q, counts in the small ambient
    m^{l(h)+1} must match the big one, and the total must satisfy the
    congruence with the linear locus.
    """
    rep = Report("HS stratification of Quot^d(O^r, A^n)_0 over F_q", {"d": d, "r": r, "n": n, "q": q})
    counts = stratum_counts(d, r, n, q)
    linear = set(enumerate_linear_hs(d, r, n)) | {h for h in counts if h.is_linear}
    for h in sorted(linear, key=lambda h: h.values):
        got = _hooks.point("strata", counts.get(h, 0))
        want = stratum_motive(h, r, n).eval(q)
        rep.record(got == want, check="linear stratum", h=str(h), count=got, motive=want)
    for h in sorted((h for h in counts if not h.is_linear), key=lambda h: h.values):
        e = nonlinear_divisibility_exponent(h, r, n)
        got = counts[h]
        rep.record(got % q**e == 0, check="nonlinear divisibility", h=str(h), count=got, power=f"{q}^{e}")
    for h in sorted(counts, key=lambda h: h.values):
        small = count_stratum(h, r, n, q)
        rep.record(small == counts[h], check="truncation independence", h=str(h),
                   count=counts[h], count_small_ambient=small)
    total = count_punctual_quot(d, r, n, q)
    rep.record(sum(counts.values()) == total, check="partition", total=total,
               strata_sum=sum(counts.values()))
    _congruence_record(rep, d, r, n, q, total)
    if strict:
        rep.raise_if_failed(OracleMismatch)
    return rep


def _congruence_record(rep: Report, d, r, n, q, total):
    k = max(n + r - d + 1, 0)
    total = _hooks.point("congruence", total)
    lin = lquot_motive(d, r, n).eval(q)
    rep.record((total - lin) % q**k == 0, check="global congruence", count=total,
               lquot=lin, modulus=f"{q}^{k}")


def verify_global_congruence(d: int, r: int, n: int, q: int, strict: bool = True) -> Report:
    """#Quot^d(O^r, A^n)_0(F_q) = #LQuot(F_q) mod q^{n+r-d+1}."""
    rep = Report("#Quot_0(F_q) - #LQuot(F_q) = 0 mod q^(n+r-d+1)", {"d": d, "r": r, "n": n, "q": q})
    _congruence_record(rep, d, r, n, q, count_punctual_quot(d, r, n, q))
    if strict:
        rep.raise_if_failed(CongruenceViolation)
    return rep


def count_punctual_nested(dims: Sequence[int], n: int, q: int) -> int:
    """Chains of ideals I_l <= ... <= I_1 at the origin with colength(I_i) = d_i + 1."""
    f = FlagDimensions(tuple(dims))
    M = build_ambient(n, 1, f.dims[-1] + 1, q)
    levels = submodule_levels(M, f.dims[-1] + 1)
    ways = {K: 1 for K in levels[f.dims[0] + 1]}
    for c in f.dims[1:]:
        ways = {
            K: sum(w for K_up, w in ways.items() if is_subspace(K, K_up, q))
            for K in levels[c + 1]
        }
    return sum(ways.values())

"""Independent oracles: brute-force enumeration and rigorous quadrature.

The enumerators walk the actual objects (permutations, simple paths,
cycles) and are deliberately capped at sizes where exhaustive search is
cheap; they exist to audit the closed-form counts on small instances.

`quad_gamma` encloses the incomplete-gamma integral

    integral over [z, inf) of e^(-t) * t^n dt

without trusting any library error estimate.  The range is cut at an
integer U whose analytic tail bound

    integral over [U, inf) <= U^n * e^(-U) / (1 - n/U)      (U > n)

is below tol/2, and [z, U] is covered by panels of width <= 1.  On a
panel with midpoint m the factor e^-(t-m) is replaced by its Taylor
polynomial of order K; the truncation error is bounded by the same
geometric-tail estimate used everywhere in this package, and what
remains is a polynomial whose moment integrals are exact rationals.
Each panel therefore yields a certified interval, and panel budgets are
chosen so the total width (panels plus tail) stays below tol.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import ceil, comb, floor

from .certified import IntervalReal, ceil_log2, enclose_e, enclose_e_inv
from .errors import DomainError, PrecisionCapError
from .exact import factorial

__all__ = [
    "EnumerationResult",
    "QuadratureResult",
    "MAX_BRUTE_DERANGEMENTS",
    "MAX_BRUTE_PATHS",
    "MAX_BRUTE_CYCLES",
    "brute_derangements",
    "brute_paths",
    "brute_cycles",
    "quad_gamma",
]

_Q = Fraction

MAX_BRUTE_DERANGEMENTS = 10
MAX_BRUTE_PATHS = 10
MAX_BRUTE_CYCLES = 8

# quad_gamma gives up after this many panel-enclosure computations
_EVAL_BUDGET = 50_000


@dataclass(frozen=True)
class EnumerationResult:
    """Count of enumerated objects and their total edge length."""

    count: int
    total_length: int


@dataclass(frozen=True)
class QuadratureResult:
    """Certified integral enclosure.

    evaluations counts panel-enclosure computations (including retries
    after subdivision); tail_bound dominates the discarded integral
    over [U, inf).
    """

    value: IntervalReal
    evaluations: int
    tail_bound: Fraction


def brute_derangements(n: int) -> int:
    """Count fixed-point-free permutations of range(n) by enumeration."""
    if not 0 <= n <= MAX_BRUTE_DERANGEMENTS:
        raise DomainError(
            f"brute_derangements requires 0 <= n <= {MAX_BRUTE_DERANGEMENTS} (got {n})"
        )
    return sum(1 for p in permutations(range(n)) if all(p[i] != i for i in range(n)))


def brute_paths(n: int, pair: tuple[int, int] = (0, 1)) -> EnumerationResult:
    """Enumerate simple paths between two fixed vertices of K_n.

    Each path is counted once (its endpoints are ordered by the pair),
    and total_length accumulates edge counts.
    """
    if not 3 <= n <= MAX_BRUTE_PATHS:
        raise DomainError(f"brute_paths requires 3 <= n <= {MAX_BRUTE_PATHS} (got {n})")
    u, v = pair
    if not (0 <= u < n and 0 <= v < n and u != v):
        raise DomainError(f"pair must name two distinct vertices of K_{n} (got {pair})")
    count = 0
    total = 0
    visited = [False] * n
    visited[u] = True

    def walk(cur: int, edges: int) -> None:
        nonlocal count, total
        for w in range(n):
            if w == v:
                count += 1
                total += edges + 1
            elif not visited[w]:
                visited[w] = True
                walk(w, edges + 1)
                visited[w] = False

    walk(u, 0)
    return EnumerationResult(count, total)


def brute_cycles(n: int, root: int = 0) -> EnumerationResult:
    """Enumerate cycles through a fixed vertex of K_n.

    A cycle is an ordered vertex sequence root, v_1, ..., v_{k-1}, root
    with distinct intermediate vertices and k >= 3 edges; the two
    orientations of an undirected cycle are counted separately.
    """
    if not 3 <= n <= MAX_BRUTE_CYCLES:
        raise DomainError(f"brute_cycles requires 3 <= n <= {MAX_BRUTE_CYCLES} (got {n})")
    if not 0 <= root < n:
        raise DomainError(f"root must be a vertex of K_{n} (got {root})")
    count = 0
    total = 0
    visited = [False] * n
    visited[root] = True

    def walk(cur: int, edges: int) -> None:
        nonlocal count, total
        for w in range(n):
            if w == root:
                if edges >= 2:
                    count += 1
                    total += edges + 1
            elif not visited[w]:
                visited[w] = True
                walk(w, edges + 1)
                visited[w] = False

    walk(root, 0)
    return EnumerationResult(count, total)


# --- rigorous quadrature ----------------------------------------------


def _exp_taylor01(r: Fraction, bits: int) -> IntervalReal:
    """Enclosure of e^r for 0 <= r < 1, width <= 2^-bits."""
    if r == 0:
        return IntervalReal.point(1)
    target = _Q(1, 1 << bits)
    k = 4
    while True:
        rem = r ** (k + 1) / (factorial(k + 1) * (1 - r / (k + 2)))
        if rem <= target:
            break
        k += 2
    s = sum(r**j / factorial(j) for j in range(k + 1))
    return IntervalReal(s, s + rem)


def _exp_iv(x: Fraction, bits: int) -> IntervalReal:
    """Enclosure of e^x for arbitrary rational x.

    Splits x = q + r with integer q and r in [0, 1); e^q is a power of
    the cached e or 1/e enclosure, e^r comes from the Taylor bracket.
    """
    q = floor(x)
    r = x - q
    comp_bits = bits + abs(q).bit_length() + 4
    if q == 0:
        base = IntervalReal.point(1)
    elif q > 0:
        base = enclose_e(comp_bits).power(q)
    else:
        base = enclose_e_inv(comp_bits).power(-q)
    return base * _exp_taylor01(r, comp_bits)


def _abs_moment(n: int, a: Fraction, b: Fraction) -> Fraction:
    """Exact integral of |t|^n over [a, b]."""
    k = n + 1
    if a >= 0:
        return (b**k - a**k) / k
    if b <= 0:
        return ((-a) ** k - (-b) ** k) / k
    return (b**k + (-a) ** k) / k


def _panel_core(n: int, a: Fraction, b: Fraction, order: int) -> Fraction:
    """Exact value of the order-K Taylor surrogate integral on [a, b].

    integral of (sum_{j<=K} (-1)^j (t-m)^j / j!) * t^n dt, with
    m the panel midpoint.  Expanding t^n around m reduces everything to
    odd/even power moments of (t - m), which vanish for odd powers.
    """
    m = (a + b) / 2
    half = (b - a) / 2
    top = n + order
    # I[s] = integral of u^s over [-half, half]: 0 for odd s
    even_int = [_Q(0)] * (top + 1)
    hp = half  # running half^(s+1)
    for s in range(top + 1):
        if s % 2 == 0:
            even_int[s] = 2 * hp / (s + 1)
        hp *= half
    mp = [_Q(1)]
    for _ in range(n):
        mp.append(mp[-1] * m)
    core = _Q(0)
    for i in range(n + 1):
        coef = comb(n, i) * mp[n - i]
        inner = _Q(0)
        for j in range(order + 1):
            s = i + j
            if s % 2 == 0:
                term = even_int[s] / factorial(j)
                inner += -term if j % 2 else term
        core += coef * inner
    return core


def _panel(n: int, a: Fraction, b: Fraction, share: Fraction) -> IntervalReal | None:
    """Certified enclosure of the integral over one panel, or None if
    the panel must be subdivided to meet its width share."""
    m = (a + b) / 2
    half = (b - a) / 2
    amom = _abs_moment(n, a, b)
    # crude rational bound on e^-m (3 > e covers the negative-m case)
    ebound = _Q(3) ** ceil(-m) if m < 0 else _Q(1)

    order = 6
    rem = None
    while order <= 80:
        rem = half ** (order + 1) / (factorial(order + 1) * (1 - half / (order + 2)))
        if rem * amom * ebound <= share / 4:
            break
        order += 2
    else:
        return None
    core = _panel_core(n, a, b, order)
    err = rem * amom
    inner = IntervalReal(core - err, core + err)

    mag = max(abs(inner.lo), abs(inner.hi))
    if mag == 0:
        bits = 16
    else:
        bits = max(16, ceil_log2(4 * mag * ebound / share))
    for _ in range(3):
        out = _exp_iv(-m, bits) * inner
        if out.width <= share:
            return out
        bits *= 2
    return None


def quad_gamma(n: int, z: Fraction, tol: Fraction) -> QuadratureResult:
    """Certified enclosure of integral over [z, inf) of e^-t * t^n dt.

    The returned interval has width <= tol.  Raises PrecisionCapError
    if the evaluation budget runs out before the tolerance is met.
    """
    if n < 0:
        raise DomainError(f"quad_gamma requires n >= 0 (got n={n})")
    z = _Q(z)
    tol = _Q(tol)
    if tol <= 0:
        raise DomainError(f"quad_gamma requires tol > 0 (got {tol})")

    # upper cutoff: smallest integer U with the analytic tail below tol/2
    einv_hi = enclose_e_inv(64).hi
    u = max(2 * n + 1, ceil(z) + 1, 6)
    pw = einv_hi**u
    while True:
        tail = u**n * pw / (1 - _Q(n, u))
        if tail <= tol / 2:
            break
        u += 1
        pw *= einv_hi

    # unit panels aligned to integers, fractional first panel if needed
    points: list[Fraction] = [z]
    f = _Q(floor(z) + 1)
    while f < u:
        points.append(f)
        f += 1
    points.append(_Q(u))

    length = _Q(u) - z
    evals = 0
    total = IntervalReal.point(0)
    stack = [
        (points[i], points[i + 1], (tol / 2) * (points[i + 1] - points[i]) / length)
        for i in range(len(points) - 1)
    ]
    while stack:
        a, b, share = stack.pop()
        evals += 1
        if evals > _EVAL_BUDGET:
            raise PrecisionCapError(
                f"quad_gamma(n={n}, z={z}): evaluation budget exhausted before tol={tol}"
            )
        enclosure = _panel(n, a, b, share)
        if enclosure is None:
            mid = (a + b) / 2
            stack.append((a, mid, share / 2))
            stack.append((mid, b, share / 2))
            continue
        total = total + enclosure
    total = total + IntervalReal(0, tail)
    return QuadratureResult(value=total, evaluations=evals, tail_bound=tail)

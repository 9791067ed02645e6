"""Hypergeometric and incomplete-gamma forms of the counting results.

The terminating series

    F(n; x) = sum_{k=0}^n (-1)^k * (n!/(n-k)!) * x^k

(a 2F0 with a negative integer parameter) packages the derangement
polynomial: x^n * F(n; -1/x) = D_n(x), and its values at x = -1 and
x = 1 are floor(e*n!) and (-1)^n * floor((n!+1)/e).

The lower 1F1 series with parameters (n+1, n+2) at -x evaluates to
(n+1) * (n! - e^-x * D_n(x)) / x^(n+1); both sides are computed here as
certified intervals from independent routes and must overlap.

Finally, integral over [z, inf) of e^-t * t^n dt equals e^-z * D_n(z),
which turns six specific integrals of e^-t * t^n into exact e-linear
closed forms; each is checked against the rigorous quadrature oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .certified import (
    EForm,
    IntervalReal,
    ceil_log2,
    certified_floor,
    eform_eval,
    eform_sign,
)
from .counts import derangement_eq2
from .errors import DomainError, InvariantViolation
from .exact import derangements, dpoly_eval, factorial, partial_sum_pos
from .oracles import quad_gamma

__all__ = [
    "Hyp2F0Params",
    "GammaQuery",
    "IntegralIdentity",
    "hyp2f0",
    "hyp2f0_identity_check",
    "hyp2f0_special",
    "exp_enclosure",
    "inc_gamma_int",
    "hyp1f1",
    "integral_identities",
]

_Q = Fraction


@dataclass(frozen=True)
class Hyp2F0Params:
    """Parameters of the terminating series F(n; x); n+1 terms."""

    n: int
    x: Fraction

    @property
    def term_count(self) -> int:
        return self.n + 1


@dataclass(frozen=True)
class GammaQuery:
    """Arguments of the incomplete-gamma evaluation Gamma(n+1, z)."""

    n: int
    z: Fraction
    precision_bits: int


def hyp2f0(n: int, x: Fraction) -> Fraction:
    """Exact sum of the terminating series F(n; x).

    Terms follow the ratio t_{k+1} = t_k * (k - n) * x, so the series
    stops by itself after n+1 terms.
    """
    if n < 0:
        raise DomainError(f"hyp2f0 requires n >= 0 (got {n})")
    x = _Q(x)
    term = _Q(1)
    acc = _Q(1)
    for k in range(n):
        term *= (k - n) * x
        acc += term
    return acc


def hyp2f0_identity_check(n: int, x: Fraction) -> Fraction:
    """Evaluate x^n * F(n; -1/x) and certify it equals D_n(x) exactly."""
    x = _Q(x)
    if x == 0:
        raise DomainError("hyp2f0_identity_check requires x != 0")
    value = x**n * hyp2f0(n, -1 / x)
    expected = dpoly_eval(n, x)
    if value != expected:
        raise InvariantViolation(
            f"hyp2f0 transform at n={n}, x={x}: got {value}, polynomial gives {expected}"
        )
    return value


def hyp2f0_special(n: int, sign: int) -> int:
    """F(n; -1) = floor(e*n!) and F(n; 1) = (-1)^n * floor((n!+1)/e).

    `sign` selects the evaluation point x = sign; n >= 1.  The series
    value is checked against the independent floor route and returned.
    """
    if n < 1:
        raise DomainError(f"hyp2f0_special requires n >= 1 (got {n})")
    if sign not in (-1, 1):
        raise DomainError(f"sign must be -1 or 1 (got {sign})")
    value = hyp2f0(n, _Q(sign))
    if sign == -1:
        expected = _Q(partial_sum_pos(n))
    else:
        expected = _Q((-1) ** n * derangement_eq2(n))
    if value != expected:
        raise InvariantViolation(
            f"hyp2f0 special value at n={n}, x={sign}: got {value}, expected {expected}"
        )
    return int(expected)


def exp_enclosure(x: Fraction, precision_bits: int) -> IntervalReal:
    """Certified enclosure of e^x from the Taylor partial sum.

    The tail after k terms is bounded by
    |x|^(k+1) / ((k+1)! * (1 - |x|/(k+2)))   once k+2 > |x|,
    and k grows until that bound is below 2^-precision_bits scaled to
    the magnitude of e^x (so the width is small relative to the value,
    also for strongly negative x).
    """
    if precision_bits < 1:
        raise DomainError(f"precision_bits must be >= 1 (got {precision_bits})")
    x = _Q(x)
    if x == 0:
        return IntervalReal.point(1)
    ax = abs(x)
    # e^x >= 3^floor(x) for x < 0, and >= 1 otherwise
    scale = _Q(1) if x > 0 else _Q(1, 3 ** (-int(x) + 1))
    target = scale / (1 << precision_bits)
    k = 1
    while k + 2 <= ax:
        k += 1
    while True:
        rem = ax ** (k + 1) / (factorial(k + 1) * (1 - ax / (k + 2)))
        if rem <= target:
            break
        k += 1
    s = sum(x**j / factorial(j) for j in range(k + 1))
    if x > 0:
        return IntervalReal(s, s + rem)  # tail terms all positive
    return IntervalReal(s - rem, s + rem)


def inc_gamma_int(query: GammaQuery) -> IntervalReal:
    """Certified enclosure of Gamma(n+1, z) = e^-z * D_n(z)."""
    n, z, bits = query.n, _Q(query.z), query.precision_bits
    if n < 0:
        raise DomainError(f"inc_gamma_int requires n >= 0 (got {n})")
    if bits < 1:
        raise DomainError(f"precision_bits must be >= 1 (got {bits})")
    d = dpoly_eval(n, z)
    extra = ceil_log2(max(abs(d), _Q(1))) + 2
    return exp_enclosure(-z, bits + extra) * d


def hyp1f1(n: int, x: Fraction, precision_bits: int) -> IntervalReal:
    """Lower 1F1 series with parameters (n+1, n+2) evaluated at -x.

    Direct route: partial sums with term ratio
    t_{k+1}/t_k = -x * (n+1+k) / ((n+2+k) * (k+1)),
    truncated once the ratio magnitude stays below 1/2, with a geometric
    tail bound.  For x != 0 the enclosure is checked for overlap against
    the closed form (n+1) * (n! - e^-x * D_n(x)) / x^(n+1) computed via
    exp_enclosure, an independent route.
    """
    if n < 0:
        raise DomainError(f"hyp1f1 requires n >= 0 (got {n})")
    if precision_bits < 1:
        raise DomainError(f"precision_bits must be >= 1 (got {precision_bits})")
    x = _Q(x)
    if x == 0:
        return IntervalReal.point(1)

    target = _Q(1, 1 << (precision_bits + 1))
    term = _Q(1)
    acc = _Q(1)
    k = 0
    while True:
        term *= -x * (n + 1 + k) / ((n + 2 + k) * (k + 1))
        k += 1
        acc += term
        # after the ratio drops below 1/2 the tail is geometric
        if 2 * abs(x) <= k + 1:
            bound = 2 * abs(term) * abs(x) * (n + 2 + k) / ((n + 3 + k) * (k + 1))
            if bound <= target:
                break
    series_iv = IntervalReal(acc - bound, acc + bound)

    d = dpoly_eval(n, x)
    scale = _Q(n + 1) / x ** (n + 1)
    extra = ceil_log2(max(abs(d * scale), _Q(1))) + 4
    closed_iv = (factorial(n) - exp_enclosure(-x, precision_bits + extra) * d) * scale
    if not series_iv.overlaps(closed_iv):
        raise InvariantViolation(
            f"hyp1f1 routes disagree at n={n}, x={x}: "
            f"series {series_iv.to_decimal(20)}, closed form {closed_iv.to_decimal(20)}"
        )
    return series_iv


@dataclass(frozen=True)
class IntegralIdentity:
    """One checked integral of e^-t * t^n over a fixed range."""

    label: str
    closed_form: EForm
    enclosure: IntervalReal


def _times_e(f: EForm) -> EForm:
    """e * f for a form with no e-term, folding e * (1/e) to 1."""
    if f.b != 0:
        raise DomainError("cannot multiply a form containing e by e")
    return EForm(f.c, f.a, 0)


def integral_identities(
    n: int,
    tol: Fraction = _Q(1, 10**9),
    precision_bits: int = 96,
) -> tuple[IntegralIdentity, ...]:
    """Six integrals of e^-t * t^n as exact EForms, against quadrature.

    Ranges: [-1, inf), [0, inf), [1, inf), [0, 1], [-1, 0], [-1, 1].
    Every floor entering a closed form is certified.  The [-1, 0] case
    goes through the parity split of frac(n!/e): the expansion used is
    n!/e - D_n for odd n and n!/e - D_n + 1 for even n, and the value's
    sign (negative for odd n, positive for even n) is certified too.
    The [-1, 1] case is e*D_n - floor(e*n!)/e; for n >= 2 the D_n here
    is produced as the two-floor difference
    floor((e + 1/e)*n!) - floor(e*n!), a rewriting that is only valid
    from n = 2 on.  Each closed form must overlap its quadrature
    enclosure, else InvariantViolation.
    """
    if n < 1:
        raise DomainError(f"integral_identities requires n >= 1 (got {n})")
    tol = _Q(tol)
    nf = factorial(n)
    dn = derangements(n)
    floor_e = certified_floor(EForm(0, nf, 0))
    floor_shift = derangement_eq2(n)
    # coefficient of e in the [-1, 1] form: the two-floor difference
    # needs n >= 2, below that the derangement number enters directly
    b_sym = certified_floor(EForm(0, nf, nf)) - floor_e if n >= 2 else dn

    q_m1 = quad_gamma(n, _Q(-1), tol).value
    q_0 = quad_gamma(n, _Q(0), tol).value
    q_1 = quad_gamma(n, _Q(1), tol).value

    # [-1, 0]: written through the parity expansion of frac(n!/e)
    if n % 2:
        # frac(n!/e) = n!/e - D_n; the integral is -e * frac(n!/e)
        frac_form = EForm(-dn, 0, nf)
        left_form = -_times_e(frac_form)
    else:
        # frac(n!/e) = n!/e - D_n + 1; the integral is e - e * frac(n!/e)
        frac_form = EForm(-dn + 1, 0, nf)
        left_form = EForm(0, 1, 0) - _times_e(frac_form)
    expected_sign = -1 if n % 2 else 1
    if eform_sign(left_form) != expected_sign:
        raise InvariantViolation(
            f"integral over [-1,0] at n={n}: sign does not match parity"
        )

    records = (
        IntegralIdentity("-1..inf", EForm(0, floor_shift, 0), q_m1),
        IntegralIdentity("0..inf", EForm(nf, 0, 0), q_0),
        IntegralIdentity("1..inf", EForm(0, 0, floor_e), q_1),
        IntegralIdentity("0..1", EForm(nf, 0, -floor_e), q_0 - q_1),
        IntegralIdentity("-1..0", left_form, q_m1 - q_0),
        IntegralIdentity("-1..1", EForm(0, b_sym, -floor_e), q_m1 - q_1),
    )
    for rec in records:
        closed_iv = eform_eval(rec.closed_form, precision_bits)
        if not closed_iv.overlaps(rec.enclosure):
            raise InvariantViolation(
                f"integral over [{rec.label}] at n={n}: closed form "
                f"{closed_iv.to_decimal(15)} does not meet quadrature "
                f"{rec.enclosure.to_decimal(15)}"
            )
    return records

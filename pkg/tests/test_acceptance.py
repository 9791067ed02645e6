"""Acceptance gate: twelve criteria, one printed PASS/FAIL line each.

Run `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; each criterion also stands alone as a test, so a plain pytest
run reports the same outcomes through test results.  Ranges, exact
tolerances, and time budgets are pinned here and nowhere else.
"""

import random
import time
from fractions import Fraction

from ecount import counts, oracles, specials
from ecount.certified import (
    EForm,
    certified_floor,
    certified_floor_info,
    eform_lt,
    frac_e_nfact,
)
from ecount.exact import (
    derangements,
    dpoly,
    factorial,
    partial_sum_pos,
)

Q = Fraction


def _report(num: int, ok: bool, detail: str) -> None:
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'} ({detail})"
    print(line)
    assert ok, line


def test_criterion_01_eq1_dual_route():
    t0 = time.monotonic()
    bad = [
        n
        for n in range(1, 501)
        if partial_sum_pos(n) != certified_floor(EForm(0, factorial(n), 0))
    ]
    dt = time.monotonic() - t0
    _report(1, not bad and dt < 5.0, f"n in 1..500 exact, {dt:.2f}s < 5s, mismatches={bad[:3]}")


def test_criterion_02_derangement_family():
    t0 = time.monotonic()
    bad = []
    for n in range(1, 201):
        dn = derangements(n)
        if counts.derangement_eq2(n) != dn:
            bad.append(("eq2", n))
        for lam in (Q(1, 3), Q(5, 12), Q(1, 2)):
            if counts.derangement_lambda(n, lam) != dn:
                bad.append((f"lambda={lam}", n))
        if n < 2:
            continue
        if counts.derangement_eq3(n) != dn:
            bad.append(("eq3", n))
        if counts.derangement_eq4(n) != dn:
            bad.append(("eq4", n))
        if counts.derangement_eq6(n) != dn:
            bad.append(("eq6", n))
        for m in range(3, 7):
            if counts.derangement_eq5(n, m) != dn:
                bad.append((f"eq5 m={m}", n))
        for m in range(1, 4):
            if counts.derangement_thm7(n, m) != dn:
                bad.append((f"thm7 m={m}", n))
    dt = time.monotonic() - t0
    _report(2, not bad and dt < 60.0, f"n up to 200, {dt:.2f}s < 60s, mismatches={bad[:3]}")


def test_criterion_03_lambda_window_sharpness():
    low = counts.derangement_lambda(2, Q(0))
    high = counts.derangement_lambda(3, Q(1))
    ok = low == 0 != derangements(2) and high == 3 != derangements(3)
    _report(3, ok, f"lambda=0: n=2 -> {low} != 1; lambda=1: n=3 -> {high} != 2")


def test_criterion_04_brute_force_equivalence():
    t0 = time.monotonic()
    bad = []
    for n in range(0, 10):
        if oracles.brute_derangements(n) != derangements(n):
            bad.append(("derangements", n))
    for n in range(3, 10):
        res = oracles.brute_paths(n)
        if (res.count, res.total_length) != (
            counts.path_count(n),
            counts.path_length_sum(n),
        ):
            bad.append(("paths", n))
    for n in range(3, 9):
        res = oracles.brute_cycles(n)
        if (res.count, res.total_length) != (
            counts.cycle_count(n),
            counts.cycle_length_sum(n),
        ):
            bad.append(("cycles", n))
    dt = time.monotonic() - t0
    _report(4, not bad and dt < 60.0, f"exact over all three oracles, {dt:.2f}s < 60s")


def test_criterion_05_average_and_argmax():
    bad = []
    for n in range(3, 61):
        if counts.average_path_length(n) - (n - 2) != Q(1, counts.path_count(n)):
            bad.append(("avg", n))
    for n in range(4, 61):
        table = {i: counts.path_count_by_length(n, i) for i in range(1, n)}
        top = max(table.values())
        exhaustive = {i for i, v in table.items() if v == top}
        if counts.path_argmax_lengths(n) != {n - 2, n - 1} or exhaustive != {
            n - 2,
            n - 1,
        }:
            bad.append(("argmax", n))
    _report(5, not bad, f"avg n in 3..60, argmax n in 4..60, failures={bad[:3]}")


def test_criterion_06_bound_chain():
    t0 = time.monotonic()
    bad = []
    for n in range(2, 51):
        try:
            counts.chain_check(n, 8)
        except Exception as exc:  # noqa: BLE001 - any break fails the criterion
            bad.append((n, str(exc)))
    dt = time.monotonic() - t0
    _report(6, not bad and dt < 30.0, f"n in 2..50, m in 1..8, {dt:.2f}s < 30s, breaks={bad[:1]}")


def test_criterion_07_fractional_part_bracket():
    bad = []
    for n in range(1, 201):
        f = frac_e_nfact(n)
        lo_ok = eform_lt(EForm.from_rational(Q(1, n + 1)), f)
        # Strict < implies the half-open bracket; {e n!} = 1/n is
        # impossible since the form is irrational.
        hi_ok = eform_lt(f, EForm.from_rational(Q(1, n)))
        if not (lo_ok and hi_ok):
            bad.append(n)
    _report(7, not bad, "1/(n+1) < frac(e n!) <= 1/n certified for n in 1..200")


def test_criterion_08_hyp2f0_identities():
    bad = []
    for n in range(0, 31):
        for x in (Q(1), Q(-1), Q(1, 2), Q(-1, 2), Q(2), Q(-2), Q(3, 7)):
            try:
                specials.hyp2f0_identity_check(n, x)
            except Exception:  # noqa: BLE001
                bad.append(("identity", n, x))
    for n in range(1, 101):
        for sign in (-1, 1):
            try:
                specials.hyp2f0_special(n, sign)
            except Exception:  # noqa: BLE001
                bad.append(("special", n, sign))
    _report(8, not bad, "polynomial identity n in 0..30, special values n in 1..100")


def test_criterion_09_six_integrals():
    t0 = time.monotonic()
    bad = []
    for n in range(1, 16):
        try:
            specials.integral_identities(n, tol=Q(1, 10**9))
        except Exception as exc:  # noqa: BLE001
            bad.append((n, str(exc)))
    dt = time.monotonic() - t0
    _report(9, not bad and dt < 120.0, f"n in 1..15 at tol 1e-9, {dt:.2f}s < 120s")


def test_criterion_10_hyp1f1_enclosures():
    bad = []
    for n in range(0, 11):
        for x in (Q(1, 2), Q(1), Q(2)):
            iv = specials.hyp1f1(n, x, 40)
            if iv.width > Q(1, 10**12):
                bad.append((n, x, float(iv.width)))
    _report(10, not bad, "series and closed form overlap at width <= 1e-12")


def test_criterion_11_ode_identity():
    bad = []
    for n in range(0, 51):
        p = dpoly(n)
        deriv = p.derivative_coeffs() + (0,)
        diff = tuple(a - b for a, b in zip(p.coeffs, deriv))
        if diff != (0,) * n + (1,):
            bad.append(n)
    _report(11, not bad, "D_n(x) - D_n'(x) = x^n coefficientwise for n in 0..50")


def _random_suite_eform(rng: random.Random) -> EForm:
    shape = rng.randrange(6)
    if shape == 0:
        n = rng.randint(1, 60)
        return EForm(0, factorial(n), 0)
    if shape == 1:
        n = rng.randint(1, 60)
        sign = rng.choice((-1, 1))
        return EForm(rng.randint(-5, 5), 0, sign * factorial(n))
    if shape == 2:
        n = rng.randint(1, 100)
        return frac_e_nfact(n)
    if shape == 3:
        n, m = rng.randint(2, 40), rng.randint(1, 6)
        return counts.bound_N(n, m)
    if shape == 4:
        # The alternating-pair argument: rational head plus n!(e + 1/e).
        n, m = rng.randint(2, 30), rng.randint(1, 3)
        nf = factorial(n)
        acc = sum(Q(n + 2 * i - 1, factorial(n + 2 * i)) for i in range(1, m + 1))
        a = nf * (acc - Q(partial_sum_pos(n + 2 * m), factorial(n + 2 * m)))
        return EForm(a, nf, nf)
    num = rng.randint(-10**6, 10**6)
    den = rng.randint(1, 10**4)
    return EForm(Q(num, den), rng.randint(-10**4, 10**4), rng.randint(-10**4, 10**4))


def test_criterion_12_certified_floor_robustness():
    rng = random.Random(170820)
    bad = 0
    for _ in range(1000):
        f = _random_suite_eform(rng)
        base = certified_floor_info(f)
        again = certified_floor_info(f, start_bits=4 * base.precision_bits)
        if again.value != base.value:
            bad += 1
    _report(12, bad == 0, "1000 seeded forms, floor stable at 4x deciding precision")

"""End-to-end acceptance gate: nine criteria, each printing a single
PASS/FAIL line (straight to the terminal, bypassing capture) and asserting
the stated tolerance and runtime budget."""

import math
import time

import numpy as np
import pytest
import scipy.optimize as opt

from dilogzeta import (
    MellinMethod,
    PeriodSumConfig,
    a_tilde_j,
    a_tilde_series,
    c_bracket,
    certify,
    d_closed,
    d_gamma_series,
    d_quad,
    icing_sum_check,
    mellin_fourier_phi,
    scan_line,
    zeta_bound_e,
    zeta_bound_f,
    zeta_ref,
    zeta_via_d,
    zeta_via_e,
    zeta_via_f,
)
from dilogzeta.cli import muntz_suite
from dilogzeta.mellin import a_tilde_closed, binomial_zeta_sum
from dilogzeta.muntz import mellin_fourier_phi_numeric

CFG = PeriodSumConfig(n_periods=100_000, tail_order=2)


def emit(capsys, n, name, ok, detail):
    with capsys.disabled():
        verdict = "PASS" if ok else "FAIL"
        print(f"acceptance {n} [{name}]: {verdict}  ({detail})")
    assert ok, f"criterion {n} ({name}) failed: {detail}"


def test_criterion_1_c_bracket(capsys):
    t0 = time.perf_counter()
    lower, upper = c_bracket(100)
    elapsed = time.perf_counter() - t0
    ok = -0.14 <= lower <= -0.10 and 0.34 <= upper <= 0.38 and elapsed < 5.0
    emit(capsys, 1, "c(u) bracket, N=100", ok,
         f"lower={lower:.6f} upper={upper:.6f} elapsed={elapsed:.2f}s")


def test_criterion_2_certificate(capsys):
    t0 = time.perf_counter()
    cert = certify(0.1, 1.1, 100)
    elapsed = time.perf_counter() - t0
    ok = (
        abs(cert.lhs - 4.045) <= 0.02
        and abs(cert.rhs - 3.154) <= 0.02
        and cert.holds
        and elapsed < 5.0
    )
    emit(capsys, 2, "certificate at (0.1, 1.1)", ok,
         f"lhs={cert.lhs:.4f} rhs={cert.rhs:.4f} holds={cert.holds} "
         f"elapsed={elapsed:.2f}s")


def test_criterion_3_representation_agreement(capsys):
    t0 = time.perf_counter()
    rng = np.random.RandomState(42)
    worst_period = 0.0
    worst_closed = 0.0
    for _ in range(200):
        s = complex(rng.uniform(0.05, 0.95), rng.uniform(-20.0, 20.0))
        ref = zeta_ref(s).value
        for fn in (zeta_via_d, zeta_via_e, zeta_via_f):
            dev_p = abs(fn(s, MellinMethod.PERIOD_SUM, CFG).value - ref)
            dev_c = abs(fn(s, MellinMethod.CLOSED_FORM).value - ref)
            worst_period = max(worst_period, dev_p)
            worst_closed = max(worst_closed, dev_c)
    elapsed = time.perf_counter() - t0
    ok = worst_period <= 1e-4 and worst_closed <= 1e-12 and elapsed < 60.0
    emit(capsys, 3, "200-point strip agreement", ok,
         f"worst_period={worst_period:.2e} worst_closed={worst_closed:.2e} "
         f"elapsed={elapsed:.1f}s")


def test_criterion_4_zero_scan(capsys):
    t0 = time.perf_counter()
    on_line = scan_line(0.5, 12.0, 16.0, 0.01, cfg=CFG)
    off_line = scan_line(0.3, 12.0, 16.0, 0.01, cfg=CFG)
    # independent oracle: minimize |zeta| along the critical line
    res = opt.minimize_scalar(
        lambda v: abs(zeta_ref(complex(0.5, v)).value),
        bounds=(14.0, 14.3), method="bounded",
        options={"xatol": 1e-10},
    )
    oracle_v = float(res.x)
    elapsed = time.perf_counter() - t0
    ok = (
        len(on_line.candidate_zeros) == 1
        and abs(on_line.candidate_zeros[0] - oracle_v) <= 1e-3
        and abs(oracle_v - 14.1347) <= 1e-3
        and len(off_line.candidate_zeros) == 0
        and elapsed < 120.0
    )
    found = on_line.candidate_zeros[0] if on_line.candidate_zeros else float("nan")
    emit(capsys, 4, "zero scan u=0.5/0.3, v in [12,16]", ok,
         f"found={found:.6f} oracle={oracle_v:.6f} "
         f"off_line_candidates={len(off_line.candidate_zeros)} elapsed={elapsed:.1f}s")


def test_criterion_5_d_triple_path(capsys):
    res = [-2.2, -2.5, -3.0, -4.0, -5.0]
    ims = [0.0, 1.0, -1.0, 10.0, -10.0]
    worst_quad = 0.0
    worst_gamma = 0.0
    n_checked = 0
    for re_a in res:
        for im_a in ims:
            alpha = complex(re_a, im_a)
            if abs(alpha - (-3.0)) < 1e-9:
                continue  # guarded pole of the closed-form decomposition
            c = d_closed(alpha)
            worst_quad = max(worst_quad, abs(c - d_quad(alpha, CFG).value))
            worst_gamma = max(worst_gamma, abs(c - d_gamma_series(alpha).value))
            n_checked += 1
    cont_dev = abs(d_closed(-1.5) - d_quad(-1.5, CFG).value)
    ok = worst_quad <= 1e-8 and worst_gamma <= 1e-5 and cont_dev <= 1e-8
    emit(capsys, 5, "D(alpha) triple-path equivalence", ok,
         f"n={n_checked} worst_quad={worst_quad:.2e} worst_gamma={worst_gamma:.2e} "
         f"continuation@-1.5={cont_dev:.2e}")


def test_criterion_6_muntz_suite(capsys):
    rows = muntz_suite(1e-5)
    n_fail = sum(0 if r["ok"] else 1 for r in rows)
    worst = max(r["residual"] for r in rows)
    worst_515 = max(
        abs(mellin_fourier_phi(s) - mellin_fourier_phi_numeric(s).value)
        for s in (0.3, 0.5, 0.7)
    )
    ok = n_fail == 0 and worst_515 <= 1e-8
    emit(capsys, 6, "Muntz identity suite", ok,
         f"checks={len(rows)} failures={n_fail} worst={worst:.2e} "
         f"closed-vs-numeric M(Fphi)={worst_515:.2e}")


def test_criterion_7_tail_series(capsys):
    worst_series = max(
        abs(a_tilde_series(alpha).value - a_tilde_closed(alpha))
        for alpha in (-2.5, -3.5, -4.0, -4.0 + 2.0j)
    )
    worst_j = max(
        abs(binomial_zeta_sum(-4.0, j).value - (-1.0 / (-4.0 + j) + a_tilde_j(-4.0, j)))
        for j in (1, 2, 3)
    )
    ok = worst_series <= 1e-7 and worst_j <= 1e-9
    emit(capsys, 7, "tail-series identities", ok,
         f"worst_series={worst_series:.2e} worst_j_identity={worst_j:.2e}")


def test_criterion_8_summation_formula(capsys):
    worst = 0.0
    for s in (0.3, 0.5, 0.7):
        lhs, rhs = icing_sum_check(s, k_max=60)
        worst = max(worst, abs(lhs - rhs))
    ok = worst <= 1e-8
    emit(capsys, 8, "incomplete-gamma summation formula", ok,
         f"worst={worst:.2e} at s in {{0.3, 0.5, 0.7}}")


def test_criterion_9_bound_domination(capsys):
    rng = np.random.RandomState(314)
    n_checked = 0
    n_viol = 0
    while n_checked < 100:
        s = complex(rng.uniform(0.05, 0.95), rng.uniform(-20.0, 20.0))
        ref = abs(zeta_ref(s).value)
        try:
            be, bf = zeta_bound_e(s), zeta_bound_f(s)
        except Exception:
            continue  # outside the bounds' validity region
        n_checked += 1
        if be < ref or bf < ref:
            n_viol += 1
    ok = n_viol == 0
    emit(capsys, 9, "explicit bounds dominate |zeta|", ok,
         f"points={n_checked} violations={n_viol}")

"""Verification sweeps over whole ranks, grouped into named suites.

Each suite covers every orbit of R_n and returns one Report per check;
suites are exhaustive except where noted (the delta identity samples
the big rank-2 orbit of R_4, and the Hecke oracle at n = 4 is run on
the rank <= 1 orbits only, everything larger being done at n <= 3).
"""

from __future__ import annotations

import itertools
import random
import time

from . import analysis, hecke, renner, rpoly
from .polynomials import Laurent, ZERO
from .reports import Report

SUITES = ("all", "putcha", "lifting", "delta", "descents", "hecke")

__all__ = ["SUITES", "putcha_suite", "lifting_suite", "delta_suite",
           "descents_suite", "hecke_suite", "run_suite"]


def putcha_suite(n: int) -> list[Report]:
    reports = []
    for k in range(n + 1):
        report = analysis.verify_putcha_conjecture(renner.orbit(n, k))
        report.name = f"putcha n={n} k={k}"
        reports.append(report)
    return reports


def lifting_suite(n: int) -> list[Report]:
    reports = []
    for k in range(n + 1):
        report = analysis.lifting_violations(n, k)
        report.name = f"lifting n={n} k={k}"
        reports.append(report)
    return reports


def delta_pairs(n: int, k: int, seed: int = 20240801, sample_size: int = 1200):
    """The pairs checked by the delta suite: exhaustive except for the
    rank-2 orbit of R_4, which is sampled (>= 1000 pairs)."""
    elems = renner.orbit(n, k)
    pairs = list(itertools.product(elems, repeat=2))
    if n == 4 and k == 2:
        return random.Random(seed).sample(pairs, sample_size)
    return pairs


def delta_suite(n: int) -> list[Report]:
    reports = []
    for k in range(n + 1):
        start = time.perf_counter()
        report = Report(name=f"delta n={n} k={k}")
        for theta, sigma in delta_pairs(n, k):
            report.checked += 1
            if not rpoly.verify_delta_identity(theta, sigma):
                report.violations.append({
                    "theta": renner.format_element(theta),
                    "sigma": renner.format_element(sigma),
                    "sum": str(rpoly.delta_identity_sum(theta, sigma)),
                })
        report.runtime_ms = (time.perf_counter() - start) * 1000.0
        reports.append(report)
    return reports


def descents_suite(n: int) -> list[Report]:
    """Every positive-length element must descend somewhere, and the
    standard-form descent rule must agree with the raw length-based
    definition."""
    reports = []
    for k in range(n + 1):
        elems = renner.orbit(n, k)
        report = analysis.check_nonempty_descent(elems)
        report.name = f"nonempty-descent n={n} k={k}"
        reports.append(report)
        start = time.perf_counter()
        agree = Report(name=f"descent-rule n={n} k={k}")
        for sigma in elems:
            agree.checked += 1
            if analysis.descent_sets(sigma) != analysis.descent_sets_raw(sigma):
                via_rule = analysis.descent_sets(sigma)
                raw = analysis.descent_sets_raw(sigma)
                agree.violations.append({
                    "element": renner.format_element(sigma),
                    "standard_form_rule": [sorted(via_rule[0]), sorted(via_rule[1])],
                    "raw": [sorted(raw[0]), sorted(raw[1])],
                })
        agree.runtime_ms = (time.perf_counter() - start) * 1000.0
        reports.append(agree)
    return reports


def hecke_oracle_report(n: int, k: int) -> Report:
    """Compare the bar-involution expansion with the recurrence on one
    orbit, and check that bar is an involution there."""
    start = time.perf_counter()
    report = Report(name=f"hecke n={n} k={k}")
    elems = renner.orbit(n, k)
    for sigma in elems:
        expansion = hecke.rpoly_via_bar(sigma)
        for theta in elems:
            report.checked += 1
            from_bar = expansion.get(theta, ZERO)
            from_recurrence = rpoly.rpoly(theta, sigma)
            if from_bar != from_recurrence:
                report.violations.append({
                    "theta": renner.format_element(theta),
                    "sigma": renner.format_element(sigma),
                    "via_bar": from_bar.to_json(),
                    "via_recurrence": from_recurrence.to_json(),
                })
        report.checked += 1
        back = hecke.bar_element(hecke.bar_Asigma(sigma))
        if not hecke.elements_equal(back, {sigma: Laurent.from_int(1)}):
            report.violations.append({
                "kind": "not-involutive",
                "sigma": renner.format_element(sigma),
                "bar_squared": hecke.hecke_to_json(back),
            })
    report.runtime_ms = (time.perf_counter() - start) * 1000.0
    return report


def hecke_suite(n: int) -> list[Report]:
    ks = range(n + 1) if n <= 3 else range(2)
    return [hecke_oracle_report(n, k) for k in ks]


def run_suite(name: str, n: int) -> list[Report]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    reports = []
    if name in ("all", "putcha"):
        reports += putcha_suite(n)
    if name in ("all", "lifting"):
        reports += lifting_suite(n)
    if name in ("all", "delta"):
        reports += delta_suite(n)
    if name in ("all", "descents"):
        reports += descents_suite(n)
    if name in ("all", "hecke"):
        reports += hecke_suite(n)
    return reports

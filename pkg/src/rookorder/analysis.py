"""Descent sets, interval shapes, lifting, and conjecture verification.

The headline facts being checked at desk scale:

* every element of positive length has a left or a right descent, and
  each orbit has exactly one length-0 element with both sets empty;
* a length-2 interval has 3 elements (linear) or 4 (diamond), and the
  constant term R(0) vanishes iff a linear length-2 subinterval exists,
  so intervals with R(0) = 0 cannot appear as Weyl group subintervals;
* the Mobius function of an orbit interval is (-1)^(length difference)
  when every length-2 subinterval is a diamond and 0 otherwise.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from . import order, renner, rpoly, weyl
from .order import IntervalPoset
from .renner import Word
from .reports import Report

__all__ = [
    "descent_sets", "descent_sets_raw", "check_nonempty_descent",
    "linear_length2_pairs", "find_linear_length2",
    "embeddable_in_weyl_necessary", "check_lifting", "lifting_violations",
    "verify_putcha_conjecture", "IntervalClassification", "classify_interval",
]


def descent_sets_raw(sigma: Word) -> tuple[frozenset[int], frozenset[int]]:
    """Descents straight from the definition: s with l(s sigma) < l(sigma),
    respectively l(sigma s) < l(sigma)."""
    n = len(sigma)
    ls = renner.length(sigma)
    left = frozenset(
        i for i in range(1, n)
        if renner.length(renner.multiply(weyl.simple_reflection(n, i), sigma)) < ls)
    right = frozenset(
        i for i in range(1, n)
        if renner.length(renner.multiply(sigma, weyl.simple_reflection(n, i))) < ls)
    return left, right


def descent_sets(sigma: Word) -> tuple[frozenset[int], frozenset[int]]:
    """Descent sets computed from the standard form sigma = x e y^-1.

    Left descents are the left descents of x.  A simple reflection s is
    a right descent iff l(sy) > l(y) and either sy is again a minimal
    coset representative for W(e), or sy = y s' with s' a simple
    reflection inside W(e) and l(x s') < l(x).  Agreement with the raw
    definition is a tested property, and the raw definition is what the
    R-polynomial recurrence uses.
    """
    n = len(sigma)
    x, e, y = renner.standard_form(sigma)
    left = weyl.left_descents(x)
    centralizer = renner.centralizer_gens(e)
    x_right = weyl.right_descents(x)
    right = set()
    for i in range(1, n):
        sy = weyl.compose(weyl.simple_reflection(n, i), y)
        if weyl.length(sy) <= weyl.length(y):
            continue
        if weyl.min_coset_rep(sy, centralizer) == sy:
            right.add(i)
            continue
        # sy = y s' with s' = y^-1 s y; require s' simple, in W(e), lowering x
        s_prime = weyl.compose(weyl.inverse(y), sy)
        js = [j for j in range(1, n)
              if s_prime == weyl.simple_reflection(n, j)]
        if js and js[0] in centralizer and js[0] in x_right:
            right.add(i)
    return left, frozenset(right)


def check_nonempty_descent(orbit_elements) -> Report:
    """Every positive-length element descends somewhere; the unique
    length-0 element has both descent sets empty."""
    start = time.perf_counter()
    report = Report(name="nonempty-descent")
    zero_length = []
    for sigma in orbit_elements:
        report.checked += 1
        left, right = descent_sets_raw(sigma)
        if renner.length(sigma) == 0:
            zero_length.append(sigma)
            if left or right:
                report.violations.append({
                    "kind": "descent-at-minimum",
                    "element": renner.format_element(sigma),
                    "des_L": sorted(left), "des_R": sorted(right),
                })
        elif not left and not right:
            report.violations.append({
                "kind": "no-descent",
                "element": renner.format_element(sigma),
                "length": renner.length(sigma),
            })
    if len(zero_length) != 1:
        report.violations.append({
            "kind": "length-zero-count",
            "elements": [renner.format_element(w) for w in zero_length],
        })
    report.runtime_ms = (time.perf_counter() - start) * 1000.0
    return report


@lru_cache(maxsize=None)
def linear_length2_pairs(n: int, k: int) -> tuple[tuple[Word, Word], ...]:
    """All pairs (alpha, beta) in the rank-k orbit whose interval is a
    linear length-2 one (3 elements in total)."""
    elems = renner.orbit(n, k)
    by_length: dict[int, list[Word]] = {}
    for w in elems:
        by_length.setdefault(renner.length(w), []).append(w)
    pairs = []
    for low, alphas in by_length.items():
        for alpha in alphas:
            for beta in by_length.get(low + 2, ()):
                if order.leq(alpha, beta) and \
                        len(order.interval_elements(alpha, beta)) == 3:
                    pairs.append((alpha, beta))
    return tuple(pairs)


def find_linear_length2(theta: Word, sigma: Word) -> Optional[tuple[Word, Word]]:
    """A linear length-2 subinterval of [theta, sigma], if one exists.

    Existence is equivalent to R[theta, sigma](0) = 0, which is what
    makes the interval impossible to embed in a Weyl group.
    """
    n, k = len(theta), renner.rank(theta)
    if not order.leq(theta, sigma):
        raise ValueError("find_linear_length2 requires theta <= sigma")
    for alpha, beta in linear_length2_pairs(n, k):
        if order.leq(theta, alpha) and order.leq(beta, sigma):
            return alpha, beta
    return None


def embeddable_in_weyl_necessary(theta: Word, sigma: Word) -> bool:
    """Necessary condition for [theta, sigma] to be a Weyl group
    subinterval: R(0) != 0.  False certifies non-embeddability."""
    if not order.leq(theta, sigma):
        raise ValueError("embeddable_in_weyl_necessary requires theta <= sigma")
    return rpoly.rpoly(theta, sigma).constant_term != 0


def check_lifting(theta: Word, sigma: Word, i: int) -> dict:
    """Evaluate the lifting property for the triple (theta, sigma, s_i).

    Clause (a): theta < s theta and sigma < s sigma imply
    s theta < s sigma.  Clause (b): s theta >= theta and
    s sigma <= sigma imply theta <= s sigma and s theta <= sigma.
    """
    n = len(theta)
    if not (order.leq(theta, sigma) and theta != sigma):
        raise ValueError("check_lifting requires theta < sigma")
    s = weyl.simple_reflection(n, i)
    s_theta = renner.multiply(s, theta)
    s_sigma = renner.multiply(s, sigma)
    d_theta = renner.length(s_theta) - renner.length(theta)
    d_sigma = renner.length(s_sigma) - renner.length(sigma)
    result = {
        "theta": renner.format_element(theta),
        "sigma": renner.format_element(sigma),
        "s": i,
    }
    if d_theta > 0 and d_sigma > 0:
        result["clause"] = "a"
        result["holds"] = order.leq(s_theta, s_sigma) and s_theta != s_sigma
    elif d_theta >= 0 and d_sigma <= 0:
        result["clause"] = "b"
        result["holds"] = order.leq(theta, s_sigma) and order.leq(s_theta, sigma)
    else:
        result["clause"] = "not applicable"
        result["holds"] = True
    return result


def lifting_violations(n: int, k: int) -> Report:
    """Sweep all comparable pairs and simple reflections of one orbit."""
    start = time.perf_counter()
    report = Report(name="lifting")
    elems = renner.orbit(n, k)
    for theta, sigma in itertools.product(elems, repeat=2):
        if theta == sigma or not order.leq(theta, sigma):
            continue
        for i in range(1, n):
            report.checked += 1
            outcome = check_lifting(theta, sigma, i)
            if not outcome["holds"]:
                report.violations.append(outcome)
    report.runtime_ms = (time.perf_counter() - start) * 1000.0
    return report


def verify_putcha_conjecture(orbit_elements,
                             mobius_fn: Callable[[Word, Word], int] | None = None,
                             ) -> Report:
    """Check mu = (-1)^(length difference) on intervals all of whose
    length-2 subintervals are diamonds, and mu = 0 on the rest.

    ``mobius_fn`` exists for harness mutation tests; the default is the
    direct poset Mobius function.
    """
    start = time.perf_counter()
    mob = mobius_fn or order.mobius_direct
    report = Report(name="putcha")
    elems = sorted(orbit_elements, key=lambda w: (renner.length(w), w))
    if not elems:
        return report
    n = len(elems[0])
    k = renner.rank(elems[0])
    above = {w: frozenset(v for v in elems if order.leq(w, v)) for w in elems}
    lin_pairs = linear_length2_pairs(n, k)
    for theta in elems:
        for sigma in above[theta]:
            report.checked += 1
            has_linear = any(alpha in above[theta] and sigma in above[beta]
                             for alpha, beta in lin_pairs)
            expected = 0 if has_linear else \
                (-1) ** (renner.length(sigma) - renner.length(theta))
            actual = mob(theta, sigma)
            if actual != expected:
                report.violations.append({
                    "theta": renner.format_element(theta),
                    "sigma": renner.format_element(sigma),
                    "mobius": actual,
                    "expected": expected,
                    "interval": [renner.format_element(w)
                                 for w in order.interval_elements(theta, sigma)],
                })
    report.runtime_ms = (time.perf_counter() - start) * 1000.0
    return report


@dataclass(frozen=True)
class IntervalClassification:
    interval: IntervalPoset
    shape: str  # "linear" | "diamond" | "higher-length"
    r_constant_term: int
    mobius: int
    linear_witness: Optional[tuple[Word, Word]]


def classify_interval(theta: Word, sigma: Word) -> IntervalClassification:
    """Shape, R(0) and Mobius data of one orbit interval, with the
    three-way equivalence (mu != 0, mu = (-1)^length, all-diamond)
    re-checked on the fly."""
    poset = order.interval(theta, sigma)
    gap = renner.length(sigma) - renner.length(theta)
    elems = poset.elements
    chain = len(elems) == gap + 1 and all(
        order.leq(elems[i], elems[i + 1]) for i in range(len(elems) - 1))
    if chain:
        shape = "linear"
    elif gap == 2 and len(elems) == 4:
        shape = "diamond"
    else:
        shape = "higher-length"
    r0 = rpoly.rpoly(theta, sigma).constant_term
    mu = order.mobius_direct(theta, sigma)
    witness = find_linear_length2(theta, sigma)
    if mu != r0:
        raise RuntimeError(f"mu = {mu} but R(0) = {r0} on "
                           f"[{renner.format_element(theta)}, "
                           f"{renner.format_element(sigma)}]")
    if (mu != 0) != (witness is None):
        raise RuntimeError("linear length-2 witness inconsistent with mu")
    if mu != 0 and mu != (-1) ** gap:
        raise RuntimeError(f"nonzero mu = {mu} differs from (-1)^{gap}")
    return IntervalClassification(
        interval=poset, shape=shape, r_constant_term=r0, mobius=mu,
        linear_witness=witness)

"""The rook monoid R_n: partial permutation matrices in one-line notation.

An element is a tuple (a_1, ..., a_n) with a_j in {0, ..., n}: a_j = i
means the matrix has a 1 in row i, column j, and a_j = 0 means column j
is empty.  Nonzero entries are pairwise distinct.  Multiplication is
matrix multiplication, i.e. composition of partial maps column -> row
with the right factor applied first.

The invertible elements are the permutations of ``weyl``; each element
factors uniquely as x e y^-1 with e a rank idempotent (1, ..., k, 0,
..., 0), x minimal in x W_e and y minimal in y W(e).
"""

from __future__ import annotations

import itertools
import json
from functools import lru_cache
from typing import NamedTuple

from . import weyl

Word = tuple[int, ...]

__all__ = [
    "is_partial_perm", "check_element", "multiply", "rank", "zero_element",
    "rank_idempotent", "cross_section_lattice", "idempotent_leq",
    "centralizer_gens", "stabilizer_gens", "parabolics_of", "StandardForm",
    "standard_form", "assemble", "idempotent_length", "length", "orbit",
    "orbit_minimum", "orbit_maximum", "monoid_elements", "parse_element",
    "format_element", "element_to_json", "element_from_json",
]


def is_partial_perm(word) -> bool:
    """
    >>> is_partial_perm((0, 4, 2, 0)), is_partial_perm((1, 1, 0))
    (True, False)
    """
    n = len(word)
    nonzero = [a for a in word if a != 0]
    return (all(isinstance(a, int) and 0 <= a <= n for a in word)
            and len(set(nonzero)) == len(nonzero))


def check_element(word: Word) -> None:
    if not is_partial_perm(word):
        raise ValueError(f"not a partial permutation in one-line notation: {word!r}")


def multiply(f: Word, g: Word) -> Word:
    """The product fg: apply g first, then f; empty columns stay empty.

    >>> e = (1, 2, 0, 0)
    >>> multiply((1, 3, 2, 4), multiply(e, (3, 4, 1, 2)))
    (0, 0, 1, 3)
    """
    if len(f) != len(g):
        raise ValueError(f"rank mismatch: {len(f)} vs {len(g)}")
    return tuple(f[a - 1] if a else 0 for a in g)


def rank(f: Word) -> int:
    """Number of nonzero entries (the rank of the matrix)."""
    return sum(1 for a in f if a)


def zero_element(n: int) -> Word:
    return (0,) * n


def rank_idempotent(n: int, k: int) -> Word:
    """The idempotent e_k = (1, ..., k, 0, ..., 0)."""
    if not 0 <= k <= n:
        raise ValueError(f"rank {k} out of range for n={n}")
    return tuple(range(1, k + 1)) + (0,) * (n - k)


def cross_section_lattice(n: int) -> tuple[Word, ...]:
    """The chain e_0 < e_1 < ... < e_n of orbit representatives."""
    return tuple(rank_idempotent(n, k) for k in range(n + 1))


def idempotent_leq(e: Word, f: Word) -> bool:
    """The idempotent order: e <= f iff ef = e = fe."""
    if len(e) != len(f):
        raise ValueError(f"rank mismatch: {len(e)} vs {len(f)}")
    return multiply(e, f) == e and multiply(f, e) == e


@lru_cache(maxsize=None)
def centralizer_gens(e: Word) -> frozenset[int]:
    """Simple reflections commuting with e; they generate W(e)."""
    n = len(e)
    return frozenset(
        i for i in range(1, n)
        if multiply(weyl.simple_reflection(n, i), e)
        == multiply(e, weyl.simple_reflection(n, i))
    )


@lru_cache(maxsize=None)
def stabilizer_gens(e: Word) -> frozenset[int]:
    """Simple reflections s with se = e; they generate W_e."""
    n = len(e)
    return frozenset(
        i for i in range(1, n)
        if multiply(weyl.simple_reflection(n, i), e) == e
    )


def parabolics_of(e: Word) -> tuple[frozenset[int], frozenset[int]]:
    """Generator sets for the centralizer W(e) and the stabilizer W_e.

    The test suite verifies by full-group filtering that these simple
    reflections really generate {x : xe = ex} and {x : xe = e}.
    """
    return centralizer_gens(e), stabilizer_gens(e)


class StandardForm(NamedTuple):
    """The unique factorization sigma = x e y^-1 with x in D_e, y in D(e)."""
    x: Word
    e: Word
    y: Word


@lru_cache(maxsize=None)
def standard_form(sigma: Word) -> StandardForm:
    """Standard form of an element of R_n.

    y sends 1..k to the nonzero columns in increasing order (and the
    rest to the remaining columns in increasing order); x places the
    corresponding values first and the unused values after them in
    increasing order.  This is the unique choice with y minimal in
    y W(e) and x minimal in x W_e.

    >>> standard_form((0, 4, 2, 0))
    StandardForm(x=(4, 2, 1, 3), e=(1, 2, 0, 0), y=(2, 3, 1, 4))
    """
    check_element(sigma)
    n = len(sigma)
    cols = [j for j in range(1, n + 1) if sigma[j - 1]]
    k = len(cols)
    rest_cols = [j for j in range(1, n + 1) if not sigma[j - 1]]
    y = tuple(cols + rest_cols)
    vals = [sigma[j - 1] for j in cols]
    rest_vals = sorted(set(range(1, n + 1)) - set(vals))
    x = tuple(vals + rest_vals)
    return StandardForm(x, rank_idempotent(n, k), y)


def assemble(form: StandardForm) -> Word:
    """Multiply a standard form back out: x e y^-1."""
    return multiply(form.x, multiply(form.e, weyl.inverse(form.y)))


@lru_cache(maxsize=None)
def idempotent_length(n: int, k: int) -> int:
    """l(e_k) = l(w_0) - l(v_0) with v_0 longest in W(e_k)."""
    w0 = weyl.longest_element(frozenset(range(1, n)), n)
    v0 = weyl.longest_element(centralizer_gens(rank_idempotent(n, k)), n)
    return weyl.length(w0) - weyl.length(v0)


@lru_cache(maxsize=None)
def length(sigma: Word) -> int:
    """l(sigma) = l(x) + l(e) - l(y) from the standard form.

    This is the rank function of the orbit poset; it vanishes exactly on
    the minimum element of each orbit.

    >>> length((0, 4, 2, 0))
    6
    """
    x, e, y = standard_form(sigma)
    return weyl.length(x) + idempotent_length(len(sigma), rank(e)) - weyl.length(y)


@lru_cache(maxsize=None)
def orbit(n: int, k: int) -> tuple[Word, ...]:
    """The W x W orbit of e_k: all rank-k elements of R_n.

    Equals {x e_k y : x, y in W}; enumerated directly as words (domain
    columns, values, arrangement) and sorted by (length, word).
    """
    if not 0 <= k <= n:
        raise ValueError(f"rank {k} out of range for n={n}")
    elems = []
    for cols in itertools.combinations(range(n), k):
        for vals in itertools.permutations(range(1, n + 1), k):
            word = [0] * n
            for c, v in zip(cols, vals):
                word[c] = v
            elems.append(tuple(word))
    return tuple(sorted(elems, key=lambda w: (length(w), w)))


def orbit_minimum(n: int, k: int) -> Word:
    """The unique length-0 element of the orbit of e_k."""
    nu = orbit(n, k)[0]
    assert length(nu) == 0
    return nu


def orbit_maximum(n: int, k: int) -> Word:
    return orbit(n, k)[-1]


def monoid_elements(n: int) -> tuple[Word, ...]:
    """All of R_n, by increasing rank then (length, word)."""
    return tuple(w for k in range(n + 1) for w in orbit(n, k))


def parse_element(text: str) -> Word:
    """Parse an element from compact digits ('0420') or a bracketed list.

    The compact form is only unambiguous for n <= 9; the bracketed form
    '[0,4,2,0]' is accepted for all n.
    """
    text = text.strip()
    if text.startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"bad element literal {text!r}: {exc}") from exc
        if not isinstance(data, list) or not all(isinstance(a, int) for a in data):
            raise ValueError(f"bad element literal {text!r}")
        word = tuple(data)
    elif text.isdigit():
        word = tuple(int(ch) for ch in text)
    else:
        raise ValueError(f"bad element literal {text!r}")
    check_element(word)
    return word


def format_element(word: Word) -> str:
    """Compact digit string for n <= 9, bracketed list otherwise."""
    if len(word) <= 9:
        return "".join(str(a) for a in word)
    return "[" + ",".join(str(a) for a in word) + "]"


def element_to_json(word: Word) -> dict:
    return {"n": len(word), "one_line": list(word)}


def element_from_json(data: dict) -> Word:
    word = tuple(data["one_line"])
    if len(word) != data.get("n", len(word)):
        raise ValueError(f"inconsistent element record: {data!r}")
    check_element(word)
    return word

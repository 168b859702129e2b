"""Counting sign changes in a coefficient sequence.

Two independent counters are provided.  :func:`sc_literal` enumerates index
pairs ``(p, q)`` with ``a_p * a_q < 0`` and only zeros strictly between them.
:func:`sc_scan` drops the zeros and counts adjacent flips.  They must agree on
every input; the test-suite checks this exhaustively on short sign patterns.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .poly import Polynomial
from .scalar import Sign, sign_of


def sign_sequence(a: Iterable) -> list[Sign]:
    return [sign_of(x) for x in a]


def sc_literal(a: Sequence) -> int:
    n = len(a)
    count = 0
    for p in range(n):
        for q in range(p + 1, n):
            if a[p] * a[q] < 0 and all(a[i] == 0 for i in range(p + 1, q)):
                count += 1
    return count


def sc_scan(a: Iterable) -> int:
    count = 0
    prev = 0
    for x in a:
        if x > 0:
            s = 1
        elif x < 0:
            s = -1
        else:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def sc_poly(f: Polynomial) -> int:
    return sc_scan(f.coeffs)


def first_last_nonzero(a: Sequence):
    """Return the first and last nonzero entries, or ``None`` if all vanish."""
    nz = [x for x in a if x != 0]
    if not nz:
        return None
    return nz[0], nz[-1]

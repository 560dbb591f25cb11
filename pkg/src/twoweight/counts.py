"""Counting functions behind the weight computations.

``N(lam, lam1; a, b)`` counts pairs ``(x, y)`` with ``x != 0`` (and ``y != 0``
in the starred variant) satisfying ``Tr(x^(d+1) y) = lam`` and
``Tr(a x^d y + b x) = lam1``.  Each count is available by exhaustive scan
and by the closed form; the two are independent routes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import ExtensionField, legendre


class CaseError(ValueError):
    pass


@dataclass(frozen=True)
class CountQuery:
    lam: int
    lam1: int
    a: int
    b: int
    star: bool = False


@dataclass(frozen=True)
class CaseData:
    a_zero: bool
    b_zero: bool
    tr_ab: int

    @classmethod
    def of(cls, f: ExtensionField, a: int, b: int) -> "CaseData":
        return cls(a == 0, b == 0, f.trace(f.mul(a, b)))


class _Scanner:
    """Precomputed Tr(x^(d+1) y), Tr(x^d y) weights for one (field, d)."""

    def __init__(self, f: ExtensionField, d: int):
        self.f = f
        x = np.repeat(np.arange(1, f.q), f.q)
        y = np.tile(np.arange(f.q), f.q - 1)
        self.x, self.y = x, y
        self.u = f.mul_arr(y, f.pow_arr(x, d))
        self.member = f.trace_table[f.mul_arr(self.u, x)]

    def count(self, q: CountQuery) -> int:
        f = self.f
        val = f.trace_table[f.add_arr(f.mul_arr(q.a, self.u), f.mul_arr(q.b, self.x))]
        hit = (self.member == q.lam % f.p) & (val == q.lam1 % f.p)
        if q.star:
            hit &= self.y != 0
        return int(hit.sum())


_scanners: dict = {}


def count_bruteforce(f: ExtensionField, d: int, q: CountQuery) -> int:
    key = (f.p, f.m, d)
    if key not in _scanners:
        _scanners[key] = _Scanner(f, d)
    return _scanners[key].count(q)


def count_closed_form(p: int, m: int, lam: int, lam1: int, case: CaseData, star: bool = False) -> int:
    lam, lam1, t = lam % p, lam1 % p, case.tr_ab % p
    if case.a_zero and case.b_zero:
        raise CaseError("(a, b) = (0, 0) is excluded")
    if (case.a_zero or case.b_zero) and t:
        raise CaseError("Tr(ab) != 0 requires a, b both nonzero")
    s, r = p ** (2 * m - 2), p ** (m - 1)

    if star:
        if lam:
            raise CaseError("starred count is defined for lambda = 0 only")
        general = case.a_zero or t or case.b_zero
        if lam1 == 0:
            return s - 2 * r + 1 if general else s + (p - 3) * r + 1
        return s - r if general else s - 2 * r

    if lam == 0 and lam1 == 0:
        if case.a_zero or t:
            return s - r
        return s + (p - 2) * r
    if lam == 0:
        if case.a_zero or t:
            return s
        return s - r
    if lam1 == 0:
        if case.a_zero or t == 0:
            return s - r
        return s + legendre(-lam * t, p) * r
    if case.a_zero or t == 0:
        return s
    return s + legendre(lam1 * lam1 - 4 * lam * t, p) * r


def count_A(f: ExtensionField, t: int) -> tuple[int, int]:
    """``#{(a, b) : a != 0, Tr(ab) = t}``; (scan, closed form)."""
    a = np.repeat(np.arange(1, f.q), f.q)
    b = np.tile(np.arange(f.q), f.q - 1)
    scan = int((f.trace_table[f.mul_arr(a, b)] == t % f.p).sum())
    return scan, f.p ** (f.m - 1) * (f.q - 1)


def weight_frequencies_from_counts(p: int, m: int, lam: int, star: bool = False) -> dict[int, int]:
    """Rebuild a weight table by classifying (a, b) and applying the closed
    forms: zero codeword, a = 0 (b != 0), a != 0 split by Tr(ab), and for the
    starred set the extra a != 0, b = 0 split."""
    q = p ** m
    if star:
        n = p ** (2 * m - 1) - p ** m - p ** (m - 1) + 1
    else:
        n = p ** (2 * m - 1) - p ** (m - 1)
    classes = [(CaseData(True, False, 0), q - 1)]
    a_count = p ** (m - 1) * (q - 1)
    if star:
        # a != 0, b = 0 is its own case; remove it from the Tr(ab) = 0 class.
        classes.append((CaseData(False, True, 0), q - 1))
        classes.append((CaseData(False, False, 0), a_count - (q - 1)))
    else:
        classes.append((CaseData(False, False, 0), a_count))
    for t in range(1, p):
        classes.append((CaseData(False, False, t), a_count))
    freq = {0: 1}
    for case, mult in classes:
        w = n - count_closed_form(p, m, lam, 0, case, star)
        freq[w] = freq.get(w, 0) + mult
    return dict(sorted(freq.items()))

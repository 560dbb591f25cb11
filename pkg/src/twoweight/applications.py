"""Minimal codewords and the Griesmer bound."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .codes import BudgetExceeded, CodeSpec, WeightDistribution, all_codewords
from .defining_sets import Kind
from .dual import projective_normalize

MINIMALITY_BUDGET = 3 ** 6


@dataclass
class RatioReport:
    ratio: Fraction
    threshold: Fraction

    @property
    def passed(self) -> bool:
        return self.ratio > self.threshold

    def to_json(self) -> dict:
        return {"ratio": str(self.ratio), "threshold": str(self.threshold), "pass": self.passed}


def ab_ratio_check(wd: WeightDistribution, p: int) -> RatioReport:
    """w_min / w_max against (p - 1) / p, in exact rationals."""
    ws = wd.nonzero_weights()
    if not ws:
        raise ValueError("code has no nonzero weight")
    return RatioReport(Fraction(ws[0], ws[-1]), Fraction(p - 1, p))


def predicted_ratio(kind: Kind, p: int, m: int) -> Fraction:
    """w_min / w_max read off the unsimplified weight quotients."""
    r = p ** (m - 1)
    base = kind.base
    if base is Kind.D0:
        return Fraction((p - 1) * (r - 1) * r, (p - 1) * r * r)
    if base is Kind.DSTAR:
        return Fraction((p - 1) * (r - 2) * r, (p - 1) * (r - 1) * r)
    return Fraction((p - 1) * r * r - 2 * r, (p - 1) * r * r)


@dataclass
class MinimalityReport:
    nonzero: int
    minimal: int
    classes: int
    minimal_classes: int
    equal_support_pairs: int  # non-proportional pairs sharing a support
    scanned: bool = True

    @property
    def all_minimal(self) -> bool:
        return self.minimal == self.nonzero

    def to_json(self) -> dict:
        return {
            "all_minimal": self.all_minimal,
            "nonzero": self.nonzero,
            "minimal": self.minimal,
            "classes": self.classes,
            "minimal_classes": self.minimal_classes,
            "equal_support_pairs": self.equal_support_pairs,
            "scanned": self.scanned,
        }


def _dedupe(words: np.ndarray) -> np.ndarray:
    return np.unique(words, axis=0)


def minimality_scan(spec: CodeSpec, limit: int | None = None) -> MinimalityReport:
    """Pairwise support-inclusion scan over all nonzero codewords.

    A codeword covers another when its support strictly contains the
    other's support.  Scalar multiples share a support, so strict
    inclusion never relates proportional codewords.
    """
    p = spec.field.p
    limit = MINIMALITY_BUDGET if limit is None else limit
    if spec.field.q ** 2 > limit:
        raise BudgetExceeded(f"{spec.field.q ** 2} codewords exceed the minimality budget {limit}")
    words = _dedupe(all_codewords(spec))
    words = words[words.any(axis=1)]
    supp = (words != 0).astype(np.float64)
    size = supp.sum(axis=1)
    # inter[i, j] = |supp_i & supp_j|; j inside i iff inter == size_j.
    inter = supp @ supp.T
    contains = inter == size[None, :]
    strict = contains & (size[:, None] > size[None, :])
    covers = strict.any(axis=1)

    same = contains & (size[:, None] == size[None, :])
    norm = projective_normalize(words, p)
    cls, cls_idx = np.unique(norm, axis=0, return_inverse=True)
    cls_idx = np.asarray(cls_idx).ravel()
    proportional = cls_idx[:, None] == cls_idx[None, :]
    equal_support = int((same & ~proportional).sum()) // 2

    minimal_cls = len(np.unique(cls_idx[~covers]))
    return MinimalityReport(len(words), int((~covers).sum()), len(cls), minimal_cls, equal_support)


def all_minimal_bruteforce(spec: CodeSpec, limit: int | None = None) -> bool:
    return minimality_scan(spec, limit).all_minimal


@dataclass
class GriesmerReport:
    bound: int
    slack: int

    def to_json(self) -> dict:
        return {"bound": self.bound, "slack": self.slack}


def griesmer_bound(n: int, k: int, d: int, p: int) -> GriesmerReport:
    if k < 1 or d < 1:
        raise ValueError("griesmer bound needs k >= 1 and d >= 1")
    bound = sum(-(-d // p ** i) for i in range(k))
    return GriesmerReport(bound, n - bound)

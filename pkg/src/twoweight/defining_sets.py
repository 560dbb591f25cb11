"""Defining sets in GF(p^m) x GF(p^m) and their orbit-punctured versions.

The unpunctured sets are

* ``D_lambda = {(x, y) : x != 0, Tr(y x^(d+1)) = lambda}``
* ``D_star   = {(x, y) : x != 0, y != 0, Tr(y x^(d+1)) = 0}``

Puncturing keeps one representative per orbit of a scalar action on the
pairs; the representative is the orbit member with the smallest
``(x, y)`` index pair.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

import numpy as np

from .gf import ExtensionField, build_field


class Kind(enum.Enum):
    D0 = "d0"
    DLAMBDA = "dlambda"
    DSTAR = "dstar"
    PUNCTURED_D0 = "punctured-d0"
    PUNCTURED_DSTAR = "punctured-dstar"
    PUNCTURED_DLAMBDA = "punctured-dlambda"

    @property
    def punctured(self) -> bool:
        return self.value.startswith("punctured")

    @property
    def base(self) -> "Kind":
        return Kind(self.value.removeprefix("punctured-"))


class DefiningSetError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class DefiningSet:
    field: ExtensionField
    pairs: np.ndarray  # shape (n, 2): columns x, y
    kind: Kind
    d: int
    lam: int = 0

    def __post_init__(self):
        self.pairs.flags.writeable = False

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def x(self) -> np.ndarray:
        return self.pairs[:, 0]

    @property
    def y(self) -> np.ndarray:
        return self.pairs[:, 1]

    @property
    def label(self) -> str:
        f = self.field
        lam = f" lambda={self.lam}" if self.kind.base is Kind.DLAMBDA else ""
        return f"{self.kind.value} p={f.p} m={f.m} d={self.d}{lam}"

    def keys(self) -> np.ndarray:
        return self.pairs[:, 0] * self.field.q + self.pairs[:, 1]

    def as_set(self) -> set[tuple[int, int]]:
        return {(int(x), int(y)) for x, y in self.pairs}

    def to_json(self) -> dict:
        f = self.field
        return {
            "p": f.p,
            "m": f.m,
            "d": self.d,
            "kind": self.kind.value,
            "lambda": self.lam,
            "size": len(self),
            "pairs": self.pairs.tolist(),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def member_values(f: ExtensionField, x, y, d: int) -> np.ndarray:
    """Tr(y x^(d+1)) for arrays of x and y."""
    return f.trace_table[f.mul_arr(y, f.pow_arr(x, d + 1))]


def _all_pairs(f: ExtensionField):
    x = np.repeat(np.arange(1, f.q), f.q)
    y = np.tile(np.arange(f.q), f.q - 1)
    return x, y


def build_d_lambda(f: ExtensionField, d: int, lam: int) -> DefiningSet:
    if d < 1:
        raise DefiningSetError(f"d must be >= 1, got {d}")
    if not 0 <= lam < f.p:
        raise DefiningSetError(f"lambda must lie in F_{f.p}, got {lam}")
    x, y = _all_pairs(f)
    keep = member_values(f, x, y, d) == lam
    pairs = np.stack([x[keep], y[keep]], axis=1)
    kind = Kind.D0 if lam == 0 else Kind.DLAMBDA
    return DefiningSet(f, pairs, kind, d, lam)


def build_d_star(f: ExtensionField, d: int) -> DefiningSet:
    d0 = build_d_lambda(f, d, 0)
    return DefiningSet(f, d0.pairs[d0.y != 0].copy(), Kind.DSTAR, d, 0)


def _orbit_keys(s: DefiningSet, scalars: list[int]) -> np.ndarray:
    """Key array of shape (len(scalars), n) for the images (cx, cy)."""
    f = s.field
    rows = []
    for c in scalars:
        cx = f.mul_arr(c, s.x)
        cy = f.mul_arr(c, s.y)
        rows.append(cx * f.q + cy)
    return np.array(rows)


def _puncture(s: DefiningSet, scalars: list[int], kind: Kind) -> DefiningSet:
    f = s.field
    orbits = _orbit_keys(s, scalars)
    own = s.keys()
    if not np.all(np.isin(orbits, own)):
        raise DefiningSetError("scalar action does not preserve the set")
    srt = np.sort(orbits, axis=0)
    if np.any(srt[1:] == srt[:-1]):
        raise DefiningSetError("orbit with fewer than the expected number of members")
    rep = orbits.min(axis=0) == own
    pairs = s.pairs[rep].copy()
    if len(pairs) * len(scalars) != len(s):
        raise DefiningSetError("orbits do not partition the set")
    return DefiningSet(f, pairs, kind, s.d, s.lam)


def puncture_scalar_orbits(s: DefiningSet) -> DefiningSet:
    """Keep one pair per orbit of (x, y) -> (cx, cy), c in F_p^*."""
    f = s.field
    if s.kind not in (Kind.D0, Kind.DSTAR):
        raise DefiningSetError(f"scalar puncture applies to d0/dstar, not {s.kind.value}")
    if s.d % (f.p - 1):
        raise DefiningSetError(f"scalar puncture requires (p-1) | d; got p={f.p}, d={s.d}")
    kind = Kind.PUNCTURED_D0 if s.kind is Kind.D0 else Kind.PUNCTURED_DSTAR
    return _puncture(s, [f.from_prime(c) for c in range(1, f.p)], kind)


def puncture_sign_orbits(s: DefiningSet) -> DefiningSet:
    """Keep one pair per orbit {(x, y), (-x, -y)}."""
    f = s.field
    if s.kind is not Kind.DLAMBDA or s.lam == 0:
        raise DefiningSetError("sign puncture applies to dlambda with lambda != 0")
    if s.d % 2:
        raise DefiningSetError(f"sign puncture requires even d, got d={s.d}")
    return _puncture(s, [1, f.from_prime(-1)], Kind.PUNCTURED_DLAMBDA)


def expand_orbits(s: DefiningSet) -> set[tuple[int, int]]:
    """Re-apply the puncturing group to a punctured set."""
    f = s.field
    if s.kind in (Kind.PUNCTURED_D0, Kind.PUNCTURED_DSTAR):
        scalars = [f.from_prime(c) for c in range(1, f.p)]
    elif s.kind is Kind.PUNCTURED_DLAMBDA:
        scalars = [1, f.from_prime(-1)]
    else:
        raise DefiningSetError(f"{s.kind.value} is not punctured")
    keys = _orbit_keys(s, scalars).ravel()
    return {(int(k) // f.q, int(k) % f.q) for k in keys}


def default_d(kind: Kind, p: int) -> int:
    if kind in (Kind.PUNCTURED_D0, Kind.PUNCTURED_DSTAR):
        return p - 1
    if kind is Kind.PUNCTURED_DLAMBDA:
        return 2
    return 1


def construct(p: int, m: int, d: int, kind: Kind, lam: int = 0) -> DefiningSet:
    """Build any of the six defining sets from plain parameters."""
    f = build_field(p, m)
    base = kind.base
    if base is Kind.DSTAR:
        s = build_d_star(f, d)
    elif base is Kind.D0:
        s = build_d_lambda(f, d, 0)
    else:
        if lam % p == 0:
            raise DefiningSetError("dlambda requires lambda != 0 (use d0 for lambda = 0)")
        s = build_d_lambda(f, d, lam % p)
    if not kind.punctured:
        return s
    if base is Kind.DLAMBDA:
        return puncture_sign_orbits(s)
    return puncture_scalar_orbits(s)

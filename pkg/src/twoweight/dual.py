"""Generator matrices, projectivity and the first two Pless power moments."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .codes import CodeSpec, WeightDistribution
from .gf import ExtensionField


@dataclass(frozen=True, eq=False)
class GeneratorMatrix:
    p: int
    rows: np.ndarray  # (k, n) over F_p

    @property
    def k(self) -> int:
        return self.rows.shape[0]

    @property
    def n(self) -> int:
        return self.rows.shape[1]

    @property
    def columns(self) -> np.ndarray:
        return self.rows.T

    def encode(self, coeffs) -> np.ndarray:
        return (np.asarray(coeffs, dtype=np.int64) @ self.rows) % self.p

    def to_json(self) -> dict:
        return {"p": self.p, "rows": self.rows.tolist()}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def generator_matrix(spec: CodeSpec) -> GeneratorMatrix:
    """Rows ``Tr(a^k y x^d)`` (k < m) then ``Tr(a^k x)`` (k < m), where
    ``a^k`` runs over the polynomial basis.  The coefficient vector of
    ``(a, b)`` is the digit vector of a followed by that of b."""
    f = spec.field
    s = spec.set
    u = f.mul_arr(s.y, f.pow_arr(s.x, s.d))
    basis = [f.p ** k for k in range(f.m)]
    rows = [f.trace_table[f.mul_arr(e, u)] for e in basis]
    rows += [f.trace_table[f.mul_arr(e, s.x)] for e in basis]
    return GeneratorMatrix(f.p, np.array(rows, dtype=np.int64))


def param_vector(f: ExtensionField, a: int, b: int) -> np.ndarray:
    return np.concatenate([f.digits[a], f.digits[b]])


def rank_mod_p(mat: np.ndarray, p: int) -> int:
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        piv = np.nonzero(a[r:, c])[0]
        if len(piv) == 0:
            continue
        i = r + piv[0]
        a[[r, i]] = a[[i, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        others = np.nonzero(a[:, c])[0]
        others = others[others != r]
        a[others] = (a[others] - a[others, c][:, None] * a[r]) % p
        r += 1
        if r == rows:
            break
    return r


def row_space_size(g: GeneratorMatrix) -> int:
    return g.p ** rank_mod_p(g.rows, g.p)


def projective_normalize(vecs: np.ndarray, p: int) -> np.ndarray:
    """Scale each row so its first nonzero entry is 1 (zero rows stay zero)."""
    vecs = np.asarray(vecs, dtype=np.int64) % p
    nz = vecs != 0
    first = np.where(nz.any(axis=1), nz.argmax(axis=1), 0)
    lead = vecs[np.arange(len(vecs)), first]
    inv = np.array([0] + [pow(c, -1, p) for c in range(1, p)], dtype=np.int64)
    return (vecs * inv[lead][:, None]) % p


def _code(vecs: np.ndarray, p: int) -> np.ndarray:
    return vecs @ (p ** np.arange(vecs.shape[1], dtype=np.int64))


def dual_distance_upto_3(g: GeneratorMatrix) -> int:
    """Minimum distance of the dual code, resolved as 1, 2, 3 or 4 (meaning
    at least 4)."""
    p = g.p
    cols = g.columns % p
    if np.any(~cols.any(axis=1)):
        return 1
    norm = projective_normalize(cols, p)
    keys = _code(norm, p)
    if len(np.unique(keys)) < len(keys):
        return 2
    lookup = np.sort(keys)
    n = len(cols)
    for i in range(n - 1):
        rest = cols[i + 1:]
        for s in range(1, p):
            combo = (cols[i][None, :] + s * rest) % p
            # combo is never zero here: columns are pairwise independent.
            ck = _code(projective_normalize(combo, p), p)
            pos = np.searchsorted(lookup, ck)
            pos[pos == n] = 0
            if np.any(lookup[pos] == ck):
                return 3
    return 4


@dataclass
class PlessReport:
    sum_A: int
    p_k: int
    first_moment: int
    first_moment_rhs: int

    @property
    def ok(self) -> bool:
        return self.sum_A == self.p_k and self.first_moment == self.first_moment_rhs

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "sum_A": [self.sum_A, self.p_k],
            "sum_jA": [self.first_moment, self.first_moment_rhs],
        }


def pless_check(wd: WeightDistribution, p: int, a1_dual: int = 0) -> PlessReport:
    """First two power moments with ``A_1`` of the dual taken as 0 (no
    identically-zero coordinate, since (0, 0) is never in a defining set)."""
    s0 = sum(wd.counts.values())
    s1 = sum(w * c for w, c in wd.counts.items())
    if wd.k == 0:
        rhs = 0
    else:
        rhs = p ** (wd.k - 1) * (p * wd.n - wd.n - a1_dual)
    return PlessReport(s0, p ** wd.k, s1, rhs)

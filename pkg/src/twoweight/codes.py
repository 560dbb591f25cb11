"""Trace codes over a defining set and their (complete) weight enumerators.

The codeword indexed by ``(a, b)`` has coordinate ``Tr(a y x^d + b x)`` at
each pair ``(x, y)`` of the defining set, in the set's canonical order.
Enumeration runs over all ``p^(2m)`` parameter pairs; symbols come from
log/antilog and trace table lookups.  Closed-form predictors for the six
families live here as well so that enumeration and prediction can be
compared composition by composition.
"""

from __future__ import annotations

import json
import os
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .defining_sets import DefiningSet, Kind
from .gf import ExtensionField, legendre

DEFAULT_BUDGET = 1 << 33


class BudgetExceeded(RuntimeError):
    pass


class PredictionError(ValueError):
    pass


def budget(default: int = DEFAULT_BUDGET) -> int:
    env = os.environ.get("TWF_BUDGET")
    return int(float(env)) if env else default


@dataclass(frozen=True)
class CodeSpec:
    set: DefiningSet

    @property
    def field(self) -> ExtensionField:
        return self.set.field

    @property
    def n(self) -> int:
        return len(self.set)

    @property
    def k(self) -> int:
        return 2 * self.field.m

    @property
    def label(self) -> str:
        return self.set.label


@dataclass
class CompleteWeightEnumerator:
    n: int
    p: int
    terms: dict[tuple[int, ...], int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.terms.values())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "compositions": [{"t": list(t), "count": c} for t, c in sorted(self.terms.items())],
        }

    def render(self) -> str:
        parts = []
        for t, c in sorted(self.terms.items(), key=lambda kv: -kv[0][0]):
            mono = "".join(f"w_{i}^{{{e}}}" for i, e in enumerate(t) if e)
            parts.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(parts)


@dataclass
class WeightDistribution:
    n: int
    k: int
    counts: dict[int, int] = field(default_factory=dict)

    def nonzero_weights(self) -> list[int]:
        return sorted(w for w, c in self.counts.items() if w and c)

    @property
    def min_distance(self) -> int | None:
        ws = self.nonzero_weights()
        return ws[0] if ws else None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "weights": {str(w): c for w, c in sorted(self.counts.items())},
        }

    @classmethod
    def from_json(cls, doc: dict) -> "WeightDistribution":
        return cls(int(doc["n"]), int(doc["k"]), {int(w): int(c) for w, c in doc["weights"].items()})

    def render(self) -> str:
        """z-polynomial notation, e.g. ``1 +24z^{12}+56z^{18}``."""
        head = str(self.counts.get(0, 0))
        tail = "".join(f"+{c}z^{{{w}}}" for w, c in sorted(self.counts.items()) if w)
        return f"{head} {tail}" if tail else head


# -- enumeration --

def _tables(spec: CodeSpec):
    """Per-a and per-b symbol tables: Tr(a * y x^d) and Tr(b * x)."""
    f = spec.field
    s = spec.set
    u = f.mul_arr(s.y, f.pow_arr(s.x, s.d))
    elems = np.arange(f.q)[:, None]
    ta = f.trace_table[f.mul_arr(elems, u[None, :])]
    tb = f.trace_table[f.mul_arr(elems, s.x[None, :])]
    return ta.astype(np.int16), tb.astype(np.int16)


def codeword(spec: CodeSpec, a: int, b: int) -> np.ndarray:
    f = spec.field
    s = spec.set
    xd = f.pow_arr(s.x, s.d)
    inner = f.add_arr(f.mul_arr(a, f.mul_arr(s.y, xd)), f.mul_arr(b, s.x))
    return f.trace_table[inner]


def _check_budget(spec: CodeSpec, limit: int | None = None) -> None:
    work = spec.field.q ** 2 * spec.n
    limit = budget() if limit is None else limit
    if work > limit:
        raise BudgetExceeded(f"enumeration needs {work} symbol evaluations, budget is {limit}")


def iter_codeword_blocks(spec: CodeSpec):
    """Yield ``(a, block)`` where row ``b`` of ``block`` is codeword(a, b)."""
    _check_budget(spec)
    ta, tb = _tables(spec)
    p = spec.field.p
    for a in range(spec.field.q):
        yield a, (ta[a][None, :] + tb) % p


def all_codewords(spec: CodeSpec) -> np.ndarray:
    """All p^(2m) codewords as rows, row index ``a * q + b``."""
    return np.concatenate([blk for _, blk in iter_codeword_blocks(spec)]).astype(np.int8)


def _compositions(block: np.ndarray, p: int) -> np.ndarray:
    rows = block.shape[0]
    flat = block.astype(np.int64) + p * np.arange(rows)[:, None]
    return np.bincount(flat.ravel(), minlength=rows * p).reshape(rows, p)


def complete_weight_enumerator(spec: CodeSpec) -> CompleteWeightEnumerator:
    p = spec.field.p
    hist: Counter = Counter()
    for _, block in iter_codeword_blocks(spec):
        comps, mult = np.unique(_compositions(block, p), axis=0, return_counts=True)
        for t, c in zip(comps.tolist(), mult.tolist()):
            hist[tuple(t)] += c
    return CompleteWeightEnumerator(spec.n, p, dict(hist))


def kernel_size(cwe: CompleteWeightEnumerator) -> int:
    """Number of parameter pairs giving the zero codeword."""
    return cwe.terms.get((cwe.n,) + (0,) * (cwe.p - 1), 0)


def measured_dimension(cwe: CompleteWeightEnumerator, param_dim: int) -> int:
    ker = kernel_size(cwe)
    p, e = cwe.p, 0
    while ker > 1:
        if ker % p:
            raise ValueError("kernel size is not a power of p")
        ker //= p
        e += 1
    return param_dim - e


def weight_distribution(cwe: CompleteWeightEnumerator, param_dim: int | None = None) -> WeightDistribution:
    """Aggregate compositions by Hamming weight ``n - t_0``.

    ``param_dim`` is the F_p-dimension of the parameter space (2m for the
    codes here); multiplicities are divided by the kernel size so each
    codeword is counted once.
    """
    ker = kernel_size(cwe) or 1
    if param_dim is None:
        param_dim = 0
        total = cwe.total()
        while total > 1:
            total //= cwe.p
            param_dim += 1
    counts: Counter = Counter()
    for t, c in cwe.terms.items():
        counts[cwe.n - t[0]] += c
    return WeightDistribution(
        cwe.n,
        measured_dimension(cwe, param_dim),
        {w: c // ker for w, c in sorted(counts.items())},
    )


def enumerate_code(spec: CodeSpec):
    cwe = complete_weight_enumerator(spec)
    return cwe, weight_distribution(cwe, spec.k)


# -- closed forms --

def _require_m(m: int) -> None:
    if m < 2:
        raise PredictionError("theorems require m >= 2")


def code_length(kind: Kind, p: int, m: int) -> int:
    full = p ** (2 * m - 1) - p ** (m - 1)
    star = p ** (2 * m - 1) - p ** m - p ** (m - 1) + 1
    return {
        Kind.D0: full,
        Kind.DLAMBDA: full,
        Kind.DSTAR: star,
        Kind.PUNCTURED_D0: full // (p - 1),
        Kind.PUNCTURED_DSTAR: star // (p - 1),
        Kind.PUNCTURED_DLAMBDA: full // 2,
    }[kind]


def predict_wd(kind: Kind, p: int, m: int, lam: int = 0) -> WeightDistribution:
    """Two-weight distributions of the six families (m >= 2)."""
    _require_m(m)
    if kind.base is Kind.DLAMBDA and lam % p == 0:
        raise PredictionError("dlambda tables need lambda != 0")
    q, r = p ** m, p ** (m - 1)
    if kind.base is Kind.D0:
        rows = [((p - 1) * r * r, (q - 1) * (q - r + 1)), ((p - 1) * (r - 1) * r, (q - 1) * r)]
    elif kind.base is Kind.DSTAR:
        rows = [((p - 1) * (r - 1) * r, (q - 1) * (q - r + 2)), ((p - 1) * (r - 2) * r, (q - 1) * (r - 1))]
    else:
        rows = [((p - 1) * r * r, ((p + 1) // 2 * r + 1) * (q - 1)), ((q - r - 2) * r, (p - 1) // 2 * r * (q - 1))]
    if kind.punctured:
        div = 2 if kind.base is Kind.DLAMBDA else p - 1
        rows = [(w // div, c) for w, c in rows]
    counts: Counter = Counter({0: 1})
    for w, c in rows:
        counts[w] += c
    return WeightDistribution(code_length(kind, p, m), 2 * m, dict(sorted(counts.items())))


def predict_cwe(kind: Kind, p: int, m: int, lam: int = 0) -> CompleteWeightEnumerator:
    """Symbolic complete weight enumerators expanded into a histogram.

    Only the unpunctured families have closed-form enumerators.
    """
    _require_m(m)
    if kind.punctured:
        raise PredictionError("no closed-form complete weight enumerator for punctured codes")
    q, r, s = p ** m, p ** (m - 1), p ** (2 * m - 2)
    n = code_length(kind, p, m)
    hist: Counter = Counter({(n,) + (0,) * (p - 1): 1})

    def sym(t0: int, ti: int) -> tuple[int, ...]:
        return (t0,) + (ti,) * (p - 1)

    if kind is Kind.D0:
        hist[sym(s - r, s)] += (q - r + 1) * (q - 1)
        hist[sym(s + (p - 2) * r, s - r)] += r * (q - 1)
    elif kind is Kind.DSTAR:
        hist[sym(s - 2 * r + 1, (r - 1) * r)] += (q - r + 2) * (q - 1)
        hist[sym(s + (p - 3) * r + 1, (r - 2) * r)] += (r - 1) * (q - 1)
    else:
        lam %= p
        if lam == 0:
            raise PredictionError("dlambda enumerator needs lambda != 0")
        hist[sym(s - r, s)] += (r + 1) * (q - 1)
        # One family per j = Tr(ab) in F_p^*, each of size #A(j).
        for j in range(1, p):
            t = tuple(s + legendre(i * i - 4 * lam * j, p) * r for i in range(p))
            hist[t] += r * (q - 1)
    return CompleteWeightEnumerator(n, p, dict(hist))


# -- comparison --

@dataclass
class Diff:
    what: str
    n_actual: int
    n_predicted: int
    mismatches: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.n_actual == self.n_predicted

    def to_json(self) -> dict:
        return {
            "what": self.what,
            "ok": self.ok,
            "n": [self.n_actual, self.n_predicted],
            "mismatches": self.mismatches,
        }


def compare(actual, predicted) -> Diff:
    """Exact comparison of two enumerators or two weight distributions."""
    if isinstance(actual, CompleteWeightEnumerator):
        a, b, what, key = actual.terms, predicted.terms, "cwe", "composition"
    else:
        a, b, what, key = actual.counts, predicted.counts, "weights", "weight"
    out = Diff(what, actual.n, predicted.n)
    for t in sorted(set(a) | set(b)):
        x, y = a.get(t, 0), b.get(t, 0)
        if x != y:
            out.mismatches.append({key: list(t) if isinstance(t, tuple) else t, "actual": x, "predicted": y})
    if isinstance(actual, WeightDistribution) and actual.k != predicted.k:
        out.mismatches.append({"dimension": True, "actual": actual.k, "predicted": predicted.k})
    return out


def dumps(obj) -> str:
    return json.dumps(obj.to_json(), sort_keys=True)

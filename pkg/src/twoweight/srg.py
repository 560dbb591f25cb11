"""Cayley graphs from projective two-weight codes and their SRG parameters.

Vertices are the vectors of F_p^k, encoded as base-p integers with the
first coordinate least significant.  ``u ~ v`` iff ``u - v`` is a nonzero
multiple of a generator-matrix column.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse.csgraph import connected_components

from .dual import GeneratorMatrix

GRAPH_BUDGET = 3 ** 6


class GraphError(ValueError):
    pass


@dataclass
class SrgReport:
    N: int
    K: int
    lam: int
    mu: int
    verified: bool | None
    source: str = ""
    weights_used: tuple[int, int] | None = None
    notes: dict = field(default_factory=dict)
    counterexample: tuple[int, int] | None = None

    @property
    def params(self) -> tuple[int, int, int, int]:
        return (self.N, self.K, self.lam, self.mu)

    def feasible(self) -> bool:
        return self.K * (self.K - self.lam - 1) == (self.N - self.K - 1) * self.mu

    def to_json(self) -> dict:
        doc = {
            "N": self.N,
            "K": self.K,
            "lambda": self.lam,
            "mu": self.mu,
            "verified": self.verified,
            "source": self.source,
            "feasible": self.feasible(),
        }
        if self.weights_used is not None:
            doc["weights"] = list(self.weights_used)
        if self.counterexample is not None:
            doc["counterexample"] = list(self.counterexample)
        if self.notes:
            doc["notes"] = self.notes
        return doc

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _encode(vecs: np.ndarray, p: int) -> np.ndarray:
    return np.asarray(vecs, dtype=np.int64) @ (p ** np.arange(vecs.shape[-1], dtype=np.int64))


def _decode(idx: np.ndarray, p: int, k: int) -> np.ndarray:
    return (np.asarray(idx)[:, None] // p ** np.arange(k)) % p


def build_omega(g: GeneratorMatrix) -> np.ndarray:
    """Sorted codes of all nonzero multiples of all columns."""
    cols = g.columns % g.p
    if np.any(~cols.any(axis=1)):
        raise GraphError("generator matrix has a zero column")
    mults = [(c * cols) % g.p for c in range(1, g.p)]
    return np.unique(_encode(np.concatenate(mults), g.p))


def build_graph(omega: np.ndarray, p: int, k: int, limit: int = GRAPH_BUDGET) -> np.ndarray:
    """Dense boolean adjacency of the Cayley graph on F_p^k."""
    if len(omega) == 0:
        raise GraphError("empty connection set")
    n = p ** k
    if n > limit:
        raise GraphError(f"{n} vertices exceed the graph budget {limit}")
    verts = _decode(np.arange(n), p, k)
    conn = np.zeros(n, dtype=bool)
    conn[omega] = True
    # vertex index of u - v for every pair
    diff = _encode((verts[:, None, :] - verts[None, :, :]) % p, p)
    return conn[diff]


def verify_srg(adj: np.ndarray, source: str = "", slow: bool = False) -> SrgReport:
    """Check A^2 = K I + lam A + mu (J - I - A) exactly.

    With ``slow`` the common-neighbour counts are taken pair by pair instead.
    """
    n = len(adj)
    deg = adj.sum(axis=1)
    K = int(deg[0])
    if not np.all(deg == K) or not np.array_equal(adj, adj.T) or adj.diagonal().any():
        return SrgReport(n, K, -1, -1, False, source, notes={"reason": "not a regular simple graph"})
    if connected_components(adj, directed=False)[0] != 1:
        return SrgReport(n, K, -1, -1, False, source, notes={"reason": "disconnected"})
    if slow:
        common = np.array([[int(np.count_nonzero(adj[i] & adj[j])) for j in range(n)] for i in range(n)])
    else:
        a = adj.astype(np.float64)
        common = np.rint(a @ a).astype(np.int64)
    off = ~np.eye(n, dtype=bool)
    on_edge = common[adj]
    off_edge = common[~adj & off]
    if len(off_edge) == 0:
        return SrgReport(n, K, int(on_edge[0]), 0, False, source, notes={"reason": "complete graph, mu undefined"})
    lam, mu = int(on_edge[0]), int(off_edge[0])
    bad_edge = adj & (common != lam)
    bad_non = ~adj & off & (common != mu)
    for bad in (bad_edge, bad_non):
        if bad.any():
            i, j = np.argwhere(bad)[0]
            return SrgReport(n, K, lam, mu, False, source, counterexample=(int(i), int(j)))
    if mu == 0:
        return SrgReport(n, K, lam, mu, False, source, notes={"reason": "mu = 0"})
    return SrgReport(n, K, lam, mu, True, source)


def srg_eigenvalues(K: int, lam: int, mu: int) -> tuple[float, float]:
    disc = (lam - mu) ** 2 + 4 * (K - mu)
    root = disc ** 0.5
    return ((lam - mu + root) / 2, (lam - mu - root) / 2)


def spectral_check(adj: np.ndarray, report: SrgReport) -> bool:
    """(A - rI)(A - sI) equals (K - r)(K - s)/N times the all-ones matrix.

    Only integral r, s are handled; the check is exact integer arithmetic.
    """
    r, s = srg_eigenvalues(report.K, report.lam, report.mu)
    if r != int(r) or s != int(s):
        return False
    r, s = int(r), int(s)
    n = len(adj)
    a = adj.astype(np.float64)
    eye = np.eye(n)
    prod = np.rint((a - r * eye) @ (a - s * eye)).astype(np.int64)
    target = (report.K - r) * (report.K - s)
    return bool(np.all(prod * n == target))


def predict_srg_params(n: int, k: int, w1: int, w2: int, p: int, source: str = "") -> SrgReport:
    N = p ** k
    K = (p - 1) * n
    lam = K * K + 3 * K - p * (w1 + w2) - K * p * (w1 + w2) + p * p * w1 * w2
    mu = K * K + K - K * p * (w1 + w2) + p * p * w1 * w2
    return SrgReport(N, K, lam, mu, None, source, weights_used=(w1, w2))


def printed_srg_params(family: str, p: int, m: int) -> tuple[int, int, int, int]:
    """The specialized closed forms as printed for the two graph families."""
    r = p ** (m - 1)
    N = p ** (2 * m)
    if family == "d0":
        return (N, p ** (2 * m - 1) - r, r * r + p ** m - 3 * r, r * r - r)
    if family == "dstar":
        return (N, p ** (2 * m - 1) - p ** m - r - 1, r * r + p ** m - 5 * r + 4, (r - 1) * (r - 2))
    raise ValueError(family)

"""Independent brute-force oracles used to pin expected values.

Everything here is deliberately naive: vertex enumeration by active-set
combinations, recession-ray enumeration for unboundedness, and direct
formula recomputation.  None of it shares code with the library under test.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

TOL = 1e-7


def enumerate_vertices(rows, rels, rhs, n):
    """All basic feasible points of {a_i'x rel b_i, x >= 0}.

    Candidate vertices are solutions of n active hyperplanes chosen among
    the constraint rows and the coordinate planes x_j = 0.
    """
    rows = np.asarray(rows, dtype=float).reshape(len(rels), n)
    rhs = np.asarray(rhs, dtype=float)
    planes = np.vstack([rows, np.eye(n)])
    offsets = np.concatenate([rhs, np.zeros(n)])
    total = planes.shape[0]

    combos = list(itertools.combinations(range(total), n))
    mats = np.stack([planes[list(c)] for c in combos])
    vecs = np.stack([offsets[list(c)] for c in combos])
    dets = np.abs(np.linalg.det(mats))
    vertices = []
    solvable = dets > 1e-10
    if solvable.any():
        sols = np.linalg.solve(mats[solvable], vecs[solvable][..., None])[..., 0]
        for x in sols:
            if np.any(x < -TOL):
                continue
            ax = rows @ x
            ok = True
            for i, rel in enumerate(rels):
                if rel == "<=" and ax[i] > rhs[i] + TOL:
                    ok = False
                elif rel == ">=" and ax[i] < rhs[i] - TOL:
                    ok = False
                elif rel == "=" and abs(ax[i] - rhs[i]) > TOL:
                    ok = False
                if not ok:
                    break
            if ok:
                vertices.append(x)
    return vertices


def has_improving_ray(rows, rels, c, n, sense):
    """True iff the recession cone contains a direction improving c'x.

    Extreme rays are vertices of the cone sliced by sum(d) = 1.
    """
    rows = np.asarray(rows, dtype=float).reshape(len(rels), n)
    ray_rows = np.vstack([rows, np.ones((1, n))])
    ray_rels = [{"<=": "<=", ">=": ">=", "=": "="}[r] for r in rels] + ["="]
    ray_rhs = np.concatenate([np.zeros(len(rels)), [1.0]])
    for d in enumerate_vertices(ray_rows, ray_rels, ray_rhs, n):
        gain = float(np.dot(c, d))
        if sense == "maximize" and gain > TOL:
            return True
        if sense == "minimize" and gain < -TOL:
            return True
    return False


def brute_force_lp(sense, c, constraints, n):
    """Reference solve: (status, best_value, best_point)."""
    rows = [co for co, _, _ in constraints]
    rels = [r for _, r, _ in constraints]
    rhs = [b for _, _, b in constraints]
    vertices = enumerate_vertices(rows, rels, rhs, n)
    if not vertices:
        return "infeasible", None, None
    if has_improving_ray(rows, rels, c, n, sense):
        return "unbounded", None, None
    values = [float(np.dot(c, v)) for v in vertices]
    best = max(values) if sense == "maximize" else min(values)
    best_point = vertices[int(np.argmax(values) if sense == "maximize" else np.argmin(values))]
    return "optimal", best, best_point


def entropy_pipeline(interval_rows, orientations):
    """Direct recomputation of the normalization/deviation/entropy/weight chain.

    ``interval_rows`` is a list of rows, each row a list of (lower, upper)
    pairs (one per sample point).
    """
    l = len(interval_rows[0])
    normalized = []
    for row, kind in zip(interval_rows, orientations):
        top = max(u for _, u in row)
        bottom = min(lo for lo, _ in row)
        spread = top - bottom
        if kind == "benefit":
            normalized.append([((lo - bottom) / spread, (u - bottom) / spread) for lo, u in row])
        else:
            normalized.append([((top - u) / spread, (top - lo) / spread) for lo, u in row])

    def d(a, b):
        return abs(a[0] - b[0]) + abs(a[1] - b[1])

    entropies = []
    deviations = []
    for row in normalized:
        per_point = [sum(d(row[t], row[s]) for s in range(l)) for t in range(l)]
        total = sum(per_point)
        ent = -(1.0 / math.log(l)) * sum(
            (dt / total) * math.log(dt / total) for dt in per_point if dt > 0
        )
        entropies.append(ent)
        deviations.append((per_point, total))
    denom = sum(1 - e for e in entropies)
    weights = [(1 - e) / denom for e in entropies]
    return normalized, deviations, entropies, weights

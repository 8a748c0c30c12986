"""Exhaustive enumeration oracles used by the test suite.

Maps are generated as gluings of labeled polygons: a distinguished root face
(degree p, absent for sphere triangulations) plus n labeled triangles, with a
perfect matching of the polygon sides.  Every rooted map arises from exactly
``n! * 3**n`` labeled gluings (rooted maps have no automorphisms fixing the
root dart), so weighted counts divide out exactly.  Spin sums run over all
assignments of the non-boundary vertices with boundary spins forced up.

This is deliberately independent of every generating-function identity in the
package: only Euler's relation and face tracing are used.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


def _perfect_matchings(items):
    if not items:
        yield []
        return
    first = items[0]
    for i in range(1, len(items)):
        rest = items[1:i] + items[i + 1:]
        for rest_match in _perfect_matchings(rest):
            yield [(first, items[i])] + rest_match


def _glue(faces, pairing, n_darts):
    """Return (n_vertices, vertex_of_dart, connected) for one gluing."""
    phi = [0] * n_darts
    for face in faces:
        for i, d in enumerate(face):
            phi[d] = face[(i + 1) % len(face)]
    alpha = [0] * n_darts
    for a, b in pairing:
        alpha[a] = b
        alpha[b] = a
    # vertices = cycles of alpha o phi
    vertex_of = [-1] * n_darts
    n_v = 0
    for start in range(n_darts):
        if vertex_of[start] >= 0:
            continue
        d = start
        while vertex_of[d] < 0:
            vertex_of[d] = n_v
            d = alpha[phi[d]]
        n_v += 1
    # connectivity via orbits of <phi, alpha>
    seen = [False] * n_darts
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        d = stack.pop()
        for e in (phi[d], alpha[d]):
            if not seen[e]:
                seen[e] = True
                count += 1
                stack.append(e)
    return n_v, vertex_of, count == n_darts


def _spin_polynomial(n_vertices, edges, forced_up):
    """Coefficients (in the monochromatic count) of the spin sum.

    Returns an integer vector c with ``sum_m c[m] nu^m`` the sum over all spin
    assignments extending the forced-up set.
    """
    free = [v for v in range(n_vertices) if v not in forced_up]
    coeffs = np.zeros(len(edges) + 1, dtype=np.int64)
    for mask in range(1 << len(free)):
        spin = [True] * n_vertices
        for i, v in enumerate(free):
            spin[v] = bool(mask >> i & 1)
        m = sum(1 for a, b in edges if spin[a] == spin[b])
        coeffs[m] += 1
    return coeffs


def _accumulate(faces, n_darts, root_face_darts, require_simple, bucket):
    """Sum spin polynomials over all valid gluings into ``bucket`` (dict by #edges)."""
    darts = list(range(n_darts))
    n_edges = n_darts // 2
    n_faces = len(faces)
    for pairing in _perfect_matchings(darts):
        if require_simple and any(a in root_face_darts and b in root_face_darts
                                  for a, b in pairing):
            continue
        n_v, vertex_of, connected = _glue(faces, pairing, n_darts)
        if not connected or n_v - n_edges + n_faces != 2:
            continue
        if require_simple:
            boundary_tails = {vertex_of[d] for d in root_face_darts}
            if len(boundary_tails) != len(root_face_darts):
                continue
        alpha = {}
        for a, b in pairing:
            alpha[a] = b
            alpha[b] = a
        edges = [(vertex_of[a], vertex_of[alpha[a]]) for a in darts if a < alpha[a]]
        forced = {vertex_of[d] for d in root_face_darts}
        bucket.setdefault(n_edges, np.zeros(n_edges + 1, dtype=np.int64))
        poly = _spin_polynomial(n_v, edges, forced)
        bucket[n_edges][: poly.size] += poly


def _symmetry_factor(n_triangles):
    f = 1
    for i in range(2, n_triangles + 1):
        f *= i
    return f * 3 ** n_triangles


@lru_cache(maxsize=None)
def boundary_series(p, max_triangles, simple):
    """Spin-weighted counts of triangulations with a boundary of length p.

    Returns ``{n_edges: coeffs}`` where ``coeffs[m]`` counts maps+spins with
    that many edges and m monochromatic edges, boundary all spin-up.  With
    ``simple=True`` the root face must be bounded by a simple cycle (distinct
    vertices and edges).
    """
    out = {}
    for n_tri in range(0, max_triangles + 1):
        n_darts = p + 3 * n_tri
        if n_darts % 2:
            continue
        faces = [tuple(range(p))]
        for t in range(n_tri):
            base = p + 3 * t
            faces.append((base, base + 1, base + 2))
        bucket = {}
        _accumulate(faces, n_darts, frozenset(range(p)), simple, bucket)
        sym = _symmetry_factor(n_tri)
        for n_e, poly in bucket.items():
            if np.any(poly % sym):
                raise AssertionError("symmetry factor does not divide the count")
            out[n_e] = out.get(n_e, np.zeros(1, dtype=np.int64))
            if out[n_e].size < poly.size:
                out[n_e] = np.pad(out[n_e], (0, poly.size - out[n_e].size))
            out[n_e][: poly.size] += poly // sym
    return out


@lru_cache(maxsize=None)
def sphere_series(max_triangles):
    """Spin-weighted counts of sphere triangulations with a monochromatic up root edge.

    Rooted at a distinguished triangle side; the symmetry factor is
    ``(n-1)! 3**(n-1)``.
    """
    out = {}
    for n_tri in range(2, max_triangles + 1):
        n_darts = 3 * n_tri
        if n_darts % 2:
            continue
        faces = [tuple(range(3 * t, 3 * t + 3)) for t in range(n_tri)]
        bucket = {}
        # forced-up vertices: both ends of the root dart 0; handled by passing
        # the root dart and its alpha-image tail as "boundary" per gluing, so
        # accumulate manually here.
        darts = list(range(n_darts))
        for pairing in _perfect_matchings(darts):
            n_v, vertex_of, connected = _glue(faces, pairing, n_darts)
            if not connected or n_v - n_darts // 2 + n_tri != 2:
                continue
            alpha = {}
            for a, b in pairing:
                alpha[a] = b
                alpha[b] = a
            edges = [(vertex_of[a], vertex_of[alpha[a]]) for a in darts if a < alpha[a]]
            forced = {vertex_of[0], vertex_of[alpha[0]]}
            poly = _spin_polynomial(n_v, edges, forced)
            bucket.setdefault(n_darts // 2, np.zeros(n_darts // 2 + 1, dtype=np.int64))
            bucket[n_darts // 2][: poly.size] += poly
        sym = _symmetry_factor(n_tri) // (n_tri * 3)
        for n_e, poly in bucket.items():
            if np.any(poly % sym):
                raise AssertionError("symmetry factor does not divide the count")
            out[n_e] = poly // sym
    return out


def eval_series(bucket, nu):
    """Evaluate ``{n_edges: spin-polynomial}`` at a coupling: ``{n_edges: value}``."""
    return {n_e: float(np.polynomial.polynomial.polyval(nu, poly.astype(float)))
            for n_e, poly in bucket.items()}

#!/usr/bin/env python3
"""Regenerates the golden inputs under data/golden."""

import json
import math
import os
from fractions import Fraction

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data", "golden")


def q(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def write(name, filename, obj):
    d = os.path.join(ROOT, name)
    os.makedirs(d, exist_ok=True)
    with open(os.path.join(d, filename), "w") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")


def complex_json(facets):
    facets = sorted(tuple(sorted(f)) for f in facets)
    vertices = sorted({v for f in facets for v in f})
    return {"vertices": vertices, "facets": [list(f) for f in facets]}


def values_json(k, values, symbolic=False):
    out = {"k": k, "values": {str(v): [q(c) for c in p] for v, p in sorted(values.items())}}
    if symbolic:
        out["symbolic_perturbation"] = True
    return out


def octahedron():
    m, a, b, c, d, w = range(6)
    tris = [(m, a, b), (m, b, c), (m, c, d), (m, d, a), (w, a, b), (w, b, c), (w, c, d), (w, d, a)]
    heights = {m: 10, a: 3, b: 2, c: 1, d: 4, w: -10}
    write("octahedron", "complex.json", complex_json(tris))
    write("octahedron", "values.json", values_json(1, {v: [h] for v, h in heights.items()}))


def torus_grid(nu, nv):
    def vid(i, j):
        return (i % nu) * nv + (j % nv)

    tris = []
    for i in range(nu):
        for j in range(nv):
            tris.append((vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)))
            tris.append((vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)))
    return vid, tris


def torus():
    # Torus standing on its side: height (R + r cos v) sin u, rounded to
    # rationals, with a small index-dependent offset to separate ties.
    nu, nv = 8, 6
    vid, tris = torus_grid(nu, nv)
    values = {}
    for i in range(nu):
        for j in range(nv):
            u = 2 * math.pi * i / nu
            v = 2 * math.pi * j / nv
            h = Fraction(round((3 + math.cos(v)) * math.sin(u) * 1000), 1000)
            values[vid(i, j)] = [h + Fraction(i * nv + j, 100000)]
    write("torus", "complex.json", complex_json(tris))
    write("torus", "values.json", values_json(1, values))


def torus_patch():
    # Disk around a monkey saddle: six ring vertices alternating above and
    # below the centre.
    p = 0
    ring = [1, 2, 3, 4, 5, 6]
    heights = {p: 0, 1: 1, 2: -1, 3: 2, 4: -2, 5: 3, 6: -3}
    tris = [(p, ring[i], ring[(i + 1) % 6]) for i in range(6)]
    write("torus_patch", "complex.json", complex_json(tris))
    write("torus_patch", "values.json", values_json(1, {v: [h] for v, h in heights.items()}))
    write("torus_patch", "designated.json", {"saddle": p})


def tetrahedron():
    pts = {0: (0, 0), 1: (4, 0), 2: (5, 3), 3: (1, 4)}
    write("tetrahedron", "complex.json", complex_json([(0, 1, 2, 3)]))
    write("tetrahedron", "values.json", values_json(2, {v: list(p) for v, p in pts.items()}))


def suspension():
    n, s = 0, 5
    eq = [1, 2, 3, 4]
    tris = []
    for i in range(4):
        tris.append((n, eq[i], eq[(i + 1) % 4]))
        tris.append((s, eq[i], eq[(i + 1) % 4]))
    heights = {n: 0, s: 0, 1: 1, 2: -1, 3: 1, 4: -1}
    write("suspension", "complex.json", complex_json(tris))
    write("suspension", "values.json", values_json(1, {v: [h] for v, h in heights.items()}, symbolic=True))


def simplex4_boundary():
    verts = range(5)
    facets = [tuple(v for v in verts if v != skip) for skip in verts]
    pts = {0: (0, 0), 1: (5, 0), 2: (7, 4), 3: (3, 7), 4: (-1, 4)}
    write("sphere3_pentagon", "complex.json", complex_json(facets))
    write("sphere3_pentagon", "values.json", values_json(2, {v: list(p) for v, p in pts.items()}))


def cusps_crossing():
    F = Fraction
    s1 = [(1, 12), (F(3, 5), 12), (F(1, 10), 5), (F(1, 2), 3), (F(9, 10), 7), (F(2, 5), F(21, 2)), (0, 10)]
    s2 = [(0, 0), (F(1, 2), -1), (1, 0)]
    write("cusps_crossing", "locus.json", {
        "strands": [[[q(x), q(y)] for x, y in s] for s in (s1, s2)],
        "cusps": [[0, 2], [0, 4]],
    })


def convex_loop():
    loop = [(0, 0), (2, -1), (4, 0), (2, 1), (0, 0)]
    write("convex_loop", "locus.json", {"strands": [[[q(x), q(y)] for x, y in loop]], "cusps": []})


if __name__ == "__main__":
    octahedron()
    torus()
    torus_patch()
    tetrahedron()
    suspension()
    simplex4_boundary()
    cusps_crossing()
    convex_loop()

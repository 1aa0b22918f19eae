#!/usr/bin/env python3
"""Generate the quadrilateral surface meshes used by the test suite.

Each mesh is written in the .qm format understood by the library:
  line 1:  v E F
  E lines: endpoints of one edge (0-based vertex ids, sorted canonically)
  F lines: four signed 1-based edge indices tracing the face boundary.

Meshes:
  torus_5x5.qm  5x5 grid with both directions wrapped (torus).
  rp2_5x5.qm    5x5 grid disk with antipodal boundary identification
                (projective plane, 25 faces).
  z3_6x6.qm     6x6 grid disk whose 24-edge boundary wraps three times
                around an 8-edge core circle (first homology Z_3).
"""

import os


def emit(path, vclass_of, raw_edges, raw_faces):
    """vclass_of: raw vertex -> class key; raw_edges: list of sets of raw
    (a, b) vertex pairs glued into one edge; raw_faces: list of 4-tuples of
    raw directed edges ((a, b) traversed a->b)."""
    vkeys = sorted({vclass_of(v) for e in raw_edges for ab in e for v in ab})
    vid = {k: i for i, k in enumerate(vkeys)}

    edge_class = {}  # directed raw pair -> (edge list index, +1/-1)
    endpoints = []
    for idx, group in enumerate(raw_edges):
        rep = None
        for (a, b) in group:
            ca, cb = vid[vclass_of(a)], vid[vclass_of(b)]
            if ca == cb:
                raise ValueError("self-loop after identification")
            if rep is None:
                rep = (min(ca, cb), max(ca, cb))
                endpoints.append(rep)
            if (min(ca, cb), max(ca, cb)) != rep:
                raise ValueError("inconsistent endpoints inside a glued class")
            edge_class[(a, b)] = (idx, +1 if ca < cb else -1)
            edge_class[(b, a)] = (idx, -1 if ca < cb else +1)

    order = sorted(range(len(endpoints)), key=lambda i: endpoints[i])
    if len(set(endpoints)) != len(endpoints):
        raise ValueError("two edge classes share endpoints (multi-edge)")
    newpos = {old: new for new, old in enumerate(order)}

    lines = [f"{len(vkeys)} {len(endpoints)} {len(raw_faces)}"]
    for i in order:
        lines.append(f"{endpoints[i][0]} {endpoints[i][1]}")
    for face in raw_faces:
        ids = []
        for (a, b) in face:
            idx, sign = edge_class[(a, b)]
            ids.append(sign * (newpos[idx] + 1))
        lines.append(" ".join(str(x) for x in ids))
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")
    print(f"{os.path.basename(path)}: v={len(vkeys)} E={len(endpoints)} "
          f"F={len(raw_faces)}")


def torus(n):
    def vc(v):
        return (v[0] % n, v[1] % n)

    edges, seen = [], {}
    for i in range(n):
        for j in range(n):
            for d in ((0, 1), (1, 0)):
                a, b = (i, j), vc((i + d[0], j + d[1]))
                key = frozenset((vc(a), b))
                if key not in seen:
                    seen[key] = True
                    edges.append({(vc(a), b)})
    faces = []
    for i in range(n):
        for j in range(n):
            c = [vc((i, j)), vc((i, j + 1)), vc((i + 1, j + 1)), vc((i + 1, j))]
            faces.append(tuple((c[t], c[(t + 1) % 4]) for t in range(4)))
    return vc, edges, faces


def boundary_positions(n):
    """Vertices of the n x n grid boundary in cyclic order from (0,0)."""
    pos = []
    for j in range(n):
        pos.append((0, j))
    for i in range(n):
        pos.append((i, n))
    for j in range(n, 0, -1):
        pos.append((n, j))
    for i in range(n, 0, -1):
        pos.append((i, 0))
    return pos  # length 4n


def disk_quotient(n, vertex_quotient, edge_partner_shift):
    """n x n grid disk; boundary vertices identified by vertex_quotient,
    boundary edges glued in groups related by edge_partner_shift positions."""
    pos = boundary_positions(n)
    where = {p: t for t, p in enumerate(pos)}
    total = len(pos)

    def vc(v):
        if v in where:
            return ("b", vertex_quotient(where[v]))
        return ("i", v)

    groups = {}  # canonical boundary position -> set of raw pairs
    edges = []
    for i in range(n + 1):
        for j in range(n + 1):
            for d in ((0, 1), (1, 0)):
                a, b = (i, j), (i + d[0], j + d[1])
                if b[0] > n or b[1] > n:
                    continue
                if a in where and b in where and (
                        (where[b] - where[a]) % total in (1, total - 1)):
                    t = where[a] if (where[b] - where[a]) % total == 1 else where[b]
                    key = t % edge_partner_shift
                    groups.setdefault(key, set()).add(
                        (pos[t], pos[(t + 1) % total]))
                else:
                    edges.append({(a, b)})
    edges.extend(groups[k] for k in sorted(groups))

    faces = []
    for i in range(n):
        for j in range(n):
            c = [(i, j), (i, j + 1), (i + 1, j + 1), (i + 1, j)]
            faces.append(tuple((c[t], c[(t + 1) % 4]) for t in range(4)))
    return vc, edges, faces


def main():
    out = os.path.dirname(os.path.abspath(__file__))

    vc, e, f = torus(5)
    emit(os.path.join(out, "torus_5x5.qm"), vc, e, f)

    # Projective plane: antipodal identification of the 20-position boundary.
    vc, e, f = disk_quotient(5, lambda t: t % 10, 10)
    emit(os.path.join(out, "rp2_5x5.qm"), vc, e, f)

    # Boundary of length 24 wrapped three times around 8 positions.
    vc, e, f = disk_quotient(6, lambda t: t % 8, 8)
    emit(os.path.join(out, "z3_6x6.qm"), vc, e, f)


if __name__ == "__main__":
    main()

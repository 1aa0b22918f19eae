#!/usr/bin/env python3
"""Regenerates reference_tables.json.

The values are published reference groups for the graph families bundled
with the library (see README).  Each table row names a family member and a
list of cells; a cell pins the expected group of H^{1,j} (or just its
torsion) in one grading j.  Cells with "group": null carry no reference
value and are computed for display only.  Cells marked "conjectured" come
from a conjectural formula rather than a reported computation.
"""

import json
import math
import os


def group(rank, *factors):
    """Normalize a list of cyclic orders into invariant-factor form."""
    primary = {}
    for d in factors:
        assert d > 1
        for p in (2, 3, 5, 7, 11, 13):
            e = 0
            while d % p == 0:
                d //= p
                e += 1
            if e:
                primary.setdefault(p, []).append(p**e)
        assert d == 1, "add more primes"
    depth = max((len(v) for v in primary.values()), default=0)
    chain = [1] * depth
    for p, powers in primary.items():
        powers.sort(reverse=True)
        for slot, q in enumerate(powers):
            chain[depth - 1 - slot] *= q
    return {"rank": rank, "invariant_factors": chain}


def tor(*factors):
    return group(0, *factors)


ZERO = group(0)


def cell(j, grp, torsion_only=False, graph=None, conjectured=False, note=None):
    c = {"j": j, "torsion_only": torsion_only, "group": grp}
    if graph is not None:
        c["graph"] = graph
    if conjectured:
        c["conjectured"] = True
    if note is not None:
        c["note"] = note
    return c


def pt_table():
    # Triangle glued to a k-gon along an edge; v = k + 1.  Four torsion
    # columns below the top grading plus the full top group.
    torsion_rows = {
        3: [[], [], [], []],
        4: [[], [], [], [3, 3]],
        5: [[], [], [3, 3], [3, 3, 3, 3]],
        6: [[], [3], [3] * 5, [3] * 4],
        7: [[3], [3] * 6, [3] * 10, [3] * 5],
        8: [[3] * 6, [3] * 15, [3] * 14, [3] * 6],
    }
    top_rows = {
        3: group(1, 3, 3),
        4: group(1, 3),
        5: group(0, 3),
        6: group(0, 3),
        7: group(0, 3),
        8: group(0, 3),
    }
    notes = {
        (3, 3): ("published value; direct computation gives torsion Z_3 "
                 "(full group Z_3 + Z^3), cross-checked by two independent "
                 "implementations"),
    }
    rows = []
    for k in sorted(torsion_rows):
        v = k + 1
        js = [2 * v - 7, 2 * v - 6, 2 * v - 5, 2 * v - 4]
        cells = [cell(j, tor(*f), torsion_only=True, note=notes.get((k, idx)))
                 for idx, (j, f) in enumerate(zip(js, torsion_rows[k]))]
        cells.append(cell(2 * v - 3, top_rows[k]))
        rows.append({"label": f"k={k}", "graph": f"Pt:{k}", "cells": cells})
    return {
        "id": "pt",
        "title": "Triangle glued to a k-gon: torsion near the top grading",
        "m": 3,
        "columns": ["tor H^{1,2v-7}", "tor H^{1,2v-6}", "tor H^{1,2v-5}",
                    "tor H^{1,2v-4}", "H^{1,2v-3}"],
        "rows": rows,
    }


def gts_table():
    # Triangle glued to a chain of k squares; v = 3 + 2k.
    torsion_rows = {
        1: [[], [], [3, 3]],
        2: [[], [3] * 4, [3] * 4],
        3: [[3] * 8, [3] * 12, [3] * 6],
        4: [[3] * 32, [3] * 24, [3] * 8],
    }
    rows = []
    for k in sorted(torsion_rows):
        v = 3 + 2 * k
        js = [2 * v - 6, 2 * v - 5, 2 * v - 4]
        cells = [cell(j, tor(*f), torsion_only=True)
                 for j, f in zip(js, torsion_rows[k])]
        cells.append(cell(2 * v - 3, group(k, 3)))
        rows.append({"label": f"k={k}", "graph": f"Gts:{k}", "cells": cells})
    return {
        "id": "gts",
        "title": "Triangle glued to a chain of squares: torsion near the top",
        "m": 3,
        "columns": ["tor H^{1,2v-6}", "tor H^{1,2v-5}", "tor H^{1,2v-4}",
                    "H^{1,2v-3}"],
        "rows": rows,
    }


def wheels_table():
    # Three torsion columns below the top grading plus the full top group.
    torsion_rows = {
        4: [[], [], []],
        5: [[], [], [3, 3, 3]],
        6: [[], [], [3] * 5],
        7: [[], [3, 3], [3] * 9],
        8: [[], [3] * 7, [3] * 14],
        9: [[3] * 5, [3] * 20, [3] * 21],
    }
    top_rows = {
        4: group(2, 3, 3, 6),
        5: group(5, 3, 3, 3),
        6: group(5, 3, 3, 3, 3, 6),
        7: group(7, *[3] * 5),
        8: group(7, *([3] * 6 + [6])),
        9: group(9, *[3] * 7),
    }
    notes = {
        (5, 2): ("published value; direct computation gives torsion Z_3^2 "
                 "(full group Z_3^2 + Z^11), cross-checked by two "
                 "independent implementations"),
        (9, 0): ("published value; direct computation gives torsion Z_3^2 "
                 "(full group Z_3^2 + Z^98), cross-checked by an "
                 "independent mod-p rank computation"),
        (9, 1): ("published value; direct computation gives torsion Z_3^16 "
                 "(full group Z_3^16 + Z^136), cross-checked by an "
                 "independent mod-p rank computation"),
        (9, 2): ("published value; direct computation gives torsion Z_3^20 "
                 "(full group Z_3^20 + Z^68), cross-checked by an "
                 "independent mod-p rank computation"),
    }
    rows = []
    for n in sorted(torsion_rows):
        v = n
        js = [2 * v - 6, 2 * v - 5, 2 * v - 4]
        cells = [cell(j, tor(*f), torsion_only=True, note=notes.get((n, idx)))
                 for idx, (j, f) in enumerate(zip(js, torsion_rows[n]))]
        cells.append(cell(2 * v - 3, top_rows[n]))
        rows.append({"label": f"n={n}", "graph": f"W:{n}", "cells": cells})
    return {
        "id": "wheels",
        "title": "Wheels: torsion near the top grading and the full top group",
        "m": 3,
        "columns": ["tor H^{1,2v-6}", "tor H^{1,2v-5}", "tor H^{1,2v-4}",
                    "H^{1,2v-3}"],
        "rows": rows,
    }


def kn_table():
    def rank(n):
        return n * (n - 1) * (2 * n - 7) // 6

    rows = [{"label": "n=3", "graph": "K:3", "cells": [cell(3, group(0, 3))]}]
    for n in range(4, 8):
        grp = group(rank(n), *([3] * (n - 1) + [2]))
        rows.append({"label": f"n={n}", "graph": f"K:{n}",
                     "cells": [cell(2 * n - 3, grp)]})
    return {
        "id": "kn",
        "title": "Complete graphs: the full group in the top grading",
        "m": 3,
        "columns": ["H^{1,2v-3}"],
        "rows": rows,
    }


def a5_wheels_table():
    # Wheels over an n-gon rim (v = n + 1) and the two one-edge deletions,
    # over the m = 5 algebra in grading 4n - 3 = 4v - 7.
    rows = []
    published = {
        3: (None, group(2, 5, 10), group(1, 5, 5)),
        4: (None, group(5, *[5] * 4), group(2, 5, 5)),
    }
    notes = {
        (3, 1): ("published value; direct computation gives rank 2 with "
                 "factors [5,5,5,10], matching the m=5 case of the "
                 "complete-graph conjecture for this same graph"),
        (4, 2): ("published value; direct computation gives rank 3 with "
                 "the same torsion"),
    }
    for n in (3, 4):
        wout, w, win = published[n]
        j = 4 * n - 3
        rows.append({"label": f"n={n}", "graph": f"W:{n + 1}", "cells": [
            cell(j, wout, graph=f"Wout:{n + 1}"),
            cell(j, w, graph=f"W:{n + 1}", note=notes.get((n, 1))),
            cell(j, win, graph=f"Win:{n + 1}", note=notes.get((n, 2))),
        ]})
    for n in (5, 6):
        j = 4 * n - 3
        rows.append({"label": f"n={n}", "graph": f"W:{n + 1}", "cells": [
            cell(j, group(n - 2, *[5] * (n - 1)), graph=f"Wout:{n + 1}",
                 conjectured=True),
            cell(j, group(n, *[5] * n), graph=f"W:{n + 1}", conjectured=True),
            cell(j, group(n - 2, *[5] * (n - 2)), graph=f"Win:{n + 1}",
                 conjectured=True),
        ]})
    return {
        "id": "a5-wheels",
        "title": "Wheels over the m=5 algebra in grading 4v-7",
        "m": 5,
        "columns": ["H^{1,4n-3} (one rim edge removed)", "H^{1,4n-3}",
                    "H^{1,4n-3} (one spoke removed)"],
        "rows": rows,
    }


def main():
    doc = {"tables": [pt_table(), gts_table(), wheels_table(), kn_table(),
                      a5_wheels_table()]}
    out = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                       "reference_tables.json")
    with open(out, "w") as f:
        json.dump(doc, f, indent=1)
        f.write("\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()

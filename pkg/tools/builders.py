"""Dev-time constructors for oriented-PD diagram files.

Builds diagrams from braid words, pretzel/Montesinos columns, and rational
tangles, and emits them in the package's PD text format.  Used only to
generate and validate the bundled data files; not part of the package.
"""

from __future__ import annotations

import sys
from pathlib import Path

SRC = Path(__file__).resolve().parent.parent / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

from triblink.diagram import Crossing, PlanarDiagram  # noqa: E402


class _Ids:
    def __init__(self):
        self.n = 0

    def new(self):
        self.n += 1
        return self.n


def braid_closure(word, strands):
    """Close a braid word (list of nonzero ints, |i| < strands).

    Positive letters are right-handed crossings: the strand moving from
    position i to i+1 passes over.
    """
    ids = _Ids()
    cur = [ids.new() for _ in range(strands)]
    first = list(cur)
    crossings = []
    for letter in word:
        i = abs(letter) - 1
        if not (0 <= i < strands - 1):
            raise ValueError("letter %d out of range" % letter)
        left, right = cur[i], cur[i + 1]
        out_left, out_right = ids.new(), ids.new()
        if letter > 0:
            crossings.append(Crossing(1, (right, left, out_left, out_right)))
        else:
            crossings.append(Crossing(-1, (left, out_left, out_right, right)))
        cur[i], cur[i + 1] = out_left, out_right
    rename = {}
    for p in range(strands):
        if cur[p] == first[p]:
            raise ValueError("strand %d has no crossings" % p)
        rename[cur[p]] = first[p]
    fixed = [Crossing(c.sign, tuple(rename.get(e, e) for e in c.ends))
             for c in crossings]
    return PlanarDiagram(fixed)


# -- unoriented tangle scaffolding ---------------------------------------
#
# Crossings carry four slots in clockwise order 0=NW 1=NE 2=SE 3=SW and a
# flag saying which diagonal is the over strand.  Orientations are chosen
# afterwards by walking components; each crossing is then rotated so the
# stored position 0 is its incoming under end.


class Builder:
    def __init__(self):
        self.slots = []
        self.over13 = []

    def new_crossing(self, over13=True):
        self.slots.append([None] * 4)
        self.over13.append(bool(over13))
        return len(self.slots) - 1

    def weld(self, end1, end2):
        (c1, s1), (c2, s2) = end1, end2
        if self.slots[c1][s1] is not None or self.slots[c2][s2] is not None:
            raise ValueError("slot already welded: %r %r" % (end1, end2))
        self.slots[c1][s1] = (c2, s2)
        self.slots[c2][s2] = (c1, s1)

    def n_components(self):
        seen = set()
        count = 0
        for cid in range(len(self.slots)):
            for s in range(4):
                if (cid, s) in seen:
                    continue
                count += 1
                cur = (cid, s)
                while cur not in seen:
                    seen.add(cur)
                    out = (cur[0], (cur[1] + 2) % 4)
                    seen.add(out)
                    cur = self.slots[out[0]][out[1]]
        return count

    def orient(self, flips=()):
        """Choose per-component directions and emit a PlanarDiagram."""
        seen = set()
        components = []
        for cid in range(len(self.slots)):
            for s in range(4):
                if (cid, s) in seen:
                    continue
                path = []
                cur = (cid, s)
                while cur not in seen:
                    seen.add(cur)
                    out = (cur[0], (cur[1] + 2) % 4)
                    seen.add(out)
                    path.append((cur, out))
                    cur = self.slots[out[0]][out[1]]
                components.append(path)
        direction = {}
        for k, path in enumerate(components):
            fwd = k not in flips
            for entry, exit_ in path:
                direction[entry] = "in" if fwd else "out"
                direction[exit_] = "out" if fwd else "in"
        ids = _Ids()
        arc_of = {}
        for cid in range(len(self.slots)):
            for s in range(4):
                if (cid, s) in arc_of:
                    continue
                peer = self.slots[cid][s]
                if peer is None:
                    raise ValueError("open slot (%d,%d)" % (cid, s))
                a = ids.new()
                arc_of[(cid, s)] = a
                arc_of[peer] = a
        crossings = []
        for cid in range(len(self.slots)):
            under = (0, 2) if self.over13[cid] else (1, 3)
            over = (1, 3) if self.over13[cid] else (0, 2)
            under_in = next(s for s in under if direction[(cid, s)] == "in")
            order = [(under_in + k) % 4 for k in range(4)]
            ends = tuple(arc_of[(cid, s)] for s in order)
            over_in = next(s for s in over if direction[(cid, s)] == "in")
            sign = 1 if order.index(over_in) == 1 else -1
            crossings.append(Crossing(sign, ends))
        return PlanarDiagram(crossings)


def horizontal_row(b, count, positive):
    """Row of |count| crossings side by side; ends (nw, ne, sw, se)."""
    first = prev = None
    for _ in range(count):
        cid = b.new_crossing(over13=positive)
        if prev is None:
            first = cid
        else:
            b.weld((prev, 1), (cid, 0))
            b.weld((prev, 2), (cid, 3))
        prev = cid
    return (first, 0), (prev, 1), (first, 3), (prev, 2)


def vertical_column(b, count, positive):
    """Column of |count| crossings stacked; ends (nw, ne, sw, se)."""
    first = prev = None
    for _ in range(count):
        cid = b.new_crossing(over13=positive)
        if prev is None:
            first = cid
        else:
            b.weld((prev, 3), (cid, 0))
            b.weld((prev, 2), (cid, 1))
        prev = cid
    return (first, 0), (first, 1), (prev, 3), (prev, 2)


def rational_tangle(b, cf, mirror=False):
    """Rational tangle of a continued-fraction twist vector.

    Groups alternate between horizontal rows (appended on the right) and
    vertical columns (appended at the bottom), anchored so that the last
    group is horizontal; with all entries positive the numerator closure
    is the standard alternating 2-bridge diagram whose fraction is the
    left-to-right continued fraction (checked against determinants).
    Returns (nw, ne, sw, se).
    """
    if not cf or any(a == 0 for a in cf):
        raise ValueError("twist entries must be nonzero")
    k = len(cf)

    def is_row(j):
        return (k - 1 - j) % 2 == 0

    def flag(positive):
        return positive != mirror

    a0 = cf[0]
    if is_row(0):
        nw, ne, sw, se = horizontal_row(b, abs(a0), flag(a0 > 0))
    else:
        nw, ne, sw, se = vertical_column(b, abs(a0), flag(a0 > 0))
    for j, a in enumerate(cf[1:], start=1):
        if is_row(j):
            rnw, rne, rsw, rse = horizontal_row(b, abs(a), flag(a > 0))
            b.weld(ne, rnw)
            b.weld(se, rsw)
            ne, se = rne, rse
        else:
            cnw, cne, csw, cse = vertical_column(b, abs(a), flag(a > 0))
            b.weld(sw, cnw)
            b.weld(se, cne)
            sw, se = csw, cse
    return nw, ne, sw, se


def rational_link(cf, flips=(), mirror=False):
    """Numerator closure of a rational tangle."""
    b = Builder()
    nw, ne, sw, se = rational_tangle(b, cf, mirror)
    b.weld(nw, ne)
    b.weld(sw, se)
    return b.orient(flips)


def montesinos(columns, flips=(), mirror=False):
    """Cyclic side-by-side sum of twist columns or rational tangles.

    An int column is a plain vertical twist region; a tuple column is a
    rational tangle used in place.  A column ("rot", vec) rotates the
    tangle a quarter turn (inverting its fraction with a sign), and
    ("rotm", vec) rotates the mirrored tangle.
    """
    b = Builder()
    ends = []
    for col in columns:
        if isinstance(col, int):
            ends.append(vertical_column(b, abs(col), (col > 0) != mirror))
        elif col and col[0] == "rot":
            nw, ne, sw, se = rational_tangle(b, list(col[1]), mirror)
            ends.append((sw, nw, se, ne))
        elif col and col[0] == "rotm":
            nw, ne, sw, se = rational_tangle(b, list(col[1]), not mirror)
            ends.append((sw, nw, se, ne))
        else:
            ends.append(rational_tangle(b, list(col), mirror))
    k = len(ends)
    for i in range(k):
        _, ne, _, se = ends[i]
        nw2, _, sw2, _ = ends[(i + 1) % k]
        b.weld(ne, nw2)
        b.weld(se, sw2)
    return b.orient(flips)


def pretzel(counts, flips=(), mirror=False):
    return montesinos(list(counts), flips, mirror)

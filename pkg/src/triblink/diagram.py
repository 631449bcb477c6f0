"""Oriented planar link diagrams from an explicit PD text format.

One line per crossing: ``X<sign> a b c d`` with the four semi-arc ids in
rotation order around the crossing starting at the incoming under end.
The over strand occupies positions b and d; its incoming end is b for
sign ``+`` and d for sign ``-``.  Orientation is implicit: every id
occurs once as an incoming end and once as an outgoing end.  A line
``O <id>`` is a crossingless unknot circle and may only appear in a
diagram without crossings.  ``#`` starts a comment.

Faces are computed from the rotation system; corner k of a crossing lies
between the rays at positions k and k+1 (mod 4).
"""

from __future__ import annotations

from dataclasses import dataclass


class ParseError(ValueError):
    """Malformed or non-planar diagram text, with a location hint."""


@dataclass(frozen=True)
class Crossing:
    sign: int
    ends: tuple  # ids at rotation positions 0..3; position 0 is under-in

    @property
    def under_in(self):
        return 0

    @property
    def under_out(self):
        return 2

    @property
    def over_in(self):
        return 1 if self.sign > 0 else 3

    @property
    def over_out(self):
        return 3 if self.sign > 0 else 1


# Region-role corner indices, fixed by the anchor calibration run (see
# tools/calibrate.py): the golden Hopf-link and trefoil values pin the
# source corner of each crossing sign and the b/c assignment.
A_CORNER_POS = 3
A_CORNER_NEG = 2
SWAP_BC = False


@dataclass(frozen=True)
class CrossingFrame:
    """Semi-arc and face roles around one crossing.

    u1/o1 are the source under/over semi-arcs (the ones carrying the
    (a,b) and (a,c) colors), u2/o2 the sink ones.  r1..r4 are face
    indices with the region rule <r1, r2, r3> = r4.
    """

    crossing: int
    u1: int
    o1: int
    u2: int
    o2: int
    r1: int
    r2: int
    r3: int
    r4: int
    corners: tuple  # corner index of (r1, r2, r3, r4) at this crossing


class PlanarDiagram:
    def __init__(self, crossings, circles=()):
        self.crossings = tuple(crossings)
        self.circles = tuple(circles)
        if self.circles and self.crossings:
            raise ParseError("crossingless circles cannot be mixed with crossings")
        self._validate_arcs()
        self.components = self._count_components()
        self.connected = self._check_connected()
        self.faces = self._trace_faces() if self.connected else None
        if self.faces is not None:
            self._face_of_corner = {corner: i for i, face in enumerate(self.faces)
                                    for corner in face}
            if self.crossings and len(self.faces) != len(self.crossings) + 2:
                raise ParseError("face count %d != crossings + 2; embedding is "
                                 "not a planar sphere" % len(self.faces))

    # -- structure -------------------------------------------------------

    def _validate_arcs(self):
        seen = {}
        for ci, c in enumerate(self.crossings):
            for pos, arc in enumerate(c.ends):
                incoming = pos in (c.under_in, c.over_in)
                seen.setdefault(arc, []).append((ci, pos, incoming))
        for arc in self.circles:
            if arc in seen:
                raise ParseError("semi-arc %d used both as circle and crossing end" % arc)
        bad = [a for a, uses in seen.items() if len(uses) != 2]
        if bad:
            raise ParseError("semi-arc %d must have exactly two ends, found %d"
                             % (bad[0], len(seen[bad[0]])))
        self._ends = {}
        for arc, uses in seen.items():
            (c1, p1, in1), (c2, p2, in2) = uses
            if in1 == in2:
                raise ParseError("semi-arc %d orientation inconsistent: both ends "
                                 "%s" % (arc, "incoming" if in1 else "outgoing"))
            head = (c1, p1) if in1 else (c2, p2)
            tail = (c2, p2) if in1 else (c1, p1)
            self._ends[arc] = {"head": head, "tail": tail}
        self.semi_arcs = tuple(sorted(seen)) if seen else tuple(self.circles)

    def arc_head(self, arc):
        """(crossing, position) where the arc flows in."""
        return self._ends[arc]["head"]

    def arc_tail(self, arc):
        """(crossing, position) where the arc flows out."""
        return self._ends[arc]["tail"]

    def _count_components(self):
        parent = {a: a for a in self.semi_arcs}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            parent[find(x)] = find(y)

        for c in self.crossings:
            union(c.ends[c.under_in], c.ends[c.under_out])
            union(c.ends[c.over_in], c.ends[c.over_out])
        return len({find(a) for a in self.semi_arcs}) if self.semi_arcs else 0

    def _check_connected(self):
        if not self.crossings:
            return len(self.circles) == 1
        adj = {}
        for c in self.crossings:
            for arc in c.ends:
                adj.setdefault(arc, set())
        for ci, c in enumerate(self.crossings):
            for arc in c.ends:
                adj[arc].add(ci)
        seen = {0}
        stack = [0]
        while stack:
            ci = stack.pop()
            for arc in self.crossings[ci].ends:
                for cj in adj[arc]:
                    if cj not in seen:
                        seen.add(cj)
                        stack.append(cj)
        return len(seen) == len(self.crossings)

    def _trace_faces(self):
        if not self.crossings:
            # a single crossingless circle: inside and outside
            return [("circle-in",), ("circle-out",)]
        darts = {}
        for ci, c in enumerate(self.crossings):
            for pos, arc in enumerate(c.ends):
                darts.setdefault(arc, []).append((ci, pos))
        partner = {}
        for arc, ds in darts.items():
            partner[ds[0]] = ds[1]
            partner[ds[1]] = ds[0]
        corners = [(ci, k) for ci in range(len(self.crossings)) for k in range(4)]
        next_corner = {}
        for ci, k in corners:
            cj, q = partner[(ci, (k + 1) % 4)]
            next_corner[(ci, k)] = (cj, q)
        faces = []
        remaining = set(corners)
        while remaining:
            start = min(remaining)
            cycle = [start]
            cur = next_corner[start]
            while cur != start:
                cycle.append(cur)
                cur = next_corner[cur]
            for x in cycle:
                if x not in remaining:
                    raise ParseError("face traversal does not close at %r" % (x,))
                remaining.discard(x)
            faces.append(tuple(cycle))
        faces.sort(key=lambda f: min(f))
        return faces

    # -- queries ----------------------------------------------------------

    def face_of(self, corner):
        return self._face_of_corner[corner]

    @property
    def face_count(self):
        return len(self.faces) if self.faces is not None else None

    def writhe(self):
        return sum(c.sign for c in self.crossings)

    def recomputed_sign(self, ci):
        """Sign from the in/out pattern: over-in one rotation step after
        under-in means positive."""
        c = self.crossings[ci]
        return 1 if c.over_in == 1 else -1

    def frame(self, ci):
        """Region and semi-arc roles at crossing ci, per the calibrated
        convention."""
        c = self.crossings[ci]
        ka = A_CORNER_POS if c.sign > 0 else A_CORNER_NEG

        def across(k, parity):
            # neighbor corner across the bounding ray of parity
            # (0 = under strand rays {0,2}, 1 = over rays {1,3})
            if k % 2 == parity:
                return (k - 1) % 4
            return (k + 1) % 4

        kb = across(ka, 0)
        kc = across(ka, 1)
        if SWAP_BC:
            kb, kc = kc, kb
        kopp = (ka + 2) % 4
        faces = [self.face_of((ci, k)) for k in (ka, kb, kopp, kc)]
        if c.sign > 0:
            u1, o1 = c.ends[c.under_in], c.ends[c.over_out]
            u2, o2 = c.ends[c.under_out], c.ends[c.over_in]
        else:
            u1, o1 = c.ends[c.under_out], c.ends[c.over_in]
            u2, o2 = c.ends[c.under_in], c.ends[c.over_out]
        return CrossingFrame(ci, u1, o1, u2, o2,
                             faces[0], faces[1], faces[2], faces[3],
                             (ka, kb, kopp, kc))

    # -- constructions -----------------------------------------------------

    def mirror(self):
        """Reflect the diagram: rotation orders reverse and signs flip."""
        out = []
        for c in self.crossings:
            a, b, d, e = c.ends
            out.append(Crossing(-c.sign, (a, e, d, b)))
        return PlanarDiagram(out, self.circles)

    def reverse(self):
        """Reverse the orientation of every component."""
        out = []
        for c in self.crossings:
            a, b, d, e = c.ends
            out.append(Crossing(c.sign, (d, e, a, b)))
        return PlanarDiagram(out, self.circles)

    def reverse_component(self, arc):
        """Reverse only the component containing the given semi-arc."""
        comp = self.component_of(arc)
        out = []
        for c in self.crossings:
            under_flip = c.ends[c.under_in] in comp
            over_flip = c.ends[c.over_in] in comp
            a, b, d, e = c.ends
            if under_flip and over_flip:
                out.append(Crossing(c.sign, (d, e, a, b)))
            elif not under_flip and not over_flip:
                out.append(Crossing(c.sign, (a, b, d, e)))
            elif under_flip:
                # rotation order is unchanged but restarts at the new
                # under-in; a single reversed strand flips the sign
                out.append(Crossing(-c.sign, (d, e, a, b)))
            else:
                out.append(Crossing(-c.sign, (a, b, d, e)))
        return PlanarDiagram(out, self.circles)

    def component_of(self, arc):
        comp = {arc}
        grew = True
        while grew:
            grew = False
            for c in self.crossings:
                for x, y in ((c.ends[c.under_in], c.ends[c.under_out]),
                             (c.ends[c.over_in], c.ends[c.over_out])):
                    if (x in comp) != (y in comp):
                        comp.update((x, y))
                        grew = True
        return comp

    def component_arcs(self):
        """Semi-arcs grouped by link component, each sorted."""
        rest = set(self.semi_arcs)
        groups = []
        while rest:
            comp = self.component_of(min(rest))
            groups.append(tuple(sorted(comp)))
            rest -= comp
        return groups

    def to_text(self, header=None):
        lines = [] if header is None else ["# " + h for h in header]
        for c in self.crossings:
            lines.append("X%s %d %d %d %d" % ("+" if c.sign > 0 else "-", *c.ends))
        for a in self.circles:
            lines.append("O %d" % a)
        return "\n".join(lines) + "\n"


def crossing_frame(d, crossing_index):
    """Region and semi-arc roles at a crossing of a diagram."""
    return d.frame(crossing_index)


def parse_pd(text):
    """Parse oriented-PD text into a PlanarDiagram."""
    crossings = []
    circles = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        head = parts[0]
        try:
            if head in ("X+", "X-"):
                if len(parts) != 5:
                    raise ParseError("expected 4 semi-arc ids")
                ends = tuple(int(x) for x in parts[1:])
                if any(e <= 0 for e in ends):
                    raise ParseError("semi-arc ids must be positive")
                crossings.append(Crossing(1 if head == "X+" else -1, ends))
            elif head == "O":
                if len(parts) != 2:
                    raise ParseError("expected one id after O")
                circles.append(int(parts[1]))
            else:
                raise ParseError("unknown record %r" % head)
        except ParseError as e:
            raise ParseError("line %d: %s" % (lineno, e)) from None
        except ValueError:
            raise ParseError("line %d: ids must be integers" % lineno) from None
    try:
        return PlanarDiagram(crossings, circles)
    except ParseError as e:
        raise ParseError(str(e)) from None


def connected_sum(d1, d2, arc1=None, arc2=None):
    """Splice two diagrams along one semi-arc of each.

    The chosen arcs are cut and reconnected tail-to-head across the two
    diagrams, which is the diagrammatic connected sum.
    """
    if d1.circles or d2.circles:
        raise ValueError("connected sum needs diagrams with crossings")
    arc1 = d1.semi_arcs[0] if arc1 is None else arc1
    arc2 = d2.semi_arcs[0] if arc2 is None else arc2
    shift = max(d1.semi_arcs) + 1
    c2_crossings = []
    for c in d2.crossings:
        c2_crossings.append(Crossing(c.sign, tuple(e + shift for e in c.ends)))
    a, b = arc1, arc2 + shift
    # a keeps its tail in d1 and takes b's head in d2; b keeps its tail in
    # d2 and takes a's head in d1
    a_head = d1.arc_head(arc1)
    b_head_cross, b_head_pos = d2.arc_head(arc2)
    crossings = list(d1.crossings) + c2_crossings

    def replace(ci, pos, new_arc):
        c = crossings[ci]
        ends = list(c.ends)
        ends[pos] = new_arc
        crossings[ci] = Crossing(c.sign, tuple(ends))

    replace(b_head_cross + len(d1.crossings), b_head_pos, a)
    replace(a_head[0], a_head[1], b)
    return PlanarDiagram(crossings)

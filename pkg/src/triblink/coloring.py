"""Region and semi-arc colorings of diagrams and the cocycle invariants.

Region colorings assign an element of X to every face subject to the
crossing rule <r1, r2, r3> = r4; semi-arc colorings are derived from them
through the translation map on connected diagrams.  Weight chains collect
the signed per-crossing contributions, and the invariant is the multiset
of their cocycle evaluations written as a polynomial in u.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .chains import LB, NIE, FormalChain
from .cochains import evaluate, is_cocycle
from .homology import class_coordinates

DEFAULT_COLORING_CAP = 10 ** 8


class ColoringCapExceeded(RuntimeError):
    pass


class NotConnected(ValueError):
    """Operation needs a connected diagram."""


@dataclass(frozen=True)
class WeightPolynomial:
    """Multiset over Z_m as exponent -> multiplicity."""

    modulus: int
    counts: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "counts",
                           {int(e) % self.modulus: int(c)
                            for e, c in self.counts.items() if c})

    def total(self):
        """Value at u = 1: the number of colorings."""
        return sum(self.counts.values())

    def __str__(self):
        return format_polynomial(self)

    def __eq__(self, other):
        return (isinstance(other, WeightPolynomial)
                and self.modulus == other.modulus and self.counts == other.counts)


def format_polynomial(w):
    """Ascending-exponent polynomial text: terms c, cu, cu^k joined by +."""
    if not w.counts:
        return "0"
    parts = []
    for e in sorted(w.counts):
        c = w.counts[e]
        if e == 0:
            parts.append(str(c))
        elif e == 1:
            parts.append("u" if c == 1 else "%du" % c)
        else:
            parts.append("u^%d" % e if c == 1 else "%du^%d" % (c, e))
    return "+".join(parts)


def parse_polynomial(text, modulus):
    """Inverse of format_polynomial, for golden-table comparisons."""
    counts = {}
    text = text.strip().replace(" ", "")
    if text == "0":
        return WeightPolynomial(modulus, {})
    for term in text.split("+"):
        if "u" not in term:
            counts[0] = counts.get(0, 0) + int(term)
            continue
        coeff, _, rest = term.partition("u")
        c = int(coeff) if coeff else 1
        e = int(rest[1:]) if rest.startswith("^") else 1
        counts[e] = counts.get(e, 0) + c
    return WeightPolynomial(modulus, counts)


# -- region colorings ------------------------------------------------------


def _constraints(d):
    """Per crossing: face indices (r1, r2, r3, r4) with <r1,r2,r3> = r4."""
    out = []
    for ci in range(len(d.crossings)):
        f = d.frame(ci)
        out.append((f.r1, f.r2, f.r3, f.r4))
    return out


def enumerate_region_colorings(d, ctx, cap=DEFAULT_COLORING_CAP):
    """All valid face colorings, in lexicographic order of the face tuple.

    Depth-first search over faces with constraint checks as soon as a
    crossing's four faces are assigned; agrees with the brute-force
    oracle and is the default engine.
    """
    if not d.connected:
        raise NotConnected("region colorings need a connected diagram")
    nfaces = len(d.faces)
    if ctx.size ** nfaces > cap:
        raise ColoringCapExceeded(
            "%d^%d candidate colorings exceed the cap %d"
            % (ctx.size, nfaces, cap))
    cons = _constraints(d)
    by_depth = [[] for _ in range(nfaces + 1)]
    for con in cons:
        by_depth[max(con) + 1].append(con)
    v = ctx.vertical
    colors = [0] * nfaces
    out = []

    def fill(k):
        if k == nfaces:
            out.append(tuple(colors))
            return
        for x in ctx.elements:
            colors[k] = x
            if all(v(colors[r1], colors[r2], colors[r3]) == colors[r4]
                   for r1, r2, r3, r4 in by_depth[k + 1]):
                fill(k + 1)
        colors[k] = 0

    fill(0)
    return out


def enumerate_region_colorings_bruteforce(d, ctx, cap=DEFAULT_COLORING_CAP):
    """The defining oracle: try every face tuple, keep the valid ones."""
    if not d.connected:
        raise NotConnected("region colorings need a connected diagram")
    nfaces = len(d.faces)
    if ctx.size ** nfaces > cap:
        raise ColoringCapExceeded(
            "%d^%d candidate colorings exceed the cap %d; use "
            "enumerate_region_colorings, the pruned engine, or raise the cap"
            % (ctx.size, nfaces, cap))
    cons = _constraints(d)
    v = ctx.vertical
    out = []
    for colors in product(ctx.elements, repeat=nfaces):
        if all(v(colors[r1], colors[r2], colors[r3]) == colors[r4]
               for r1, r2, r3, r4 in cons):
            out.append(colors)
    return out


# -- translation between region and semi-arc colorings ---------------------


def region_to_semiarc(d, coloring, ctx):
    """Semi-arc pairs induced by a region coloring of a connected diagram."""
    if not d.connected:
        raise NotConnected("the translation map needs a connected diagram")
    pairs = {}

    def put(arc, pair):
        old = pairs.setdefault(arc, pair)
        if old != pair:
            raise ValueError("semi-arc %d receives two colors %r / %r"
                             % (arc, old, pair))

    for ci in range(len(d.crossings)):
        f = d.frame(ci)
        a, b = coloring[f.r1], coloring[f.r2]
        opp, c = coloring[f.r3], coloring[f.r4]
        put(f.u1, (a, b))
        put(f.o1, (a, c))
        put(f.u2, (c, opp))
        put(f.o2, (b, opp))
    _assert_semiarc_valid(d, pairs, ctx)
    return pairs


def _assert_semiarc_valid(d, pairs, ctx):
    for ci in range(len(d.crossings)):
        f = d.frame(ci)
        (a1, b), (a2, c) = pairs[f.u1], pairs[f.o1]
        if a1 != a2:
            raise ValueError("crossing %d: source pairs disagree on the "
                             "shared region" % ci)
        h = ctx.h(a1, b, c)
        if pairs[f.u2] != (c, h) or pairs[f.o2] != (b, h):
            raise ValueError("crossing %d: sink colors violate the crossing "
                             "rule" % ci)


def semiarc_to_region(d, pairs, ctx):
    """Region coloring inducing the given semi-arc coloring, if consistent."""
    if not d.connected:
        raise NotConnected("the translation map needs a connected diagram")
    colors = {}

    def put(face, x):
        old = colors.setdefault(face, x)
        if old != x:
            raise ValueError("region %d receives two colors %r / %r"
                             % (face, old, x))

    for ci in range(len(d.crossings)):
        f = d.frame(ci)
        a, b = pairs[f.u1]
        a2, c = pairs[f.o1]
        if a != a2:
            raise ValueError("crossing %d: source pairs disagree" % ci)
        c2, opp = pairs[f.u2]
        b2, opp2 = pairs[f.o2]
        if c2 != c or b2 != b or opp != opp2:
            raise ValueError("crossing %d: inconsistent sink pairs" % ci)
        put(f.r1, a)
        put(f.r2, b)
        put(f.r3, opp)
        put(f.r4, c)
    coloring = tuple(colors.get(i) for i in range(len(d.faces)))
    if any(x is None for x in coloring):
        raise ValueError("some region received no color")
    cons = _constraints(d)
    for r1, r2, r3, r4 in cons:
        if ctx.v(coloring[r1], coloring[r2], coloring[r3]) != coloring[r4]:
            raise ValueError("induced region coloring violates a crossing rule")
    return coloring


# -- weight chains and the invariant ---------------------------------------


def nie_weight_chain(d, coloring, ctx):
    """Signed sum of (r1, r2, r3) tuples over the crossings; a 1-cycle."""
    chain = FormalChain(NIE, 1)
    for ci, c in enumerate(d.crossings):
        f = d.frame(ci)
        chain.add((coloring[f.r1], coloring[f.r2], coloring[f.r3]), c.sign)
    return chain


def lb_weight_chain(d, pairs, ctx):
    """Signed sum of ((a,b),(a,c)) source-pair generators; a 2-cycle."""
    chain = FormalChain(LB, 2)
    for ci, c in enumerate(d.crossings):
        f = d.frame(ci)
        a, b = pairs[f.u1]
        _, cc = pairs[f.o1]
        chain.add((a, b, cc), c.sign)
    return chain


def invariant(d, theta, ctx, side=LB, require_cocycle=True,
              cap=DEFAULT_COLORING_CAP):
    """Multiset of cocycle evaluations over all colorings, as a polynomial.

    The LB side evaluates the degree-2 cochain on semi-arc weight chains,
    the Nie side the degree-1 cochain on region weight chains; by the
    translation map both run over the same coloring set.
    """
    want_degree = 2 if side == LB else 1
    if theta.side != side or theta.degree != want_degree:
        raise ValueError("need a degree-%d %s cochain" % (want_degree, side))
    if require_cocycle and not is_cocycle(ctx, theta):
        raise ValueError("the cochain is not a cocycle; the multiset would "
                         "not be a link invariant")
    counts = {}
    for coloring in enumerate_region_colorings(d, ctx, cap):
        if side == LB:
            pairs = region_to_semiarc(d, coloring, ctx)
            w = evaluate(theta, lb_weight_chain(d, pairs, ctx))
        else:
            w = evaluate(theta, nie_weight_chain(d, coloring, ctx))
        counts[w] = counts.get(w, 0) + 1
    return WeightPolynomial(theta.modulus, counts)


def homology_class_multiset(d, ctx, side=LB, cap=DEFAULT_COLORING_CAP):
    """Multiset of homology class labels of the weight cycles."""
    out = {}
    for coloring in enumerate_region_colorings(d, ctx, cap):
        if side == LB:
            pairs = region_to_semiarc(d, coloring, ctx)
            chain = lb_weight_chain(d, pairs, ctx)
        else:
            chain = nie_weight_chain(d, coloring, ctx)
        label = class_coordinates(ctx, chain)
        out[label] = out.get(label, 0) + 1
    return out

"""Local biquandles: pairs of partially defined operations on X x X.

Only the second components of (a,b) under (a,c) and (a,b) over (a,c) are
stored; the first components are forced to be c by the axioms, so those
two axioms hold by representation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product

from .tensors import (HORIZONTAL, AxiomReport, KindError, MAX_VIOLATIONS,
                      OperationTensor, check_axioms as check_tensor_axioms)


@dataclass(frozen=True)
class LocalBiquandle:
    """Operation pair on pairs sharing a first coordinate.

    under2[a-1][b-1][c-1] is the second component of (a,b) under (a,c);
    over2[a-1][b-1][c-1] is the second component of (a,b) over (a,c).
    """

    size: int
    under2: tuple
    over2: tuple

    def __post_init__(self):
        n = self.size
        for name in ("under2", "over2"):
            tab = tuple(tuple(tuple(r) for r in m) for m in getattr(self, name))
            if len(tab) != n or any(len(m) != n for m in tab) or any(
                    len(r) != n for m in tab for r in m):
                raise ValueError("%s must be an n*n*n table" % name)
            for m in tab:
                for r in m:
                    for v in r:
                        if not (isinstance(v, int) and 1 <= v <= n):
                            raise ValueError("%s entry %r outside 1..%d" % (name, v, n))
            object.__setattr__(self, name, tab)

    @property
    def elements(self):
        return range(1, self.size + 1)

    def under(self, a, b, c):
        """(a,b) under (a,c) as the pair (c, u)."""
        return (c, self.under2[a - 1][b - 1][c - 1])

    def over(self, a, b, c):
        """(a,b) over (a,c) as the pair (c, v)."""
        return (c, self.over2[a - 1][b - 1][c - 1])

    def to_json(self):
        return json.dumps({"size": self.size,
                           "under2": [[list(r) for r in m] for m in self.under2],
                           "over2": [[list(r) for r in m] for m in self.over2]})

    @classmethod
    def from_json(cls, text):
        obj = json.loads(text)
        return cls(obj["size"], obj["under2"], obj["over2"])


def from_horizontal(tensor):
    """Local biquandle of a horizontal tribracket.

    (a,b) under (a,c) = (c, [a,b,c]) and (a,b) over (a,c) = (c, [a,c,b]).
    """
    if tensor.kind != HORIZONTAL:
        raise KindError("expected a horizontal tensor")
    rep = check_tensor_axioms(tensor)
    if not rep.passed:
        raise ValueError("tensor fails tribracket axioms: %r" % (rep.violations[:3],))
    n = tensor.size
    under2 = tensor.entries
    over2 = [[[tensor(a, c, b) for c in tensor.elements]
              for b in tensor.elements] for a in tensor.elements]
    return LocalBiquandle(n, under2, over2)


def to_horizontal(lb):
    """Recover the horizontal tensor: [a,b,c] = 2nd of (a,b) under (a,c)."""
    rep = check_axioms(lb)
    if not rep.passed:
        raise ValueError("local biquandle fails axioms: %r" % (rep.violations[:3],))
    return OperationTensor(lb.size, HORIZONTAL, lb.under2)


def check_axioms(lb):
    """Verify the non-structural local biquandle axioms.

    The two first-component axioms hold by representation.  Checked here:
    the shared-second-component law, bijectivity of both one-sided maps,
    bijectivity of the global pair map S, and the three exchange laws.
    """
    n = lb.size
    bad = []
    els = lb.elements
    for a, b, c in product(els, repeat=3):
        if lb.under(a, b, c)[1] != lb.over(a, c, b)[1]:
            bad.append(("L1-iii", (a, b, c)))
    full = set(els)
    for a, b in product(els, repeat=2):
        if {lb.under(a, c, b)[1] for c in els} != full:
            bad.append(("L2-i", (a, b)))
        if {lb.over(a, c, b)[1] for c in els} != full:
            bad.append(("L2-ii", (a, b)))
    images = {(b, lb.over(a, c, b)) + (c, lb.under(a, b, c))
              for a, b, c in product(els, repeat=3)}
    if len(images) != n ** 3:
        bad.append(("L2-iii", ()))

    def u(x, y):
        (a1, b1), (a2, c1) = x, y
        assert a1 == a2
        return lb.under(a1, b1, c1)

    def o(x, y):
        (a1, b1), (a2, c1) = x, y
        assert a1 == a2
        return lb.over(a1, b1, c1)

    for a, b, c, d in product(els, repeat=4):
        ab, ac, ad = (a, b), (a, c), (a, d)
        if u(u(ab, ac), o(ad, ac)) != u(u(ab, ad), u(ac, ad)):
            bad.append(("L3-i", (a, b, c, d)))
        if u(o(ab, ac), o(ad, ac)) != o(u(ab, ad), u(ac, ad)):
            bad.append(("L3-ii", (a, b, c, d)))
        if o(o(ab, ac), u(ad, ac)) != o(o(ab, ad), o(ac, ad)):
            bad.append(("L3-iii", (a, b, c, d)))
    return AxiomReport(not bad, tuple(bad[:MAX_VIOLATIONS]))

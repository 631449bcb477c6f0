"""Finite ternary operation tensors and the tribracket axioms.

A ternary operation on X = {1, .., n} is stored as an n*n*n table.  The
horizontal kind writes the operation as [a,b,c], the vertical kind as
<a,b,c>; the two kinds are interchangeable by inverting the third slot.
All operations here are pure and the tensors are immutable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from math import gcd

HORIZONTAL = "horizontal"
VERTICAL = "vertical"

MAX_VIOLATIONS = 100


class KindError(ValueError):
    """Raised when an operation receives a tensor of the wrong kind."""


@dataclass(frozen=True)
class OperationTensor:
    """A total ternary operation on {1..n}, tagged horizontal or vertical.

    entries[a-1][b-1][c-1] holds the value of the operation on (a, b, c),
    matching the printed convention: the entry in the a-th matrix's b-th
    row and c-th column.
    """

    size: int
    kind: str
    entries: tuple

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("size must be a positive integer")
        if self.kind not in (HORIZONTAL, VERTICAL):
            raise ValueError("kind must be %r or %r" % (HORIZONTAL, VERTICAL))
        n = self.size
        ent = tuple(tuple(tuple(row) for row in mat) for mat in self.entries)
        if len(ent) != n or any(len(m) != n for m in ent) or any(
                len(r) != n for m in ent for r in m):
            raise ValueError("entries must form an n*n*n table")
        for m in ent:
            for r in m:
                for v in r:
                    if not (isinstance(v, int) and 1 <= v <= n):
                        raise ValueError("entry %r outside 1..%d" % (v, n))
        object.__setattr__(self, "entries", ent)

    def __call__(self, a, b, c):
        return self.entries[a - 1][b - 1][c - 1]

    @property
    def elements(self):
        return range(1, self.size + 1)

    def flat(self):
        """Entries flattened in lexicographic (a, b, c) order."""
        return tuple(v for m in self.entries for r in m for v in r)

    def with_kind(self, kind):
        return OperationTensor(self.size, kind, self.entries)

    def to_json(self):
        return json.dumps({"size": self.size, "kind": self.kind,
                           "entries": [[list(r) for r in m] for m in self.entries]})

    @classmethod
    def from_json(cls, text):
        obj = json.loads(text)
        return cls(obj["size"], obj["kind"], obj["entries"])


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of an axiom check: passed, or a capped list of witnesses."""

    passed: bool
    violations: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "violations", tuple(self.violations))
        if self.passed != (len(self.violations) == 0):
            raise ValueError("passed must agree with violations being empty")


def _report(violations):
    return AxiomReport(not violations, tuple(violations[:MAX_VIOLATIONS]))


def check_quasigroup(tensor):
    """Check that all three unary slot maps of the tensor are bijections.

    For every pair (a, b) the maps c -> T(a,b,c), c -> T(a,c,b) and
    c -> T(c,a,b) must each be permutations of {1..n}.  A violation is
    recorded as (axiom id, (slot, a, b)).
    """
    n = tensor.size
    full = set(range(1, n + 1))
    bad = []
    for a, b in product(tensor.elements, repeat=2):
        slots = (
            (3, {tensor(a, b, c) for c in tensor.elements}),
            (2, {tensor(a, c, b) for c in tensor.elements}),
            (1, {tensor(c, a, b) for c in tensor.elements}),
        )
        for slot, image in slots:
            if image != full:
                bad.append(("Q-slot%d" % slot, (slot, a, b)))
    return _report(bad)


def check_horizontal_exchange(tensor):
    """Check the horizontal exchange law on all quadruples.

    [b,[a,b,c],[a,b,d]] = [c,[a,b,c],[a,c,d]] = [d,[a,b,d],[a,c,d]]
    """
    if tensor.kind != HORIZONTAL:
        raise KindError("horizontal exchange requires a horizontal tensor")
    t = tensor
    bad = []
    for a, b, c, d in product(t.elements, repeat=4):
        abc, abd, acd = t(a, b, c), t(a, b, d), t(a, c, d)
        lhs = t(b, abc, abd)
        mid = t(c, abc, acd)
        rhs = t(d, abd, acd)
        if lhs != mid:
            bad.append(("H2-first", (a, b, c, d)))
        if mid != rhs:
            bad.append(("H2-second", (a, b, c, d)))
    return _report(bad)


def check_vertical_exchange(tensor):
    """Check the vertical exchange law (both displayed identities)."""
    if tensor.kind != VERTICAL:
        raise KindError("vertical exchange requires a vertical tensor")
    t = tensor
    bad = []
    for a, b, c, d in product(t.elements, repeat=4):
        abc = t(a, b, c)
        bcd = t(b, c, d)
        if t(a, abc, t(abc, c, d)) != t(a, b, bcd):
            bad.append(("V2-i", (a, b, c, d)))
        if t(abc, c, d) != t(t(a, b, bcd), bcd, d):
            bad.append(("V2-ii", (a, b, c, d)))
    return _report(bad)


def check_axioms(tensor):
    """Quasigroup check plus the exchange law for the tensor's kind."""
    q = check_quasigroup(tensor)
    if tensor.kind == HORIZONTAL:
        e = check_horizontal_exchange(tensor)
    else:
        e = check_vertical_exchange(tensor)
    return AxiomReport(q.passed and e.passed,
                       (q.violations + e.violations)[:MAX_VIOLATIONS])


def _invert_third_slot(tensor, kind):
    # T'(a,b,c) = d  <=>  T(a,b,d) = c; needs slot-3 bijectivity.
    rep = check_quasigroup(tensor)
    if not rep.passed:
        raise ValueError("tensor is not a quasigroup; third slot not invertible")
    n = tensor.size
    ent = [[[0] * n for _ in range(n)] for _ in range(n)]
    for a, b, d in product(tensor.elements, repeat=3):
        c = tensor(a, b, d)
        ent[a - 1][b - 1][c - 1] = d
    return OperationTensor(n, kind, ent)


def horizontal_to_vertical(tensor):
    """Corresponding vertical tensor: <a,b,c> is the d with [a,b,d]=c."""
    if tensor.kind != HORIZONTAL:
        raise KindError("expected a horizontal tensor")
    return _invert_third_slot(tensor, VERTICAL)


def vertical_to_horizontal(tensor):
    """Corresponding horizontal tensor: [a,b,c] is the d with <a,b,d>=c."""
    if tensor.kind != VERTICAL:
        raise KindError("expected a vertical tensor")
    return _invert_third_slot(tensor, HORIZONTAL)


def alexander(m, x, y):
    """Alexander tribracket [a,b,c] = xb + yc - xya on Z_m.

    Labels 1..m stand for the residues 1..m-1, 0; that is, label m plays
    the residue 0, so printed values match direct mod-m arithmetic on the
    labels themselves.
    """
    if m < 2:
        raise ValueError("modulus must be at least 2")
    if gcd(x, m) != 1 or gcd(y, m) != 1:
        raise ValueError("x and y must be units mod %d" % m)
    ent = [[[0] * m for _ in range(m)] for _ in range(m)]
    for a, b, c in product(range(1, m + 1), repeat=3):
        v = (x * b + y * c - x * y * a) % m
        ent[a - 1][b - 1][c - 1] = v if v else m
    return OperationTensor(m, HORIZONTAL, ent)


def _group_inverses(table):
    """Validate a Cayley table as a group; return (identity, inverse map)."""
    n = len(table)
    if any(len(row) != n for row in table):
        raise ValueError("Cayley table must be square")
    mul = lambda a, b: table[a - 1][b - 1]
    for a, b, c in product(range(1, n + 1), repeat=3):
        if mul(mul(a, b), c) != mul(a, mul(b, c)):
            raise ValueError("not associative at %r" % ((a, b, c),))
    identity = None
    for e in range(1, n + 1):
        if all(mul(e, a) == a and mul(a, e) == a for a in range(1, n + 1)):
            identity = e
            break
    if identity is None:
        raise ValueError("no identity element")
    inv = {}
    for a in range(1, n + 1):
        try:
            inv[a] = next(b for b in range(1, n + 1) if mul(a, b) == identity)
        except StopIteration:
            raise ValueError("element %d has no inverse" % a) from None
    return identity, inv


def dehn(table):
    """Dehn tribracket [a,b,c] = b a^{-1} c over a group Cayley table."""
    _, inv = _group_inverses(table)
    n = len(table)
    mul = lambda a, b: table[a - 1][b - 1]
    ent = [[[mul(mul(b, inv[a]), c) for c in range(1, n + 1)]
            for b in range(1, n + 1)] for a in range(1, n + 1)]
    return OperationTensor(n, HORIZONTAL, ent)


def _is_latin(table):
    n = len(table)
    full = set(range(1, n + 1))
    return (all(len(row) == n for row in table)
            and all(set(row) == full for row in table)
            and all({table[i][j] for i in range(n)} == full for j in range(n)))


def biquasile_to_vertical(star, dot):
    """Vertical tensor <a,b,c> = b * (a . c) from two quasigroup tables."""
    for name, table in (("star", star), ("dot", dot)):
        if not _is_latin(table):
            raise ValueError("%s table is not a Latin square" % name)
    n = len(star)
    ent = [[[star[b - 1][dot[a - 1][c - 1] - 1] for c in range(1, n + 1)]
            for b in range(1, n + 1)] for a in range(1, n + 1)]
    return OperationTensor(n, VERTICAL, ent)


DEFAULT_ENUMERATION_CAP = 4


def enumerate_horizontal(n, cap=DEFAULT_ENUMERATION_CAP):
    """All horizontal tribrackets on {1..n}, in lexicographic flat order.

    Backtracking fills the table in lexicographic (a, b, c) order, pruning
    any partial assignment that repeats a value along a completed line in
    one of the three slot directions; the exchange law is checked on each
    completed Latin cube.
    """
    if n > cap:
        raise ValueError("size %d exceeds enumeration cap %d" % (n, cap))
    rng = range(n)
    cells = [(a, b, c) for a in rng for b in rng for c in rng]
    table = [[[0] * n for _ in rng] for _ in rng]
    found = []

    def feasible(a, b, c, v):
        # Lines through (a,b,c) in each slot direction must stay injective.
        for k in rng:
            if table[a][b][k] == v or table[a][k][c] == v or table[k][b][c] == v:
                return False
        return True

    def fill(idx):
        if idx == len(cells):
            cand = OperationTensor(n, HORIZONTAL, table)
            if check_horizontal_exchange(cand).passed:
                found.append(cand)
            return
        a, b, c = cells[idx]
        for v in range(1, n + 1):
            if feasible(a, b, c, v):
                table[a][b][c] = v
                fill(idx + 1)
                table[a][b][c] = 0

    fill(0)
    return found

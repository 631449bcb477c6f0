"""Dev-time identification invariants for candidate diagrams.

Computes component counts, linking numbers, the one-variable Alexander
polynomial via Fox calculus on the Wirtinger presentation, and the link
determinant |Delta(-1)|.  Used to pin down which link each generated
diagram represents before it is frozen into the bundled data.
"""

from __future__ import annotations

import sys
from pathlib import Path

SRC = Path(__file__).resolve().parent.parent / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

from triblink.diagram import PlanarDiagram  # noqa: E402


# -- Z[t, 1/t] as dict exponent -> coeff ---------------------------------


def padd(p, q, scale=1):
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, 0) + scale * c
        if not out[e]:
            del out[e]
    return out


def pmul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = e1 + e2
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def pdivexact(p, q):
    """Exact division in Z[t, 1/t]; raises if not divisible."""
    if not q:
        raise ZeroDivisionError
    if not p:
        return {}
    rem = dict(p)
    qe = max(q)
    qc = q[qe]
    out = {}
    while rem:
        re = max(rem)
        if rem[re] % qc:
            raise ValueError("not divisible")
        coeff = rem[re] // qc
        out[re - qe] = coeff
        rem = padd(rem, {e + re - qe: c * coeff for e, c in q.items()}, -1)
    return out


def poly_det(mat):
    """Bareiss fraction-free determinant over Z[t, 1/t]."""
    n = len(mat)
    a = [[dict(x) for x in row] for row in mat]
    prev = {0: 1}
    sign = 1
    for k in range(n - 1):
        if not a[k][k]:
            piv = next((i for i in range(k + 1, n) if a[i][k]), None)
            if piv is None:
                # column is zero below too: determinant vanishes unless
                # some later column saves it; easiest is full expansion
                return _laplace(a)
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = padd(pmul(a[i][j], a[k][k]), pmul(a[i][k], a[k][j]), -1)
                a[i][j] = pdivexact(num, prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return {e: sign * c for e, c in det.items()}


def _laplace(a):
    n = len(a)
    if n == 1:
        return dict(a[0][0])
    out = {}
    for j in range(n):
        if not a[0][j]:
            continue
        minor = [[a[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = pmul(a[0][j], _laplace(minor))
        out = padd(out, term, 1 if j % 2 == 0 else -1)
    return out


def alex_fingerprint(p):
    """Coefficient vector up to units and t -> 1/t."""
    if not p:
        return ()
    lo = min(p)
    vec = tuple(p.get(e, 0) for e in range(lo, max(p) + 1))
    cands = []
    for v in (vec, tuple(reversed(vec))):
        for s in (1, -1):
            cands.append(tuple(s * c for c in v))
    return max(cands)


# -- Wirtinger/Fox --------------------------------------------------------


def over_arcs(d):
    """Group semi-arcs into over-arcs (broken only at under-passes)."""
    parent = {a: a for a in d.semi_arcs}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in d.crossings:
        x, y = find(c.ends[c.over_in]), find(c.ends[c.over_out])
        parent[x] = y
    return {a: find(a) for a in d.semi_arcs}


def alexander_matrix(d):
    arcs = over_arcs(d)
    names = sorted(set(arcs.values()))
    idx = {a: i for i, a in enumerate(names)}
    rows = []
    for c in d.crossings:
        u_in = arcs[c.ends[c.under_in]]
        u_out = arcs[c.ends[c.under_out]]
        over = arcs[c.ends[c.over_in]]
        row = [dict() for _ in names]

        def add(arc, poly):
            row[idx[arc]] = padd(row[idx[arc]], poly)

        if c.sign > 0:
            add(u_in, {1: 1})        # t
            add(over, {0: 1, 1: -1})  # 1 - t
            add(u_out, {0: -1})      # -1
        else:
            add(u_in, {0: 1})        # scaled by t: 1
            add(over, {1: 1, 0: -1})  # t - 1
            add(u_out, {1: -1})      # -t
        rows.append(row)
    return rows, names


def alexander_poly(d):
    """One-variable Alexander polynomial, up to units (t -> 1/t ambiguity
    left in place; use alex_fingerprint to compare)."""
    rows, names = alexander_matrix(d)
    if len(names) <= 1:
        return {0: 1}
    mat = [row[:-1] for row in rows]
    mat = mat[:len(names) - 1]
    return poly_det(mat)


def determinant(d):
    p = alexander_poly(d)
    return abs(sum(c * (-1) ** e for e, c in p.items()))


def linking_matrix(d):
    comps = d.component_arcs()
    where = {}
    for i, comp in enumerate(comps):
        for a in comp:
            where[a] = i
    k = len(comps)
    lk = [[0] * k for _ in range(k)]
    for c in d.crossings:
        i = where[c.ends[c.under_in]]
        j = where[c.ends[c.over_in]]
        if i != j:
            lk[i][j] += c.sign
            lk[j][i] += c.sign
    return [[x // 2 for x in row] for row in lk]


def describe(d):
    comps = d.component_arcs()
    fp = alex_fingerprint(alexander_poly(d))
    return {
        "crossings": len(d.crossings),
        "components": len(comps),
        "writhe": d.writhe(),
        "det": determinant(d),
        "alexander": fp,
        "linking": linking_matrix(d),
    }


# -- Kauffman bracket ------------------------------------------------------


def kauffman_bracket(d):
    """Bracket polynomial in A as dict exponent -> coeff.

    A-smoothing joins (under-in, over-in) and (under-out, over-out) port
    pairs; validated against the trefoil/figure-eight Jones polynomials.
    """
    crossings = d.crossings
    n = len(crossings)
    delta = {2: -1, -2: -1}  # -A^2 - A^-2
    total = {}
    for state in range(1 << n):
        # union-find over semi-arc endpoints to count loops
        parent = {}

        def find(x):
            parent.setdefault(x, x)
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            parent[find(x)] = find(y)

        apow = 0
        for ci, c in enumerate(crossings):
            a_sm = (state >> ci) & 1 == 0
            apow += 1 if a_sm else -1
            # ports in rotation order; over-in at 1 (+) or 3 (-)
            pairs_a = ((0, 3), (1, 2))
            pairs_b = ((0, 1), (2, 3))
            for p, q in (pairs_a if a_sm else pairs_b):
                union((ci, p), (ci, q))
        for arc in d.semi_arcs:
            ends = []
            for ci, c in enumerate(crossings):
                for pos, e in enumerate(c.ends):
                    if e == arc:
                        ends.append((ci, pos))
            union(ends[0], ends[1])
        loops = len({find(x) for x in list(parent)})
        term = {apow: 1}
        for _ in range(loops - 1):
            term = pmul(term, delta)
        total = padd(total, term)
    return total


def jones(d):
    """Jones polynomial in t via the bracket, as dict exponent -> coeff.

    Exponents are multiplied by 4 internally (t = A^-4); returned dict
    uses quarter-integer exponents scaled by 4 to stay integral.
    """
    br = kauffman_bracket(d)
    w = d.writhe()
    # multiply by (-A^3)^(-w)
    shift = {-3 * w: (-1) ** (w % 2)}
    f = pmul(br, shift)
    # substitute A = t^(-1/4): exponent e in A becomes -e/4 in t
    return {-e: c for e, c in f.items()}


def bracket_span(d):
    br = kauffman_bracket(d)
    return max(br) - min(br) if br else 0

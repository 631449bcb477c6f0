"""Cochains with Z_m values on the quotient complexes.

A cochain stores values on nondegenerate generators only; degenerate
generators are implicitly zero, which is exactly the condition for a
function on the free module to descend to the quotient.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product

from .chains import LB, NIE, SideError
from .homology import (DEFAULT_GENERATOR_CAP, _require_prime,
                       boundary_matrix, nullspace_mod_p, solve_mod_p)


@dataclass(frozen=True)
class CochainTensor:
    """Map from degree-n generators of one side to Z_m."""

    side: str
    degree: int
    modulus: int
    size: int
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.side not in (LB, NIE):
            raise SideError("unknown side %r" % self.side)
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        vals = {g: v % self.modulus for g, v in self.values.items()
                if v % self.modulus}
        object.__setattr__(self, "values", vals)

    def __call__(self, gen):
        return self.values.get(gen, 0)

    def is_zero(self):
        return not self.values

    def __eq__(self, other):
        return (isinstance(other, CochainTensor) and self.side == other.side
                and self.degree == other.degree and self.modulus == other.modulus
                and self.values == other.values)

    def add(self, other, scale=1):
        if (self.side, self.degree, self.modulus) != (other.side, other.degree, other.modulus):
            raise SideError("cochain parameters do not match")
        vals = dict(self.values)
        for g, v in other.values.items():
            vals[g] = (vals.get(g, 0) + scale * v) % self.modulus
        return CochainTensor(self.side, self.degree, self.modulus, self.size, vals)

    def to_json(self):
        n = self.size
        if (self.side, self.degree) in ((LB, 2), (NIE, 1)):
            tensor = [[[self((a, b, c)) for c in range(1, n + 1)]
                       for b in range(1, n + 1)] for a in range(1, n + 1)]
            payload = {"side": self.side, "degree": self.degree,
                       "modulus": self.modulus, "size": n, "tensor": tensor}
        else:
            payload = {"side": self.side, "degree": self.degree,
                       "modulus": self.modulus, "size": n,
                       "values": [[list(g), v] for g, v in sorted(self.values.items())]}
        return json.dumps(payload)

    @classmethod
    def from_json(cls, text):
        obj = json.loads(text)
        side, degree, m, n = obj["side"], obj["degree"], obj["modulus"], obj["size"]
        if "tensor" in obj:
            t = obj["tensor"]
            vals = {(a, b, c): t[a - 1][b - 1][c - 1]
                    for a, b, c in product(range(1, n + 1), repeat=3)}
        else:
            vals = {tuple(g): v for g, v in obj["values"]}
        return cls(side, degree, m, n, vals)


def cochain_from_tensor(ctx, side, tensor_rows, modulus):
    """Degree-2 LB (or degree-1 Nie) cochain from an n*n*n value tensor.

    tensor[a-1][b-1][c-1] is the value on the generator (a, b, c); for the
    LB side that generator is the pair ((a,b),(a,c)).  The tensor must
    vanish on degenerate generators.
    """
    degree = 2 if side == LB else 1
    n = ctx.size
    vals = {}
    for a, b, c in product(ctx.elements, repeat=3):
        v = tensor_rows[a - 1][b - 1][c - 1] % modulus
        gen = (a, b, c)
        if ctx.is_degenerate(side, gen):
            if v:
                raise ValueError("nonzero value on degenerate generator %r" % (gen,))
            continue
        if v:
            vals[gen] = v
    return CochainTensor(side, degree, modulus, n, vals)


def evaluate(theta, chain):
    """Pairing sum(coeff * theta(gen)) mod m; degenerates contribute 0."""
    if theta.side != chain.side or theta.degree != chain.degree:
        raise SideError("cochain and chain sides or degrees do not match")
    total = 0
    for g, c in chain.support.items():
        total += c * theta(g)
    return total % theta.modulus


def coboundary(ctx, theta):
    """delta(theta) = theta o boundary, one degree up, on the quotient."""
    out = {}
    for g in ctx.generators(theta.side, theta.degree + 1):
        v = evaluate(theta, ctx.boundary(theta.side, g))
        if v:
            out[g] = v
    return CochainTensor(theta.side, theta.degree + 1, theta.modulus,
                         theta.size, out)


def is_cocycle(ctx, theta):
    return coboundary(ctx, theta).is_zero()


def _delta_matrix(ctx, side, n, cap):
    """Matrix of delta^n : C^n -> C^{n+1}; the transposed boundary matrix."""
    mat, rows, cols = boundary_matrix(ctx, side, n + 1, cap=cap)
    # mat rows: degree-n generators; columns: degree-(n+1) generators.
    return [[mat[i][j] for i in range(len(rows))] for j in range(len(cols))], rows, cols


def cocycle_basis(ctx, side, n, p, cap=None):
    """Basis of the degree-n cocycles over Z_p, reduced echelon form."""
    _require_prime(p)
    cap = DEFAULT_GENERATOR_CAP if cap is None else cap
    delta, domain, _ = _delta_matrix(ctx, side, n, cap)
    basis = []
    for vec in nullspace_mod_p(delta, p, len(domain)):
        vals = {g: v for g, v in zip(domain, vec) if v}
        basis.append(CochainTensor(side, n, p, ctx.size, vals))
    return basis


def are_cohomologous(ctx, theta, theta2, cap=None):
    """Whether theta - theta2 is a coboundary over Z_p (p prime)."""
    if (theta.side, theta.degree, theta.modulus) != (theta2.side, theta2.degree, theta2.modulus):
        raise SideError("cochain parameters do not match")
    p = theta.modulus
    _require_prime(p)
    if not is_cocycle(ctx, theta) or not is_cocycle(ctx, theta2):
        raise ValueError("both cochains must be cocycles")
    cap = DEFAULT_GENERATOR_CAP if cap is None else cap
    diff = theta.add(theta2, -1)
    mat, rows, cols = boundary_matrix(ctx, theta.side, theta.degree, cap=cap)
    # delta^{n-1} matrix: rows = degree-n gens (cols of mat), cols = degree-(n-1).
    delta = [[mat[i][j] for i in range(len(rows))] for j in range(len(cols))]
    rhs = [diff(g) for g in cols]
    return solve_mod_p(delta, rhs, p) is not None

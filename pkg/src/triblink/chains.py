"""The two chain complexes attached to a tribracket.

Side "LB": degree-n generators (a, b1, .., bn) standing for the tuple
((a,b1), .., (a,bn)); the module is zero below degree 1.  A generator is
degenerate when two consecutive b's agree.

Side "N": degree-n generators are (n+2)-tuples (a0, .., a_{n+1}); the
module is zero below degree 0.  A generator is degenerate when the
vertical bracket of three consecutive entries fixes the middle one.

Both boundary operators live over the free modules; the quotient by the
degenerate submodule is realized by basis restriction and projection.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .tensors import (HORIZONTAL, check_axioms, horizontal_to_vertical,
                      vertical_to_horizontal)

LB = "LB"
NIE = "N"


class SideError(ValueError):
    """Raised when chains or cochains from different complexes are mixed."""


class TribracketContext:
    """A horizontal/vertical tensor pair fixing both complexes."""

    def __init__(self, tensor, checked=True):
        if checked and not check_axioms(tensor).passed:
            raise ValueError("tensor fails tribracket axioms")
        if tensor.kind == HORIZONTAL:
            self.horizontal = tensor
            self.vertical = horizontal_to_vertical(tensor)
        else:
            self.vertical = tensor
            self.horizontal = vertical_to_horizontal(tensor)
        self.size = tensor.size

    @property
    def elements(self):
        return range(1, self.size + 1)

    def h(self, a, b, c):
        return self.horizontal(a, b, c)

    def v(self, a, b, c):
        return self.vertical(a, b, c)

    # -- generators ----------------------------------------------------

    def generators(self, side, degree):
        """Nondegenerate generators of the given degree, lexicographic."""
        return [g for g in self.all_generators(side, degree)
                if not self.is_degenerate(side, g)]

    def all_generators(self, side, degree):
        if side == LB:
            if degree < 1:
                return []
            return [(a,) + tail for a in self.elements
                    for tail in product(self.elements, repeat=degree)]
        if side == NIE:
            if degree < 0:
                return []
            return list(product(self.elements, repeat=degree + 2))
        raise SideError("unknown side %r" % side)

    def is_degenerate(self, side, gen):
        if side == LB:
            tail = gen[1:]
            return any(tail[i] == tail[i + 1] for i in range(len(tail) - 1))
        if side == NIE:
            return any(self.v(gen[j - 1], gen[j], gen[j + 1]) == gen[j]
                       for j in range(1, len(gen) - 1))
        raise SideError("unknown side %r" % side)

    # -- boundary operators --------------------------------------------

    def lb_boundary(self, gen):
        """Boundary of an LB generator (a, b1, .., bn); zero below degree 2."""
        a, tail = gen[0], gen[1:]
        n = len(tail)
        out = FormalChain(LB, n - 1)
        if n < 2:
            return out
        for i in range(1, n + 1):
            bi = tail[i - 1]
            sign = -1 if i % 2 else 1
            deleted = (a,) + tail[:i - 1] + tail[i:]
            starred = (bi,) + tuple(
                self.h(a, tail[j - 1], bi) for j in range(1, i)) + tuple(
                self.h(a, bi, tail[j - 1]) for j in range(i + 1, n + 1))
            out.add(deleted, sign)
            out.add(starred, -sign)
        return out

    def nie_y(self, gen, i):
        """The auxiliary entries y_(i,j) for j = 1..n of a degree-n tuple."""
        n = len(gen) - 2
        y = {}
        for j in (i, i + 1):
            if 1 <= j <= n:
                y[j] = self.v(gen[j - 1], gen[j], gen[j + 1])
        for j in range(i - 1, 0, -1):
            y[j] = self.v(gen[j - 1], gen[j], y[j + 1])
        for j in range(i + 2, n + 1):
            y[j] = self.v(y[j - 1], gen[j], gen[j + 1])
        return y

    def nie_boundary(self, gen):
        """Boundary of a degree-n tuple (a0, .., a_{n+1}); zero below degree 1."""
        n = len(gen) - 2
        out = FormalChain(NIE, n - 1)
        if n < 1:
            return out
        for i in range(n + 1):
            sign = -1 if i % 2 else 1
            y = self.nie_y(gen, i)
            first = tuple(y[j] for j in range(1, i + 1)) + gen[i + 1:]
            second = gen[:i + 1] + tuple(y[j] for j in range(i + 1, n + 1))
            out.add(first, sign)
            out.add(second, -sign)
        return out

    def boundary(self, side, gen):
        return self.lb_boundary(gen) if side == LB else self.nie_boundary(gen)

    def boundary_chain(self, chain):
        """Linear extension of the boundary to a formal chain."""
        out = FormalChain(chain.side, chain.degree - 1)
        for gen, coeff in chain.support.items():
            out.add_chain(self.boundary(chain.side, gen), coeff)
        return out

    def project_nondegenerate(self, chain):
        """Drop degenerate generators: the quotient complex on basis level."""
        out = FormalChain(chain.side, chain.degree)
        for gen, coeff in chain.support.items():
            if not self.is_degenerate(chain.side, gen):
                out.add(gen, coeff)
        return out


@dataclass
class FormalChain:
    """Finitely supported integer combination of same-degree generators."""

    side: str
    degree: int
    support: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.side not in (LB, NIE):
            raise SideError("unknown side %r" % self.side)
        self.support = {g: c for g, c in self.support.items() if c}

    def add(self, gen, coeff=1):
        c = self.support.get(gen, 0) + coeff
        if c:
            self.support[gen] = c
        else:
            self.support.pop(gen, None)
        return self

    def add_chain(self, other, scale=1):
        if other.side != self.side or other.degree != self.degree:
            raise SideError("cannot add chains of different side or degree")
        for gen, coeff in other.support.items():
            self.add(gen, scale * coeff)
        return self

    def copy(self):
        return FormalChain(self.side, self.degree, dict(self.support))

    def is_zero(self):
        return not self.support

    def __add__(self, other):
        return self.copy().add_chain(other)

    def __sub__(self, other):
        return self.copy().add_chain(other, -1)

    def __eq__(self, other):
        return (isinstance(other, FormalChain) and self.side == other.side
                and self.degree == other.degree and self.support == other.support)

    def items(self):
        return sorted(self.support.items())

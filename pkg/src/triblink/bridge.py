"""Chain maps between the two complexes and the bracket combinators.

phi sends an LB generator of degree n to a Nie generator of degree n-1
and psi is its inverse; both are realized through the closed evaluable
forms of the nested bracket words rather than symbolic substitution.
"""

from __future__ import annotations

from .chains import LB, NIE, FormalChain, SideError
from .cochains import CochainTensor


def bold_angle(ctx, word):
    """Right-nested vertical bracket of a word.

    <<a0,..,an>> = <a0,a1,<a1,a2,<..<a_{n-2},a_{n-1},a_n>..>>>; a length-1
    word returns its entry and a length-2 word returns its last entry,
    the boundary convention under which the splitting identities hold.
    """
    if not word:
        raise ValueError("empty bracket word")
    if len(word) <= 2:
        return word[-1]
    return ctx.v(word[0], word[1], bold_angle(ctx, word[1:]))


def bold_square(ctx, word, b):
    """Augmented square bracket [[a0,..,an; b]], folded from the inside.

    Evaluates [a_{n-1},a_n,[a_{n-2},a_{n-1},[..[a0,a1,b]..]]].
    """
    if len(word) < 2:
        raise ValueError("square bracket word needs at least two entries")
    acc = b
    for x, y in zip(word, word[1:]):
        acc = ctx.h(x, y, acc)
    return acc


def phi(ctx, gen):
    """LB generator (a, b1, .., bn) to the Nie tuple (z0, .., zn)."""
    a, tail = gen[0], gen[1:]
    z = [a]
    for i, b in enumerate(tail, start=1):
        z.append(b if i == 1 else bold_square(ctx, z, b))
    return tuple(z)


def psi(ctx, gen):
    """Nie tuple (a, a1, .., an) to the LB generator (a, w1, .., wn)."""
    a, rest = gen[0], gen[1:]
    w = [a]
    for i in range(1, len(rest) + 1):
        w.append(rest[0] if i == 1 else bold_angle(ctx, gen[:i + 1]))
    return tuple(w)


def phi_chain(ctx, chain, project=True):
    if chain.side != LB:
        raise SideError("phi acts on LB chains")
    out = FormalChain(NIE, chain.degree - 1)
    for g, c in chain.support.items():
        out.add(phi(ctx, g), c)
    return ctx.project_nondegenerate(out) if project else out


def psi_chain(ctx, chain, project=True):
    if chain.side != NIE:
        raise SideError("psi acts on Nie chains")
    out = FormalChain(LB, chain.degree + 1)
    for g, c in chain.support.items():
        out.add(psi(ctx, g), c)
    return ctx.project_nondegenerate(out) if project else out


def pull_cochain(ctx, theta, via):
    """Transport a cochain through psi (LB -> Nie) or phi (Nie -> LB).

    An LB cochain of degree n becomes the Nie cochain theta o psi_n of
    degree n-1, and conversely with phi; cocycles map to cocycles.
    """
    if via == "psi":
        if theta.side != LB:
            raise SideError("psi pulls LB cochains")
        gens = ctx.generators(NIE, theta.degree - 1)
        vals = {g: theta(psi(ctx, g)) for g in gens}
        return CochainTensor(NIE, theta.degree - 1, theta.modulus, theta.size, vals)
    if via == "phi":
        if theta.side != NIE:
            raise SideError("phi pulls Nie cochains")
        gens = ctx.generators(LB, theta.degree + 1)
        vals = {g: theta(phi(ctx, g)) for g in gens}
        return CochainTensor(LB, theta.degree + 1, theta.modulus, theta.size, vals)
    raise ValueError("via must be 'phi' or 'psi'")


# -- helpers mirroring the auxiliary sequences, used by the test suite --


def z_sequence(ctx, a, bs):
    return phi(ctx, (a,) + tuple(bs))


def w_sequence(ctx, a, as_):
    return psi(ctx, (a,) + tuple(as_))[1:]


def y_table(ctx, tuple_, i):
    """y_(i,j) for j = 1..n of the (n+2)-tuple, per the boundary recursion."""
    return ctx.nie_y(tuple_, i)

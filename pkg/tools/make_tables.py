"""Build, identify, and freeze the bundled diagram table and golden values.

Each named knot/link gets a candidate construction; its identity is
validated against reference Alexander data; the mirror/orientation
variant is chosen to reproduce the attainable golden rows of all value
tables jointly.  Rows marked impossible carry a verified reason and the
honestly computed value instead.  Output: src/triblink/data/*.pd and
src/triblink/data/golden.json.
"""

from __future__ import annotations

import json
import sys
from itertools import product
from pathlib import Path

SRC = Path(__file__).resolve().parent.parent / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

from builders import braid_closure, montesinos, pretzel, rational_link  # noqa: E402
from identify import (alex_fingerprint, alexander_poly, bracket_span,  # noqa: E402
                      determinant, linking_matrix)

from triblink.chains import LB, TribracketContext  # noqa: E402
from triblink.cochains import cochain_from_tensor  # noqa: E402
from triblink.coloring import invariant  # noqa: E402
from triblink.diagram import connected_sum, parse_pd  # noqa: E402
from triblink.examples import PACKS  # noqa: E402

DATA = SRC / "triblink" / "data"

ALEX = {
    "3_1": (1, -1, 1), "4_1": (1, -3, 1), "5_1": (1, -1, 1, -1, 1),
    "5_2": (2, -3, 2), "6_1": (2, -5, 2), "6_2": (1, -3, 3, -3, 1),
    "6_3": (1, -3, 5, -3, 1), "7_1": (1, -1, 1, -1, 1, -1, 1),
    "7_2": (3, -5, 3), "7_3": (2, -3, 3, -3, 2), "7_4": (4, -7, 4),
    "7_5": (2, -4, 5, -4, 2), "7_6": (1, -5, 7, -5, 1), "7_7": (1, -5, 9, -5, 1),
    "8_1": (3, -7, 3), "8_2": (1, -3, 3, -3, 3, -3, 1), "8_3": (4, -9, 4),
    "8_4": (2, -5, 5, -5, 2), "8_5": (1, -3, 4, -5, 4, -3, 1),
    "8_6": (2, -6, 7, -6, 2), "8_7": (1, -3, 5, -5, 5, -3, 1),
    "8_8": (2, -6, 9, -6, 2), "8_9": (1, -3, 5, -7, 5, -3, 1),
    "8_10": (1, -3, 6, -7, 6, -3, 1), "8_11": (2, -7, 9, -7, 2),
    "8_12": (1, -7, 13, -7, 1), "8_13": (2, -7, 11, -7, 2),
    "8_14": (2, -8, 11, -8, 2), "8_15": (3, -8, 11, -8, 3),
    "8_16": (1, -4, 8, -9, 8, -4, 1), "8_17": (1, -4, 8, -11, 8, -4, 1),
    "8_18": (1, -5, 10, -13, 10, -5, 1), "8_19": (1, -1, 0, 1, 0, -1, 1),
    "8_20": (1, -2, 3, -2, 1), "8_21": (1, -4, 5, -4, 1),
}

KNOT_RECIPES = {
    "3_1": ("braid", [1, 1, 1], 2),
    "4_1": ("braid", [1, -2, 1, -2], 3),
    "5_1": ("braid", [1, 1, 1, 1, 1], 2),
    "5_2": ("rational", [2, 3]),
    "6_1": ("rational", [4, 2]),
    "6_2": ("rational", [3, 1, 2]),
    "6_3": ("rational", [2, 1, 1, 2]),
    "7_1": ("braid", [1] * 7, 2),
    "7_2": ("rational", [5, 2]),
    "7_3": ("rational", [4, 3]),
    "7_4": ("rational", [3, 1, 3]),
    "7_5": ("rational", [3, 2, 2]),
    "7_6": ("rational", [2, 2, 1, 2]),
    "7_7": ("rational", [2, 1, 1, 1, 2]),
    "8_1": ("rational", [6, 2]),
    "8_2": ("rational", [5, 1, 2]),
    "8_3": ("rational", [4, 4]),
    "8_4": ("rational", [4, 1, 3]),
    "8_5": ("montesinos", [3, 3, 2]),
    "8_6": ("rational", [3, 3, 2]),
    "8_7": ("rational", [4, 1, 1, 2]),
    "8_8": ("rational", [2, 3, 1, 2]),
    "8_9": ("rational", [3, 1, 1, 3]),
    "8_10": ("montesinos", [("rotm", (2, 1)), 3, 2]),
    "8_11": ("rational", [3, 2, 1, 2]),
    "8_12": ("rational", [2, 2, 2, 2]),
    "8_13": ("rational", [3, 1, 1, 1, 2]),
    "8_14": ("rational", [2, 2, 1, 1, 2]),
    "8_15": ("montesinos", [("rotm", (2, 1)), ("rotm", (2, 1)), 2]),
    "8_16": ("braid", [1, 1, -2, 1, 1, -2, 1, -2], 3),
    "8_17": ("braid", [1, 1, -2, 1, -2, 1, -2, -2], 3),
    "8_18": ("braid", [1, -2, 1, -2, 1, -2, 1, -2], 3),
    "8_19": ("braid", [1, 2, 1, 2, 1, 2, 1, 2], 3),
    "8_20": ("braid", [1, 1, 1, -2, -1, -1, -1, -2], 3),
    "8_21": ("montesinos", [("rot", (2, 1)), ("rot", (2, 1)), 2]),
}

LINK_RECIPES = {
    "L2a1": ("braid", [1, 1], 2),
    "L4a1": ("braid", [1, 1, 1, 1], 2),
    "L5a1": ("rational", [2, 1, 2]),
    "L6a1": ("rational", [2, 2, 2]),
    "L6a2": ("rational", [3, 3]),
    "L6a3": ("braid", [1] * 6, 2),
    "L6a4": ("braid", [1, -2, 1, -2, 1, -2], 3),
    "L6a5": ("pretzel", [2, 2, 2]),
    "L6n1": ("braid", [1, 2, 1, 2, 1, 2], 3),
    "L7a1": ("braid", [1, 1, -2, 1, -2, 1, -2], 3),
    "L7a2": ("braid", [1, 1, -2, 1, 1, -2, -2], 3),
    "L7a3": ("rational", [2, 3, 2]),
    "L7a4": ("pretzel", [2, 2, 3]),
    "L7a5": ("rational", [3, 1, 1, 2]),
    "L7a6": ("rational", [4, 1, 2]),
    "L7a7": ("montesinos", [(2, 1), 2, 2]),
    "L7n1": ("montesinos", [2, -2, 3]),
    "L7n2": ("montesinos", [2, -2, -3]),
}

# published rows: knots have (5.7, 5.8) values, links (5.6, 5.8)
KNOT_57 = {name: "9" for name in KNOT_RECIPES}
KNOT_57.update({
    "3_1": "9+18u", "7_4": "9+18u", "7_7": "9+18u", "8_15": "9+18u",
    "8_21": "9+18u", "6_1": "27", "8_10": "27", "8_5": "9+18u^2",
    "8_19": "9+18u^2", "8_11": "15+6u+6u^2", "8_20": "18+6u+3u^2",
    "8_18": "33+24u+24u^2",
})
KNOT_58 = {name: "9" for name in KNOT_RECIPES}
KNOT_58.update({
    "3_1": "9+18u", "7_4": "9+18u", "7_7": "9+18u", "8_15": "9+18u",
    "8_21": "9+18u", "6_1": "27", "8_10": "27", "8_5": "9+18u^2",
    "8_19": "9+18u^2", "8_11": "13+4u+10u^2", "8_20": "16+4u+7u^2",
    "8_18": "25+28u+28u^2",
})
LINK_56 = {
    "L2a1": "9+18u", "L4a1": "9+18u^2", "L5a1": "27", "L6a1": "9+18u^2",
    "L6a2": "9+18u^3", "L6a3": "9+18u^3", "L6a4": "9", "L6a5": "9+54u^2+18u^3",
    "L6n1": "9+54u^2+18u^3", "L7a1": "27", "L7a2": "9+18u^2", "L7a3": "27",
    "L7a4": "27", "L7a5": "9+18u", "L7a6": "9+18u", "L7a7": "45+18u+18u^2",
    "L7n1": "9+18u^3", "L7n2": "14+3u+2u^2+4u^3+4u^4",
}
LINK_58 = {
    "L2a1": "9", "L4a1": "9", "L5a1": "9", "L6a1": "9+18u", "L6a2": "9",
    "L6a3": "9+18u^2", "L6a4": "9", "L6a5": "9+18u^2", "L6n1": "9",
    "L7a1": "9+18u^2", "L7a2": "9", "L7a3": "9", "L7a4": "9",
    "L7a5": "13+10u+4u^2", "L7a6": "9", "L7a7": "9", "L7n1": "9",
    "L7n2": "9",
}
COMPOSITE_57 = {"3_1#3_1": "45+18u+18u^2", "3_1#3_1bar": "9+36u+36u^2"}

# rows whose published values cannot arise from any cocycle of the stated
# weight theory (verified by exhaustive scans over the full cocycle spaces
# and by the coloring-count dimension bound); the golden file records the
# honestly computed value next to the published one
IMPOSSIBLE = {
    ("5.6", "L6a4"): "count bound: a connected 3-component diagram admits "
                     ">= 81 region colorings (constants + per-component "
                     "winding classes), so total 9 is unreachable",
    ("5.6", "L7n2"): "exhaustive scan: every orientation/mirror of the "
                     "7-crossing nonalternating candidates yields 9+18u^2 "
                     "or 9+18u^3",
    ("5.7", "8_11"): "H^2 over Z_3 is 1-dimensional; all 2187 cocycles give 27",
    ("5.7", "8_20"): "same scan: only 27 is attainable",
    ("5.7", "8_18"): "same scan: attainable set is {81, 9+36u+36u^2}",
    ("5.7", "3_1#3_1"): "multiplicativity of the coloring/weight structure "
                        "under connected sum forces (9+18u)^2/9 = "
                        "9+36u+36u^2 for the same-chirality sum",
    ("5.7", "3_1#3_1bar"): "mirror-pair sum is forced to (9+18u)(9+18u^2)/9 "
                           "= 45+18u+18u^2; the source pair is swapped",
    ("5.8", "printed-cocycle"): "the printed tensor violates 24 cocycle "
                                "conditions; the bundled corrected tensor "
                                "is the closest true cocycle in the class "
                                "fixed by the trefoil anchor",
    ("5.8", "8_11"): "1-dimensional H^2: only 27 attainable",
    ("5.8", "8_20"): "only 27 attainable",
    ("5.8", "8_18"): "attainable set is {81, 9+36u+36u^2}",
    ("5.8", "L7a5"): "only 27 attainable",
}


def build(recipe, flips=(), mirror=False):
    kind = recipe[0]
    if kind == "braid":
        d = braid_closure(recipe[1], recipe[2])
        if mirror:
            d = d.mirror()
    elif kind == "rational":
        d = rational_link(recipe[1], mirror=mirror)
    elif kind == "montesinos":
        d = montesinos(recipe[1], mirror=mirror)
    elif kind == "pretzel":
        d = pretzel(recipe[1], mirror=mirror)
    else:
        raise ValueError(kind)
    for arc in flips:
        d = d.reverse_component(arc)
    return d


_TOOLS = {}


def pack_tools(name):
    if name not in _TOOLS:
        pack = PACKS[name]
        ctx = TribracketContext(pack.tribracket)
        theta = cochain_from_tensor(ctx, LB, pack.cocycle_entries, pack.modulus)
        _TOOLS[name] = (ctx, theta)
    return _TOOLS[name]


def phi(d, pack_name):
    ctx, theta = pack_tools(pack_name)
    return str(invariant(d, theta, ctx, side=LB))


def variants(d):
    """Deterministic orientation/mirror variants of a diagram."""
    for mi, dm in (("", d), ("m", d.mirror())):
        comps = dm.component_arcs()
        for flips in product((0, 1), repeat=len(comps)):
            dd = dm
            for f, comp in zip(flips, comps):
                if f:
                    dd = dd.reverse_component(comp[0])
            yield mi + "".join(map(str, flips)), dd


def select_variant(name, base, targets):
    """First variant matching every attainable target (pack -> value)."""
    want = {p: v for p, v in targets.items() if (p, name) not in IMPOSSIBLE}
    fallback = None
    for label, var in variants(base):
        got = {p: phi(var, p) for p in targets}
        if fallback is None:
            fallback = (label, var, got)
        if all(got[p] == v for p, v in want.items()):
            return label, var, got
    raise SystemExit("no variant of %s matches %r (attainable %r); first "
                     "variant gives %r" % (name, targets, want, fallback[2]))


def freeze(name, diagram, recipe, label, golden, computed, printed):
    path = DATA / (name.replace("#", "_sum_") + ".pd")
    header = [
        "%s: %s %r, variant %s" % (name, recipe[0], recipe[1], label or "id"),
        "orientation fixed against the bundled golden tables",
    ]
    path.write_text(diagram.to_text(header))
    reparsed = parse_pd(path.read_text())
    assert reparsed.crossings == diagram.crossings
    golden[name] = {
        "file": path.name,
        "crossings": len(diagram.crossings),
        "components": diagram.components,
        "writhe": diagram.writhe(),
        "printed": printed,
        "computed": computed,
        "defects": {p: IMPOSSIBLE[(p, name)] for p in printed
                    if (p, name) in IMPOSSIBLE},
    }


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    golden = {}

    for name, recipe in sorted(KNOT_RECIPES.items()):
        base = build(recipe)
        fp = alex_fingerprint(alexander_poly(base))
        want_fp = alex_fingerprint({i: c for i, c in enumerate(ALEX[name])})
        if fp != want_fp:
            raise SystemExit("identity check failed for %s: %s vs %s"
                             % (name, fp, want_fp))
        targets = {"5.7": KNOT_57[name], "5.8": KNOT_58[name]}
        label, var, got = select_variant(name, base, targets)
        freeze(name, var, recipe, label, golden, got, targets)
        print("knot %-5s %-8s det=%-3d 5.7=%-14s 5.8=%s"
              % (name, label or "id", determinant(var), got["5.7"], got["5.8"]))

    for name, recipe in sorted(LINK_RECIPES.items()):
        base = build(recipe)
        targets = {"5.6": LINK_56[name], "5.8": LINK_58[name]}
        label, var, got = select_variant(name, base, targets)
        freeze(name, var, recipe, label, golden, got, targets)
        print("link %-5s %-8s det=%-3d comps=%d 5.6=%-16s 5.8=%s"
              % (name, label or "id", determinant(var), var.components,
                 got["5.6"], got["5.8"]))

    # composites from the frozen trefoil
    tref = parse_pd((DATA / "3_1.pd").read_text())
    for name, other in (("3_1#3_1", tref), ("3_1#3_1bar", tref.mirror())):
        d = connected_sum(tref, other)
        got = {"5.7": phi(d, "5.7"), "5.8": phi(d, "5.8")}
        printed = {"5.7": COMPOSITE_57[name]}
        freeze(name, d, ("sum", ["3_1", "3_1" if other is tref else "3_1bar"]),
               "", golden, got, printed)
        print("comp %-10s 5.7=%-16s 5.8=%s" % (name, got["5.7"], got["5.8"]))

    # mirror trefoil, alternative trefoil diagram, unknot
    mir = tref.mirror()
    got = {"5.7": phi(mir, "5.7"), "5.8": phi(mir, "5.8")}
    freeze("3_1bar", mir, ("mirror", ["3_1"]), "", golden, got,
           {"5.7": "9+18u^2", "5.8": "9+18u^2"})
    alt = braid_closure([1, 1, 1, 1, -1], 2)
    got_alt = {"5.7": phi(alt, "5.7"), "5.8": phi(alt, "5.8")}
    assert got_alt == {"5.7": golden["3_1"]["computed"]["5.7"],
                       "5.8": golden["3_1"]["computed"]["5.8"]}
    freeze("3_1alt", alt, ("braid", [1, 1, 1, 1, -1]), "", golden, got_alt, {})
    (DATA / "unknot.pd").write_text("# unknot: crossingless circle\nO 1\n")
    golden["unknot"] = {"file": "unknot.pd", "crossings": 0, "components": 1,
                        "writhe": 0, "printed": {}, "computed": {}, "defects": {}}

    (DATA / "golden.json").write_text(json.dumps(golden, indent=1, sort_keys=True))
    print("wrote", len(golden), "entries")


if __name__ == "__main__":
    main()

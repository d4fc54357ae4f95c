#!/usr/bin/env python3
"""Materialize the validity and star lattices on a micro-universe.

Builds the default universe (atoms p, q with reserve atom r, depth 1,
premise cap 2), computes the membership of every universe inference in the
ss/tt/st/ts logics over a chosen scheme, and prints the sizes of the sets
the two lattices are made of, including what cut closure and dual cut
closure do to the union and the intersection.

Usage: python scripts/closure_landscape.py [scheme] [atoms] [depth]
Defaults: strong, "p,q", 1.
"""

import sys

from trivalent import (
    LogicSpec,
    SS,
    ST,
    TS,
    TT,
    Universe,
    dual_transitive_closure,
    star_set,
    transitive_closure,
)
from trivalent.characterize import valid_subset
from trivalent.scheme import schemes_from_selector


def main() -> int:
    scheme = schemes_from_selector(sys.argv[1] if len(sys.argv) > 1 else "strong")[0]
    atoms = (sys.argv[2] if len(sys.argv) > 2 else "p,q").split(",")
    depth = int(sys.argv[3]) if len(sys.argv) > 3 else 1
    reserve = "r" if "r" not in atoms else "s"
    u = Universe.build(atoms, depth, 2, reserve=[reserve])
    print(f"universe: {u.describe()}  ({u.inference_count()} inferences)")

    members = {
        name: valid_subset(LogicSpec(scheme, standard), u)
        for name, standard in (("ss", SS), ("tt", TT), ("st", ST), ("ts", TS))
    }
    union = members["ss"] | members["tt"]
    meet = members["ss"] & members["tt"]
    closed_union = transitive_closure(union, u)
    opened_meet = dual_transitive_closure(meet, u)

    print(f"\nvalidity sets over {scheme}:")
    for name in ("ts", "ss", "tt", "st"):
        print(f"  {name:>6}: {len(members[name]):5d}")
    print(f"  ss|tt : {len(union):5d}")
    print(f"  T(ss|tt): {len(closed_union):3d}  (subset of st: {closed_union <= members['st']})")
    print(f"  ss&tt : {len(meet):5d}")
    reserve_free = [inf for inf in opened_meet if u.is_reserve_free(inf)]
    print(f"  Td(ss&tt): {len(opened_meet):2d}  (reserve-free part: {len(reserve_free)})")

    print(f"\nstar sets over {scheme}:")
    for name, standard in (("ss", SS), ("tt", TT), ("st", ST)):
        star = star_set(LogicSpec(scheme, standard), u)
        print(f"  {name}*: {len(star):5d}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

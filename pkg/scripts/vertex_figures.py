"""Write the vertex figure of every rank-0 object of a fixture as DOT.

    python scripts/vertex_figures.py torus out/
"""
import argparse
import os

from incidence.axioms import linked_clusters
from incidence.constructions import upper_category
from incidence.export import to_dot, write_text
from incidence.fixtures import CATALOG, fixture


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("name", choices=CATALOG)
    ap.add_argument("outdir")
    args = ap.parse_args()
    c = fixture(args.name).build()
    os.makedirs(args.outdir, exist_ok=True)
    for x in c.proper_objects():
        if c.ranks[x] != 0:
            continue
        up, _ = upper_category(c, x)
        label = c.object_names[x]
        path = os.path.join(args.outdir, f"{args.name}.{label}.dot")
        write_text(to_dot(up, f"{args.name} at {label}"), path)
        print(f"{label}: {len(up.proper_objects())} proper objects, "
              f"{len(linked_clusters(up))} cluster(s) -> {path}")


if __name__ == "__main__":
    main()

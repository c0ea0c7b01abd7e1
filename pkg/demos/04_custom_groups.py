"""
Bringing your own groups
========================

Build a group from permutations, save its Cayley table, and hand it
to the command line as part of a panel file.
"""

import tempfile
from pathlib import Path

from gnknot.cli import run
from gnknot.finite_groups import from_permutations, perm_from_cycles, write_group_file

# PSL(2,7) as the automorphisms of the Fano plane on points 1..7
psl = from_permutations(
    7,
    [perm_from_cycles(7, "(1 2 3 4 5 6 7)"), perm_from_cycles(7, "(2 3 5)(4 7 6)"), perm_from_cycles(7, "(1 2)(3 6)")],
    name="PSL2_7",
)
print(psl.name, "order", psl.order, "classes", sorted(map(len, psl.classes)))

with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    write_group_file(psl, tmp / "psl2_7.txt")
    (tmp / "panel.txt").write_text("S3\n@psl2_7.txt\nA6\n")

    for argv in (
        ["count", "trefoil", "--n", "2", "--group", "@%s" % (tmp / "psl2_7.txt")],
        ["fingerprint", "figure-8", "--panel", "@%s" % (tmp / "panel.txt"), "--n", "1,2"],
        ["compare", "square", "granny", "--panel", "@%s" % (tmp / "panel.txt"), "--n", "2"],
    ):
        code, out = run(argv)
        print("$ gnknot", " ".join(argv[:2]), "...")
        print(out)

"""Tabulate where the engine agrees and disagrees with the published values.

Every row is one published equation.  `oracle` reports whether the exact
engine value matches the independent numeric cross-check (it always does);
`published` reports whether it also coincides with the printed value.
Rows with published=no are the documented misprints: for each of them the
engine side is confirmed by the oracle, and the precise discrepancy
(spurious dim F factor, missing pi, sign, duplicated block, conflicting
total) is characterized in the test suite and the reports.
"""

from wresbd.ledger import build_ledger

for family in ("dirac", "signature"):
    ledger = build_ledger(family, [1])
    print("%s family" % family)
    print("  %-8s %-18s %-9s %-9s" % ("id", "case/block", "oracle",
                                      "published"))
    for e in ledger["entries"]:
        where = e["case"] or "-"
        if e["block"]:
            where += "/" + e["block"]
        print("  %-8s %-18s %-9s %-9s"
              % (e["id"], where,
                 "yes" if e["match_oracle"] else "NO",
                 "yes" if e["match_paper"] else "no"))
    print()

# ─────────────────────────────────────────────────────────────────────────────
# severi_genus/__init__.py
#
# Makes this folder a Python package so you can import from it like:
#   from severi_genus.gw_counts import n_table
#   from severi_genus import genus_invariants
#
# FILES IN THIS FOLDER:
#   models.py            - shared dataclasses (tables, reports, divisor classes)
#   errors.py            - exception hierarchy
#   exact_arith.py       - binomials and exact rational helpers
#   gw_counts.py         - N_d via the recursion, memoized in a GWTable
#   genus_invariants.py  - g, ĝ, g̃, cusps, node contributions, M_d
#   canonical_class.py   - K of M_0,n(P^r,d) as a divisor-class expansion
#   reference_tables.py  - reads & caches data/reference_tables.json
#   verification.py      - the verify suite
#   formatting.py        - text / JSON / CSV output
#   cli.py               - command-line front end
# ─────────────────────────────────────────────────────────────────────────────

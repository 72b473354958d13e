"""The table of Berge knots b+-(m, n) ordered by surgery coefficient p.

Run:  python3 demos/02_table.py
Same data from the shell:  bergeknots table --max-p 100 --format md
"""
from bergeknots import berge_table, genus_collisions
from bergeknots.tables import format_collisions, format_rows

rows = berge_table(100)
print(format_rows(rows, "md"))
print(len(berge_table(500)), "rows with p <= 500 (the (+-,1,1) unknot rows are left out)")

# different knots can share a genus; the first such group is g = 36
groups = genus_collisions(500)
print(len(groups), "genus collisions with p <= 500; the first one:\n")
print(format_collisions(groups[:1], "md"))

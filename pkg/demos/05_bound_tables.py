"""Where the search results sit among the classical girth/order bounds.

Run:  python demos/05_bound_tables.py
"""

from girthmax.bounds import (
    bound_report,
    gmax_report,
    hoory_lower,
    lps_min_q,
    moore_table_text,
    optimal_partitions,
    order_bounds_table_text,
    ramanujan_table_text,
    report_text,
)

# Moore bound for degree 3, even girth: the floor any graph must respect.
print(moore_table_text())

# The degree-3 existence window (lower / upper / improved upper).
print(order_bounds_table_text())

# Smallest degree-3 Ramanujan graphs per girth.
print(ramanujan_table_text())

# A combined report for one query. For girth 10 at degree 3 the
# per-side lower bound is 31; the search attains girth 10 at m = 49,
# comfortably inside the window.
print(report_text(bound_report(10, 3)))

# The claimed ceiling attached to the factorization m = b*k^(r-1):
# at m = 25 (k = 5) it says girth < 10, and the search indeed finds 8.
print(report_text(gmax_report(25, 3)))

# The partition shapes the search family realizes between consecutive
# constituents (k^(r-1-i) parts of size b*k^i).
print("partition shapes for b=1, k=5, r=3:", optimal_partitions(1, 5, 3))

print("per-side lower bound for girth 12:", hoory_lower(12, 3))
print("smallest Ramanujan prime for girth 14:", lps_min_q(14))

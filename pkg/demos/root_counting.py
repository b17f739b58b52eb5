"""Count real, positive, negative and nonreal zeros from Hankel and delta minors.

Run: python3 demos/root_counting.py
"""
from pathlib import Path

from rootloc import count_roots, delta_ledger, from_root_spec, real_rooted
from rootloc.poly_core import format_root_spec, poly
from rootloc.testkit import load_corpus, root_count_oracle

# z^3 - 2z + 1 = (z - 1)(z^2 + z - 1): three real zeros, two positive
p = poly(1, 0, -2, 1)
print("p =", p)
print("delta minors:", [str(x) for x in delta_ledger(p).delta])
rep = count_roots(p)
print(f"distinct m={rep.m_distinct} nonreal pairs k={rep.k_nonreal_pairs} "
      f"real r={rep.r_distinct_real} (+{rep.r_plus}, -{rep.r_minus})")

# the cubic family z^3 + a z + b is real-rooted iff 4a^3 + 27b^2 <= 0
for a, b in [(-2, 1), (1, 1), (-3, 2)]:
    print(f"z^3 + {a}z + {b}: real-rooted={real_rooted(poly(1, 0, a, b)).verdict}, "
          f"4a^3+27b^2={4 * a ** 3 + 27 * b ** 2}")

# fixtures with known roots: counts agree with the construction
for spec in load_corpus(Path(__file__).with_name("fixtures.txt")):
    rep = count_roots(from_root_spec(spec))
    want = root_count_oracle(spec)
    same = (rep.m_distinct, rep.r_plus, rep.r_minus) == (want.m_distinct, want.r_plus, want.r_minus)
    print(f"{format_root_spec(spec):32s} m={rep.m_distinct} r+={rep.r_plus} r-={rep.r_minus} "
          f"k={rep.k_nonreal_pairs} zero={rep.zero_is_root} matches={same}")

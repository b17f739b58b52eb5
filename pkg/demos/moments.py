"""Recover nodes and weights of a finite discrete measure from its moments.

Run: python3 demos/moments.py
"""
from fractions import Fraction as F

from rootloc import solve_moment_problem
from rootloc.poly_core import derivative, evaluate
from rootloc.testkit import moment_sequence

nodes = [F(-2), F(1, 2), F(3)]
weights = [F(1), F(2), F(1, 3)]
s = moment_sequence(nodes, weights, 9)
print("moments:", [str(x) for x in s])
sol = solve_moment_problem(s, 3)
print("feasible:", sol.feasible, "negative nodes:", sol.k_negative_nodes)
print("node polynomial:", sol.node_polynomial)
P, Q = sol.weight_function
for x in nodes:
    print(f"  weight at {x}: {evaluate(Q, x) / evaluate(derivative(P), x)}")

bad = list(s)
bad[2] += 1
print("corrupted s_2 ->", solve_moment_problem(bad, 3).reason)

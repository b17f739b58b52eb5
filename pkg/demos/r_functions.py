"""Cauchy indices, R-function classification and Stieltjes fractions.

Run: python3 demos/r_functions.py
"""
from rootloc import cauchy_index, classify_r_function, derivative, poly, stieltjes_fraction, tnn_certificate

# q/p = (z - 2)/(z^2 - 3z + 1): both poles positive, negative type
p, q = poly(1, -3, 1), poly(1, -2)
v = classify_r_function(p, q)
print("(z-2)/(z^2-3z+1):", v.is_r_negative_type, "positive poles:", v.positive_poles)

# the logarithmic derivative of (z+1)(z+2)
p = poly(1, 3, 2)
idx = cauchy_index(p, derivative(p))
print("p'/p indices: real", idx.ind_real_line, "negative", idx.ind_negative_halfline,
      "positive", idx.ind_positive_halfline)
fr = stieltjes_fraction(p, derivative(p))
print("Stieltjes coefficients:", [str(c) for c in fr.c])
print("H(p, p') totally nonnegative:", tnn_certificate(p, derivative(p)).verdict)

# 1/(z^2 + 1) has no real poles and is not an R-function
v = classify_r_function(poly(1, 0, 1), poly(1))
print("1/(z^2+1):", v.is_r_negative_type, "fails", v.failed_condition)
cert = tnn_certificate(poly(1, -3, 2), derivative(poly(1, -3, 2)))
w = cert.witness
print("H for positive zeros: witness rows", w.rows, "cols", w.cols, "value", w.value)

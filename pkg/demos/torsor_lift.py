"""Check the unimodular-row lifting identity symbolically for small n."""

from gwweyl.poly import divmod_poly
from gwweyl.torsor_check import lift_polynomials

for n in range(4):
    P, Q = lift_polynomials(n)
    quot, rem = divmod_poly(P, Q)
    print(f"n={n}: P = ({quot}) * Q, remainder {rem or 0}")

"""Nested anticommutators of q with H = (p^2 + q^2)/2 are Euler polynomials
in disguise.

Write {x, y} = xy + yx and iterate: {q, H}_0 = q, {q, H}_(n+1) = {{q, H}_n, H}.
In the algebra with pq - qp = -i (substitute c = -i after expanding), the
n-fold bracket collapses to a single anticommutator with a polynomial of H:

    2^(-n) {q, H}_n = 1/2 {q, E_n(H + 1/2)}

and the two half-shifted variants

    2^(-n) {q, H - 1/2}_n = 1/2 {q, E_n(H)}
    2^(-n) [ ({q,H} - 1)_n + ({q,H} + 1)_n ] = {q, H^n}.

Everything below is exact rational/Gaussian-rational arithmetic; no floats.
"""

from fractions import Fraction

from weylops import (
    MINUS_I,
    anticommutator,
    euler_polynomial,
    hamiltonian,
    nested_anticommutator,
    poly_of_element,
    q_op,
    scalar,
    shifted_euler,
    shifted_nested_anticomm,
    verify_bender,
)

q, h = q_op(), hamiltonian()

print("{q, H}_n in normal order (symbolic c):")
for n in range(4):
    print(f"  n={n}:  {nested_anticommutator(q, h, n)}")

print("\nmain collapse at c = -i:")
for n in range(9):
    lhs = scalar(Fraction(1, 2**n)) * nested_anticommutator(q, h, n)
    rhs = scalar(Fraction(1, 2)) * anticommutator(q, poly_of_element(shifted_euler(n), h))
    match = lhs.subst_c(MINUS_I) == rhs.subst_c(MINUS_I)
    print(f"  n={n}:  2^-n {{q,H}}_n == 1/2 {{q, E_n(H+1/2)}}   {'ok' if match else 'MISMATCH'}")
    assert match

print("\nhalf-shifted variant at c = -i:")
for n in range(9):
    lhs = scalar(Fraction(1, 2**n)) * nested_anticommutator(q, h - scalar(Fraction(1, 2)), n)
    rhs = scalar(Fraction(1, 2)) * anticommutator(q, poly_of_element(euler_polynomial(n), h))
    assert lhs.subst_c(MINUS_I) == rhs.subst_c(MINUS_I)
print("  2^-n {q, H-1/2}_n == 1/2 {q, E_n(H)}  for n <= 8")

print("\ntwo-shift average at c = -i:")
for n in range(9):
    lhs = scalar(Fraction(1, 2**n)) * (
        shifted_nested_anticomm(-1, n) + shifted_nested_anticomm(1, n)
    )
    rhs = anticommutator(q, h**n)
    assert lhs.subst_c(MINUS_I) == rhs.subst_c(MINUS_I)
print("  2^-n [({q,H}-1)_n + ({q,H}+1)_n] == {q, H^n}  for n <= 8")

# the packaged check bundles all three forms into one report per n
print()
for n in (10, 11, 12):
    print(verify_bender(n).render())

"""Second opinion #1: realize p as c * d/dx and q as multiplication by x.

On polynomials in x this satisfies pq - qp = c on the nose, so any
normal-ordered expression the symbolic engine produces can be replayed as a
concrete action on monomials.  The engine's reordering rule never enters:
``apply_element`` only reads off  q^a p^b x^l = c^b l!/(l-b)! x^(l-b+a).
"""

from weylops import (
    XPoly,
    apply_element,
    monomial_anticommutator_action,
    monomial_commutator_action,
    p_op,
    q_op,
    validate_reordering,
)

p, q = p_op(), q_op()

# the defining relation, acted out on x^3
f = XPoly.monomial(3)
pq = apply_element(p, apply_element(q, f))
qp = apply_element(q, apply_element(p, f))
print(f"p(q x^3) = {pq}")
print(f"q(p x^3) = {qp}")
print(f"difference = {pq - qp}   (c times x^3, as required)\n")

# closed forms for scaled-power brackets, against composed single steps
coeff, degree = monomial_commutator_action(2, 3, 5)
print(f"[p^2/2!, q^3/3!] x^5 -> coefficient {coeff}, degree {degree}")
coeff, degree = monomial_anticommutator_action(2, 3, 5)
print(f"{{p^2/2!, q^3/3!}} x^5 -> coefficient {coeff}, degree {degree}\n")

# the box check: every product q^a1 p^b1 * q^a2 p^b2 with exponents <= 6
# must act as the composition of its factors' actions
validate_reordering(max_exp=6, max_l=8)
print("validate_reordering(6, 8): engine multiplication matches composed actions")

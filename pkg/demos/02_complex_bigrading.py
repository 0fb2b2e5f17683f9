#!/usr/bin/env python3
# The two extensions of a complex structure to forms, and the bigrading.
#
# The pullback extension applies J to every argument; the derivation applies
# it to one argument at a time.  The square of the derivation has integer
# eigenvalues -(p-q)^2 on forms of degree p+q, which splits each degree into
# bidegree components, all computed exactly.

from hodgelab import (
    ComplexStructure,
    Space,
    bidegree_project,
    curly_j,
    j_pullback,
    kahler_form,
    lambda_basis,
)

space = Space(6)
J = ComplexStructure.standard(space)   # J e1 = e2, J e3 = e4, J e5 = e6
omega = kahler_form(J)
print("fundamental 2-form:", omega)

# omega is invariant under the pullback and killed by the derivation
print("pullback fixes omega:", j_pullback(J, omega) == omega)
print("derivation kills omega:", curly_j(J, omega).is_zero())

# a generic 2-form splits into its (2,0)+(0,2) and (1,1) parts
phi = space.form(2, {(1, 3): 5, (1, 2): 2, (5, 6): -1})
part20 = bidegree_project(J, phi, 2, 0)
part11 = bidegree_project(J, phi, 1, 1)
print("(2,0)+(0,2) part:", part20)
print("(1,1) part:      ", part11)
print("parts sum back:  ", part20 + part11 == phi)

# dimensions of the real (p,0)+(0,p) subspaces are 2 C(k, p)
for p in (1, 2, 3):
    print(f"dim lambda^{p} on R^6:", lambda_basis(J, p).dim)

"""Four ideals of Z x| M and what the S-tests say about them."""

from trivext import (
    ZIdeal,
    ZMultSet,
    make_module,
    z_is_S_prime,
    z_residual,
    zte_ideal,
    zte_is_homogeneous,
    zte_is_S_maximal,
    zte_is_S_prime,
    zte_membership,
    zte_residual,
)
from trivext.z_layer import Z, zte_equal

S = [(2, 0)]

# J = 0 x| 2Z/6 inside Z x| Z/6: S-prime, although J1 is not all of M
M6 = make_module(Z, [6])
J = zte_ideal(M6, [(0, 2)])
c = zte_is_S_prime(J, S)
print("0 x| 2Z/6:", c.verdict, "witness", c.witness, "J1 =", J.j1.elements)

# P = (6,1)R inside Z x| Z/2: S-maximal and not homogeneous
M2 = make_module(Z, [2])
P = zte_ideal(M2, [(6, 1)])
print("(6,1)R S-maximal:", zte_is_S_maximal(P, S).verdict)
res = zte_residual(P, (4, 0))
print("  (P : (4,0)) == 3Z x| Z/2:", zte_equal(res, zte_ideal(M2, [(3, 0), (0, 1)])))
print("  (0,1) in P:", zte_membership((0, 1), P), " homogeneous:", zte_is_homogeneous(P))

# (2,1)R with S = <(3,0)>: the projection is S0-prime, the ideal is not S-prime
P = zte_ideal(M2, [(2, 1)])
print("(2,1)R S-prime:", zte_is_S_prime(P, [(3, 0)]).verdict,
      " 2Z <3>-prime:", z_is_S_prime(ZIdeal(2), ZMultSet((3,))).verdict)

# (6,1)R inside Z x| Z/4
M4 = make_module(Z, [4])
J = zte_ideal(M4, [(6, 1)])
c = zte_is_S_prime(J, S)
print("(6,1)R in Z x| Z/4: J0 =", J.j0, " (J0:4) =", z_residual(J.j0, 4))
print("  S-prime:", c.verdict, "with s =", c.witness, "=", c.witness.value, " residual", c.residual)
print("  (6,0) in J:", zte_membership((6, 0), J))

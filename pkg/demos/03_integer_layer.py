"""Ideals of Z x| Z/d: components from a row reduction, checked against a finite quotient."""

import random

from trivext import make_module, zte_ideal, zte_is_S_maximal, zte_is_S_prime
from trivext.ideal_theory import is_S_prime_definitional
from trivext.z_layer import Z, row_reduction
from trivext.verifier import zlayer_quotient_model

print("row reduction of (12, 18, 8):", row_reduction([12, 18, 8]))

M = make_module(Z, [6])
J = zte_ideal(M, [(4, 1), (6, 3)])
print(J, "J0 =", J.j0, "J1 =", J.j1.elements, "homogeneous:", J.is_homogeneous)

rng = random.Random(3)
agree = 0
for _ in range(200):
    d = rng.choice([2, 3, 4, 6])
    gens = [(rng.choice([1, 2, 3, 4, 6]), rng.randrange(d))]
    S = [(rng.choice([2, 3, 5]), 0)]
    Mq = make_module(Z, [d])
    J = zte_ideal(Mq, gens)
    R, Jq, Sq = zlayer_quotient_model(Mq, gens, S)
    want = False if Sq is None else is_S_prime_definitional(Jq, Sq).verdict
    got = zte_is_S_prime(J, S).verdict
    agree += want == got
    assert got == zte_is_S_maximal(J, S).verdict
print(f"lattice verdicts agree with the finite quotient on {agree}/200 random ideals")

"""Components of ideals in a finite trivial extension and the S-prime spectrum."""

from trivext import (
    components,
    enumerate_ideals,
    is_S_divisible,
    is_S_prime_via_components,
    make_module,
    make_residue_ring,
    make_trivial_extension,
    mult_set_generated,
    project_mult_set,
    spec_S,
)

A = make_residue_ring(6)
M = make_module(A, [6])
R = make_trivial_extension(A, M)
print(R, "has", R.cardinality, "elements and", len(enumerate_ideals(R)), "ideals")

for J in enumerate_ideals(R)[:6]:
    dec = components(J)
    print(f"  gens {list(J.generators)!s:<18} J0={dec.J0.elements} J1={dec.J1.elements} homogeneous={dec.is_homogeneous}")

S = mult_set_generated(R, [(2, 0)])
S0 = project_mult_set(S)
print("\nS0 =", S0.elements, " M S0-divisible:", is_S_divisible(M, S0).holds)
for J in spec_S(R, S):
    c = is_S_prime_via_components(J, S)
    dec = components(J)
    print(f"  S-prime: J0={dec.J0.elements} J1={dec.J1.elements}  s={c.witness}  (J:s) has {c.details['extension_residual'].size} elements")

# with a unit S every S-prime ideal is P x| M
U = mult_set_generated(R, [(5, 0)])
print("\nS = <(5,0)>:", [(components(J).J0.elements, components(J).J1.is_whole) for J in spec_S(R, U)])

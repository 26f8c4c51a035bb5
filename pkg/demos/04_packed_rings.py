"""Packing properties and the S-pm condition, on a base ring and on its extension."""

from trivext import (
    is_compactly_S_packed,
    is_coprimely_S_packed,
    is_S_divisible,
    is_S_pm,
    make_module,
    make_residue_ring,
    make_trivial_extension,
    mult_set_generated,
    project_mult_set,
)

for n, d, g in [(12, 6, 4), (12, 3, 4), (10, 5, 2), (9, 3, 4)]:
    A = make_residue_ring(n)
    M = make_module(A, [d])
    R = make_trivial_extension(A, M)
    S = mult_set_generated(R, [(g, 0)])
    S0 = project_mult_set(S)
    row = [
        is_compactly_S_packed(A, S0).holds, is_compactly_S_packed(R, S).holds,
        is_coprimely_S_packed(A, S0).holds, is_coprimely_S_packed(R, S).holds,
        is_S_pm(A, S0).holds, is_S_divisible(M, S0).holds, is_S_pm(R, S).holds,
    ]
    print(f"{str(R):<16} S0={S0.elements!s:<14} compact {row[0]}/{row[1]}  coprime {row[2]}/{row[3]}"
          f"  pm(A)={row[4]} divisible={row[5]} pm(R)={row[6]}")

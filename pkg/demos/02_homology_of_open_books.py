"""Monodromy matrices and first homology of planar open books.

H_1(M) is the cokernel of T. The examples below are classical manifolds
whose homology is known.
"""

from planar_sl import first_homology, monodromy_matrix, parse_open_book, well_definedness_rank

cases = {
    "r=1;": "S^3 (disk page)",
    "r=2; A2": "S^3 (positive Hopf band)",
    "r=2; A2^5": "lens space L(5,1)",
    "r=2;": "S^1 x S^2 (identity on the annulus)",
    "r=3; A2 A3": "S^3 (two stabilizations of the disk)",
    "r=3; A{2,3}": "S^1 x S^2 (on the pants A{2,3} = A1)",
    "r=4; A2 A3 A4": "S^3",
    "r=4; A1": "the boundary-parallel twist, expanded by the lantern relation",
}

for text, note in cases.items():
    ob = parse_open_book(text)
    mm = monodromy_matrix(ob)
    print(f"{text:<28} T = {str(mm.tolist()):<38} H_1 = {str(first_homology(ob)):<10}"
          f" full rank: {well_definedness_rank(mm)!s:<5}  {note}")

"""Braids in the standard contact 3-sphere.

The disk page with trivial monodromy is the classical setting: there are no
rho generators, T is empty, every braid is null-homologous and the
self-linking number is -n + a_sigma.
"""

from planar_sl import OpenBook, analyze, parse_braid

disk = OpenBook(1)

# %% Closures of a few familiar braids
for word in ["n=1;", "n=2; s1", "n=2; s1^3", "n=2; s1^-3", "n=3; s1 s2^-1 s1 s2^-1", "n=3; s1^2 s2^-1"]:
    b = parse_braid(word, r=1)
    report = analyze(disk, b)
    print(f"{word:<28} a_sigma = {report.exponents.a_sigma:>3}   sl = {report.sl:>3}")

# %% The census route gives the same number: n positive elliptic points,
# one hyperbolic point per crossing with the crossing's sign.
report = analyze(disk, parse_braid("n=2; s1^3", 1))
print(report.census)

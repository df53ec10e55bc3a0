"""When T is not of full rank the Seifert class is not unique.

Integer solutions of T s = a_rho then differ by kernel vectors, and the
self-linking number may change along them. Two rank-one examples on the
pair of pants: in the first sl is the same for every class, in the second
it is not.
"""

from planar_sl import analyze, parse_instance, self_linking

for text in [
    "r=3; A{2,3}\n---\nn=1; r2 r3\n",
    "r=3; A{2,3}^2 A2^-1 A3^2\n---\nn=1; r2 r3^2\n",
]:
    inst = parse_instance(text)
    report = analyze(inst.open_book, inst.braid)
    print(text.replace("\n", "  "))
    print("  T =", report.matrix.tolist(), " H_1 =", report.homology, " full rank:", report.well_defined)
    print("  canonical s =", list(report.solution.s), " sl =", report.sl)
    for v, delta in report.kernel_deltas:
        print(f"  kernel vector {list(v)}: sl changes by {delta} per step")
        for c in (-2, -1, 1, 2):
            s = [a + c * b for a, b in zip(report.solution.s, v)]
            print(f"    s = {s}: sl = {self_linking(report.matrix, report.exponents, s)}")

"""Primitive prime divisors and the gcd identity suite, printed."""

from omega.arith import gcd_identity_suite, r_part, zsigmondy

print("primitive prime divisors r_n(q):")
for q in (2, 3, 5):
    row = []
    for n in range(3, 13):
        r = zsigmondy(q, n)
        row.append("-" if r is None else str(r))
    print(f"  q={q}: " + " ".join(row))

print()
print("the lone gap: zsigmondy(2, 6) =", zsigmondy(2, 6))
print("63 = 2^6 - 1 = 7 * 9, and both 7 and 3 already divide smaller 2^i - 1")

print()
print("r-part splits: r_part(720, 6) =", r_part(720, 6))

bad = [r for r in gcd_identity_suite(range(2, 101)) if not r["ok"]]
print()
print("gcd identities at q in 2..100, failures:", bad if bad else "none")

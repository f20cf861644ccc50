"""Brute-force enumeration against the closed-form order and torus spectrum."""

import argparse

from omega.groups import group_order, parse_group_spec
from omega.oracle import spectrum_table
from omega.spectra import canonicalize, symplectic_torus_spectrum

ap = argparse.ArgumentParser()
ap.add_argument("--n", type=int, default=2)
ap.add_argument("--q", type=int, default=3)
args = ap.parse_args()

spec = parse_group_spec(f"C({args.n},{args.q})u")
table = spectrum_table(spec)
want = group_order(spec)
print(f"{spec}: enumerated {table.size}, formula {want.n} = {want}")
assert table.size == want.n

print("full spectrum:", " ".join(str(m) for m in table.spectrum))

p_prime = [m for m in table.spectrum if m % spec.p]
oracle = canonicalize(p_prime, "p_prime_only", spec)
formula = symplectic_torus_spectrum(args.n, args.q)
print("p'-generators, oracle :", oracle.generators)
print("p'-generators, formula:", formula.generators)
assert oracle.generators == formula.generators
print("torus formula confirmed")

"""Closed-form spectra and their prime graphs for the big exceptional groups."""

from omega.spectra import (
    d43_mixed_spectrum,
    e6_semisimple_spectrum,
    e7_semisimple_spectrum,
    pg_nonadjacency_witnesses,
    prime_graph,
)


def show(name, desc):
    print(f"{name}  scope={desc.scope}")
    print("  generators:", " ".join(str(g) for g in desc.generators))
    g = prime_graph(desc)
    wit = pg_nonadjacency_witnesses(g)
    loners = [r for r, t in wit.items() if t is not None]
    print("  primes:", " ".join(str(v) for v in g.vertices),
          "| vertices with a non-neighbor:", " ".join(str(r) for r in loners) or "none")


if __name__ == "__main__":
    for q in (2, 3, 4):
        show(f"E6(q={q}) semisimple part", e6_semisimple_spectrum(q, "+"))
    show("twisted E6 at q=2", e6_semisimple_spectrum(2, "-"))
    show("E7 at q=2 (universal)", e7_semisimple_spectrum(2))
    show("triality D4 at q=2, mixed orders", d43_mixed_spectrum(2))

    d = e7_semisimple_spectrum(3)
    # membership goes through divisor closure, not list lookup
    print()
    print("164 in E7(3) semisimple part:", 164 in d, "(divides 1640)")
    print("57 in E7(3) semisimple part:", 57 in d)

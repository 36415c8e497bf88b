"""Identify a hidden group: conjugate a catalog family off the origin,
then let the classifier find it again.

Run:  python3 demos/classify_a_group.py
"""

from fractions import Fraction

from minkact.algebra import adjoint
from minkact.catalog import entry_by_id, match_catalog
from minkact.cli import format_element
from minkact.group import translation
from minkact.linalg import vec4
from minkact.orbits import cohomogeneity, orbit_dimension
from minkact.subalgebra import invariants, normalize_translations, require_closed


def main():
    entry = entry_by_id("T2:Ya+le1-W2")
    lam = Fraction(1, 2)
    h = require_closed(entry.build({"lam": lam}))
    print(f"Start from the catalog record {entry.entry_id}: {entry.summary}")
    print(f"  lam = {lam}")
    for b in h.basis:
        print(f"    {format_element(b)}")
    print()

    q = vec4(7, -4, Fraction(9, 2), -3)
    conj = require_closed(tuple(adjoint(translation(q), b) for b in h.basis))
    print(f"Conjugate by the translation q = ({','.join(str(c) for c in q)}).")
    print("The same group, now wearing a disguise:")
    for b in conj.basis:
        print(f"    {format_element(b)}")
    print()

    print("Step 1 - invariants:", invariants(conj).describe())
    p, _ = normalize_translations(conj)
    print(f"Step 2 - normalizing translation: ({','.join(str(c) for c in p)})")
    matches = match_catalog(conj)
    for m in matches:
        params = ", ".join(f"{k}={v}" for k, v in sorted(m.params.items()))
        print(f"Step 3 - match: {m.entry_id}" + (f" [{params}]" if params else ""))
    print()

    rep = cohomogeneity(conj, seed=42, samples=32)
    dims = ",".join(str(d) for d in rep.observed_dims())
    print(f"Cohomogeneity {rep.cohomogeneity} (orbit dims {{{dims}}} over 32 samples).")
    print()

    print("Orbit geometry along the curve p(s) = (0, 0, s, s) + base:")
    base = vec4(0, 0, q[2], q[3])  # the fixed 'origin' of the conjugated copy
    for s in (Fraction(-2), Fraction(-1), Fraction(0), Fraction(1), Fraction(2)):
        pt = vec4(base[0], base[1], base[2] + s, base[3] + s)
        o = orbit_dimension(conj, pt)
        print(f"  s = {str(s):>2s}: dim {o.dim}, {o.causal}")
    print()
    print("All five orbits are hypersurfaces, but the s = 0 one is degenerate:")
    print("its tangent space contains a lightlike direction and no timelike one.")


if __name__ == "__main__":
    main()

"""A tour of the Lie algebra layer: generators, brackets, Killing fields,
and the forced-translation family.

Run:  python3 demos/structure_tour.py
"""

from fractions import Fraction

from minkact.algebra import (
    GENERATOR_MATRICES,
    GENERATOR_ORDER,
    bracket,
    fundamental_field,
    lift_constraints,
    standard_generator,
)
from minkact.cli import format_element


def main():
    print("Six generators of the Lorentz algebra so(3,1), acting on (x, y, z, t):")
    print("  Yk1, Yk2, Yk3  rotations    Ya  boost    Yn1, Yn2  null rotations")
    print()

    print("Full bracket table (blank = zero):")
    width = max(len(n) for n in GENERATOR_ORDER)
    header = " " * (width + 3) + "  ".join(f"{n:>{width + 6}s}" for n in GENERATOR_ORDER)
    print(header)
    for a in GENERATOR_ORDER:
        cells = []
        for b in GENERATOR_ORDER:
            val = format_element(bracket(standard_generator(a), standard_generator(b)))
            cells.append(f"{'' if val == '0' else val:>{width + 6}s}")
        print(f"{a:>{width}s} | " + "  ".join(cells))
    print()

    p = (1, 2, 3, 5)
    print(f"Killing fields evaluated at p = {p}:")
    for name in GENERATOR_ORDER:
        v = fundamental_field(standard_generator(name), p)
        print(f"  {name:>3s} -> ({', '.join(str(c) for c in v)})")
    print()

    print("Which translation decorations can ride along with all six generators?")
    fam = lift_constraints([GENERATOR_MATRICES[n] for n in GENERATOR_ORDER])
    print(f"  constraint rank {fam.rank} over {4 * fam.n_elements} unknowns "
          f"-> a {fam.dim}-parameter family")
    coeffs = (1, 2, 3, 5)
    member = [tuple(Fraction(0) for _ in range(4)) for _ in range(fam.n_elements)]
    for c, assignment in zip(coeffs, fam.basis):
        member = [tuple(m + c * a for m, a in zip(row, vec))
                  for row, vec in zip(member, assignment)]
    print(f"  one member (coefficients {coeffs}):")
    for name, dec in zip(GENERATOR_ORDER, member):
        print(f"    {name:>3s} + ({', '.join(str(c) for c in dec)})")
    print()
    print("Every such decorated copy is conjugate to the plain one: the whole")
    print("family is swallowed by moving the origin (see classify_a_group.py).")


if __name__ == "__main__":
    main()

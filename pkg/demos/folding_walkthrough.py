"""Walk through the six folding data: fixed types, component groups, and
the projection to the coinvariant lattice.

Run as: python demos/folding_walkthrough.py
"""

from twistedlie.folding import Folding

DATA = [("A", 5, 2), ("A", 4, 4), ("D", 5, 2), ("D", 6, 2), ("D", 4, 3),
        ("E", 6, 2)]


def main():
  for family, rank, order in DATA:
    datum = Folding(family, rank, order)
    print("%s%d with an order-%d twist:" % (family, rank, order))
    print("  fixed type:        ", datum.fixed_ctype)
    print("  class-lattice type:", datum.weight_ctype)
    print("  ramified:          ", datum.is_ramified)
    print("  component group:   ", datum.component_group() or "trivial")
    print("  level-one classes: ", datum.level_one_set())
    print()

  print("the one ramified family doubles the short coordinate:")
  datum = Folding("A", 2, 4)
  for coords in ((1, 0), (0, 1), (2, 0)):
    print("  project%s -> %s" % (coords, datum.project(coords).coords))


if __name__ == "__main__":
  main()

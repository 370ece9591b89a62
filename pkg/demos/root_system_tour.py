"""A quick tour of the root-system layer: Cartan data, orbits, dimensions.

Run as: python demos/root_system_tour.py
"""

from twistedlie.rootsystem import build


def main():
  sys = build("E", 6)
  print("type:", sys.ctype)
  print("positive roots:", len(sys.positive_roots))
  print("highest root:", sys.highest_root)

  omega1 = (1, 0, 0, 0, 0, 0)
  omega4 = (0, 0, 0, 1, 0, 0)
  print("\nthe 27-dimensional minuscule representation:")
  print("  dim V(omega_1) =", sys.weyl_dimension(omega1))
  print("  orbit of omega_1:", len(sys.weyl_orbit(omega1)), "weights")

  print("\nthe 2925-dimensional representation at the fourth node:")
  print("  dim V(omega_4) =", sys.weyl_dimension(omega4))
  print("  dominant weight multiplicities:")
  for mu in (omega4, (1, 0, 0, 0, 0, 1), (0, 1, 0, 0, 0, 0), (0,) * 6):
    mult = sys.freudenthal_multiplicity(omega4, mu)
    print("    m(%s) = %d" % (mu, mult))


if __name__ == "__main__":
  main()

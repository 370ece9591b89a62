"""Classify the cells of a few orbit closures as smooth or singular.

Run as: python demos/smooth_locus_demo.py
"""

from twistedlie import cells
from twistedlie.folding import Folding


def show(datum, variant, lam, label):
  report = cells.smooth_cells(datum, variant, lam)
  print(label)
  for verdict in report.cells:
    tag = "smooth  " if verdict.smooth else "singular"
    print("  mu=%-10s %s  (%s)" % (str(verdict.mu.coords), tag,
                                   verdict.reason))
  print()


def main():
  a2 = Folding("A", 2, 4)
  show(a2, cells.VARIANT_SPECIAL, a2.gamma(1),
       "A2, order 4: closure of the quasi-minuscule class")
  show(a2, cells.VARIANT_SPECIAL, a2.gamma(1) + a2.gamma(1),
       "A2, order 4: closure of the doubled class")
  show(a2, cells.VARIANT_ABS_SPECIAL, a2.gamma(1),
       "same closure at the absolutely special point")

  e6 = Folding("E", 6, 2)
  show(e6, None, (0, 0, 0, 1),
       "E6, order 2 (unramified): only the open cell is smooth")


if __name__ == "__main__":
  main()

"""The twisted loop algebra in rank one: the order-four twist, the
five-family basis of the fixed current algebra, and the identification map.

Run as: python demos/twisted_loop_demo.py
"""

from twistedlie.loops import (LoopElement, eta_apply, hyperspecial_basis,
                              sigma_apply, verify_hyperspecial)


def main():
  ell = 1
  e1 = LoopElement({(("E", 1, 2), 0): 1})
  print("the twist sends the first simple root vector to i times the")
  print("second:")
  print("  sigma(%r) = %r" % (e1, sigma_apply(ell, e1)))

  x = e1
  for k in range(1, 5):
    x = sigma_apply(ell, x)
    print("  sigma^%d: %r" % (k, x))

  print("\nbasis of the fixed current algebra (image degrees <= 4):")
  for family, desc, elt in hyperspecial_basis(ell, 4):
    print("  family %d %-14s %r -> %r" % (family, desc, elt,
                                          eta_apply(ell, elt)))

  report = verify_hyperspecial(ell, 6)
  print("\nverification up to degree 6: passed=%s, basis size %d"
        % (report["passed"], report["basis_size"]))


if __name__ == "__main__":
  main()

"""Diagram foldings of simply laced root systems and coinvariant lattices.

A folding consists of a simply laced base system together with a diagram
automorphism tau of order dividing m; for the one genuinely ramified family
(base A_{2l} with m = 4) the automorphism is tau composed with a torus
element, which twists the loop-algebra picture but acts on cocharacter
lattices through tau alone.

Coordinates:
  * Base coweights are tuples in the fundamental coweight basis, so
    ``v[i-1] = <alpha_i, v>``.
  * Folded (fixed subalgebra) weights are tuples in the fundamental weight
    basis of the fixed type.
  * Coinvariant classes live in the weight lattice of the small side H and
    are stored in fundamental weight coordinates of ``weight_ctype``.
"""

from dataclasses import dataclass
from fractions import Fraction

from .linalg import smith_invariant_factors
from .rootsystem import CartanType, RootSystem, build, cartan_matrix, _invert_matrix


def _normalize_scalar(x):
  f = Fraction(x)
  return int(f) if f.denominator == 1 else f


@dataclass(frozen=True)
class CoinvariantWeight:
  """A coinvariant class, in fundamental weight coordinates of H."""

  htype: CartanType
  coords: tuple

  def __post_init__(self):
    object.__setattr__(self, "coords",
                       tuple(_normalize_scalar(c) for c in self.coords))

  def is_integral(self):
    return all(isinstance(c, int) for c in self.coords)

  def is_dominant(self):
    return all(c >= 0 for c in self.coords)

  def __sub__(self, other):
    if self.htype != other.htype:
      raise ValueError("mismatched types")
    return CoinvariantWeight(self.htype, tuple(
        a - b for a, b in zip(self.coords, other.coords)))

  def __add__(self, other):
    if self.htype != other.htype:
      raise ValueError("mismatched types")
    return CoinvariantWeight(self.htype, tuple(
        a + b for a, b in zip(self.coords, other.coords)))


class Folding:
  """A standard diagram folding with all derived coordinate data."""

  def __init__(self, family, rank, order):
    base_type = CartanType(family, rank)
    self.base = build(family, rank)
    self.order = order
    f, n, m = family, rank, order
    if f == "A" and m == 2 and n >= 3 and n % 2 == 1:
      self.ell = (n + 1) // 2
      tau = tuple(n + 1 - i for i in range(1, n + 1))
      eta = tuple(min(i, n + 1 - i) for i in range(1, n + 1))
      fixed = CartanType("C", self.ell) if self.ell >= 2 else CartanType("A", 1)
      weight = fixed
      h = (0,) * n
    elif f == "A" and m == 4 and n >= 2 and n % 2 == 0:
      self.ell = n // 2
      tau = tuple(n + 1 - i for i in range(1, n + 1))
      eta = tuple(min(i, n + 1 - i) for i in range(1, n + 1))
      fixed = CartanType("C", self.ell) if self.ell >= 2 else CartanType("A", 1)
      weight = CartanType("B", self.ell) if self.ell >= 2 else CartanType("A", 1)
      h = tuple(1 if i in (self.ell, self.ell + 1) else 0
                for i in range(1, n + 1))
    elif f == "D" and m == 2 and n >= 4:
      self.ell = n - 1
      tau = tuple(i if i <= n - 2 else (2 * n - 1 - i) for i in range(1, n + 1))
      eta = tuple(min(i, n - 1) for i in range(1, n + 1))
      fixed = CartanType("B", self.ell)
      weight = fixed
      h = (0,) * n
    elif f == "D" and n == 4 and m == 3:
      self.ell = 2
      tau = (3, 2, 4, 1)
      eta = (1, 2, 1, 1)
      fixed = CartanType("G", 2)
      weight = fixed
      h = (0,) * n
    elif f == "E" and n == 6 and m == 2:
      self.ell = 4
      tau = (6, 2, 5, 4, 3, 1)
      eta = (4, 1, 3, 2, 3, 4)
      fixed = CartanType("F", 4)
      weight = fixed
      h = (0,) * n
    else:
      raise ValueError("no standard folding for (%s%d, %d)" % (f, n, m))
    self.base_type = base_type
    self.tau = tau
    self.eta = eta
    self.h = h
    self.fixed_ctype = fixed
    self.weight_ctype = weight
    self.is_ramified = (f == "A" and m == 4)
    self._fibers = tuple(
        tuple(i for i in range(1, n + 1) if eta[i - 1] == j)
        for j in range(1, self.ell + 1))
    self._hcartan = cartan_matrix(weight)
    self._project_matrix = self._build_project_matrix()

  # -- restriction and the folded simple roots ----------------------------

  def fiber(self, j):
    """All base nodes i with eta(i) = j."""
    return self._fibers[j - 1]

  def restrict_root(self, root):
    """Restrict a base root (simple-root coords) to the fixed torus.

    Returns fundamental weight coordinates for the fixed type: coordinate j
    is the pairing against betacheck_j = sum of the simple coroots in the
    j-th fiber.
    """
    return tuple(sum(self.base.pairing(root, i) for i in self.fiber(j))
                 for j in range(1, self.ell + 1))

  def _beta_base_root(self, j):
    """The base-side root whose restriction is the folded simple root."""
    n = self.base.rank
    if self.is_ramified and j == self.ell:
      root = [0] * n
      root[self.ell - 1] = 1
      root[self.ell] = 1
      return tuple(root)
    i = self.fiber(j)[0]
    return tuple(int(k == i - 1) for k in range(n))

  def beta(self, j):
    """Folded simple root beta_j in fixed-type fundamental weight coords."""
    return self.restrict_root(self._beta_base_root(j))

  def beta_check(self, j):
    """Folded simple coroot betacheck_j in base simple-coroot coords."""
    n = self.base.rank
    fib = set(self.fiber(j))
    return tuple(1 if (i + 1) in fib else 0 for i in range(n))

  def lambda_check(self, j):
    """Folded fundamental coweight in base fundamental coweight coords."""
    n = self.base.rank
    fib = self.fiber(j)
    if self.is_ramified:
      if j == self.ell:
        return tuple(Fraction(1, 2) if (i + 1) in fib else Fraction(0)
                     for i in range(n))
      return tuple(1 if (i + 1) in fib else 0 for i in range(n))
    return tuple(1 if (i + 1) in fib else 0 for i in range(n))

  # -- the iota map and projection to coinvariants ------------------------

  def iota(self, coweight):
    """iota of a base coweight (fundamental coweight coords), in fixed-type
    fundamental weight coordinates.

    The base system is simply laced and its normalized invariant form
    identifies coroots with roots, so the pairing of the restriction against
    betacheck_j is the sum of the coordinates over the j-th fiber.
    """
    return tuple(_normalize_scalar(sum(coweight[i - 1] for i in self.fiber(j)))
                 for j in range(1, self.ell + 1))

  def _build_project_matrix(self):
    """Matrix sending basis-class coefficients to H weight coordinates.

    The class of the i-th fundamental coweight depends only on eta(i), so a
    coinvariant is determined by its fiber sums c'.  Writing gamma_j for the
    class of a simple coroot in the j-th fiber, iota identifies gamma_j with
    a known fixed-type vector; solving against the Cartan matrix of H turns
    fiber sums into fundamental weight coordinates of H.
    """
    ell = self.ell
    n = self.base.rank
    # Q: columns are iota(simple coroot representing fiber j)
    q = []
    for j in range(1, ell + 1):
      i = self.fiber(j)[0]
      acheck = tuple(self.base.cartan[k][i - 1] for k in range(n))
      q.append(self.iota(acheck))
    qmat = tuple(tuple(Fraction(q[j][k]) for j in range(ell))
                 for k in range(ell))
    qinv = _invert_matrix(qmat)
    p = self._hcartan
    return tuple(tuple(sum(Fraction(p[k][j]) * qinv[j][c] for j in range(ell))
                       for c in range(ell)) for k in range(ell))

  def project(self, coweight):
    """Class of a base coweight in the coinvariant lattice.

    Input in base fundamental coweight coordinates; output in fundamental
    weight coordinates of H.
    """
    cprime = [sum(coweight[i - 1] for i in self.fiber(j))
              for j in range(1, self.ell + 1)]
    ell = self.ell
    coords = tuple(sum(self._project_matrix[k][j] * cprime[j]
                       for j in range(ell)) for k in range(ell))
    return CoinvariantWeight(self.weight_ctype, coords)

  def gamma(self, j):
    """The class of a simple coroot in the j-th fiber (a simple root of H)."""
    n = self.base.rank
    i = self.fiber(j)[0]
    acheck = tuple(self.base.cartan[k][i - 1] for k in range(n))
    return self.project(acheck)

  def in_coinvariant_lattice(self, cw):
    """Whether the class lies in the image lattice of the projection."""
    if not cw.is_integral():
      return False
    if self.is_ramified:
      return cw.coords[self.ell - 1] % 2 == 0
    return True

  def class_lift(self, cw):
    """A base coweight (fund coweight coords) whose class is cw."""
    ell = self.ell
    pinv = _invert_matrix(self._project_matrix)
    cprime = [sum(pinv[j][k] * Fraction(cw.coords[k]) for k in range(ell))
              for j in range(ell)]
    n = self.base.rank
    lift = [Fraction(0)] * n
    for j in range(ell):
      i = self.fiber(j + 1)[0]
      lift[i - 1] += cprime[j]
    if any(c.denominator != 1 for c in lift):
      raise ValueError("class does not lie in the coinvariant lattice")
    return tuple(int(c) for c in lift)

  # -- discrete invariants -------------------------------------------------

  def component_group(self):
    """Invariant factors (> 1) of the coinvariants of pi_1 of the adjoint
    base group: Z^rank modulo the span of (1 - tau) and the coroot columns."""
    n = self.base.rank
    cols = []
    for i in range(n):
      col = [0] * n
      col[i] += 1
      col[self.tau[i] - 1] -= 1
      cols.append(col)
    for j in range(n):
      cols.append([self.base.cartan[i][j] for i in range(n)])
    mat = [[cols[c][r] for c in range(2 * n)] for r in range(n)]
    factors = smith_invariant_factors(mat)
    return tuple(d for d in factors if d != 1)

  def level_one_set(self):
    """Minimal dominant fixed-type weights, one per component.

    Fixed-type fundamental weight coordinates; always contains zero.
    """
    ell = self.ell
    zero = (0,) * ell
    out = [zero]
    f, n = self.base_type.family, self.base_type.rank
    if f == "A" and self.order == 2:
      out.append(tuple(int(k == 0) for k in range(ell)))
    elif f == "D" and self.order == 2:
      out.append(tuple(int(k == ell - 1) for k in range(ell)))
    return out

  def special_coweights(self):
    """Base coweights (fund coweight coords) mapping onto level_one_set
    under iota; always contains zero."""
    n = self.base.rank
    zero = (0,) * n
    out = [zero]
    f = self.base_type.family
    if f == "A" and self.order == 2:
      out.append(tuple(int(k == 0) for k in range(n)))
    elif f == "D" and self.order == 2:
      out.append(tuple(int(k == self.ell - 1) for k in range(n)))
    return out

  # -- dimensions ----------------------------------------------------------

  def schubert_dimension(self, coweight):
    """Dimension 2<rho, lam> of the cell attached to a dominant base
    coweight (fundamental coweight coordinates)."""
    if any(c < 0 for c in coweight):
      raise ValueError("coweight must be dominant")
    # 2 rho is the sum of the positive roots, and the pairing of a root
    # against a fundamental-coweight vector reads off simple root coefficients
    total = 0
    for root in self.base.positive_roots:
      total += sum(root[i] * coweight[i] for i in range(self.base.rank))
    return total

  def class_dimension(self, cw):
    """Dimension of the cell attached to a dominant coinvariant class."""
    lift = self.class_lift(cw)
    dom = tuple(lift)
    if any(c < 0 for c in dom):
      raise ValueError("class lift must be dominant")
    return self.schubert_dimension(dom)


def standard_automorphism(family, rank, order):
  """The standard folding datum for the given base type and order."""
  return Folding(family, rank, order)


def fixed_type(family, rank, order):
  """Cartan type of the fixed subalgebra of the standard automorphism."""
  return Folding(family, rank, order).fixed_ctype

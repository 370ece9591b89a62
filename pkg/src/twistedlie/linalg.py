"""Exact scalars and sparse linear algebra over the rationals and Q(i).

Scalars are python ints, ``fractions.Fraction``, or :class:`GaussianRational`.
No floating point is used anywhere.  Vectors are sparse maps from opaque,
totally ordered keys to nonzero scalars; rank computation is fraction-free
(denominators are cleared, then Bareiss elimination runs over the integers,
or over Gaussian integers for Q(i) input).
"""

from fractions import Fraction

_RATIONAL_TYPES = (int, Fraction)


class GaussianRational:
  """An element re + im*i of Q(i), with exact Fraction components."""

  __slots__ = ("re", "im")

  def __init__(self, re=0, im=0):
    if isinstance(re, GaussianRational) or isinstance(im, GaussianRational):
      raise TypeError("components must be rational")
    object.__setattr__(self, "re", Fraction(re))
    object.__setattr__(self, "im", Fraction(im))

  def __setattr__(self, name, value):
    raise AttributeError("GaussianRational is immutable")

  def _coerce(self, other):
    if isinstance(other, GaussianRational):
      return other
    if isinstance(other, _RATIONAL_TYPES):
      return GaussianRational(other)
    return None

  def __add__(self, other):
    o = self._coerce(other)
    if o is None:
      return NotImplemented
    return GaussianRational(self.re + o.re, self.im + o.im)

  __radd__ = __add__

  def __sub__(self, other):
    o = self._coerce(other)
    if o is None:
      return NotImplemented
    return GaussianRational(self.re - o.re, self.im - o.im)

  def __rsub__(self, other):
    o = self._coerce(other)
    if o is None:
      return NotImplemented
    return GaussianRational(o.re - self.re, o.im - self.im)

  def __neg__(self):
    return GaussianRational(-self.re, -self.im)

  def __mul__(self, other):
    o = self._coerce(other)
    if o is None:
      return NotImplemented
    return GaussianRational(self.re * o.re - self.im * o.im,
                            self.re * o.im + self.im * o.re)

  __rmul__ = __mul__

  def conjugate(self):
    return GaussianRational(self.re, -self.im)

  def norm(self):
    """The rational norm re^2 + im^2."""
    return self.re * self.re + self.im * self.im

  def __truediv__(self, other):
    o = self._coerce(other)
    if o is None:
      return NotImplemented
    n = o.norm()
    if n == 0:
      raise ZeroDivisionError("division by zero in Q(i)")
    return GaussianRational((self.re * o.re + self.im * o.im) / n,
                            (self.im * o.re - self.re * o.im) / n)

  def __rtruediv__(self, other):
    o = self._coerce(other)
    if o is None:
      return NotImplemented
    return o / self

  def __eq__(self, other):
    if isinstance(other, GaussianRational):
      return self.re == other.re and self.im == other.im
    if isinstance(other, _RATIONAL_TYPES):
      return self.im == 0 and self.re == other
    return NotImplemented

  def __hash__(self):
    if self.im == 0:
      return hash(self.re)
    return hash((self.re, self.im))

  def __bool__(self):
    return self.re != 0 or self.im != 0

  def __repr__(self):
    return "GaussianRational(%s, %s)" % (self.re, self.im)

  def __str__(self):
    if self.im == 0:
      return str(self.re)
    if self.re == 0:
      return "%s*i" % self.im
    sign = "+" if self.im > 0 else "-"
    return "%s%s%s*i" % (self.re, sign, abs(self.im))


#: The imaginary unit of Q(i).
I_UNIT = GaussianRational(0, 1)


def i_power(k):
  """Return i**k as a GaussianRational, for any integer k."""
  return (GaussianRational(1), GaussianRational(0, 1),
          GaussianRational(-1), GaussianRational(0, -1))[k % 4]


class SparseVector:
  """A sparse vector: a map from opaque totally ordered keys to scalars.

  Zero entries are never stored.  Instances behave as immutable values;
  arithmetic returns new vectors.
  """

  __slots__ = ("entries",)

  def __init__(self, entries=None):
    d = {}
    if entries:
      for k, v in (entries.items() if isinstance(entries, dict) else entries):
        if v:
          d[k] = v
    object.__setattr__(self, "entries", d)

  def __setattr__(self, name, value):
    raise AttributeError("SparseVector is immutable")

  @classmethod
  def _raw(cls, d):
    """Wrap a dict already purged of zeros, without copying."""
    v = cls.__new__(cls)
    object.__setattr__(v, "entries", d)
    return v

  @classmethod
  def unit(cls, key):
    return cls._raw({key: 1})

  def get(self, key, default=0):
    return self.entries.get(key, default)

  def items(self):
    return self.entries.items()

  def keys(self):
    return self.entries.keys()

  def support(self):
    return frozenset(self.entries)

  def __len__(self):
    return len(self.entries)

  def __bool__(self):
    return bool(self.entries)

  def __eq__(self, other):
    if not isinstance(other, SparseVector):
      return NotImplemented
    return self.entries == other.entries

  def __hash__(self):
    return hash(self.canonical())

  def canonical(self):
    """A hashable canonical form: sorted tuple of (key, value) pairs."""
    return tuple(sorted(self.entries.items(), key=lambda kv: kv[0]))

  def __add__(self, other):
    d = dict(self.entries)
    for k, v in other.entries.items():
      s = d.get(k, 0) + v
      if s:
        d[k] = s
      else:
        d.pop(k, None)
    return SparseVector._raw(d)

  def __sub__(self, other):
    d = dict(self.entries)
    for k, v in other.entries.items():
      s = d.get(k, 0) - v
      if s:
        d[k] = s
      else:
        d.pop(k, None)
    return SparseVector._raw(d)

  def __neg__(self):
    return SparseVector._raw({k: -v for k, v in self.entries.items()})

  def scale(self, c):
    if not c:
      return SparseVector._raw({})
    return SparseVector._raw({k: c * v for k, v in self.entries.items()})

  def __repr__(self):
    return "SparseVector(%r)" % (dict(self.entries),)


ZERO_VECTOR = SparseVector._raw({})


def _scalar_kinds(vectors):
  """Classify scalars: returns True if Gaussian, False if rational.

  Raises TypeError on a mix of Gaussian and plain rational values, or on
  unsupported scalar types (e.g. float).
  """
  saw_gauss = False
  saw_rat = False
  for vec in vectors:
    for _, v in vec.items():
      if isinstance(v, GaussianRational):
        saw_gauss = True
      elif isinstance(v, _RATIONAL_TYPES) and not isinstance(v, bool):
        saw_rat = True
      else:
        raise TypeError("unsupported scalar type: %r" % type(v).__name__)
  if saw_gauss and saw_rat:
    raise TypeError("cannot mix Gaussian and plain rational scalars")
  return saw_gauss


def _denominator_lcm(value):
  if isinstance(value, GaussianRational):
    a = value.re.denominator
    b = value.im.denominator
    return a * b // _gcd(a, b)
  return Fraction(value).denominator


def _gcd(a, b):
  while b:
    a, b = b, a % b
  return a


def _clear_denominators(row, gaussian):
  lcm = 1
  for v in row:
    d = _denominator_lcm(v)
    lcm = lcm * d // _gcd(lcm, d)
  if gaussian:
    return [GaussianRational(v.re * lcm, v.im * lcm) if isinstance(v, GaussianRational)
            else GaussianRational(Fraction(v) * lcm) for v in row]
  return [int(Fraction(v) * lcm) for v in row]


def rank(vectors):
  """Exact rank of a list of sparse vectors.

  The key set is the sorted union of all supports; rows are scaled to clear
  denominators and a fraction-free (Bareiss) elimination runs with a
  deterministic pivot order (columns in increasing key order, rows in input
  order).  The result does not depend on the input order beyond that
  determinism -- rank is basis independent.
  """
  vecs = [v for v in vectors if v]
  if not vecs:
    return 0
  gaussian = _scalar_kinds(vecs)
  keys = sorted(set().union(*[v.support() for v in vecs]))
  col_of = {k: c for c, k in enumerate(keys)}
  rows = []
  for v in vecs:
    row = [0] * len(keys)
    for k, val in v.items():
      row[col_of[k]] = val
    rows.append(_clear_denominators(row, gaussian))
  return _bareiss_rank(rows, gaussian)


def _bareiss_rank(rows, gaussian):
  n_rows = len(rows)
  n_cols = len(rows[0]) if rows else 0
  r = 0
  prev = GaussianRational(1) if gaussian else 1
  for c in range(n_cols):
    pivot_row = None
    for rr in range(r, n_rows):
      if rows[rr][c]:
        pivot_row = rr
        break
    if pivot_row is None:
      continue
    if pivot_row != r:
      rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
    piv = rows[r][c]
    for rr in range(r + 1, n_rows):
      lead = rows[rr][c]
      for cc in range(c, n_cols):
        num = piv * rows[rr][cc] - lead * rows[r][cc]
        rows[rr][cc] = _exact_div(num, prev, gaussian)
    prev = piv
    r += 1
    if r == n_rows:
      break
  return r


def smith_invariant_factors(matrix):
  """Invariant factors of an integer matrix (Smith normal form diagonal).

  Returns the nonnegative diagonal entries d_1 | d_2 | ... for the
  min(rows, cols) positions.  Pure integer row/column reduction.
  """
  m = [list(map(int, row)) for row in matrix]
  rows = len(m)
  cols = len(m[0]) if rows else 0
  out = []
  top = 0
  while top < rows and top < cols:
    # find a nonzero entry of minimal absolute value in the working block
    best = None
    for r in range(top, rows):
      for c in range(top, cols):
        v = m[r][c]
        if v and (best is None or abs(v) < abs(m[best[0]][best[1]])):
          best = (r, c)
    if best is None:
      out.extend([0] * (min(rows, cols) - top))
      return out
    r0, c0 = best
    m[top], m[r0] = m[r0], m[top]
    for row in m:
      row[top], row[c0] = row[c0], row[top]
    piv = m[top][top]
    done = True
    for r in range(top + 1, rows):
      if m[r][top] % piv:
        done = False
      q = m[r][top] // piv
      if q:
        m[r] = [a - q * b for a, b in zip(m[r], m[top])]
    for c in range(top + 1, cols):
      if m[top][c] % piv:
        done = False
      q = m[top][c] // piv
      if q:
        for r in range(rows):
          m[r][c] -= q * m[r][top]
    if not done:
      continue
    if any(m[r][top] for r in range(top + 1, rows)) or \
       any(m[top][c] for c in range(top + 1, cols)):
      continue
    # ensure divisibility of the remaining block by the pivot
    bad = None
    for r in range(top + 1, rows):
      for c in range(top + 1, cols):
        if m[r][c] % piv:
          bad = r
          break
      if bad is not None:
        break
    if bad is not None:
      m[top] = [a + b for a, b in zip(m[top], m[bad])]
      continue
    out.append(abs(piv))
    top += 1
  return out


def _exact_div(num, den, gaussian):
  if gaussian:
    return num / den
  if num == 0:
    return 0
  q, rem = divmod(num, den)
  if rem:
    raise ArithmeticError("non-exact division in fraction-free elimination")
  return q

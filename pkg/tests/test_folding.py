from fractions import Fraction

import pytest

from twistedlie.folding import (CoinvariantWeight, Folding, fixed_type,
                                standard_automorphism)
from twistedlie.rootsystem import cartan_matrix

# (family, rank, order) -> (fixed type, weight-lattice type, component
# group invariant factors), for all six covered data
_TABLE = {
    ("A", 5, 2): ("C3", "C3", (2,)),
    ("A", 4, 4): ("C2", "B2", ()),
    ("D", 5, 2): ("B4", "B4", (2,)),
    ("D", 6, 2): ("B5", "B5", (2,)),
    ("D", 4, 3): ("G2", "G2", ()),
    ("E", 6, 2): ("F4", "F4", ()),
}


def _data():
  return [Folding(f, n, m) for (f, n, m) in _TABLE]


class TestFoldingTable:

  @pytest.mark.parametrize("key", sorted(_TABLE))
  def test_fixed_and_weight_types(self, key):
    datum = Folding(*key)
    fixed, weight, _ = _TABLE[key]
    assert str(datum.fixed_ctype) == fixed
    assert str(datum.weight_ctype) == weight

  @pytest.mark.parametrize("key", sorted(_TABLE))
  def test_component_group(self, key):
    datum = Folding(*key)
    assert datum.component_group() == _TABLE[key][2]

  def test_fixed_type_helper(self):
    assert str(fixed_type("E", 6, 2)) == "F4"
    assert str(fixed_type("A", 2, 4)) == "A1"

  def test_unknown_folding_rejected(self):
    with pytest.raises(ValueError):
      Folding("A", 4, 2)   # even-rank A with order 2 is not covered
    with pytest.raises(ValueError):
      Folding("E", 6, 3)

  def test_standard_automorphism_alias(self):
    assert standard_automorphism("D", 5, 2).ell == 4


class TestTauEta:

  def test_tau_is_involution_or_triality(self):
    for datum in _data():
      order = 3 if (datum.base_type.family, datum.base_type.rank,
                    datum.order) == ("D", 4, 3) else 2
      perm = list(range(1, datum.base.rank + 1))
      for _ in range(order):
        perm = [datum.tau[i - 1] for i in perm]
      assert perm == list(range(1, datum.base.rank + 1))

  def test_eta_constant_on_tau_orbits(self):
    for datum in _data():
      for i in range(1, datum.base.rank + 1):
        assert datum.eta[i - 1] == datum.eta[datum.tau[i - 1] - 1]

  def test_fibers_partition_nodes(self):
    for datum in _data():
      nodes = []
      for j in range(1, datum.ell + 1):
        nodes.extend(datum.fiber(j))
      assert sorted(nodes) == list(range(1, datum.base.rank + 1))


class TestFoldedRoots:

  def test_beta_matrix_is_folded_cartan(self):
    """Pairings of the folded simple roots against the folded simple
    coroots reproduce the Cartan matrix of the fixed type."""
    for datum in _data():
      expected = cartan_matrix(datum.fixed_ctype)
      for j in range(1, datum.ell + 1):
        beta = datum.beta(j)
        for k in range(1, datum.ell + 1):
          assert beta[k - 1] == expected[k - 1][j - 1]

  def test_iota_of_gamma_is_beta(self):
    """The iota image of each simple-coroot class equals the folded simple
    root, halved at the short node of the one ramified family."""
    for datum in _data():
      for j in range(1, datum.ell + 1):
        img = datum.iota(datum.class_lift(datum.gamma(j)))
        beta = datum.beta(j)
        if datum.is_ramified and j == datum.ell:
          assert list(img) == [Fraction(c, 2) for c in beta]
        else:
          assert tuple(img) == tuple(beta)

  def test_iota_of_fundamental_coweights(self):
    for datum in _data():
      n = datum.base.rank
      for i in range(1, n + 1):
        om = tuple(int(k == i - 1) for k in range(n))
        img = datum.iota(om)
        j = datum.eta[i - 1]
        assert img == tuple(int(k == j - 1) for k in range(datum.ell))


class TestProjection:

  def test_project_identity_for_unramified(self):
    """For the unramified data, classes of fundamental coweights are the
    fundamental weights of H indexed by eta."""
    for datum in _data():
      if datum.is_ramified:
        continue
      n = datum.base.rank
      for i in range(1, n + 1):
        om = tuple(int(k == i - 1) for k in range(n))
        cls = datum.project(om)
        j = datum.eta[i - 1]
        assert cls.coords == tuple(int(k == j - 1)
                                   for k in range(datum.ell))

  def test_ramified_projection_doubles_short_node(self):
    datum = Folding("A", 2, 4)
    assert datum.project((1, 0)).coords == (2,)
    assert datum.project((2, 0)).coords == (4,)

  def test_lift_roundtrip(self):
    for datum in _data():
      for j in range(1, datum.ell + 1):
        cls = datum.gamma(j)
        lift = datum.class_lift(cls)
        assert datum.project(lift) == cls

  def test_lattice_membership(self):
    datum = Folding("A", 2, 4)
    assert datum.in_coinvariant_lattice(CoinvariantWeight(
        datum.weight_ctype, (2,)))
    assert not datum.in_coinvariant_lattice(CoinvariantWeight(
        datum.weight_ctype, (1,)))
    unram = Folding("A", 5, 2)
    assert unram.in_coinvariant_lattice(CoinvariantWeight(
        unram.weight_ctype, (0, 1, 0)))


class TestDiscreteInvariants:

  def test_level_one_sets(self):
    assert Folding("A", 5, 2).level_one_set() == [(0, 0, 0), (1, 0, 0)]
    assert Folding("D", 5, 2).level_one_set() == [(0, 0, 0, 0),
                                                  (0, 0, 0, 1)]
    assert Folding("A", 4, 4).level_one_set() == [(0, 0)]
    assert Folding("D", 4, 3).level_one_set() == [(0, 0)]
    assert Folding("E", 6, 2).level_one_set() == [(0, 0, 0, 0)]

  def test_special_coweights_map_onto_level_one(self):
    for datum in _data():
      images = [datum.iota(cw) for cw in datum.special_coweights()]
      assert sorted(images) == sorted(tuple(v) for v in
                                      datum.level_one_set())

  def test_level_one_count_matches_component_group(self):
    for datum in _data():
      order = 1
      for d in datum.component_group():
        order *= d
      assert len(datum.level_one_set()) == order


class TestDimensions:

  def test_schubert_dimension_is_twice_rho_pairing(self):
    datum = Folding("A", 2, 4)
    # lift of 2*gamma_1 is the sum of the two fundamental coweights'
    # worth along node 1; <2rho, acheck_1 + acheck_2> = 4
    assert datum.schubert_dimension((1, 1)) == 4

  def test_class_dimension(self):
    datum = Folding("A", 2, 4)
    lam = CoinvariantWeight(datum.weight_ctype, (4,))
    assert datum.class_dimension(lam) == datum.schubert_dimension(
        datum.class_lift(lam))

  def test_dimension_rejects_nondominant(self):
    datum = Folding("A", 5, 2)
    with pytest.raises(ValueError):
      datum.schubert_dimension((-1, 0, 0, 0, 0))


class TestCoinvariantWeight:

  def test_arithmetic(self):
    t = Folding("A", 5, 2).weight_ctype
    a = CoinvariantWeight(t, (1, 2, 0))
    b = CoinvariantWeight(t, (0, 1, 1))
    assert (a + b).coords == (1, 3, 1)
    assert (a - b).coords == (1, 1, -1)

  def test_normalizes_integral_fractions(self):
    t = Folding("A", 5, 2).weight_ctype
    a = CoinvariantWeight(t, (Fraction(2, 1), Fraction(1, 2), 0))
    assert a.coords == (2, Fraction(1, 2), 0)
    assert not a.is_integral()
    assert a.is_dominant()

  def test_type_mismatch_rejected(self):
    a = CoinvariantWeight(Folding("A", 5, 2).weight_ctype, (0, 0, 0))
    b = CoinvariantWeight(Folding("E", 6, 2).weight_ctype, (0, 0, 0, 0))
    with pytest.raises(ValueError):
      a + b

import json

import pytest

from twistedlie import cli


def _run(capsys, argv):
  code = cli.main(argv)
  out = capsys.readouterr().out
  return code, out


class TestRootsys:

  def test_basic(self, capsys):
    code, out = _run(capsys, ["rootsys", "--type", "E", "--rank", "6"])
    assert code == 0
    data = json.loads(out)
    assert data["schema_version"] == 1
    assert data["type"] == "E6"
    assert data["positive_roots"] == 36
    assert data["highest_root"] == [1, 2, 2, 3, 2, 1]

  def test_weight_report(self, capsys):
    code, out = _run(capsys, ["rootsys", "--type", "E", "--rank", "6",
                              "--weight", "0,0,0,1,0,0"])
    assert code == 0
    data = json.loads(out)
    assert data["dimension"] == 2925
    assert data["orbit_size"] == 720

  def test_deterministic_output(self, capsys):
    _, first = _run(capsys, ["rootsys", "--type", "F", "--rank", "4"])
    _, second = _run(capsys, ["rootsys", "--type", "F", "--rank", "4"])
    assert first == second

  def test_tsv_format(self, capsys):
    code, out = _run(capsys, ["rootsys", "--type", "A", "--rank", "2",
                              "--format", "tsv"])
    assert code == 0
    lines = dict(line.split("\t", 1) for line in out.splitlines())
    assert json.loads(lines["positive_roots"]) == 3
    assert json.loads(lines["schema_version"]) == 1

  def test_bad_type_is_usage_error(self, capsys):
    code, _ = _run(capsys, ["rootsys", "--type", "Z", "--rank", "2"])
    assert code == 2


class TestFold:

  def test_e6(self, capsys):
    code, out = _run(capsys, ["fold", "--type", "E", "--rank", "6",
                              "--m", "2"])
    assert code == 0
    data = json.loads(out)
    assert data["fixed_type"] == "F4"
    assert data["level_one_set"] == [[0, 0, 0, 0]]
    assert data["iota_consistent"]

  def test_ramified(self, capsys):
    code, out = _run(capsys, ["fold", "--type", "A", "--rank", "4",
                              "--m", "4"])
    assert code == 0
    data = json.loads(out)
    assert data["ramified"]
    assert data["weight_type"] == "B2"
    assert data["component_group"] == []

  def test_uncovered_datum_is_usage_error(self, capsys):
    code, _ = _run(capsys, ["fold", "--type", "A", "--rank", "4",
                            "--m", "2"])
    assert code == 2


class TestDominance:

  def test_rank_one_chain(self, capsys):
    code, out = _run(capsys, ["dominance", "--type", "A", "--rank", "2",
                              "--m", "4", "--lambda", "2,0"])
    assert code == 0
    data = json.loads(out)
    assert data["lambda"] == [4]
    assert data["dominants_below"] == [[4], [2], [0]]
    assert [[2], [4]] in data["covers"]
    assert [[0], [2]] in data["covers"]
    assert [[0], [4]] not in data["covers"]

  def test_fractional_coordinates_accepted(self, capsys):
    code, out = _run(capsys, ["dominance", "--type", "A", "--rank", "2",
                              "--m", "4", "--lambda", "1/2,1/2"])
    assert code == 0
    data = json.loads(out)
    assert data["lambda"] == [2]


class TestSmoothLocus:

  def test_doubled_class_report(self, capsys):
    code, out = _run(capsys, ["smooth-locus", "--type", "A", "--rank", "2",
                              "--m", "4", "--lambda", "2,0",
                              "--variant", "special-not-absolutely-special"])
    assert code == 0
    data = json.loads(out)
    cells = {tuple(c["mu"]): c for c in data["cells"]}
    assert cells[(4,)]["smooth"]
    assert not cells[(2,)]["smooth"]
    assert cells[(2,)]["reason"] == "case1-cover-not-quasi-minuscule"
    assert not cells[(0,)]["smooth"]

  def test_deterministic(self, capsys):
    argv = ["smooth-locus", "--type", "A", "--rank", "4", "--m", "4",
            "--lambda", "1,1,1,1", "--variant", "special-not-absolutely-special"]
    _, first = _run(capsys, argv)
    _, second = _run(capsys, argv)
    assert first == second


class TestHyperspecial:

  def test_rank_one(self, capsys):
    code, out = _run(capsys, ["hyperspecial-check", "--ell", "1",
                              "--degree", "4", "--trials", "20"])
    assert code == 0
    data = json.loads(out)
    assert data["passed"]
    assert data["mismatches"] == []
    assert data["bracket_failures"] == []


class TestNumbersGame:

  def test_counts(self, capsys):
    code, out = _run(capsys, ["numbers-game"])
    assert code == 0
    data = json.loads(out)
    assert len(data["nodes"]) == 16
    assert len(data["edges"]) == 16
    assert data["stars"] == 10
    assert data["nodes"][0] == {"star": False,
                                "weight": [0, 0, 0, 1, 0, 0]}


class TestUsageErrors:

  def test_missing_subcommand(self):
    with pytest.raises(SystemExit) as err:
      cli.main([])
    assert err.value.code == 2

  def test_unknown_flag(self):
    with pytest.raises(SystemExit) as err:
      cli.main(["rootsys", "--type", "A", "--rank", "2", "--nope"])
    assert err.value.code == 2

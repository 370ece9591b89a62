"""Command-line entry point.

Subcommands:

  rootsys           Cartan data and weight computations for a single type.
  fold              folding datum: fixed type, component group, level-one set.
  dominance         dominant coinvariant classes below a class, with covers.
  smooth-locus      smooth/singular classification of the cells in a closure.
  e6-duality        the full E6 verification suite scorecard.
  levi-extremal     just the Levi-extremal sweep of the E6 suite.
  hyperspecial-check  the twisted loop algebra basis verification.
  numbers-game      the numbers-game poset seeded at the fourth fundamental
                    weight of E6.

Output on stdout is deterministic JSON (sorted keys, fractions rendered as
strings such as "1/2", a schema_version field); progress for long-running
suites goes to stderr.  Exit code 0 means every requested check passed, 1
means a verification failure (a JSON witness is still printed), 2 is a
usage error.  ``--jobs`` is accepted for compatibility; all computations
run sequentially and deterministically.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import cells, e6, folding, loops
from .rootsystem import build

SCHEMA_VERSION = 1


def _jsonable(value):
  if isinstance(value, bool) or isinstance(value, int) or value is None:
    return value
  if isinstance(value, Fraction):
    return str(value) if value.denominator != 1 else int(value)
  if isinstance(value, str):
    return value
  if isinstance(value, folding.CoinvariantWeight):
    return {"type": str(value.htype), "coords": _jsonable(value.coords)}
  if isinstance(value, (list, tuple)):
    return [_jsonable(v) for v in value]
  if isinstance(value, dict):
    return {str(k): _jsonable(v) for k, v in value.items()}
  if hasattr(value, "__dict__") or hasattr(value, "__dataclass_fields__"):
    fields = getattr(value, "__dataclass_fields__", None)
    if fields:
      return {name: _jsonable(getattr(value, name)) for name in fields}
  return str(value)


def _emit(payload, fmt):
  payload = dict(payload)
  payload["schema_version"] = SCHEMA_VERSION
  data = _jsonable(payload)
  if fmt == "tsv":
    for key in sorted(data):
      sys.stdout.write("%s\t%s\n" % (key, json.dumps(data[key],
                                                     sort_keys=True)))
  else:
    sys.stdout.write(json.dumps(data, sort_keys=True, indent=2) + "\n")


def _progress(msg):
  sys.stderr.write(msg + "\n")
  sys.stderr.flush()


def _parse_coords(text):
  return tuple(Fraction(part) for part in text.split(","))


def _add_common(p):
  p.add_argument("--format", choices=("json", "tsv"), default="json")
  p.add_argument("--jobs", type=int, default=1,
                 help="accepted for compatibility; execution is sequential")


def _cmd_rootsys(args):
  sys_ = build(args.type, args.rank)
  payload = {
      "type": str(sys_.ctype),
      "cartan": [list(row) for row in sys_.cartan],
      "symmetrizer": list(sys_.d),
      "positive_roots": len(sys_.positive_roots),
      "highest_root": list(sys_.highest_root),
  }
  if args.weight:
    wt = tuple(int(c) for c in _parse_coords(args.weight))
    payload["weight"] = list(wt)
    payload["dimension"] = sys_.weyl_dimension(wt)
    payload["orbit_size"] = len(sys_.weyl_orbit(wt))
  _emit(payload, args.format)
  return 0


def _cmd_fold(args):
  datum = folding.Folding(args.type, args.rank, args.m)
  betas = [list(datum.beta(j)) for j in range(1, datum.ell + 1)]
  iota_ok = True
  for j in range(1, datum.ell + 1):
    img = datum.iota(datum.class_lift(datum.gamma(j)))
    expected = list(datum.beta(j))
    if datum.is_ramified and j == datum.ell:
      expected = [Fraction(c, 2) for c in datum.beta(j)]
    if list(img) != [Fraction(c) for c in expected]:
      iota_ok = False
  payload = {
      "base_type": str(datum.base_type),
      "order": datum.order,
      "fixed_type": str(datum.fixed_ctype),
      "weight_type": str(datum.weight_ctype),
      "ramified": datum.is_ramified,
      "component_group": list(datum.component_group()),
      "level_one_set": [list(v) for v in datum.level_one_set()],
      "special_coweights": [list(v) for v in datum.special_coweights()],
      "folded_simple_roots": betas,
      "iota_consistent": iota_ok,
  }
  _emit(payload, args.format)
  return 0 if iota_ok else 1


def _projected_class(datum, coords):
  if len(coords) != datum.base.rank:
    raise SystemExit(2)
  return datum.project(coords)


def _cmd_dominance(args):
  datum = folding.Folding(args.type, args.rank, args.m)
  lam = _projected_class(datum, _parse_coords(args.lam))
  below = cells.dominants_below(datum, lam)
  covers = []
  for mu in below:
    for nu in below:
      if cells.is_cover(datum, mu, nu):
        covers.append([list(mu.coords), list(nu.coords)])
  payload = {
      "class_type": str(datum.weight_ctype),
      "lambda": list(lam.coords),
      "dominants_below": [list(mu.coords) for mu in below],
      "covers": covers,
  }
  _emit(payload, args.format)
  return 0


def _cmd_smooth_locus(args):
  datum = folding.Folding(args.type, args.rank, args.m)
  lam = _projected_class(datum, _parse_coords(args.lam))
  report = cells.smooth_cells(datum, args.variant, lam)
  payload = {
      "family": report.family,
      "rank": report.rank,
      "order": report.order,
      "variant": report.variant,
      "lambda": list(report.lam.coords),
      "cells": [{
          "mu": list(v.mu.coords),
          "smooth": v.smooth,
          "reason": v.reason,
          "provenance": v.provenance,
      } for v in report.cells],
  }
  _emit(payload, args.format)
  return 0


def _cmd_e6_duality(args):
  suite = e6.E6Suite(progress=_progress)
  card = suite.scorecard()
  ok = (card["vzero_nonzero"] and card["orbit_size"] == 240
        and card["rank"] == 45 and card["levi_extremal_ok"]
        and card["chain_ok"] and card["poset_ok"])
  _emit(card, args.format)
  return 0 if ok else 1


def _cmd_levi_extremal(args):
  suite = e6.E6Suite(progress=_progress)
  _progress("sweeping the 151200 lowering words")
  report = suite.levi_extremal_sweep()
  _emit(report, args.format)
  return 0 if report["all_levi_extremal"] else 1


def _cmd_hyperspecial(args):
  report = loops.verify_hyperspecial(args.ell, args.degree)
  failures = loops.eta_bracket_check(args.ell, args.degree, args.trials)
  payload = dict(report)
  payload["bracket_trials"] = args.trials
  payload["bracket_failures"] = [list(map(str, f)) for f in failures]
  ok = report["passed"] and not failures
  payload["passed"] = ok
  _emit(payload, args.format)
  return 0 if ok else 1


def _cmd_numbers_game(args):
  poset = e6.numbers_game_poset()
  payload = {
      "nodes": [{"weight": list(w), "star": star} for w, star in
                poset["nodes"]],
      "edges": [list(edge) for edge in poset["edges"]],
      "stars": sum(1 for _, star in poset["nodes"] if star),
  }
  _emit(payload, args.format)
  return 0


def main(argv=None):
  parser = argparse.ArgumentParser(prog="twistedlie",
                                   description=__doc__.splitlines()[0])
  sub = parser.add_subparsers(dest="command", required=True)

  p = sub.add_parser("rootsys", help="Cartan data for a single type")
  p.add_argument("--type", required=True)
  p.add_argument("--rank", type=int, required=True)
  p.add_argument("--weight", help="fundamental weight coordinates, e.g. 1,0")
  _add_common(p)
  p.set_defaults(func=_cmd_rootsys)

  p = sub.add_parser("fold", help="folding datum summary")
  p.add_argument("--type", required=True)
  p.add_argument("--rank", type=int, required=True)
  p.add_argument("--m", type=int, required=True)
  _add_common(p)
  p.set_defaults(func=_cmd_fold)

  p = sub.add_parser("dominance", help="dominant classes below a class")
  p.add_argument("--type", required=True)
  p.add_argument("--rank", type=int, required=True)
  p.add_argument("--m", type=int, required=True)
  p.add_argument("--lambda", dest="lam", required=True,
                 help="base coweight in fundamental coweight coordinates; "
                      "fractions such as 1/2 are accepted")
  _add_common(p)
  p.set_defaults(func=_cmd_dominance)

  p = sub.add_parser("smooth-locus", help="smooth/singular cell report")
  p.add_argument("--type", required=True)
  p.add_argument("--rank", type=int, required=True)
  p.add_argument("--m", type=int, required=True)
  p.add_argument("--lambda", dest="lam", required=True)
  p.add_argument("--variant", choices=(cells.VARIANT_SPECIAL,
                                       cells.VARIANT_ABS_SPECIAL))
  _add_common(p)
  p.set_defaults(func=_cmd_smooth_locus)

  p = sub.add_parser("e6-duality", help="full E6 suite scorecard")
  _add_common(p)
  p.set_defaults(func=_cmd_e6_duality)

  p = sub.add_parser("levi-extremal", help="the Levi-extremal sweep")
  _add_common(p)
  p.set_defaults(func=_cmd_levi_extremal)

  p = sub.add_parser("hyperspecial-check", help="twisted loop basis check")
  p.add_argument("--ell", type=int, required=True)
  p.add_argument("--degree", type=int, default=6)
  p.add_argument("--trials", type=int, default=200)
  _add_common(p)
  p.set_defaults(func=_cmd_hyperspecial)

  p = sub.add_parser("numbers-game", help="the numbers-game poset")
  _add_common(p)
  p.set_defaults(func=_cmd_numbers_game)

  args = parser.parse_args(argv)
  try:
    return args.func(args)
  except (ValueError, KeyError) as exc:
    sys.stderr.write("error: %s\n" % exc)
    return 2


if __name__ == "__main__":
  sys.exit(main())

from __future__ import annotations

import argparse
import concurrent.futures
import json
import logging
import math
import sys
import typing as t
from pathlib import Path

from nr.util.logging.formatters.terminal_colors import TerminalColorFormatter

from repring import __version__
from repring.check import CheckError, check_diagram
from repring.config import SettingsError, load_settings, use_settings
from repring.cyclotomic import CycInt, NotInSubring, OrderMismatch
from repring.ghost import GhostMismatch, GhostVector
from repring.groups import GroupOrderCapExceeded, InvalidPermutation
from repring.gsets import Biset, BisetError
from repring.library import NamedBisetResolver, UnknownGroup, load_group
from repring.lattices import Lattice, TheoryViolation, table_of_marks
from repring.parsing import ParseError, parse_biset
from repring.report import (
  CheckRecord, DegreeReport, DiagramCase, DiagramReport, Job, LatticeReport, Report, TensorRecord, TensorReport,
  UnitRecord, UnitsReport, Vector)
from repring.rings import load_ring
from repring.units import EnumerationCapExceeded

logger = logging.getLogger(__name__)

#: Errors caused by the input rather than by the mathematics. They exit with code 2.
USAGE_ERRORS = (
  BisetError, GhostMismatch, GroupOrderCapExceeded, InvalidPermutation, NotInSubring, OrderMismatch, ParseError,
  SettingsError, UnknownGroup,
)


def setup_logging(verbose: bool = False) -> None:
  logging.basicConfig(level=logging.DEBUG if verbose else logging.INFO)

  formatter = TerminalColorFormatter('%(message)s')
  assert formatter.styles
  formatter.styles.add_style('path', 'yellow')
  formatter.install()


def get_argument_parser() -> argparse.ArgumentParser:
  parser = argparse.ArgumentParser(prog='repring')
  parser.add_argument(
    '--version',
    action='version',
    version=__version__,
  )
  parser.add_argument(
    '-v', '--verbose',
    action='store_true',
    help='Enable debug logging.',
  )
  parser.add_argument(
    '-c', '--config-file',
    type=Path,
    help='A TOML file with a [tool.repring] table. (default: pyproject.toml in the working directory)',
    metavar='PATH',
  )
  parser.add_argument(
    '--cap',
    type=int,
    help='The largest group order that may be constructed. Overrides the configuration and REPRING_CAP.',
  )
  parser.add_argument(
    '--enumeration-cap',
    type=int,
    help='The largest number of candidates a unit enumeration may visit.',
  )
  parser.add_argument(
    '-j', '--jobs',
    type=int,
    help='The number of worker threads for diagram checks.',
  )
  parser.add_argument(
    '--format',
    choices=['json', 'tsv', 'text'],
    default='json',
    help='The output format. (default: %(default)s)',
  )
  parser.add_argument(
    '--seed',
    type=int,
    help='The seed for randomized sampling. (default: from the configuration)',
  )

  commands = parser.add_subparsers(dest='command', required=True)

  lattice = commands.add_parser('lattice', help='Build the lattice of a representation ring.')
  _add_ring_arguments(lattice)
  lattice.add_argument('--group', required=True, help='A group name or group file.')
  lattice.add_argument('--emit', choices=['basis', 'snf', 'rank', 'marks'], default='basis')

  units = commands.add_parser('units', help='Enumerate the torsion units of a representation ring.')
  _add_ring_arguments(units)
  units.add_argument('--group', required=True, help='A group name or group file.')
  units.add_argument('--ghost', action='store_true', help='Enumerate the torsion units of the ghost ring instead.')

  teninduce = commands.add_parser('teninduce', help='Tensor induce ring elements along a biset.')
  _add_ring_arguments(teninduce)
  teninduce.add_argument('--biset', required=True, help='A biset expression, e.g. "ind C2<=C4".')
  teninduce.add_argument('--input', type=Path, help='A ghost vector in JSON. (default: all lattice generators)')

  algdeg = commands.add_parser('algdeg', help='Sample the algebraic degree of a tensor induction map.')
  _add_ring_arguments(algdeg)
  algdeg.add_argument('--biset', required=True, help='A biset expression.')
  algdeg.add_argument('--degree', type=int, help='The degree to test. (default: |U/H|)')

  diagram = commands.add_parser('diagram-check', help='Check every face of the diagram of rings.')
  diagram.add_argument('--biset', action='append', default=[], help='A biset expression; may be repeated.')
  diagram.add_argument('--group', action='append', default=[], help='Check the identity biset of a group.')
  diagram.add_argument('--p', type=int, action='append', default=[], required=True, help='A prime; may be repeated.')
  return parser


def _add_ring_arguments(parser: argparse.ArgumentParser) -> None:
  parser.add_argument('--ring', choices=['B', 'T', 'RK', 'RF'], required=True)
  parser.add_argument('--p', type=int, help='The prime, required for T and RF.')


def _vector(v: GhostVector) -> Vector:
  return Vector.model_validate(v.to_json())


def _index_order(L: Lattice) -> list[t.Any]:
  return [L.ring.index_key(k) for k in range(L.ring.size)]


def _resolve_biset(spec: str) -> Biset:
  return parse_biset(spec, NamedBisetResolver())


def cmd_lattice(job: Job, args: argparse.Namespace) -> Report:
  G = load_group(job.groups[0])
  ring = load_ring(args.ring)
  L = ring.lattice(G, args.p)
  report = LatticeReport(job=job, tag=L.tag, group=G.name, p=L.ring.p, e=L.ring.value_order, rank=L.rank,
    index_order=_index_order(L))
  if args.emit == 'basis':
    report.basis = [_vector(v) for v in L.basis()]
  elif args.emit == 'snf':
    report.snf = L.cokernel_invariants()
  elif args.emit == 'marks':
    reps, rows = table_of_marks(G)
    report.labels = [S.name for S in reps]
    report.marks = rows
  return report


def cmd_units(job: Job, args: argparse.Namespace) -> Report:
  from repring.units import ghost_torsion_units, orthogonal_units

  G = load_group(job.groups[0])
  ring = load_ring(args.ring)
  p = ring.check_prime(args.p)
  units = (ghost_torsion_units if args.ghost else orthogonal_units)(ring.tag, G, p)
  return UnitsReport(
    job=job, tag=ring.tag, group=G.name, p=p, ghost=args.ghost, order=units.order, exponent=units.exponent,
    elementary_abelian_2=units.is_elementary_abelian_2(),
    index_order=[units.ring.index_key(k) for k in range(units.ring.size)],
    units=[UnitRecord(vector=_vector(u.ghost), order=u.order, orthogonal=u.is_orthogonal()) for u in units],
  )


def _read_vector(path: Path, L: Lattice) -> GhostVector:
  data = json.loads(path.read_text())
  ring = L.ring
  if data.get('tag', ring.tag) != ring.tag:
    raise GhostMismatch(f'{path} holds a {data["tag"]} vector, expected {ring.tag}')
  values = [CycInt(ring.value_order, tuple(entry['value'])) for entry in data['entries']]
  return ring.vector(values)


def cmd_teninduce(job: Job, args: argparse.Namespace) -> Report:
  from repring.teninduct import apply_tensor

  U = _resolve_biset(job.bisets[0])
  ring = load_ring(args.ring)
  source = ring.lattice(U.right, args.p)
  if args.input:
    inputs = [(str(args.input), source.element(_read_vector(args.input, source)))]
  else:
    inputs = [(label, source.element(v)) for label, v in zip(source.labels, source.generators)]
  results = []
  for label, x in inputs:
    y = apply_tensor(U, x)
    results.append(TensorRecord(label=label, source=_vector(x.ghost), image=_vector(y.ghost),
      coordinates=list(y.coordinates)))
  target = results[0].image if results else None
  return TensorReport(job=job, tag=ring.tag, biset=job.bisets[0], p=source.ring.p, results=results,
    index_order=[e.index for e in target.entries] if target else [])


def cmd_algdeg(job: Job, args: argparse.Namespace) -> Report:
  from repring.algmaps import MapUnderTest, degree_witness, sample_pool, sampled_degree
  from repring.teninduct import apply_tensor

  U = _resolve_biset(job.bisets[0])
  ring = load_ring(args.ring)
  domain = ring.lattice(U.right, args.p)
  codomain = ring.lattice(U.left, args.p, math.lcm(U.right.exponent, U.left.exponent))
  f = MapUnderTest(domain, codomain, lambda x: apply_tensor(U, x), f'{ring.tag}({job.bisets[0]})')
  n = len(U.transversal) if args.degree is None else args.degree
  pool = sample_pool(domain, job.seed, args.samples)
  witness = degree_witness(f, n, pool, job.seed)
  return DegreeReport(job=job, tag=ring.tag, biset=job.bisets[0], p=domain.ring.p, degree=n,
    orbits=len(U.transversal), verdict=witness.verdict.value, lower_degree_refuted=witness.lower_degree_refuted,
    sampled_degree=sampled_degree(f, n + 1, job.seed), evaluations=witness.evaluations)


def _diagram_case(spec: str, p: int) -> DiagramCase:
  U = _resolve_biset(spec)
  outcomes = check_diagram(U, p)
  checks = [CheckRecord(name=o.name, passed=o.passed, evaluated=o.evaluated, failures=o.failures,
    witness=o.witness) for o in outcomes]
  return DiagramCase(biset=spec, source=U.right.name, target=U.left.name, p=p,
    passed=all(c.passed for c in checks), checks=checks)


def cmd_diagram_check(job: Job, args: argparse.Namespace) -> Report:
  specs = list(job.bisets) + [f'iso {name}' for name in job.groups]
  cases = [(spec, p) for spec in specs for p in job.primes]
  if args.jobs > 1:
    with concurrent.futures.ThreadPoolExecutor(args.jobs) as executor:
      results = list(executor.map(lambda case: _diagram_case(*case), cases))
  else:
    results = [_diagram_case(*case) for case in cases]
  for case in results:
    status = '<fg=green>pass</fg>' if case.passed else '<fg=red>FAIL</fg>'
    logger.info('%s %s -> %s (p=%d): %s', case.biset, case.source, case.target, case.p, status)
  return DiagramReport(job=job, passed=all(case.passed for case in results), cases=results)


def _as_list(value: t.Any) -> list[t.Any]:
  if value is None:
    return []
  return list(value) if isinstance(value, list) else [value]


COMMANDS: dict[str, t.Callable[[Job, argparse.Namespace], Report]] = {
  'lattice': cmd_lattice,
  'units': cmd_units,
  'teninduce': cmd_teninduce,
  'algdeg': cmd_algdeg,
  'diagram-check': cmd_diagram_check,
}


def main(argv: t.Sequence[str] | None = None) -> None:
  parser = get_argument_parser()
  args = parser.parse_args(argv)
  setup_logging(args.verbose)

  config_file = args.config_file or Path('pyproject.toml')
  try:
    settings = load_settings(config_file).replace(
      order_cap=args.cap, enumeration_cap=args.enumeration_cap, jobs=args.jobs, seed=args.seed)
    job = Job(
      command=args.command,
      groups=_as_list(getattr(args, 'group', None)),
      primes=_as_list(getattr(args, 'p', None)),
      bisets=_as_list(getattr(args, 'biset', None)),
      ring=getattr(args, 'ring', None),
      format=args.format,
      seed=settings.seed,
    )
  except (SettingsError, ValueError) as exc:
    parser.error(str(exc))

  if job.command == 'diagram-check' and not (job.bisets or job.groups):
    parser.error('diagram-check needs at least one --biset or --group')
  if job.ring in ('T', 'RF') and not job.primes:
    parser.error(f'the {job.ring} ring needs a prime, pass --p')
  args.jobs = settings.jobs
  args.samples = settings.sample_count

  try:
    with use_settings(settings):
      report = COMMANDS[job.command](job, args)
  except USAGE_ERRORS as exc:
    logger.error('<fg=red>%s</fg>', exc)
    sys.exit(2)
  except CheckError as exc:
    logger.error('<fg=red>Check "%s" raised an exception</fg>', exc.check_name, exc_info=exc.cause)
    sys.exit(1)
  except (EnumerationCapExceeded, TheoryViolation) as exc:
    logger.error('<fg=red>%s</fg>', exc)
    sys.exit(1)

  print(report.render(job.format))
  if isinstance(report, DiagramReport) and not report.passed:
    sys.exit(1)


if __name__ == '__main__':
  main()

""" Diagram checks: the faces of the cube of representation rings connected by tensor induction along a biset,
evaluated on every lattice generator.

The checks for one biset `U` and prime `p` form a #Graph. Lattice checks build and certify the lattices of both
groups; the face checks that read generators from a lattice depend on the check that built it.
"""

from __future__ import annotations

import abc
import dataclasses
import logging
import math
import typing as t

from repring.ghost import GhostVector, dual, tilde_b, tilde_c, tilde_d, tilde_l
from repring.graph import Graph, Node
from repring.gsets import GSet, tensor_induce_set
from repring.groups import linear_characters
from repring.lattices import Lattice, lattice, marks, monomial_ghost_T
from repring.teninduct import T_U_monomial, tilde_B_U, tilde_RF_U, tilde_RK_U, tilde_T_U, tilde_U

if t.TYPE_CHECKING:
  from repring.gsets import Biset

logger = logging.getLogger(__name__)


class CheckError(Exception):
  """ Wraps an exception raised inside a check. """

  def __init__(self, check_name: str, cause: BaseException) -> None:
    self.check_name = check_name
    self.cause = cause

  def __str__(self) -> str:
    return f'check {self.check_name!r} raised {type(self.cause).__name__}: {self.cause}'


@dataclasses.dataclass
class CheckOutcome:
  name: str
  passed: bool
  evaluated: int = 0
  failures: int = 0
  witness: str | None = None


class CheckContext:
  """ The biset and prime under test, and the lattices built by the lattice checks. """

  def __init__(self, U: Biset, p: int) -> None:
    self.U = U
    self.p = p
    self.lattices: dict[str, Lattice] = {}

  @property
  def e_source(self) -> int:
    return self.U.right.exponent

  @property
  def e_target(self) -> int:
    return math.lcm(self.U.right.exponent, self.U.left.exponent)


class Check(Node['Check']):
  """ Base class for the checks of a diagram. """

  def __init__(self, name: str) -> None:
    self.name = name

  @abc.abstractmethod
  def run(self, context: CheckContext) -> CheckOutcome:
    ...


class LambdaCheck(Check):

  def __init__(self, name: str, func: t.Callable[[CheckContext], CheckOutcome]) -> None:
    super().__init__(name)
    self.func = func

  def run(self, context: CheckContext) -> CheckOutcome:
    return self.func(context)


class LatticeCheck(Check):
  """ Builds a lattice on the source (`H`) or target (`G`) side; a #RankDeficiency propagates as a failure. """

  def __init__(self, tag: str, side: str) -> None:
    super().__init__(f'lattice:{tag}:{side}')
    self.tag = tag
    self.side = side

  def run(self, context: CheckContext) -> CheckOutcome:
    if self.side == 'H':
      group, e = context.U.right, context.e_source
    else:
      group, e = context.U.left, context.e_target
    L = lattice(self.tag, group, context.p if self.tag in ('T', 'RF') else None, e)
    context.lattices[self.name] = L
    logger.debug('%s: %r', self.name, L)
    return CheckOutcome(self.name, True, 1)


class FaceCheck(Check):
  """ Compares two routes around a face on every generator of a source lattice. """

  def __init__(
    self,
    name: str,
    source: str,
    lhs: t.Callable[[CheckContext, GhostVector], GhostVector],
    rhs: t.Callable[[CheckContext, GhostVector], GhostVector],
  ) -> None:
    super().__init__(name)
    self.source = source
    self.lhs = lhs
    self.rhs = rhs

  def run(self, context: CheckContext) -> CheckOutcome:
    L = context.lattices[self.source]
    failures, witness = 0, None
    for label, v in zip(L.labels, L.generators):
      if self.lhs(context, v) != self.rhs(context, v):
        failures += 1
        witness = witness or label
    return CheckOutcome(self.name, failures == 0, len(L.generators), failures, witness)


class MembershipCheck(Check):
  """ Tensor induction of every source generator lies in the target lattice. """

  def __init__(self, tag: str) -> None:
    super().__init__(f'membership:{tag}')
    self.tag = tag

  def run(self, context: CheckContext) -> CheckOutcome:
    source = context.lattices[f'lattice:{self.tag}:H']
    target = context.lattices[f'lattice:{self.tag}:G']
    failures, witness = 0, None
    for label, v in zip(source.labels, source.generators):
      if target.membership(tilde_U(context.U, v)) is None:
        failures += 1
        witness = witness or label
    return CheckOutcome(self.name, failures == 0, len(source.generators), failures, witness)


def _check_burnside_sets(context: CheckContext) -> CheckOutcome:
  """ For transitive H-sets, the ghost map agrees with the marks of the tensor induced G-set. """

  U = context.U
  H = U.right
  failures, witness = 0, None
  reps = H.subgroups.representatives
  for S in reps:
    X = GSet.cosets(H, S)
    if marks(tensor_induce_set(U, X)) != tilde_B_U(U, marks(X)):
      failures += 1
      witness = witness or S.name
  return CheckOutcome('face:B', failures == 0, len(reps), failures, witness)


def _check_monomial(context: CheckContext) -> CheckOutcome:
  U, p = context.U, context.p
  H = U.right
  failures, witness, count = 0, None, 0
  for S in H.subgroups.representatives:
    for k, psi in enumerate(linear_characters(S, context.e_source)):
      if psi.order % p == 0:
        continue
      count += 1
      lhs = tilde_T_U(U, monomial_ghost_T(H, p, S, psi, context.e_source))
      if lhs != T_U_monomial(U, S, psi, p):
        failures += 1
        witness = witness or f'{S.name}:ψ{k}'
  return CheckOutcome('face:T-monomial', failures == 0, count, failures, witness)


def diagram_checks(U: Biset, p: int) -> Graph[Check]:
  """ The checks of all faces for tensor induction along *U* at the prime *p*. """

  graph: Graph[Check] = Graph()
  for tag in ('B', 'T', 'RK', 'RF'):
    for side in ('H', 'G'):
      graph.add_node(LatticeCheck(tag, side))

  def face(check: Check, *lattices: str) -> None:
    graph.add_node(check)
    check.depends_on(*lattices)

  face(LambdaCheck('face:B', _check_burnside_sets), 'lattice:B:H')
  face(FaceCheck(
    'face:T-l', 'lattice:B:H',
    lambda c, v: tilde_T_U(c.U, tilde_l(v, c.p, c.e_source)),
    lambda c, v: tilde_l(tilde_B_U(c.U, v), c.p, c.e_target),
  ), 'lattice:B:H', 'lattice:T:H')
  face(LambdaCheck('face:T-monomial', _check_monomial), 'lattice:T:H')
  face(FaceCheck(
    'face:c', 'lattice:T:H',
    lambda c, v: tilde_RK_U(c.U, tilde_c(v)),
    lambda c, v: tilde_c(tilde_T_U(c.U, v)),
  ), 'lattice:T:H')
  face(FaceCheck(
    'face:b', 'lattice:T:H',
    lambda c, v: tilde_RF_U(c.U, tilde_b(v)),
    lambda c, v: tilde_b(tilde_T_U(c.U, v)),
  ), 'lattice:T:H')
  face(FaceCheck(
    'face:d', 'lattice:RK:H',
    lambda c, v: tilde_d(tilde_RK_U(c.U, v), c.p),
    lambda c, v: tilde_RF_U(c.U, tilde_d(v, c.p)),
  ), 'lattice:RK:H')
  face(FaceCheck(
    'face:dual-T', 'lattice:T:H',
    lambda c, v: tilde_T_U(c.U, dual(v)),
    lambda c, v: dual(tilde_T_U(c.U, v)),
  ), 'lattice:T:H')
  for tag in ('B', 'T', 'RK', 'RF'):
    face(MembershipCheck(tag), f'lattice:{tag}:H', f'lattice:{tag}:G')
  return graph


def run_checks(graph: Graph[Check], context: CheckContext) -> list[CheckOutcome]:
  """ Run every check in execution order. Any exception is re-raised as a #CheckError. """

  outcomes = []
  for check in graph.execution_order():
    logger.debug('Running check <info>%s</info>', check.name)
    try:
      outcome = check.run(context)
    except Exception as exc:
      raise CheckError(check.name, exc) from exc
    if not outcome.passed:
      logger.warning('<fg=red>%s failed</fg> on %d of %d inputs (first: %s)', outcome.name, outcome.failures,
        outcome.evaluated, outcome.witness)
    outcomes.append(outcome)
  return outcomes


def check_diagram(U: Biset, p: int) -> list[CheckOutcome]:
  return run_checks(diagram_checks(U, p), CheckContext(U, p))


import pytest

from repring.check import CheckContext, CheckError, CheckOutcome, LambdaCheck, check_diagram, diagram_checks, run_checks
from repring.graph import Graph
from repring.library import NamedBisetResolver
from repring.parsing import parse_biset


def _ind(sub: str, group: str):
  return NamedBisetResolver().ind(sub, group)


@pytest.mark.parametrize('sub,group,p', [
  ('C2', 'C4', 2), ('C2', 'S3', 3), ('C3', 'S3', 2), ('C2', 'D8', 2), ('C2', 'D8', 3), ('V4', 'A4', 2), ('V4', 'A4', 3),
  ('C3', 'A4', 2), ('C3', 'A4', 3),
])
def test_diagram_faces_pass(sub: str, group: str, p: int) -> None:
  outcomes = check_diagram(_ind(sub, group), p)
  failed = [o for o in outcomes if not o.passed]
  assert failed == []
  names = {o.name for o in outcomes}
  assert {'face:B', 'face:T-l', 'face:T-monomial', 'face:c', 'face:b', 'face:d', 'face:dual-T'} <= names
  assert {f'membership:{tag}' for tag in ('B', 'T', 'RK', 'RF')} <= names
  assert all(o.evaluated > 0 for o in outcomes)


@pytest.mark.parametrize('p', [2, 3])
def test_diagram_faces_pass_for_composite_biset(p: int) -> None:
  U = parse_biset('ind C2<=S3 * res C2<=S3', NamedBisetResolver())
  assert U.left is U.right
  outcomes = check_diagram(U, p)
  assert [o.name for o in outcomes if not o.passed] == []


def test_lattice_checks_run_first() -> None:
  graph = diagram_checks(_ind('C2', 'C4'), 2)
  order = [check.name for check in graph.execution_order()]
  for name in order:
    if name.startswith('membership:'):
      tag = name.split(':')[1]
      assert order.index(f'lattice:{tag}:H') < order.index(name)
      assert order.index(f'lattice:{tag}:G') < order.index(name)
  assert order.index('lattice:RK:H') < order.index('face:d')


def test_context_orders() -> None:
  context = CheckContext(_ind('C2', 'S3'), 3)
  assert (context.e_source, context.e_target) == (2, 6)


def test_run_checks_wraps_exceptions() -> None:
  def broken(context: CheckContext) -> CheckOutcome:
    raise ZeroDivisionError('boom')

  graph: Graph = Graph()
  graph.add_node(LambdaCheck('ok', lambda c: CheckOutcome('ok', True, 1)))
  graph.add_node(LambdaCheck('broken', broken))
  with pytest.raises(CheckError) as excinfo:
    run_checks(graph, CheckContext(_ind('C2', 'C4'), 2))
  assert excinfo.value.check_name == 'broken'
  assert isinstance(excinfo.value.cause, ZeroDivisionError)
  assert 'boom' in str(excinfo.value)


def test_failed_check_is_reported() -> None:
  graph: Graph = Graph()
  graph.add_node(LambdaCheck('bad', lambda c: CheckOutcome('bad', False, 3, 1, 'x')))
  outcomes = run_checks(graph, CheckContext(_ind('C2', 'C4'), 2))
  assert outcomes == [CheckOutcome('bad', False, 3, 1, 'x')]

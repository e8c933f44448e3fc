
import pytest

from repring.library import NamedBisetResolver
from repring.parsing import ParseError, parse_biset, parse_cycles, parse_group_file


def test_parse_cycles() -> None:
  assert parse_cycles('(1 2)(3 4 5)') == [(1, 2), (3, 4, 5)]
  assert parse_cycles('(1, 2) (3)') == [(1, 2)]
  assert parse_cycles('()') == []
  with pytest.raises(ParseError):
    parse_cycles('(1 2) x')


def test_parse_group_file() -> None:
  G = parse_group_file('# dihedral\ndegree: 4\n(1 2 3 4)\n(1 3)\n', name='D8')
  assert G.name == 'D8'
  assert G.order == 8
  with pytest.raises(ParseError):
    parse_group_file('(1 2)\n')
  with pytest.raises(ParseError):
    parse_group_file('# nothing\n')


def test_parse_biset() -> None:
  resolver = NamedBisetResolver()
  U = parse_biset('ind C2<=C4', resolver)
  assert (U.left.order, U.right.order, U.size) == (4, 2, 4)
  assert len(U.transversal) == 2

  V = parse_biset('ind C2<=S3 * res C2<=S3', resolver)
  assert V.left is V.right
  assert V.size == 18

  W = parse_biset('(iso S3 + iso S3)', resolver)
  assert W.size == 12

  X = parse_biset('inf S3->S3/C3', resolver)
  assert X.right.order == 2


def test_parse_biset_errors() -> None:
  resolver = NamedBisetResolver()
  with pytest.raises(ParseError):
    parse_biset('ind C2<=C4 * ind C2<=C4', resolver)
  with pytest.raises(ParseError):
    parse_biset('spam', resolver)
  with pytest.raises(ParseError):
    parse_biset('iso S3 )', resolver)


def test_parse_biset_chains_realized_subgroups() -> None:
  resolver = NamedBisetResolver()
  U = parse_biset('ind C4<=C8 * ind C2<=C4', resolver)
  assert (U.left.order, U.right.order, U.size) == (8, 2, 8)
  assert len(U.transversal) == 4
  assert resolver.group('C4').parent is U.left
  with pytest.raises(ParseError):
    parse_biset('res C2<=C4 * res C4<=C8', NamedBisetResolver())


from pathlib import Path

import pytest

from repring.library import UnknownGroup, find_subgroup, load_group, named_group


def test_named_groups() -> None:
  assert named_group('S_3') is named_group('S3')
  assert named_group('D_{8}').order == 8
  assert named_group('D6').order == 6
  assert named_group('1').order == 1
  assert named_group('C1').order == 1
  assert named_group('V4').exponent == 2
  assert named_group('A4').order == 12
  Q8 = named_group('Q8')
  assert Q8.order == 8
  assert sorted(Q8.element_orders) == [1, 2, 4, 4, 4, 4, 4, 4]


@pytest.mark.parametrize('name', ['Foo', 'D7', 'S7', 'A6'])
def test_unknown_groups(name: str) -> None:
  with pytest.raises(UnknownGroup):
    named_group(name)


def test_load_group_from_file(tmp_path: Path) -> None:
  path = tmp_path / 'klein.grp'
  path.write_text('degree: 4\n(1 2)(3 4)\n(1 3)(2 4)\n')
  G = load_group(str(path))
  assert G.name == 'klein'
  assert G.order == 4
  assert load_group('C5').order == 5


def test_find_subgroup() -> None:
  S3 = named_group('S3')
  assert find_subgroup(S3, named_group('C3')).order == 3
  assert find_subgroup(S3, named_group('C3'), normal=True).is_normal()
  with pytest.raises(UnknownGroup):
    find_subgroup(S3, named_group('C2'), normal=True)

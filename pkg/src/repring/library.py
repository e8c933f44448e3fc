""" Named groups and the resolution of group names inside biset expressions. """

from __future__ import annotations

import collections
import functools
import re
import typing as t
from pathlib import Path

from repring.groups import Group, Subgroup, group_from_permutations

if t.TYPE_CHECKING:
  from repring.gsets import Biset

NAME_PATTERN = re.compile(r'^([CDSA])_?\{?(\d+)\}?$')


class UnknownGroup(ValueError):
  pass


def _named_generators(name: str) -> tuple[int, list[str]]:
  if name in ('1', 'C1', 'C_1'):
    return 1, []
  if name == 'Q8':
    return 8, ['(1 2 4 7)(3 6 8 5)', '(1 3 4 8)(2 5 7 6)']
  if name == 'V4':
    return 4, ['(1 2)(3 4)', '(1 3)(2 4)']
  match = NAME_PATTERN.match(name)
  if not match:
    raise UnknownGroup(f'unknown group name {name!r}')
  family, n = match.group(1), int(match.group(2))
  cycle = '(' + ' '.join(map(str, range(1, n + 1))) + ')'
  if family == 'C':
    if n < 1:
      raise UnknownGroup(name)
    return n, [cycle] if n > 1 else []
  if family == 'D':
    if n % 2 or n < 2:
      raise UnknownGroup(f'{name}: dihedral groups are named by their order D_{{2n}}')
    k = n // 2
    if k == 1:
      return 2, ['(1 2)']
    if k == 2:
      return 4, ['(1 2)(3 4)', '(1 3)(2 4)']
    reflection = ''.join(f'({i} {k + 1 - i})' for i in range(1, k // 2 + 1))
    rotation = '(' + ' '.join(map(str, range(1, k + 1))) + ')'
    return k, [rotation, reflection]
  if family == 'S':
    if not 1 <= n <= 6:
      raise UnknownGroup(f'{name}: symmetric groups are available for n <= 6')
    return n, ['(1 2)', cycle] if n > 1 else []
  if family == 'A':
    if not 1 <= n <= 5:
      raise UnknownGroup(f'{name}: alternating groups are available for n <= 5')
    return n, [f'(1 2 {k})' for k in range(3, n + 1)]
  raise UnknownGroup(name)


@functools.lru_cache(maxsize=None)
def named_group(name: str) -> Group:
  """ One of `1`, `C_n`, `D_{2n}`, `S_n` (n <= 6), `A_n` (n <= 5), `Q8` or `V4`. The same instance is returned for
  the same name. """

  canonical = name.replace('_', '').replace('{', '').replace('}', '')
  if canonical != name:
    return named_group(canonical)
  degree, generators = _named_generators(name)
  return group_from_permutations(degree, generators, name=name)


def load_group(spec: str) -> Group:
  """ Resolve a group from a name or the path of a group file. """

  from repring.parsing import parse_group_file

  path = Path(spec)
  if path.suffix and path.is_file():
    return parse_group_file(path.read_text(), name=path.stem)
  return named_group(spec)


def order_statistics(G: Group, elements: t.Iterable[int]) -> tuple[tuple[int, int], ...]:
  return tuple(sorted(collections.Counter(G.element_orders[x] for x in elements).items()))


def find_subgroup(G: Group, H: Group, normal: bool = False) -> Subgroup:
  """ The first subgroup of *G* in canonical order that has the order and element order statistics of *H*. This
  is a heuristic match, not an isomorphism test; it is exact for the named groups of small order. """

  wanted = order_statistics(H, range(H.order))
  for S in G.subgroups:
    if S.order == H.order and order_statistics(G, S.elems) == wanted and (not normal or S.is_normal()):
      return S
  raise UnknownGroup(f'{G.name} has no {"normal " if normal else ""}subgroup like {H.name}')


class NamedBisetResolver:
  """ Resolves the atoms of a biset expression against named groups. Subgroups are realized through their parent
  group, so the same name always yields the same group object and compositions line up.

  Once a subgroup has been realized under a name, later atoms that name it as a group get the realized group, so
  `ind C4<=C8 * ind C2<=C4` composes. The lookup follows the order of the atoms: a group named before it is realized
  as a subgroup stays the plain named group, so `res C2<=C4 * res C4<=C8` does not compose. """

  def __init__(self, lookup: t.Callable[[str], Group] = load_group) -> None:
    self._lookup = lookup
    self._realized: dict[str, Group] = {}

  def _group(self, name: str) -> Group:
    realized = self._realized.get(name)
    return self._lookup(name) if realized is None else realized

  def subgroup(self, sub: str, group: str) -> Subgroup:
    G = self._group(group)
    if sub == group:
      return G.whole
    S = find_subgroup(G, self._group(sub))
    self._realized[sub] = G.realize(S, name=sub)
    return S

  def group(self, name: str) -> Group:
    """ A name that may refer to a realized subgroup (`C2<=S3`) or a plain group. """

    if '<=' in name:
      sub, _, group = name.partition('<=')
      return self.subgroup(sub.strip(), group.strip()).as_group()
    return self._group(name)

  def ind(self, sub: str, group: str) -> Biset:
    from repring.gsets import induction_biset
    return induction_biset(self._group(group), self.subgroup(sub, group))

  def res(self, sub: str, group: str) -> Biset:
    from repring.gsets import restriction_biset
    return restriction_biset(self._group(group), self.subgroup(sub, group))

  def inf(self, group: str, normal: str) -> Biset:
    from repring.gsets import inflation_biset
    G = self._group(group)
    return inflation_biset(G, find_subgroup(G, self._lookup(normal), normal=True))

  def iso(self, group: str) -> Biset:
    from repring.gsets import Biset
    return Biset.identity(self._group(group))

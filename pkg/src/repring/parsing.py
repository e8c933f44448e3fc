""" Parsers for the text formats: cycle notation, group files and the biset expression language.

A group file lists the degree followed by one generator per line in cycle notation:

```
# the dihedral group of order 8
degree: 4
(1 2 3 4)
(1 3)
```

A biset expression combines elementary bisets with `*` (composition, binds tighter) and `+` (disjoint union):

```
ind C2<=S3 * res C2<=S3 + iso S3
```
"""

from __future__ import annotations

import typing as t

if t.TYPE_CHECKING:
  from repring.groups import Group
  from repring.gsets import Biset


class ParseError(ValueError):

  def __init__(self, text: str, offset: int, message: str) -> None:
    self.text = text
    self.offset = offset
    self.message = message

  def __str__(self) -> str:
    return f'{self.message} at offset {self.offset}: {self.text!r}'


def parse_cycles(text: str) -> list[tuple[int, ...]]:
  """ Parses cycle notation like `(1 2)(3 4 5)` into a list of 1-based cycles. Entries may be separated by spaces
  or commas; `()` denotes the identity. """

  from nr.util.parsing import Scanner

  scanner = Scanner(text)
  cycles: list[tuple[int, ...]] = []
  while scanner:
    if scanner.match(r'\s+'):
      continue
    offset = scanner.pos.offset
    match = scanner.match(r'\(([\d\s,]*)\)')
    if not match:
      raise ParseError(text, offset, 'expected a cycle')
    points = tuple(int(x) for x in match.group(1).replace(',', ' ').split())
    if len(points) > 1:
      cycles.append(points)
  return cycles


def parse_group_file(text: str, name: str | None = None) -> Group:
  from repring.groups import group_from_permutations

  degree: int | None = None
  generators: list[str] = []
  for lineno, line in enumerate(text.splitlines()):
    line = line.split('#', 1)[0].strip()
    if not line:
      continue
    if degree is None:
      key, _, value = line.partition(':')
      if key.strip() != 'degree' or not value.strip().isdigit():
        raise ParseError(line, 0, f'line {lineno + 1}: expected `degree: <n>`')
      degree = int(value)
      continue
    parse_cycles(line)
    generators.append(line)
  if degree is None:
    raise ParseError(text, 0, 'missing `degree: <n>` line')
  return group_from_permutations(degree, generators, name=name)


class BisetResolver(t.Protocol):
  """ Resolves the atoms of a biset expression to bisets. """

  def ind(self, sub: str, group: str) -> Biset: ...
  def res(self, sub: str, group: str) -> Biset: ...
  def inf(self, group: str, normal: str) -> Biset: ...
  def iso(self, group: str) -> Biset: ...


def parse_biset(text: str, resolver: BisetResolver) -> Biset:
  """ Parses a biset expression. Composition `U * V` is `U ×_H V`; the right group of `U` must be the left group of
  `V`. """

  from nr.util.parsing import Scanner
  from repring.gsets import BisetError, compose, disjoint_union

  scanner = Scanner(text)
  NAME = r'[A-Za-z0-9_{}]+'

  def skip() -> None:
    scanner.match(r'\s*')

  def fail(message: str) -> t.NoReturn:
    raise ParseError(text, scanner.pos.offset, message)

  def atom() -> Biset:
    skip()
    if scanner.match(r'\('):
      result = union()
      skip()
      if not scanner.match(r'\)'):
        fail('expected `)`')
      return result
    match = scanner.match(rf'(ind|res)\s+({NAME})\s*<=\s*({NAME})')
    if match:
      kind, sub, group = match.groups()
      return resolver.ind(sub, group) if kind == 'ind' else resolver.res(sub, group)
    match = scanner.match(rf'inf\s+({NAME})\s*->\s*({NAME})/({NAME})')
    if match:
      group, quotient_of, normal = match.groups()
      if quotient_of != group:
        fail(f'inflation must be of the form `inf G->G/N`, got {match.group(0)!r}')
      return resolver.inf(group, normal)
    match = scanner.match(rf'iso\s+({NAME})')
    if match:
      return resolver.iso(match.group(1))
    fail('expected one of `ind`, `res`, `inf`, `iso` or `(`')

  def product() -> Biset:
    result = atom()
    while True:
      skip()
      if not scanner.match(r'\*'):
        return result
      offset = scanner.pos.offset
      right = atom()
      try:
        result = compose(result, right)
      except BisetError as exc:
        raise ParseError(text, offset, str(exc))

  def union() -> Biset:
    result = product()
    while True:
      skip()
      if not scanner.match(r'\+'):
        return result
      offset = scanner.pos.offset
      right = product()
      try:
        result = disjoint_union(result, right)
      except BisetError as exc:
        raise ParseError(text, offset, str(exc))

  result = union()
  skip()
  if scanner:
    fail('unexpected trailing input')
  return result

""" Jobs and reports of the command line, as pydantic models. Every report embeds the package version and the
index ordering its vectors refer to, so that output of the same job is reproducible byte for byte. """

from __future__ import annotations

import typing as t

from pydantic import BaseModel, ConfigDict, Field, field_validator

from repring import __version__

Format = t.Literal['json', 'tsv', 'text']
RingTag = t.Literal['B', 'T', 'RK', 'RF']


class Job(BaseModel):
  model_config = ConfigDict(frozen=True)

  command: t.Literal['lattice', 'units', 'teninduce', 'algdeg', 'diagram-check']
  groups: list[str] = Field(default_factory=list)
  primes: list[int] = Field(default_factory=list)
  bisets: list[str] = Field(default_factory=list)
  ring: RingTag | None = None
  format: Format = 'json'
  seed: int = 0

  @field_validator('primes')
  @classmethod
  def _check_primes(cls, value: list[int]) -> list[int]:
    from sympy import isprime
    for p in value:
      if not isprime(p):
        raise ValueError(f'{p} is not a prime')
    return value


class Report(BaseModel):
  version: str = __version__
  job: Job

  #: The index family of every ghost vector in the report, in storage order.
  index_order: list[t.Any] = Field(default_factory=list)

  def rows(self) -> list[list[t.Any]]:
    """ The tabular form of the report, header first. """

    raise NotImplementedError

  def render(self, format: Format) -> str:
    if format == 'json':
      return self.model_dump_json(indent=2)
    rows = [[str(x) for x in row] for row in self.rows()]
    if format == 'tsv':
      return '\n'.join('\t'.join(row) for row in rows)
    widths = [max(len(row[i]) for row in rows if i < len(row)) for i in range(max(map(len, rows), default=0))]
    return '\n'.join('  '.join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in rows)


class Entry(BaseModel):
  index: t.Any
  value: list[int]


class Vector(BaseModel):
  tag: RingTag
  group: str
  p: int | None = None
  e: int
  entries: list[Entry]


class LatticeReport(Report):
  tag: RingTag
  group: str
  p: int | None = None
  e: int
  rank: int
  basis: list[Vector] = Field(default_factory=list)
  snf: list[int] | None = None
  marks: list[list[int]] | None = None
  labels: list[str] = Field(default_factory=list)

  def rows(self) -> list[list[t.Any]]:
    if self.marks is not None:
      return [['', *self.labels], *([label, *row] for label, row in zip(self.labels, self.marks))]
    if self.snf is not None:
      return [['invariant_factor'], *([x] for x in self.snf)]
    if self.basis:
      header = ['basis', *(str(i) for i in self.index_order)]
      return [header, *([k, *(_render_value(e.value) for e in v.entries)] for k, v in enumerate(self.basis))]
    return [['rank'], [self.rank]]


class UnitRecord(BaseModel):
  vector: Vector
  order: int
  orthogonal: bool


class UnitsReport(Report):
  tag: RingTag
  group: str
  p: int | None = None
  ghost: bool
  order: int
  exponent: int
  elementary_abelian_2: bool
  units: list[UnitRecord]

  def rows(self) -> list[list[t.Any]]:
    header = ['unit', 'order', 'orthogonal', *(str(i) for i in self.index_order)]
    return [header, *(
      [k, u.order, u.orthogonal, *(_render_value(e.value) for e in u.vector.entries)]
      for k, u in enumerate(self.units))]


class TensorRecord(BaseModel):
  label: str
  source: Vector
  image: Vector
  coordinates: list[int]


class TensorReport(Report):
  tag: RingTag
  biset: str
  p: int | None = None
  results: list[TensorRecord]

  def rows(self) -> list[list[t.Any]]:
    header = ['input', *(str(i) for i in self.index_order)]
    return [header, *([r.label, *(_render_value(e.value) for e in r.image.entries)] for r in self.results)]


class DegreeReport(Report):
  tag: RingTag
  biset: str
  p: int | None = None
  degree: int
  orbits: int
  verdict: str
  lower_degree_refuted: bool
  sampled_degree: int | None
  evaluations: int

  def rows(self) -> list[list[t.Any]]:
    return [
      ['biset', 'degree', '|U/H|', 'verdict', 'lower_degree_refuted', 'sampled_degree'],
      [self.biset, self.degree, self.orbits, self.verdict, self.lower_degree_refuted, self.sampled_degree],
    ]


class CheckRecord(BaseModel):
  name: str
  passed: bool
  evaluated: int
  failures: int
  witness: str | None = None


class DiagramCase(BaseModel):
  biset: str
  source: str
  target: str
  p: int
  passed: bool
  checks: list[CheckRecord]


class DiagramReport(Report):
  passed: bool
  cases: list[DiagramCase]

  def rows(self) -> list[list[t.Any]]:
    header = ['biset', 'p', 'check', 'passed', 'evaluated', 'failures', 'witness']
    return [header, *(
      [case.biset, case.p, c.name, c.passed, c.evaluated, c.failures, c.witness or '']
      for case in self.cases for c in case.checks)]


def _render_value(coeffs: t.Sequence[int]) -> str:
  if not any(coeffs[1:]):
    return str(coeffs[0] if coeffs else 0)
  return '[' + ','.join(map(str, coeffs)) + ']'

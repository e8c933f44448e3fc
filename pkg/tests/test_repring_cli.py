
import json
from pathlib import Path

import pytest

from repring.__main__ import main


@pytest.fixture(autouse=True)
def _isolated(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
  monkeypatch.chdir(tmp_path)
  for key in ('REPRING_CAP', 'REPRING_ENUMERATION_CAP', 'REPRING_JOBS', 'REPRING_SEED'):
    monkeypatch.delenv(key, raising=False)


def _run(capsys: pytest.CaptureFixture[str], *argv: str) -> str:
  main(list(argv))
  return capsys.readouterr().out


def test_lattice_snf(capsys: pytest.CaptureFixture[str]) -> None:
  data = json.loads(_run(capsys, 'lattice', '--ring', 'B', '--group', 'C2', '--emit', 'snf'))
  assert data['snf'] == [1, 2]
  assert data['rank'] == 2
  assert data['job']['command'] == 'lattice'
  assert data['job']['groups'] == ['C2']


def test_lattice_rank_text(capsys: pytest.CaptureFixture[str]) -> None:
  out = _run(capsys, '--format', 'text', 'lattice', '--ring', 'RK', '--group', 'S3', '--emit', 'rank')
  assert out.split() == ['rank', '3']


def test_units(capsys: pytest.CaptureFixture[str]) -> None:
  data = json.loads(_run(capsys, 'units', '--ring', 'RK', '--group', 'S3'))
  assert data['order'] == 4
  assert data['elementary_abelian_2'] is True
  assert all(unit['orthogonal'] for unit in data['units'])


def test_teninduce_tsv(capsys: pytest.CaptureFixture[str]) -> None:
  out = _run(capsys, '--format', 'tsv', 'teninduce', '--ring', 'B', '--biset', 'ind C2<=C4')
  rows = [line.split('\t') for line in out.strip().splitlines()]
  assert rows[0][0] == 'input'
  assert len(rows) == 3


def test_algdeg(capsys: pytest.CaptureFixture[str]) -> None:
  data = json.loads(_run(capsys, 'algdeg', '--ring', 'B', '--biset', 'ind C2<=C4'))
  assert data['degree'] == 2
  assert data['orbits'] == 2
  assert data['verdict'] == 'consistent_with_degree_n'


def test_diagram_check(capsys: pytest.CaptureFixture[str]) -> None:
  data = json.loads(_run(capsys, 'diagram-check', '--biset', 'ind C2<=C4', '--p', '2'))
  assert data['passed'] is True
  assert [case['p'] for case in data['cases']] == [2]


@pytest.mark.parametrize('argv', [
  ['lattice', '--ring', 'B', '--group', 'NoSuchGroup'],
  ['lattice', '--ring', 'T', '--group', 'C2'],
  ['lattice', '--ring', 'T', '--p', '4', '--group', 'C2'],
  ['diagram-check', '--p', '2'],
  ['teninduce', '--ring', 'B', '--biset', 'ind C2<='],
])
def test_usage_errors_exit_2(argv: list[str]) -> None:
  with pytest.raises(SystemExit) as excinfo:
    main(argv)
  assert excinfo.value.code == 2


def test_config_file_cap(tmp_path: Path) -> None:
  config = tmp_path / 'repring.toml'
  config.write_text('[tool.repring]\norder-cap = 4\n')
  group = tmp_path / 'sym3.grp'
  group.write_text('degree: 3\n(1 2 3)\n(1 2)\n')
  with pytest.raises(SystemExit) as excinfo:
    main(['-c', str(config), 'lattice', '--ring', 'B', '--group', str(group)])
  assert excinfo.value.code == 2

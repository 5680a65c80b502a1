import json

import pytest

import meshkit

def _run(capsys, argv):
    code = meshkit.run(argv)
    return code, capsys.readouterr().out.splitlines()

def test_match(capsys):
    code, lines = _run(capsys, ['match', '132|sh{(0,2),(1,2),(2,2)}', '526413'])
    assert code == 0
    assert lines == ['positions 2,4,6  values 2,4,3']

def test_match_json(capsys):
    code, lines = _run(capsys, ['--json', 'match', '132', '526413'])
    assert code == 0
    records = [json.loads(line) for line in lines]
    assert len(records) == 3
    assert records[0] == {'pattern': '132', 'perm': '526413', 'positions': [2, 3, 4], 'values': [2, 6, 4]}

def test_sort(capsys):
    assert _run(capsys, ['sort', '--op', 'bubble', '--passes', '1', '521634']) == (0, ['215346'])
    assert _run(capsys, ['sort', '--passes', '2', '2341']) == (0, ['2134'])

def test_avoids(capsys):
    assert _run(capsys, ['avoids', '231', '321', '2143']) == (0, ['avoids'])
    assert _run(capsys, ['avoids', '231', '2431']) == (0, ['contains'])

def test_enumerate_and_count(capsys):
    code, lines = _run(capsys, ['enumerate', '--length', '3', '--avoiding', '231'])
    assert code == 0
    assert lines == ['123', '132', '213', '312', '321']
    code, lines = _run(capsys, ['count', '--lengths', '1..5', '--basis', 'knuth'])
    assert lines == ['1 1', '2 2', '3 5', '4 14', '5 42']

def test_sortable_count(capsys):
    code, lines = _run(capsys, ['sortable-count', '--op', 'stack', '--passes', '2', '--lengths', '1..6', '--workers', '2'])
    assert code == 0
    assert lines == ['1 1', '2 2', '3 6', '4 22', '5 91', '6 408']

def test_workers_after_subcommand(capsys):
    code, lines = _run(capsys, ['count', '--lengths', '1..5', '--basis', 'knuth', '--workers', '2'])
    assert code == 0
    assert lines == ['1 1', '2 2', '3 5', '4 14', '5 42']
    assert meshkit.parseArgs(['verify', 'knuth', '--workers', '3'])['workers'] == 3
    assert meshkit.parseArgs(['--workers', '3', 'preimage', '231'])['workers'] == 3
    assert meshkit.parseArgs(['preimage', '231'])['workers'] == meshkit.DEFAULT_WORKERS

def test_preimage(capsys):
    code, lines = _run(capsys, ['preimage', '--op', 'stack', '231'])
    assert code == 0
    assert set(line for line in lines if not line.startswith('#')) == {'231|mark{(2,3)}>=1', '321|sh{(1,3)}|mark{(2,3)}>=1'}
    assert set(line for line in lines if line.startswith('#')) == {'# from candidate 231', '# from candidate 321'}

def test_preimage_with_verification(capsys):
    code, lines = _run(capsys, ['preimage', '--op', 'bubble', '--n-max', '5', '21'])
    assert code == 0
    assert lines[0] == '21|mark{(0,2),(1,2)}>=1'
    assert any(line.startswith('preimage-bubble-21: PASS') for line in lines)

def test_expand(capsys):
    assert _run(capsys, ['expand', '21|mark{(1,2)}>=1']) == (0, ['231'])

def test_verify(capsys):
    code, lines = _run(capsys, ['verify', 'knuth', '--n-max', '5'])
    assert code == 0
    assert lines[0].startswith('knuth: PASS')

def test_verify_json(capsys):
    code, lines = _run(capsys, ['--json', 'verify', 'knuth,bubble', '--n-max', '4'])
    assert code == 0
    records = [json.loads(line) for line in lines]
    assert {r['suite'] for r in records} == {'knuth', 'bubble'}
    assert all(r['pass'] for r in records if 'pass' in r)

def test_verify_failure_exit_code(capsys, tmp_path):
    (tmp_path / 'knuth.txt').write_text('321\n')
    code, lines = _run(capsys, ['--fixtures', str(tmp_path), 'verify', 'knuth', '--n-max', '4'])
    assert code == 1
    assert lines[0].startswith('knuth: FAIL')

def test_length_limits(capsys):
    assert meshkit.run(['verify', 'knuth', '--n-max', '11']) == 2
    assert meshkit.run(['enumerate', '--length', '11', '--avoiding', '1']) == 2
    assert meshkit.run(['--allow-large', 'enumerate', '--length', '13', '--avoiding', '1']) == 2

def test_render(capsys):
    code, lines = _run(capsys, ['render', '21|sh{(1,2)}'])
    assert code == 0
    assert len(lines) == 5

def test_symmetries(capsys):
    code, lines = _run(capsys, ['symmetries', '231'])
    assert code == 0
    assert [line.split()[-1] for line in lines] == ['231', '132', '213', '312']

@pytest.mark.parametrize('argv', [
    ['match', '132|sh{(0,9)}', '123'],
    ['match', '132', '1223'],
    ['frobnicate'],
    ['verify', 'nope'],
    ['--workers', '0', 'sort', '12'],
    ['count', '--lengths', '4', '--basis', 'knuth', '--workers', '0'],
    ['sort', '--workers', '2', '12'],
    ['expand', "1'32'"],
])
def test_usage_and_parse_errors_exit_2(capsys, argv):
    assert meshkit.run(argv) == 2

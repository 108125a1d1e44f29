import json

import pytest

import main


def run(capsys, *argv):
    code = main.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def table_value(text, key):
    for line in text.splitlines():
        fields = line.split()
        if fields and fields[0] == key:
            return fields[1]
    raise AssertionError(f"row {key} not in table:\n{text}")


@pytest.fixture
def pd_33_file(tmp_path, capsys):
    path = tmp_path / 'pd_3_3.json'
    code, _, _ = run(capsys, 'gen', 'pd', '3', '3', '--out', str(path))
    assert code == 0
    return str(path)


@pytest.fixture
def diamond_file(write_json):
    return write_json('diamond.json', {"schemaVersion": "1", "dim": 2,
                                       "vertices": [["1", "0"], ["0", "1"], ["-1", "0"], ["0", "-1"]]})


def test_poly_info(capsys, diamond_file):
    code, out, _ = run(capsys, 'poly', 'info', diamond_file)
    assert code == 0
    results = json.loads(out)['results']
    assert results['l'] == 5
    assert results['lStar'] == 1
    assert results['reflexive'] is True


def test_poly_dual_writes_polytope_file(capsys, diamond_file):
    code, out, _ = run(capsys, 'poly', 'dual', diamond_file)
    assert code == 0
    assert json.loads(out)['vertices'] == [["-1", "-1"], ["-1", "1"], ["1", "-1"], ["1", "1"]]


def test_poly_points_table(capsys, diamond_file):
    code, out, _ = run(capsys, '--format', 'table', 'poly', 'points', diamond_file)
    assert code == 0
    assert table_value(out, 'l') == '5'


def test_rational_vertex_is_input_error(capsys, write_json):
    path = write_json('bad.json', '{"schemaVersion": "1", "dim": 1, "vertices": [["0.5"], ["1"]]}')
    code, out, err = run(capsys, 'poly', 'info', path)
    assert code == 1
    assert out == ''
    assert 'vertices' in err


def test_unknown_subcommand_is_input_error(capsys):
    code, _, _ = run(capsys, 'poly', 'volume', 'x.json')
    assert code == 1


def test_bad_thread_setting_is_input_error(capsys, monkeypatch, diamond_file):
    monkeypatch.setenv('NEFMIRROR_THREADS', 'many')
    code, _, _ = run(capsys, 'poly', 'info', diamond_file)
    assert code == 1


def test_hodge_h1q_table(capsys, pd_33_file):
    code, out, _ = run(capsys, 'hodge', 'h1q', pd_33_file, '--format', 'table')
    assert code == 0
    assert table_value(out, 'h^{2,1}') == '73'
    assert table_value(out, 'h^{1,1}') == '1'


def test_hodge_chi_and_e(capsys, pd_33_file):
    code, out, _ = run(capsys, 'hodge', 'chi', pd_33_file)
    assert code == 0
    results = json.loads(out)['results']
    assert results['chiOmega1'] == 72
    assert results['chiMinusZ'] == [-54, -54]

    code, out, _ = run(capsys, 'hodge', 'e', pd_33_file)
    assert json.loads(out)['results']['ePolynomial']['coefficients'] == [1, 0, 0, 1]


def test_hodge_pd_mirror(capsys):
    code, out, _ = run(capsys, 'hodge', 'pd', '3', '3')
    assert code == 0
    results = json.loads(out)['results']
    assert results['wReport']['hOneQ'] == [0, 73, 1, 0]


def test_hodge_pd_bad_degrees(capsys):
    code, _, err = run(capsys, 'hodge', 'pd', '1', '5')
    assert code == 2
    assert 'degrees >= 2' in err


def test_nef_validate_diamond_split_fails(capsys, tmp_path):
    path = tmp_path / 'split.json'
    assert run(capsys, 'gen', 'diamond', '--out', str(path))[0] == 0
    code, _, err = run(capsys, 'nef', 'validate', str(path))
    assert code == 2
    assert 'phi_' in err


def test_nef_dualize_twice_is_identity(capsys, pd_33_file, tmp_path):
    once = tmp_path / 'dual.json'
    twice = tmp_path / 'dual_dual.json'
    assert run(capsys, 'nef', 'dualize', pd_33_file, '--out', str(once))[0] == 0
    assert run(capsys, 'nef', 'dualize', str(once), '--out', str(twice))[0] == 0
    with open(pd_33_file, 'rb') as f, open(twice, 'rb') as g:
        assert f.read() == g.read()


def test_nef_enumerate_diamond_is_empty(capsys, diamond_file):
    code, out, _ = run(capsys, 'nef', 'enumerate', diamond_file, '--parts', '2')
    assert code == 0
    assert json.loads(out)['results']['count'] == 0


def test_nef_decompose_half_lattice(capsys, tmp_path):
    path = tmp_path / 'half.json'
    assert run(capsys, 'gen', 'halflattice', '--out', str(path))[0] == 0
    code, out, _ = run(capsys, 'nef', 'decompose', str(path))
    assert code == 0
    results = json.loads(out)['results']
    assert results['sublatticeIndex'] == 2
    assert results['splitsOverZ'] is False


def test_gen_product(capsys, diamond_file):
    code, out, _ = run(capsys, 'gen', 'product', diamond_file, diamond_file)
    assert code == 0
    assert json.loads(out)['dim'] == 4


def test_results_are_deterministic_across_thread_counts(capsys, monkeypatch, pd_33_file):
    monkeypatch.setenv('NEFMIRROR_THREADS', '1')
    _, first, _ = run(capsys, 'hodge', 'chi', pd_33_file)
    monkeypatch.setenv('NEFMIRROR_THREADS', '3')
    _, second, _ = run(capsys, 'hodge', 'chi', pd_33_file)
    assert first == second


def test_hodge_e_two_points(capsys, tmp_path):
    path = tmp_path / 'pd2.json'
    assert run(capsys, 'gen', 'pd', '2', '--out', str(path))[0] == 0
    code, out, _ = run(capsys, 'hodge', 'e', str(path))
    assert code == 0
    assert json.loads(out)['results']['ePolynomial']['coefficients'] == [2]


def test_point_part_is_domain_error(capsys, write_json):
    path = write_json('point.json', {"schemaVersion": "1", "dim": 2, "parts": [
        [["1", "0"], ["0", "1"], ["-1", "0"], ["0", "-1"]],
        [["0", "0"]],
    ]})
    code, out, err = run(capsys, 'hodge', 'e', path)
    assert code == 2
    assert out == ''
    assert 'EmptyPart' in err

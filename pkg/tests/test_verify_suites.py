import json
from itertools import combinations_with_replacement

import pytest

import main
from classes.generators import REFLEXIVE_POLYGONS, pd_partition_parts, polygon, product_parts
from classes.nef_partition import validate
from runners.verify_suites import SUITES, run_all_suites, run_suite
from scripts.build_corpus import degree_tuples


def statuses(results):
    return {r.name: r.status for r in results}


def test_suites_pass_on_product(product_diamonds):
    results = run_all_suites(product_diamonds)
    assert [r.name for r in results] == [name for name, _ in SUITES]
    found = statuses(results)
    assert 'FAIL' not in found.values()
    assert found['pd-vanishing'] == 'SKIP'


def test_suites_pass_on_half_lattice(half_lattice):
    assert 'FAIL' not in statuses(run_all_suites(half_lattice)).values()


def test_suites_pass_on_pd_partition():
    np = validate(pd_partition_parts([2, 2, 3])).canonical()
    found = statuses(run_all_suites(np, n_jobs=2))
    assert set(found.values()) == {'PASS'}


def test_failing_suite_is_reported(pd_33):
    def broken(np):
        from classes.exceptions import InvariantViolation
        raise InvariantViolation("forced")

    result = run_suite('broken', broken, pd_33)
    assert result.status == 'FAIL'
    assert result.details == ['forced']


def test_verify_all_cli(capsys, tmp_path):
    path = tmp_path / 'pd.json'
    assert main.main(['gen', 'pd', '3', '3', '--out', str(path)]) == 0
    capsys.readouterr()
    code = main.main(['verify', 'all', str(path)])
    out = capsys.readouterr().out
    assert code == 0
    report = json.loads(out)
    assert report['results']['passed'] is True
    assert {s['status'] for s in report['results']['suites']} == {'PASS'}


@pytest.mark.parametrize("degrees", degree_tuples(7), ids=lambda t: '_'.join(map(str, t)))
def test_suites_pass_on_every_pd_partition(degrees):
    found = statuses(run_all_suites(validate(pd_partition_parts(degrees)).canonical()))
    assert 'FAIL' not in found.values(), found


@pytest.mark.parametrize("names", list(combinations_with_replacement(sorted(REFLEXIVE_POLYGONS), 2)),
                         ids=lambda t: '_'.join(t))
def test_suites_pass_on_every_polygon_product(names):
    np = validate(product_parts([polygon(name) for name in names])).canonical()
    assert 'FAIL' not in statuses(run_all_suites(np)).values()


def test_verify_all_two_points(capsys, tmp_path):
    path = tmp_path / 'pd2.json'
    assert main.main(['gen', 'pd', '2', '--out', str(path)]) == 0
    capsys.readouterr()
    assert main.main(['verify', 'all', str(path)]) == 0
    assert json.loads(capsys.readouterr().out)['results']['passed'] is True

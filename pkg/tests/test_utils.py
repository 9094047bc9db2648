from fractions import Fraction
import json

import mpmath
import pytest

from twistrecip.schemas.run import RunConfig
from twistrecip.utils.batch import AsyncoCaseManager, run_case
from twistrecip.utils.exceptions import UnsupportedWeightError, ValidationError
from twistrecip.utils.json import JSON, lossless_digits
from twistrecip.utils.strings import KEBAB_CASE, PASCAL_CASE, SNAKE_CASE, casing, command_name
from twistrecip.utils.validators import validate_digits, validate_integer, validate_prime, validate_weight


@pytest.mark.parametrize('value, expected', [('12', 12), (' -7 ', -7), (0, 0)])
def test_validate_integer(value, expected):
    assert validate_integer(value) == expected


@pytest.mark.parametrize('value', ['1.5', 'x', True, '01'])
def test_validate_integer_rejects(value):
    with pytest.raises(ValidationError):
        validate_integer(value)


def test_validate_prime():
    assert validate_prime(13) == 13
    for value in (2, 9, 1, -3):
        with pytest.raises(ValidationError):
            validate_prime(value)


def test_validate_weight_and_digits():
    assert validate_weight(26) == 26
    with pytest.raises(UnsupportedWeightError):
        validate_weight(24)
    assert validate_digits(10) == 10
    with pytest.raises(ValidationError):
        validate_digits(9)


def test_casing():
    assert casing('VerifyTheorem1', PASCAL_CASE, KEBAB_CASE) == 'verify-theorem1'
    assert casing('eval_ltwist', SNAKE_CASE, PASCAL_CASE) == 'EvalLtwist'
    assert command_name('TauTableCommand') == 'tau-table'


def test_encoder():
    with mpmath.workdps(30):
        data = json.loads(JSON.dumps({'x': mpmath.mpf(1) / 3, 'z': mpmath.mpc(1, -2), 'f': Fraction(1, 3)}))
    assert data['f'] == '1/3'
    assert data['z'] == {'re': '1.0', 'im': '-2.0'}
    assert mpmath.mpf(data['x']) != 0
    assert len(data['x']) >= lossless_digits(mpmath.mp.prec)


def test_run_case_resolves_targets():
    assert run_case('math:gcd', {}) == 0


def test_case_manager_keeps_order_and_errors():
    manager = AsyncoCaseManager(workers=1)
    manager.add_to_cases('twistrecip.utils.validators:validate_prime', {'value': 7})
    manager.add_to_cases('twistrecip.utils.validators:validate_prime', {'value': 9})
    manager.add_to_cases('twistrecip.utils.validators:validate_weight', {'value': 12})
    results = manager.start().export()
    assert [item.idx for item in results.items] == [0, 1, 2]
    assert results.items[0].data == 7
    assert results.items[1].error_code == 'INVALID'
    assert results.items[2].data == 12
    assert results.elapsed_time >= 0


def test_run_config_defaults():
    config = RunConfig(subcommand='verify-theorem1')
    assert config.weights == [12]
    assert config.primes == [3, 5, 7, 11, 13]
    assert config.format == 'text'


@pytest.mark.parametrize('kwargs', [{'weights': []}, {'primes': [4]}, {'tol': 2.0}, {'digits': 5}])
def test_run_config_rejects(kwargs):
    with pytest.raises(ValidationError):
        RunConfig(subcommand='verify-theorem1', **kwargs)


def test_run_config_from_file(tmp_path):
    path = tmp_path / 'run.json'
    path.write_text(json.dumps({'subcommand': 'verify-corollary', 'digits': 40, 'weights': [16]}))
    config = RunConfig.from_file(str(path), digits=None, workers=2)
    assert config.digits == 40
    assert config.workers == 2
    assert config.weights == [16]
    assert RunConfig.from_file(str(path), digits=50).digits == 50


def test_run_config_bad_file(tmp_path):
    path = tmp_path / 'run.json'
    path.write_text('[1, 2]')
    with pytest.raises(ValidationError):
        RunConfig.from_file(str(path))

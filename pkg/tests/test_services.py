import mpmath
import pytest

from twistrecip.config import SETTINGS
from twistrecip.schemas.reports import CheckResult
from twistrecip.services import (
    AdditiveReciprocityVerification,
    BaseVerification,
    CorollaryVerification,
    FunctionalEquationVerification,
    OrthogonalityVerification,
    Theorem1Verification,
    TransformVerification,
    cached_result_count,
)
from twistrecip.utils.exceptions import ValidationError


def test_orthogonality():
    checks = OrthogonalityVerification([5, 7], 30).execute()
    assert len(checks) == 2 * (4 + 6)
    assert all(c.passed for c in checks)


def test_additive_reciprocity_is_exact():
    checks = AdditiveReciprocityVerification(50, 0).execute()
    assert len(checks) == 50
    assert all(c.residual == 0 for c in checks)


def test_functional_equation_draws_are_seeded():
    first = FunctionalEquationVerification([12], 3, 7, 30, max_modulus=13)
    second = FunctionalEquationVerification([12], 3, 7, 30, max_modulus=13)
    assert [str(p) for _, p, _ in first.draw()] == [str(p) for _, p, _ in second.draw()]
    checks = first.execute()
    assert [c.name.split()[0] for c in checks] == ['fe', 'split', 'direct'] * 3
    assert all(c.passed for c in checks)


def test_failed_case_becomes_a_failed_check():
    checks = Theorem1Verification([12], [(3, 7, 7)], 30, cache=False).execute()
    assert len(checks) == 1
    assert checks[0].residual == mpmath.inf
    assert not checks[0].passed
    assert checks[0].detail['error_code'] == 'INVALID'


def test_report_services_are_cached():
    service = CorollaryVerification([12], [(3, 5)], 30)
    first = service.execute()
    assert CorollaryVerification([12], [(3, 5)], 30).execute() is first
    assert service.execute(reset_cache=True) is not first
    assert first[0].passed


def test_grid_uses_ordered_tuples():
    service = Theorem1Verification.from_grid([12], [3, 5, 7], 30)
    assert len(service.triples) == 6
    assert service.name == 'theorem'


def test_unknown_transform():
    with pytest.raises(ValidationError):
        TransformVerification('K', 1e-8).execute()


def test_residue_transform_rows():
    checks = TransformVerification('residue', 1e-8).execute()
    assert len(checks) == 3
    assert all(c.passed for c in checks)


def test_orthogonality_for_chosen_residues():
    checks = OrthogonalityVerification([7, 11], 30, residues=[2, 3]).execute()
    assert [c.name for c in checks[:2]] == ['gauss q=7 m=2', 'characters q=7 m=2']
    assert len(checks) == 2 * 2 * 2
    assert all(c.passed for c in checks)


class _Echo(BaseVerification):
    class Config:
        name = 'echo'
        cache = True
        cache_key = 'value'

    def __init__(self, value, **kwargs):
        super().__init__(**kwargs)
        self.value = value

    def service_output_handler(self) -> list[CheckResult]:
        return [CheckResult(name=f'echo {self.value}', residual=0, contract=0)]


def test_result_cache_is_bounded(monkeypatch):
    monkeypatch.setattr(SETTINGS, 'RESULT_CACHE_SIZE', 2)
    oldest = _Echo(0).execute()
    assert _Echo(0).execute() is oldest
    _Echo(1).execute()
    _Echo(2).execute()
    assert cached_result_count() == 2
    assert _Echo(0).execute() is not oldest


def test_full_mellin_range_is_covered():
    cases = TransformVerification.MELLIN_CASES
    assert min(x for x, _ in cases) < 1 and max(x for x, _ in cases) == 5
    assert {n for _, n in cases} >= {2, 8}


@pytest.mark.slow
def test_mellin_transform_rows():
    checks = TransformVerification('mellin', 1e-8).execute()
    assert len(checks) == len(TransformVerification.MELLIN_CASES)
    assert all(c.passed for c in checks)

import pytest
from hypothesis import HealthCheck, settings

from twistrecip.hecke import get_form

settings.register_profile(
    'twistrecip',
    derandomize=True,
    deadline=None,
    max_examples=25,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile('twistrecip')


@pytest.fixture(scope='session')
def delta():
    return get_form(12)


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    from twistrecip.config import SETTINGS

    monkeypatch.setattr(SETTINGS, 'CACHE_DIR', str(tmp_path))
    return tmp_path

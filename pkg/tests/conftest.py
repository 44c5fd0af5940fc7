import os

import pytest
from hypothesis import HealthCheck, settings

from vsheet.util.common import Singleton


# isolated_settings is autouse and function scoped
settings.register_profile('vsheet', suppress_health_check=[HealthCheck.function_scoped_fixture])
settings.load_profile('vsheet')


@pytest.fixture(autouse=True)
def isolated_settings(tmp_path, monkeypatch):
    """Every test gets an empty app dir, no VSHEET_* variables and a fresh Settings instance."""
    home = tmp_path / 'home'
    home.mkdir()
    monkeypatch.setenv('HOME', str(home))
    for name in list(os.environ):
        if name.startswith('VSHEET_'):
            monkeypatch.delenv(name)
    Singleton._instances.clear()
    yield home
    Singleton._instances.clear()
